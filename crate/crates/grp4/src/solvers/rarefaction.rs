//! Rarefaction-side resolution of the nonlinear GRP: instantaneous entropy
//! and Riemann-invariant time derivatives inside the fan and the resulting
//! linear-equation coefficients on the rarefaction side.
//!
//! The fan coordinate `beta` labels each characteristic of the centered
//! wave by its limiting slope u - c at the origin; `theta` is the sound
//! speed ratio c(0, beta) / c_l. The coefficients follow from expanding
//! the characteristic equations to first order in time inside the fan:
//! the entropy mode decays with theta-power laws, the invariant obeys a
//! first-order ODE across the fan, and the duct source adds particular
//! solutions that become logarithmically resonant at the gas indices 3
//! and 5/3.

use super::SlopedState;
use crate::gas::{entropy_slope_quantity, riemann_invariant_slope, DuctGeometry, GasConstants};

/// Tolerance for selecting the resonant gas-index branches of the area
/// coupling term.
const GAMMA_BRANCH_TOL: f64 = 1e-12;

/// Coefficients of the rarefaction-side row and the fan derivatives.
#[derive(Debug, Clone, Copy)]
pub struct RarefactionCoeffs {
    /// row: a * u_t + b * p_t = d
    pub a: f64,
    pub b: f64,
    pub d: f64,
    /// sound speed ratio across the fan
    pub theta: f64,
    /// entropy time derivative T dS/dt at (0, beta)
    pub ts_dt: f64,
    /// full Riemann-invariant time derivative at (0, beta)
    pub psi_dt: f64,
    /// slope-driven part of psi_dt
    pub psi_dt_slopes: f64,
    /// area-driven part of psi_dt
    pub psi_dt_area: f64,
}

/// Area-driven part of d(psi)/dt at fan coordinate (beta, theta) for a
/// left rarefaction: the particular solution of the fan ODE with the duct
/// source -(A'/A) c u, with logarithmic branches at gamma = 3 and 5/3.
pub fn area_psi_dt(
    beta: f64,
    theta: f64,
    u_l: f64,
    c_l: f64,
    g: GasConstants,
    ga_ratio: f64,
) -> f64 {
    if ga_ratio == 0.0 {
        return 0.0;
    }
    let ga = g.gamma;
    let mu2 = g.mu2;
    let psi_l = u_l + 2.0 * c_l / (ga - 1.0);
    let a = -ga_ratio * c_l * psi_l;
    let b = 2.0 * ga_ratio * c_l * c_l / (ga - 1.0);
    let kap = 1.0 / (2.0 * mu2);
    let pw = theta.powf(kap - 1.0);

    let hom = |c: f64| c / (2.0 * c_l) * (beta + 2.0 * c_l * theta) * pw;
    let lin = |k: f64| k * (theta + mu2 * beta / c_l);
    let quad = |k: f64| k * theta * (theta + 2.0 * mu2 * beta / c_l);
    let loglin =
        |d: f64| d * ((theta + mu2 * beta / c_l) * theta.ln() + mu2 * beta / c_l);
    let logquad =
        |e: f64| e * theta * ((theta + 2.0 * mu2 * beta / c_l) * theta.ln() + mu2 * beta / c_l);

    if (ga - 3.0).abs() < GAMMA_BRANCH_TOL {
        let d = -a;
        let k2 = b / (1.0 - 4.0 * mu2);
        let c = -ga_ratio * c_l * u_l - k2;
        hom(c) + loglin(d) + quad(k2)
    } else if (ga - 5.0 / 3.0).abs() < GAMMA_BRANCH_TOL {
        let k1 = a / (1.0 - 2.0 * mu2);
        let e = -2.0 * b;
        let c = -ga_ratio * c_l * u_l - k1;
        hom(c) + lin(k1) + logquad(e)
    } else {
        let k1 = a / (1.0 - 2.0 * mu2);
        let k2 = b / (1.0 - 4.0 * mu2);
        let c = -ga_ratio * c_l * u_l - k1 - k2;
        hom(c) + lin(k1) + quad(k2)
    }
}

/// All rarefaction-side quantities at fan coordinate `beta`, for a left
/// rarefaction. `rho_fan`, `c_fan` are the state on that characteristic
/// (for the trailing edge these are the values adjacent to the contact).
pub fn rarefaction_coeffs(
    left: &SlopedState,
    beta: f64,
    rho_fan: f64,
    c_fan: f64,
    geom: DuctGeometry,
    g: GasConstants,
) -> RarefactionCoeffs {
    let ga = g.gamma;
    let c_l = left.w.sound_speed(g);
    let theta = c_fan / c_l;
    let ts = entropy_slope_quantity(left.w, left.dw, g);
    let psi_slope = riemann_invariant_slope(left.w, left.dw, g);
    let ga_ratio = geom.log_derivative();

    let pow_a = theta.powf((3.0 - ga) / (2.0 * (ga - 1.0)));
    let pow_b = theta.powf((ga + 1.0) / (ga - 1.0));
    let lead = (beta + 2.0 * theta * c_l) / c_l;

    // T dS/dt(0, beta) = -(beta + c_l theta) theta^{2 gamma/(gamma-1)} T_l S_l'
    let ts_dt = -(beta + c_l * theta) * theta.powf(2.0 * ga / (ga - 1.0)) * ts;

    // slope-driven d: homogeneous fan mode plus the particular entropy
    // mode; the entropy contributions carry the weights
    // 2 gamma/(3 gamma - 1) and (gamma - 1)/(3 gamma - 1)
    let d_slopes = lead
        * (pow_a * (2.0 * ga / (3.0 * ga - 1.0) * ts - c_l * psi_slope)
            + pow_b * ((ga - 1.0) / (3.0 * ga - 1.0)) * ts);
    let d_area = area_psi_dt(beta, theta, left.w.u, c_l, g, ga_ratio);
    let d = d_slopes + d_area;

    // psi_t = d + T S_t / c on the fan characteristic
    let psi_dt = d + ts_dt / c_fan;

    RarefactionCoeffs {
        a: 1.0,
        b: 1.0 / (rho_fan * c_fan),
        d,
        theta,
        ts_dt,
        psi_dt,
        psi_dt_slopes: d_slopes + ts_dt / c_fan,
        psi_dt_area: d_area,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gas::{GasConstants, Primitive, Slope};

    const G: GasConstants = GasConstants {
        gamma: 1.4,
        mu2: 0.4 / 2.4,
    };

    fn left_state(dw: Slope) -> SlopedState {
        SlopedState::new(Primitive::new(1.0, 0.2, 1.0), dw)
    }

    #[test]
    fn zero_strength_zero_slopes_is_trivial() {
        let l = left_state(Slope::default());
        let c = l.w.sound_speed(G);
        let co = rarefaction_coeffs(&l, l.w.u - c, l.w.rho, c, DuctGeometry::PLANAR, G);
        assert!(co.d.abs() < 1e-15);
        assert!(co.ts_dt.abs() < 1e-15);
        assert_eq!(co.a, 1.0);
    }

    #[test]
    fn isentropic_slopes_reduce_to_invariant_transport() {
        // T_l S_l' = 0:
        // d = -(beta + 2 c_l theta) theta^{(3-gamma)/(2(gamma-1))} psi_l'
        let w = Primitive::new(1.0, 0.2, 1.0);
        let c2 = G.gamma;
        let dw = Slope {
            rho: 0.5,
            u: -0.3,
            p: c2 * 0.5,
        };
        let l = SlopedState::new(w, dw);
        let theta = 0.9f64;
        let c_fan = theta * w.sound_speed(G);
        let rho_fan = w.rho * theta.powf(2.0 / (G.gamma - 1.0));
        let beta = -0.15;
        let co = rarefaction_coeffs(&l, beta, rho_fan, c_fan, DuctGeometry::PLANAR, G);
        let psip = riemann_invariant_slope(w, dw, G);
        let c_l = w.sound_speed(G);
        let expect = -(beta + 2.0 * c_l * theta)
            * theta.powf((3.0 - G.gamma) / (2.0 * (G.gamma - 1.0)))
            * psip;
        assert!((co.d - expect).abs() < 1e-13, "{} vs {expect}", co.d);
        assert!(co.ts_dt.abs() < 1e-14);
    }

    #[test]
    fn entropy_advection_at_left_edge() {
        // at the fan's left edge (theta = 1, beta = u_l - c_l):
        // T S_t = -u_l T_l S_l'
        let dw = Slope {
            rho: 0.3,
            u: 0.0,
            p: 0.9,
        };
        let l = left_state(dw);
        let c = l.w.sound_speed(G);
        let co = rarefaction_coeffs(&l, l.w.u - c, l.w.rho, c, DuctGeometry::PLANAR, G);
        let ts = entropy_slope_quantity(l.w, l.dw, G);
        assert!((co.ts_dt + l.w.u * ts).abs() < 1e-14);
    }

    #[test]
    fn smooth_matching_at_left_edge() {
        // at theta = 1, beta = u_l - c_l the row reproduces the exact
        // one-sided smooth value of u_t + p_t / (rho c), with and without
        // area variation
        let dw = Slope {
            rho: 0.4,
            u: -0.2,
            p: 0.3,
        };
        let l = left_state(dw);
        let c = l.w.sound_speed(G);
        for geom in [
            DuctGeometry::PLANAR,
            DuctGeometry {
                area: 1.5,
                darea: 0.7,
            },
        ] {
            let co = rarefaction_coeffs(&l, l.w.u - c, l.w.rho, c, geom, G);
            let sm = super::super::acoustic::upwind_one_sided(l.w, l.dw, geom, G);
            let expect = sm.u + sm.p / (l.w.rho * c);
            assert!(
                (co.d - expect).abs() < 1e-13,
                "row rhs {} vs smooth {} (darea {})",
                co.d,
                expect,
                geom.darea
            );
        }
    }

    #[test]
    fn area_coupling_gamma_branch_continuity() {
        // the logarithmic branches at gamma = 3 and 5/3 continue the
        // generic closed form
        let (beta, theta, u_l, c_l, ga_r) = (-0.4, 0.8, 0.4, 1.3, 0.8);
        let eps = 1e-7;
        for special in [3.0, 5.0 / 3.0] {
            let g0 = GasConstants::new(special).unwrap();
            let gp = GasConstants::new(special + eps).unwrap();
            let exact = area_psi_dt(beta, theta, u_l, c_l, g0, ga_r);
            let near = area_psi_dt(beta, theta, u_l, c_l, gp, ga_r);
            assert!(
                (exact - near).abs() < 1e-5,
                "gamma {special}: {exact} vs {near}"
            );
        }
    }

    #[test]
    fn area_coupling_matches_quadrature() {
        // integrate the fan ODE
        //   -2 mu^2 theta y' + y = -(A'/A) c0 u0,  y(1) = -(A'/A) c_l u_l
        // numerically and compare psi_t = y - xi y' at a fan point
        for gamma in [1.4, 5.0 / 3.0, 3.0, 2.1] {
            let g = GasConstants::new(gamma).unwrap();
            let mu2 = g.mu2;
            let (u_l, c_l, ga_r) = (0.4, 1.3, 0.8);
            let psi_l = u_l + 2.0 * c_l / (gamma - 1.0);
            let u0 = |th: f64| psi_l - 2.0 / (gamma - 1.0) * c_l * th;
            let src = |th: f64| -ga_r * c_l * th * u0(th);
            let theta_end = 0.75f64;
            let n = 200_000;
            let dth = (1.0 - theta_end) / n as f64;
            let mut y = -ga_r * c_l * u_l;
            let mut th = 1.0;
            for _ in 0..n {
                // dy/dtheta = (y - src) / (2 mu2 theta); RK4 in theta
                let f = |th: f64, y: f64| (y - src(th)) / (2.0 * mu2 * th);
                let k1 = f(th, y);
                let k2 = f(th - 0.5 * dth, y - 0.5 * dth * k1);
                let k3 = f(th - 0.5 * dth, y - 0.5 * dth * k2);
                let k4 = f(th - dth, y - dth * k3);
                y -= dth / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                th -= dth;
            }
            let beta = (u_l - c_l) + (1.0 - theta_end) * c_l / mu2;
            let dydth = (y - src(theta_end)) / (2.0 * mu2 * theta_end);
            let psi_t = y + beta * mu2 / c_l * dydth;
            let closed = area_psi_dt(beta, theta_end, u_l, c_l, g, ga_r);
            assert!(
                (psi_t - closed).abs() < 1e-8,
                "gamma {gamma}: ode {psi_t} vs closed {closed}"
            );
        }
    }
}
