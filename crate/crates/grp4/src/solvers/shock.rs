//! Shock-side resolution of the nonlinear GRP: differentiating the
//! Rankine-Hugoniot relations along the shock trajectory yields a linear
//! relation between u_t and p_t on the shock side plus an equation for the
//! density rate. Stated for a right-moving shock; the left-shock case is
//! obtained by mirroring.
//!
//! The row is assembled constructively: the ahead-side rates follow the
//! smooth one-sided duct equations, the behind-side spatial derivatives
//! are eliminated through the same equations, and the jump-condition
//! derivatives tie the two sides together along the shock.

use super::acoustic::upwind_one_sided;
use super::SlopedState;
use crate::error::{Result, SolverError};
use crate::gas::{DuctGeometry, GasConstants, RiemannSolution};

/// Coefficients of the shock-side row `a u_t + b p_t = d` and of the
/// density-rate relation `e_rho rho_t + e_u u_t + e_p p_t = e_rhs`, both
/// in behind-side partial derivatives at the t-axis. The classical
/// derivative blocks of the jump conditions are exposed alongside.
#[derive(Debug, Clone, Copy)]
pub struct ShockCoeffs {
    pub a: f64,
    pub b: f64,
    pub d: f64,
    /// instantaneous shock speed
    pub sigma0: f64,
    /// derivatives of the velocity-jump function Phi w.r.t. (p, pbar, rhobar)
    pub phi1: f64,
    pub phi2: f64,
    pub phi3: f64,
    /// derivatives of the density function Psi w.r.t. (p, pbar, rhobar)
    pub h1: f64,
    pub h2: f64,
    pub h3: f64,
    /// slope weights of the row right-hand side
    pub l_p: f64,
    pub l_u: f64,
    pub l_rho: f64,
    /// area-coupling part of the row right-hand side, scaled by A'/A
    pub j_r: f64,
    /// density-rate relation (partial-derivative form)
    pub e_rho: f64,
    pub e_u: f64,
    pub e_p: f64,
    pub e_rhs: f64,
}

/// Shock-side coefficients for a right-moving shock with downstream state
/// `(rho0r, u0, p0)` from the associated Riemann solution.
pub fn shock_coeffs(
    right: &SlopedState,
    sol: &RiemannSolution,
    geom: DuctGeometry,
    g: GasConstants,
) -> Result<ShockCoeffs> {
    let wr = right.w;
    let dwr = right.dw;
    let mu2 = g.mu2;
    let (p0, u0, r0) = (sol.p0, sol.u0, sol.rho0_right);
    if p0 <= wr.p || (r0 - wr.rho).abs() < 1e-14 * wr.rho {
        // zero-strength or rarefaction side: the caller must use the
        // acoustic / fan path
        return Err(SolverError::DegenerateSystem { det: p0 - wr.p });
    }
    let cr = wr.sound_speed(g);
    let c0 = (g.gamma * p0 / r0).sqrt();
    let ga = geom.log_derivative();

    let sigma0 = (r0 * u0 - wr.rho * wr.u) / (r0 - wr.rho);
    let root = ((1.0 - mu2) / (wr.rho * (p0 + mu2 * wr.p))).sqrt();
    let phi1 = 0.5 * root * (p0 + (1.0 + 2.0 * mu2) * wr.p) / (p0 + mu2 * wr.p);
    let phi2 = -0.5 * root * ((2.0 + mu2) * p0 + mu2 * wr.p) / (p0 + mu2 * wr.p);
    let phi3 = -(p0 - wr.p) / (2.0 * wr.rho) * root;
    let h1 = wr.rho * (1.0 - mu2 * mu2) * wr.p / (wr.p + mu2 * p0).powi(2);
    let h2 = wr.rho * (mu2 * mu2 - 1.0) * p0 / (wr.p + mu2 * p0).powi(2);
    let h3 = (p0 + mu2 * wr.p) / (wr.p + mu2 * p0);

    // ahead-side rates along the shock
    let ahead = upwind_one_sided(wr, dwr, geom, g);
    let du_a = ahead.u + sigma0 * dwr.u;
    let dp_a = ahead.p + sigma0 * dwr.p;
    let dr_a = ahead.rho + sigma0 * dwr.rho;

    // behind-side spatial derivatives from the smooth duct equations
    let den = u0 * u0 - c0 * c0;
    let ux_of = |ut: f64, pt: f64| (-u0 * ut + pt / r0 + ga * c0 * c0 * u0) / den;
    let px_of = |ut: f64, pt: f64| r0 * (-ut - u0 * ux_of(ut, pt));

    // u-jump condition along the shock:
    // (u_t + sig u_x) - phi1 (p_t + sig p_x) = Du_a + phi2 Dp_a + phi3 Dr_a
    let lhs = |ut: f64, pt: f64| {
        (ut + sigma0 * ux_of(ut, pt)) - phi1 * (pt + sigma0 * px_of(ut, pt))
    };
    let l00 = lhs(0.0, 0.0);
    let a = lhs(1.0, 0.0) - l00;
    let b = lhs(0.0, 1.0) - l00;
    let d = du_a + phi2 * dp_a + phi3 * dr_a - l00;

    // density-jump condition, scaled by u0 so the behind-side continuity
    // equation can eliminate rho_x without dividing by u0:
    //   u0 (rho_t + sig rho_x) = (u0 - sig) rho_t - sig (r0 u_x + ga r0 u0)
    let erho_lhs = |rt: f64, ut: f64, pt: f64| {
        (u0 - sigma0) * rt - sigma0 * (r0 * ux_of(ut, pt) + ga * r0 * u0)
            - u0 * h1 * (pt + sigma0 * px_of(ut, pt))
    };
    let e00 = erho_lhs(0.0, 0.0, 0.0);
    let e_rho = erho_lhs(1.0, 0.0, 0.0) - e00;
    let e_u = erho_lhs(0.0, 1.0, 0.0) - e00;
    let e_p = erho_lhs(0.0, 0.0, 1.0) - e00;
    let e_rhs = u0 * (h2 * dp_a + h3 * dr_a) - e00;

    // classical slope weights of the row right-hand side (planar form)
    let l_p = -1.0 / wr.rho + (sigma0 - wr.u) * phi2;
    let l_u = sigma0 - wr.u - wr.rho * cr * cr * phi2 - wr.rho * phi3;
    let l_rho = (sigma0 - wr.u) * phi3;
    let j_r = if ga != 0.0 {
        (d - (l_p * dwr.p + l_u * dwr.u + l_rho * dwr.rho)) / ga
    } else {
        0.0
    };

    Ok(ShockCoeffs {
        a,
        b,
        d,
        sigma0,
        phi1,
        phi2,
        phi3,
        h1,
        h2,
        h3,
        l_p,
        l_u,
        l_rho,
        j_r,
        e_rho,
        e_u,
        e_p,
        e_rhs,
    })
}
