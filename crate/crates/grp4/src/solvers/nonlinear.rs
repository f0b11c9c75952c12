//! Nonlinear GRP solver for the duct Euler equations.
//!
//! The typical configuration has a rarefaction and a shock separated by a
//! contact. Each wave contributes one linear relation between u_t and p_t
//! valid on its side of the contact; the relation coming from the far side
//! is transported across the contact using continuity of u and p along its
//! trajectory, and the 2x2 system is solved at the t-axis. The density
//! rate is then recovered from the thermodynamics of the t-axis side.

use super::acoustic::{acoustic_pair_euler, upwind_one_sided};
use super::rarefaction::{rarefaction_coeffs, RarefactionCoeffs};
use super::shock::{shock_coeffs, ShockCoeffs};
use super::{relative_jump, InterfacePair, SlopedState, ACOUSTIC_THRESHOLD};
use crate::error::{Result, SolverError};
use crate::gas::{
    entropy_slope_quantity, exact_riemann, sample_riemann, DuctGeometry, GasConstants, Primitive,
    RiemannSolution, Slope, Wave,
};

/// A linear relation `a u_t + b p_t = d` between the interface partial
/// time derivatives, together with the side of the contact it holds on.
#[derive(Debug, Clone, Copy)]
struct Row {
    a: f64,
    b: f64,
    d: f64,
}

/// (Du/Dt, Dp/Dt) along the t-axis expressed through the one-sided partial
/// derivatives, using the smooth equations on that side of the contact.
fn material_from_partial(ut: f64, pt: f64, rho: f64, c: f64, u0: f64, ga: f64) -> (f64, f64) {
    let den = u0 * u0 - c * c;
    let du = (-c * c * ut + u0 * pt / rho + ga * c * c * u0 * u0) / den;
    let dp = c * c * (-pt + rho * u0 * ut - ga * rho * u0 * u0 * u0) / den;
    (du, dp)
}

fn partial_from_material(du: f64, dp: f64, rho: f64, c: f64, u0: f64, ga: f64) -> (f64, f64) {
    let den = u0 * u0 - c * c;
    // -c^2 ut + (u0/rho) pt = du*den - ga c^2 u0^2
    // rho u0 ut - pt        = dp*den/c^2 + ga rho u0^3
    let r1 = du * den - ga * c * c * u0 * u0;
    let r2 = dp * den / (c * c) + ga * rho * u0 * u0 * u0;
    let (a1, b1) = (-c * c, u0 / rho);
    let (a2, b2) = (rho * u0, -1.0);
    let det = a1 * b2 - a2 * b1;
    ((r1 * b2 - r2 * b1) / det, (a1 * r2 - a2 * r1) / det)
}

/// Rewrite a row stated in far-side partial derivatives as a row in the
/// near-side (t-axis) partial derivatives. Continuity of u and p across
/// the contact makes the material derivatives along it agree.
fn transport_row_across_contact(
    row: Row,
    rho_far: f64,
    c_far: f64,
    rho_near: f64,
    c_near: f64,
    u0: f64,
    ga: f64,
) -> Row {
    let far = |ut: f64, pt: f64| {
        let (du, dp) = material_from_partial(ut, pt, rho_near, c_near, u0, ga);
        partial_from_material(du, dp, rho_far, c_far, u0, ga)
    };
    let (f00u, f00p) = far(0.0, 0.0);
    let (f10u, f10p) = far(1.0, 0.0);
    let (f01u, f01p) = far(0.0, 1.0);
    Row {
        a: row.a * (f10u - f00u) + row.b * (f10p - f00p),
        b: row.a * (f01u - f00u) + row.b * (f01p - f00p),
        d: row.d - (row.a * f00u + row.b * f00p),
    }
}

struct SideRow {
    row: Row,
    raref: Option<RarefactionCoeffs>,
    shock: Option<ShockCoeffs>,
}

/// Row contributed by the left wave, in left-of-contact partials.
fn left_row(
    left: &SlopedState,
    sol: &RiemannSolution,
    geom: DuctGeometry,
    g: GasConstants,
) -> Result<SideRow> {
    match sol.left {
        Wave::Rarefaction { .. } => {
            let c0l = (g.gamma * sol.p0 / sol.rho0_left).sqrt();
            let beta0 = sol.u0 - c0l;
            let co = rarefaction_coeffs(left, beta0, sol.rho0_left, c0l, geom, g);
            Ok(SideRow {
                row: Row {
                    a: co.a,
                    b: co.b,
                    d: co.d,
                },
                raref: Some(co),
                shock: None,
            })
        }
        Wave::Shock { .. } => {
            // mirror to a right-moving shock
            let lm = left.mirrored();
            let solm = RiemannSolution {
                p0: sol.p0,
                u0: -sol.u0,
                rho0_left: sol.rho0_right,
                rho0_right: sol.rho0_left,
                left: sol.right,
                right: mirror_wave(sol.left),
            };
            let geom_m = DuctGeometry {
                area: geom.area,
                darea: -geom.darea,
            };
            let co = shock_coeffs(&lm, &solm, geom_m, g)?;
            // mirrored row a ut^m + b pt^m = d with ut^m = -ut, pt^m = pt
            Ok(SideRow {
                row: Row {
                    a: -co.a,
                    b: co.b,
                    d: co.d,
                },
                raref: None,
                shock: Some(co),
            })
        }
    }
}

/// Row contributed by the right wave, in right-of-contact partials.
fn right_row(
    right: &SlopedState,
    sol: &RiemannSolution,
    geom: DuctGeometry,
    g: GasConstants,
) -> Result<SideRow> {
    match sol.right {
        Wave::Shock { .. } => {
            let co = shock_coeffs(right, sol, geom, g)?;
            Ok(SideRow {
                row: Row {
                    a: co.a,
                    b: co.b,
                    d: co.d,
                },
                raref: None,
                shock: Some(co),
            })
        }
        Wave::Rarefaction { .. } => {
            let rm = right.mirrored();
            let c0r = (g.gamma * sol.p0 / sol.rho0_right).sqrt();
            let beta0m = -(sol.u0 + c0r);
            let geom_m = DuctGeometry {
                area: geom.area,
                darea: -geom.darea,
            };
            let co = rarefaction_coeffs(&rm, beta0m, sol.rho0_right, c0r, geom_m, g);
            Ok(SideRow {
                row: Row {
                    a: -co.a,
                    b: co.b,
                    d: co.d,
                },
                raref: Some(co),
                shock: None,
            })
        }
    }
}

fn mirror_wave(w: Wave) -> Wave {
    match w {
        Wave::Shock { speed } => Wave::Shock { speed: -speed },
        Wave::Rarefaction { head, tail } => Wave::Rarefaction {
            head: -head,
            tail: -tail,
        },
    }
}

/// Density rate on a rarefaction side of the contact.
fn rho_rate_rarefaction(
    pt: f64,
    side: &SlopedState,
    rho0: f64,
    c0: f64,
    u0_signed: f64,
    g: GasConstants,
) -> f64 {
    let c_side = side.w.sound_speed(g);
    let theta = c0 / c_side;
    let ts = entropy_slope_quantity(side.w, side.dw, g);
    (pt + (g.gamma - 1.0) * rho0 * u0_signed * theta.powf(2.0 * g.gamma / (g.gamma - 1.0)) * ts)
        / (c0 * c0)
}

/// Density rate on a shock side of the contact, from the differentiated
/// Rankine-Hugoniot relations. `ut`, `pt` are the t-axis partials (in the
/// problem frame); `mirrored` marks a left-moving shock handled by
/// reflection, in which frame the velocity rate changes sign.
fn rho_rate_shock(ut: f64, pt: f64, co: &ShockCoeffs, mirrored: bool) -> f64 {
    let utm = if mirrored { -ut } else { ut };
    (co.e_rhs - co.e_u * utm - co.e_p * pt) / co.e_rho
}

/// Full nonlinear GRP for the duct Euler equations. Dispatches to the
/// acoustic path for weak jumps, to one-sided upwinding when all waves are
/// on one side of the t-axis, and to the in-fan formulas for transonic
/// rarefactions.
pub fn nonlinear_pair_euler(
    left: SlopedState,
    right: SlopedState,
    geom: DuctGeometry,
    g: GasConstants,
) -> Result<InterfacePair> {
    if relative_jump(&left.w, &right.w) < ACOUSTIC_THRESHOLD {
        let sol = exact_riemann(left.w, right.w, g)?;
        let u0state = sample_riemann(&sol, left.w, right.w, 0.0, g);
        return Ok(acoustic_pair_euler(left, right, u0state, geom, g));
    }
    let sol = exact_riemann(left.w, right.w, g)?;
    let value = sample_riemann(&sol, left.w, right.w, 0.0, g);

    // all waves to one side: one-sided Lax-Wendroff derivatives
    let leftmost = match sol.left {
        Wave::Shock { speed } => speed,
        Wave::Rarefaction { head, .. } => head,
    };
    let rightmost = match sol.right {
        Wave::Shock { speed } => speed,
        Wave::Rarefaction { head, .. } => head,
    };
    if leftmost > 0.0 {
        return Ok(InterfacePair {
            value,
            ddt: upwind_one_sided(left.w, left.dw, geom, g),
        });
    }
    if rightmost < 0.0 {
        return Ok(InterfacePair {
            value,
            ddt: upwind_one_sided(right.w, right.dw, geom, g),
        });
    }

    // transonic rarefaction cases
    if let Wave::Rarefaction { head, tail } = sol.left {
        if head < 0.0 && tail > 0.0 {
            return sonic_pair_euler(left, geom, g);
        }
    }
    if let Wave::Rarefaction { head, tail } = sol.right {
        if tail < 0.0 && head > 0.0 {
            let pair = sonic_pair_euler(right.mirrored(), geom.mirrored(), g)?;
            return Ok(pair.mirrored());
        }
    }

    // non-sonic: assemble both rows and move the far one to the t-axis side
    let lrow = left_row(&left, &sol, geom, g)?;
    let rrow = right_row(&right, &sol, geom, g)?;
    let c0l = (g.gamma * sol.p0 / sol.rho0_left).sqrt();
    let c0r = (g.gamma * sol.p0 / sol.rho0_right).sqrt();
    let ga = geom.log_derivative();
    let u0 = sol.u0;

    let (row_l, row_r, rho_near, c_near) = if u0 >= 0.0 {
        let moved = transport_row_across_contact(
            rrow.row,
            sol.rho0_right,
            c0r,
            sol.rho0_left,
            c0l,
            u0,
            ga,
        );
        (lrow.row, moved, sol.rho0_left, c0l)
    } else {
        let moved = transport_row_across_contact(
            lrow.row,
            sol.rho0_left,
            c0l,
            sol.rho0_right,
            c0r,
            u0,
            ga,
        );
        (moved, rrow.row, sol.rho0_right, c0r)
    };

    let det = row_l.a * row_r.b - row_r.a * row_l.b;
    if det.abs() < 1e-14 {
        return Err(SolverError::DegenerateSystem { det });
    }
    let ut = (row_l.d * row_r.b - row_r.d * row_l.b) / det;
    let pt = (row_l.a * row_r.d - row_r.a * row_l.d) / det;

    let rt = if u0 >= 0.0 {
        match (&lrow.raref, &lrow.shock) {
            (Some(_), _) => rho_rate_rarefaction(pt, &left, rho_near, c_near, u0, g),
            (_, Some(co)) => rho_rate_shock(ut, pt, co, true),
            _ => unreachable!(),
        }
    } else {
        match (&rrow.raref, &rrow.shock) {
            (_, Some(co)) => rho_rate_shock(ut, pt, co, false),
            (Some(_), _) => {
                // right rarefaction side: mirrored formula
                let rm = right.mirrored();
                rho_rate_rarefaction(pt, &rm, rho_near, c_near, -u0, g)
            }
            _ => unreachable!(),
        }
    };

    Ok(InterfacePair {
        value,
        ddt: Slope {
            rho: rt,
            u: ut,
            p: pt,
        },
    })
}

impl DuctGeometry {
    fn mirrored(&self) -> DuctGeometry {
        DuctGeometry {
            area: self.area,
            darea: -self.darea,
        }
    }
}

/// Transonic left rarefaction: the t-axis lies inside the fan. The sonic
/// state is fixed by invariant constancy (u = c on the fan), and u_t, p_t
/// follow from the fan expansion at the sonic characteristic.
pub fn sonic_pair_euler(
    left: SlopedState,
    geom: DuctGeometry,
    g: GasConstants,
) -> Result<InterfacePair> {
    let ga_r = geom.log_derivative();
    let ga = g.gamma;
    let c_l = left.w.sound_speed(g);
    let psi_l = left.w.u + 2.0 * c_l / (ga - 1.0);
    let c0 = (ga - 1.0) * psi_l / (ga + 1.0);
    if c0 <= 0.0 {
        return Err(SolverError::Vacuum);
    }
    let u0 = c0;
    let theta = c0 / c_l;
    let rho0 = left.w.rho * theta.powf(2.0 / (ga - 1.0));
    let p0 = left.w.p * theta.powf(2.0 * ga / (ga - 1.0));

    let co = rarefaction_coeffs(&left, 0.0, rho0, c0, geom, g);
    let ts = entropy_slope_quantity(left.w, left.dw, g);
    let e_term = theta.powf(2.0 * ga / (ga - 1.0)) * ts;
    let w_term = ga_r * u0 * u0;

    // fan expansion at the sonic characteristic: psi1 is the along-axis
    // psi rate, phi1 follows from the crossing-characteristic relation
    let psi1 = co.d - e_term;
    let ut = (3.0 * ga - 1.0) / (4.0 * (ga + 1.0)) * psi1 + 0.25 * (e_term + w_term);
    let phi1 = 0.5 * (e_term + w_term) - (3.0 - ga) / (2.0 * (ga + 1.0)) * psi1;
    let c1 = (ga - 1.0) / 4.0 * (psi1 - phi1);
    let pt = 2.0 * rho0 * c0 / (ga - 1.0) * c1 + rho0 * c0 * e_term;
    let rt = (pt + (ga - 1.0) * rho0 * u0 * theta.powf(2.0 * ga / (ga - 1.0)) * ts) / (c0 * c0);

    Ok(InterfacePair {
        value: Primitive::new(rho0, u0, p0),
        ddt: Slope {
            rho: rt,
            u: ut,
            p: pt,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: GasConstants = GasConstants {
        gamma: 1.4,
        mu2: 0.4 / 2.4,
    };

    #[test]
    fn consistency_zero_slopes_zero_jump() {
        let w = Primitive::new(1.0, 0.3, 1.0);
        let s = SlopedState::new(w, Slope::default());
        let pair = nonlinear_pair_euler(s, s, DuctGeometry::PLANAR, G).unwrap();
        assert!(pair.ddt.rho.abs() < 1e-13);
        assert!(pair.ddt.u.abs() < 1e-13);
        assert!(pair.ddt.p.abs() < 1e-13);
        assert!((pair.value.rho - w.rho).abs() < 1e-12);
    }

    #[test]
    fn sod_zero_slopes_is_steady_interface() {
        // pure Riemann data: value is the Riemann solution at xi = 0 and
        // ddt vanishes (self-similar solution)
        let l = SlopedState::new(Primitive::new(1.0, 0.0, 1.0), Slope::default());
        let r = SlopedState::new(Primitive::new(0.125, 0.0, 0.1), Slope::default());
        let pair = nonlinear_pair_euler(l, r, DuctGeometry::PLANAR, G).unwrap();
        assert!((pair.value.p - 0.30313).abs() < 5e-6);
        assert!(pair.ddt.rho.abs() < 1e-11);
        assert!(pair.ddt.u.abs() < 1e-11);
        assert!(pair.ddt.p.abs() < 1e-11);
    }

    #[test]
    fn acoustic_limit() {
        // jump of 1e-6 with O(1) slopes: nonlinear agrees with acoustic
        // within 1e-4 relative
        let base = Primitive::new(1.0, 0.2, 1.0);
        let eps = 1e-6;
        let l = SlopedState::new(
            base,
            Slope {
                rho: 0.5,
                u: -0.3,
                p: 0.4,
            },
        );
        let r = SlopedState::new(
            Primitive::new(base.rho * (1.0 + eps), base.u + eps, base.p * (1.0 - eps)),
            Slope {
                rho: -0.2,
                u: 0.6,
                p: 0.1,
            },
        );
        // force the nonlinear path by bypassing the dispatch threshold:
        // jump 1e-6 sits exactly at the boundary, so compare through the
        // public function with a slightly larger jump
        let eps = 1e-5;
        let r = SlopedState::new(
            Primitive::new(base.rho * (1.0 + eps), base.u + eps, base.p * (1.0 - eps)),
            r.dw,
        );
        let sol = exact_riemann(l.w, r.w, G).unwrap();
        let u0state = sample_riemann(&sol, l.w, r.w, 0.0, G);
        let ap = acoustic_pair_euler(l, r, u0state, DuctGeometry::PLANAR, G);
        let np = nonlinear_pair_euler(l, r, DuctGeometry::PLANAR, G).unwrap();
        for (a, b) in [
            (ap.ddt.rho, np.ddt.rho),
            (ap.ddt.u, np.ddt.u),
            (ap.ddt.p, np.ddt.p),
        ] {
            assert!(
                (a - b).abs() <= 1e-4 * a.abs().max(1.0),
                "acoustic {a} vs nonlinear {b}"
            );
        }
    }

    #[test]
    fn mirror_symmetry_full_solver() {
        let l = SlopedState::new(
            Primitive::new(1.0, 0.1, 1.0),
            Slope {
                rho: 0.2,
                u: -0.3,
                p: 0.5,
            },
        );
        let r = SlopedState::new(
            Primitive::new(0.125, 0.0, 0.1),
            Slope {
                rho: -0.15,
                u: 0.4,
                p: -0.25,
            },
        );
        let pair = nonlinear_pair_euler(l, r, DuctGeometry::PLANAR, G).unwrap();
        let pm = nonlinear_pair_euler(r.mirrored(), l.mirrored(), DuctGeometry::PLANAR, G).unwrap();
        assert!((pair.ddt.u + pm.ddt.u).abs() < 1e-10);
        assert!((pair.ddt.p - pm.ddt.p).abs() < 1e-10);
        assert!((pair.ddt.rho - pm.ddt.rho).abs() < 1e-10);
        assert!((pair.value.u + pm.value.u).abs() < 1e-12);
    }

    #[test]
    fn solvability_on_random_configurations() {
        let mut state = 7u64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let mut solved = 0;
        for _ in 0..300 {
            let l = SlopedState::new(
                Primitive::new(0.2 + 2.0 * rng(), 2.0 * (rng() - 0.5), 0.2 + 2.0 * rng()),
                Slope {
                    rho: rng() - 0.5,
                    u: rng() - 0.5,
                    p: rng() - 0.5,
                },
            );
            let r = SlopedState::new(
                Primitive::new(0.2 + 2.0 * rng(), 2.0 * (rng() - 0.5), 0.2 + 2.0 * rng()),
                Slope {
                    rho: rng() - 0.5,
                    u: rng() - 0.5,
                    p: rng() - 0.5,
                },
            );
            match nonlinear_pair_euler(l, r, DuctGeometry::PLANAR, G) {
                Ok(pair) => {
                    assert!(pair.ddt.rho.is_finite());
                    assert!(pair.ddt.u.is_finite());
                    assert!(pair.ddt.p.is_finite());
                    solved += 1;
                }
                Err(SolverError::Vacuum) => {}
                Err(e) => panic!("unexpected failure: {e}"),
            }
        }
        assert!(solved > 250, "only {solved} configurations solved");
    }

    #[test]
    fn sonic_trivial_and_isentropic_relation() {
        // transonic expansion with zero slopes: ddt = 0
        let l = SlopedState::new(Primitive::new(1.0, 0.8, 1.0), Slope::default());
        let pair = sonic_pair_euler(l, DuctGeometry::PLANAR, G).unwrap();
        assert!(pair.ddt.rho.abs() < 1e-14);
        assert!(pair.ddt.u.abs() < 1e-14);
        assert!(pair.ddt.p.abs() < 1e-14);
        assert!((pair.value.u - pair.value.sound_speed(G)).abs() < 1e-12);
    }

    #[test]
    fn sonic_continuity_across_switch() {
        // one-parameter family crossing the sonic boundary: ddt continuous
        // within 1e-3 across the switch
        let dwl = Slope {
            rho: 0.2,
            u: -0.1,
            p: 0.3,
        };
        let dwr = Slope {
            rho: -0.1,
            u: 0.2,
            p: -0.1,
        };
        let r = Primitive::new(0.125, 0.0, 0.1);
        // find velocity shift where the fan tail crosses zero
        let mut lo = 0.0;
        let mut hi = 1.5;
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            let l = Primitive::new(1.0, mid, 1.0);
            let rr = Primitive::new(r.rho, mid, r.p);
            let sol = exact_riemann(l, rr, G).unwrap();
            let tail = match sol.left {
                Wave::Rarefaction { tail, .. } => tail,
                _ => panic!(),
            };
            if tail > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let ustar = 0.5 * (lo + hi);
        let delta = 1e-5;
        let mk = |shift: f64| {
            (
                SlopedState::new(Primitive::new(1.0, ustar + shift, 1.0), dwl),
                SlopedState::new(Primitive::new(r.rho, ustar + shift, r.p), dwr),
            )
        };
        let (l1, r1) = mk(-delta);
        let (l2, r2) = mk(delta);
        let p1 = nonlinear_pair_euler(l1, r1, DuctGeometry::PLANAR, G).unwrap();
        let p2 = nonlinear_pair_euler(l2, r2, DuctGeometry::PLANAR, G).unwrap();
        for (a, b) in [
            (p1.ddt.rho, p2.ddt.rho),
            (p1.ddt.u, p2.ddt.u),
            (p1.ddt.p, p2.ddt.p),
        ] {
            assert!(
                (a - b).abs() <= 1e-3 * a.abs().max(1.0),
                "sonic switch jump: {a} vs {b}"
            );
        }
    }
}
