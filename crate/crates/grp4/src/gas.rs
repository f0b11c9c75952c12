//! Polytropic-gas thermodynamics, state conversions, generalized Riemann
//! invariants, Rankine-Hugoniot relations and the exact Riemann solver.

use crate::error::{Result, SolverError};

/// Ratio of specific heats together with the derived constant
/// `mu2 = (gamma - 1) / (gamma + 1)` that appears throughout the
/// shock relations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasConstants {
    pub gamma: f64,
    pub mu2: f64,
}

impl GasConstants {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma > 1.0) || !gamma.is_finite() {
            return Err(SolverError::Config(format!(
                "gamma must be finite and > 1, got {gamma}"
            )));
        }
        Ok(GasConstants {
            gamma,
            mu2: (gamma - 1.0) / (gamma + 1.0),
        })
    }

    /// gamma = 1.4, the standard diatomic value used by most test problems.
    pub fn air() -> Self {
        GasConstants::new(1.4).unwrap()
    }
}

/// Primitive state (rho, u, p).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Primitive {
    pub rho: f64,
    pub u: f64,
    pub p: f64,
}

/// Conserved state (rho, rho*u, rho*E).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conserved {
    pub rho: f64,
    pub mom: f64,
    pub ener: f64,
}

/// One-sided spatial derivative of (rho, u, p).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Slope {
    pub rho: f64,
    pub u: f64,
    pub p: f64,
}

impl Primitive {
    pub fn new(rho: f64, u: f64, p: f64) -> Primitive {
        Primitive { rho, u, p }
    }

    pub fn validated(rho: f64, u: f64, p: f64, context: &'static str) -> Result<Primitive> {
        if rho > 0.0 && p > 0.0 && rho.is_finite() && u.is_finite() && p.is_finite() {
            Ok(Primitive { rho, u, p })
        } else {
            Err(SolverError::NonPositive { rho, p, context })
        }
    }

    pub fn is_positive(&self) -> bool {
        self.rho > 0.0 && self.p > 0.0 && self.rho.is_finite() && self.p.is_finite()
    }

    pub fn sound_speed(&self, g: GasConstants) -> f64 {
        (g.gamma * self.p / self.rho).sqrt()
    }

    /// Specific internal energy e = p / ((gamma-1) rho).
    pub fn internal_energy(&self, g: GasConstants) -> f64 {
        self.p / ((g.gamma - 1.0) * self.rho)
    }

    /// Specific entropy up to an additive constant: s = ln(p) - gamma ln(rho).
    /// Only differences of this quantity are meaningful.
    pub fn entropy(&self, g: GasConstants) -> f64 {
        self.p.ln() - g.gamma * self.rho.ln()
    }

    pub fn to_conserved(&self, g: GasConstants) -> Conserved {
        let e = self.internal_energy(g);
        Conserved {
            rho: self.rho,
            mom: self.rho * self.u,
            ener: self.rho * (0.5 * self.u * self.u + e),
        }
    }
}

impl Conserved {
    pub const ZERO: Conserved = Conserved {
        rho: 0.0,
        mom: 0.0,
        ener: 0.0,
    };

    pub fn to_primitive(&self, g: GasConstants) -> Result<Primitive> {
        let rho = self.rho;
        let u = self.mom / rho;
        let p = (g.gamma - 1.0) * (self.ener - 0.5 * self.mom * u);
        Primitive::validated(rho, u, p, "cons_to_prim")
    }
}

impl std::ops::Add for Conserved {
    type Output = Conserved;
    fn add(self, o: Conserved) -> Conserved {
        Conserved {
            rho: self.rho + o.rho,
            mom: self.mom + o.mom,
            ener: self.ener + o.ener,
        }
    }
}

impl std::ops::Sub for Conserved {
    type Output = Conserved;
    fn sub(self, o: Conserved) -> Conserved {
        Conserved {
            rho: self.rho - o.rho,
            mom: self.mom - o.mom,
            ener: self.ener - o.ener,
        }
    }
}

impl std::ops::Mul<f64> for Conserved {
    type Output = Conserved;
    fn mul(self, s: f64) -> Conserved {
        Conserved {
            rho: self.rho * s,
            mom: self.mom * s,
            ener: self.ener * s,
        }
    }
}

/// Cross-section data of the duct evaluated at one interface location:
/// the area and its spatial derivative. A constant-area duct has
/// `darea = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DuctGeometry {
    pub area: f64,
    pub darea: f64,
}

impl DuctGeometry {
    pub const PLANAR: DuctGeometry = DuctGeometry {
        area: 1.0,
        darea: 0.0,
    };

    /// A'(x)/A(x) at the evaluation point.
    pub fn log_derivative(&self) -> f64 {
        self.darea / self.area
    }
}

/// The kind and speeds of one wave in a Riemann solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Wave {
    Shock { speed: f64 },
    Rarefaction { head: f64, tail: f64 },
}

impl Wave {
    /// Signed speed of the edge of this wave closest to the far state.
    pub fn outer_speed(&self) -> f64 {
        match *self {
            Wave::Shock { speed } => speed,
            Wave::Rarefaction { head, .. } => head,
        }
    }

    pub fn is_shock(&self) -> bool {
        matches!(self, Wave::Shock { .. })
    }
}

/// Solution of the associated Riemann problem: intermediate pressure and
/// velocity, densities adjacent to the contact, and the two waves.
/// For the left wave of a rarefaction, `head` is the leftmost (u - c)
/// characteristic speed and `tail` the one bounding the intermediate region;
/// mirrored on the right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannSolution {
    pub p0: f64,
    pub u0: f64,
    pub rho0_left: f64,
    pub rho0_right: f64,
    pub left: Wave,
    pub right: Wave,
}

/// Gibbs-relation slope quantity T dS/dx = e' - (p/rho^2) rho', with
/// e' evaluated from (rho', p') through e = p/((gamma-1) rho).
pub fn entropy_slope_quantity(w: Primitive, dw: Slope, g: GasConstants) -> f64 {
    let c2 = g.gamma * w.p / w.rho;
    (dw.p - c2 * dw.rho) / ((g.gamma - 1.0) * w.rho)
}

/// Generalized Riemann invariants (phi, psi) in polytropic closed form:
/// phi = u - 2c/(gamma-1), psi = u + 2c/(gamma-1).
pub fn riemann_invariants(w: Primitive, g: GasConstants) -> (f64, f64) {
    let c = w.sound_speed(g);
    let q = 2.0 * c / (g.gamma - 1.0);
    (w.u - q, w.u + q)
}

/// Spatial derivative of psi = u + 2c/(gamma-1) for given state slopes.
pub fn riemann_invariant_slope(w: Primitive, dw: Slope, g: GasConstants) -> f64 {
    let c = w.sound_speed(g);
    dw.u + (g.gamma * dw.p - c * c * dw.rho) / ((g.gamma - 1.0) * w.rho * c)
}

/// Rankine-Hugoniot pair for polytropic gases:
/// Phi(p; pbar, rhobar) is the velocity jump and Psi the downstream density.
pub fn hugoniot(p: f64, pbar: f64, rhobar: f64, g: GasConstants) -> (f64, f64) {
    let mu2 = g.mu2;
    let phi = (p - pbar) * ((1.0 - mu2) / (rhobar * (p + mu2 * pbar))).sqrt();
    let psi = rhobar * (p + mu2 * pbar) / (pbar + mu2 * p);
    (phi, psi)
}

/// Velocity change across the wave connecting pressure `p` to the side state
/// (shock for p > ps, rarefaction otherwise), as seen from that side.
fn f_side(p: f64, side: Primitive, g: GasConstants) -> f64 {
    if p > side.p {
        hugoniot(p, side.p, side.rho, g).0
    } else {
        let c = side.sound_speed(g);
        2.0 * c / (g.gamma - 1.0) * ((p / side.p).powf((g.gamma - 1.0) / (2.0 * g.gamma)) - 1.0)
    }
}

fn df_side(p: f64, side: Primitive, g: GasConstants) -> f64 {
    if p > side.p {
        // d/dp of the shock branch
        let mu2 = g.mu2;
        let a = (1.0 - mu2) / (side.rho * (p + mu2 * side.p));
        let root = a.sqrt();
        root * (1.0 - 0.5 * (p - side.p) / (p + mu2 * side.p))
    } else {
        let c = side.sound_speed(g);
        1.0 / (side.rho * c) * (p / side.p).powf(-(g.gamma + 1.0) / (2.0 * g.gamma))
    }
}

/// Exact Riemann solver. Newton iteration with a bisection safeguard on the
/// velocity-matching residual, started from the two-rarefaction guess.
pub fn exact_riemann(left: Primitive, right: Primitive, g: GasConstants) -> Result<RiemannSolution> {
    if !left.is_positive() {
        return Err(SolverError::NonPositive {
            rho: left.rho,
            p: left.p,
            context: "exact_riemann left",
        });
    }
    if !right.is_positive() {
        return Err(SolverError::NonPositive {
            rho: right.rho,
            p: right.p,
            context: "exact_riemann right",
        });
    }
    let cl = left.sound_speed(g);
    let cr = right.sound_speed(g);
    let gm1 = g.gamma - 1.0;
    // vacuum check: psi_l - phi_r > 0
    if left.u + 2.0 * cl / gm1 - (right.u - 2.0 * cr / gm1) <= 0.0 {
        return Err(SolverError::Vacuum);
    }

    // two-rarefaction approximation as the initial guess
    let z = gm1 / (2.0 * g.gamma);
    let mut p = ((cl + cr - 0.5 * gm1 * (right.u - left.u))
        / (cl / left.p.powf(z) + cr / right.p.powf(z)))
    .powf(1.0 / z);
    if !(p > 0.0) || !p.is_finite() {
        p = 0.5 * (left.p + right.p);
    }

    let residual = |p: f64| f_side(p, left, g) + f_side(p, right, g) + (right.u - left.u);
    let scale = cl.max(cr).max((right.u - left.u).abs());
    let tol = 1.0e-12 * scale.max(1.0);
    let (mut lo, mut hi) = (f64::MIN_POSITIVE, f64::INFINITY);
    let mut res = residual(p);
    let max_iters = 100;
    let mut converged = false;
    for _ in 0..max_iters {
        if res.abs() < tol {
            converged = true;
            break;
        }
        if res > 0.0 {
            hi = hi.min(p);
        } else {
            lo = lo.max(p);
        }
        let d = df_side(p, left, g) + df_side(p, right, g);
        let mut pn = p - res / d;
        if !(pn > lo && pn < hi) || !pn.is_finite() {
            pn = if hi.is_finite() {
                0.5 * (lo + hi)
            } else {
                2.0 * p
            };
        }
        p = pn;
        res = residual(p);
    }
    if !converged && res.abs() >= tol {
        return Err(SolverError::NoConvergence {
            iters: max_iters,
            residual: res.abs(),
        });
    }

    let p0 = p;
    let u0 = 0.5 * (left.u + right.u) + 0.5 * (f_side(p0, right, g) - f_side(p0, left, g));

    let (rho0_left, lw) = if p0 > left.p {
        let r = hugoniot(p0, left.p, left.rho, g).1;
        let speed = (left.rho * left.u - r * u0) / (left.rho - r);
        (r, Wave::Shock { speed })
    } else {
        let r = left.rho * (p0 / left.p).powf(1.0 / g.gamma);
        let c0 = (g.gamma * p0 / r).sqrt();
        (
            r,
            Wave::Rarefaction {
                head: left.u - cl,
                tail: u0 - c0,
            },
        )
    };
    let (rho0_right, rw) = if p0 > right.p {
        let r = hugoniot(p0, right.p, right.rho, g).1;
        let speed = (right.rho * right.u - r * u0) / (right.rho - r);
        (r, Wave::Shock { speed })
    } else {
        let r = right.rho * (p0 / right.p).powf(1.0 / g.gamma);
        let c0 = (g.gamma * p0 / r).sqrt();
        (
            r,
            Wave::Rarefaction {
                head: right.u + cr,
                tail: u0 + c0,
            },
        )
    };
    Ok(RiemannSolution {
        p0,
        u0,
        rho0_left,
        rho0_right,
        left: lw,
        right: rw,
    })
}

/// Self-similar sampling of a Riemann solution at xi = x/t.
pub fn sample_riemann(
    sol: &RiemannSolution,
    left: Primitive,
    right: Primitive,
    xi: f64,
    g: GasConstants,
) -> Primitive {
    let gm1 = g.gamma - 1.0;
    let gp1 = g.gamma + 1.0;
    if xi < sol.u0 {
        match sol.left {
            Wave::Shock { speed } => {
                if xi < speed {
                    left
                } else {
                    Primitive::new(sol.rho0_left, sol.u0, sol.p0)
                }
            }
            Wave::Rarefaction { head, tail } => {
                if xi < head {
                    left
                } else if xi > tail {
                    Primitive::new(sol.rho0_left, sol.u0, sol.p0)
                } else {
                    let cl = left.sound_speed(g);
                    let c = gm1 / gp1 * (left.u - xi) + 2.0 / gp1 * cl;
                    let rho = left.rho * (c / cl).powf(2.0 / gm1);
                    let p = left.p * (rho / left.rho).powf(g.gamma);
                    Primitive::new(rho, xi + c, p)
                }
            }
        }
    } else {
        match sol.right {
            Wave::Shock { speed } => {
                if xi > speed {
                    right
                } else {
                    Primitive::new(sol.rho0_right, sol.u0, sol.p0)
                }
            }
            Wave::Rarefaction { head, tail } => {
                if xi > head {
                    right
                } else if xi < tail {
                    Primitive::new(sol.rho0_right, sol.u0, sol.p0)
                } else {
                    let cr = right.sound_speed(g);
                    let c = gm1 / gp1 * (xi - right.u) + 2.0 / gp1 * cr;
                    let rho = right.rho * (c / cr).powf(2.0 / gm1);
                    let p = right.p * (rho / right.rho).powf(g.gamma);
                    Primitive::new(rho, xi - c, p)
                }
            }
        }
    }
}

/// Physical Euler flux of the conserved variables for a primitive state.
pub fn euler_flux(w: Primitive, g: GasConstants) -> Conserved {
    let e_tot = w.p / (g.gamma - 1.0) + 0.5 * w.rho * w.u * w.u;
    Conserved {
        rho: w.rho * w.u,
        mom: w.rho * w.u * w.u + w.p,
        ener: w.u * (e_tot + w.p),
    }
}
