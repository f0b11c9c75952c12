//! Fourth-order boundary treatment for the scalar IBVP: inverse
//! Lax-Wendroff inflow ghosts (smooth and stencil-selected), the
//! intermediate-stage boundary correction, and outflow extrapolation.
//! System boundaries (wall / inflow / outflow) for the Euler drivers.

use crate::error::{Result, SolverError};
use crate::gas::{GasConstants, Primitive};

/// Small parameter in the boundary stencil weights.
pub const ILW_EPS: f64 = 1e-12;

/// Ghost-cell data adjacent to one boundary: two averages and two
/// averaged derivatives, ordered from the boundary outward.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct GhostCells {
    pub ubar: [f64; 2],
    pub dbar: [f64; 2],
}

fn check_inflow(fprime_g: f64) -> Result<f64> {
    if fprime_g.abs() < 1e-12 {
        Err(SolverError::InflowDegeneracy { fprime: fprime_g })
    } else {
        Ok(1.0 / fprime_g)
    }
}

/// Smooth-path inverse-LW inflow ghosts at x = 0: a cubic interpolant is
/// pinned by the two interior averages, the boundary value g and the
/// converted derivative u_x(0) = -g' / f'(g).
pub fn ilw_inflow_ghosts(
    g_val: f64,
    g_prime: f64,
    fprime_g: f64,
    ubar0: f64,
    ubar1: f64,
    h: f64,
) -> Result<GhostCells> {
    let q = check_inflow(fprime_g)? * g_prime; // f'(g)^{-1} g'
    let u_m1 = 0.25 * (-6.0 * g_val + 6.0 * h * q + 11.0 * ubar0 - ubar1);
    let u_m2 = 0.25 * (-90.0 * g_val + 42.0 * h * q + 105.0 * ubar0 - 11.0 * ubar1);
    let d_m1 = (66.0 * g_val - 34.0 * h * q - 73.0 * ubar0 + 7.0 * ubar1) / (8.0 * h);
    let d_m2 = (294.0 * g_val - 118.0 * h * q - 331.0 * ubar0 + 37.0 * ubar1) / (8.0 * h);
    Ok(GhostCells {
        ubar: [u_m1, u_m2],
        dbar: [d_m1, d_m2],
    })
}

/// Candidate ghost values on the three shrinking stencils, ordered
/// r = 0 (boundary data only), 1, 2 (full stencil).
pub fn ilw_candidates(
    g_val: f64,
    g_prime: f64,
    fprime_g: f64,
    ubar0: f64,
    ubar1: f64,
    h: f64,
) -> Result<[GhostCells; 3]> {
    let q = check_inflow(fprime_g)? * g_prime;
    let full = ilw_inflow_ghosts(g_val, g_prime, fprime_g, ubar0, ubar1, h)?;
    let r1 = GhostCells {
        ubar: [h * q + ubar0, -6.0 * g_val + 5.0 * h * q + 7.0 * ubar0],
        dbar: [
            (6.0 * g_val - 5.0 * h * q - 6.0 * ubar0) / (2.0 * h),
            (18.0 * g_val - 11.0 * h * q - 18.0 * ubar0) / (2.0 * h),
        ],
    };
    let r0 = GhostCells {
        ubar: [g_val + 0.5 * h * q, g_val + 1.5 * h * q],
        dbar: [-q, -q],
    };
    Ok([r0, r1, full])
}

/// Smoothness indicators of the three boundary stencils.
pub fn ilw_indicators(
    g_val: f64,
    g_prime: f64,
    fprime_g: f64,
    ubar0: f64,
    ubar1: f64,
    h: f64,
) -> Result<[f64; 3]> {
    let q = check_inflow(fprime_g)? * g_prime;
    let hq = h * q;
    let b2 = (66516.0 * g_val * g_val + 9444.0 * hq * hq - 56348.0 * hq * ubar0
        + 85929.0 * ubar0 * ubar0
        + 6644.0 * hq * ubar1
        - 20694.0 * ubar0 * ubar1
        + 1281.0 * ubar1 * ubar1
        + 12.0 * g_val * (4142.0 * hq - 12597.0 * ubar0 + 1511.0 * ubar1))
        / 80.0;
    let b1 = 48.0 * g_val * g_val + 54.0 * g_val * hq + 16.0 * hq * hq - 96.0 * g_val * ubar0
        + 48.0 * ubar0 * ubar0
        - 54.0 * hq * ubar0;
    let b0 = hq * hq;
    Ok([b0, b1, b2])
}

/// Stencil-selected inverse-LW inflow ghosts: weighted combination of the
/// three candidate sets with weights built from the smoothness indicators
/// and the boundary linear weights d = (h^2, h, 1 - h - h^2).
pub fn ilw_inflow_ghosts_weno(
    g_val: f64,
    g_prime: f64,
    fprime_g: f64,
    ubar0: f64,
    ubar1: f64,
    h: f64,
) -> Result<GhostCells> {
    let cands = ilw_candidates(g_val, g_prime, fprime_g, ubar0, ubar1, h)?;
    let betas = ilw_indicators(g_val, g_prime, fprime_g, ubar0, ubar1, h)?;
    let d = [h * h, h, 1.0 - h - h * h];
    let mut alpha = [0.0; 3];
    for r in 0..3 {
        let t = ILW_EPS + betas[r];
        alpha[r] = d[r] / (t * t);
    }
    let s = alpha[0] + alpha[1] + alpha[2];
    let mut out = GhostCells::default();
    for r in 0..3 {
        let w = alpha[r] / s;
        out.ubar[0] += w * cands[r].ubar[0];
        out.ubar[1] += w * cands[r].ubar[1];
        out.dbar[0] += w * cands[r].dbar[0];
        out.dbar[1] += w * cands[r].dbar[1];
    }
    Ok(out)
}

/// Boundary values used at the midpoint stage: the prescribed value is
/// shifted by -(dt^3/48) g''' to restore fourth-order accuracy, while the
/// prescribed derivative is used as is.
pub fn intermediate_stage_boundary(g_mid: f64, g_prime_mid: f64, g_3rd_mid: f64, dt: f64) -> (f64, f64) {
    (g_mid - dt.powi(3) / 48.0 * g_3rd_mid, g_prime_mid)
}

/// Interior interface spatial derivative at the midpoint stage, one cell
/// in from the inflow boundary.
pub fn intermediate_stage_interior_derivative(
    g_adj: f64,
    g_prime_adj: f64,
    fprime_g: f64,
    ubar0: f64,
    ubar1: f64,
    ubar2: f64,
    h: f64,
) -> Result<f64> {
    let q = check_inflow(fprime_g)? * g_prime_adj;
    Ok((-49.0 * ubar0 + 59.0 * ubar1 - 4.0 * ubar2 - 6.0 * g_adj + 6.0 * h * q) / (48.0 * h))
}

/// Third derivative of sampled boundary data by a five-point centered
/// difference with spacing dt/4.
pub fn sampled_third_derivative(g: impl Fn(f64) -> f64, t: f64, dt: f64) -> f64 {
    let s = 0.25 * dt;
    (g(t + 2.0 * s) - 2.0 * g(t + s) + 2.0 * g(t - s) - g(t - 2.0 * s)) / (2.0 * s * s * s)
}

/// Cubic-extrapolation outflow ghosts from the four outermost interior
/// averages (ordered ubar[M-3..=M], boundary at the right).
pub fn outflow_ghosts(u: [f64; 4], h: f64) -> GhostCells {
    let [um3, um2, um1, um] = u;
    let u_p1 = 4.0 * um - 6.0 * um1 + 4.0 * um2 - um3;
    let u_p2 = 10.0 * um - 20.0 * um1 + 15.0 * um2 - 4.0 * um3;
    let d_p1 = (26.0 * um - 57.0 * um1 + 42.0 * um2 - 11.0 * um3) / 6.0;
    let d_p2 = (47.0 * um - 114.0 * um1 + 93.0 * um2 - 26.0 * um3) / 6.0;
    let _ = h;
    GhostCells {
        ubar: [u_p1, u_p2],
        dbar: [d_p1 / h, d_p2 / h],
    }
}

/// Shortened-stencil outflow ghosts with smoothness-based selection,
/// mirroring the inflow procedure: candidates use 4, 3 and 2 interior
/// cells.
pub fn outflow_ghosts_weno(u: [f64; 4], h: f64) -> GhostCells {
    let [um3, um2, um1, um] = u;
    let full = outflow_ghosts(u, h);
    // quadratic extrapolation from (um2, um1, um)
    let c1 = GhostCells {
        ubar: [
            3.0 * um - 3.0 * um1 + um2,
            6.0 * um - 8.0 * um1 + 3.0 * um2,
        ],
        dbar: [
            (2.0 * um - 3.0 * um1 + um2) / h * 1.0,
            (3.0 * um - 5.0 * um1 + 2.0 * um2) / h,
        ],
    };
    // linear extrapolation from (um1, um)
    let c0 = GhostCells {
        ubar: [2.0 * um - um1, 3.0 * um - 2.0 * um1],
        dbar: [(um - um1) / h, (um - um1) / h],
    };
    // smoothness of the interior data on each stencil
    let b2 = {
        let t1 = um3 - 2.0 * um2 + um1;
        let t2 = um2 - 2.0 * um1 + um;
        let t3 = um - 3.0 * um1 + 3.0 * um2 - um3;
        t1 * t1 + t2 * t2 + 13.0 / 3.0 * t3 * t3
    };
    let b1 = {
        let t = um2 - 2.0 * um1 + um;
        let s = um - um1;
        13.0 / 12.0 * t * t + s * s
    };
    let b0 = {
        let s = um - um1;
        s * s
    };
    let d = [h * h, h, 1.0 - h - h * h];
    let betas = [b0, b1, b2];
    let cands = [c0, c1, full];
    let mut alpha = [0.0; 3];
    for r in 0..3 {
        let t = ILW_EPS + betas[r];
        alpha[r] = d[r] / (t * t);
    }
    let s: f64 = alpha.iter().sum();
    let mut out = GhostCells::default();
    for r in 0..3 {
        let w = alpha[r] / s;
        out.ubar[0] += w * cands[r].ubar[0];
        out.ubar[1] += w * cands[r].ubar[1];
        out.dbar[0] += w * cands[r].dbar[0];
        out.dbar[1] += w * cands[r].dbar[1];
    }
    out
}

/// Boundary kinds for the Euler system drivers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SystemBoundary {
    Periodic,
    /// Mirror reflection with negated normal velocity.
    SolidWall,
    /// Zero-gradient characteristic extrapolation.
    Outflow,
    /// Prescribed density and velocity, pressure extrapolated from inside.
    SubsonicInflow { rho: f64, u: f64 },
}

/// Ghost state for one boundary cell of the Euler system given the
/// mirrored / outermost interior state.
pub fn system_ghost(kind: SystemBoundary, interior: Primitive, _g: GasConstants) -> Result<Primitive> {
    let w = match kind {
        SystemBoundary::Periodic => interior,
        SystemBoundary::SolidWall => Primitive::new(interior.rho, -interior.u, interior.p),
        SystemBoundary::Outflow => interior,
        SystemBoundary::SubsonicInflow { rho, u } => Primitive::new(rho, u, interior.p),
    };
    Primitive::validated(w.rho, w.u, w.p, "system boundary ghost")
}
