//! Finite-volume drivers: 1-D scalar and Euler-duct solvers, the 2-D
//! linear wave system, and 2-D Euler on rectangular meshes.

pub mod euler1d;
pub mod euler2d;
pub mod scalar1d;
pub mod wave2d;

use std::sync::atomic::{AtomicU64, Ordering};

/// Uniform 1-D mesh.
#[derive(Debug, Clone, Copy)]
pub struct Mesh1d {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
    pub h: f64,
}

impl Mesh1d {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Self {
        assert!(n > 0 && x_max > x_min);
        Mesh1d {
            x_min,
            x_max,
            n,
            h: (x_max - x_min) / n as f64,
        }
    }

    pub fn center(&self, j: usize) -> f64 {
        self.x_min + (j as f64 + 0.5) * self.h
    }

    /// Interface i sits between cells i-1 and i; i runs over 0..=n.
    pub fn interface(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.h
    }
}

/// Uniform rectangular 2-D mesh.
#[derive(Debug, Clone, Copy)]
pub struct Mesh2d {
    pub x_min: f64,
    pub y_min: f64,
    pub nx: usize,
    pub ny: usize,
    pub hx: f64,
    pub hy: f64,
}

impl Mesh2d {
    pub fn new(bounds: (f64, f64, f64, f64), nx: usize, ny: usize) -> Self {
        let (x0, x1, y0, y1) = bounds;
        Mesh2d {
            x_min: x0,
            y_min: y0,
            nx,
            ny,
            hx: (x1 - x0) / nx as f64,
            hy: (y1 - y0) / ny as f64,
        }
    }

    pub fn idx(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }
}

/// Spatial reconstruction choice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Recon {
    Minmod { alpha: f64 },
    Hweno5,
}

/// Time stepping choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stepping {
    TwoStage4,
    SingleStage2,
    /// Method-of-lines RK4 with instantaneous Godunov fluxes; reference
    /// scheme for the efficiency comparison.
    Rk4Wrapper,
}

/// Variable basis for the high-order reconstruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Characteristic,
    Primitive,
}

/// Scheme configuration shared by the drivers.
#[derive(Debug, Clone, Copy)]
pub struct SchemeConfig {
    pub cfl: f64,
    pub recon: Recon,
    pub solver: crate::solvers::GrpMode,
    pub stepping: Stepping,
    pub basis: Basis,
    /// 2-D only: include transversal gradients in interface time derivatives.
    pub transversal: bool,
    /// Apply the curvature correction in the derivative-field time
    /// quadrature (needed for clean fourth-order convergence).
    pub derivative_correction: bool,
    /// Apply the intermediate-stage boundary-value adjustment.
    pub boundary_correction: bool,
}

impl Default for SchemeConfig {
    fn default() -> Self {
        SchemeConfig {
            cfl: 0.5,
            recon: Recon::Hweno5,
            solver: crate::solvers::GrpMode::Nonlinear,
            stepping: Stepping::TwoStage4,
            basis: Basis::Characteristic,
            transversal: true,
            derivative_correction: true,
            boundary_correction: true,
        }
    }
}

impl SchemeConfig {
    pub fn validate(&self) -> crate::error::Result<()> {
        if !(self.cfl > 0.0 && self.cfl < 1.0) {
            return Err(crate::error::SolverError::Config(format!(
                "cfl must lie in (0, 1), got {}",
                self.cfl
            )));
        }
        if let Recon::Minmod { alpha } = self.recon {
            if !(0.0..2.0).contains(&alpha) {
                return Err(crate::error::SolverError::Config(format!(
                    "minmod alpha must lie in [0, 2), got {alpha}"
                )));
            }
        }
        Ok(())
    }
}

/// Work counters for the efficiency comparison: reconstruction sweeps,
/// Riemann solves and interface-solver calls.
#[derive(Debug, Default)]
pub struct Counters {
    pub reconstruction_sweeps: AtomicU64,
    pub riemann_solves: AtomicU64,
    pub pair_calls: AtomicU64,
}

impl Counters {
    pub fn new() -> Self {
        Counters::default()
    }

    pub fn add_recon_sweep(&self) {
        self.reconstruction_sweeps.fetch_add(1, Ordering::Relaxed);
    }

    pub fn add_riemann(&self, n: u64) {
        self.riemann_solves.fetch_add(n, Ordering::Relaxed);
    }

    pub fn add_pairs(&self, n: u64) {
        self.pair_calls.fetch_add(n, Ordering::Relaxed);
    }

    pub fn recon_sweeps(&self) -> u64 {
        self.reconstruction_sweeps.load(Ordering::Relaxed)
    }
}

/// Least-squares slope of log(err) against log(h); the observed order.
pub fn least_squares_order(hs: &[f64], errs: &[f64]) -> f64 {
    let n = hs.len() as f64;
    let xs: Vec<f64> = hs.iter().map(|h| h.ln()).collect();
    let ys: Vec<f64> = errs.iter().map(|e| e.max(1e-300).ln()).collect();
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| x * y).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}
