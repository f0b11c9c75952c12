//! Linear interface solvers: scalar advection with damping and constant-matrix
//! systems via characteristic upwinding.

use crate::error::{Result, SolverError};
use nalgebra::{DMatrix, DVector};

/// Interface pair for a scalar equation u_t + a u_x = alpha u:
/// upwind value and its instantaneous time derivative.
pub fn linear_scalar_pair(
    a: f64,
    alpha: f64,
    ul: f64,
    ur: f64,
    dul: f64,
    dur: f64,
) -> (f64, f64) {
    let ap = 0.5 * (a + a.abs());
    let am = 0.5 * (a - a.abs());
    let u0 = if a > 0.0 {
        ul
    } else if a < 0.0 {
        ur
    } else {
        0.5 * (ul + ur)
    };
    let ddt = -ap * dul - am * dur + alpha * u0;
    (u0, ddt)
}

/// Central (smooth-data) pair for u_t + a u_x = 0: arithmetic mean value and
/// the difference-quotient derivative. Feeding this pair into a single-stage
/// midpoint-flux update reproduces the classical three-point second-order
/// scheme exactly.
pub fn linear_scalar_pair_central(a: f64, ul: f64, ur: f64, h: f64) -> (f64, f64) {
    let u0 = 0.5 * (ul + ur);
    (u0, -a * (ur - ul) / h)
}

/// Spectral data of a real-diagonalizable constant matrix.
pub struct EigenSystem {
    pub values: DVector<f64>,
    pub right: DMatrix<f64>,
    pub left: DMatrix<f64>, // inverse of `right`
}

impl EigenSystem {
    /// From known eigenvalues and right eigenvectors (columns).
    pub fn new(values: DVector<f64>, right: DMatrix<f64>) -> Result<Self> {
        let left = right
            .clone()
            .try_inverse()
            .ok_or(SolverError::EigenDecomposition)?;
        Ok(EigenSystem {
            values,
            right,
            left,
        })
    }

    /// Decompose a symmetric matrix.
    pub fn symmetric(a: &DMatrix<f64>) -> Result<Self> {
        let n = a.nrows();
        let max_asym = (a - a.transpose()).abs().max();
        if max_asym > 1e-12 * a.abs().max().max(1.0) {
            return Err(SolverError::EigenDecomposition);
        }
        let se = a.clone().symmetric_eigen();
        let right = se.eigenvectors.clone();
        let left = se.eigenvectors.transpose();
        let _ = n;
        Ok(EigenSystem {
            values: se.eigenvalues,
            right,
            left,
        })
    }

    pub fn matrix(&self) -> DMatrix<f64> {
        let lam = DMatrix::from_diagonal(&self.values);
        &self.right * lam * &self.left
    }

    fn split(&self) -> (DMatrix<f64>, DMatrix<f64>) {
        let lp = DMatrix::from_diagonal(&self.values.map(|l| 0.5 * (l + l.abs())));
        let lm = DMatrix::from_diagonal(&self.values.map(|l| 0.5 * (l - l.abs())));
        (
            &self.right * lp * &self.left,
            &self.right * lm * &self.left,
        )
    }
}

/// Interface pair for u_t + A u_x = h(u, x): value from characteristic
/// upwinding, time derivative from the (A +/- |A|)/2 splitting plus the
/// source evaluated at the interface value.
pub fn linear_system_pair(
    eig: &EigenSystem,
    ul: &DVector<f64>,
    ur: &DVector<f64>,
    dul: &DVector<f64>,
    dur: &DVector<f64>,
    source: impl Fn(&DVector<f64>) -> DVector<f64>,
) -> (DVector<f64>, DVector<f64>) {
    // value: upwind each characteristic component; zero-speed components
    // take the average of the two sides
    let vl = &eig.left * ul;
    let vr = &eig.left * ur;
    let mut v0 = vl.clone();
    for i in 0..v0.len() {
        let lam = eig.values[i];
        v0[i] = if lam > 0.0 {
            vl[i]
        } else if lam < 0.0 {
            vr[i]
        } else {
            0.5 * (vl[i] + vr[i])
        };
    }
    let u0 = &eig.right * v0;
    let (ap, am) = eig.split();
    let ddt = -(&ap * dul) - (&am * dur) + source(&u0);
    (u0, ddt)
}
