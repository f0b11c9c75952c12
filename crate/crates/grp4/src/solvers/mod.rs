//! Interface solvers producing the pair (value, instantaneous time
//! derivative) at a cell interface: the building block consumed by the
//! two-stage stepper.

pub mod acoustic;
pub mod flux;
pub mod linear;
pub mod nonlinear;
pub mod rarefaction;
pub mod scalar;
pub mod shock;

use crate::gas::{Primitive, Slope};

/// One-sided limit at the interface plus the one-sided spatial derivative:
/// the input of a generalized Riemann problem.
#[derive(Debug, Clone, Copy)]
pub struct SlopedState {
    pub w: Primitive,
    pub dw: Slope,
}

impl SlopedState {
    pub fn new(w: Primitive, dw: Slope) -> Self {
        SlopedState { w, dw }
    }

    /// Reflection x -> -x: velocity and the rho/p slopes change sign
    /// (the u slope keeps its sign).
    pub fn mirrored(&self) -> SlopedState {
        SlopedState {
            w: Primitive::new(self.w.rho, -self.w.u, self.w.p),
            dw: Slope {
                rho: -self.dw.rho,
                u: self.dw.u,
                p: -self.dw.p,
            },
        }
    }
}

/// Interface value and instantaneous time derivative of (rho, u, p).
#[derive(Debug, Clone, Copy)]
pub struct InterfacePair {
    pub value: Primitive,
    pub ddt: Slope,
}

impl InterfacePair {
    pub fn mirrored(&self) -> InterfacePair {
        InterfacePair {
            value: Primitive::new(self.value.rho, -self.value.u, self.value.p),
            ddt: Slope {
                rho: self.ddt.rho,
                u: -self.ddt.u,
                p: self.ddt.p,
            },
        }
    }
}

/// Which interface solver the scheme uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrpMode {
    LinearScalar,
    LinearSystem,
    Acoustic,
    Nonlinear,
}

/// Relative jump below which the nonlinear solver dispatches to the
/// acoustic path; avoids the degenerate 2x2 system at zero wave strength.
pub const ACOUSTIC_THRESHOLD: f64 = 1e-6;

pub(crate) fn relative_jump(l: &Primitive, r: &Primitive) -> f64 {
    let num = (l.rho - r.rho).abs() + (l.u - r.u).abs() + (l.p - r.p).abs();
    let den = l.rho.abs() + l.u.abs() + l.p.abs() + 1e-300;
    num / den
}
