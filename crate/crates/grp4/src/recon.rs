//! Compact spatial reconstruction: minmod-limited linear data and
//! fifth-order Hermite-type WENO interface values from cell averages and
//! cell-averaged derivatives, plus interface spatial derivatives.

use crate::gas::{Conserved, GasConstants, Primitive};

/// Small parameter in the nonlinear weights.
pub const WENO_EPS: f64 = 1e-12;

/// Default limiter parameter; as large as possible within [0, 2).
pub const MINMOD_ALPHA: f64 = 1.9;

/// Per-variable cell data on a uniform mesh: averages and averaged
/// spatial derivatives.
#[derive(Debug, Clone)]
pub struct Field1D {
    pub ubar: Vec<f64>,
    pub dbar: Vec<f64>,
    pub h: f64,
}

impl Field1D {
    pub fn new(ubar: Vec<f64>, dbar: Vec<f64>, h: f64) -> Self {
        assert_eq!(ubar.len(), dbar.len());
        assert!(h > 0.0);
        Field1D { ubar, dbar, h }
    }
}

/// Left/right limit values and interface spatial derivatives at one
/// interface.
#[derive(Debug, Clone, Copy, Default)]
pub struct EdgeData {
    pub minus: f64,
    pub plus: f64,
    pub deriv: f64,
}

fn minmod3(a: f64, b: f64, c: f64) -> f64 {
    if a > 0.0 && b > 0.0 && c > 0.0 {
        a.min(b).min(c)
    } else if a < 0.0 && b < 0.0 && c < 0.0 {
        a.max(b).max(c)
    } else {
        0.0
    }
}

/// Limited slope of the piecewise-linear reconstruction: the middle
/// argument is the difference of interface values carried forward from the
/// interface history, the outer arguments are scaled cell differences.
pub fn minmod_slope(
    ubar_m: f64,
    ubar: f64,
    ubar_p: f64,
    edge_left: f64,
    edge_right: f64,
    alpha: f64,
    h: f64,
) -> f64 {
    minmod3(
        alpha * (ubar - ubar_m),
        edge_right - edge_left,
        alpha * (ubar_p - ubar),
    ) / h
}

/// Candidate values, smoothness indicators and the final weighted value of
/// the fifth-order Hermite reconstruction at the left side of the
/// interface x_{j+1/2}. The window is (cells j-1, j, j+1).
#[derive(Debug, Clone, Copy)]
pub struct HwenoValue {
    pub value: f64,
    /// derivative of the weighted reconstruction polynomial at the edge
    pub deriv: f64,
    pub candidates: [f64; 3],
    pub weights: [f64; 3],
    pub betas: [f64; 3],
}

impl HwenoValue {
    /// Weights close to the linear ones mark a smooth window.
    pub fn is_smooth(&self) -> bool {
        let g = HWENO_LINEAR_WEIGHTS;
        (0..3).all(|r| (self.weights[r] - g[r]).abs() < 0.2)
    }
}

/// Linear weights of the three stencils.
pub const HWENO_LINEAR_WEIGHTS: [f64; 3] = [9.0 / 80.0, 29.0 / 80.0, 21.0 / 40.0];

/// Hermite WENO value u_{j+1/2,-} from (ubar_{j-1}, ubar_j, ubar_{j+1})
/// and the averaged derivatives of the outer cells.
pub fn hweno5_left_value(
    um: f64,
    u0: f64,
    up: f64,
    dm: f64,
    dp: f64,
    h: f64,
) -> HwenoValue {
    // candidates: Hermite parabola on (j-1, j), central parabola, Hermite
    // parabola on (j, j+1)
    let c_m1 = -7.0 / 6.0 * um + 13.0 / 6.0 * u0 - 2.0 * h / 3.0 * dm;
    let c_0 = -1.0 / 6.0 * um + 5.0 / 6.0 * u0 + 1.0 / 3.0 * up;
    let c_p1 = 1.0 / 6.0 * u0 + 5.0 / 6.0 * up - h / 3.0 * dp;

    let b_m1 = {
        let t1 = -2.0 * um + 2.0 * u0 - h * dm;
        let t2 = -um + u0 - h * dm;
        t1 * t1 + 13.0 / 3.0 * t2 * t2
    };
    let b_0 = {
        let t1 = -um + up;
        let t2 = -um + 2.0 * u0 - up;
        0.25 * t1 * t1 + 13.0 / 12.0 * t2 * t2
    };
    let b_p1 = {
        let t1 = 2.0 * up - 2.0 * u0 - h * dp;
        let t2 = up - u0 - h * dp;
        t1 * t1 + 13.0 / 3.0 * t2 * t2
    };

    let tau = (b_p1 - b_m1).abs();
    let g = HWENO_LINEAR_WEIGHTS;
    let a = [
        g[0] * (1.0 + tau / (b_m1 + WENO_EPS)),
        g[1] * (1.0 + tau / (b_0 + WENO_EPS)),
        g[2] * (1.0 + tau / (b_p1 + WENO_EPS)),
    ];
    let s = a[0] + a[1] + a[2];
    let w = [a[0] / s, a[1] / s, a[2] / s];
    // candidate-polynomial derivatives at the edge
    let d_m1 = (3.0 * (u0 - um) - 2.0 * h * dm) / h;
    let d_0 = (up - u0) / h;
    let d_p1 = (up - u0) / h;
    HwenoValue {
        value: w[0] * c_m1 + w[1] * c_0 + w[2] * c_p1,
        deriv: w[0] * d_m1 + w[1] * d_0 + w[2] * d_p1,
        candidates: [c_m1, c_0, c_p1],
        weights: w,
        betas: [b_m1, b_0, b_p1],
    }
}

/// Mirror image: u_{j-1/2,+} reconstructed in cell j from
/// (ubar_{j-1}, ubar_j, ubar_{j+1}).
pub fn hweno5_right_value(
    um: f64,
    u0: f64,
    up: f64,
    dm: f64,
    dp: f64,
    h: f64,
) -> HwenoValue {
    // reflection x -> -x swaps the outer cells and negates the derivatives
    let mut v = hweno5_left_value(up, u0, um, -dp, -dm, h);
    v.deriv = -v.deriv;
    v
}

/// Smooth-stencil fifth-order value on the whole window, used when the
/// weights are frozen to the linear ones.
pub fn hweno5_optimal_value(um: f64, u0: f64, up: f64, dm: f64, dp: f64, h: f64) -> f64 {
    (-23.0 * um + 76.0 * u0 + 67.0 * up - 9.0 * h * dm - 21.0 * h * dp) / 120.0
}

/// Interface spatial derivative from four cell averages:
/// (ubar_{j-1} - 15 ubar_j + 15 ubar_{j+1} - ubar_{j+2}) / (12 h).
/// The same value serves both sides of the interface.
pub fn edge_derivative(um: f64, u0: f64, up: f64, upp: f64, h: f64) -> f64 {
    (um - 15.0 * u0 + 15.0 * up - upp) / (12.0 * h)
}

/// Cubic-exact interface derivative biased one cell to the left: inputs
/// are the averages of cells (i-3, i-2, i-1, i) around interface i. Used
/// for the left-side slope so that the derivative information feeding the
/// interface pair is upwinded for right-moving characteristics.
pub fn edge_derivative_left_biased(a: f64, b: f64, c: f64, d: f64, h: f64) -> f64 {
    (a / 12.0 - b / 4.0 - 3.0 * c / 4.0 + 11.0 * d / 12.0) / h
}

/// Mirror image of `edge_derivative_left_biased`: averages of cells
/// (i-1, i, i+1, i+2).
pub fn edge_derivative_right_biased(a: f64, b: f64, c: f64, d: f64, h: f64) -> f64 {
    (-11.0 * a / 12.0 + 3.0 * b / 4.0 + c / 4.0 - d / 12.0) / h
}

/// Cubic-exact point value at interface i from the averages of cells
/// (i-3, i-2, i-1, i): biased one cell to the left. Applied to the
/// derivative-average field this provides the upwinded slope input of the
/// interface solver.
pub fn edge_value_left_biased(a: f64, b: f64, c: f64, d: f64) -> f64 {
    a / 12.0 - 5.0 * b / 12.0 + 13.0 * c / 12.0 + d / 4.0
}

/// Mirror image: averages of cells (i-1, i, i+1, i+2).
pub fn edge_value_right_biased(a: f64, b: f64, c: f64, d: f64) -> f64 {
    a / 4.0 + 13.0 * b / 12.0 - 5.0 * c / 12.0 + d / 12.0
}

/// Interface second derivative from the same four averages (used by the
/// time-quadrature correction of the derivative-field update).
pub fn edge_second_derivative(um: f64, u0: f64, up: f64, upp: f64, h: f64) -> f64 {
    (upp - up - u0 + um) / (2.0 * h * h)
}

/// Characteristic projection for the 1-D Euler system in conserved
/// variables at a reference state: rows of `left` are the left
/// eigenvectors of the flux Jacobian, columns of `right` the right ones.
#[derive(Debug, Clone, Copy)]
pub struct CharBasis {
    pub left: [[f64; 3]; 3],
    pub right: [[f64; 3]; 3],
}

impl CharBasis {
    /// Basis at the Roe average of two states.
    pub fn roe(wl: Primitive, wr: Primitive, g: GasConstants) -> CharBasis {
        let sl = wl.rho.sqrt();
        let sr = wr.rho.sqrt();
        let u = (sl * wl.u + sr * wr.u) / (sl + sr);
        let hl = (wl.to_conserved(g).ener + wl.p) / wl.rho;
        let hr = (wr.to_conserved(g).ener + wr.p) / wr.rho;
        let hh = (sl * hl + sr * hr) / (sl + sr);
        let c2 = (g.gamma - 1.0) * (hh - 0.5 * u * u);
        let c = c2.max(1e-300).sqrt();
        CharBasis::at(u, hh, c, g)
    }

    fn at(u: f64, hh: f64, c: f64, g: GasConstants) -> CharBasis {
        let gm1 = g.gamma - 1.0;
        let b1 = gm1 / (c * c);
        let b2 = 0.5 * u * u * b1;
        let right = [
            [1.0, 1.0, 1.0],
            [u - c, u, u + c],
            [hh - u * c, 0.5 * u * u, hh + u * c],
        ];
        let left = [
            [0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), 0.5 * b1],
            [1.0 - b2, b1 * u, -b1],
            [0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), 0.5 * b1],
        ];
        let _ = gm1;
        CharBasis { left, right }
    }

    pub fn to_char(&self, v: &Conserved) -> [f64; 3] {
        let x = [v.rho, v.mom, v.ener];
        let mut out = [0.0; 3];
        for (i, row) in self.left.iter().enumerate() {
            out[i] = row[0] * x[0] + row[1] * x[1] + row[2] * x[2];
        }
        out
    }

    pub fn from_char(&self, w: &[f64; 3]) -> Conserved {
        let mut out = [0.0; 3];
        for (i, ro) in self.right.iter().enumerate() {
            out[i] = ro[0] * w[0] + ro[1] * w[1] + ro[2] * w[2];
        }
        Conserved {
            rho: out[0],
            mom: out[1],
            ener: out[2],
        }
    }
}
