//! Time integration: the extended-tableau multi-stage two-derivative
//! stepper, the two-stage fourth-order scheme, the classical RK4
//! reference, and the finite-volume two-stage composition.

use crate::error::{Result, SolverError};

/// Extended Butcher tableau of an explicit multi-stage two-derivative
/// method: stage combinations of f and of g = f' f.
#[derive(Debug, Clone)]
pub struct ExtendedTableau {
    pub a: Vec<Vec<f64>>,
    pub a_hat: Vec<Vec<f64>>,
    pub b: Vec<f64>,
    pub b_hat: Vec<f64>,
    pub c: Vec<f64>,
}

impl ExtendedTableau {
    pub fn stages(&self) -> usize {
        self.b.len()
    }

    pub fn validate(&self) -> Result<()> {
        let s = self.stages();
        if self.a.len() != s || self.a_hat.len() != s || self.b_hat.len() != s || self.c.len() != s
        {
            return Err(SolverError::Config("tableau size mismatch".into()));
        }
        for i in 0..s {
            if self.a[i].len() < i || self.a_hat[i].len() < i {
                return Err(SolverError::Config("tableau must be explicit".into()));
            }
        }
        let sb: f64 = self.b.iter().sum();
        if (sb - 1.0).abs() > 1e-12 {
            return Err(SolverError::Config(format!(
                "first-order consistency requires sum(b) = 1, got {sb}"
            )));
        }
        Ok(())
    }

    /// Single-stage second-order Taylor method.
    pub fn taylor2() -> Self {
        ExtendedTableau {
            a: vec![vec![]],
            a_hat: vec![vec![]],
            b: vec![1.0],
            b_hat: vec![0.5],
            c: vec![0.0],
        }
    }

    /// The two-stage fourth-order tableau.
    pub fn two_stage_fourth() -> Self {
        ExtendedTableau {
            a: vec![vec![], vec![0.5]],
            a_hat: vec![vec![], vec![0.125]],
            b: vec![1.0, 0.0],
            b_hat: vec![1.0 / 6.0, 1.0 / 3.0],
            c: vec![0.0, 0.5],
        }
    }
}

/// Generic explicit multi-stage two-derivative step on a flat state vector.
/// `f` is the right-hand side, `g` its total time derivative f'(y) f(y).
pub fn msmd_step<F, Gf>(f: F, g: Gf, y: &[f64], h: f64, tab: &ExtendedTableau) -> Vec<f64>
where
    F: Fn(&[f64]) -> Vec<f64>,
    Gf: Fn(&[f64]) -> Vec<f64>,
{
    let s = tab.stages();
    let n = y.len();
    let mut fk: Vec<Vec<f64>> = Vec::with_capacity(s);
    let mut gk: Vec<Vec<f64>> = Vec::with_capacity(s);
    for i in 0..s {
        let mut yi = y.to_vec();
        for j in 0..i {
            let aij = tab.a[i].get(j).copied().unwrap_or(0.0);
            let ahij = tab.a_hat[i].get(j).copied().unwrap_or(0.0);
            if aij != 0.0 || ahij != 0.0 {
                for k in 0..n {
                    yi[k] += h * aij * fk[j][k] + h * h * ahij * gk[j][k];
                }
            }
        }
        fk.push(f(&yi));
        gk.push(g(&yi));
    }
    let mut out = y.to_vec();
    for i in 0..s {
        if tab.b[i] != 0.0 || tab.b_hat[i] != 0.0 {
            for k in 0..n {
                out[k] += h * tab.b[i] * fk[i][k] + h * h * tab.b_hat[i] * gk[i][k];
            }
        }
    }
    out
}

/// Two-stage fourth-order step for a scalar ODE y' = f(y) with
/// g(y) = f'(y) f(y) supplied via `fprime`.
pub fn two_stage_fourth_ode<F, Fp>(f: F, fprime: Fp, y: f64, h: f64) -> f64
where
    F: Fn(f64) -> f64,
    Fp: Fn(f64) -> f64,
{
    let g = |y: f64| fprime(y) * f(y);
    let ystar = y + 0.5 * h * f(y) + 0.125 * h * h * g(y);
    y + h * f(y) + h * h / 6.0 * (g(y) + 2.0 * g(ystar))
}

/// Classical four-stage Runge-Kutta step on a flat state vector.
pub fn rk4_ode<F>(f: F, y: &[f64], h: f64) -> Vec<f64>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    let n = y.len();
    let k1 = f(y);
    let mut y2 = y.to_vec();
    for k in 0..n {
        y2[k] += 0.5 * h * k1[k];
    }
    let k2 = f(&y2);
    let mut y3 = y.to_vec();
    for k in 0..n {
        y3[k] += 0.5 * h * k2[k];
    }
    let k3 = f(&y3);
    let mut y4 = y.to_vec();
    for k in 0..n {
        y4[k] += h * k3[k];
    }
    let k4 = f(&y4);
    let mut out = y.to_vec();
    for k in 0..n {
        out[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
    }
    out
}

/// Spatial-operator value and its instantaneous time derivative for one
/// stage of the finite-volume composition.
pub struct StagePair<S> {
    pub l: S,
    pub dt_l: S,
}

/// State vectors a two-stage finite-volume step can advance: linear
/// combinations are all that is required.
pub trait LinearState: Clone {
    fn axpy(&mut self, coeff: f64, other: &Self);
}

impl LinearState for Vec<f64> {
    fn axpy(&mut self, coeff: f64, other: &Self) {
        assert_eq!(self.len(), other.len());
        for (a, b) in self.iter_mut().zip(other) {
            *a += coeff * b;
        }
    }
}

/// Two-stage fourth-order composition for d/dt w = L(w, t):
/// the provider returns (L, dL/dt) assembled from interface pairs.
///
/// Stage 1 builds w* at t + dt/2; stage 2 advances with the weighted
/// combination of the two time derivatives of L.
pub fn fv_two_stage_step<S, P>(w: &S, t: f64, dt: f64, mut provider: P) -> Result<S>
where
    S: LinearState,
    P: FnMut(&S, f64, StageKind) -> Result<StagePair<S>>,
{
    let s1 = provider(w, t, StageKind::Initial)?;
    let mut wstar = w.clone();
    wstar.axpy(0.5 * dt, &s1.l);
    wstar.axpy(0.125 * dt * dt, &s1.dt_l);
    let s2 = provider(&wstar, t + 0.5 * dt, StageKind::Midpoint)?;
    let mut out = w.clone();
    out.axpy(dt, &s1.l);
    out.axpy(dt * dt / 6.0, &s1.dt_l);
    out.axpy(dt * dt / 3.0, &s2.dt_l);
    Ok(out)
}

/// Which stage of the two-stage composition a provider call serves
/// (boundary data is evaluated at the stage time).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StageKind {
    Initial,
    Midpoint,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn taylor2_reduction() {
        let tab = ExtendedTableau::taylor2();
        tab.validate().unwrap();
        // y' = y: one msmd step equals y (1 + h + h^2/2)
        let f = |y: &[f64]| y.to_vec();
        let g = |y: &[f64]| y.to_vec();
        let out = msmd_step(f, g, &[1.0], 0.3, &tab);
        assert!((out[0] - (1.0 + 0.3 + 0.045)).abs() < 1e-15);
    }

    #[test]
    fn tableau_reduces_to_two_stage_fourth() {
        let tab = ExtendedTableau::two_stage_fourth();
        tab.validate().unwrap();
        // nonlinear test: y' = y^2
        let f = |y: &[f64]| vec![y[0] * y[0]];
        let g = |y: &[f64]| vec![2.0 * y[0] * y[0] * y[0]];
        let h = 0.07;
        let a = msmd_step(f, g, &[1.0], h, &tab)[0];
        let b = two_stage_fourth_ode(|y| y * y, |y| 2.0 * y, 1.0, h);
        assert_eq!(a, b, "tableau instantiation must be bit-identical");
    }

    #[test]
    fn exp_one_step_is_quartic_taylor() {
        let h = 0.1;
        let out = two_stage_fourth_ode(|y| y, |_| 1.0, 1.0, h);
        let taylor = 1.0 + h + h * h / 2.0 + h * h * h / 6.0 + h * h * h * h / 24.0;
        assert!((out - taylor).abs() < 1e-15);
        // f = 0 keeps the state
        let still = two_stage_fourth_ode(|_| 0.0, |_| 0.0, 2.5, h);
        assert_eq!(still, 2.5);
    }

    #[test]
    fn decay_order_four() {
        // y' = -y on [0, 1]: least-squares order 4 +/- 0.05
        let errs: Vec<f64> = [0.2f64, 0.1, 0.05, 0.025]
            .iter()
            .map(|&h| {
                let n = (1.0 / h).round() as usize;
                let mut y = 1.0;
                for _ in 0..n {
                    y = two_stage_fourth_ode(|y| -y, |_| -1.0, y, h);
                }
                (y - (-1.0f64).exp()).abs()
            })
            .collect();
        let order = least_squares_order(&[0.2, 0.1, 0.05, 0.025], &errs);
        assert!((order - 4.0).abs() < 0.1, "observed order {order}");
    }

    #[test]
    fn riccati_order_five_local() {
        // y' = y^2, y(0) = 1: local error O(h^5) over halvings
        let exact = |t: f64| 1.0 / (1.0 - t);
        let le = |h: f64| (two_stage_fourth_ode(|y| y * y, |y| 2.0 * y, 1.0, h) - exact(h)).abs();
        let e1 = le(0.1);
        let e2 = le(0.05);
        let e3 = le(0.025);
        assert!((e1 / e2).log2() > 4.5);
        assert!((e2 / e3).log2() > 4.5);
    }

    #[test]
    fn rk4_matches_matrix_polynomial() {
        // linear system y' = A y: RK4 equals I + hA + ... + (hA)^4/24
        let a = [[0.0, 1.0], [-1.0, 0.0]];
        let f = |y: &[f64]| {
            vec![
                a[0][0] * y[0] + a[0][1] * y[1],
                a[1][0] * y[0] + a[1][1] * y[1],
            ]
        };
        let h = 0.2;
        let y0 = [0.7, -0.4];
        let out = rk4_ode(f, &y0, h);
        // hand-computed matrix polynomial applied to y0
        let mut acc = y0.to_vec();
        let mut term = y0.to_vec();
        for k in 1..=4 {
            let ft = f(&term);
            for i in 0..2 {
                term[i] = h * ft[i] / k as f64;
            }
            for i in 0..2 {
                acc[i] += term[i];
            }
        }
        assert!((out[0] - acc[0]).abs() < 1e-15);
        assert!((out[1] - acc[1]).abs() < 1e-15);
    }

    #[test]
    fn rk4_order_four() {
        let errs: Vec<f64> = [0.2f64, 0.1, 0.05, 0.025]
            .iter()
            .map(|&h| {
                let n = (1.0 / h).round() as usize;
                let mut y = vec![1.0];
                for _ in 0..n {
                    y = rk4_ode(|y| vec![-y[0]], &y, h);
                }
                (y[0] - (-1.0f64).exp()).abs()
            })
            .collect();
        let order = least_squares_order(&[0.2, 0.1, 0.05, 0.025], &errs);
        assert!((order - 4.0).abs() < 0.1, "observed order {order}");
    }

    #[test]
    fn fv_two_stage_on_linear_operator() {
        // L(w) = -w (componentwise): the update must equal the quartic
        // Taylor polynomial of exp(-dt)
        let dt = 0.3;
        let w = vec![1.0, 2.0];
        let out = fv_two_stage_step(&w, 0.0, dt, |w, _, _| {
            let l: Vec<f64> = w.iter().map(|x| -x).collect();
            let dtl: Vec<f64> = w.to_vec();
            Ok(StagePair { l, dt_l: dtl })
        })
        .unwrap();
        let taylor = 1.0 - dt + dt * dt / 2.0 - dt * dt * dt / 6.0 + dt.powi(4) / 24.0;
        assert!((out[0] - taylor).abs() < 1e-14);
        assert!((out[1] - 2.0 * taylor).abs() < 1e-14);
    }

    pub(super) fn least_squares_order(hs: &[f64], errs: &[f64]) -> f64 {
        let n = hs.len() as f64;
        let xs: Vec<f64> = hs.iter().map(|h| h.ln()).collect();
        let ys: Vec<f64> = errs.iter().map(|e| e.ln()).collect();
        let sx: f64 = xs.iter().sum();
        let sy: f64 = ys.iter().sum();
        let sxx: f64 = xs.iter().map(|x| x * x).sum();
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| x * y).sum();
        (n * sxy - sx * sy) / (n * sxx - sx * sx)
    }
}
