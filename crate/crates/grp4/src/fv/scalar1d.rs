//! 1-D scalar finite-volume driver: periodic advection / Burgers and the
//! Burgers initial-boundary-value problem with the inverse-LW inflow
//! treatment.

use super::{Counters, Mesh1d, Recon, SchemeConfig, Stepping};
use crate::boundary::{
    ilw_inflow_ghosts_weno, intermediate_stage_boundary, intermediate_stage_interior_derivative,
    outflow_ghosts_weno, sampled_third_derivative,
};
use crate::error::Result;
use crate::exec;
use crate::recon::{
    edge_value_left_biased, edge_value_right_biased, hweno5_left_value, hweno5_right_value,
    minmod_slope,
};
use crate::solvers::linear::linear_scalar_pair_central;
use crate::solvers::scalar::{scalar_grp, ScalarFlux};

/// Boundary treatment of the scalar driver.
pub enum ScalarBoundary {
    Periodic,
    /// Inflow at the left end with prescribed g(t), g'(t); cubic
    /// extrapolation outflow at the right end.
    Inflow {
        g: Box<dyn Fn(f64) -> f64 + Sync>,
        g_prime: Box<dyn Fn(f64) -> f64 + Sync>,
    },
}

/// How interface pairs are produced.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ScalarPairMode {
    /// Upwind (Godunov) pair from the generalized Riemann problem.
    Upwind,
    /// Central smooth-data pair; reproduces the classical three-point
    /// second-order scheme when combined with the single-stage update.
    CentralSmooth,
}

pub struct ScalarDriver {
    pub flux: ScalarFlux,
    pub mesh: Mesh1d,
    pub cfg: SchemeConfig,
    pub boundary: ScalarBoundary,
    pub pair_mode: ScalarPairMode,
    pub ubar: Vec<f64>,
    /// cell-averaged derivative field; refreshed from the averages at
    /// every stage (see `refresh_dbar`), boundary cells carried by the
    /// ghost machinery
    pub dbar: Vec<f64>,
    /// interface value history (length n + 1), the middle argument of the
    /// minmod limiter
    pub edge: Vec<f64>,
    pub t: f64,
    pub counters: Counters,
}

struct StageData {
    l: Vec<f64>,
    dt_l: Vec<f64>,
    /// per-interface (value, u_t)
    pairs: Vec<(f64, f64)>,
}

const NG: usize = 3;

impl ScalarDriver {
    pub fn new(
        flux: ScalarFlux,
        mesh: Mesh1d,
        cfg: SchemeConfig,
        boundary: ScalarBoundary,
        init: impl Fn(f64) -> f64,
    ) -> Self {
        let ubar: Vec<f64> = (0..mesh.n)
            .map(|j| gauss5_average(&init, mesh.interface(j), mesh.interface(j + 1)))
            .collect();
        let dbar: Vec<f64> = (0..mesh.n)
            .map(|j| (init(mesh.interface(j + 1)) - init(mesh.interface(j))) / mesh.h)
            .collect();
        let edge: Vec<f64> = (0..=mesh.n).map(|i| init(mesh.interface(i))).collect();
        ScalarDriver {
            flux,
            mesh,
            cfg,
            boundary,
            pair_mode: ScalarPairMode::Upwind,
            ubar,
            dbar,
            edge,
            t: 0.0,
            counters: Counters::new(),
        }
    }

    pub fn max_speed(&self) -> f64 {
        self.ubar
            .iter()
            .map(|&u| self.flux.fprime(u).abs())
            .fold(0.0, f64::max)
    }

    pub fn dt(&self) -> f64 {
        self.cfg.cfl * self.mesh.h / self.max_speed().max(1e-12)
    }

    /// Ghost extension of the averages for a stage at time `ts`, plus the
    /// ghost derivative averages from the boundary machinery.
    fn ghosts(&self, ubar: &[f64], ts: f64) -> (Vec<f64>, Vec<f64>) {
        let n = self.mesh.n;
        let h = self.mesh.h;
        let mut ue = vec![0.0; n + 2 * NG];
        let mut de = vec![0.0; n + 2 * NG];
        ue[NG..NG + n].copy_from_slice(ubar);
        match &self.boundary {
            ScalarBoundary::Periodic => {
                for k in 0..NG {
                    ue[NG - 1 - k] = ubar[n - 1 - k];
                    ue[NG + n + k] = ubar[k];
                }
            }
            ScalarBoundary::Inflow { g, g_prime } => {
                let gv = g(ts);
                let gp = g_prime(ts);
                let gh = ilw_inflow_ghosts_weno(gv, gp, self.flux.fprime(gv), ubar[0], ubar[1], h)
                    .unwrap_or_default();
                ue[NG - 1] = gh.ubar[0];
                ue[NG - 2] = gh.ubar[1];
                ue[NG - 3] = gh.ubar[1];
                de[NG - 1] = gh.dbar[0];
                de[NG - 2] = gh.dbar[1];
                de[NG - 3] = gh.dbar[1];
                let out =
                    outflow_ghosts_weno([ubar[n - 4], ubar[n - 3], ubar[n - 2], ubar[n - 1]], h);
                ue[NG + n] = out.ubar[0];
                ue[NG + n + 1] = out.ubar[1];
                ue[NG + n + 2] = out.ubar[1];
                de[NG + n] = out.dbar[0];
                de[NG + n + 1] = out.dbar[1];
                de[NG + n + 2] = out.dbar[1];
            }
        }
        // interior derivative averages refreshed from the averages:
        // difference of fourth-order interface point values
        let uedge = |i: usize| {
            // interface i in extended cell indexing: cells NG+i-2 .. NG+i+1
            let c = NG + i;
            (-ue[c - 2] + 7.0 * ue[c - 1] + 7.0 * ue[c] - ue[c + 1]) / 12.0
        };
        let interior = matches!(self.boundary, ScalarBoundary::Periodic);
        for j in 0..n {
            de[NG + j] = (uedge(j + 1) - uedge(j)) / h;
        }
        if interior {
            for k in 0..NG {
                de[NG - 1 - k] = de[NG + n - 1 - k];
                de[NG + n + k] = de[NG + k];
            }
        }
        (ue, de)
    }

    /// Assemble one stage: interface pairs and the operator value plus its
    /// time derivative. `midpoint` marks the second stage of the two-stage
    /// composition (boundary corrections applied there).
    fn assemble(
        &self,
        ubar: &[f64],
        edge: &[f64],
        ts: f64,
        dt: f64,
        midpoint: bool,
    ) -> Result<StageData> {
        let n = self.mesh.n;
        let h = self.mesh.h;
        let (ue, de) = self.ghosts(ubar, ts);
        self.counters.add_recon_sweep();

        let alpha = match self.cfg.recon {
            Recon::Minmod { alpha } => alpha,
            Recon::Hweno5 => 0.0,
        };
        // limited slope per cell (index shifted by 1: entry jj covers cell
        // jj - 1, including one ghost on each side)
        let slopes: Vec<f64> = if matches!(self.cfg.recon, Recon::Minmod { .. }) {
            (0..n + 2)
                .map(|jj| {
                    let c = NG + jj - 1;
                    let el = if jj >= 1 && jj - 1 < edge.len() {
                        edge[jj - 1]
                    } else {
                        ue[c]
                    };
                    let er = if jj < edge.len() { edge[jj] } else { ue[c] };
                    minmod_slope(ue[c - 1], ue[c], ue[c + 1], el, er, alpha, h)
                })
                .collect()
        } else {
            Vec::new()
        };

        let mut pairs: Vec<(f64, f64)> = exec::map_indexed(n + 1, |i| {
            let c = NG + i;
            let (ul, ur, dul, dur) = match self.cfg.recon {
                Recon::Hweno5 => {
                    let lv = hweno5_left_value(ue[c - 2], ue[c - 1], ue[c], de[c - 2], de[c], h);
                    let rv =
                        hweno5_right_value(ue[c - 1], ue[c], ue[c + 1], de[c - 1], de[c + 1], h);
                    // per-side slopes: biased edge values of the derivative
                    // field on smooth windows, the limited reconstruction
                    // derivative near discontinuities
                    let dul = if lv.is_smooth() {
                        edge_value_left_biased(de[c - 3], de[c - 2], de[c - 1], de[c])
                    } else {
                        lv.deriv
                    };
                    let dur = if rv.is_smooth() {
                        edge_value_right_biased(de[c - 1], de[c], de[c + 1], de[c + 2])
                    } else {
                        rv.deriv
                    };
                    (lv.value, rv.value, dul, dur)
                }
                Recon::Minmod { .. } => {
                    let sl = slopes[i];
                    let sr = slopes[i + 1];
                    (ue[c - 1] + 0.5 * h * sl, ue[c] - 0.5 * h * sr, sl, sr)
                }
            };
            match self.pair_mode {
                ScalarPairMode::Upwind => scalar_grp(self.flux, ul, ur, dul, dur),
                ScalarPairMode::CentralSmooth => {
                    let a = self.flux.fprime(0.5 * (ue[c - 1] + ue[c]));
                    linear_scalar_pair_central(a, ue[c - 1], ue[c], h)
                }
            }
        });
        self.counters.add_pairs((n + 1) as u64);

        // boundary-interface overrides for the IBVP
        if let ScalarBoundary::Inflow { g, g_prime } = &self.boundary {
            if midpoint && self.cfg.boundary_correction {
                let g3 = sampled_third_derivative(g, ts, dt);
                let (g_adj, gp_adj) = intermediate_stage_boundary(g(ts), g_prime(ts), g3, dt);
                pairs[0] = (g_adj, gp_adj);
                let fp1 = self.flux.fprime(pairs[1].0);
                if let Ok(ux1) = intermediate_stage_interior_derivative(
                    g_adj,
                    gp_adj,
                    self.flux.fprime(g_adj),
                    ubar[0],
                    ubar[1],
                    ubar[2],
                    h,
                ) {
                    pairs[1] = (pairs[1].0, -fp1 * ux1);
                }
            } else {
                pairs[0] = (g(ts), g_prime(ts));
            }
        }

        let fluxes: Vec<(f64, f64)> = pairs
            .iter()
            .map(|&(u0, ut)| (self.flux.f(u0), self.flux.fprime(u0) * ut))
            .collect();
        let mut l = vec![0.0; n];
        let mut dt_l = vec![0.0; n];
        for j in 0..n {
            l[j] = -(fluxes[j + 1].0 - fluxes[j].0) / h;
            dt_l[j] = -(fluxes[j + 1].1 - fluxes[j].1) / h;
        }
        Ok(StageData { l, dt_l, pairs })
    }

    /// Advance one step of size dt.
    pub fn step(&mut self, dt: f64) -> Result<()> {
        let n = self.mesh.n;
        match self.cfg.stepping {
            Stepping::TwoStage4 => {
                let s1 = self.assemble(&self.ubar, &self.edge, self.t, dt, false)?;
                let mut ustar = self.ubar.clone();
                let mut estar = self.edge.clone();
                for j in 0..n {
                    ustar[j] += 0.5 * dt * s1.l[j] + 0.125 * dt * dt * s1.dt_l[j];
                }
                for i in 0..=n {
                    estar[i] = s1.pairs[i].0 + 0.5 * dt * s1.pairs[i].1;
                }
                let s2 = self.assemble(&ustar, &estar, self.t + 0.5 * dt, dt, true)?;
                for j in 0..n {
                    self.ubar[j] += dt * s1.l[j] + dt * dt / 6.0 * (s1.dt_l[j] + 2.0 * s2.dt_l[j]);
                }
                for i in 0..=n {
                    self.edge[i] = s1.pairs[i].0 + dt * s2.pairs[i].1;
                }
            }
            Stepping::SingleStage2 => {
                let s1 = self.assemble(&self.ubar, &self.edge, self.t, dt, false)?;
                for j in 0..n {
                    self.ubar[j] += dt * s1.l[j] + 0.5 * dt * dt * s1.dt_l[j];
                }
                for i in 0..=n {
                    self.edge[i] = s1.pairs[i].0 + dt * s1.pairs[i].1;
                }
            }
            Stepping::Rk4Wrapper => {
                let l1 = self.mol_rhs(&self.ubar, self.t)?;
                let u2: Vec<f64> = (0..n).map(|j| self.ubar[j] + 0.5 * dt * l1.0[j]).collect();
                let l2 = self.mol_rhs(&u2, self.t + 0.5 * dt)?;
                let u3: Vec<f64> = (0..n).map(|j| self.ubar[j] + 0.5 * dt * l2.0[j]).collect();
                let l3 = self.mol_rhs(&u3, self.t + 0.5 * dt)?;
                let u4: Vec<f64> = (0..n).map(|j| self.ubar[j] + dt * l3.0[j]).collect();
                let l4 = self.mol_rhs(&u4, self.t + dt)?;
                for j in 0..n {
                    self.ubar[j] += dt / 6.0 * (l1.0[j] + 2.0 * l2.0[j] + 2.0 * l3.0[j] + l4.0[j]);
                }
                self.edge = l4.1;
            }
        }
        // keep the published derivative field consistent with the averages
        let (_, de) = self.ghosts(&self.ubar, self.t + dt);
        self.dbar.copy_from_slice(&de[NG..NG + n]);
        self.t += dt;
        Ok(())
    }

    /// Method-of-lines right-hand side with instantaneous Godunov fluxes;
    /// returns (L, interface values).
    fn mol_rhs(&self, ubar: &[f64], ts: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        let s = self.assemble(ubar, &self.edge, ts, 0.0, false)?;
        let vals = s.pairs.iter().map(|p| p.0).collect();
        Ok((s.l, vals))
    }

    pub fn run_until(&mut self, t_end: f64) -> Result<usize> {
        let mut steps = 0;
        while self.t < t_end - 1e-14 {
            let dt = self.dt().min(t_end - self.t);
            self.step(dt)?;
            steps += 1;
        }
        Ok(steps)
    }

    pub fn total_mass(&self) -> f64 {
        self.ubar.iter().sum::<f64>() * self.mesh.h
    }
}

/// Five-point Gauss-Legendre average of `f` over (a, b).
pub fn gauss5_average(f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    const XS: [f64; 5] = [
        -0.906179845938664,
        -0.5384693101056831,
        0.0,
        0.5384693101056831,
        0.906179845938664,
    ];
    const WS: [f64; 5] = [
        0.23692688505618908,
        0.47862867049936647,
        0.5688888888888889,
        0.47862867049936647,
        0.23692688505618908,
    ];
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut s = 0.0;
    for k in 0..5 {
        s += WS[k] * f(mid + half * XS[k]);
    }
    0.5 * s
}
