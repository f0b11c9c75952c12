//! Flux-level utilities: the (F, dF/dt) pair for an interface and the
//! linear-in-time reconstruction of a flux from its time integrals.

use super::InterfacePair;
use crate::gas::{Conserved, DuctGeometry, GasConstants};

/// Physical Euler flux and its time derivative at an interface, with
/// cross-section weighting. The derivative follows from the primitive
/// rates by the chain rule.
pub fn interface_flux_pair(
    pair: &InterfacePair,
    geom: DuctGeometry,
    g: GasConstants,
) -> (Conserved, Conserved) {
    let w = pair.value;
    let d = pair.ddt;
    let gm1 = g.gamma - 1.0;
    let e_tot = w.p / gm1 + 0.5 * w.rho * w.u * w.u;
    let de_tot = d.p / gm1 + 0.5 * d.rho * w.u * w.u + w.rho * w.u * d.u;
    let f = Conserved {
        rho: w.rho * w.u,
        mom: w.rho * w.u * w.u + w.p,
        ener: w.u * (e_tot + w.p),
    };
    let df = Conserved {
        rho: d.rho * w.u + w.rho * d.u,
        mom: d.rho * w.u * w.u + 2.0 * w.rho * w.u * d.u + d.p,
        ener: d.u * (e_tot + w.p) + w.u * (de_tot + d.p),
    };
    (f * geom.area, df * geom.area)
}

/// Recover the flux value and time derivative at the start of a step from
/// the flux integrals over (0, dt/2) and (0, dt):
/// `F_n = (4 I_half - I_full) / dt`, `dF_n = 4 (I_full - 2 I_half) / dt^2`.
/// Exact whenever the flux is linear in time.
pub fn flux_time_linearize(int_half: f64, int_full: f64, dt: f64) -> (f64, f64) {
    let f0 = (4.0 * int_half - int_full) / dt;
    let f1 = 4.0 * (int_full - 2.0 * int_half) / (dt * dt);
    (f0, f1)
}
