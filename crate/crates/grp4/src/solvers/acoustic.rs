//! Acoustic approximation: linearization of the GRP around the local
//! Riemann intermediate state, valid for weak waves.

use super::{InterfacePair, SlopedState};
use crate::gas::{DuctGeometry, GasConstants, Primitive, Slope};

/// One-sided Lax-Wendroff derivative of the duct Euler system: all waves
/// travel to one side of the t-axis and the interface evolves with the
/// smooth one-sided data.
pub fn upwind_one_sided(w: Primitive, dw: Slope, geom: DuctGeometry, g: GasConstants) -> Slope {
    let ga = geom.log_derivative();
    let c2 = g.gamma * w.p / w.rho;
    Slope {
        rho: -(w.u * dw.rho + w.rho * dw.u) - ga * w.rho * w.u,
        u: -(w.u * dw.u + dw.p / w.rho),
        p: -(w.u * dw.p + w.rho * c2 * dw.u) - ga * w.rho * c2 * w.u,
    }
}

/// Acoustic interface solver for the duct Euler equations.
///
/// `u0state` is the state the system is linearized around (either a common
/// state for continuous data or the local Riemann intermediate state).
/// The rho derivative is taken from the side the contact moves toward;
/// at u0 = 0 the left side is used.
pub fn acoustic_pair_euler(
    left: SlopedState,
    right: SlopedState,
    u0state: Primitive,
    geom: DuctGeometry,
    g: GasConstants,
) -> InterfacePair {
    let r0 = u0state.rho;
    let u0 = u0state.u;
    let c0 = u0state.sound_speed(g);
    let ga = geom.log_derivative();

    if u0 - c0 > 0.0 {
        return InterfacePair {
            value: u0state,
            ddt: upwind_one_sided(u0state, left.dw, geom, g),
        };
    }
    if u0 + c0 < 0.0 {
        return InterfacePair {
            value: u0state,
            ddt: upwind_one_sided(u0state, right.dw, geom, g),
        };
    }

    let wplus = (u0 + c0) * (left.dw.u + left.dw.p / (r0 * c0));
    let wminus = (u0 - c0) * (right.dw.u - right.dw.p / (r0 * c0));
    let ut = -0.5 * (wplus + wminus);
    let pt = -0.5 * r0 * c0 * (wplus - wminus) - ga * r0 * c0 * c0 * u0;
    let rt = if u0 >= 0.0 {
        (pt + u0 * (left.dw.p - c0 * c0 * left.dw.rho)) / (c0 * c0)
    } else {
        (pt + u0 * (right.dw.p - c0 * c0 * right.dw.rho)) / (c0 * c0)
    };
    InterfacePair {
        value: u0state,
        ddt: Slope {
            rho: rt,
            u: ut,
            p: pt,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gas::GasConstants;

    const G: GasConstants = GasConstants {
        gamma: 1.4,
        mu2: 0.4 / 2.4,
    };

    #[test]
    fn zero_slopes_constant_area_is_steady() {
        let w = Primitive::new(1.0, 0.4, 1.0);
        let s = SlopedState::new(w, Slope::default());
        let pair = acoustic_pair_euler(s, s, w, DuctGeometry::PLANAR, G);
        assert_eq!(pair.ddt.rho, 0.0);
        assert_eq!(pair.ddt.u, 0.0);
        assert_eq!(pair.ddt.p, 0.0);
    }

    #[test]
    fn area_variation_drives_pressure() {
        // zero slopes, dA != 0, u0 != 0: p_t = -(A'/A) rho0 c0^2 u0, u_t = 0
        let w = Primitive::new(1.0, 0.4, 1.0);
        let s = SlopedState::new(w, Slope::default());
        let geom = DuctGeometry {
            area: 2.0,
            darea: 0.6,
        };
        let pair = acoustic_pair_euler(s, s, w, geom, G);
        let c0 = w.sound_speed(G);
        assert!((pair.ddt.p + 0.3 * w.rho * c0 * c0 * w.u).abs() < 1e-15);
        assert_eq!(pair.ddt.u, 0.0);
    }

    #[test]
    fn smooth_data_matches_exact_lax_wendroff() {
        // equal states and slopes: the pair must equal the exact smooth
        // time derivative of the equations
        let w = Primitive::new(1.2, -0.3, 0.9);
        let dw = Slope {
            rho: 0.4,
            u: -0.2,
            p: 0.3,
        };
        let s = SlopedState::new(w, dw);
        let pair = acoustic_pair_euler(s, s, w, DuctGeometry::PLANAR, G);
        let exact = upwind_one_sided(w, dw, DuctGeometry::PLANAR, G);
        assert!((pair.ddt.rho - exact.rho).abs() < 1e-14);
        assert!((pair.ddt.u - exact.u).abs() < 1e-14);
        assert!((pair.ddt.p - exact.p).abs() < 1e-14);
    }

    #[test]
    fn galilean_shift_constant_area() {
        // adding a constant velocity shifts u0 and transforms ddt
        // consistently: in the shifted frame rho_t etc. pick up advection
        let w = Primitive::new(1.0, 0.1, 1.0);
        let dwl = Slope {
            rho: 0.2,
            u: 0.1,
            p: -0.3,
        };
        let dwr = Slope {
            rho: -0.1,
            u: 0.4,
            p: 0.2,
        };
        let pair = acoustic_pair_euler(
            SlopedState::new(w, dwl),
            SlopedState::new(w, dwr),
            w,
            DuctGeometry::PLANAR,
            G,
        );
        let v = 0.25;
        let wv = Primitive::new(w.rho, w.u + v, w.p);
        let pairv = acoustic_pair_euler(
            SlopedState::new(wv, dwl),
            SlopedState::new(wv, dwr),
            wv,
            DuctGeometry::PLANAR,
            G,
        );
        // frame change: d/dt|new = d/dt|old - V d/dx, with the spatial
        // derivative at the interface taken from the upwinded side used by
        // the rho formula; u/p use the acoustic combinations. Verify via
        // the linearized system directly: w_t(new) + (A(w0)+V I) w_x = 0.
        // Here we check the u and p components, which are side-symmetric.
        let c0 = w.sound_speed(G);
        // characteristic strengths are frame-invariant; only the advection
        // speeds shift: (u0 +/- c0) -> (u0 + V +/- c0).
        let wplus = dwl.u + dwl.p / (w.rho * c0);
        let wminus = dwr.u - dwr.p / (w.rho * c0);
        let dut = pairv.ddt.u - pair.ddt.u;
        let dpt = pairv.ddt.p - pair.ddt.p;
        assert!((dut + 0.5 * v * (wplus + wminus)).abs() < 1e-12);
        assert!((dpt + 0.5 * v * w.rho * c0 * (wplus - wminus)).abs() < 1e-12);
    }

    #[test]
    fn mirror_symmetry() {
        let l = SlopedState::new(
            Primitive::new(1.0, 0.1, 1.0),
            Slope {
                rho: 0.2,
                u: 0.1,
                p: -0.3,
            },
        );
        let r = SlopedState::new(
            Primitive::new(1.0, 0.1, 1.0),
            Slope {
                rho: -0.1,
                u: 0.4,
                p: 0.2,
            },
        );
        let w0 = Primitive::new(1.0, 0.1, 1.0);
        let pair = acoustic_pair_euler(l, r, w0, DuctGeometry::PLANAR, G);
        let pm = acoustic_pair_euler(
            r.mirrored(),
            l.mirrored(),
            Primitive::new(w0.rho, -w0.u, w0.p),
            DuctGeometry::PLANAR,
            G,
        );
        assert!((pair.ddt.u + pm.ddt.u).abs() < 1e-14);
        assert!((pair.ddt.p - pm.ddt.p).abs() < 1e-14);
        assert!((pair.ddt.rho - pm.ddt.rho).abs() < 1e-14);
    }
}
