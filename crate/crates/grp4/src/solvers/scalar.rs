//! Scalar nonlinear GRP for convex fluxes (advection, Burgers):
//! Godunov interface value plus the upwinded time derivative.

/// Flux description for a scalar conservation law u_t + f(u)_x = 0.
#[derive(Clone, Copy, Debug)]
pub enum ScalarFlux {
    /// f(u) = a u
    Advection { a: f64 },
    /// f(u) = u^2 / 2
    Burgers,
}

impl ScalarFlux {
    pub fn f(&self, u: f64) -> f64 {
        match *self {
            ScalarFlux::Advection { a } => a * u,
            ScalarFlux::Burgers => 0.5 * u * u,
        }
    }

    pub fn fprime(&self, u: f64) -> f64 {
        match *self {
            ScalarFlux::Advection { a } => a,
            ScalarFlux::Burgers => u,
        }
    }

    pub fn fsecond(&self, _u: f64) -> f64 {
        match *self {
            ScalarFlux::Advection { .. } => 0.0,
            ScalarFlux::Burgers => 1.0,
        }
    }
}

/// Scalar GRP: exact interface value of the Riemann solution at xi = 0 and
/// the instantaneous derivative u_t = -f'(u0) u_x taken from the side all
/// characteristics at the interface come from. A transonic rarefaction
/// pins the value at the sonic state where u_t = 0.
pub fn scalar_grp(flux: ScalarFlux, ul: f64, ur: f64, dul: f64, dur: f64) -> (f64, f64) {
    match flux {
        ScalarFlux::Advection { a } => super::linear::linear_scalar_pair(a, 0.0, ul, ur, dul, dur),
        ScalarFlux::Burgers => {
            if ul > ur {
                // shock with speed s = (ul + ur)/2
                let s = 0.5 * (ul + ur);
                if s > 0.0 {
                    (ul, -ul * dul)
                } else if s < 0.0 {
                    (ur, -ur * dur)
                } else {
                    // stationary shock: the flux pair is one-sided; pick the
                    // side with the larger characteristic speed magnitude
                    if ul.abs() >= ur.abs() {
                        (ul, -ul * dul)
                    } else {
                        (ur, -ur * dur)
                    }
                }
            } else {
                // rarefaction
                if ul >= 0.0 {
                    (ul, -ul * dul)
                } else if ur <= 0.0 {
                    (ur, -ur * dur)
                } else {
                    // transonic: value at the sonic point, f'(u0) = 0
                    (0.0, 0.0)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn burgers_shock_and_fan() {
        // right-moving shock takes the left pair
        let (u0, ut) = scalar_grp(ScalarFlux::Burgers, 2.0, 0.5, 0.3, 0.9);
        assert_eq!(u0, 2.0);
        assert_eq!(ut, -0.6);
        // transonic fan
        let (u0, ut) = scalar_grp(ScalarFlux::Burgers, -1.0, 1.0, 0.3, 0.9);
        assert_eq!(u0, 0.0);
        assert_eq!(ut, 0.0);
        // supersonic fan from the left
        let (u0, ut) = scalar_grp(ScalarFlux::Burgers, 1.0, 2.0, 0.5, 0.9);
        assert_eq!(u0, 1.0);
        assert_eq!(ut, -0.5);
    }

    #[test]
    fn smooth_data_is_lax_wendroff() {
        let (u0, ut) = scalar_grp(ScalarFlux::Burgers, 1.5, 1.5, 0.4, 0.4);
        assert_eq!(u0, 1.5);
        assert!((ut + 1.5 * 0.4).abs() < 1e-15);
    }
}
