use thiserror::Error;

/// Errors surfaced by the solver library.
#[derive(Debug, Clone, Error)]
pub enum SolverError {
    #[error("non-positive state in {context}: rho = {rho:.6e}, p = {p:.6e}")]
    NonPositive {
        rho: f64,
        p: f64,
        context: &'static str,
    },

    #[error("vacuum forms in the Riemann problem (psi_l - phi_r <= 0)")]
    Vacuum,

    #[error("pressure iteration did not converge within {iters} iterations (residual {residual:.3e})")]
    NoConvergence { iters: usize, residual: f64 },

    #[error("degenerate linear system in GRP solver (det = {det:.3e})")]
    DegenerateSystem { det: f64 },

    #[error("matrix is not diagonalizable with real eigenvalues")]
    EigenDecomposition,

    #[error("inflow boundary is degenerate: |f'(g)| = {fprime:.3e}")]
    InflowDegeneracy { fprime: f64 },

    #[error("solver failure at step {step}, cell {cell}: {source}")]
    AtCell {
        step: usize,
        cell: usize,
        #[source]
        source: Box<SolverError>,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, SolverError>;

impl SolverError {
    pub fn at_cell(self, step: usize, cell: usize) -> SolverError {
        SolverError::AtCell {
            step,
            cell,
            source: Box::new(self),
        }
    }
}
