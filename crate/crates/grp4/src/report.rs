//! Error norms and convergence reporting.
