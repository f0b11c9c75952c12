//! Kinetic interface solver for linear advection.
