//! Exact tools for proper polynomial pairs, their tridiagonal realizations,
//! and the moment functionals whose orthogonal polynomials they generate.

pub mod algebra;
pub mod census;
pub mod cli;
pub mod functional;
pub mod io;
pub mod realization;
pub mod rng;
pub mod tridiagonal;
