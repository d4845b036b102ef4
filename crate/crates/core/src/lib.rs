//! Exact algebra for Parke-Taylor sums, plate functions, invariant
//! polynomials on six points, and the lattice polytopes behind them.

pub mod checks;
pub mod cone;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod pt_sum;
pub mod rational;

pub use error::{Error, Result};
