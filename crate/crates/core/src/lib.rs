//! Exact truncated formal power series over Gaussian rationals, with the combinatorial
//! Fourier and Legendre transforms of generating series of graphs and a brute-force pairing
//! oracle that recounts their coefficients.

pub mod action;
pub mod error;
pub mod fourier;
pub mod laurent;
pub mod legendre;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod truncation;

pub use error::{Error, Result};
pub use laurent::{residue_compose_check, LaurentSeries};
pub use monomial::{Monomial, Symbol};
pub use poly::CoefficientPoly;
pub use scalar::Scalar;
pub use series::{lagrange_solve, Series, Var};
pub use truncation::{Filter, Grading, TruncationCtx};
