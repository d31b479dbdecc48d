//! Exact weight-graded rational cohomology of unordered configuration spaces
//! `UConf_n(Σ_g)` of closed orientable surfaces.
//!
//! Two independent routes are provided:
//!
//! * [`qformula`] expands a closed generating series with coefficients in the
//!   representation ring of sp(2g) and reads off, for each `n`, the
//!   decomposition of every weight-graded piece into irreducibles;
//! * [`dga`] builds a finite-dimensional differential graded algebra model and
//!   computes its cohomology by exact sparse linear algebra ([`linalg`]).
//!
//! The two must agree exactly; [`verify`] compares them.

pub mod bigjson;
pub mod dga;
pub mod error;
pub mod linalg;
pub mod qformula;
pub mod repr;
pub mod series;
pub mod verify;

pub use error::{FormulaError, OracleError, ReprError, SeriesError, VerifyError};
