//! Determinant and exact inverse of cyclic nonadiagonal matrices.
//!
//! A cyclic nonadiagonal matrix has nonzero entries only on the main
//! diagonal, four super- and four subdiagonals, plus six corner cells that
//! wrap around. [`factorize`] computes a Doolittle LU factorization that
//! keeps this structure; [`invert`] builds the inverse from it column by
//! column. Divisors that vanish are replaced by a symbol `t` and all
//! arithmetic runs over rational functions in `t` ([`Scalar`]) until the
//! final substitution `t = 0`.

pub mod band;
pub mod cli;
pub mod dense;
pub mod error;
pub mod factor;
pub mod field;
pub mod inverse;
pub mod io;
pub mod oracle;
pub mod scalar;
pub mod seq;

pub use band::{Band, CyclicNonadiagonal, MIN_ORDER, MIN_STRUCTURED_ORDER};
pub use dense::DenseMatrix;
pub use error::{Error, Result};
pub use factor::{factorize, LuFactors, Substitution};
pub use field::Field;
pub use inverse::{anti_inverse, invert, InverseResult};
pub use oracle::{bareiss_det, gauss_jordan_inverse, OracleResult};
pub use scalar::{Poly, Scalar};
pub use seq::Seq;
