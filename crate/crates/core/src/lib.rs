//! Exact determinants and characteristic polynomials over commutative rings
//! with unit.
//!
//! The main entry points are [`pipeline::determinant`] and
//! [`pipeline::char_poly`], which use only additions, subtractions and
//! multiplications and are organized as a shallow straight-line program:
//! `O(n^4 log n)` operations in `O((log n)^2)` stages. Four classical
//! algorithms in [`baselines`] serve as cross-checks, and [`ring::Counted`]
//! measures operation counts and stage depth of any run.
//!
//! ```
//! use ringdet::{linalg::Matrix, pipeline::determinant, ring::{Ring, Zmod}};
//!
//! let z4 = Zmod::new(4).unwrap();
//! let a = Matrix::from_fn(2, 2, |i, j| z4.from_i64([[1, 2], [3, 4]][i][j]));
//! assert_eq!(determinant(&z4, &a).unwrap(), 2); // -2 mod 4
//! ```

pub mod algorithm;
pub mod baselines;
pub mod checks;
mod doubling;
pub mod error;
pub mod io;
pub mod linalg;
pub mod par;
pub mod pipeline;
pub mod random;
pub mod report;
pub mod ring;
pub mod series;

pub use algorithm::Algorithm;
pub use doubling::powers_by_doubling;
pub use error::{Error, ErrorKind, Result, RingError};
pub use linalg::Matrix;
pub use pipeline::CharPoly;
pub use ring::{Ring, RingDescriptor};
pub use series::TruncPoly;
