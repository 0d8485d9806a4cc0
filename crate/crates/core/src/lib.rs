//! Exact Gröbner bases for weight and matrix preorders, graded Betti numbers
//! and explicit Betti-number bounds.
//!
//! Everything is generic over the coefficient [`Field`]; the aliases below
//! name the two instantiations used throughout.

pub mod betti;
pub mod bounds;
pub mod error;
pub mod field;
pub mod groebner;
pub mod homog;
pub mod ideal_file;
pub mod json;
pub mod lambda;
pub mod linalg;
pub mod oracle;
pub mod order;
pub mod poly;
pub mod relative;
pub mod sample;

pub use error::{Error, Result};
pub use num_bigint::BigUint;
pub use field::{Field, FieldKind, Fp, Rational};
pub use order::{MatrixOrder, MonomialOrder, WeightOrder};
pub use poly::{BiDegree, Monomial, Poly, RingCtx};

/// Exact rationals.
pub type Q = Rational;
/// The default prime field for randomized work.
pub type F32003 = Fp<32003>;
pub type QPoly = Poly<Q>;
pub type FpPoly = Poly<F32003>;
