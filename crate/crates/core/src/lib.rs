//! Exact representations `Φ_{a,b,c}` of the singular braid monoid `SM_n`
//! into group algebras, with bounded kernel and faithfulness analysis.
//!
//! The core is generic over [`scalars::Scalar`]. The aliases below fix the
//! scalar type to [`scalars::ScalarValue`], a rational or a Laurent
//! polynomial in `t` decided at parse time.

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod error;
pub mod phi;
pub mod random;
pub mod reps;
pub mod scalars;
pub mod words;

pub use error::{Error, Result};

pub type Rational = scalars::Rational;
pub type Laurent = scalars::LaurentPoly<scalars::Rational>;
pub type Value = scalars::ScalarValue;
pub type Rep = reps::BraidRep<Value>;
pub type Element = algebra::AlgebraElement<Value>;
pub type Params = phi::PhiParams<Value>;
pub type PhiMap = phi::Phi<Value>;
