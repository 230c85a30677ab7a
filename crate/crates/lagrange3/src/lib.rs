//! Exact continued-fraction arithmetic, two-letter word combinatorics and
//! renormalization, and rigorous classification of cut values against the
//! constant 3.
//!
//! Everything here is exact: integers are arbitrary precision, quadratic
//! surds carry their coefficients, and infinite tails are represented either
//! symbolically (eventually periodic) or by rigorous interval enclosures. No
//! classification ever comes from floating point.

pub mod cf;
pub mod constructions;
pub mod cuts;
pub mod interval;
pub mod markov;
pub mod quad;
pub mod suites;
pub mod words;

pub use cf::{eval_cf, mobius_apply, periodic_value, tail_enclosure, CfWord};
pub use interval::Interval;
pub use quad::Quad;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub use num_bigint::BigInt;
