//! Exact and extended-precision toolkit for the classical calculus of
//! finite differences: series summation, convergence acceleration,
//! fractional-index interpolation, and algebraic root analysis.
//!
//! Everything is built on two number types: exact `BigRational` arithmetic
//! wherever a computation stays rational, and the arbitrary-precision
//! [`BigDecimal`] for the evaluation layer. Operations report the terms
//! they used and the size of the smallest term, so callers can judge how
//! much accuracy an asymptotic tail actually delivered.

pub mod acceleration;
pub mod decimal;
pub mod differences;
pub mod interpolation;
pub mod numbers;
pub mod poly;
pub mod rational;
pub mod fractions;
pub mod roots;
pub mod series;
pub mod summation;

pub use decimal::BigDecimal;
pub use num_rational::BigRational;
pub use poly::Polynomial;
