//! Exact arithmetic foundation for torus polynomials over the Boolean cube.
//!
//! A torus polynomial is a real polynomial restricted to `{0,1}^n` and
//! evaluated modulo one. Everything here is exact: coefficients are
//! arbitrary-precision rationals, torus values live in `[0,1)`, and the
//! approximation error of a polynomial against a Boolean function is a
//! rational computed by exhaustive evaluation.

pub mod approx;
pub mod boolean;
pub mod error;
pub mod json;
pub mod poly;
pub mod primes;
pub mod rational;
pub mod torus;

pub use boolean::{BooleanFunction, SymmetricProfile};
pub use error::CoreError;
pub use poly::field::FieldPolynomial;
pub use poly::integer::{IntegerPolynomial, UnivariateIntPolynomial};
pub use poly::multilinear::MultilinearTorusPolynomial;
pub use poly::nonclassical::NonclassicalPolynomial;
pub use poly::symmetric::SymmetricTorusPolynomial;
pub use rational::Rational;
pub use torus::TorusValue;
