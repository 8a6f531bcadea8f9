//! Exact arithmetic: Gaussian rationals, bivariate polynomials, rational
//! functions, gcds, resultants and a little linear algebra.

pub mod gaussian;
pub mod gcd;
pub mod linalg;
pub mod modular;
pub mod poly;
pub mod ratfun;
pub mod resultant;
pub mod roots;
pub mod univariate;

pub use gaussian::{is_rational_square, ArithOp, GaussianRational};
pub use gcd::{poly_gcd, poly_lcm};
pub use poly::{Monomial, MultiPoly, Var};
pub use ratfun::RationalFunction;
pub use resultant::resultant;
pub use univariate::UniPoly;
