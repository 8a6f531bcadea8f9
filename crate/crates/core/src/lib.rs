//! Exact computations with polynomial holomorphic foliations of the plane.

pub mod algebra;
pub mod blowup;
pub mod error;
pub mod foliation;
pub mod holonomy;
pub mod parser;
pub mod forms;
pub mod scalar;
pub mod triples;

pub use algebra::{GaussianRational, MultiPoly, RationalFunction, UniPoly, Var};
pub use scalar::{ExactField, Scalar};

pub type Poly = MultiPoly<GaussianRational>;
pub type RatFun = RationalFunction<GaussianRational>;
pub type Form = forms::OneForm<GaussianRational>;
pub type Mobius = holonomy::MobiusMap<num_complex::Complex64>;
pub type ExactMobius = holonomy::MobiusMap<GaussianRational>;
