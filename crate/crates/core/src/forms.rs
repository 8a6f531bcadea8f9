//! Differential forms on the plane with rational-function coefficients.

use std::fmt;

use crate::algebra::{poly_gcd, poly_lcm, MultiPoly, RationalFunction, Var};
use crate::error::{AlgebraError, FormError};
use crate::scalar::ExactField;

/// `a dx + b dy`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OneForm<K> {
    pub a: RationalFunction<K>,
    pub b: RationalFunction<K>,
}

/// `c dx∧dy`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TwoForm<K> {
    pub c: RationalFunction<K>,
}

/// `p ∂/∂x + q ∂/∂y`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VectorField<K> {
    pub p: RationalFunction<K>,
    pub q: RationalFunction<K>,
}

/// `(x, y) ↦ (first(x, y), second(x, y))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalMap<K> {
    pub first: RationalFunction<K>,
    pub second: RationalFunction<K>,
}

/// Polynomial representative `factor · (a dx + b dy)` of a one-form with
/// `gcd(a, b) = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClearedForm<K> {
    pub a: MultiPoly<K>,
    pub b: MultiPoly<K>,
    pub factor: RationalFunction<K>,
}

impl<K: ExactField> OneForm<K> {
    pub fn new(a: RationalFunction<K>, b: RationalFunction<K>) -> Self {
        Self { a, b }
    }

    pub fn from_polys(a: MultiPoly<K>, b: MultiPoly<K>) -> Self {
        Self { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        Self { a: RationalFunction::zero(), b: RationalFunction::zero() }
    }

    pub fn dx() -> Self {
        Self { a: RationalFunction::one(), b: RationalFunction::zero() }
    }

    pub fn dy() -> Self {
        Self { a: RationalFunction::zero(), b: RationalFunction::one() }
    }

    /// `df = f_x dx + f_y dy`.
    pub fn differential(f: &RationalFunction<K>) -> Self {
        Self { a: f.partial(Var::X), b: f.partial(Var::Y) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn coeff(&self, v: Var) -> &RationalFunction<K> {
        match v {
            Var::X => &self.a,
            Var::Y => &self.b,
        }
    }

    pub fn scale(&self, f: &RationalFunction<K>) -> Self {
        Self { a: &self.a * f, b: &self.b * f }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { a: &self.a + &other.a, b: &self.b + &other.b }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { a: &self.a - &other.a, b: &self.b - &other.b }
    }

    pub fn neg(&self) -> Self {
        Self { a: -&self.a, b: -&self.b }
    }

    /// `dω = (∂b/∂x − ∂a/∂y) dx∧dy`.
    pub fn exterior_derivative(&self) -> TwoForm<K> {
        TwoForm { c: &self.b.partial(Var::X) - &self.a.partial(Var::Y) }
    }

    pub fn is_closed(&self) -> bool {
        self.exterior_derivative().is_zero()
    }

    /// `self ∧ other`.
    pub fn wedge(&self, other: &Self) -> TwoForm<K> {
        TwoForm { c: &(&self.a * &other.b) - &(&other.a * &self.b) }
    }

    /// `X = −b ∂/∂x + a ∂/∂y`, so that `ω(X) = 0`.
    pub fn dual_vector_field(&self) -> Result<VectorField<K>, FormError> {
        if self.is_zero() {
            return Err(FormError::ZeroForm);
        }
        Ok(VectorField { p: -&self.b, q: self.a.clone() })
    }

    /// `ω(X)`.
    pub fn contract(&self, field: &VectorField<K>) -> RationalFunction<K> {
        &(&self.a * &field.p) + &(&self.b * &field.q)
    }

    /// `σ*ω = (a∘σ) dσ₁ + (b∘σ) dσ₂`, without any clearing.
    pub fn pullback(&self, map: &RationalMap<K>) -> Result<Self, AlgebraError> {
        let a = self.a.compose(&map.first, &map.second)?;
        let b = self.b.compose(&map.first, &map.second)?;
        let d1 = Self::differential(&map.first);
        let d2 = Self::differential(&map.second);
        Ok(d1.scale(&a).add(&d2.scale(&b)))
    }

    /// True iff `ω₁ ∧ ω₂ ≡ 0`.
    pub fn same_foliation(&self, other: &Self) -> bool {
        self.wedge(other).is_zero()
    }

    /// `f` with `self = f·other`, if the forms are proportional.
    pub fn ratio_to(&self, other: &Self) -> Option<RationalFunction<K>> {
        if other.is_zero() || !self.same_foliation(other) {
            return None;
        }
        if !other.a.is_zero() {
            Some(&self.a / &other.a)
        } else {
            Some(&self.b / &other.b)
        }
    }

    /// Exchanges the roles of the two coordinates.
    pub fn swap_coords(&self) -> Self {
        Self { a: self.b.swap_vars(), b: self.a.swap_vars() }
    }

    /// Writes `self = factor · (a dx + b dy)` with coprime polynomials `a, b`.
    /// The zero form yields `a = b = 0` and factor one.
    pub fn clear_denominators(&self) -> ClearedForm<K> {
        if self.is_zero() {
            return ClearedForm { a: MultiPoly::zero(), b: MultiPoly::zero(), factor: RationalFunction::one() };
        }
        let l = poly_lcm(self.a.den(), self.b.den());
        let a = self.a.num() * &l.exact_div(self.a.den()).unwrap();
        let b = self.b.num() * &l.exact_div(self.b.den()).unwrap();
        let g = poly_gcd(&a, &b);
        let a = a.exact_div(&g).unwrap();
        let b = b.exact_div(&g).unwrap();
        let factor = RationalFunction::new(g, l).expect("lcm of denominators is nonzero");
        ClearedForm { a, b, factor }
    }

    pub fn named<'a>(&'a self, names: (&'a str, &'a str)) -> NamedForm<'a, K> {
        NamedForm { form: self, names }
    }
}

impl<K: ExactField> TwoForm<K> {
    pub fn new(c: RationalFunction<K>) -> Self {
        Self { c }
    }

    pub fn zero() -> Self {
        Self { c: RationalFunction::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { c: &self.c + &other.c }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { c: &self.c - &other.c }
    }

    pub fn scale(&self, f: &RationalFunction<K>) -> Self {
        Self { c: &self.c * f }
    }

    /// `σ*(c dx∧dy) = (c∘σ)·det Dσ dx∧dy`.
    pub fn pullback(&self, map: &RationalMap<K>) -> Result<Self, AlgebraError> {
        let c = self.c.compose(&map.first, &map.second)?;
        Ok(Self { c: &c * &map.jacobian_determinant() })
    }
}

impl<K: ExactField> VectorField<K> {
    /// Divergence `∂p/∂x + ∂q/∂y`, i.e. the trace of the Jacobian.
    pub fn divergence(&self) -> RationalFunction<K> {
        &self.p.partial(Var::X) + &self.q.partial(Var::Y)
    }
}

impl<K: ExactField> RationalMap<K> {
    pub fn new(first: RationalFunction<K>, second: RationalFunction<K>) -> Self {
        Self { first, second }
    }

    pub fn identity() -> Self {
        Self { first: RationalFunction::x(), second: RationalFunction::y() }
    }

    pub fn jacobian_determinant(&self) -> RationalFunction<K> {
        let a = self.first.partial(Var::X);
        let b = self.first.partial(Var::Y);
        let c = self.second.partial(Var::X);
        let d = self.second.partial(Var::Y);
        &(&a * &d) - &(&b * &c)
    }
}

/// Display adaptor printing `(a)*dx + (b)*dy` with custom coordinate names.
pub struct NamedForm<'a, K> {
    form: &'a OneForm<K>,
    names: (&'a str, &'a str),
}

fn write_coeff<K: ExactField>(
    f: &mut fmt::Formatter<'_>,
    c: &RationalFunction<K>,
    names: (&str, &str),
    diff: &str,
) -> fmt::Result {
    if c.as_constant().is_some_and(|k| k.is_one()) {
        write!(f, "{diff}")
    } else {
        write!(f, "({})*{diff}", c.named(names))
    }
}

impl<K: ExactField> fmt::Display for NamedForm<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dx = format!("d{}", self.names.0);
        let dy = format!("d{}", self.names.1);
        match (self.form.a.is_zero(), self.form.b.is_zero()) {
            (true, true) => write!(f, "0*{dx}"),
            (false, true) => write_coeff(f, &self.form.a, self.names, &dx),
            (true, false) => write_coeff(f, &self.form.b, self.names, &dy),
            (false, false) => {
                write_coeff(f, &self.form.a, self.names, &dx)?;
                write!(f, " + ")?;
                write_coeff(f, &self.form.b, self.names, &dy)
            }
        }
    }
}

impl<K: ExactField> fmt::Display for OneForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.named(("x", "y")), f)
    }
}

impl<K: ExactField> fmt::Display for TwoForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*dx^dy", self.c)
    }
}
