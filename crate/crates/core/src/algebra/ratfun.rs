//! Bivariate rational functions in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::poly_gcd;
use super::poly::{MultiPoly, Var};
use crate::error::AlgebraError;
use crate::scalar::ExactField;

/// `num / den` with `gcd(num, den) = 1` and `den` monic in graded-lex order.
///
/// The zero function is stored as `0 / 1`, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction<K> {
    num: MultiPoly<K>,
    den: MultiPoly<K>,
}

impl<K: ExactField> RationalFunction<K> {
    /// Builds and normalizes `num / den`.
    pub fn new(num: MultiPoly<K>, den: MultiPoly<K>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MultiPoly<K>, den: MultiPoly<K>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
            }
        };
        let lc = den.leading_coeff().unwrap().inverse().unwrap();
        if lc.is_one() {
            Self { num, den }
        } else {
            Self { num: num.scale(&lc), den: den.scale(&lc) }
        }
    }

    /// Scales a coprime pair so that the denominator is monic.
    fn monic_den(num: MultiPoly<K>, den: MultiPoly<K>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lc = den.leading_coeff().unwrap().inverse().unwrap();
        if lc.is_one() {
            Self { num, den }
        } else {
            Self { num: num.scale(&lc), den: den.scale(&lc) }
        }
    }

    pub fn zero() -> Self {
        Self { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self { num: MultiPoly::constant(c), den: MultiPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(K::from_i64(n).unwrap())
    }

    pub fn from_poly(p: MultiPoly<K>) -> Self {
        Self { num: p, den: MultiPoly::one() }
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn num(&self) -> &MultiPoly<K> {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly<K> {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly<K>, MultiPoly<K>) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&MultiPoly<K>> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<K> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.num.depends_on(v) || self.den.depends_on(v)
    }

    /// Re-applies the normal form; idempotent.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        // numerator and denominator stay coprime
        Self { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Quotient rule, normalized.
    pub fn partial(&self, v: Var) -> Self {
        if self.den.is_constant() {
            return Self::normalized(self.num.derivative(v), self.den.clone());
        }
        let dv = self.den.derivative(v);
        if dv.is_zero() {
            return Self::normalized(self.num.derivative(v), self.den.clone());
        }
        // with g = gcd(d, d′) and e = d/g the result is (n′e − n·d′/g)/(d·e),
        // whose numerator is already coprime to e
        let g = poly_gcd(&self.den, &dv);
        let e = self.den.exact_div(&g).expect("gcd divides");
        let n = &(&self.num.derivative(v) * &e) - &(&self.num * &dv.exact_div(&g).expect("gcd divides"));
        if n.is_zero() {
            return Self::zero();
        }
        let den = &self.den * &e;
        if g.is_constant() {
            return Self::monic_den(n, den);
        }
        let c = poly_gcd(&n, &g);
        if c.is_one() {
            Self::monic_den(n, den)
        } else {
            Self::monic_den(n.exact_div(&c).unwrap(), den.exact_div(&c).unwrap())
        }
    }

    /// Value at a point; `None` at a pole.
    pub fn eval(&self, x: &K, y: &K) -> Option<K> {
        let d = self.den.eval(x, y);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x, y) / d)
    }

    /// Substitutes a constant for one variable; `None` if the denominator
    /// vanishes identically afterwards.
    pub fn eval_var(&self, v: Var, value: &K) -> Option<Self> {
        let d = self.den.eval_var(v, value);
        if d.is_zero() {
            return None;
        }
        Some(Self::normalized(self.num.eval_var(v, value), d))
    }

    pub fn swap_vars(&self) -> Self {
        Self::normalized(self.num.swap_vars(), self.den.swap_vars())
    }

    /// `f(R1(x,y), R2(x,y))`.
    ///
    /// Each polynomial is homogenized in the two substituted denominators so
    /// only one final normalization happens.
    pub fn compose(&self, r1: &Self, r2: &Self) -> Result<Self, AlgebraError> {
        let dx = self.num.degree_in(Var::X).unwrap_or(0).max(self.den.degree_in(Var::X).unwrap_or(0));
        let dy = self.num.degree_in(Var::Y).unwrap_or(0).max(self.den.degree_in(Var::Y).unwrap_or(0));
        let n = compose_homogeneous(&self.num, r1, r2, dx, dy);
        let d = compose_homogeneous(&self.den, r1, r2, dx, dy);
        if d.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::normalized(n, d))
    }
}

/// `p(a/b, c/d) · b^dx · d^dy` as a polynomial.
fn compose_homogeneous<K: ExactField>(
    p: &MultiPoly<K>,
    r1: &RationalFunction<K>,
    r2: &RationalFunction<K>,
    dx: u32,
    dy: u32,
) -> MultiPoly<K> {
    let pow_table = |base: &MultiPoly<K>, n: u32| {
        let mut v = vec![MultiPoly::one()];
        for i in 0..n as usize {
            let next = &v[i] * base;
            v.push(next);
        }
        v
    };
    let an = pow_table(&r1.num, dx);
    let ad = pow_table(&r1.den, dx);
    let bn = pow_table(&r2.num, dy);
    let bd = pow_table(&r2.den, dy);
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        let (i, j) = (m.x as usize, m.y as usize);
        let t = &(&an[i] * &ad[dx as usize - i]) * &(&bn[j] * &bd[dy as usize - j]);
        out = out + t.scale(c);
    }
    out
}

impl<K: ExactField> Zero for RationalFunction<K> {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<K: ExactField> One for RationalFunction<K> {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl<K: ExactField> Add for &RationalFunction<K> {
    type Output = RationalFunction<K>;
    fn add(self, rhs: &RationalFunction<K>) -> RationalFunction<K> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        // only the common part of the denominators can cancel
        let g = poly_gcd(&self.den, &rhs.den);
        if g.is_one() {
            let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RationalFunction::monic_den(n, &self.den * &rhs.den);
        }
        let d1 = self.den.exact_div(&g).unwrap();
        let d2 = rhs.den.exact_div(&g).unwrap();
        let n = &(&self.num * &d2) + &(&rhs.num * &d1);
        if n.is_zero() {
            return RationalFunction::zero();
        }
        let g2 = poly_gcd(&n, &g);
        if g2.is_one() {
            RationalFunction::monic_den(n, &d1 * &rhs.den)
        } else {
            RationalFunction::monic_den(n.exact_div(&g2).unwrap(), &d1 * &rhs.den.exact_div(&g2).unwrap())
        }
    }
}

impl<K: ExactField> Sub for &RationalFunction<K> {
    type Output = RationalFunction<K>;
    fn sub(self, rhs: &RationalFunction<K>) -> RationalFunction<K> {
        self + &(-rhs)
    }
}

impl<K: ExactField> Mul for &RationalFunction<K> {
    type Output = RationalFunction<K>;
    fn mul(self, rhs: &RationalFunction<K>) -> RationalFunction<K> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction { num: &self.num * &rhs.num, den: MultiPoly::one() };
        }
        // cross-cancel; both factors are already reduced
        let cancel = |n: &MultiPoly<K>, d: &MultiPoly<K>| {
            if d.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = poly_gcd(n, d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.exact_div(&g).unwrap(), d.exact_div(&g).unwrap())
            }
        };
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RationalFunction::monic_den(&n1 * &n2, &d1 * &d2)
    }
}

impl<K: ExactField> Div for &RationalFunction<K> {
    type Output = RationalFunction<K>;
    /// Panics on division by zero; see [`RationalFunction::checked_div`].
    fn div(self, rhs: &RationalFunction<K>) -> RationalFunction<K> {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

impl<K: ExactField> Neg for &RationalFunction<K> {
    type Output = RationalFunction<K>;
    fn neg(self) -> RationalFunction<K> {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<K: ExactField> $tr for RationalFunction<K> {
            type Output = RationalFunction<K>;
            fn $m(self, rhs: RationalFunction<K>) -> RationalFunction<K> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl<K: ExactField> Neg for RationalFunction<K> {
    type Output = RationalFunction<K>;
    fn neg(self) -> RationalFunction<K> {
        -&self
    }
}

impl<K: ExactField> From<MultiPoly<K>> for RationalFunction<K> {
    fn from(p: MultiPoly<K>) -> Self {
        Self::from_poly(p)
    }
}

/// Display adaptor with custom variable names.
pub struct NamedRat<'a, K> {
    f: &'a RationalFunction<K>,
    names: (&'a str, &'a str),
}

impl<K: ExactField> RationalFunction<K> {
    pub fn named<'a>(&'a self, names: (&'a str, &'a str)) -> NamedRat<'a, K> {
        NamedRat { f: self, names }
    }
}

impl<K: ExactField> fmt::Display for NamedRat<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.f.num.named(self.names);
        if self.f.den.is_one() {
            write!(f, "{n}")
        } else {
            write!(f, "({n})/({})", self.f.den.named(self.names))
        }
    }
}

impl<K: ExactField> fmt::Display for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.named(("x", "y")), f)
    }
}

impl<K: fmt::Debug> fmt::Debug for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}
