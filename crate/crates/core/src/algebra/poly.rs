//! Sparse bivariate polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::scalar::{ExactField, Scalar};

/// Polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

/// Exponent pair `x^x · y^y`, ordered graded-lex with `x < y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y
    }

    pub fn exp(&self, v: Var) -> u32 {
        match v {
            Var::X => self.x,
            Var::Y => self.y,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.y.cmp(&other.y))
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x, y`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<K> {
    terms: BTreeMap<Monomial, K>,
}

impl<K: Scalar> MultiPoly<K> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: K, x: u32, y: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(x, y), c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Self::monomial(K::one(), 1, 0),
            Var::Y => Self::monomial(K::one(), 0, 1),
        }
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, K)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn as_constant(&self) -> Option<K> {
        if self.is_zero() {
            Some(K::zero())
        } else if self.is_constant() {
            self.terms.get(&Monomial::ONE).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Monomial) -> K {
        self.terms.get(&m).cloned().unwrap_or_else(K::zero)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(Monomial, &K)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.terms.values().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    /// Lowest total degree among the stored terms.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Largest `k` such that `v^k` divides every term.
    pub fn min_exponent(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mx: u32, my: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x + mx, m.y + my), c.clone()))
                .collect(),
        }
    }

    /// Divides by `x^mx y^my`; `None` when some term is not divisible.
    pub fn div_monomial(&self, mx: u32, my: u32) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.x < mx || m.y < my {
                return None;
            }
            terms.insert(Monomial::new(m.x - mx, m.y - my), c.clone());
        }
        Some(Self { terms })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let k = K::from_count(e);
            let nm = match v {
                Var::X => Monomial::new(m.x - 1, m.y),
                Var::Y => Monomial::new(m.x, m.y - 1),
            };
            out.add_term(nm, c.clone() * k);
        }
        out
    }

    pub fn eval(&self, x: &K, y: &K) -> K {
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            acc = acc + c.clone() * pow_scalar(x, m.x) * pow_scalar(y, m.y);
        }
        acc
    }

    /// Substitutes a constant for one variable.
    pub fn eval_var(&self, v: Var, value: &K) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (k, nm) = match v {
                Var::X => (pow_scalar(value, m.x), Monomial::new(0, m.y)),
                Var::Y => (pow_scalar(value, m.y), Monomial::new(m.x, 0)),
            };
            out.add_term(nm, c.clone() * k);
        }
        out
    }

    /// Replaces `x ↦ x + dx`, `y ↦ y + dy`.
    pub fn translate(&self, dx: &K, dy: &K) -> Self {
        let sx = Self::x() + Self::constant(dx.clone());
        let sy = Self::y() + Self::constant(dy.clone());
        self.compose(&sx, &sy)
    }

    /// Polynomial substitution `p(sx(x,y), sy(x,y))`.
    pub fn compose(&self, sx: &Self, sy: &Self) -> Self {
        let dx = self.degree_in(Var::X).unwrap_or(0);
        let dy = self.degree_in(Var::Y).unwrap_or(0);
        let px: Vec<Self> = powers(sx, dx);
        let py: Vec<Self> = powers(sy, dy);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let t = (&px[m.x as usize] * &py[m.y as usize]).scale(c);
            out = out + t;
        }
        out
    }

    /// Swaps the roles of `x` and `y`.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y, m.x), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `v^k`, as a polynomial in the other variable.
    pub fn coeff_of(&self, v: Var, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == k)
                .map(|(m, c)| {
                    let nm = match v {
                        Var::X => Monomial::new(0, m.y),
                        Var::Y => Monomial::new(m.x, 0),
                    };
                    (nm, c.clone())
                })
                .collect(),
        }
    }

    pub fn map_coeffs<L: Scalar>(&self, f: impl Fn(&K) -> L) -> MultiPoly<L> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl<K: ExactField> MultiPoly<K> {
    pub fn to_complex(&self) -> MultiPoly<Complex64> {
        self.map_coeffs(|c| c.to_complex())
    }

    /// Divides out the leading coefficient so it becomes one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.inverse().unwrap()),
            None => Self::zero(),
        }
    }

    /// Multivariate division by the graded-lex leading term: `(q, r)` with
    /// `self = q·d + r` and no term of `r` divisible by `lt(d)`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let (dm, dc) = d.leading().expect("division by the zero polynomial");
        let dc_inv = dc.inverse().unwrap();
        let mut q = Self::zero();
        let mut r = Self::zero();
        let mut p = self.clone();
        while let Some((pm, pc)) = p.leading() {
            if dm.divides(&pm) {
                let c = pc.clone() * dc_inv.clone();
                let (ex, ey) = (pm.x - dm.x, pm.y - dm.y);
                let t = d.mul_monomial(ex, ey).scale(&c);
                q.add_term(Monomial::new(ex, ey), c);
                p = p - t;
            } else {
                let c = pc.clone();
                r.add_term(pm, c.clone());
                p.terms.remove(&pm);
            }
        }
        (q, r)
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

trait FromCount {
    fn from_count(n: u32) -> Self;
}

impl<K: Scalar> FromCount for K {
    fn from_count(n: u32) -> Self {
        let mut acc = K::zero();
        let mut base = K::one();
        let mut n = n;
        // binary expansion keeps this cheap for large exponents
        while n > 0 {
            if n & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            n >>= 1;
        }
        acc
    }
}

pub(crate) fn pow_scalar<K: Scalar>(base: &K, e: u32) -> K {
    let mut acc = K::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

fn powers<K: Scalar>(p: &MultiPoly<K>, n: u32) -> Vec<MultiPoly<K>> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(MultiPoly::one());
    for i in 0..n as usize {
        let next = &out[i] * p;
        out.push(next);
    }
    out
}

impl<K: Scalar> Zero for MultiPoly<K> {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Scalar> One for MultiPoly<K> {
    fn one() -> Self {
        MultiPoly::one()
    }
}

impl<K: Scalar> Add for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn add(self, rhs: &MultiPoly<K>) -> MultiPoly<K> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<K: Scalar> Add for MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn add(self, rhs: MultiPoly<K>) -> MultiPoly<K> {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        for (m, c) in small.terms {
            big.add_term(m, c);
        }
        big
    }
}

impl<K: Scalar> Sub for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn sub(self, rhs: &MultiPoly<K>) -> MultiPoly<K> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<K: Scalar> Sub for MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn sub(self, rhs: MultiPoly<K>) -> MultiPoly<K> {
        &self - &rhs
    }
}

impl<K: Scalar> Neg for MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        MultiPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<K: Scalar> Neg for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        -(self.clone())
    }
}

impl<K: Scalar> Mul for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn mul(self, rhs: &MultiPoly<K>) -> MultiPoly<K> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(Monomial::new(ma.x + mb.x, ma.y + mb.y), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<K: Scalar> Mul for MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn mul(self, rhs: MultiPoly<K>) -> MultiPoly<K> {
        &self * &rhs
    }
}

impl<K: Scalar> From<K> for MultiPoly<K> {
    fn from(c: K) -> Self {
        MultiPoly::constant(c)
    }
}

/// Writes `x^a*y^b` without the coefficient; empty for the unit monomial.
pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, names: (&str, &str)) -> fmt::Result {
    let mut first = true;
    for (name, e) in [(names.0, m.x), (names.1, m.y)] {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Display adaptor printing with custom variable names.
pub struct Named<'a, K> {
    poly: &'a MultiPoly<K>,
    names: (&'a str, &'a str),
}

impl<K: ExactField> MultiPoly<K> {
    pub fn named<'a>(&'a self, names: (&'a str, &'a str)) -> Named<'a, K> {
        Named { poly: self, names }
    }
}

impl<K: ExactField> fmt::Display for Named<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        // highest terms first
        for (idx, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.prints_negative();
            let c = if neg { -c.clone() } else { c.clone() };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write_monomial(f, m, self.names)?;
            } else {
                write!(f, "{c}*")?;
                write_monomial(f, m, self.names)?;
            }
        }
        Ok(())
    }
}

impl<K: ExactField> fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.named(("x", "y")), f)
    }
}

impl<K: fmt::Debug> fmt::Debug for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}")?;
            if *m != Monomial::ONE {
                write!(f, "*")?;
                write_monomial(f, m, ("x", "y"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational as G;

    type P = MultiPoly<G>;

    #[test]
    fn graded_lex_order() {
        let mut ms = vec![Monomial::new(2, 0), Monomial::new(0, 1), Monomial::new(1, 1), Monomial::new(1, 0)];
        ms.sort();
        assert_eq!(ms, vec![Monomial::new(1, 0), Monomial::new(0, 1), Monomial::new(2, 0), Monomial::new(1, 1)]);
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let x = P::x();
        let y = P::y();
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, &(&x * &x) - &(&y * &y));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division() {
        let x = P::x();
        let one = P::one();
        let p = &(&x * &x) - &one;
        let q = p.exact_div(&(&x - &one)).unwrap();
        assert_eq!(q, &x + &one);
        assert!(p.exact_div(&P::y()).is_none());
    }

    #[test]
    fn derivative_of_monomial() {
        let p = P::monomial(G::int(1), 2, 1);
        assert_eq!(p.derivative(Var::X), P::monomial(G::int(2), 1, 1));
        assert_eq!(p.derivative(Var::Y), P::monomial(G::int(1), 2, 0));
    }

    #[test]
    fn printing() {
        let p = &P::monomial(G::from_parts(3, 2, 1, 3), 2, 1) - &P::monomial(G::rational(1, 2), 0, 0);
        assert_eq!(p.to_string(), "(3/2+1/3*i)*x^2*y - 1/2");
        assert_eq!((-P::x()).to_string(), "-x");
    }
}
