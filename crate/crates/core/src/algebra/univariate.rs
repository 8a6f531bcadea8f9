//! Dense univariate polynomials over a field.

use std::fmt;

use super::modular;
use super::poly::{MultiPoly, Var};
use crate::scalar::{ExactField, Scalar};

/// Coefficients stored low degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<K> {
    coeffs: Vec<K>,
}

impl<K: Scalar> UniPoly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `z`.
    pub fn identity() -> Self {
        Self::new(vec![K::zero(), K::one()])
    }

    /// `z - r`.
    pub fn linear_root(r: K) -> Self {
        Self::new(vec![-r, K::one()])
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = K::zero();
        for c in self.coeffs.iter() {
            out.push(c.clone() * k.clone());
            k = k + K::one();
        }
        if !out.is_empty() {
            out.remove(0);
        }
        Self::new(out)
    }

    /// `p(z + a)`.
    pub fn shift(&self, a: &K) -> Self {
        let mut acc = Self::zero();
        let lin = Self::new(vec![a.clone(), K::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Long division; panics when `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![K::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() / lc.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Lift to a bivariate polynomial in the given variable.
    pub fn to_multi(&self, v: Var) -> MultiPoly<K> {
        MultiPoly::from_terms(self.coeffs.iter().enumerate().map(|(k, c)| {
            let m = match v {
                Var::X => super::Monomial::new(k as u32, 0),
                Var::Y => super::Monomial::new(0, k as u32),
            };
            (m, c.clone())
        }))
    }

    /// Reads a bivariate polynomial that only depends on `v`.
    pub fn from_multi(p: &MultiPoly<K>, v: Var) -> Option<Self> {
        if p.depends_on(v.other()) {
            return None;
        }
        let n = p.degree_in(v).map(|d| d as usize + 1).unwrap_or(0);
        let mut coeffs = vec![K::zero(); n];
        for (m, c) in p.terms() {
            coeffs[m.exp(v) as usize] = c.clone();
        }
        Some(Self::new(coeffs))
    }
}

impl<K: ExactField> UniPoly<K> {
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.inverse().unwrap()),
            None => Self::zero(),
        }
    }

    /// Image in `F_P[z]`, provided the leading coefficient survives.
    pub(crate) fn modular_image(&self) -> Option<Vec<u64>> {
        let v: Vec<u64> = self.coeffs.iter().map(K::modular_image).collect::<Option<_>>()?;
        (v.last().is_some_and(|&c| c != 0)).then_some(v)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.degree().unwrap_or(0) > 0 && other.degree().unwrap_or(0) > 0 {
            if let (Some(a), Some(b)) = (self.modular_image(), other.modular_image()) {
                if modular::gcd_degree(&a, &b) == 0 {
                    return Self::one();
                }
            }
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Square-free part (product of distinct irreducible factors), monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).unwrap().monic()
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &K) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Self::linear_root(r.clone());
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.exact_div(&lin) {
            p = q;
            k += 1;
        }
        k
    }
}

impl<K: ExactField> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_multi(Var::X), f)
    }
}

impl<K: fmt::Debug> fmt::Debug for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}
