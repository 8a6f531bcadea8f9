//! Möbius maps `z ↦ (az + b)/(cz + d)` normalized to `ad − bc = 1`.

use num_complex::{Complex32, Complex64};
use crate::error::MobiusError;
use crate::scalar::Scalar;
use crate::GaussianRational;

/// Scalars a Möbius map can be normalized over.
pub trait MobiusScalar: Scalar {
    /// A square root, when the field has one for this element.
    fn sqrt_opt(&self) -> Option<Self>;
    /// Distance used for approximate comparisons; exact types return `0`
    /// for equal values and `∞` otherwise.
    fn distance(&self, other: &Self) -> f64;
    fn magnitude(&self) -> f64;
}

impl MobiusScalar for Complex64 {
    fn sqrt_opt(&self) -> Option<Self> {
        Some(self.sqrt())
    }
    fn distance(&self, other: &Self) -> f64 {
        (self - other).norm()
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl MobiusScalar for Complex32 {
    fn sqrt_opt(&self) -> Option<Self> {
        Some(self.sqrt())
    }
    fn distance(&self, other: &Self) -> f64 {
        (self - other).norm() as f64
    }
    fn magnitude(&self) -> f64 {
        self.norm() as f64
    }
}

impl MobiusScalar for f64 {
    fn sqrt_opt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
    fn distance(&self, other: &Self) -> f64 {
        (self - other).abs()
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl MobiusScalar for f32 {
    fn sqrt_opt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
    fn distance(&self, other: &Self) -> f64 {
        (self - other).abs() as f64
    }
    fn magnitude(&self) -> f64 {
        self.abs() as f64
    }
}

impl MobiusScalar for GaussianRational {
    fn sqrt_opt(&self) -> Option<Self> {
        self.sqrt()
    }
    fn distance(&self, other: &Self) -> f64 {
        if self == other {
            0.0
        } else {
            f64::INFINITY
        }
    }
    fn magnitude(&self) -> f64 {
        let (re, im) = self.to_f64_pair();
        re.hypot(im)
    }
}

/// A point of the Riemann sphere.
#[derive(Clone, Debug, PartialEq)]
pub enum SpherePoint<K> {
    Finite(K),
    Infinity,
}

impl<K: MobiusScalar> SpherePoint<K> {
    /// Chordal-style closeness: finite points by distance, `∞` only to `∞`
    /// or to very large finite points.
    pub fn close_to(&self, other: &Self, tol: f64) -> bool {
        match (self, other) {
            (SpherePoint::Infinity, SpherePoint::Infinity) => true,
            (SpherePoint::Finite(a), SpherePoint::Finite(b)) => {
                let d = a.distance(b);
                d == 0.0 || d <= tol * (1.0 + a.magnitude().max(b.magnitude()))
            }
            (SpherePoint::Finite(a), SpherePoint::Infinity) | (SpherePoint::Infinity, SpherePoint::Finite(a)) => {
                tol > 0.0 && a.magnitude() > 1.0 / tol
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MobiusMap<K> {
    pub a: K,
    pub b: K,
    pub c: K,
    pub d: K,
}

impl<K: MobiusScalar> MobiusMap<K> {
    /// Normalizes `[[a, b], [c, d]]` to determinant one.
    pub fn new(a: K, b: K, c: K, d: K) -> Result<Self, MobiusError> {
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        if det.magnitude() == 0.0 || det.is_zero() {
            return Err(MobiusError::Singular);
        }
        let s = det.sqrt_opt().ok_or(MobiusError::NoSquareRoot)?;
        Ok(Self { a: a / s.clone(), b: b / s.clone(), c: c / s.clone(), d: d / s })
    }

    pub fn identity() -> Self {
        Self { a: K::one(), b: K::zero(), c: K::zero(), d: K::one() }
    }

    pub fn det(&self) -> K {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&other.a, &other.b, &other.c, &other.d);
        let m = |p: &K, q: &K, r: &K, s: &K| p.clone() * q.clone() + r.clone() * s.clone();
        Self { a: m(a, e, b, g), b: m(a, f, b, h), c: m(c, e, d, g), d: m(c, f, d, h) }.renormalized()
    }

    pub fn inverse(&self) -> Self {
        Self { a: self.d.clone(), b: -self.b.clone(), c: -self.c.clone(), d: self.a.clone() }
    }

    /// `f g f⁻¹ g⁻¹`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).compose(&self.inverse()).compose(&other.inverse())
    }

    fn renormalized(self) -> Self {
        let det = self.det();
        if det.distance(&K::one()) == 0.0 {
            return self;
        }
        match det.sqrt_opt() {
            Some(s) if !s.is_zero() => {
                Self { a: self.a / s.clone(), b: self.b / s.clone(), c: self.c / s.clone(), d: self.d / s }
            }
            _ => self,
        }
    }

    pub fn apply(&self, z: &SpherePoint<K>) -> SpherePoint<K> {
        match z {
            SpherePoint::Infinity => {
                if self.c.is_zero() {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::Finite(self.a.clone() / self.c.clone())
                }
            }
            SpherePoint::Finite(z) => {
                let den = self.c.clone() * z.clone() + self.d.clone();
                if den.is_zero() {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::Finite((self.a.clone() * z.clone() + self.b.clone()) / den)
                }
            }
        }
    }

    /// Equal to the identity up to sign, within `tol` (exactly when `tol = 0`).
    pub fn is_identity(&self, tol: f64) -> bool {
        let close = |p: &K, q: &K| {
            let d = p.distance(q);
            d == 0.0 || d <= tol
        };
        let zero = K::zero();
        let one = K::one();
        if !close(&self.b, &zero) || !close(&self.c, &zero) {
            return false;
        }
        (close(&self.a, &one) && close(&self.d, &one)) || (close(&self.a, &-one.clone()) && close(&self.d, &-one))
    }

    /// Roots of `cz² + (d − a)z − b = 0` on the sphere.
    pub fn fixed_points(&self) -> Result<Vec<SpherePoint<K>>, MobiusError> {
        if self.is_identity(0.0) {
            return Err(MobiusError::Identity);
        }
        let two = K::one() + K::one();
        if self.c.is_zero() {
            let dm = self.d.clone() - self.a.clone();
            if dm.is_zero() {
                return Ok(vec![SpherePoint::Infinity]);
            }
            return Ok(vec![SpherePoint::Finite(self.b.clone() / dm), SpherePoint::Infinity]);
        }
        let am = self.a.clone() - self.d.clone();
        let disc = am.clone() * am.clone() + two.clone() * two.clone() * self.b.clone() * self.c.clone();
        let s = disc.sqrt_opt().ok_or(MobiusError::NoSquareRoot)?;
        let den = two.clone() * self.c.clone();
        if s.is_zero() {
            return Ok(vec![SpherePoint::Finite(am / den)]);
        }
        // take the sum without cancellation and recover the other root from
        // the product −b/c
        let (plus, minus) = (am.clone() + s.clone(), am - s);
        let q = if plus.magnitude() >= minus.magnitude() { plus } else { minus };
        let other = -(two.clone() * self.b.clone()) / q.clone();
        Ok(vec![SpherePoint::Finite(q / den), SpherePoint::Finite(other)])
    }
}

fn set_invariant<K: MobiusScalar>(g: &MobiusMap<K>, set: &[SpherePoint<K>], tol: f64) -> bool {
    set.iter().all(|p| {
        let q = g.apply(p);
        set.iter().any(|s| s.close_to(&q, tol))
    })
}

fn push_unique<K: MobiusScalar>(out: &mut Vec<SpherePoint<K>>, p: SpherePoint<K>, tol: f64) {
    if !out.iter().any(|q| q.close_to(&p, tol)) {
        out.push(p);
    }
}

/// Looks for a set of at most two sphere points invariant under every
/// generator; candidates are fixed points of the generators, their squares,
/// and pairwise products. Pairs are tried before single points.
pub fn is_elementary<K: MobiusScalar>(gens: &[MobiusMap<K>], tol: f64) -> (bool, Vec<SpherePoint<K>>) {
    let active: Vec<&MobiusMap<K>> = gens.iter().filter(|g| !g.is_identity(tol)).collect();
    if active.is_empty() {
        return (true, Vec::new());
    }
    let mut words: Vec<MobiusMap<K>> = Vec::new();
    for (i, g) in active.iter().enumerate() {
        words.push((*g).clone());
        words.push(g.compose(g));
        for h in &active[i + 1..] {
            words.push(g.compose(h));
            words.push(g.compose(&h.inverse()));
        }
    }
    let mut cands: Vec<SpherePoint<K>> = Vec::new();
    for w in &words {
        if let Ok(fps) = w.fixed_points() {
            for p in fps {
                push_unique(&mut cands, p, tol);
            }
        }
    }
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            let set = [cands[i].clone(), cands[j].clone()];
            if active.iter().all(|g| set_invariant(g, &set, tol)) {
                return (true, set.to_vec());
            }
        }
    }
    for p in &cands {
        let set = [p.clone()];
        if active.iter().all(|g| set_invariant(g, &set, tol)) {
            return (true, set.to_vec());
        }
    }
    (false, Vec::new())
}
