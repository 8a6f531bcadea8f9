//! Projective triples `(Ω, η, ξ)`: verification, gauge modification,
//! Riccati triples and the reduction to `dy − (½y² − φ(x))dx`.

mod gauge_ode;
mod normal_forms;
mod reduce;

pub use gauge_ode::{gauge_ode_classify, GaugeOdeCase, GaugeOdeKind, GaugeOdeVerdict};
pub use normal_forms::{bernoulli_recognize, resonant_kl, saddle_node_closed, BernoulliData, NormalForm};
pub use reduce::{riccati_reduce, Convention, RiccatiReduction, DEFAULT_DEG_BOUND};

use crate::algebra::{MultiPoly, RationalFunction, Var};
use crate::error::TripleError;
use crate::forms::{OneForm, TwoForm};
use crate::scalar::ExactField;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectiveTriple<K> {
    pub omega: OneForm<K>,
    pub eta: OneForm<K>,
    pub xi: OneForm<K>,
}

/// Outcome of checking the three structure equations, with residuals
/// `dΩ − η∧Ω`, `dη − Ω∧ξ`, `dξ − ξ∧η`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TripleCheck<K> {
    pub holds: [bool; 3],
    pub residuals: [TwoForm<K>; 3],
}

impl<K> TripleCheck<K> {
    pub fn all(&self) -> bool {
        self.holds.iter().all(|&h| h)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaugeData<K> {
    pub g: RationalFunction<K>,
    pub h: RationalFunction<K>,
}

impl<K: ExactField> GaugeData<K> {
    pub fn new(g: RationalFunction<K>, h: RationalFunction<K>) -> Result<Self, TripleError> {
        if g.is_zero() {
            return Err(TripleError::ZeroGauge);
        }
        Ok(Self { g, h })
    }

    pub fn identity() -> Self {
        Self { g: RationalFunction::one(), h: RationalFunction::zero() }
    }

    /// The single gauge equal to applying `self`, then `then`:
    /// `(g₁g₂, h₁ + g₁h₂)`.
    pub fn compose(&self, then: &Self) -> Self {
        Self { g: &self.g * &then.g, h: &self.h + &(&self.g * &then.h) }
    }
}

impl<K: ExactField> ProjectiveTriple<K> {
    pub fn new(omega: OneForm<K>, eta: OneForm<K>, xi: OneForm<K>) -> Self {
        Self { omega, eta, xi }
    }

    /// `(Ω, −η, −ξ)`.
    pub fn reversed(&self) -> Self {
        Self { omega: self.omega.clone(), eta: self.eta.neg(), xi: self.xi.neg() }
    }
}

pub fn verify_triple<K: ExactField>(t: &ProjectiveTriple<K>) -> TripleCheck<K> {
    let r1 = t.omega.exterior_derivative().sub(&t.eta.wedge(&t.omega));
    let r2 = t.eta.exterior_derivative().sub(&t.omega.wedge(&t.xi));
    let r3 = t.xi.exterior_derivative().sub(&t.xi.wedge(&t.eta));
    TripleCheck { holds: [r1.is_zero(), r2.is_zero(), r3.is_zero()], residuals: [r1, r2, r3] }
}

/// `Ω′ = gΩ`, `η′ = η + dg/g + hΩ`, `ξ′ = (1/g)(ξ − dh − hη − (h²/2)Ω)`.
pub fn modify_triple<K: ExactField>(t: &ProjectiveTriple<K>, gauge: &GaugeData<K>) -> Result<ProjectiveTriple<K>, TripleError> {
    let g = &gauge.g;
    let h = &gauge.h;
    let ginv = g.inverse().map_err(|_| TripleError::ZeroGauge)?;
    let omega = t.omega.scale(g);
    let dg = OneForm::differential(g);
    let eta = t.eta.add(&dg.scale(&ginv)).add(&t.omega.scale(h));
    let half = RationalFunction::constant(K::from_ratio(1, 2));
    let h2 = &(h * h) * &half;
    let xi = t
        .xi
        .sub(&OneForm::differential(h))
        .sub(&t.eta.scale(h))
        .sub(&t.omega.scale(&h2))
        .scale(&ginv);
    Ok(ProjectiveTriple { omega, eta, xi })
}

/// `ξ′ − ξ = F·Ω`; returns `F` and whether `2F·dΩ + dF∧Ω = 0`.
pub fn triple_difference<K: ExactField>(
    t: &ProjectiveTriple<K>,
    xi2: &OneForm<K>,
) -> Result<(RationalFunction<K>, bool), TripleError> {
    let diff = xi2.sub(&t.xi);
    if diff.is_zero() {
        return Ok((RationalFunction::zero(), true));
    }
    let f = diff.ratio_to(&t.omega).ok_or(TripleError::NotProportional)?;
    let two = RationalFunction::constant(K::from_i64(2).unwrap());
    let lhs = t.omega.exterior_derivative().scale(&(&two * &f)).add(&OneForm::differential(&f).wedge(&t.omega));
    Ok((f, lhs.is_zero()))
}

/// `p(x)`, `a(x)`, `b(x)`, `c(x)` of the Riccati form
/// `p dy − (y²c − yb − a) dx`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RiccatiCoefficients<K> {
    pub p: MultiPoly<K>,
    pub a: MultiPoly<K>,
    pub b: MultiPoly<K>,
    pub c: MultiPoly<K>,
}

impl<K: ExactField> RiccatiCoefficients<K> {
    pub fn new(p: MultiPoly<K>, a: MultiPoly<K>, b: MultiPoly<K>, c: MultiPoly<K>) -> Result<Self, TripleError> {
        if p.is_zero() {
            return Err(TripleError::InvalidRiccati("p must be nonzero"));
        }
        if [&p, &a, &b, &c].iter().any(|q| q.depends_on(Var::Y)) {
            return Err(TripleError::InvalidRiccati("coefficients must depend on x only"));
        }
        Ok(Self { p, a, b, c })
    }

    pub fn omega(&self) -> OneForm<K> {
        let y = MultiPoly::y();
        let inner = &(&(&(&y * &y) * &self.c) - &(&y * &self.b)) - &self.a;
        OneForm::from_polys(-inner, self.p.clone())
    }

    /// `−1/(p y)`.
    pub fn example_g(&self) -> RationalFunction<K> {
        -&(&RationalFunction::one() / &RationalFunction::from_poly(&self.p * &MultiPoly::y()))
    }

    /// Modification with `g = 1` and `h = 2·(−1/(p y))`, which is how
    /// `η′ = η + 2gΩ`, `ξ′ = ξ − 2dg − 2gη − 2g²Ω` sit inside the (g, h) law.
    pub fn example_gauge(&self) -> GaugeData<K> {
        let two = RationalFunction::constant(K::from_i64(2).unwrap());
        GaugeData { g: RationalFunction::one(), h: &two * &self.example_g() }
    }

    /// `(p′ − b + 2yc)/p dx` and `2c/p² dx`.
    pub fn example_expected(&self) -> (OneForm<K>, OneForm<K>) {
        let p = RationalFunction::from_poly(self.p.clone());
        let two = MultiPoly::constant(K::from_i64(2).unwrap());
        let num = &(&self.p.derivative(Var::X) - &self.b) + &(&(&two * &MultiPoly::y()) * &self.c);
        let eta = OneForm::new(&RationalFunction::from_poly(num) / &p, RationalFunction::zero());
        let xi = OneForm::new(
            &RationalFunction::from_poly(&two * &self.c) / &(&p * &p),
            RationalFunction::zero(),
        );
        (eta, xi)
    }
}

/// `Ω = p dy − (y²c − yb − a)dx`, `η = 2dy/y + (p′+b)/p dx + 2a/(yp) dx`,
/// `ξ = −2a/(y²p²) dx`.
pub fn riccati_canonical_triple<K: ExactField>(rc: &RiccatiCoefficients<K>) -> ProjectiveTriple<K> {
    let y = RationalFunction::y();
    let p = RationalFunction::from_poly(rc.p.clone());
    let a = RationalFunction::from_poly(rc.a.clone());
    let b = RationalFunction::from_poly(rc.b.clone());
    let dp = RationalFunction::from_poly(rc.p.derivative(Var::X));
    let two = RationalFunction::constant(K::from_i64(2).unwrap());
    let eta_dx = &(&(&dp + &b) / &p) + &(&(&two * &a) / &(&y * &p));
    let eta = OneForm::new(eta_dx, &two / &y);
    let xi = OneForm::new(-&(&(&two * &a) / &(&(&y * &y) * &(&p * &p))), RationalFunction::zero());
    ProjectiveTriple { omega: rc.omega(), eta, xi }
}
