use std::collections::BTreeSet;

use super::{verify_triple, ProjectiveTriple};
use crate::algebra::linalg::nullspace;
use crate::algebra::{Monomial, MultiPoly, RationalFunction};
use crate::error::TripleError;
use crate::forms::{OneForm, RationalMap};
use crate::scalar::ExactField;

pub const DEFAULT_DEG_BOUND: usize = 8;

/// Sign convention of the input triple. `Reversed` means `(Ω, −η, −ξ)`
/// satisfies the structure equations while `(Ω, η, ξ)` does not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Standard,
    Reversed,
}

/// Output of the Riccati reduction. In the standard convention
/// `Ω_φ = dy − (½y² − φ(x))dx`; in the reversed one
/// `Ω_φ = dy + (½y² + φ(x))dx`. Either way `σ*Ω_φ ∧ gΩ = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RiccatiReduction<K> {
    pub convention: Convention,
    pub r: RationalFunction<K>,
    pub h: RationalFunction<K>,
    pub f: RationalFunction<K>,
    /// `φ(x)`, a function of `x` alone.
    pub phi: RationalFunction<K>,
    pub sigma: RationalMap<K>,
    pub omega_phi: OneForm<K>,
    /// `ω`, the part of `Ω′` not proportional to `dR`.
    pub omega: OneForm<K>,
    pub omega_prime: OneForm<K>,
    pub warnings: Vec<String>,
}

fn half<K: ExactField>() -> RationalFunction<K> {
    RationalFunction::constant(K::from_ratio(1, 2))
}

/// Solves `F = φ(R)` for a univariate rational `φ` with numerator and
/// denominator degree at most `bound`.
fn recover_phi<K: ExactField>(
    f: &RationalFunction<K>,
    r: &RationalFunction<K>,
    bound: usize,
) -> Option<RationalFunction<K>> {
    if let Some(c) = f.as_constant() {
        return Some(RationalFunction::constant(c));
    }
    let (fn_, fd) = (f.num(), f.den());
    let (rn, rd) = (r.num(), r.den());
    for k in 1..=bound {
        // basis rn^j rd^(k−j)
        let basis: Vec<MultiPoly<K>> = (0..=k).map(|j| &rn.pow(j as u32) * &rd.pow((k - j) as u32)).collect();
        // unknowns: α₀..α_k (numerator), β₀..β_k (denominator)
        let cols: Vec<MultiPoly<K>> = basis
            .iter()
            .map(|b| -(fd * b))
            .chain(basis.iter().map(|b| fn_ * b))
            .collect();
        let support: BTreeSet<Monomial> = cols.iter().flat_map(|c| c.terms().map(|(m, _)| *m)).collect();
        let rows: Vec<Vec<K>> = support.iter().map(|m| cols.iter().map(|c| c.coeff(*m)).collect()).collect();
        for v in nullspace(&rows, 2 * (k + 1)) {
            let (alpha, beta) = v.split_at(k + 1);
            if beta.iter().all(|b| b.is_zero()) {
                continue;
            }
            let z = |c: &[K]| {
                MultiPoly::from_terms(c.iter().enumerate().map(|(j, v)| (Monomial::new(j as u32, 0), v.clone())))
            };
            let Ok(phi) = RationalFunction::new(z(alpha), z(beta)) else { continue };
            if phi.compose(r, &RationalFunction::y()).ok().as_ref() == Some(f) {
                return Some(phi);
            }
        }
    }
    None
}

/// Given `ξ = g dR`, constructs `σ = (R, H)` and `φ` with `σ*Ω_φ ∥ gΩ`.
pub fn riccati_reduce<K: ExactField>(
    t: &ProjectiveTriple<K>,
    r: &RationalFunction<K>,
    g: &RationalFunction<K>,
    deg_bound: usize,
) -> Result<RiccatiReduction<K>, TripleError> {
    let dr = OneForm::differential(r);
    if dr.is_zero() {
        return Err(TripleError::ConstantR);
    }
    if g.is_zero() {
        return Err(TripleError::ZeroGauge);
    }
    if t.xi != dr.scale(g) {
        return Err(TripleError::XiNotGdR);
    }
    let mut warnings = Vec::new();
    let convention = if verify_triple(t).all() {
        Convention::Standard
    } else if verify_triple(&t.reversed()).all() {
        Convention::Reversed
    } else {
        warnings.push("input is not a projective triple in either sign convention".to_string());
        Convention::Standard
    };
    // everything below runs on a standard triple (Ω, ηₛ, ξₛ = gₛ dR)
    let (eta_s, g_s) = match convention {
        Convention::Standard => (t.eta.clone(), g.clone()),
        Convention::Reversed => (t.eta.neg(), -g),
    };
    let ginv = g_s.inverse()?;
    let omega_prime_s = t.omega.scale(&g_s);
    let eta_prime = eta_s.add(&OneForm::differential(&g_s).scale(&ginv));
    let h_s = if eta_prime.is_zero() {
        RationalFunction::zero()
    } else {
        eta_prime.ratio_to(&dr).ok_or(TripleError::EtaNotProportional)?
    };
    // ω = (H²/2) dR − H η′ + dH = −½H² dR + dH
    let h2 = &(&h_s * &h_s) * &half();
    let omega_s = dr.scale(&-&h2).add(&OneForm::differential(&h_s));
    let rest = omega_prime_s.sub(&omega_s);
    let f_s = if rest.is_zero() {
        RationalFunction::zero()
    } else {
        rest.ratio_to(&dr).ok_or(TripleError::EtaNotProportional)?
    };
    if !OneForm::differential(&f_s).wedge(&dr).is_zero() {
        return Err(TripleError::NotFunctionOfR);
    }
    let phi_s = recover_phi(&f_s, r, deg_bound).ok_or(TripleError::NoPhiWithinBound(deg_bound))?;

    let y = RationalFunction::y();
    let (h, f, phi, omega, omega_phi) = match convention {
        Convention::Standard => {
            let coeff = &(&(&y * &y) * &half()) - &phi_s;
            let target = OneForm::new(-&coeff, RationalFunction::one());
            (h_s, f_s, phi_s, omega_s, target)
        }
        Convention::Reversed => {
            let h = -&h_s;
            let phi = -&phi_s;
            // ω = ½H² dR + dH
            let omega = dr.scale(&(&(&h * &h) * &half())).add(&OneForm::differential(&h));
            let coeff = &(&(&y * &y) * &half()) + &phi;
            let target = OneForm::new(coeff, RationalFunction::one());
            (h, -&f_s, phi, omega, target)
        }
    };
    let sigma = RationalMap::new(r.clone(), h.clone());
    let omega_prime = t.omega.scale(g);
    let pulled = omega_phi.pullback(&sigma)?;
    if !pulled.wedge(&omega_prime).is_zero() {
        return Err(TripleError::VerificationFailed);
    }
    Ok(RiccatiReduction { convention, r: r.clone(), h, f, phi, sigma, omega_phi, omega, omega_prime, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational as G;

    type R = RationalFunction<G>;
    type F = OneForm<G>;

    /// (dy − (½y² − x)dx, −y dx, −dx)
    fn worked() -> ProjectiveTriple<G> {
        let half_y2 = &(&R::y() * &R::y()) * &R::constant(G::rational(1, 2));
        let omega = F::new(-&(&half_y2 - &R::x()), R::one());
        ProjectiveTriple::new(omega, F::new(-&R::y(), R::zero()), F::new(-&R::one(), R::zero()))
    }

    #[test]
    fn worked_reduction() {
        let t = worked();
        let red = riccati_reduce(&t, &-&R::x(), &R::one(), DEFAULT_DEG_BOUND).unwrap();
        assert_eq!(red.convention, Convention::Reversed);
        assert_eq!(red.h, R::y());
        assert_eq!(red.phi, R::x());
        assert_eq!(red.f, -&R::x());
        assert_eq!(red.sigma, RationalMap::new(-&R::x(), R::y()));
        assert_eq!(red.omega_phi.pullback(&red.sigma).unwrap(), t.omega);
    }

    #[test]
    fn standard_convention_reduction() {
        let t = worked().reversed();
        let red = riccati_reduce(&t, &-&R::x(), &-&R::one(), DEFAULT_DEG_BOUND).unwrap();
        assert_eq!(red.convention, Convention::Standard);
        assert_eq!(red.phi, -&R::x());
        let pulled = red.omega_phi.pullback(&red.sigma).unwrap();
        assert!(pulled.same_foliation(&red.omega_prime));
    }

    #[test]
    fn reduction_errors() {
        let mut t = worked();
        t.xi = F::dy();
        assert_eq!(riccati_reduce(&t, &-&R::x(), &R::one(), 8), Err(TripleError::XiNotGdR));

        let t = ProjectiveTriple::new(F::new(R::y(), R::zero()), F::zero(), F::dx());
        assert_eq!(riccati_reduce(&t, &R::x(), &R::one(), 8), Err(TripleError::NotFunctionOfR));
    }

    #[test]
    fn phi_recovery_rational() {
        // F = R/(R² + 1) with R = x y
        let r = &R::x() * &R::y();
        let f = &r / &(&(&r * &r) + &R::one());
        let phi = recover_phi(&f, &r, 4).unwrap();
        assert_eq!(phi, &R::x() / &(&(&R::x() * &R::x()) + &R::one()));
        assert!(recover_phi(&f, &r, 1).is_none());
    }
}
