use crate::algebra::{MultiPoly, RationalFunction, Var};
use crate::forms::OneForm;
use crate::scalar::ExactField;

/// A polynomial form together with a closed meromorphic multiple of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm<K> {
    pub omega: OneForm<K>,
    pub closed_form: OneForm<K>,
    pub closed: bool,
}

/// `ω_{k,l} = k x dy + l y (1 + c x^l y^k) dx` and `Ω = ω/(x^{l+1} y^{k+1})`.
pub fn resonant_kl<K: ExactField>(k: u32, l: u32, c: K) -> NormalForm<K> {
    let kk = K::from_u32(k).unwrap();
    let ll = K::from_u32(l).unwrap();
    let x = MultiPoly::x();
    let y = MultiPoly::y();
    let inner = MultiPoly::one() + MultiPoly::monomial(c, l, k);
    let omega = OneForm::from_polys((&y * &inner).scale(&ll), x.scale(&kk));
    let den = RationalFunction::from_poly(MultiPoly::monomial(K::one(), l + 1, k + 1));
    let closed_form = omega.scale(&(&RationalFunction::one() / &den));
    let closed = closed_form.is_closed();
    NormalForm { omega, closed_form, closed }
}

/// `(1 + λy^k)/y^{k+1} dy − dx/x`, with polynomial form
/// `x(1 + λy^k) dy − y^{k+1} dx`.
pub fn saddle_node_closed<K: ExactField>(k: u32, lambda: K) -> NormalForm<K> {
    let x = MultiPoly::x();
    let inner = MultiPoly::one() + MultiPoly::monomial(lambda, 0, k);
    let omega = OneForm::from_polys(-MultiPoly::monomial(K::one(), 0, k + 1), &x * &inner);
    let xr = RationalFunction::x();
    let b = &RationalFunction::from_poly(inner) / &RationalFunction::from_poly(MultiPoly::monomial(K::one(), 0, k + 1));
    let closed_form = OneForm::new(-&(&RationalFunction::one() / &xr), b);
    let closed = closed_form.is_closed();
    NormalForm { omega, closed_form, closed }
}

/// `α(x) dy − (y²β₀(x) + yβ₁(x)) dx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliData<K> {
    pub alpha: RationalFunction<K>,
    pub beta0: RationalFunction<K>,
    pub beta1: RationalFunction<K>,
}

pub fn bernoulli_recognize<K: ExactField>(omega: &OneForm<K>) -> Option<BernoulliData<K>> {
    let alpha = omega.b.clone();
    if alpha.is_zero() || alpha.depends_on(Var::Y) || omega.a.den().depends_on(Var::Y) {
        return None;
    }
    let num = omega.a.num();
    if num.degree_in(Var::Y).unwrap_or(0) > 2 || !num.coeff_of(Var::Y, 0).is_zero() {
        return None;
    }
    let den = RationalFunction::from_poly(omega.a.den().clone());
    let part = |k: u32| -&(&RationalFunction::from_poly(num.coeff_of(Var::Y, k)) / &den);
    Some(BernoulliData { alpha, beta0: part(2), beta1: part(1) })
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::GaussianRational as G;

    type R = RationalFunction<G>;
    type F = OneForm<G>;

    #[test]
    fn closed_normal_forms() {
        for c in [G::int(1), G::zero(), G::from_parts(0, 1, 1, 7)] {
            assert!(resonant_kl(1, 1, c.clone()).closed);
            assert!(resonant_kl(2, 3, c).closed);
        }
        let nf = resonant_kl(2, 3, G::zero());
        assert_eq!(nf.omega, F::from_polys(MultiPoly::y().scale(&G::int(3)), MultiPoly::x().scale(&G::int(2))));

        let nf = saddle_node_closed(1, G::rational(2, 3));
        assert!(nf.closed);
        let y = R::y();
        let expected_b = &(&R::one() / &(&y * &y)) + &(&R::constant(G::rational(2, 3)) / &y);
        assert_eq!(nf.closed_form, F::new(-&(&R::one() / &R::x()), expected_b));
        assert!(nf.omega.same_foliation(&nf.closed_form));
    }

    #[test]
    fn bernoulli_examples() {
        let x = R::x();
        let y = R::y();
        let w = F::new(-&(&(&y * &y) + &(&y * &x)), x.clone());
        let got = bernoulli_recognize(&w).unwrap();
        assert_eq!(got, BernoulliData { alpha: x.clone(), beta0: R::one(), beta1: x.clone() });

        let w = F::new(-&(&(&y * &y) + &R::one()), x.clone());
        assert!(bernoulli_recognize(&w).is_none());

        let got = bernoulli_recognize(&F::dy()).unwrap();
        assert_eq!(got, BernoulliData { alpha: R::one(), beta0: R::zero(), beta1: R::zero() });
    }
}
