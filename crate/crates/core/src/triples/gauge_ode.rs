use crate::algebra::{RationalFunction, Var};
use crate::error::TripleError;
use crate::scalar::ExactField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GaugeOdeKind<K> {
    /// Residue `a` of `s` at `y = 0`.
    SimplePole { a: K },
    HigherOrderPole { order: u32 },
    Holomorphic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaugeOdeVerdict {
    ExtensionObstructed,
    NonMeromorphic,
    ExtensionPossible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeOdeCase<K> {
    pub kind: GaugeOdeKind<K>,
    /// `½s² − s′`, exactly.
    pub phi_squared: RationalFunction<K>,
    pub verdict: GaugeOdeVerdict,
    /// Raised when the two published sign conventions disagree on `φ²`.
    pub sign_convention_flag: bool,
    /// Coefficient of `y⁻²` in `φ²` under `s′ − ½s² = −φ²`, and the
    /// alternative `2a − a²`, for a simple pole.
    pub leading_coefficients: Option<(K, K)>,
}

/// Case analysis of `s(y)` at `y = 0` for `s′ − ½s² = −φ²`.
pub fn gauge_ode_classify<K: ExactField>(s: &RationalFunction<K>) -> Result<GaugeOdeCase<K>, TripleError> {
    if s.depends_on(Var::X) {
        return Err(TripleError::DependsOnX);
    }
    let half = RationalFunction::constant(K::from_ratio(1, 2));
    let phi_squared = &(&half * &(s * s)) - &s.partial(Var::Y);
    let order = if s.is_zero() { 0 } else { s.den().min_exponent(Var::Y) };
    let (kind, verdict) = match order {
        0 => (GaugeOdeKind::Holomorphic, GaugeOdeVerdict::ExtensionPossible),
        1 => {
            let num0 = s.num().eval(&K::zero(), &K::zero());
            let rest0 = s.den().div_monomial(0, 1).unwrap().eval(&K::zero(), &K::zero());
            (GaugeOdeKind::SimplePole { a: num0 / rest0 }, GaugeOdeVerdict::ExtensionObstructed)
        }
        m => (GaugeOdeKind::HigherOrderPole { order: m }, GaugeOdeVerdict::NonMeromorphic),
    };
    let leading_coefficients = match &kind {
        GaugeOdeKind::SimplePole { a } => {
            let two = K::from_i64(2).unwrap();
            let ours = a.clone() * a.clone() / two.clone() + a.clone();
            let alt = two * a.clone() - a.clone() * a.clone();
            Some((ours, alt))
        }
        _ => None,
    };
    Ok(GaugeOdeCase {
        sign_convention_flag: leading_coefficients.is_some(),
        kind,
        phi_squared,
        verdict,
        leading_coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational as G;

    type R = RationalFunction<G>;

    #[test]
    fn three_cases() {
        let a = G::rational(1, 2);
        let s = &R::constant(a.clone()) / &R::y();
        let case = gauge_ode_classify(&s).unwrap();
        assert_eq!(case.kind, GaugeOdeKind::SimplePole { a });
        assert_eq!(case.verdict, GaugeOdeVerdict::ExtensionObstructed);
        assert_eq!(case.phi_squared, &R::constant(G::rational(5, 8)) / &(&R::y() * &R::y()));
        assert!(case.sign_convention_flag);
        assert_eq!(case.leading_coefficients, Some((G::rational(5, 8), G::rational(3, 4))));

        let s = &R::one() / &(&R::y() * &R::y());
        let case = gauge_ode_classify(&s).unwrap();
        assert_eq!(case.kind, GaugeOdeKind::HigherOrderPole { order: 2 });
        assert_eq!(case.verdict, GaugeOdeVerdict::NonMeromorphic);

        let s = &(&R::y() * &R::y()) * &R::y();
        let case = gauge_ode_classify(&s).unwrap();
        assert_eq!(case.kind, GaugeOdeKind::Holomorphic);
        assert_eq!(case.verdict, GaugeOdeVerdict::ExtensionPossible);
        assert!(!case.sign_convention_flag);

        assert_eq!(gauge_ode_classify(&R::x()), Err(TripleError::DependsOnX));
    }
}
