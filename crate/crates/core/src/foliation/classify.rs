use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Matrix2;
use crate::algebra::is_rational_square;
use crate::GaussianRational as G;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingularityTag {
    Regular,
    NonDegenerate,
    SaddleNodeCandidate,
    NilpotentReducible,
    ZeroLinearPartReducible,
    RadialDicritical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonDegenerateKind {
    ResonantQMinus,
    Hyperbolic,
    RealIrrationalNonResonant,
    RationalPositiveReducible,
}

/// Class of a singular point, decided from `t = tr²/det` of the linear part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SingularityClass {
    pub tag: SingularityTag,
    pub subtag: Option<NonDegenerateKind>,
    /// `None` stands for `t = ∞` (`det = 0`).
    pub t: Option<G>,
    /// Eigenvalue ratio when it is rational, taken of modulus at most one.
    pub ratio: Option<BigRational>,
}

impl SingularityClass {
    pub fn regular() -> Self {
        Self { tag: SingularityTag::Regular, subtag: None, t: None, ratio: None }
    }

    fn degenerate(tag: SingularityTag) -> Self {
        Self { tag, subtag: None, t: None, ratio: None }
    }

    /// Irreducible in Seidenberg's sense: a reduced non-degenerate point or a
    /// saddle-node. Regular points count as well.
    pub fn is_irreducible(&self) -> bool {
        match self.tag {
            SingularityTag::Regular | SingularityTag::SaddleNodeCandidate => true,
            SingularityTag::NonDegenerate => self.subtag != Some(NonDegenerateKind::RationalPositiveReducible),
            _ => false,
        }
    }

    pub fn is_non_resonant(&self) -> bool {
        matches!(
            self.subtag,
            Some(NonDegenerateKind::Hyperbolic | NonDegenerateKind::RealIrrationalNonResonant)
        )
    }

    pub fn label(&self) -> String {
        match self.subtag {
            Some(s) => format!("{:?}/{:?}", self.tag, s),
            None => format!("{:?}", self.tag),
        }
    }
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())?;
        if let Some(r) = &self.ratio {
            write!(f, ", ratio {r}")?;
        }
        Ok(())
    }
}

fn rational_ratio(m: &Matrix2, t: &BigRational, root: &BigRational) -> BigRational {
    if m.m[0][1].is_zero() || m.m[1][0].is_zero() {
        let r = (m.m[1][1].clone() / m.m[0][0].clone()).re;
        return if r.abs() <= BigRational::one() { r } else { r.recip() };
    }
    let two = BigRational::from_integer(2.into());
    let r1 = (t - &two + root) / &two;
    let r2 = (t - &two - root) / &two;
    if r1.abs() <= BigRational::one() {
        r1
    } else {
        r2
    }
}

/// Decision table on a linear part.
pub fn classify_matrix(m: &Matrix2) -> SingularityClass {
    if m.is_zero() {
        return SingularityClass::degenerate(SingularityTag::ZeroLinearPartReducible);
    }
    let det = m.det();
    let tr = m.trace();
    if det.is_zero() {
        return SingularityClass::degenerate(if tr.is_zero() {
            SingularityTag::NilpotentReducible
        } else {
            SingularityTag::SaddleNodeCandidate
        });
    }
    let t = tr.clone() * tr / det;
    let nondeg = |kind, ratio| SingularityClass {
        tag: SingularityTag::NonDegenerate,
        subtag: Some(kind),
        t: Some(t.clone()),
        ratio,
    };
    if !t.is_real() {
        return nondeg(NonDegenerateKind::Hyperbolic, None);
    }
    let tq = t.re.clone();
    let four = BigRational::from_integer(4.into());
    let disc = &tq * &tq - &four * &tq;
    if disc.is_negative() {
        return nondeg(NonDegenerateKind::Hyperbolic, None);
    }
    match is_rational_square(&disc) {
        None => nondeg(NonDegenerateKind::RealIrrationalNonResonant, None),
        Some(root) => {
            let ratio = rational_ratio(m, &tq, &root);
            if ratio.is_negative() {
                nondeg(NonDegenerateKind::ResonantQMinus, Some(ratio))
            } else if tq == four && m.is_scalar() {
                SingularityClass { tag: SingularityTag::RadialDicritical, subtag: None, t: Some(t.clone()), ratio: None }
            } else {
                nondeg(NonDegenerateKind::RationalPositiveReducible, Some(ratio))
            }
        }
    }
}
