use num_traits::Zero;

use super::{Foliation, SingularPoint};
use crate::algebra::roots::split_gaussian_roots;
use crate::algebra::{UniPoly, Var};
use crate::error::FoliationError;
use crate::forms::RationalMap;
use crate::{ExactField, GaussianRational as G, Poly, RatFun};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    /// The line `{y = 0}`.
    YZero,
    /// The line `{x = 0}`.
    XZero,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::YZero => "y=0",
            Axis::XZero => "x=0",
        }
    }
}

/// Poles on the line that are not in Q(i): their eliminant and the sum of
/// their residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueCluster {
    pub eliminant: Poly,
    pub count: usize,
    pub total_residue: G,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSum {
    pub affine: Vec<(SingularPoint, G)>,
    pub clusters: Vec<ResidueCluster>,
    pub infinity: G,
    pub total: G,
}

/// Residue at `z₀` of `num/den`, via the Laurent expansion at `z₀`.
pub fn residue_at(num: &UniPoly<G>, den: &UniPoly<G>, z0: &G) -> G {
    if num.is_zero() {
        return G::zero();
    }
    let n = num.shift(z0);
    let d = den.shift(z0);
    let m = d.coeffs().iter().take_while(|c| c.is_zero()).count();
    if m == 0 {
        return G::zero();
    }
    let q = &d.coeffs()[m..];
    let q0 = q[0].inverse().expect("shifted denominator has a nonzero low coefficient");
    let mut s: Vec<G> = Vec::with_capacity(m);
    for k in 0..m {
        let mut acc = n.coeff(k);
        for j in 1..=k.min(q.len() - 1) {
            acc = acc - q[j].clone() * s[k - j].clone();
        }
        s.push(acc * q0.clone());
    }
    s[m - 1].clone()
}

/// Sum of all finite residues of `num/den`, i.e. `−Res_∞`.
fn total_residue(num: &UniPoly<G>, den: &UniPoly<G>) -> G {
    let dd = den.degree().expect("nonzero denominator");
    if dd == 0 {
        return G::zero();
    }
    let (_, r) = num.div_rem(den);
    r.coeff(dd - 1) / den.leading_coeff().unwrap().clone()
}

/// `Ā(x, 0)` and `−B(x, 0)` for the invariant line `{y = 0}`.
fn residue_data(f: &Foliation) -> Result<(UniPoly<G>, UniPoly<G>), FoliationError> {
    if !f.a().eval_var(Var::Y, &G::zero()).is_zero() {
        return Err(FoliationError::AxisNotInvariant(Axis::YZero.name()));
    }
    let abar = UniPoly::from_multi(&f.a().coeff_of(Var::Y, 1), Var::X).unwrap();
    let den = UniPoly::from_multi(&-f.b().eval_var(Var::Y, &G::zero()), Var::X).unwrap();
    if den.is_zero() {
        return Err(FoliationError::InfiniteSingularSet);
    }
    Ok((abar, den))
}

pub(super) fn cs_index(f: &Foliation, p: &SingularPoint, axis: Axis) -> Result<G, FoliationError> {
    if axis == Axis::XZero {
        return cs_index(&f.swapped(), &p.swapped(), Axis::YZero);
    }
    if !p.exact {
        return Err(FoliationError::NotExact);
    }
    if !p.y.is_zero() {
        return Err(FoliationError::NotOnAxis(axis.name()));
    }
    let (num, den) = residue_data(f)?;
    Ok(residue_at(&num, &den, &p.x))
}

/// The foliation in the chart `(u, v) = (1/x, y/x)` at infinity.
pub fn chart_at_infinity(f: &Foliation) -> Result<Foliation, FoliationError> {
    let u = RatFun::x();
    let v = RatFun::y();
    let sigma = RationalMap::new(&RatFun::one() / &u, &v / &u);
    let pulled = f.form().pullback(&sigma)?;
    Ok(Foliation::from_form(&pulled)?.with_labels("u", "v").with_chart("infinity (u, v) = (1/x, y/x)"))
}


pub(super) fn projective_line_index_sum(f: &Foliation, line: Axis) -> Result<IndexSum, FoliationError> {
    if line == Axis::XZero {
        let mut s = projective_line_index_sum(&f.swapped(), Axis::YZero)?;
        for (p, _) in s.affine.iter_mut() {
            *p = p.swapped();
        }
        for c in s.clusters.iter_mut() {
            c.eliminant = c.eliminant.swap_vars();
        }
        return Ok(s);
    }
    let (num, den) = residue_data(f)?;
    let finite = total_residue(&num, &den);
    let split = split_gaussian_roots(&den);
    let mut affine = Vec::new();
    let mut exact_sum = G::zero();
    for (x0, _) in split.roots {
        let r = residue_at(&num, &den, &x0);
        exact_sum = exact_sum + r.clone();
        affine.push((SingularPoint::exact(x0, G::zero()), r));
    }
    let mut clusters = Vec::new();
    if let Some(d) = split.rest.degree().filter(|&d| d > 0) {
        clusters.push(ResidueCluster {
            eliminant: split.rest.to_multi(Var::X),
            count: d,
            total_residue: finite.clone() - exact_sum,
        });
    }
    let chart = chart_at_infinity(f)?;
    let infinity = cs_index(&chart, &SingularPoint::origin(), Axis::YZero)?;
    let total = finite + infinity.clone();
    Ok(IndexSum { affine, clusters, infinity, total })
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;

    fn linear(lambda: G) -> Foliation {
        Foliation::new(-Poly::y().scale(&lambda), Poly::x()).unwrap()
    }

    #[test]
    fn index_examples() {
        let l = G::rational(5, 3);
        let f = linear(l.clone());
        assert_eq!(f.cs_index(&SingularPoint::origin(), Axis::YZero).unwrap(), l);
        assert_eq!(f.cs_index(&SingularPoint::origin(), Axis::XZero).unwrap(), G::rational(3, 5));

        let sn = Foliation::new(&Poly::y() * &Poly::y(), -Poly::x()).unwrap();
        assert_eq!(sn.cs_index(&SingularPoint::origin(), Axis::YZero).unwrap(), G::zero());

        // u dv + (λ − 1) v du
        let g = Foliation::new(Poly::y().scale(&(l.clone() - G::one())), Poly::x()).unwrap();
        assert_eq!(g.cs_index(&SingularPoint::origin(), Axis::YZero).unwrap(), G::one() - l);
    }

    #[test]
    fn chart_at_infinity_of_linear_model() {
        let l = G::rational(5, 3);
        let chart = chart_at_infinity(&linear(l.clone())).unwrap();
        let expected = Foliation::new(Poly::y().scale(&(l - G::one())), Poly::x()).unwrap();
        assert!(chart.form().same_foliation(&expected.form()));
    }

    #[test]
    fn line_sums() {
        let f = linear(G::rational(5, 3));
        let s = f.projective_line_index_sum(Axis::YZero).unwrap();
        assert_eq!(s.infinity, G::rational(-2, 3));
        assert_eq!(s.total, G::one());
        let s = f.projective_line_index_sum(Axis::XZero).unwrap();
        assert_eq!(s.infinity, G::rational(2, 5));
        assert_eq!(s.total, G::one());

        let dy = Foliation::new(Poly::zero(), Poly::one()).unwrap();
        let s = dy.projective_line_index_sum(Axis::YZero).unwrap();
        assert!(s.affine.is_empty());
        assert_eq!(s.infinity, G::one());
        assert_eq!(s.total, G::one());
    }

    #[test]
    fn irrational_poles_are_summed() {
        // (x² − 2) dy − y dx: poles ±√2 on {y = 0}
        let b = &(&Poly::x() * &Poly::x()) - &Poly::constant(G::int(2));
        let f = Foliation::new(-Poly::y(), b).unwrap();
        let s = f.projective_line_index_sum(Axis::YZero).unwrap();
        assert!(s.affine.is_empty());
        assert_eq!(s.clusters.len(), 1);
        assert_eq!(s.clusters[0].count, 2);
        assert_eq!(s.total, G::one());
    }

    #[test]
    fn higher_order_pole_residue() {
        // (1 + z) / z² has residue 1 at 0
        let num = UniPoly::new(vec![G::one(), G::one()]);
        let den = UniPoly::new(vec![G::zero(), G::zero(), G::one()]);
        assert_eq!(residue_at(&num, &den, &G::zero()), G::one());
    }
}
