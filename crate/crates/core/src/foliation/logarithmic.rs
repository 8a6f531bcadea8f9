use std::collections::BTreeSet;


use super::Foliation;
use crate::algebra::linalg::solve;
use crate::algebra::{Monomial, Var};
use crate::{Form, GaussianRational as G, Poly, RatFun};

/// `ω / Π fⱼ = Σ λⱼ dfⱼ/fⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogarithmicRepresentation {
    pub curves: Vec<Poly>,
    pub residues: Vec<G>,
}

impl LogarithmicRepresentation {
    /// `Σ λⱼ dfⱼ/fⱼ`.
    pub fn closed_form(&self) -> Form {
        let mut acc = Form::zero();
        for (f, l) in self.curves.iter().zip(&self.residues) {
            let rf = RatFun::from_poly(f.clone());
            let df = Form::differential(&rf);
            acc = acc.add(&df.scale(&(&RatFun::constant(l.clone()) / &rf)));
        }
        acc
    }

    /// Checks the defining identity against `omega`.
    pub fn verify(&self, omega: &Form) -> bool {
        let prod = self.curves.iter().fold(Poly::one(), |acc, f| &acc * f);
        if prod.is_zero() {
            return false;
        }
        omega.scale(&(&RatFun::one() / &RatFun::from_poly(prod))) == self.closed_form()
    }
}

pub(super) fn logarithmic_representation(f: &Foliation, curves: &[Poly]) -> Option<LogarithmicRepresentation> {
    if curves.is_empty() || curves.iter().any(|c| c.is_constant()) {
        return None;
    }
    let prod = curves.iter().fold(Poly::one(), |acc, c| &acc * c);
    // column j: (Pⱼ ∂x fⱼ, Pⱼ ∂y fⱼ) with Pⱼ = Π_{k≠j} f_k
    let cols: Vec<(Poly, Poly)> = curves
        .iter()
        .map(|c| {
            let pj = prod.exact_div(c).unwrap();
            (&pj * &c.derivative(Var::X), &pj * &c.derivative(Var::Y))
        })
        .collect();
    let mut support: BTreeSet<Monomial> = BTreeSet::new();
    for (p, q) in &cols {
        support.extend(p.terms().map(|(m, _)| *m));
        support.extend(q.terms().map(|(m, _)| *m));
    }
    support.extend(f.a().terms().map(|(m, _)| *m));
    support.extend(f.b().terms().map(|(m, _)| *m));
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for m in &support {
        rows.push(cols.iter().map(|(p, _)| p.coeff(*m)).collect::<Vec<G>>());
        rhs.push(f.a().coeff(*m));
        rows.push(cols.iter().map(|(_, q)| q.coeff(*m)).collect::<Vec<G>>());
        rhs.push(f.b().coeff(*m));
    }
    let residues = solve(&rows, &rhs)?;
    let rep = LogarithmicRepresentation { curves: curves.to_vec(), residues };
    if !rep.verify(&f.form()) {
        return None;
    }
    Some(rep)
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;

    #[test]
    fn log_rep_examples() {
        let l = G::rational(2, 3);
        let f = Foliation::new(-Poly::y().scale(&l), Poly::x()).unwrap();
        let rep = f.logarithmic_representation(&[Poly::x(), Poly::y()]).unwrap();
        assert_eq!(rep.residues, vec![-l, G::one()]);

        let dy = Foliation::new(Poly::zero(), Poly::one()).unwrap();
        let rep = dy.logarithmic_representation(&[Poly::y()]).unwrap();
        assert_eq!(rep.residues, vec![G::one()]);

        let y = Poly::y();
        let ric = Foliation::new(-(&(&y * &y) + &Poly::one()), Poly::x()).unwrap();
        assert!(ric.logarithmic_representation(&[Poly::x(), Poly::y()]).is_none());
    }
}
