//! Sylvester resultants, computed with fraction-free Bareiss elimination.


use super::poly::{MultiPoly, Var};
use crate::scalar::ExactField;

/// Coefficients of `p` as a polynomial in `var`, highest power first.
fn coefficients_in<K: ExactField>(p: &MultiPoly<K>, var: Var) -> Vec<MultiPoly<K>> {
    let d = p.degree_in(var).unwrap_or(0);
    (0..=d).rev().map(|k| p.coeff_of(var, k)).collect()
}

/// Sylvester matrix of `p`, `q` with respect to `var`; entries are
/// polynomials in the other variable.
pub fn sylvester_matrix<K: ExactField>(p: &MultiPoly<K>, q: &MultiPoly<K>, var: Var) -> Vec<Vec<MultiPoly<K>>> {
    let m = p.degree_in(var).unwrap_or(0) as usize;
    let n = q.degree_in(var).unwrap_or(0) as usize;
    let size = m + n;
    let pc = coefficients_in(p, var);
    let qc = coefficients_in(q, var);
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![MultiPoly::zero(); size];
        for (k, c) in pc.iter().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![MultiPoly::zero(); size];
        for (k, c) in qc.iter().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant over the polynomial ring by Bareiss' fraction-free method.
pub fn bareiss_determinant<K: ExactField>(mut a: Vec<Vec<MultiPoly<K>>>) -> MultiPoly<K> {
    let n = a.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut sign = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return MultiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MultiPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// `Res_var(p, q)`: the Sylvester determinant, a polynomial in the other
/// variable.
pub fn resultant<K: ExactField>(p: &MultiPoly<K>, q: &MultiPoly<K>, var: Var) -> MultiPoly<K> {
    if p.is_zero() || q.is_zero() {
        return MultiPoly::zero();
    }
    bareiss_determinant(sylvester_matrix(p, q, var))
}
