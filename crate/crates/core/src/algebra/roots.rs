//! Roots in Q(i) of univariate polynomials.
//!
//! Candidates come from a floating-point Aberth iteration on the square-free
//! part; every candidate is rationalized by continued fractions and then
//! confirmed by exact evaluation, so a reported root is always a root.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::univariate::UniPoly;
use crate::scalar::ExactField;

/// `p = c · Π (z − rₖ)^{mₖ} · rest` with `rest` monic and free of Q(i) roots.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSplit {
    pub roots: Vec<(GaussianRational, usize)>,
    pub rest: UniPoly<GaussianRational>,
}

const MAX_DENOMINATOR: i64 = 10_000_000;

/// Simultaneous root approximation (Aberth–Ehrlich).
pub fn complex_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|v| *v == Complex64::new(0.0, 0.0)) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = c[n];
    let monic: Vec<Complex64> = c.iter().map(|v| v / lead).collect();
    let bound = 1.0 + monic[..n].iter().map(|v| v.norm()).fold(0.0, f64::max);
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for a in monic.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    };
    let r0 = bound.min(1e6) * 0.5 + 0.1;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(r0, theta)
        })
        .collect();
    for _ in 0..800 {
        let mut max_step: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = eval(z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    let d = z[k] - z[j];
                    if d.norm() > 0.0 {
                        s += 1.0 / d;
                    }
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[k] -= w;
                max_step = max_step.max(w.norm() / (1.0 + z[k].norm()));
            } else {
                z[k] += Complex64::new(1e-3, 1e-3);
                max_step = 1.0;
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    // Newton polish
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval(*zk);
            if dp.norm() > 0.0 {
                let step = p / dp;
                if step.is_finite() {
                    *zk -= step;
                }
            }
        }
    }
    z
}

/// Continued-fraction convergents of `v` with denominator ≤ `max_den` that
/// lie within `tol` of `v`.
pub fn rational_candidates(v: f64, tol: f64, max_den: i64) -> Vec<BigRational> {
    let mut out = Vec::new();
    if !v.is_finite() {
        return out;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut x = v;
    for _ in 0..64 {
        let a = x.floor();
        if a.abs() > 1e18 {
            break;
        }
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(max_den) {
            break;
        }
        let q = BigRational::new(h2.clone(), k2.clone());
        let approx = crate::scalar::ratio_to_f64(&q);
        if (approx - v).abs() <= tol * v.abs().max(1.0) {
            out.push(q);
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = x - a;
        if frac.abs() < 1e-300 {
            break;
        }
        x = 1.0 / frac;
    }
    out
}

/// Nearest small-denominator Gaussian rational candidates for `z`.
pub fn gaussian_candidates(z: Complex64) -> Vec<GaussianRational> {
    let tol = 1e-8;
    let mut res = rational_candidates(z.re, tol, MAX_DENOMINATOR);
    let mut ims = rational_candidates(z.im, tol, MAX_DENOMINATOR);
    if z.re.abs() < tol {
        res.insert(0, BigRational::zero());
    }
    if z.im.abs() < tol {
        ims.insert(0, BigRational::zero());
    }
    let mut out = Vec::new();
    for r in res.iter().take(4) {
        for i in ims.iter().take(4) {
            out.push(GaussianRational::new(r.clone(), i.clone()));
        }
    }
    out
}

/// Splits off every root of `p` that lies in Q(i).
pub fn split_gaussian_roots(p: &UniPoly<GaussianRational>) -> RootSplit {
    let mut rest = p.monic();
    let mut roots: Vec<(GaussianRational, usize)> = Vec::new();
    if rest.degree().unwrap_or(0) == 0 {
        return RootSplit { roots, rest };
    }
    let sqf = rest.squarefree_part();
    let coeffs: Vec<Complex64> = sqf.coeffs().iter().map(|c| c.to_complex()).collect();
    for z in complex_roots(&coeffs) {
        for cand in gaussian_candidates(z) {
            if roots.iter().any(|(r, _)| *r == cand) {
                continue;
            }
            if sqf.eval(&cand).is_zero() {
                let m = rest.root_multiplicity(&cand);
                let lin = UniPoly::linear_root(cand.clone());
                for _ in 0..m {
                    rest = rest.exact_div(&lin).unwrap();
                }
                roots.push((cand, m));
                break;
            }
        }
    }
    RootSplit { roots, rest }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64, d: i64) -> GaussianRational {
        GaussianRational::rational(n, d)
    }

    #[test]
    fn splits_rational_and_gaussian_roots() {
        // (z − 1/3)² (z − i) (z² − 2)
        let lin = |r: GaussianRational| UniPoly::linear_root(r);
        let p = lin(g(1, 3))
            .mul(&lin(g(1, 3)))
            .mul(&lin(GaussianRational::i()))
            .mul(&UniPoly::new(vec![g(-2, 1), g(0, 1), g(1, 1)]));
        let split = split_gaussian_roots(&p);
        assert_eq!(split.roots.len(), 2);
        assert!(split.roots.contains(&(g(1, 3), 2)));
        assert!(split.roots.contains(&(GaussianRational::i(), 1)));
        assert_eq!(split.rest, UniPoly::new(vec![g(-2, 1), g(0, 1), g(1, 1)]));
    }

    #[test]
    fn constant_has_no_roots() {
        let split = split_gaussian_roots(&UniPoly::constant(g(5, 1)));
        assert!(split.roots.is_empty());
    }
}
