#![allow(dead_code)]

use folcalc_core::algebra::Monomial;
use folcalc_core::{GaussianRational as G, Poly, RatFun};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, 1i64..=4)
}

pub fn gaussian() -> impl Strategy<Value = G> {
    (small_rational(), small_rational(), 0u8..3).prop_map(|((a, b), (c, d), kind)| match kind {
        0 => G::rational(a, b),
        _ => G::from_parts(a, b, c, d),
    })
}

pub fn nonzero_gaussian() -> impl Strategy<Value = G> {
    gaussian().prop_filter("nonzero", |g| *g != G::int(0))
}

pub fn poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(((0..=max_deg), (0..=max_deg), gaussian()), 0..=max_terms).prop_map(move |ts| {
        Poly::from_terms(
            ts.into_iter().filter(|(i, j, _)| i + j <= max_deg).map(|(i, j, c)| (Monomial::new(i, j), c)),
        )
    })
}

pub fn nonzero_poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfun(max_deg: u32) -> impl Strategy<Value = RatFun> {
    (poly(max_deg, 4), nonzero_poly(max_deg.min(2), 3)).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}
