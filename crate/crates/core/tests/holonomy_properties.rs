use std::f64::consts::PI;

use folcalc_core::foliation::{Axis, Foliation};
use folcalc_core::holonomy::{holonomy_multiplier, is_elementary, Integrator, LoopSpec, SpherePoint};
use folcalc_core::{GaussianRational as G, Mobius, Poly};
use num_complex::Complex64 as C;
use proptest::prelude::*;

const TOL: f64 = 1e-9;

fn complex() -> impl Strategy<Value = C> {
    (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(re, im)| C::new(re, im))
}

fn mobius() -> impl Strategy<Value = Mobius> {
    (complex(), complex(), complex(), complex()).prop_filter_map("invertible", |(a, b, c, d)| {
        if (a * d - b * c).norm() < 1e-2 {
            return None;
        }
        Mobius::new(a, b, c, d).ok()
    })
}

fn int_map() -> impl Strategy<Value = Mobius> {
    let e = || -4i32..=4;
    (e(), e(), e(), e()).prop_filter_map("invertible", |(a, b, c, d)| {
        let f = |n: i32| C::new(n as f64, 0.0);
        if a * d - b * c == 0 {
            return None;
        }
        Mobius::new(f(a), f(b), f(c), f(d)).ok()
    })
}

fn conj(m: &Mobius, g: &Mobius) -> Mobius {
    m.compose(g).compose(&m.inverse())
}

/// Random two-generator groups, elementary by construction in two of the
/// three branches.
fn group() -> impl Strategy<Value = (Mobius, Mobius)> {
    let e = || -4i32..=4;
    let f = |n: i32| C::new(n as f64, 0.0);
    let upper = move || {
        (1i32..=3, e()).prop_map(move |(a, b)| Mobius::new(f(a), f(b), f(0), f(1)).unwrap())
    };
    prop_oneof![
        (int_map(), int_map()),
        (int_map(), upper(), upper()).prop_map(move |(m, g, h)| (conj(&m, &g), conj(&m, &h))),
        // z ↦ kz fixes {0, ∞}; z ↦ 1/z swaps them
        (int_map(), 2i32..=4).prop_map(move |(m, k)| {
            let g = Mobius::new(f(k), f(0), f(0), f(1)).unwrap();
            let s = Mobius::new(f(0), f(1), f(1), f(0)).unwrap();
            (conj(&m, &g), conj(&m, &s))
        }),
    ]
}

fn fixed(w: &Mobius) -> Vec<SpherePoint<C>> {
    w.fixed_points().unwrap_or_default()
}

fn permutes(g: &Mobius, set: &[SpherePoint<C>]) -> bool {
    set.iter().all(|p| set.iter().any(|q| q.close_to(&g.apply(p), 1e-6)))
}

/// Any invariant set of at most two points is fixed pointwise by every
/// square, so it lies in `Fix(w²)` whenever `w²` is not the identity.
fn brute_force_elementary(g: &Mobius, h: &Mobius) -> bool {
    let squares: Vec<Mobius> =
        [g.clone(), h.clone(), g.compose(h)].iter().map(|w| w.compose(w)).filter(|w| !w.is_identity(TOL)).collect();
    let Some(sq) = squares.first() else { return true };
    let cands = fixed(sq);
    let mut subsets: Vec<Vec<SpherePoint<C>>> = cands.iter().map(|p| vec![p.clone()]).collect();
    if cands.len() == 2 {
        subsets.push(cands.clone());
    }
    subsets.iter().any(|s| permutes(g, s) && permutes(h, s))
}

fn linear_model(lambda: &G) -> Foliation {
    Foliation::new(-Poly::y().scale(lambda), Poly::x()).unwrap()
}

fn expected_multiplier(re: f64, im: f64) -> C {
    (C::new(0.0, 2.0 * PI) * C::new(re, im)).exp()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn composition_is_associative(f in mobius(), g in mobius(), h in mobius(), z in complex()) {
        let l = f.compose(&g).compose(&h);
        let r = f.compose(&g.compose(&h));
        let p = SpherePoint::Finite(z);
        prop_assert!(l.apply(&p).close_to(&r.apply(&p), 1e-10));
        let sign = if (l.a - r.a).norm() < (l.a + r.a).norm() { 1.0 } else { -1.0 };
        for (x, y) in [(l.a, r.a), (l.b, r.b), (l.c, r.c), (l.d, r.d)] {
            prop_assert!((x - y * sign).norm() <= 1e-12 * (1.0 + x.norm()));
        }
    }

    #[test]
    fn self_commutator_is_identity(f in mobius()) {
        prop_assert!(f.commutator(&f).is_identity(1e-9));
    }

    #[test]
    fn elementary_matches_brute_force((g, h) in group()) {
        let (ok, witness) = is_elementary(&[g.clone(), h.clone()], TOL);
        prop_assert_eq!(ok, brute_force_elementary(&g, &h));
        if ok {
            prop_assert!(witness.len() <= 2);
            prop_assert!(permutes(&g, &witness) && permutes(&h, &witness));
        }
    }
}

#[test]
fn parabolic_pair_is_not_elementary() {
    let f = |n: f64| C::new(n, 0.0);
    let g = Mobius::new(f(1.0), f(1.0), f(0.0), f(1.0)).unwrap();
    let h = Mobius::new(f(1.0), f(0.0), f(1.0), f(1.0)).unwrap();
    assert!(!brute_force_elementary(&g, &h));
    assert!(!is_elementary(&[g, h], TOL).0);
}

#[test]
fn multipliers_on_linear_models() {
    for (lambda, re, im) in [
        (G::i(), 0.0, 1.0),
        (G::rational(-1, 2), -0.5, 0.0),
        (G::rational(5, 7), 5.0 / 7.0, 0.0),
        (G::from_parts(1, 1, 1, 1), 1.0, 1.0),
    ] {
        let est = holonomy_multiplier(&linear_model(&lambda), &LoopSpec::new(Axis::YZero, 1.0)).unwrap();
        let want = expected_multiplier(re, im);
        assert!((est.multiplier - want).norm() / want.norm() < 1e-6, "λ = {lambda}: {} vs {want}", est.multiplier);
    }
}

#[test]
fn rk4_converges_at_fourth_order() {
    let f = linear_model(&G::rational(5, 7));
    let want = expected_multiplier(5.0 / 7.0, 0.0);
    let err = |n: usize| {
        let lp = LoopSpec::new(Axis::YZero, 1.0).with_steps(n).with_integrator(Integrator::FixedRk4);
        (holonomy_multiplier(&f, &lp).unwrap().multiplier - want).norm()
    };
    let ratio = err(64) / err(128);
    assert!((8.0..=32.0).contains(&ratio), "ratio {ratio}");
}
