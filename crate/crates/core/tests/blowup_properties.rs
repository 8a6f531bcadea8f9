mod common;

use common::*;
use folcalc_core::blowup::{blow_up, seidenberg_resolve, ResolutionStatus};
use folcalc_core::foliation::{Foliation, SingularPoint, SingularityTag};
use folcalc_core::forms::RationalMap;
use folcalc_core::{GaussianRational as G, Poly, RatFun};
use num_rational::BigRational;
use proptest::prelude::*;

fn linear_model(lambda: &G) -> Foliation {
    Foliation::new(-Poly::y().scale(lambda), Poly::x()).unwrap()
}

/// `t = (1 + r)²/r` for eigenvalue ratio `r`.
fn t_of_ratio(r: &G) -> G {
    let s = G::int(1) + r.clone();
    s.clone() * s / r.clone()
}

fn singular_germ() -> impl Strategy<Value = Foliation> {
    (poly(3, 5), poly(3, 5))
        .prop_map(|(a, b)| {
            let strip = |p: Poly| p.translate(&G::int(0), &G::int(0)) - Poly::constant(p.eval(&G::int(0), &G::int(0)));
            (strip(a), strip(b))
        })
        .prop_filter_map("nonzero germ", |(a, b)| Foliation::new(a, b).ok())
        .prop_filter("singular at origin", |f| f.is_singular_at(&G::int(0), &G::int(0)))
}

fn positive_ratio() -> impl Strategy<Value = (i64, i64)> {
    (1i64..=7, 1i64..=7).prop_filter("reducible", |(p, q)| p != q)
}

/// Self-intersections, blow-up count and depth for `x dy − λ y dx`,
/// tracked directly on the eigenvalue ratio: the corners after one blow-up
/// carry ratios `λ − 1` in `(x, t)` and `λ/(1 − λ)` in `(s, y)`.
fn simulate(lambda: BigRational, on_x: Option<usize>, on_y: Option<usize>, depth: usize, out: &mut Sim) {
    let id = out.self_int.len();
    out.self_int.push(-1);
    out.depth = out.depth.max(depth);
    for d in [on_x, on_y].into_iter().flatten() {
        out.self_int[d] -= 1;
    }
    let one = BigRational::from_integer(1.into());
    if lambda == one {
        return;
    }
    let zero = BigRational::from_integer(0.into());
    let corners = [(lambda.clone() - &one, Some(id), on_y), (lambda.clone() / (&one - &lambda), on_x, Some(id))];
    for (mu, ax, ay) in corners {
        if mu > zero {
            simulate(mu, ax, ay, depth + 1, out);
        }
    }
}

#[derive(Default)]
struct Sim {
    self_int: Vec<i64>,
    depth: usize,
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn charts_are_coherent(f in singular_germ()) {
        let c = blow_up(&f, &SingularPoint::origin()).unwrap();
        let x = RatFun::x();
        let t = RatFun::y();
        let transport = RationalMap::new(&RatFun::one() / &t, &t * &x);
        let moved = c.chart2.form().pullback(&transport).unwrap();
        prop_assert!(moved.wedge(&c.chart1.form()).is_zero());
        // each strict transform is proportional to the pulled-back form
        let s1 = RationalMap::new(x.clone(), &t * &x);
        let s2 = RationalMap::new(&x * &t, t.clone());
        prop_assert!(f.form().pullback(&s1).unwrap().same_foliation(&c.chart1.form()));
        prop_assert!(f.form().pullback(&s2).unwrap().same_foliation(&c.chart2.form()));
    }

    #[test]
    fn multiplicity_is_maximal(f in singular_germ()) {
        let c = blow_up(&f, &SingularPoint::origin()).unwrap();
        let x = Poly::x();
        let xt = &x * &Poly::y();
        // σ₁*ω = (a∘σ₁ + t·b∘σ₁) dx + x·b∘σ₁ dt
        let a1 = f.a().compose(&x, &xt);
        let b1 = f.b().compose(&x, &xt);
        let p = &a1 + &(&Poly::y() * &b1);
        let q = &x * &b1;
        let m = c.multiplicity;
        prop_assert!(p.div_monomial(m, 0).is_some() && q.div_monomial(m, 0).is_some());
        prop_assert!(p.div_monomial(m + 1, 0).is_none() || q.div_monomial(m + 1, 0).is_none());
        let nu = f.order();
        let cone = &(&x * &f.a().homogeneous_part(nu)) + &(&Poly::y() * &f.b().homogeneous_part(nu));
        prop_assert_eq!(c.dicritical, cone.is_zero());
        prop_assert_eq!(m, if c.dicritical { nu + 1 } else { nu });
    }

    #[test]
    fn corner_invariants((n, d) in small_rational()) {
        let lambda = G::rational(n, d);
        prop_assume!(lambda != G::int(0) && lambda != G::int(1));
        let c = blow_up(&linear_model(&lambda), &SingularPoint::origin()).unwrap();
        prop_assert!(!c.dicritical);
        let o = SingularPoint::origin();
        let c1 = c.chart1.classify_singularity(&o).unwrap();
        let c2 = c.chart2.classify_singularity(&o).unwrap();
        prop_assert_eq!(c1.t, Some(t_of_ratio(&(lambda.clone() - G::int(1)))));
        prop_assert_eq!(c2.t, Some(t_of_ratio(&(G::int(1) / lambda - G::int(1)))));
    }

    #[test]
    fn self_intersection_ledger((p, q) in positive_ratio()) {
        let lambda = G::rational(p, q);
        let tree = seidenberg_resolve(&linear_model(&lambda), &SingularPoint::origin(), 32).unwrap();
        prop_assert_eq!(tree.status, ResolutionStatus::Complete);
        let mut sim = Sim::default();
        simulate(BigRational::new(p.into(), q.into()), None, None, 1, &mut sim);
        let mut ours: Vec<i64> = tree.nodes.iter().map(|n| n.self_intersection).collect();
        let mut theirs = sim.self_int.clone();
        ours.sort_unstable();
        theirs.sort_unstable();
        prop_assert_eq!(ours, theirs);
        prop_assert_eq!(tree.depth, sim.depth);
        prop_assert_eq!(tree.blowup_count(), sim.self_int.len());
        prop_assert_eq!(
            tree.self_intersection_sum(),
            -(tree.blowup_count() as i64) - tree.decrement_count() as i64
        );
    }
}

#[test]
fn radial_point_is_dicritical() {
    let c = blow_up(&linear_model(&G::int(1)), &SingularPoint::origin()).unwrap();
    assert!(c.dicritical);
    assert_eq!(c.chart1, Foliation::new(Poly::zero(), Poly::one()).unwrap().with_labels("x", "t").with_chart(c.chart1.chart()));
    let cls = linear_model(&G::int(1)).classify_singularity(&SingularPoint::origin()).unwrap();
    assert_eq!(cls.tag, SingularityTag::RadialDicritical);
}
