//! Quadratic blow-ups and the Seidenberg resolution driver.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::algebra::Var;
use crate::error::{BlowupError, FoliationError};
use crate::foliation::{Axis, Foliation, SingularPoint, SingularityClass, SingularityTag};
use crate::forms::RationalMap;
use crate::{GaussianRational as G, Poly, RatFun};

pub const DEFAULT_MAX_DEPTH: usize = 32;

/// `FOLCALC_MAX_DEPTH` if set to a positive integer, else the built-in default.
pub fn default_max_depth() -> usize {
    std::env::var("FOLCALC_MAX_DEPTH")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&d| d >= 1)
        .unwrap_or(DEFAULT_MAX_DEPTH)
}

/// Strict transforms in the two charts of one blow-up at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupCharts {
    /// Coordinates `(x, t)`, `(x, y) = (x, t x)`.
    pub chart1: Foliation,
    /// Coordinates `(s, y)`, `(x, y) = (s y, y)`.
    pub chart2: Foliation,
    pub multiplicity: u32,
    pub dicritical: bool,
}

impl BlowupCharts {
    /// Transports chart 2 to chart 1 via `(s, y) = (1/t, t x)` and compares.
    pub fn charts_agree(&self) -> bool {
        let x = RatFun::x();
        let t = RatFun::y();
        let map = RationalMap::new(&RatFun::one() / &t, &t * &x);
        match self.chart2.form().pullback(&map) {
            Ok(f) => f.same_foliation(&self.chart1.form()),
            Err(_) => false,
        }
    }
}

fn strict_transform(a: Poly, b: Poly, e: Var) -> (Poly, Poly, u32) {
    let m = if a.is_zero() {
        b.min_exponent(e)
    } else if b.is_zero() {
        a.min_exponent(e)
    } else {
        a.min_exponent(e).min(b.min_exponent(e))
    };
    let (mx, my) = match e {
        Var::X => (m, 0),
        Var::Y => (0, m),
    };
    (a.div_monomial(mx, my).unwrap(), b.div_monomial(mx, my).unwrap(), m)
}

/// Blow-up of the foliation at the origin, which must be singular.
fn blow_up_origin(f: &Foliation) -> Result<BlowupCharts, BlowupError> {
    let (a, b) = (f.a(), f.b());
    let x = Poly::x();
    let y = Poly::y();

    // chart 1: A(x,tx) dx + B(x,tx)(t dx + x dt)
    let xt = &x * &y;
    let a1 = a.compose(&x, &xt);
    let b1 = b.compose(&x, &xt);
    let (ca, cb, m1) = strict_transform(&a1 + &(&y * &b1), &x * &b1, Var::X);
    let chart1 = Foliation::new(ca, cb)?.with_labels("x", "t").with_chart("chart 1 (x, y) = (x, t x)");

    // chart 2: A(sy,y)(y ds + s dy) + B(sy,y) dy
    let sy = &x * &y;
    let a2 = a.compose(&sy, &y);
    let b2 = b.compose(&sy, &y);
    let (ca, cb, m2) = strict_transform(&y * &a2, &(&x * &a2) + &b2, Var::Y);
    let chart2 = Foliation::new(ca, cb)?.with_labels("s", "y").with_chart("chart 2 (x, y) = (s y, y)");
    debug_assert_eq!(m1, m2);

    let zero = G::zero();
    let d1 = !chart1.b().eval_var(Var::X, &zero).is_zero();
    let d2 = !chart2.a().eval_var(Var::Y, &zero).is_zero();
    if d1 != d2 {
        return Err(BlowupError::InconsistentCharts);
    }
    Ok(BlowupCharts { chart1, chart2, multiplicity: m1, dicritical: d1 })
}

/// Blow-up at an exact singular point, moved to the origin first.
pub fn blow_up(f: &Foliation, p: &SingularPoint) -> Result<BlowupCharts, BlowupError> {
    if !p.exact {
        return Err(BlowupError::Foliation(FoliationError::NotExact));
    }
    if !f.is_singular_at(&p.x, &p.y) {
        return Err(BlowupError::Foliation(FoliationError::NotSingular));
    }
    blow_up_origin(&f.translated(&p.x, &p.y))
}

/// Dicriticalness read off the lowest homogeneous part: `x·a_ν + y·b_ν ≡ 0`.
pub fn tangent_cone_dicritical(f: &Foliation) -> bool {
    let nu = f.order();
    let a = f.a().homogeneous_part(nu);
    let b = f.b().homogeneous_part(nu);
    (&(&Poly::x() * &a) + &(&Poly::y() * &b)).is_zero()
}

/// A singular point left on the divisor after resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leaf {
    /// 1 or 2; chart of the node's blow-up the point is expressed in.
    pub chart: u8,
    pub point: SingularPoint,
    pub class: Option<SingularityClass>,
    /// Divisor ids passing through the point.
    pub divisors: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionNode {
    /// Also the id of the exceptional divisor this blow-up creates.
    pub id: usize,
    pub parent: Option<usize>,
    /// Center, in the coordinates of the parent's chart (or the root).
    pub center: SingularPoint,
    pub center_chart: u8,
    pub center_class: SingularityClass,
    pub charts: BlowupCharts,
    pub depth: usize,
    pub self_intersection: i64,
    pub children: Vec<usize>,
    pub leaf_singularities: Vec<Leaf>,
    /// Singular points on a dicritical divisor, not processed further.
    pub tangencies: Vec<Leaf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionStatus {
    Complete,
    DepthExhausted,
    NonExactCenter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTree {
    pub root: Foliation,
    pub center: SingularPoint,
    pub root_class: SingularityClass,
    pub nodes: Vec<ResolutionNode>,
    /// Intersections between divisors, as unordered id pairs.
    pub edges: BTreeSet<(usize, usize)>,
    pub depth: usize,
    pub complete: bool,
    pub status: ResolutionStatus,
    pub max_depth: usize,
    blowups: usize,
    decrements: usize,
}

struct Driver {
    nodes: Vec<ResolutionNode>,
    edges: BTreeSet<(usize, usize)>,
    depth: usize,
    max_depth: usize,
    status: ResolutionStatus,
    blowups: usize,
    decrements: usize,
}

fn edge(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn lines_through(divisors: &[(usize, Axis)], p: &SingularPoint) -> Vec<(usize, Axis)> {
    divisors
        .iter()
        .filter(|(_, axis)| match axis {
            Axis::XZero => p.x.is_zero(),
            Axis::YZero => p.y.is_zero(),
        })
        .cloned()
        .collect()
}

impl Driver {
    #[allow(clippy::too_many_arguments)]
    fn process(
        &mut self,
        f: &Foliation,
        divisors: &[(usize, Axis)],
        p: &SingularPoint,
        class: SingularityClass,
        parent: Option<usize>,
        chart: u8,
        depth: usize,
    ) -> Result<usize, BlowupError> {
        let through = lines_through(divisors, p);
        let charts = blow_up(f, p)?;
        let id = self.nodes.len();
        self.blowups += 1;
        self.depth = self.depth.max(depth);
        for (j, _) in &through {
            self.nodes[*j].self_intersection -= 1;
            self.decrements += 1;
            self.edges.insert(edge(*j, id));
        }
        if through.len() == 2 {
            self.edges.remove(&edge(through[0].0, through[1].0));
        }
        let dicritical = charts.dicritical || class.tag == SingularityTag::RadialDicritical;
        self.nodes.push(ResolutionNode {
            id,
            parent,
            center: p.clone(),
            center_chart: chart,
            center_class: class,
            charts: charts.clone(),
            depth,
            self_intersection: -1,
            children: Vec::new(),
            leaf_singularities: Vec::new(),
            tangencies: Vec::new(),
        });
        if let Some(par) = parent {
            self.nodes[par].children.push(id);
        }

        let mut div1 = vec![(id, Axis::XZero)];
        let mut div2 = vec![(id, Axis::YZero)];
        for (j, axis) in &through {
            match axis {
                Axis::YZero => div1.push((*j, Axis::YZero)),
                Axis::XZero => div2.push((*j, Axis::XZero)),
            }
        }

        let mut on_divisor: Vec<(u8, SingularPoint)> = Vec::new();
        for q in charts.chart1.singular_locus()? {
            if q.x.is_zero() {
                on_divisor.push((1, q));
            }
        }
        if charts.chart2.is_singular_at(&G::zero(), &G::zero()) {
            on_divisor.push((2, SingularPoint::origin()));
        }

        for (c, q) in on_divisor {
            let (cf, cdiv) = if c == 1 { (&charts.chart1, &div1) } else { (&charts.chart2, &div2) };
            let ids: Vec<usize> = lines_through(cdiv, &q).into_iter().map(|(j, _)| j).collect();
            if !q.exact {
                self.status = ResolutionStatus::NonExactCenter;
                let leaf = Leaf { chart: c, point: q, class: None, divisors: ids };
                self.nodes[id].leaf_singularities.push(leaf);
                continue;
            }
            let qc = cf.classify_singularity(&q)?;
            if dicritical {
                let leaf = Leaf { chart: c, point: q, class: Some(qc), divisors: ids };
                self.nodes[id].tangencies.push(leaf);
                continue;
            }
            if qc.is_irreducible() {
                let leaf = Leaf { chart: c, point: q, class: Some(qc), divisors: ids };
                self.nodes[id].leaf_singularities.push(leaf);
            } else if depth >= self.max_depth {
                if self.status == ResolutionStatus::Complete {
                    self.status = ResolutionStatus::DepthExhausted;
                }
                let leaf = Leaf { chart: c, point: q, class: Some(qc), divisors: ids };
                self.nodes[id].leaf_singularities.push(leaf);
            } else {
                self.process(cf, cdiv, &q, qc, Some(id), c, depth + 1)?;
            }
        }
        Ok(id)
    }
}

/// Blows up repeatedly until every singular point on the divisor is
/// irreducible, or the depth budget runs out.
pub fn seidenberg_resolve(f: &Foliation, p: &SingularPoint, max_depth: usize) -> Result<ResolutionTree, BlowupError> {
    if max_depth == 0 {
        return Err(BlowupError::InvalidDepth);
    }
    if !p.exact {
        return Err(BlowupError::Foliation(FoliationError::NotExact));
    }
    let root_class = f.classify_singularity(p)?;
    if root_class.tag == SingularityTag::Regular {
        return Err(BlowupError::Foliation(FoliationError::NotSingular));
    }
    let mut d = Driver {
        nodes: Vec::new(),
        edges: BTreeSet::new(),
        depth: 0,
        max_depth,
        status: ResolutionStatus::Complete,
        blowups: 0,
        decrements: 0,
    };
    if !root_class.is_irreducible() {
        d.process(f, &[], p, root_class.clone(), None, 0, 1)?;
    }
    Ok(ResolutionTree {
        root: f.clone(),
        center: p.clone(),
        root_class,
        nodes: d.nodes,
        edges: d.edges,
        depth: d.depth,
        complete: d.status == ResolutionStatus::Complete,
        status: d.status,
        max_depth,
        blowups: d.blowups,
        decrements: d.decrements,
    })
}

impl ResolutionTree {
    pub fn leaves(&self) -> impl Iterator<Item = &Leaf> {
        self.nodes.iter().flat_map(|n| n.leaf_singularities.iter())
    }

    fn leaf_classes(&self) -> Vec<&SingularityClass> {
        if self.nodes.is_empty() {
            return vec![&self.root_class];
        }
        self.leaves().filter_map(|l| l.class.as_ref()).collect()
    }

    pub fn has_saddle_node(&self) -> bool {
        self.leaf_classes().iter().any(|c| c.tag == SingularityTag::SaddleNodeCandidate)
    }

    pub fn has_dicritical(&self) -> bool {
        self.nodes.iter().any(|n| n.charts.dicritical || n.center_class.tag == SingularityTag::RadialDicritical)
    }

    pub fn blowup_count(&self) -> usize {
        self.blowups
    }

    pub fn decrement_count(&self) -> usize {
        self.decrements
    }

    pub fn self_intersection_sum(&self) -> i64 {
        self.nodes.iter().map(|n| n.self_intersection).sum()
    }

    fn node_dicritical(&self, id: usize) -> bool {
        let n = &self.nodes[id];
        n.charts.dicritical || n.center_class.tag == SingularityTag::RadialDicritical
    }

    /// Connected components of the invariant (non-dicritical) divisors.
    pub fn invariant_components(&self) -> Vec<Vec<usize>> {
        let invariant: Vec<usize> = (0..self.nodes.len()).filter(|&i| !self.node_dicritical(i)).collect();
        let mut seen = vec![false; self.nodes.len()];
        let mut out = Vec::new();
        for &start in &invariant {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &(a, b) in &self.edges {
                    let w = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if !seen[w] && !self.node_dicritical(w) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Non-dicritical with no saddle-node in the resolution.
pub fn is_generalized_curve(tree: &ResolutionTree) -> Result<bool, BlowupError> {
    if !tree.complete {
        return Err(BlowupError::IncompleteTree);
    }
    Ok(!tree.has_dicritical() && !tree.has_saddle_node())
}

/// Every connected component of the invariant part of the divisor carries a
/// non-resonant non-degenerate singularity. A depth-0 tree counts as a single
/// component containing the root singularity.
pub fn is_nonresonant_extended_gc(tree: &ResolutionTree) -> Result<bool, BlowupError> {
    if !tree.complete {
        return Err(BlowupError::IncompleteTree);
    }
    if tree.has_saddle_node() {
        return Err(BlowupError::SaddleNodePresent);
    }
    if tree.nodes.is_empty() {
        return Ok(tree.root_class.is_non_resonant());
    }
    Ok(tree.invariant_components().iter().all(|comp| {
        tree.leaves().any(|l| {
            l.class.as_ref().is_some_and(|c| c.is_non_resonant()) && l.divisors.iter().any(|d| comp.contains(d))
        })
    }))
}
