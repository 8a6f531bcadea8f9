//! Polynomial foliations of the plane: singular locus, linear parts,
//! classification, Camacho–Sad indices and logarithmic forms.

mod classify;
mod index;
mod logarithmic;
mod matrix;

pub use classify::{classify_matrix, NonDegenerateKind, SingularityClass, SingularityTag};
pub use index::{residue_at, Axis, IndexSum, ResidueCluster};
pub use logarithmic::LogarithmicRepresentation;
pub use matrix::Matrix2;

use num_traits::Zero;

use crate::algebra::roots::split_gaussian_roots;
use crate::algebra::{poly_gcd, resultant, UniPoly, Var};
use crate::error::FoliationError;
use crate::{Form, GaussianRational, Poly};

/// A reduced polynomial one-form `a dx + b dy` with `gcd(a, b) = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Foliation {
    a: Poly,
    b: Poly,
    labels: (String, String),
    chart: String,
    warnings: Vec<String>,
}

/// A singular point, or a cluster of singular points whose coordinates are
/// not in Q(i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingularPoint {
    pub x: GaussianRational,
    pub y: GaussianRational,
    pub exact: bool,
    /// For clusters: `(e₁, e₂)` whose common zeros contain the cluster.
    pub eliminant: Option<(Poly, Poly)>,
    pub multiplicity: usize,
}

impl SingularPoint {
    pub fn exact(x: GaussianRational, y: GaussianRational) -> Self {
        Self { x, y, exact: true, eliminant: None, multiplicity: 1 }
    }

    pub fn origin() -> Self {
        Self::exact(GaussianRational::zero(), GaussianRational::zero())
    }

    pub fn swapped(&self) -> Self {
        Self {
            x: self.y.clone(),
            y: self.x.clone(),
            exact: self.exact,
            eliminant: self.eliminant.as_ref().map(|(e1, e2)| (e1.swap_vars(), e2.swap_vars())),
            multiplicity: self.multiplicity,
        }
    }
}

impl Foliation {
    /// Divides out `gcd(a, b)`, recording a warning when it is not constant.
    pub fn new(a: Poly, b: Poly) -> Result<Self, FoliationError> {
        if a.is_zero() && b.is_zero() {
            return Err(FoliationError::ZeroForm);
        }
        let g = poly_gcd(&a, &b);
        let mut warnings = Vec::new();
        let (a, b) = if g.is_constant() {
            (a, b)
        } else {
            warnings.push(format!("common factor {g} removed"));
            (a.exact_div(&g).unwrap(), b.exact_div(&g).unwrap())
        };
        Ok(Self { a, b, labels: ("x".into(), "y".into()), chart: "affine".into(), warnings })
    }

    /// Clears denominators of a rational one-form first.
    pub fn from_form(form: &Form) -> Result<Self, FoliationError> {
        if form.is_zero() {
            return Err(FoliationError::ZeroForm);
        }
        let cleared = form.clear_denominators();
        let mut f = Self::new(cleared.a, cleared.b)?;
        if !cleared.factor.is_polynomial() || !cleared.factor.num().is_constant() {
            f.warnings.insert(0, format!("common factor {} removed", cleared.factor));
        }
        Ok(f)
    }

    pub fn with_labels(mut self, x: &str, y: &str) -> Self {
        self.labels = (x.to_string(), y.to_string());
        self
    }

    pub fn with_chart(mut self, chart: &str) -> Self {
        self.chart = chart.to_string();
        self
    }

    pub fn push_warning(&mut self, w: String) {
        self.warnings.push(w);
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    pub fn coeff(&self, v: Var) -> &Poly {
        match v {
            Var::X => &self.a,
            Var::Y => &self.b,
        }
    }

    pub fn labels(&self) -> (&str, &str) {
        (&self.labels.0, &self.labels.1)
    }

    pub fn chart(&self) -> &str {
        &self.chart
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn form(&self) -> Form {
        Form::from_polys(self.a.clone(), self.b.clone())
    }

    /// Form printed with the chart's coordinate names.
    pub fn display_form(&self) -> String {
        self.form().named(self.labels()).to_string()
    }

    /// Lowest total degree among the two coefficients.
    pub fn order(&self) -> u32 {
        match (self.a.order(), self.b.order()) {
            (Some(p), Some(q)) => p.min(q),
            (Some(p), None) | (None, Some(p)) => p,
            (None, None) => 0,
        }
    }

    pub fn is_singular_at(&self, x: &GaussianRational, y: &GaussianRational) -> bool {
        self.a.eval(x, y).is_zero() && self.b.eval(x, y).is_zero()
    }

    /// The same foliation moved so that `(x, y)` becomes the origin.
    pub fn translated(&self, x: &GaussianRational, y: &GaussianRational) -> Self {
        Self {
            a: self.a.translate(x, y),
            b: self.b.translate(x, y),
            labels: self.labels.clone(),
            chart: self.chart.clone(),
            warnings: Vec::new(),
        }
    }

    /// Exchanges the two coordinates.
    pub fn swapped(&self) -> Self {
        Self {
            a: self.b.swap_vars(),
            b: self.a.swap_vars(),
            labels: (self.labels.1.clone(), self.labels.0.clone()),
            chart: self.chart.clone(),
            warnings: Vec::new(),
        }
    }

    /// Common zeros of `a` and `b`: Q(i) points exactly, the rest as clusters.
    pub fn singular_locus(&self) -> Result<Vec<SingularPoint>, FoliationError> {
        if self.a.is_constant() && !self.a.is_zero() || self.b.is_constant() && !self.b.is_zero() {
            return Ok(Vec::new());
        }
        let r = resultant(&self.a, &self.b, Var::Y);
        if r.is_zero() {
            return Err(FoliationError::InfiniteSingularSet);
        }
        let r = UniPoly::from_multi(&r, Var::X).expect("resultant in y depends on x only");
        let split = split_gaussian_roots(&r);
        let mut out = Vec::new();
        for (x0, _) in &split.roots {
            let pa = UniPoly::from_multi(&self.a.eval_var(Var::X, x0).swap_vars(), Var::X).unwrap();
            let pb = UniPoly::from_multi(&self.b.eval_var(Var::X, x0).swap_vars(), Var::X).unwrap();
            let g = pa.gcd(&pb);
            if g.is_zero() {
                return Err(FoliationError::InfiniteSingularSet);
            }
            let ys = split_gaussian_roots(&g);
            for (y0, m) in ys.roots {
                out.push(SingularPoint { multiplicity: m, ..SingularPoint::exact(x0.clone(), y0) });
            }
            if ys.rest.degree().unwrap_or(0) > 0 {
                let ex = Poly::x() - Poly::constant(x0.clone());
                out.push(SingularPoint {
                    x: x0.clone(),
                    y: GaussianRational::zero(),
                    exact: false,
                    multiplicity: ys.rest.degree().unwrap(),
                    eliminant: Some((ex, ys.rest.to_multi(Var::Y))),
                });
            }
        }
        if split.rest.degree().unwrap_or(0) > 0 {
            let ry = resultant(&self.a, &self.b, Var::X);
            out.push(SingularPoint {
                x: GaussianRational::zero(),
                y: GaussianRational::zero(),
                exact: false,
                multiplicity: split.rest.degree().unwrap(),
                eliminant: Some((split.rest.to_multi(Var::X), ry)),
            });
        }
        Ok(out)
    }

    /// Jacobian at `p` of the dual vector field `−b ∂x + a ∂y`.
    pub fn linear_part(&self, p: &SingularPoint) -> Result<Matrix2, FoliationError> {
        if !p.exact {
            return Err(FoliationError::NotExact);
        }
        if !self.is_singular_at(&p.x, &p.y) {
            return Err(FoliationError::NotSingular);
        }
        let at = |q: &Poly, v: Var| q.derivative(v).eval(&p.x, &p.y);
        Ok(Matrix2::new([
            [-at(&self.b, Var::X), -at(&self.b, Var::Y)],
            [at(&self.a, Var::X), at(&self.a, Var::Y)],
        ]))
    }

    /// Class of `p`; `Regular` when `p` is not singular.
    pub fn classify_singularity(&self, p: &SingularPoint) -> Result<SingularityClass, FoliationError> {
        if !p.exact {
            return Err(FoliationError::NotExact);
        }
        if !self.is_singular_at(&p.x, &p.y) {
            return Ok(SingularityClass::regular());
        }
        Ok(classify_matrix(&self.linear_part(p)?))
    }

    pub fn cs_index(&self, p: &SingularPoint, axis: Axis) -> Result<GaussianRational, FoliationError> {
        index::cs_index(self, p, axis)
    }

    pub fn projective_line_index_sum(&self, line: Axis) -> Result<IndexSum, FoliationError> {
        index::projective_line_index_sum(self, line)
    }

    pub fn logarithmic_representation(&self, curves: &[Poly]) -> Option<LogarithmicRepresentation> {
        logarithmic::logarithmic_representation(self, curves)
    }
}
