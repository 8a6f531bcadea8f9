//! One function per subcommand, each producing a report payload.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde_json::{json, Value};
use thiserror::Error;

use folcalc_core::blowup::{
    default_max_depth, is_generalized_curve, is_nonresonant_extended_gc, seidenberg_resolve, Leaf, ResolutionStatus,
    ResolutionTree,
};
use folcalc_core::error::{BlowupError, FoliationError, HolonomyError, TripleError};
use folcalc_core::foliation::{Axis, Foliation, SingularPoint, SingularityClass};
use folcalc_core::holonomy::{holonomy_multiplier, resonance_integral, LoopSpec, ResonanceVerdict};
use folcalc_core::parser::{parse_function, parse_polynomial, Expr, ParseError};
use folcalc_core::triples::{
    bernoulli_recognize, gauge_ode_classify, modify_triple, riccati_canonical_triple, riccati_reduce, verify_triple,
    Convention, GaugeData, GaugeOdeKind, GaugeOdeVerdict, ProjectiveTriple, RiccatiCoefficients, TripleCheck,
};
use folcalc_core::{Form, GaussianRational, Poly, RatFun};

use crate::args::{AxisArg, Command};
use crate::document::{DocumentError, InputDocument, Section};
use crate::report::{ErrorInfo, Status};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("{what}: {err}")]
    Parse { what: String, err: ParseError },
    #[error("missing key `{key}` in section [{section}]")]
    Missing { section: Section, key: String },
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Check(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Document(e) if e.is_resource_limit() => Status::ResourceExceeded,
            CliError::Parse { err, .. } if err.is_resource_limit() => Status::ResourceExceeded,
            CliError::Resource(_) => Status::ResourceExceeded,
            CliError::Check(_) => Status::CheckFailed,
            _ => Status::InvalidInput,
        }
    }

    pub fn info(&self) -> ErrorInfo {
        let (line, column) = match self {
            CliError::Document(e) => (Some(e.line), Some(e.column)),
            CliError::Parse { err, .. } => (Some(err.line), Some(err.column)),
            _ => (None, None),
        };
        let message = match self {
            CliError::Document(e) => e.kind.to_string(),
            CliError::Parse { what, err } => format!("{what}: {}", err.kind),
            other => other.to_string(),
        };
        ErrorInfo { message, line, column }
    }
}

impl From<FoliationError> for CliError {
    fn from(e: FoliationError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<BlowupError> for CliError {
    fn from(e: BlowupError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<TripleError> for CliError {
    fn from(e: TripleError) -> Self {
        match e {
            TripleError::NoPhiWithinBound(_) => CliError::Resource(e.to_string()),
            TripleError::XiNotGdR
            | TripleError::EtaNotProportional
            | TripleError::NotFunctionOfR
            | TripleError::NotProportional
            | TripleError::VerificationFailed => CliError::Check(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<HolonomyError> for CliError {
    fn from(e: HolonomyError) -> Self {
        match e {
            HolonomyError::StepFailure { .. } => CliError::Check(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub result: Value,
    pub warnings: Vec<String>,
    pub status: Status,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Self { result, warnings: Vec::new(), status: Status::Ok }
    }

    fn checked(result: Value, passed: bool) -> Self {
        Self { result, warnings: Vec::new(), status: if passed { Status::Ok } else { Status::CheckFailed } }
    }

    fn warn(mut self, w: impl Into<String>) -> Self {
        self.warnings.push(w.into());
        self
    }
}

/// Largest coefficient degree of an input form that commands accept.
pub const MAX_FORM_DEGREE: u32 = 32;

/// Values a command reads, recorded for the report echo.
pub struct Inputs<'a> {
    doc: Option<&'a InputDocument>,
    pub echo: BTreeMap<String, String>,
}

impl<'a> Inputs<'a> {
    pub fn new(doc: Option<&'a InputDocument>) -> Self {
        Self { doc, echo: BTreeMap::new() }
    }

    fn entry(&mut self, sec: Section, key: &str) -> Result<&'a Expr, CliError> {
        let doc = self.doc.ok_or_else(|| CliError::Missing { section: sec, key: key.into() })?;
        let e = doc.get(sec, key).ok_or_else(|| CliError::Missing { section: sec, key: key.into() })?;
        self.echo.insert(format!("{sec}.{key}"), e.raw.clone());
        Ok(&e.value)
    }

    fn optional(&mut self, sec: Section, key: &str) -> Option<&'a Expr> {
        self.doc?.get(sec, key).map(|_| self.entry(sec, key).expect("present"))
    }

    fn form(&mut self, sec: Section, key: &str) -> Result<Form, CliError> {
        match self.entry(sec, key)? {
            Expr::Form(w) => {
                let degree = [&w.a, &w.b]
                    .iter()
                    .flat_map(|c| [c.num().total_degree(), c.den().total_degree()])
                    .flatten()
                    .max()
                    .unwrap_or(0);
                if degree > MAX_FORM_DEGREE {
                    return Err(CliError::Resource(format!(
                        "[{sec}] {key} has degree {degree}, above the budget of {MAX_FORM_DEGREE}"
                    )));
                }
                Ok(w.clone())
            }
            Expr::Function(r) if r.is_zero() => Ok(Form::zero()),
            Expr::Function(_) => Err(CliError::Invalid(format!("[{sec}] {key} must be a one-form"))),
        }
    }

    fn function_entry(&mut self, sec: Section, key: &str) -> Result<Option<RatFun>, CliError> {
        match self.optional(sec, key) {
            None => Ok(None),
            Some(Expr::Function(r)) => Ok(Some(r.clone())),
            Some(Expr::Form(_)) => Err(CliError::Invalid(format!("[{sec}] {key} must be a function"))),
        }
    }

    fn flag(&mut self, name: &str, value: impl ToString) {
        self.echo.insert(format!("--{name}"), value.to_string());
    }

    fn flag_function(&mut self, name: &str, text: &str) -> Result<RatFun, CliError> {
        self.flag(name, text);
        parse_function(text).map_err(|err| CliError::Parse { what: format!("--{name}"), err })
    }

    fn flag_polynomial(&mut self, name: &str, text: &str) -> Result<Poly, CliError> {
        self.flag(name, text);
        parse_polynomial(text).map_err(|err| CliError::Parse { what: format!("--{name}"), err })
    }

    fn foliation(&mut self) -> Result<Foliation, CliError> {
        Ok(Foliation::from_form(&self.form(Section::Foliation, "form")?)?)
    }

    fn triple(&mut self) -> Result<ProjectiveTriple<GaussianRational>, CliError> {
        Ok(ProjectiveTriple::new(
            self.form(Section::Triple, "omega")?,
            self.form(Section::Triple, "eta")?,
            self.form(Section::Triple, "xi")?,
        ))
    }
}

fn point_json(p: &SingularPoint) -> Value {
    if p.exact {
        json!({"x": p.x.to_string(), "y": p.y.to_string(), "exact": true, "multiplicity": p.multiplicity})
    } else {
        let (ex, ey) = p.eliminant.as_ref().map_or((String::new(), String::new()), |(a, b)| (a.to_string(), b.to_string()));
        json!({"exact": false, "eliminant": [ex, ey], "multiplicity": p.multiplicity})
    }
}

fn class_json(c: &SingularityClass) -> Value {
    json!({
        "tag": format!("{:?}", c.tag),
        "subtag": c.subtag.map(|s| format!("{s:?}")),
        "t": c.t.as_ref().map_or_else(|| "infinity".to_string(), |t| t.to_string()),
        "ratio": c.ratio.as_ref().map(|r| r.to_string()),
        "label": c.to_string(),
    })
}

fn complex_json(z: Complex64) -> Value {
    json!({"re": z.re, "im": z.im})
}

fn check_json(c: &TripleCheck<GaussianRational>) -> Value {
    json!({
        "d_omega": c.holds[0],
        "d_eta": c.holds[1],
        "d_xi": c.holds[2],
        "residuals": c.residuals.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
    })
}

fn triple_json(t: &ProjectiveTriple<GaussianRational>) -> Value {
    json!({"omega": t.omega.to_string(), "eta": t.eta.to_string(), "xi": t.xi.to_string()})
}

fn axis_of(a: AxisArg) -> Axis {
    a.into()
}

fn constant_param(inputs: &mut Inputs, key: &str) -> Result<GaussianRational, CliError> {
    match inputs.function_entry(Section::Params, key)? {
        None => Ok(GaussianRational::int(0)),
        Some(r) => r.as_constant().ok_or_else(|| CliError::Invalid(format!("[params] {key} must be a constant"))),
    }
}

pub fn classify(inputs: &mut Inputs) -> Result<Outcome, CliError> {
    let f = inputs.foliation()?;
    let locus = f.singular_locus()?;
    let mut points = Vec::new();
    for p in &locus {
        let mut v = point_json(p);
        if p.exact {
            v["class"] = class_json(&f.classify_singularity(p)?);
        }
        points.push(v);
    }
    let mut out = Outcome::ok(json!({"form": f.display_form(), "count": locus.len(), "singularities": points}));
    out.warnings.extend(f.warnings().iter().cloned());
    if locus.iter().any(|p| !p.exact) {
        out = out.warn("some singular points lie outside Q(i) and are reported by their eliminants");
    }
    Ok(out)
}

fn leaf_json(l: &Leaf) -> Value {
    let mut v = point_json(&l.point);
    v["chart"] = json!(l.chart);
    v["divisors"] = json!(l.divisors);
    if let Some(c) = &l.class {
        v["class"] = class_json(c);
    }
    v
}

fn tree_json(t: &ResolutionTree) -> Value {
    let nodes: Vec<Value> = t
        .nodes
        .iter()
        .map(|n| {
            json!({
                "id": n.id,
                "parent": n.parent,
                "depth": n.depth,
                "center": point_json(&n.center),
                "center_chart": n.center_chart,
                "center_class": class_json(&n.center_class),
                "multiplicity": n.charts.multiplicity,
                "dicritical": n.charts.dicritical,
                "chart1": n.charts.chart1.display_form(),
                "chart2": n.charts.chart2.display_form(),
                "self_intersection": n.self_intersection,
                "children": n.children,
                "leaves": n.leaf_singularities.iter().map(leaf_json).collect::<Vec<_>>(),
                "tangencies": n.tangencies.iter().map(leaf_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "center": point_json(&t.center),
        "root_class": class_json(&t.root_class),
        "status": format!("{:?}", t.status),
        "complete": t.complete,
        "depth": t.depth,
        "max_depth": t.max_depth,
        "blowups": t.blowup_count(),
        "nodes": nodes,
        "edges": t.edges.iter().collect::<Vec<_>>(),
        "invariant_components": t.invariant_components(),
        "self_intersection_sum": t.self_intersection_sum(),
        "dicritical": t.has_dicritical(),
        "saddle_node": t.has_saddle_node(),
        "generalized_curve": is_generalized_curve(t).ok(),
        "nonresonant_extended_gc": is_nonresonant_extended_gc(t).ok(),
    })
}

pub fn resolve(inputs: &mut Inputs, max_depth: Option<usize>) -> Result<Outcome, CliError> {
    let f = inputs.foliation()?;
    let p = SingularPoint::exact(constant_param(inputs, "x0")?, constant_param(inputs, "y0")?);
    let depth = max_depth.unwrap_or_else(default_max_depth);
    inputs.flag("max-depth", depth);
    if !f.is_singular_at(&p.x, &p.y) {
        return Err(CliError::Invalid(format!("({}, {}) is not a singular point", p.x, p.y)));
    }
    let tree = seidenberg_resolve(&f, &p, depth)?;
    let mut out = Outcome::ok(tree_json(&tree));
    out.warnings.extend(f.warnings().iter().cloned());
    match tree.status {
        ResolutionStatus::Complete => {}
        ResolutionStatus::DepthExhausted => {
            out.status = Status::ResourceExceeded;
            out = out.warn(format!("depth bound {depth} reached; the tree is partial"));
        }
        ResolutionStatus::NonExactCenter => {
            out.status = Status::CheckFailed;
            out = out.warn("a blow-up center lies outside Q(i); the tree is partial");
        }
    }
    if tree.depth == 0 {
        out = out.warn("germ needs no blow-up; the empty divisor counts as one component");
    }
    Ok(out)
}

fn convention_note(t: &ProjectiveTriple<GaussianRational>, check: &TripleCheck<GaussianRational>) -> Option<String> {
    (!check.all() && verify_triple(&t.reversed()).all())
        .then(|| "the relations hold for (omega, -eta, -xi): reversed sign convention".to_string())
}

pub fn verify(inputs: &mut Inputs) -> Result<Outcome, CliError> {
    let t = inputs.triple()?;
    let check = verify_triple(&t);
    let mut out = Outcome::checked(check_json(&check), check.all());
    if let Some(w) = convention_note(&t, &check) {
        out = out.warn(w);
    }
    Ok(out)
}

pub fn modify(inputs: &mut Inputs, g: &str, h: &str) -> Result<Outcome, CliError> {
    let t = inputs.triple()?;
    let gauge = GaugeData::new(inputs.flag_function("g", g)?, inputs.flag_function("h", h)?)?;
    let input_check = verify_triple(&t);
    let modified = modify_triple(&t, &gauge)?;
    let check = verify_triple(&modified);
    let mut result = triple_json(&modified);
    result["input_holds"] = json!(input_check.all());
    result["check"] = check_json(&check);
    let mut out = Outcome::checked(result, check.all());
    if !input_check.all() {
        out = out.warn("the input triple does not satisfy the structure equations");
    }
    Ok(out)
}

pub fn riccati(inputs: &mut Inputs, p: &str, a: &str, b: &str, c: &str) -> Result<Outcome, CliError> {
    let rc = RiccatiCoefficients::new(
        inputs.flag_polynomial("p", p)?,
        inputs.flag_polynomial("a", a)?,
        inputs.flag_polynomial("b", b)?,
        inputs.flag_polynomial("c", c)?,
    )?;
    let t = riccati_canonical_triple(&rc);
    let check = verify_triple(&t);
    let gauge = rc.example_gauge();
    let modified = modify_triple(&t, &gauge)?;
    let (eta_e, xi_e) = rc.example_expected();
    let matches = modified.eta == eta_e && modified.xi == xi_e;
    let mut result = triple_json(&t);
    result["check"] = check_json(&check);
    result["example_gauge"] = json!({
        "g": gauge.g.to_string(),
        "h": gauge.h.to_string(),
        "eta": modified.eta.to_string(),
        "xi": modified.xi.to_string(),
        "matches_expected": matches,
    });
    Ok(Outcome::checked(result, check.all() && matches))
}

pub fn reduce(inputs: &mut Inputs, r: &str, g: &str, deg_bound: usize) -> Result<Outcome, CliError> {
    let t = inputs.triple()?;
    let r = inputs.flag_function("R", r)?;
    let g = inputs.flag_function("g", g)?;
    inputs.flag("deg-bound", deg_bound);
    let red = riccati_reduce(&t, &r, &g, deg_bound)?;
    let result = json!({
        "convention": format!("{:?}", red.convention),
        "H": red.h.to_string(),
        "F": red.f.to_string(),
        "phi": red.phi.named(("z", "w")).to_string(),
        "sigma": [red.sigma.first.to_string(), red.sigma.second.to_string()],
        "omega_phi": red.omega_phi.to_string(),
        "omega": red.omega.to_string(),
        "omega_prime": red.omega_prime.to_string(),
        "pullback_wedge_vanishes": true,
    });
    let mut out = Outcome::ok(result);
    out.warnings.extend(red.warnings.iter().cloned());
    if red.convention == Convention::Reversed {
        out = out.warn("reversed sign convention: omega_phi = dy + (y^2/2 + phi(x))*dx");
    }
    Ok(out)
}

pub fn cs_index(inputs: &mut Inputs, axis: AxisArg, projective: bool) -> Result<Outcome, CliError> {
    let f = inputs.foliation()?;
    let axis = axis_of(axis);
    inputs.flag("curve", axis.name());
    let mut out = if projective {
        inputs.flag("projective-line", true);
        let s = f.projective_line_index_sum(axis)?;
        Outcome::ok(json!({
            "curve": axis.name(),
            "affine": s.affine.iter().map(|(p, i)| {
                let mut v = point_json(p);
                v["index"] = json!(i.to_string());
                v
            }).collect::<Vec<_>>(),
            "clusters": s.clusters.iter().map(|c| json!({
                "eliminant": c.eliminant.to_string(),
                "count": c.count,
                "total_residue": c.total_residue.to_string(),
            })).collect::<Vec<_>>(),
            "infinity": s.infinity.to_string(),
            "total": s.total.to_string(),
        }))
    } else {
        let on_axis = |p: &SingularPoint| match axis {
            Axis::YZero => p.y == GaussianRational::int(0),
            Axis::XZero => p.x == GaussianRational::int(0),
        };
        let locus = f.singular_locus()?;
        let mut indices = Vec::new();
        let mut skipped = false;
        for p in &locus {
            if !p.exact {
                skipped = true;
            } else if on_axis(p) {
                let mut v = point_json(p);
                v["index"] = json!(f.cs_index(p, axis)?.to_string());
                indices.push(v);
            }
        }
        let mut o = Outcome::ok(json!({"curve": axis.name(), "indices": indices}));
        if skipped {
            o = o.warn("singular points outside Q(i) were skipped; use --projective-line for their total");
        }
        o
    };
    out.warnings.splice(0..0, f.warnings().iter().cloned());
    Ok(out)
}

pub fn log_rep(inputs: &mut Inputs, curves: &str) -> Result<Outcome, CliError> {
    let f = inputs.foliation()?;
    inputs.flag("curves", curves);
    let mut polys = Vec::new();
    for name in curves.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let p = match inputs.optional(Section::Curves, name) {
            Some(Expr::Function(r)) if r.is_polynomial() => r.num().clone(),
            Some(_) => return Err(CliError::Invalid(format!("[curves] {name} must be a polynomial"))),
            None => parse_polynomial(name).map_err(|err| CliError::Parse { what: format!("curve {name:?}"), err })?,
        };
        polys.push(p);
    }
    if polys.is_empty() {
        return Err(CliError::Invalid("--curves needs at least one curve".into()));
    }
    Ok(match f.logarithmic_representation(&polys) {
        Some(rep) => Outcome::ok(json!({
            "curves": rep.curves.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "residues": rep.residues.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "closed_form": rep.closed_form().to_string(),
            "verified": rep.verify(&f.form()),
        })),
        None => Outcome::checked(json!({"found": false}), false)
            .warn("the form is not a combination of the given logarithmic differentials"),
    })
}

pub fn holonomy(inputs: &mut Inputs, axis: AxisArg, radius: f64, steps: usize) -> Result<Outcome, CliError> {
    let f = inputs.foliation()?;
    let axis = axis_of(axis);
    inputs.flag("axis", axis.name());
    inputs.flag("radius", radius);
    inputs.flag("steps", steps);
    let lp = LoopSpec::new(axis, radius).with_steps(steps);
    let est = holonomy_multiplier(&f, &lp)?;
    Ok(Outcome::ok(json!({
        "axis": axis.name(),
        "radius": radius,
        "multiplier": complex_json(est.multiplier),
        "error_estimate": est.error_estimate,
        "return_maps": est.return_maps.iter().map(|(s, v)| json!({"seed": complex_json(*s), "value": complex_json(*v)})).collect::<Vec<_>>(),
    })))
}

pub fn resonance(
    inputs: &mut Inputs,
    axis: AxisArg,
    radius: f64,
    steps: usize,
    denom_bound: i64,
) -> Result<Outcome, CliError> {
    let f = inputs.foliation()?;
    let axis = axis_of(axis);
    inputs.flag("axis", axis.name());
    inputs.flag("radius", radius);
    inputs.flag("steps", steps);
    inputs.flag("denom-bound", denom_bound);
    if denom_bound < 1 {
        return Err(CliError::Invalid("--denom-bound must be positive".into()));
    }
    let lp = LoopSpec::new(axis, radius).with_steps(steps);
    let res = resonance_integral(&f, &lp, denom_bound)?;
    let (verdict, order) = match res.verdict {
        ResonanceVerdict::Regular => ("regular", None),
        ResonanceVerdict::Resonant { order } => ("resonant", Some(order)),
        ResonanceVerdict::NonResonant => ("non_resonant", None),
    };
    Ok(Outcome::ok(json!({
        "axis": axis.name(),
        "integral": complex_json(res.integral),
        "value": complex_json(res.value),
        "verdict": verdict,
        "order": order,
        "enclosed_singularities": res.enclosed,
    })))
}

pub fn gauge_ode(inputs: &mut Inputs, s: &str) -> Result<Outcome, CliError> {
    let s = inputs.flag_function("s", s)?;
    let case = gauge_ode_classify(&s)?;
    let kind = match &case.kind {
        GaugeOdeKind::SimplePole { a } => json!({"case": "simple_pole", "residue": a.to_string()}),
        GaugeOdeKind::HigherOrderPole { order } => json!({"case": "higher_order_pole", "order": order}),
        GaugeOdeKind::Holomorphic => json!({"case": "holomorphic"}),
    };
    let verdict = match case.verdict {
        GaugeOdeVerdict::ExtensionObstructed => "extension_obstructed",
        GaugeOdeVerdict::NonMeromorphic => "non_meromorphic",
        GaugeOdeVerdict::ExtensionPossible => "extension_possible",
    };
    let mut out = Outcome::ok(json!({
        "kind": kind,
        "phi_squared": case.phi_squared.to_string(),
        "verdict": verdict,
        "sign_convention_flag": case.sign_convention_flag,
        "leading_coefficients": case.leading_coefficients.as_ref().map(|(ours, alt)| json!({
            "raw": ours.to_string(),
            "alternative_2a_minus_a2": alt.to_string(),
        })),
    }));
    if let Some((ours, alt)) = &case.leading_coefficients {
        out = out.warn(format!(
            "sign conventions disagree: y^-2 coefficient of phi^2 is {ours} from s' - s^2/2 = -phi^2, versus 2a - a^2 = {alt}"
        ));
    }
    Ok(out)
}

pub fn bernoulli(inputs: &mut Inputs) -> Result<Outcome, CliError> {
    let w = inputs.form(Section::Foliation, "form")?;
    Ok(match bernoulli_recognize(&w) {
        Some(d) => Outcome::ok(json!({
            "recognized": true,
            "alpha": d.alpha.to_string(),
            "beta0": d.beta0.to_string(),
            "beta1": d.beta1.to_string(),
        }))
        .warn("beta2 does not occur in the Bernoulli form and is not reported"),
        None => Outcome::checked(json!({"recognized": false}), false),
    })
}

/// Dispatches one command against an optional input document.
pub fn execute(cmd: &Command, inputs: &mut Inputs) -> Result<Outcome, CliError> {
    match cmd {
        Command::Classify { .. } => classify(inputs),
        Command::Resolve { max_depth, .. } => resolve(inputs, *max_depth),
        Command::VerifyTriple { .. } => verify(inputs),
        Command::ModifyTriple { g, h, .. } => modify(inputs, g, h),
        Command::Riccati { p, a, b, c } => riccati(inputs, p, a, b, c),
        Command::RiccatiReduce { r, g, deg_bound, .. } => reduce(inputs, r, g, *deg_bound),
        Command::CsIndex { curve, projective_line, .. } => cs_index(inputs, *curve, *projective_line),
        Command::LogRep { curves, .. } => log_rep(inputs, curves),
        Command::Holonomy { axis, radius, steps, .. } => holonomy(inputs, *axis, *radius, *steps),
        Command::Resonance { axis, radius, steps, denom_bound, .. } => {
            resonance(inputs, *axis, *radius, *steps, *denom_bound)
        }
        Command::GaugeOde { s } => gauge_ode(inputs, s),
        Command::Bernoulli { .. } => bernoulli(inputs),
    }
}
