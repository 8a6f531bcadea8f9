//! Numeric continuation of leaves around a loop in an invariant axis.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::algebra::roots::{complex_roots, rational_candidates};
use crate::algebra::{MultiPoly, UniPoly, Var};
use crate::error::HolonomyError;
use crate::foliation::{Axis, Foliation};

type C = Complex64;

pub const MIN_STEPS: usize = 64;
pub const DEFAULT_RTOL: f64 = 1e-12;
pub const DEFAULT_DENOM_BOUND: i64 = 64;
pub const ROOT_OF_UNITY_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Integrator {
    /// Dormand–Prince 5(4) with relative tolerance `rtol`.
    Adaptive { rtol: f64 },
    /// Classical fourth-order Runge–Kutta with the loop's `steps`.
    FixedRk4,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LoopSpec {
    pub axis: Axis,
    pub radius: f64,
    pub seeds: Vec<C>,
    /// Initial step count (adaptive) or the step count (fixed).
    pub steps: usize,
    pub integrator: Integrator,
}

impl LoopSpec {
    pub fn new(axis: Axis, radius: f64) -> Self {
        Self {
            axis,
            radius,
            seeds: vec![C::new(1e-3, 0.0), C::new(2e-3, 0.0)],
            steps: 256,
            integrator: Integrator::Adaptive { rtol: DEFAULT_RTOL },
        }
    }

    pub fn with_seeds(mut self, seeds: Vec<C>) -> Self {
        self.seeds = seeds;
        self
    }

    pub fn with_steps(mut self, steps: usize) -> Self {
        self.steps = steps;
        self
    }

    pub fn with_integrator(mut self, integrator: Integrator) -> Self {
        self.integrator = integrator;
        self
    }

    fn validate(&self) -> Result<(), HolonomyError> {
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return Err(HolonomyError::InvalidRadius);
        }
        if self.steps < MIN_STEPS {
            return Err(HolonomyError::TooFewSteps(MIN_STEPS));
        }
        if self.seeds.is_empty() || self.seeds.iter().any(|s| s.norm() == 0.0 || !s.is_finite()) {
            return Err(HolonomyError::NoSeeds);
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HolonomyEstimate {
    pub multiplier: C,
    /// `(y₀, P(y₀))` per seed, in seed order.
    pub return_maps: Vec<(C, C)>,
    pub error_estimate: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResonanceVerdict {
    /// No singular point of the foliation on the axis inside the loop.
    Regular,
    Resonant { order: u64 },
    NonResonant,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResonanceResult {
    /// `∮ tr(DX) dt` along the loop.
    pub integral: C,
    pub value: C,
    pub verdict: ResonanceVerdict,
    /// Singular points of the foliation on the axis enclosed by the loop.
    pub enclosed: usize,
}

/// Coefficients in coordinates where the axis is `{y = 0}`.
struct AxisFrame {
    a: MultiPoly<C>,
    b: MultiPoly<C>,
    b_axis: UniPoly<C>,
}

fn axis_frame(f: &Foliation, lp: &LoopSpec) -> Result<AxisFrame, HolonomyError> {
    lp.validate()?;
    let g = match lp.axis {
        Axis::YZero => f.clone(),
        Axis::XZero => f.swapped(),
    };
    if !g.a().coeff_of(Var::Y, 0).is_zero() {
        return Err(HolonomyError::AxisNotInvariant(lp.axis.name()));
    }
    let b_axis = UniPoly::from_multi(&g.b().coeff_of(Var::Y, 0).to_complex(), Var::X).expect("univariate in x");
    if b_axis.is_zero() {
        return Err(HolonomyError::AxisNotInvariant(lp.axis.name()));
    }
    let roots = complex_roots(b_axis.coeffs());
    if roots.iter().any(|z| (z.norm() - lp.radius).abs() <= 1e-9 * lp.radius.max(1.0)) {
        return Err(HolonomyError::SingularOnLoop);
    }
    Ok(AxisFrame { a: g.a().to_complex(), b: g.b().to_complex(), b_axis })
}

fn enclosed_count(frame: &AxisFrame, radius: f64) -> usize {
    complex_roots(frame.b_axis.coeffs()).iter().filter(|z| z.norm() < radius).count()
}

/// `dy/dθ` along `x = r e^{iθ}`.
fn rhs(frame: &AxisFrame, r: f64, theta: f64, y: C) -> Result<C, HolonomyError> {
    let x = C::from_polar(r, theta);
    let b = frame.b.eval(&x, &y);
    let v = -frame.a.eval(&x, &y) / b * C::i() * x;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(HolonomyError::StepFailure { theta })
    }
}

fn rk4(frame: &AxisFrame, r: f64, y0: C, steps: usize) -> Result<C, HolonomyError> {
    let h = TAU / steps as f64;
    let mut y = y0;
    for k in 0..steps {
        let t = k as f64 * h;
        let k1 = rhs(frame, r, t, y)?;
        let k2 = rhs(frame, r, t + h / 2.0, y + k1 * (h / 2.0))?;
        let k3 = rhs(frame, r, t + h / 2.0, y + k2 * (h / 2.0))?;
        let k4 = rhs(frame, r, t + h, y + k3 * h)?;
        y += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    }
    Ok(y)
}

// Dormand–Prince tableau
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

fn dopri5(frame: &AxisFrame, r: f64, y0: C, steps: usize, rtol: f64) -> Result<C, HolonomyError> {
    let atol = rtol * 1e-6 * y0.norm();
    let mut t = 0.0;
    let mut h = TAU / steps as f64;
    let h_min = TAU * 1e-14;
    let mut y = y0;
    let mut k1 = rhs(frame, r, t, y)?;
    let mut rejections = 0usize;
    while t < TAU {
        if t + h > TAU {
            h = TAU - t;
        }
        let k2 = rhs(frame, r, t + C2 * h, y + k1 * (h * A21))?;
        let k3 = rhs(frame, r, t + C3 * h, y + (k1 * A31 + k2 * A32) * h)?;
        let k4 = rhs(frame, r, t + C4 * h, y + (k1 * A41 + k2 * A42 + k3 * A43) * h)?;
        let k5 = rhs(frame, r, t + C5 * h, y + (k1 * A51 + k2 * A52 + k3 * A53 + k4 * A54) * h)?;
        let k6 = rhs(frame, r, t + h, y + (k1 * A61 + k2 * A62 + k3 * A63 + k4 * A64 + k5 * A65) * h)?;
        let y_new = y + (k1 * B1 + k3 * B3 + k4 * B4 + k5 * B5 + k6 * B6) * h;
        let k7 = rhs(frame, r, t + h, y_new)?;
        let err = ((k1 * E1 + k3 * E3 + k4 * E4 + k5 * E5 + k6 * E6 + k7 * E7) * h).norm();
        let scale = atol + rtol * y.norm().max(y_new.norm());
        let ratio = err / scale;
        if !ratio.is_finite() {
            return Err(HolonomyError::StepFailure { theta: t });
        }
        if ratio <= 1.0 {
            t += h;
            y = y_new;
            k1 = k7;
            rejections = 0;
        } else {
            rejections += 1;
            if rejections > 64 {
                return Err(HolonomyError::StepFailure { theta: t });
            }
        }
        let factor = if ratio == 0.0 { 5.0 } else { (0.9 * ratio.powf(-0.2)).clamp(0.2, 5.0) };
        h *= factor;
        if h < h_min && t < TAU {
            return Err(HolonomyError::StepFailure { theta: t });
        }
    }
    Ok(y)
}

fn return_map(frame: &AxisFrame, lp: &LoopSpec, y0: C) -> Result<C, HolonomyError> {
    match lp.integrator {
        Integrator::Adaptive { rtol } => dopri5(frame, lp.radius, y0, lp.steps, rtol),
        Integrator::FixedRk4 => rk4(frame, lp.radius, y0, lp.steps),
    }
}

/// Neville extrapolation of `(sₖ, qₖ)` to `s = 0`; returns the value and the
/// change contributed by the last order.
fn extrapolate_to_zero(s: &[C], q: &[C]) -> (C, f64) {
    let n = q.len();
    let mut p = q.to_vec();
    let mut last_change = 0.0;
    for k in 1..n {
        for i in 0..n - k {
            let next = (s[i + k] * p[i] - s[i] * p[i + 1]) / (s[i + k] - s[i]);
            if i == 0 {
                last_change = (next - p[0]).norm();
            }
            p[i] = next;
        }
    }
    (p[0], last_change)
}

/// Derivative at `0` of the return map of the leaves around the loop.
pub fn holonomy_multiplier(f: &Foliation, lp: &LoopSpec) -> Result<HolonomyEstimate, HolonomyError> {
    let frame = axis_frame(f, lp)?;
    let values: Vec<C> =
        lp.seeds.par_iter().map(|&y0| return_map(&frame, lp, y0)).collect::<Result<_, _>>()?;
    let quotients: Vec<C> = lp.seeds.iter().zip(&values).map(|(s, v)| v / s).collect();
    let (multiplier, change) = extrapolate_to_zero(&lp.seeds, &quotients);
    let error_estimate = if lp.seeds.len() > 1 {
        change
    } else {
        match lp.integrator {
            Integrator::Adaptive { rtol } => rtol * multiplier.norm(),
            Integrator::FixedRk4 => f64::EPSILON * multiplier.norm(),
        }
    };
    if !multiplier.is_finite() || multiplier.norm() == 0.0 || !error_estimate.is_finite() {
        return Err(HolonomyError::StepFailure { theta: TAU });
    }
    Ok(HolonomyEstimate { multiplier, return_maps: lp.seeds.iter().copied().zip(values).collect(), error_estimate })
}

/// `exp ∮ tr(DX) dt` along the loop in the axis, where `dt = dx/(−B(x, 0))`,
/// evaluated by the trapezoid rule.
pub fn resonance_integral(f: &Foliation, lp: &LoopSpec, denom_bound: i64) -> Result<ResonanceResult, HolonomyError> {
    let frame = axis_frame(f, lp)?;
    let enclosed = enclosed_count(&frame, lp.radius);
    // tr(DX) for X = −B∂x + A∂y
    let tr = &frame.a.derivative(Var::Y) - &frame.b.derivative(Var::X);
    let n = lp.steps.max(4096);
    let h = TAU / n as f64;
    let integral: C = (0..n)
        .into_par_iter()
        .map(|k| {
            let x = C::from_polar(lp.radius, k as f64 * h);
            let zero = C::new(0.0, 0.0);
            tr.eval(&x, &zero) / (-frame.b_axis.eval(&x)) * C::i() * x * h
        })
        .sum();
    if !integral.is_finite() {
        return Err(HolonomyError::StepFailure { theta: 0.0 });
    }
    let value = integral.exp();
    let verdict = if enclosed == 0 {
        ResonanceVerdict::Regular
    } else {
        root_of_unity_order(value, denom_bound)
            .map_or(ResonanceVerdict::NonResonant, |order| ResonanceVerdict::Resonant { order })
    };
    Ok(ResonanceResult { integral, value, verdict, enclosed })
}

/// Order of `v` as a root of unity, found by continued fractions of
/// `arg v / 2π` with denominators up to `denom_bound`.
pub fn root_of_unity_order(v: C, denom_bound: i64) -> Option<u64> {
    if (v.norm() - 1.0).abs() > ROOT_OF_UNITY_TOL {
        return None;
    }
    let turns = v.arg() / TAU;
    let q = rational_candidates(turns, ROOT_OF_UNITY_TOL, denom_bound.max(1)).into_iter().next()?;
    u64::try_from(q.denom().clone()).ok()
}
