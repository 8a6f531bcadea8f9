//! Command-line surface.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use folcalc_core::foliation::Axis;

#[derive(Debug, Parser)]
#[command(name = "folcalc", version, about = "Exact computations with plane polynomial foliations")]
pub struct Cli {
    /// Emit JSON reports instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    #[value(name = "y=0")]
    YZero,
    #[value(name = "x=0")]
    XZero,
}

impl From<AxisArg> for Axis {
    fn from(a: AxisArg) -> Axis {
        match a {
            AxisArg::YZero => Axis::YZero,
            AxisArg::XZero => Axis::XZero,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Singular points of `[foliation] form` and their classes.
    Classify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Resolution tree at the origin, or at `[params] x0, y0`.
    Resolve {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Defaults to FOLCALC_MAX_DEPTH, else 32.
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Structure equations of `[triple] omega, eta, xi`.
    VerifyTriple {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Gauge modification of `[triple]` by `(g, h)`.
    ModifyTriple {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    /// Canonical triple of `p dy − (y²c − yb − a) dx`.
    Riccati {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Reduction of `[triple]` with `ξ = g dR` to a Riccati form.
    RiccatiReduce {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long = "R", allow_hyphen_values = true)]
        r: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, default_value_t = folcalc_core::triples::DEFAULT_DEG_BOUND)]
        deg_bound: usize,
    },
    /// Camacho–Sad indices along an invariant axis.
    CsIndex {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        curve: AxisArg,
        /// Sum over the projective line, including infinity.
        #[arg(long)]
        projective_line: bool,
    },
    /// Logarithmic representation `Σ λⱼ dfⱼ/fⱼ`.
    LogRep {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Comma-separated `[curves]` keys or polynomial expressions.
        #[arg(long, allow_hyphen_values = true)]
        curves: String,
    },
    /// Numeric holonomy multiplier around the origin of an axis.
    Holonomy {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        axis: AxisArg,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 256)]
        steps: usize,
    },
    /// Root-of-unity test for `exp ∮ tr(DX)` along an axis.
    Resonance {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        axis: AxisArg,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 4096)]
        steps: usize,
        #[arg(long, default_value_t = folcalc_core::holonomy::DEFAULT_DENOM_BOUND)]
        denom_bound: i64,
    },
    /// Case analysis of `s′ − ½s² = −φ²` at `y = 0`.
    GaugeOde {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Recognizes `α dy − (y²β₀ + yβ₁) dx`.
    Bernoulli {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Resolve { .. } => "resolve",
            Command::VerifyTriple { .. } => "verify-triple",
            Command::ModifyTriple { .. } => "modify-triple",
            Command::Riccati { .. } => "riccati",
            Command::RiccatiReduce { .. } => "riccati-reduce",
            Command::CsIndex { .. } => "cs-index",
            Command::LogRep { .. } => "log-rep",
            Command::Holonomy { .. } => "holonomy",
            Command::Resonance { .. } => "resonance",
            Command::GaugeOde { .. } => "gauge-ode",
            Command::Bernoulli { .. } => "bernoulli",
        }
    }

    pub fn files(&self) -> &[PathBuf] {
        match self {
            Command::Classify { files }
            | Command::Resolve { files, .. }
            | Command::VerifyTriple { files }
            | Command::ModifyTriple { files, .. }
            | Command::RiccatiReduce { files, .. }
            | Command::CsIndex { files, .. }
            | Command::LogRep { files, .. }
            | Command::Holonomy { files, .. }
            | Command::Resonance { files, .. }
            | Command::Bernoulli { files } => files,
            Command::Riccati { .. } | Command::GaugeOde { .. } => &[],
        }
    }
}
