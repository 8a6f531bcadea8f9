//! Error types, one enum per layer.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("the zero form has no dual vector field")]
    ZeroForm,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoliationError {
    #[error("the zero form does not define a foliation")]
    ZeroForm,
    #[error("point is not singular")]
    NotSingular,
    #[error("point coordinates are not in Q(i)")]
    NotExact,
    #[error("singular set is not discrete; the form was not reduced")]
    InfiniteSingularSet,
    #[error("axis {{{0}}} is not invariant")]
    AxisNotInvariant(&'static str),
    #[error("point is not on the axis {{{0}}}")]
    NotOnAxis(&'static str),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlowupError {
    #[error("the two charts disagree on dicriticalness")]
    InconsistentCharts,
    #[error("max_depth must be at least 1")]
    InvalidDepth,
    #[error("resolution tree is incomplete")]
    IncompleteTree,
    #[error("resolution contains a saddle-node")]
    SaddleNodePresent,
    #[error(transparent)]
    Foliation(#[from] FoliationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleError {
    #[error("gauge function g must be nonzero")]
    ZeroGauge,
    #[error("ξ − ξ₀ is not proportional to Ω")]
    NotProportional,
    #[error("invalid Riccati coefficients: {0}")]
    InvalidRiccati(&'static str),
    #[error("ξ ≠ g dR")]
    XiNotGdR,
    #[error("R is constant, so dR = 0")]
    ConstantR,
    #[error("η′ is not proportional to dR")]
    EtaNotProportional,
    #[error("dF ∧ dR ≠ 0: F is not a function of R")]
    NotFunctionOfR,
    #[error("no φ with F = φ(R) within degree bound {0}")]
    NoPhiWithinBound(usize),
    #[error("pull-back check σ*Ω_φ ∧ gΩ = 0 failed")]
    VerificationFailed,
    #[error("s must depend on y alone")]
    DependsOnX,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MobiusError {
    #[error("matrix is singular")]
    Singular,
    #[error("determinant or discriminant has no square root in the scalar field")]
    NoSquareRoot,
    #[error("the identity map has no isolated fixed points")]
    Identity,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HolonomyError {
    #[error("radius must be positive and finite")]
    InvalidRadius,
    #[error("at least {0} steps are required")]
    TooFewSteps(usize),
    #[error("at least one nonzero seed is required")]
    NoSeeds,
    #[error("axis {{{0}}} is not invariant")]
    AxisNotInvariant(&'static str),
    #[error("the foliation is singular on the loop circle")]
    SingularOnLoop,
    #[error("integration step failure at θ = {theta:.6}")]
    StepFailure { theta: f64 },
}
