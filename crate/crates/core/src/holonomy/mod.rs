//! Holonomy of separatrices and Möbius group utilities.

mod integrate;
mod mobius;

pub use integrate::{
    holonomy_multiplier, resonance_integral, root_of_unity_order, HolonomyEstimate, Integrator, LoopSpec,
    ResonanceResult, ResonanceVerdict, DEFAULT_DENOM_BOUND, DEFAULT_RTOL, MIN_STEPS, ROOT_OF_UNITY_TOL,
};
pub use mobius::{is_elementary, MobiusMap, MobiusScalar, SpherePoint};
