//! Exact quantum logic: subspace lattices over `Q(√m) + i·Q(√m)`,
//! Kochen-Specker colourability search, determinate sublattices of a state
//! relative to an observable, and context-relative truth valuation.
//!
//! The algorithms are generic over [`scalar::Field`]; the aliases below fix
//! the concrete field used by the file formats and the command line.

pub mod bub_clifton;
pub mod cli;
pub mod datasets;
pub mod event;
pub mod format;
pub mod ks;
pub mod laws;
pub mod linalg;
pub mod sample;
pub mod scalar;
pub mod truth;

pub use scalar::{Field, QuadComplex, ScalarLiteral};

pub type Scalar = QuadComplex;
pub type ExactSubspace = linalg::Subspace<Scalar>;
pub type ExactMatrix = linalg::Matrix<Scalar>;
pub type ExactEvent = event::Event<Scalar>;
pub type ExactEventFamily = event::EventFamily<Scalar>;
pub type ExactRaySystem = ks::RaySystem<Scalar>;
pub type ExactPureState = bub_clifton::PureState<Scalar>;
pub type ExactObservable = bub_clifton::Observable<Scalar>;
pub type ExactDeterminateStructure = bub_clifton::DeterminateStructure<Scalar>;
pub type ExactMeasurementContext = truth::MeasurementContext<Scalar>;
pub type ExactContextualState = truth::ContextualState<Scalar>;
