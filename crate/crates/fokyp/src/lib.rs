//! Finite-frequency performance certification for fractional-order systems.
//!
//! A fractional-order state-space model `D^nu x = Ax + Bu`, `y = Cx + Du`
//! has the frequency response `G(jw) = C((jw)^nu I - A)^{-1} B + D` on the
//! principal branch of `s^nu`. This crate decides whether the largest
//! singular value of `G` stays below a bound `delta` over a frequency
//! range, by two independent routes:
//!
//! * a generalized-KYP linear matrix inequality whose feasibility
//!   certifies the bound over the whole range at once, and
//! * a frequency-sweep oracle whose sampled peak refutes the bound.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion
//! CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod curve;
pub mod lmi;
pub mod mat;
pub mod model;
pub mod oracle;
pub mod rng;
pub mod sdp;

mod error;

pub use error::Error;
pub use num_complex::Complex64;

pub use curve::{CongruenceFactorization, CurveClass, CurvePair, FreqRange, RangeKind};
pub use lmi::{LmiKind, LmiProblem, SystemPencil, VarBlock, VarRole};
pub use mat::CMat;
pub use model::{FosModel, StabilityReport};
pub use oracle::{GridSpec, SweepResult};
pub use sdp::{
    AnalysisKind, FeasibilityOutcome, HermitianAffineMap, NormBracket, SolverOptions, Verdict,
};
