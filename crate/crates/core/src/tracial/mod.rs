//! Trace characterization: decide whether a positive functional behaves
//! tracially by falsification against the generalized Powers-Stormer
//! inequality, |·|-subadditivity, |φ(A)| ≤ φ(|A|) dominance, and the
//! projection-pair demonstration.

mod projections;
mod witnesses;

use crate::linalg::SymMatrix;
use serde::Serialize;

pub use projections::{
    projection_meet, projection_pair, projection_probe, projection_triple, ProjectionPair,
    ProjectionProbe,
};
pub use ps_test::{structured_probe_pairs, trace_test_ps, weighted_probe_gap};
pub use witnesses::{abs_dominance_witness, subadditivity_witness};

/// Which falsification test produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TestKind {
    #[serde(rename = "PS")]
    Ps,
    #[serde(rename = "SUBADD")]
    Subadd,
    #[serde(rename = "ABS_DOM")]
    AbsDom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationStatus {
    ViolationFound,
    NoViolation,
}

/// Violating instance: lhs exceeded rhs by more than the tolerance. For the
/// PS and subadditivity tests `b` is the partner matrix; the dominance test
/// has a single argument.
#[derive(Clone, Debug, Serialize)]
pub struct TraceWitness {
    #[serde(rename = "A")]
    pub a: SymMatrix,
    #[serde(rename = "B")]
    pub b: Option<SymMatrix>,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceTestVerdict {
    pub status: ViolationStatus,
    pub test_kind: TestKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<TraceWitness>,
    pub trials_used: usize,
}

impl TraceTestVerdict {
    pub(crate) fn violation(
        kind: TestKind,
        witness: TraceWitness,
        trials_used: usize,
    ) -> Self {
        Self {
            status: ViolationStatus::ViolationFound,
            test_kind: kind,
            witness: Some(witness),
            trials_used,
        }
    }

    pub(crate) fn clean(kind: TestKind, trials_used: usize) -> Self {
        Self {
            status: ViolationStatus::NoViolation,
            test_kind: kind,
            witness: None,
            trials_used,
        }
    }
}

/// Margin below which lhs > rhs does not count as a violation.
pub(crate) fn violation_tol(lhs: f64, rhs: f64) -> f64 {
    1e-9 * (1.0 + lhs.abs() + rhs.abs())
}
