//! The quantitative pipelines: the generalized Powers-Stormer verifier, the
//! quantum Chernoff quantity Q(A,B) with its family-infimum variant, and the
//! rank-one probe construction with its closed-form identity.

mod chernoff;
mod family;
mod probe;
mod ps;

pub use chernoff::{chernoff_q, ChernoffResult};
pub use family::{family_scan, FamilyScanResult, FunctionValue};
pub use probe::{rank_one_probe, RankOneProbe};
pub use ps::{ps_rhs, ps_sweep, ps_verify, sweep_pair, trial_seed, PsReport, SweepConfig};
