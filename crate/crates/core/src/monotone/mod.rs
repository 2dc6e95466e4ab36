//! Scalar-function registry and n-monotonicity machinery: Loewner matrices,
//! sampling-based monotonicity verdicts, the −1/f and t/f(t) transforms, and
//! operator-level Jensen / order-preservation checks.

mod functions;
mod loewner;
mod operator;

pub use functions::{
    registry_get, standard_positive_specs, transform_neg_inv, transform_quotient, MonotoneOrder,
    ScalarFunction, ZeroValue,
};
pub use loewner::{
    check_n_monotone, loewner, LoewnerMatrix, LoewnerWitness, MonotoneVerdict, VerdictStatus,
};
pub use operator::{jensen_gap, monotone_pair_check, JensenCheck, PairCheck};
