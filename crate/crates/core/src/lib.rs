//! Numerical toolkit for matrix-monotone functions and trace inequalities on
//! dense real symmetric matrices.
//!
//! Four pipelines built on one spectral core:
//!
//! - **linalg** — Jacobi eigendecomposition, functional calculus with a
//!   zero-eigenvalue convention, positive/negative parts, PSD tests, Hadamard
//!   products, weighted trace functionals, seeded random generators.
//! - **monotone** — scalar-function registry, Loewner matrices, sampling
//!   verdicts on n-monotonicity, the −1/f and t/f(t) transforms, and
//!   operator-level Jensen / order checks.
//! - **inequalities** — the generalized Powers-Stormer verifier, the quantum
//!   Chernoff quantity Q(A,B) with a family-infimum scan, and the rank-one
//!   probe construction with its closed-form identity.
//! - **tracial** — falsification tests that separate weighted functionals
//!   from scalar multiples of the trace, plus the projection-pair
//!   demonstration.
//!
//! Everything is a pure function of its inputs; batch drivers parallelize
//! over per-trial RNG substreams so results are bitwise independent of
//! thread count.

pub mod error;
pub mod inequalities;
pub mod linalg;
pub mod monotone;
pub mod tracial;

pub use error::{Error, Result};
pub use linalg::{
    apply_function, eigh, is_psd, pos_neg_parts, EigenDecomposition, Functional, Matrix,
    PosNegParts, PsdCheck, PsdSpectrum, SymMatrix, Tolerance,
};
pub use monotone::{
    check_n_monotone, loewner, registry_get, standard_positive_specs, transform_neg_inv,
    transform_quotient, MonotoneVerdict, ScalarFunction, VerdictStatus,
};
