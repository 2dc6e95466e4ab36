//! Dense real symmetric linear algebra: Jacobi eigendecomposition, spectral
//! functional calculus with a zero-eigenvalue convention, positive/negative
//! parts, PSD testing, Hadamard products, traces against weighted
//! functionals, and seeded random generators.

mod calculus;
mod eigen;
mod functional;
pub mod json;
mod matrix;
pub mod random;

pub use calculus::{
    apply_function, is_psd, pos_neg_parts, zero_clamp, PosNegParts, PsdCheck, PsdSpectrum,
    Tolerance, ZERO_EIG_REL,
};
pub use eigen::{eigh, EigenDecomposition};
pub use functional::Functional;
pub use matrix::{Matrix, SymMatrix};
