use super::eigen::{eigh, EigenDecomposition};
use super::matrix::SymMatrix;
use crate::error::{Error, Result};
use crate::monotone::{ScalarFunction, ZeroValue};

/// Relative threshold under which an eigenvalue is treated as exactly zero
/// before any scalar function is applied. Keeps floating-point near-zeros on
/// the same branch as the piecewise conventions g(0) = 0 and 0^p = 0.
pub const ZERO_EIG_REL: f64 = 1e-9;

/// Relative / absolute tolerance pair used by PSD checks and verdicts.
#[derive(Clone, Copy, Debug)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            rel: 1e-9,
            abs: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn new(rel: f64, abs: f64) -> Result<Self> {
        if !(rel > 0.0 && abs > 0.0) {
            return Err(Error::Precondition(
                "tolerances must be positive".to_string(),
            ));
        }
        Ok(Self { rel, abs })
    }
}

/// Outcome of a PSD test: the verdict plus its min-eigenvalue witness.
#[derive(Clone, Copy, Debug)]
pub struct PsdCheck {
    pub is_psd: bool,
    pub min_eigenvalue: f64,
}

/// True iff the minimum eigenvalue is ≥ −(rel·‖A‖_max + abs).
pub fn is_psd(a: &SymMatrix, tol: &Tolerance) -> Result<PsdCheck> {
    let ed = eigh(a)?;
    let min = ed.min_eigenvalue();
    Ok(PsdCheck {
        is_psd: min >= -(tol.rel * a.max_norm() + tol.abs),
        min_eigenvalue: min,
    })
}

/// Clamp eigenvalues with |λ| ≤ 1e-9·max(1, ‖A‖_max) to exactly 0.
pub fn zero_clamp(eigenvalues: &[f64], matrix_max_norm: f64) -> Vec<f64> {
    let cut = ZERO_EIG_REL * matrix_max_norm.max(1.0);
    eigenvalues
        .iter()
        .map(|&l| if l.abs() <= cut { 0.0 } else { l })
        .collect()
}

/// Spectral functional calculus: V·f(Λ)·Vᵀ with the zero-eigenvalue
/// convention. With `zero_as_zero` set, f is evaluated as 0 at 0 regardless
/// of f's own value there (the Borel convention for g).
pub fn apply_function(a: &SymMatrix, f: &ScalarFunction, zero_as_zero: bool) -> Result<SymMatrix> {
    let ed = eigh(a)?;
    let clamped = zero_clamp(ed.eigenvalues(), a.max_norm());
    let mut mapped = Vec::with_capacity(clamped.len());
    for &l in &clamped {
        let value = if l == 0.0 {
            if zero_as_zero {
                0.0
            } else {
                match f.at_zero() {
                    ZeroValue::Value(v) => v,
                    ZeroValue::Limit => {
                        return Err(Error::Domain {
                            function: f.name().to_string(),
                            value: 0.0,
                        })
                    }
                }
            }
        } else {
            f.eval(l)
        };
        if !value.is_finite() {
            return Err(Error::Domain {
                function: f.name().to_string(),
                value: l,
            });
        }
        mapped.push(value);
    }
    Ok(ed.reconstruct_with(&mapped))
}

/// Positive part, negative part, and absolute value of a symmetric matrix.
///
/// All three come from one shared eigendecomposition: P reconstructs the
/// clamped positive spectrum, Q := P − D entrywise so that P − Q reproduces
/// D to the last bit the arithmetic allows, and Abs := P + Q entrywise.
#[derive(Clone, Debug)]
pub struct PosNegParts {
    pub pos: SymMatrix,
    pub neg: SymMatrix,
    pub abs: SymMatrix,
}

pub fn pos_neg_parts(d: &SymMatrix) -> Result<PosNegParts> {
    let ed = eigh(d)?;
    let pos = ed.reconstruct_map(|l| l.max(0.0));
    let neg = pos.sub(d)?;
    let abs = pos.add(&neg)?;
    Ok(PosNegParts { pos, neg, abs })
}

/// Cached eigendecomposition of a PSD matrix with clamped spectrum, for
/// repeated fractional powers under the support convention 0^p := 0
/// (including p = 0, so the zeroth power is the support projection).
#[derive(Clone, Debug)]
pub struct PsdSpectrum {
    ed: EigenDecomposition,
    clamped: Vec<f64>,
}

impl PsdSpectrum {
    pub fn new(a: &SymMatrix) -> Result<Self> {
        let ed = eigh(a)?;
        let clamped = zero_clamp(ed.eigenvalues(), a.max_norm());
        if let Some(&bad) = clamped.iter().find(|&&l| l < 0.0) {
            return Err(Error::NotPsd {
                min_eigenvalue: bad,
            });
        }
        Ok(Self { ed, clamped })
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.clamped
    }

    /// A^p with 0^p := 0 for every exponent.
    pub fn power(&self, p: f64) -> SymMatrix {
        self.apply(|l| l.powf(p))
    }

    /// V·f(Λ)·Vᵀ over the clamped spectrum, with f(0) forced to 0.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> SymMatrix {
        let mapped: Vec<f64> = self
            .clamped
            .iter()
            .map(|&l| if l == 0.0 { 0.0 } else { f(l) })
            .collect();
        self.ed.reconstruct_with(&mapped)
    }

    /// Like `apply`, but f's value at 0 is taken from the supplied constant.
    pub fn apply_with_zero(&self, f: impl Fn(f64) -> f64, at_zero: f64) -> SymMatrix {
        let mapped: Vec<f64> = self
            .clamped
            .iter()
            .map(|&l| if l == 0.0 { at_zero } else { f(l) })
            .collect();
        self.ed.reconstruct_with(&mapped)
    }
}
