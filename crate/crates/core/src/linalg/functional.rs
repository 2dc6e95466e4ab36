use super::calculus::{is_psd, Tolerance};
use super::matrix::SymMatrix;
use crate::error::{Error, Result};

/// Positive linear functional φ(X) = Tr(S·X) represented by its PSD weight S.
#[derive(Clone, Debug)]
pub struct Functional {
    weight: SymMatrix,
}

impl Functional {
    /// Wrap a weight matrix, rejecting it unless its minimum eigenvalue is
    /// ≥ −1e-10·‖S‖_max.
    pub fn new(weight: SymMatrix) -> Result<Self> {
        let check = is_psd(
            &weight,
            &Tolerance {
                rel: 1e-10,
                abs: f64::MIN_POSITIVE,
            },
        )?;
        if !check.is_psd {
            return Err(Error::NotPsd {
                min_eigenvalue: check.min_eigenvalue,
            });
        }
        Ok(Self { weight })
    }

    /// The canonical trace on n×n matrices (S = I).
    pub fn trace(n: usize) -> Self {
        Self {
            weight: SymMatrix::identity(n),
        }
    }

    pub fn weight(&self) -> &SymMatrix {
        &self.weight
    }

    pub fn n(&self) -> usize {
        self.weight.n()
    }

    /// φ(X) = Tr(S·X) = Σᵢⱼ Sᵢⱼ Xᵢⱼ for symmetric S, X.
    pub fn apply(&self, x: &SymMatrix) -> Result<f64> {
        let n = self.weight.n();
        if x.n() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: x.n(),
            });
        }
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += self.weight.get(i, j) * x.get(i, j);
            }
        }
        Ok(acc)
    }

    /// Some(c) when S = c·I within 1e-12·max(1, ‖S‖_max).
    pub fn as_trace_multiple(&self) -> Option<f64> {
        let n = self.weight.n();
        if n == 0 {
            return Some(1.0);
        }
        let c = self.weight.get(0, 0);
        let tol = 1e-12 * self.weight.max_norm().max(1.0);
        if self.weight.max_abs_diff(&SymMatrix::scaled_identity(n, c)) <= tol {
            Some(c)
        } else {
            None
        }
    }

    /// "trace" for scalar multiples of the canonical trace, else "weighted".
    pub fn kind_label(&self) -> &'static str {
        if self.as_trace_multiple().is_some() {
            "trace"
        } else {
            "weighted"
        }
    }
}
