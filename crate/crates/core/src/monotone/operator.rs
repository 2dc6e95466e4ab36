//! Operator-level monotonicity checks: the Jensen-type contraction
//! inequality C·f(A)·C ≤ f(C·A·C) and order preservation h(A) ≤ h(B) for
//! A ≤ B under the h(0) = 0 convention.

use super::functions::ScalarFunction;
use crate::error::{Error, Result};
use crate::linalg::random::spectral_norm;
use crate::linalg::{apply_function, eigh, is_psd, SymMatrix, Tolerance};

const CONTRACTION_SLACK: f64 = 1e-10;

/// f(CᵀAC) − Cᵀf(A)C together with its PSD verdict.
#[derive(Clone, Debug)]
pub struct JensenCheck {
    pub gap: SymMatrix,
    pub holds: bool,
    pub gap_min_eigenvalue: f64,
}

/// Evaluate the Jensen-type gap for PSD A and a symmetric contraction C.
pub fn jensen_gap(f: &ScalarFunction, a: &SymMatrix, c: &SymMatrix) -> Result<JensenCheck> {
    let tol = Tolerance::default();
    let a_check = is_psd(a, &tol)?;
    if !a_check.is_psd {
        return Err(Error::NotPsd {
            min_eigenvalue: a_check.min_eigenvalue,
        });
    }
    let norm = spectral_norm(c)?;
    if norm > 1.0 + CONTRACTION_SLACK {
        return Err(Error::NotContraction { norm });
    }

    let cac = SymMatrix::sandwich(c, a)?;
    let f_cac = apply_function(&cac, f, false)?;
    let fa = apply_function(a, f, false)?;
    let c_fa_c = SymMatrix::sandwich(c, &fa)?;
    let gap = f_cac.sub(&c_fa_c)?;
    let check = is_psd(&gap, &tol)?;
    Ok(JensenCheck {
        gap,
        holds: check.is_psd,
        gap_min_eigenvalue: check.min_eigenvalue,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct PairCheck {
    pub holds: bool,
    pub gap_min_eigenvalue: f64,
}

/// For h with h(0) = 0 and a PSD pair A ≤ B, test h(A) ≤ h(B) using the
/// zero-as-zero calculus.
pub fn monotone_pair_check(
    h: &ScalarFunction,
    a: &SymMatrix,
    b: &SymMatrix,
) -> Result<PairCheck> {
    let tol = Tolerance::default();
    for (name, m) in [("A", a), ("B", b)] {
        let check = is_psd(m, &tol)?;
        if !check.is_psd {
            return Err(Error::Precondition(format!(
                "{name} is not PSD (min eigenvalue {:.3e})",
                check.min_eigenvalue
            )));
        }
    }
    let diff = b.sub(a)?;
    let dominance = is_psd(&diff, &tol)?;
    if !dominance.is_psd {
        return Err(Error::Precondition(format!(
            "A is not dominated by B (min eigenvalue of B-A is {:.3e})",
            dominance.min_eigenvalue
        )));
    }

    let ha = apply_function(a, h, true)?;
    let hb = apply_function(b, h, true)?;
    let gap = hb.sub(&ha)?;
    let min_eig = eigh(&gap)?.min_eigenvalue();
    Ok(PairCheck {
        holds: min_eig >= -(tol.rel * gap.max_norm() + tol.abs),
        gap_min_eigenvalue: min_eig,
    })
}
