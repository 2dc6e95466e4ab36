use crate::error::{Error, Result};
use crate::linalg::random::{random_psd_maybe_singular, seeded_rng, substream};
use crate::linalg::{pos_neg_parts, Functional, PsdSpectrum, SymMatrix};
use crate::monotone::{registry_get, transform_quotient, ScalarFunction, ZeroValue};
use rayon::prelude::*;
use serde::Serialize;

/// One verified instance of the generalized Powers-Stormer inequality
/// φ(A) + φ(B) − φ(|A−B|) ≤ 2φ(f(A)^{1/2} g(B) f(A)^{1/2}), g(t) = t/f(t).
#[derive(Clone, Debug, Serialize)]
pub struct PsReport {
    pub function_spec: String,
    pub dimension: usize,
    /// Substream seed of the trial that produced (A, B); 0 for direct calls.
    pub seed: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    pub holds: bool,
    pub functional_kind: String,
}

/// f(A)^{1/2} g(B) f(A)^{1/2} with g = t/f(t), g(0) = 0, and f evaluated at
/// zero eigenvalues through its own value there.
///
/// f applies to the first argument and g to the second; swapping the
/// arguments changes the bound.
pub(crate) fn ps_sandwich(
    f: &ScalarFunction,
    a: &SymMatrix,
    b: &SymMatrix,
) -> Result<SymMatrix> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let g = transform_quotient(f)?;

    let sqrt_f_at_zero = match f.at_zero() {
        ZeroValue::Value(v) if v >= 0.0 => v.sqrt(),
        _ => {
            return Err(Error::Domain {
                function: f.name().to_string(),
                value: 0.0,
            })
        }
    };

    let a_spec = PsdSpectrum::new(a)?;
    let b_spec = PsdSpectrum::new(b)?;
    let root_fa = a_spec.apply_with_zero(|l| f.eval(l).sqrt(), sqrt_f_at_zero);
    if root_fa.rows().iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::Domain {
            function: f.name().to_string(),
            value: a_spec.eigenvalues()[0],
        });
    }
    let gb = b_spec.apply(|l| g.eval(l));
    SymMatrix::sandwich(&root_fa, &gb)
}

/// 2·φ(f(A)^{1/2} g(B) f(A)^{1/2}).
pub fn ps_rhs(
    phi: &Functional,
    f: &ScalarFunction,
    a: &SymMatrix,
    b: &SymMatrix,
) -> Result<f64> {
    if phi.n() != a.n() {
        return Err(Error::DimensionMismatch {
            left: phi.n(),
            right: a.n(),
        });
    }
    let m = ps_sandwich(f, a, b)?;
    Ok(2.0 * phi.apply(&m)?)
}

/// Evaluate both sides of the inequality for one (φ, f, A, B) instance.
/// `holds` allows a deficit up to tol_rel·(|lhs| + |rhs| + 1).
pub fn ps_verify(
    phi: &Functional,
    f: &ScalarFunction,
    a: &SymMatrix,
    b: &SymMatrix,
    tol_rel: f64,
) -> Result<PsReport> {
    let rhs = ps_rhs(phi, f, a, b)?;
    let diff = a.sub(b)?;
    let parts = pos_neg_parts(&diff)?;
    let lhs = phi.apply(a)? + phi.apply(b)? - phi.apply(&parts.abs)?;
    let gap = rhs - lhs;
    Ok(PsReport {
        function_spec: f.name().to_string(),
        dimension: a.n(),
        seed: 0,
        lhs,
        rhs,
        gap,
        holds: gap >= -tol_rel * (lhs.abs() + rhs.abs() + 1.0),
        functional_kind: phi.kind_label().to_string(),
    })
}

/// Sweep configuration shared by the library drivers and the CLI.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub specs: Vec<String>,
    pub dims: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub singular_probability: f64,
    pub tol_rel: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            specs: crate::monotone::standard_positive_specs(),
            dims: (2..=6).collect(),
            trials: 1000,
            seed: 42,
            singular_probability: 0.25,
            tol_rel: 1e-8,
        }
    }
}

/// The substream seed feeding trial `trial` at dimension `dim`.
pub fn trial_seed(seed: u64, dim: usize, trial: usize) -> u64 {
    substream(substream(seed, dim as u64), trial as u64)
}

/// Deterministic PSD pair for one sweep trial; each factor is made singular
/// with the given probability.
pub fn sweep_pair(
    seed: u64,
    dim: usize,
    trial: usize,
    singular_probability: f64,
) -> (SymMatrix, SymMatrix) {
    let mut rng = seeded_rng(trial_seed(seed, dim, trial));
    let a = random_psd_maybe_singular(&mut rng, dim, 1.0, singular_probability);
    let b = random_psd_maybe_singular(&mut rng, dim, 1.0, singular_probability);
    (a, b)
}

/// Run the full sweep: one report per (spec, dim, trial), in that order.
/// `phi` of None means the canonical trace at each dimension; a weighted
/// functional pins the sweep to its own dimension.
pub fn ps_sweep(cfg: &SweepConfig, phi: Option<&Functional>) -> Result<Vec<PsReport>> {
    if let Some(p) = phi {
        if cfg.dims.iter().any(|&d| d != p.n()) {
            return Err(Error::Precondition(format!(
                "weighted functional is {}x{} but the sweep asks for dims {:?}",
                p.n(),
                p.n(),
                cfg.dims
            )));
        }
    }
    let mut rows = Vec::with_capacity(cfg.specs.len() * cfg.dims.len() * cfg.trials);
    for spec in &cfg.specs {
        let f = registry_get(spec)?;
        for &dim in &cfg.dims {
            let phi_dim = match phi {
                Some(p) => p.clone(),
                None => Functional::trace(dim),
            };
            let mut reports = (0..cfg.trials)
                .into_par_iter()
                .map(|t| {
                    let (a, b) = sweep_pair(cfg.seed, dim, t, cfg.singular_probability);
                    let mut rep = ps_verify(&phi_dim, &f, &a, &b, cfg.tol_rel)?;
                    rep.seed = trial_seed(cfg.seed, dim, t);
                    Ok(rep)
                })
                .collect::<Result<Vec<_>>>()?;
            rows.append(&mut reports);
        }
    }
    Ok(rows)
}
