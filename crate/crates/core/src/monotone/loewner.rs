use super::functions::ScalarFunction;
use crate::error::{Error, Result};
use crate::linalg::random::{seeded_rng, substream};
use crate::linalg::{eigh, SymMatrix};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

/// A min eigenvalue below −1e-8·(1 + ‖L‖_max) certifies a Loewner matrix as
/// not PSD; the asymmetric margin keeps float noise from minting certificates.
const CERTIFY_TOL: f64 = 1e-8;

/// Divided-difference matrix of f at a point set: (f(tᵢ)−f(tⱼ))/(tᵢ−tⱼ) off
/// the diagonal, f′(tᵢ) on the diagonal and wherever points coincide.
#[derive(Clone, Debug)]
pub struct LoewnerMatrix {
    points: Vec<f64>,
    matrix: SymMatrix,
}

impl LoewnerMatrix {
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }
}

pub fn loewner(f: &ScalarFunction, points: &[f64]) -> Result<LoewnerMatrix> {
    for &t in points {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Domain {
                function: f.name().to_string(),
                value: t,
            });
        }
    }
    let values: Vec<f64> = points.iter().map(|&t| f.eval(t)).collect();
    for (&t, &v) in points.iter().zip(&values) {
        if !v.is_finite() {
            return Err(Error::Domain {
                function: f.name().to_string(),
                value: t,
            });
        }
    }
    let matrix = SymMatrix::from_fn(points.len(), |i, j| {
        if points[i] == points[j] {
            f.deriv(points[i])
        } else {
            (values[i] - values[j]) / (points[i] - points[j])
        }
    });
    Ok(LoewnerMatrix {
        points: points.to_vec(),
        matrix,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictStatus {
    CertifiedNot,
    NoCounterexample,
}

#[derive(Clone, Debug, Serialize)]
pub struct LoewnerWitness {
    pub points: Vec<f64>,
    pub min_eigenvalue: f64,
}

/// Outcome of a sampling run. CERTIFIED_NOT carries a re-checkable witness
/// and is a proof; NO_COUNTEREXAMPLE is only sampling evidence.
#[derive(Clone, Debug, Serialize)]
pub struct MonotoneVerdict {
    pub status: VerdictStatus,
    pub order_tested: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LoewnerWitness>,
    pub samples_used: usize,
}

fn sample_points(f_seed: u64, order: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mut rng = seeded_rng(f_seed);
    let (ln_lo, ln_hi) = (lo.ln(), hi.ln());
    (0..order)
        .map(|_| (ln_lo + (ln_hi - ln_lo) * rng.random::<f64>()).exp())
        .collect()
}

fn loewner_min_eig(f: &ScalarFunction, points: &[f64]) -> Result<(f64, f64)> {
    let l = loewner(f, points)?;
    let ed = eigh(l.matrix())?;
    Ok((ed.min_eigenvalue(), l.matrix().max_norm()))
}

/// Sample `trials` point sets of size `order` log-uniformly from the domain
/// and probe the Loewner matrix of each. The first certified failure (min
/// eigenvalue < −1e-8·(1 + ‖L‖_max)) is returned with its witness.
pub fn check_n_monotone(
    f: &ScalarFunction,
    order: usize,
    domain: (f64, f64),
    trials: usize,
    seed: u64,
) -> Result<MonotoneVerdict> {
    let (lo, hi) = domain;
    if !(order >= 1 && trials >= 1) {
        return Err(Error::Precondition(
            "order and trials must be at least 1".to_string(),
        ));
    }
    if !(lo > 0.0 && lo < hi && hi.is_finite()) {
        return Err(Error::Precondition(format!(
            "invalid domain ({lo}, {hi}): need 0 < lo < hi"
        )));
    }

    let failing = |trial: usize| -> Result<bool> {
        let points = sample_points(substream(seed, trial as u64), order, lo, hi);
        let (min_eig, norm) = loewner_min_eig(f, &points)?;
        Ok(min_eig < -CERTIFY_TOL * (1.0 + norm))
    };

    // Errors can only come from invalid points, which sampling cannot
    // produce; probe one trial up front so the parallel scan stays infallible.
    failing(0)?;
    let first_failure = (0..trials)
        .into_par_iter()
        .find_first(|&t| failing(t).unwrap_or(false));

    match first_failure {
        Some(trial) => {
            let points = sample_points(substream(seed, trial as u64), order, lo, hi);
            let (min_eig, _) = loewner_min_eig(f, &points)?;
            Ok(MonotoneVerdict {
                status: VerdictStatus::CertifiedNot,
                order_tested: order,
                witness: Some(LoewnerWitness {
                    points,
                    min_eigenvalue: min_eig,
                }),
                samples_used: trial + 1,
            })
        }
        None => Ok(MonotoneVerdict {
            status: VerdictStatus::NoCounterexample,
            order_tested: order,
            witness: None,
            samples_used: trials,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{is_psd, Tolerance};
    use crate::monotone::registry_get;

    #[test]
    fn sqrt_loewner_closed_form() {
        let f = registry_get("power:0.5").unwrap();
        let l = loewner(&f, &[1.0, 4.0]).unwrap();
        let expect =
            SymMatrix::from_rows(&[vec![0.5, 1.0 / 3.0], vec![1.0 / 3.0, 0.25]]).unwrap();
        assert!(l.matrix().max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn cubic_loewner_closed_form() {
        let f = registry_get("cubic").unwrap();
        let l = loewner(&f, &[1.0, 2.0]).unwrap();
        let expect = SymMatrix::from_rows(&[vec![3.0, 7.0], vec![7.0, 12.0]]).unwrap();
        assert!(l.matrix().max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn identity_loewner_is_all_ones() {
        let f = registry_get("identity").unwrap();
        let l = loewner(&f, &[0.3, 2.0, 17.0]).unwrap();
        assert!(l.matrix().max_abs_diff(&SymMatrix::from_fn(3, |_, _| 1.0)) < 1e-15);
    }

    #[test]
    fn repeated_points_use_derivative() {
        let f = registry_get("square").unwrap();
        let l = loewner(&f, &[3.0, 3.0]).unwrap();
        // every entry is f'(3) = 6: diagonal by definition, off-diagonal by coincidence
        assert!(l.matrix().max_abs_diff(&SymMatrix::from_fn(2, |_, _| 6.0)) < 1e-15);
    }

    #[test]
    fn nonpositive_point_rejected() {
        let f = registry_get("identity").unwrap();
        assert!(loewner(&f, &[1.0, 0.0]).is_err());
        assert!(loewner(&f, &[1.0, -2.0]).is_err());
    }

    #[test]
    fn cubic_certified_not_2_monotone() {
        let f = registry_get("cubic").unwrap();
        let v = check_n_monotone(&f, 2, (0.5, 4.0), 10_000, 42).unwrap();
        assert_eq!(v.status, VerdictStatus::CertifiedNot);
        // the witness re-checks: its Loewner matrix fails is_psd
        let w = v.witness.unwrap();
        let l = loewner(&f, &w.points).unwrap();
        let check = is_psd(l.matrix(), &Tolerance::default()).unwrap();
        assert!(!check.is_psd);
        assert!((check.min_eigenvalue - w.min_eigenvalue).abs() < 1e-12);
    }

    #[test]
    fn identity_no_counterexample() {
        let f = registry_get("identity").unwrap();
        let v = check_n_monotone(&f, 4, (0.01, 100.0), 500, 7).unwrap();
        assert_eq!(v.status, VerdictStatus::NoCounterexample);
        assert_eq!(v.samples_used, 500);
    }

    #[test]
    fn sqrt_no_counterexample_order_4() {
        let f = registry_get("power:0.5").unwrap();
        let v = check_n_monotone(&f, 4, (1e-2, 1e2), 10_000, 42).unwrap();
        assert_eq!(v.status, VerdictStatus::NoCounterexample);
    }

    #[test]
    fn inverse_square_fails_order_1() {
        // the quotient of cubic decreases, so even 1-monotonicity fails
        let f = registry_get("cubic").unwrap();
        let g = super::super::transform_quotient(&f).unwrap();
        let v = check_n_monotone(&g, 1, (0.5, 4.0), 100, 1).unwrap();
        assert_eq!(v.status, VerdictStatus::CertifiedNot);
    }

    #[test]
    fn verdict_deterministic_across_thread_counts() {
        let f = registry_get("cubic").unwrap();
        let v1 = check_n_monotone(&f, 2, (0.5, 4.0), 2_000, 11).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let v2 = pool
            .install(|| check_n_monotone(&f, 2, (0.5, 4.0), 2_000, 11))
            .unwrap();
        assert_eq!(v1.samples_used, v2.samples_used);
        assert_eq!(
            v1.witness.unwrap().points,
            v2.witness.unwrap().points
        );
    }

    #[test]
    fn invalid_domain_rejected() {
        let f = registry_get("identity").unwrap();
        assert!(check_n_monotone(&f, 2, (1.0, 0.5), 10, 0).is_err());
        assert!(check_n_monotone(&f, 2, (0.0, 1.0), 10, 0).is_err());
    }

    #[test]
    fn witness_embeds_into_higher_order() {
        // appending a point keeps the certificate (principal submatrix argument)
        let f = registry_get("cubic").unwrap();
        let v = check_n_monotone(&f, 2, (0.5, 4.0), 10_000, 42).unwrap();
        let mut points = v.witness.unwrap().points;
        points.push((points[0] * points[1]).sqrt());
        let l = loewner(&f, &points).unwrap();
        let ed = eigh(l.matrix()).unwrap();
        assert!(ed.min_eigenvalue() < -CERTIFY_TOL * (1.0 + l.matrix().max_norm()));
    }
}
