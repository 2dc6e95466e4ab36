use super::ps_test::PROBE_RATIOS;
use super::{violation_tol, TestKind, TraceTestVerdict, TraceWitness};
use crate::error::Result;
use crate::inequalities::rank_one_probe;
use crate::linalg::random::{random_symmetric, seeded_rng, substream};
use crate::linalg::{eigh, pos_neg_parts, Functional, SymMatrix};

/// Opening angles of the rank-one subadditivity family; smaller values bite
/// closer to the tracial boundary.
const EPS_GRID: [f64; 8] = [0.8, 0.4, 0.2, 0.1, 0.05, 0.02, 0.01, 0.005];

fn abs_of(m: &SymMatrix) -> Result<SymMatrix> {
    Ok(pos_neg_parts(m)?.abs)
}

/// Self-adjoint pairs fed to the structured subadditivity phase, conjugated
/// into the weight's eigenbasis.
///
/// Two sources: the probe differences (X, Y) = (B−A, A) from the rank-one
/// probes, and the opening-angle family X = uuᵀ, Y = −vvᵀ with u, v at
/// angles ±(π/2−ε)/2 inside an embedded coordinate plane. The latter violates
/// subadditivity by (αᵢ+αⱼ)(cos ε − 1) + (αⱼ−αᵢ)·sin ε whenever the weights
/// αᵢ < αⱼ differ and ε is small enough.
fn structured_subadd_pairs(phi: &Functional) -> Result<Vec<(SymMatrix, SymMatrix)>> {
    let n = phi.n();
    let basis = eigh(phi.weight())?;
    let v = basis.eigenvectors();
    let vt = v.transpose();
    let conjugate = |m: &SymMatrix| v.mul(&m.to_dense()).mul(&vt).symmetrized();

    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for ratio in PROBE_RATIOS {
                let probe = rank_one_probe(ratio, 1.0)?;
                let diff = probe.b.sub(&probe.a)?;
                let x = SymMatrix::embed_pair(n, i, j, &diff)?;
                let y = SymMatrix::embed_pair(n, i, j, &probe.a)?;
                pairs.push((conjugate(&x), conjugate(&y)));
            }
            for eps in EPS_GRID {
                let delta = 0.5 * (std::f64::consts::FRAC_PI_2 - eps);
                let (c, s) = (delta.cos(), delta.sin());
                let x_block = SymMatrix::from_fn(2, |r, t| {
                    let u = [c, s];
                    u[r] * u[t]
                });
                let y_block = SymMatrix::from_fn(2, |r, t| {
                    let w = [c, -s];
                    -w[r] * w[t]
                });
                let x = SymMatrix::embed_pair(n, i, j, &x_block)?;
                let y = SymMatrix::embed_pair(n, i, j, &y_block)?;
                pairs.push((conjugate(&x), conjugate(&y)));
            }
        }
    }
    Ok(pairs)
}

/// Search for φ(|A+B|) > φ(|A|) + φ(|B|) over the structured families and
/// seeded random self-adjoint pairs. A violation certifies non-traciality.
pub fn subadditivity_witness(
    phi: &Functional,
    trials: usize,
    seed: u64,
) -> Result<TraceTestVerdict> {
    let n = phi.n();
    let mut used = 0;

    let mut check = |a: SymMatrix, b: SymMatrix| -> Result<Option<TraceTestVerdict>> {
        used += 1;
        let sum_abs = abs_of(&a.add(&b)?)?;
        let lhs = phi.apply(&sum_abs)?;
        let rhs = phi.apply(&abs_of(&a)?)? + phi.apply(&abs_of(&b)?)?;
        if lhs > rhs + violation_tol(lhs, rhs) {
            return Ok(Some(TraceTestVerdict::violation(
                TestKind::Subadd,
                TraceWitness {
                    a,
                    b: Some(b),
                    lhs,
                    rhs,
                },
                used,
            )));
        }
        Ok(None)
    };

    for (a, b) in structured_subadd_pairs(phi)? {
        if let Some(v) = check(a, b)? {
            return Ok(v);
        }
    }
    for trial in 0..trials {
        let mut rng = seeded_rng(substream(seed, trial as u64));
        let a = random_symmetric(&mut rng, n, 1.0);
        let b = random_symmetric(&mut rng, n, 1.0);
        if let Some(v) = check(a, b)? {
            return Ok(v);
        }
    }
    Ok(TraceTestVerdict::clean(TestKind::Subadd, used))
}

/// Search for |φ(A)| > φ(|A|) over probe differences and seeded random
/// self-adjoint matrices.
///
/// For real symmetric arguments this inequality holds for every positive φ
/// (expand A in its eigenbasis: |Σλᵢφ(Pᵢ)| ≤ Σ|λᵢ|φ(Pᵢ) since φ(Pᵢ) ≥ 0), so
/// the search is expected to come back clean; it exists to document that
/// dominance on symmetric arguments cannot separate tracial weights here.
pub fn abs_dominance_witness(
    phi: &Functional,
    trials: usize,
    seed: u64,
) -> Result<TraceTestVerdict> {
    let n = phi.n();
    let basis = eigh(phi.weight())?;
    let v = basis.eigenvectors();
    let vt = v.transpose();
    let mut used = 0;

    let mut check = |a: SymMatrix| -> Result<Option<TraceTestVerdict>> {
        used += 1;
        let lhs = phi.apply(&a)?.abs();
        let rhs = phi.apply(&abs_of(&a)?)?;
        if lhs > rhs + violation_tol(lhs, rhs) {
            return Ok(Some(TraceTestVerdict::violation(
                TestKind::AbsDom,
                TraceWitness {
                    a,
                    b: None,
                    lhs,
                    rhs,
                },
                used,
            )));
        }
        Ok(None)
    };

    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for ratio in PROBE_RATIOS {
                let probe = rank_one_probe(ratio, 1.0)?;
                let diff = probe.a.sub(&probe.b)?;
                let embedded = SymMatrix::embed_pair(n, i, j, &diff)?;
                let c = v.mul(&embedded.to_dense()).mul(&vt).symmetrized();
                if let Some(verdict) = check(c)? {
                    return Ok(verdict);
                }
            }
        }
    }
    for trial in 0..trials {
        let mut rng = seeded_rng(substream(seed, trial as u64));
        let a = random_symmetric(&mut rng, n, 1.0);
        if let Some(verdict) = check(a)? {
            return Ok(verdict);
        }
    }
    Ok(TraceTestVerdict::clean(TestKind::AbsDom, used))
}
