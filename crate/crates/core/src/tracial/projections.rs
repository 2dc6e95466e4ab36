use crate::error::{Error, Result};
use crate::linalg::random::commuting_projection_pair;
use crate::linalg::{eigh, is_psd, pos_neg_parts, Functional, SymMatrix, Tolerance};
use serde::Serialize;

/// Eigenvalues of (I−p) + (I−q) below this threshold count as kernel
/// directions. Random subspaces intersect trivially generically; the
/// threshold must not hallucinate intersections.
const MEET_RANK_TOL: f64 = 1e-8;

const IDEMPOTENT_TOL: f64 = 1e-9;

/// A pair of orthogonal projections with their meet p ∧ q.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectionPair {
    pub p: SymMatrix,
    pub q: SymMatrix,
    pub meet: SymMatrix,
}

impl ProjectionPair {
    pub fn new(p: SymMatrix, q: SymMatrix) -> Result<Self> {
        for (name, m) in [("p", &p), ("q", &q)] {
            let defect = idempotency_defect(m)?;
            if defect > IDEMPOTENT_TOL {
                return Err(Error::Precondition(format!(
                    "{name} is not a projection (idempotency defect {defect:.3e})"
                )));
            }
        }
        let meet = projection_meet(&p, &q)?;
        let tol = Tolerance::default();
        for (name, m) in [("p", &p), ("q", &q)] {
            let check = is_psd(&m.sub(&meet)?, &tol)?;
            if !check.is_psd {
                return Err(Error::Precondition(format!(
                    "computed meet is not dominated by {name} (min eigenvalue {:.3e})",
                    check.min_eigenvalue
                )));
            }
        }
        Ok(Self { p, q, meet })
    }
}

fn idempotency_defect(m: &SymMatrix) -> Result<f64> {
    let square = m.to_dense().mul(&m.to_dense()).symmetrized();
    Ok(square.max_abs_diff(m))
}

/// Projection onto Ran p ∩ Ran q, computed as the kernel of (I−p) + (I−q):
/// a vector is annihilated by that PSD sum exactly when both projections fix
/// it. Kernel membership is decided at eigenvalue ≤ 1e-8.
pub fn projection_meet(p: &SymMatrix, q: &SymMatrix) -> Result<SymMatrix> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch {
            left: p.n(),
            right: q.n(),
        });
    }
    let n = p.n();
    let two_i = SymMatrix::scaled_identity(n, 2.0);
    let m = two_i.sub(&p.add(q)?)?;
    let ed = eigh(&m)?;
    let mask: Vec<f64> = ed
        .eigenvalues()
        .iter()
        .map(|&l| if l <= MEET_RANK_TOL { 1.0 } else { 0.0 })
        .collect();
    Ok(ed.reconstruct_with(&mask))
}

/// The three quantities of the projection demonstration:
/// lhs = φ(p+q−|p−q|), mid = 2φ(p∧q), rhs = 2φ(pqp).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ProjectionProbe {
    pub lhs: f64,
    pub mid: f64,
    pub rhs: f64,
}

/// Evaluate the triple for an explicit projection pair. Only mid ≤ rhs is
/// guaranteed here (pqp ≥ p∧q holds for every pair); lhs = mid additionally
/// requires the pair to commute.
pub fn projection_triple(
    pair: &ProjectionPair,
    phi: &Functional,
) -> Result<ProjectionProbe> {
    let diff_abs = pos_neg_parts(&pair.p.sub(&pair.q)?)?.abs;
    let lhs = phi.apply(&pair.p.add(&pair.q)?.sub(&diff_abs)?)?;
    let mid = 2.0 * phi.apply(&pair.meet)?;
    let pqp = SymMatrix::sandwich(&pair.p, &pair.q)?;
    let rhs = 2.0 * phi.apply(&pqp)?;
    Ok(ProjectionProbe { lhs, mid, rhs })
}

/// Seeded commuting projection pair (one shared random eigenbasis with
/// independent eigenvalue masks).
pub fn projection_pair(n: usize, seed: u64) -> Result<ProjectionPair> {
    let (p, q) = commuting_projection_pair(n, seed);
    ProjectionPair::new(p, q)
}

/// Generate a seeded pair and evaluate the triple, asserting the identity
/// lhs = mid (to 1e-8) and the inequality mid ≤ rhs + 1e-8: projection pairs
/// from this construction can never witness a weighted-inequality violation,
/// whatever the positive functional.
pub fn projection_probe(p_seed: u64, n: usize, phi: &Functional) -> Result<ProjectionProbe> {
    let pair = projection_pair(n, p_seed)?;
    let probe = projection_triple(&pair, phi)?;
    if (probe.lhs - probe.mid).abs() > 1e-8 {
        return Err(Error::Precondition(format!(
            "projection identity failed: lhs {:.12e} vs mid {:.12e}",
            probe.lhs, probe.mid
        )));
    }
    if probe.mid > probe.rhs + 1e-8 {
        return Err(Error::Precondition(format!(
            "meet dominance failed: mid {:.12e} vs rhs {:.12e}",
            probe.mid, probe.rhs
        )));
    }
    Ok(probe)
}
