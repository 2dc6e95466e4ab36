use super::ps::ps_sandwich;
use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use crate::monotone::{registry_get, standard_positive_specs};
use serde::Serialize;

/// The rank-one probe pair
///
///   A = [[λ, √(λμ)], [√(λμ), μ]],   B = [[λ, −√(λμ)], [−√(λμ), μ]],
///
/// both positive multiples of rank-one projections, with
/// |A−B| = diag(2√(λμ), 2√(λμ)) and the closed-form identity
/// f(A)^{1/2} g(B) f(A)^{1/2} = ((μ−λ)/(μ+λ))²·A for every f that vanishes
/// at 0 and is strictly positive on (0, ∞). `residuals` records the max-norm
/// deviation from that identity per registry function.
#[derive(Clone, Debug, Serialize)]
pub struct RankOneProbe {
    pub lambda: f64,
    pub mu: f64,
    #[serde(rename = "A")]
    pub a: SymMatrix,
    #[serde(rename = "B")]
    pub b: SymMatrix,
    pub abs_diff: SymMatrix,
    pub factor: f64,
    pub residuals: Vec<(String, f64)>,
}

impl RankOneProbe {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, &(_, r)| m.max(r))
    }

    /// The bound the internal identity check is held to: 1e-9·(λ+μ).
    pub fn residual_bound(&self) -> f64 {
        1e-9 * (self.lambda + self.mu)
    }
}

pub fn rank_one_probe(lambda: f64, mu: f64) -> Result<RankOneProbe> {
    if !(lambda > 0.0 && lambda < mu && mu.is_finite()) {
        return Err(Error::Precondition(format!(
            "probe needs 0 < lambda < mu, got lambda = {lambda}, mu = {mu}"
        )));
    }
    let root = (lambda * mu).sqrt();
    let a = SymMatrix::from_rows(&[vec![lambda, root], vec![root, mu]])?;
    let b = SymMatrix::from_rows(&[vec![lambda, -root], vec![-root, mu]])?;
    let abs_diff = SymMatrix::diag(&[2.0 * root, 2.0 * root]);
    let ratio = (mu - lambda) / (mu + lambda);
    let factor = ratio * ratio;

    let target = a.scale(factor);
    let mut specs = standard_positive_specs();
    specs.push("identity".to_string());
    let mut residuals = Vec::with_capacity(specs.len());
    for spec in specs {
        let f = registry_get(&spec)?;
        let m = ps_sandwich(&f, &a, &b)?;
        residuals.push((spec, m.max_abs_diff(&target)));
    }

    Ok(RankOneProbe {
        lambda,
        mu,
        a,
        b,
        abs_diff,
        factor,
        residuals,
    })
}
