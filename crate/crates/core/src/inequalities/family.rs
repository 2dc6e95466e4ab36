use super::chernoff::chernoff_q;
use super::ps::ps_sandwich;
use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use crate::monotone::{registry_get, MonotoneOrder};
use serde::Serialize;

const DEFAULT_TOL_S: f64 = 1e-6;

/// Undoubled bound values Tr(f(A)^{1/2} g(B) f(A)^{1/2}) across a function
/// family, compared against the power-family optimum Q(A,B).
#[derive(Clone, Debug, Serialize)]
pub struct FamilyScanResult {
    pub per_function: Vec<FunctionValue>,
    pub best_spec: String,
    pub best_value: f64,
    pub q_reference: f64,
    pub improved: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FunctionValue {
    pub spec: String,
    pub value: f64,
}

/// Scan the family. Every spec must name an established operator monotone
/// registry function that is strictly positive on (0, ∞); cubic and square
/// fail the membership requirement and are rejected by name.
pub fn family_scan(a: &SymMatrix, b: &SymMatrix, specs: &[String]) -> Result<FamilyScanResult> {
    if specs.is_empty() {
        return Err(Error::Precondition("no function specs given".to_string()));
    }
    let mut per_function = Vec::with_capacity(specs.len());
    for spec in specs {
        let f = registry_get(spec)?;
        if !f.strictly_positive_on_open() || f.claimed_order() != MonotoneOrder::Infinite {
            return Err(Error::Precondition(format!(
                "`{spec}` does not qualify for the scan family (needs an operator monotone \
                 function, strictly positive on (0, inf))"
            )));
        }
        let m = ps_sandwich(&f, a, b)?;
        per_function.push(FunctionValue {
            spec: spec.clone(),
            value: m.trace(),
        });
    }

    let best = per_function
        .iter()
        .min_by(|x, y| x.value.partial_cmp(&y.value).unwrap())
        .expect("nonempty by precondition");
    let best_spec = best.spec.clone();
    let best_value = best.value;
    let q_reference = chernoff_q(a, b, DEFAULT_TOL_S)?.q_value;
    let improved = best_value < q_reference - 1e-8 * (1.0 + q_reference.abs());

    Ok(FamilyScanResult {
        per_function,
        best_spec,
        best_value,
        q_reference,
        improved,
    })
}
