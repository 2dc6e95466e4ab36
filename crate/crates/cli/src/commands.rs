use crate::output;
use loewner_ps::inequalities::{
    chernoff_q, family_scan, ps_sweep, rank_one_probe, sweep_pair, SweepConfig,
};
use loewner_ps::linalg::json::read_matrix_file;
use loewner_ps::tracial::{abs_dominance_witness, subadditivity_witness, trace_test_ps};
use loewner_ps::{
    check_n_monotone, registry_get, standard_positive_specs, Functional, Result, SymMatrix,
    VerdictStatus,
};
use serde::Serialize;
use std::path::{Path, PathBuf};

const EXIT_PASS: u8 = 0;
const EXIT_VIOLATION: u8 = 2;

fn print_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<u8> {
    let text = serde_json::to_string_pretty(value).expect("report serialization cannot fail");
    output::emit(out, &format!("{text}\n"))
        .map_err(|e| loewner_ps::Error::Precondition(format!("cannot write report: {e}")))?;
    Ok(EXIT_PASS)
}

pub fn check_monotone(
    spec: &str,
    order: usize,
    domain: (f64, f64),
    trials: usize,
    seed: u64,
) -> Result<u8> {
    let f = registry_get(spec)?;
    let verdict = check_n_monotone(&f, order, domain, trials, seed)?;
    let status = verdict.status;
    print_json(&verdict, None)?;
    Ok(match status {
        VerdictStatus::CertifiedNot => EXIT_VIOLATION,
        VerdictStatus::NoCounterexample => EXIT_PASS,
    })
}

#[derive(Serialize)]
struct PsWitness<'a> {
    function_spec: &'a str,
    n: usize,
    seed: u64,
    lhs: f64,
    rhs: f64,
    gap: f64,
    #[serde(rename = "A")]
    a: SymMatrix,
    #[serde(rename = "B")]
    b: SymMatrix,
}

#[allow(clippy::too_many_arguments)]
pub fn verify_ps(
    functions: Vec<String>,
    mut dims: Vec<usize>,
    trials: usize,
    seed: u64,
    tol: f64,
    weight: Option<PathBuf>,
    out: Option<PathBuf>,
    json: bool,
) -> Result<u8> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(loewner_ps::Error::Precondition(format!(
            "--tol must be positive, got {tol}"
        )));
    }
    let specs = if functions.is_empty() {
        standard_positive_specs()
    } else {
        functions
    };
    let phi = match &weight {
        Some(path) => {
            let s = read_matrix_file(path)?;
            let phi = Functional::new(s)?;
            dims = vec![phi.n()];
            Some(phi)
        }
        None => None,
    };

    let cfg = SweepConfig {
        specs: specs.clone(),
        dims: dims.clone(),
        trials,
        seed,
        singular_probability: 0.25,
        tol_rel: tol,
    };
    let rows = ps_sweep(&cfg, phi.as_ref())?;

    let report = if json {
        format!(
            "{}\n",
            serde_json::to_string_pretty(&rows).expect("rows serialize")
        )
    } else {
        output::render_csv(&rows)
    };
    output::emit(out.as_deref(), &report)
        .map_err(|e| loewner_ps::Error::Precondition(format!("cannot write report: {e}")))?;

    let mut violation_witness: Option<String> = None;

    // random-sweep violations: regenerate the trial pair for the sidecar
    if let Some((idx, row)) = rows.iter().enumerate().find(|(_, r)| !r.holds) {
        let per_spec = dims.len() * trials;
        let trial = idx % per_spec % trials;
        let (a, b) = sweep_pair(seed, row.dimension, trial, cfg.singular_probability);
        violation_witness = Some(
            serde_json::to_string_pretty(&PsWitness {
                function_spec: &row.function_spec,
                n: row.dimension,
                seed: row.seed,
                lhs: row.lhs,
                rhs: row.rhs,
                gap: row.gap,
                a,
                b,
            })
            .expect("witness serialize"),
        );
    }

    // weighted functionals additionally get the deterministic structured
    // search, which is where non-tracial weights reveal themselves
    if violation_witness.is_none() {
        if let Some(phi) = &phi {
            if phi.as_trace_multiple().is_none() {
                for spec in &specs {
                    let f = registry_get(spec)?;
                    if !(f.strictly_positive_on_open() && f.vanishes_at_zero()) {
                        continue;
                    }
                    let verdict = trace_test_ps(phi, &f, 0, seed)?;
                    if let Some(w) = verdict.witness {
                        violation_witness = Some(
                            serde_json::to_string_pretty(&PsWitness {
                                function_spec: spec,
                                n: phi.n(),
                                seed,
                                lhs: w.lhs,
                                rhs: w.rhs,
                                gap: w.rhs - w.lhs,
                                a: w.a,
                                b: w.b.expect("ps witness carries a pair"),
                            })
                            .expect("witness serialize"),
                        );
                        break;
                    }
                }
            }
        }
    }

    match violation_witness {
        Some(witness) => {
            output::emit_witness(out.as_deref(), &witness).map_err(|e| {
                loewner_ps::Error::Precondition(format!("cannot write witness: {e}"))
            })?;
            Ok(EXIT_VIOLATION)
        }
        None => Ok(EXIT_PASS),
    }
}

pub fn chernoff(a: &Path, b: &Path, tol_s: f64, out: Option<PathBuf>) -> Result<u8> {
    let a = read_matrix_file(a)?;
    let b = read_matrix_file(b)?;
    let result = chernoff_q(&a, &b, tol_s)?;
    print_json(&result, out.as_deref())
}

pub fn scan_family(
    a: &Path,
    b: &Path,
    functions: Vec<String>,
    out: Option<PathBuf>,
) -> Result<u8> {
    let specs = if functions.is_empty() {
        standard_positive_specs()
    } else {
        functions
    };
    let a = read_matrix_file(a)?;
    let b = read_matrix_file(b)?;
    let result = family_scan(&a, &b, &specs)?;
    print_json(&result, out.as_deref())
}

pub fn trace_test(
    weight: &Path,
    function: &str,
    kind: &str,
    trials: usize,
    seed: u64,
) -> Result<u8> {
    let s = read_matrix_file(weight)?;
    let phi = Functional::new(s)?;
    let verdict = match kind {
        "ps" => {
            let f = registry_get(function)?;
            trace_test_ps(&phi, &f, trials, seed)?
        }
        "subadd" => subadditivity_witness(&phi, trials, seed)?,
        "absdom" => abs_dominance_witness(&phi, trials, seed)?,
        other => {
            return Err(loewner_ps::Error::Precondition(format!(
                "unknown test kind `{other}`"
            )))
        }
    };
    let found = matches!(
        verdict.status,
        loewner_ps::tracial::ViolationStatus::ViolationFound
    );
    print_json(&verdict, None)?;
    Ok(if found { EXIT_VIOLATION } else { EXIT_PASS })
}

pub fn probe(lambda: f64, mu: f64) -> Result<u8> {
    let probe = rank_one_probe(lambda, mu)?;
    let ok = probe.max_residual() <= probe.residual_bound();
    print_json(&probe, None)?;
    Ok(if ok { EXIT_PASS } else { EXIT_VIOLATION })
}
