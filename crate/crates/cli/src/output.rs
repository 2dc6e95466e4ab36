//! Deterministic report formatting: CSV with 17-significant-digit floats and
//! pretty JSON, written to stdout or a file.

use loewner_ps::inequalities::PsReport;
use std::io::Write;
use std::path::{Path, PathBuf};

/// 17 significant digits: enough to round-trip any f64 exactly.
pub fn float17(x: f64) -> String {
    format!("{x:.16e}")
}

pub const CSV_HEADER: &str = "function_spec,n,seed,lhs,rhs,gap,holds";

pub fn csv_row(r: &PsReport) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        r.function_spec,
        r.dimension,
        r.seed,
        float17(r.lhs),
        float17(r.rhs),
        float17(r.gap),
        r.holds
    )
}

pub fn render_csv(rows: &[PsReport]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&csv_row(r));
        out.push('\n');
    }
    out
}

/// Write to the file when a path is given, else to stdout.
pub fn emit(out: Option<&Path>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())
        }
    }
}

/// Sidecar path for the witness JSON accompanying an exit-2 CSV report.
pub fn witness_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".witness.json");
    out.with_file_name(name)
}

/// Witnesses go to the sidecar when a report path exists, else to stderr.
pub fn emit_witness(out: Option<&Path>, witness_json: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(witness_path(path), witness_json),
        None => {
            eprintln!("{witness_json}");
            Ok(())
        }
    }
}
