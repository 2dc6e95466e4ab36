use crate::error::{Error, Result};
use crate::linalg::{PsdSpectrum, SymMatrix};
use serde::Serialize;

const GRID_POINTS: usize = 33;
const MAX_GOLDEN_ITERATIONS: usize = 200;

/// Minimizer data for Q(A,B) = min over s in \[0,1\] of
/// Tr(A^{(1−s)/2} B^s A^{(1−s)/2}), with the full scan grid retained so a
/// flat or multimodal objective stays visible.
#[derive(Clone, Debug, Serialize)]
pub struct ChernoffResult {
    pub s_star: f64,
    pub q_value: f64,
    pub grid: Vec<(f64, f64)>,
    pub iterations: usize,
}

struct Objective<'a> {
    a: &'a PsdSpectrum,
    b: &'a PsdSpectrum,
}

impl Objective<'_> {
    /// Tr(A^{(1−s)/2} B^s A^{(1−s)/2}) under the support convention 0^p := 0.
    fn eval(&self, s: f64) -> f64 {
        let outer = self.a.power((1.0 - s) / 2.0).to_dense();
        let mid = self.b.power(s).to_dense();
        outer.mul(&mid).trace_product(&outer)
    }
}

/// Grid scan plus golden-section refinement of the bracketing cell down to
/// width tol_s. The objective is only assumed unimodal inside that cell.
pub fn chernoff_q(a: &SymMatrix, b: &SymMatrix, tol_s: f64) -> Result<ChernoffResult> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    if !(tol_s > 0.0 && tol_s < 1.0) {
        return Err(Error::Precondition(format!(
            "tol_s must lie in (0, 1), got {tol_s}"
        )));
    }
    let a_spec = PsdSpectrum::new(a)?;
    let b_spec = PsdSpectrum::new(b)?;
    let h = Objective {
        a: &a_spec,
        b: &b_spec,
    };

    let mut grid = Vec::with_capacity(GRID_POINTS);
    let mut best = (0.0, f64::INFINITY);
    for k in 0..GRID_POINTS {
        let s = k as f64 / (GRID_POINTS - 1) as f64;
        let v = h.eval(s);
        if v < best.1 {
            best = (s, v);
        }
        grid.push((s, v));
    }
    let argmin = grid
        .iter()
        .position(|&(s, _)| s == best.0)
        .expect("argmin is on the grid");

    let lo = grid[argmin.saturating_sub(1)].0;
    let hi = grid[(argmin + 1).min(GRID_POINTS - 1)].0;
    let (s_star, q_value, iterations) = golden_refine(&h, lo, hi, tol_s, best);

    Ok(ChernoffResult {
        s_star,
        q_value,
        grid,
        iterations,
    })
}

/// Golden-section search on [lo, hi], seeded with the incumbent best point so
/// the result can never exceed the grid minimum.
fn golden_refine(
    h: &Objective<'_>,
    mut lo: f64,
    mut hi: f64,
    tol_s: f64,
    incumbent: (f64, f64),
) -> (f64, f64, usize) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut best = incumbent;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = h.eval(x1);
    let mut f2 = h.eval(x2);
    let mut iterations = 0;
    while hi - lo > tol_s && iterations < MAX_GOLDEN_ITERATIONS {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = h.eval(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = h.eval(x2);
        }
        iterations += 1;
        let (x, fx) = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
        if fx < best.1 {
            best = (x, fx);
        }
    }
    (best.0, best.1, iterations)
}
