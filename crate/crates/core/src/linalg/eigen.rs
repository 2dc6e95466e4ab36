use super::matrix::{Matrix, SymMatrix};
use crate::error::{Error, Result};

/// Stop once the off-diagonal Frobenius mass drops below this fraction of ‖A‖_F.
const OFF_DIAGONAL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues (ascending) and an orthonormal eigenvector basis of a SymMatrix.
///
/// Column i of `eigenvectors` pairs with `eigenvalues[i]`. Every spectral
/// operation in the crate reconstructs through this type.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: Matrix,
}

impl EigenDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &Matrix {
        &self.eigenvectors
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn max_abs_eigenvalue(&self) -> f64 {
        self.eigenvalues
            .iter()
            .fold(0.0f64, |m, &l| m.max(l.abs()))
    }

    /// V·diag(f(λ))·Vᵀ, symmetrized.
    pub fn reconstruct_map(&self, f: impl Fn(f64) -> f64) -> SymMatrix {
        let mapped: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        self.reconstruct_with(&mapped)
    }

    /// V·diag(w)·Vᵀ for explicit weights w, symmetrized.
    pub fn reconstruct_with(&self, weights: &[f64]) -> SymMatrix {
        let n = self.eigenvalues.len();
        assert_eq!(weights.len(), n);
        let v = &self.eigenvectors;
        SymMatrix::from_fn(n, |i, j| {
            let mut acc = 0.0;
            for k in 0..n {
                acc += v.get(i, k) * weights[k] * v.get(j, k);
            }
            acc
        })
    }
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps annihilate the (p,q) entries in row order until the off-diagonal
/// Frobenius mass is below 1e-14·‖A‖_F. Deterministic for identical input.
pub fn eigh(a: &SymMatrix) -> Result<EigenDecomposition> {
    let n = a.n();
    if n == 0 {
        return Ok(EigenDecomposition {
            eigenvalues: vec![],
            eigenvectors: Matrix::zeros(0, 0),
        });
    }

    let mut m = a.to_dense();
    let mut v = Matrix::identity(n);
    let frob = a.frob_norm();
    let stop = OFF_DIAGONAL_TOL * frob;

    let mut converged = n == 1 || frob == 0.0;
    if !converged {
        for _ in 0..MAX_SWEEPS {
            if off_diagonal_mass(&m) <= stop {
                converged = true;
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    rotate(&mut m, &mut v, p, q);
                }
            }
        }
        if !converged && off_diagonal_mass(&m) <= stop {
            converged = true;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    // Ascending sort, carrying eigenvector columns along.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).partial_cmp(&m.get(j, j)).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m.get(i, i)).collect();
    let mut vecs = Matrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vecs.set(row, new_col, v.get(row, old_col));
        }
    }

    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors: vecs,
    })
}

fn off_diagonal_mass(m: &Matrix) -> f64 {
    let n = m.rows();
    let mut acc = 0.0;
    for i in 0..n - 1 {
        for j in i + 1..n {
            let x = m.get(i, j);
            acc += 2.0 * x * x;
        }
    }
    acc.sqrt()
}

/// One Jacobi rotation annihilating the (p,q) entry, applied to both sides of
/// `m` and accumulated into `v`. Rotation angle from the stable half-angle
/// formula of Numerical Recipes, Jacobi transformations chapter.
fn rotate(m: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = m.get(p, q);
    if apq == 0.0 {
        return;
    }
    let app = m.get(p, p);
    let aqq = m.get(q, q);
    let diff = aqq - app;

    let t = if apq.abs() < 1e-300 * diff.abs() {
        // rotation would underflow; the entry is already negligible
        apq / diff
    } else {
        let theta = 0.5 * diff / apq;
        let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
        if theta < 0.0 {
            t = -t;
        }
        t
    };

    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);
    let h = t * apq;

    let n = m.rows();
    m.set(p, p, app - h);
    m.set(q, q, aqq + h);
    m.set(p, q, 0.0);
    m.set(q, p, 0.0);

    for j in 0..n {
        if j == p || j == q {
            continue;
        }
        let g = m.get(j, p);
        let hh = m.get(j, q);
        let gp = g - s * (hh + g * tau);
        let gq = hh + s * (g - hh * tau);
        m.set(j, p, gp);
        m.set(p, j, gp);
        m.set(j, q, gq);
        m.set(q, j, gq);
    }
    for j in 0..n {
        let g = v.get(j, p);
        let hh = v.get(j, q);
        v.set(j, p, g - s * (hh + g * tau));
        v.set(j, q, hh + s * (g - hh * tau));
    }
}
