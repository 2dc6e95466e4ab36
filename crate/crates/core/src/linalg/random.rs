//! Seeded random generators for matrices, subspaces, and trial substreams.
//!
//! Every batch driver derives one substream per trial from (seed, index), so
//! results are bitwise independent of thread count and execution order.

use super::eigen::eigh;
use super::matrix::{Matrix, SymMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Derive a child seed from (seed, index) via splitmix64 mixing.
pub fn substream(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ mix64(index.wrapping_add(0x9e3779b97f4a7c15));
    z = mix64(z);
    z
}

fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard normal via Box-Muller.
fn gaussian(rng: &mut impl Rng) -> f64 {
    loop {
        let u1: f64 = rng.random();
        let u2: f64 = rng.random();
        if u1 > 0.0 {
            return (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos();
        }
    }
}

/// Haar-ish random orthogonal matrix: Gaussian columns orthonormalized by
/// modified Gram-Schmidt with a second re-orthogonalization pass.
pub fn random_orthogonal(n: usize, rng: &mut impl Rng) -> Matrix {
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    for _ in 0..n {
        loop {
            let mut v: Vec<f64> = (0..n).map(|_| gaussian(rng)).collect();
            for _pass in 0..2 {
                for prev in &cols {
                    let dot: f64 = v.iter().zip(prev).map(|(a, b)| a * b).sum();
                    for (x, p) in v.iter_mut().zip(prev) {
                        *x -= dot * p;
                    }
                }
            }
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-8 {
                for x in v.iter_mut() {
                    *x /= norm;
                }
                cols.push(v);
                break;
            }
        }
    }
    let mut m = Matrix::zeros(n, n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

fn from_spectrum(v: &Matrix, spectrum: &[f64]) -> SymMatrix {
    let n = spectrum.len();
    SymMatrix::from_fn(n, |i, j| {
        let mut acc = 0.0;
        for k in 0..n {
            acc += v.get(i, k) * spectrum[k] * v.get(j, k);
        }
        acc
    })
}

/// PSD matrix V·diag(u)·Vᵀ with V a seeded random orthogonal basis and u
/// i.i.d. uniform on [0, spectrum_scale]. Deterministic per (n, seed).
pub fn random_psd(n: usize, seed: u64, spectrum_scale: f64) -> SymMatrix {
    let mut rng = seeded_rng(seed);
    random_psd_from(&mut rng, n, spectrum_scale)
}

pub fn random_psd_from(rng: &mut impl Rng, n: usize, spectrum_scale: f64) -> SymMatrix {
    let v = random_orthogonal(n, rng);
    let spectrum: Vec<f64> = (0..n)
        .map(|_| rng.random::<f64>() * spectrum_scale)
        .collect();
    from_spectrum(&v, &spectrum)
}

/// PSD matrix that is made exactly rank-deficient with the given probability
/// (between 1 and n−1 eigenvalues zeroed; the single eigenvalue for n = 1).
pub fn random_psd_maybe_singular(
    rng: &mut impl Rng,
    n: usize,
    spectrum_scale: f64,
    singular_probability: f64,
) -> SymMatrix {
    let v = random_orthogonal(n, rng);
    let mut spectrum: Vec<f64> = (0..n)
        .map(|_| rng.random::<f64>() * spectrum_scale)
        .collect();
    if rng.random::<f64>() < singular_probability {
        let zeros = if n == 1 {
            1
        } else {
            1 + rng.random_range(0..n - 1)
        };
        for _ in 0..zeros {
            let k = rng.random_range(0..n);
            spectrum[k] = 0.0;
        }
    }
    from_spectrum(&v, &spectrum)
}

/// Symmetric matrix with spectrum uniform on [−scale, scale] in a random basis.
pub fn random_symmetric(rng: &mut impl Rng, n: usize, scale: f64) -> SymMatrix {
    let v = random_orthogonal(n, rng);
    let spectrum: Vec<f64> = (0..n)
        .map(|_| (2.0 * rng.random::<f64>() - 1.0) * scale)
        .collect();
    from_spectrum(&v, &spectrum)
}

/// Symmetric matrix with i.i.d. uniform entries on [−scale, scale]; used to
/// stress the eigensolver with unstructured input.
pub fn random_symmetric_dense(rng: &mut impl Rng, n: usize, scale: f64) -> SymMatrix {
    let mut rows = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = (2.0 * rng.random::<f64>() - 1.0) * scale;
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    SymMatrix::from_rows(&rows).expect("finite by construction")
}

/// Symmetric contraction V·diag(u)·Vᵀ with u uniform on [0, 1].
pub fn random_contraction(rng: &mut impl Rng, n: usize) -> SymMatrix {
    let v = random_orthogonal(n, rng);
    let spectrum: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    from_spectrum(&v, &spectrum)
}

/// Orthogonal projection onto the span of `rank` random orthonormal columns.
pub fn random_projection(rng: &mut impl Rng, n: usize, rank: usize) -> SymMatrix {
    assert!(rank <= n);
    let v = random_orthogonal(n, rng);
    let spectrum: Vec<f64> = (0..n).map(|k| if k < rank { 1.0 } else { 0.0 }).collect();
    from_spectrum(&v, &spectrum)
}

/// Two random projections sharing one random eigenbasis (independent
/// Bernoulli(1/2) eigenvalue masks), hence commuting, with a nontrivial
/// meet exactly where both masks are 1.
pub fn commuting_projection_pair(n: usize, seed: u64) -> (SymMatrix, SymMatrix) {
    let mut rng = seeded_rng(seed);
    let v = random_orthogonal(n, &mut rng);
    let mask_p: Vec<f64> = (0..n)
        .map(|_| if rng.random::<f64>() < 0.5 { 1.0 } else { 0.0 })
        .collect();
    let mask_q: Vec<f64> = (0..n)
        .map(|_| if rng.random::<f64>() < 0.5 { 1.0 } else { 0.0 })
        .collect();
    (from_spectrum(&v, &mask_p), from_spectrum(&v, &mask_q))
}

/// Largest singular value of a symmetric matrix (max |eigenvalue|).
pub fn spectral_norm(a: &SymMatrix) -> crate::error::Result<f64> {
    Ok(eigh(a)?.max_abs_eigenvalue())
}
