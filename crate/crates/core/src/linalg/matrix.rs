use crate::error::{Error, Result};

/// Dense real symmetric matrix, the universal operand of the crate.
///
/// Construction symmetrizes the input as (M + Mᵀ)/2 and rejects non-finite
/// entries, so every held value is exactly symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>, // row-major, length n*n
}

impl SymMatrix {
    /// Build from rows, symmetrizing and validating finiteness.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row: i,
                    cols: row.len(),
                });
            }
        }
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let v = 0.5 * (rows[i][j] + rows[j][i]);
                if !v.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                data[i * n + j] = v;
            }
        }
        Ok(Self { n, data })
    }

    /// Build from a row-major flat slice of length n².
    pub fn from_flat(n: usize, flat: &[f64]) -> Result<Self> {
        if flat.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: n * n,
                right: flat.len(),
            });
        }
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let v = 0.5 * (flat[i * n + j] + flat[j * n + i]);
                if !v.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                data[i * n + j] = v;
            }
        }
        Ok(Self { n, data })
    }

    /// Symmetric matrix from an entry generator; `f` is only consulted for i ≤ j.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Self { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(&vec![1.0; n])
    }

    pub fn scaled_identity(n: usize, c: f64) -> Self {
        Self::diag(&vec![c; n])
    }

    pub fn diag(entries: &[f64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, &d) in entries.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Set the (i,j) and (j,i) entries together.
    pub(crate) fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Entrywise (Hadamard/Schur) product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Self { n: self.n, data })
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|&x| c * x).collect(),
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Max absolute entry; the default norm for tolerances.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &x| m.max(x.abs()))
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|&x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (&a, &b)| m.max((a - b).abs()))
    }

    pub fn to_dense(&self) -> Matrix {
        Matrix {
            rows: self.n,
            cols: self.n,
            data: self.data.clone(),
        }
    }

    /// Symmetrized product O·M·O for symmetric O and M.
    pub fn sandwich(outer: &SymMatrix, mid: &SymMatrix) -> Result<SymMatrix> {
        if outer.n != mid.n {
            return Err(Error::DimensionMismatch {
                left: outer.n,
                right: mid.n,
            });
        }
        let om = outer.to_dense().mul(&mid.to_dense());
        let omo = om.mul(&outer.to_dense());
        Ok(omo.symmetrized())
    }

    /// Embed a 2×2 symmetric block into coordinates (i, j) of an n×n zero matrix.
    pub fn embed_pair(n: usize, i: usize, j: usize, block: &SymMatrix) -> Result<SymMatrix> {
        if block.n != 2 || i >= n || j >= n || i == j {
            return Err(Error::Precondition(format!(
                "cannot embed a {}x{} block at coordinates ({i},{j}) of an {n}x{n} matrix",
                block.n, block.n
            )));
        }
        let mut m = SymMatrix::zeros(n);
        m.set_sym(i, i, block.get(0, 0));
        m.set_sym(j, j, block.get(1, 1));
        m.set_sym(i, j, block.get(0, 1));
        Ok(m)
    }
}

/// Plain dense matrix; holds eigenvector bases and product intermediates.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>, // row-major
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// Σᵢⱼ self\[i,j\]·other\[j,i\], i.e. tr(self·other) without forming the product.
    pub fn trace_product(&self, other: &Self) -> f64 {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut t = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                t += self.get(i, j) * other.get(j, i);
            }
        }
        t
    }

    /// (M + Mᵀ)/2 as a SymMatrix; callers use it to round off products that
    /// are symmetric in exact arithmetic.
    pub fn symmetrized(&self) -> SymMatrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        SymMatrix::from_fn(n, |i, j| 0.5 * (self.get(i, j) + self.get(j, i)))
    }

    /// ‖MᵀM − I‖_max, the orthogonality defect of a square basis.
    pub fn orthogonality_defect(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let mut dot = 0.0;
                for k in 0..n {
                    dot += self.get(k, i) * self.get(k, j);
                }
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}
