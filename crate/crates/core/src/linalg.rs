//! Dense complex helpers on top of nalgebra: Hermitian null spaces and
//! sparse Gram accumulation for large homogeneous systems.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::scalar::{C64, ZERO};

/// Accumulates `AᴴA` for a homogeneous system `A z = 0` whose rows arrive
/// one at a time in sparse form. The null space of `A` is the eigenspace of
/// `AᴴA` at eigenvalue 0, so the full `rows × unknowns` matrix is never
/// materialized.
pub struct GramAccumulator {
    n: usize,
    gram: DMatrix<C64>,
}

impl GramAccumulator {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            gram: DMatrix::from_element(n, n, ZERO),
        }
    }

    pub fn add_row(&mut self, row: &[(usize, C64)]) {
        for &(a, va) in row {
            let ca = va.conj();
            for &(b, vb) in row {
                self.gram[(a, b)] += ca * vb;
            }
        }
    }

    /// Add every row of a linear map given column by column:
    /// `columns[k]` is the sparse image of unknown `k` in an output space of
    /// dimension `out_dim`.
    pub fn add_columns(&mut self, out_dim: usize, columns: &[Vec<(usize, C64)>]) {
        let mut rows: Vec<Vec<(usize, C64)>> = vec![Vec::new(); out_dim];
        for (k, col) in columns.iter().enumerate() {
            for &(m, v) in col {
                if v != ZERO {
                    rows[m].push((k, v));
                }
            }
        }
        for row in &rows {
            self.add_row(row);
        }
    }

    /// Orthonormal basis of the null space: eigenvectors of the Gram matrix
    /// whose eigenvalue is at most `eps · max(1, λ_max)`.
    pub fn null_space(self, eps: f64) -> Vec<Vec<C64>> {
        hermitian_kernel(self.gram, self.n, eps)
    }
}

fn hermitian_kernel(gram: DMatrix<C64>, n: usize, eps: f64) -> Vec<Vec<C64>> {
    if n == 0 {
        return Vec::new();
    }
    let eig = SymmetricEigen::new(gram);
    let lmax = eig.eigenvalues.iter().cloned().fold(0.0, f64::max);
    let cut = eps * lmax.max(1.0);
    (0..n)
        .filter(|&c| eig.eigenvalues[c] <= cut)
        .map(|c| eig.eigenvectors.column(c).iter().cloned().collect())
        .collect()
}

/// Orthonormal basis of the orthogonal complement of the span of the
/// orthonormal `rows`, via the spectrum of the projector `Σ r rᴴ`
/// (eigenvalues are exactly 0 or 1 up to rounding).
pub fn orthonormal_complement(rows: &[Vec<C64>], n: usize) -> Vec<Vec<C64>> {
    if rows.is_empty() {
        return (0..n).map(|i| crate::scalar::unit_vector(n, i)).collect();
    }
    if rows.len() >= n {
        return Vec::new();
    }
    let mut proj = DMatrix::from_element(n, n, ZERO);
    for r in rows {
        for a in 0..n {
            if r[a] == ZERO {
                continue;
            }
            for b in 0..n {
                proj[(a, b)] += r[a] * r[b].conj();
            }
        }
    }
    let eig = SymmetricEigen::new(proj);
    (0..n)
        .filter(|&c| eig.eigenvalues[c] < 0.5)
        .map(|c| eig.eigenvectors.column(c).iter().cloned().collect())
        .collect()
}

/// Right null space of a dense `m × n` matrix by full SVD, padding with zero
/// rows when `m < n`. Returns right singular vectors with `σ ≤ eps`.
pub fn svd_null_space(m: DMatrix<C64>, eps: f64) -> Vec<Vec<C64>> {
    let (rows, cols) = m.shape();
    if cols == 0 {
        return Vec::new();
    }
    if rows == 0 {
        return (0..cols).map(|i| crate::scalar::unit_vector(cols, i)).collect();
    }
    let square = if rows < cols {
        let mut padded = DMatrix::from_element(cols, cols, ZERO);
        padded.view_mut((0, 0), (rows, cols)).copy_from(&m);
        padded
    } else {
        m
    };
    let svd = square.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] <= eps)
        .map(|i| v_t.row(i).iter().map(|z| z.conj()).collect())
        .collect()
}
