//! Minimal complex CSR matrix with the handful of kernels the crate needs:
//! mat-vec, mat-mat, Kronecker products, and norms. Superoperators at the
//! largest working sizes (D ~ 1.3·10⁵, a few million nonzeros) never get
//! densified, so these kernels are the hot path of the spectral module.

use ndarray::{Array1, Array2, ArrayView1};
use num_complex::Complex64 as C64;
use num_traits::Zero;

/// Compressed sparse row matrix over `Complex64`.
#[derive(Debug, Clone)]
pub struct CsrMatrix {
    nrows: usize,
    ncols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    vals: Vec<C64>,
}

impl CsrMatrix {
    /// Build from unsorted triplets; duplicates are summed, exact zeros dropped.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: &[(usize, usize, C64)]) -> Self {
        let mut counts = vec![0usize; nrows + 1];
        for &(i, _, _) in triplets {
            assert!(i < nrows, "row index out of bounds");
            counts[i + 1] += 1;
        }
        for i in 0..nrows {
            counts[i + 1] += counts[i];
        }
        let mut order = counts.clone();
        let mut cols = vec![0usize; triplets.len()];
        let mut vals = vec![C64::zero(); triplets.len()];
        for &(i, j, v) in triplets {
            assert!(j < ncols, "column index out of bounds");
            let p = order[i];
            cols[p] = j;
            vals[p] = v;
            order[i] += 1;
        }
        // sort within each row, merge duplicates, drop zeros
        let mut row_ptr = vec![0usize; nrows + 1];
        let mut out_cols = Vec::with_capacity(triplets.len());
        let mut out_vals = Vec::with_capacity(triplets.len());
        let mut scratch: Vec<(usize, C64)> = Vec::new();
        for i in 0..nrows {
            scratch.clear();
            scratch.extend(
                cols[counts[i]..order[i]]
                    .iter()
                    .copied()
                    .zip(vals[counts[i]..order[i]].iter().copied()),
            );
            scratch.sort_unstable_by_key(|&(j, _)| j);
            let mut k = 0;
            while k < scratch.len() {
                let (j, mut v) = scratch[k];
                k += 1;
                while k < scratch.len() && scratch[k].0 == j {
                    v += scratch[k].1;
                    k += 1;
                }
                if v != C64::zero() {
                    out_cols.push(j);
                    out_vals.push(v);
                }
            }
            row_ptr[i + 1] = out_cols.len();
        }
        CsrMatrix {
            nrows,
            ncols,
            row_ptr,
            col_idx: out_cols,
            vals: out_vals,
        }
    }

    pub fn identity(n: usize) -> Self {
        let triplets: Vec<_> = (0..n).map(|i| (i, i, C64::new(1.0, 0.0))).collect();
        Self::from_triplets(n, n, &triplets)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        (0..self.nrows).flat_map(move |i| {
            (self.row_ptr[i]..self.row_ptr[i + 1]).map(move |p| (i, self.col_idx[p], self.vals[p]))
        })
    }

    /// y = A x.
    pub fn matvec_into(&self, x: ArrayView1<C64>, y: &mut Array1<C64>) {
        assert_eq!(x.len(), self.ncols);
        assert_eq!(y.len(), self.nrows);
        let xs = x.as_slice().expect("contiguous x");
        let ys = y.as_slice_mut().expect("contiguous y");
        for i in 0..self.nrows {
            let mut acc = C64::zero();
            for p in self.row_ptr[i]..self.row_ptr[i + 1] {
                acc += self.vals[p] * xs[self.col_idx[p]];
            }
            ys[i] = acc;
        }
    }

    pub fn matvec(&self, x: ArrayView1<C64>) -> Array1<C64> {
        let mut y = Array1::zeros(self.nrows);
        self.matvec_into(x, &mut y);
        y
    }

    /// Row-vector application x† A, returned as a column vector.
    pub fn left_matvec(&self, x: ArrayView1<C64>) -> Array1<C64> {
        assert_eq!(x.len(), self.nrows);
        let mut y = Array1::<C64>::zeros(self.ncols);
        for i in 0..self.nrows {
            let xi = x[i].conj();
            if xi == C64::zero() {
                continue;
            }
            for p in self.row_ptr[i]..self.row_ptr[i + 1] {
                y[self.col_idx[p]] += xi * self.vals[p];
            }
        }
        y
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CsrMatrix {
        let triplets: Vec<_> = self.triplets().map(|(i, j, v)| (j, i, v.conj())).collect();
        CsrMatrix::from_triplets(self.ncols, self.nrows, &triplets)
    }

    pub fn transpose(&self) -> CsrMatrix {
        let triplets: Vec<_> = self.triplets().map(|(i, j, v)| (j, i, v)).collect();
        CsrMatrix::from_triplets(self.ncols, self.nrows, &triplets)
    }

    pub fn conj(&self) -> CsrMatrix {
        let mut out = self.clone();
        for v in &mut out.vals {
            *v = v.conj();
        }
        out
    }

    pub fn scale(&self, s: C64) -> CsrMatrix {
        let mut out = self.clone();
        for v in &mut out.vals {
            *v *= s;
        }
        out
    }

    pub fn add(&self, other: &CsrMatrix) -> CsrMatrix {
        assert_eq!(self.nrows, other.nrows);
        assert_eq!(self.ncols, other.ncols);
        let mut triplets: Vec<_> = self.triplets().collect();
        triplets.extend(other.triplets());
        CsrMatrix::from_triplets(self.nrows, self.ncols, &triplets)
    }

    /// Sparse-sparse product, dense row accumulator.
    pub fn matmul(&self, other: &CsrMatrix) -> CsrMatrix {
        assert_eq!(self.ncols, other.nrows);
        let mut acc = vec![C64::zero(); other.ncols];
        let mut marked = vec![usize::MAX; other.ncols];
        let mut triplets = Vec::new();
        for i in 0..self.nrows {
            let mut touched = Vec::new();
            for p in self.row_ptr[i]..self.row_ptr[i + 1] {
                let k = self.col_idx[p];
                let v = self.vals[p];
                for q in other.row_ptr[k]..other.row_ptr[k + 1] {
                    let j = other.col_idx[q];
                    if marked[j] != i {
                        marked[j] = i;
                        acc[j] = C64::zero();
                        touched.push(j);
                    }
                    acc[j] += v * other.vals[q];
                }
            }
            for &j in &touched {
                if acc[j] != C64::zero() {
                    triplets.push((i, j, acc[j]));
                }
            }
        }
        CsrMatrix::from_triplets(self.nrows, other.ncols, &triplets)
    }

    /// Kronecker product self ⊗ other (row index = i_self · nrows_other + i_other).
    pub fn kron(&self, other: &CsrMatrix) -> CsrMatrix {
        let nr = self.nrows * other.nrows;
        let nc = self.ncols * other.ncols;
        let mut triplets = Vec::with_capacity(self.nnz() * other.nnz());
        for (ia, ja, va) in self.triplets() {
            for (ib, jb, vb) in other.triplets() {
                triplets.push((ia * other.nrows + ib, ja * other.ncols + jb, va * vb));
            }
        }
        CsrMatrix::from_triplets(nr, nc, &triplets)
    }

    pub fn to_dense(&self) -> Array2<C64> {
        let mut m = Array2::zeros((self.nrows, self.ncols));
        for (i, j, v) in self.triplets() {
            m[(i, j)] = v;
        }
        m
    }

    pub fn from_dense(m: &Array2<C64>) -> CsrMatrix {
        let triplets: Vec<_> = m
            .indexed_iter()
            .filter(|(_, v)| **v != C64::zero())
            .map(|((i, j), v)| (i, j, *v))
            .collect();
        CsrMatrix::from_triplets(m.nrows(), m.ncols(), &triplets)
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        let mut col_sums = vec![0.0; self.ncols];
        for (_, j, v) in self.triplets() {
            col_sums[j] += v.norm();
        }
        col_sums.iter().cloned().fold(0.0, f64::max)
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.vals.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}
