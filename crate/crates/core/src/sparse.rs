//! Minimal CSR sparse matrix used by the affine count-to-circuit maps.
//!
//! The coefficient matrices here have a few tens of nonzeros per row, and the
//! only operations the models need are sparse-times-dense products, row sums,
//! and row iteration, so a small purpose-built type beats pulling in a full
//! sparse-algebra stack.

use ndarray::{Array1, Array2};
use rayon::prelude::*;

#[derive(Clone, Debug)]
pub struct CsrMatrix {
    nrows: usize,
    ncols: usize,
    indptr: Vec<usize>,
    indices: Vec<u32>,
    values: Vec<f64>,
}

impl CsrMatrix {
    /// Build from (row, col, value) triplets. Duplicate coordinates are summed.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: &[(usize, usize, f64)]) -> Self {
        let mut sorted: Vec<(usize, usize, f64)> = triplets.to_vec();
        sorted.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));

        let mut indptr = vec![0usize; nrows + 1];
        let mut indices = Vec::with_capacity(sorted.len());
        let mut values = Vec::with_capacity(sorted.len());
        for &(r, c, v) in &sorted {
            assert!(r < nrows && c < ncols, "triplet ({r},{c}) out of bounds");
            if indptr[r + 1] > indptr[r]
                && indices.last() == Some(&(c as u32))
                && indptr[r + 1] == indices.len()
            {
                *values.last_mut().unwrap() += v;
            } else {
                indices.push(c as u32);
                values.push(v);
                indptr[r + 1] += 1;
            }
        }
        for r in 0..nrows {
            indptr[r + 1] += indptr[r];
        }
        Self {
            nrows,
            ncols,
            indptr,
            indices,
            values,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            nrows: n,
            ncols: n,
            indptr: (0..=n).collect(),
            indices: (0..n as u32).collect(),
            values: vec![1.0; n],
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Column indices and values of row `i`.
    pub fn row(&self, i: usize) -> (&[u32], &[f64]) {
        let span = self.indptr[i]..self.indptr[i + 1];
        (&self.indices[span.clone()], &self.values[span])
    }

    pub fn row_sums(&self) -> Array1<f64> {
        Array1::from_iter((0..self.nrows).map(|i| self.row(i).1.iter().sum()))
    }

    /// Dense product `self * x`, parallel over output rows. The reduction
    /// order within a row is fixed, so results are thread-count independent.
    pub fn mul_dense(&self, x: &Array2<f64>) -> Array2<f64> {
        assert_eq!(self.ncols, x.nrows());
        let n = x.ncols();
        let mut out = Array2::<f64>::zeros((self.nrows, n));
        let x_slice = x.as_slice().expect("x must be standard layout");
        out.axis_iter_mut(ndarray::Axis(0))
            .into_par_iter()
            .enumerate()
            .for_each(|(i, mut row_out)| {
                let (cols, vals) = self.row(i);
                let dst = row_out.as_slice_mut().unwrap();
                for (&c, &v) in cols.iter().zip(vals) {
                    let src = &x_slice[c as usize * n..c as usize * n + n];
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d += v * s;
                    }
                }
            });
        out
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.ncols, x.len());
        (0..self.nrows)
            .map(|i| {
                let (cols, vals) = self.row(i);
                cols.iter()
                    .zip(vals)
                    .map(|(&c, &v)| v * x[c as usize])
                    .sum()
            })
            .collect()
    }

    /// Dense copy of row `i` over the full column range.
    pub fn dense_row(&self, i: usize) -> Vec<f64> {
        let mut out = vec![0.0; self.ncols];
        let (cols, vals) = self.row(i);
        for (&c, &v) in cols.iter().zip(vals) {
            out[c as usize] = v;
        }
        out
    }

    pub fn to_dense(&self) -> Array2<f64> {
        let mut out = Array2::zeros((self.nrows, self.ncols));
        for i in 0..self.nrows {
            let (cols, vals) = self.row(i);
            for (&c, &v) in cols.iter().zip(vals) {
                out[(i, c as usize)] = v;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn triplets_with_duplicates_sum() {
        let m = CsrMatrix::from_triplets(2, 3, &[(0, 1, 2.0), (0, 1, 3.0), (1, 0, 1.0)]);
        assert_eq!(m.nnz(), 2);
        assert_eq!(m.dense_row(0), vec![0.0, 5.0, 0.0]);
    }

    #[test]
    fn mul_dense_matches_manual() {
        let m = CsrMatrix::from_triplets(2, 2, &[(0, 0, 1.0), (0, 1, 2.0), (1, 1, -1.0)]);
        let x = array![[1.0, 2.0], [3.0, 4.0]];
        let y = m.mul_dense(&x);
        assert_eq!(y, array![[7.0, 10.0], [-3.0, -4.0]]);
    }

    #[test]
    fn identity_roundtrip() {
        let m = CsrMatrix::identity(3);
        let x = array![[1.0, 2.0], [3.0, 4.0], [5.0, 6.0]];
        assert_eq!(m.mul_dense(&x), x);
        assert_eq!(m.row_sums(), array![1.0, 1.0, 1.0]);
    }
}
