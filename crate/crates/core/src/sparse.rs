//! Sparse operators over the exact-engine bases.
//!
//! Entries are grouped by source state (compressed columns), which makes
//! both state-vector application and row-wise dense products cache
//! friendly: an entry (j → i, a) contributes a·ψ[j] to ψ'[i], and a·ρ[j,·]
//! to (Hρ)[i,·].

use ndarray::Array2;

use crate::basis::{ProductBasis, SectorBasis};
use crate::model::Term;
use crate::C64;

#[derive(Debug, Clone)]
pub struct SparseOp {
    pub dim: usize,
    col_ptr: Vec<u32>,
    row_idx: Vec<u32>,
    vals: Vec<C64>,
}

impl SparseOp {
    fn from_columns(dim: usize, mut cols: Vec<Vec<(u32, C64)>>) -> Self {
        let mut col_ptr = Vec::with_capacity(dim + 1);
        let mut row_idx = Vec::new();
        let mut vals = Vec::new();
        col_ptr.push(0);
        for col in cols.iter_mut() {
            col.sort_unstable_by_key(|&(r, _)| r);
            // merge duplicates
            let mut merged: Vec<(u32, C64)> = Vec::with_capacity(col.len());
            for &(r, a) in col.iter() {
                if let Some(last) = merged.last_mut() {
                    if last.0 == r {
                        last.1 += a;
                        continue;
                    }
                }
                merged.push((r, a));
            }
            for (r, a) in merged {
                if a.norm_sqr() > 0.0 {
                    row_idx.push(r);
                    vals.push(a);
                }
            }
            col_ptr.push(row_idx.len() as u32);
        }
        SparseOp { dim, col_ptr, row_idx, vals }
    }

    pub fn from_terms_product(terms: &[Term], basis: &ProductBasis) -> Self {
        let mut cols = vec![Vec::new(); basis.dim];
        for (j, col) in cols.iter_mut().enumerate() {
            for t in terms {
                if let Some((i, a)) = basis.apply_term(t, j) {
                    col.push((i as u32, a));
                }
            }
        }
        Self::from_columns(basis.dim, cols)
    }

    pub fn from_terms_sector(terms: &[Term], basis: &SectorBasis) -> Self {
        let mut cols = vec![Vec::new(); basis.dim()];
        for (j, col) in cols.iter_mut().enumerate() {
            for t in terms {
                if let Some((i, a)) = basis.apply_term(t, j) {
                    col.push((i as u32, a));
                }
            }
        }
        Self::from_columns(basis.dim(), cols)
    }

    /// Diagonal operator from per-state values.
    pub fn diagonal(values: &[C64]) -> Self {
        let cols = values
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                if v.norm_sqr() > 0.0 {
                    vec![(i as u32, v)]
                } else {
                    vec![]
                }
            })
            .collect();
        Self::from_columns(values.len(), cols)
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    /// y += coeff · (self · x)
    pub fn apply_add(&self, coeff: C64, x: &[C64], y: &mut [C64]) {
        for j in 0..self.dim {
            let xj = x[j];
            if xj.norm_sqr() == 0.0 {
                continue;
            }
            let cx = coeff * xj;
            let lo = self.col_ptr[j] as usize;
            let hi = self.col_ptr[j + 1] as usize;
            for k in lo..hi {
                y[self.row_idx[k] as usize] += self.vals[k] * cx;
            }
        }
    }

    /// out += coeff · (self · ρ), using contiguous row operations.
    pub fn apply_dense_left(&self, coeff: C64, rho: &Array2<C64>, out: &mut Array2<C64>) {
        let n = rho.ncols();
        let rho_flat = rho.as_slice().expect("row-major rho");
        let out_flat = out.as_slice_mut().expect("row-major out");
        for j in 0..self.dim {
            let lo = self.col_ptr[j] as usize;
            let hi = self.col_ptr[j + 1] as usize;
            if lo == hi {
                continue;
            }
            let src = &rho_flat[j * n..(j + 1) * n];
            for k in lo..hi {
                let a = coeff * self.vals[k];
                let i = self.row_idx[k] as usize;
                let dst = &mut out_flat[i * n..(i + 1) * n];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += a * *s;
                }
            }
        }
    }

    /// Dense matrix form (small dims).
    pub fn to_dense(&self) -> Array2<C64> {
        let mut m = Array2::zeros((self.dim, self.dim));
        for j in 0..self.dim {
            let lo = self.col_ptr[j] as usize;
            let hi = self.col_ptr[j + 1] as usize;
            for k in lo..hi {
                m[[self.row_idx[k] as usize, j]] = self.vals[k];
            }
        }
        m
    }

    /// Hermitian conjugate as a separate operator.
    pub fn dagger(&self) -> Self {
        let mut cols = vec![Vec::new(); self.dim];
        for j in 0..self.dim {
            let lo = self.col_ptr[j] as usize;
            let hi = self.col_ptr[j + 1] as usize;
            for k in lo..hi {
                cols[self.row_idx[k] as usize].push((j as u32, self.vals[k].conj()));
            }
        }
        Self::from_columns(self.dim, cols)
    }

    /// ⟨x|self|x⟩ (no normalization).
    pub fn expectation(&self, x: &[C64]) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for j in 0..self.dim {
            let xj = x[j];
            if xj.norm_sqr() == 0.0 {
                continue;
            }
            let lo = self.col_ptr[j] as usize;
            let hi = self.col_ptr[j + 1] as usize;
            for k in lo..hi {
                acc += x[self.row_idx[k] as usize].conj() * self.vals[k] * xj;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::ProductBasis;
    use crate::model::{SiteOp, Term};

    #[test]
    fn hop_is_hermitian_and_matches_dense() {
        let basis = ProductBasis::full(&[2, 2]);
        let terms = vec![
            Term::two(1, SiteOp::Raise, 0, SiteOp::Lower, C64::new(-1.0, 0.0)),
            Term::two(0, SiteOp::Raise, 1, SiteOp::Lower, C64::new(-1.0, 0.0)),
        ];
        let op = SparseOp::from_terms_product(&terms, &basis);
        let d = op.to_dense();
        // |10⟩ = code 2, |01⟩ = code 1 with dims [2,2] (slot 0 is the high digit)
        assert_eq!(d[[1, 2]], C64::new(-1.0, 0.0));
        assert_eq!(d[[2, 1]], C64::new(-1.0, 0.0));
        let dag = op.dagger().to_dense();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d[[i, j]], dag[[i, j]]);
            }
        }
    }

    #[test]
    fn dense_left_matches_matvec() {
        let basis = ProductBasis::full(&[2, 2]);
        let terms = vec![
            Term::two(1, SiteOp::Raise, 0, SiteOp::Lower, C64::new(0.0, -0.7)),
            Term::two(0, SiteOp::Raise, 1, SiteOp::Lower, C64::new(0.0, 0.7)),
            Term::one(0, SiteOp::Num, C64::new(0.3, 0.0)),
        ];
        let op = SparseOp::from_terms_product(&terms, &basis);
        let rho = Array2::from_shape_fn((4, 4), |(i, j)| C64::new(i as f64, j as f64 * 0.5));
        let mut out = Array2::zeros((4, 4));
        op.apply_dense_left(C64::new(1.0, 0.0), &rho, &mut out);
        let expect = op.to_dense().dot(&rho);
        for i in 0..4 {
            for j in 0..4 {
                assert!((out[[i, j]] - expect[[i, j]]).norm() < 1e-12);
            }
        }
    }
}
