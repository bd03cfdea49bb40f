//! Dense complex linear algebra helpers: Hermitian eigendecompositions,
//! SVD, inverses, partial trace/transpose over mixed-radix product spaces.
//!
//! Factorizations are backed by nalgebra; the public interface stays on
//! ndarray containers, which the engines use for states and operators.

use faer::Mat;
use nalgebra::{DMatrix, DVector};
use ndarray::{Array1, Array2};

use crate::{Error, Result, C64};

type Fc64 = faer::c64;

fn to_na(a: &Array2<C64>) -> DMatrix<C64> {
    DMatrix::from_fn(a.nrows(), a.ncols(), |i, j| a[[i, j]])
}

fn from_na(m: &DMatrix<C64>) -> Array2<C64> {
    Array2::from_shape_fn((m.nrows(), m.ncols()), |(i, j)| m[(i, j)])
}

fn to_faer(a: &Array2<C64>) -> Mat<Fc64> {
    Mat::from_fn(a.nrows(), a.ncols(), |i, j| {
        let z = a[[i, j]];
        Fc64::new(z.re, z.im)
    })
}

/// Conjugate transpose.
pub fn dagger(a: &Array2<C64>) -> Array2<C64> {
    let (n, m) = (a.nrows(), a.ncols());
    Array2::from_shape_fn((m, n), |(i, j)| a[[j, i]].conj())
}

/// Kronecker product a ⊗ b.
pub fn kron(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    let (ar, ac) = (a.nrows(), a.ncols());
    let (br, bc) = (b.nrows(), b.ncols());
    let mut out = Array2::zeros((ar * br, ac * bc));
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[[i, j]];
            if aij == C64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[[i * br + k, j * bc + l]] = aij * b[[k, l]];
                }
            }
        }
    }
    out
}

/// Eigendecomposition of a Hermitian matrix. Returns eigenvalues in
/// ascending order and the matching eigenvectors as columns.
pub fn eigh(a: &Array2<C64>) -> (Array1<f64>, Array2<C64>) {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "eigh needs a square matrix");
    let e = to_faer(a)
        .self_adjoint_eigen(faer::Side::Lower)
        .expect("hermitian eigendecomposition");
    let raw_vals: Vec<f64> = (0..n).map(|i| e.S().column_vector()[i].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| raw_vals[i].partial_cmp(&raw_vals[j]).unwrap());
    let vals = Array1::from_iter(order.iter().map(|&i| raw_vals[i]));
    let u = e.U();
    let vecs = Array2::from_shape_fn((n, n), |(i, j)| {
        let z = u[(i, order[j])];
        C64::new(z.re, z.im)
    });
    (vals, vecs)
}

/// Thin SVD: a = u · diag(s) · v†, singular values descending.
pub fn svd(a: &Array2<C64>) -> (Array2<C64>, Array1<f64>, Array2<C64>) {
    let f = to_faer(a).thin_svd().expect("svd");
    let k = f.S().column_vector().nrows();
    let s = Array1::from_iter((0..k).map(|i| f.S().column_vector()[i].re));
    let (fu, fv) = (f.U(), f.V());
    let u = Array2::from_shape_fn((a.nrows(), k), |(i, j)| {
        let z = fu[(i, j)];
        C64::new(z.re, z.im)
    });
    let v = Array2::from_shape_fn((a.ncols(), k), |(i, j)| {
        let z = fv[(i, j)];
        C64::new(z.re, z.im)
    });
    (u, s, v)
}

/// Singular values only.
pub fn singular_values(a: &Array2<C64>) -> Array1<f64> {
    let f = to_faer(a).singular_values().expect("singular values");
    Array1::from_iter(f.into_iter().map(|v| v))
}

/// Inverse of a general complex square matrix via LU with partial pivoting.
pub fn inv(a: &Array2<C64>) -> Result<Array2<C64>> {
    to_na(a)
        .try_inverse()
        .map(|m| from_na(&m))
        .ok_or_else(|| Error::Singular("matrix not invertible".into()))
}

/// Solve a·x = b for a general complex square a.
pub fn solve(a: &Array2<C64>, b: &Array1<C64>) -> Result<Array1<C64>> {
    let lu = to_na(a).lu();
    let rhs = DVector::from_iterator(b.len(), b.iter().copied());
    lu.solve(&rhs)
        .map(|x| Array1::from_iter(x.iter().copied()))
        .ok_or_else(|| Error::Singular("linear solve failed".into()))
}

/// Trace norm ‖a‖ = Tr√(a†a), i.e. the sum of singular values.
pub fn trace_norm(a: &Array2<C64>) -> f64 {
    singular_values(a).sum()
}

/// Trace norm of a Hermitian matrix via the sum of |eigenvalues|.
pub fn trace_norm_hermitian(a: &Array2<C64>) -> f64 {
    let (vals, _) = eigh(a);
    vals.iter().map(|v| v.abs()).sum()
}

/// exp(scale · h) for Hermitian h, via eigendecomposition.
pub fn expm_hermitian(h: &Array2<C64>, scale: C64) -> Array2<C64> {
    let (vals, vecs) = eigh(h);
    let n = h.nrows();
    let mut out = Array2::zeros((n, n));
    for k in 0..n {
        let f = (scale * vals[k]).exp();
        for i in 0..n {
            let vik = vecs[[i, k]];
            for j in 0..n {
                out[[i, j]] += f * vik * vecs[[j, k]].conj();
            }
        }
    }
    out
}

/// Mixed-radix index helper over a product of local dimensions.
#[derive(Debug, Clone)]
pub struct Radix {
    pub dims: Vec<usize>,
    pub strides: Vec<usize>,
    pub total: usize,
}

impl Radix {
    pub fn new(dims: &[usize]) -> Self {
        let mut strides = vec![1usize; dims.len()];
        for s in (0..dims.len().saturating_sub(1)).rev() {
            strides[s] = strides[s + 1] * dims[s + 1];
        }
        let total = dims.iter().product();
        Radix { dims: dims.to_vec(), strides, total }
    }

    #[inline]
    pub fn digit(&self, index: usize, site: usize) -> usize {
        (index / self.strides[site]) % self.dims[site]
    }
}

/// Partial trace of ρ over the complement of `keep` (subsystem indices into
/// `dims`, in ascending order). The result is ordered by `keep`.
pub fn partial_trace(rho: &Array2<C64>, dims: &[usize], keep: &[usize]) -> Array2<C64> {
    let full = Radix::new(dims);
    assert_eq!(rho.nrows(), full.total);
    let keep_dims: Vec<usize> = keep.iter().map(|&s| dims[s]).collect();
    let traced: Vec<usize> = (0..dims.len()).filter(|s| !keep.contains(s)).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&s| dims[s]).collect();
    let rk = Radix::new(&keep_dims);
    let rt = Radix::new(&traced_dims);
    let mut out = Array2::zeros((rk.total, rk.total));
    // Precompute the full-space offset of each kept / traced sub-index.
    let mut keep_offsets = vec![0usize; rk.total];
    for (ik, off) in keep_offsets.iter_mut().enumerate() {
        *off = keep
            .iter()
            .enumerate()
            .map(|(pos, &s)| rk.digit(ik, pos) * full.strides[s])
            .sum();
    }
    let mut traced_offsets = vec![0usize; rt.total];
    for (it, off) in traced_offsets.iter_mut().enumerate() {
        *off = traced
            .iter()
            .enumerate()
            .map(|(pos, &s)| rt.digit(it, pos) * full.strides[s])
            .sum();
    }
    for (ik, &ioff) in keep_offsets.iter().enumerate() {
        for (jk, &joff) in keep_offsets.iter().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for &toff in &traced_offsets {
                acc += rho[[ioff + toff, joff + toff]];
            }
            out[[ik, jk]] = acc;
        }
    }
    out
}

/// Partial transpose over the subsystems listed in `transposed`.
pub fn partial_transpose(rho: &Array2<C64>, dims: &[usize], transposed: &[usize]) -> Array2<C64> {
    let full = Radix::new(dims);
    assert_eq!(rho.nrows(), full.total);
    let mut out = Array2::zeros(rho.raw_dim());
    for i in 0..full.total {
        for j in 0..full.total {
            let (mut ip, mut jp) = (i, j);
            for &s in transposed {
                let di = full.digit(i, s);
                let dj = full.digit(j, s);
                ip = ip + (dj as isize - di as isize) as usize * full.strides[s];
                jp = (jp as isize + (di as isize - dj as isize) * full.strides[s] as isize) as usize;
            }
            out[[ip, jp]] = rho[[i, j]];
        }
    }
    out
}

/// Von Neumann entropy −Tr ρ log₂ ρ of a Hermitian positive ρ.
pub fn vn_entropy(rho: &Array2<C64>) -> f64 {
    let (vals, _) = eigh(rho);
    vals.iter()
        .filter(|&&p| p > 1e-14)
        .map(|&p| -p * p.log2())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn eigh_matches_known_pauli_y() {
        let m = ndarray::array![[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]];
        let (vals, vecs) = eigh(&m);
        assert_abs_diff_eq!(vals[0], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(vals[1], 1.0, epsilon = 1e-12);
        // residual ‖Mv − λv‖
        for k in 0..2 {
            for i in 0..2 {
                let mv: C64 = (0..2).map(|j| m[[i, j]] * vecs[[j, k]]).sum();
                assert_abs_diff_eq!((mv - vals[k] * vecs[[i, k]]).norm(), 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn svd_reconstructs() {
        let a = ndarray::array![
            [c(1.0, 0.5), c(0.0, -1.0), c(2.0, 0.0)],
            [c(0.0, 1.0), c(3.0, 0.0), c(0.5, 0.5)]
        ];
        let (u, s, v) = svd(&a);
        let mut rec: Array2<C64> = Array2::zeros((2, 3));
        for k in 0..s.len() {
            for i in 0..2 {
                for j in 0..3 {
                    rec[[i, j]] += u[[i, k]] * s[k] * v[[j, k]].conj();
                }
            }
        }
        for i in 0..2 {
            for j in 0..3 {
                assert_abs_diff_eq!((rec[[i, j]] - a[[i, j]]).norm(), 0.0, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn partial_trace_bell_state() {
        // |Φ+⟩⟨Φ+| over 2 qubits traces to I/2 on either side.
        let mut rho = Array2::zeros((4, 4));
        for &i in &[0usize, 3] {
            for &j in &[0usize, 3] {
                rho[[i, j]] = c(0.5, 0.0);
            }
        }
        for keep in [&[0usize][..], &[1usize][..]] {
            let r = partial_trace(&rho, &[2, 2], keep);
            assert_abs_diff_eq!((r[[0, 0]] - c(0.5, 0.0)).norm(), 0.0, epsilon = 1e-14);
            assert_abs_diff_eq!((r[[1, 1]] - c(0.5, 0.0)).norm(), 0.0, epsilon = 1e-14);
            assert_abs_diff_eq!(r[[0, 1]].norm(), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a = ndarray::array![
            [c(1.0, 1.0), c(2.0, 0.0)],
            [c(0.0, -1.0), c(1.0, 0.5)]
        ];
        let ai = inv(&a).unwrap();
        let id = a.dot(&ai);
        assert_abs_diff_eq!((id[[0, 0]] - c(1.0, 0.0)).norm(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(id[[0, 1]].norm(), 0.0, epsilon = 1e-12);
    }
}
