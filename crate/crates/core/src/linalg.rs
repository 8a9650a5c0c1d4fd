//! Small dense matrix helpers.
//!
//! Every matrix in this crate is tiny (Gram matrices over a handful of
//! spanning points, peakon reconstruction Jacobians), so plain row-major
//! storage with partial-pivoting elimination is all that is needed.

use crate::C64;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

/// Row-major real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct RMat {
    pub nrows: usize,
    pub ncols: usize,
    data: Vec<f64>,
}

impl RMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RMat { nrows, ncols, data: vec![0.0; nrows * ncols] }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = RMat::zeros(nrows, ncols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols);
            m.data[i * ncols..(i + 1) * ncols].copy_from_slice(r);
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.ncols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &v| m.max(v.abs()))
    }

    /// Numerical rank by Gaussian elimination with full normalization:
    /// pivots below `tol` times the largest entry count as zero.
    pub fn rank(&self, tol: f64) -> usize {
        let scale = self.max_abs();
        if scale == 0.0 {
            return 0;
        }
        let mut a = self.clone();
        let (m, n) = (a.nrows, a.ncols);
        let mut rank = 0;
        let mut col = 0;
        while rank < m && col < n {
            let mut piv = rank;
            for i in rank + 1..m {
                if a.get(i, col).abs() > a.get(piv, col).abs() {
                    piv = i;
                }
            }
            if a.get(piv, col).abs() <= tol * scale {
                col += 1;
                continue;
            }
            if piv != rank {
                for j in 0..n {
                    let t = a.get(rank, j);
                    a.set(rank, j, a.get(piv, j));
                    a.set(piv, j, t);
                }
            }
            for i in rank + 1..m {
                let f = a.get(i, col) / a.get(rank, col);
                for j in col..n {
                    let v = a.get(i, j) - f * a.get(rank, j);
                    a.set(i, j, v);
                }
            }
            rank += 1;
            col += 1;
        }
        rank
    }

    /// Least-squares solve via normal equations; A is (m x n) with m >= n.
    /// `damping` adds Levenberg-Marquardt style lambda*I to A^T A.
    pub fn lsq_solve(&self, rhs: &[f64], damping: f64) -> Option<Vec<f64>> {
        let n = self.ncols;
        let mut ata = RMat::zeros(n, n);
        let mut atb = vec![0.0; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0.0;
                for k in 0..self.nrows {
                    s += self.get(k, i) * self.get(k, j);
                }
                ata.set(i, j, s);
            }
            let mut s = 0.0;
            for k in 0..self.nrows {
                s += self.get(k, i) * rhs[k];
            }
            atb[i] = s;
        }
        for i in 0..n {
            let v = ata.get(i, i) + damping;
            ata.set(i, i, v);
        }
        ata.solve(&atb)
    }

    /// LU solve with partial pivoting for square systems.
    pub fn solve(&self, rhs: &[f64]) -> Option<Vec<f64>> {
        assert_eq!(self.nrows, self.ncols);
        let n = self.nrows;
        let mut a = self.clone();
        let mut b: Vec<f64> = rhs.to_vec();
        for k in 0..n {
            let mut piv = k;
            for i in k + 1..n {
                if a.get(i, k).abs() > a.get(piv, k).abs() {
                    piv = i;
                }
            }
            if a.get(piv, k).abs() == 0.0 {
                return None;
            }
            if piv != k {
                for j in 0..n {
                    let t = a.get(k, j);
                    a.set(k, j, a.get(piv, j));
                    a.set(piv, j, t);
                }
                b.swap(k, piv);
            }
            for i in k + 1..n {
                let f = a.get(i, k) / a.get(k, k);
                a.set(i, k, 0.0);
                for j in k + 1..n {
                    let v = a.get(i, j) - f * a.get(k, j);
                    a.set(i, j, v);
                }
                b[i] -= f * b[k];
            }
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = b[i];
            for j in i + 1..n {
                s -= a.get(i, j) * x[j];
            }
            x[i] = s / a.get(i, i);
        }
        Some(x)
    }

    /// Residual of the best approximation of `v` inside the row span,
    /// relative to |v|. Zero means `v` lies in the span.
    pub fn span_residual(&self, v: &[f64]) -> f64 {
        let vn = v.iter().fold(0.0f64, |s, &x| s + x * x).sqrt();
        if vn == 0.0 {
            return 0.0;
        }
        // Solve min_x |A^T x - v| over combinations x of the rows.
        let at = self.transpose();
        match at.lsq_solve(v, 1e-300) {
            Some(x) => {
                let mut res = 0.0f64;
                for (k, &vk) in v.iter().enumerate() {
                    let mut s = 0.0;
                    for (i, &xi) in x.iter().enumerate() {
                        s += self.get(i, k) * xi;
                    }
                    res += (s - vk) * (s - vk);
                }
                res.sqrt() / vn
            }
            None => 1.0,
        }
    }

    pub fn transpose(&self) -> RMat {
        let mut t = RMat::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Orthonormal basis of the null space of A (as rows), at tolerance
    /// `tol` relative to the largest entry.
    pub fn nullspace(&self, tol: f64) -> Vec<Vec<f64>> {
        let (m, n) = (self.nrows, self.ncols);
        let scale = self.max_abs().max(1e-300);
        let mut a = self.clone();
        // Row echelon with column pivot bookkeeping.
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let mut piv = row;
            for i in row..m {
                if a.get(i, col).abs() > a.get(piv, col).abs() {
                    piv = i;
                }
            }
            if row >= m || a.get(piv, col).abs() <= tol * scale {
                continue;
            }
            if piv != row {
                for j in 0..n {
                    let t = a.get(row, j);
                    a.set(row, j, a.get(piv, j));
                    a.set(piv, j, t);
                }
            }
            let p = a.get(row, col);
            for j in 0..n {
                let v = a.get(row, j) / p;
                a.set(row, j, v);
            }
            for i in 0..m {
                if i != row {
                    let f = a.get(i, col);
                    if f != 0.0 {
                        for j in 0..n {
                            let v = a.get(i, j) - f * a.get(row, j);
                            a.set(i, j, v);
                        }
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![0.0; n];
            v[free] = 1.0;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a.get(r, free);
            }
            let norm = v.iter().fold(0.0f64, |s, &x| s + x * x).sqrt();
            basis.push(v.iter().map(|&x| x / norm).collect());
        }
        basis
    }
}

/// Row-major complex matrix; only the operations the spectral tests need.
#[derive(Debug, Clone)]
pub struct CMat {
    pub nrows: usize,
    pub ncols: usize,
    data: Vec<C64>,
}

impl CMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        CMat { nrows, ncols, data: vec![C64::new(0.0, 0.0); nrows * ncols] }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.ncols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    }

    pub fn matmul(&self, other: &CMat) -> CMat {
        assert_eq!(self.ncols, other.nrows);
        let mut out = CMat::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for j in 0..other.ncols {
                let mut s = C64::new(0.0, 0.0);
                for k in 0..self.ncols {
                    s += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, s);
            }
        }
        out
    }

    /// Solve A X = B for square A by LU with partial pivoting.
    pub fn solve_multi(&self, b: &CMat) -> Option<CMat> {
        assert_eq!(self.nrows, self.ncols);
        assert_eq!(self.nrows, b.nrows);
        let n = self.nrows;
        let mut a = self.clone();
        let mut x = b.clone();
        for k in 0..n {
            let mut piv = k;
            for i in k + 1..n {
                if a.get(i, k).norm() > a.get(piv, k).norm() {
                    piv = i;
                }
            }
            if a.get(piv, k).norm() == 0.0 {
                return None;
            }
            if piv != k {
                for j in 0..n {
                    let t = a.get(k, j);
                    a.set(k, j, a.get(piv, j));
                    a.set(piv, j, t);
                }
                for j in 0..x.ncols {
                    let t = x.get(k, j);
                    x.set(k, j, x.get(piv, j));
                    x.set(piv, j, t);
                }
            }
            for i in k + 1..n {
                let f = a.get(i, k) / a.get(k, k);
                a.set(i, k, C64::new(0.0, 0.0));
                for j in k + 1..n {
                    let v = a.get(i, j) - f * a.get(k, j);
                    a.set(i, j, v);
                }
                for j in 0..x.ncols {
                    let v = x.get(i, j) - f * x.get(k, j);
                    x.set(i, j, v);
                }
            }
        }
        for j in 0..x.ncols {
            for i in (0..n).rev() {
                let mut s = x.get(i, j);
                for k in i + 1..n {
                    s -= a.get(i, k) * x.get(k, j);
                }
                x.set(i, j, s / a.get(i, i));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<CMat> {
        self.solve_multi(&CMat::identity(self.nrows))
    }
}

/// Dimension of the intersection of two row-span subspaces of R^n.
pub fn intersection_dim(a: &RMat, b: &RMat, tol: f64) -> usize {
    if a.nrows == 0 || b.nrows == 0 {
        return 0;
    }
    assert_eq!(a.ncols, b.ncols);
    // rank(A) + rank(B) - rank([A; B]) by the dimension formula.
    let ra = a.rank(tol);
    let rb = b.rank(tol);
    let mut stacked = RMat::zeros(a.nrows + b.nrows, a.ncols);
    for i in 0..a.nrows {
        for j in 0..a.ncols {
            stacked.set(i, j, a.get(i, j));
        }
    }
    for i in 0..b.nrows {
        for j in 0..b.ncols {
            stacked.set(a.nrows + i, j, b.get(i, j));
        }
    }
    (ra + rb).saturating_sub(stacked.rank(tol))
}

/// Basis (rows) of the intersection of two row spans.
pub fn intersection_basis(a: &RMat, b: &RMat, tol: f64) -> RMat {
    if a.nrows == 0 || b.nrows == 0 {
        return RMat::zeros(0, a.ncols.max(b.ncols));
    }
    // Null vectors (x, y) of [A^T | -B^T] give intersection elements A^T x.
    let n = a.ncols;
    let mut sys = RMat::zeros(n, a.nrows + b.nrows);
    for j in 0..n {
        for i in 0..a.nrows {
            sys.set(j, i, a.get(i, j));
        }
        for i in 0..b.nrows {
            sys.set(j, a.nrows + i, -b.get(i, j));
        }
    }
    let null = sys.nullspace(tol);
    let mut rows = Vec::new();
    for v in &null {
        let mut w = vec![0.0; n];
        for (i, wi) in w.iter_mut().enumerate() {
            for k in 0..a.nrows {
                *wi += a.get(k, i) * v[k];
            }
        }
        let norm = w.iter().fold(0.0f64, |s, &x| s + x * x).sqrt();
        if norm > tol {
            rows.push(w.iter().map(|&x| x / norm).collect::<Vec<_>>());
        }
    }
    RMat::from_rows(&rows)
}
