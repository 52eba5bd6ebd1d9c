//! Dense exact linear algebra over the Gaussian rationals: rank, kernel
//! bases, and Gram-twisted adjoints. Everything is deterministic: pivots are
//! always the first nonzero entry in column order, and kernel bases are
//! normalized so the first nonzero entry of each column is 1.

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("gram matrix must be diagonal with positive real entries")]
    BadGram,
}

/// Dense rectangular matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// A basis of an exact null space. Columns are linearly independent, each is
/// annihilated by the defining matrix, and each is normalized so its first
/// nonzero entry is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelBasis {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Scalar>>,
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for k in 0..n {
            *m.at_mut(k, k) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn diag(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let mut m = Mat::zeros(n, n);
        for (k, e) in entries.into_iter().enumerate() {
            *m.at_mut(k, k) = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn set_col(&mut self, c: usize, col: &[Scalar]) {
        assert_eq!(col.len(), self.rows);
        for (r, v) in col.iter().enumerate() {
            *self.at_mut(r, c) = v.clone();
        }
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn checked_mul(&self, rhs: &Mat) -> Result<Mat, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    *out.at_mut(r, c) = out.at(r, c) + &t;
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        self.checked_mul(rhs).expect("matrix dimensions")
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Scalar::zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] = &out[r] + &(a * &v[c]);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix add shape"
        );
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + rhs.at(r, c))
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix sub shape"
        );
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - rhs.at(r, c))
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| -self.at(r, c))
    }

    /// Conjugate transpose; involutive.
    pub fn conj_transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    /// Entrywise conjugate.
    pub fn conj(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c).conj())
    }

    /// Stack matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&Mat]) -> Mat {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        assert!(
            blocks.iter().all(|b| b.cols == cols),
            "vstack column mismatch"
        );
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend(b.data.iter().cloned());
        }
        Mat { rows, cols, data }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// Pivoting is the first nonzero entry in column order, so the result is
    /// deterministic.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let piv = (row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let Some(piv) = piv else { continue };
            if piv != row {
                for c in 0..self.cols {
                    self.data.swap(row * self.cols + c, piv * self.cols + c);
                }
            }
            let inv = self.at(row, col).recip();
            for c in col..self.cols {
                *self.at_mut(row, c) = self.at(row, c) * &inv;
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let f = self.at(r, col).clone();
                    for c in col..self.cols {
                        let t = &f * self.at(row, c);
                        *self.at_mut(r, c) = self.at(r, c) - &t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Deterministic basis of the exact null space, dimension = cols - rank.
    pub fn kernel_basis(&self) -> KernelBasis {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().copied().peekable();
        let mut free_cols = Vec::new();
        for c in 0..self.cols {
            if piv_iter.peek() == Some(&c) {
                piv_iter.next();
            } else {
                free_cols.push(c);
            }
        }
        for &f in &free_cols {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(i, f);
            }
            if let Some(first) = v.iter().find(|s| !s.is_zero()) {
                let inv = first.recip();
                for s in v.iter_mut() {
                    *s = &*s * &inv;
                }
            }
            basis.push(v);
        }
        KernelBasis {
            ambient_dim: self.cols,
            basis,
        }
    }

    /// Matrix of the metric adjoint `g_src⁻¹ · m† · g_dst` with respect to
    /// diagonal positive-definite Gram matrices of the source and destination
    /// bases. Satisfies `⟨m·x, y⟩_dst = ⟨x, adjoint·y⟩_src`.
    pub fn gram_adjoint(&self, g_src: &Mat, g_dst: &Mat) -> Result<Mat, LinalgError> {
        check_gram(g_src, self.cols)?;
        check_gram(g_dst, self.rows)?;
        let mut out = Mat::zeros(self.cols, self.rows);
        for r in 0..self.cols {
            let gs_inv = g_src.at(r, r).recip();
            for c in 0..self.rows {
                let v = &(&gs_inv * &self.at(c, r).conj()) * g_dst.at(c, c);
                *out.at_mut(r, c) = v;
            }
        }
        Ok(out)
    }
}

fn check_gram(g: &Mat, dim: usize) -> Result<(), LinalgError> {
    use num_traits::Signed;
    if g.rows() != dim || g.cols() != dim {
        return Err(LinalgError::DimMismatch(format!(
            "gram is {}x{}, expected {}x{}",
            g.rows(),
            g.cols(),
            dim,
            dim
        )));
    }
    for r in 0..dim {
        for c in 0..dim {
            let e = g.at(r, c);
            if r == c {
                if !e.is_real() || !e.re.is_positive() {
                    return Err(LinalgError::BadGram);
                }
            } else if !e.is_zero() {
                return Err(LinalgError::BadGram);
            }
        }
    }
    Ok(())
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(k: i64) -> Scalar {
        Scalar::from_int(k)
    }

    #[test]
    fn mul_identity_and_zero() {
        let m = Mat::from_rows(vec![vec![s(1), Scalar::i()], vec![s(3), s(-2)]]);
        assert_eq!(Mat::identity(2).mul(&m), m);
        assert!(Mat::zeros(2, 2).mul(&m).is_zero());
        // [[i]]·[[i]] = [[-1]]
        let i1 = Mat::from_rows(vec![vec![Scalar::i()]]);
        assert_eq!(i1.mul(&i1), Mat::from_rows(vec![vec![s(-1)]]));
    }

    #[test]
    fn mul_dim_mismatch_rejected() {
        let a = Mat::zeros(2, 3);
        let b = Mat::zeros(2, 3);
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn conj_transpose_examples() {
        let i1 = Mat::from_rows(vec![vec![Scalar::i()]]);
        assert_eq!(
            i1.conj_transpose(),
            Mat::from_rows(vec![vec![-Scalar::i()]])
        );
        let sym = Mat::from_rows(vec![vec![s(1), s(2)], vec![s(2), s(5)]]);
        assert_eq!(sym.conj_transpose(), sym);
        // involutive and reverses products
        let a = Mat::from_rows(vec![
            vec![s(1), Scalar::i(), s(0)],
            vec![s(2), s(-1), Scalar::i()],
            vec![s(0), s(3), s(1)],
        ]);
        let b = Mat::from_rows(vec![
            vec![s(2), s(0), s(1)],
            vec![Scalar::i(), s(1), s(0)],
            vec![s(1), s(-2), Scalar::i()],
        ]);
        assert_eq!(a.conj_transpose().conj_transpose(), a);
        assert_eq!(
            a.mul(&b).conj_transpose(),
            b.conj_transpose().mul(&a.conj_transpose())
        );
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(Mat::identity(3).kernel_basis().dim(), 0);
        let k = Mat::zeros(2, 4).kernel_basis();
        assert_eq!(k.dim(), 4);
        assert_eq!(k.basis[0], vec![s(1), s(0), s(0), s(0)]);
    }

    #[test]
    fn kernel_one_by_two() {
        // [1, i] -> c·(-i, 1); normalized so the first entry is 1: (1, i)
        let m = Mat::from_rows(vec![vec![s(1), Scalar::i()]]);
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis[0], vec![s(1), Scalar::i()]);
        // annihilated by m
        assert!(m.mul_vec(&k.basis[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn rank_nullity() {
        let m = Mat::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(0), s(1), s(1)],
        ]);
        assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
    }

    #[test]
    fn gram_adjoint_examples() {
        // orthonormal grams reduce to the conjugate transpose
        let m = Mat::from_rows(vec![vec![s(1), Scalar::i()], vec![s(0), s(2)]]);
        let g2 = Mat::identity(2);
        assert_eq!(m.gram_adjoint(&g2, &g2).unwrap(), m.conj_transpose());
        // m = [[1]], g_src = [[2]], g_dst = [[4]] -> [[2]]
        let m1 = Mat::from_rows(vec![vec![s(1)]]);
        let gs = Mat::from_rows(vec![vec![s(2)]]);
        let gd = Mat::from_rows(vec![vec![s(4)]]);
        assert_eq!(
            m1.gram_adjoint(&gs, &gd).unwrap(),
            Mat::from_rows(vec![vec![s(2)]])
        );
        // double application returns the original (grams swapped)
        let m23 = Mat::from_rows(vec![
            vec![s(1), Scalar::i(), s(-2)],
            vec![s(0), s(3), Scalar::i()],
        ]);
        let g3 = Mat::diag(vec![s(2), s(1), s(4)]);
        let gd2 = Mat::diag(vec![s(8), s(2)]);
        let adj = m23.gram_adjoint(&g3, &gd2).unwrap();
        assert_eq!(adj.gram_adjoint(&gd2, &g3).unwrap(), m23);
        // non-invertible gram rejected
        let bad = Mat::diag(vec![s(1), s(0), s(4)]);
        assert!(m23.gram_adjoint(&bad, &gd2).is_err());
    }

    #[test]
    fn gram_adjoint_inner_product_contract() {
        // ⟨m·x, y⟩_dst = ⟨x, adjoint·y⟩_src with ⟨u, v⟩ = Σ g_k u_k conj(v_k)
        let m = Mat::from_rows(vec![
            vec![s(1), Scalar::i(), s(2)],
            vec![s(-1), s(0), Scalar::i()],
        ]);
        let g_src = Mat::diag(vec![s(2), s(2), s(4)]);
        let g_dst = Mat::diag(vec![s(1), s(8)]);
        let adj = m.gram_adjoint(&g_src, &g_dst).unwrap();
        let x = vec![s(1), s(2), -Scalar::i()];
        let y = vec![Scalar::i(), s(3)];
        let inner = |g: &Mat, u: &[Scalar], v: &[Scalar]| {
            let mut acc = Scalar::zero();
            for k in 0..u.len() {
                acc = &acc + &(&(&u[k] * &v[k].conj()) * g.at(k, k));
            }
            acc
        };
        let lhs = inner(&g_dst, &m.mul_vec(&x), &y);
        let rhs = inner(&g_src, &x, &adj.mul_vec(&y));
        assert_eq!(lhs, rhs);
    }
}
