//! Exact dense linear algebra over a generic field-like scalar.
//!
//! Everything downstream instantiates [`Mat`] at [`crate::Rat`], so all
//! computations are exact; the scalar is kept generic so the kernel itself is
//! independent of the concrete number type.

use crate::error::{Error, Result};
use std::fmt;

/// Field-like scalar: exact division is assumed wherever `Div` is used.
pub trait Scalar:
    Clone + PartialEq + num_traits::Num + num_traits::Signed + fmt::Debug + fmt::Display
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + num_traits::Num + num_traits::Signed + fmt::Debug + fmt::Display
{
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Mat { rows: n, cols: m, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<T> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.at(r, c).clone() + a.clone() * other.at(k, c).clone();
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![T::zero(); self.rows];
        for r in 0..self.rows {
            let mut acc = T::zero();
            for c in 0..self.cols {
                if !self.at(r, c).is_zero() && !v[c].is_zero() {
                    acc = acc + self.at(r, c).clone() * v[c].clone();
                }
            }
            out[r] = acc;
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("add".into()));
        }
        Ok(Mat::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() + other.at(r, c).clone()
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("sub".into()));
        }
        Ok(Mat::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() - other.at(r, c).clone()
        }))
    }

    pub fn scale(&self, s: &T) -> Self {
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c).clone() * s.clone())
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack".into()));
        }
        Ok(Mat::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack".into()));
        }
        Ok(Mat::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.at(r, c).clone()
            } else {
                other.at(r - self.rows, c).clone()
            }
        }))
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = T::one() / m.at(row, col).clone();
            for c in col..m.cols {
                let v = m.at(row, c).clone() * inv.clone();
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(r, c).clone() - factor.clone() * m.at(row, c).clone();
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{ x : A x = 0 }`.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut x = vec![T::zero(); self.cols];
            x[free] = T::one();
            for (col, &pv) in pivot_set.iter().enumerate() {
                if let Some(prow) = pv {
                    x[col] = -r.at(prow, free).clone();
                }
            }
            basis.push(x);
        }
        basis
    }

    /// A particular solution of `A x = b`.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("solve: rhs length".into()));
        }
        let rhs = Mat::from_fn(self.rows, 1, |r, _| b[r].clone());
        let aug = self.hstack(&rhs)?;
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(Error::InconsistentSystem);
        }
        let mut x = vec![T::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r.at(prow, self.cols).clone();
        }
        Ok(x)
    }

    /// Basis of the column space, returned as columns.
    pub fn image_basis(&self) -> Vec<Vec<T>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.col(c)).collect()
    }

    /// Determinant via fraction-full Gaussian elimination.
    pub fn det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("det of non-square".into()));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(T::zero());
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det = det * pivot.clone();
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone() / pivot.clone();
                for c in col..n {
                    let v = m.at(r, c).clone() - factor.clone() * m.at(col, c).clone();
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Determinants of the k-by-k leading principal blocks, k = 1..=n.
    pub fn leading_principal_minors(&self) -> Result<Vec<T>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("minors of non-square".into()));
        }
        for r in 0..self.rows {
            for c in 0..r {
                if self.at(r, c) != self.at(c, r) {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        (1..=self.rows)
            .map(|k| Mat::from_fn(k, k, |r, c| self.at(r, c).clone()).det())
            .collect()
    }
}

/// Row-space subspace helpers. A subspace of `k^n` is given by a matrix whose
/// rows span it.
pub fn subspace_sum<T: Scalar>(a: &Mat<T>, b: &Mat<T>) -> Result<Mat<T>> {
    let stacked = a.vstack(b)?;
    let (r, pivots) = stacked.rref();
    Ok(Mat::from_fn(pivots.len(), a.cols(), |i, c| r.at(i, c).clone()))
}

pub fn subspace_intersection<T: Scalar>(a: &Mat<T>, b: &Mat<T>) -> Result<Mat<T>> {
    if a.cols() != b.cols() {
        return Err(Error::DimensionMismatch("subspace_intersection".into()));
    }
    // x = u^T A = w^T B; solve for (u, w) in the kernel of [A^T | -B^T].
    let stacked = a.transpose().hstack(&b.transpose().scale(&-T::one()))?;
    let kernel = stacked.kernel_basis();
    let mut rows = Vec::new();
    for k in kernel {
        let u = &k[..a.rows()];
        let mut x = vec![T::zero(); a.cols()];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (xj, aij) in x.iter_mut().zip(a.row(i)) {
                *xj = xj.clone() + ui.clone() * aij;
            }
        }
        rows.push(x);
    }
    if rows.is_empty() {
        return Ok(Mat::zeros(0, a.cols()));
    }
    let (r, pivots) = Mat::from_rows(rows).rref();
    Ok(Mat::from_fn(pivots.len(), a.cols(), |i, c| r.at(i, c).clone()))
}

/// Rows of `v` whose classes complete a basis of `w` to one of `v`; requires
/// `w` to be contained in the row space of `v`.
pub fn quotient_representatives<T: Scalar>(v: &Mat<T>, w: &Mat<T>) -> Result<Vec<Vec<T>>> {
    if v.cols() != w.cols() {
        return Err(Error::DimensionMismatch("quotient_representatives".into()));
    }
    let mut reps = Vec::new();
    let mut current = w.clone();
    let mut rank = current.rank();
    for i in 0..v.rows() {
        let cand = Mat::from_rows(vec![v.row(i)]);
        let bigger = current.vstack(&cand)?;
        let r = bigger.rank();
        if r > rank {
            rank = r;
            reps.push(v.row(i));
            current = bigger;
        }
    }
    Ok(reps)
}

/// Membership of a vector in a row space.
pub fn in_row_space<T: Scalar>(space: &Mat<T>, v: &[T]) -> bool {
    if space.rows() == 0 {
        return v.iter().all(|x| x.is_zero());
    }
    let cand = Mat::from_rows(vec![v.to_vec()]);
    let stacked = space.vstack(&cand).expect("column mismatch");
    stacked.rank() == space.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Rat, RatMatrix};
    use num_traits::Zero;

    fn m(rows: Vec<Vec<i64>>) -> RatMatrix {
        Mat::from_rows(
            rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect(),
        )
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(vec![vec![1, 1], vec![1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        // span{(1, -1)} up to scale
        assert_eq!(k[0][0].clone() + k[0][1].clone(), rat(0));
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn rank_of_identity() {
        assert_eq!(RatMatrix::identity(5).rank(), 5);
    }

    #[test]
    fn solve_is_exact() {
        let a = m(vec![vec![2]]);
        let x = a.solve(&[rat(3)]).unwrap();
        assert_eq!(x[0], Rat::new(3.into(), 2.into()));
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(a.solve(&[rat(0), rat(1)]), Err(Error::InconsistentSystem));
    }

    #[test]
    fn minors() {
        assert_eq!(
            m(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
                .leading_principal_minors()
                .unwrap(),
            vec![rat(1), rat(1), rat(1)]
        );
        assert_eq!(
            m(vec![vec![2, -1], vec![-1, 2]]).leading_principal_minors().unwrap(),
            vec![rat(2), rat(3)]
        );
        // symmetrized quasi-Cartan of the 3-cycle
        assert_eq!(
            m(vec![vec![2, -1, 1], vec![-1, 2, -1], vec![1, -1, 2]])
                .leading_principal_minors()
                .unwrap(),
            vec![rat(2), rat(3), rat(4)]
        );
    }

    #[test]
    fn minors_reject_asymmetric() {
        assert_eq!(
            m(vec![vec![1, 2], vec![3, 4]]).leading_principal_minors(),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn rank_nullity_and_exactness() {
        let a = m(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        let k = a.kernel_basis();
        assert_eq!(a.rank() + k.len(), a.cols());
        for v in &k {
            assert!(a.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
        let b = vec![rat(6), rat(15), rat(24)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn subspaces() {
        let u = m(vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let w = m(vec![vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(subspace_sum(&u, &w).unwrap().rows(), 3);
        let i = subspace_intersection(&u, &w).unwrap();
        assert_eq!(i.rows(), 1);
        assert!(i.at(0, 0).is_zero());
        assert!(i.at(0, 2).is_zero());
        assert!(!i.at(0, 1).is_zero());
        let reps = quotient_representatives(&u, &m(vec![vec![1, 0, 0]])).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0], vec![rat(0), rat(1), rat(0)]);
    }
}
