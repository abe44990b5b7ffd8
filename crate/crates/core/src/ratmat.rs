//! Dense exact rational matrices.
//!
//! Rank, nullspace, solve and inverse by Gauss-Jordan elimination over
//! `BigRational`. Cohomology dimensions are integers, so rank decisions must
//! never depend on a float threshold; everything here is exact.

use crate::scalar::Rational;
use num::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> RatMat {
        RatMat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> RatMat {
        let mut m = RatMat::zeros(dim, dim);
        for i in 0..dim {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> RatMat {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> RatMat {
        RatMat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&k| crate::scalar::rat_i64(k)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> RatMat {
        let mut out = RatMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn neg(&self) -> RatMat {
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = RatMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).clone() + a.clone() * b.clone();
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.rows, other.rows, "dimension mismatch");
        let mut out = RatMat::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn from_columns(rows: usize, cols: &[Vec<Rational>]) -> RatMat {
        let mut out = RatMat::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                out.set(i, j, v.clone());
            }
        }
        out
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            // Partial pivoting by largest absolute value keeps the numerators
            // from ballooning on structured instances.
            let mut best: Option<usize> = None;
            for r in row..m.rows {
                if !m.get(r, col).is_zero() {
                    match best {
                        None => best = Some(r),
                        Some(b) => {
                            if m.get(r, col).abs() > m.get(b, col).abs() {
                                best = Some(r);
                            }
                        }
                    }
                }
            }
            let Some(piv) = best else { continue };
            if piv != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(piv, c).clone();
                    m.set(row, c, b);
                    m.set(piv, c, a);
                }
            }
            let inv = Rational::one() / m.get(row, col).clone();
            for c in col..m.cols {
                let v = m.get(row, c).clone() * inv.clone();
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c).clone() - factor.clone() * m.get(row, c).clone();
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace, one column per free variable.
    pub fn nullspace(&self) -> RatMat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = RatMat::zeros(self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            out.set(fc, j, Rational::one());
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(pc, j, -r.get(i, fc).clone());
            }
        }
        out
    }

    /// Solves `self * x = b` for a single right-hand side, if consistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        let rhs = RatMat::from_columns(self.rows, &[b.to_vec()]);
        let aug = self.hstack(&rhs);
        let (r, pivots) = aug.rref();
        // Inconsistent if a pivot lands in the augmented column.
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<RatMat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let aug = self.hstack(&RatMat::identity(self.rows));
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        let mut out = RatMat::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in 0..self.rows {
                out.set(i, j, r.get(i, self.cols + j).clone());
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_i64;

    #[test]
    fn rref_rank_nullspace() {
        let m = RatMat::from_i64_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.cols(), 1);
        // verify m * ns = 0
        assert!(m.mul(&ns).is_zero());
    }

    #[test]
    fn solve_and_inverse() {
        let m = RatMat::from_i64_rows(&[vec![0, 1], vec![-1, 0]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMat::identity(2));
        let x = m.solve(&[rat_i64(3), rat_i64(5)]).unwrap();
        assert_eq!(x, vec![rat_i64(-5), rat_i64(3)]);
        // inconsistent system
        let s = RatMat::from_i64_rows(&[vec![1, 1], vec![1, 1]]);
        assert!(s.solve(&[rat_i64(0), rat_i64(1)]).is_none());
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = RatMat::from_i64_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(m.inverse().is_none());
    }
}
