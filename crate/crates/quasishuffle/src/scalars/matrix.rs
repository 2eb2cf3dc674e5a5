//! Dense matrices over Q with exact Gaussian elimination (full pivoting).

use super::{rat_bits, Rat};
use crate::error::{Error, Result};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>, // row-major
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::from_integer(1.into()));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * other.get(k, j);
                    let cur = out.get(i, j) + t;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant via elimination with full pivoting.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::from_integer(1.into());
        for k in 0..n {
            match m.pivot_search(k, n) {
                None => return Ok(Rat::zero()),
                Some((pi, pj)) => {
                    if pi != k {
                        m.swap_rows(k, pi);
                        det = -det;
                    }
                    if pj != k {
                        m.swap_cols(k, pj);
                        det = -det;
                    }
                }
            }
            let pivot = m.get(k, k).clone();
            det *= &pivot;
            for i in k + 1..n {
                let factor = m.get(i, k) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let t = &factor * m.get(k, j);
                    let cur = m.get(i, j) - t;
                    m.set(i, j, cur);
                }
            }
        }
        Ok(det)
    }

    /// Exact solution of `self * x = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &[Rat]) -> Result<Vec<Rat>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        assert_eq!(rhs.len(), n, "rhs length must match matrix size");
        let mut m = self.clone();
        let mut b: Vec<Rat> = rhs.to_vec();
        // col_of[k]: which original unknown sits in eliminated column k
        let mut col_of: Vec<usize> = (0..n).collect();
        for k in 0..n {
            match m.pivot_search(k, n) {
                None => return Err(Error::SingularMatrix),
                Some((pi, pj)) => {
                    if pi != k {
                        m.swap_rows(k, pi);
                        b.swap(k, pi);
                    }
                    if pj != k {
                        m.swap_cols(k, pj);
                        col_of.swap(k, pj);
                    }
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                let factor = m.get(i, k) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let t = &factor * m.get(k, j);
                    let cur = m.get(i, j) - t;
                    m.set(i, j, cur);
                }
                let t = &factor * &b[k];
                let updated = &b[i] - t;
                b[i] = updated;
            }
        }
        // back substitution
        let mut y = vec![Rat::zero(); n];
        for k in (0..n).rev() {
            let mut acc = b[k].clone();
            for j in k + 1..n {
                acc -= m.get(k, j) * &y[j];
            }
            y[k] = acc / m.get(k, k);
        }
        let mut x = vec![Rat::zero(); n];
        for k in 0..n {
            x[col_of[k]] = y[k].clone();
        }
        Ok(x)
    }

    /// Exact rank (works for rectangular matrices).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let steps = self.rows.min(self.cols);
        let mut rank = 0;
        for k in 0..steps {
            match m.pivot_search(k, usize::MAX) {
                None => break,
                Some((pi, pj)) => {
                    if pi != k {
                        m.swap_rows(k, pi);
                    }
                    if pj != k {
                        m.swap_cols(k, pj);
                    }
                }
            }
            rank += 1;
            let pivot = m.get(k, k).clone();
            for i in k + 1..m.rows {
                let factor = m.get(i, k) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in k..m.cols {
                    let t = &factor * m.get(k, j);
                    let cur = m.get(i, j) - t;
                    m.set(i, j, cur);
                }
            }
        }
        rank
    }

    /// Nonzero pivot with the smallest bit size in the trailing submatrix,
    /// searching rows/cols `k..` (rows capped at `row_limit`).
    fn pivot_search(&self, k: usize, row_limit: usize) -> Option<(usize, usize)> {
        let rmax = self.rows.min(row_limit);
        let mut best: Option<(u64, usize, usize)> = None;
        for i in k..rmax {
            for j in k..self.cols {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let sz = rat_bits(e);
                match best {
                    Some((bsz, _, _)) if bsz <= sz => {}
                    _ => best = Some((sz, i, j)),
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_det() {
        assert_eq!(RatMatrix::identity(3).det().unwrap(), rat_int(1));
    }

    #[test]
    fn two_by_two_det() {
        assert_eq!(m(&[&[1, 2], &[2, 1]]).det().unwrap(), rat_int(-3));
    }

    #[test]
    fn repeated_row_is_singular() {
        assert_eq!(
            m(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]).det().unwrap(),
            rat_int(0)
        );
    }

    #[test]
    fn non_square_det_rejected() {
        assert!(matches!(
            m(&[&[1, 2, 3], &[4, 5, 6]]).det(),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn solve_identity() {
        let rhs = vec![rat(2, 3), rat_int(5)];
        assert_eq!(RatMatrix::identity(2).solve(&rhs).unwrap(), rhs);
    }

    #[test]
    fn solve_upper_triangular() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let x = a.solve(&[rat_int(2), rat_int(1)]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(1)]);
    }

    #[test]
    fn solve_singular_rejected() {
        let a = m(&[&[0, 0], &[0, 0]]);
        assert!(matches!(
            a.solve(&[rat_int(1), rat_int(0)]),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn det_is_multiplicative() {
        let a = m(&[&[2, 1, 0], &[1, -3, 4], &[0, 5, 1]]);
        let b = m(&[&[1, 0, 2], &[3, 1, 1], &[-2, 0, 1]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn rank_of_rectangular() {
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
        assert_eq!(m(&[&[1, 0, 0], &[0, 0, 1]]).rank(), 2);
        assert_eq!(RatMatrix::zero(3, 2).rank(), 0);
    }

    #[test]
    fn solve_recovers_product() {
        let a = m(&[&[3, 1, 2], &[1, 4, 0], &[2, 2, 5]]);
        let x = vec![rat(1, 2), rat_int(-2), rat(7, 3)];
        let mut rhs = vec![rat_int(0); 3];
        for i in 0..3 {
            for j in 0..3 {
                rhs[i] = &rhs[i] + a.get(i, j) * &x[j];
            }
        }
        assert_eq!(a.solve(&rhs).unwrap(), x);
    }
}
