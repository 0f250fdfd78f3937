//! Exact determinants via fraction-free Bareiss elimination on an integer
//! lift. All the bracket-number matrices are integral, so the lift is free in
//! practice; rational entries are cleared row by row.

use crate::exact::{Int, Rat};
use num::{Integer, One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>, // row-major
}

impl Mat {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Mat { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant requires a square matrix");
        let mut denom = Int::one();
        let lifted: Vec<Vec<Int>> = (0..self.rows)
            .map(|i| {
                let row_lcm = (0..self.cols)
                    .fold(Int::one(), |acc, j| acc.lcm(self.at(i, j).denom()));
                let row = (0..self.cols)
                    .map(|j| {
                        let e = self.at(i, j);
                        e.numer() * (&row_lcm / e.denom())
                    })
                    .collect();
                denom *= row_lcm;
                row
            })
            .collect();
        Rat::new(determinant_int(lifted), denom)
    }
}

/// Fraction-free Bareiss determinant. Consumes its input; the divisions are
/// exact by Sylvester's identity, also across row swaps.
pub fn determinant_int(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "determinant requires a square matrix");
    if n == 0 {
        return Int::one();
    }
    let mut sign_flip = false;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign_flip {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, int, rat};
    use proptest::prelude::*;

    fn int_mat(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    /// Naive cofactor expansion along the first row; the independent check.
    fn cofactor_det(m: &[Vec<Rat>]) -> Rat {
        let n = m.len();
        if n == 0 {
            return Rat::one();
        }
        let mut acc = Rat::zero();
        for (j, a) in m[0].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rat>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect()
                })
                .collect();
            let term = a * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn pinned_determinants() {
        let eye = Mat::from_fn(3, 3, |i, j| if i == j { rat(1, 1) } else { rat(0, 1) });
        assert_eq!(eye.determinant(), rat(1, 1));
        let m = Mat::from_rows(vec![vec![rat(1, 1), rat(2, 1)], vec![rat(3, 1), rat(4, 1)]]);
        assert_eq!(m.determinant(), rat(-2, 1));
        // [[C(2,1),C(2,2)],[C(2,0),C(2,1)]] = [[2,1],[1,2]]
        let b = Mat::from_fn(2, 2, |i, j| {
            crate::exact::to_rat(&binomial(2, 1 + j as i64 - i as i64))
        });
        assert_eq!(b.determinant(), rat(3, 1));
    }

    #[test]
    fn integer_bareiss_edge_cases() {
        assert_eq!(determinant_int(vec![]), int(1));
        assert_eq!(determinant_int(int_mat(&[&[7]])), int(7));
        assert_eq!(determinant_int(int_mat(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant_int(int_mat(&[&[1, 2], &[2, 4]])), int(0));
        // needs a pivot swap mid-elimination
        assert_eq!(
            determinant_int(int_mat(&[&[1, 1, 1], &[1, 1, 2], &[1, 2, 1]])),
            int(-1)
        );
        assert_eq!(
            determinant_int(int_mat(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])),
            int(30)
        );
    }

    #[test]
    #[should_panic(expected = "square")]
    fn rejects_non_square() {
        Mat::from_rows(vec![vec![rat(1, 1), rat(2, 1)]]).determinant();
    }

    #[test]
    fn rational_entries() {
        let m = Mat::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 4), rat(1, 5)],
        ]);
        assert_eq!(m.determinant(), rat(1, 60));
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(
            n in 1usize..=4,
            raw in proptest::collection::vec((-30i64..=30, 1i64..=6), 16),
        ) {
            let m = Mat::from_fn(n, n, |i, j| {
                let (num, den) = raw[i * 4 + j];
                rat(num, den)
            });
            let rows: Vec<Vec<Rat>> =
                (0..n).map(|i| (0..n).map(|j| m.at(i, j).clone()).collect()).collect();
            prop_assert_eq!(m.determinant(), cofactor_det(&rows));
        }
    }
}
