//! Exact linear algebra over the rationals.
//!
//! The systems solved here are at most a handful of rows (constraint
//! systems for intersection pairings, relation finding in middle
//! cohomology), so plain Gaussian elimination with pivoting on nonzero
//! entries is all that is needed.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rat::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    /// The coefficient matrix is not invertible, signalling an
    /// under-determined constraint set.
    #[error("singular matrix: the linear system has no unique solution")]
    SingularMatrix,
}

/// Rectangular matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "matrix shape mismatch");
        RatMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| crate::rat::rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (c, x) in v.iter().enumerate() {
                    acc += self.at(r, c) * x;
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form; returns the pivot column of each pivot row.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            for c in 0..self.cols {
                let tmp = self.at(row, c).clone();
                *self.at_mut(row, c) = self.at(p, c).clone();
                *self.at_mut(p, c) = tmp;
            }
            let inv = Rational::one() / self.at(row, col).clone();
            for c in col..self.cols {
                *self.at_mut(row, c) = self.at(row, c) * &inv;
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let delta = self.at(row, c) * &factor;
                        *self.at_mut(r, c) = self.at(r, c) - delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

/// Exact solution of `A x = b` for square invertible `A`.
pub fn solve_linear_system(a: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
    assert_eq!(a.rows, a.cols, "solve_linear_system needs a square matrix");
    assert_eq!(b.len(), a.rows, "right-hand side length mismatch");
    let n = a.rows;
    let mut aug = RatMatrix::new(n, n + 1, vec![Rational::zero(); n * (n + 1)]);
    for (r, rhs) in b.iter().enumerate() {
        for c in 0..n {
            *aug.at_mut(r, c) = a.at(r, c).clone();
        }
        *aug.at_mut(r, n) = rhs.clone();
    }
    let pivots = aug.rref();
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return Err(LinalgError::SingularMatrix);
    }
    Ok((0..n).map(|r| aug.at(r, n).clone()).collect())
}

/// Basis of the right nullspace of `A` (each vector has length `A.cols`).
pub fn nullspace(a: &RatMatrix) -> Vec<Vec<Rational>> {
    let mut m = a.clone();
    let pivots = m.rref();
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); a.cols];
            v[fc] = Rational::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -m.at(prow, fc).clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn identity_system() {
        let a = RatMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let b = vec![rat_int(2), rat_int(2), rat_int(4)];
        assert_eq!(solve_linear_system(&a, &b).unwrap(), b);
    }

    #[test]
    fn pairing_constraint_system() {
        // The three Grassmannian constraints, solved as a plain system:
        // -10x + 16y - 3z = 0, 16x + 24y + z = 84, 24x - 26y + z = 0.
        let a = RatMatrix::from_i64_rows(&[&[-10, 16, -3], &[16, 24, 1], &[24, -26, 1]]);
        let b = vec![rat_int(0), rat_int(84), rat_int(0)];
        assert_eq!(
            solve_linear_system(&a, &b).unwrap(),
            vec![rat_int(2), rat_int(2), rat_int(4)]
        );
    }

    #[test]
    fn singular_detected() {
        let a = RatMatrix::from_i64_rows(&[&[1, 1], &[2, 2]]);
        let b = vec![rat_int(1), rat_int(2)];
        assert_eq!(solve_linear_system(&a, &b), Err(LinalgError::SingularMatrix));
    }

    #[test]
    fn fractional_entries() {
        let a = RatMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(-2, 5), rat(7, 4)],
        ]);
        let x = vec![rat(3, 7), rat(-5, 11)];
        let b = a.mul_vec(&x);
        assert_eq!(solve_linear_system(&a, &b).unwrap(), x);
    }

    #[test]
    fn nullspace_of_relation_matrix() {
        // Restriction pairings of (u^2, uv, v^2) against u and v.
        let a = RatMatrix::from_rows(vec![
            vec![rat(7, 2), rat(-3, 2), rat(3, 2)],
            vec![rat(-3, 2), rat(3, 2), rat(-7, 2)],
        ]);
        let basis = nullspace(&a);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        // Proportional to (3, 10, 3).
        let scale = rat_int(3) / &v[0];
        assert_eq!(
            v.iter().map(|x| x * &scale).collect::<Vec<_>>(),
            vec![rat_int(3), rat_int(10), rat_int(3)]
        );
    }
}
