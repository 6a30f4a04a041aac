//! Small dense matrices over GF(q²) with Gaussian elimination.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { Elem::ONE } else { Elem::ZERO })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Copy of rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |r, c| self[(r0 + r, c0 + c)])
    }

    pub fn mul(&self, field: &FieldSpec, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols)
                .map(|k| field.mul(self[(r, k)], rhs[(k, c)]))
                .sum()
        })
    }

    pub fn mul_vec(&self, field: &FieldSpec, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(
            self.cols,
            v.len(),
            "vector length differs from column count"
        );
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| field.mul(a, b))
                    .sum()
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn rank(&self, field: &FieldSpec) -> usize {
        let mut work = self.clone();
        let order: Vec<usize> = (0..self.cols).collect();
        work.row_reduce(field, &order).len()
    }

    /// Reduces in place to reduced row-echelon form, visiting pivot columns
    /// in `column_order`. Returns the pivot columns, row by row.
    pub fn row_reduce(&mut self, field: &FieldSpec, column_order: &[usize]) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for &c in column_order {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !self[(r, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(rank, p);
            let inv = field.inv(self[(rank, c)]).expect("pivot is nonzero");
            for k in 0..self.cols {
                self[(rank, k)] = field.mul(self[(rank, k)], inv);
            }
            for r in 0..self.rows {
                let factor = self[(r, c)];
                if r != rank && !factor.is_zero() {
                    for k in 0..self.cols {
                        let delta = field.mul(factor, self[(rank, k)]);
                        self[(r, k)] += delta;
                    }
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for k in 0..self.cols {
                self.data.swap(a * self.cols + k, b * self.cols + k);
            }
        }
    }

    /// Solves `self · x = rhs` for square nonsingular `self`.
    pub fn solve(&self, field: &FieldSpec, rhs: &[Elem]) -> Result<Vec<Elem>> {
        if self.rows != self.cols || rhs.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, n + 1, |r, c| if c < n { self[(r, c)] } else { rhs[r] });
        let order: Vec<usize> = (0..n).collect();
        if aug.row_reduce(field, &order).len() < n || !aug.block(0, n, 0, n).is_identity() {
            return Err(Error::Singular("dense solve"));
        }
        Ok(aug.column(n))
    }

    pub fn inverse(&self, field: &FieldSpec) -> Result<Matrix> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::Singular("non-square inverse"));
        }
        let mut aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)]
            } else if c - n == r {
                Elem::ONE
            } else {
                Elem::ZERO
            }
        });
        let order: Vec<usize> = (0..n).collect();
        aug.row_reduce(field, &order);
        if !aug.block(0, n, 0, n).is_identity() {
            return Err(Error::Singular("dense inverse"));
        }
        Ok(aug.block(0, n, n, 2 * n))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Elem;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Elem {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Elem {
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip_gf16() {
        let f = FieldSpec::build(2).unwrap();
        let m = Matrix::from_fn(4, 4, |r, c| f.eps_pow((r * c + r) as i64));
        let inv = m.inverse(&f).unwrap();
        assert!(m.mul(&f, &inv).is_identity());
        let rhs = vec![Elem(1), Elem(7), Elem(0), Elem(12)];
        let x = m.solve(&f, &rhs).unwrap();
        assert_eq!(m.mul_vec(&f, &x), rhs);
    }

    #[test]
    fn singular_systems_are_reported() {
        let f = FieldSpec::build(1).unwrap();
        let m = Matrix::from_rows(vec![vec![Elem(1), Elem(2)], vec![Elem(1), Elem(2)]]);
        assert_eq!(m.rank(&f), 1);
        assert!(m.inverse(&f).is_err());
        assert!(m.solve(&f, &[Elem(1), Elem(0)]).is_err());
    }
}
