//! Dense matrices over a prime field with exact row reduction.

use std::ops::{Index, IndexMut};

use super::field::{FieldElement, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>, // row-major
}

impl Matrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_i64(field: PrimeField, rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(field, rows, cols, entries.iter().map(|&e| field.elem(e)).collect())
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self::new(field, rows, cols, vec![field.zero(); rows * cols])
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<FieldElement>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            entries.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            for j in 0..self.cols {
                self[(r, j)] *= inv;
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)];
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = self[(r, j)];
                    self[(i, j)] -= factor * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![self.field.zero(); self.cols];
                v[fc] = self.field.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m[(r, fc)];
                }
                v
            })
            .collect()
    }
}

/// Right null space basis of `m`.
pub fn mat_kernel(m: &Matrix) -> Vec<Vec<FieldElement>> {
    m.kernel()
}

impl Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}
