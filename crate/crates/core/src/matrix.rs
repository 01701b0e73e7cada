//! Dense matrices of polynomials and fraction-free determinants.

use crate::error::Error;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: r.len(),
                });
            }
        }
        Ok(PolyMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.data[i * self.cols + j] = p;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact determinant by fraction-free Bareiss elimination. Every interior
    /// division is exact (the Bareiss identity), so a division failure would
    /// signal a broken invariant rather than user error.
    pub fn determinant(&self) -> Result<Polynomial, Error> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one());
        }
        let mut m = self.clone();
        let mut sign_negative = false;
        let mut prev = Polynomial::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let pivot_row = (k + 1..n).find(|&r| !m.get(r, k).is_zero());
                match pivot_row {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign_negative = !sign_negative;
                    }
                    None => return Ok(Polynomial::zero()),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(m.get(i, j) * &pivot) - &(m.get(i, k) * m.get(k, j));
                    m.set(i, j, num.exact_div(&prev)?);
                }
                m.set(i, k, Polynomial::zero());
            }
            prev = pivot;
        }
        let det = m.get(n - 1, n - 1).clone();
        Ok(if sign_negative { -&det } else { det })
    }
}
