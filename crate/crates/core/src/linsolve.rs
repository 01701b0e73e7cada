//! Exact linear algebra over the rationals.

use num_traits::Zero;

use crate::error::Error;
use crate::num::Rat;

/// Outcome of solving A x = b exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum LinearSolution {
    Inconsistent,
    Solved {
        /// One solution, with every free variable set to 0.
        particular: Vec<Rat>,
        /// Basis of the homogeneous solution space.
        nullspace: Vec<Vec<Rat>>,
    },
}

/// Gauss-Jordan elimination with exact fractions; A is given by rows.
pub fn solve_rational_linear(a: &[Vec<Rat>], b: &[Rat]) -> Result<LinearSolution, Error> {
    let rows = a.len();
    if b.len() != rows {
        return Err(Error::DimensionMismatch {
            expected: rows,
            got: b.len(),
        });
    }
    let cols = a.first().map(Vec::len).unwrap_or(0);
    for r in a {
        if r.len() != cols {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: r.len(),
            });
        }
    }

    // augmented matrix, reduced to RREF
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = {
            let p = &m[pivot_row][col];
            Rat::new(p.denom().clone(), p.numer().clone())
        };
        for x in m[pivot_row].iter_mut() {
            *x *= &inv;
        }
        let pivot_vals = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_vals) {
                    *x -= &factor * p;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }

    for row in m.iter().skip(pivot_row) {
        if !row[cols].is_zero() {
            return Ok(LinearSolution::Inconsistent);
        }
    }

    let mut particular = vec![Rat::zero(); cols];
    for (r, &col) in pivot_cols.iter().enumerate() {
        particular[col] = m[r][cols].clone();
    }

    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut nullspace = Vec::with_capacity(free_cols.len());
    for &fc in &free_cols {
        let mut v = vec![Rat::zero(); cols];
        v[fc] = Rat::new(1.into(), 1.into());
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[r][fc].clone();
        }
        nullspace.push(v);
    }

    Ok(LinearSolution::Solved {
        particular,
        nullspace,
    })
}
