//! Univariate polynomials in a formal main variable X with polynomial
//! coefficients; Sylvester resultants and discriminants.
//!
//! X is positional, not a `Var`, so substitutions over the sequence variables
//! can never capture it.

use crate::error::Error;
use crate::matrix::PolyMatrix;
use crate::num::rat;
use crate::poly::Polynomial;

/// Coefficients `c_0..c_d` of `sum c_i X^(d-i)`; the leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariatePoly {
    coeffs: Vec<Polynomial>,
}

impl UnivariatePoly {
    /// Builds from leading-first coefficients, trimming leading zeros.
    pub fn new(coeffs: Vec<Polynomial>) -> Self {
        let first_nonzero = coeffs.iter().position(|c| !c.is_zero());
        match first_nonzero {
            Some(i) => UnivariatePoly {
                coeffs: coeffs[i..].to_vec(),
            },
            None => UnivariatePoly { coeffs: Vec::new() },
        }
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Polynomial> {
        self.coeffs.first()
    }

    /// Formal derivative with respect to X.
    pub fn derivative(&self) -> UnivariatePoly {
        match self.degree() {
            None | Some(0) => UnivariatePoly::zero(),
            Some(d) => UnivariatePoly::new(
                (0..d)
                    .map(|i| self.coeffs[i].scale(&rat((d - i) as i64)))
                    .collect(),
            ),
        }
    }

    /// Sylvester matrix of self (degree m) and other (degree n): an
    /// (m+n) x (m+n) matrix with n shifted coefficient rows of self followed
    /// by m shifted rows of other.
    pub fn sylvester(&self, other: &UnivariatePoly) -> Result<PolyMatrix, Error> {
        let m = self.degree().ok_or(Error::ZeroResultant)?;
        let n = other.degree().ok_or(Error::ZeroResultant)?;
        let size = m + n;
        let mut mat = PolyMatrix::zeros(size, size);
        for row in 0..n {
            for (k, c) in self.coeffs.iter().enumerate() {
                mat.set(row, row + k, c.clone());
            }
        }
        for row in 0..m {
            for (k, c) in other.coeffs.iter().enumerate() {
                mat.set(n + row, row + k, c.clone());
            }
        }
        Ok(mat)
    }

    /// Resultant with respect to X, as the Sylvester determinant.
    pub fn resultant(&self, other: &UnivariatePoly) -> Result<Polynomial, Error> {
        self.sylvester(other)?.determinant()
    }

    /// Discriminant: (-1)^(d(d-1)/2) * Res(P, P') / lc(P), degree >= 2.
    /// The division is exact over the coefficient ring.
    pub fn discriminant(&self) -> Result<Polynomial, Error> {
        let d = self
            .degree()
            .ok_or(Error::DiscriminantDegree { degree: 0 })?;
        if d < 2 {
            return Err(Error::DiscriminantDegree { degree: d });
        }
        let res = self.resultant(&self.derivative())?;
        let quotient = res.exact_div(self.leading().expect("nonzero"))?;
        if (d * (d - 1) / 2) % 2 == 1 {
            Ok(-&quotient)
        } else {
            Ok(quotient)
        }
    }
}
