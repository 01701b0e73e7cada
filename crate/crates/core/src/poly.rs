//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::monomial::{Monomial, Var, MU};
use crate::num::{rat, rat_pow, Rat};

/// Finite map monomial -> nonzero rational coefficient. Two polynomials are
/// equal iff their term maps are equal; the zero polynomial stores no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::unit(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(rat(n))
    }

    pub fn var(v: Var) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::var(v), rat(1));
        p
    }

    /// The sequence variable x_i.
    pub fn x(i: u32) -> Self {
        Polynomial::var(Var::X(i))
    }

    /// The second-block variable c_i.
    pub fn c(i: u32) -> Self {
        Polynomial::var(Var::C(i))
    }

    /// The reserved scalar parameter mu.
    pub fn mu() -> Self {
        Polynomial::var(MU)
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::unit()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Leading term in the graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.last_key_value()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// All variables occurring with positive exponent.
    pub fn vars(&self) -> Vec<Var> {
        let mut out: Vec<Var> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.vars() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out.sort();
        out
    }

    /// Largest x-index present, if any.
    pub fn max_x_index(&self) -> Option<u32> {
        self.vars()
            .into_iter()
            .filter_map(|v| match v {
                Var::X(i) => Some(i),
                _ => None,
            })
            .max()
    }

    /// Largest c-index present, if any.
    pub fn max_c_index(&self) -> Option<u32> {
        self.vars()
            .into_iter()
            .filter_map(|v| match v {
                Var::C(i) => Some(i),
                _ => None,
            })
            .max()
    }

    pub fn has_param(&self) -> bool {
        self.vars().iter().any(|v| matches!(v, Var::Param(_)))
    }

    /// Max over terms of sum(i * e_i) over the x-variables. A triangular
    /// derivation strictly lowers this weight, so weight + 1 bounds the
    /// nilpotency index.
    pub fn x_weight(&self) -> u64 {
        self.terms
            .keys()
            .map(|m| {
                m.vars()
                    .map(|(v, e)| match v {
                        Var::X(i) => i as u64 * e as u64,
                        _ => 0,
                    })
                    .sum::<u64>()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut sq = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial_derivative(&self, v: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                out.add_term(m.without_one(v), c * rat(e as i64));
            }
        }
        out
    }

    /// Simultaneous substitution; variables without an image stay themselves,
    /// so this is an algebra map.
    pub fn substitute(&self, images: &BTreeMap<Var, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for (v, e) in m.vars() {
                match images.get(&v) {
                    Some(img) => acc = &acc * &img.pow(e),
                    None => acc = &acc * &Polynomial::term(Monomial::var(v).pow(e), rat(1)),
                }
            }
            out += &acc;
        }
        out
    }

    /// Evaluates at the assignment; errors on any unassigned variable.
    pub fn eval<F>(&self, value_of: F) -> Result<Rat, Error>
    where
        F: Fn(Var) -> Option<Rat>,
    {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for (v, e) in m.vars() {
                let val = value_of(v).ok_or(Error::MissingValue(v))?;
                prod *= rat_pow(&val, e);
            }
            total += prod;
        }
        Ok(total)
    }

    /// Exact quotient self / g; errors when g is zero or does not divide.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial, Error> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (glm, glc) = g
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while !rem.is_zero() {
            let (rlm, rlc) = rem
                .leading_term()
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            let m = rlm.checked_div(&glm).ok_or(Error::InexactDivision)?;
            let t = Polynomial::term(m, &rlc / &glc);
            rem -= &(&t * g);
            quot += &t;
        }
        Ok(quot)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul<&Rat> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Rat) -> Polynomial {
        self.scale(rhs)
    }
}

// Canonical printer: terms descending in graded-lex, variables ascending
// inside each monomial. parse_poly inverts this exactly.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        crate::parse::parse_poly(s)
    }
}
