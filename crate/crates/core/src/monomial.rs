//! Variables and sparse monomials with a graded-lex order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A variable of the ambient polynomial algebra.
///
/// `X(n)` are the sequence variables (printed `x{n}`; `a{n}` is accepted as an
/// input alias). `C(n)` is a disjoint second block used by binary transforms.
/// `Param(k)` are reserved scalar parameters (printed `mu`, `mu1`, ...) that no
/// derivation or sequence substitution ever touches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(u32),
    C(u32),
    Param(u32),
}

/// The default symbolic scalar parameter.
pub const MU: Var = Var::Param(0);

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::C(i) => write!(f, "c{i}"),
            Var::Param(0) => write!(f, "mu"),
            Var::Param(k) => write!(f, "mu{k}"),
        }
    }
}

/// Product of variable powers; zero exponents are never stored, so the unit
/// monomial is the empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: BTreeMap<Var, u32>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial::from_pairs([(v, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut exps = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps.iter().map(|(v, e)| (*v, *e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            *exps.entry(*v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::unit();
        }
        Monomial {
            exps: self.exps.iter().map(|(v, x)| (*v, x * e)).collect(),
        }
    }

    /// Quotient self / other when other divides self, else None.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            match exps.get_mut(v) {
                Some(x) if *x > *e => *x -= e,
                Some(x) if *x == *e => {
                    exps.remove(v);
                }
                _ => return None,
            }
        }
        Some(Monomial { exps })
    }

    /// Removes one factor of `v`; exponent must be positive.
    pub fn without_one(&self, v: Var) -> Monomial {
        let mut exps = self.exps.clone();
        match exps.get_mut(&v) {
            Some(e) if *e > 1 => *e -= 1,
            Some(_) => {
                exps.remove(&v);
            }
            None => {}
        }
        Monomial { exps }
    }
}

// Graded-lex: degree first, ties broken lexicographically with variables
// ascending (a larger exponent on the smallest differing variable wins).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut a = self.exps.iter();
            let mut b = other.exps.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(eb);
                            }
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
