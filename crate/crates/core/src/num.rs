//! Exact rational scalars and small combinatorial helpers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Coefficient field: arbitrary-precision rationals, always reduced,
/// denominator kept positive by `num-rational`.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if d = 0.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    let mut sq = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Renders a rational without a denominator when it is an integer.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

/// True when the rational has denominator 1.
pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// |r| as a rational.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}
