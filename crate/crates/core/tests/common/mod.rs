//! Shared helpers for the integration suites: seeded random algebra objects
//! and a cofactor-expansion determinant kept independent of the Bareiss path.

use std::collections::BTreeMap;

use invar_core::{
    rat, ratio, Derivation, Monomial, PolyMatrix, Polynomial, Rat, UnivariatePoly, Var,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let n = rng.random_range(-9i64..=9);
    let d = *[1i64, 1, 1, 2, 3, 4]
        .get(rng.random_range(0..6usize))
        .unwrap();
    ratio(n, d)
}

pub fn nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let r = random_rat(rng);
        if r != rat(0) {
            return r;
        }
    }
}

/// Random polynomial in x_0..x_max_idx with bounded degree and term count.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    max_idx: u32,
    max_deg: u32,
    max_terms: usize,
) -> Polynomial {
    let nterms = rng.random_range(0..=max_terms);
    let mut p = Polynomial::zero();
    for _ in 0..nterms {
        let deg = rng.random_range(0..=max_deg);
        let mut pairs = Vec::new();
        for _ in 0..deg {
            pairs.push((Var::X(rng.random_range(0..=max_idx)), 1));
        }
        p.add_term(Monomial::from_pairs(pairs), random_rat(rng));
    }
    p
}

/// Random triangular-linear derivation on x_0..x_bound. With
/// `nonzero_subdiagonal`, every D(x_j) keeps a nonzero x_{j-1} coefficient,
/// which makes the intertwining system solvable.
pub fn random_triangular_linear(
    rng: &mut ChaCha8Rng,
    bound: u32,
    nonzero_subdiagonal: bool,
) -> Derivation {
    let mut images: BTreeMap<u32, Polynomial> = BTreeMap::new();
    for n in 1..=bound {
        let mut img = Polynomial::zero();
        for k in 0..n {
            let c = if k + 1 == n && nonzero_subdiagonal {
                nonzero_rat(rng)
            } else if rng.random_bool(0.6) {
                random_rat(rng)
            } else {
                rat(0)
            };
            img.add_term(Monomial::var(Var::X(k)), c);
        }
        images.insert(n, img);
    }
    Derivation::from_images_bounded(images, bound).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, size: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            m.set(i, j, random_poly(rng, 3, 2, 2));
        }
    }
    m
}

#[allow(dead_code)] // not every test target draws univariate inputs
pub fn random_univariate(rng: &mut ChaCha8Rng, max_deg: usize) -> UnivariatePoly {
    loop {
        let deg = rng.random_range(1..=max_deg);
        let coeffs = (0..=deg).map(|_| random_poly(rng, 2, 1, 2)).collect();
        let p = UnivariatePoly::new(coeffs);
        if p.degree() == Some(deg) {
            return p;
        }
    }
}

/// Determinant by cofactor expansion along the first row; the test oracle for
/// the fraction-free elimination.
pub fn cofactor_det(m: &PolyMatrix) -> Polynomial {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Polynomial::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut det = Polynomial::zero();
    for j in 0..n {
        let entry = m.get(0, j);
        if entry.is_zero() {
            continue;
        }
        let mut minor = PolyMatrix::zeros(n - 1, n - 1);
        for r in 1..n {
            let mut cc = 0;
            for c in 0..n {
                if c == j {
                    continue;
                }
                minor.set(r - 1, cc, m.get(r, c).clone());
                cc += 1;
            }
        }
        let sub = cofactor_det(&minor);
        let signed = if j % 2 == 0 { sub } else { -&sub };
        det += &(entry * &signed);
    }
    det
}
