//! Kernels of triangular-linear derivations: explicit generators,
//! catalecticants, intertwining changes of basis, and the indefinite
//! coefficients search for derivations annihilating a family.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::derivation::Derivation;
use crate::error::Error;
use crate::linsolve::{solve_rational_linear, LinearSolution};
use crate::matrix::PolyMatrix;
use crate::monomial::{Monomial, Var};
use crate::num::{binom, rat, Rat};
use crate::poly::Polynomial;

/// The generator z_k of the kernel of the basic Weitzenbock derivation:
/// z_k = sum_{i=0}^{k-2} (-1)^i C(k,i) x_{k-i} x_1^i x_0^{k-i-1}
///       + (k-1) (-1)^{k+1} x_1^k,  for k >= 2.
pub fn cayley_generator(k: u32) -> Result<Polynomial, Error> {
    if k < 2 {
        return Err(Error::CayleyIndex { k });
    }
    let mut z = Polynomial::zero();
    for i in 0..=k - 2 {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let coeff = Rat::from_integer(binom(k, i) * BigInt::from(sign));
        let mono =
            Monomial::from_pairs([(Var::X(k - i), 1), (Var::X(1), i), (Var::X(0), k - i - 1)]);
        z.add_term(mono, coeff);
    }
    let tail_sign = if (k + 1).is_multiple_of(2) { 1i64 } else { -1 };
    z.add_term(
        Monomial::from_pairs([(Var::X(1), k)]),
        rat(tail_sign * (k as i64 - 1)),
    );
    Ok(z)
}

/// The catalecticant h_n: determinant of the (n+1)x(n+1) Hankel matrix
/// [x_{i+j}] in x_0..x_{2n}.
pub fn catalecticant(n: u32) -> Polynomial {
    let size = (n + 1) as usize;
    let mut m = PolyMatrix::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            m.set(i, j, Polynomial::x((i + j) as u32));
        }
    }
    m.determinant().expect("hankel determinant")
}

/// Stirling numbers of the second kind via the recurrence
/// S(n,k) = k S(n-1,k) + S(n-1,k-1).
pub fn stirling2(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one();
    }
    // rows of the triangle up to n, truncated at column k
    let kk = k as usize;
    let mut row = vec![BigInt::zero(); kk + 1];
    row[0] = BigInt::one();
    for _ in 1..=n {
        let mut next = vec![BigInt::zero(); kk + 1];
        for j in 1..=kk {
            next[j] = BigInt::from(j as u64) * &row[j] + &row[j - 1];
        }
        row = next;
    }
    row[kk].clone()
}

/// Triangular linear change of basis Psi(x_n) = sum_{i<=n} c_{n,i} x_i,
/// normalized so that Psi(x_0) = x_0 and c_{n,0} = 0 for n >= 1.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearChangeOfBasis {
    /// rows[n] holds c_{n,0}..c_{n,n}
    rows: Vec<Vec<Rat>>,
}

impl LinearChangeOfBasis {
    pub fn identity(bound: u32) -> Self {
        let rows = (0..=bound as usize)
            .map(|n| {
                let mut row = vec![Rat::zero(); n + 1];
                row[n] = Rat::one();
                row
            })
            .collect();
        LinearChangeOfBasis { rows }
    }

    pub fn bound(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn coeff(&self, n: u32, i: u32) -> Rat {
        self.rows
            .get(n as usize)
            .and_then(|row| row.get(i as usize))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Psi(x_n) as a polynomial.
    pub fn image(&self, n: u32) -> Result<Polynomial, Error> {
        if n > self.bound() {
            return Err(Error::BoundExceeded {
                needed: n,
                bound: self.bound(),
            });
        }
        let mut p = Polynomial::zero();
        for (i, c) in self.rows[n as usize].iter().enumerate() {
            p.add_term(Monomial::var(Var::X(i as u32)), c.clone());
        }
        Ok(p)
    }

    /// Substitutes x_n -> Psi(x_n) throughout f.
    pub fn push_through(&self, f: &Polynomial) -> Result<Polynomial, Error> {
        if let Some(max) = f.max_x_index() {
            if max > self.bound() {
                return Err(Error::BoundExceeded {
                    needed: max,
                    bound: self.bound(),
                });
            }
        }
        let images: BTreeMap<Var, Polynomial> = (0..=self.bound())
            .map(|n| (Var::X(n), self.image(n).expect("within bound")))
            .collect();
        Ok(f.substitute(&images))
    }

    /// The endomorphism x_n -> Psi(x_n).
    pub fn to_endomorphism(&self) -> crate::derivation::PolyEndomorphism {
        crate::derivation::PolyEndomorphism::from_x_images(
            (0..=self.bound()).map(|n| (n, self.image(n).expect("within bound"))),
        )
    }
}

/// Solves for the change of basis Psi with D(Psi(x_n)) = n Psi(x_{n-1}) for
/// 1 <= n <= bound, normalized by Psi(x_0) = x_0, c_{n,0} = 0 for n >= 1.
/// Requires D triangular-linear with a nonzero coefficient of x_{j-1} in
/// D(x_j) for every j.
pub fn intertwining_solve(d: &Derivation, bound: u32) -> Result<LinearChangeOfBasis, Error> {
    // coefficient table coef[j] = [(k, d_{j,k})], j = 1..=bound
    let mut coef: Vec<Vec<(u32, Rat)>> = vec![Vec::new()];
    for j in 1..=bound {
        let row = d.linear_coeffs(j)?;
        if !row.iter().any(|(k, c)| *k == j - 1 && !c.is_zero()) {
            return Err(Error::IntertwiningSingular { index: j });
        }
        coef.push(row);
    }

    let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::one()]];
    for n in 1..=bound as usize {
        // unknowns c_{n,1}..c_{n,n}; equation k: sum_{j>k} d_{j,k} c_{n,j} = n c_{n-1,k}
        let mut a = vec![vec![Rat::zero(); n]; n];
        let mut b = vec![Rat::zero(); n];
        for k in 0..n {
            for j in k + 1..=n {
                if let Some((_, c)) = coef[j].iter().find(|(i, _)| *i as usize == k) {
                    a[k][j - 1] = c.clone();
                }
            }
            let prev = rows[n - 1].get(k).cloned().unwrap_or_else(Rat::zero);
            b[k] = rat(n as i64) * prev;
        }
        match solve_rational_linear(&a, &b)? {
            LinearSolution::Solved {
                particular,
                nullspace,
            } if nullspace.is_empty() => {
                let mut row = vec![Rat::zero()];
                row.extend(particular);
                rows.push(row);
            }
            _ => return Err(Error::IntertwiningSingular { index: n as u32 }),
        }
    }
    Ok(LinearChangeOfBasis { rows })
}

/// True iff D(f) is the zero polynomial.
pub fn kernel_membership(d: &Derivation, f: &Polynomial) -> Result<bool, Error> {
    Ok(d.apply(f)?.is_zero())
}

/// Kernel generators of a triangular-linear derivation: the intertwining
/// images of x_0 and of the z_k, each annihilated by the derivation.
#[derive(Clone, Debug)]
pub struct KernelPresentation {
    pub derivation: Derivation,
    pub intertwiner: LinearChangeOfBasis,
    /// (name, polynomial) pairs: psi_x0, psi_z2, ..., psi_zN.
    pub generators: Vec<(String, Polynomial)>,
}

pub fn kernel_presentation(d: &Derivation, bound: u32) -> Result<KernelPresentation, Error> {
    let psi = intertwining_solve(d, bound)?;
    let mut generators = vec![("psi_x0".to_string(), psi.image(0)?)];
    for k in 2..=bound {
        let z = cayley_generator(k)?;
        generators.push((format!("psi_z{k}"), psi.push_through(&z)?));
    }
    Ok(KernelPresentation {
        derivation: d.clone(),
        intertwiner: psi,
        generators,
    })
}

/// Unknown-coefficient space of triangular-linear derivations on
/// x_0..x_bound: D(x_n) = sum_{k<n} d_{n,k} x_k, with D(x_0) = 0 forced.
#[derive(Clone, Copy, Debug)]
pub struct DerivationAnsatz {
    pub bound: u32,
}

impl DerivationAnsatz {
    pub fn new(bound: u32) -> Self {
        DerivationAnsatz { bound }
    }

    /// Unknowns (n, k) with 0 <= k < n <= bound, in column order.
    pub fn unknowns(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for n in 1..=self.bound {
            for k in 0..n {
                out.push((n, k));
            }
        }
        out
    }

    pub fn unknown_count(&self) -> usize {
        (self.bound as usize * (self.bound as usize + 1)) / 2
    }

    fn instantiate(&self, values: &[Rat]) -> Derivation {
        let mut images: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for ((n, k), v) in self.unknowns().into_iter().zip(values) {
            if !v.is_zero() {
                images
                    .entry(n)
                    .or_insert_with(Polynomial::zero)
                    .add_term(Monomial::var(Var::X(k)), v.clone());
            }
        }
        Derivation::from_images_bounded(images, self.bound).expect("keys within bound")
    }
}

/// Finds a basis of the space of ansatz derivations annihilating every
/// polynomial in the family, by equating all monomial coefficients of
/// D(f) = sum d_{n,k} x_k df/dx_n to zero.
pub fn problem2_find_derivations(
    family: &[Polynomial],
    ansatz: &DerivationAnsatz,
) -> Result<Vec<Derivation>, Error> {
    let unknowns = ansatz.unknowns();
    for f in family {
        if let Some(max) = f.max_x_index() {
            if max > ansatz.bound {
                return Err(Error::BoundExceeded {
                    needed: max,
                    bound: ansatz.bound,
                });
            }
        }
    }

    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for f in family {
        // column polynomials x_k * df/dx_n, one per unknown
        let col_polys: Vec<Polynomial> = unknowns
            .iter()
            .map(|&(n, k)| &Polynomial::x(k) * &f.partial_derivative(Var::X(n)))
            .collect();
        let mut monomials: Vec<Monomial> = Vec::new();
        for p in &col_polys {
            for (m, _) in p.terms() {
                if !monomials.contains(m) {
                    monomials.push(m.clone());
                }
            }
        }
        for m in monomials {
            rows.push(col_polys.iter().map(|p| p.coeff(&m)).collect());
        }
    }

    if rows.is_empty() {
        // no constraints at all: keep the column count visible to the solver
        rows.push(vec![Rat::zero(); unknowns.len()]);
    }
    let b = vec![Rat::zero(); rows.len()];
    let basis = match solve_rational_linear(&rows, &b)? {
        LinearSolution::Solved { nullspace, .. } => nullspace,
        LinearSolution::Inconsistent => unreachable!("homogeneous system"),
    };

    let mut out = Vec::with_capacity(basis.len());
    for v in basis {
        let d = ansatz.instantiate(&v);
        for f in family {
            debug_assert!(d.apply(f).expect("within bound").is_zero());
        }
        out.push(d);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn log_of_sum(bound: u32) -> Derivation {
        let phi = crate::derivation::PolyEndomorphism::from_x_images(
            (1..=bound).map(|n| (n, &Polynomial::x(n) + &Polynomial::x(n - 1))),
        );
        crate::derivation::log_endomorphism(&phi, bound).unwrap()
    }

    #[test]
    fn cayley_generators_match_closed_forms() {
        assert_eq!(cayley_generator(2).unwrap(), p("x0*x2 - x1^2"));
        assert_eq!(
            cayley_generator(3).unwrap(),
            p("x0^2*x3 - 3*x0*x1*x2 + 2*x1^3")
        );
        assert_eq!(cayley_generator(1), Err(Error::CayleyIndex { k: 1 }));
    }

    #[test]
    fn weitzenbock_kills_z4() {
        let d = Derivation::basic_weitzenbock();
        let z4 = cayley_generator(4).unwrap();
        assert!(kernel_membership(&d, &z4).unwrap());
        assert!(!kernel_membership(&d, &p("x1")).unwrap());
        let shift = Derivation::shift();
        assert!(kernel_membership(&shift, &p("2*x0*x2 - x1^2")).unwrap());
    }

    #[test]
    fn catalecticants() {
        assert_eq!(catalecticant(0), p("x0"));
        assert_eq!(catalecticant(1), p("x0*x2 - x1^2"));
        assert_eq!(
            catalecticant(2),
            p("x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3")
        );
    }

    #[test]
    fn stirling_values() {
        for n in 0..=8 {
            assert_eq!(stirling2(n, n), BigInt::one());
            if n >= 1 {
                assert_eq!(stirling2(n, 1), BigInt::one());
            }
        }
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(5, 3), BigInt::from(25));
        assert_eq!(stirling2(3, 5), BigInt::zero());
        assert_eq!(stirling2(4, 0), BigInt::zero());
    }

    #[test]
    fn intertwiner_for_sum_is_stirling_table() {
        let d = log_of_sum(5);
        let psi = intertwining_solve(&d, 5).unwrap();
        for n in 0..=5u32 {
            for i in 0..=n {
                let expected = if i == 0 && n > 0 {
                    Rat::zero()
                } else {
                    Rat::from_integer(crate::num::factorial(i) * stirling2(n, i))
                };
                assert_eq!(psi.coeff(n, i), expected, "c({n},{i})");
            }
        }
    }

    #[test]
    fn intertwiner_of_weitzenbock_is_identity() {
        let table: BTreeMap<u32, Polynomial> = (1..=6)
            .map(|i| (i, Polynomial::x(i - 1).scale(&rat(i as i64))))
            .collect();
        let d = Derivation::from_images(table);
        let psi = intertwining_solve(&d, 6).unwrap();
        assert_eq!(psi, LinearChangeOfBasis::identity(6));
    }

    #[test]
    fn intertwiner_rejects_missing_subdiagonal() {
        let mut images = BTreeMap::new();
        images.insert(1, p("x0"));
        images.insert(2, p("x0")); // no x1 term
        let d = Derivation::from_images_bounded(images, 2).unwrap();
        assert!(matches!(
            intertwining_solve(&d, 2),
            Err(Error::IntertwiningSingular { index: 2 })
        ));
    }

    #[test]
    fn push_through_respects_bound() {
        let psi = LinearChangeOfBasis::identity(3);
        assert!(psi.push_through(&p("x0*x2")).is_ok());
        assert_eq!(
            psi.push_through(&p("x4")),
            Err(Error::BoundExceeded {
                needed: 4,
                bound: 3
            })
        );
        assert_eq!(psi.push_through(&p("x0")).unwrap(), p("x0"));
    }

    #[test]
    fn sum_intertwiner_pushes_x2() {
        let d = log_of_sum(4);
        let psi = intertwining_solve(&d, 4).unwrap();
        assert_eq!(psi.push_through(&p("x2")).unwrap(), p("x1 + 2*x2"));
    }

    #[test]
    fn kernel_presentation_of_weitzenbock() {
        let table: BTreeMap<u32, Polynomial> = (1..=3)
            .map(|i| (i, Polynomial::x(i - 1).scale(&rat(i as i64))))
            .collect();
        let d = Derivation::from_images(table);
        let pres = kernel_presentation(&d, 3).unwrap();
        let names: Vec<&str> = pres.generators.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, vec!["psi_x0", "psi_z2", "psi_z3"]);
        assert_eq!(pres.generators[0].1, p("x0"));
        assert_eq!(pres.generators[1].1, cayley_generator(2).unwrap());
        assert_eq!(pres.generators[2].1, cayley_generator(3).unwrap());
        for (_, g) in &pres.generators {
            assert!(kernel_membership(&d, g).unwrap());
        }
    }

    #[test]
    fn ansatz_unknown_count() {
        let ansatz = DerivationAnsatz::new(6);
        assert_eq!(ansatz.unknowns().len(), 21);
        assert_eq!(ansatz.unknown_count(), 21);
    }

    #[test]
    fn family_x0_allows_everything() {
        let ansatz = DerivationAnsatz::new(3);
        let basis = problem2_find_derivations(&[p("x0")], &ansatz).unwrap();
        assert_eq!(basis.len(), ansatz.unknown_count());
    }

    #[test]
    fn family_x1_kills_one_unknown() {
        let ansatz = DerivationAnsatz::new(3);
        let basis = problem2_find_derivations(&[p("x1")], &ansatz).unwrap();
        assert_eq!(basis.len(), ansatz.unknown_count() - 1);
        for d in &basis {
            assert_eq!(d.image(1).unwrap(), Polynomial::zero());
        }
    }

    #[test]
    fn bound_too_small_is_an_error() {
        let ansatz = DerivationAnsatz::new(2);
        assert!(matches!(
            problem2_find_derivations(&[p("x3")], &ansatz),
            Err(Error::BoundExceeded {
                needed: 3,
                bound: 2
            })
        ));
    }
}
