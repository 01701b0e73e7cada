//! Derivations of the polynomial algebra and their exponential automorphisms.
//!
//! A derivation is the unique Leibniz extension of its images on the
//! variables. Built-in rules cover the basic Weitzenbock derivation
//! (x_0 -> 0, x_i -> i*x_{i-1}, optionally scaled by a scalar such as mu) and
//! the shift derivation (x_i -> x_{i-1}); everything else is a finite image
//! table with an explicit support bound. Applying a table derivation beyond
//! its bound is an error, not an implicit zero: a declared-zero image and an
//! undeclared one are different things.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::monomial::Var;
use crate::num::{rat, Rat};
use crate::poly::Polynomial;

#[derive(Clone, Debug)]
enum Rule {
    Weitzenbock {
        scale: Polynomial,
    },
    Shift,
    Table {
        images: BTreeMap<u32, Polynomial>,
        bound: u32,
    },
}

/// Linear map D with D(fg) = D(f)g + fD(g), determined by images of the
/// sequence variables. Second-block and parameter variables are constants:
/// D(c_i) = D(mu) = 0.
#[derive(Clone, Debug)]
pub struct Derivation {
    rule: Rule,
}

impl Derivation {
    /// The basic Weitzenbock derivation: x_0 -> 0, x_i -> i*x_{i-1}.
    pub fn basic_weitzenbock() -> Self {
        Derivation {
            rule: Rule::Weitzenbock {
                scale: Polynomial::one(),
            },
        }
    }

    /// The basic Weitzenbock derivation scaled by a scalar polynomial
    /// (typically a rational constant or `mu`).
    pub fn scaled_weitzenbock(scale: Polynomial) -> Self {
        Derivation {
            rule: Rule::Weitzenbock { scale },
        }
    }

    /// The shift derivation: x_0 -> 0, x_i -> x_{i-1}.
    pub fn shift() -> Self {
        Derivation { rule: Rule::Shift }
    }

    /// Table derivation with support bound = largest declared index.
    pub fn from_images(images: BTreeMap<u32, Polynomial>) -> Self {
        let bound = images.keys().max().copied().unwrap_or(0);
        Derivation::from_images_bounded(images, bound).expect("bound covers keys")
    }

    /// Table derivation with an explicit support bound covering all keys.
    pub fn from_images_bounded(
        images: BTreeMap<u32, Polynomial>,
        bound: u32,
    ) -> Result<Self, Error> {
        if let Some(&k) = images.keys().max() {
            if k > bound {
                return Err(Error::BoundExceeded { needed: k, bound });
            }
        }
        let images = images.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        Ok(Derivation {
            rule: Rule::Table { images, bound },
        })
    }

    /// The zero derivation on x_0..x_bound.
    pub fn zero(bound: u32) -> Self {
        Derivation {
            rule: Rule::Table {
                images: BTreeMap::new(),
                bound,
            },
        }
    }

    /// Declared support bound; None for the unbounded built-in rules.
    pub fn support_bound(&self) -> Option<u32> {
        match &self.rule {
            Rule::Table { bound, .. } => Some(*bound),
            _ => None,
        }
    }

    /// Image of x_i. For table derivations, indices beyond the bound error.
    pub fn image(&self, i: u32) -> Result<Polynomial, Error> {
        match &self.rule {
            Rule::Weitzenbock { scale } => Ok(if i == 0 {
                Polynomial::zero()
            } else {
                &Polynomial::x(i - 1).scale(&rat(i as i64)) * scale
            }),
            Rule::Shift => Ok(if i == 0 {
                Polynomial::zero()
            } else {
                Polynomial::x(i - 1)
            }),
            Rule::Table { images, bound } => {
                if i > *bound {
                    return Err(Error::SupportBoundExceeded {
                        index: i,
                        bound: *bound,
                    });
                }
                Ok(images.get(&i).cloned().unwrap_or_else(Polynomial::zero))
            }
        }
    }

    /// Declared nonzero images (empty for rule-based derivations).
    pub fn table_images(&self) -> Option<&BTreeMap<u32, Polynomial>> {
        match &self.rule {
            Rule::Table { images, .. } => Some(images),
            _ => None,
        }
    }

    /// D(f) = sum_i D(x_i) * df/dx_i.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, Error> {
        let mut out = Polynomial::zero();
        for v in f.vars() {
            let Var::X(i) = v else { continue };
            let img = self.image(i)?;
            if img.is_zero() {
                continue;
            }
            out += &(&img * &f.partial_derivative(v));
        }
        Ok(out)
    }

    /// Smallest r <= cap with D^r(f) = 0 (0 for the zero polynomial).
    pub fn nilpotency_index(&self, f: &Polynomial, cap: u32) -> Result<u32, Error> {
        if f.is_zero() {
            return Ok(0);
        }
        let mut g = f.clone();
        for r in 1..=cap {
            g = self.apply(&g)?;
            if g.is_zero() {
                return Ok(r);
            }
        }
        Err(Error::NilpotencyCapExceeded { cap })
    }

    /// exp(D)(f) = sum_k D^k(f)/k!; errors unless D^k(f) = 0 for some k <= cap.
    pub fn exp_apply(&self, f: &Polynomial, cap: u32) -> Result<Polynomial, Error> {
        let mut acc = f.clone();
        let mut term = f.clone();
        let mut k_factorial = BigInt::one();
        for k in 1..=cap {
            term = self.apply(&term)?;
            if term.is_zero() {
                return Ok(acc);
            }
            k_factorial *= k as u64;
            acc += &term.scale(&Rat::new(BigInt::one(), k_factorial.clone()));
        }
        Err(Error::NilpotencyCapExceeded { cap })
    }

    /// exp(D) restricted to x_0..x_bound, as an endomorphism.
    pub fn to_endomorphism(&self, bound: u32, cap: u32) -> Result<PolyEndomorphism, Error> {
        let mut endo = PolyEndomorphism::identity();
        for n in 0..=bound {
            endo.set_image(Var::X(n), self.exp_apply(&Polynomial::x(n), cap)?);
        }
        Ok(endo)
    }

    /// Coefficients (k, d_{i,k}) of a linear image D(x_i) = sum d_{i,k} x_k
    /// with every k < i; errors if the image is not of that shape.
    pub fn linear_coeffs(&self, i: u32) -> Result<Vec<(u32, Rat)>, Error> {
        let img = self.image(i)?;
        let mut out = Vec::new();
        for (m, c) in img.terms() {
            let vars: Vec<_> = m.vars().collect();
            match vars.as_slice() {
                [(Var::X(k), 1)] if *k < i => out.push((*k, c.clone())),
                _ => return Err(Error::NotTriangularLinear { index: i }),
            }
        }
        Ok(out)
    }

    /// Checks the triangular-linear shape on x_0..x_upto.
    pub fn is_triangular_linear(&self, upto: u32) -> bool {
        (0..=upto).all(|i| self.linear_coeffs(i).is_ok())
    }
}

/// Algebra endomorphism determined by images of variables; unlisted variables
/// map to themselves.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PolyEndomorphism {
    images: BTreeMap<Var, Polynomial>,
}

impl PolyEndomorphism {
    pub fn identity() -> Self {
        PolyEndomorphism::default()
    }

    pub fn from_x_images<I: IntoIterator<Item = (u32, Polynomial)>>(images: I) -> Self {
        let mut endo = PolyEndomorphism::identity();
        for (i, p) in images {
            endo.set_image(Var::X(i), p);
        }
        endo
    }

    /// Declares an image; storing the identity image drops the entry.
    pub fn set_image(&mut self, v: Var, p: Polynomial) {
        if p == Polynomial::var(v) {
            self.images.remove(&v);
        } else {
            self.images.insert(v, p);
        }
    }

    pub fn image(&self, v: Var) -> Polynomial {
        self.images
            .get(&v)
            .cloned()
            .unwrap_or_else(|| Polynomial::var(v))
    }

    pub fn images(&self) -> &BTreeMap<Var, Polynomial> {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        f.substitute(&self.images)
    }

    /// Composition in diagram order: the result maps v to psi(self(v)), i.e.
    /// self's images with psi substituted into them.
    pub fn compose(&self, psi: &PolyEndomorphism) -> PolyEndomorphism {
        let mut out = PolyEndomorphism::identity();
        let mut keys: Vec<Var> = self.images.keys().copied().collect();
        for v in psi.images.keys() {
            if !keys.contains(v) {
                keys.push(*v);
            }
        }
        for v in keys {
            out.set_image(v, psi.apply(&self.image(v)));
        }
        out
    }

    /// Extends x-block images diagonally to the c-block: every declared
    /// x_i -> p adds c_i -> p with x-variables renamed to c-variables.
    pub fn mirror_to_second_block(&self) -> PolyEndomorphism {
        let mut out = self.clone();
        for (v, p) in &self.images {
            if let Var::X(i) = v {
                let renamed: BTreeMap<Var, Polynomial> = p
                    .vars()
                    .into_iter()
                    .filter_map(|w| match w {
                        Var::X(j) => Some((w, Polynomial::c(j))),
                        _ => None,
                    })
                    .collect();
                out.set_image(Var::C(*i), p.substitute(&renamed));
            }
        }
        out
    }
}

/// Inverts exp for a unipotent triangular map: given phi with
/// phi(x_n) = x_n + (linear form in x_0..x_{n-1}) for all n <= bound, returns
/// the derivation D with exp(D) = phi on those variables, via the alternating
/// series D = sum_{i>=1} (-1)^{i+1}/i * E^i with E = phi - id. The series on
/// x_n stops by i = n because E strictly lowers the top index.
pub fn log_endomorphism(phi: &PolyEndomorphism, bound: u32) -> Result<Derivation, Error> {
    for n in 0..=bound {
        let e = &phi.image(Var::X(n)) - &Polynomial::x(n);
        if e.is_zero() {
            continue;
        }
        let linear = e.terms().all(|(m, _)| {
            let vars: Vec<_> = m.vars().collect();
            matches!(vars.as_slice(), [(Var::X(k), 1)] if *k < n)
        });
        if !linear {
            return Err(Error::NotTriangular { index: n });
        }
    }

    let mut images = BTreeMap::new();
    for n in 1..=bound {
        let mut power = &phi.image(Var::X(n)) - &Polynomial::x(n);
        let mut img = Polynomial::zero();
        let mut i: u32 = 1;
        while !power.is_zero() {
            if i > n {
                return Err(Error::NotTriangular { index: n });
            }
            let sign = if i % 2 == 1 { 1 } else { -1 };
            img += &power.scale(&Rat::new(BigInt::from(sign), BigInt::from(i)));
            power = &phi.apply(&power) - &power;
            i += 1;
        }
        images.insert(n, img);
    }
    Derivation::from_images_bounded(images, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn weitzenbock_images() {
        let d = Derivation::basic_weitzenbock();
        assert_eq!(d.image(0).unwrap(), Polynomial::zero());
        assert_eq!(d.image(1).unwrap(), p("x0"));
        assert_eq!(d.image(5).unwrap(), p("5*x4"));
    }

    #[test]
    fn kills_z2() {
        let d = Derivation::basic_weitzenbock();
        assert_eq!(d.apply(&p("x0*x2 - x1^2")).unwrap(), Polynomial::zero());
    }

    #[test]
    fn constants_die() {
        let d = Derivation::shift();
        assert_eq!(d.apply(&p("7/3")).unwrap(), Polynomial::zero());
        assert_eq!(d.apply(&p("mu^2")).unwrap(), Polynomial::zero());
    }

    #[test]
    fn nilpotency_indices() {
        let d = Derivation::basic_weitzenbock();
        assert_eq!(d.nilpotency_index(&p("x3"), 10).unwrap(), 4);
        assert_eq!(d.nilpotency_index(&p("5"), 10).unwrap(), 1);
        assert_eq!(d.nilpotency_index(&Polynomial::zero(), 10).unwrap(), 0);
        let s = Derivation::shift();
        assert_eq!(s.nilpotency_index(&p("x1^2"), 10).unwrap(), 3);
        assert_eq!(
            d.nilpotency_index(&p("x3"), 2),
            Err(Error::NilpotencyCapExceeded { cap: 2 })
        );
    }

    #[test]
    fn exp_of_scaled_weitzenbock() {
        let d = Derivation::scaled_weitzenbock(Polynomial::mu());
        let got = d.exp_apply(&p("x2"), 4).unwrap();
        assert_eq!(got, p("x2 + 2*mu*x1 + mu^2*x0"));
    }

    #[test]
    fn exp_fixes_kernel_variable() {
        let d = Derivation::basic_weitzenbock();
        assert_eq!(d.exp_apply(&p("x0"), 2).unwrap(), p("x0"));
    }

    #[test]
    fn exp_of_shift() {
        let d = Derivation::shift();
        let got = d.exp_apply(&p("x3"), 5).unwrap();
        assert_eq!(got, p("x3 + x2 + 1/2*x1 + 1/6*x0"));
    }

    #[test]
    fn table_bound_is_enforced() {
        let mut images = BTreeMap::new();
        images.insert(1, p("x0"));
        images.insert(2, p("x1 - 1/2*x0"));
        let d = Derivation::from_images(images);
        assert_eq!(d.support_bound(), Some(2));
        assert!(d.apply(&p("x1*x2")).is_ok());
        assert_eq!(
            d.apply(&p("x3")),
            Err(Error::SupportBoundExceeded { index: 3, bound: 2 })
        );
    }

    #[test]
    fn log_of_psum_map() {
        // phi(x_n) = x_0 + ... + x_n
        let phi = PolyEndomorphism::from_x_images((0..=4).map(|n| {
            let mut acc = Polynomial::zero();
            for i in 0..=n {
                acc += &Polynomial::x(i);
            }
            (n, acc)
        }));
        let d = log_endomorphism(&phi, 4).unwrap();
        assert_eq!(d.image(2).unwrap(), p("x1 + 1/2*x0"));
        assert_eq!(d.image(3).unwrap(), p("x2 + 1/2*x1 + 1/3*x0"));
    }

    #[test]
    fn log_of_identity_is_zero() {
        let d = log_endomorphism(&PolyEndomorphism::identity(), 6).unwrap();
        for n in 0..=6 {
            assert_eq!(d.image(n).unwrap(), Polynomial::zero());
        }
    }

    #[test]
    fn log_of_sum_map() {
        // phi(x_n) = x_n + x_{n-1}
        let phi = PolyEndomorphism::from_x_images(
            (1..=4).map(|n| (n, &Polynomial::x(n) + &Polynomial::x(n - 1))),
        );
        let d = log_endomorphism(&phi, 4).unwrap();
        assert_eq!(d.image(3).unwrap(), p("x2 - 1/2*x1 + 1/3*x0"));
    }

    #[test]
    fn log_rejects_non_triangular() {
        let phi = PolyEndomorphism::from_x_images([(1, p("x1 + x2"))]);
        assert!(matches!(
            log_endomorphism(&phi, 2),
            Err(Error::NotTriangular { index: 1 })
        ));
        let quad = PolyEndomorphism::from_x_images([(2, p("x2 + x1^2"))]);
        assert!(matches!(
            log_endomorphism(&quad, 2),
            Err(Error::NotTriangular { index: 2 })
        ));
    }

    #[test]
    fn compose_binomial_maps() {
        let phi = |mu: Rat, bound: u32| {
            Derivation::scaled_weitzenbock(Polynomial::constant(mu))
                .to_endomorphism(bound, bound + 2)
                .unwrap()
        };
        let a = phi(ratio(1, 2), 6);
        let b = phi(ratio(-1, 2), 6);
        assert!(a.compose(&b).is_identity());
        let c = phi(rat(1), 6).compose(&phi(rat(2), 6));
        assert_eq!(c, phi(rat(3), 6));
        let id = PolyEndomorphism::identity();
        assert_eq!(a.compose(&id), a);
    }

    #[test]
    fn compose_is_associative() {
        let phi = PolyEndomorphism::from_x_images([(1, p("x1 + x0")), (2, p("x2 - x1"))]);
        let psi = PolyEndomorphism::from_x_images([(2, p("x2 + 3*x0"))]);
        let chi = PolyEndomorphism::from_x_images([(0, p("2*x0")), (1, p("x1 - x0"))]);
        assert_eq!(
            phi.compose(&psi).compose(&chi),
            phi.compose(&psi.compose(&chi))
        );
    }

    #[test]
    fn leibniz_on_a_product() {
        let d = Derivation::basic_weitzenbock();
        let f = p("x1*x2");
        let g = p("x0 + x3");
        let lhs = d.apply(&(&f * &g)).unwrap();
        let rhs = &(&d.apply(&f).unwrap() * &g) + &(&f * &d.apply(&g).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mirror_to_second_block_renames() {
        let d = Derivation::scaled_weitzenbock(Polynomial::mu());
        let endo = d.to_endomorphism(2, 4).unwrap().mirror_to_second_block();
        assert_eq!(endo.image(Var::C(2)), p("c2 + 2*mu*c1 + mu^2*c0"));
        assert_eq!(endo.image(Var::X(2)), p("x2 + 2*mu*x1 + mu^2*x0"));
    }
}
