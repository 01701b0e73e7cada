//! Sequence transformations: the catalog, application to concrete sequences,
//! invariance checking, and the kernel-based construction/discovery pipelines.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derivation::{log_endomorphism, Derivation, PolyEndomorphism};
use crate::error::Error;
use crate::kernel::{
    catalecticant, cayley_generator, intertwining_solve, problem2_find_derivations,
    DerivationAnsatz, LinearChangeOfBasis,
};
use crate::monomial::Var;
use crate::num::{binom, rat, Rat};
use crate::poly::Polynomial;
use crate::univariate::UnivariatePoly;

/// Default seed for the sampling checks; override per call or with the CLI.
pub const DEFAULT_SEED: u64 = 1729;

/// Finite prefix a_0..a_m of a sequence, with exact rational terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    terms: Vec<Rat>,
}

impl Sequence {
    pub fn new(terms: Vec<Rat>) -> Result<Self, Error> {
        if terms.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Sequence { terms })
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Sequence {
            terms: values.iter().map(|&v| rat(v)).collect(),
        }
    }

    pub fn terms(&self) -> &[Rat] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Rat> {
        self.terms.get(i)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Number of input sequences a transformation consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    One,
    Two,
}

impl Arity {
    pub fn count(self) -> u8 {
        match self {
            Arity::One => 1,
            Arity::Two => 2,
        }
    }
}

type GenFn = dyn Fn(u32) -> Result<Polynomial, Error> + Send + Sync;

/// Indexed family n -> f_n of polynomials defining a transformation
/// b_n = f_n(a_0, ...). Immutable; generated terms are memoized internally.
#[derive(Clone)]
pub struct TransformFamily {
    name: String,
    arity: Arity,
    start: u32,
    gen: Arc<GenFn>,
    cache: Arc<Mutex<BTreeMap<u32, Polynomial>>>,
}

impl fmt::Debug for TransformFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TransformFamily")
            .field("name", &self.name)
            .field("arity", &self.arity)
            .field("start", &self.start)
            .finish()
    }
}

impl TransformFamily {
    pub fn new<F>(name: impl Into<String>, arity: Arity, start: u32, gen: F) -> Self
    where
        F: Fn(u32) -> Result<Polynomial, Error> + Send + Sync + 'static,
    {
        TransformFamily {
            name: name.into(),
            arity,
            start,
            gen: Arc::new(gen),
            cache: Arc::new(Mutex::new(BTreeMap::new())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> Arity {
        self.arity
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    /// The defining polynomial f_n.
    pub fn poly(&self, n: u32) -> Result<Polynomial, Error> {
        if n < self.start {
            return Err(Error::IndexBelowStart {
                transform: self.name.clone(),
                start: self.start,
                term: n,
            });
        }
        if let Some(p) = self.cache.lock().unwrap().get(&n) {
            return Ok(p.clone());
        }
        let p = (self.gen)(n)?;
        self.cache.lock().unwrap().insert(n, p.clone());
        Ok(p)
    }

    /// Largest x-index f_n mentions (the input prefix it needs).
    pub fn prefix_need(&self, n: u32) -> Result<u32, Error> {
        Ok(self.poly(n)?.max_x_index().unwrap_or(0))
    }
}

/// The mu-binomial transformation b_n = sum C(n,i) a_i mu^(n-i), realized as
/// exp(mu D) for the basic Weitzenbock derivation D. `mu` must be a scalar:
/// a rational constant or a polynomial in the reserved parameters.
pub fn binomial_family(mu: Polynomial) -> Result<TransformFamily, Error> {
    if !mu.vars().iter().all(|v| matches!(v, Var::Param(_))) {
        return Err(Error::InvalidMu);
    }
    let name = format!("binomial:mu={mu}");
    let d = Derivation::scaled_weitzenbock(mu);
    Ok(TransformFamily::new(name, Arity::One, 0, move |n| {
        d.exp_apply(&Polynomial::x(n), n + 2)
    }))
}

/// The endomorphism x_n -> exp(mu D)(x_n) on x_0..x_bound.
pub fn binomial_endomorphism(mu: Polynomial, bound: u32) -> Result<PolyEndomorphism, Error> {
    if !mu.vars().iter().all(|v| matches!(v, Var::Param(_))) {
        return Err(Error::InvalidMu);
    }
    Derivation::scaled_weitzenbock(mu).to_endomorphism(bound, bound + 2)
}

/// Hankel transformation: b_n is the catalecticant h_n of a_0..a_{2n}.
pub fn hankel_family() -> TransformFamily {
    TransformFamily::new("hankel", Arity::One, 0, |n| Ok(catalecticant(n)))
}

/// Partial sums: b_n = a_0 + ... + a_n.
pub fn psum_family() -> TransformFamily {
    TransformFamily::new("psum", Arity::One, 0, |n| {
        let mut acc = Polynomial::zero();
        for i in 0..=n {
            acc += &Polynomial::x(i);
        }
        Ok(acc)
    })
}

/// Two-term sums: b_0 = a_0, b_n = a_n + a_{n-1}.
pub fn sum_family() -> TransformFamily {
    TransformFamily::new("sum", Arity::One, 0, |n| {
        Ok(if n == 0 {
            Polynomial::x(0)
        } else {
            &Polynomial::x(n) + &Polynomial::x(n - 1)
        })
    })
}

/// First differences: b_0 = a_0, b_n = a_n - a_{n-1}.
pub fn diff_family() -> TransformFamily {
    TransformFamily::new("diff", Arity::One, 0, |n| {
        Ok(if n == 0 {
            Polynomial::x(0)
        } else {
            &Polynomial::x(n) - &Polynomial::x(n - 1)
        })
    })
}

/// The identity transformation b_n = a_n.
pub fn identity_family() -> TransformFamily {
    TransformFamily::new("identity", Arity::One, 0, |n| Ok(Polynomial::x(n)))
}

/// Kernel-generator transformation: b_n = z_n(a), defined from n = 2 on.
pub fn cayley_family() -> TransformFamily {
    TransformFamily::new("cayley", Arity::One, 2, cayley_generator)
}

/// Joint transformation b_n = sum (-1)^i C(n,i) a_i c_{n-i} of two sequences.
pub fn transvectant_family() -> TransformFamily {
    TransformFamily::new("transvectant", Arity::Two, 0, |n| {
        let mut acc = Polynomial::zero();
        for i in 0..=n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let c = Rat::from_integer(binom(n, i) * BigInt::from(sign));
            acc += &(&(&Polynomial::x(i) * &Polynomial::c(n - i)) * &c);
        }
        Ok(acc)
    })
}

/// Diagonal case of the transvectant: both inputs are the same sequence.
pub fn transvectant_diag_family() -> TransformFamily {
    TransformFamily::new("transvectant(diag)", Arity::One, 0, |n| {
        let mut acc = Polynomial::zero();
        for i in 0..=n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let c = Rat::from_integer(binom(n, i) * BigInt::from(sign));
            acc += &(&(&Polynomial::x(i) * &Polynomial::x(n - i)) * &c);
        }
        Ok(acc)
    })
}

/// The binary form P_n = sum C(n,i) v_i X^(n-i) over the given variable block.
fn binary_form(n: u32, var: fn(u32) -> Polynomial) -> UnivariatePoly {
    UnivariatePoly::new(
        (0..=n)
            .map(|i| var(i).scale(&Rat::from_integer(binom(n, i))))
            .collect(),
    )
}

/// Resultant transformation: b_n = Res_X(P_n(a), P_n(c)), defined for n >= 1.
pub fn resultant_family() -> TransformFamily {
    TransformFamily::new("resultant", Arity::Two, 1, |n| {
        binary_form(n, Polynomial::x).resultant(&binary_form(n, Polynomial::c))
    })
}

/// Discriminant transformation: b_n = disc of P_{n+2}(a) / (n+2)^(n+2).
pub fn discriminant_family() -> TransformFamily {
    TransformFamily::new("discriminant", Arity::One, 0, |n| {
        let deg = n + 2;
        let scale = Rat::new(BigInt::from(1), BigInt::from(deg).pow(deg));
        let p = UnivariatePoly::new(
            (0..=deg)
                .map(|i| Polynomial::x(i).scale(&(&Rat::from_integer(binom(deg, i)) * &scale)))
                .collect(),
        );
        p.discriminant()
    })
}

/// Alternating convolution: b_n = sum_{i=0}^{2n} (-1)^i a_i a_{2n-i}.
pub fn alt_convolution_family() -> TransformFamily {
    TransformFamily::new("altconv", Arity::One, 0, |n| {
        let mut acc = Polynomial::zero();
        for i in 0..=2 * n {
            let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
            acc += &(&(&Polynomial::x(i) * &Polynomial::x(2 * n - i)) * &sign);
        }
        Ok(acc)
    })
}

/// Applies the family to input prefixes, producing terms
/// f_start .. f_{start+count-1} reindexed from 0.
pub fn apply_transform(
    family: &TransformFamily,
    inputs: &[&Sequence],
    count: u32,
) -> Result<Sequence, Error> {
    if inputs.len() != family.arity.count() as usize {
        return Err(Error::ArityMismatch {
            transform: family.name.clone(),
            expected: family.arity.count(),
            got: inputs.len() as u8,
        });
    }
    if count == 0 {
        return Err(Error::EmptyCount);
    }
    let a = inputs[0];
    let c = inputs.get(1).copied();
    let mut out = Vec::with_capacity(count as usize);
    for n in family.start..family.start + count {
        let f = family.poly(n)?;
        let need_x = f.max_x_index().map(|m| m as usize + 1).unwrap_or(0);
        if a.len() < need_x {
            return Err(Error::InsufficientPrefix {
                transform: family.name.clone(),
                term: n,
                required: need_x,
                got: a.len(),
            });
        }
        if let Some(mc) = f.max_c_index() {
            let need_c = mc as usize + 1;
            let got = c.map(Sequence::len).unwrap_or(0);
            if got < need_c {
                return Err(Error::InsufficientPrefix {
                    transform: family.name.clone(),
                    term: n,
                    required: need_c,
                    got,
                });
            }
        }
        let value = f.eval(|v| match v {
            Var::X(i) => a.get(i as usize).cloned(),
            Var::C(i) => c.and_then(|s| s.get(i as usize).cloned()),
            Var::Param(_) => None,
        })?;
        out.push(value);
    }
    Sequence::new(out)
}

/// The D-derivative of a family: n -> D(f_n).
pub fn d_derivative_of_family(
    d: &Derivation,
    family: &TransformFamily,
) -> Result<TransformFamily, Error> {
    if family.arity != Arity::One {
        return Err(Error::ArityMismatch {
            transform: family.name.clone(),
            expected: 1,
            got: family.arity.count(),
        });
    }
    let base = family.clone();
    let d = d.clone();
    Ok(TransformFamily::new(
        format!("D({})", family.name),
        Arity::One,
        family.start,
        move |n| d.apply(&base.poly(n)?),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Symbolic,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Invariant,
    NotInvariant,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub enum Witness {
    /// Nonzero residual D(f_n) in a symbolic check.
    Residual { term: u32, residual: Polynomial },
    /// Sample sequence on which the two sides first differ.
    Sample {
        sample: u32,
        input: Sequence,
        second: Option<Sequence>,
        differs_at: u32,
    },
}

#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub mode: CheckMode,
    pub verdict: Verdict,
    pub checked_upto: u32,
    pub samples: Option<u32>,
    pub witnesses: Vec<Witness>,
    pub note: Option<String>,
}

/// Symbolic invariance: the family is invariant under exp(D) iff every
/// D(f_n) vanishes. Conclusive only for the checked indices n <= upto.
pub fn check_invariance_symbolic(
    d: &Derivation,
    family: &TransformFamily,
    upto: u32,
) -> InvarianceReport {
    let mut report = InvarianceReport {
        mode: CheckMode::Symbolic,
        verdict: Verdict::Invariant,
        checked_upto: upto,
        samples: None,
        witnesses: Vec::new(),
        note: None,
    };
    if family.arity != Arity::One {
        report.verdict = Verdict::Inconclusive;
        report.note = Some("symbolic check needs an arity-1 family".to_string());
        return report;
    }
    for n in family.start..=upto {
        match family.poly(n).and_then(|f| d.apply(&f)) {
            Ok(residual) if residual.is_zero() => {}
            Ok(residual) => {
                report.verdict = Verdict::NotInvariant;
                report
                    .witnesses
                    .push(Witness::Residual { term: n, residual });
            }
            Err(e) => {
                report.verdict = Verdict::Inconclusive;
                report.note = Some(format!("term {n}: {e}"));
                return report;
            }
        }
    }
    report
}

/// Configuration of the seeded numeric invariance check.
#[derive(Clone, Copy, Debug)]
pub struct NumericCheck {
    pub samples: u32,
    pub upto: u32,
    pub seed: u64,
    pub low: i64,
    pub high: i64,
}

impl Default for NumericCheck {
    fn default() -> Self {
        NumericCheck {
            samples: 50,
            upto: 6,
            seed: DEFAULT_SEED,
            low: -9,
            high: 9,
        }
    }
}

/// Numeric invariance: draws integer sequences and compares
/// candidate(target(A)) with candidate(A) exactly, term by term. Each sample
/// derives its own stream from the master seed, so results are independent of
/// evaluation order.
pub fn check_invariance_numeric(
    target: &TransformFamily,
    candidate: &TransformFamily,
    cfg: &NumericCheck,
) -> Result<InvarianceReport, Error> {
    if target.arity != Arity::One {
        return Err(Error::ArityMismatch {
            transform: target.name.clone(),
            expected: 1,
            got: target.arity.count(),
        });
    }
    let upto = cfg.upto.max(candidate.start);
    let count = upto - candidate.start + 1;

    // input prefix lengths the candidate needs, per block
    let mut need_x = 1usize;
    let mut need_c = 0usize;
    for n in candidate.start..=upto {
        let f = candidate.poly(n)?;
        if let Some(m) = f.max_x_index() {
            need_x = need_x.max(m as usize + 1);
        }
        if let Some(m) = f.max_c_index() {
            need_c = need_c.max(m as usize + 1);
        }
    }
    // terms of target output consumed, and the input length that takes
    let target_need = |count_needed: usize| -> Result<usize, Error> {
        let mut need = count_needed;
        for m in target.start..target.start + count_needed as u32 {
            need = need.max(
                target
                    .poly(m)?
                    .max_x_index()
                    .map(|i| i as usize + 1)
                    .unwrap_or(0),
            );
        }
        Ok(need)
    };
    let len_a = need_x.max(target_need(need_x)?);
    let len_c = if candidate.arity == Arity::Two {
        need_c.max(target_need(need_c.max(1))?)
    } else {
        0
    };

    let mut report = InvarianceReport {
        mode: CheckMode::Numeric,
        verdict: Verdict::Invariant,
        checked_upto: upto,
        samples: Some(cfg.samples),
        witnesses: Vec::new(),
        note: None,
    };

    for sample in 0..cfg.samples {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(sample as u64);
        let draw = |rng: &mut ChaCha8Rng, len: usize| {
            Sequence::new(
                (0..len)
                    .map(|_| rat(rng.random_range(cfg.low..=cfg.high)))
                    .collect(),
            )
            .expect("positive length")
        };
        let a = draw(&mut rng, len_a);
        let c = (candidate.arity == Arity::Two).then(|| draw(&mut rng, len_c));

        let transformed_a = apply_transform(target, &[&a], need_x as u32)?;
        let transformed_c = match &c {
            Some(cs) => Some(apply_transform(target, &[cs], need_c.max(1) as u32)?),
            None => None,
        };

        let originals: Vec<&Sequence> = match &c {
            Some(cs) => vec![&a, cs],
            None => vec![&a],
        };
        let transformed: Vec<&Sequence> = match &transformed_c {
            Some(cs) => vec![&transformed_a, cs],
            None => vec![&transformed_a],
        };

        let rhs = apply_transform(candidate, &originals, count)?;
        let lhs = apply_transform(candidate, &transformed, count)?;
        if let Some(pos) = (0..count as usize).find(|&i| lhs.terms()[i] != rhs.terms()[i]) {
            report.verdict = Verdict::NotInvariant;
            report.witnesses.push(Witness::Sample {
                sample,
                input: a,
                second: c,
                differs_at: candidate.start + pos as u32,
            });
            break;
        }
    }
    Ok(report)
}

/// Output of the invariant-construction pipeline for a triangular
/// transformation F: the derivation with exp(D) = F, the intertwining change
/// of basis, and F-invariant families built from the kernel generators.
#[derive(Clone, Debug)]
pub struct Problem1Solution {
    pub derivation: Derivation,
    pub intertwiner: LinearChangeOfBasis,
    pub families: Vec<TransformFamily>,
}

pub fn solve_problem1(family: &TransformFamily, bound: u32) -> Result<Problem1Solution, Error> {
    if family.arity != Arity::One {
        return Err(Error::ArityMismatch {
            transform: family.name.clone(),
            expected: 1,
            got: family.arity.count(),
        });
    }
    let mut images = Vec::with_capacity(bound as usize + 1);
    for n in 0..=bound {
        images.push((n, family.poly(n)?));
    }
    let phi = PolyEndomorphism::from_x_images(images);
    let derivation = log_endomorphism(&phi, bound)?;
    // the zero derivation (identity transformation) fixes everything; no
    // intertwiner exists for it, and none is needed
    let is_zero_map = derivation
        .table_images()
        .map(BTreeMap::is_empty)
        .unwrap_or(false);
    let intertwiner = if is_zero_map {
        LinearChangeOfBasis::identity(bound)
    } else {
        intertwining_solve(&derivation, bound)?
    };

    let psi_x0 = {
        let psi = intertwiner.clone();
        TransformFamily::new("psi_x0", Arity::One, 0, move |_| psi.image(0))
    };
    let psi_cayley = {
        let psi = intertwiner.clone();
        TransformFamily::new("psi_cayley", Arity::One, 2, move |n| {
            psi.push_through(&cayley_generator(n)?)
        })
    };
    let psi_hankel = {
        let psi = intertwiner.clone();
        TransformFamily::new("psi_hankel", Arity::One, 0, move |n| {
            psi.push_through(&catalecticant(n))
        })
    };

    Ok(Problem1Solution {
        derivation,
        intertwiner,
        families: vec![psi_x0, psi_cayley, psi_hankel],
    })
}

/// One derivation annihilating the family, paired with its exponential.
#[derive(Clone, Debug)]
pub struct Problem2Solution {
    pub derivation: Derivation,
    pub automorphism: PolyEndomorphism,
}

/// Searches the triangular-linear ansatz for derivations D with
/// D(g_n) = 0 for all start <= n <= upto; each solution gives the
/// transformation exp(D) under which the family is invariant.
pub fn solve_problem2(
    family: &TransformFamily,
    upto: u32,
    ansatz_bound: Option<u32>,
) -> Result<Vec<Problem2Solution>, Error> {
    if family.arity != Arity::One {
        return Err(Error::ArityMismatch {
            transform: family.name.clone(),
            expected: 1,
            got: family.arity.count(),
        });
    }
    let mut polys = Vec::new();
    for n in family.start..=upto.max(family.start) {
        polys.push(family.poly(n)?);
    }
    let bound = match ansatz_bound {
        Some(b) => b,
        None => polys
            .iter()
            .filter_map(Polynomial::max_x_index)
            .max()
            .unwrap_or(0),
    };
    let ansatz = DerivationAnsatz::new(bound);
    let basis = problem2_find_derivations(&polys, &ansatz)?;
    basis
        .into_iter()
        .map(|derivation| {
            let automorphism = derivation.to_endomorphism(bound, bound + 2)?;
            Ok(Problem2Solution {
                derivation,
                automorphism,
            })
        })
        .collect()
}

/// Values of g_n at the all-ones sequence; a diagnostic, not a pass/fail.
#[derive(Clone, Debug)]
pub struct OnesReport {
    pub entries: Vec<(u32, Rat)>,
}

impl OnesReport {
    pub fn all_vanish(&self) -> bool {
        use num_traits::Zero;
        self.entries.iter().all(|(_, v)| v.is_zero())
    }
}

pub fn ones_vanishing_check(family: &TransformFamily, upto: u32) -> Result<OnesReport, Error> {
    if family.arity != Arity::One {
        return Err(Error::ArityMismatch {
            transform: family.name.clone(),
            expected: 1,
            got: family.arity.count(),
        });
    }
    let mut entries = Vec::new();
    for n in family.start..=upto.max(family.start) {
        let value = family.poly(n)?.eval(|v| match v {
            Var::X(_) | Var::C(_) => Some(rat(1)),
            Var::Param(_) => None,
        })?;
        entries.push((n, value));
    }
    Ok(OnesReport { entries })
}

/// Splits "name:key=value,..." into the name and its parameters.
fn parse_spec(spec: &str) -> Result<(&str, BTreeMap<&str, &str>), Error> {
    let mut params = BTreeMap::new();
    let (name, rest) = match spec.split_once(':') {
        Some((n, r)) => (n, Some(r)),
        None => (spec, None),
    };
    if name.is_empty() {
        return Err(Error::BadTransformSpec(spec.to_string()));
    }
    if let Some(rest) = rest {
        for pair in rest.split(',') {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::BadTransformSpec(spec.to_string()))?;
            if k.is_empty() || v.is_empty() {
                return Err(Error::BadTransformSpec(spec.to_string()));
            }
            params.insert(k, v);
        }
    }
    Ok((name, params))
}

fn parse_mu(params: &BTreeMap<&str, &str>) -> Result<Polynomial, Error> {
    match params.get("mu") {
        None => Ok(Polynomial::mu()),
        Some(text) => {
            let p = crate::parse::parse_poly(text).map_err(|_| Error::InvalidMu)?;
            if p.vars().iter().all(|v| matches!(v, Var::Param(_))) {
                Ok(p)
            } else {
                Err(Error::InvalidMu)
            }
        }
    }
}

/// Resolves a CLI-stable transform spec ("hankel", "binomial:mu=1/2", ...)
/// into a family.
pub fn family_for_spec(spec: &str) -> Result<TransformFamily, Error> {
    let (name, params) = parse_spec(spec)?;
    let expect_no_params = |fam: TransformFamily| {
        if params.is_empty() {
            Ok(fam)
        } else {
            Err(Error::BadTransformSpec(spec.to_string()))
        }
    };
    match name {
        "binomial" => binomial_family(parse_mu(&params)?),
        "hankel" => expect_no_params(hankel_family()),
        "psum" => expect_no_params(psum_family()),
        "sum" => expect_no_params(sum_family()),
        "diff" => expect_no_params(diff_family()),
        "cayley" => expect_no_params(cayley_family()),
        "transvectant" => expect_no_params(transvectant_family()),
        "resultant" => expect_no_params(resultant_family()),
        "discriminant" => expect_no_params(discriminant_family()),
        "altconv" => expect_no_params(alt_convolution_family()),
        "identity" => expect_no_params(identity_family()),
        _ => Err(Error::UnknownTransform(name.to_string())),
    }
}

/// The derivation whose exponential realizes the named transformation, for
/// symbolic invariance checks: mu*D for the binomial, the series log for the
/// triangular transforms, zero for the identity.
pub fn derivation_for_target(spec: &str, bound: u32) -> Result<Derivation, Error> {
    let (name, params) = parse_spec(spec)?;
    match name {
        "binomial" => Ok(Derivation::scaled_weitzenbock(parse_mu(&params)?)),
        "identity" => Ok(Derivation::zero(bound)),
        _ => {
            let family = family_for_spec(spec)?;
            let mut images = Vec::new();
            for n in 0..=bound {
                images.push((n, family.poly(n)?));
            }
            log_endomorphism(&PolyEndomorphism::from_x_images(images), bound)
        }
    }
}
