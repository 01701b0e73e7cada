//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Run with `cargo test -p invar-core --test acceptance -- --nocapture`.

mod common;

use invar_core::{
    alt_convolution_family, binomial_endomorphism, binomial_family, catalecticant, cayley_family,
    cayley_generator, check_invariance_numeric, check_invariance_symbolic, derivation_for_target,
    discriminant_family, hankel_family, intertwining_solve, kernel_presentation, num::binom,
    ones_vanishing_check, parse_poly, psum_family, rat, ratio, resultant_family, solve_problem2,
    stirling2, Derivation, DerivationAnsatz, LinearSolution, Monomial, NumericCheck, Polynomial,
    Rat, TransformFamily, Var, Verdict,
};
use num_bigint::BigInt;
use rand::Rng;

fn run_labeled(label: String, check: impl FnOnce() -> Result<(), String>) {
    let outcome = check();
    match &outcome {
        Ok(()) => println!("{label}: PASS"),
        Err(msg) => println!("{label}: FAIL ({msg})"),
    }
    if let Err(msg) = outcome {
        panic!("{label} failed: {msg}");
    }
}

fn run(number: u32, name: &str, check: impl FnOnce() -> Result<(), String>) {
    run_labeled(format!("criterion {number:02} {name}"), check);
}

fn run_extra(name: &str, check: impl FnOnce() -> Result<(), String>) {
    run_labeled(format!("supplementary {name}"), check);
}

fn expect(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

#[test]
fn criterion_01_catalecticant_kernel() {
    run(1, "catalecticant-kernel", || {
        let d = Derivation::basic_weitzenbock();
        for n in 0..=4 {
            let residual = d.apply(&catalecticant(n)).map_err(|e| e.to_string())?;
            expect(residual.is_zero(), format!("D(h_{n}) = {residual}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_02_binomial_exponential_form() {
    run(2, "binomial-exponential-form", || {
        let d = Derivation::scaled_weitzenbock(Polynomial::mu());
        for n in 0..=8u32 {
            let got = d
                .exp_apply(&Polynomial::x(n), n + 2)
                .map_err(|e| e.to_string())?;
            // independent route: sum_i C(n,i) mu^i x_{n-i}
            let expected = Polynomial::from_terms((0..=n).map(|i| {
                (
                    Monomial::from_pairs([(Var::Param(0), i), (Var::X(n - i), 1)]),
                    Rat::from_integer(binom(n, i)),
                )
            }));
            expect(got == expected, format!("exp(mu*D)(x{n}) = {got}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_03_hankel_binomial_invariance() {
    run(3, "hankel-binomial-invariance", || {
        // (a) symbolic mu: substituting the binomial map into h_n fixes it
        let phi = binomial_endomorphism(Polynomial::mu(), 6).map_err(|e| e.to_string())?;
        for n in 0..=3 {
            let h = catalecticant(n);
            let image = phi.apply(&h);
            expect(image == h, format!("phi_mu(h_{n}) != h_{n}"))?;
        }
        // (b) numeric over 100 seeded sequences for each mu
        let hankel = hankel_family();
        for mu in [rat(1), rat(-1), rat(2), ratio(1, 2)] {
            let target =
                binomial_family(Polynomial::constant(mu.clone())).map_err(|e| e.to_string())?;
            let cfg = NumericCheck {
                samples: 100,
                upto: 4,
                ..Default::default()
            };
            let report =
                check_invariance_numeric(&target, &hankel, &cfg).map_err(|e| e.to_string())?;
            expect(
                report.verdict == Verdict::Invariant,
                format!("numeric failure at mu = {mu}"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_04_psum_pipeline() {
    run(4, "psum-pipeline", || {
        let d = derivation_for_target("psum", 8).map_err(|e| e.to_string())?;
        // D(x_n) = sum_{k<n} x_k/(n-k)
        for n in 1..=8u32 {
            let expected = Polynomial::from_terms((0..n).map(|k| {
                (
                    Monomial::var(Var::X(k)),
                    Rat::new(BigInt::from(1), BigInt::from(n - k)),
                )
            }));
            let got = d.image(n).map_err(|e| e.to_string())?;
            expect(got == expected, format!("D(x{n}) = {got}"))?;
        }
        // c_{n,k} = (-1)^(n+k) k! S(n,k)
        let psi = intertwining_solve(&d, 8).map_err(|e| e.to_string())?;
        for n in 0..=8u32 {
            for k in 0..=n {
                let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
                let expected = Rat::from_integer(
                    BigInt::from(sign) * invar_core::num::factorial(k) * stirling2(n, k),
                );
                expect(
                    psi.coeff(n, k) == expected,
                    format!("c({n},{k}) = {}", psi.coeff(n, k)),
                )?;
            }
        }
        // pushed catalecticants match the printed polynomials
        let h1 = psi
            .push_through(&catalecticant(1))
            .map_err(|e| e.to_string())?;
        let expected_h1 = parse_poly("-a1^2 - a1*a0 + 2*a2*a0").unwrap();
        expect(h1 == expected_h1, format!("psi(h_1) = {h1}"))?;

        let h2 = psi
            .push_through(&catalecticant(2))
            .map_err(|e| e.to_string())?;
        let expected_h2 = parse_poly(
            "-4*a1*a2*a0 + 24*a1*a2*a3 + 24*a0*a1*a3 + 48*a0*a2*a4 - 8*a2^3 - 8*a0*a2^2 \
             - 12*a1*a2^2 - 36*a0*a3^2 - 4*a1^2*a2 - 24*a1^2*a4 + 24*a1^2*a3 - 24*a0*a1*a4",
        )
        .unwrap();
        expect(h2 == expected_h2, format!("psi(h_2) = {h2}"))?;

        // the pushed Hankel family is invariant under the psum derivation
        let pushed = TransformFamily::new("psi_hankel", invar_core::Arity::One, 0, move |n| {
            psi.push_through(&catalecticant(n))
        });
        let report = check_invariance_symbolic(&d, &pushed, 2);
        expect(
            report.verdict == Verdict::Invariant,
            format!("symbolic verdict {:?}", report.verdict),
        )
    });
}

#[test]
fn criterion_05_sum_diff_tables() {
    run(5, "sum-diff-intertwiners", || {
        let d_sum = derivation_for_target("sum", 8).map_err(|e| e.to_string())?;
        let psi_sum = intertwining_solve(&d_sum, 8).map_err(|e| e.to_string())?;
        let d_diff = derivation_for_target("diff", 8).map_err(|e| e.to_string())?;
        let psi_diff = intertwining_solve(&d_diff, 8).map_err(|e| e.to_string())?;
        for n in 0..=8u32 {
            for i in 0..=n {
                let base = Rat::from_integer(invar_core::num::factorial(i) * stirling2(n, i));
                expect(
                    psi_sum.coeff(n, i) == base,
                    format!("sum c({n},{i}) = {}", psi_sum.coeff(n, i)),
                )?;
                let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
                expect(
                    psi_diff.coeff(n, i) == &base * &sign,
                    format!("diff c({n},{i}) = {}", psi_diff.coeff(n, i)),
                )?;
            }
        }
        let pushed = TransformFamily::new("psi_hankel", invar_core::Arity::One, 0, move |n| {
            psi_sum.push_through(&catalecticant(n))
        });
        let report = check_invariance_symbolic(&d_sum, &pushed, 2);
        expect(
            report.verdict == Verdict::Invariant,
            format!("symbolic verdict {:?}", report.verdict),
        )
    });
}

#[test]
fn criterion_06_transvectant_invariance() {
    run(6, "transvectant-invariance", || {
        let phi = binomial_endomorphism(Polynomial::mu(), 6)
            .map_err(|e| e.to_string())?
            .mirror_to_second_block();
        for n in 0..=6u32 {
            let tr = invar_core::transvectant_family()
                .poly(n)
                .map_err(|e| e.to_string())?;
            let image = phi.apply(&tr);
            expect(image == tr, format!("Tr_{n} moved under phi_mu"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_07_cayley_family() {
    run(7, "cayley-family", || {
        let d = Derivation::basic_weitzenbock();
        let fam = cayley_family();
        for n in 2..=6 {
            let f = fam.poly(n).map_err(|e| e.to_string())?;
            let residual = d.apply(&f).map_err(|e| e.to_string())?;
            expect(residual.is_zero(), format!("D(b_{n}) = {residual}"))?;
        }
        let ones = ones_vanishing_check(&fam, 6).map_err(|e| e.to_string())?;
        expect(ones.all_vanish(), "cayley at the all-ones sequence")
    });
}

#[test]
fn criterion_08_resultant_discriminant_numeric() {
    run(8, "resultant-discriminant-numeric", || {
        let resultant = resultant_family();
        let discriminant = discriminant_family();
        for mu in [rat(1), rat(-1), rat(2)] {
            let target =
                binomial_family(Polynomial::constant(mu.clone())).map_err(|e| e.to_string())?;
            // form degrees <= 4: resultant terms n = 1..4, discriminant n = 0..2
            let cfg = NumericCheck {
                samples: 50,
                upto: 4,
                ..Default::default()
            };
            let report =
                check_invariance_numeric(&target, &resultant, &cfg).map_err(|e| e.to_string())?;
            expect(
                report.verdict == Verdict::Invariant,
                format!("resultant at mu = {mu}"),
            )?;
            let cfg = NumericCheck {
                samples: 50,
                upto: 2,
                ..Default::default()
            };
            let report = check_invariance_numeric(&target, &discriminant, &cfg)
                .map_err(|e| e.to_string())?;
            expect(
                report.verdict == Verdict::Invariant,
                format!("discriminant at mu = {mu}"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_09_alternating_convolution_pipeline() {
    run(9, "alternating-convolution-pipeline", || {
        let shift = Derivation::shift();
        let fam = alt_convolution_family();
        for n in 0..=5 {
            let f = fam.poly(n).map_err(|e| e.to_string())?;
            let residual = shift.apply(&f).map_err(|e| e.to_string())?;
            expect(residual.is_zero(), format!("shift residual at n = {n}"))?;
        }

        let sols = solve_problem2(&fam, 3, Some(6)).map_err(|e| e.to_string())?;
        expect(!sols.is_empty(), "empty solution basis")?;

        // the shift derivation lies in the span of the returned basis
        let ansatz = DerivationAnsatz::new(6);
        let unknowns = ansatz.unknowns();
        let coords = |d: &Derivation| -> Vec<Rat> {
            unknowns
                .iter()
                .map(|&(n, k)| {
                    d.linear_coeffs(n)
                        .unwrap()
                        .into_iter()
                        .find(|(i, _)| *i == k)
                        .map(|(_, c)| c)
                        .unwrap_or_else(|| rat(0))
                })
                .collect()
        };
        let shift_table = Derivation::from_images_bounded(
            (1..=6).map(|n| (n, Polynomial::x(n - 1))).collect(),
            6,
        )
        .unwrap();
        let rhs = coords(&shift_table);
        let cols: Vec<Vec<Rat>> = sols.iter().map(|s| coords(&s.derivation)).collect();
        let rows: Vec<Vec<Rat>> = (0..unknowns.len())
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        match invar_core::solve_rational_linear(&rows, &rhs).map_err(|e| e.to_string())? {
            LinearSolution::Solved { .. } => {}
            LinearSolution::Inconsistent => return Err("shift not in span".to_string()),
        }

        // exp(shift)(x_n) = sum_k x_{n-k}/k!
        for n in 0..=6u32 {
            let got = shift
                .exp_apply(&Polynomial::x(n), n + 2)
                .map_err(|e| e.to_string())?;
            let expected = Polynomial::from_terms((0..=n).map(|k| {
                (
                    Monomial::var(Var::X(n - k)),
                    Rat::new(BigInt::from(1), invar_core::num::factorial(k)),
                )
            }));
            expect(got == expected, format!("exp(shift)(x{n}) = {got}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_10_binomial_group_laws() {
    run(10, "binomial-group-laws", || {
        let mu1 = Polynomial::var(Var::Param(1));
        let mu2 = Polynomial::var(Var::Param(2));
        let phi1 = binomial_endomorphism(mu1.clone(), 8).map_err(|e| e.to_string())?;
        let phi2 = binomial_endomorphism(mu2.clone(), 8).map_err(|e| e.to_string())?;
        let phi_sum = binomial_endomorphism(&mu1 + &mu2, 8).map_err(|e| e.to_string())?;
        let composed = phi1.compose(&phi2);
        for n in 0..=8 {
            expect(
                composed.image(Var::X(n)) == phi_sum.image(Var::X(n)),
                format!("composition law fails at x{n}"),
            )?;
        }
        let phi = binomial_endomorphism(Polynomial::mu(), 8).map_err(|e| e.to_string())?;
        let phi_inv = binomial_endomorphism(-&Polynomial::mu(), 8).map_err(|e| e.to_string())?;
        expect(phi.compose(&phi_inv).is_identity(), "B_mu o B_-mu != id")?;
        expect(phi_inv.compose(&phi).is_identity(), "B_-mu o B_mu != id")
    });
}

#[test]
fn criterion_11_oracle_equivalence() {
    run(11, "oracle-equivalence", || {
        // Bareiss vs cofactor expansion on 20 random 4x4 matrices
        let mut rng = common::rng(0xACCE);
        for case in 0..20 {
            let m = common::random_matrix(&mut rng, 4);
            let bareiss = m.determinant().map_err(|e| e.to_string())?;
            let cofactor = common::cofactor_det(&m);
            expect(bareiss == cofactor, format!("determinant case {case}"))?;
        }
        // parse . print = id on 100 random polynomials
        for case in 0..100 {
            let f = common::random_poly(&mut rng, 6, 4, 6);
            let back = parse_poly(&f.to_string()).map_err(|e| e.to_string())?;
            expect(back == f, format!("round-trip case {case}"))?;
        }
        // ring axioms, 200 random triples
        for case in 0..200 {
            let f = common::random_poly(&mut rng, 6, 4, 4);
            let g = common::random_poly(&mut rng, 6, 4, 4);
            let h = common::random_poly(&mut rng, 6, 4, 4);
            expect(&f + &g == &g + &f, format!("add comm case {case}"))?;
            expect(&f * &g == &g * &f, format!("mul comm case {case}"))?;
            expect(
                &(&f + &g) + &h == &f + &(&g + &h),
                format!("add assoc case {case}"),
            )?;
            expect(
                &(&f * &g) * &h == &f * &(&g * &h),
                format!("mul assoc case {case}"),
            )?;
            expect(
                &f * &(&g + &h) == &(&f * &g) + &(&f * &h),
                format!("distributivity case {case}"),
            )?;
        }
        // Leibniz, 200 random cases
        for case in 0..200 {
            let d = common::random_triangular_linear(&mut rng, 6, false);
            let f = common::random_poly(&mut rng, 6, 3, 4);
            let g = common::random_poly(&mut rng, 6, 3, 4);
            let lhs = d.apply(&(&f * &g)).map_err(|e| e.to_string())?;
            let rhs = &(&d.apply(&f).unwrap() * &g) + &(&f * &d.apply(&g).unwrap());
            expect(lhs == rhs, format!("leibniz case {case}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_12_exponential_fix_equivalence() {
    run(12, "exponential-fix-equivalence", || {
        let mut rng = common::rng(0xF1E0);
        for round in 0..50 {
            let d = common::random_triangular_linear(&mut rng, 6, true);
            let f = common::random_poly(&mut rng, 6, 3, 4);
            let cap = (f.x_weight() as u32).max(1) + 1;
            let in_kernel = d.apply(&f).map_err(|e| e.to_string())?.is_zero();
            let fixed = d.exp_apply(&f, cap).map_err(|e| e.to_string())? == f;
            expect(
                in_kernel == fixed,
                format!("equivalence fails on random poly, round {round}"),
            )?;
            // a constructed kernel element exercises the fixed-point direction
            let k = rng.random_range(2..=4u32);
            let pres = kernel_presentation(&d, 6).map_err(|e| e.to_string())?;
            let g = &pres.generators[(k - 1) as usize].1;
            expect(
                d.apply(g).map_err(|e| e.to_string())?.is_zero(),
                format!("kernel element not annihilated, round {round}"),
            )?;
            let cap_g = (g.x_weight() as u32).max(1) + 1;
            expect(
                &d.exp_apply(g, cap_g).map_err(|e| e.to_string())? == g,
                format!("kernel element not fixed, round {round}"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_extra_psum_families_numeric_recheck() {
    // families emitted by the construction pipeline, re-checked numerically:
    // psi(F-kernel generators) applied after F equals the same applied before
    run_extra("problem1-numeric-recheck", || {
        let sol = invar_core::solve_problem1(&psum_family(), 6).map_err(|e| e.to_string())?;
        let cfg = NumericCheck {
            samples: 20,
            upto: 3,
            ..Default::default()
        };
        for family in &sol.families {
            let report = check_invariance_numeric(&psum_family(), family, &cfg)
                .map_err(|e| e.to_string())?;
            expect(
                report.verdict == Verdict::Invariant,
                format!("family {} not numerically invariant", family.name()),
            )?;
        }
        // and symbolically under the derivation
        for family in &sol.families {
            let upto = if family.name() == "psi_hankel" { 3 } else { 6 };
            let report = check_invariance_symbolic(&sol.derivation, family, upto);
            expect(
                report.verdict == Verdict::Invariant,
                format!("family {} not symbolically invariant", family.name()),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_extra_cayley_generators_in_kernel() {
    run_extra("cayley-generators-kernel", || {
        let d = Derivation::basic_weitzenbock();
        for k in 2..=8 {
            let z = cayley_generator(k).map_err(|e| e.to_string())?;
            let residual = d.apply(&z).map_err(|e| e.to_string())?;
            expect(residual.is_zero(), format!("D(z_{k}) = {residual}"))?;
        }
        Ok(())
    });
}
