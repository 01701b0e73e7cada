//! Exact symbolic machinery for polynomial transformations of integer
//! sequences.
//!
//! The crate provides:
//! - sparse multivariate polynomials over the rationals, with a text grammar,
//!   fraction-free determinants, Sylvester resultants and discriminants
//!   ([`poly`], [`parse`], [`matrix`], [`univariate`], [`linsolve`]);
//! - derivations of the polynomial algebra with the exp/log correspondence
//!   between locally nilpotent derivations and unipotent triangular
//!   automorphisms ([`derivation`]);
//! - kernels of triangular-linear derivations: explicit generators,
//!   catalecticants, intertwining changes of basis, and an indefinite
//!   coefficients search ([`kernel`]);
//! - a catalog of sequence transformations together with symbolic and seeded
//!   numeric invariance checks and the construction/discovery pipelines
//!   ([`transform`]).

pub mod derivation;
pub mod error;
pub mod json;
pub mod kernel;
pub mod linsolve;
pub mod matrix;
pub mod monomial;
pub mod num;
pub mod parse;
pub mod poly;
pub mod transform;
pub mod univariate;

pub use derivation::{log_endomorphism, Derivation, PolyEndomorphism};
pub use error::Error;
pub use kernel::{
    catalecticant, cayley_generator, intertwining_solve, kernel_membership, kernel_presentation,
    problem2_find_derivations, stirling2, DerivationAnsatz, KernelPresentation,
    LinearChangeOfBasis,
};
pub use linsolve::{solve_rational_linear, LinearSolution};
pub use matrix::PolyMatrix;
pub use monomial::{Monomial, Var, MU};
pub use num::{rat, ratio, Rat};
pub use parse::parse_poly;
pub use poly::Polynomial;
pub use transform::{
    alt_convolution_family, apply_transform, binomial_endomorphism, binomial_family, cayley_family,
    check_invariance_numeric, check_invariance_symbolic, d_derivative_of_family,
    derivation_for_target, diff_family, discriminant_family, family_for_spec, hankel_family,
    identity_family, ones_vanishing_check, psum_family, resultant_family, solve_problem1,
    solve_problem2, sum_family, transvectant_diag_family, transvectant_family, Arity, CheckMode,
    InvarianceReport, NumericCheck, OnesReport, Problem1Solution, Problem2Solution, Sequence,
    TransformFamily, Verdict, Witness, DEFAULT_SEED,
};
pub use univariate::UnivariatePoly;
