//! Exact-arithmetic construction, classification and verification of
//! orthogonal step functions for tuples of positive integer periods.
//!
//! For periods T₁…Tₙ (n ≤ 4), the sums of zero-mean locally square-summable
//! periodic functions span a subspace whose orthogonal complement on the
//! critical interval is one step function hₙ, determined up to a positive
//! scalar and constant on intervals of width gcd(T₁,…,Tₙ). This crate builds
//! hₙ three independent ways (a symmetric product of geometric quotients, a
//! convolution chain with closed-form coefficient sequences, and a
//! brute-force exact nullspace search), classifies its sign pattern, and
//! checks every construction against the residue-class-sum orthogonality
//! criterion. All arithmetic is exact; no floating point appears anywhere.

pub mod builder;
pub mod classify;
pub mod error;
pub mod oracle;
pub mod periods;
pub mod poly;
pub mod strategy;

pub use builder::{
    build, build_by_convolution, build_h1, build_h2, build_h3, build_h4, coeff_by_division,
    coeff_closed_form, expand_blocks, h2_block_profile, Block, CoeffSequence, StepProfile,
};
pub use classify::{
    classify, classify_values, gcd_match_hypothesis, is_palindrome, is_palindrome_values,
    predict_h3_sign, predict_h3_sign_detailed, sign_changing_family, GcdClause, GcdMatchWitness,
    H3SignPrediction, PairCondition, SignClass,
};
pub use error::{Error, Result};
pub use oracle::{
    canonical_integer_profile, check_period, minimal_orthogonal, nullspace_dimension,
    nullspace_vector, profiles_agree_up_to_scalar, verify_orthogonality, OracleSearch,
    OracleSolution, OrthoReport, PeriodCheck,
};
pub use periods::{critical_length_3, gcd_all, pqr_decompose, PeriodSet, PqrDecomposition};
pub use poly::IntPolynomial;
pub use strategy::{
    ConvolutionChain, NullspaceOracle, ProductFormula, ProfileStrategy, StrategyRegistry,
};
