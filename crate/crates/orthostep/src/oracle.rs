//! Independent brute-force verification.
//!
//! A unit-step profile of length L is orthogonal to every zero-mean function
//! of integer period t exactly when its residue-class sums mod t all agree.
//! That turns orthogonality into an exact linear system over the step values:
//! S_r − S_0 = 0 for r = 1…t−1 and every period t. This module solves those
//! systems with exact arithmetic only: a fast full-rank certificate modulo a
//! prime (a nonzero minor mod p is nonzero over the rationals) to skip
//! lengths with no solution, and exact rational elimination everywhere a
//! solution is claimed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::builder::StepProfile;
use crate::error::{Error, Result};
use crate::periods::PeriodSet;
use crate::poly::residue_class_sums;

/// Residue-class sums of a profile against one period, with the pass flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodCheck {
    /// The period in original units.
    pub period: u64,
    /// The modulus actually used on the step values (period / step width).
    pub modulus: u64,
    pub sums: Vec<BigInt>,
    pub pass: bool,
}

/// Per-period residue-class verification of one profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoReport {
    pub period_checks: Vec<PeriodCheck>,
    pub pass: bool,
}

/// A nontrivial solution found by the length scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSolution {
    /// First length (in profile-step units) admitting a nontrivial solution.
    pub minimal_length: u64,
    /// Nullspace dimension at that length.
    pub dimension: u64,
    /// An integer-scaled basis vector with positive leading entry.
    pub profile: Vec<BigInt>,
}

/// Outcome of [`minimal_orthogonal`]: either the first admissible length or
/// an explicit not-found result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleSearch {
    Found(OracleSolution),
    NotFoundBelow { l_max: u64 },
}

/// Sums the values over residue classes mod `modulus` and flags whether they
/// all agree.
pub fn check_period(values: &[BigInt], period: u64, modulus: u64) -> PeriodCheck {
    let sums = residue_class_sums(values, modulus);
    let pass = sums.windows(2).all(|w| w[0] == w[1]);
    PeriodCheck {
        period,
        modulus,
        sums,
        pass,
    }
}

/// Checks a built profile against every one of its periods.
pub fn verify_orthogonality(profile: &StepProfile) -> OrthoReport {
    let width = profile.step_width();
    let period_checks: Vec<PeriodCheck> = profile
        .periods()
        .periods()
        .iter()
        .map(|&t| check_period(profile.values(), t, t / width))
        .collect();
    let pass = period_checks.iter().all(|c| c.pass);
    OrthoReport {
        period_checks,
        pass,
    }
}

/// Constraint rows for length `l`: one row per period t and residue r in
/// 1..t, with +1 on the class of r, −1 on the class of 0.
fn constraint_rows(normalized: &[u64], l: usize) -> Vec<Vec<i64>> {
    let mut rows = Vec::new();
    for &t in normalized {
        let t = t as usize;
        for r in 1..t {
            let mut row = vec![0i64; l];
            for (k, entry) in row.iter_mut().enumerate() {
                if k % t == r {
                    *entry += 1;
                } else if k % t == 0 {
                    *entry -= 1;
                }
            }
            rows.push(row);
        }
    }
    rows
}

const RANK_PRIME: u64 = 2_147_483_647; // 2^31 − 1

/// Rank of the rows over F_p. Always a lower bound for the rational rank, so
/// full column rank here certifies a trivial nullspace exactly.
fn rank_mod_p(rows: &[Vec<i64>], cols: usize) -> usize {
    let p = RANK_PRIME;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| row.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col], p);
        for v in &mut m[rank][col..cols] {
            *v = *v * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (v, pv) in row[col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                *v = (*v + (p - f) * pv % p) % p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p−2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Reduced row echelon form over the rationals; returns the pivot columns.
fn rational_rref(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(pivot) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        let inv = m[row][col].clone();
        for v in &mut m[row][col..cols] {
            *v = &*v / &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (v, pv) in other[col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                *v = &*v - &(pv * &f);
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    pivot_cols
}

/// Clears denominators, divides out the content and makes the first nonzero
/// entry positive.
pub fn canonical_profile(values: &[BigRational]) -> Vec<BigInt> {
    let lcm = values
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for v in &mut ints {
            *v = &*v / &content;
        }
    }
    if ints
        .iter()
        .find(|v| !v.is_zero())
        .is_some_and(Signed::is_negative)
    {
        for v in &mut ints {
            *v = -&*v;
        }
    }
    ints
}

/// Canonical form of an integer profile: content 1, first nonzero entry
/// positive. Two profiles are positive-scalar multiples of each other exactly
/// when their canonical forms are equal.
pub fn canonical_integer_profile(values: &[BigInt]) -> Vec<BigInt> {
    let rationals: Vec<BigRational> = values
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    canonical_profile(&rationals)
}

/// Exact nullspace dimension at length `l`, plus a canonical basis vector for
/// the first free column when the dimension is positive.
fn exact_nullspace(normalized: &[u64], l: usize) -> (usize, Option<Vec<BigInt>>) {
    let rows = constraint_rows(normalized, l);
    if rows.is_empty() {
        let mut basis = vec![BigInt::zero(); l];
        basis[0] = BigInt::one();
        return (l, Some(basis));
    }
    if rank_mod_p(&rows, l) == l {
        return (0, None);
    }
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    let pivot_cols = rational_rref(&mut m, l);
    let dimension = l - pivot_cols.len();
    if dimension == 0 {
        return (0, None);
    }
    let free_col = (0..l)
        .find(|c| !pivot_cols.contains(c))
        .expect("a positive-dimensional nullspace has a free column");
    let mut vector = vec![BigRational::zero(); l];
    vector[free_col] = BigRational::one();
    for (i, &pc) in pivot_cols.iter().enumerate() {
        let v = -&m[i][free_col];
        vector[pc] = v;
    }
    (dimension, Some(canonical_profile(&vector)))
}

/// Exact dimension of the solution space at length `l` (in normalized units).
pub fn nullspace_dimension(pset: &PeriodSet, l: u64) -> usize {
    exact_nullspace(pset.normalized(), l as usize).0
}

/// Exact dimension plus a canonical basis vector at a fixed length.
pub fn nullspace_vector(pset: &PeriodSet, l: u64) -> (usize, Option<Vec<BigInt>>) {
    exact_nullspace(pset.normalized(), l as usize)
}

/// Scans lengths 1…l_max (normalized units) for the first nontrivial
/// solution. Length increments by one on purpose: minimality is part of what
/// is being verified.
pub fn minimal_orthogonal(pset: &PeriodSet, l_max: u64) -> Result<OracleSearch> {
    let max_period = *pset
        .normalized()
        .iter()
        .max()
        .expect("period set is never empty");
    if l_max < max_period {
        return Err(Error::BadPrecondition(format!(
            "search bound {l_max} is below the largest normalized period {max_period}"
        )));
    }
    for l in 1..=l_max {
        let (dimension, basis) = exact_nullspace(pset.normalized(), l as usize);
        if dimension > 0 {
            return Ok(OracleSearch::Found(OracleSolution {
                minimal_length: l,
                dimension: dimension as u64,
                profile: basis.expect("positive dimension always carries a basis vector"),
            }));
        }
    }
    Ok(OracleSearch::NotFoundBelow { l_max })
}

/// True when the two integer profiles are equal up to a positive rational
/// scalar.
pub fn profiles_agree_up_to_scalar(a: &[BigInt], b: &[BigInt]) -> bool {
    a.len() == b.len() && canonical_integer_profile(a) == canonical_integer_profile(b)
}
