//! Constructs the orthogonal step functions h₁…h₄ as exact integer step
//! profiles.
//!
//! Two routes are implemented. The product route forms the symmetric quotient
//! over all subset gcds of the normalized periods
//! (odd-size subsets above the bar, even-size ones below), which makes
//! permutation invariance structural. The convolution route builds h₂ as a
//! sum of shifted copies of h₁ and then h₃ (and h₄) by convolving with an
//! explicit coefficient sequence; for three periods the coefficients come
//! from a closed form driven by representation counts, independently of any
//! polynomial division. The two routes agreeing on every input is one of the
//! main things the test suite checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::periods::{pqr_decompose, PeriodSet, PqrDecomposition};
use crate::poly::{product_quotient, IntPolynomial};

/// An orthogonal function as a finite step profile: `values[j]` is the
/// constant on the j-th interval of width `step_width` (original units).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepProfile {
    step_width: u64,
    values: Vec<BigInt>,
    periods: PeriodSet,
}

impl StepProfile {
    fn new(step_width: u64, values: Vec<BigInt>, periods: PeriodSet) -> Result<Self> {
        match (values.first(), values.last()) {
            (Some(first), Some(last)) if !first.is_zero() && !last.is_zero() => {}
            _ => {
                return Err(Error::Internal(
                    "step profile must start and end with a nonzero value".into(),
                ))
            }
        }
        for &t in periods.periods() {
            if t % step_width != 0 {
                return Err(Error::Internal(format!(
                    "step width {step_width} does not divide period {t}"
                )));
            }
        }
        Ok(StepProfile {
            step_width,
            values,
            periods,
        })
    }

    /// Builds a profile from values in normalized units, one step per
    /// normalized unit; the step width is the period set's scale.
    pub fn from_values(periods: PeriodSet, values: Vec<BigInt>) -> Result<Self> {
        StepProfile::new(periods.scale(), values, periods)
    }

    /// Width of each constant interval, in original units.
    pub fn step_width(&self) -> u64 {
        self.step_width
    }

    /// The interval constants c₀ … c_{T−1}.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn periods(&self) -> &PeriodSet {
        &self.periods
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Support length in original units.
    pub fn original_length(&self) -> u64 {
        self.values.len() as u64 * self.step_width
    }

    /// The profile re-expanded to unit-width steps, i.e. the function itself
    /// sampled on integer intervals. Two profiles describe the same function
    /// exactly when their unit expansions agree.
    pub fn unit_values(&self) -> Vec<BigInt> {
        let w = self.step_width as usize;
        let mut out = Vec::with_capacity(self.values.len() * w);
        for v in &self.values {
            for _ in 0..w {
                out.push(v.clone());
            }
        }
        out
    }

    /// The profile viewed as the polynomial Σ c_k x^k.
    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.values.clone())
    }
}

/// The coefficient sequence a₀ … a_{pqr−q−r+1} mediating between h₂ and h₃.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSequence {
    a: Vec<BigInt>,
    decomposition: PqrDecomposition,
}

impl CoeffSequence {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.a
    }

    pub fn decomposition(&self) -> &PqrDecomposition {
        &self.decomposition
    }

    pub fn as_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.a.clone())
    }
}

/// One run of a run-length encoded profile: `run` consecutive steps of height
/// `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub value: u64,
    pub run: u64,
}

fn checked_len(len: u128) -> Result<usize> {
    // An absurdly long profile is a resource error, not an arithmetic one.
    const MAX_STEPS: u128 = 1 << 26;
    if len > MAX_STEPS {
        return Err(Error::ProfileTooLarge(len));
    }
    Ok(len as usize)
}

/// Exponents (1−x^e) of the symmetric product form for normalized periods:
/// gcds of odd-size subsets go to the numerator, even-size subsets (with the
/// empty set contributing exponent 1) to the denominator.
fn subset_gcd_exponents(normalized: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let n = normalized.len();
    let mut numerator = Vec::new();
    let mut denominator = vec![1u64];
    for mask in 1u32..(1 << n) {
        let g = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .fold(0u64, |acc, i| acc.gcd(&normalized[i]));
        if mask.count_ones() % 2 == 1 {
            numerator.push(g);
        } else {
            denominator.push(g);
        }
    }
    (numerator, denominator)
}

/// The step values of hₙ on the normalized periods, by the symmetric product
/// form. Exact division failures are surfaced: on valid input they indicate a
/// bug, never bad data.
pub(crate) fn product_profile_values(normalized: &[u64]) -> Result<Vec<BigInt>> {
    let (num, den) = subset_gcd_exponents(normalized);
    let total: u128 = num.iter().map(|&e| e as u128).sum();
    checked_len(total)?;
    let poly = product_quotient(&num, &den)?;
    Ok(poly.coeffs().to_vec())
}

fn profile_from_product(periods: &[u64]) -> Result<StepProfile> {
    let pset = PeriodSet::new(periods)?;
    let values = product_profile_values(pset.normalized())?;
    if values.len() as u64 != pset.critical_length() {
        return Err(Error::Internal(format!(
            "profile length {} disagrees with critical length {}",
            values.len(),
            pset.critical_length()
        )));
    }
    let width = pset.scale();
    StepProfile::new(width, values, pset)
}

/// h₁: the characteristic function of [0, T₁), as T₁ unit steps.
pub fn build_h1(t1: u64) -> Result<StepProfile> {
    if t1 == 0 {
        return Err(Error::ZeroPeriod(0));
    }
    let len = checked_len(t1 as u128)?;
    let pset = PeriodSet::new(&[t1])?;
    StepProfile::new(1, vec![BigInt::one(); len], pset)
}

/// h₂ for two positive periods (unnormalized accepted); strictly positive on
/// its whole support.
pub fn build_h2(t1: u64, t2: u64) -> Result<StepProfile> {
    profile_from_product(&[t1, t2])
}

/// h₃ for three positive periods; nonnegative on its whole support.
pub fn build_h3(t1: u64, t2: u64, t3: u64) -> Result<StepProfile> {
    profile_from_product(&[t1, t2, t3])
}

/// h₄ for four positive periods; may take both signs.
pub fn build_h4(t1: u64, t2: u64, t3: u64, t4: u64) -> Result<StepProfile> {
    profile_from_product(&[t1, t2, t3, t4])
}

/// Builds hₙ for 1 ≤ n ≤ 4 by the product route.
pub fn build(periods: &[u64]) -> Result<StepProfile> {
    match periods {
        [] => Err(Error::UnsupportedArity(0)),
        [t1] => build_h1(*t1),
        [t1, t2] => build_h2(*t1, *t2),
        [t1, t2, t3] => build_h3(*t1, *t2, *t3),
        [t1, t2, t3, t4] => build_h4(*t1, *t2, *t3, *t4),
        more => Err(Error::UnsupportedArity(more.len())),
    }
}

/// The coefficients of Q(x) = (1−x)(1−x^{pqr}) / ((1−x^q)(1−x^r)), by exact
/// polynomial division.
pub fn coeff_by_division(dec: &PqrDecomposition) -> Result<CoeffSequence> {
    let q = product_quotient(&[1, dec.pqr()], &[dec.q(), dec.r()])?;
    let expected = dec.last_index() + 1;
    if q.coeffs().len() as u64 != expected {
        return Err(Error::Internal(format!(
            "quotient has {} coefficients, expected {expected}",
            q.coeffs().len()
        )));
    }
    Ok(CoeffSequence {
        a: q.coeffs().to_vec(),
        decomposition: *dec,
    })
}

/// Number of ways to write k as lq + mr with nonnegative integers l, m.
/// Direct enumeration; desk-scale inputs make anything cleverer pointless.
fn representation_count(k: i64, q: u64, r: u64) -> i64 {
    if k < 0 {
        return 0;
    }
    let (k, q, r) = (k as u64, q, r);
    let mut count = 0;
    for m in 0..=(k / r) {
        if (k - m * r) % q == 0 {
            count += 1;
        }
    }
    count
}

/// The same coefficient sequence from its closed form, with no polynomial
/// division anywhere: for q = 1 (or r = 1) the sequence is the truncation of
/// 1, 0^{r−1}, 1, 0^{r−1}, …; otherwise a_j = N(j) − N(j−1) where N counts
/// the representations j = lq + mr over nonnegative l, m.
pub fn coeff_closed_form(dec: &PqrDecomposition) -> CoeffSequence {
    let (q, r) = (dec.q(), dec.r());
    let len = (dec.last_index() + 1) as usize;
    let a: Vec<BigInt> = if q == 1 || r == 1 {
        let step = if q == 1 { r } else { q };
        (0..len as u64)
            .map(|j| {
                if j % step == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect()
    } else {
        (0..len as i64)
            .map(|j| {
                BigInt::from(representation_count(j, q, r) - representation_count(j - 1, q, r))
            })
            .collect()
    };
    CoeffSequence {
        a,
        decomposition: *dec,
    }
}

fn chain_h2_polynomial(t1: u64, t2: u64) -> IntPolynomial {
    // Sum of T₂/d copies of h₁ = 1^{T₁}, shifted by multiples of d = (T₁,T₂).
    let d = t1.gcd(&t2) as usize;
    let (t1, t2) = (t1 as usize, t2 as usize);
    let shifts = t2 / d;
    let mut acc = vec![BigInt::zero(); t1 + (shifts - 1) * d];
    for j in 0..shifts {
        for k in 0..t1 {
            acc[j * d + k] += 1;
        }
    }
    IntPolynomial::from_coeffs(acc)
}

/// Builds hₙ by the convolution route: h₂ as shifted copies of h₁, h₃ as the
/// closed-form coefficient sequence convolved with h₂, and h₄ as the extra
/// quotient factor convolved with h₃.
pub fn build_by_convolution(periods: &[u64]) -> Result<StepProfile> {
    let pset = PeriodSet::new(periods)?;
    let norm = pset.normalized();
    let poly = match norm {
        [t1] => IntPolynomial::from_coeffs(vec![BigInt::one(); checked_len(*t1 as u128)?]),
        [t1, t2] => chain_h2_polynomial(*t1, *t2),
        [_, _, _] => chain_h3_polynomial(&pset)?,
        [t1, t2, t3, t4] => {
            let inner = build_by_convolution(&[*t1, *t2, *t3])?;
            let h3_unit = IntPolynomial::from_coeffs(inner.unit_values());
            let q4 = product_quotient(
                &[
                    *t4,
                    pset.triple_gcd(0, 1, 3),
                    pset.triple_gcd(0, 2, 3),
                    pset.triple_gcd(1, 2, 3),
                ],
                &[
                    pset.pairwise_gcd(0, 3),
                    pset.pairwise_gcd(1, 3),
                    pset.pairwise_gcd(2, 3),
                    1,
                ],
            )?;
            q4.mul(&h3_unit)
        }
        _ => return Err(Error::UnsupportedArity(norm.len())),
    };
    let width = pset.scale();
    StepProfile::new(width, poly.coeffs().to_vec(), pset)
}

fn chain_h3_polynomial(pset: &PeriodSet) -> Result<IntPolynomial> {
    let dec = pqr_decompose(pset, 2)?;
    let a = coeff_closed_form(&dec);
    let norm = pset.normalized();
    let h2 = chain_h2_polynomial(norm[0], norm[1]);
    Ok(a.as_polynomial().mul(&h2))
}

/// Run-length form of h₂ in unit steps, valid under (T₁,T₂) < T₂ < T₁:
/// 1^d 2^d … (m−1)^d m^{T₁−T₂+d} (m−1)^d … 1^d with d = (T₁,T₂), m = T₂/d.
pub fn h2_block_profile(t1: u64, t2: u64) -> Result<Vec<Block>> {
    if t1 == 0 {
        return Err(Error::ZeroPeriod(0));
    }
    if t2 == 0 {
        return Err(Error::ZeroPeriod(1));
    }
    let d = t1.gcd(&t2);
    if t2 >= t1 {
        return Err(Error::BadPrecondition(format!(
            "block profile needs T2 < T1, got T2 = {t2} >= T1 = {t1}"
        )));
    }
    if d >= t2 {
        return Err(Error::BadPrecondition(format!(
            "block profile needs (T1,T2) < T2, got (T1,T2) = {d} = T2 = {t2}"
        )));
    }
    let m = t2 / d;
    let mut blocks = Vec::with_capacity(2 * m as usize - 1);
    for v in 1..m {
        blocks.push(Block { value: v, run: d });
    }
    blocks.push(Block {
        value: m,
        run: t1 - t2 + d,
    });
    for v in (1..m).rev() {
        blocks.push(Block { value: v, run: d });
    }
    Ok(blocks)
}

/// Expands a run-length encoding into a plain value sequence.
pub fn expand_blocks(blocks: &[Block]) -> Vec<BigInt> {
    let mut out = Vec::new();
    for b in blocks {
        for _ in 0..b.run {
            out.push(BigInt::from(b.value));
        }
    }
    out
}
