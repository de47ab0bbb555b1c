//! Sign classification of step profiles and the arithmetic predicates that
//! predict or constrain those signs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::builder::StepProfile;
use crate::error::{Error, Result};
use crate::periods::PeriodSet;

/// Sign pattern of a nonzero profile, after flipping the global sign so the
/// first nonzero value is positive. Exactly one variant applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SignClass {
    StrictlyPositive,
    NonnegativeWithZeros,
    MixedSign,
}

impl SignClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SignClass::StrictlyPositive => "strictly_positive",
            SignClass::NonnegativeWithZeros => "nonnegative_with_zeros",
            SignClass::MixedSign => "mixed_sign",
        }
    }
}

impl std::fmt::Display for SignClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies a raw value sequence. The all-zero sequence is invalid.
pub fn classify_values(values: &[BigInt]) -> Result<SignClass> {
    let first_nonzero = values
        .iter()
        .find(|v| !v.is_zero())
        .ok_or_else(|| Error::BadPrecondition("cannot classify an all-zero profile".into()))?;
    let flip = first_nonzero.is_negative();
    let mut has_zero = false;
    for v in values {
        if v.is_zero() {
            has_zero = true;
        } else if v.is_negative() != flip {
            return Ok(SignClass::MixedSign);
        }
    }
    Ok(if has_zero {
        SignClass::NonnegativeWithZeros
    } else {
        SignClass::StrictlyPositive
    })
}

/// Classifies a step profile up to a global sign flip.
pub fn classify(profile: &StepProfile) -> Result<SignClass> {
    classify_values(profile.values())
}

/// Which clause of the pairwise gcd trichotomy a normalized pair satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcdClause {
    /// 1 < (Tᵢ,Tⱼ) < min(Tᵢ,Tⱼ)
    StrictlyBetween,
    /// (Tᵢ,Tⱼ) = 1
    GcdOne,
    /// (Tᵢ,Tⱼ) = min(Tᵢ,Tⱼ), i.e. one period divides the other
    GcdEqualsMin,
}

impl GcdClause {
    pub fn as_str(&self) -> &'static str {
        match self {
            GcdClause::StrictlyBetween => "strictly_between",
            GcdClause::GcdOne => "gcd_one",
            GcdClause::GcdEqualsMin => "gcd_equals_min",
        }
    }
}

/// The gcd clause satisfied by one pair of normalized periods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCondition {
    pub i: usize,
    pub j: usize,
    /// The two normalized periods, in stored order.
    pub periods: (u64, u64),
    pub gcd: u64,
    pub clause: GcdClause,
}

/// Sign prediction for h₃ with the per-pair evidence: zeros appear exactly
/// when every pairwise gcd of the normalized periods is strictly between 1
/// and the smaller period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H3SignPrediction {
    pub class: SignClass,
    pub pairs: Vec<PairCondition>,
}

/// Predicts the sign class of h₃ from the periods alone. Never returns
/// `MixedSign`.
pub fn predict_h3_sign(t1: u64, t2: u64, t3: u64) -> Result<SignClass> {
    Ok(predict_h3_sign_detailed(t1, t2, t3)?.class)
}

/// As [`predict_h3_sign`], also reporting the clause settled by each pair.
pub fn predict_h3_sign_detailed(t1: u64, t2: u64, t3: u64) -> Result<H3SignPrediction> {
    let pset = PeriodSet::new(&[t1, t2, t3])?;
    let norm = pset.normalized();
    let mut pairs = Vec::with_capacity(3);
    let mut all_strictly_between = true;
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let g = pset.pairwise_gcd(i, j);
        let min = norm[i].min(norm[j]);
        let clause = if g == 1 {
            GcdClause::GcdOne
        } else if g == min {
            GcdClause::GcdEqualsMin
        } else {
            GcdClause::StrictlyBetween
        };
        if clause != GcdClause::StrictlyBetween {
            all_strictly_between = false;
        }
        pairs.push(PairCondition {
            i,
            j,
            periods: (norm[i], norm[j]),
            gcd: g,
            clause,
        });
    }
    let class = if all_strictly_between {
        SignClass::NonnegativeWithZeros
    } else {
        SignClass::StrictlyPositive
    };
    Ok(H3SignPrediction { class, pairs })
}

/// A witness for the four-period nonnegativity hypothesis: two distinct
/// 3-subsets whose gcds equal the gcds of two distinct 2-subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GcdMatchWitness {
    pub triple_a: [usize; 3],
    pub pair_a: [usize; 2],
    pub gcd_a: u64,
    pub triple_b: [usize; 3],
    pub pair_b: [usize; 2],
    pub gcd_b: u64,
}

const TRIPLES: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
const PAIRS: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// Checks the gcd-matching hypothesis on a 4-tuple by brute-force subset
/// enumeration, returning the first witness found. When it holds, h₄ is
/// nonnegative. The two 3-subsets must differ, as must the two 2-subsets.
pub fn gcd_match_hypothesis(periods: &[u64; 4]) -> Result<Option<GcdMatchWitness>> {
    if let Some(pos) = periods.iter().position(|&t| t == 0) {
        return Err(Error::ZeroPeriod(pos));
    }
    let triple_gcd =
        |s: &[usize; 3]| -> u64 { s.iter().fold(0u64, |acc, &i| acc.gcd(&periods[i])) };
    let pair_gcd = |s: &[usize; 2]| -> u64 { periods[s[0]].gcd(&periods[s[1]]) };

    for ta in &TRIPLES {
        for tb in &TRIPLES {
            if ta == tb {
                continue;
            }
            for pa in &PAIRS {
                for pb in &PAIRS {
                    if pa == pb {
                        continue;
                    }
                    let (ga, gb) = (triple_gcd(ta), triple_gcd(tb));
                    if ga == pair_gcd(pa) && gb == pair_gcd(pb) {
                        return Ok(Some(GcdMatchWitness {
                            triple_a: *ta,
                            pair_a: *pa,
                            gcd_a: ga,
                            triple_b: *tb,
                            pair_b: *pb,
                            gcd_b: gb,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// The sign-changing family (abc, abd, acd, bcd) for pairwise coprime
/// 1 < a < b < c < d; its h₄ always takes both signs.
pub fn sign_changing_family(a: u64, b: u64, c: u64, d: u64) -> Result<[u64; 4]> {
    let params = [a, b, c, d];
    if a <= 1 {
        return Err(Error::BadPrecondition(format!(
            "family parameters must exceed 1, got a = {a}"
        )));
    }
    if !(a < b && b < c && c < d) {
        return Err(Error::BadPrecondition(format!(
            "family parameters must be strictly increasing, got ({a}, {b}, {c}, {d})"
        )));
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            let g = params[i].gcd(&params[j]);
            if g != 1 {
                return Err(Error::BadPrecondition(format!(
                    "family parameters must be pairwise coprime; gcd({}, {}) = {g}",
                    params[i], params[j]
                )));
            }
        }
    }
    let prod3 = |x: u64, y: u64, z: u64| -> Result<u64> {
        x.checked_mul(y)
            .and_then(|xy| xy.checked_mul(z))
            .ok_or_else(|| Error::Overflow(format!("{x}*{y}*{z} exceeds u64")))
    };
    Ok([
        prod3(a, b, c)?,
        prod3(a, b, d)?,
        prod3(a, c, d)?,
        prod3(b, c, d)?,
    ])
}

/// True when the profile values read the same reversed.
pub fn is_palindrome(profile: &StepProfile) -> bool {
    is_palindrome_values(profile.values())
}

/// Slice form of [`is_palindrome`].
pub fn is_palindrome_values(values: &[BigInt]) -> bool {
    values.iter().eq(values.iter().rev())
}
