//! Period-tuple arithmetic: gcd caches, normalization by the common gcd,
//! critical lengths and the (p, q, r) decomposition of a distinguished period.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Greatest common divisor of a nonempty list of positive integers.
pub fn gcd_all(values: &[u64]) -> Result<u64> {
    if values.is_empty() {
        return Err(Error::EmptyPeriods);
    }
    if let Some(pos) = values.iter().position(|&v| v == 0) {
        return Err(Error::ZeroPeriod(pos));
    }
    Ok(values.iter().fold(0u64, |acc, &v| acc.gcd(&v)))
}

/// A tuple of one to four positive integer periods together with its gcd
/// caches and critical length.
///
/// The periods are kept in user order; `normalized` holds the periods divided
/// by their common gcd `scale`, so that the normalized tuple always has total
/// gcd 1. The gcd caches and the critical length are stated in normalized
/// units; multiply by `scale` to return to original units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodSet {
    periods: Vec<u64>,
    scale: u64,
    normalized: Vec<u64>,
    pairwise_gcds: BTreeMap<(usize, usize), u64>,
    triple_gcds: BTreeMap<(usize, usize, usize), u64>,
    critical_length: u64,
}

impl PeriodSet {
    /// Normalizes a period tuple: divides by the common gcd, fills the gcd
    /// caches and computes the critical length.
    ///
    /// The critical length is obtained from the closed two- and three-period
    /// formulas; for four periods it is the support length of the product
    /// construction, computed by actually building the profile polynomial.
    pub fn new(periods: &[u64]) -> Result<Self> {
        if periods.is_empty() {
            return Err(Error::UnsupportedArity(0));
        }
        if periods.len() > 4 {
            return Err(Error::UnsupportedArity(periods.len()));
        }
        let scale = gcd_all(periods)?;
        let normalized: Vec<u64> = periods.iter().map(|&t| t / scale).collect();
        let n = normalized.len();

        let mut pairwise_gcds = BTreeMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                pairwise_gcds.insert((i, j), normalized[i].gcd(&normalized[j]));
            }
        }
        let mut triple_gcds = BTreeMap::new();
        if n == 4 {
            for i in 0..n {
                for j in (i + 1)..n {
                    for k in (j + 1)..n {
                        let g = normalized[i].gcd(&normalized[j]).gcd(&normalized[k]);
                        triple_gcds.insert((i, j, k), g);
                    }
                }
            }
        }

        let critical_length = match n {
            1 => normalized[0],
            2 => normalized[0] + normalized[1] - pairwise_gcds[&(0, 1)],
            3 => critical_length_3(normalized[0], normalized[1], normalized[2]),
            4 => {
                let values = crate::builder::product_profile_values(&normalized)?;
                values.len() as u64
            }
            _ => unreachable!(),
        };

        Ok(PeriodSet {
            periods: periods.to_vec(),
            scale,
            normalized,
            pairwise_gcds,
            triple_gcds,
            critical_length,
        })
    }

    pub fn arity(&self) -> usize {
        self.periods.len()
    }

    /// Periods in original units, in user order.
    pub fn periods(&self) -> &[u64] {
        &self.periods
    }

    /// Common gcd of the original periods.
    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// Periods divided by `scale`; their total gcd is 1.
    pub fn normalized(&self) -> &[u64] {
        &self.normalized
    }

    /// gcd of the i-th and j-th normalized periods.
    pub fn pairwise_gcd(&self, i: usize, j: usize) -> u64 {
        let key = if i < j { (i, j) } else { (j, i) };
        self.pairwise_gcds[&key]
    }

    /// gcd of three normalized periods; only populated for four-period sets.
    pub fn triple_gcd(&self, i: usize, j: usize, k: usize) -> u64 {
        let mut idx = [i, j, k];
        idx.sort_unstable();
        self.triple_gcds[&(idx[0], idx[1], idx[2])]
    }

    /// Critical length in normalized units.
    pub fn critical_length(&self) -> u64 {
        self.critical_length
    }

    /// Critical length in original units.
    pub fn original_critical_length(&self) -> u64 {
        self.critical_length * self.scale
    }

    /// Recovers the original periods from the normalized ones (round-trip).
    pub fn rescaled(&self) -> Vec<u64> {
        self.normalized.iter().map(|&t| t * self.scale).collect()
    }
}

/// Critical length of a normalized triple:
/// T₁+T₂+T₃ − (T₁,T₂) − (T₂,T₃) − (T₁,T₃) + 1.
pub fn critical_length_3(t1: u64, t2: u64, t3: u64) -> u64 {
    debug_assert_eq!(t1.gcd(&t2).gcd(&t3), 1, "triple must be normalized");
    let sum = t1 as u128 + t2 as u128 + t3 as u128;
    let gcds = t1.gcd(&t2) as u128 + t2.gcd(&t3) as u128 + t1.gcd(&t3) as u128;
    (sum - gcds + 1) as u64
}

/// The arithmetic data of a normalized triple relative to a distinguished
/// period playing the T₃ rôle: q = (T₁,T₃), r = (T₂,T₃), T₃ = p·q·r,
/// T₁ = α·q and T₂ = β·r, with (q,r) = (α,pr) = (β,pq) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PqrDecomposition {
    distinguished_index: usize,
    p: u64,
    q: u64,
    r: u64,
    alpha: u64,
    beta: u64,
}

impl PqrDecomposition {
    /// Builds a decomposition from bare (p, q, r) with (q,r) = 1. This is the
    /// decomposition of the triple (q, r, pqr), with α = β = 1; it carries
    /// exactly the data the coefficient constructions need.
    pub fn from_pqr(p: u64, q: u64, r: u64) -> Result<Self> {
        if p == 0 || q == 0 || r == 0 {
            return Err(Error::BadPrecondition("p, q, r must be positive".into()));
        }
        if q.gcd(&r) != 1 {
            return Err(Error::BadPrecondition(format!(
                "q = {q} and r = {r} must be coprime"
            )));
        }
        Ok(PqrDecomposition {
            distinguished_index: 2,
            p,
            q,
            r,
            alpha: 1,
            beta: 1,
        })
    }

    pub fn distinguished_index(&self) -> usize {
        self.distinguished_index
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    /// The distinguished period, p·q·r.
    pub fn pqr(&self) -> u64 {
        self.p * self.q * self.r
    }

    /// Index of the last coefficient of the associated sequence:
    /// p·q·r − q − r + 1. Never negative: pqr ≥ qr ≥ q + r − 1.
    pub fn last_index(&self) -> u64 {
        self.pqr() + 1 - self.q - self.r
    }
}

/// Decomposes a normalized triple with respect to a distinguished period.
///
/// The distinguished period takes the T₃ rôle; the remaining two keep their
/// stored order as T₁ and T₂. The coprimality relations
/// (q,r) = (α,pr) = (β,pq) = 1 are re-checked on every construction;
/// a failure is a bug, not bad input.
pub fn pqr_decompose(pset: &PeriodSet, distinguished_index: usize) -> Result<PqrDecomposition> {
    if pset.arity() != 3 {
        return Err(Error::BadPrecondition(format!(
            "pqr decomposition needs exactly 3 periods, got {}",
            pset.arity()
        )));
    }
    if distinguished_index >= 3 {
        return Err(Error::BadPrecondition(format!(
            "distinguished index {distinguished_index} out of range 0..3"
        )));
    }
    let norm = pset.normalized();
    let t3 = norm[distinguished_index];
    let rest: Vec<u64> = (0..3)
        .filter(|&i| i != distinguished_index)
        .map(|i| norm[i])
        .collect();
    let (t1, t2) = (rest[0], rest[1]);

    let q = t1.gcd(&t3);
    let r = t2.gcd(&t3);
    if q.gcd(&r) != 1 || !t3.is_multiple_of(q * r) {
        return Err(Error::Internal(format!(
            "pqr decomposition of ({t1},{t2},{t3}) broke the coprimality of q={q}, r={r}"
        )));
    }
    let p = t3 / (q * r);
    let alpha = t1 / q;
    let beta = t2 / r;
    if alpha.gcd(&(p * r)) != 1 || beta.gcd(&(p * q)) != 1 {
        return Err(Error::Internal(format!(
            "pqr invariants failed for ({t1},{t2},{t3}): p={p}, q={q}, r={r}, α={alpha}, β={beta}"
        )));
    }
    Ok(PqrDecomposition {
        distinguished_index,
        p,
        q,
        r,
        alpha,
        beta,
    })
}
