//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! Every expected value is exact; profile comparisons allow at most a
//! positive scalar, nothing else.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use orthostep::{
    build_h2, build_h3, build_h4, classify, coeff_by_division, coeff_closed_form, expand_blocks,
    h2_block_profile, is_palindrome, minimal_orthogonal, predict_h3_sign,
    profiles_agree_up_to_scalar, sign_changing_family, verify_orthogonality, IntPolynomial,
    OracleSearch, PeriodSet, PqrDecomposition, SignClass,
};

fn ints(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn criterion(
    number: usize,
    name: &str,
    budget: Duration,
    check: impl FnOnce() -> Result<(), String>,
) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    match &outcome {
        Ok(()) if elapsed <= budget => {
            println!("acceptance {number} ({name}): PASS in {elapsed:.2?}");
        }
        Ok(()) => {
            println!(
                "acceptance {number} ({name}): FAIL: exceeded {budget:.0?} budget ({elapsed:.2?})"
            );
            panic!("criterion {number} exceeded its {budget:?} budget: {elapsed:?}");
        }
        Err(msg) => {
            println!("acceptance {number} ({name}): FAIL: {msg}");
            panic!("criterion {number} failed: {msg}");
        }
    }
}

/// Sorted tuples with entries in min..=bound, skipping any tuple whose
/// scaled-down primitive form is itself enumerated.
fn deduped_tuples(arity: usize, min: u64, bound: u64) -> Vec<Vec<u64>> {
    fn rec(arity: usize, lo: u64, bound: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == arity {
            let g = prefix.iter().fold(0u64, |acc, &v| acc.gcd(&v));
            let least = *prefix.first().unwrap();
            if g == 1 || least / g < lo.max(1) {
                out.push(prefix.clone());
            }
            return;
        }
        let start = prefix.last().copied().unwrap_or(lo);
        for v in start..=bound {
            prefix.push(v);
            rec(arity, lo, bound, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(arity, min, bound, &mut Vec::new(), &mut out);
    out
}

const GOLDEN_35_21_15: [i64; 57] = [
    1, 0, 0, 1, 0, 1, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 2, 3, 2, 3, 3, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
    3, 3, 3, 2, 3, 3, 2, 3, 2, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1, 0, 1, 0, 0, 1,
];

#[test]
fn criterion_1_golden_triple() {
    criterion(
        1,
        "golden example (35,21,15)",
        Duration::from_secs(1),
        || {
            let h3 = build_h3(35, 21, 15).map_err(|e| e.to_string())?;
            let expected = ints(&GOLDEN_35_21_15);
            if h3.values() != &expected[..] {
                return Err(format!("profile differs: {:?}", h3.values()));
            }
            if !is_palindrome(&h3) {
                return Err("profile is not palindromic".into());
            }
            let class = classify(&h3).map_err(|e| e.to_string())?;
            if class != SignClass::NonnegativeWithZeros {
                return Err(format!("classified as {class}"));
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_2_recomputed_examples() {
    criterion(2, "recomputed examples", Duration::from_secs(5), || {
        for (periods, expected_len) in [([26u64, 24, 9], 54u64), ([4, 8, 13], 20)] {
            let [t1, t2, t3] = periods;
            let h3 = build_h3(t1, t2, t3).map_err(|e| e.to_string())?;
            if h3.periods().critical_length() != expected_len || h3.len() as u64 != expected_len {
                return Err(format!(
                    "{periods:?}: length {} instead of {expected_len}",
                    h3.len()
                ));
            }
            let class = classify(&h3).map_err(|e| e.to_string())?;
            if class != SignClass::StrictlyPositive {
                return Err(format!("{periods:?}: classified as {class}"));
            }
            let pset = PeriodSet::new(&periods).map_err(|e| e.to_string())?;
            let l_max = pset.normalized().iter().sum();
            let OracleSearch::Found(sol) =
                minimal_orthogonal(&pset, l_max).map_err(|e| e.to_string())?
            else {
                return Err(format!("{periods:?}: oracle found nothing below {l_max}"));
            };
            if sol.minimal_length != expected_len {
                return Err(format!(
                    "{periods:?}: oracle minimal length {}",
                    sol.minimal_length
                ));
            }
            if !profiles_agree_up_to_scalar(&sol.profile, h3.values()) {
                return Err(format!(
                    "{periods:?}: oracle profile {:?} disagrees with builder {:?}",
                    sol.profile,
                    h3.values()
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_3_sign_trichotomy_exhaustive() {
    criterion(
        3,
        "sign trichotomy, bound 15",
        Duration::from_secs(120),
        || {
            for tuple in deduped_tuples(3, 2, 15) {
                let [t1, t2, t3] = [tuple[0], tuple[1], tuple[2]];
                let built = build_h3(t1, t2, t3).map_err(|e| e.to_string())?;
                let computed = classify(&built).map_err(|e| e.to_string())?;
                let predicted = predict_h3_sign(t1, t2, t3).map_err(|e| e.to_string())?;
                if computed == SignClass::MixedSign {
                    return Err(format!("{tuple:?}: h3 came out mixed-sign"));
                }
                if computed != predicted {
                    return Err(format!(
                        "{tuple:?}: predicted {predicted}, computed {computed}"
                    ));
                }
            }
            // Oracle cross-check on the smaller bound.
            for tuple in deduped_tuples(3, 2, 12) {
                let [t1, t2, t3] = [tuple[0], tuple[1], tuple[2]];
                let built = build_h3(t1, t2, t3).map_err(|e| e.to_string())?;
                let pset = built.periods();
                let OracleSearch::Found(sol) =
                    minimal_orthogonal(pset, pset.normalized().iter().sum())
                        .map_err(|e| e.to_string())?
                else {
                    return Err(format!("{tuple:?}: oracle found nothing"));
                };
                if !profiles_agree_up_to_scalar(&sol.profile, built.values()) {
                    return Err(format!("{tuple:?}: oracle and builder profiles differ"));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_4_coefficient_routes() {
    criterion(
        4,
        "coefficient routes, p,q,r <= 12",
        Duration::from_secs(30),
        || {
            for p in 1..=12u64 {
                for q in 1..=12u64 {
                    for r in 1..=12u64 {
                        if q.gcd(&r) != 1 {
                            continue;
                        }
                        let dec = PqrDecomposition::from_pqr(p, q, r).map_err(|e| e.to_string())?;
                        let by_division = coeff_by_division(&dec).map_err(|e| e.to_string())?;
                        let closed = coeff_closed_form(&dec);
                        if by_division.coeffs() != closed.coeffs() {
                            return Err(format!("(p,q,r)=({p},{q},{r}): routes disagree"));
                        }
                        // (1−x^q)(1−x^r)·Q = (1−x)(1−x^{pqr}) exactly.
                        let lhs = IntPolynomial::one_minus_x_pow(q)
                            .mul(&IntPolynomial::one_minus_x_pow(r))
                            .mul(&closed.as_polynomial());
                        let rhs = IntPolynomial::one_minus_x_pow(1)
                            .mul(&IntPolynomial::one_minus_x_pow(p * q * r));
                        if lhs != rhs {
                            return Err(format!("(p,q,r)=({p},{q},{r}): product identity broken"));
                        }
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_5_oracle_minimality() {
    criterion(
        5,
        "oracle minimality, bound 12",
        Duration::from_secs(120),
        || {
            for arity in [2usize, 3] {
                for tuple in deduped_tuples(arity, 1, 12) {
                    let pset = PeriodSet::new(&tuple).map_err(|e| e.to_string())?;
                    let expected = pset.critical_length();
                    let OracleSearch::Found(sol) =
                        minimal_orthogonal(&pset, pset.normalized().iter().sum())
                            .map_err(|e| e.to_string())?
                    else {
                        return Err(format!("{tuple:?}: oracle found nothing"));
                    };
                    if sol.minimal_length != expected {
                        return Err(format!(
                            "{tuple:?}: oracle length {}, formula {expected}",
                            sol.minimal_length
                        ));
                    }
                    if sol.dimension != 1 {
                        return Err(format!("{tuple:?}: dimension {}", sol.dimension));
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_6_four_period_signs() {
    criterion(
        6,
        "four-period sign results",
        Duration::from_secs(10),
        || {
            // `None` means any class except mixed sign is acceptable.
            let cases: [([u64; 4], Option<SignClass>); 3] = [
                ([105, 70, 42, 30], Some(SignClass::MixedSign)),
                ([66, 21, 12, 10], Some(SignClass::StrictlyPositive)),
                ([12, 18, 39, 42], None),
            ];
            for (periods, wanted) in cases {
                let [t1, t2, t3, t4] = periods;
                let h4 = build_h4(t1, t2, t3, t4).map_err(|e| e.to_string())?;
                let class = classify(&h4).map_err(|e| e.to_string())?;
                let ok = match wanted {
                    Some(w) => class == w,
                    None => class != SignClass::MixedSign,
                };
                if !ok {
                    return Err(format!(
                        "{periods:?}: classified {class}, wanted {wanted:?}"
                    ));
                }
                let report = verify_orthogonality(&h4);
                if !report.pass {
                    let failing: Vec<u64> = report
                        .period_checks
                        .iter()
                        .filter(|c| !c.pass)
                        .map(|c| c.period)
                        .collect();
                    return Err(format!("{periods:?}: residue sums unequal mod {failing:?}"));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_7_sign_changing_family() {
    criterion(7, "sign-changing family", Duration::from_secs(30), || {
        for (a, b, c, d) in [(2u64, 3u64, 5u64, 7u64), (2, 3, 5, 11), (2, 3, 7, 11)] {
            let periods = sign_changing_family(a, b, c, d).map_err(|e| e.to_string())?;
            let h4 = build_h4(periods[0], periods[1], periods[2], periods[3])
                .map_err(|e| e.to_string())?;
            let class = classify(&h4).map_err(|e| e.to_string())?;
            if class != SignClass::MixedSign {
                return Err(format!(
                    "family ({a},{b},{c},{d}) -> {periods:?}: classified {class}"
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_8_structural_properties() {
    criterion(8, "structural properties", Duration::from_secs(120), || {
        let cases = || ProptestConfig {
            cases: 200,
            failure_persistence: None,
            ..ProptestConfig::default()
        };

        // Palindrome on arbitrary triples.
        proptest!(cases(), |(t1 in 1u64..=30, t2 in 1u64..=30, t3 in 1u64..=30)| {
            let h3 = build_h3(t1, t2, t3).unwrap();
            prop_assert!(is_palindrome(&h3), "({t1},{t2},{t3}) not palindromic");
        });

        // h3 vanishes on its second step whenever every pairwise gcd is
        // strictly between 1 and the smaller period. Triples (ab, bc, ca)
        // with pairwise coprime a, b, c >= 2 realize exactly that.
        let coprime_pool: Vec<(u64, u64, u64)> = {
            let mut pool = Vec::new();
            for a in 2u64..=9 {
                for b in (a + 1)..=10 {
                    for c in (b + 1)..=11 {
                        if a.gcd(&b) == 1 && a.gcd(&c) == 1 && b.gcd(&c) == 1 {
                            pool.push((a, b, c));
                        }
                    }
                }
            }
            pool
        };
        proptest!(cases(), |(abc in prop::sample::select(coprime_pool.clone()), k in 1u64..=3)| {
            let (a, b, c) = abc;
            let (t1, t2, t3) = (a * b * k, b * c * k, c * a * k);
            let h3 = build_h3(t1, t2, t3).unwrap();
            prop_assert_eq!(&h3.values()[0], &BigInt::one());
            prop_assert!(h3.values()[1].is_zero(), "({t1},{t2},{t3}) nonzero 2nd step");
        });

        // Block expansion equals h2 under (T1,T2) < T2 < T1.
        proptest!(cases(), |(d in 1u64..=5, m in 2u64..=8, s in 1u64..=8)| {
            prop_assume!(s.gcd(&m) == 1);
            let t2 = m * d;
            let t1 = t2 + s * d;
            let blocks = h2_block_profile(t1, t2).unwrap();
            let h2 = build_h2(t1, t2).unwrap();
            prop_assert_eq!(expand_blocks(&blocks), h2.unit_values(), "({}, {})", t1, t2);
        });

        // h3 collapses to h2 when one period divides another.
        proptest!(cases(), |(a in 1u64..=10, k in 1u64..=6, b in 1u64..=20)| {
            let (t1, t2, t3) = (a * k, b, a);
            let h3 = build_h3(t1, t2, t3).unwrap();
            let h2 = build_h2(t1, t2).unwrap();
            prop_assert_eq!(h3.unit_values(), h2.unit_values(), "({}, {}, {})", t1, t2, t3);
        });

        Ok(())
    });
}
