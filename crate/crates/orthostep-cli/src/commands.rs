//! Implementations of the CLI subcommands, returning rendered stdout plus the
//! process exit code: 0 success/agreement, 1 usage error, 2 for a violated
//! guarantee or builder/oracle disagreement.

use orthostep::{
    build, build_h3, build_h4, classify, gcd_all, gcd_match_hypothesis, is_palindrome,
    minimal_orthogonal, predict_h3_sign_detailed, profiles_agree_up_to_scalar,
    sign_changing_family, verify_orthogonality, Error, GcdClause, NullspaceOracle, OracleSearch,
    PeriodSet, ProfileStrategy, SignClass, StepProfile, StrategyRegistry,
};

use crate::output::{
    bigs_to_i128, profile_csv, profile_text, to_json, FamilyDto, Format, OracleRunDto,
    OracleSummaryDto, PairDto, PeriodCheckDto, PredictDto, ProfileDto, ScanRecordDto,
    ScanSummaryDto, VerifyDto,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

/// Largest scan bounds; scans beyond these are refused as a usage error.
pub const SCAN_CAP_N3: u64 = 60;
pub const SCAN_CAP_N4: u64 = 24;

pub struct CmdOutput {
    pub stdout: String,
    pub exit: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            stdout,
            exit: EXIT_OK,
        }
    }
}

/// Usage-class library errors map to exit 1; broken-arithmetic ones signal a
/// bug and map to exit 2 like any other violated guarantee.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::EmptyPeriods
        | Error::UnsupportedArity(_)
        | Error::ZeroPeriod(_)
        | Error::BadPrecondition(_)
        | Error::Overflow(_)
        | Error::ProfileTooLarge(_) => EXIT_USAGE,
        Error::ZeroDivisor | Error::DivisibilityViolation(_) | Error::Internal(_) => EXIT_VIOLATION,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::BadPrecondition(msg.into())
}

fn build_with_strategy(
    periods: &[u64],
    strategy: &str,
    lmax: Option<u64>,
) -> Result<StepProfile, Error> {
    if strategy == "oracle" {
        let pset = PeriodSet::new(periods)?;
        let l_max = lmax.map(|l| l / pset.scale());
        return NullspaceOracle { l_max }.build(periods);
    }
    let registry = StrategyRegistry::with_defaults();
    let chosen = registry.get(strategy).ok_or_else(|| {
        usage(format!(
            "unknown strategy '{strategy}'; available: {}",
            registry.names().join(", ")
        ))
    })?;
    chosen.build(periods)
}

fn profile_dto(periods: &[u64], profile: &StepProfile) -> Result<ProfileDto, Error> {
    Ok(ProfileDto {
        periods: periods.to_vec(),
        scale: profile.step_width(),
        length: profile.original_length(),
        values: bigs_to_i128(profile.values())?,
        sign_class: classify(profile)?.as_str().to_string(),
        palindromic: is_palindrome(profile),
    })
}

pub fn cmd_compute(
    periods: &[u64],
    format: Format,
    strategy: &str,
    lmax: Option<u64>,
) -> Result<CmdOutput, Error> {
    let profile = build_with_strategy(periods, strategy, lmax)?;
    let dto = profile_dto(periods, &profile)?;
    let stdout = match format {
        Format::Json => format!("{}\n", to_json(&dto)?),
        Format::Csv => profile_csv(&dto.values, dto.scale),
        Format::Text => profile_text(&dto.values),
    };
    Ok(CmdOutput::ok(stdout))
}

fn clause_text(clause: GcdClause) -> &'static str {
    match clause {
        GcdClause::StrictlyBetween => "strictly between 1 and the smaller period",
        GcdClause::GcdOne => "equal to 1",
        GcdClause::GcdEqualsMin => "equal to the smaller period (one divides the other)",
    }
}

pub fn cmd_predict(periods: &[u64], format: Format) -> Result<CmdOutput, Error> {
    let [t1, t2, t3] = periods else {
        return Err(usage(format!(
            "predict needs exactly 3 periods, got {}",
            periods.len()
        )));
    };
    let detail = predict_h3_sign_detailed(*t1, *t2, *t3)?;
    let pset = PeriodSet::new(periods)?;
    let dto = PredictDto {
        periods: periods.to_vec(),
        normalized: pset.normalized().to_vec(),
        sign_class: detail.class.as_str().to_string(),
        pairs: detail
            .pairs
            .iter()
            .map(|p| PairDto {
                i: p.i,
                j: p.j,
                periods: [p.periods.0, p.periods.1],
                gcd: p.gcd,
                clause: p.clause.as_str().to_string(),
            })
            .collect(),
    };
    let stdout = match format {
        Format::Json => format!("{}\n", to_json(&dto)?),
        Format::Csv => {
            let mut out = String::from("i,j,gcd,clause\n");
            for p in &dto.pairs {
                out.push_str(&format!("{},{},{},{}\n", p.i, p.j, p.gcd, p.clause));
            }
            out
        }
        Format::Text => {
            let mut out = format!("sign class: {}\n", dto.sign_class);
            for p in &detail.pairs {
                out.push_str(&format!(
                    "gcd({}, {}) = {}: {}\n",
                    p.periods.0,
                    p.periods.1,
                    p.gcd,
                    clause_text(p.clause)
                ));
            }
            if detail.class == SignClass::StrictlyPositive {
                if let Some(w) = detail
                    .pairs
                    .iter()
                    .find(|p| p.clause != GcdClause::StrictlyBetween)
                {
                    out.push_str(&format!(
                        "witness: gcd({}, {}) = {}\n",
                        w.periods.0, w.periods.1, w.gcd
                    ));
                }
            }
            out
        }
    };
    Ok(CmdOutput::ok(stdout))
}

pub fn cmd_verify(
    periods: &[u64],
    format: Format,
    strategy: &str,
    lmax: Option<u64>,
) -> Result<CmdOutput, Error> {
    if !(2..=4).contains(&periods.len()) {
        return Err(usage(format!(
            "verify needs 2 to 4 periods, got {}",
            periods.len()
        )));
    }
    if strategy == "oracle" {
        return Err(usage(
            "verify compares a builder strategy against the oracle; pick product or chain",
        ));
    }
    let profile = build_with_strategy(periods, strategy, None)?;
    let pset = profile.periods().clone();
    let l_max = match lmax {
        Some(l) => l / pset.scale(),
        None => pset.normalized().iter().sum(),
    };
    let search = minimal_orthogonal(&pset, l_max)?;
    let checks = verify_orthogonality(&profile);
    let (summary, oracle_profile) = match search {
        OracleSearch::Found(sol) => {
            let agree = checks.pass
                && sol.minimal_length == pset.critical_length()
                && sol.dimension == 1
                && profiles_agree_up_to_scalar(&sol.profile, profile.values());
            (
                OracleSummaryDto {
                    minimal_length: Some(sol.minimal_length * pset.scale()),
                    dimension: Some(sol.dimension),
                    agree,
                },
                Some(sol.profile),
            )
        }
        OracleSearch::NotFoundBelow { .. } => (
            OracleSummaryDto {
                minimal_length: None,
                dimension: None,
                agree: false,
            },
            None,
        ),
    };
    let agree = summary.agree;
    let mut dto = profile_dto(periods, &profile)?;
    let check_dtos = checks
        .period_checks
        .iter()
        .map(|c| {
            Ok(PeriodCheckDto {
                period: c.period,
                modulus: c.modulus,
                sums: bigs_to_i128(&c.sums)?,
                pass: c.pass,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;

    let stdout = match format {
        Format::Json => {
            let verify = VerifyDto {
                periods: std::mem::take(&mut dto.periods),
                scale: dto.scale,
                length: dto.length,
                values: std::mem::take(&mut dto.values),
                sign_class: dto.sign_class.clone(),
                palindromic: dto.palindromic,
                checks: check_dtos,
                oracle: summary,
            };
            format!("{}\n", to_json(&verify)?)
        }
        Format::Csv => profile_csv(&dto.values, dto.scale),
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("profile length: {}\n", dto.length));
            out.push_str(&format!("sign class: {}\n", dto.sign_class));
            match (summary.minimal_length, summary.dimension) {
                (Some(len), Some(dim)) => {
                    out.push_str(&format!("oracle minimal length: {len}\n"));
                    out.push_str(&format!("nullspace dimension: {dim}\n"));
                }
                _ => out.push_str(&format!(
                    "oracle: no nontrivial profile below length {}\n",
                    l_max * pset.scale()
                )),
            }
            for c in &check_dtos {
                out.push_str(&format!(
                    "residue sums mod {} (period {}): {}\n",
                    c.modulus,
                    c.period,
                    if c.pass { "pass" } else { "FAIL" }
                ));
            }
            if agree {
                out.push_str("profiles: agree\n");
            } else {
                out.push_str("profiles: DISAGREE\n");
                out.push_str(&format!("builder: {}", profile_text(&dto.values)));
                if let Some(oracle_values) = &oracle_profile {
                    out.push_str(&format!(
                        "oracle:  {}",
                        profile_text(&bigs_to_i128(oracle_values)?)
                    ));
                }
            }
            out
        }
    };
    Ok(CmdOutput {
        stdout,
        exit: if agree { EXIT_OK } else { EXIT_VIOLATION },
    })
}

pub fn cmd_oracle(periods: &[u64], format: Format, lmax: Option<u64>) -> Result<CmdOutput, Error> {
    let pset = PeriodSet::new(periods)?;
    let l_max = match lmax {
        Some(l) => l / pset.scale(),
        None => pset.normalized().iter().sum(),
    };
    let search = minimal_orthogonal(&pset, l_max)?;
    let dto = match &search {
        OracleSearch::Found(sol) => OracleRunDto {
            periods: periods.to_vec(),
            scale: pset.scale(),
            lmax: l_max * pset.scale(),
            found: true,
            minimal_length: Some(sol.minimal_length * pset.scale()),
            dimension: Some(sol.dimension),
            values: bigs_to_i128(&sol.profile)?,
        },
        OracleSearch::NotFoundBelow { l_max: bound } => OracleRunDto {
            periods: periods.to_vec(),
            scale: pset.scale(),
            lmax: bound * pset.scale(),
            found: false,
            minimal_length: None,
            dimension: None,
            values: Vec::new(),
        },
    };
    let stdout = match format {
        Format::Json => format!("{}\n", to_json(&dto)?),
        Format::Csv => profile_csv(&dto.values, dto.scale),
        Format::Text => match (dto.minimal_length, dto.dimension) {
            (Some(len), Some(dim)) => format!(
                "minimal length: {len}\ndimension: {dim}\nvalues: {}",
                profile_text(&dto.values)
            ),
            _ => format!("no nontrivial profile below length {}\n", dto.lmax),
        },
    };
    Ok(CmdOutput::ok(stdout))
}

/// Sorted tuples with entries in 2..=bound, skipping tuples whose scaled-down
/// primitive form is itself enumerated.
fn scan_tuples(arity: usize, bound: u64) -> Vec<Vec<u64>> {
    fn rec(arity: usize, bound: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == arity {
            let g = gcd_all(prefix).expect("scan entries are positive");
            if g == 1 || prefix[0] / g < 2 {
                out.push(prefix.clone());
            }
            return;
        }
        let start = prefix.last().copied().unwrap_or(2);
        for v in start..=bound {
            prefix.push(v);
            rec(arity, bound, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(arity, bound, &mut Vec::new(), &mut out);
    out
}

fn scan_record(tuple: &[u64]) -> Result<ScanRecordDto, Error> {
    match tuple {
        [t1, t2, t3] => {
            let detail = predict_h3_sign_detailed(*t1, *t2, *t3)?;
            let computed = classify(&build_h3(*t1, *t2, *t3)?)?;
            Ok(ScanRecordDto {
                tuple: tuple.to_vec(),
                predicted: detail.class.as_str().to_string(),
                computed: computed.as_str().to_string(),
                agree: detail.class == computed,
            })
        }
        [t1, t2, t3, t4] => {
            let hypothesis = gcd_match_hypothesis(&[*t1, *t2, *t3, *t4])?;
            let computed = classify(&build_h4(*t1, *t2, *t3, *t4)?)?;
            let (predicted, agree) = match hypothesis {
                Some(_) => ("not_mixed_sign", computed != SignClass::MixedSign),
                None => ("unconstrained", true),
            };
            Ok(ScanRecordDto {
                tuple: tuple.to_vec(),
                predicted: predicted.to_string(),
                computed: computed.as_str().to_string(),
                agree,
            })
        }
        _ => Err(Error::UnsupportedArity(tuple.len())),
    }
}

pub fn cmd_scan(n: u64, bound: u64, format: Format) -> Result<CmdOutput, Error> {
    let cap = match n {
        3 => SCAN_CAP_N3,
        4 => SCAN_CAP_N4,
        other => return Err(usage(format!("scan supports n = 3 or 4, got {other}"))),
    };
    if bound < 2 {
        return Err(usage("scan bound must be at least 2"));
    }
    if bound > cap {
        return Err(usage(format!(
            "scan bound {bound} exceeds the safety cap {cap} for n = {n}"
        )));
    }
    let tuples = scan_tuples(n as usize, bound);
    let mut records = Vec::with_capacity(tuples.len());
    for tuple in &tuples {
        records.push(scan_record(tuple)?);
    }
    let agreements = records.iter().filter(|r| r.agree).count() as u64;
    let summary = ScanSummaryDto {
        total: records.len() as u64,
        agreements,
        disagreements: records.len() as u64 - agreements,
    };
    let stdout = match format {
        Format::Json => {
            let mut out = String::new();
            for r in &records {
                out.push_str(&to_json(r)?);
                out.push('\n');
            }
            out.push_str(&to_json(&summary)?);
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut out = String::new();
            let heads: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
            out.push_str(&format!("{},predicted,computed,agree\n", heads.join(",")));
            for r in &records {
                let tuple: Vec<String> = r.tuple.iter().map(|t| t.to_string()).collect();
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    tuple.join(","),
                    r.predicted,
                    r.computed,
                    r.agree
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &records {
                let tuple: Vec<String> = r.tuple.iter().map(|t| t.to_string()).collect();
                out.push_str(&format!(
                    "({}): predicted {}, computed {}: {}\n",
                    tuple.join(","),
                    r.predicted,
                    r.computed,
                    if r.agree { "agree" } else { "DISAGREE" }
                ));
            }
            out.push_str(&format!(
                "scanned {} tuples up to bound {bound}: {} agree, {} disagree\n",
                summary.total, summary.agreements, summary.disagreements
            ));
            out
        }
    };
    Ok(CmdOutput {
        stdout,
        exit: if summary.disagreements == 0 {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        },
    })
}

pub fn cmd_family(parameters: &[u64], format: Format) -> Result<CmdOutput, Error> {
    let [a, b, c, d] = parameters else {
        return Err(usage(format!(
            "family needs exactly 4 parameters, got {}",
            parameters.len()
        )));
    };
    let periods = sign_changing_family(*a, *b, *c, *d)?;
    let profile = build(&periods)?;
    let class = classify(&profile)?;
    let dto = FamilyDto {
        parameters: [*a, *b, *c, *d],
        periods: periods.to_vec(),
        scale: profile.step_width(),
        length: profile.original_length(),
        values: bigs_to_i128(profile.values())?,
        sign_class: class.as_str().to_string(),
        palindromic: is_palindrome(&profile),
    };
    let stdout = match format {
        Format::Json => format!("{}\n", to_json(&dto)?),
        Format::Csv => profile_csv(&dto.values, dto.scale),
        Format::Text => {
            let periods: Vec<String> = dto.periods.iter().map(|t| t.to_string()).collect();
            format!(
                "periods: {}\nsign class: {}\n",
                periods.join(" "),
                dto.sign_class
            )
        }
    };
    Ok(CmdOutput {
        stdout,
        exit: if class == SignClass::MixedSign {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        },
    })
}
