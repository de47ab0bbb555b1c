//! Serialization types and renderers. JSON field order follows the struct
//! declarations and every number is an exact integer, so parsing an emitted
//! object and re-serializing it reproduces the bytes.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use orthostep::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn big_to_i128(v: &BigInt) -> Result<i128, Error> {
    v.to_i128()
        .ok_or_else(|| Error::Internal(format!("value {v} exceeds the JSON integer range")))
}

pub fn bigs_to_i128(values: &[BigInt]) -> Result<Vec<i128>, Error> {
    values.iter().map(big_to_i128).collect()
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProfileDto {
    pub periods: Vec<u64>,
    pub scale: u64,
    pub length: u64,
    pub values: Vec<i128>,
    pub sign_class: String,
    pub palindromic: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PeriodCheckDto {
    pub period: u64,
    pub modulus: u64,
    pub sums: Vec<i128>,
    pub pass: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OracleSummaryDto {
    pub minimal_length: Option<u64>,
    pub dimension: Option<u64>,
    pub agree: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyDto {
    pub periods: Vec<u64>,
    pub scale: u64,
    pub length: u64,
    pub values: Vec<i128>,
    pub sign_class: String,
    pub palindromic: bool,
    pub checks: Vec<PeriodCheckDto>,
    pub oracle: OracleSummaryDto,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairDto {
    pub i: usize,
    pub j: usize,
    pub periods: [u64; 2],
    pub gcd: u64,
    pub clause: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PredictDto {
    pub periods: Vec<u64>,
    pub normalized: Vec<u64>,
    pub sign_class: String,
    pub pairs: Vec<PairDto>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OracleRunDto {
    pub periods: Vec<u64>,
    pub scale: u64,
    pub lmax: u64,
    pub found: bool,
    pub minimal_length: Option<u64>,
    pub dimension: Option<u64>,
    pub values: Vec<i128>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ScanRecordDto {
    pub tuple: Vec<u64>,
    pub predicted: String,
    pub computed: String,
    pub agree: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ScanSummaryDto {
    pub total: u64,
    pub agreements: u64,
    pub disagreements: u64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyDto {
    pub parameters: [u64; 4],
    pub periods: Vec<u64>,
    pub scale: u64,
    pub length: u64,
    pub values: Vec<i128>,
    pub sign_class: String,
    pub palindromic: bool,
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, Error> {
    serde_json::to_string(value).map_err(|e| Error::Internal(format!("serialization failed: {e}")))
}

/// CSV rows "index,start,end,value" for a step profile, endpoints in original
/// units.
pub fn profile_csv(values: &[i128], step_width: u64) -> String {
    let mut out = String::from("index,start,end,value\n");
    for (i, v) in values.iter().enumerate() {
        let start = i as u64 * step_width;
        let end = (i as u64 + 1) * step_width;
        out.push_str(&format!("{i},{start},{end},{v}\n"));
    }
    out
}

pub fn profile_text(values: &[i128]) -> String {
    let words: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("{}\n", words.join(" "))
}
