//! Sequence file I/O: b-file parsing and emission, comparison of a series
//! against externally supplied data, and JSON views of the core types.
//!
//! A b-file is the plain "index value" line format used for sequence data
//! interchange; `#` lines and blank lines are ignored. Values are exact
//! decimal integers, never scientific notation, so files diff bit-exactly.

use crate::series::Series;
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BFileError {
    #[error("line {line}: expected `index value`, got {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: index {index} does not increase past {previous}")]
    NonIncreasing {
        line: usize,
        index: u64,
        previous: u64,
    },
}

/// Parsed sequence data: (index, value) pairs with strictly increasing
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFile {
    entries: Vec<(u64, BigInt)>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<Self, BFileError> {
        let mut entries: Vec<(u64, BigInt)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let malformed = || BFileError::Malformed {
                line,
                content: content.to_string(),
            };
            let mut tokens = content.split_whitespace();
            let (idx_tok, val_tok) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(malformed()),
            };
            let index: u64 = idx_tok.parse().map_err(|_| malformed())?;
            let value: BigInt = val_tok.parse().map_err(|_| malformed())?;
            if let Some(&(prev, _)) = entries.last() {
                if index <= prev {
                    return Err(BFileError::NonIncreasing {
                        line,
                        index,
                        previous: prev,
                    });
                }
            }
            entries.push((index, value));
        }
        Ok(BFile { entries })
    }

    /// Dump a series as consecutive entries starting at index 0.
    pub fn from_series(series: &Series) -> Self {
        BFile {
            entries: series
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as u64, c.clone()))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[(u64, BigInt)] {
        &self.entries
    }

    pub fn get(&self, index: u64) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&index, |&(i, _)| i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, v) in &self.entries {
            writeln!(out, "{} {}", i, v).expect("string writes cannot fail");
        }
        out
    }
}

/// First disagreement between a series and file data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub series_index: usize,
    pub file_index: u64,
    pub series_value: BigInt,
    pub file_value: BigInt,
}

/// Result of [`compare`]: how much overlapped, over what index range it
/// agreed, and where it first went wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    /// Number of coefficient/file pairs actually compared.
    pub compared: u64,
    /// Series-index range over which values agreed, if anything matched.
    pub agreement: Option<(usize, usize)>,
    pub mismatch: Option<Mismatch>,
}

impl CompareReport {
    pub fn full_agreement(&self) -> bool {
        self.mismatch.is_none() && self.compared > 0
    }
}

/// Compare coefficient `n` of the series against the file entry at index
/// `dilate * n + offset`, for every `n` where both exist. `dilate` handles
/// data recorded under a substitution `q -> q^d`; a negative `offset`
/// handles data shifted by a power of `q`.
pub fn compare(series: &Series, file: &BFile, dilate: u64, offset: i64) -> CompareReport {
    assert!(dilate >= 1, "dilation factor must be at least 1");
    let mut compared = 0;
    let mut agreement: Option<(usize, usize)> = None;
    for n in 0..series.order() {
        let target = dilate as i128 * n as i128 + offset as i128;
        if target < 0 {
            continue;
        }
        let Some(value) = file.get(target as u64) else {
            continue;
        };
        compared += 1;
        if value != series.coeff(n) {
            return CompareReport {
                compared,
                agreement,
                mismatch: Some(Mismatch {
                    series_index: n,
                    file_index: target as u64,
                    series_value: series.coeff(n).clone(),
                    file_value: value.clone(),
                }),
            };
        }
        agreement = Some(match agreement {
            None => (n, n),
            Some((lo, _)) => (lo, n),
        });
    }
    CompareReport {
        compared,
        agreement,
        mismatch: None,
    }
}

/// JSON view of a series; coefficients are decimal strings so arbitrary
/// precision survives any JSON parser.
pub fn series_json(series: &Series) -> Value {
    json!({
        "order": series.order(),
        "coefficients": series.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

/// Parse sequence data in either accepted text form: the b-file line format,
/// or JSON (a bare coefficient array, or an object with a `coefficients`
/// field, as emitted by [`series_json`]). JSON coefficients may be decimal
/// strings or plain integers and are taken as entries at indices 0, 1, ...
pub fn parse_sequence(text: &str) -> Result<BFile, BFileError> {
    let trimmed = text.trim_start();
    if !(trimmed.starts_with('{') || trimmed.starts_with('[')) {
        return BFile::parse(text);
    }
    let malformed = |content: &str| BFileError::Malformed {
        line: 1,
        content: content.to_string(),
    };
    let value: Value =
        serde_json::from_str(text).map_err(|e| malformed(&format!("invalid JSON: {}", e)))?;
    let array = match &value {
        Value::Array(a) => a,
        Value::Object(o) => o
            .get("coefficients")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("JSON object lacks a `coefficients` array"))?,
        _ => return Err(malformed("expected a JSON array or object")),
    };
    let mut entries = Vec::with_capacity(array.len());
    for (i, item) in array.iter().enumerate() {
        let parsed: Option<BigInt> = match item {
            Value::String(s) => s.parse().ok(),
            Value::Number(n) => n.to_string().parse().ok(),
            _ => None,
        };
        let v = parsed.ok_or_else(|| malformed(&format!("coefficient {} is {}", i, item)))?;
        entries.push((i as u64, v));
    }
    Ok(BFile { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let f = BFile::parse("0 1\n1 1\n2 0\n").unwrap();
        assert_eq!(
            f.entries(),
            &[
                (0, BigInt::from(1)),
                (1, BigInt::from(1)),
                (2, BigInt::from(0))
            ]
        );
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let f = BFile::parse("# comment\n\n5 42\n").unwrap();
        assert_eq!(f.entries(), &[(5, BigInt::from(42))]);
        assert_eq!(f.get(5), Some(&BigInt::from(42)));
        assert_eq!(f.get(4), None);
    }

    #[test]
    fn parse_reports_line_numbers() {
        assert_eq!(
            BFile::parse("3 x\n").unwrap_err(),
            BFileError::Malformed {
                line: 1,
                content: "3 x".into()
            }
        );
        assert_eq!(
            BFile::parse("# ok\n1 2\n1 3\n").unwrap_err(),
            BFileError::NonIncreasing {
                line: 3,
                index: 1,
                previous: 1
            }
        );
        assert!(BFile::parse("1 2 3\n").is_err());
        // negative values are fine; negative indices are not
        assert!(BFile::parse("0 -5\n").is_ok());
        assert!(BFile::parse("-1 5\n").is_err());
    }

    #[test]
    fn round_trip_against_own_dump() {
        let series = Series::from_i64s(&[1, -2, 0, 44, 7]);
        let file = BFile::parse(&BFile::from_series(&series).to_text()).unwrap();
        let report = compare(&series, &file, 1, 0);
        assert!(report.full_agreement());
        assert_eq!(report.compared, 5);
        assert_eq!(report.agreement, Some((0, 4)));
    }

    #[test]
    fn mismatch_is_located() {
        let series = Series::from_i64s(&[1, 2, 3]);
        let file = BFile::parse("0 1\n1 2\n2 9\n").unwrap();
        let report = compare(&series, &file, 1, 0);
        let mismatch = report.mismatch.unwrap();
        assert_eq!(mismatch.series_index, 2);
        assert_eq!(mismatch.file_value, BigInt::from(9));
        assert_eq!(report.agreement, Some((0, 1)));
    }

    #[test]
    fn dilation_and_offset() {
        // file holds value(6n - 1) = coefficient(n)
        let series = Series::from_i64s(&[7, 10, 20, 30]);
        let text = "5 10\n11 20\n17 30\n";
        let file = BFile::parse(text).unwrap();
        let report = compare(&series, &file, 6, -1);
        // n = 0 maps to index -1, skipped; n = 1..3 compared
        assert!(report.full_agreement());
        assert_eq!(report.compared, 3);
        assert_eq!(report.agreement, Some((1, 3)));
    }

    #[test]
    fn series_json_is_exact_decimal() {
        let series = Series::from_i64s(&[1, -2]);
        let v = series_json(&series);
        assert_eq!(v["order"], 2);
        assert_eq!(v["coefficients"][1], "-2");
    }

    #[test]
    fn parse_sequence_accepts_both_formats() {
        let series = Series::from_i64s(&[1, -2, 44]);
        // own JSON emission round-trips
        let from_json = parse_sequence(&series_json(&series).to_string()).unwrap();
        assert_eq!(from_json, BFile::from_series(&series));
        // bare arrays, with numbers or strings
        let bare = parse_sequence("[1, \"-2\", 44]").unwrap();
        assert_eq!(bare, BFile::from_series(&series));
        // plain b-file text still works
        let plain = parse_sequence("0 1\n1 -2\n2 44\n").unwrap();
        assert_eq!(plain, BFile::from_series(&series));
        assert!(parse_sequence("{\"order\": 3}").is_err());
        assert!(parse_sequence("[true]").is_err());
    }
}
