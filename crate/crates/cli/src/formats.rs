//! JSON input formats and the sweep CSV writer.
//!
//! A distribution file names its variables and gives one probability per
//! outcome string, `+` or `-` per variable in the listed order:
//!
//! ```json
//! { "variables": ["A", "B"],
//!   "probabilities": { "++": 0.5, "+-": 0.0, "-+": 0.0, "--": 0.5 } }
//! ```
//!
//! A count file gives eight population counts keyed by property pattern,
//! lowercase meaning the property holds (`"aBc"` counts objects with `a`,
//! without `b`, with `c`).

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use entropic_bell::probability::{CountTable, JointDistribution};
use entropic_bell::scan::{to_csv, SweepRow};
use serde::Deserialize;

use crate::{CliError, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DistributionFile {
    variables: Vec<String>,
    probabilities: BTreeMap<String, f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CountFile {
    counts: BTreeMap<String, u64>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn parse_distribution(text: &str) -> Result<JointDistribution> {
    let file: DistributionFile =
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("distribution JSON: {e}")))?;
    let n = file.variables.len();
    if n == 0 || n > 3 {
        return Err(CliError::Invalid(format!("expected 1 to 3 variables, found {n}")));
    }
    let mut table = vec![None; 1 << n];
    for (key, &p) in &file.probabilities {
        let index = outcome_key_index(key, n)
            .ok_or_else(|| CliError::Invalid(format!("bad outcome key `{key}` for {n} variables")))?;
        table[index] = Some(p);
    }
    let table: Vec<f64> = table
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            p.ok_or_else(|| CliError::Invalid(format!("missing outcome key `{}`", outcome_key(i, n))))
        })
        .collect::<Result<_>>()?;
    Ok(JointDistribution::new(&file.variables, &table)?)
}

fn outcome_key_index(key: &str, n: usize) -> Option<usize> {
    if key.len() != n {
        return None;
    }
    key.chars().try_fold(0usize, |acc, ch| match ch {
        '+' => Some(acc << 1),
        '-' => Some((acc << 1) | 1),
        _ => None,
    })
}

fn outcome_key(index: usize, n: usize) -> String {
    (0..n).map(|v| if (index >> (n - 1 - v)) & 1 == 0 { '+' } else { '-' }).collect()
}

pub fn load_distribution(path: &Path) -> Result<JointDistribution> {
    parse_distribution(&read(path)?)
}

pub fn parse_counts(text: &str) -> Result<CountTable> {
    let file: CountFile =
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("count JSON: {e}")))?;
    let mut counts = [None; 8];
    for (key, &n) in &file.counts {
        let index =
            count_key_index(key).ok_or_else(|| CliError::Invalid(format!("bad count key `{key}`")))?;
        counts[index] = Some(n);
    }
    let mut out = [0u64; 8];
    for (i, slot) in counts.iter().enumerate() {
        out[i] = slot.ok_or_else(|| CliError::Invalid(format!("missing count key `{}`", count_key(i))))?;
    }
    Ok(CountTable::new(out)?)
}

fn count_key_index(key: &str) -> Option<usize> {
    let chars: Vec<char> = key.chars().collect();
    if chars.len() != 3 {
        return None;
    }
    let mut index = 0;
    for (ch, letter) in chars.into_iter().zip(['a', 'b', 'c']) {
        index <<= 1;
        if ch == letter.to_ascii_uppercase() {
            index |= 1;
        } else if ch != letter {
            return None;
        }
    }
    Some(index)
}

fn count_key(index: usize) -> String {
    ['a', 'b', 'c']
        .into_iter()
        .enumerate()
        .map(|(k, letter)| if (index >> (2 - k)) & 1 == 1 { letter.to_ascii_uppercase() } else { letter })
        .collect()
}

pub fn load_counts(path: &Path) -> Result<CountTable> {
    parse_counts(&read(path)?)
}

/// Writes the sweep CSV. Nothing is written when `rows` is empty.
pub fn emit_rows<W: Write>(rows: &[SweepRow], mut destination: W) -> std::io::Result<()> {
    let csv = to_csv(rows).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidInput, e))?;
    destination.write_all(csv.as_bytes())?;
    destination.flush()
}

/// [`emit_rows`] into a file; the file is created only for non-empty input.
pub fn emit_rows_to_path(rows: &[SweepRow], path: &Path) -> Result<()> {
    let csv = to_csv(rows)?;
    fs::write(path, csv).map_err(|source| CliError::Io { path: path.to_owned(), source })
}
