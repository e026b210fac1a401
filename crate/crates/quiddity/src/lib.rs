//! Parsing, rendering and JSON formats for `quiddity-core`, shared by the
//! `quiddity` binary and its tests.

pub mod json;
pub mod render;

use quiddity_core::enumeration::Budget;
use quiddity_core::{Mat2, Word};

/// Environment variable holding a single size ceiling for every exhaustive search.
pub const BUDGET_VAR: &str = "QUIDDITY_BUDGET";

/// An explicit ceiling wins over the environment, which wins over the defaults.
pub fn budget(explicit: Option<usize>) -> Result<Budget, String> {
    if let Some(n) = explicit {
        return Ok(Budget::uniform(n));
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Budget::uniform)
            .map_err(|_| format!("{BUDGET_VAR} must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(Budget::default()),
    }
}

/// Comma-separated positive integers, e.g. `1,1,2,1,1`.
pub fn parse_word(s: &str) -> Result<Word, String> {
    let entries = s
        .split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|_| format!("{x:?} is not a positive integer")))
        .collect::<Result<Vec<_>, _>>()?;
    Word::new(entries).map_err(|e| e.to_string())
}

/// Four comma-separated integers `a,b,c,d` for `[[a, b], [c, d]]`.
pub fn parse_matrix(s: &str) -> Result<Mat2, String> {
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| format!("{x:?} is not an integer")))
        .collect::<Result<Vec<_>, _>>()?;
    match v[..] {
        [a, b, c, d] => Ok(Mat2::new(a, b, c, d)),
        _ => Err(format!("expected four entries, got {}", v.len())),
    }
}
