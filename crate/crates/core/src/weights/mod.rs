//! Minimum weights, relative minimum weights wt(A \ B), and the BCH bound.

mod engine;

use serde::{Deserialize, Serialize};

use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use engine::{low_weight_messages, Traversal};

/// Default number of codewords an exact computation may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    BoundOnly,
}

/// A weight with its certainty: exact results have `lower == upper == value`;
/// otherwise `[lower, upper]` brackets the true weight and `value == upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightResult {
    pub value: usize,
    pub exact: bool,
    pub lower: usize,
    pub upper: usize,
    pub method: Method,
    pub enumerated: u64,
}

impl WeightResult {
    fn exact(value: usize, enumerated: u64) -> Self {
        WeightResult {
            value,
            exact: true,
            lower: value,
            upper: value,
            method: Method::Exhaustive,
            enumerated,
        }
    }
}

/// Minimum Hamming weight of a nonzero code.
pub fn min_weight(code: &CyclicCode, budget: u64) -> Result<WeightResult> {
    if code.is_zero_code() {
        return Err(Error::ZeroCode);
    }
    search(code, None, budget)
}

/// Minimum weight over codewords of `a` that are not in `b`.
pub fn relative_min_weight(a: &CyclicCode, b: &CyclicCode, budget: u64) -> Result<WeightResult> {
    if a.n() != b.n() || a.q() != b.q() {
        return Err(Error::LengthMismatch);
    }
    if a.is_subcode_of(b)? {
        return Err(Error::EmptyDifference);
    }
    search(a, Some(b), budget)
}

fn search(a: &CyclicCode, b: Option<&CyclicCode>, budget: u64) -> Result<WeightResult> {
    let g = a.generator_matrix();
    let h = b.map(CyclicCode::parity_check_matrix);
    let field = a.field();
    let walk = Traversal::new(&g, h.as_ref(), field);
    match walk.message_count() {
        Some(total) if total <= budget => {
            let value = walk.exhaustive().ok_or_else(|| {
                Error::DimensionIdentity("difference set unexpectedly empty".into())
            })?;
            Ok(WeightResult::exact(value, total - 1))
        }
        _ => {
            let (best, visited) = low_weight_messages(&g, h.as_ref(), field, budget);
            let upper = best.unwrap_or(a.n());
            Ok(WeightResult {
                value: upper,
                exact: false,
                lower: bch_bound(a).min(upper),
                upper,
                method: Method::BoundOnly,
                enumerated: visited,
            })
        }
    }
}

/// One more than the longest cyclic run of consecutive residues in the
/// defining set; `n + 1` for the zero code, 1 for the full code.
pub fn bch_bound(code: &CyclicCode) -> usize {
    let n = code.n();
    let t = code.defset();
    if t.len() == n {
        return n + 1;
    }
    let mut in_t = vec![false; n];
    for &r in t {
        in_t[r] = true;
    }
    let mut best = 0;
    for start in 0..n {
        if !in_t[start] || in_t[(start + n - 1) % n] {
            continue;
        }
        let mut len = 0;
        while in_t[(start + len) % n] {
            len += 1;
        }
        best = best.max(len);
    }
    best + 1
}
