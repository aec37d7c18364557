//! Message-space traversal.
//!
//! Messages in GF(q)^k = GF(p)^(mk) are visited in p-ary modular Gray-code
//! order: going from index t-1 to t increments exactly one Gray digit, the
//! one at position v_p(t), so each step adds one fixed basis row to the
//! running codeword and one fixed syndrome to the running syndrome.
//! The index range is cut into chunks that are walked independently and
//! min-reduced, which keeps the result independent of the partition.

use rayon::prelude::*;

use crate::galois::Field;
use crate::matrix::{dot, Matrix};

/// Minimum chunk length before the range is split.
const CHUNK: u64 = 1 << 16;
const MAX_CHUNKS: u64 = 64;

/// Nonzero codewords rejected by the filter are skipped; the result is the
/// least weight among the rest, `None` if nothing survived.
pub(crate) struct Traversal<'a> {
    field: &'a Field,
    n: usize,
    /// GF(p)-basis of the code: `y^j * g_i` for each generator row and each j < m.
    basis: Vec<Vec<u32>>,
    /// Syndromes of `basis` under the filter's parity-check matrix.
    syndromes: Option<Vec<Vec<u32>>>,
}

impl<'a> Traversal<'a> {
    pub(crate) fn new(generator: &Matrix, filter: Option<&Matrix>, field: &'a Field) -> Self {
        let p = field.characteristic();
        let m = field.degree();
        let mut basis = Vec::with_capacity(generator.rows() * m as usize);
        for row in generator.iter_rows() {
            for j in 0..m {
                let y = p.pow(j);
                basis.push(row.iter().map(|&x| field.mul(x, y)).collect::<Vec<u32>>());
            }
        }
        let syndromes = filter.map(|h| {
            basis
                .iter()
                .map(|b| h.iter_rows().map(|hr| dot(field, hr, b)).collect())
                .collect()
        });
        Traversal {
            field,
            n: generator.cols(),
            basis,
            syndromes,
        }
    }

    /// Number of messages, p^(mk), if it fits in a u64.
    pub(crate) fn message_count(&self) -> Option<u64> {
        (self.field.characteristic() as u64).checked_pow(self.basis.len() as u32)
    }

    /// Exhaustive minimum over all nonzero messages.
    pub(crate) fn exhaustive(&self) -> Option<usize> {
        let total = self.message_count().expect("caller checked the budget");
        if total <= 1 {
            return None;
        }
        let chunks = ((total - 1) / CHUNK).clamp(1, MAX_CHUNKS);
        let step = (total - 1).div_ceil(chunks);
        let binary = self.field.order() == 2 && self.n <= 128;
        let bounds: Vec<(u64, u64)> = (0..chunks)
            .map(|c| (1 + c * step, (1 + (c + 1) * step).min(total)))
            .filter(|(a, b)| a < b)
            .collect();
        bounds
            .into_par_iter()
            .filter_map(|(a, b)| {
                if binary {
                    self.walk_binary(a, b)
                } else {
                    self.walk_generic(a, b)
                }
            })
            .min()
    }

    fn walk_binary(&self, start: u64, end: u64) -> Option<usize> {
        let pack = |v: &[u32]| -> u128 {
            v.iter()
                .enumerate()
                .fold(0u128, |acc, (i, &x)| acc | ((x as u128) << i))
        };
        let rows: Vec<u128> = self.basis.iter().map(|r| pack(r)).collect();
        let synd: Option<Vec<u128>> = self
            .syndromes
            .as_ref()
            .map(|s| s.iter().map(|r| pack(r)).collect());
        let gray = start ^ (start >> 1);
        let mut word = 0u128;
        let mut s = 0u128;
        for (i, r) in rows.iter().enumerate() {
            if gray >> i & 1 == 1 {
                word ^= r;
                if let Some(sy) = &synd {
                    s ^= sy[i];
                }
            }
        }
        let mut best = usize::MAX;
        let mut t = start;
        loop {
            if synd.is_none() || s != 0 {
                best = best.min(word.count_ones() as usize);
            }
            t += 1;
            if t == end {
                break;
            }
            let i = t.trailing_zeros() as usize;
            word ^= rows[i];
            if let Some(sy) = &synd {
                s ^= sy[i];
            }
        }
        (best != usize::MAX).then_some(best)
    }

    fn walk_generic(&self, start: u64, end: u64) -> Option<usize> {
        let f = self.field;
        let p = f.characteristic() as u64;
        let len = self.basis.len();
        let slen = self
            .syndromes
            .as_ref()
            .map_or(0, |s| s.first().map_or(0, Vec::len));

        let mut digits = vec![0u64; len + 1];
        let mut x = start;
        for d in digits.iter_mut().take(len) {
            *d = x % p;
            x /= p;
        }
        let mut word = vec![0u32; self.n];
        let mut s = vec![0u32; slen];
        for i in 0..len {
            let g = ((digits[i] + p - digits[i + 1]) % p) as u32;
            if g == 0 {
                continue;
            }
            for (w, &r) in word.iter_mut().zip(&self.basis[i]) {
                *w = f.add(*w, f.mul(g, r));
            }
            if let Some(sy) = &self.syndromes {
                for (a, &r) in s.iter_mut().zip(&sy[i]) {
                    *a = f.add(*a, f.mul(g, r));
                }
            }
        }

        let mut best = usize::MAX;
        let mut t = start;
        loop {
            if self.syndromes.is_none() || s.iter().any(|&v| v != 0) {
                best = best.min(word.iter().filter(|&&v| v != 0).count());
            }
            t += 1;
            if t == end {
                break;
            }
            let mut i = 0;
            let mut x = t;
            while x.is_multiple_of(p) {
                x /= p;
                i += 1;
            }
            for (w, &r) in word.iter_mut().zip(&self.basis[i]) {
                *w = f.add(*w, r);
            }
            if let Some(sy) = &self.syndromes {
                for (a, &r) in s.iter_mut().zip(&sy[i]) {
                    *a = f.add(*a, r);
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }
}

/// Walks up to `budget` nonzero messages over GF(q) in order of increasing
/// message weight (supports lexicographic, then values lexicographic).
/// Returns the best surviving weight and the number of messages visited.
pub(crate) fn low_weight_messages(
    generator: &Matrix,
    filter: Option<&Matrix>,
    field: &Field,
    budget: u64,
) -> (Option<usize>, u64) {
    let k = generator.rows();
    let n = generator.cols();
    let q = field.order();
    let mut visited = 0u64;
    let mut best: Option<usize> = None;
    for w in 1..=k {
        let mut support: Vec<usize> = (0..w).collect();
        loop {
            let mut values = vec![1u32; w];
            loop {
                if visited >= budget {
                    return (best, visited);
                }
                visited += 1;
                let mut word = vec![0u32; n];
                for (&pos, &v) in support.iter().zip(&values) {
                    for (x, &g) in word.iter_mut().zip(generator.row(pos)) {
                        *x = field.add(*x, field.mul(v, g));
                    }
                }
                let keep =
                    filter.is_none_or(|h| h.iter_rows().any(|hr| dot(field, hr, &word) != 0));
                if keep {
                    let wt = word.iter().filter(|&&v| v != 0).count();
                    best = Some(best.map_or(wt, |b| b.min(wt)));
                }
                // next value tuple
                let mut j = w;
                while j > 0 {
                    j -= 1;
                    values[j] += 1;
                    if values[j] < q {
                        break;
                    }
                    values[j] = 1;
                    if j == 0 {
                        j = usize::MAX;
                        break;
                    }
                }
                if j == usize::MAX {
                    break;
                }
            }
            // next support
            let mut i = w;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if support[i] < k - w + i {
                    support[i] += 1;
                    for j in i + 1..w {
                        support[j] = support[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    (best, visited)
}
