//! The three search engines. All of them enumerate candidate vectors in
//! lexicographic order with +1 < −1 and recompute the objective of any
//! candidate with the same ascending-index summation, so ties resolve to
//! the lexicographically smallest vector and every engine produces an
//! identical result wherever two of them can both run.

use std::f64::consts::PI;

use crate::types::{Engine, SignSearchResult, SignVector};
use crate::SignOptError;

/// Memory allowance for the meet-in-the-middle half-sum table.
pub const DEFAULT_MITM_BUDGET_MB: u64 = 2048;

const EXHAUSTIVE_MAX_TERMS: usize = 32;
const MITM_MAX_TERMS: usize = 64;
const DIRECT_MAX_TERMS: usize = 20;
const CANDIDATE_BAND: f64 = 1e-9;
const BYTES_PER_TABLE_ENTRY: u64 = 32;

fn require_power_of_two(n: u32) -> Result<usize, SignOptError> {
    if !n.is_power_of_two() || n < 4 {
        return Err(SignOptError::Parameter(format!(
            "sign search needs a power of two n >= 4, got n = {n}"
        )));
    }
    Ok((n / 4) as usize)
}

fn terms_for(n: u32) -> Vec<f64> {
    let nf = f64::from(n);
    (0..(n / 4) as usize)
        .map(|k| ((2 * k + 1) as f64 * PI / nf).sin())
        .collect()
}

/// Candidate masks cover the free entries 1..L−1; entry k sits at bit
/// L−1−k so that ascending mask order is lexicographic vector order.
fn sum_for_mask(terms: &[f64], mask: u64) -> f64 {
    let l = terms.len();
    let mut s = 0.0;
    for (k, t) in terms.iter().enumerate() {
        if k > 0 && mask & (1u64 << (l - 1 - k)) != 0 {
            s -= t;
        } else {
            s += t;
        }
    }
    s
}

fn entries_for_mask(l: usize, mask: u64) -> Vec<i8> {
    (0..l)
        .map(|k| {
            if k > 0 && mask & (1u64 << (l - 1 - k)) != 0 {
                -1
            } else {
                1
            }
        })
        .collect()
}

fn better(m: f64, mask: u64, best_m: f64, best_mask: u64) -> bool {
    m < best_m || (m == best_m && mask < best_mask)
}

/// Plain scan over all canonical vectors, one exact evaluation each.
fn best_direct(terms: &[f64]) -> (f64, u64) {
    let l = terms.len();
    let mut best_m = f64::INFINITY;
    let mut best_mask = 0u64;
    for mask in 0..(1u64 << (l - 1)) {
        let m = sum_for_mask(terms, mask).abs();
        if m < best_m {
            best_m = m;
            best_mask = mask;
        }
    }
    (best_m, best_mask)
}

/// Gray-code walk keeping a running sum; one term flips per step. The
/// running value only screens candidates (drift stays far below the
/// band thanks to periodic refresh), every candidate inside the band is
/// re-evaluated exactly.
fn best_gray(terms: &[f64]) -> (f64, u64) {
    let l = terms.len();
    let mut signs: Vec<f64> = vec![1.0; l];
    let mut running: f64 = sum_for_mask(terms, 0);
    let mut best_m = running.abs();
    let mut best_mask = 0u64;
    let mut mask = 0u64;
    for step in 1..(1u64 << (l - 1)) {
        let k = step.trailing_zeros() as usize + 1;
        signs[k] = -signs[k];
        running += 2.0 * signs[k] * terms[k];
        mask ^= 1u64 << (l - 1 - k);
        if (step & 0x3fff) == 0 {
            running = terms
                .iter()
                .zip(&signs)
                .fold(0.0, |acc, (t, s)| acc + s * t);
        }
        if running.abs() <= best_m + CANDIDATE_BAND {
            let m = sum_for_mask(terms, mask).abs();
            if better(m, mask, best_m, best_mask) {
                best_m = m;
                best_mask = mask;
            }
        }
    }
    (best_m, best_mask)
}

/// Split the indices in half, tabulate and sort every signed sum of the
/// back half, then pair each canonical front-half sum with the nearby
/// table entries found by binary search.
fn best_mitm(terms: &[f64], budget_mb: u64) -> Result<(f64, u64), SignOptError> {
    let l = terms.len();
    let nb = l / 2;
    let na = l - nb;
    let bytes = (1u64 << nb) * BYTES_PER_TABLE_ENTRY;
    if bytes > budget_mb.saturating_mul(1 << 20) {
        return Err(SignOptError::Capacity(format!(
            "half-sum table needs {bytes} bytes, over the {budget_mb} MiB budget"
        )));
    }
    let mut table: Vec<(f64, u64)> = (0..(1u64 << nb))
        .map(|bmask| {
            let mut s = 0.0;
            for (k, t) in terms.iter().enumerate().skip(na) {
                if bmask & (1u64 << (l - 1 - k)) != 0 {
                    s -= t;
                } else {
                    s += t;
                }
            }
            (s, bmask)
        })
        .collect();
    table.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut best_m = sum_for_mask(terms, 0).abs();
    let mut best_mask = 0u64;
    for ahigh in 0..(1u64 << (na - 1)) {
        let amask = ahigh << (l - na);
        let mut sa = 0.0;
        for (k, t) in terms.iter().enumerate().take(na) {
            if k > 0 && amask & (1u64 << (l - 1 - k)) != 0 {
                sa -= t;
            } else {
                sa += t;
            }
        }
        let start = table.partition_point(|e| e.0 < -sa);
        let mut probe = |i: usize| -> bool {
            let (v, bmask) = table[i];
            if (sa + v).abs() > best_m + CANDIDATE_BAND {
                return false;
            }
            let full = amask | bmask;
            let m = sum_for_mask(terms, full).abs();
            if better(m, full, best_m, best_mask) {
                best_m = m;
                best_mask = full;
            }
            true
        };
        for i in start..table.len() {
            if !probe(i) {
                break;
            }
        }
        for i in (0..start).rev() {
            if !probe(i) {
                break;
            }
        }
    }
    Ok((best_m, best_mask))
}

fn result_from_mask(
    n: u32,
    l: usize,
    mask: u64,
    engine: Engine,
    optimal: bool,
) -> Result<SignSearchResult, SignOptError> {
    let best = SignVector::new(n, entries_for_mask(l, mask))?;
    Ok(SignSearchResult::from_vector(best, engine, optimal))
}

/// |Σ b_k sin((2k+1)π/n)| for a vector belonging to this n.
pub fn objective(n: u32, b: &SignVector) -> Result<f64, SignOptError> {
    if b.n() != n {
        return Err(SignOptError::Parameter(format!(
            "sign vector belongs to n = {}, objective asked for n = {n}",
            b.n()
        )));
    }
    Ok(b.signed_sum().abs())
}

/// Globally optimal vector by scanning every canonical candidate.
pub fn search_exhaustive(n: u32) -> Result<SignSearchResult, SignOptError> {
    let l = require_power_of_two(n)?;
    if l > EXHAUSTIVE_MAX_TERMS {
        return Err(SignOptError::Capacity(format!(
            "exhaustive search covers up to {EXHAUSTIVE_MAX_TERMS} terms, n = {n} has {l}; \
             use the meet-in-the-middle or block-pattern engine"
        )));
    }
    let terms = terms_for(n);
    let (_, mask) = if l <= DIRECT_MAX_TERMS {
        best_direct(&terms)
    } else {
        best_gray(&terms)
    };
    result_from_mask(n, l, mask, Engine::Exhaustive, true)
}

/// Globally optimal vector by the meet-in-the-middle table, default budget.
pub fn search_mitm(n: u32) -> Result<SignSearchResult, SignOptError> {
    search_mitm_with_budget(n, DEFAULT_MITM_BUDGET_MB)
}

pub fn search_mitm_with_budget(n: u32, budget_mb: u64) -> Result<SignSearchResult, SignOptError> {
    let l = require_power_of_two(n)?;
    if l > MITM_MAX_TERMS {
        return Err(SignOptError::Capacity(format!(
            "meet-in-the-middle covers up to {MITM_MAX_TERMS} terms, n = {n} has {l}; \
             use the block-pattern engine"
        )));
    }
    let terms = terms_for(n);
    let (_, mask) = best_mitm(&terms, budget_mb)?;
    result_from_mask(n, l, mask, Engine::MeetInMiddle, true)
}

/// Expand a vector for n into one for 4n, each entry e becoming the
/// block e·(−1, +1, +1, −1). The expansion scales the objective by
/// exactly 4 sin(π/4n) sin(π/2n).
pub fn derive_block_pattern(n: u32, base: &SignVector) -> Result<SignVector, SignOptError> {
    if base.n() != n {
        return Err(SignOptError::Parameter(format!(
            "base vector belongs to n = {}, expansion asked for n = {n}",
            base.n()
        )));
    }
    let n4 = n.checked_mul(4).ok_or_else(|| {
        SignOptError::Parameter(format!("expanded size 4n overflows for n = {n}"))
    })?;
    let expanded: Vec<i8> = base
        .entries()
        .iter()
        .flat_map(|&e| [-e, e, e, -e])
        .collect();
    SignVector::new(n4, expanded)
}

/// The vector reached by repeated block expansion from the smallest
/// seeds. Optimal through n = 32, slightly suboptimal beyond.
pub fn block_pattern_vector(n: u32) -> Result<SignVector, SignOptError> {
    require_power_of_two(n)?;
    match n {
        4 => SignVector::new(4, vec![1]),
        8 => SignVector::new(8, vec![1, -1]),
        _ => derive_block_pattern(n / 4, &block_pattern_vector(n / 4)?),
    }
}

pub fn block_pattern_result(n: u32) -> Result<SignSearchResult, SignOptError> {
    let best = block_pattern_vector(n)?;
    Ok(SignSearchResult::from_vector(best, Engine::BlockPattern, false))
}

/// Pick an engine by problem size: exhaustive scan while the candidate
/// count stays small, then the table engine, then block expansion.
pub fn search(n: u32) -> Result<SignSearchResult, SignOptError> {
    let l = require_power_of_two(n)?;
    if l <= DIRECT_MAX_TERMS {
        search_exhaustive(n)
    } else if l <= 40 {
        search_mitm(n)
    } else {
        block_pattern_result(n)
    }
}
