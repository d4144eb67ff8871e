//! The spread of a vertex set and the parameter `sp(G, k)`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex set whose degrees fit in a window of width `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadResult {
    pub k: usize,
    /// `sp(G, k)`.
    pub value: usize,
    /// Smallest degree in the winning set.
    pub window_lo: usize,
    /// Largest degree in the winning set; `window_hi - window_lo <= k`.
    pub window_hi: usize,
    /// Every vertex whose degree lies in `[window_lo, window_lo + k]`, ascending.
    pub witness: Vec<usize>,
}

/// Difference between the largest and smallest host-graph degree over `set`.
pub fn spread_of_set(g: &Graph, set: &[usize]) -> Result<usize> {
    if set.is_empty() {
        return Err(Error::InvalidArgument("spread of an empty vertex set".into()));
    }
    if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidArgument(format!("vertex {v} out of range for {} vertices", g.n())));
    }
    let degrees = set.iter().map(|&v| g.degree(v));
    let lo = degrees.clone().min().unwrap();
    let hi = degrees.max().unwrap();
    Ok(hi - lo)
}

/// Best window over an ascending degree slice: `(count, lo, hi)` with the
/// smallest `lo` among maximal windows. Window starts are restricted to
/// realized degrees; any optimal window can be shifted down to one.
pub fn best_window(sorted: &[usize], k: usize) -> Option<(usize, usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    let mut hi = 0;
    let mut start = 0;
    while start < sorted.len() {
        let lo = sorted[start];
        if hi < start {
            hi = start;
        }
        while hi < sorted.len() && sorted[hi] - lo <= k {
            hi += 1;
        }
        let count = hi - start;
        if best.is_none_or(|(c, _, _)| count > c) {
            best = Some((count, lo, sorted[hi - 1]));
        }
        while start < sorted.len() && sorted[start] == lo {
            start += 1;
        }
    }
    best
}

/// Best window over a degree histogram (`counts[d]` vertices of degree `d`).
/// Returns `(count, lo)`, smallest `lo` on ties.
pub fn best_window_counts(counts: &[usize], k: usize) -> (usize, usize) {
    let mut best = (0, 0);
    // Window [lo, lo + k] slid over every lo; counts beyond the slice are 0.
    let mut running: usize = counts.iter().take(k + 1).sum();
    for lo in 0..counts.len() {
        if counts[lo] > 0 && running > best.0 {
            best = (running, lo);
        }
        running -= counts[lo];
        if let Some(&c) = counts.get(lo + k + 1) {
            running += c;
        }
    }
    best
}

/// `sp(G, k)` by a two-pointer sweep over the sorted degree sequence.
pub fn sp(g: &Graph, k: usize) -> Result<SpreadResult> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("sp of the empty graph".into()));
    }
    let seq = g.degree_sequence();
    let (value, window_lo, window_hi) = best_window(seq.as_slice(), k).expect("nonempty");
    let witness: Vec<usize> =
        (0..g.n()).filter(|&v| (window_lo..=window_lo + k).contains(&g.degree(v))).collect();
    debug_assert_eq!(witness.len(), value);
    Ok(SpreadResult { k, value, window_lo, window_hi, witness })
}

/// Largest multiplicity in the degree sequence, `sp(G, 0)`.
pub fn rep(g: &Graph) -> Result<usize> {
    sp(g, 0).map(|r| r.value)
}

/// Largest vertex count for which [`sp_bruteforce`] runs.
pub const BRUTEFORCE_MAX_N: usize = 20;

/// `sp(G, k)` by enumerating every vertex subset. Independent of the sweep
/// in [`sp`]; intended as a test oracle.
pub fn sp_bruteforce(g: &Graph, k: usize) -> Result<usize> {
    let n = g.n();
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::Refused(format!(
            "exhaustive subset enumeration limited to {BRUTEFORCE_MAX_N} vertices, got {n}"
        )));
    }
    let degrees = g.degrees();
    let mut best = 0;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut lo = usize::MAX;
        let mut hi = 0;
        for (v, &d) in degrees.iter().enumerate() {
            if mask >> v & 1 == 1 {
                lo = lo.min(d);
                hi = hi.max(d);
            }
        }
        if hi - lo <= k {
            best = size;
        }
    }
    Ok(best)
}
