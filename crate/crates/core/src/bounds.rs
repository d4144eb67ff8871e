//! Lower and upper bounds on `sp(G, k)`, evaluated in exact rational
//! arithmetic.
//!
//! Bounds are kept as exact rationals; integer thresholds are taken only
//! when a bound is compared with a computed value. Strict lower bounds
//! (`sp > x`) become `sp >= floor(x) + 1`.

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spread;

/// Exact rational number. Every bound used here has small numerators and
/// denominators, so `i128` never overflows for graphs that fit in memory.
pub type Rational = num_rational::Ratio<i128>;

fn int(x: usize) -> Rational {
    Rational::from_integer(x as i128)
}

/// Smallest integer `>= r`.
pub fn ceil(r: &Rational) -> i128 {
    r.numer().div_ceil(r.denom())
}

/// Largest integer `<= r`.
pub fn floor(r: &Rational) -> i128 {
    r.numer().div_floor(r.denom())
}

/// Order, degree extremes, average degree and window width of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub avg_degree: Rational,
    pub k: usize,
}

impl GraphStats {
    pub fn new(n: usize, min_degree: usize, max_degree: usize, avg_degree: Rational, k: usize) -> Self {
        debug_assert!(int(min_degree) <= avg_degree && avg_degree <= int(max_degree));
        GraphStats { n, min_degree, max_degree, avg_degree, k }
    }

    pub fn of(g: &Graph, k: usize) -> Self {
        let seq = g.degree_sequence();
        GraphStats::new(g.n(), seq.min(), seq.max(), seq.average(), k)
    }

    /// Stats of a tree on `n >= 2` vertices with the given maximum degree.
    pub fn tree(n: usize, max_degree: usize, k: usize) -> Self {
        GraphStats::new(n, 1, max_degree, Rational::new(2 * (n as i128 - 1), n as i128), k)
    }

    /// Stats of a maximal outerplanar graph on `n >= 3` vertices.
    pub fn mop(n: usize, max_degree: usize, k: usize) -> Self {
        GraphStats::new(n, 2, max_degree, Rational::new(4 * n as i128 - 6, n as i128), k)
    }

    fn width(&self) -> Rational {
        int(self.k + 1)
    }
}

/// Every graph on `n >= k + 2` vertices has `sp(G, k) >= k + 2`.
pub fn baseline_bound(n: usize, k: usize) -> Result<usize> {
    if n < k + 2 {
        return Err(Error::NotApplicable(format!("baseline bound needs n >= k + 2, got n = {n}, k = {k}")));
    }
    Ok(k + 2)
}

/// Lower bounds from the gap between average degree and the extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapBounds {
    /// `n(k+1) / (2d - 2δ + k + 1)`
    pub from_min: Rational,
    /// `n(k+1) / (2Δ - 2d + k + 1)`, the same bound applied to the complement.
    pub from_max: Rational,
    pub best: Rational,
}

pub fn gap_bounds(s: &GraphStats) -> GapBounds {
    let two = Rational::from_integer(2);
    let top = int(s.n) * s.width();
    let from_min = top / (two * (s.avg_degree - int(s.min_degree)) + s.width());
    let from_max = top / (two * (int(s.max_degree) - s.avg_degree) + s.width());
    let best = from_min.max(from_max);
    GapBounds { from_min, from_max, best }
}

/// `sp(G, k) <= (k + 1) rep(G)`.
pub fn rep_upper_bound(rep0: usize, k: usize) -> usize {
    (k + 1) * rep0
}

/// Lower bound for a fixed number `t` of full degree layers:
/// `2n(δ - d + t(k+1)) / (t(t+1)(k+1))`. May be zero or negative.
pub fn layered_bound(s: &GraphStats, t: usize) -> Rational {
    assert!(t >= 1, "layer count must be positive");
    let n = int(s.n);
    let t_r = int(t);
    let num = Rational::from_integer(2) * n * (int(s.min_degree) - s.avg_degree + t_r * s.width());
    num / (t_r * int(t + 1) * s.width())
}

/// Writing `n = rt + b` with `r = sp(G, k)` and `0 <= b < r`, the true `t` is
/// at most `floor(n / r*)` for any lower bound `r*`. For each candidate `t`
/// both [`layered_bound`] and `r >= (n + 1) / (t + 1)` hold, so the minimum
/// over candidates of the larger of the two is a lower bound on `r`.
pub fn refined_lower_bound(s: &GraphStats) -> Rational {
    let r_star = gap_bounds(s).best;
    let t_max = floor(&(int(s.n) / r_star)).max(1) as usize;
    (1..=t_max)
        .map(|t| layered_bound(s, t).max(int(s.n + 1) / int(t + 1)))
        .min()
        .expect("t range is nonempty")
}

/// Class lower bound for trees: `ceil(n/3)` at `k = 0`, `(nk+2)/(k+1)` for
/// `k >= 1`.
pub fn tree_lower_bound(n: usize, k: usize) -> Result<Rational> {
    if n < 2 || n < k + 2 {
        return Err(Error::NotApplicable(format!("tree bound needs n >= max(2, k + 2), got n = {n}, k = {k}")));
    }
    if k == 0 {
        Ok(int(n.div_ceil(3)))
    } else {
        Ok(Rational::new((n * k + 2) as i128, (k + 1) as i128))
    }
}

/// How a [`BoundEntry`] constrains `sp(G, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundKind {
    /// `sp >= value`
    Lower,
    /// `sp > value`
    StrictLower,
    /// `sp <= value`
    Upper,
    /// Value attained by a known construction in the class; an upper bound
    /// on the class minimum, not on an individual graph.
    Construction,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Lower => "lower",
            BoundKind::StrictLower => "strict-lower",
            BoundKind::Upper => "upper",
            BoundKind::Construction => "construction",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    pub value: Rational,
    pub applicable: bool,
    /// Closed form of the bound.
    pub formula: &'static str,
}

impl BoundEntry {
    fn new(name: &'static str, kind: BoundKind, value: Rational, applicable: bool, formula: &'static str) -> Self {
        BoundEntry { name, kind, value, applicable, formula }
    }

    /// Integer form of the bound: the least admissible `sp` for lower
    /// bounds, the greatest for upper bounds and constructions.
    pub fn threshold(&self) -> i128 {
        match self.kind {
            BoundKind::Lower => ceil(&self.value),
            BoundKind::StrictLower => floor(&self.value) + 1,
            BoundKind::Upper | BoundKind::Construction => floor(&self.value),
        }
    }

    /// Whether `sp` contradicts this entry. Construction entries never do.
    pub fn is_violated_by(&self, sp: usize) -> bool {
        let sp = sp as i128;
        self.applicable
            && match self.kind {
                BoundKind::Lower | BoundKind::StrictLower => sp < self.threshold(),
                BoundKind::Upper => sp > self.threshold(),
                BoundKind::Construction => false,
            }
    }
}

/// Named bound values for one `(graph or class, k)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
    pub computed_sp: Option<usize>,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Entries contradicted by `computed_sp`; empty when it is absent.
    pub fn violations(&self) -> Vec<&BoundEntry> {
        match self.computed_sp {
            Some(sp) => self.violations_at(sp),
            None => Vec::new(),
        }
    }

    /// Entries contradicted by a given value of `sp`.
    pub fn violations_at(&self, sp: usize) -> Vec<&BoundEntry> {
        self.entries.iter().filter(|e| e.is_violated_by(sp)).collect()
    }

    /// Largest applicable lower threshold.
    pub fn best_lower(&self) -> Option<i128> {
        self.entries
            .iter()
            .filter(|e| e.applicable && matches!(e.kind, BoundKind::Lower | BoundKind::StrictLower))
            .map(BoundEntry::threshold)
            .max()
    }
}

/// Bounds on `MOP(n, k)`, the minimum of `sp(G, k)` over maximal outerplanar
/// graphs on `n >= 3` vertices.
pub fn mop_bounds(n: usize, k: usize) -> BoundReport {
    let ok = n >= 3;
    let n_r = int(n);
    let mut entries = Vec::new();
    let general = int(k + 1) * n_r * n_r / (int(k + 5) * n_r - int(12));
    entries.push(BoundEntry::new("mop_general_lower", BoundKind::Lower, general, ok, "(k+1)n^2/((5+k)n-12)"));
    match k {
        0 => entries.push(BoundEntry::new("mop_k0_lower", BoundKind::StrictLower, n_r / int(5), ok, "n/5 (strict)")),
        1 => entries.push(BoundEntry::new("mop_k1_lower", BoundKind::Lower, n_r / int(3) + Rational::one(), ok, "n/3+1")),
        2 => {
            entries.push(BoundEntry::new(
                "mop_k2_lower",
                BoundKind::Lower,
                Rational::new(4 * n as i128 + 6, 9),
                ok,
                "(4n+6)/9",
            ));
            // Attained exactly by the layered construction at n = 11p + 5, p >= 2.
            entries.push(BoundEntry::new(
                "mop_k2_construction",
                BoundKind::Construction,
                Rational::new(5 * n as i128 + 19, 11),
                n % 11 == 5 && n >= 27,
                "(5n+19)/11",
            ));
        }
        _ => {
            // Counts vertices of degree below k + 3, using the hub-count
            // estimate floor((n-6)/(k-1)); stated for n >= k + 5.
            let hubs = if n >= 6 { ((n - 6) / (k - 1)) as i128 } else { 0 };
            entries.push(BoundEntry::new(
                "mop_hub_lower",
                BoundKind::Lower,
                Rational::from_integer(n as i128 - hubs),
                ok && n >= k + 5,
                "n-floor((n-6)/(k-1))",
            ));
        }
    }
    BoundReport { entries, computed_sp: None }
}

/// Evaluates every bound that applies to `g` and records `sp(g, k)`.
pub fn bound_report(g: &Graph, k: usize) -> Result<BoundReport> {
    let result = spread::sp(g, k)?;
    let rep0 = spread::rep(g)?;
    let n = g.n();
    let stats = GraphStats::of(g, k);
    let gaps = gap_bounds(&stats);
    let mut entries = Vec::new();
    let base = baseline_bound(n, k);
    entries.push(BoundEntry::new(
        "baseline",
        BoundKind::Lower,
        int(base.as_ref().copied().unwrap_or(k + 2)),
        base.is_ok(),
        "k+2 (n >= k+2)",
    ));
    entries.push(BoundEntry::new("gap_min_degree", BoundKind::Lower, gaps.from_min, true, "n(k+1)/(2d-2δ+k+1)"));
    entries.push(BoundEntry::new("gap_max_degree", BoundKind::Lower, gaps.from_max, true, "n(k+1)/(2Δ-2d+k+1)"));
    entries.push(BoundEntry::new("gap_best", BoundKind::Lower, gaps.best, true, "max of the two gap bounds"));
    entries.push(BoundEntry::new(
        "refined_layered",
        BoundKind::Lower,
        refined_lower_bound(&stats).max(Rational::zero()),
        true,
        "min over t<=floor(n/r*) of max(2n(δ-d+t(k+1))/(t(t+1)(k+1)), (n+1)/(t+1))",
    ));
    entries.push(BoundEntry::new("rep_upper", BoundKind::Upper, int(rep_upper_bound(rep0, k)), true, "(k+1)rep(G)"));
    if g.is_tree() {
        let tree = tree_lower_bound(n, k);
        entries.push(BoundEntry::new(
            "tree_lower",
            BoundKind::Lower,
            tree.as_ref().cloned().unwrap_or_else(|_| Rational::zero()),
            tree.is_ok(),
            if k == 0 { "ceil(n/3)" } else { "(nk+2)/(k+1)" },
        ));
    }
    if g.is_mop() {
        entries.extend(mop_bounds(n, k).entries);
    }
    Ok(BoundReport { entries, computed_sp: Some(result.value) })
}
