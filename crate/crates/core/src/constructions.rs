//! Extremal families of trees and maximal outerplanar graphs.
//!
//! Each generator numbers vertices deterministically, layer by layer and left
//! to right, so the graph6 encoding of an output is stable across releases.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::enumeration;
use crate::error::{Error, Result};
use crate::graph::{DegreeCensus, Graph};
use crate::spread;

/// Family names as used on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    TreeSharpK0,
    TreeLeafHub,
    MopK1,
    MopK2,
    MopF,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::TreeSharpK0, Family::TreeLeafHub, Family::MopK1, Family::MopK2, Family::MopF];

    pub fn name(self) -> &'static str {
        match self {
            Family::TreeSharpK0 => "tree-sharp-k0",
            Family::TreeLeafHub => "tree-leaf-hub",
            Family::MopK1 => "mop-k1",
            Family::MopK2 => "mop-k2",
            Family::MopF => "mop-f",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Parameters the family takes, in order.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::TreeSharpK0 => &["m"],
            Family::TreeLeafHub => &["n", "k"],
            Family::MopK1 | Family::MopK2 => &["p"],
            Family::MopF => &["t", "k"],
        }
    }

    pub fn precondition(self) -> &'static str {
        match self {
            Family::TreeSharpK0 => "m >= 1",
            Family::TreeLeafHub => "k >= 1, n >= k + 3 and (n - 2) divisible by (k + 1)",
            Family::MopK1 => "p >= 3",
            Family::MopK2 => "p >= 2",
            Family::MopF => "t >= 1 and k >= 3",
        }
    }

    pub fn class(self) -> ClassCheck {
        match self {
            Family::TreeSharpK0 | Family::TreeLeafHub => ClassCheck::Tree,
            _ => ClassCheck::Mop,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionSpec {
    /// Tree with `rep = (n + 2) / 3`, `n = 9m - 2`.
    TreeSharpK0 { m: usize },
    /// Tree with degrees 1 and `k + 2` only.
    TreeLeafHub { n: usize, k: usize },
    /// Three-layer MOP with `sp(G, 1) = p + 3`, `n = 3p - 2`.
    MopK1 { p: usize },
    /// Three-layer MOP with `sp(G, 2) = 5p + 4`, `n = 11p + 5`.
    MopK2 { p: usize },
    /// MOP with `2t` hubs of degree `k + 3`, `n = 2t(k - 1) + 6`.
    MopF { t: usize, k: usize },
}

impl ConstructionSpec {
    /// Builds a spec from `name=value` parameters.
    pub fn from_params(family: Family, params: &BTreeMap<String, usize>) -> Result<Self> {
        let get = |key: &str| {
            params.get(key).copied().ok_or_else(|| {
                Error::InvalidArgument(format!("{family} needs parameter --{key} ({})", family.precondition()))
            })
        };
        let spec = match family {
            Family::TreeSharpK0 => ConstructionSpec::TreeSharpK0 { m: get("m")? },
            Family::TreeLeafHub => ConstructionSpec::TreeLeafHub { n: get("n")?, k: get("k")? },
            Family::MopK1 => ConstructionSpec::MopK1 { p: get("p")? },
            Family::MopK2 => ConstructionSpec::MopK2 { p: get("p")? },
            Family::MopF => ConstructionSpec::MopF { t: get("t")?, k: get("k")? },
        };
        spec.check()?;
        Ok(spec)
    }

    pub fn family(&self) -> Family {
        match self {
            ConstructionSpec::TreeSharpK0 { .. } => Family::TreeSharpK0,
            ConstructionSpec::TreeLeafHub { .. } => Family::TreeLeafHub,
            ConstructionSpec::MopK1 { .. } => Family::MopK1,
            ConstructionSpec::MopK2 { .. } => Family::MopK2,
            ConstructionSpec::MopF { .. } => Family::MopF,
        }
    }

    /// Parameters as `(name, value)` pairs.
    pub fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            ConstructionSpec::TreeSharpK0 { m } => [("m", m)].into(),
            ConstructionSpec::TreeLeafHub { n, k } => [("n", n), ("k", k)].into(),
            ConstructionSpec::MopK1 { p } | ConstructionSpec::MopK2 { p } => [("p", p)].into(),
            ConstructionSpec::MopF { t, k } => [("t", t), ("k", k)].into(),
        }
    }

    fn check(&self) -> Result<()> {
        let bad = |what: String| Err(Error::InvalidArgument(format!("{}: {what}", self.family())));
        match *self {
            ConstructionSpec::TreeSharpK0 { m } if m < 1 => bad(format!("need m >= 1, got {m}")),
            ConstructionSpec::TreeLeafHub { k, .. } if k < 1 => bad(format!("need k >= 1, got {k}")),
            ConstructionSpec::TreeLeafHub { n, k } if n < k + 3 => bad(format!("need n >= k + 3 = {}, got {n}", k + 3)),
            ConstructionSpec::TreeLeafHub { n, k } if (n - 2) % (k + 1) != 0 => bad(format!(
                "need (n - 2) divisible by k + 1 = {}, but n - 2 = {} leaves residue {}",
                k + 1,
                n - 2,
                (n - 2) % (k + 1)
            )),
            ConstructionSpec::MopK1 { p } if p < 3 => bad(format!("need p >= 3, got {p}")),
            ConstructionSpec::MopK2 { p } if p < 2 => bad(format!("need p >= 2, got {p}")),
            ConstructionSpec::MopF { t, .. } if t < 1 => bad(format!("need t >= 1, got {t}")),
            ConstructionSpec::MopF { k, .. } if k < 3 => bad(format!("need k >= 3, got {k}")),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            ConstructionSpec::TreeSharpK0 { m } => 9 * m - 2,
            ConstructionSpec::TreeLeafHub { n, .. } => n,
            ConstructionSpec::MopK1 { p } => 3 * p - 2,
            ConstructionSpec::MopK2 { p } => 11 * p + 5,
            ConstructionSpec::MopF { t, k } => 2 * t * (k - 1) + 6,
        }
    }

    /// Window width the family is extremal for.
    pub fn spread_k(&self) -> usize {
        match *self {
            ConstructionSpec::TreeSharpK0 { .. } => 0,
            ConstructionSpec::TreeLeafHub { k, .. } => k,
            ConstructionSpec::MopK1 { .. } => 1,
            ConstructionSpec::MopK2 { .. } => 2,
            ConstructionSpec::MopF { k, .. } => k,
        }
    }

    /// `sp(G, spread_k())` the construction attains.
    pub fn expected_sp(&self) -> usize {
        match *self {
            ConstructionSpec::TreeSharpK0 { m } => 3 * m,
            ConstructionSpec::TreeLeafHub { n, k } => (n * k + 2) / (k + 1),
            ConstructionSpec::MopK1 { p } => p + 3,
            ConstructionSpec::MopK2 { p } => 5 * p + 4,
            ConstructionSpec::MopF { t, k } => 2 * t * (k - 2) + 6,
        }
    }

    pub fn expected_census(&self) -> DegreeCensus {
        match *self {
            ConstructionSpec::TreeSharpK0 { m } => DegreeCensus::from_pairs([(1, 3 * m), (2, 3 * m), (3, 3 * m - 2)]),
            ConstructionSpec::TreeLeafHub { n, k } => {
                DegreeCensus::from_pairs([(1, (n * k + 2) / (k + 1)), (k + 2, (n - 2) / (k + 1))])
            }
            ConstructionSpec::MopK1 { p } => DegreeCensus::from_pairs([(2, p - 1), (3, 4), (4, p - 3), (6, p - 2)]),
            ConstructionSpec::MopK2 { p } => {
                DegreeCensus::from_pairs([(2, 5 * p + 2), (3, 2), (5, 4 * p + 2), (6, p - 1), (8, p)])
            }
            ConstructionSpec::MopF { t, k } => {
                DegreeCensus::from_pairs([(2, 2 * t + 2), (3, 2 * t * (k - 3) + 2), (4, 2), (k + 3, 2 * t)])
            }
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.check()?;
        match *self {
            ConstructionSpec::TreeSharpK0 { m } => tree_sharp_k0(m),
            ConstructionSpec::TreeLeafHub { n, k } => tree_leaf_hub(n, k),
            ConstructionSpec::MopK1 { p } => mop_spread1(p),
            ConstructionSpec::MopK2 { p } => mop_spread2(p),
            ConstructionSpec::MopF { t, k } => mop_family_f(t, k),
        }
    }

    /// Builds and validates against the expected census and `sp`.
    pub fn validate(&self, g: &Graph) -> ValidationReport {
        validate_construction(g, &self.expected_census(), self.family().class(), Some((self.spread_k(), self.expected_sp())))
    }
}

/// Path `v_1..v_{3m+2}` with a two-edge path hung on each of `v_3..v_{3m}`.
pub fn tree_sharp_k0(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("tree-sharp-k0: need m >= 1, got {m}")));
    }
    let spine = 3 * m + 2;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    // Spine positions 2..=3m-1 are v_3..v_{3m}.
    for anchor in 2..3 * m {
        edges.extend([(anchor, next), (next, next + 1)]);
        next += 2;
    }
    Graph::from_edges(next, edges)
}

/// Caterpillar whose spine vertices all have degree `k + 2`, every other
/// vertex being a leaf. Spine first, then leaves in spine order.
pub fn tree_leaf_hub(n: usize, k: usize) -> Result<Graph> {
    ConstructionSpec::TreeLeafHub { n, k }.check()?;
    let hubs = (n - 2) / (k + 1);
    let mut edges: Vec<(usize, usize)> = (1..hubs).map(|i| (i - 1, i)).collect();
    let mut next = hubs;
    for i in 0..hubs {
        let on_spine = usize::from(i > 0) + usize::from(i + 1 < hubs);
        for _ in 0..k + 2 - on_spine {
            edges.push((i, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Graph::from_edges(n, edges)
}

/// Layers `U` (`p-1`), `V` (`p`) and `W` (`p-1`): `u_i ~ v_i, v_{i+1}`,
/// `w_i ~ v_i, v_{i+1}`, and `V`, `W` are paths.
pub fn mop_spread1(p: usize) -> Result<Graph> {
    if p < 3 {
        return Err(Error::InvalidArgument(format!("mop-k1: need p >= 3, got {p}")));
    }
    let u = |i: usize| i - 1;
    let v = |i: usize| (p - 1) + i - 1;
    let w = |i: usize| (2 * p - 1) + i - 1;
    let mut edges = Vec::new();
    for i in 1..p {
        edges.extend([(u(i), v(i)), (u(i), v(i + 1)), (w(i), v(i)), (w(i), v(i + 1)), (v(i), v(i + 1))]);
        if i + 1 < p {
            edges.push((w(i), w(i + 1)));
        }
    }
    Graph::from_edges(3 * p - 2, edges)
}

/// Layers `U` (path of `p`), `V` (path of `5p+3`) and `W` (`5p+2` ears on the
/// `V` edges). `u_1` sees `v_1..v_7`, `u_p` sees `v_{5p-3}..v_{5p+3}` and
/// `u_i` sees `v_{5i-3}..v_{5i+2}` for `2 <= i <= p-1`.
pub fn mop_spread2(p: usize) -> Result<Graph> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!("mop-k2: need p >= 2, got {p}")));
    }
    let len = 5 * p + 3;
    let u = |i: usize| i - 1;
    let v = |j: usize| p + j - 1;
    let w = |j: usize| p + len + j - 1;
    let mut edges = Vec::new();
    for i in 1..p {
        edges.push((u(i), u(i + 1)));
    }
    for j in 1..len {
        edges.extend([(v(j), v(j + 1)), (w(j), v(j)), (w(j), v(j + 1))]);
    }
    for i in 1..=p {
        let span = if i == 1 {
            1..=7
        } else if i == p {
            5 * p - 3..=5 * p + 3
        } else {
            5 * i - 3..=5 * i + 2
        };
        edges.extend(span.map(|j| (u(i), v(j))));
    }
    Graph::from_edges(11 * p + 5, edges)
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Fan gadget on the boundary edge `(a, b)`: a path `c_1..c_len` with `a`
    /// adjacent to all of it and `c_len ~ b`. `a` gains `len`, `b` gains one.
    /// Returns `c_len`.
    fn fan(&mut self, a: usize, b: usize, len: usize) -> usize {
        debug_assert!(len >= 1);
        let mut prev = None;
        for _ in 0..len {
            let c = self.vertex();
            self.edges.push((a, c));
            if let Some(p) = prev {
                self.edges.push((p, c));
            }
            prev = Some(c);
        }
        let last = prev.unwrap();
        self.edges.push((last, b));
        last
    }

    /// Fan gadget plus an ear on `(c_len, b)`: `a` gains `len`, `b` gains two.
    fn fan_with_ear(&mut self, a: usize, b: usize, len: usize) {
        let last = self.fan(a, b, len);
        let ear = self.vertex();
        self.edges.extend([(last, ear), (ear, b)]);
    }
}

/// Maximal outerplanar graph with `2t` hubs of degree `k + 3`, `2t + 2`
/// vertices of degree 2, two of degree 4 and the rest of degree 3, on
/// `n = 2t(k-1) + 6` vertices. The window `[2, k+2]` misses only the hubs,
/// so `sp(G, k) = 2t(k-2) + 6`.
///
/// The hubs `h_0..h_{2t-1}` form a polygon triangulated as a zigzag (for
/// `t = 1`, a single edge with two sides). Every boundary edge `(h_i, h_{i+1})`
/// of that core carries a fan gadget rooted at `h_i`; the two edges leading
/// into the zigzag's degree-2 corners carry an extra ear. Fan lengths are
/// then forced by the hub degrees.
pub fn mop_family_f(t: usize, k: usize) -> Result<Graph> {
    ConstructionSpec::MopF { t, k }.check()?;
    let target = k + 3;
    let hubs = 2 * t;
    let mut b = Builder { n: hubs, edges: Vec::new() };
    if t == 1 {
        // h_0 and h_1 share an edge; each side gets a fan from one hub plus an
        // ear at the other: 1 + k + 2 = k + 3 on both.
        b.edges.push((0, 1));
        b.fan_with_ear(0, 1, k);
        b.fan_with_ear(1, 0, k);
    } else {
        // Zigzag diagonals (1, N-1), (1, N-2), (2, N-2), (2, N-3), ...
        let m = hubs;
        let mut core_degree = alloc::vec![2usize; m];
        let (mut lo, mut hi) = (1, m - 1);
        let mut diagonals = Vec::new();
        while diagonals.len() < m - 3 {
            diagonals.push((lo, hi));
            if diagonals.len() % 2 == 1 {
                hi -= 1;
            } else {
                lo += 1;
            }
        }
        for &(x, y) in &diagonals {
            core_degree[x] += 1;
            core_degree[y] += 1;
        }
        b.edges.extend((0..m).map(|i| (i, (i + 1) % m)));
        b.edges.extend(diagonals);
        let corners: Vec<usize> = (0..m).filter(|&i| core_degree[i] == 2).collect();
        debug_assert_eq!(corners.len(), 2);
        // Gadget on (h_i, h_{i+1}) is rooted at h_i; h_{i+1} gains 1, or 2 if
        // h_{i+1} is a corner.
        for (i, &degree) in core_degree.iter().enumerate() {
            let from_left = if corners.contains(&i) { 2 } else { 1 };
            let len = target
                .checked_sub(degree + from_left)
                .filter(|&len| len >= 1)
                .ok_or_else(|| Error::Infeasible(format!("mop-f: no fan length for hub {i} at t = {t}, k = {k}")))?;
            let next = (i + 1) % m;
            if corners.contains(&next) {
                if len < 2 {
                    return Err(Error::Infeasible(format!("mop-f: degree-4 gadget needs fan length >= 2 at t = {t}, k = {k}")));
                }
                b.fan_with_ear(i, next, len);
            } else {
                b.fan(i, next, len);
            }
        }
    }
    let g = Graph::from_edges(b.n, b.edges)?;
    let spec = ConstructionSpec::MopF { t, k };
    let report = spec.validate(&g);
    if !report.passed() {
        return Err(Error::Infeasible(format!("mop-f: generated graph failed validation at t = {t}, k = {k}: {report}")));
    }
    Ok(g)
}

/// Searches all triangulations of the `n`-gon, `n = 2t(k-1) + 6 <= 16`, for
/// one with the F-family census; the smallest sorted diagonal set wins.
pub fn mop_family_f_search(t: usize, k: usize) -> Result<Graph> {
    let spec = ConstructionSpec::MopF { t, k };
    spec.check()?;
    let n = spec.order();
    enumeration::find_mop_with_census(n, &spec.expected_census(), false)?
        .ok_or_else(|| Error::Infeasible(format!("no triangulation of the {n}-gon has census {}", spec.expected_census())))
}

/// Class membership a construction must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassCheck {
    Tree,
    Mop,
}

impl ClassCheck {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassCheck::Tree => "tree",
            ClassCheck::Mop => "mop",
        }
    }

    pub fn holds(self, g: &Graph) -> bool {
        match self {
            ClassCheck::Tree => g.is_tree(),
            ClassCheck::Mop => g.is_mop(),
        }
    }
}

/// Outcome of [`validate_construction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub class: ClassCheck,
    pub class_ok: bool,
    /// `(degree, expected count, actual count)` for every mismatch.
    pub census_diff: Vec<(usize, usize, usize)>,
    /// `(k, expected sp, computed sp)` when an `sp` check was requested.
    pub spread: Option<(usize, usize, usize)>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.class_ok && self.census_diff.is_empty() && self.spread.is_none_or(|(_, want, got)| want == got)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("pass");
        }
        f.write_str("fail:")?;
        if !self.class_ok {
            write!(f, " not a {}", self.class.as_str())?;
        }
        for (d, want, got) in &self.census_diff {
            write!(f, " degree {d}: expected {want}, found {got};")?;
        }
        if let Some((k, want, got)) = self.spread {
            if want != got {
                write!(f, " sp(G,{k}) expected {want}, found {got}")?;
            }
        }
        Ok(())
    }
}

/// Checks class membership, exact census equality and, optionally,
/// `sp(g, k) == expected`.
pub fn validate_construction(
    g: &Graph,
    expected: &DegreeCensus,
    class: ClassCheck,
    spread_check: Option<(usize, usize)>,
) -> ValidationReport {
    let actual = g.census();
    let mut degrees: Vec<usize> = expected.iter().chain(actual.iter()).map(|(d, _)| d).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let census_diff = degrees
        .into_iter()
        .filter(|&d| expected.count(d) != actual.count(d))
        .map(|d| (d, expected.count(d), actual.count(d)))
        .collect();
    let spread = spread_check.map(|(k, want)| (k, want, spread::sp(g, k).map_or(0, |r| r.value)));
    ValidationReport { class, class_ok: class.holds(g), census_diff, spread }
}
