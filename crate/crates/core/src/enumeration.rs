//! Exhaustive search for exact extremal values of `sp` over small maximal
//! outerplanar graphs and trees.
//!
//! Maximal outerplanar graphs on `n` vertices are exactly the triangulations
//! of a convex `n`-gon, so they are enumerated as labeled triangulations.
//! `sp` depends only on the degree multiset, hence labeled enumeration is
//! enough and every search deduplicates by degree census before evaluating
//! `sp`. The triangle resting on the boundary edge `(0, n-1)` has one of
//! `n - 2` apexes; each apex is an independent shard, and shard results merge
//! in shard order so the outcome never depends on how shards were scheduled.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::graph::{DegreeCensus, Graph};
use crate::spread::best_window_counts;

/// Largest polygon enumerated without an explicit override.
pub const MAX_POLYGON: usize = 16;
/// Smallest polygon the enumerator accepts.
pub const MIN_POLYGON: usize = 4;
/// Largest order for Prüfer enumeration of labeled trees.
pub const MAX_PRUFER: usize = 8;

/// Graph class searched by [`SearchRecord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphClass {
    Mop,
    Tree,
}

impl GraphClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::Mop => "mop",
            GraphClass::Tree => "tree",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exact minimum of `sp(G, k)` over a class at a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRecord {
    pub class: GraphClass,
    pub n: usize,
    pub k: usize,
    pub minimum: usize,
    /// Objects enumerated: labeled triangulations, or tree degree multisets.
    pub inspected: u64,
    /// graph6 encoding of one minimizer.
    pub witness: String,
    pub distinct_censuses: usize,
}

/// `C_m`, the number of triangulations of an `(m+2)`-gon.
pub fn catalan(m: usize) -> u128 {
    let mut c = vec![0u128; m + 1];
    c[0] = 1;
    for i in 1..=m {
        c[i] = (0..i).map(|j| c[j] * c[i - 1 - j]).sum();
    }
    c[m]
}

/// Size guard shared by every polygon enumeration entry point.
pub fn check_polygon(n: usize, force: bool) -> Result<()> {
    if n < MIN_POLYGON {
        return Err(Error::Refused(format!("polygon enumeration needs n >= {MIN_POLYGON}, got {n}")));
    }
    if n > MAX_POLYGON && !force {
        return Err(Error::Refused(format!(
            "n = {n} exceeds the enumeration guard of {MAX_POLYGON} (Catalan({}) triangulations); enable force to override",
            n - 2
        )));
    }
    if n > u16::MAX as usize {
        return Err(Error::Refused(format!("n = {n} is too large to enumerate")));
    }
    Ok(())
}

/// A triangulation as seen by a visitor. Borrowed state is only valid for
/// the duration of the callback.
pub struct Triangulation<'a> {
    n: usize,
    degrees: &'a [u16],
    counts: &'a [u16],
    diagonals: &'a [(u16, u16)],
}

impl Triangulation<'_> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Degrees indexed by polygon vertex.
    pub fn degrees(&self) -> &[u16] {
        self.degrees
    }

    /// `histogram()[d]` is the number of vertices of degree `d`.
    pub fn histogram(&self) -> &[u16] {
        self.counts
    }

    /// Diagonals in the order they were placed.
    pub fn diagonals(&self) -> &[(u16, u16)] {
        self.diagonals
    }

    pub fn census(&self) -> DegreeCensus {
        DegreeCensus::from_pairs(self.counts.iter().enumerate().map(|(d, &c)| (d, c as usize)))
    }

    pub fn to_graph(&self) -> Graph {
        polygon_graph(self.n, self.diagonals)
    }
}

/// Cycle `0..n` plus the given chords.
pub fn polygon_graph(n: usize, diagonals: &[(u16, u16)]) -> Graph {
    let cycle = (0..n).map(|v| (v, (v + 1) % n));
    let chords = diagonals.iter().map(|&(a, b)| (a as usize, b as usize));
    Graph::from_edges(n, cycle.chain(chords)).expect("polygon chords are valid edges")
}

struct Walker<'v, F> {
    n: usize,
    degrees: Vec<u16>,
    counts: Vec<u16>,
    diagonals: Vec<(u16, u16)>,
    pending: Vec<(u16, u16)>,
    visited: u64,
    visit: &'v mut F,
}

impl<F: FnMut(&Triangulation<'_>)> Walker<'_, F> {
    fn new(n: usize, visit: &mut F) -> Walker<'_, F> {
        let mut counts = vec![0u16; n];
        counts[2] = n as u16;
        Walker {
            n,
            degrees: vec![2; n],
            counts,
            diagonals: Vec::with_capacity(n),
            pending: Vec::with_capacity(n),
            visited: 0,
            visit,
        }
    }

    fn bump(&mut self, v: u16, up: bool) {
        let d = &mut self.degrees[v as usize];
        self.counts[*d as usize] -= 1;
        if up {
            *d += 1;
        } else {
            *d -= 1;
        }
        self.counts[*d as usize] += 1;
    }

    /// Places triangle `(i, apex, j)` on the chord or edge `(i, j)`.
    fn place(&mut self, i: u16, apex: u16, j: u16) -> u8 {
        let mut pushed = 0;
        for (a, b) in [(i, apex), (apex, j)] {
            if b - a >= 2 {
                self.bump(a, true);
                self.bump(b, true);
                self.diagonals.push((a, b));
                self.pending.push((a, b));
                pushed += 1;
            }
        }
        pushed
    }

    fn unplace(&mut self, pushed: u8) {
        for _ in 0..pushed {
            let (a, b) = self.diagonals.pop().unwrap();
            self.pending.pop();
            self.bump(a, false);
            self.bump(b, false);
        }
    }

    fn run(&mut self) {
        let Some((i, j)) = self.pending.pop() else {
            self.visited += 1;
            (self.visit)(&Triangulation {
                n: self.n,
                degrees: &self.degrees,
                counts: &self.counts,
                diagonals: &self.diagonals,
            });
            return;
        };
        for apex in i + 1..j {
            let pushed = self.place(i, apex, j);
            self.run();
            self.unplace(pushed);
        }
        self.pending.push((i, j));
    }

    fn run_shard(&mut self, shard: usize) {
        let last = (self.n - 1) as u16;
        let pushed = self.place(0, shard as u16 + 1, last);
        self.run();
        self.unplace(pushed);
    }
}

/// Number of independent shards of the `n`-gon enumeration.
pub fn shard_count(n: usize) -> usize {
    n.saturating_sub(2)
}

/// Visits the triangulations whose triangle on edge `(0, n-1)` has apex
/// `shard + 1`. Returns the number visited.
pub fn enumerate_shard<F>(n: usize, shard: usize, force: bool, mut visit: F) -> Result<u64>
where
    F: FnMut(&Triangulation<'_>),
{
    check_polygon(n, force)?;
    if shard >= shard_count(n) {
        return Err(Error::InvalidArgument(format!("shard {shard} out of range for n = {n}")));
    }
    let mut walker = Walker::new(n, &mut visit);
    walker.run_shard(shard);
    Ok(walker.visited)
}

/// Visits every triangulation of the convex polygon on `0..n` exactly once,
/// shard by shard. Returns the number visited, `Catalan(n - 2)`.
pub fn enumerate_polygon_triangulations<F>(n: usize, force: bool, mut visit: F) -> Result<u64>
where
    F: FnMut(&Triangulation<'_>),
{
    check_polygon(n, force)?;
    let mut total = 0;
    for shard in 0..shard_count(n) {
        total += enumerate_shard(n, shard, force, &mut visit)?;
    }
    Ok(total)
}

/// Distinct degree censuses met in a run, each with the first triangulation
/// (in enumeration order) that realized it.
/// `(shard, position within shard)` of a triangulation and its diagonals.
type Origin = ((usize, u64), Vec<(u16, u16)>);

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusCatalog {
    pub n: usize,
    pub inspected: u64,
    /// Histogram (`[d] = count`) to `((shard, position), diagonals)`.
    entries: BTreeMap<Vec<u16>, Origin>,
}

impl CensusCatalog {
    /// Empty catalog for the `n`-gon, to merge shard catalogs into.
    pub fn new(n: usize) -> Self {
        CensusCatalog { n, ..Default::default() }
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// Folds another partial catalog in. Order of merging does not matter:
    /// for each census the earliest `(shard, position)` is kept.
    pub fn merge(&mut self, other: CensusCatalog) {
        if self.entries.is_empty() && self.inspected == 0 {
            self.n = other.n;
        }
        self.inspected += other.inspected;
        for (key, value) in other.entries {
            match self.entries.get_mut(&key) {
                Some(existing) if existing.0 <= value.0 => {}
                Some(existing) => *existing = value,
                None => {
                    self.entries.insert(key, value);
                }
            }
        }
    }

    /// Iterates `(census, first realizing graph)`.
    pub fn iter(&self) -> impl Iterator<Item = (DegreeCensus, Graph)> + '_ {
        self.entries.iter().map(|(hist, (_, diags))| {
            let census = DegreeCensus::from_pairs(hist.iter().enumerate().map(|(d, &c)| (d, c as usize)));
            (census, polygon_graph(self.n, diags))
        })
    }

    /// Minimum of `sp(·, k)` over the catalog. Ties go to the census first
    /// met in enumeration order.
    pub fn min_spread(&self, k: usize) -> SearchRecord {
        let counts_of = |hist: &[u16]| hist.iter().map(|&c| c as usize).collect::<Vec<_>>();
        let (hist, (_, diags)) = self
            .entries
            .iter()
            .min_by_key(|(hist, (order, _))| (best_window_counts(&counts_of(hist), k).0, *order))
            .expect("catalog is nonempty");
        SearchRecord {
            class: GraphClass::Mop,
            n: self.n,
            k,
            minimum: best_window_counts(&counts_of(hist), k).0,
            inspected: self.inspected,
            witness: to_graph6(&polygon_graph(self.n, diags)),
            distinct_censuses: self.entries.len(),
        }
    }
}

/// Census catalog of one shard.
pub fn catalog_shard(n: usize, shard: usize, force: bool) -> Result<CensusCatalog> {
    let mut entries = BTreeMap::new();
    let mut position = 0u64;
    let inspected = enumerate_shard(n, shard, force, |t| {
        if !entries.contains_key(t.histogram()) {
            entries.insert(t.histogram().to_vec(), ((shard, position), t.diagonals().to_vec()));
        }
        position += 1;
    })?;
    Ok(CensusCatalog { n, inspected, entries })
}

/// Census catalog over all triangulations of the `n`-gon.
pub fn catalog(n: usize, force: bool) -> Result<CensusCatalog> {
    check_polygon(n, force)?;
    let mut all = CensusCatalog::new(n);
    for shard in 0..shard_count(n) {
        all.merge(catalog_shard(n, shard, force)?);
    }
    Ok(all)
}

/// `MOP(n, k)`: exact minimum of `sp(G, k)` over maximal outerplanar graphs
/// on `n` vertices.
pub fn mop_min_spread(n: usize, k: usize) -> Result<SearchRecord> {
    Ok(catalog(n, false)?.min_spread(k))
}

/// Lexicographically smallest sorted diagonal set among the triangulations
/// of one shard whose census equals `target`.
pub fn find_census_in_shard(n: usize, shard: usize, target: &DegreeCensus, force: bool) -> Result<Option<Vec<(u16, u16)>>> {
    let mut want = vec![0u16; n];
    for (d, c) in target.iter() {
        if d >= n {
            return Ok(None);
        }
        want[d] = c as u16;
    }
    let mut best: Option<Vec<(u16, u16)>> = None;
    enumerate_shard(n, shard, force, |t| {
        if t.histogram() == want.as_slice() {
            let mut diags = t.diagonals().to_vec();
            diags.sort_unstable();
            if best.as_ref().is_none_or(|b| diags < *b) {
                best = Some(diags);
            }
        }
    })?;
    Ok(best)
}

/// Smallest (by sorted diagonal list) triangulation of the `n`-gon with the
/// given census, if any.
pub fn find_mop_with_census(n: usize, target: &DegreeCensus, force: bool) -> Result<Option<Graph>> {
    check_polygon(n, force)?;
    let mut best: Option<Vec<(u16, u16)>> = None;
    for shard in 0..shard_count(n) {
        if let Some(d) = find_census_in_shard(n, shard, target, force)? {
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
    }
    Ok(best.map(|d| polygon_graph(n, &d)))
}

/// Visits every multiset of `n` positive integers summing to `2n - 2`, the
/// degree multisets of trees on `n >= 2` vertices. The callback receives a
/// histogram: `counts[d]` vertices of degree `d`.
pub fn tree_degree_multisets<F: FnMut(&[usize])>(n: usize, mut visit: F) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("trees need n >= 2, got {n}")));
    }
    // Each multiset is n leaves-worth of 1s plus a partition of n - 2 extra
    // degree units over at most n - 2 vertices.
    fn parts<F: FnMut(&[usize])>(rest: usize, cap: usize, counts: &mut Vec<usize>, visit: &mut F, seen: &mut u64) {
        if rest == 0 {
            *seen += 1;
            visit(counts);
            return;
        }
        for extra in (1..=cap.min(rest)).rev() {
            counts[1] -= 1;
            counts[1 + extra] += 1;
            parts(rest - extra, extra, counts, visit, seen);
            counts[1 + extra] -= 1;
            counts[1] += 1;
        }
    }
    let mut counts = vec![0usize; n];
    counts[1] = n;
    let mut seen = 0;
    parts(n - 2, n - 2, &mut counts, &mut visit, &mut seen);
    Ok(seen)
}

/// Tree with the given degree multiset: vertices of degree >= 2 form a
/// spine (largest degree first), leaves hang off it.
pub fn caterpillar(census: &DegreeCensus) -> Result<Graph> {
    let n = census.total();
    if n < 2 || census.count(0) > 0 || census.degree_sum() != 2 * n - 2 {
        return Err(Error::InvalidArgument(format!("{census} is not a tree degree multiset")));
    }
    let mut spine: Vec<usize> = census.iter().filter(|&(d, _)| d >= 2).flat_map(|(d, c)| core::iter::repeat_n(d, c)).collect();
    spine.reverse();
    if spine.is_empty() {
        return Graph::from_edges(2, [(0, 1)]);
    }
    let m = spine.len();
    let mut edges: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
    let mut next = m;
    for (i, &d) in spine.iter().enumerate() {
        let on_spine = usize::from(i > 0) + usize::from(i + 1 < m);
        for _ in 0..d - on_spine {
            edges.push((i, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Graph::from_edges(n, edges)
}

/// Exact minimum of `sp(T, k)` over trees on `n >= k + 2` vertices, taken
/// over degree multisets. The witness is a caterpillar.
pub fn tree_min_spread(n: usize, k: usize) -> Result<SearchRecord> {
    if n < 2 || n < k + 2 {
        return Err(Error::NotApplicable(format!("tree search needs n >= max(2, k + 2), got n = {n}, k = {k}")));
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    let inspected = tree_degree_multisets(n, |counts| {
        let (value, _) = best_window_counts(counts, k);
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, counts.to_vec()));
        }
    })?;
    let (minimum, counts) = best.expect("at least one multiset");
    let census = DegreeCensus::from_pairs(counts.iter().copied().enumerate());
    Ok(SearchRecord {
        class: GraphClass::Tree,
        n,
        k,
        minimum,
        inspected,
        witness: to_graph6(&caterpillar(&census)?),
        distinct_censuses: inspected as usize,
    })
}

/// Visits all `n^(n-2)` labeled trees on `2 <= n <= 8` vertices by decoding
/// every Prüfer sequence.
pub fn enumerate_trees_prufer<F: FnMut(&Graph)>(n: usize, mut visit: F) -> Result<u64> {
    if !(2..=MAX_PRUFER).contains(&n) {
        return Err(Error::Refused(format!("Prüfer enumeration limited to 2 <= n <= {MAX_PRUFER}, got {n}")));
    }
    let len = n - 2;
    let total = (n as u64).pow(len as u32);
    let mut seq = vec![0usize; len];
    for code in 0..total {
        let mut c = code;
        for slot in seq.iter_mut() {
            *slot = (c % n as u64) as usize;
            c /= n as u64;
        }
        visit(&prufer_decode(n, &seq));
    }
    Ok(total)
}

/// Tree encoded by a Prüfer sequence of length `n - 2` over `0..n`.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a simple graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::parse_graph6;
    use crate::spread::sp;

    #[test]
    fn catalan_numbers() {
        let expected = [1u128, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012];
        for (m, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(m), c);
        }
    }

    #[test]
    fn small_polygon_counts() {
        let mut graphs = Vec::new();
        assert_eq!(enumerate_polygon_triangulations(4, false, |t| graphs.push(t.to_graph())).unwrap(), 2);
        for g in &graphs {
            assert!(g.is_mop());
            assert_eq!(g.edge_count(), 5);
        }
        assert_ne!(graphs[0], graphs[1]);
        assert_eq!(enumerate_polygon_triangulations(5, false, |_| {}).unwrap(), 5);
        assert_eq!(enumerate_polygon_triangulations(8, false, |_| {}).unwrap(), 132);
    }

    #[test]
    fn enumerator_guards() {
        assert!(matches!(enumerate_polygon_triangulations(3, false, |_| {}), Err(Error::Refused(_))));
        assert!(matches!(enumerate_polygon_triangulations(17, false, |_| {}), Err(Error::Refused(_))));
        assert!(enumerate_shard(6, 4, false, |_| {}).is_err());
    }

    #[test]
    fn incremental_degrees_match_graph() {
        enumerate_polygon_triangulations(7, false, |t| {
            let g = t.to_graph();
            let degrees: Vec<u16> = g.degrees().iter().map(|&d| d as u16).collect();
            assert_eq!(t.degrees(), degrees.as_slice());
            assert_eq!(t.census(), g.census());
        })
        .unwrap();
    }

    #[test]
    fn hexagon_minima() {
        let r0 = mop_min_spread(6, 0).unwrap();
        assert_eq!((r0.minimum, r0.inspected), (2, 14));
        let w = parse_graph6(&r0.witness).unwrap();
        assert!(w.is_mop());
        assert_eq!(sp(&w, 0).unwrap().value, 2);
        assert_eq!(w.degree_sequence().as_slice(), &[2, 2, 3, 3, 4, 4]);

        let r1 = mop_min_spread(6, 1).unwrap();
        assert_eq!(r1.minimum, 3);
        let w = parse_graph6(&r1.witness).unwrap();
        assert_eq!(w.degree_sequence().as_slice(), &[2, 2, 2, 4, 4, 4]);
        assert!(mop_min_spread(5, 0).unwrap().minimum >= 2);
    }

    #[test]
    fn tree_multisets_small() {
        let collect = |n| {
            let mut out = Vec::new();
            tree_degree_multisets(n, |c| out.push(DegreeCensus::from_pairs(c.iter().copied().enumerate()).to_sequence().as_slice().to_vec()))
                .unwrap();
            out.sort();
            out
        };
        assert_eq!(collect(3), [[1, 1, 2]]);
        assert_eq!(collect(4), [[1, 1, 1, 3], [1, 1, 2, 2]]);
        assert_eq!(collect(5), [[1, 1, 1, 1, 4], [1, 1, 1, 2, 3], [1, 1, 2, 2, 2]]);
        assert_eq!(collect(2), [[1, 1]]);
        assert!(tree_degree_multisets(1, |_| {}).is_err());
    }

    #[test]
    fn caterpillar_realizes_multiset() {
        tree_degree_multisets(9, |c| {
            let census = DegreeCensus::from_pairs(c.iter().copied().enumerate());
            let t = caterpillar(&census).unwrap();
            assert!(t.is_tree());
            assert_eq!(t.census(), census);
        })
        .unwrap();
        assert!(caterpillar(&DegreeCensus::from_pairs([(1, 3)])).is_err());
    }

    #[test]
    fn tree_minima_examples() {
        assert_eq!(tree_min_spread(7, 0).unwrap().minimum, 3);
        assert_eq!(tree_min_spread(10, 1).unwrap().minimum, 6);
        // At most three leaves forces four vertices of degree 2.
        assert_eq!(tree_min_spread(8, 0).unwrap().minimum, 4);
        assert!(matches!(tree_min_spread(3, 2), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn prufer_counts() {
        for (n, expected) in [(2, 1), (3, 3), (4, 16), (5, 125)] {
            let mut all = Vec::new();
            assert_eq!(enumerate_trees_prufer(n, |t| all.push(t.clone())).unwrap(), expected);
            assert!(all.iter().all(Graph::is_tree));
            let before = all.len();
            all.sort_by_key(to_graph6);
            all.dedup();
            assert_eq!(all.len(), before, "labeled trees must be distinct");
        }
        assert!(enumerate_trees_prufer(9, |_| {}).is_err());
        assert!(enumerate_trees_prufer(1, |_| {}).is_err());
    }

    #[test]
    fn census_search_finds_fan() {
        // Fan on 6 vertices: apex degree 5.
        let target = DegreeCensus::from_pairs([(2, 2), (3, 3), (5, 1)]);
        let g = find_mop_with_census(6, &target, false).unwrap().unwrap();
        assert!(g.is_mop());
        assert_eq!(g.census(), target);
        let impossible = DegreeCensus::from_pairs([(2, 6)]);
        assert!(find_mop_with_census(6, &impossible, false).unwrap().is_none());
    }
}
