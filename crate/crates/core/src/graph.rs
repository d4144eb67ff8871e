//! Simple undirected graphs on dense vertex ids `0..n`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bounds::Rational;
use crate::error::{Error, Result};

/// Immutable simple graph stored as per-vertex neighbor sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    edges: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![BTreeSet::new(); n], edges: 0 }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.edges += 1;
        }
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("valid complete graph")
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Degrees indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees = self.degrees();
        degrees.sort_unstable();
        DegreeSequence { degrees }
    }

    pub fn census(&self) -> DegreeCensus {
        DegreeCensus::from_degrees(self.adj.iter().map(BTreeSet::len))
    }

    /// Graph with exactly the non-edges of `self` as edges.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edges + 1 == self.n() && self.is_connected()
    }

    /// Whether the graph is maximal outerplanar, i.e. a triangulation of a
    /// polygon.
    ///
    /// Peels degree-2 vertices whose neighbors are adjacent (smallest id
    /// first) until a triangle remains. Peeling alone accepts every 2-tree,
    /// so each edge's triangle count is tracked as well: a 2-tree is
    /// outerplanar exactly when no edge lies in three triangles.
    pub fn is_mop(&self) -> bool {
        let n = self.n();
        if n < 3 || self.edges != 2 * n - 3 || !self.is_connected() {
            return false;
        }
        let mut adj = self.adj.clone();
        let mut triangles: BTreeMap<(usize, usize), u8> = BTreeMap::new();
        let mut bump = |a: usize, b: usize| -> bool {
            let c = triangles.entry((a.min(b), a.max(b))).or_insert(0);
            *c += 1;
            *c <= 2
        };
        let mut queue: BTreeSet<usize> = (0..n).filter(|&v| adj[v].len() == 2).collect();
        let mut alive = n;
        while alive > 3 {
            let Some(v) = queue.pop_first() else {
                return false;
            };
            if adj[v].len() != 2 {
                continue;
            }
            let mut it = adj[v].iter().copied();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            if !adj[a].contains(&b) {
                return false;
            }
            if !(bump(v, a) && bump(v, b) && bump(a, b)) {
                return false;
            }
            adj[v].clear();
            alive -= 1;
            for w in [a, b] {
                adj[w].remove(&v);
                if adj[w].len() == 2 {
                    queue.insert(w);
                }
            }
        }
        let rest: Vec<usize> = (0..n).filter(|&v| !adj[v].is_empty()).collect();
        if rest.len() != 3 {
            return false;
        }
        let (a, b, c) = (rest[0], rest[1], rest[2]);
        adj[a].contains(&b)
            && adj[a].contains(&c)
            && adj[b].contains(&c)
            && bump(a, b)
            && bump(a, c)
            && bump(b, c)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph::empty(self.n());
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Vertex degrees sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Sorts `degrees`; no graphicality check is made.
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        DegreeSequence { degrees }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Minimum degree, 0 for the empty sequence.
    pub fn min(&self) -> usize {
        self.degrees.first().copied().unwrap_or(0)
    }

    pub fn max(&self) -> usize {
        self.degrees.last().copied().unwrap_or(0)
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Average degree `2e/n` as an exact rational.
    pub fn average(&self) -> Rational {
        assert!(!self.degrees.is_empty(), "average of empty degree sequence");
        Rational::new(self.sum() as i128, self.degrees.len() as i128)
    }

    pub fn census(&self) -> DegreeCensus {
        DegreeCensus::from_degrees(self.degrees.iter().copied())
    }
}

/// Map from degree value to the number of vertices with that degree.
/// Only positive counts are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeCensus(BTreeMap<usize, usize>);

impl DegreeCensus {
    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut map = BTreeMap::new();
        for d in degrees {
            *map.entry(d).or_insert(0) += 1;
        }
        DegreeCensus(map)
    }

    /// Builds a census from `(degree, count)` pairs; zero counts are dropped
    /// and repeated degrees accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut map = BTreeMap::new();
        for (d, c) in pairs {
            if c > 0 {
                *map.entry(d).or_insert(0) += c;
            }
        }
        DegreeCensus(map)
    }

    pub fn count(&self, degree: usize) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    /// Number of vertices.
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn degree_sum(&self) -> usize {
        self.0.iter().map(|(d, c)| d * c).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&d, &c)| (d, c))
    }

    /// Expands to the ascending degree sequence.
    pub fn to_sequence(&self) -> DegreeSequence {
        let degrees = self.iter().flat_map(|(d, c)| core::iter::repeat_n(d, c)).collect();
        DegreeSequence { degrees }
    }
}

impl fmt::Display for DegreeCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (d, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}:{c}")?;
        }
        f.write_str("}")
    }
}
