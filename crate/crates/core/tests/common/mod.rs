//! Independent oracles shared by the integration tests. Nothing here calls
//! the code under test except graph construction.

#![allow(dead_code)]

use degspread_core::Graph;

/// Every labeled graph on `n` vertices, by bitmask over the pairs `i < j`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// Next lexicographic permutation in place; false when `v` was the last.
pub fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Polygon triangulation test by brute force: some cyclic order makes every
/// consecutive pair an edge, the remaining edges pairwise non-crossing
/// chords, and there are exactly `2n - 3` edges.
pub fn is_polygon_triangulation(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || g.edge_count() != 2 * n - 3 {
        return false;
    }
    // Fix vertex 0 first; rotations are equivalent.
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let order: Vec<usize> = std::iter::once(0).chain(rest.iter().copied()).collect();
        if (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n])) {
            let mut pos = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            let chords: Vec<(usize, usize)> = g
                .edges()
                .map(|(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
                .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == n - 1))
                .collect();
            let crossing = chords.iter().enumerate().any(|(i, &(a, b))| {
                chords[i + 1..].iter().any(|&(c, d)| (a < c && c < b && b < d) || (c < a && a < d && d < b))
            });
            if !crossing {
                return true;
            }
        }
        if !next_permutation(&mut rest) {
            return false;
        }
    }
}

/// Isomorphism by trying every permutation. Only for tiny graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.edges().all(|(u, v)| b.has_edge(perm[u], perm[v])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

/// Largest window count over raw degrees, straight from the definition.
pub fn sp_from_degrees(degrees: &[usize], k: usize) -> usize {
    let max = degrees.iter().copied().max().unwrap_or(0);
    (0..=max).map(|lo| degrees.iter().filter(|&&d| d >= lo && d <= lo + k).count()).max().unwrap_or(0)
}
