use degspread_core::bounds::{self, gap_bounds, GraphStats, Rational};
use degspread_core::constructions::ConstructionSpec;
use degspread_core::{parse_graph6, rep, sp, to_graph6, verify, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph with a random relabeling of its vertices.
fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn spread_is_monotone_in_k(g in graph(25), k in 0usize..8) {
        prop_assert!(sp(&g, k + 1).unwrap().value >= sp(&g, k).unwrap().value);
    }

    #[test]
    fn spread_is_complement_invariant(g in graph(25), k in 0usize..8) {
        prop_assert_eq!(sp(&g, k).unwrap().value, sp(&g.complement(), k).unwrap().value);
    }

    #[test]
    fn spread_depends_only_on_degrees((g, perm) in graph_and_perm(20), k in 0usize..6) {
        prop_assert_eq!(sp(&g, k).unwrap().value, sp(&g.relabel(&perm), k).unwrap().value);
    }

    #[test]
    fn witness_is_the_whole_window(g in graph(25), k in 0usize..8) {
        let r = sp(&g, k).unwrap();
        prop_assert_eq!(r.witness.len(), r.value);
        prop_assert!(r.window_lo <= r.window_hi && r.window_hi <= r.window_lo + k);
        for v in 0..g.n() {
            let d = g.degree(v);
            prop_assert_eq!(r.witness.contains(&v), d >= r.window_lo && d <= r.window_lo + k);
        }
    }

    #[test]
    fn baseline_and_cap_hold(g in graph(25), k in 0usize..8) {
        let value = sp(&g, k).unwrap().value;
        if g.n() >= k + 2 {
            prop_assert!(value >= k + 2);
        }
        prop_assert!(value <= (k + 1) * rep(&g).unwrap());
    }

    #[test]
    fn complement_degrees_mirror(g in graph(25)) {
        let n = g.n();
        let mut mirrored: Vec<usize> = g.degrees().iter().map(|d| n - 1 - d).collect();
        mirrored.sort_unstable();
        let seq = g.complement().degree_sequence();
        prop_assert_eq!(seq.as_slice(), &mirrored[..]);
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn gap_bound_from_max_is_gap_bound_from_min_of_complement(g in graph(25), k in 0usize..6) {
        let here = gap_bounds(&GraphStats::of(&g, k));
        let there = gap_bounds(&GraphStats::of(&g.complement(), k));
        prop_assert_eq!(here.from_max, there.from_min);
        prop_assert_eq!(here.from_min, there.from_max);
    }

    #[test]
    fn lower_bounds_hold(g in graph(30), k in 0usize..6) {
        prop_assume!(g.n() >= k + 2);
        let value = sp(&g, k).unwrap().value as i128;
        let stats = GraphStats::of(&g, k);
        prop_assert!(value >= bounds::ceil(&gap_bounds(&stats).best));
        prop_assert!(value >= bounds::ceil(&bounds::refined_lower_bound(&stats)));
        let report = bounds::bound_report(&g, k).unwrap();
        prop_assert!(report.violations().is_empty(), "{:?}", report.violations());
    }

    #[test]
    fn rational_arithmetic_is_associative(
        a in -1000i128..1000, b in 1i128..1000, c in -1000i128..1000,
        d in 1i128..1000, e in -1000i128..1000, f in 1i128..1000,
    ) {
        let (x, y, z) = (Rational::new(a, b), Rational::new(c, d), Rational::new(e, f));
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
    }

    #[test]
    fn mop_structure(p in 3usize..20) {
        let g = ConstructionSpec::MopK1 { p }.build().unwrap();
        prop_assert_eq!(g.edge_count(), 2 * g.n() - 3);
        prop_assert!(g.census().count(2) >= 2);
    }
}

#[test]
fn graph6_round_trip_on_random_corpus() {
    let corpus = verify::corpus(1, 40, 1000, 6);
    for g in &corpus {
        let s = to_graph6(g);
        assert_eq!(&parse_graph6(&s).unwrap(), g);
        assert_eq!(to_graph6(&parse_graph6(&s).unwrap()), s);
    }
}

#[test]
fn constructions_round_trip_through_graph6() {
    let specs = [
        ConstructionSpec::TreeSharpK0 { m: 4 },
        ConstructionSpec::TreeLeafHub { n: 22, k: 4 },
        ConstructionSpec::MopK1 { p: 12 },
        ConstructionSpec::MopK2 { p: 5 },
        ConstructionSpec::MopF { t: 3, k: 6 },
    ];
    for spec in specs {
        let g = spec.build().unwrap();
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g, "{spec:?}");
    }
}
