//! Embedded reference data and two-graph utilities.
//!
//! The 165 blocks of the 3-(12, 4, 3) design `M` are compiled in from
//! `m11_blocks.txt` (1-based labels, four per block) and shifted to 0-based
//! on load. The canonical text serialization of the loaded hypergraph must
//! hash to [`M11_SHA256`].

use crate::hypergraph::{
    verify_span, HypergraphError, HypergraphK, SimpleGraph, SpanMode, SpanReport,
};
use crate::subsets::Combinations;
use crate::tournament::Tournament;

const M11_SOURCE: &str = include_str!("m11_blocks.txt");

/// SHA-256 of `load_m11().to_text()`.
pub const M11_SHA256: &str = "fcdaf95a12e58932091eba0fe26741a36cb201d6c91f15f3dbb05350630078d1";

/// Blocks of the 7-vertex example whose links are all bipartite but which
/// no tournament realizes; labels 6..=12 as in the source listing.
const NON_TOURNAMENT_BLOCKS: [[usize; 4]; 12] = [
    [6, 7, 8, 11],
    [6, 7, 9, 12],
    [6, 7, 10, 11],
    [6, 7, 10, 12],
    [6, 8, 9, 12],
    [6, 9, 10, 11],
    [6, 9, 11, 12],
    [7, 8, 9, 11],
    [7, 8, 10, 12],
    [7, 8, 11, 12],
    [8, 9, 10, 11],
    [8, 9, 10, 12],
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedDesign {
    pub name: &'static str,
    pub n: usize,
    pub k: usize,
    /// 0-based blocks in source order.
    pub blocks: Vec<Vec<usize>>,
}

impl EmbeddedDesign {
    pub fn hypergraph(&self) -> Result<HypergraphK, HypergraphError> {
        HypergraphK::from_edges(self.n, self.k, &self.blocks)
    }
}

/// The block list of `M` exactly as embedded, shifted to 0-based.
pub fn m11_design() -> EmbeddedDesign {
    let labels: Vec<usize> = M11_SOURCE
        .split_whitespace()
        .map(|tok| tok.parse::<usize>().expect("embedded data is numeric") - 1)
        .collect();
    EmbeddedDesign {
        name: "M11",
        n: 12,
        k: 4,
        blocks: labels.chunks(4).map(<[usize]>::to_vec).collect(),
    }
}

/// `M` as a 4-graph on `[0, 12)`. Panics if the embedded data does not
/// match its checksum.
pub fn load_m11() -> HypergraphK {
    let h = m11_design()
        .hypergraph()
        .expect("embedded blocks are distinct 4-sets");
    assert_eq!(h.digest(), M11_SHA256, "embedded M11 data is corrupt");
    h
}

/// The 12-block example on 7 vertices (source labels 6..=12 shifted to
/// 0..=6).
pub fn non_tournament_example() -> HypergraphK {
    HypergraphK::from_edges(7, 4, NON_TOURNAMENT_BLOCKS.iter().map(|b| b.map(|v| v - 6)))
        .expect("static data")
}

/// Triples spanning an odd number of edges of `g`.
pub fn two_graph_from_graph(g: &SimpleGraph) -> HypergraphK {
    let n = g.vertex_count();
    let mut h = HypergraphK::empty(n, 3).expect("k = 3");
    let mut triples = Combinations::new(n, 3);
    while let Some(t) = triples.next() {
        let [x, y, z] = [t[0], t[1], t[2]];
        let edges = [g.has_edge(x, y), g.has_edge(y, z), g.has_edge(x, z)]
            .iter()
            .filter(|&&e| e)
            .count();
        if edges % 2 == 1 {
            h.insert(t).expect("valid triple");
        }
    }
    h
}

/// The 5-cycle `0-1-2-3-4-0` plus the isolated vertex 5.
pub fn two_graph_example_graph() -> SimpleGraph {
    SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
}

/// The 10-triple two-graph of [`two_graph_example_graph`].
pub fn two_graph_example() -> HypergraphK {
    two_graph_from_graph(&two_graph_example_graph())
}

/// Checks that every 4-set spans an even number of triples.
pub fn verify_two_graph(h: &HypergraphK) -> Result<SpanReport, HypergraphError> {
    h.require_uniformity(3, "k = 3")?;
    Ok(verify_span(h, SpanMode::Even))
}

/// The two 4-vertex tournaments whose 4-graph is a single edge: a 3-cycle
/// `0 -> 1 -> 2 -> 0` with vertex 3 dominating it, and with vertex 3
/// dominated by it.
pub fn single_edge_tournaments() -> [Tournament; 2] {
    let cycle = [(0, 1), (1, 2), (2, 0)];
    let dominating = cycle.into_iter().chain([(3, 0), (3, 1), (3, 2)]);
    let dominated = cycle.into_iter().chain([(0, 3), (1, 3), (2, 3)]);
    [
        Tournament::from_arcs(4, dominating).expect("static data"),
        Tournament::from_arcs(4, dominated).expect("static data"),
    ]
}

/// Two 5-vertex tournaments differing only on the pair `{0, 4}` that both
/// give the 4-graph `{0123, 1234}` and are not switching equivalent, even
/// after reversing one of them.
pub fn not_switching_tournaments() -> [Tournament; 2] {
    let shared = [
        (0, 1),
        (0, 2),
        (0, 3),
        (2, 1),
        (1, 3),
        (4, 1),
        (3, 2),
        (4, 2),
        (4, 3),
    ];
    [
        Tournament::from_arcs(5, shared.into_iter().chain([(0, 4)])).expect("static data"),
        Tournament::from_arcs(5, shared.into_iter().chain([(4, 0)])).expect("static data"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{design_parameters, is_bipartite};
    use crate::tournament::{baber_hypergraph, switching_equivalent};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    #[test]
    fn m11_loads_and_matches_source() {
        let d = m11_design();
        assert_eq!(d.blocks.len(), 165);
        assert_eq!(d.blocks[0], vec![0, 1, 2, 6]);
        assert_eq!(d.blocks[164], vec![0, 7, 10, 11]);
        let h = load_m11();
        assert_eq!(h.edge_count(), 165);
        assert_eq!(design_parameters(&h, 3).unwrap().lambda, Some(3));
        assert!(verify_span(&h, SpanMode::ZeroOrTwo).ok);
    }

    #[test]
    fn non_tournament_example_is_m11_away_from_first_five() {
        let m = load_m11();
        // source labels 1..=5 are 0..=4 here
        let keep: Vec<usize> = (5..12).collect();
        assert_eq!(m.induced(&keep).unwrap(), non_tournament_example());
        let h = non_tournament_example();
        assert_eq!(h.edge_count(), 12);
        assert!(verify_span(&h, SpanMode::ZeroOrTwo).ok);
    }

    fn triples(listed: &[&str]) -> HypergraphK {
        HypergraphK::from_edges(
            6,
            3,
            listed
                .iter()
                .map(|s| s.bytes().map(|b| (b - b'0') as usize).collect::<Vec<_>>()),
        )
        .unwrap()
    }

    #[test]
    fn two_graph_example_triples() {
        // {i, i+1, 5} and {i, i+1, i+3} for i in Z_5
        let expected = triples(&[
            "015", "125", "235", "345", "045", "013", "124", "023", "134", "024",
        ]);
        let h = two_graph_example();
        assert_eq!(h, expected);
        let r = verify_two_graph(&h).unwrap();
        assert!(r.ok);
        assert!(r.counts.keys().all(|&c| c == 0 || c == 2));
    }

    /// The printed table lists 012, which spans two cycle edges, where the
    /// rotation pattern gives 024; as printed it is not a two-graph.
    #[test]
    fn printed_listing_differs_by_one_triple() {
        let printed = triples(&[
            "015", "013", "125", "124", "235", "230", "345", "341", "045", "012",
        ]);
        let h = two_graph_example();
        assert!(printed.contains(&[0, 1, 2]) && !h.contains(&[0, 1, 2]));
        assert!(!printed.contains(&[0, 2, 4]) && h.contains(&[0, 2, 4]));
        let mut fixed = printed.clone();
        fixed.remove(&[0, 1, 2]).unwrap();
        fixed.insert(&[0, 2, 4]).unwrap();
        assert_eq!(fixed, h);
        let r = verify_two_graph(&printed).unwrap();
        assert!(!r.ok);
        assert_eq!(r.first_violation, Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn two_graph_small_cases() {
        assert_eq!(two_graph_from_graph(&SimpleGraph::new(5)).edge_count(), 0);
        assert_eq!(
            two_graph_from_graph(&SimpleGraph::complete(4)).edge_count(),
            4
        );
        let single = HypergraphK::from_edges(4, 3, [[0, 1, 2]]).unwrap();
        let r = verify_two_graph(&single).unwrap();
        assert!(!r.ok);
        assert_eq!(r.counts, BTreeMap::from([(1, 1)]));
        assert!(verify_two_graph(&load_m11()).is_err());
    }

    #[test]
    fn random_graphs_give_two_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(3..11);
            let mut g = SimpleGraph::new(n);
            for v in 1..n {
                for u in 0..v {
                    if rng.gen() {
                        g.add_edge(u, v);
                    }
                }
            }
            assert!(verify_two_graph(&two_graph_from_graph(&g)).unwrap().ok);
        }
    }

    #[test]
    fn reference_tournaments() {
        for t in single_edge_tournaments() {
            assert_eq!(
                baber_hypergraph(&t).edges().collect::<Vec<_>>(),
                vec![vec![0, 1, 2, 3]]
            );
        }
        let [t1, t2] = not_switching_tournaments();
        let expected = vec![vec![0, 1, 2, 3], vec![1, 2, 3, 4]];
        assert_eq!(baber_hypergraph(&t1).edges().collect::<Vec<_>>(), expected);
        assert_eq!(baber_hypergraph(&t2).edges().collect::<Vec<_>>(), expected);
        assert_eq!(switching_equivalent(&t1, &t2).unwrap(), None);
        assert_eq!(switching_equivalent(&t1, &t2.reversed()).unwrap(), None);
    }

    #[test]
    fn m11_links_are_petersen_like() {
        let m = load_m11();
        for u in 0..12 {
            for v in u + 1..12 {
                let link = crate::hypergraph::link_graph(&m, u, v).unwrap();
                assert_eq!(link.graph.vertex_count(), 10);
                assert_eq!(link.graph.regular_degree(), Some(3));
                assert_eq!(link.graph.girth(), Some(5));
                assert!(!is_bipartite(&link.graph).is_bipartite());
            }
        }
    }
}
