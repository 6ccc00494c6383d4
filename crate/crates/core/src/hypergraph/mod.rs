//! k-uniform hypergraphs stored as bitsets over colex-ranked k-subsets,
//! the Paley 4-graph builder, and the design / extremal verifiers.

mod graph;
pub(crate) mod text;
mod verify;

use rayon::prelude::*;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::field::FieldSpec;
use crate::projective::{det_pair, points};
use crate::subsets::{binomial, unrank_colex, BinomialTable, Combinations};

pub use graph::{is_bipartite, is_odd_cycle, Bipartiteness, SimpleGraph};
pub use verify::{
    check_de_caen, check_gamma, de_caen_bound, design_parameters, fingerprint,
    independent_set_count, verify_span, DeCaenReport, DesignReport, Fingerprint, GammaReport,
    SpanMode, SpanReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("uniformity k={k} is not supported here (need {expected})")]
    WrongUniformity { k: usize, expected: &'static str },
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge:?} is not a set of {k} distinct vertices")]
    MalformedEdge { edge: Vec<usize>, k: usize },
    #[error("edge {0:?} listed twice")]
    DuplicateEdge(Vec<usize>),
    #[error("strength t={t} must be below k={k}")]
    InvalidStrength { t: usize, k: usize },
    #[error("set size m={m} must be at least k={k}")]
    InvalidSetSize { m: usize, k: usize },
    #[error("need distinct in-range vertices, got ({u}, {v}) with n={n}")]
    InvalidPair { u: usize, v: usize, n: usize },
    #[error("GF({q}) is not Paley-admissible (q mod 4 = {})", q % 4)]
    NotPaleyAdmissible { q: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A k-uniform hypergraph on `[0, n)`; bit `r` of the edge set is the k-subset
/// of colex rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphK {
    n: usize,
    k: usize,
    edges: BitSet,
}

impl HypergraphK {
    pub fn empty(n: usize, k: usize) -> Result<Self, HypergraphError> {
        if k == 0 {
            return Err(HypergraphError::WrongUniformity {
                k,
                expected: "k >= 1",
            });
        }
        let len = usize::try_from(binomial(n, k)).expect("edge bitset fits in memory");
        Ok(HypergraphK {
            n,
            k,
            edges: BitSet::new(len),
        })
    }

    /// Builds from a list of edges; vertex order within an edge is free.
    pub fn from_edges<I, E>(n: usize, k: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let mut h = Self::empty(n, k)?;
        for e in edges {
            if !h.insert(e.as_ref())? {
                let mut sorted = e.as_ref().to_vec();
                sorted.sort_unstable();
                return Err(HypergraphError::DuplicateEdge(sorted));
            }
        }
        Ok(h)
    }

    pub(crate) fn from_bits(n: usize, k: usize, edges: BitSet) -> Self {
        debug_assert_eq!(edges.len() as u64, binomial(n, k));
        HypergraphK { n, k, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones()
    }

    pub fn edge_bits(&self) -> &BitSet {
        &self.edges
    }

    fn validated(&self, edge: &[usize]) -> Result<Vec<usize>, HypergraphError> {
        let mut sorted = edge.to_vec();
        sorted.sort_unstable();
        if sorted.len() != self.k || sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(HypergraphError::MalformedEdge {
                edge: edge.to_vec(),
                k: self.k,
            });
        }
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.n) {
            return Err(HypergraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(sorted)
    }

    /// Adds an edge; returns false if it was already present.
    pub fn insert(&mut self, edge: &[usize]) -> Result<bool, HypergraphError> {
        let sorted = self.validated(edge)?;
        let r = crate::subsets::rank_colex(&sorted);
        let fresh = !self.edges.get(r);
        self.edges.set(r, true);
        Ok(fresh)
    }

    /// Removes an edge; returns false if it was absent.
    pub fn remove(&mut self, edge: &[usize]) -> Result<bool, HypergraphError> {
        let sorted = self.validated(edge)?;
        let r = crate::subsets::rank_colex(&sorted);
        let present = self.edges.get(r);
        self.edges.set(r, false);
        Ok(present)
    }

    /// Membership of a strictly increasing k-subset.
    #[inline]
    pub fn contains_sorted(&self, edge: &[usize]) -> bool {
        debug_assert!(edge.len() == self.k && edge.windows(2).all(|w| w[0] < w[1]));
        self.edges.get(crate::subsets::rank_colex(edge))
    }

    /// Membership of a k-set given in any order; false for malformed input.
    pub fn contains(&self, edge: &[usize]) -> bool {
        self.validated(edge)
            .map(|s| self.contains_sorted(&s))
            .unwrap_or(false)
    }

    #[inline]
    pub(crate) fn contains_rank(&self, rank: usize) -> bool {
        self.edges.get(rank)
    }

    /// Edges as sorted vertex lists, in rank order.
    pub fn edges(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.edges.ones().map(move |r| unrank_colex(r, self.k))
    }

    /// Image under the vertex map `v -> perm[v]`; `perm` must be a
    /// permutation of `[0, n)`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, HypergraphError> {
        assert_eq!(perm.len(), self.n, "permutation length");
        Self::from_edges(
            self.n,
            self.k,
            self.edges()
                .map(|e| e.iter().map(|&v| perm[v]).collect::<Vec<_>>()),
        )
    }

    /// The sub-hypergraph induced on `keep` (ascending), re-indexed to
    /// `0..keep.len()` in the same order.
    pub fn induced(&self, keep: &[usize]) -> Result<Self, HypergraphError> {
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.n {
                return Err(HypergraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            new_index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|e| e.iter().all(|&v| new_index[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| new_index[v]).collect::<Vec<_>>());
        Self::from_edges(keep.len(), self.k, edges)
    }

    /// Hex SHA-256 of the canonical text serialization.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }

    pub fn require_uniformity(
        &self,
        k: usize,
        expected: &'static str,
    ) -> Result<(), HypergraphError> {
        if self.k == k {
            Ok(())
        } else {
            Err(HypergraphError::WrongUniformity {
                k: self.k,
                expected,
            })
        }
    }
}

/// Evaluates `keep` on every k-subset of `[0, n)` and returns the bitset of
/// accepted ranks. Shards by largest element, in parallel.
pub(crate) fn collect_subsets<F>(n: usize, k: usize, keep: F) -> BitSet
where
    F: Fn(&[usize]) -> bool + Sync,
{
    let len = usize::try_from(binomial(n, k)).expect("bitset fits in memory");
    let mut bits = BitSet::new(len);
    if k == 0 || k > n {
        if k == 0 && keep(&[]) {
            bits.set(0, true);
        }
        return bits;
    }
    let table = BinomialTable::new(n, k);
    let shards: Vec<Vec<usize>> = (k - 1..n)
        .into_par_iter()
        .map(|top| {
            // ranks of subsets with maximum `top` start at C(top, k)
            let mut rank = table.get(top, k) as usize;
            let mut hits = Vec::new();
            let mut buf = vec![0usize; k];
            buf[k - 1] = top;
            let mut lower = Combinations::new(top, k - 1);
            while let Some(s) = lower.next() {
                buf[..k - 1].copy_from_slice(s);
                if keep(&buf) {
                    hits.push(rank);
                }
                rank += 1;
            }
            hits
        })
        .collect();
    for r in shards.into_iter().flatten() {
        bits.set(r, true);
    }
    bits
}

/// Table of `chi(D(x, y))` over canonical representatives of P^1(GF(q)).
pub(crate) fn chi_det_table(spec: &FieldSpec) -> Vec<Vec<i8>> {
    let pts = points(spec);
    pts.iter()
        .map(|x| {
            pts.iter()
                .map(|y| spec.chi(&det_pair(spec, x.rep(), y.rep())))
                .collect()
        })
        .collect()
}

/// The Paley 4-graph on the `q + 1` points of the projective line.
///
/// `{a, b, c, d}` is an edge iff `S(a,b,c,d) = S(a,b,d,c) = S(a,c,b,d) = -1`.
/// Since the character is multiplicative, each `S` is evaluated as a
/// product of four entries of the `chi(D(x, y))` table.
pub fn build_paley_hypergraph(spec: &FieldSpec) -> Result<HypergraphK, HypergraphError> {
    if !spec.paley_admissible() {
        return Err(HypergraphError::NotPaleyAdmissible { q: spec.order() });
    }
    let n = spec.order() as usize + 1;
    let t = chi_det_table(spec);
    let s = |a: usize, b: usize, c: usize, d: usize| t[a][b] * t[b][c] * t[c][d] * t[d][a];
    let bits = collect_subsets(n, 4, |e| {
        let [a, b, c, d] = [e[0], e[1], e[2], e[3]];
        s(a, b, c, d) == -1 && s(a, b, d, c) == -1 && s(a, c, b, d) == -1
    });
    Ok(HypergraphK::from_bits(n, 4, bits))
}

/// `N(u, v)` re-indexed to `[0, n - 2)`; `vertices[i]` is the original
/// label of link vertex `i` (ascending, skipping `u` and `v`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    pub graph: SimpleGraph,
    pub vertices: Vec<usize>,
}

/// The graph of pairs `{x, y}` with `{u, v, x, y}` an edge.
pub fn link_graph(h: &HypergraphK, u: usize, v: usize) -> Result<LinkGraph, HypergraphError> {
    h.require_uniformity(4, "k = 4")?;
    let n = h.vertex_count();
    if u == v || u >= n || v >= n {
        return Err(HypergraphError::InvalidPair { u, v, n });
    }
    let vertices: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    let mut graph = SimpleGraph::new(vertices.len());
    for (i, &x) in vertices.iter().enumerate() {
        for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
            let mut e = [u, v, x, y];
            e.sort_unstable();
            if h.contains_sorted(&e) {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(LinkGraph { graph, vertices })
}

/// Graph on the edges of `h` (in rank order), two edges adjacent iff they
/// share `k - 1` vertices.
pub fn gamma_graph(h: &HypergraphK) -> SimpleGraph {
    let k = h.uniformity();
    let edges: Vec<Vec<usize>> = h.edges().collect();
    let mut g = SimpleGraph::new(edges.len());
    if k == 0 {
        return g;
    }
    let faces = usize::try_from(binomial(h.vertex_count(), k - 1)).expect("fits");
    let mut by_face: Vec<Vec<usize>> = vec![Vec::new(); faces];
    let mut face = Vec::with_capacity(k - 1);
    for (i, e) in edges.iter().enumerate() {
        for skip in 0..k {
            face.clear();
            face.extend(
                e.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &v)| v),
            );
            by_face[crate::subsets::rank_colex(&face)].push(i);
        }
    }
    for members in &by_face {
        for (x, &a) in members.iter().enumerate() {
            for &b in &members[x + 1..] {
                g.add_edge(a, b);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::s_value;
    use crate::subsets::subsets;

    fn h7() -> HypergraphK {
        build_paley_hypergraph(&FieldSpec::prime(7).unwrap()).unwrap()
    }

    #[test]
    fn construction_validation() {
        assert!(HypergraphK::empty(5, 0).is_err());
        let mut h = HypergraphK::empty(6, 4).unwrap();
        assert!(h.insert(&[3, 1, 0, 2]).unwrap());
        assert!(!h.insert(&[0, 1, 2, 3]).unwrap());
        assert!(h.contains(&[2, 3, 0, 1]));
        assert!(matches!(
            h.insert(&[0, 1, 2]),
            Err(HypergraphError::MalformedEdge { .. })
        ));
        assert!(matches!(
            h.insert(&[0, 1, 1, 2]),
            Err(HypergraphError::MalformedEdge { .. })
        ));
        assert_eq!(
            h.insert(&[0, 1, 2, 6]).unwrap_err(),
            HypergraphError::VertexOutOfRange { vertex: 6, n: 6 }
        );
        assert!(h.remove(&[0, 1, 2, 3]).unwrap());
        assert_eq!(h.edge_count(), 0);
        assert_eq!(
            HypergraphK::from_edges(5, 4, [[0, 1, 2, 3], [3, 2, 1, 0]]).unwrap_err(),
            HypergraphError::DuplicateEdge(vec![0, 1, 2, 3])
        );
    }

    #[test]
    fn collect_subsets_matches_sequential_scan() {
        for n in 0..12 {
            for k in 1..5 {
                let pred = |s: &[usize]| s.iter().sum::<usize>() % 3 == 0;
                let bits = collect_subsets(n, k, pred);
                let expected: Vec<usize> = subsets(n, k)
                    .enumerate()
                    .filter(|(_, s)| pred(s))
                    .map(|(r, _)| r)
                    .collect();
                assert_eq!(bits.ones().collect::<Vec<_>>(), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn paley_seven_examples() {
        let h = h7();
        assert_eq!(h.vertex_count(), 8);
        assert_eq!(h.edge_count(), 28);
        // [0:1], [1:1], [1:0] = vertices 0, 1, 7
        assert!(h.contains(&[0, 1, 7, 3]));
        assert!(!h.contains(&[0, 1, 7, 6]));
        let through: Vec<usize> = (2..7).filter(|&a| h.contains(&[0, 1, 7, a])).collect();
        assert_eq!(through, vec![3, 5]);
    }

    /// Evaluates all 24 orderings with `s_value` directly.
    #[test]
    fn builder_agrees_with_all_permutations_definition() {
        for q in [3u64, 7, 11] {
            let spec = FieldSpec::with_order(q).unwrap();
            let pts = crate::projective::points(&spec);
            let h = build_paley_hypergraph(&spec).unwrap();
            for e in subsets(q as usize + 1, 4) {
                let mut all_minus = true;
                let mut perm = e.clone();
                for_each_permutation(&mut perm, 0, &mut |p| {
                    let [a, b, c, d] = [&pts[p[0]], &pts[p[1]], &pts[p[2]], &pts[p[3]]];
                    if s_value(&spec, a, b, c, d) != -1 {
                        all_minus = false;
                    }
                });
                assert_eq!(h.contains_sorted(&e), all_minus, "q={q} {e:?}");
            }
        }
    }

    fn for_each_permutation(v: &mut Vec<usize>, start: usize, f: &mut impl FnMut(&[usize])) {
        if start == v.len() {
            f(v);
            return;
        }
        for i in start..v.len() {
            v.swap(start, i);
            for_each_permutation(v, start + 1, f);
            v.swap(start, i);
        }
    }

    #[test]
    fn non_admissible_field_rejected() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(
            build_paley_hypergraph(&f5).unwrap_err(),
            HypergraphError::NotPaleyAdmissible { q: 5 }
        );
    }

    #[test]
    fn link_graph_of_paley_seven_is_two_regular() {
        let h = h7();
        let link = link_graph(&h, 0, 7).unwrap();
        assert_eq!(link.vertices, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(link.graph.regular_degree(), Some(2));
        let empty = HypergraphK::empty(6, 4).unwrap();
        assert_eq!(link_graph(&empty, 0, 1).unwrap().graph.edge_count(), 0);
        assert!(link_graph(&h, 2, 2).is_err());
        assert!(link_graph(&h, 2, 8).is_err());
    }

    #[test]
    fn gamma_graph_small_cases() {
        let one = HypergraphK::from_edges(5, 4, [[0, 1, 2, 3]]).unwrap();
        let g = gamma_graph(&one);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        // brute-force intersection rule on H_7
        let h = h7();
        let g = gamma_graph(&h);
        let edges: Vec<Vec<usize>> = h.edges().collect();
        for i in 0..edges.len() {
            for j in 0..i {
                let common = edges[i].iter().filter(|v| edges[j].contains(v)).count();
                assert_eq!(g.has_edge(i, j), common == 3);
            }
        }
    }

    #[test]
    fn relabel_and_induced() {
        let h = HypergraphK::from_edges(6, 4, [[0, 1, 2, 3], [2, 3, 4, 5]]).unwrap();
        let r = h.relabel(&[5, 4, 3, 2, 1, 0]).unwrap();
        assert!(r.contains(&[2, 3, 4, 5]) && r.contains(&[0, 1, 2, 3]));
        let ind = h.induced(&[2, 3, 4, 5]).unwrap();
        assert_eq!(ind.vertex_count(), 4);
        assert_eq!(ind.edges().collect::<Vec<_>>(), vec![vec![0, 1, 2, 3]]);
    }
}
