//! Simple undirected graphs on `[0, n)` with bitset adjacency.

use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::subsets::pair_rank;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adjacency: BitSet,
}

/// Outcome of a two-colouring attempt.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Bipartiteness {
    /// `side[v]` is the colour of `v`; every edge joins opposite colours.
    Bipartite { side: Vec<bool> },
    /// Vertices of an odd cycle in traversal order; consecutive vertices
    /// (and last/first) are adjacent.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }

    pub fn odd_cycle(&self) -> Option<&[usize]> {
        match self {
            Bipartiteness::OddCycle(c) => Some(c),
            Bipartiteness::Bipartite { .. } => None,
        }
    }
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            adjacency: BitSet::new(n * n.saturating_sub(1) / 2),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The cycle `0 - 1 - ... - (len-1) - 0` on `n >= len` vertices.
    pub fn cycle(n: usize, len: usize) -> Self {
        assert!(len >= 3 && len <= n);
        Self::from_edges(n, (0..len).map(|i| (i, (i + 1) % len)))
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|v| (0..v).map(move |u| (u, v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Panics on self-loops and out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(
            u < self.n && v < self.n,
            "edge ({u}, {v}) outside [0, {})",
            self.n
        );
        self.adjacency.set(pair_rank(u, v), true);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency.get(pair_rank(u, v))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.count_ones()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(u, v))
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); self.n];
        for (u, v) in self.edges() {
            lists[u].push(v);
            lists[v].push(u);
        }
        for l in &mut lists {
            l.sort_unstable();
        }
        lists
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (u, v) in self.edges() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        match deg.first() {
            Some(&d) if deg.iter().all(|&x| x == d) => Some(d),
            None => Some(0),
            _ => None,
        }
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let adj = self.adjacency_lists();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// All triangles `[a, b, c]` with `a < b < c`.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let adj = self.adjacency_lists();
        let mut out = Vec::new();
        for a in 0..self.n {
            for &b in adj[a].iter().filter(|&&b| b > a) {
                for &c in adj[b].iter().filter(|&&c| c > b) {
                    if self.has_edge(a, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// True iff no edge lies on two triangles, i.e. any two distinct
    /// triangles share at most one vertex.
    pub fn triangles_share_at_most_one_vertex(&self) -> bool {
        let adj = self.adjacency_lists();
        self.edges().into_iter().all(|(u, v)| {
            let mut common = 0;
            let (mut i, mut j) = (0, 0);
            let (a, b) = (&adj[u], &adj[v]);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        common += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
            common <= 1
        })
    }
}

/// Breadth-first two-colouring; on failure returns an odd cycle through
/// the first monochromatic edge found.
pub fn is_bipartite(g: &SimpleGraph) -> Bipartiteness {
    let n = g.vertex_count();
    let adj = g.adjacency_lists();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].expect("queued vertices are coloured");
            for &w in &adj[u] {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return Bipartiteness::OddCycle(close_cycle(u, w, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartiteness::Bipartite {
        side: colour.into_iter().map(|c| c.unwrap_or(false)).collect(),
    }
}

/// Tree path `u -> lca -> w`; with the edge `w - u` it closes an odd cycle
/// since `u` and `w` have equal depth parity.
fn close_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut from_u = vec![a];
    let mut from_w = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        from_u.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        from_w.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        from_u.push(a);
        from_w.push(b);
    }
    from_w.pop();
    from_u.extend(from_w.into_iter().rev());
    from_u
}

/// Checks an odd-cycle certificate against the graph.
pub fn is_odd_cycle(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    let mut seen = std::collections::HashSet::new();
    len >= 3
        && len % 2 == 1
        && cycle
            .iter()
            .all(|&v| v < g.vertex_count() && seen.insert(v))
        && (0..len).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % len]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> SimpleGraph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        SimpleGraph::from_edges(10, outer.chain(spokes).chain(inner))
    }

    #[test]
    fn even_cycle_is_bipartite() {
        let g = SimpleGraph::cycle(6, 6);
        match is_bipartite(&g) {
            Bipartiteness::Bipartite { side } => {
                for (u, v) in g.edges() {
                    assert_ne!(side[u], side[v]);
                }
            }
            other => panic!("expected bipartition, got {other:?}"),
        }
    }

    #[test]
    fn triangle_gives_odd_cycle() {
        let g = SimpleGraph::complete(3);
        let res = is_bipartite(&g);
        let cycle = res.odd_cycle().unwrap();
        assert_eq!(cycle.len(), 3);
        assert!(is_odd_cycle(&g, cycle));
    }

    #[test]
    fn odd_cycle_certificates_are_valid() {
        for len in [3, 5, 7, 9] {
            // odd cycle hung off a path, plus a disjoint even cycle
            let mut g = SimpleGraph::new(len + 8);
            for i in 0..len {
                g.add_edge(4 + i, 4 + (i + 1) % len);
            }
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(2, 4);
            let base = len + 4;
            for i in 0..4 {
                g.add_edge(base + i, base + (i + 1) % 4);
            }
            let cycle = is_bipartite(&g).odd_cycle().unwrap().to_vec();
            assert!(is_odd_cycle(&g, &cycle), "{cycle:?}");
        }
        let p = petersen();
        let cycle = is_bipartite(&p).odd_cycle().unwrap().to_vec();
        assert!(is_odd_cycle(&p, &cycle));
        assert_eq!(cycle.len(), 5);
    }

    #[test]
    fn certificate_checker_rejects_junk() {
        let g = SimpleGraph::cycle(5, 5);
        assert!(is_odd_cycle(&g, &[0, 1, 2, 3, 4]));
        assert!(!is_odd_cycle(&g, &[0, 1, 2, 3]));
        assert!(!is_odd_cycle(&g, &[0, 2, 4, 1, 3]));
        assert!(!is_odd_cycle(&g, &[0, 1, 0]));
    }

    #[test]
    fn girth_and_regularity() {
        let p = petersen();
        assert_eq!(p.regular_degree(), Some(3));
        assert_eq!(p.girth(), Some(5));
        assert_eq!(SimpleGraph::complete(4).girth(), Some(3));
        assert_eq!(SimpleGraph::cycle(8, 8).girth(), Some(8));
        assert_eq!(
            SimpleGraph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).girth(),
            None
        );
        assert_eq!(SimpleGraph::new(3).regular_degree(), Some(0));
    }

    #[test]
    fn triangle_sharing() {
        assert!(SimpleGraph::complete(3).triangles_share_at_most_one_vertex());
        assert!(!SimpleGraph::complete(4).triangles_share_at_most_one_vertex());
        // bowtie: two triangles meeting in one vertex
        let bowtie = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert!(bowtie.triangles_share_at_most_one_vertex());
        assert_eq!(bowtie.triangles(), vec![[0, 1, 2], [2, 3, 4]]);
        assert_eq!(SimpleGraph::complete(5).triangles().len(), 10);
    }
}
