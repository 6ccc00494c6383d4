//! Tournaments, the (extended) Paley tournaments and the 4-graph `H_T` of a
//! tournament.
//!
//! A tournament on `[0, n)` is stored as one bit per unordered pair
//! `{u < v}`; a set bit means `u -> v`. The orientation function
//! `f(x, y)` is `+1` when `x -> y` and `-1` otherwise.

mod realize;
mod switching;
mod text;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::field::FieldSpec;
use crate::hypergraph::{chi_det_table, collect_subsets, HypergraphK};
use crate::subsets::{binomial, pair_rank};

pub use realize::{odd_cycle_obstruction, realize_as_tournament, Obstruction, RealizeOutcome};
pub use switching::{
    normalize_to_sink, oriented_two_graph, switch, switching_equivalent, OrientedTwoGraph,
    SwitchCertificate,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TournamentError {
    #[error("tournaments have different sizes ({left} and {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("arc {u} -> {v} is a loop")]
    Loop { u: usize, v: usize },
    #[error("pair {{{u}, {v}}} is oriented twice")]
    DuplicatePair { u: usize, v: usize },
    #[error("pair {{{u}, {v}}} has no orientation")]
    MissingPair { u: usize, v: usize },
    #[error("GF({q}) is not Paley-admissible (q mod 4 = {})", q % 4)]
    NotPaleyAdmissible { q: u64 },
    #[error("expected a 4-uniform hypergraph, got k={k}")]
    WrongUniformity { k: usize },
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    orient: BitSet,
}

impl Tournament {
    /// The transitive tournament `u -> v` for all `u < v`.
    pub fn transitive(n: usize) -> Self {
        let len = n * n.saturating_sub(1) / 2;
        let mut orient = BitSet::new(len);
        for r in 0..len {
            orient.set(r, true);
        }
        Tournament { n, orient }
    }

    /// `beats(u, v)` is consulted once per pair `u < v`.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Self {
        let mut orient = BitSet::new(n * n.saturating_sub(1) / 2);
        for v in 1..n {
            for u in 0..v {
                if beats(u, v) {
                    orient.set(pair_rank(u, v), true);
                }
            }
        }
        Tournament { n, orient }
    }

    /// Builds from a list of arcs `u -> v` orienting every pair exactly once.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, TournamentError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let pairs = n * n.saturating_sub(1) / 2;
        let mut seen = BitSet::new(pairs);
        let mut orient = BitSet::new(pairs);
        for (u, v) in arcs {
            if let Some(&vertex) = [u, v].iter().find(|&&x| x >= n) {
                return Err(TournamentError::VertexOutOfRange { vertex, n });
            }
            if u == v {
                return Err(TournamentError::Loop { u, v });
            }
            let r = pair_rank(u, v);
            if seen.get(r) {
                return Err(TournamentError::DuplicatePair {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            seen.set(r, true);
            orient.set(r, u < v);
        }
        if let Some(r) = (0..pairs).find(|&r| !seen.get(r)) {
            let [u, v]: [usize; 2] = crate::subsets::unrank_colex(r, 2).try_into().expect("pair");
            return Err(TournamentError::MissingPair { u, v });
        }
        Ok(Tournament { n, orient })
    }

    pub(crate) fn from_bits(n: usize, orient: BitSet) -> Self {
        debug_assert_eq!(orient.len(), n * n.saturating_sub(1) / 2);
        Tournament { n, orient }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// One bit per pair in colex pair order; set means the smaller vertex
    /// wins.
    pub fn orientation_bits(&self) -> &BitSet {
        &self.orient
    }

    #[inline]
    pub fn beats(&self, x: usize, y: usize) -> bool {
        debug_assert!(x != y && x < self.n && y < self.n);
        self.orient.get(pair_rank(x, y)) == (x < y)
    }

    /// `+1` if `x -> y`, `-1` if `y -> x`.
    #[inline]
    pub fn f(&self, x: usize, y: usize) -> i8 {
        if self.beats(x, y) {
            1
        } else {
            -1
        }
    }

    /// Orients the pair `{x, y}` as `x -> y`.
    pub fn set_arc(&mut self, x: usize, y: usize) {
        assert!(
            x != y && x < self.n && y < self.n,
            "arc {x} -> {y} invalid for n={}",
            self.n
        );
        self.orient.set(pair_rank(x, y), x < y);
    }

    /// Every arc `(u, v)` meaning `u -> v`, in ascending pair rank.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| {
            (0..v).map(move |u| {
                if self.orient.get(pair_rank(u, v)) {
                    (u, v)
                } else {
                    (v, u)
                }
            })
        })
    }

    pub fn out_degree(&self, x: usize) -> usize {
        (0..self.n).filter(|&y| y != x && self.beats(x, y)).count()
    }

    pub fn in_degree(&self, x: usize) -> usize {
        self.n.saturating_sub(1) - self.out_degree(x)
    }

    pub fn out_neighbors(&self, x: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| y != x && self.beats(x, y))
            .collect()
    }

    /// Every arc reversed.
    pub fn reversed(&self) -> Self {
        let mut orient = self.orient.clone();
        for r in 0..orient.len() {
            orient.toggle(r);
        }
        Tournament { n: self.n, orient }
    }

    /// Sub-tournament on `keep` (ascending), re-indexed in the same order.
    pub fn induced(&self, keep: &[usize]) -> Result<Self, TournamentError> {
        if let Some(&vertex) = keep.iter().find(|&&v| v >= self.n) {
            return Err(TournamentError::VertexOutOfRange { vertex, n: self.n });
        }
        Ok(Tournament::from_fn(keep.len(), |i, j| {
            self.beats(keep[i], keep[j])
        }))
    }
}

fn require_admissible(spec: &FieldSpec) -> Result<(), TournamentError> {
    if spec.paley_admissible() {
        Ok(())
    } else {
        Err(TournamentError::NotPaleyAdmissible { q: spec.order() })
    }
}

/// `x -> y` iff `y - x` is a nonzero square; vertices are field elements
/// in canonical order.
pub fn paley_tournament(spec: &FieldSpec) -> Result<Tournament, TournamentError> {
    require_admissible(spec)?;
    let elems: Vec<_> = spec.elements().collect();
    Ok(Tournament::from_fn(elems.len(), |u, v| {
        spec.chi(&spec.sub(&elems[v], &elems[u])) == 1
    }))
}

/// The Paley tournament on the projective line: `a -> b` iff `D(b, a)` is
/// a nonzero square. Vertex `q` is the point `[1:0]` and is a sink.
pub fn extended_paley_tournament(spec: &FieldSpec) -> Result<Tournament, TournamentError> {
    require_admissible(spec)?;
    let t = chi_det_table(spec);
    Ok(Tournament::from_fn(t.len(), |u, v| t[v][u] == 1))
}

/// The three 4-cycle products of `f` on `[a, b, c, d]`:
/// `f(a,b)f(b,c)f(c,d)f(d,a)`, `f(a,b)f(b,d)f(d,c)f(c,a)` and
/// `f(a,c)f(c,b)f(b,d)f(d,a)`. Their product is always `-1`.
pub fn cycle_products(t: &Tournament, [a, b, c, d]: [usize; 4]) -> [i8; 3] {
    let f = |x, y| t.f(x, y);
    [
        f(a, b) * f(b, c) * f(c, d) * f(d, a),
        f(a, b) * f(b, d) * f(d, c) * f(c, a),
        f(a, c) * f(c, b) * f(b, d) * f(d, a),
    ]
}

/// Hyperedge test by cycle parities: all three products are `-1`.
pub fn is_baber_edge(t: &Tournament, quad: [usize; 4]) -> bool {
    cycle_products(t, quad) == [-1, -1, -1]
}

/// Hyperedge test by pattern: some vertex beats, or is beaten by, all of
/// the other three, and those three form a directed 3-cycle.
pub fn is_baber_edge_by_pattern(t: &Tournament, quad: [usize; 4]) -> bool {
    (0..4).any(|apex| {
        let d = quad[apex];
        let [x, y, z]: [usize; 3] = std::array::from_fn(|i| quad[if i < apex { i } else { i + 1 }]);
        let cyclic = t.f(x, y) == t.f(y, z) && t.f(y, z) == t.f(z, x);
        let uniform = t.f(d, x) == t.f(d, y) && t.f(d, y) == t.f(d, z);
        cyclic && uniform
    })
}

fn baber_with(t: &Tournament, test: fn(&Tournament, [usize; 4]) -> bool) -> HypergraphK {
    let bits = collect_subsets(t.n, 4, |e| test(t, [e[0], e[1], e[2], e[3]]));
    HypergraphK::from_bits(t.n, 4, bits)
}

/// `H_T`: the 4-sets spanning a 3-cycle plus a vertex dominating or
/// dominated by all three of it.
pub fn baber_hypergraph(t: &Tournament) -> HypergraphK {
    baber_with(t, is_baber_edge)
}

/// Same as [`baber_hypergraph`], evaluated with the pattern test.
pub fn baber_hypergraph_by_pattern(t: &Tournament) -> HypergraphK {
    baber_with(t, is_baber_edge_by_pattern)
}

/// Each pair oriented by an independent fair bit from ChaCha8 seeded with
/// `seed`, pairs taken in ascending rank.
pub fn random_tournament(n: usize, seed: u64) -> Tournament {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Tournament::from_fn(n, |_, _| rng.gen())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub mean: f64,
    pub std_error: f64,
    pub min: f64,
    pub max: f64,
}

/// `e(H_T) / C(n, 4)` over `trials` random tournaments; trial `i` uses
/// seed `seed + i` (wrapping).
pub fn baber_density(n: usize, trials: u64, seed: u64) -> DensityReport {
    let total = binomial(n, 4) as f64;
    let samples: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let t = random_tournament(n, seed.wrapping_add(i));
            if total == 0.0 {
                0.0
            } else {
                baber_hypergraph(&t).edge_count() as f64 / total
            }
        })
        .collect();
    let count = samples.len() as f64;
    let mean = if samples.is_empty() {
        0.0
    } else {
        samples.iter().sum::<f64>() / count
    };
    let std_error = if samples.len() < 2 {
        0.0
    } else {
        let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (count - 1.0);
        (var / count).sqrt()
    };
    DensityReport {
        n,
        trials,
        seed,
        mean,
        std_error,
        min: samples.iter().copied().fold(f64::INFINITY, f64::min),
        max: samples.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    }
}
