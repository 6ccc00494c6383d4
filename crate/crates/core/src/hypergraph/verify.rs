//! Exhaustive verifiers: span counts, design parameters, the de Caen bound,
//! independent sets and invariant fingerprints.

use std::collections::BTreeMap;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{gamma_graph, HypergraphError, HypergraphK};
use crate::subsets::{binomial, subsets, BinomialTable, Combinations, RevolvingDoor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpanMode {
    /// Every (k+1)-set spans exactly 0 or 2 edges.
    ZeroOrTwo,
    /// Every (k+1)-set spans at most 2 edges.
    AtMostTwo,
    /// Every (k+1)-set spans an even number of edges (two-graph condition).
    Even,
}

impl SpanMode {
    pub fn allows(self, count: usize) -> bool {
        match self {
            SpanMode::ZeroOrTwo => count == 0 || count == 2,
            SpanMode::AtMostTwo => count <= 2,
            SpanMode::Even => count.is_multiple_of(2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub mode: SpanMode,
    pub ok: bool,
    /// Number of edges spanned -> number of (k+1)-sets spanning that many.
    pub counts: BTreeMap<usize, u64>,
    /// The violating (k+1)-set of least colex rank.
    pub first_violation: Option<Vec<usize>>,
}

/// Number of edges among the k-subsets of the (k+1)-set `set`, using
/// prefix/suffix sums of the colex weights.
fn spanned_edges(table: &BinomialTable, h: &HypergraphK, set: &[usize]) -> usize {
    let s = set.len();
    let mut suffix = vec![0usize; s + 1];
    for i in (0..s).rev() {
        // element at position i shifts to position i-1 once an earlier one is dropped
        suffix[i] = suffix[i + 1]
            + if i > 0 {
                table.get(set[i], i) as usize
            } else {
                0
            };
    }
    let mut prefix = 0usize;
    let mut count = 0;
    for j in 0..s {
        if h.contains_rank(prefix + suffix[j + 1]) {
            count += 1;
        }
        prefix += table.get(set[j], j + 1) as usize;
    }
    count
}

/// Histogram and least-rank violation of one shard.
type Shard = (Vec<u64>, Option<(usize, Vec<usize>)>);

/// Scans every (k+1)-subset and histograms how many edges it spans.
///
/// Shards by the largest element; each shard walks the remaining k
/// elements in revolving-door order.
pub fn verify_span(h: &HypergraphK, mode: SpanMode) -> SpanReport {
    let n = h.vertex_count();
    let k = h.uniformity();
    let s = k + 1;
    if s > n {
        return SpanReport {
            mode,
            ok: true,
            counts: BTreeMap::new(),
            first_violation: None,
        };
    }
    let table = BinomialTable::new(n, s);
    let shards: Vec<Shard> = (k..n)
        .into_par_iter()
        .map(|top| {
            let mut hist = vec![0u64; s + 1];
            let mut worst: Option<(usize, Vec<usize>)> = None;
            let mut set = vec![0usize; s];
            set[k] = top;
            let mut door = RevolvingDoor::new(top, k);
            while let Some(lower) = door.next() {
                set[..k].copy_from_slice(lower);
                let c = spanned_edges(&table, h, &set);
                hist[c] += 1;
                if !mode.allows(c) {
                    let r = table.rank(&set);
                    if worst.as_ref().is_none_or(|(best, _)| r < *best) {
                        worst = Some((r, set.clone()));
                    }
                }
            }
            (hist, worst)
        })
        .collect();

    let mut counts = BTreeMap::new();
    let mut first: Option<(usize, Vec<usize>)> = None;
    for (hist, worst) in shards {
        for (c, &num) in hist.iter().enumerate().filter(|(_, &x)| x > 0) {
            *counts.entry(c).or_insert(0) += num;
        }
        if let Some((r, set)) = worst {
            if first.as_ref().is_none_or(|(best, _)| r < *best) {
                first = Some((r, set));
            }
        }
    }
    SpanReport {
        mode,
        ok: counts.keys().all(|&c| mode.allows(c)),
        counts,
        first_violation: first.map(|(_, set)| set),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DesignReport {
    pub t: usize,
    pub is_design: bool,
    pub lambda: Option<u64>,
    /// Coverage count -> number of t-subsets with that coverage.
    pub histogram: BTreeMap<u64, u64>,
}

/// How many edges contain each t-subset, summarised as a histogram.
pub fn design_parameters(h: &HypergraphK, t: usize) -> Result<DesignReport, HypergraphError> {
    let k = h.uniformity();
    if t >= k {
        return Err(HypergraphError::InvalidStrength { t, k });
    }
    let n = h.vertex_count();
    let mut cover = vec![0u64; usize::try_from(binomial(n, t)).expect("fits")];
    let positions: Vec<Vec<usize>> = subsets(k, t).collect();
    let mut face = vec![0usize; t];
    for e in h.edges() {
        for pos in &positions {
            for (slot, &p) in face.iter_mut().zip(pos) {
                *slot = e[p];
            }
            cover[crate::subsets::rank_colex(&face)] += 1;
        }
    }
    let mut histogram = BTreeMap::new();
    for c in cover {
        *histogram.entry(c).or_insert(0) += 1;
    }
    let is_design = histogram.len() == 1;
    Ok(DesignReport {
        t,
        is_design,
        lambda: if is_design {
            histogram.keys().next().copied()
        } else {
            None
        },
        histogram,
    })
}

/// `(n / r^2) * C(n, r - 1)` exactly.
pub fn de_caen_bound(n: usize, r: usize) -> Result<Ratio<u128>, HypergraphError> {
    if r < 2 || r > n {
        return Err(HypergraphError::WrongUniformity {
            k: r,
            expected: "2 <= r <= n",
        });
    }
    Ok(Ratio::new(
        n as u128 * binomial(n, r - 1) as u128,
        (r * r) as u128,
    ))
}

fn ratio_string<S: Serializer>(r: &Ratio<u128>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeCaenReport {
    pub edges: u64,
    #[serde(serialize_with = "ratio_string")]
    pub bound: Ratio<u128>,
    pub within_bound: bool,
    pub attains_bound: bool,
    /// Design report at strength `r - 1`; equality requires a single bar
    /// at `n / r`.
    pub design: DesignReport,
    pub ok: bool,
}

/// Checks `e(H) <= (n/r^2) C(n, r-1)` and, at equality, that every
/// (r-1)-set lies in exactly `n / r` edges.
pub fn check_de_caen(h: &HypergraphK) -> Result<DeCaenReport, HypergraphError> {
    let n = h.vertex_count();
    let r = h.uniformity();
    let bound = de_caen_bound(n, r)?;
    let edges = h.edge_count() as u64;
    let e = Ratio::from_integer(edges as u128);
    let design = design_parameters(h, r - 1)?;
    let within_bound = e <= bound;
    let attains_bound = e == bound;
    let expected_lambda = Ratio::new(n as u128, r as u128);
    let design_ok = design.lambda.map(|l| Ratio::from_integer(l as u128)) == Some(expected_lambda);
    Ok(DeCaenReport {
        edges,
        bound,
        within_bound,
        attains_bound,
        ok: within_bound && (!attains_bound || design_ok),
        design,
    })
}

/// Number of m-subsets spanning no edge.
pub fn independent_set_count(h: &HypergraphK, m: usize) -> Result<u64, HypergraphError> {
    let k = h.uniformity();
    if m < k {
        return Err(HypergraphError::InvalidSetSize { m, k });
    }
    let n = h.vertex_count();
    if m > n {
        return Ok(0);
    }
    let positions: Vec<Vec<usize>> = subsets(m, k).collect();
    let table = BinomialTable::new(n, k);
    let count = (m - 1..n)
        .into_par_iter()
        .map(|top| {
            let mut set = vec![0usize; m];
            set[m - 1] = top;
            let mut face = vec![0usize; k];
            let mut lower = Combinations::new(top, m - 1);
            let mut independent = 0u64;
            while let Some(s) = lower.next() {
                set[..m - 1].copy_from_slice(s);
                let spans_edge = positions.iter().any(|pos| {
                    for (slot, &p) in face.iter_mut().zip(pos) {
                        *slot = set[p];
                    }
                    h.contains_rank(table.rank(&face))
                });
                if !spans_edge {
                    independent += 1;
                }
            }
            independent
        })
        .sum();
    Ok(count)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub vertices: usize,
    pub edges: usize,
    pub regular_degree: Option<usize>,
    pub triangles_share_at_most_one_vertex: bool,
    pub ok: bool,
}

/// Regularity and triangle structure of [`gamma_graph`].
pub fn check_gamma(h: &HypergraphK) -> GammaReport {
    let g = gamma_graph(h);
    let regular_degree = g.regular_degree();
    let triangles = g.triangles_share_at_most_one_vertex();
    GammaReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        regular_degree,
        triangles_share_at_most_one_vertex: triangles,
        ok: regular_degree.is_some() && triangles,
    }
}

/// Isomorphism invariants of a 4-uniform hypergraph. Equal fingerprints
/// are necessary, not sufficient, for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub n: usize,
    pub edges: usize,
    pub design_histogram: BTreeMap<u64, u64>,
    pub independent_6_sets: u64,
    pub gamma_degrees: Vec<usize>,
}

pub fn fingerprint(h: &HypergraphK) -> Result<Fingerprint, HypergraphError> {
    h.require_uniformity(4, "k = 4")?;
    let mut gamma_degrees = gamma_graph(h).degrees();
    gamma_degrees.sort_unstable();
    Ok(Fingerprint {
        n: h.vertex_count(),
        edges: h.edge_count(),
        design_histogram: design_parameters(h, 3)?.histogram,
        independent_6_sets: independent_set_count(h, 6)?,
        gamma_degrees,
    })
}
