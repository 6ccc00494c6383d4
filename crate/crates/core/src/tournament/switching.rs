//! Switching with respect to a vertex set, switching-equivalence
//! certificates and oriented two-graphs.

use serde::Serialize;

use super::{Tournament, TournamentError};
use crate::bitset::BitSet;
use crate::subsets::{binomial, pair_rank, rank_colex};

/// A vertex set `A` with `switch(t1, A) = t2`. Sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SwitchCertificate {
    pub subset: Vec<usize>,
}

fn membership(n: usize, subset: &[usize]) -> Result<Vec<bool>, TournamentError> {
    let mut inside = vec![false; n];
    for &v in subset {
        if v >= n {
            return Err(TournamentError::VertexOutOfRange { vertex: v, n });
        }
        inside[v] = true;
    }
    Ok(inside)
}

/// Reverses every arc between `subset` and its complement.
pub fn switch(t: &Tournament, subset: &[usize]) -> Result<Tournament, TournamentError> {
    let inside = membership(t.n, subset)?;
    let mut orient = t.orient.clone();
    for v in 1..t.n {
        for u in 0..v {
            if inside[u] != inside[v] {
                orient.toggle(pair_rank(u, v));
            }
        }
    }
    Ok(Tournament::from_bits(t.n, orient))
}

/// Decides whether `t2` is `t1` switched with respect to some set, and
/// returns the certificate not containing vertex 0.
///
/// Fixing `s(0) = +1` forces `s(y) = f2(0, y) f1(0, y)`; the tournaments
/// are equivalent iff `f2(x, y) = s(x) s(y) f1(x, y)` on every pair.
pub fn switching_equivalent(
    t1: &Tournament,
    t2: &Tournament,
) -> Result<Option<SwitchCertificate>, TournamentError> {
    if t1.n != t2.n {
        return Err(TournamentError::SizeMismatch {
            left: t1.n,
            right: t2.n,
        });
    }
    let n = t1.n;
    let s: Vec<i8> = (0..n)
        .map(|y| if y == 0 { 1 } else { t2.f(0, y) * t1.f(0, y) })
        .collect();
    for v in 1..n {
        for u in 0..v {
            if t2.f(u, v) != s[u] * s[v] * t1.f(u, v) {
                return Ok(None);
            }
        }
    }
    Ok(Some(SwitchCertificate {
        subset: (0..n).filter(|&v| s[v] == -1).collect(),
    }))
}

/// Switches `t` so every arc at `w` points into `w`; the certificate is
/// the out-neighbourhood of `w` in `t`.
pub fn normalize_to_sink(
    t: &Tournament,
    w: usize,
) -> Result<(Tournament, SwitchCertificate), TournamentError> {
    if w >= t.n {
        return Err(TournamentError::VertexOutOfRange { vertex: w, n: t.n });
    }
    let subset = t.out_neighbors(w);
    let normal = switch(t, &subset)?;
    Ok((normal, SwitchCertificate { subset }))
}

/// `g(x, y, z) = f(x, y) f(y, z) f(z, x)`, stored at sorted triples.
///
/// `g` is invariant under cyclic shifts and changes sign under a
/// transposition, so the sorted value determines every ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedTwoGraph {
    n: usize,
    /// Bit at the colex rank of `{x < y < z}` is set iff `g(x, y, z) = +1`.
    positive: BitSet,
}

impl OrientedTwoGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn positive_bits(&self) -> &BitSet {
        &self.positive
    }

    /// `g` on distinct `x, y, z` in any order.
    pub fn g(&self, x: usize, y: usize, z: usize) -> i8 {
        assert!(x != y && y != z && x != z, "g needs distinct vertices");
        let mut v = [x, y, z];
        let mut sign = 1i8;
        // bubble sort, one sign flip per swap
        for i in 0..2 {
            for j in 0..2 - i {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if self.positive.get(rank_colex(&v)) {
            sign
        } else {
            -sign
        }
    }
}

pub fn oriented_two_graph(t: &Tournament) -> OrientedTwoGraph {
    let n = t.n;
    let mut positive = BitSet::new(usize::try_from(binomial(n, 3)).expect("fits"));
    for z in 2..n {
        for y in 1..z {
            for x in 0..y {
                if t.f(x, y) * t.f(y, z) * t.f(z, x) == 1 {
                    positive.set(rank_colex(&[x, y, z]), true);
                }
            }
        }
    }
    OrientedTwoGraph { n, positive }
}
