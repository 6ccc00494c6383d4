//! Deciding whether a 4-graph is `H_T` for some tournament `T`.
//!
//! Switching preserves `H_T`, so vertex 0 may be taken as a universal
//! sink. The remaining unknowns are the orientation bits of pairs inside
//! `[1, n)`. For a 4-set `{a < b < c < d}` with cycle products
//! `P1 = f(a,b)f(b,c)f(c,d)f(d,a)` and `P2 = f(a,b)f(b,d)f(d,c)f(c,a)`:
//! a hyperedge requires `P1 = P2 = -1` (two parity constraints), and a
//! non-edge requires `P1 = +1` or `P2 = +1`. The third product is then
//! determined because `P1 P2 P3 = -1`.

use serde::Serialize;

use super::{baber_hypergraph, Tournament, TournamentError};
use crate::bitset::BitSet;
use crate::hypergraph::{is_bipartite, link_graph, HypergraphK};
use crate::subsets::{pair_rank, Combinations};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizeOutcome {
    /// `H_T` of the witness equals the input; vertex 0 is a sink.
    Witness { tournament: Tournament, nodes: u64 },
    /// The whole sink-normalised search space was refuted.
    Unrealizable { nodes: u64 },
}

impl RealizeOutcome {
    pub fn nodes(&self) -> u64 {
        match self {
            RealizeOutcome::Witness { nodes, .. } | RealizeOutcome::Unrealizable { nodes } => {
                *nodes
            }
        }
    }

    pub fn witness(&self) -> Option<&Tournament> {
        match self {
            RealizeOutcome::Witness { tournament, .. } => Some(tournament),
            RealizeOutcome::Unrealizable { .. } => None,
        }
    }
}

/// XOR of the listed orientation bits must equal `rhs`.
#[derive(Clone, Copy, Debug)]
struct Parity {
    vars: [usize; 4],
    rhs: bool,
}

/// Parity form of `prod f(x, y) = value` over four ordered pairs.
///
/// A factor is `-1` iff its pair bit equals `x > y`, so the product is
/// `-1` iff the XOR of the bits is 1 XOR the parity of descending pairs.
fn product_is(order: [(usize, usize); 4], value: i8) -> Parity {
    let descending = order.iter().filter(|(x, y)| x > y).count();
    let want_minus = value == -1;
    Parity {
        vars: order.map(|(x, y)| pair_rank(x, y)),
        rhs: (descending % 2 == 1) ^ want_minus,
    }
}

#[derive(Clone, Copy, Debug)]
enum Constraint {
    Xor(Parity),
    Either(Parity, Parity),
}

enum Status {
    Satisfied,
    Falsified,
    /// Number of unassigned variables and the last one seen.
    Open(usize, usize),
}

struct Solver {
    value: Vec<Option<bool>>,
    trail: Vec<usize>,
    head: usize,
    constraints: Vec<Constraint>,
    occurs: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl Solver {
    fn status(&self, p: &Parity) -> (Status, bool) {
        let mut acc = false;
        let mut open = 0;
        let mut last = 0;
        for &v in &p.vars {
            match self.value[v] {
                Some(b) => acc ^= b,
                None => {
                    open += 1;
                    last = v;
                }
            }
        }
        let status = match open {
            0 if acc == p.rhs => Status::Satisfied,
            0 => Status::Falsified,
            _ => Status::Open(open, last),
        };
        // the value `last` must take to satisfy `p` when it is the only
        // open variable
        (status, acc ^ p.rhs)
    }

    fn assign(&mut self, var: usize, b: bool) {
        debug_assert!(self.value[var].is_none());
        self.value[var] = Some(b);
        self.trail.push(var);
    }

    /// Returns false on conflict.
    fn check(&mut self, c: usize) -> bool {
        match self.constraints[c] {
            Constraint::Xor(p) => match self.status(&p) {
                (Status::Satisfied, _) => true,
                (Status::Falsified, _) => false,
                (Status::Open(1, v), forced) => {
                    self.assign(v, forced);
                    true
                }
                (Status::Open(..), _) => true,
            },
            Constraint::Either(p, q) => {
                let (sp, fp) = self.status(&p);
                let (sq, fq) = self.status(&q);
                match (sp, sq) {
                    (Status::Satisfied, _) | (_, Status::Satisfied) => true,
                    (Status::Falsified, Status::Falsified) => false,
                    (Status::Falsified, Status::Open(1, v)) => {
                        self.assign(v, fq);
                        true
                    }
                    (Status::Open(1, v), Status::Falsified) => {
                        self.assign(v, fp);
                        true
                    }
                    _ => true,
                }
            }
        }
    }

    fn propagate(&mut self) -> bool {
        while self.head < self.trail.len() {
            let var = self.trail[self.head];
            self.head += 1;
            for i in 0..self.occurs[var].len() {
                let c = self.occurs[var][i];
                if !self.check(c) {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for var in self.trail.drain(mark..) {
            self.value[var] = None;
        }
        self.head = mark;
    }

    fn search(&mut self) -> Result<bool, TournamentError> {
        let Some(var) = self.value.iter().position(Option::is_none) else {
            return Ok(true);
        };
        for b in [true, false] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(TournamentError::BudgetExceeded {
                    nodes: self.nodes - 1,
                });
            }
            let mark = self.trail.len();
            self.assign(var, b);
            if self.propagate() && self.search()? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }
}

/// Searches for a tournament `T` with `H_T = h`, branching on orientation
/// bits in ascending pair rank with `u -> v` tried first. `nodes` counts
/// branch assignments; more than `budget` of them is an error.
pub fn realize_as_tournament(
    h: &HypergraphK,
    budget: u64,
) -> Result<RealizeOutcome, TournamentError> {
    if h.uniformity() != 4 {
        return Err(TournamentError::WrongUniformity { k: h.uniformity() });
    }
    let n = h.vertex_count();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut constraints = Vec::new();
    let mut quads = Combinations::new(n, 4);
    while let Some(e) = quads.next() {
        let [a, b, c, d] = [e[0], e[1], e[2], e[3]];
        let p1 = [(a, b), (b, c), (c, d), (d, a)];
        let p2 = [(a, b), (b, d), (d, c), (c, a)];
        if h.contains_sorted(e) {
            constraints.push(Constraint::Xor(product_is(p1, -1)));
            constraints.push(Constraint::Xor(product_is(p2, -1)));
        } else {
            constraints.push(Constraint::Either(product_is(p1, 1), product_is(p2, 1)));
        }
    }
    let mut occurs = vec![Vec::new(); pairs];
    for (i, c) in constraints.iter().enumerate() {
        let mut vars: Vec<usize> = match c {
            Constraint::Xor(p) => p.vars.to_vec(),
            Constraint::Either(p, q) => p.vars.iter().chain(&q.vars).copied().collect(),
        };
        vars.sort_unstable();
        vars.dedup();
        for v in vars {
            occurs[v].push(i);
        }
    }
    let mut solver = Solver {
        value: vec![None; pairs],
        trail: Vec::with_capacity(pairs),
        head: 0,
        constraints,
        occurs,
        nodes: 0,
        budget,
    };
    // vertex 0 is a sink: x -> 0, so the bit of {0, x} is clear
    for x in 1..n {
        solver.assign(pair_rank(0, x), false);
    }
    let consistent = (0..solver.constraints.len()).all(|c| solver.check(c)) && solver.propagate();
    if !consistent || !solver.search()? {
        return Ok(RealizeOutcome::Unrealizable {
            nodes: solver.nodes,
        });
    }
    let orient: BitSet = solver.value.iter().map(|v| v.expect("complete")).collect();
    let tournament = Tournament::from_bits(n, orient);
    assert_eq!(
        &baber_hypergraph(&tournament),
        h,
        "solver returned an invalid witness"
    );
    Ok(RealizeOutcome::Witness {
        tournament,
        nodes: solver.nodes,
    })
}

/// A pair whose link graph is not bipartite, with an odd cycle in
/// original vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub u: usize,
    pub v: usize,
    pub cycle: Vec<usize>,
}

/// The first pair `u < v` (lexicographic) whose link graph contains an odd
/// cycle; any such pair shows that no tournament realizes `h`.
pub fn odd_cycle_obstruction(h: &HypergraphK) -> Result<Option<Obstruction>, TournamentError> {
    if h.uniformity() != 4 {
        return Err(TournamentError::WrongUniformity { k: h.uniformity() });
    }
    let n = h.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            let link = link_graph(h, u, v).expect("valid pair");
            if let Some(cycle) = is_bipartite(&link.graph).odd_cycle() {
                return Ok(Some(Obstruction {
                    u,
                    v,
                    cycle: cycle.iter().map(|&i| link.vertices[i]).collect(),
                }));
            }
        }
    }
    Ok(None)
}
