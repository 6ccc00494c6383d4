//! Line-oriented text format.
//!
//! ```text
//! tournament n=3
//! 0 1
//! 2 0
//! 1 2
//! ```
//!
//! One line `u v` per unordered pair meaning `u -> v`, pairs in ascending
//! rank on output. Lines starting with `#` and blank lines are skipped.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use super::{Tournament, TournamentError};
use crate::bitset::BitSet;
use crate::hypergraph::text::{content_lines, parse_header, parse_indices};
use crate::hypergraph::HypergraphError;
use crate::subsets::pair_rank;

fn parse_error(e: HypergraphError) -> TournamentError {
    match e {
        HypergraphError::Parse { line, message } => TournamentError::Parse { line, message },
        other => TournamentError::Parse {
            line: 0,
            message: other.to_string(),
        },
    }
}

impl Tournament {
    pub fn to_text(&self) -> String {
        let mut out = format!("tournament n={}\n", self.n);
        for (u, v) in self.arcs() {
            writeln!(out, "{u} {v}").expect("writing to a String");
        }
        out
    }

    /// Hex SHA-256 of the canonical text serialization.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }

    pub fn from_text(text: &str) -> Result<Self, TournamentError> {
        let mut lines = content_lines(text);
        let (hl, header) = lines.next().ok_or(TournamentError::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let n = parse_header(hl, header, "tournament", &["n"]).map_err(parse_error)?[0];
        let pairs = n * n.saturating_sub(1) / 2;
        let mut seen = BitSet::new(pairs);
        let mut arcs = Vec::with_capacity(pairs);
        let mut last_line = hl;
        for (line_no, line) in lines {
            let at = |message: String| TournamentError::Parse {
                line: line_no,
                message,
            };
            let arc = parse_indices(line_no, line).map_err(parse_error)?;
            let &[u, v] = arc.as_slice() else {
                return Err(at("expected two vertex indices `u v`".into()));
            };
            if u >= n || v >= n || u == v {
                return Err(at(format!("`{u} {v}` is not an arc on {n} vertices")));
            }
            if seen.get(pair_rank(u, v)) {
                return Err(at(format!(
                    "pair {{{}, {}}} is oriented twice",
                    u.min(v),
                    u.max(v)
                )));
            }
            seen.set(pair_rank(u, v), true);
            arcs.push((u, v));
            last_line = line_no;
        }
        Tournament::from_arcs(n, arcs).map_err(|e| TournamentError::Parse {
            line: last_line,
            message: e.to_string(),
        })
    }
}
