//! Line-oriented text format.
//!
//! ```text
//! hypergraph k=4 n=8
//! 0 1 3 7
//! ...
//! ```
//!
//! One edge per line as strictly increasing 0-based indices, edges in rank
//! order on output. Lines starting with `#` and blank lines are skipped.

use std::fmt::Write as _;

use super::{HypergraphError, HypergraphK};

pub(crate) fn parse_header(
    line_no: usize,
    line: &str,
    keyword: &str,
    keys: &[&str],
) -> Result<Vec<usize>, HypergraphError> {
    let err = |message: String| HypergraphError::Parse {
        line: line_no,
        message,
    };
    let mut tokens = line.split(' ');
    if tokens.next() != Some(keyword) {
        return Err(err(format!("expected header starting with `{keyword}`")));
    }
    let mut values = Vec::with_capacity(keys.len());
    for key in keys {
        let tok = tokens
            .next()
            .ok_or_else(|| err(format!("header is missing `{key}=`")))?;
        let value = tok
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or_else(|| err(format!("expected `{key}=<value>`, found `{tok}`")))?;
        values.push(
            value
                .parse()
                .map_err(|_| err(format!("`{value}` is not a non-negative integer")))?,
        );
    }
    if let Some(extra) = tokens.next() {
        return Err(err(format!("unexpected header token `{extra}`")));
    }
    Ok(values)
}

pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_indices(line_no: usize, line: &str) -> Result<Vec<usize>, HypergraphError> {
    line.split(' ')
        .map(|tok| {
            tok.parse().map_err(|_| HypergraphError::Parse {
                line: line_no,
                message: format!("`{tok}` is not a vertex index"),
            })
        })
        .collect()
}

impl HypergraphK {
    pub fn to_text(&self) -> String {
        let mut out = format!("hypergraph k={} n={}\n", self.k, self.n);
        for e in self.edges() {
            let mut first = true;
            for v in e {
                if !first {
                    out.push(' ');
                }
                write!(out, "{v}").expect("writing to a String");
                first = false;
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, HypergraphError> {
        let mut lines = content_lines(text);
        let (hl, header) = lines.next().ok_or(HypergraphError::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let kn = parse_header(hl, header, "hypergraph", &["k", "n"])?;
        let (k, n) = (kn[0], kn[1]);
        let mut h = HypergraphK::empty(n, k).map_err(|e| HypergraphError::Parse {
            line: hl,
            message: e.to_string(),
        })?;
        for (line_no, line) in lines {
            let edge = parse_indices(line_no, line)?;
            let at = |message: String| HypergraphError::Parse {
                line: line_no,
                message,
            };
            if edge.len() != k || edge.windows(2).any(|w| w[0] >= w[1]) {
                return Err(at(format!("expected {k} strictly increasing indices")));
            }
            match h.insert(&edge) {
                Ok(true) => {}
                Ok(false) => return Err(at(format!("duplicate edge {edge:?}"))),
                Err(e) => return Err(at(e.to_string())),
            }
        }
        Ok(h)
    }
}
