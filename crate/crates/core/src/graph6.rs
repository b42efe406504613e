//! graph6 and plain edge-list text formats.
//!
//! graph6: an order header (`n+63` for `n <= 62`, `~` plus three 6-bit
//! bytes up to 258047, `~~` plus six bytes beyond), then the upper triangle
//! in column order `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed six bits per
//! byte with the most significant bit first, zero padded, each byte offset
//! by 63. An optional `>>graph6<<` prefix is accepted on input.
//!
//! Edge list: a line `n m`, then `m` lines `u v` with 0-indexed endpoints.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed order header")]
    BadHeader,
    #[error("byte {0:#04x} at offset {1} is outside the printable range 63..=126")]
    ByteOutOfRange(u8, usize),
    #[error("body has {got} bytes, expected {expected}")]
    BadLength { expected: usize, got: usize },
}

fn encode_order(n: usize, out: &mut String) {
    let push6 = |out: &mut String, v: usize, shift: u32| {
        out.push(char::from((((v >> shift) & 0x3f) as u8) + 63));
    };
    if n <= 62 {
        out.push(char::from(n as u8 + 63));
    } else if n <= 258_047 {
        out.push('~');
        for s in [12, 6, 0] {
            push6(out, n, s);
        }
    } else {
        out.push_str("~~");
        for s in [30, 24, 18, 12, 6, 0] {
            push6(out, n, s);
        }
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + 63));
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty.into());
    }
    let mut values = Vec::with_capacity(bytes.len());
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange(b, i).into());
        }
        values.push(b - 63);
    }

    let gather = |digits: &[u8]| digits.iter().fold(0usize, |acc, &d| (acc << 6) | d as usize);
    let (n, body) = if values[0] != 63 {
        (values[0] as usize, &values[1..])
    } else if values.len() >= 2 && values[1] != 63 {
        if values.len() < 4 {
            return Err(Graph6Error::BadHeader.into());
        }
        (gather(&values[1..4]), &values[4..])
    } else {
        if values.len() < 8 {
            return Err(Graph6Error::BadHeader.into());
        }
        (gather(&values[2..8]), &values[8..])
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            got: body.len(),
        }
        .into());
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list is empty".into()))?;
    let nums = |line: &str| -> Result<Vec<usize>> {
        line.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
            })
            .collect()
    };
    let (n, m) = match nums(header)?[..] {
        [n, m] => (n, m),
        _ => return Err(Error::Parse("header must be \"n m\"".into())),
    };
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref().take(m) {
        match nums(line)?[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
        }
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines after edge list".into()));
    }
    Graph::from_edges(n, &edges)
}
