//! Canonical forms for small graphs.
//!
//! Vertices are first split into cells by iterated degree refinement, which
//! is isomorphism invariant. The canonical code is the lexicographically
//! largest upper-triangle bit string (graph6 column order) over every
//! ordering that lists the cells in refinement order. Exact for any graph;
//! the cost is the product of the cell-size factorials, so it is capped at
//! [`MAX_CANON_ORDER`] vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_CANON_ORDER: usize = 10;

/// `(order, bits)` where bit `k` counts from the most significant end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub order: usize,
    pub bits: u64,
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
        color = sigs
            .drain(..)
            .map(|s| distinct.binary_search(&s).unwrap())
            .collect();
    }
}

struct Search<'a> {
    g: &'a Graph,
    cell_of_position: Vec<usize>,
    members: Vec<Vec<usize>>,
    used: Vec<bool>,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
    total_bits: u32,
}

impl Search<'_> {
    fn bits_before(j: usize) -> u32 {
        (j * j.saturating_sub(1) / 2) as u32
    }

    fn run(&mut self, pos: usize, code: u64) {
        let n = self.g.order();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let cell = self.cell_of_position[pos];
        for idx in 0..self.members[cell].len() {
            let v = self.members[cell][idx];
            if self.used[v] {
                continue;
            }
            let mut next = code;
            for i in 0..pos {
                next = (next << 1) | u64::from(self.g.has_edge(self.order[i], v));
            }
            if let Some((best, _)) = &self.best {
                let shift = self.total_bits - Self::bits_before(pos + 1);
                if next < (best >> shift) {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(pos + 1, next);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical code and the vertex order realising it (`order[pos] = v`).
fn canonical_search(g: &Graph) -> Result<(CanonicalCode, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::CapExceeded {
            what: "vertex count for canonical form",
            got: n,
            cap: MAX_CANON_ORDER,
        });
    }
    let color = refine(g);
    let cells = color.iter().max().map_or(0, |c| c + 1);
    let mut members = vec![Vec::new(); cells];
    for (v, &c) in color.iter().enumerate() {
        members[c].push(v);
    }
    let cell_of_position = members
        .iter()
        .enumerate()
        .flat_map(|(c, m)| std::iter::repeat_n(c, m.len()))
        .collect();
    let mut search = Search {
        g,
        cell_of_position,
        members,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        best: None,
        total_bits: Search::bits_before(n),
    };
    search.run(0, 0);
    let (bits, order) = search.best.unwrap_or((0, Vec::new()));
    Ok((CanonicalCode { order: n, bits }, order))
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_search(g).map(|(c, _)| c)
}

/// The canonical relabeling of `g`: isomorphic graphs map to equal graphs.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    canonical_pair(g).map(|(_, h)| h)
}

pub(crate) fn canonical_pair(g: &Graph) -> Result<(CanonicalCode, Graph)> {
    let (code, order) = canonical_search(g)?;
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((code, g.relabel(&perm)))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}
