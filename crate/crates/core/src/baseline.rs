//! Exact chromatic number and total domination number.

use crate::coloring::{ensure_tdc_defined, Coloring};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub value: usize,
    pub witness: Coloring,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalDomination {
    pub value: usize,
    /// Sorted vertex set attaining `value`.
    pub witness: Vec<usize>,
}

fn greedy_clique(masks: &[u64]) -> Vec<usize> {
    let n = masks.len();
    let mut clique = Vec::new();
    let mut candidates: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    while candidates != 0 {
        let v = (0..n)
            .filter(|&v| candidates >> v & 1 == 1)
            .max_by_key(|&v| ((masks[v] & candidates).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        clique.push(v);
        candidates &= masks[v];
    }
    clique
}

struct ColorSearch<'a> {
    masks: &'a [u64],
    order: Vec<usize>,
    k: usize,
    class: Vec<u64>,
    colors: Vec<usize>,
}

impl ColorSearch<'_> {
    fn run(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.class[c] & self.masks[v] != 0 {
                continue;
            }
            self.class[c] |= 1 << v;
            self.colors[v] = c;
            if self.run(pos + 1, used.max(c + 1)) {
                return true;
            }
            self.class[c] &= !(1 << v);
        }
        false
    }
}

/// Exact `χ(G)` by backtracking over canonical colorings, seeded with a
/// greedy clique (its vertices get colors `0..q` first) which also supplies
/// the starting lower bound.
pub fn chromatic_number(g: &Graph) -> Result<ChromaticResult> {
    let masks = g.neighbor_masks()?;
    let n = g.order();
    if n == 0 {
        return Ok(ChromaticResult {
            value: 0,
            witness: Coloring::new(Vec::new())?,
        });
    }
    let clique = greedy_clique(&masks);
    let mut rest: Vec<usize> = (0..n).filter(|v| !clique.contains(v)).collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let order: Vec<usize> = clique.iter().copied().chain(rest).collect();

    for k in clique.len()..=n {
        let mut search = ColorSearch {
            masks: &masks,
            order: order.clone(),
            k,
            class: vec![0; k],
            colors: vec![0; n],
        };
        if search.run(0, 0) {
            return Ok(ChromaticResult {
                value: k,
                witness: Coloring::normalized(&search.colors),
            });
        }
    }
    unreachable!("n colors always suffice")
}

fn dominate(masks: &[u64], all: u64, limit: usize, dominated: u64, chosen: &mut Vec<usize>) -> bool {
    if dominated == all {
        return true;
    }
    if chosen.len() == limit {
        return false;
    }
    let u = (!dominated & all).trailing_zeros() as usize;
    let mut options = masks[u];
    while options != 0 {
        let w = options.trailing_zeros() as usize;
        options &= options - 1;
        chosen.push(w);
        if dominate(masks, all, limit, dominated | masks[w], chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Exact `γ_t(G)`: iterative deepening on the set size; at each level the
/// lowest undominated vertex must gain a neighbor from the set.
pub fn total_domination_number(g: &Graph) -> Result<TotalDomination> {
    ensure_tdc_defined(g)?;
    let masks = g.neighbor_masks()?;
    let n = g.order();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for limit in 1..=n {
        let mut chosen = Vec::with_capacity(limit);
        if dominate(&masks, all, limit, 0, &mut chosen) {
            chosen.sort_unstable();
            chosen.dedup();
            return Ok(TotalDomination {
                value: chosen.len(),
                witness: chosen,
            });
        }
    }
    unreachable!("V(G) totally dominates a graph without isolated vertices")
}
