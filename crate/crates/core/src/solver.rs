//! Exact total dominator chromatic number.
//!
//! `tdc_number` walks `k` upward from `max(χ, γ_t)` and asks
//! [`tdc_decision`] whether a TD-coloring with at most `k` classes exists.
//! The decision procedure assigns colors along a fixed vertex order
//! (descending degree, ties by label) and only opens color `c + 1` after
//! color `c`, so every set partition is visited once.
//!
//! Pruning keeps, for every vertex `x`, the set of classes that can still end
//! up entirely inside `N(x)`: a class stays viable for `x` while all its
//! members are neighbors of `x`, and an empty class is viable only while `x`
//! still has an uncolored neighbor to put in it. A vertex with no viable
//! class kills the branch. At a leaf this is exactly the TD condition.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::baseline::{chromatic_number, total_domination_number};
use crate::coloring::{ensure_tdc_defined, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_N: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_n: usize,
    /// Wall-clock budget for one `tdc_number` call. `None` means unlimited.
    pub time_budget: Option<Duration>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_n: DEFAULT_MAX_N,
            time_budget: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Search nodes over all decision calls.
    pub nodes: u64,
    /// Values of `k` refuted before the answer.
    pub refuted: Vec<usize>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdcResult {
    pub value: usize,
    pub witness: Coloring,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBound {
    pub value: usize,
    pub witness: Coloring,
}

const CHECK_EVERY: u64 = 1 << 12;

struct Decision<'a> {
    masks: &'a [u64],
    order: Vec<usize>,
    k: usize,
    class: Vec<u64>,
    colors: Vec<usize>,
    uncolored: u64,
    nodes: u64,
    deadline: Option<(Instant, Duration)>,
}

impl Decision<'_> {
    fn viable(&self) -> bool {
        let n = self.masks.len();
        for x in 0..n {
            let nx = self.masks[x];
            let open_neighbor = nx & self.uncolored != 0;
            let ok = self.class.iter().any(|&cl| {
                cl & !nx == 0 && (cl != 0 || open_neighbor)
            });
            if !ok {
                return false;
            }
        }
        true
    }

    fn run(&mut self, pos: usize, used: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(CHECK_EVERY) {
            if let Some((deadline, budget)) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::BudgetExhausted(budget));
                }
            }
        }
        if pos == self.order.len() {
            return Ok(true);
        }
        let v = self.order[pos];
        let bit = 1u64 << v;
        let limit = (used + 1).min(self.k);
        self.uncolored &= !bit;
        for c in 0..limit {
            if self.class[c] & self.masks[v] != 0 {
                continue;
            }
            self.class[c] |= bit;
            if self.viable() {
                self.colors[v] = c;
                if self.run(pos + 1, used.max(c + 1))? {
                    return Ok(true);
                }
            }
            self.class[c] &= !bit;
        }
        self.uncolored |= bit;
        Ok(false)
    }
}

fn vertex_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn check_cap(g: &Graph, cfg: &SolverConfig) -> Result<()> {
    if g.order() > cfg.max_n.min(64) {
        return Err(Error::CapExceeded {
            what: "vertex count for exact TDC",
            got: g.order(),
            cap: cfg.max_n.min(64),
        });
    }
    Ok(())
}

fn decide(
    g: &Graph,
    k: usize,
    deadline: Option<(Instant, Duration)>,
    nodes: &mut u64,
) -> Result<Option<Coloring>> {
    let masks = g.neighbor_masks()?;
    let n = g.order();
    let mut search = Decision {
        masks: &masks,
        order: vertex_order(g),
        k,
        class: vec![0; k],
        colors: vec![0; n],
        uncolored: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        nodes: 0,
        deadline,
    };
    let found = search.run(0, 0);
    *nodes += search.nodes;
    Ok(found?.then(|| Coloring::normalized(&search.colors)))
}

/// A TD-coloring with at most `k` classes, or `None` if there is none.
pub fn tdc_decision(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    tdc_decision_with(g, k, &SolverConfig::default())
}

pub fn tdc_decision_with(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<Option<Coloring>> {
    ensure_tdc_defined(g)?;
    check_cap(g, cfg)?;
    if k == 0 {
        return Err(Error::OutOfDomain("k must be at least 1".into()));
    }
    let deadline = cfg.time_budget.map(|b| (Instant::now() + b, b));
    decide(g, k, deadline, &mut 0)
}

/// `max(χ(G), γ_t(G))`.
pub fn tdc_lower_bound(g: &Graph) -> Result<usize> {
    ensure_tdc_defined(g)?;
    let chi = chromatic_number(g)?.value;
    let gamma_t = total_domination_number(g)?.value;
    Ok(chi.max(gamma_t))
}

/// A TD-coloring built from a minimum total dominating set `S`: each member
/// of `S` is a singleton class and `G - S` gets an optimal proper coloring.
/// Uses `γ_t + χ(G - S) <= γ_t + χ(G)` classes, and never more than `n`.
pub fn tdc_upper_bound(g: &Graph) -> Result<UpperBound> {
    ensure_tdc_defined(g)?;
    let dominating = total_domination_number(g)?.witness;
    let rest: Vec<usize> = (0..g.order()).filter(|v| !dominating.contains(v)).collect();
    let rest_coloring = chromatic_number(&g.induced_subgraph(&rest)?)?;
    let mut colors = vec![0; g.order()];
    for (i, &v) in dominating.iter().enumerate() {
        colors[v] = i;
    }
    for (i, &v) in rest.iter().enumerate() {
        colors[v] = dominating.len() + rest_coloring.witness.color(i);
    }
    let witness = Coloring::new(colors)?;
    Ok(UpperBound {
        value: witness.num_classes(),
        witness,
    })
}

pub fn tdc_number(g: &Graph) -> Result<TdcResult> {
    tdc_number_with(g, &SolverConfig::default())
}

pub fn tdc_number_with(g: &Graph, cfg: &SolverConfig) -> Result<TdcResult> {
    ensure_tdc_defined(g)?;
    check_cap(g, cfg)?;
    let start = Instant::now();
    let deadline = cfg.time_budget.map(|b| (start + b, b));
    let lower = tdc_lower_bound(g)?;
    let upper = tdc_upper_bound(g)?;
    let mut stats = SolveStats::default();
    for k in lower..upper.value {
        if let Some(witness) = decide(g, k, deadline, &mut stats.nodes)? {
            stats.elapsed = start.elapsed();
            return Ok(TdcResult {
                value: witness.num_classes(),
                witness,
                stats,
            });
        }
        stats.refuted.push(k);
    }
    stats.elapsed = start.elapsed();
    Ok(TdcResult {
        value: upper.value,
        witness: upper.witness,
        stats,
    })
}
