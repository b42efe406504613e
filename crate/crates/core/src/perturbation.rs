//! TDC-stability and TDC-bondage: the fewest vertices (edges) whose removal
//! changes the TDC-number.
//!
//! Removal sets are swept by increasing size and lexicographically within a
//! size; the first set that changes the value is the witness, so every
//! smaller set has been checked and left the value unchanged. A removal can
//! leave a graph with an isolated vertex (or no vertices at all), where the
//! TDC-number does not exist; [`DegenerateConvention`] decides whether that
//! counts as a change.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::coloring::ensure_tdc_defined;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::solver::{tdc_number_with, SolverConfig};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateConvention {
    /// A removal that leaves the TDC-number undefined changes it.
    #[default]
    UndefinedCountsAsChanged,
    /// Such removals are ignored.
    SkipUndefined,
}

impl fmt::Display for DegenerateConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegenerateConvention::UndefinedCountsAsChanged => "undefined_counts_as_changed",
            DegenerateConvention::SkipUndefined => "skip_undefined",
        })
    }
}

impl FromStr for DegenerateConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "changed" | "undefined_counts_as_changed" | "undefined-counts-as-changed" => {
                Ok(DegenerateConvention::UndefinedCountsAsChanged)
            }
            "skip" | "skip_undefined" | "skip-undefined" => Ok(DegenerateConvention::SkipUndefined),
            _ => Err(Error::Parse(format!("unknown convention {s:?}"))),
        }
    }
}

/// A TDC-number that may not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TdcValue {
    Defined(usize),
    Undefined,
}

impl TdcValue {
    pub fn defined(self) -> Option<usize> {
        match self {
            TdcValue::Defined(v) => Some(v),
            TdcValue::Undefined => None,
        }
    }
}

impl fmt::Display for TdcValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdcValue::Defined(v) => write!(f, "{v}"),
            TdcValue::Undefined => f.write_str("undefined"),
        }
    }
}

impl Serialize for TdcValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TdcValue::Defined(v) => s.serialize_u64(*v as u64),
            TdcValue::Undefined => s.serialize_str("undefined"),
        }
    }
}

/// `χ_d^t(G)`, or `Undefined` when `G` is empty or has an isolated vertex.
pub fn tdc_value(g: &Graph, solver: &SolverConfig) -> Result<TdcValue> {
    match tdc_number_with(g, solver) {
        Ok(r) => Ok(TdcValue::Defined(r.value)),
        Err(Error::Undefined(_)) => Ok(TdcValue::Undefined),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PerturbationKind {
    Stability,
    Bondage,
}

impl FromStr for PerturbationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stability" => Ok(PerturbationKind::Stability),
            "bondage" => Ok(PerturbationKind::Bondage),
            _ => Err(Error::Parse(format!("unknown perturbation kind {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Removal {
    Vertices(Vec<usize>),
    Edges(Vec<Edge>),
}

impl Removal {
    pub fn len(&self) -> usize {
        match self {
            Removal::Vertices(v) => v.len(),
            Removal::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match self {
            Removal::Vertices(v) => g.delete_vertices(v),
            Removal::Edges(e) => g.delete_edges(e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerturbationConfig {
    pub max_n: usize,
    pub max_edges: usize,
    pub solver: SolverConfig,
}

impl Default for PerturbationConfig {
    fn default() -> Self {
        PerturbationConfig {
            max_n: 12,
            max_edges: 24,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerturbationResult {
    pub kind: PerturbationKind,
    /// `None` when no removal set changes the value (possible only when
    /// undefined outcomes are skipped).
    pub value: Option<usize>,
    pub witness: Option<Removal>,
    pub base_value: usize,
    pub after_value: Option<TdcValue>,
    pub convention: DegenerateConvention,
    /// Removal sets evaluated, including the witness.
    pub subsets_checked: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRow {
    pub removed: Removal,
    pub after_value: TdcValue,
}

/// Lexicographic `k`-subsets of `0..m`.
struct Combinations {
    m: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(m: usize, k: usize) -> Self {
        Combinations {
            m,
            current: (k <= m).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.m - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

fn ground_set(g: &Graph, kind: PerturbationKind) -> Vec<Edge> {
    match kind {
        PerturbationKind::Stability => (0..g.order()).map(|v| (v, v)).collect(),
        PerturbationKind::Bondage => g.edges().collect(),
    }
}

fn removal_for(kind: PerturbationKind, ground: &[Edge], pick: &[usize]) -> Removal {
    match kind {
        PerturbationKind::Stability => Removal::Vertices(pick.iter().map(|&i| ground[i].0).collect()),
        PerturbationKind::Bondage => Removal::Edges(pick.iter().map(|&i| ground[i]).collect()),
    }
}

fn check_caps(g: &Graph, cfg: &PerturbationConfig) -> Result<()> {
    if g.order() > cfg.max_n {
        return Err(Error::CapExceeded {
            what: "vertex count for exact perturbation",
            got: g.order(),
            cap: cfg.max_n,
        });
    }
    if g.size() > cfg.max_edges {
        return Err(Error::CapExceeded {
            what: "edge count for exact perturbation",
            got: g.size(),
            cap: cfg.max_edges,
        });
    }
    Ok(())
}

const CHUNK: usize = 32;

fn sweep(
    g: &Graph,
    kind: PerturbationKind,
    convention: DegenerateConvention,
    cfg: &PerturbationConfig,
) -> Result<PerturbationResult> {
    ensure_tdc_defined(g)?;
    check_caps(g, cfg)?;
    let base = tdc_number_with(g, &cfg.solver)?.value;
    let ground = ground_set(g, kind);
    let mut checked = 0u64;
    for size in 1..=ground.len() {
        let mut layer = Combinations::new(ground.len(), size).peekable();
        while layer.peek().is_some() {
            let chunk: Vec<Removal> = layer
                .by_ref()
                .take(CHUNK)
                .map(|pick| removal_for(kind, &ground, &pick))
                .collect();
            let values = chunk
                .par_iter()
                .map(|r| tdc_value(&r.apply(g)?, &cfg.solver))
                .collect::<Result<Vec<_>>>()?;
            for (removal, after) in chunk.into_iter().zip(values) {
                checked += 1;
                let changed = match after {
                    TdcValue::Defined(v) => v != base,
                    TdcValue::Undefined => convention == DegenerateConvention::UndefinedCountsAsChanged,
                };
                if changed {
                    return Ok(PerturbationResult {
                        kind,
                        value: Some(size),
                        witness: Some(removal),
                        base_value: base,
                        after_value: Some(after),
                        convention,
                        subsets_checked: checked,
                    });
                }
            }
        }
    }
    Ok(PerturbationResult {
        kind,
        value: None,
        witness: None,
        base_value: base,
        after_value: None,
        convention,
        subsets_checked: checked,
    })
}

pub fn stability(g: &Graph, convention: DegenerateConvention) -> Result<PerturbationResult> {
    stability_with(g, convention, &PerturbationConfig::default())
}

pub fn stability_with(
    g: &Graph,
    convention: DegenerateConvention,
    cfg: &PerturbationConfig,
) -> Result<PerturbationResult> {
    sweep(g, PerturbationKind::Stability, convention, cfg)
}

pub fn bondage(g: &Graph, convention: DegenerateConvention) -> Result<PerturbationResult> {
    bondage_with(g, convention, &PerturbationConfig::default())
}

pub fn bondage_with(
    g: &Graph,
    convention: DegenerateConvention,
    cfg: &PerturbationConfig,
) -> Result<PerturbationResult> {
    sweep(g, PerturbationKind::Bondage, convention, cfg)
}

pub fn perturb_with(
    g: &Graph,
    kind: PerturbationKind,
    convention: DegenerateConvention,
    cfg: &PerturbationConfig,
) -> Result<PerturbationResult> {
    sweep(g, kind, convention, cfg)
}

/// Every removal set of size `1..=max_size` with its resulting value. The
/// convention only affects how rows are read, not the rows themselves; it is
/// taken for symmetry with [`stability`] and [`bondage`].
pub fn perturbation_trace(
    g: &Graph,
    kind: PerturbationKind,
    _convention: DegenerateConvention,
    max_size: usize,
    cfg: &PerturbationConfig,
) -> Result<Vec<TraceRow>> {
    ensure_tdc_defined(g)?;
    check_caps(g, cfg)?;
    let ground = ground_set(g, kind);
    let removals: Vec<Removal> = (1..=max_size.min(ground.len()))
        .flat_map(|size| Combinations::new(ground.len(), size))
        .map(|pick| removal_for(kind, &ground, &pick))
        .collect();
    removals
        .into_par_iter()
        .map(|removed| {
            let after_value = tdc_value(&removed.apply(g)?, &cfg.solver)?;
            Ok(TraceRow {
                removed,
                after_value,
            })
        })
        .collect()
}
