//! Small-graph enumeration, seeded random graphs and the low-degree
//! stability scan.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_pair;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::perturbation::{stability_with, DegenerateConvention, PerturbationConfig};
use crate::solver::tdc_number_with;

pub const MAX_ENUMERATION_N: usize = 8;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub connected: bool,
    pub no_isolated: bool,
    /// Keep graphs whose minimum degree is at most this.
    pub min_degree_at_most: Option<usize>,
}

impl GraphFilter {
    pub const ALL: GraphFilter = GraphFilter {
        connected: false,
        no_isolated: false,
        min_degree_at_most: None,
    };
    pub const CONNECTED: GraphFilter = GraphFilter {
        connected: true,
        ..GraphFilter::ALL
    };
    pub const NO_ISOLATED: GraphFilter = GraphFilter {
        no_isolated: true,
        ..GraphFilter::ALL
    };

    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected())
            && (!self.no_isolated || !g.has_isolated_vertex())
            && self
                .min_degree_at_most
                .is_none_or(|d| g.min_degree().is_some_and(|m| m <= d))
    }
}

/// Graphs produced by [`enumerate_graphs`].
pub struct GraphStream {
    inner: StreamInner,
    filter: GraphFilter,
}

enum StreamInner {
    Labeled { n: usize, next: u64, end: u64 },
    Classes(std::vec::IntoIter<Graph>),
}

/// Upper-triangle pairs in row order: (0,1), (0,2), ..., (1,2), ...
fn row_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn labeled_graph(n: usize, code: u64) -> Graph {
    let pairs = row_pairs(n);
    let m = pairs.len();
    let edges: Vec<_> = pairs
        .into_iter()
        .enumerate()
        .filter(|(i, _)| code >> (m - 1 - i) & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let g = match &mut self.inner {
                StreamInner::Labeled { n, next, end } => {
                    if *next >= *end {
                        return None;
                    }
                    let g = labeled_graph(*n, *next);
                    *next += 1;
                    g
                }
                StreamInner::Classes(it) => it.next()?,
            };
            if self.filter.accepts(&g) {
                return Some(g);
            }
        }
    }
}

static CLASS_CACHE: [OnceLock<Vec<Graph>>; MAX_ENUMERATION_N + 1] =
    [const { OnceLock::new() }; MAX_ENUMERATION_N + 1];

/// One canonical representative per isomorphism class on `n` vertices.
/// Every graph on `n` vertices is a graph on `n - 1` vertices plus a vertex
/// joined to some subset, so extending each smaller class by every subset
/// and keeping canonical forms reaches every class.
fn isomorphism_classes(n: usize) -> &'static [Graph] {
    CLASS_CACHE[n].get_or_init(|| {
        if n <= 1 {
            return vec![Graph::empty(n)];
        }
        let smaller = isomorphism_classes(n - 1);
        let found: BTreeMap<u64, Graph> = smaller
            .par_iter()
            .flat_map_iter(|base| {
                (0u64..1 << (n - 1)).map(move |mask| {
                    let mut edges: Vec<_> = base.edges().collect();
                    edges.extend((0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
                    Graph::from_edges(n, &edges).expect("in range")
                })
            })
            .map(|g| {
                let (code, c) = canonical_pair(&g).expect("n within canonical cap");
                (code.bits, c)
            })
            .collect();
        found.into_values().collect()
    })
}

/// Graphs on `n` labeled vertices passing `filter`.
///
/// Without `dedup` every adjacency matrix is produced, ordered by its
/// upper triangle (row order, first pair most significant) read as a binary
/// number. With `dedup` one canonical representative per isomorphism class
/// is produced, ordered by canonical code.
pub fn enumerate_graphs(n: usize, filter: GraphFilter, dedup: bool) -> Result<GraphStream> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::OutOfDomain(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    let inner = if dedup {
        StreamInner::Classes(isomorphism_classes(n).to_vec().into_iter())
    } else {
        let m = n * (n - 1) / 2;
        StreamInner::Labeled {
            n,
            next: 0,
            end: 1u64 << m,
        }
    };
    Ok(GraphStream { inner, filter })
}

/// G(n, p) from a ChaCha8 stream seeded with `seed`: one Bernoulli draw per
/// vertex pair in row order.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_from(n, p, &mut rng)
}

pub fn random_graph_from<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let edges: Vec<_> = row_pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &edges)
}

/// Draws from G(n, p) until the sample is connected.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    const ATTEMPTS: usize = 10_000;
    for _ in 0..ATTEMPTS {
        let g = random_graph_from(n, p, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::OutOfDomain(format!(
        "no connected G({n}, {p}) sample in {ATTEMPTS} draws"
    )))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanPopulation {
    #[default]
    Connected,
    NoIsolatedVertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingVerdict {
    Consistent,
    Counterexample,
    /// No removal set changes the value under the chosen convention.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureFinding {
    pub graph6: String,
    pub n: usize,
    pub min_degree: usize,
    pub tdc: usize,
    pub stability: Option<usize>,
    pub convention: DegenerateConvention,
    pub population: ScanPopulation,
    pub verdict: FindingVerdict,
}

/// Stability of every graph (one per isomorphism class) on `2..=max_n`
/// vertices with no isolated vertex and a vertex of degree one or two.
/// Graphs with stability outside `{1, 2}` are counterexamples.
pub fn conjecture_scan(
    max_n: usize,
    convention: DegenerateConvention,
    population: ScanPopulation,
    cfg: &PerturbationConfig,
) -> Result<Vec<ConjectureFinding>> {
    if max_n > MAX_ENUMERATION_N {
        return Err(Error::CapExceeded {
            what: "scan order",
            got: max_n,
            cap: MAX_ENUMERATION_N,
        });
    }
    let filter = GraphFilter {
        connected: population == ScanPopulation::Connected,
        no_isolated: true,
        min_degree_at_most: Some(2),
    };
    let graphs: Vec<Graph> = (2..=max_n)
        .map(|n| enumerate_graphs(n, filter, true))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    graphs
        .par_iter()
        .map(|g| {
            let st = stability_with(g, convention, cfg)?;
            let tdc = tdc_number_with(g, &cfg.solver)?.value;
            let verdict = match st.value {
                Some(1 | 2) => FindingVerdict::Consistent,
                Some(_) => FindingVerdict::Counterexample,
                None => FindingVerdict::Undetermined,
            };
            Ok(ConjectureFinding {
                graph6: write_graph6(g),
                n: g.order(),
                min_degree: g.min_degree().unwrap_or(0),
                tdc,
                stability: st.value,
                convention,
                population,
                verdict,
            })
        })
        .collect()
}
