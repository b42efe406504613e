//! Binary graph operations: Cartesian product, neighbourhood corona and
//! clique gluing.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `G1 □ G2`. The pair `(u, v)` is vertex `u * |V(G2)| + v`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.is_empty() || g2.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let n2 = g2.order();
    let id = |u: usize, v: usize| u * n2 + v;
    let mut edges = Vec::new();
    for u in 0..g1.order() {
        for (v, w) in g2.edges() {
            edges.push((id(u, v), id(u, w)));
        }
    }
    for (u, w) in g1.edges() {
        for v in 0..n2 {
            edges.push((id(u, v), id(w, v)));
        }
    }
    Graph::from_edges(g1.order() * n2, &edges)
}

/// Neighbourhood corona `G1 ⋆ G2`.
///
/// Layout: vertices `0..n1` are `G1`; copy `i` of `G2` occupies the block
/// `n1 + i*n2 .. n1 + (i+1)*n2`. Every vertex of copy `i` is joined to each
/// neighbor of vertex `i` in `G1` and to nothing else outside its copy.
pub fn neighbourhood_corona(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.is_empty() || g2.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let (n1, n2) = (g1.order(), g2.order());
    let block = |i: usize| n1 + i * n2;
    let mut edges: Vec<(usize, usize)> = g1.edges().collect();
    for i in 0..n1 {
        let base = block(i);
        edges.extend(g2.edges().map(|(x, y)| (base + x, base + y)));
        for x in 0..n2 {
            edges.extend(g1.neighbors(i).iter().map(|&w| (base + x, w)));
        }
    }
    Graph::from_edges(n1 * (1 + n2), &edges)
}

/// `G1 ∪_{K_r} G2`: identifies `clique2[j]` with `clique1[j]` for every `j`.
///
/// `G1` keeps its labels; the remaining vertices of `G2` follow as
/// `n1, n1+1, ...` in increasing order of their `G2` label. With empty
/// cliques this is the disjoint union.
pub fn r_gluing(g1: &Graph, g2: &Graph, clique1: &[usize], clique2: &[usize]) -> Result<Graph> {
    if clique1.len() != clique2.len() {
        return Err(Error::CliqueSizeMismatch(clique1.len(), clique2.len()));
    }
    for (g, clique) in [(g1, clique1), (g2, clique2)] {
        if clique.len() > g.order() {
            return Err(Error::OutOfDomain(format!(
                "r = {} exceeds graph order {}",
                clique.len(),
                g.order()
            )));
        }
        for &v in clique {
            g.check_vertex(v)?;
        }
        let mut sorted = clique.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != clique.len() {
            return Err(Error::DuplicateVertex(clique.to_vec()));
        }
        if !g.is_clique(clique) {
            return Err(Error::NotAClique(clique.to_vec()));
        }
    }

    let n1 = g1.order();
    let mut map = vec![usize::MAX; g2.order()];
    for (&a, &b) in clique1.iter().zip(clique2) {
        map[b] = a;
    }
    let mut next = n1;
    for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut edges: Vec<(usize, usize)> = g1.edges().collect();
    edges.extend(g2.edges().map(|(u, v)| (map[u], map[v])));
    Graph::from_edges(next, &edges)
}

/// `r_gluing` with the lexicographically first `r`-clique of each operand
/// and the identity pairing.
pub fn r_gluing_default(g1: &Graph, g2: &Graph, r: usize) -> Result<Graph> {
    let pick = |g: &Graph| {
        g.find_cliques_of_size(r)
            .into_iter()
            .next()
            .ok_or_else(|| Error::OutOfDomain(format!("graph has no clique of size {r}")))
    };
    r_gluing(g1, g2, &pick(g1)?, &pick(g2)?)
}
