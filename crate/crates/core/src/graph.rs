//! Immutable simple graphs on the dense vertex set `0..n`.
//!
//! Every constructor normalizes its input: neighbor lists are sorted and
//! duplicate-free, adjacency is symmetric and loops are rejected. Operations
//! that remove vertices compact the surviving labels in increasing order.

use std::fmt;

use crate::error::{Error, Result};

/// An unordered vertex pair, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and dedups each list. Callers guarantee symmetry and no loops.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, l)| l.iter().all(|&v| v != u && adj[v].binary_search(&u).is_ok())));
        Graph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Degree of `v`. Panics if `v` is not a vertex.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }

    /// Neighborhoods as bitmasks. Only available for graphs with at most 64
    /// vertices; the exact solvers work on this representation.
    pub fn neighbor_masks(&self) -> Result<Vec<u64>> {
        if self.order() > 64 {
            return Err(Error::CapExceeded {
                what: "vertex count for bitmask representation",
                got: self.order(),
                cap: 64,
            });
        }
        Ok(self
            .adj
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect())
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph { adj }
    }

    /// `self` on `0..n1`, `other` shifted to `n1..n1+n2`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&v| v + shift).collect::<Vec<_>>()),
        );
        Graph { adj }
    }

    /// Subgraph induced by `keep`, relabeled `0..keep.len()` in increasing
    /// vertex order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut index = vec![usize::MAX; n];
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        for &v in &kept {
            self.check_vertex(v)?;
        }
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Ok(Graph { adj })
    }

    /// Removes `set`; survivors keep their relative order.
    pub fn delete_vertices(&self, set: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut drop = vec![false; n];
        for &v in set {
            self.check_vertex(v)?;
            drop[v] = true;
        }
        let keep: Vec<usize> = (0..n).filter(|&v| !drop[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Removes each edge of `set`; every edge must be present.
    pub fn delete_edges(&self, set: &[Edge]) -> Result<Graph> {
        let mut adj = self.adj.clone();
        for &(u, v) in set {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !self.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
            adj[u].retain(|&w| w != v);
            adj[v].retain(|&w| w != u);
        }
        Ok(Graph { adj })
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut adj = vec![Vec::new(); self.order()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&v| perm[v]).collect();
        }
        Self::from_raw_adjacency(adj)
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            u < self.order() && set[i + 1..].iter().all(|&v| self.has_edge(u, v))
        })
    }

    /// All `r`-cliques as sorted vertex sets, in lexicographic order.
    /// `r = 0` yields the single empty clique.
    pub fn find_cliques_of_size(&self, r: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(r);
        let candidates: Vec<usize> = (0..self.order()).collect();
        self.extend_cliques(r, &candidates, &mut current, &mut out);
        out
    }

    fn extend_cliques(
        &self,
        r: usize,
        candidates: &[usize],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if candidates.len() - i < r - current.len() {
                break;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| self.has_edge(v, w))
                .collect();
            current.push(v);
            self.extend_cliques(r, &next, current, out);
            current.pop();
        }
    }

    /// Size of a largest clique.
    pub fn clique_number(&self) -> usize {
        let mut r = 0;
        while !self.find_cliques_of_size(r + 1).is_empty() {
            r += 1;
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_basic_shapes() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.size(), 1);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!((0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn deletion_relabels_in_order() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p3 = c4.delete_vertices(&[0]).unwrap();
        assert_eq!(p3, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let g = p3.delete_edges(&[(0, 1)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert!(g.has_isolated_vertex());
        assert_eq!(p3.delete_edges(&[(0, 2)]), Err(Error::MissingEdge(0, 2)));
        assert!(p3.delete_vertices(&[5]).is_err());
    }

    #[test]
    fn connectivity_conventions() {
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
        let k2_k1 = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(k2_k1.has_isolated_vertex());
        assert_eq!(k2_k1.components(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn cliques() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            c4.find_cliques_of_size(2),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        assert_eq!(c4.find_cliques_of_size(0), vec![Vec::<usize>::new()]);
        assert_eq!(c4.clique_number(), 2);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.find_cliques_of_size(3).len(), 4);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.find_cliques_of_size(3).is_empty());
    }

    #[test]
    fn complement_is_an_involution() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().size(), 10 - 3);
    }
}
