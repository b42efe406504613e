//! Brute-force TDC-number over every set partition of the vertex set.
//!
//! Deliberately shares nothing with [`crate::solver`]: partitions come from
//! restricted-growth strings and each one is checked against the definition
//! with plain adjacency lookups.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_BRUTE_FORCE_N: usize = 8;

fn is_td(g: &Graph, rgs: &[usize], k: usize) -> bool {
    let n = g.order();
    for u in 0..n {
        for &w in g.neighbors(u) {
            if rgs[u] == rgs[w] {
                return false;
            }
        }
    }
    (0..n).all(|v| {
        (0..k).any(|c| (0..n).all(|u| rgs[u] != c || g.has_edge(v, u)))
    })
}

/// Minimum class count over all partitions of `V(G)` that are TD-colorings.
pub fn tdc_brute_force(g: &Graph) -> Result<usize> {
    tdc_brute_force_capped(g, MAX_BRUTE_FORCE_N)
}

/// [`tdc_brute_force`] with a caller-chosen order cap. The partition count
/// grows as the Bell numbers (4 213 597 at n = 12), so caps above 12 are
/// impractical.
pub fn tdc_brute_force_capped(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.order();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "vertex count for brute-force oracle",
            got: n,
            cap,
        });
    }
    if n == 0 || (0..n).any(|v| g.degree(v) == 0) {
        return Err(Error::Undefined("isolated vertex or empty graph".into()));
    }

    let mut rgs = vec![0usize; n];
    let mut best = usize::MAX;
    loop {
        let k = rgs.iter().max().unwrap() + 1;
        if k < best && is_td(g, &rgs, k) {
            best = k;
        }
        if !next_rgs(&mut rgs) {
            return Ok(best);
        }
    }
}

/// Advances a restricted-growth string (`a[0] = 0`,
/// `a[i] <= 1 + max(a[..i])`) to its lexicographic successor.
fn next_rgs(rgs: &mut [usize]) -> bool {
    for i in (1..rgs.len()).rev() {
        let prefix_max = *rgs[..i].iter().max().unwrap();
        if rgs[i] <= prefix_max {
            rgs[i] += 1;
            rgs[i + 1..].iter_mut().for_each(|s| *s = 0);
            return true;
        }
    }
    false
}
