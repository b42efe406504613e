//! Standard graph families with fixed labelings.
//!
//! * `path(n)`, `cycle(n)`: consecutive vertices are adjacent.
//! * `star(n)` is `K_{1,n}` with center 0.
//! * `complete_bipartite(a, b)`: sides `0..a` and `a..a+b`.
//! * `friendship(n)`: center 0, triangle `i` is `{0, 2i+1, 2i+2}`.
//! * `book(n)`: vertices 0 and 1 form the shared spine; page `i` adds
//!   `2i+2` (adjacent to 0) and `2i+3` (adjacent to 1). This is exactly the
//!   labeling `cartesian_product(star(n), path(2))` produces.
//! * `complete_minus_edge(n)`: `K_n` without the edge `(0, 1)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn require(family: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        Err(Error::FamilyTooSmall { family, min, got })
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    require("path", 1, n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    require("cycle", 3, n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    require("complete", 1, n)?;
    Ok(Graph::empty(n).complement())
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    require("complete_bipartite", 1, a)?;
    require("complete_bipartite", 1, b)?;
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::from_edges(a + b, &edges)
}

pub fn star(n: usize) -> Result<Graph> {
    require("star", 1, n)?;
    complete_bipartite(1, n)
}

pub fn friendship(n: usize) -> Result<Graph> {
    require("friendship", 1, n)?;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    Graph::from_edges(2 * n + 1, &edges)
}

pub fn book(n: usize) -> Result<Graph> {
    require("book", 1, n)?;
    let mut edges = vec![(0, 1)];
    for i in 0..n {
        let (a, b) = (2 * i + 2, 2 * i + 3);
        edges.extend([(0, a), (1, b), (a, b)]);
    }
    Graph::from_edges(2 * n + 2, &edges)
}

pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    require("complete_minus_edge", 2, n)?;
    complete(n)?.delete_edges(&[(0, 1)])
}

/// A named family instance, written `name:arg(:arg)` (for example `cycle:9`
/// or `complete_bipartite:3:3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Friendship(usize),
    Book(usize),
    CompleteMinusEdge(usize),
    Empty(usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
            Family::Star(n) => star(n),
            Family::Friendship(n) => friendship(n),
            Family::Book(n) => book(n),
            Family::CompleteMinusEdge(n) => complete_minus_edge(n),
            Family::Empty(n) => Ok(Graph::empty(n)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a}:{b}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Friendship(n) => write!(f, "friendship:{n}"),
            Family::Book(n) => write!(f, "book:{n}"),
            Family::CompleteMinusEdge(n) => write!(f, "complete_minus_edge:{n}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(':');
        let name = parts.next().unwrap_or_default();
        let args = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad family argument {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let one = |args: &[usize]| match args {
            [n] => Ok(*n),
            _ => Err(Error::Parse(format!("{name} takes exactly one argument"))),
        };
        Ok(match name {
            "path" => Family::Path(one(&args)?),
            "cycle" => Family::Cycle(one(&args)?),
            "complete" => Family::Complete(one(&args)?),
            "star" => Family::Star(one(&args)?),
            "friendship" => Family::Friendship(one(&args)?),
            "book" => Family::Book(one(&args)?),
            "complete_minus_edge" => Family::CompleteMinusEdge(one(&args)?),
            "empty" => Family::Empty(one(&args)?),
            "complete_bipartite" => match args[..] {
                [a, b] => Family::CompleteBipartite(a, b),
                _ => {
                    return Err(Error::Parse(
                        "complete_bipartite takes two arguments".into(),
                    ))
                }
            },
            _ => return Err(Error::Parse(format!("unknown graph family {name:?}"))),
        })
    }
}
