//! Colorings, properness and total-dominator checks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total map from vertices to colors `0..k` in which every color is used.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Fails if some color below the maximum is unused.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let mut used = vec![false; k];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|&u| !u) {
            return Err(Error::EmptyColorClass(c));
        }
        Ok(Coloring { colors, k })
    }

    /// Relabels arbitrary color ids to `0..k` in order of first appearance.
    pub fn normalized(colors: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let colors: Vec<usize> = colors
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        let k = map.len();
        Coloring { colors, k }
    }

    pub fn num_classes(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Color classes as sorted vertex lists, indexed by color.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    fn check_domain(&self, g: &Graph) -> Result<()> {
        if self.colors.len() == g.order() {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                expected: g.order(),
                got: self.colors.len(),
            })
        }
    }

    /// Text form: `k` on the first line, then `v c` per vertex.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.k);
        for (v, c) in self.colors.iter().enumerate() {
            out.push_str(&format!("{v} {c}\n"));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let k: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("coloring is empty".into()))?
            .parse()
            .map_err(|_| Error::Parse("first line must be the class count".into()))?;
        let mut colors: Vec<Option<usize>> = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            let (Some(Ok(v)), Some(Ok(c)), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::Parse(format!("bad coloring line {line:?}")));
            };
            if c >= k {
                return Err(Error::Parse(format!("color {c} not below declared k = {k}")));
            }
            if v >= colors.len() {
                colors.resize(v + 1, None);
            }
            if colors[v].replace(c).is_some() {
                return Err(Error::Parse(format!("vertex {v} colored twice")));
            }
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| Error::Parse(format!("vertex {v} has no color"))))
            .collect::<Result<Vec<_>>>()?;
        let coloring = Coloring::new(colors)?;
        if coloring.k != k {
            return Err(Error::Parse(format!(
                "declared {k} classes but {} are used",
                coloring.k
            )));
        }
        Ok(coloring)
    }
}

impl TryFrom<Vec<usize>> for Coloring {
    type Error = Error;

    fn try_from(colors: Vec<usize>) -> Result<Self> {
        Coloring::new(colors)
    }
}

impl From<Coloring> for Vec<usize> {
    fn from(c: Coloring) -> Self {
        c.colors
    }
}

pub fn is_proper(g: &Graph, f: &Coloring) -> Result<bool> {
    f.check_domain(g)?;
    Ok(g.edges().all(|(u, v)| f.color(u) != f.color(v)))
}

/// Smallest color whose whole class lies in `N(v)`, if any.
pub fn dominated_class_of(g: &Graph, f: &Coloring, v: usize) -> Result<Option<usize>> {
    f.check_domain(g)?;
    g.check_vertex(v)?;
    let mut outside = vec![false; f.num_classes()];
    for u in 0..g.order() {
        if !g.has_edge(v, u) {
            outside[f.color(u)] = true;
        }
    }
    Ok(outside.iter().position(|&o| !o))
}

/// For each vertex, the class it totally dominates (see
/// [`dominated_class_of`]).
pub fn td_witness_table(g: &Graph, f: &Coloring) -> Result<Vec<Option<usize>>> {
    (0..g.order()).map(|v| dominated_class_of(g, f, v)).collect()
}

/// Proper, and every vertex is adjacent to all of some color class.
/// Graphs with an isolated vertex (or no vertices) have no such coloring and
/// yield [`Error::Undefined`].
pub fn is_td_coloring(g: &Graph, f: &Coloring) -> Result<bool> {
    ensure_tdc_defined(g)?;
    if !is_proper(g, f)? {
        return Ok(false);
    }
    for v in 0..g.order() {
        if dominated_class_of(g, f, v)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// TD-colorings exist iff the graph is nonempty without isolated vertices.
pub fn ensure_tdc_defined(g: &Graph) -> Result<()> {
    if g.is_empty() {
        Err(Error::undefined_empty())
    } else if g.has_isolated_vertex() {
        Err(Error::undefined_isolated())
    } else {
        Ok(())
    }
}
