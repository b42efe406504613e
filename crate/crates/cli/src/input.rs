use std::io::Read;

use tdc_core::families::Family;
use tdc_core::graph6::{parse_edge_list, parse_graph6};
use tdc_core::{Coloring, Error, Graph, Result};

/// Reads a graph from one of
/// * `-` (stdin), `file:PATH`: graph6 or an edge list, detected by content,
/// * `g6:STRING`: graph6,
/// * a family spec such as `cycle:9` or `complete_bipartite:3:3`,
/// * a bare graph6 string.
pub fn read_graph(arg: &str) -> Result<Graph> {
    if arg == "-" {
        return parse_graph_text(&read_stdin()?);
    }
    if let Some(path) = arg.strip_prefix("file:") {
        return parse_graph_text(&read_file(path)?);
    }
    if let Some(g6) = arg.strip_prefix("g6:") {
        return parse_graph6(g6);
    }
    if arg.contains(':') {
        if let Ok(f) = arg.parse::<Family>() {
            return f.build();
        }
    }
    parse_graph6(arg).map_err(|e| Error::Parse(format!("{arg:?} is not a family spec or graph6 string ({e})")))
}

fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if first.contains(char::is_whitespace) || text.trim().lines().count() > 1 {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

pub fn read_stdin() -> Result<String> {
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
    Ok(s)
}

pub fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))
}

/// A coloring given inline as `0,1,0,1`, or a file (`-` for stdin) in the
/// `k` / `v c` text format.
pub fn read_coloring(arg: &str) -> Result<Coloring> {
    if arg.contains(',') || arg.chars().all(|c| c.is_ascii_digit()) {
        let colors = parse_list(arg)?;
        return Coloring::new(colors);
    }
    let text = if arg == "-" { read_stdin()? } else { read_file(arg)? };
    Coloring::parse_text(&text)
}

pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex list {s:?}")))
        })
        .collect()
}
