//! Plain-text edge lists: a `# vertices=<V> edges=<E>` line, then one
//! `b1 b2 label index` line per edge.

use std::fmt::Write;

use anyhow::{bail, Context};
use prodap_core::graph::ContainmentGraph;

pub fn write_edge_list(g: &ContainmentGraph<u128>) -> String {
    let mut out = format!("# vertices={} edges={}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "{} {} {} {}", e.b1, e.b2, e.label, e.index).expect("string write");
    }
    out
}

/// One parsed edge line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeLine {
    pub b1: u128,
    pub b2: u128,
    pub label: u128,
    pub index: usize,
}

/// Returns `(vertices, edges)` from the header and the edge lines.
pub fn read_edge_list(text: &str) -> anyhow::Result<(usize, Vec<EdgeLine>)> {
    let mut lines = text.lines();
    let header = lines.next().context("empty edge list")?;
    let rest = header
        .strip_prefix("# vertices=")
        .context("missing '# vertices=' header")?;
    let (v, e) = rest.split_once(" edges=").context("missing edges= field")?;
    let (vertices, count): (usize, usize) = (v.parse()?, e.trim().parse()?);
    let mut edges = Vec::with_capacity(count);
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 4 {
            bail!("expected 4 fields in {line:?}");
        }
        edges.push(EdgeLine {
            b1: f[0].parse()?,
            b2: f[1].parse()?,
            label: f[2].parse()?,
            index: f[3].parse()?,
        });
    }
    if edges.len() != count {
        bail!("header announces {count} edges, found {}", edges.len());
    }
    Ok((vertices, edges))
}
