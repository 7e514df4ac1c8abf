//! Text, JSON, and DOT serializations of graphs.
//!
//! The text format is bit-exact and round-trips: `n=<INT>` then optional
//! `;e=<i>><j>,...` (1-based, `i>j` meaning a flow edge from the upper
//! vertex `i` down to `j`) then optional `;d=<sym>,...` giving vertex
//! decorations in index order. Formatting always emits the sorted edge
//! list, so `format(parse(s))` is the canonical spelling of `s`.

use super::{DirectedGraph, GraphError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        msg: msg.into(),
    })
}

/// Formats a graph, optionally with decorations.
pub fn format_graph(g: &DirectedGraph, deco: Option<&[String]>) -> String {
    let mut s = format!("n={}", g.n());
    let edges = g.edges();
    if !edges.is_empty() {
        s.push_str(";e=");
        let parts: Vec<String> = edges.iter().map(|(a, b)| format!("{a}>{b}")).collect();
        s.push_str(&parts.join(","));
    }
    if let Some(d) = deco {
        s.push_str(";d=");
        s.push_str(&d.join(","));
    }
    s
}

/// Parses the text format. Decorations are returned verbatim when present.
pub fn parse_graph(input: &str) -> Result<(DirectedGraph, Option<Vec<String>>), ParseError> {
    let s = input.trim();
    let base = input.len() - input.trim_start().len();
    let mut sections = s.split(';');
    let head = sections.next().unwrap_or("");
    let Some(nstr) = head.strip_prefix("n=") else {
        return err(base, "expected 'n=<INT>'");
    };
    let n: usize = match nstr.trim().parse() {
        Ok(n) => n,
        Err(_) => return err(base + 2, format!("invalid vertex count '{nstr}'")),
    };
    let mut pos = base + head.len() + 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut deco: Option<Vec<String>> = None;
    for section in sections {
        if let Some(espec) = section.strip_prefix("e=") {
            let mut epos = pos + 2;
            for part in espec.split(',') {
                let Some((a, b)) = part.split_once('>') else {
                    return err(epos, format!("expected '<i>><j>', got '{part}'"));
                };
                let src: usize = match a.trim().parse() {
                    Ok(v) => v,
                    Err(_) => return err(epos, format!("invalid vertex index '{a}'")),
                };
                let dst: usize = match b.trim().parse() {
                    Ok(v) => v,
                    Err(_) => {
                        return err(epos + a.len() + 1, format!("invalid vertex index '{b}'"))
                    }
                };
                edges.push((src, dst));
                epos += part.len() + 1;
            }
        } else if let Some(dspec) = section.strip_prefix("d=") {
            deco = Some(dspec.split(',').map(|p| p.trim().to_string()).collect());
        } else {
            return err(pos, format!("unknown section '{section}'"));
        }
        pos += section.len() + 1;
    }
    let graph = DirectedGraph::new(n, &edges).map_err(|e| match e {
        GraphError::BadVertexIndex(v, n) => ParseError {
            pos: base,
            msg: format!("vertex index {v} outside 1..={n}"),
        },
        other => ParseError {
            pos: base,
            msg: other.to_string(),
        },
    })?;
    if let Some(d) = &deco {
        if d.len() != n {
            return err(base, format!("{} decorations for {} vertices", d.len(), n));
        }
    }
    Ok((graph, deco))
}

/// JSON shape shared with the series formats.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decoration: Option<Vec<String>>,
}

pub fn to_json(g: &DirectedGraph, deco: Option<&[String]>) -> GraphJson {
    GraphJson {
        n: g.n(),
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        decoration: deco.map(|d| d.to_vec()),
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<DirectedGraph, GraphError> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        DirectedGraph::new(self.n, &edges)
    }
}

/// DOT export. Rank constraints reflect the longest-path leveling when the
/// graph is acyclic; vertices are labeled by decoration when given.
pub fn to_dot(g: &DirectedGraph, deco: Option<&[String]>) -> String {
    let mut out = String::from("digraph g {\n  rankdir=TB;\n");
    for v in 1..=g.n() {
        let label = deco
            .map(|d| d[v - 1].clone())
            .unwrap_or_else(|| v.to_string());
        out.push_str(&format!("  v{v} [label=\"{label}\", shape=box];\n"));
    }
    if let Some(levels) = g.flow_levels() {
        let kmax = levels.iter().copied().max().unwrap_or(1);
        // Top level first, as drawn.
        for l in (1..=kmax).rev() {
            let members: Vec<String> = (1..=g.n())
                .filter(|&v| levels[v - 1] == l)
                .map(|v| format!("v{v};"))
                .collect();
            if !members.is_empty() {
                out.push_str(&format!("  {{ rank=same; {} }}\n", members.join(" ")));
            }
        }
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  v{a} -> v{b};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Flavor;

    #[test]
    fn parse_named_examples() {
        let (g, d) = parse_graph("n=2;e=1>2").unwrap();
        assert_eq!(g, DirectedGraph::new(2, &[(1, 2)]).unwrap());
        assert!(d.is_none());

        // Parses fine, fails acyclicity on validation.
        let (g, _) = parse_graph("n=2;e=1>2,2>1").unwrap();
        assert!(!g.is_valid(Flavor::ConnectedSimple));

        let (g, d) = parse_graph("n=2;e=1>2;d=x,y").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(d.unwrap(), vec!["x", "y"]);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_graph("m=2").unwrap_err();
        assert_eq!(e.pos, 0);
        let e = parse_graph("n=2;e=1-2").unwrap_err();
        assert!(e.msg.contains("1-2"));
        let e = parse_graph("n=2;e=1>5").unwrap_err();
        assert!(e.msg.contains('5'), "{e}");
        let e = parse_graph("n=2;d=x").unwrap_err();
        assert!(e.msg.contains("decorations"));
    }

    #[test]
    fn format_parse_is_normalizing() {
        // Edge order in the input is immaterial; formatting sorts it.
        let (g, _) = parse_graph("n=3;e=2>3,1>2").unwrap();
        assert_eq!(format_graph(&g, None), "n=3;e=1>2,2>3");
        let again = parse_graph(&format_graph(&g, None)).unwrap().0;
        assert_eq!(g, again);
    }

    #[test]
    fn dot_groups_levels() {
        let g = DirectedGraph::chain(2).unwrap();
        let dot = to_dot(&g, None);
        assert!(dot.contains("v1 -> v2"));
        assert!(dot.contains("rank=same"));
    }

    #[test]
    fn json_roundtrip() {
        let g = DirectedGraph::new(3, &[(1, 2), (1, 3)]).unwrap();
        let j = to_json(&g, None);
        let s = serde_json::to_string(&j).unwrap();
        let back: GraphJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_graph().unwrap(), g);
    }
}
