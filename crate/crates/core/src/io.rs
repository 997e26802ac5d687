//! Plain-text formats.
//!
//! `.facets`: one facet per line as whitespace-separated labels. `.edges`: one edge `u v`
//! per line. In both, `#` starts a comment and an optional first line `vertices: a b c`
//! fixes the labels and their order. Without a header, labels are numbered in order of
//! first appearance.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::MAX_VERTICES;
use crate::graph::Graph;

struct Labels {
    names: Vec<String>,
    index: HashMap<String, usize>,
    fixed: bool,
}

impl Labels {
    fn resolve(&mut self, name: &str, line: usize) -> Result<usize> {
        if let Some(&i) = self.index.get(name) {
            return Ok(i);
        }
        if self.fixed {
            return Err(Error::Parse { line, message: format!("label {name:?} not declared in header") });
        }
        if self.names.len() == MAX_VERTICES {
            return Err(Error::TooManyVertices { n: MAX_VERTICES + 1, max: MAX_VERTICES });
        }
        self.index.insert(name.to_string(), self.names.len());
        self.names.push(name.to_string());
        Ok(self.names.len() - 1)
    }
}

/// Splits the input into `(line number, tokens)` records and reads the optional header.
fn records(text: &str) -> Result<(Labels, Vec<(usize, Vec<&str>)>)> {
    let mut labels = Labels { names: Vec::new(), index: HashMap::new(), fixed: false };
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vertices:") {
            if labels.fixed || !out.is_empty() {
                return Err(Error::Parse { line, message: "header must precede all records".into() });
            }
            for name in rest.split_whitespace() {
                if labels.index.contains_key(name) {
                    return Err(Error::Parse { line, message: format!("label {name:?} declared twice") });
                }
                labels.resolve(name, line)?;
            }
            labels.fixed = true;
            continue;
        }
        out.push((line, content.split_whitespace().collect()));
    }
    Ok((labels, out))
}

pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let (mut labels, recs) = records(text)?;
    let mut facets = Vec::with_capacity(recs.len());
    for (line, tokens) in recs {
        let facet = tokens.iter().map(|t| labels.resolve(t, line)).collect::<Result<Vec<_>>>()?;
        facets.push(facet);
    }
    let n = labels.names.len();
    Ok(SimplicialComplex::from_facets(facets, n)?.with_labels(labels.names))
}

pub fn parse_edges(text: &str) -> Result<Graph> {
    let (mut labels, recs) = records(text)?;
    let mut edges = Vec::with_capacity(recs.len());
    for (line, tokens) in recs {
        let [u, v] = tokens[..] else {
            return Err(Error::Parse { line, message: format!("expected two labels, found {}", tokens.len()) });
        };
        let (u, v) = (labels.resolve(u, line)?, labels.resolve(v, line)?);
        if u == v {
            return Err(Error::Parse { line, message: format!("self-loop at {:?}", labels.names[u]) });
        }
        edges.push((u, v));
    }
    let n = labels.names.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    Ok(Graph::from_edges(n, edges)?.with_labels(labels.names))
}

fn header(labels: &[String]) -> String {
    let mut s = String::from("vertices:");
    for l in labels {
        s.push(' ');
        s.push_str(l);
    }
    s.push('\n');
    s
}

/// Canonical text: header, then facets in canonical order.
pub fn write_facets(complex: &SimplicialComplex) -> String {
    let mut s = header(complex.labels());
    for f in complex.facets() {
        let names: Vec<&str> = f.iter().map(|v| complex.label(v)).collect();
        writeln!(s, "{}", names.join(" ")).unwrap();
    }
    s
}

pub fn write_edges(graph: &Graph) -> String {
    let mut s = header(graph.labels());
    for (u, v) in graph.edges() {
        writeln!(s, "{} {}", graph.label(u), graph.label(v)).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::Face;

    #[test]
    fn facets_in_first_appearance_order() {
        let c = parse_facets("# header-less\nb a c\n  c d # tail\n\nd a\n").unwrap();
        assert_eq!(c.labels(), ["b", "a", "c", "d"]);
        assert_eq!(c.facet_lists(), vec![vec![0, 1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn header_fixes_order() {
        let c = parse_facets("vertices: x1 x2 x3\nx3 x2\nx1\n").unwrap();
        assert_eq!(c.facet_lists(), vec![vec![0], vec![1, 2]]);
        let err = parse_facets("vertices: x1 x2\nx1 x3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert_eq!(parse_facets("vertices: x1 x2 x3\nx1 x2\n").unwrap_err(), Error::UnusedVertex(2));
        assert_eq!(parse_facets("# nothing\n").unwrap_err(), Error::EmptyInput);
        assert!(matches!(parse_facets("a\nvertices: a\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn edges_with_isolated_vertex() {
        let g = parse_edges("vertices: a b c d\na b\nb c\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(3), 0);
        assert!(matches!(parse_edges("a b c\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edges("a a\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn round_trips() {
        let c = parse_facets("x1 x2 x3\nx2 x4 x6\nx3 x4 x5\n").unwrap();
        let text = write_facets(&c);
        assert_eq!(parse_facets(&text).unwrap(), c);
        assert_eq!(write_facets(&parse_facets(&text).unwrap()), text);
        let g = Graph::cycle_graph(6).unwrap();
        let back = parse_edges(&write_edges(&g)).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert!(c.contains(Face::from_indices([1, 3])));
    }
}
