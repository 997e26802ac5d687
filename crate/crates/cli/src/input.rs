use std::fs;
use std::path::Path;

use srforest::io::{parse_edges, parse_facets};
use srforest::{Graph, SimplicialComplex};

use crate::CliError;

/// A parsed input file. Graphs are analysed through their independence complex.
pub enum Input {
    Complex(SimplicialComplex),
    Graph(Graph, SimplicialComplex),
}

impl Input {
    pub fn complex(&self) -> &SimplicialComplex {
        match self {
            Input::Complex(c) | Input::Graph(_, c) => c,
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match self {
            Input::Graph(g, _) => Some(g),
            Input::Complex(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Kind {
    #[default]
    ByExtension,
    Graph,
    Complex,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load(path: &Path, kind: Kind) -> Result<Input, CliError> {
    let as_graph = match kind {
        Kind::Graph => true,
        Kind::Complex => false,
        Kind::ByExtension => path.extension().is_some_and(|e| e == "edges"),
    };
    let text = read(path)?;
    if as_graph {
        let g = parse_edges(&text)?;
        let ind = g.independence_complex()?.with_labels(g.labels().to_vec());
        Ok(Input::Graph(g, ind))
    } else {
        Ok(Input::Complex(parse_facets(&text)?))
    }
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    Ok(parse_edges(&read(path)?)?)
}

pub fn load_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    Ok(parse_facets(&read(path)?)?)
}
