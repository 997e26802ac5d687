use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no facets given")]
    EmptyInput,
    #[error("vertex {0} appears in no facet")]
    UnusedVertex(usize),
    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("size limit of {limit} exceeded while {what}")]
    SizeLimit { what: &'static str, limit: usize },
    #[error("dimension {requested} outside -1..={max}")]
    DimensionOutOfRange { requested: isize, max: isize },
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),
    #[error("{0:?} is not a facet of the complex")]
    NotAFacet(Vec<usize>),
    #[error("operation undefined on the full simplex")]
    FullSimplex,
    #[error("edge {0}-{1} lies inside one part of the bipartition")]
    NotBipartitePartition(usize, usize),
    #[error("parts do not partition the vertex set")]
    InvalidPartition,
    #[error("{what}: n = {n} exceeds limit {limit}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("{what} requires n >= {min}, got {n}")]
    TooSmall { what: &'static str, n: usize, min: usize },
    #[error("{r} facets exceeds the limit of {limit} for exhaustive search")]
    TooManyFacets { r: usize, limit: usize },
    #[error("oracle disagreement: {0}")]
    OracleDisagreement(String),
    #[error("complex is not a quasi-forest")]
    NotQuasiForest,
    #[error("graph is not a Ferrers graph for the given parts")]
    NotFerrers,
    #[error("parts have sizes {0} and {1}; a balanced bipartition is required")]
    UnbalancedParts(usize, usize),
    #[error("the Stanley-Reisner ideal is zero")]
    ZeroIdeal,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
