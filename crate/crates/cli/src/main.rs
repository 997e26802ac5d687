mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use srforest::complex::DEFAULT_FACE_LIMIT;
use srforest::cyclelib::{cycle_survey, DEFAULT_HOMOLOGY_LIMIT};
use srforest::io::{write_edges, write_facets};
use srforest::properties;
use srforest::{Engine, Error, Field, Graph};

use input::Kind;

#[derive(Parser)]
#[command(name = "srforest", version, about = "Quasi-forests, Betti tables and Cohen-Macaulay tests for Stanley-Reisner rings")]
struct Cli {
    /// Coefficient field: `q` for the rationals or `fp:<p>` for a prime field.
    #[arg(long, global = true, env = "SRFOREST_FIELD", default_value = "q")]
    field: String,
    /// Maximum number of faces any single enumeration may produce.
    #[arg(long, global = true, env = "SRFOREST_SIZE_LIMIT", default_value_t = DEFAULT_FACE_LIMIT)]
    size_limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Args)]
struct InputArgs {
    /// A `.facets` or `.edges` file.
    path: PathBuf,
    /// Read the file as an edge list and analyse its independence complex.
    #[arg(long, conflicts_with = "as_complex")]
    as_graph: bool,
    /// Read the file as a facet list regardless of its extension.
    #[arg(long)]
    as_complex: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

impl InputArgs {
    fn kind(&self) -> Kind {
        match (self.as_graph, self.as_complex) {
            (true, _) => Kind::Graph,
            (_, true) => Kind::Complex,
            _ => Kind::ByExtension,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full report: face numbers, Betti table, quasi-forest verdict, CM tests.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Quasi-forest verdict with a leaf order or a simplicial cycle/point.
    QuasiForest {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Depth, dimension and the Cohen-Macaulay and almost Cohen-Macaulay tests.
    Cm {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Depth and dimension of R/I(C_n) by closed form and by computation.
    CycleSurvey {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_HOMOLOGY_LIMIT)]
        homology_limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Conversions between graphs and complexes.
    Graph {
        #[command(subcommand)]
        op: GraphOp,
    },
    /// Run the property suites on seeded random corpora.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random complexes and graphs per suite.
        #[arg(long, default_value_t = 500)]
        random: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GraphOp {
    /// Facets of the independence complex of an edge list.
    Ind { path: PathBuf },
    /// Facets of the clique complex of an edge list.
    Clique { path: PathBuf },
    /// Complement of an edge list.
    Complement { path: PathBuf },
    /// Edges of the 1-skeleton of a facet list.
    Skeleton { path: PathBuf },
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Input(String),
    Disagreement(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Disagreement(_) => 4,
            CliError::Core(e) => match e {
                Error::Parse { .. }
                | Error::EmptyInput
                | Error::UnusedVertex(_)
                | Error::IndexOutOfRange { .. }
                | Error::SelfLoop(_)
                | Error::InvalidField(_) => 2,
                Error::SizeLimit { .. }
                | Error::TooLarge { .. }
                | Error::TooManyVertices { .. }
                | Error::TooManyFacets { .. } => 3,
                Error::OracleDisagreement(_) => 4,
                _ => 1,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(m) | CliError::Disagreement(m) => f.write_str(m),
        }
    }
}

fn emit(value: &Value, format: Format, text: impl FnOnce(&Value) -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize")),
        Format::Text => print!("{}", text(value)),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let field = Field::parse(&cli.field)?;
    let engine = Engine::new(field).with_face_limit(cli.size_limit);
    match cli.command {
        Command::Analyze { input, timings } => {
            let data = input::load(&input.path, input.kind())?;
            let r = report::analyze(&data, &engine, timings)?;
            emit(&r, input.format, report::analyze_text);
        }
        Command::QuasiForest { input } => {
            let data = input::load(&input.path, input.kind())?;
            let r = report::quasi_forest(&data)?;
            emit(&r, input.format, report::quasi_forest_text);
        }
        Command::Cm { input } => {
            let data = input::load(&input.path, input.kind())?;
            let r = report::cm(&data, &engine)?;
            emit(&r, input.format, report::cm_text);
        }
        Command::CycleSurvey { max_n, homology_limit, format } => {
            let rows = cycle_survey(max_n, &engine, homology_limit)?;
            let r = report::survey(&rows, &field.name());
            emit(&r, format, report::survey_text);
            if let Some(bad) = rows.iter().find(|r| !r.agrees()) {
                return Err(CliError::Disagreement(format!("formula and computation differ at n = {}", bad.n)));
            }
        }
        Command::Graph { op } => match op {
            GraphOp::Ind { path } => {
                let g = input::load_graph(&path)?;
                print!("{}", write_facets(&g.independence_complex()?.with_labels(g.labels().to_vec())));
            }
            GraphOp::Clique { path } => {
                let g = input::load_graph(&path)?;
                print!("{}", write_facets(&g.clique_complex()?.with_labels(g.labels().to_vec())));
            }
            GraphOp::Complement { path } => {
                let g = input::load_graph(&path)?;
                print!("{}", write_edges(&g.complement().with_labels(g.labels().to_vec())));
            }
            GraphOp::Skeleton { path } => {
                let c = input::load_complex(&path)?;
                print!("{}", write_edges(&Graph::one_skeleton(&c).with_labels(c.labels().to_vec())));
            }
        },
        Command::Selftest { seed, random, format } => {
            let complexes = properties::complex_corpus(seed, random);
            let forests = srforest::corpus::random_quasi_forests(seed, random.max(1) * 3 / 5, 4, 9);
            let ferrers = properties::ferrers_corpus(seed, random.max(1) / 5);
            let graphs = properties::graph_corpus(seed, random);
            let suites = vec![
                properties::characterization_suite(&complexes),
                properties::homological_suite(&complexes, &engine),
                properties::quasi_forest_suite(&forests, &engine),
                properties::ferrers_suite(&ferrers, &engine),
                properties::corollary_suite(&graphs),
            ];
            let r = report::selftest(seed, &suites);
            emit(&r, format, report::selftest_text);
            if let Some(bad) = suites.iter().find(|s| !s.passed()) {
                return Err(CliError::Disagreement(format!("suite '{}' has violations", bad.name)));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("srforest: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
