//! `edgeset`: build edge-set graphs from graph families or edge-list files,
//! report degrees and CED sets, and run the claim suite.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgeset_core::claims::{self, ClaimParams, Profile};
use edgeset_core::domination::{ced_report, MAX_CED_SEARCH_EDGES};
use edgeset_core::edge_degree::edge_degree_report;
use edgeset_core::esg::{
    build_edge_set_graph, compare_degree_sums, degree_profile, BuildMode, MAX_GRAPH_EXPORT_EDGES,
    MAX_PROFILE_EDGES,
};
use edgeset_core::graph::{Family, Graph};
use edgeset_core::subset::MAX_MASK_EDGES;

mod render;

use render::Host;

#[derive(Parser)]
#[command(name = "edgeset", version, about = "Edge-set graphs of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the edge-set graph and export it as DOT, JSON or a vertex table.
    Build(InputArgs),
    /// Degree of every vertex of the edge-set graph, with δ, Δ and 𝔐.
    Profile(InputArgs),
    /// CED-number, CED-index and the smallest CED sets.
    Ced(InputArgs),
    /// Run the claim suite.
    Verify(VerifyArgs),
    /// Edge-degrees of the host graph.
    EdgeDegrees(InputArgs),
    /// Degree sum of the edge-set graph against the set-graph on ε elements.
    SetgraphCompare(InputArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Args)]
struct InputArgs {
    /// Family spec (`path:N`, `cycle:N`, `star:M`, `complete:N`) or an
    /// edge-list file.
    input: String,
    /// Output format; `dot` is only available for `build`.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the output to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Refuse hosts with more edges; may only tighten the built-in limit.
    #[arg(long, value_name = "N")]
    max_epsilon: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "quick")]
    profile: ProfileArg,
    /// Run a single claim.
    #[arg(long, value_name = "ID")]
    claim: Option<String>,
    /// Instance order for claims over one family member.
    #[arg(long, requires = "claim")]
    n: Option<usize>,
    /// Seed for the random sweep of the full profile.
    #[arg(long, default_value_t = claims::DEFAULT_SEED)]
    seed: u64,
    /// Standard output format: `table` or `json`.
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Also write the JSON verdict report to FILE.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

enum Failure {
    Input(String),
    Guard(String),
    ClaimFailed,
}

impl From<edgeset_core::Error> for Failure {
    fn from(e: edgeset_core::Error) -> Self {
        if e.is_resource_limit() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(args) => build(&args),
        Command::Profile(args) => profile(&args),
        Command::Ced(args) => ced(&args),
        Command::Verify(args) => verify(&args),
        Command::EdgeDegrees(args) => edge_degrees(&args),
        Command::SetgraphCompare(args) => setgraph_compare(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ClaimFailed) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_host(input: &str) -> Outcome<Graph> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {input}: {e}")))?;
        return Ok(Graph::from_edge_list(&text)?);
    }
    let family: Family = input.parse().map_err(|e: edgeset_core::Error| {
        Failure::Input(format!("'{input}' is neither a file nor a family spec: {e}"))
    })?;
    Ok(family.build()?)
}

/// Loads the host and applies the `--max-epsilon` override on top of
/// `hard_limit`.
fn load(args: &InputArgs, hard_limit: usize) -> Outcome<(Host, Graph)> {
    let limit = match args.max_epsilon {
        Some(m) if m > hard_limit => {
            return Err(Failure::Input(format!(
                "--max-epsilon {m} exceeds the built-in limit of {hard_limit}"
            )))
        }
        Some(m) => m,
        None => hard_limit,
    };
    let g = read_host(&args.input)?;
    if g.size() > limit {
        return Err(Failure::Guard(format!(
            "host has {} edges, more than the limit of {limit}",
            g.size()
        )));
    }
    Ok((Host::new(&args.input, &g), g))
}

fn format_of(args: &InputArgs, allow_dot: bool) -> Outcome<Format> {
    match args.format.unwrap_or(Format::Json) {
        Format::Dot if !allow_dot => Err(Failure::Input("--format dot is only available for build".into())),
        f => Ok(f),
    }
}

fn emit(output: Option<&Path>, text: &str) -> Outcome {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build(args: &InputArgs) -> Outcome {
    let format = format_of(args, true)?;
    let (host, g) = load(args, MAX_GRAPH_EXPORT_EDGES)?;
    let gamma = build_edge_set_graph(&g, BuildMode::Explicit)?;
    let text = match format {
        Format::Dot => gamma.to_dot(&format!("edge-set graph of {}", args.input))?,
        Format::Json => render::build_json(host, &gamma)?,
        Format::Table => render::build_table(&host, &gamma)?,
    };
    emit(args.output.as_deref(), &text)
}

fn profile(args: &InputArgs) -> Outcome {
    let format = format_of(args, false)?;
    let (host, g) = load(args, MAX_PROFILE_EDGES)?;
    let p = degree_profile(&g)?;
    let text = match format {
        Format::Table => render::profile_table(&host, &p),
        _ => render::profile_json(host, &p),
    };
    emit(args.output.as_deref(), &text)
}

fn ced(args: &InputArgs) -> Outcome {
    let format = format_of(args, false)?;
    let (host, g) = load(args, MAX_CED_SEARCH_EDGES)?;
    let report = ced_report(&g)?;
    let text = match format {
        Format::Table => render::ced_table(&host, &report),
        _ => render::ced_json(host, &report),
    };
    emit(args.output.as_deref(), &text)
}

fn edge_degrees(args: &InputArgs) -> Outcome {
    let format = format_of(args, false)?;
    let (host, g) = load(args, MAX_MASK_EDGES)?;
    let report = edge_degree_report(&g);
    let text = match format {
        Format::Table => render::edge_degree_table(&host, &report),
        _ => render::edge_degree_json(host, &report),
    };
    emit(args.output.as_deref(), &text)
}

fn setgraph_compare(args: &InputArgs) -> Outcome {
    let format = format_of(args, false)?;
    let (host, g) = load(args, MAX_PROFILE_EDGES)?;
    let comparison = compare_degree_sums(&g)?;
    let text = match format {
        Format::Table => render::compare_table(&host, &comparison),
        _ => render::compare_json(host, &comparison),
    };
    emit(args.output.as_deref(), &text)
}

fn verify(args: &VerifyArgs) -> Outcome {
    if args.format == Format::Dot {
        return Err(Failure::Input("verify supports --format table or json".into()));
    }
    let profile = match args.profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };
    let params = ClaimParams {
        profile,
        n: args.n,
        seed: args.seed,
    };
    let verdicts = match &args.claim {
        Some(id) => vec![claims::run_claim(id, &params)?],
        None => claims::run_all(&params)?,
    };
    let json = render::verdicts_json(&verdicts);
    match args.format {
        Format::Json => print!("{json}"),
        _ => print!("{}", render::verdicts_table(&verdicts)),
    }
    if let Some(path) = &args.output {
        emit(Some(path), &json)?;
    }
    if verdicts.iter().any(|v| v.is_unexpected_failure()) {
        return Err(Failure::ClaimFailed);
    }
    Ok(())
}
