//! `coprime`: analyze coprime subgroup graphs, export them, embed graphs and
//! run the verification catalog.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse or I/O error,
//! 3 coprime graph undefined (trivial or prime order), 4 size cap exceeded.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use coprime_core::analysis::{analyze, planarity, AnalysisOptions, DEFAULT_EXACT_CAP};
use coprime_core::embed::{embed_with_cap, parse_edge_list, DEFAULT_MIS_CAP};
use coprime_core::suite::{self, parse_catalog, SuiteOptions, DEFAULT_CATALOG, SUITE_EXACT_CAP};
use coprime_core::{export, CoprimeGraph, Error, GroupSpec};

/// Default order bound for `analyze` and `export`.
const DEFAULT_GROUP_ORDER_CAP: u64 = 1000;

#[derive(Parser)]
#[command(name = "coprime", version, about = "Coprime graphs of subgroups of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant of P(G) for a group spec such as `Z:30`, `A4` or `SD:7,3,2`.
    Analyze {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "COPRIME_MAX_ORDER", default_value_t = DEFAULT_GROUP_ORDER_CAP)]
        max_order: u64,
        #[arg(long, env = "COPRIME_EXACT_CAP", default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
    },
    /// Check a catalog (the built-in one by default) and report every row.
    Verify {
        /// JSON Lines catalog file.
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, env = "COPRIME_MAX_ORDER", default_value_t = suite::DEFAULT_MAX_ORDER)]
        max_order: u64,
        #[arg(long, env = "COPRIME_EXACT_CAP", default_value_t = SUITE_EXACT_CAP)]
        exact_cap: usize,
    },
    /// Label the vertices of an edge-list graph by divisors of some m so that
    /// adjacency is coprimality. Reads stdin when the input is `-`.
    Embed {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MIS_CAP)]
        mis_cap: usize,
    },
    /// Print the built-in catalog.
    Catalog {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write P(G) as DOT (with a rotation system comment when planar) or JSON.
    Export {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "COPRIME_MAX_ORDER", default_value_t = DEFAULT_GROUP_ORDER_CAP)]
        max_order: u64,
    },
}

enum Failure {
    Core(Error),
    Io(String),
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Io(_) | Failure::Usage(_) => 2,
            Failure::Core(Error::Undefined { .. }) => 3,
            Failure::Core(Error::CapExceeded { .. }) => 4,
            Failure::Core(_) => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Io(msg) | Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Verification => eprintln!("error: verification failed"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Analyze { spec, format, out, max_order, exact_cap } => {
            let p = build_graph(&spec, max_order)?;
            let report = analyze(p.graph(), AnalysisOptions { exact_cap })?;
            let text = match format {
                Format::Table => render::analysis_table(&p, &report),
                Format::Json => render::json(&render::analysis_json(&p, &report)),
                Format::Dot => return Err(Failure::Usage("analyze supports --format table or json".into())),
            };
            emit(out.as_deref(), &text)
        }
        Command::Verify { catalog, format, out, jobs, max_order, exact_cap } => {
            let text = match &catalog {
                Some(path) => read_input(path)?,
                None => DEFAULT_CATALOG.to_string(),
            };
            let entries = parse_catalog(&text)?;
            if entries.is_empty() {
                eprintln!("warning: catalog has 0 entries");
            }
            let report = suite::run_entries(&entries, SuiteOptions { max_order, exact_cap, jobs });
            let text = match format {
                Format::Json => render::json(&report.to_json()),
                Format::Table => report.to_table(),
                Format::Dot => return Err(Failure::Usage("verify supports --format json or table".into())),
            };
            emit(out.as_deref(), &text)?;
            for row in report.failures() {
                eprintln!("FAIL {} {}: expected {}, computed {}", row.group, row.check, row.expected, row.computed);
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Embed { input, out, mis_cap } => {
            let g = parse_edge_list(&read_input(&input)?)?;
            let cert = embed_with_cap(&g, mis_cap)?;
            emit(out.as_deref(), &render::json(&cert.to_json()))
        }
        Command::Catalog { format, out } => {
            let entries = suite::default_catalog()?;
            let text = match format {
                Format::Table => render::catalog_table(&entries),
                Format::Json => render::json(&render::catalog_json(&entries)),
                Format::Dot => return Err(Failure::Usage("catalog supports --format table or json".into())),
            };
            emit(out.as_deref(), &text)
        }
        Command::Export { spec, format, out, max_order } => {
            let p = build_graph(&spec, max_order)?;
            let text = match format {
                Format::Dot => export::to_dot(&p, Some(&planarity(p.graph()))),
                Format::Json => render::json(&export::to_json(&p)),
                Format::Table => return Err(Failure::Usage("export supports --format dot or json".into())),
            };
            emit(out.as_deref(), &text)
        }
    }
}

/// Cyclic specs skip the group table and use divisors directly.
fn build_graph(text: &str, max_order: u64) -> Result<CoprimeGraph, Failure> {
    let spec = GroupSpec::from_str(text)?;
    if let GroupSpec::Cyclic(n) = spec {
        if n as u64 > max_order {
            return Err(Error::CapExceeded { what: "group order", size: n, cap: max_order as usize }.into());
        }
        return Ok(CoprimeGraph::build_cyclic(n as u64)?);
    }
    let group = spec.build(usize::try_from(max_order).unwrap_or(usize::MAX))?;
    Ok(CoprimeGraph::build(&group)?)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}
