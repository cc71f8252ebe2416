use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hochschild_cli::scenario::{builtin, load_scenario, Overrides, BUILTIN_KP};
use hochschild_cli::{run_compute, run_tables, run_verify, text, CliError, CohomologyReport, Pipeline};

#[derive(Parser, Debug)]
#[command(name = "hochschild", version, about = "Exact Hochschild cohomology of smash products A#H")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Cohomology dimensions, bases and cup products up to the weight bound.
    Compute,
    /// Run every property check; exit 1 if any fails.
    Verify,
    /// Cup tables in the explicit basis, diffed against the expected tables.
    Tables,
}

#[derive(clap::Args, Debug)]
struct Opts {
    /// Scenario JSON file.
    #[arg(long, global = true, conflicts_with = "builtin")]
    scenario: Option<PathBuf>,
    /// Built-in scenario name.
    #[arg(long, global = true, value_parser = [BUILTIN_KP])]
    builtin: Option<String>,
    /// Override the scenario parameter q (a rational).
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    weight_max: Option<i64>,
    #[arg(long, global = true)]
    index_max: Option<usize>,
    /// Worker threads (0: all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

fn run(cli: &Cli) -> Result<CohomologyReport, CliError> {
    let o = &cli.opts;
    let overrides = Overrides {
        q: o.q.clone(),
        weight_max: o.weight_max,
        index_max: o.index_max,
    };
    let scenario = match (&o.scenario, &o.builtin) {
        (Some(path), _) => load_scenario(path, &overrides)?,
        (None, Some(name)) => builtin(name, &overrides)?,
        (None, None) => return Err(CliError::Parse("one of --scenario or --builtin is required".into())),
    };
    let pipeline = Pipeline::new(o.threads);
    match cli.command {
        Command::Compute => run_compute(&scenario, pipeline),
        Command::Verify => run_verify(&scenario, pipeline),
        Command::Tables => run_tables(&scenario, pipeline),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let mut body = match cli.opts.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("reports serialize"),
        Format::Text => text::render(&report),
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if report.success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
