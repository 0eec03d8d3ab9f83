use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use hopf_galois::commands::{self, ActionSource, Options};
use hopf_galois::fixtures::builtin;
use hopf_galois::io::Bundle;
use hopf_galois::maintheorem::Tamper;
use hopf_galois::report::Report;
use hopf_galois::comodule::{ComoduleAlgebra, RightModule};
use hopf_galois::{Field, Result};

/// Exact checks for Hopf-Galois extensions given by structure constants.
///
/// FILE is a JSON bundle or `builtin:NAME` (kc2, kc4, dual_kc2, h4, h4_f5,
/// m2_graded, cp_minus1, cp:<c>, trivial_kxk, dual_numbers, broken_cocycle).
#[derive(Parser)]
#[command(name = "hopf-galois", version)]
struct Cli {
    /// Work over this field instead of the one in the file (`Q`, `F3`, `F_5`, ...).
    #[arg(long, global = true)]
    field: Option<Field>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random samples tried when a search cannot be exhaustive.
    #[arg(long, global = true, default_value_t = hopf_galois::search::DEFAULT_TRIES)]
    tries: usize,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Largest family enumerated exhaustively.
    #[arg(long, global = true, default_value_t = hopf_galois::search::DEFAULT_CAP)]
    enumerate_cap: u64,
    /// Add the elapsed time to the report. Reports are then no longer reproducible byte for byte.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Action {
    Trivial,
    FromCleft,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TamperArg {
    /// Drop the antipode when transporting morphisms `2 → 1`.
    OmitAntipode,
}

#[derive(clap::Args)]
struct Input {
    file: String,
    /// Comodule algebra to use when the bundle has several.
    #[arg(long)]
    ca: Option<String>,
}

#[derive(clap::Args)]
struct ModuleInput {
    #[command(flatten)]
    input: Input,
    /// Module name in the bundle, or a bundle file holding a single module.
    #[arg(long)]
    module: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of every object in the bundle.
    Validate { file: String },
    /// Decide whether the canonical map is bijective and check the translation map.
    Galois(Input),
    /// Print the translation map and check its identities.
    TranslationMap(Input),
    /// Check the isomorphism between the convolution and relative Hopf module categories.
    CatIsoCheck {
        #[command(flatten)]
        input: ModuleInput,
        #[arg(long, value_enum)]
        tamper: Option<TamperArg>,
    },
    /// Search for a clefting map and run the cleft / crossed product / normal basis cycle.
    Cleft(Input),
    /// Build a crossed product from crossed data and check it.
    CrossedProduct {
        file: String,
        /// Crossed data to use when the bundle has several.
        #[arg(long)]
        name: Option<String>,
        /// Write the resulting bundle here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Decide whether the extension is a smash product.
    SmashCheck(Input),
    /// First cohomology.
    Cohomology {
        #[command(subcommand)]
        which: CohomologyCommand,
    },
    /// Check the correspondence between module extensions and colinear maps into E.
    Lift(ModuleInput),
    /// Classify the extensions of a module up to isomorphism.
    Classify(ModuleInput),
}

#[derive(Subcommand)]
enum CohomologyCommand {
    H1 {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Action::FromCleft)]
        action: Action,
    },
}

fn source(file: &str, field: Option<Field>) -> Result<(Bundle, String)> {
    if let Some(name) = file.strip_prefix("builtin:") {
        return Ok((builtin(name, field)?, file.to_string()));
    }
    let path = Path::new(file);
    let label = path.file_name().map_or(file.to_string(), |n| n.to_string_lossy().into_owned());
    Ok((Bundle::load(path, field)?, label))
}

fn comodule(input: &Input, field: Option<Field>) -> Result<(ComoduleAlgebra, Vec<String>)> {
    let (bundle, label) = source(&input.file, field)?;
    let (name, ca) = bundle.comodule_algebra(input.ca.as_deref())?;
    Ok((ca.clone(), vec![format!("{label}:{name}")]))
}

fn module(input: &ModuleInput, field: Option<Field>) -> Result<(ComoduleAlgebra, RightModule, Vec<String>)> {
    let (bundle, label) = source(&input.input.file, field)?;
    let module_arg = input.module.as_deref();
    let (bundle, label, module_name) = match module_arg {
        Some(m) if Path::new(m).is_file() => {
            let (b, l) = source(m, field)?;
            (b, l, None)
        }
        _ => (bundle, label, module_arg),
    };
    let (mname, named) = bundle.module(module_name)?;
    let (cname, ca) = bundle.comodule_algebra(Some(&named.comodule_algebra))?;
    Ok((ca.clone(), named.module.clone(), vec![format!("{label}:{cname}"), format!("module {mname}")]))
}

fn run(cli: &Cli, opts: &Options) -> Result<Report> {
    let f = cli.field;
    match &cli.command {
        Command::Validate { file } => {
            let (bundle, label) = source(file, f)?;
            Ok(commands::validate(&bundle, &[label], opts))
        }
        Command::Galois(i) => {
            let (ca, fx) = comodule(i, f)?;
            commands::galois(&ca, &fx, opts)
        }
        Command::TranslationMap(i) => {
            let (ca, fx) = comodule(i, f)?;
            commands::translation_map(&ca, &fx, opts)
        }
        Command::CatIsoCheck { input, tamper } => {
            let (ca, m, fx) = module(input, f)?;
            let tamper = tamper.map(|_| Tamper::OmitAntipodeInGamma12);
            commands::cat_iso_check(&ca, &m, tamper, &fx, opts)
        }
        Command::Cleft(i) => {
            let (ca, fx) = comodule(i, f)?;
            commands::cleft(&ca, &fx, opts)
        }
        Command::CrossedProduct { file, name, emit } => {
            let (bundle, label) = source(file, f)?;
            let (report, built) = commands::crossed_product(&bundle, name.as_deref(), &[label], opts)?;
            if let (Some(path), Some(b)) = (emit, built) {
                std::fs::write(path, b.to_json())?;
            }
            Ok(report)
        }
        Command::SmashCheck(i) => {
            let (ca, fx) = comodule(i, f)?;
            commands::smash(&ca, &fx, opts)
        }
        Command::Cohomology {
            which: CohomologyCommand::H1 { input, action },
        } => {
            let (ca, fx) = comodule(input, f)?;
            let source = match action {
                Action::Trivial => ActionSource::Trivial,
                Action::FromCleft => ActionSource::FromCleft,
            };
            commands::cohomology_h1(&ca, source, &fx, opts)
        }
        Command::Lift(i) => {
            let (ca, m, fx) = module(i, f)?;
            commands::lift(&ca, &m, &fx, opts)
        }
        Command::Classify(i) => {
            let (ca, m, fx) = module(i, f)?;
            commands::classify(&ca, &m, &fx, opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut opts = Options::with_seed(cli.seed);
    opts.policy.tries = cli.tries;
    opts.policy.cap = cli.enumerate_cap;
    let start = Instant::now();
    match run(&cli, &opts) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            let text = match cli.output {
                Output::Text => report.to_text(),
                Output::Json => report.to_json() + "\n",
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if cli.output == Output::Json {
                println!("{}", serde_json::json!({ "error": e.to_string(), "exit_code": e.exit_code() }));
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
