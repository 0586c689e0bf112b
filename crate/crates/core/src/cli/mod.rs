//! The `qsets` command line: build, eval, check and peano.
//!
//! Exit codes: 0 success or true, 1 false or a failed check, 2 cap exceeded,
//! 64 usage error, 65 malformed universe file, 74 I/O error.

pub mod file;
pub mod literal;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::builder::{build, BuildConfig};
use crate::error::Error;
use crate::formula::{evaluate, parse, Env};
use crate::peano::{check_peano, sequence};
use crate::set::{SetId, Universe};
use crate::verifier::{run_suite, Report, Status, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(name = "qsets", version, about = "Finite models of sets over self-membered individuals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate a universe stage by stage and save it.
    Build(BuildArgs),
    /// Evaluate a formula over a saved universe.
    Eval(EvalArgs),
    /// Run a check suite over a saved universe.
    Check(CheckArgs),
    /// Generate a number sequence and check the Peano properties.
    Peano(PeanoArgs),
}

#[derive(Debug, Args)]
struct BuildArgs {
    /// Comma-separated atom names.
    #[arg(long, value_delimiter = ',', required = true)]
    atoms: Vec<String>,
    #[arg(long, default_value_t = 0)]
    depth: usize,
    #[arg(long, default_value_t = BuildConfig::DEFAULT_MAX_SETS)]
    max_sets: usize,
    /// Where to write the universe file.
    #[arg(long, short)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct EvalArgs {
    universe: PathBuf,
    formula: String,
    /// Binding of a free variable, e.g. `s={u,v}`. Repeatable.
    #[arg(long = "bind", short)]
    bindings: Vec<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct CheckArgs {
    universe: PathBuf,
    #[arg(long, default_value = "all")]
    suite: String,
    /// Two distinct atoms, e.g. `u,v`; required by trichotomy and pair-membership.
    #[arg(long, value_delimiter = ',')]
    pair: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct PeanoArgs {
    universe: PathBuf,
    /// Two distinct atoms forming the first number, e.g. `o,a`.
    #[arg(long, value_delimiter = ',', required = true)]
    base: Vec<String>,
    #[arg(long, default_value_t = 10)]
    length: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the command line with explicit output streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Build(args) => cmd_build(args, out),
        Command::Eval(args) => cmd_eval(args, out),
        Command::Check(args) => cmd_check(args, out),
        Command::Peano(args) => cmd_peano(args, out),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure {
        code: EXIT_IO,
        message: format!("stdout: {e}"),
    })
}

fn load_universe(path: &Path) -> Result<Universe, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    file::load(&text).map_err(|e| Failure {
        code: EXIT_DATA,
        message: format!("{}: {e}", path.display()),
    })
}

fn cmd_build(args: BuildArgs, out: &mut dyn Write) -> CmdResult {
    let config = BuildConfig {
        atom_names: args.atoms,
        depth: args.depth,
        max_sets: args.max_sets,
    };
    let (universe, report) = build(&config).map_err(|e| match e {
        Error::CapExceeded { .. } => Failure {
            code: EXIT_CAP,
            message: e.to_string(),
        },
        e => Failure::usage(e.to_string()),
    })?;
    fs::write(&args.out, file::save(&universe)).map_err(|e| io_failure(&args.out, e))?;
    write_out(out, &format!("{:?}\n", report.stage_counts()))?;
    Ok(EXIT_OK)
}

fn cmd_eval(args: EvalArgs, out: &mut dyn Write) -> CmdResult {
    let universe = load_universe(&args.universe)?;
    let formula = parse(&args.formula).map_err(|e| Failure::usage(e.to_string()))?;
    let mut env = Env::new();
    for binding in &args.bindings {
        let (name, text) = binding
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("binding `{binding}` is not of the form name=set")))?;
        let id = literal::parse_literal(&universe, text)
            .map_err(|e| Failure::usage(format!("binding `{name}`: {e}")))?;
        env.insert(name.trim(), id);
    }
    let value = evaluate(&universe, &formula, &env).map_err(|e| Failure::usage(e.to_string()))?;
    write_out(out, &format!("{value}\n"))?;
    Ok(if value { EXIT_OK } else { EXIT_FALSE })
}

fn atom_pair(universe: &Universe, names: &[String]) -> Result<(SetId, SetId), Failure> {
    let [a, b] = names else {
        return Err(Failure::usage("expected exactly two atom names"));
    };
    let lookup = |name: &str| {
        universe
            .atom_named(name)
            .ok_or_else(|| Failure::usage(format!("unknown atom `{name}`")))
    };
    let (a, b) = (lookup(a)?, lookup(b)?);
    if a == b {
        return Err(Failure::usage("the two atoms must be distinct"));
    }
    Ok((a, b))
}

fn render_report(universe: &Universe, report: &Report) -> String {
    let mut text = format!(
        "universe: atoms {} size {} depth {}\n",
        report.universe.atoms.join(","),
        report.universe.size,
        report
            .universe
            .depth
            .map_or_else(|| "-".to_string(), |d| d.to_string()),
    );
    for r in &report.results {
        text.push_str(&format!("{:<6} {:<24} scanned={}\n", r.status.to_string(), r.name, r.scanned));
        if let Some(w) = &r.witness {
            let bindings: Vec<String> = w
                .vars
                .iter()
                .zip(&w.ids)
                .map(|(v, &id)| format!("{v}={}", universe.literal(id).unwrap_or_else(|_| id.to_string())))
                .collect();
            text.push_str(&format!("       witness {}: {}\n", bindings.join(" "), w.formula));
        }
    }
    text
}

fn exit_for(report: &Report) -> i32 {
    if report.results.iter().any(|r| r.status == Status::Fails) {
        EXIT_FALSE
    } else {
        EXIT_OK
    }
}

fn cmd_check(args: CheckArgs, out: &mut dyn Write) -> CmdResult {
    let suite: Suite = args.suite.parse().map_err(Failure::usage)?;
    let mut universe = load_universe(&args.universe)?;
    let atoms = match &args.pair {
        Some(names) => Some(atom_pair(&universe, names)?),
        None if suite.needs_atom_pair() => {
            return Err(Failure::usage(format!(
                "suite `{}` needs --pair with two atom names",
                args.suite
            )))
        }
        // `all` defaults to the first two atoms when there are any
        None => match universe.atoms() {
            [a, b, ..] => Some((*a, *b)),
            _ => None,
        },
    };
    let report = run_suite(&mut universe, suite, atoms).map_err(|e| Failure::usage(e.to_string()))?;
    let text = match args.format {
        Format::Text => render_report(&universe, &report),
        Format::Json => to_json(&report),
    };
    write_out(out, &text)?;
    Ok(exit_for(&report))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct PeanoOutput<'a> {
    sequence: Vec<String>,
    report: &'a Report,
}

fn cmd_peano(args: PeanoArgs, out: &mut dyn Write) -> CmdResult {
    let mut universe = load_universe(&args.universe)?;
    let (a, b) = atom_pair(&universe, &args.base)?;
    let seq = sequence(&mut universe, a, b, args.length).map_err(|e| Failure::usage(e.to_string()))?;
    let report = check_peano(&universe, &seq).map_err(|e| Failure::usage(e.to_string()))?;
    let literals: Vec<String> = seq
        .elements
        .iter()
        .map(|&x| universe.literal(x).expect("sequence ids are valid"))
        .collect();
    let text = match args.format {
        Format::Text => {
            let mut text = String::new();
            for (i, lit) in literals.iter().enumerate() {
                text.push_str(&format!("{i}: {lit}\n"));
            }
            text + &render_report(&universe, &report)
        }
        Format::Json => to_json(&PeanoOutput {
            sequence: literals,
            report: &report,
        }),
    };
    write_out(out, &text)?;
    Ok(exit_for(&report))
}
