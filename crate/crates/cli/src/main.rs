use std::fmt;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bipolar_aba::aba::{parse_aba, DEFAULT_ARGUMENT_CAP};
use bipolar_aba::baf::{baf_to_dot, parse_baf, parse_pbaf, pbaf_to_dot, write_baf, write_pbaf};
use bipolar_aba::harness::{run_fuzz, CheckKind, CorpusLimits, CorrespondenceLimits, FuzzConfig};
use bipolar_aba::instantiate::instantiate;
use bipolar_aba::reductions::{
    construct_gr_baf, construct_sat_baf, construct_skept_baf, construct_skept_pbaf, parse_dimacs,
};
use bipolar_aba::{Error, IdSet, Semantics, Task, DEFAULT_MAX_ENUMERATION};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "bipolar-aba", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate extensions or decide a reasoning task.
    Solve(SolveArgs),
    /// Instantiate an ABA framework as a BAF or pBAF.
    Translate(TranslateArgs),
    /// Build a framework from a DIMACS CNF formula.
    Reduce(ReduceArgs),
    /// Run seeded randomized consistency checks.
    Fuzz(FuzzArgs),
    /// Render a framework as a Graphviz digraph.
    ExportDot(ExportArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Formalism {
    Aba,
    Baf,
    Pbaf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "lowercase")]
enum TaskArg {
    Enumerate,
    Cred,
    Skept,
    Ver,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Target {
    Baf,
    Pbaf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Construction {
    SatBaf,
    GrBaf,
    SkeptBaf,
    SkeptPbaf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    formalism: Formalism,
    input: PathBuf,
    #[arg(long, value_parser = parse_semantics)]
    sigma: Semantics,
    #[arg(long, value_enum, ignore_case = true, default_value = "enumerate")]
    task: TaskArg,
    /// A name or id, or a comma-separated set such as `{a,b}`.
    #[arg(long)]
    query: Option<String>,
    /// Enumeration guard: assumptions for ABA, arguments otherwise.
    #[arg(long, default_value_t = DEFAULT_MAX_ENUMERATION)]
    max_args: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct TranslateArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value = "baf")]
    target: Target,
    /// Maximum number of arguments to build.
    #[arg(long, default_value_t = DEFAULT_ARGUMENT_CAP)]
    cap: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    construction: Construction,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 100)]
    count: u64,
    /// First seed; cases use consecutive seeds.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_delimiter = ',', value_parser = parse_check)]
    checks: Vec<CheckKind>,
    /// Semantics for correspondence checks; all five when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_semantics)]
    sigma: Vec<Semantics>,
    #[arg(long, default_value_t = 8)]
    max_atoms: usize,
    #[arg(long, default_value_t = 5)]
    max_assumptions: usize,
    #[arg(long, default_value_t = 10)]
    max_rules: usize,
    #[arg(long, default_value_t = 3)]
    max_body: usize,
    /// Instantiation cap; frameworks exceeding it are skipped.
    #[arg(long, default_value_t = DEFAULT_ARGUMENT_CAP)]
    cap: usize,
    /// Largest random BAF for defense checks.
    #[arg(long, default_value_t = 7)]
    max_args: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ExportArgs {
    formalism: Formalism,
    input: PathBuf,
    /// For ABA input, which instantiated framework to draw.
    #[arg(long, value_enum, default_value = "baf")]
    target: Target,
    #[arg(long, default_value_t = DEFAULT_ARGUMENT_CAP)]
    cap: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_semantics(s: &str) -> Result<Semantics, Error> {
    s.parse()
}

fn parse_check(s: &str) -> Result<CheckKind, Error> {
    s.parse()
}

enum Failure {
    Core { path: Option<PathBuf>, error: Error },
    Io { path: PathBuf, error: io::Error },
    Usage(String),
    ChecksFailed,
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core { error: Error::Parse { .. }, .. } => 2,
            Failure::Core {
                error: Error::TooLarge { .. } | Error::CapExceeded { .. },
                ..
            } => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core { path: Some(p), error: e @ Error::Parse { .. } } => {
                write!(f, "{}: {e}", p.display())
            }
            Failure::Core { error: e @ Error::TooLarge { guard, .. }, .. } => {
                write!(f, "guard {guard}: {e}")
            }
            Failure::Core { error: e @ Error::CapExceeded { .. }, .. } => write!(f, "guard cap: {e}"),
            Failure::Core { error, .. } => write!(f, "{error}"),
            Failure::Io { path, error } => write!(f, "{}: {error}", path.display()),
            Failure::Usage(msg) => f.write_str(msg),
            Failure::ChecksFailed => f.write_str("checks failed"),
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure::Core { path: None, error }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|error| Failure::Io {
        path: path.to_path_buf(),
        error,
    })
}

/// Runs a parser, attaching the input path to its errors.
fn parse_file<T>(path: &Path, parse: impl FnOnce(&str) -> bipolar_aba::Result<T>) -> Result<T, Failure> {
    parse(&read(path)?).map_err(|error| Failure::Core {
        path: Some(path.to_path_buf()),
        error,
    })
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|error| Failure::Io {
            path: path.to_path_buf(),
            error,
        }),
        None => {
            let _ = io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

/// Splits `a`, `a,b`, `{a,b}` or `[a,b]` into tokens.
fn query_tokens(query: &str) -> Vec<&str> {
    query
        .trim()
        .trim_start_matches(['{', '['])
        .trim_end_matches(['}', ']'])
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect()
}

fn resolve_query<I: bipolar_aba::DenseId>(
    query: Option<&str>,
    resolve: impl Fn(&str) -> Option<I>,
) -> Result<IdSet<I>, Failure> {
    let query = query.ok_or_else(|| Failure::Usage("decision tasks need --query".into()))?;
    query_tokens(query)
        .into_iter()
        .map(|t| resolve(t).ok_or_else(|| Failure::Usage(format!("unknown query element {t:?}"))))
        .collect()
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    semantics: Semantics,
    task: &'a str,
    extensions: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    answer: Option<bool>,
}

/// Enumerated extensions (sorted by member ids) as name lists, plus the
/// decision answer if a task was given.
struct Solved {
    extensions: Vec<Vec<String>>,
    answer: Option<bool>,
}

fn solved<I: bipolar_aba::DenseId>(
    mut family: Vec<IdSet<I>>,
    name: impl Fn(I) -> String,
    answer: Option<bool>,
) -> Solved {
    family.sort();
    Solved {
        extensions: family.iter().map(|e| e.iter().map(&name).collect()).collect(),
        answer,
    }
}

fn task_of(arg: TaskArg) -> Option<Task> {
    match arg {
        TaskArg::Enumerate => None,
        TaskArg::Cred => Some(Task::Cred),
        TaskArg::Skept => Some(Task::Skept),
        TaskArg::Ver => Some(Task::Ver),
    }
}

fn solve(args: &SolveArgs) -> Result<String, Failure> {
    let task = task_of(args.task);
    let query = args.query.as_deref();
    let max = args.max_args;
    let sigma = args.sigma;
    let result = match args.formalism {
        Formalism::Aba => {
            let d = parse_file(&args.input, parse_aba)?;
            let answer = match task {
                Some(t) => {
                    let q = resolve_query(query, |tok| d.resolve_atom(tok))?;
                    Some(d.decide_bounded(sigma, t, &q, max)?)
                }
                None => None,
            };
            solved(d.extensions_bounded(sigma, max)?, |a| d.atom_name(a), answer)
        }
        Formalism::Baf => {
            let f = parse_file(&args.input, parse_baf)?;
            let answer = match task {
                Some(t) => {
                    let q = resolve_query(query, |tok| f.resolve_arg(tok))?;
                    Some(f.decide_bounded(sigma, t, &q, max)?)
                }
                None => None,
            };
            solved(f.extensions_bounded(sigma, max)?, |a| f.arg_name(a), answer)
        }
        Formalism::Pbaf => {
            let pf = parse_file(&args.input, parse_pbaf)?;
            let f = pf.baf();
            let answer = match task {
                Some(t) => {
                    let q = resolve_query(query, |tok| f.resolve_arg(tok))?;
                    Some(pf.decide_bounded(sigma, t, &q, max)?)
                }
                None => None,
            };
            solved(pf.extensions_bounded(sigma, max)?, |a| f.arg_name(a), answer)
        }
    };

    let task_name = task.map_or("enumerate", Task::as_str);
    Ok(match args.format {
        Format::Json => {
            let doc = SolveOutput {
                semantics: sigma,
                task: task_name,
                extensions: result.extensions,
                answer: result.answer,
            };
            serde_json::to_string_pretty(&doc).expect("output serializes") + "\n"
        }
        Format::Text => match result.answer {
            Some(true) => "YES\n".to_string(),
            Some(false) => "NO\n".to_string(),
            None => {
                let mut out = String::new();
                for e in &result.extensions {
                    out.push_str(&format!("[{}]\n", e.join(",")));
                }
                out.push_str(&format!("count: {}\n", result.extensions.len()));
                out
            }
        },
    })
}

fn translate(args: &TranslateArgs) -> Result<(), Failure> {
    let d = parse_file(&args.input, parse_aba)?;
    let inst = instantiate(&d, args.cap)?;
    let text = match args.target {
        Target::Baf => inst.write_baf(),
        Target::Pbaf => inst.write_pbaf(),
    };
    emit(args.output.as_deref(), &text)
}

fn reduce(args: &ReduceArgs) -> Result<(), Failure> {
    let phi = parse_file(&args.input, parse_dimacs)?;
    let text = match args.construction {
        Construction::SatBaf => write_baf(&construct_sat_baf(&phi)),
        Construction::GrBaf => write_baf(&construct_gr_baf(&phi)),
        Construction::SkeptBaf => write_baf(&construct_skept_baf(&phi)),
        Construction::SkeptPbaf => write_pbaf(&construct_skept_pbaf(&phi)),
    };
    emit(args.output.as_deref(), &text)
}

fn fuzz(args: &FuzzArgs) -> Result<(), Failure> {
    let config = FuzzConfig {
        count: args.count,
        first_seed: args.seed,
        checks: if args.checks.is_empty() {
            CheckKind::ALL.to_vec()
        } else {
            args.checks.clone()
        },
        semantics: args.sigma.clone(),
        limits: CorpusLimits {
            max_atoms: args.max_atoms,
            max_assumptions: args.max_assumptions,
            max_rules: args.max_rules,
            max_body: args.max_body,
        },
        correspondence: CorrespondenceLimits {
            cap: args.cap,
            max_args: args.cap,
        },
        max_baf_args: args.max_args,
    };
    let report = run_fuzz(&config);
    let text = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    emit(None, &text)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

fn export_dot(args: &ExportArgs) -> Result<(), Failure> {
    let dot = match args.formalism {
        Formalism::Aba => {
            let d = parse_file(&args.input, parse_aba)?;
            let inst = instantiate(&d, args.cap)?;
            match args.target {
                Target::Baf => baf_to_dot(inst.baf()),
                Target::Pbaf => pbaf_to_dot(inst.pbaf()),
            }
        }
        Formalism::Baf => baf_to_dot(&parse_file(&args.input, parse_baf)?),
        Formalism::Pbaf => pbaf_to_dot(&parse_file(&args.input, parse_pbaf)?),
    };
    emit(args.output.as_deref(), &dot)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Solve(args) => emit(None, &solve(args)?),
        Command::Translate(args) => translate(args),
        Command::Reduce(args) => reduce(args),
        Command::Fuzz(args) => fuzz(args),
        Command::ExportDot(args) => export_dot(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(1),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
