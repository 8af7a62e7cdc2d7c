use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use monores::analysis::analyze;
use monores::batch::{dump_failures, run_suite, SuiteConfig};
use monores::io::{
    self, parse_ideal, render_certificate, render_report, render_resolution, resolution_from_json,
    to_json,
};
use monores::par::Execution;
use monores::scarf::{buchberger_graph, scarf_complex};
use monores::taylor::{resolve_with, ColumnOrdering, ResolveOptions, DEFAULT_CAP, HARD_CAP};
use monores::verify::{certify, DEFAULT_EVAL_SEED};
use monores::{Error, FreeResolution, Monomial, MonomialIdeal};

#[derive(Parser)]
#[command(
    name = "monores",
    version,
    about = "Minimal free resolutions of monomial ideals in k[x, y, z]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format. `dot` is only meaningful for `buch`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Column order of f2 and f3.
    #[arg(long, global = true, value_enum, default_value_t = Ordering::DictionaryFirst)]
    ordering: Ordering,

    /// Keep generators in file order instead of sorting them.
    #[arg(long, global = true)]
    keep_input_order: bool,

    /// Largest number of generators accepted (at most 20).
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ordering {
    DictionaryFirst,
    GrevlexFirst,
}

#[derive(Args)]
struct Input {
    /// Ideal file (`-` for stdin).
    path: Option<PathBuf>,

    /// Generators given inline, separated by commas or semicolons.
    #[arg(long, conflicts_with = "path")]
    ideal: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the minimal free resolution.
    Resolve(Input),
    /// Count entries from the ideal and run every structural check.
    Analyze(Input),
    /// Certify a resolution given as JSON, or the computed resolution of an
    /// ideal file.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Seed for the random evaluation points.
        #[arg(long, default_value_t = DEFAULT_EVAL_SEED)]
        seed: u64,
    },
    /// Faces of the Scarf complex.
    Scarf(Input),
    /// Edges of the Buchberger graph.
    Buch(Input),
    /// Genericity report.
    Generic(Input),
    /// Random m-primary ideals, each resolved, certified and analyzed.
    RandomSuite {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 7)]
        max_exp: u32,
        /// Directory receiving one ideal file per failing instance.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
        /// Run instances on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

/// Exit code 1.
struct CheckFailed;

enum Failure {
    Check,
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<CheckFailed> for Failure {
    fn from(_: CheckFailed) -> Self {
        Failure::Check
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::TooManyGenerators { .. } => 3,
        Error::Internal(_)
        | Error::InternalNonHomogeneous { .. }
        | Error::DegenerateEvaluation
        | Error::MissingSecondSyzygy(..) => 1,
        _ => 2,
    }
}

fn read_input(input: &Input) -> Result<String, Failure> {
    if let Some(inline) = &input.ideal {
        return Ok(inline.replace([',', ';'], "\n"));
    }
    match &input.path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

impl Cli {
    fn options(&self) -> ResolveOptions {
        ResolveOptions {
            ordering: match self.ordering {
                Ordering::DictionaryFirst => ColumnOrdering::DictionaryFirst,
                Ordering::GrevlexFirst => ColumnOrdering::GrevlexFirst,
            },
            cap: self.cap,
            ..Default::default()
        }
    }

    fn ideal(&self, input: &Input) -> Result<MonomialIdeal, Failure> {
        let ideal = parse_ideal(&read_input(input)?, self.keep_input_order)?;
        let cap = self.cap.min(HARD_CAP);
        if ideal.len() > cap {
            return Err(Error::TooManyGenerators {
                n: ideal.len(),
                cap,
            }
            .into());
        }
        Ok(ideal)
    }

    fn resolution(&self, input: &Input) -> Result<FreeResolution, Failure> {
        Ok(resolve_with(&self.ideal(input)?, &self.options())?)
    }

    fn emit<T: Serialize>(
        &self,
        value: &T,
        pretty: impl FnOnce() -> String,
    ) -> Result<(), Failure> {
        match self.format {
            Format::Json => print!("{}", to_json(value)),
            Format::Pretty => print!("{}", pretty()),
            Format::Dot => {
                return Err(
                    Error::InvalidParameter("--format dot only applies to buch".into()).into(),
                )
            }
        }
        Ok(())
    }

    fn run(&self) -> Result<(), Failure> {
        match &self.command {
            Command::Resolve(input) => {
                let res = self.resolution(input)?;
                match self.format {
                    Format::Json => print!("{}", io::resolution_to_json(&res)),
                    Format::Pretty => print!("{}", render_resolution(&res)),
                    Format::Dot => {
                        return Err(Error::InvalidParameter(
                            "--format dot only applies to buch".into(),
                        )
                        .into())
                    }
                }
            }
            Command::Analyze(input) => {
                let report = analyze(&self.resolution(input)?);
                self.emit(&report, || render_report(&report))?;
                if report.has_failure() {
                    return Err(CheckFailed.into());
                }
            }
            Command::Verify { input, seed } => {
                let text = read_input(input)?;
                let res = if text.trim_start().starts_with('{') {
                    resolution_from_json(&text)?
                } else {
                    let ideal = parse_ideal(&text, self.keep_input_order)?;
                    resolve_with(&ideal, &self.options())?
                };
                let cert = certify(&res, *seed);
                self.emit(&cert, || render_certificate(&cert))?;
                if !cert.all_ok() {
                    return Err(CheckFailed.into());
                }
            }
            Command::Scarf(input) => {
                let ideal = self.ideal(input)?;
                let scarf = scarf_complex(&ideal, self.cap, Execution::default())?;
                #[derive(Serialize)]
                struct ScarfJson<'a> {
                    n: usize,
                    faces: &'a [Vec<usize>],
                    larger: &'a [Vec<usize>],
                }
                let doc = ScarfJson {
                    n: scarf.n,
                    faces: &scarf.faces,
                    larger: &scarf.larger,
                };
                self.emit(&doc, || {
                    let mut out = format!("ideal: {ideal}\n");
                    for f in scarf.faces.iter().chain(&scarf.larger) {
                        let lcm = f.iter().fold(Monomial::ONE, |a, &i| a.lcm(&ideal.gen(i)));
                        out += &format!("{f:?}  lcm {lcm}\n");
                    }
                    out
                })?;
            }
            Command::Buch(input) => {
                let ideal = self.ideal(input)?;
                let graph = buchberger_graph(&ideal);
                match self.format {
                    Format::Dot => print!("{}", graph.to_dot(&ideal)),
                    _ => {
                        #[derive(Serialize)]
                        struct BuchJson<'a> {
                            n: usize,
                            edges: Vec<&'a (usize, usize)>,
                        }
                        let doc = BuchJson {
                            n: graph.n,
                            edges: graph.edges.iter().collect(),
                        };
                        self.emit(&doc, || {
                            graph
                                .edges
                                .iter()
                                .map(|&(i, j)| {
                                    format!("{i} -- {j}   {} -- {}\n", ideal.gen(i), ideal.gen(j))
                                })
                                .collect()
                        })?;
                    }
                }
            }
            Command::Generic(input) => {
                let ideal = self.ideal(input)?;
                #[derive(Serialize)]
                struct GenericJson {
                    n: usize,
                    generic: bool,
                    m_primary: bool,
                    non_generic_pairs: Vec<(usize, usize)>,
                }
                let doc = GenericJson {
                    n: ideal.len(),
                    generic: ideal.is_generic(),
                    m_primary: ideal.is_m_primary(),
                    non_generic_pairs: ideal.non_generic_pairs().collect(),
                };
                self.emit(&doc, || {
                    let mut out = format!(
                        "ideal: {ideal}\ngeneric: {}\nm-primary: {}\n",
                        doc.generic, doc.m_primary
                    );
                    for &(i, j) in &doc.non_generic_pairs {
                        out += &format!(
                            "non-generic pair {i} {j}: {} and {}\n",
                            ideal.gen(i),
                            ideal.gen(j)
                        );
                    }
                    out
                })?;
            }
            Command::RandomSuite {
                seed,
                count,
                n_min,
                n_max,
                max_exp,
                dump_dir,
                sequential,
            } => {
                let cfg = SuiteConfig {
                    seed: *seed,
                    count: *count,
                    n_min: *n_min,
                    n_max: *n_max,
                    max_exp: *max_exp,
                    cap: self.cap,
                    exec: if *sequential {
                        Execution::Sequential
                    } else {
                        Execution::default()
                    },
                };
                let summary = run_suite(&cfg)?;
                if let Some(dir) = dump_dir {
                    dump_failures(&cfg, &summary, dir).map_err(|e| Failure::Io(e.to_string()))?;
                }
                self.emit(&summary, || {
                    let mut out = format!(
                        "instances {}\ngeneric {}\nskipped {}\nfailures {}\n",
                        summary.instances,
                        summary.generic,
                        summary.skipped,
                        summary.failures.len()
                    );
                    for f in &summary.failures {
                        out += &format!("  #{} {}: {}\n", f.index, f.ideal, f.failed.join(", "));
                    }
                    out
                })?;
                if !summary.passed() {
                    return Err(CheckFailed.into());
                }
            }
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
