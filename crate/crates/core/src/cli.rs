//! Command-line front end. Exit codes: 0 holds / certified / inconclusive,
//! 1 refuted (or a false toric check, or a catalog invariant failure),
//! 2 usage error, 3 budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{parse_polynomial, Polynomial, Rational, Ring};
use crate::budget::Budget;
use crate::catalog::{catalog, run_catalog};
use crate::criteria::{
    divisorial_freg_test, fpure_test_ci, fpure_test_general, strong_freg_test_ci, Boundary,
    CriteriaError, Mode, PairSpec, Verdict, VerdictKind,
};
use crate::discrepancy::{graph_report, DualGraph};
use crate::report::Report;
use crate::thresholds::{fpt_report, ThresholdReport};
use crate::toric::{toric_fpure_verify, Cone};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "frobsing", version, about = "Fedder-type F-singularity tests, F-pure thresholds and discrepancies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// F-purity (weak mode) or strong F-purity (strong mode) of a pair.
    Fpure(FpureArgs),
    /// ν-values and threshold bounds for (F_p[x], t div(f)).
    Fpt(FptArgs),
    /// Strong F-regularity of a pair.
    Sfr(SfrArgs),
    /// Divisorial F-regularity of (A, div g).
    Divfr(SfrArgs),
    /// Discrepancies, type and predicted F-class of a dual graph.
    Graph(GraphArgs),
    /// Lattice form of F-purity for a toric pair.
    Toric(ToricArgs),
    /// Run the built-in examples and compare with recorded claims.
    Catalog(CatalogArgs),
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    /// Characteristic.
    #[arg(long)]
    pub p: u64,
    /// Comma separated variable names.
    #[arg(long, value_delimiter = ',')]
    pub vars: Vec<String>,
    /// Complete-intersection generator (repeatable).
    #[arg(long)]
    pub ci: Vec<String>,
    /// Boundary equation g.
    #[arg(long)]
    pub g: Option<String>,
    /// Boundary coefficient, "a" or "a/b".
    #[arg(long, default_value = "1")]
    pub t: String,
    #[arg(long, default_value = "weak")]
    pub mode: String,
    #[arg(long = "max-e", default_value_t = 2)]
    pub max_e: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct FpureArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Treat the --ci polynomials as generators of an arbitrary ideal.
    #[arg(long)]
    pub ideal: bool,
}

#[derive(Args, Debug)]
pub struct SfrArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Test element c; a Jacobian minor (times g) by default.
    #[arg(long)]
    pub witness: Option<String>,
}

#[derive(Args, Debug)]
pub struct FptArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, value_delimiter = ',')]
    pub vars: Vec<String>,
    /// The polynomial f.
    #[arg(long)]
    pub f: String,
    #[arg(long = "max-e", default_value_t = 2)]
    pub max_e: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    /// Graph JSON file; use --json for inline input.
    #[arg(long, conflicts_with = "json")]
    pub file: Option<std::path::PathBuf>,
    #[arg(long)]
    pub json: Option<String>,
    /// Characteristic for the F-class prediction.
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ToricArgs {
    /// Rays as "1,0;1,2".
    #[arg(long)]
    pub rays: String,
    /// Ray indices in the boundary, as "0,1".
    #[arg(long, value_delimiter = ',', conflicts_with = "full_delta")]
    pub delta: Vec<usize>,
    /// Boundary = all toric divisors.
    #[arg(long)]
    pub full_delta: bool,
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub e: u32,
    #[arg(long = "box", default_value_t = 8)]
    pub bound: i64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CatalogArgs {
    /// Only entries whose id contains this string.
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long = "max-e", default_value_t = 2)]
    pub max_e: u32,
    /// Worker threads.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// Exit code of a criterion verdict.
pub fn exit_code(verdict: &Verdict) -> i32 {
    match verdict.verdict {
        VerdictKind::Refuted { .. } => EXIT_REFUTED,
        _ if verdict.budget_exceeded.is_some() => EXIT_BUDGET,
        _ => EXIT_OK,
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<CriteriaError> for Failure {
    fn from(e: CriteriaError) -> Self {
        Failure {
            code: if e.is_budget() { EXIT_BUDGET } else { EXIT_USAGE },
            message: e.to_string(),
        }
    }
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn ring_of(p: u64, vars: &[String]) -> Result<std::sync::Arc<Ring>, Failure> {
    Ring::new(p, vars).map_err(usage)
}

fn poly(text: &str, ring: &std::sync::Arc<Ring>) -> Result<Polynomial, Failure> {
    parse_polynomial(text, ring).map_err(|e| usage(format!("in '{text}': {e}")))
}

fn pair_of(args: &PairArgs) -> Result<PairSpec, Failure> {
    let ring = ring_of(args.p, &args.vars)?;
    let ci = args
        .ci
        .iter()
        .map(|f| poly(f, &ring))
        .collect::<Result<Vec<_>, _>>()?;
    let mode: Mode = args.mode.parse().map_err(usage)?;
    let boundary = match &args.g {
        Some(g) => Some(Boundary {
            g: poly(g, &ring)?,
            t: args.t.parse::<Rational>().map_err(usage)?,
        }),
        None => None,
    };
    Ok(PairSpec::new(&ring, ci, boundary, mode)?)
}

fn render_verdict(v: &Verdict) -> String {
    let mut out = format!("{v}\n");
    for r in &v.transcript {
        let _ = write!(
            out,
            "  [{}] e={} q={} r={} {} ({} surviving terms)",
            r.stage,
            r.e,
            r.q,
            r.r,
            if r.passed { "pass" } else { "in m^[q]" },
            r.surviving_terms
        );
        if let Some(s) = &r.survivor {
            let _ = write!(out, ", leading survivor {s}");
        }
        out.push('\n');
        if let Some(tau) = &r.tau {
            match &tau.skipped {
                Some(why) => {
                    let _ = writeln!(out, "      tau skipped: {why}");
                }
                None => {
                    let _ = writeln!(out, "      tau = ({})", tau.generators.join(", "));
                }
            }
        }
    }
    if let Some(b) = &v.budget_exceeded {
        let _ = writeln!(out, "  budget exceeded: {b}");
    }
    for n in &v.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    out
}

fn render_threshold(r: &ThresholdReport) -> String {
    let mut out = format!("f = {}\n", r.nu.f);
    for x in &r.nu.entries {
        let _ = writeln!(out, "  e={} q={} j={}", x.e, x.q, x.j);
    }
    let _ = writeln!(out, "upper bound        {} (capped {})", r.upper, r.upper_capped);
    let _ = writeln!(out, "level watermark    {}", r.level_watermark);
    let _ = writeln!(out, "estimate j/(q-1)   {}  (j/q = {})", r.estimate, r.estimate_pe);
    let _ = writeln!(out, "strong mode        upper {}, watermark {}", r.strong_upper, r.strong_watermark);
    let j = &r.jacobian;
    let _ = writeln!(
        out,
        "multiplicity n={}: F-pure for t <= {}, F-purity forces t <= {}",
        j.n, j.lower, j.upper
    );
    let _ = writeln!(
        out,
        "initial form {}, m = {:?}, mu = {}, at t = {}: {:?}",
        j.initial_form,
        j.m,
        j.mu.as_ref().map_or("-".into(), |m| m.to_string()),
        j.t,
        j.status
    );
    out
}

struct Rendered {
    code: i32,
    text: String,
    report: Report,
}

fn finish<T: Serialize>(command: &[String], code: i32, text: String, payload: &T, flags: Vec<String>, start: Instant) -> Rendered {
    Rendered {
        code,
        text,
        report: Report::new(command.to_vec(), payload)
            .with_flags(flags)
            .with_elapsed(start.elapsed()),
    }
}

fn dispatch(cmd: Command, echo: &[String], budget: &Budget) -> Result<(Rendered, Format), Failure> {
    let start = Instant::now();
    match cmd {
        Command::Fpure(a) => {
            let pair = pair_of(&a.pair)?;
            let v = if a.ideal {
                fpure_test_general(&pair.defining_ideal(), pair.boundary(), pair.mode(), a.pair.max_e, budget)?
            } else {
                fpure_test_ci(&pair, a.pair.max_e, budget)?
            };
            Ok((finish(echo, exit_code(&v), render_verdict(&v), &v, vec![], start), a.pair.format))
        }
        Command::Sfr(a) => {
            let pair = pair_of(&a.pair)?;
            let c = a.witness.as_deref().map(|w| poly(w, pair.ring())).transpose()?;
            let v = strong_freg_test_ci(&pair, a.pair.max_e, c.as_ref(), budget)?;
            Ok((finish(echo, exit_code(&v), render_verdict(&v), &v, vec![], start), a.pair.format))
        }
        Command::Divfr(a) => {
            let pair = pair_of(&a.pair)?;
            let c = a.witness.as_deref().map(|w| poly(w, pair.ring())).transpose()?;
            let v = divisorial_freg_test(&pair, a.pair.max_e, c.as_ref(), budget)?;
            Ok((finish(echo, exit_code(&v), render_verdict(&v), &v, vec![], start), a.pair.format))
        }
        Command::Fpt(a) => {
            let ring = ring_of(a.p, &a.vars)?;
            let f = poly(&a.f, &ring)?;
            let r = fpt_report(&f, a.max_e, budget).map_err(|e| Failure {
                code: if e.is_budget() { EXIT_BUDGET } else { EXIT_USAGE },
                message: e.to_string(),
            })?;
            Ok((finish(echo, EXIT_OK, render_threshold(&r), &r, vec![], start), a.format))
        }
        Command::Graph(a) => {
            let text = match (&a.file, &a.json) {
                (Some(path), _) => std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?,
                (None, Some(j)) => j.clone(),
                (None, None) => return Err(usage("graph needs --file or --json")),
            };
            let g = DualGraph::from_json(&text).map_err(usage)?;
            let r = graph_report(&g, a.p).map_err(usage)?;
            let a_list: Vec<String> = r.discrepancies.a.iter().map(|x| x.to_string()).collect();
            let mut text = format!(
                "discrepancies ({})\nclass {}\n",
                a_list.join(", "),
                r.discrepancies.lc_class
            );
            if let Some(t) = r.graph_type {
                let _ = writeln!(text, "type {t}");
            }
            if let Some(pred) = r.prediction {
                let _ = writeln!(text, "predicted {pred}");
            }
            Ok((finish(echo, EXIT_OK, text, &r, vec![], start), a.format))
        }
        Command::Toric(a) => {
            let cone = Cone::parse(&a.rays).map_err(usage)?;
            let delta: Vec<usize> = if a.full_delta {
                (0..cone.rays().len()).collect()
            } else {
                a.delta.clone()
            };
            let v = toric_fpure_verify(&cone, &delta, a.p, a.e, a.bound).map_err(usage)?;
            let text = format!(
                "{}\ncone {} delta {:?} q={} box {}\nidentity {}  containment {}  strict witnesses {}  scaling injective {}  Frobenius image contained {}\n",
                v.verified(),
                v.cone,
                v.delta,
                v.q,
                v.bound,
                v.identity_holds,
                v.containment_holds,
                v.strict_witnesses.len(),
                v.scaling_injective,
                v.frobenius_image_contained
            );
            let code = if v.verified() { EXIT_OK } else { EXIT_REFUTED };
            Ok((finish(echo, code, text, &v, vec![], start), a.format))
        }
        Command::Catalog(a) => {
            let report = run_catalog(&catalog(), a.filter.as_deref(), a.max_e, budget, a.jobs);
            let flags: Vec<String> = report
                .flagged()
                .iter()
                .map(|r| format!("FLAGGED {}: computed {}; claim: {}", r.id, r.computed, r.claim))
                .collect();
            let code = if report.internal_failure() { EXIT_REFUTED } else { EXIT_OK };
            Ok((finish(echo, code, report.to_table(), &report, flags, start), a.format))
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// rendered output to `out`; errors go to `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let budget = match Budget::from_env() {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, &echo, &budget) {
        Ok((r, format)) => {
            let _ = match format {
                Format::Text => write!(out, "{}", r.text),
                Format::Json => writeln!(out, "{}", r.report.to_json()),
            };
            r.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Convenience for tests and examples: exit code and captured stdout.
pub fn run_captured<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(args, &mut out, &mut err);
    let mut text = String::from_utf8_lossy(&out).into_owned();
    text.push_str(&String::from_utf8_lossy(&err));
    (code, text)
}
