//! `invar`: exact polynomial transformations of integer sequences.

mod ingest;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use invar_core::json::{
    derivation_json, endomorphism_json, intertwiner_json, kernel_presentation_json, report_json,
};
use invar_core::{
    apply_transform, check_invariance_numeric, check_invariance_symbolic, derivation_for_target,
    family_for_spec, intertwining_solve, kernel_presentation, solve_problem1, solve_problem2,
    transvectant_diag_family, Arity, InvarianceReport, NumericCheck, Sequence, TransformFamily,
    Verdict, DEFAULT_SEED,
};

#[derive(Parser)]
#[command(
    name = "invar",
    version,
    about = "Exact polynomial transformations of integer sequences",
    after_help = "Transforms: binomial:mu=<q>, hankel, psum, sum, diff, cayley, transvectant, \
                  resultant, discriminant, altconv, identity.\n\
                  The INVAR_SEED environment variable overrides the default seed."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Symbolic,
    Numeric,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a transformation to one or two input sequences
    Transform(TransformArgs),
    /// Check whether a candidate transformation is target-invariant
    Invariance(InvarianceArgs),
    /// Derivation logarithm of a triangular transformation
    Log(TargetArgs),
    /// Intertwining change of basis for a triangular transformation
    Intertwine(TargetArgs),
    /// Construct invariant families for a triangular transformation
    Problem1(TargetArgs),
    /// Find derivations annihilating a family, with their exponentials
    Problem2(Problem2Args),
    /// Kernel generators for a triangular transformation
    Kernel(TargetArgs),
}

#[derive(Args)]
struct TransformArgs {
    /// Transform spec, e.g. "hankel" or "binomial:mu=1/2"
    #[arg(long)]
    name: String,
    /// Inline first sequence: comma/whitespace separated rationals
    #[arg(long)]
    seq: Option<String>,
    /// Inline second sequence (binary transforms)
    #[arg(long)]
    seq2: Option<String>,
    /// b-file with the first sequence
    #[arg(long)]
    file: Option<PathBuf>,
    /// b-file with the second sequence
    #[arg(long)]
    file2: Option<PathBuf>,
    /// Output terms (default: as many as the input allows)
    #[arg(long)]
    terms: Option<u32>,
}

#[derive(Args)]
struct InvarianceArgs {
    /// Target transform the candidate should be invariant under
    #[arg(long)]
    target: String,
    /// Candidate transform to test
    #[arg(long)]
    candidate: String,
    #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
    mode: Mode,
    /// Check terms up to this index (default: 4 symbolic, 6 numeric)
    #[arg(long)]
    terms: Option<u32>,
    /// Random sequences per numeric check
    #[arg(long, default_value_t = 50)]
    samples: u32,
    /// Master seed (overrides INVAR_SEED)
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct TargetArgs {
    /// Triangular transform: psum, sum, diff, identity, binomial:mu=<q>
    #[arg(long)]
    transform: String,
    /// Working bound on variable indices
    #[arg(long, default_value_t = 4)]
    terms: u32,
}

#[derive(Args)]
struct Problem2Args {
    /// Family whose annihilating derivations are sought
    #[arg(long)]
    transform: String,
    /// Family terms g_start..g_terms to annihilate
    #[arg(long, default_value_t = 4)]
    terms: u32,
    /// Bound of the triangular-linear ansatz (default: what the family needs)
    #[arg(long)]
    ansatz_bound: Option<u32>,
}

struct Output {
    text: String,
    json: Value,
    exit: u8,
}

#[derive(Debug)]
enum CliError {
    Core(invar_core::Error),
    Ingest(ingest::IngestError),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Ingest(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<invar_core::Error> for CliError {
    fn from(e: invar_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<ingest::IngestError> for CliError {
    fn from(e: ingest::IngestError) -> Self {
        CliError::Ingest(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match dispatch(cli.command) {
        Ok(out) => {
            use std::io::Write;
            let rendered = match format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json"),
            };
            // a closed pipe (e.g. | head) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{rendered}");
            ExitCode::from(out.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Command) -> Result<Output, CliError> {
    match cmd {
        Command::Transform(args) => cmd_transform(args),
        Command::Invariance(args) => cmd_invariance(args),
        Command::Log(args) => cmd_log(args),
        Command::Intertwine(args) => cmd_intertwine(args),
        Command::Problem1(args) => cmd_problem1(args),
        Command::Problem2(args) => cmd_problem2(args),
        Command::Kernel(args) => cmd_kernel(args),
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("INVAR_SEED") {
        Ok(text) => text
            .parse()
            .map_err(|_| CliError::Usage(format!("INVAR_SEED is not a u64: '{text}'"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn load_sequence(
    inline: Option<&str>,
    file: Option<&PathBuf>,
    which: &str,
) -> Result<Option<Sequence>, CliError> {
    match (inline, file) {
        (Some(_), Some(_)) => Err(CliError::Usage(format!(
            "give the {which} sequence either inline or as a file, not both"
        ))),
        (Some(text), None) => Ok(Some(ingest::parse_inline(text)?)),
        (None, Some(path)) => Ok(Some(ingest::read_bfile(path)?)),
        (None, None) => Ok(None),
    }
}

/// Largest term count the input prefixes allow.
fn auto_terms(family: &TransformFamily, a_len: usize, c_len: usize) -> u32 {
    let mut count = 0u32;
    for n in family.start()..family.start() + 64 {
        let Ok(f) = family.poly(n) else { break };
        let fits_x = f
            .max_x_index()
            .map(|m| (m as usize) < a_len)
            .unwrap_or(true);
        let fits_c = f
            .max_c_index()
            .map(|m| (m as usize) < c_len)
            .unwrap_or(true);
        if !(fits_x && fits_c) {
            break;
        }
        count += 1;
    }
    count
}

fn cmd_transform(args: TransformArgs) -> Result<Output, CliError> {
    let mut family = family_for_spec(&args.name)?;
    let first = load_sequence(args.seq.as_deref(), args.file.as_ref(), "first")?
        .ok_or_else(|| CliError::Usage("an input sequence is required (--seq or --file)".into()))?;
    let second = load_sequence(args.seq2.as_deref(), args.file2.as_ref(), "second")?;

    if family.arity() == Arity::Two && second.is_none() {
        if args.name.starts_with("transvectant") {
            // diagonal case: both inputs are the same sequence
            family = transvectant_diag_family();
        } else {
            return Err(CliError::Usage(format!(
                "transform '{}' needs a second sequence (--seq2 or --file2)",
                family.name()
            )));
        }
    }
    if family.arity() == Arity::One && second.is_some() {
        return Err(CliError::Usage(format!(
            "transform '{}' takes a single sequence",
            family.name()
        )));
    }

    let inputs: Vec<&Sequence> = match &second {
        Some(c) if family.arity() == Arity::Two => vec![&first, c],
        _ => vec![&first],
    };
    let count = match args.terms {
        Some(t) => t,
        None => {
            let c_len = second.as_ref().map(Sequence::len).unwrap_or(0);
            auto_terms(&family, first.len(), c_len).max(1)
        }
    };
    let out = apply_transform(&family, &inputs, count)?;

    let terms_json: Vec<Value> = out
        .terms()
        .iter()
        .map(|t| Value::String(t.to_string()))
        .collect();
    Ok(Output {
        text: out.to_string(),
        json: json!({
            "command": "transform",
            "name": family.name(),
            "start": family.start(),
            "count": count,
            "terms": terms_json,
        }),
        exit: 0,
    })
}

fn render_report_text(label: &str, report: &InvarianceReport) -> String {
    let mode = match report.mode {
        invar_core::CheckMode::Symbolic => "symbolic",
        invar_core::CheckMode::Numeric => "numeric",
    };
    let scope = match report.samples {
        Some(s) => format!("{mode}, n <= {}, {s} samples", report.checked_upto),
        None => format!("{mode}, n <= {}", report.checked_upto),
    };
    let mut line = match report.verdict {
        Verdict::Invariant => format!("{label}INVARIANT ({scope})"),
        Verdict::NotInvariant => format!("{label}NOT INVARIANT ({scope})"),
        Verdict::Inconclusive => format!("{label}INCONCLUSIVE ({scope})"),
    };
    if let Some(note) = &report.note {
        write!(line, ": {note}").unwrap();
    }
    for witness in &report.witnesses {
        match witness {
            invar_core::Witness::Residual { term, residual } => {
                write!(line, "\n{label}witness at n={term}: residual = {residual}").unwrap();
            }
            invar_core::Witness::Sample {
                sample,
                input,
                second,
                differs_at,
            } => {
                write!(line, "\n{label}witness: sample {sample}, input ({input})").unwrap();
                if let Some(c) = second {
                    write!(line, " with second ({c})").unwrap();
                }
                write!(line, " differs first at n={differs_at}").unwrap();
            }
        }
    }
    line
}

fn verdict_exit(verdict: Verdict) -> u8 {
    match verdict {
        Verdict::Invariant => 0,
        Verdict::NotInvariant => 1,
        Verdict::Inconclusive => 2,
    }
}

fn cmd_invariance(args: InvarianceArgs) -> Result<Output, CliError> {
    let candidate = family_for_spec(&args.candidate)?;
    match args.mode {
        Mode::Symbolic => {
            let upto = args.terms.unwrap_or(4);
            // the derivation must cover every variable the candidate mentions
            let mut bound = 1;
            for n in candidate.start()..=upto.max(candidate.start()) {
                if let Ok(need) = candidate.prefix_need(n) {
                    bound = bound.max(need);
                }
            }
            let derivation = derivation_for_target(&args.target, bound)?;
            let report = check_invariance_symbolic(&derivation, &candidate, upto);
            let exit = verdict_exit(report.verdict);
            Ok(Output {
                text: render_report_text("", &report),
                json: json!({
                    "command": "invariance",
                    "target": args.target,
                    "candidate": candidate.name(),
                    "report": report_json(&report),
                }),
                exit,
            })
        }
        Mode::Numeric => {
            let upto = args.terms.unwrap_or(6);
            let seed = resolve_seed(args.seed)?;
            // a bare "binomial" target checks the default parameter set
            let targets: Vec<String> = if args.target == "binomial" {
                ["1", "-1", "2", "1/2"]
                    .iter()
                    .map(|mu| format!("binomial:mu={mu}"))
                    .collect()
            } else {
                vec![args.target.clone()]
            };
            let mut texts = Vec::new();
            let mut checks = Vec::new();
            let mut exit = 0u8;
            for spec in &targets {
                let target = family_for_spec(spec)?;
                let cfg = NumericCheck {
                    samples: args.samples,
                    upto,
                    seed,
                    ..Default::default()
                };
                let report = check_invariance_numeric(&target, &candidate, &cfg)?;
                exit = exit.max(verdict_exit(report.verdict));
                let label = if targets.len() > 1 {
                    format!("{spec}: ")
                } else {
                    String::new()
                };
                texts.push(render_report_text(&label, &report));
                checks.push(json!({
                    "target": spec,
                    "report": report_json(&report),
                }));
            }
            Ok(Output {
                text: texts.join("\n"),
                json: json!({
                    "command": "invariance",
                    "candidate": candidate.name(),
                    "mode": "numeric",
                    "seed": seed,
                    "checks": checks,
                }),
                exit,
            })
        }
    }
}

fn cmd_log(args: TargetArgs) -> Result<Output, CliError> {
    let d = derivation_for_target(&args.transform, args.terms)?;
    let mut text = String::new();
    for n in 1..=args.terms {
        let img = d.image(n)?;
        writeln!(text, "D(x{n}) = {img}").unwrap();
    }
    Ok(Output {
        text: text.trim_end().to_string(),
        json: json!({
            "command": "log",
            "transform": args.transform,
            "bound": args.terms,
            "derivation": derivation_json(&d, args.terms)?,
        }),
        exit: 0,
    })
}

fn cmd_intertwine(args: TargetArgs) -> Result<Output, CliError> {
    let d = derivation_for_target(&args.transform, args.terms)?;
    let psi = intertwining_solve(&d, args.terms)?;
    let mut text = String::new();
    for n in 0..=psi.bound() {
        writeln!(text, "psi(x{n}) = {}", psi.image(n)?).unwrap();
    }
    Ok(Output {
        text: text.trim_end().to_string(),
        json: json!({
            "command": "intertwine",
            "transform": args.transform,
            "bound": args.terms,
            "psi": intertwiner_json(&psi),
        }),
        exit: 0,
    })
}

fn cmd_problem1(args: TargetArgs) -> Result<Output, CliError> {
    let family = family_for_spec(&args.transform)?;
    let sol = solve_problem1(&family, args.terms)?;

    let mut families_json = Vec::new();
    let mut text = String::new();
    writeln!(text, "derivation:").unwrap();
    for n in 1..=args.terms {
        writeln!(text, "  D(x{n}) = {}", sol.derivation.image(n)?).unwrap();
    }
    writeln!(text, "intertwiner:").unwrap();
    for n in 0..=sol.intertwiner.bound() {
        writeln!(text, "  psi(x{n}) = {}", sol.intertwiner.image(n)?).unwrap();
    }
    writeln!(text, "invariant families:").unwrap();
    for fam in &sol.families {
        let mut polys = Map::new();
        let upper = if fam.name() == "psi_x0" {
            fam.start()
        } else {
            args.terms
        };
        writeln!(text, "  {}:", fam.name()).unwrap();
        for n in fam.start()..=upper {
            match fam.poly(n) {
                Ok(p) => {
                    writeln!(text, "    n={n}: {p}").unwrap();
                    polys.insert(n.to_string(), Value::String(p.to_string()));
                }
                Err(_) => break,
            }
        }
        families_json.push(json!({
            "name": fam.name(),
            "start": fam.start(),
            "polys": Value::Object(polys),
        }));
    }

    Ok(Output {
        text: text.trim_end().to_string(),
        json: json!({
            "command": "problem1",
            "transform": args.transform,
            "bound": args.terms,
            "derivation": derivation_json(&sol.derivation, args.terms)?,
            "psi": intertwiner_json(&sol.intertwiner),
            "families": families_json,
        }),
        exit: 0,
    })
}

fn cmd_problem2(args: Problem2Args) -> Result<Output, CliError> {
    let family = family_for_spec(&args.transform)?;
    // fix the ansatz bound up front so it can be reported
    let bound = match args.ansatz_bound {
        Some(b) => b,
        None => {
            let mut b = 0;
            for n in family.start()..=args.terms.max(family.start()) {
                b = b.max(family.prefix_need(n)?);
            }
            b
        }
    };
    let sols = solve_problem2(&family, args.terms, Some(bound))?;

    let mut text = String::new();
    let mut solutions_json = Vec::new();
    if sols.is_empty() {
        text.push_str("only the zero derivation found");
    } else {
        for (i, sol) in sols.iter().enumerate() {
            writeln!(text, "solution {}:", i + 1).unwrap();
            for n in 1..=bound {
                let img = sol.derivation.image(n)?;
                if !img.is_zero() {
                    writeln!(text, "  D(x{n}) = {img}").unwrap();
                }
            }
            for (v, p) in sol.automorphism.images() {
                writeln!(text, "  exp(D): {v} -> {p}").unwrap();
            }
            solutions_json.push(json!({
                "derivation": derivation_json(&sol.derivation, bound)?,
                "automorphism": endomorphism_json(&sol.automorphism),
            }));
        }
    }

    Ok(Output {
        text: text.trim_end().to_string(),
        json: json!({
            "command": "problem2",
            "transform": args.transform,
            "terms": args.terms,
            "ansatz_bound": bound,
            "solutions": solutions_json,
        }),
        exit: 0,
    })
}

fn cmd_kernel(args: TargetArgs) -> Result<Output, CliError> {
    let d = derivation_for_target(&args.transform, args.terms)?;
    let pres = kernel_presentation(&d, args.terms)?;
    let mut text = String::new();
    writeln!(text, "derivation:").unwrap();
    for n in 1..=args.terms {
        writeln!(text, "  D(x{n}) = {}", pres.derivation.image(n)?).unwrap();
    }
    writeln!(text, "generators:").unwrap();
    for (name, poly) in &pres.generators {
        writeln!(text, "  {name} = {poly}").unwrap();
    }
    Ok(Output {
        text: text.trim_end().to_string(),
        json: json!({
            "command": "kernel",
            "transform": args.transform,
            "bound": args.terms,
            "presentation": kernel_presentation_json(&pres)?,
        }),
        exit: 0,
    })
}
