//! `arglogic`: parse argumentation frameworks, encode them into logic,
//! compute labellings, models and equational solutions, and run the theorem
//! checkers.
//!
//! Exit codes: 0 success, 1 a checker found a counterexample, 2 bad input,
//! 3 an enumeration cap was hit, 4 an equational update was undefined.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use arglogic::equational::{grid_solutions, iterate, IterationMode, IterationOutcome, DEFAULT_MAX_ITERS};
use arglogic::logic::{enumerate_models, grid_models};
use arglogic::semantics::{dung_labellings, extension_of};
use arglogic::verify::{fixtures, CorpusSpec, Verifier};
use arglogic::{
    encode_normal, encode_regular, parse_apx, parse_tgf, random_af, ArgumentationFramework, Assignment,
    EquationalSystem, Error, Formula, Limits, LogicSystem, Negation, SemanticsName, TNorm, TheoremId, TruthValue,
    VerificationReport, VerifyParams,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "arglogic", version, about = "Argumentation frameworks, many-valued encodings and equational semantics")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Input format; defaults to tgf for `.tgf` files and apx otherwise
    #[arg(long, global = true, value_enum)]
    format: Option<InputFormat>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
    /// Largest framework for exhaustive enumeration
    #[arg(long, global = true, env = "ARGLOGIC_MAX_ARGS", default_value_t = Limits::default().max_args)]
    max_args: usize,
    /// Largest grid for fuzzy model and solution search
    #[arg(long, global = true, default_value_t = Limits::default().max_grid_points)]
    max_grid_points: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Apx,
    Tgf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Encoding {
    Normal,
    Regular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LogicName {
    Pl2,
    Pl3k,
    Pl3l,
    Fuzzy,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Labellings and extensions of a Dung semantics
    Semantics {
        /// Framework file, or `-` for stdin
        input: String,
        /// conflict-free, admissible, complete, stable, grounded or preferred
        #[arg(short, long)]
        semantics: String,
    },
    /// Print the normal or regular encoding
    Encode {
        input: String,
        #[arg(short, long, value_enum, default_value_t = Encoding::Normal)]
        encoding: Encoding,
    },
    /// Models of an encoding in a logic system
    Models {
        input: String,
        #[arg(short, long, value_enum, default_value_t = Encoding::Normal)]
        encoding: Encoding,
        #[arg(short, long, value_enum)]
        logic: LogicName,
        /// T-norm for fuzzy logic: goedel, lukasiewicz or product
        #[arg(long, default_value = "goedel")]
        tnorm: String,
        /// Negation for fuzzy logic: standard or table(0=1,...,1=0)
        #[arg(long, default_value = "standard")]
        negation: String,
        /// Grid resolution k for fuzzy logic (values 0, 1/k, ..., 1)
        #[arg(long, default_value_t = 4)]
        grid: u32,
    },
    /// Solve an equational system on a grid or by iteration
    Solve {
        input: String,
        /// max, inverse, luka, geometrical or encoded:<negation>:<tnorm>
        #[arg(long)]
        system: String,
        /// Grid resolution for exhaustive search
        #[arg(long, conflicts_with = "iterate")]
        grid: Option<u32>,
        /// Iterate from a start assignment: one value for all (`0`) or `a=1/2,b=0`
        #[arg(long, value_name = "START")]
        iterate: Option<String>,
        /// Iterate in exact rational arithmetic
        #[arg(long, requires = "iterate")]
        exact: bool,
        /// Convergence tolerance for floating-point iteration
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITERS)]
        max_iters: usize,
    },
    /// Run theorem checkers on a framework, the fixtures, or a random corpus
    Verify(VerifyArgs),
    /// Print a random framework in APX
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.25)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Framework file to check (instead of --fixtures or --corpus)
    input: Option<String>,
    /// Check every theorem
    #[arg(long, conflicts_with = "theorem")]
    all: bool,
    /// Theorem to check, e.g. complete-eq-ec1-l; repeatable or comma-separated
    #[arg(long, value_delimiter = ',')]
    theorem: Vec<String>,
    /// Run on the built-in fixtures
    #[arg(long, conflicts_with_all = ["input", "corpus"])]
    fixtures: bool,
    /// Run on a random corpus: seed=7 count=200 nmax=8 p={0.1,0.25,0.5}
    #[arg(long, num_args = 0.., conflicts_with = "input")]
    corpus: Option<Vec<String>>,
    /// Grid resolution for fuzzy checks
    #[arg(long, default_value_t = 4)]
    grid_k: u32,
    /// Largest grid per fuzzy check before the resolution is lowered
    #[arg(long, default_value_t = 20_000)]
    grid_budget: u128,
    /// Restrict fuzzy checks to these t-norms
    #[arg(long, value_delimiter = ',')]
    tnorm: Vec<String>,
    #[arg(long, default_value = "standard")]
    negation: String,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => 3,
            Error::GeometricalSingularity { .. } => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CmdResult = Result<u8, Failure>;

/// Appends one line to an output buffer.
macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        writeln!($out, $($arg)*).expect("writing to a String cannot fail");
    }};
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    // A closed pipe on stdout (`arglogic ... | head`) is not an error.
    if let Err(e) = io::stdout().write_all(out.as_bytes()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn limits(g: &Global) -> Limits {
    Limits {
        max_args: g.max_args,
        max_grid_points: g.max_grid_points,
    }
}

fn read_af(input: &str, format: Option<InputFormat>) -> Result<ArgumentationFramework, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_error(format!("cannot read stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(input).map_err(|e| input_error(format!("cannot read {input}: {e}")))?
    };
    let format = format.unwrap_or_else(|| {
        let tgf = Path::new(input).extension().is_some_and(|e| e.eq_ignore_ascii_case("tgf"));
        if tgf {
            InputFormat::Tgf
        } else {
            InputFormat::Apx
        }
    });
    Ok(match format {
        InputFormat::Apx => parse_apx(&text)?,
        InputFormat::Tgf => parse_tgf(&text)?,
    })
}

fn print_json(out: &mut String, v: &Value) {
    emit!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: Cli, out: &mut String) -> CmdResult {
    let g = &cli.global;
    let lim = limits(g);
    match cli.command {
        Command::Semantics { input, semantics } => {
            let s: SemanticsName = semantics.parse()?;
            let af = read_af(&input, g.format)?;
            let labs = dung_labellings(&af, s, &lim)?;
            let extensions: Vec<Vec<String>> = labs
                .iter()
                .map(|l| extension_of(&af, l).iter().map(|a| a.name().to_string()).collect())
                .collect();
            match g.output {
                OutputFormat::Json => print_json(out, &json!({
                    "semantics": s.as_str(),
                    "labellings": labs.iter().map(|l| l.to_json(&af)).collect::<Vec<_>>(),
                    "extensions": extensions,
                })),
                OutputFormat::Text => {
                    emit!(out, "{} {} labelling(s)", labs.len(), s);
                    for (l, e) in labs.iter().zip(&extensions) {
                        emit!(out, "{}  {{{}}}", l.display(&af), e.join(", "));
                    }
                }
            }
            Ok(0)
        }

        Command::Encode { input, encoding } => {
            let af = read_af(&input, g.format)?;
            let f = encode(&af, encoding);
            match g.output {
                OutputFormat::Json => print_json(out, &json!({
                    "encoding": encoding_name(encoding),
                    "formula": f.to_string(),
                    "ast": f.to_json(),
                })),
                OutputFormat::Text => emit!(out, "{f}"),
            }
            Ok(0)
        }

        Command::Models {
            input,
            encoding,
            logic,
            tnorm,
            negation,
            grid,
        } => {
            let af = read_af(&input, g.format)?;
            let f = encode(&af, encoding);
            let (ls, models) = match logic {
                LogicName::Pl2 => (LogicSystem::Pl2, None),
                LogicName::Pl3k => (LogicSystem::Pl3K, None),
                LogicName::Pl3l => (LogicSystem::Pl3L, None),
                LogicName::Fuzzy => {
                    let ls = LogicSystem::fuzzy(negation.parse::<Negation>()?, tnorm.parse::<TNorm>()?);
                    let models = grid_models(&f, &af, &ls, grid, &lim)?;
                    (ls, Some(models))
                }
            };
            let models = match models {
                Some(m) => m,
                None => enumerate_models(&f, &af, &ls, &lim)?,
            };
            match g.output {
                OutputFormat::Json => {
                    let mut v = json!({
                        "encoding": encoding_name(encoding),
                        "logic": ls.name(),
                        "models": models.iter().map(|m| m.to_json(&af)).collect::<Vec<_>>(),
                    });
                    if logic == LogicName::Fuzzy {
                        v["grid_k"] = json!(grid);
                    }
                    print_json(out, &v);
                }
                OutputFormat::Text => {
                    emit!(out, "{} model(s) of the {} encoding in {}", models.len(), encoding_name(encoding), ls.name());
                    for m in &models {
                        emit!(out, "{}", m.display(&af));
                    }
                }
            }
            Ok(0)
        }

        Command::Solve {
            input,
            system,
            grid,
            iterate: start,
            exact,
            tol,
            max_iters,
        } => {
            let sys: EquationalSystem = system.parse()?;
            let af = read_af(&input, g.format)?;
            match start {
                None => {
                    let k = grid.unwrap_or(4);
                    let sols = grid_solutions(&sys, &af, k, &lim)?;
                    match g.output {
                        OutputFormat::Json => print_json(out, &json!({
                            "system": sys.to_string(),
                            "grid_k": k,
                            "solutions": sols.iter().map(|s| s.to_json(&af)).collect::<Vec<_>>(),
                        })),
                        OutputFormat::Text => {
                            emit!(out, "{} grid solution(s) of {sys} at k={k}", sols.len());
                            for s in &sols {
                                emit!(out, "{}", s.display(&af));
                            }
                        }
                    }
                }
                Some(start) => {
                    if !(tol.is_finite() && tol >= 0.0) {
                        return Err(input_error(format!("tolerance must be a non-negative number, got {tol}")));
                    }
                    let start = parse_start(&af, &start)?;
                    let mode = if exact { IterationMode::Exact } else { IterationMode::Float(tol) };
                    let outcome = iterate(&sys, &af, &start, max_iters, mode)?;
                    print_outcome(out, g.output, &sys, &af, &outcome);
                }
            }
            Ok(0)
        }

        Command::Verify(args) => verify(g, lim, args, out),

        Command::Generate { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(input_error(format!("p must lie in [0, 1], got {p}")));
            }
            out.push_str(&random_af(n, p, seed).to_apx());
            Ok(0)
        }
    }
}

fn encode(af: &ArgumentationFramework, e: Encoding) -> Formula {
    match e {
        Encoding::Normal => encode_normal(af),
        Encoding::Regular => encode_regular(af),
    }
}

fn encoding_name(e: Encoding) -> &'static str {
    match e {
        Encoding::Normal => "normal",
        Encoding::Regular => "regular",
    }
}

/// `0.5` (every argument) or `a=1/2,b=0` (every argument named once).
fn parse_start(af: &ArgumentationFramework, s: &str) -> Result<Assignment, Failure> {
    if !s.contains('=') {
        let v: TruthValue = s.trim().parse()?;
        return Ok(Assignment::uniform(af.len(), v));
    }
    let mut values: Vec<Option<TruthValue>> = vec![None; af.len()];
    for pair in s.split(',') {
        let (name, value) = pair
            .split_once('=')
            .ok_or_else(|| input_error(format!("`{pair}` is not name=value")))?;
        let arg = af
            .find(name.trim())
            .ok_or_else(|| Failure::from(Error::UndeclaredArgument(name.trim().to_string())))?;
        values[arg.index()] = Some(value.trim().parse()?);
    }
    let missing: Vec<&str> = af
        .arguments()
        .iter()
        .filter(|a| values[a.index()].is_none())
        .map(|a| a.name())
        .collect();
    if !missing.is_empty() {
        return Err(input_error(format!("start value missing for {}", missing.join(", "))));
    }
    Ok(Assignment::new(values.into_iter().map(|v| v.expect("checked")).collect()))
}

fn print_outcome(out: &mut String, format: OutputFormat, sys: &EquationalSystem, af: &ArgumentationFramework, o: &IterationOutcome) {
    match (format, o) {
        (OutputFormat::Json, IterationOutcome::FixedPoint { values, steps }) => print_json(out, &json!({
            "system": sys.to_string(),
            "outcome": "fixed-point",
            "values": values.to_json(af),
            "steps": steps,
        })),
        (OutputFormat::Json, IterationOutcome::NonConvergent { last, previous, period, iterations }) => {
            print_json(out, &json!({
                "system": sys.to_string(),
                "outcome": "non-convergent",
                "last": last.to_json(af),
                "previous": previous.to_json(af),
                "period": period,
                "iterations": iterations,
            }))
        }
        (OutputFormat::Text, IterationOutcome::FixedPoint { values, steps }) => {
            emit!(out, "fixed point after {steps} step(s): {}", values.to_json(af));
        }
        (OutputFormat::Text, IterationOutcome::NonConvergent { last, previous, period, iterations }) => {
            match period {
                Some(p) => emit!(out, "no convergence: period-{p} cycle after {iterations} iteration(s)"),
                None => emit!(out, "no convergence after {iterations} iteration(s)"),
            }
            emit!(out, "  last:     {}", last.to_json(af));
            emit!(out, "  previous: {}", previous.to_json(af));
        }
    }
}

/// `seed=7 count=200 nmax=8 p={0.1,0.25,0.5}`; omitted keys keep their defaults.
fn parse_corpus(items: &[String]) -> Result<CorpusSpec, Failure> {
    let mut spec = CorpusSpec::default();
    for item in items.iter().flat_map(|s| s.split_whitespace()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| input_error(format!("corpus parameter `{item}` is not key=value")))?;
        let bad = |what: &str| input_error(format!("corpus parameter {key}: {what} `{value}`"));
        match key {
            "seed" => spec.seed = value.parse().map_err(|_| bad("not an integer"))?,
            "count" => spec.count = value.parse().map_err(|_| bad("not an integer"))?,
            "nmax" | "n_max" => spec.n_max = value.parse().map_err(|_| bad("not an integer"))?,
            "p" => {
                let body = value.trim_start_matches('{').trim_end_matches('}');
                spec.p_list = body
                    .split(',')
                    .map(|x| x.trim().parse::<f64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad("not a list of numbers"))?;
            }
            _ => return Err(input_error(format!("unknown corpus parameter `{key}`"))),
        }
    }
    if spec.n_max == 0 {
        return Err(input_error("corpus nmax must be at least 1"));
    }
    if spec.p_list.is_empty() || spec.p_list.iter().any(|p| !(0.0..=1.0).contains(p)) {
        return Err(input_error("corpus p values must lie in [0, 1]"));
    }
    Ok(spec)
}

fn verify(g: &Global, lim: Limits, args: VerifyArgs, out: &mut String) -> CmdResult {
    let ids: Vec<TheoremId> = if args.all {
        TheoremId::ALL.to_vec()
    } else if args.theorem.is_empty() {
        return Err(input_error("give --all or at least one --theorem"));
    } else {
        args.theorem.iter().map(|t| t.parse()).collect::<Result<_, _>>()?
    };
    let tnorms = if args.tnorm.is_empty() {
        None
    } else {
        Some(args.tnorm.iter().map(|t| t.parse()).collect::<Result<Vec<TNorm>, _>>()?)
    };
    let params = VerifyParams {
        grid_k: args.grid_k.max(1),
        grid_budget: args.grid_budget,
        tnorms,
        negation: args.negation.parse()?,
        limits: lim,
        ..VerifyParams::default()
    };
    let (source, afs) = match (&args.input, args.fixtures, &args.corpus) {
        (Some(input), _, _) => (json!({ "input": input }), vec![read_af(input, g.format)?]),
        (None, true, _) => (json!("fixtures"), fixtures().into_iter().map(|(_, af)| af).collect()),
        (None, false, Some(items)) => {
            let spec = parse_corpus(items)?;
            let source = json!({ "corpus": { "seed": spec.seed, "count": spec.count, "nmax": spec.n_max, "p": spec.p_list } });
            (source, arglogic::verify::corpus(&spec))
        }
        (None, false, None) => return Err(input_error("give an input file, --fixtures or --corpus")),
    };
    let reports = Verifier::new(params).check_all(&ids, &afs)?;
    let pass = reports.iter().all(VerificationReport::passed);
    match g.output {
        OutputFormat::Json => print_json(out, &json!({
            "source": source,
            "frameworks": afs.len(),
            "pass": pass,
            "reports": reports.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
        })),
        OutputFormat::Text => {
            for r in &reports {
                emit!(out, 
                    "{:<24} {:<4} {:>10} instances {:>8} ms  {}",
                    r.theorem.as_str(),
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.instances_checked,
                    r.elapsed.as_millis(),
                    r.coverage
                );
                for c in &r.counterexamples {
                    emit!(out, "    {}: af {} witnesses {}", c.clause, c.af, Value::from(c.witnesses.clone()));
                }
                if r.theorem == TheoremId::Ec2LCounterexample {
                    if let (Some(a), Some(v)) = (r.metadata.get("assignment"), r.metadata.get("ec2_value")) {
                        emit!(out, "    witness {a}: ec2 value {v}, complete = {}", r.metadata["complete"]);
                    }
                }
            }
            emit!(out, "{}", if pass { "all checks passed" } else { "counterexamples found" });
        }
    }
    Ok(if pass { 0 } else { 1 })
}
