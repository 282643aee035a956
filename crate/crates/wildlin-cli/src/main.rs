//! `wildlin` — build ratio-encoded models, run their verification
//! suites, and evaluate the defining formulas from the shell.
//!
//! Exit codes are part of the interface: `0` everything passed, `1` a
//! verification check failed, `2` usage or parse error, `3` a literal
//! evaluation ran out of quantifier budget.

mod verify;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, Sign};
use wildlin::contfrac::{cf_expand, cf_value, convergents, ContinuedFraction, CoprimePair};
use wildlin::encoder::{build_squaring_model, EncodedModel, TargetSequence};
use wildlin::logic::{
    build_mu2, build_mu_family, eval::DEFAULT_BUDGET, parse, EvalOptions, Evaluator, Formula,
    LogicError, PiForm,
};
use wildlin::model::{mu_eval, predicate_sets, sigma_eval, TwoScalarSemantics};
use wildlin::serialize::{LoadedModel, ModelDocument};
use wildlin::{build_ip_instance, check_ip_pattern};

#[derive(Parser)]
#[command(
    name = "wildlin",
    version,
    about = "Ratio-encoded multiplication: build, verify, evaluate"
)]
struct Cli {
    /// Quantifier-step budget per literal formula evaluation.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_name = "N")]
    budget: u64,

    /// Thread-pool size for the parallel suites (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Omit the timestamp line from reports, for byte-identical output.
    #[arg(long, global = true)]
    no_timestamp: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a model and write its document.
    Encode(EncodeArgs),
    /// Run invariant suites against a model document.
    Verify(VerifyArgs),
    /// Evaluate a formula at a point.
    Eval(EvalArgs),
    /// Continued-fraction helpers for ad-hoc ratios.
    Cf(CfArgs),
    /// Realize subset patterns through the defined multiplication.
    Ip(IpArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["l", "seq"])))]
struct EncodeArgs {
    /// Encode the squaring model of this size: k ↦ k² for k ≤ 2L.
    #[arg(long = "L", value_name = "N")]
    l: Option<u64>,

    /// Encode the whitespace-separated residues in this file instead.
    #[arg(long, value_name = "FILE", requires = "prime")]
    seq: Option<PathBuf>,

    /// Modulus for --seq; must be prime and larger than every residue.
    #[arg(long, value_name = "P", requires = "seq")]
    prime: Option<u64>,

    /// Where to write the model document (the summary prints either way).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Model document to verify; the cf suite runs without one.
    #[arg(long, value_name = "FILE")]
    model: Option<PathBuf>,

    /// Which invariant suite to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Suite {
    /// Continued-fraction tables and the best-approximation oracle.
    Cf,
    /// Constant recovery, stairstep identities, quantifier bounds.
    TwoScalar,
    /// Semantic multiplication against integer products.
    Mult,
    /// Literal formulas against the semantic evaluators (budgeted).
    Equiv,
    /// Every suite the given inputs support.
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Cf => "cf",
            Suite::TwoScalar => "two-scalar",
            Suite::Mult => "mult",
            Suite::Equiv => "equiv",
            Suite::All => "all",
        }
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["formula", "builtin"])))]
struct EvalArgs {
    /// Model document supplying the scalar constants.
    #[arg(long, value_name = "FILE")]
    model: PathBuf,

    /// File containing a formula in the crate's grammar.
    #[arg(long, value_name = "FILE")]
    formula: Option<PathBuf>,

    /// One of the built formulas: gamma, v, v0, v1, pi, sigma, mu, mu2.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,

    /// Values for the free variables, e.g. "x=1,y=2,z=2".
    #[arg(long, default_value = "", value_name = "VARS")]
    env: String,

    /// Evaluation path.
    #[arg(long, value_enum, default_value_t = Mode::Literal)]
    mode: Mode,

    /// Read a file formula's scalar slots as (alpha, delta) instead of
    /// (a, b, c).
    #[arg(long, conflicts_with = "builtin")]
    two_scalar: bool,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Literal,
    Semantic,
}

#[derive(Args)]
struct CfArgs {
    #[command(subcommand)]
    command: CfCommand,
}

#[derive(Subcommand)]
enum CfCommand {
    /// Continued-fraction coefficients of a/b.
    Expand { a: String, b: String },
    /// The convergent table of a/b, prefix slots included.
    Convergents { a: String, b: String },
    /// Rebuild the ratio from a coefficient list.
    Value {
        #[arg(required = true)]
        coeffs: Vec<String>,
    },
}

#[derive(Args)]
struct IpArgs {
    /// How many primes to shatter (1..=3; 4 needs --force).
    #[arg(long, value_name = "N")]
    n: usize,

    /// Allow n = 4, which encodes L = 210.
    #[arg(long)]
    force: bool,
}

/// What a completed command reports back through the exit code.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    Pass,
    Fail,
    Budget,
}

impl Outcome {
    fn code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Budget => 3,
        }
    }

    /// Combine suite outcomes: a hard failure outranks starvation.
    pub fn worst(self, other: Outcome) -> Outcome {
        use Outcome::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Budget, _) | (_, Budget) => Budget,
            _ => Pass,
        }
    }
}

/// Die quietly when the reader of a pipe goes away (`verify ... | head`),
/// instead of panicking on the failed write.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            process::exit(code);
        }
    };

    if let Some(threads) = cli.threads {
        if let Err(err) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: --threads {threads}: {err}");
            process::exit(2);
        }
    }

    let result = match &cli.command {
        Command::Encode(args) => cmd_encode(args),
        Command::Verify(args) => verify::run(args, cli.budget, cli.no_timestamp),
        Command::Eval(args) => cmd_eval(args, cli.budget),
        Command::Cf(args) => cmd_cf(args),
        Command::Ip(args) => cmd_ip(args),
    };

    match result {
        Ok(outcome) => process::exit(outcome.code()),
        Err(message) => {
            eprintln!("error: {message}");
            process::exit(2);
        }
    }
}

/// Read, parse, and fully reconstruct a model document.  Any layer of
/// failure is a usage-grade error here; `verify` splits the layers so
/// reconstruction mismatches count as verification failures instead.
fn load_model(path: &Path) -> Result<LoadedModel, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    ModelDocument::from_json(&text)
        .and_then(ModelDocument::into_model)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_env(text: &str) -> Result<BTreeMap<String, BigInt>, String> {
    let mut vars = BTreeMap::new();
    for item in text.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("env entry `{item}` is not name=value"))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(format!("env entry `{item}` has an empty name"));
        }
        let value: BigInt = value
            .trim()
            .parse()
            .map_err(|e| format!("env entry `{item}`: {e}"))?;
        if value.sign() == Sign::Minus {
            return Err(format!("env entry `{item}`: values are nonnegative"));
        }
        vars.insert(name.to_string(), value);
    }
    Ok(vars)
}

fn cmd_encode(args: &EncodeArgs) -> Result<Outcome, String> {
    let (label, doc, core) = if let Some(l) = args.l {
        let model = build_squaring_model(l).map_err(|e| format!("encode: {e}"))?;
        let doc = ModelDocument::from_wild(&model);
        (format!("squaring, L = {l}"), doc, model.core().clone())
    } else {
        let path = args.seq.as_ref().expect("clap enforces the source group");
        let prime = args.prime.expect("clap ties --prime to --seq");
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let mut z = Vec::new();
        for token in text.split_whitespace() {
            z.push(
                token
                    .parse::<BigInt>()
                    .map_err(|e| format!("sequence entry `{token}`: {e}"))?,
            );
        }
        let seq =
            TargetSequence::new(z, BigInt::from(prime)).map_err(|e| format!("encode: {e}"))?;
        let core = EncodedModel::new(seq).map_err(|e| format!("encode: {e}"))?;
        let doc = ModelDocument::from_encoded(&core);
        (
            format!("sequence, {} residues", core.seq().len()),
            doc,
            core,
        )
    };

    println!("model: {label}");
    println!("c = {}", core.c());
    for (name, value) in [
        ("a", core.a()),
        ("b", core.b()),
        ("alpha", core.alpha()),
        ("delta", core.delta()),
    ] {
        println!("{name}: {} bits", value.bits());
    }
    if let Some(out) = &args.out {
        fs::write(out, doc.to_json()).map_err(|e| format!("{}: {e}", out.display()))?;
        println!("wrote {}", out.display());
    }
    Ok(Outcome::Pass)
}

fn cmd_eval(args: &EvalArgs, budget: u64) -> Result<Outcome, String> {
    let loaded = load_model(&args.model)?;
    let core = loaded.core();
    let vars = parse_env(&args.env)?;

    match args.mode {
        Mode::Semantic => {
            let name = args
                .builtin
                .as_deref()
                .ok_or("semantic mode evaluates the built formulas only; pass --builtin NAME")?;
            let value = semantic_eval(core, name, &vars)?;
            println!("{value}");
            Ok(Outcome::Pass)
        }
        Mode::Literal => {
            let (formula, scalars) = literal_target(core, args)?;
            let mut ev = Evaluator::new(scalars, EvalOptions::with_budget(budget));
            match ev.eval(&formula, &vars) {
                Ok(value) => {
                    println!("{value}");
                    Ok(Outcome::Pass)
                }
                Err(LogicError::BudgetExceeded { var, limit }) => {
                    eprintln!("budget: {limit} quantifier steps exhausted at `{var}`");
                    Ok(Outcome::Budget)
                }
                Err(other) => Err(format!("eval: {other}")),
            }
        }
    }
}

fn literal_target(core: &EncodedModel, args: &EvalArgs) -> Result<(Formula, Vec<BigInt>), String> {
    if let Some(name) = &args.builtin {
        if name == "mu2" {
            return Ok((build_mu2(), core.view().scalars()));
        }
        let family = build_mu_family(PiForm::Corrected);
        let formula = match name.as_str() {
            "gamma" => family.gamma,
            "v" => family.v,
            "v0" => family.v0,
            "v1" => family.v1,
            "pi" => family.pi,
            "sigma" => family.sigma,
            "mu" => family.mu,
            other => {
                return Err(format!(
                    "unknown builtin `{other}`; have gamma, v, v0, v1, pi, sigma, mu, mu2"
                ))
            }
        };
        Ok((formula, core.three_scalars()))
    } else {
        let path = args
            .formula
            .as_ref()
            .expect("clap enforces the target group");
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let formula = parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let scalars = if args.two_scalar {
            core.view().scalars()
        } else {
            core.three_scalars()
        };
        Ok((formula, scalars))
    }
}

fn semantic_eval(
    core: &EncodedModel,
    name: &str,
    vars: &BTreeMap<String, BigInt>,
) -> Result<bool, String> {
    let get = |var: &str| {
        vars.get(var)
            .cloned()
            .ok_or_else(|| format!("builtin `{name}` needs `{var}` in --env"))
    };
    match name {
        "v" | "v0" | "v1" => {
            let v = get("v")?;
            let sets = predicate_sets(core);
            Ok(match name {
                "v" => sets.v.contains(&v),
                "v0" => sets.v0.contains(&v),
                _ => sets.v1.contains(&v),
            })
        }
        "pi" => {
            let pair = (get("v")?, get("vp")?);
            Ok(predicate_sets(core).pairs.contains(&pair))
        }
        "sigma" => Ok(sigma_eval(core, &get("x")?, &get("y")?)),
        "mu" => Ok(mu_eval(core, &get("x")?, &get("y")?, &get("z")?)),
        "mu2" => {
            let semantics = TwoScalarSemantics::new(&core.view()).map_err(|e| e.to_string())?;
            Ok(semantics.mu2_eval(&get("x")?, &get("y")?, &get("z")?))
        }
        "gamma" => Err("gamma has no semantic evaluator; use --mode literal".into()),
        other => Err(format!(
            "unknown builtin `{other}`; have gamma, v, v0, v1, pi, sigma, mu, mu2"
        )),
    }
}

fn parse_ratio(a: &str, b: &str) -> Result<CoprimePair, String> {
    let a: BigInt = a.parse().map_err(|e| format!("a = `{a}`: {e}"))?;
    let b: BigInt = b.parse().map_err(|e| format!("b = `{b}`: {e}"))?;
    CoprimePair::new(a, b).map_err(|e| format!("cf: {e}"))
}

fn cmd_cf(args: &CfArgs) -> Result<Outcome, String> {
    match &args.command {
        CfCommand::Expand { a, b } => {
            let pair = parse_ratio(a, b)?;
            let cf = cf_expand(&pair);
            let list: Vec<String> = cf.coeffs().iter().map(|c| c.to_string()).collect();
            println!("[{}]", list.join(", "));
        }
        CfCommand::Convergents { a, b } => {
            let pair = parse_ratio(a, b)?;
            let table =
                convergents(&cf_expand(&pair), Some(&pair)).map_err(|e| format!("cf: {e}"))?;
            println!("{:>4} {:>14} {:>14} {:>14}", "i", "u", "v", "r");
            for i in -2..=table.n() {
                println!(
                    "{:>4} {:>14} {:>14} {:>14}",
                    i,
                    table.u(i),
                    table.v(i),
                    table.r(i)
                );
            }
        }
        CfCommand::Value { coeffs } => {
            let list = coeffs
                .iter()
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|e| format!("coefficient `{t}`: {e}"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let cf = ContinuedFraction::new(list).map_err(|e| format!("cf: {e}"))?;
            let pair = cf_value(&cf).map_err(|e| format!("cf: {e}"))?;
            println!("{}/{}", pair.a(), pair.b());
        }
    }
    Ok(Outcome::Pass)
}

fn cmd_ip(args: &IpArgs) -> Result<Outcome, String> {
    if args.n >= 4 {
        eprintln!(
            "warning: n = {} multiplies all of 2, 3, 5, 7 into L = 210; expect a large encoding",
            args.n
        );
    }
    let instance = build_ip_instance(args.n, args.force).map_err(|e| format!("ip: {e}"))?;
    print!("{instance}");
    let ok = check_ip_pattern(&instance);
    println!("pattern: {}", if ok { "PASS" } else { "FAIL" });
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}
