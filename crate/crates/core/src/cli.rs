//! Command-line front end. Every subcommand prints one JSON object with
//! sorted keys and a top-level `schema: 1`.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
//! 3 budget exhausted.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::am::{characterization, classic_am, generalized_am, Budgets};
use crate::boolfn::{bracken_tan_tan, gold, kasami, VectorialFunction};
use crate::code::{LinearCode, WeightDistribution};
use crate::constructions::{
    code_from_bent_support, code_from_vectorial, pair_lambda_histogram, rm1, steiner_from_function, ternary_code,
    ConstructionReport,
};
use crate::designs::{dual_support_design, support_design, Design};
use crate::error::{Error, Result};
use crate::gf::FieldTable;
use crate::moments::{moment_check_counts, solve_distribution};
use crate::predictor::{punctured_predict_counts, shortened_predict_counts, table_predict, Family, PredictedDistribution};
use crate::{repro, DEFAULT_CODEWORD_BUDGET, DEFAULT_DESIGN_STEPS};

#[derive(Parser, Debug)]
#[command(name = "codesign", version, about = "Codes from Boolean functions, weight distributions and t-designs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Maximum codewords visited by one enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_CODEWORD_BUDGET, value_parser = positive)]
    budget_codewords: u128,
    /// Maximum elementary steps for one design check.
    #[arg(long, global = true, default_value_t = DEFAULT_DESIGN_STEPS, value_parser = positive)]
    budget_design_steps: u128,
    /// Seed for randomized witnesses.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the produced artifact (or the JSON, when there is none) here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

fn positive(s: &str) -> std::result::Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("budget must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite field tables.
    #[command(subcommand)]
    Field(FieldCmd),
    /// Linear codes read from a code file.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Power moments over distribution JSON.
    #[command(subcommand)]
    Moments(MomentsCmd),
    /// Support designs.
    #[command(subcommand)]
    Design(DesignCmd),
    /// Shortened/punctured and tabulated distributions.
    #[command(subcommand)]
    Predict(PredictCmd),
    /// Vectorial Boolean functions.
    #[command(subcommand, name = "fn")]
    Function(FnCmd),
    /// Code constructions.
    #[command(subcommand)]
    Build(BuildCmd),
    /// Steiner system from a vectorial function.
    Steiner(SourceArgs),
    /// Assmus-Mattson checks.
    #[command(subcommand)]
    Am(AmCmd),
    /// Reproduce the worked examples.
    #[command(subcommand)]
    Repro(ReproCmd),
}

#[derive(Args, Debug)]
struct FieldArg {
    /// `p m [c_m ... c_0]`; without coefficients the default modulus is used.
    #[arg(long)]
    field: String,
}

#[derive(Subcommand, Debug)]
enum FieldCmd {
    /// Modulus, generator and size.
    Info(FieldArg),
    /// `Tr_{p^m / p^d}(x)`.
    Trace {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        x: u32,
        /// Degree of the target subfield.
        #[arg(long, default_value_t = 1)]
        to: u32,
    },
    /// Product of two element codes.
    Mul {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
}

#[derive(Args, Debug)]
struct CodeArg {
    /// Code file (`q nu m` header, then generator rows); `-` reads stdin.
    #[arg(long)]
    code: PathBuf,
}

#[derive(Subcommand, Debug)]
enum CodeCmd {
    /// Weight distribution by enumeration.
    Wdist(CodeArg),
    /// Dual code and its weight distribution.
    Dual(CodeArg),
    /// Shorten on the given coordinates.
    Shorten {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long, value_delimiter = ',')]
        coords: Vec<usize>,
    },
    /// Puncture on the given coordinates.
    Puncture {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long, value_delimiter = ',')]
        coords: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum MomentsCmd {
    /// Checks the moments `t = 0..=t-max` for a primal/dual pair.
    Check {
        /// Primal distribution JSON.
        #[arg(long)]
        primal: PathBuf,
        /// Dual distribution JSON; a prefix `A^perp_0..` suffices.
        #[arg(long)]
        dual: PathBuf,
        #[arg(long, default_value_t = 5)]
        t_max: u32,
    },
    /// Solves for the counts at the unknown weights.
    Solve {
        #[arg(long)]
        nu: usize,
        /// Dimension.
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long, value_delimiter = ',')]
        unknown: Vec<usize>,
        /// Known nonzero counts as `weight:count`; `0:1` is implied.
        #[arg(long, value_delimiter = ',')]
        known: Vec<String>,
        /// `A^perp_1, A^perp_2, ...`
        #[arg(long, value_delimiter = ',')]
        dual_prefix: Vec<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum DesignCmd {
    /// Supports of the codewords of one weight.
    Extract {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        weight: usize,
        /// Use the dual code, found by low-weight search.
        #[arg(long)]
        dual: bool,
    },
    /// Checks a design JSON for the t-design property.
    Verify {
        #[arg(long)]
        design: PathBuf,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Subcommand, Debug)]
enum PredictCmd {
    /// Distribution of the code shortened on any `t` coordinates.
    Shorten {
        /// Distribution JSON of the parent code.
        #[arg(long)]
        dist: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Distribution of the code punctured on any `t` coordinates.
    Puncture {
        #[arg(long)]
        dist: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// A closed-form table.
    Table {
        /// bent_code, bent_short1, ..., vbent_punct2, two_valued_code
        #[arg(long)]
        family: String,
        /// Two integers, e.g. `6,36` for (n, nu_f).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        params: Vec<u64>,
    },
}

#[derive(Args, Debug, Clone)]
struct SourceArgs {
    /// Function table file (`n l` header, then 2^n hex outputs).
    #[arg(long = "fn", conflicts_with = "f")]
    file: Option<PathBuf>,
    /// Field for `--f`, e.g. `2 6`.
    #[arg(long)]
    field: Option<String>,
    /// `e=E,k=K,l=L`: `x -> Tr_{2^n/2^L}(alpha^K x^E)`; `k` defaults to 0,
    /// `l` to n.
    #[arg(long)]
    f: Option<String>,
}

#[derive(Subcommand, Debug)]
enum FnCmd {
    /// Walsh spectrum over the nonzero components.
    Walsh(SourceArgs),
    /// Differential spectrum and the fourth-moment test.
    Diffspec(SourceArgs),
    /// A function table from a named family.
    Family {
        /// kasami, gold, btt or power.
        kind: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        e: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum BuildCmd {
    /// C(D_f) over the support of a Boolean function.
    BentSupport(SourceArgs),
    /// C(F) over all of GF(2^n).
    Vectorial(SourceArgs),
    /// The ternary code for odd m.
    Ternary {
        #[arg(long)]
        m: u32,
    },
    /// First-order Reed-Muller code.
    Rm1 {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand, Debug)]
enum AmCmd {
    /// Weight-count criterion.
    Classic {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        t: usize,
    },
    /// Generalized criterion for a weight set S.
    Generalized {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        t: usize,
        #[arg(long = "S", value_delimiter = ',', required = true)]
        s: Vec<usize>,
    },
    /// Shortened/punctured invariance statements.
    Characterize {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ReproCmd {
    /// Runs the acceptance criteria and prints a pass/fail table.
    PaperExamples {
        /// Criterion subset name or number.
        #[arg(long)]
        subset: Option<String>,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Run = std::result::Result<(), Failure>;

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(()) => 0,
        Err(Failure::Mismatch) => 1,
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => 3,
                _ => 2,
            }
        }
    }
}

fn budgets(g: &Global) -> Budgets {
    Budgets { codewords: g.budget_codewords, design_steps: g.budget_design_steps }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| Failure::Io(e.to_string()))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Run {
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> std::result::Result<Value, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Lib(Error::Parse(format!("{}: {e}", path.display()))))
}

fn load_code(arg: &CodeArg) -> std::result::Result<LinearCode, Failure> {
    Ok(LinearCode::from_file_str(&read(&arg.code)?)?)
}

/// Prints `value` with `schema: 1`, or writes it to `--out` when the
/// command has no other artifact.
fn emit(g: &Global, mut value: Value, artifact: bool) -> Run {
    value["schema"] = json!(1);
    let text = serde_json::to_string_pretty(&value).expect("JSON serializes") + "\n";
    match (&g.out, artifact) {
        (Some(path), false) => write(path, &text),
        _ => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Writes an artifact to `--out`, or returns it for embedding in the JSON.
fn artifact(g: &Global, text: String) -> std::result::Result<Value, Failure> {
    match &g.out {
        Some(path) => {
            write(path, &text)?;
            Ok(json!({ "path": path.display().to_string() }))
        }
        None => Ok(json!(text)),
    }
}

/// Integer as a JSON number when it fits in 64 bits, otherwise a string.
pub fn big(n: &BigInt) -> Value {
    match (n.to_u64(), n.to_i64()) {
        (Some(v), _) => json!(v),
        (None, Some(v)) => json!(v),
        _ => json!(n.to_string()),
    }
}

fn big_u(n: &BigUint) -> Value {
    n.to_u64().map_or_else(|| json!(n.to_string()), |v| json!(v))
}

pub fn distribution_json(wd: &WeightDistribution) -> Value {
    let size = BigInt::from(wd.q).pow(wd.dimension as u32);
    json!({
        "q": wd.q,
        "nu": wd.length(),
        "m": wd.dimension,
        "counts": wd.counts,
        "size": big(&size),
        "d": wd.minimum_distance(),
        "enumerator": wd.to_string(),
    })
}

fn predicted_json(p: &PredictedDistribution) -> Value {
    json!({
        "q": p.q,
        "nu": p.length(),
        "m": p.dimension,
        "d": p.min_distance,
        "counts": p.counts.iter().map(big_u).collect::<Vec<_>>(),
        "enumerator": p.to_string(),
        "provenance": p.provenance,
    })
}

/// Reads `{q, nu, m, counts}`; counts may be numbers or decimal strings.
fn parse_distribution(v: &Value) -> Result<(u64, usize, usize, Vec<BigInt>)> {
    let field = |k: &str| v.get(k).and_then(Value::as_u64).ok_or_else(|| Error::Parse(format!("distribution needs `{k}`")));
    let q = field("q")?;
    let m = field("m")? as usize;
    let counts = v
        .get("counts")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("distribution needs `counts`".into()))?
        .iter()
        .map(|c| match c {
            Value::Number(n) => n.as_u64().map(BigInt::from).ok_or_else(|| Error::Parse(format!("count {n}"))),
            Value::String(s) => s.parse::<BigInt>().map_err(|e| Error::Parse(format!("count `{s}`: {e}"))),
            other => Err(Error::Parse(format!("count {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let nu = v.get("nu").and_then(Value::as_u64).map_or(counts.len().saturating_sub(1), |n| n as usize);
    Ok((q, nu, m, counts))
}

fn parse_source(src: &SourceArgs) -> std::result::Result<VectorialFunction, Failure> {
    if let Some(path) = &src.file {
        return Ok(VectorialFunction::from_file_str(&read(path)?)?);
    }
    let (Some(field), Some(expr)) = (&src.field, &src.f) else {
        return Err(Failure::Lib(Error::Parameter("give --fn FILE, or --field and --f".into())));
    };
    let field = Arc::new(FieldTable::from_text(field)?);
    let (mut e, mut k, mut l) = (None, 0u64, field.degree());
    for part in expr.split(',') {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("`{part}` is not key=value")))?;
        let val: u64 = val.trim().parse().map_err(|err| Error::Parse(format!("`{part}`: {err}")))?;
        match key.trim() {
            "e" => e = Some(val),
            "k" => k = val,
            "l" => l = val as u32,
            other => return Err(Failure::Lib(Error::Parse(format!("unknown key `{other}` in --f")))),
        }
    }
    let e = e.ok_or_else(|| Error::Parse("--f needs e=EXPONENT".into()))?;
    let power = VectorialFunction::from_exponent_in(field.clone(), e)?.scale(k);
    Ok(if l == field.degree() { power } else { power.with_trace_to(l)? })
}

fn report_json(g: &Global, r: &ConstructionReport) -> std::result::Result<(Value, bool), Failure> {
    let v = r.verify(g.budget_codewords)?;
    let facts: serde_json::Map<String, Value> = r.facts.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    let ok = v.predicted_match != Some(false) && v.claimed_match != Some(false);
    let value = json!({
        "construction": r.name,
        "params": [v.distribution.length(), v.distribution.dimension, v.distribution.minimum_distance()],
        "distribution": distribution_json(&v.distribution),
        "labels": r.labels,
        "family": r.family.map(|(f, a, b)| json!({ "name": f.name(), "params": [a, b] })),
        "predicted": r.predicted.as_ref().map(predicted_json),
        "claimed": r.claimed,
        "match": { "predicted": v.predicted_match, "claimed": v.claimed_match },
        "facts": facts,
        "code": artifact(g, r.code.to_file_string())?,
    });
    Ok((value, ok))
}

fn design_json(d: &Design) -> Value {
    let mut v = d.to_json();
    v["total_blocks"] = json!(d.total_blocks());
    v["simple"] = json!(d.is_simple());
    v
}

fn dispatch(cli: &Cli) -> Run {
    let g = &cli.global;
    match &cli.command {
        Command::Field(cmd) => field(g, cmd),
        Command::Code(cmd) => code(g, cmd),
        Command::Moments(cmd) => moments(g, cmd),
        Command::Design(cmd) => design(g, cmd),
        Command::Predict(cmd) => predict(g, cmd),
        Command::Function(cmd) => function(g, cmd),
        Command::Build(cmd) => build(g, cmd),
        Command::Steiner(src) => steiner(g, src),
        Command::Am(cmd) => am(g, cmd),
        Command::Repro(ReproCmd::PaperExamples { subset }) => {
            let results = repro::run(subset.as_deref())?;
            for r in &results {
                eprintln!("{} {:>2} {:<18} {:>8} ms", if r.passed { "PASS" } else { "FAIL" }, r.id, r.subset, r.elapsed_ms);
            }
            let all = results.iter().all(|r| r.passed);
            emit(g, json!({ "criteria": results, "passed": all }), false)?;
            if all {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn field(g: &Global, cmd: &FieldCmd) -> Run {
    let value = match cmd {
        FieldCmd::Info(a) => {
            let f = FieldTable::from_text(&a.field)?;
            json!({
                "p": f.characteristic(),
                "m": f.degree(),
                "size": f.size(),
                "modulus": f.to_text(),
                "generator": f.generator(),
            })
        }
        FieldCmd::Trace { field, x, to } => {
            let f = FieldTable::from_text(&field.field)?;
            json!({ "x": x, "to": to, "trace": f.trace(*x, *to)? })
        }
        FieldCmd::Mul { field, a, b } => {
            let f = FieldTable::from_text(&field.field)?;
            if *a >= f.size() || *b >= f.size() {
                return Err(Failure::Lib(Error::InvalidSymbol { symbol: (*a).max(*b), q: f.size() as u64 }));
            }
            json!({ "a": a, "b": b, "product": f.mul(*a, *b) })
        }
    };
    emit(g, value, false)
}

fn code(g: &Global, cmd: &CodeCmd) -> Run {
    let value = match cmd {
        CodeCmd::Wdist(a) => distribution_json(&load_code(a)?.weight_distribution_with_budget(g.budget_codewords)?),
        CodeCmd::Dual(a) => {
            let dual = load_code(a)?.dual();
            let mut v = distribution_json(&dual.weight_distribution_with_budget(g.budget_codewords)?);
            v["code"] = artifact(g, dual.to_file_string())?;
            return emit(g, v, true);
        }
        CodeCmd::Shorten { code, coords } => {
            let c = load_code(code)?.shorten(coords)?;
            let mut v = distribution_json(&c.weight_distribution_with_budget(g.budget_codewords)?);
            v["code"] = artifact(g, c.to_file_string())?;
            return emit(g, v, true);
        }
        CodeCmd::Puncture { code, coords } => {
            let c = load_code(code)?.puncture(coords)?;
            let mut v = distribution_json(&c.weight_distribution_with_budget(g.budget_codewords)?);
            v["code"] = artifact(g, c.to_file_string())?;
            return emit(g, v, true);
        }
    };
    emit(g, value, false)
}

fn moments(g: &Global, cmd: &MomentsCmd) -> Run {
    match cmd {
        MomentsCmd::Check { primal, dual, t_max } => {
            let (q, nu, m, counts) = parse_distribution(&read_json(primal)?)?;
            let (_, _, _, dual_counts) = parse_distribution(&read_json(dual)?)?;
            let report = moment_check_counts(nu, m, q, &counts, &dual_counts, *t_max)?;
            let ok = report.all_hold();
            emit(g, serde_json::to_value(&report).expect("serializes"), false)?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        MomentsCmd::Solve { nu, m, q, unknown, known, dual_prefix } => {
            let mut counts = vec![BigInt::zero(); nu + 1];
            counts[0] = BigInt::one();
            for pair in known {
                let (w, c) = pair.split_once(':').ok_or_else(|| Error::Parse(format!("`{pair}` is not w:count")))?;
                let w: usize = w.parse().map_err(|e| Error::Parse(format!("`{pair}`: {e}")))?;
                if w > *nu {
                    return Err(Failure::Lib(Error::CoordinateOutOfRange { coord: w, len: nu + 1 }));
                }
                counts[w] = c.parse().map_err(|e| Error::Parse(format!("`{pair}`: {e}")))?;
            }
            let prefix: Vec<BigInt> = dual_prefix.iter().map(|&c| BigInt::from(c)).collect();
            let solved = solve_distribution(*nu, *m, *q, unknown, &counts, &prefix)?;
            let value = json!({
                "q": q,
                "nu": nu,
                "m": m,
                "counts": solved.counts.iter().map(big).collect::<Vec<_>>(),
                "dual": solved.dual.as_ref().map(|d| d.iter().map(big).collect::<Vec<_>>()),
            });
            emit(g, value, false)
        }
    }
}

fn design(g: &Global, cmd: &DesignCmd) -> Run {
    match cmd {
        DesignCmd::Extract { code, weight, dual } => {
            let c = load_code(code)?;
            let d = if *dual {
                dual_support_design(&c, *weight, g.budget_codewords)?
            } else {
                support_design(&c, *weight, g.budget_codewords)?
            };
            let text = serde_json::to_string(&d.to_json()).expect("serializes") + "\n";
            let value = json!({
                "weight": weight,
                "dual": dual,
                "total_blocks": d.total_blocks(),
                "simple": d.is_simple(),
                "design": match &g.out { Some(_) => artifact(g, text)?, None => design_json(&d) },
            });
            emit(g, value, true)
        }
        DesignCmd::Verify { design, t } => {
            let d = Design::from_json(&read_json(design)?)?;
            let (lambda, strategy) = d.is_t_design_with(*t, None, g.budget_design_steps)?;
            let value = json!({
                "t": t,
                "nu": d.nu(),
                "k": d.block_size(),
                "total_blocks": d.total_blocks(),
                "simple": d.is_simple(),
                "is_design": lambda.is_some(),
                "lambda": lambda,
                "strategy": format!("{strategy:?}"),
            });
            emit(g, value, false)?;
            if lambda.is_some() {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn predict(g: &Global, cmd: &PredictCmd) -> Run {
    let p = match cmd {
        PredictCmd::Shorten { dist, t } => {
            let (q, _, _, counts) = parse_distribution(&read_json(dist)?)?;
            shortened_predict_counts(q, &counts, *t)?
        }
        PredictCmd::Puncture { dist, t } => {
            let (q, _, _, counts) = parse_distribution(&read_json(dist)?)?;
            punctured_predict_counts(q, &counts, *t)?
        }
        PredictCmd::Table { family, params } => {
            let family: Family = family.parse()?;
            let [a, b] = params[..] else {
                return Err(Failure::Lib(Error::Parameter(format!("{family} takes two parameters"))));
            };
            table_predict(family, a, b)?
        }
    };
    emit(g, predicted_json(&p), false)
}

fn function(g: &Global, cmd: &FnCmd) -> Run {
    match cmd {
        FnCmd::Walsh(src) => {
            let f = parse_source(src)?;
            let s = f.walsh_spectrum();
            let value = json!({
                "n": f.n(),
                "l": f.l(),
                "histogram": s.histogram.iter().map(|(w, c)| json!([w, c])).collect::<Vec<_>>(),
                "values": s.histogram.keys().collect::<Vec<_>>(),
                "parseval": s.parseval_ok,
                "bent_vectorial": f.is_bent_vectorial(),
            });
            emit(g, value, false)
        }
        FnCmd::Diffspec(src) => {
            let f = parse_source(src)?;
            let s = f.diff_spectrum_with(g.budget_codewords.max(crate::boolfn::DEFAULT_DIFF_BUDGET))?;
            let mut value = json!({
                "n": f.n(),
                "l": f.l(),
                "histogram": s.histogram.iter().map(|(d, c)| json!([d, c])).collect::<Vec<_>>(),
                "values": s.values(),
                "uniformity": s.uniformity,
                "two_valued_s": s.two_valued_s(),
            });
            if f.l() == f.n() {
                let moment = f.fourth_moment()?;
                let target = crate::boolfn::fourth_moment_target(f.n(), s.uniformity as u128);
                value["fourth_moment"] = json!(moment.to_string());
                value["fourth_moment_target"] = json!(target.to_string());
                value["fourth_moment_equal"] = json!(moment == target);
            }
            emit(g, value, false)
        }
        FnCmd::Family { kind, n, i, m, e } => {
            let need = |v: &Option<u32>, name: &str| v.ok_or_else(|| Error::Parameter(format!("{kind} needs --{name}")));
            let member = match kind.as_str() {
                "kasami" => kasami(need(n, "n")?, need(i, "i")?)?,
                "gold" => gold(need(n, "n")?, need(i, "i")?)?,
                "btt" | "bracken-tan-tan" => bracken_tan_tan(need(m, "m")?, need(i, "i")?)?,
                "power" => {
                    let e = e.ok_or_else(|| Error::Parameter("power needs --e".into()))?;
                    let f = VectorialFunction::from_exponent(need(n, "n")?, e)?;
                    crate::boolfn::FamilyMember { function: f, predicted_s: 0, exponent: Some(e) }
                }
                other => return Err(Failure::Lib(Error::Parameter(format!("unknown family `{other}`")))),
            };
            let f = &member.function;
            let value = json!({
                "family": kind,
                "n": f.n(),
                "l": f.l(),
                "exponent": member.exponent,
                "predicted_s": (kind != "power").then_some(member.predicted_s),
                "table": artifact(g, f.to_file_string())?,
            });
            emit(g, value, true)
        }
    }
}

fn build(g: &Global, cmd: &BuildCmd) -> Run {
    let report = match cmd {
        BuildCmd::BentSupport(src) => code_from_bent_support(&parse_source(src)?)?,
        BuildCmd::Vectorial(src) => code_from_vectorial(&parse_source(src)?)?,
        BuildCmd::Ternary { m } => ternary_code(*m)?,
        BuildCmd::Rm1 { n } => {
            let c = rm1(*n)?;
            let wd = c.weight_distribution_with_budget(g.budget_codewords)?;
            let mut v = distribution_json(&wd);
            v["code"] = artifact(g, c.to_file_string())?;
            return emit(g, v, true);
        }
    };
    let (value, ok) = report_json(g, &report)?;
    emit(g, value, true)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn steiner(g: &Global, src: &SourceArgs) -> Run {
    let f = parse_source(src)?;
    let design = steiner_from_function(&f, g.budget_codewords)?;
    let lambdas = pair_lambda_histogram(&f, g.budget_codewords.max(crate::boolfn::DEFAULT_DIFF_BUDGET))?;
    let lambda = if design.is_empty() { Some(0) } else { design.is_t_design_with(2, None, g.budget_design_steps)?.0 };
    let text = serde_json::to_string(&design.to_json()).expect("serializes") + "\n";
    let value = json!({
        "n": f.n(),
        "points": design.nu(),
        "total_blocks": design.total_blocks(),
        "simple": design.is_simple(),
        "lambda": lambda,
        "steiner": lambda == Some(1) && design.is_simple(),
        "pair_lambda": lambdas.iter().map(|(l, c)| json!([l.to_string(), c])).collect::<Vec<_>>(),
        "two_valued_s": f.two_valued_s()?,
        "design": match &g.out { Some(_) => artifact(g, text)?, None => design_json(&design) },
    });
    emit(g, value, true)
}

fn am(g: &Global, cmd: &AmCmd) -> Run {
    let b = budgets(g);
    let report = match cmd {
        AmCmd::Classic { code, t } => classic_am(&load_code(code)?, *t, b)?,
        AmCmd::Generalized { code, t, s } => generalized_am(&load_code(code)?, *t, s, b)?,
        AmCmd::Characterize { code, t } => characterization(&load_code(code)?, *t, b)?,
    };
    emit(g, report.to_json(), false)
}
