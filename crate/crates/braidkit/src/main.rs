use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use braidkit::brunnian::{self, SamplerParams};
use braidkit::expr::{self, Expr};
use braidkit::maps;
use braidkit::pure::{comb, linking_vector};
use braidkit::verify::{self, CheckReport, RunReport};
use braidkit::{Error, Limits, Oracle, PureWord};

#[derive(Parser)]
#[command(name = "braidkit", version, about = "Exact computations in braid and pure braid groups")]
struct Cli {
    /// Number of strands; `check` also accepts a range such as 3..5.
    #[arg(long, global = true)]
    n: Option<String>,
    /// Seed for the random samplers.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on intermediate free-word length in the Artin action.
    #[arg(long, global = true)]
    max_free_len: Option<usize>,
    /// Cap on handle-reduction steps.
    #[arg(long, global = true)]
    max_steps: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression to a free-cancelled σ-word.
    Eval { expr: String },
    /// Decide whether two expressions are the same braid.
    Equal { lhs: String, rhs: String },
    /// Decide whether an expression is the trivial braid.
    Trivial {
        expr: String,
        /// Use handle reduction instead of the Artin action.
        #[arg(long)]
        dehornoy: bool,
    },
    /// Print the strand permutation.
    Perm { expr: String },
    /// Decide whether a pure braid is Brunnian.
    Brunnian { expr: String },
    /// Decide membership in Z_n = Brun_n ∩ Ker(∂_n).
    InZ { expr: String },
    /// Rewrite a pure braid in the A[i,j] generators.
    Comb { expr: String },
    /// Exponent sums of a pure braid, one per pair i < j.
    Abelianize { expr: String },
    /// Apply a map: theta, theta-inv, w, chi, del, d:<k> or conj:<expr>.
    Apply {
        #[arg(long)]
        map: String,
        expr: String,
    },
    /// Draw random elements: brun, bd or closure:<letter>.
    Sample {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Run verification checks by id, or the whole catalog.
    Check {
        ids: Vec<String>,
        #[arg(long)]
        all: bool,
        /// List the catalog instead of running it.
        #[arg(long)]
        list: bool,
    },
}

/// What a command produced: text lines, a JSON value and an exit status.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("braidkit: {e}");
            ExitCode::from(if e.is_resource_limit() { 3 } else { 2 })
        }
    }
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, Error> {
    let bad = || Error::InvalidArgument(format!("--n expects a strand count or a range like 3..5, got `{text}`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if let Some((lo, hi)) = text.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi) = (num(lo)?, num(hi)?);
        return Ok(lo..=hi);
    }
    let n = num(text)?;
    Ok(n..=n)
}

fn strands(cli: &Cli) -> Result<usize, Error> {
    let text = cli.n.as_deref().ok_or_else(|| Error::InvalidArgument("--n is required".into()))?;
    let range = parse_range(text)?;
    if range.start() != range.end() {
        return Err(Error::InvalidArgument("this command takes a single strand count".into()));
    }
    if *range.start() == 0 {
        return Err(Error::InvalidArgument("--n must be at least 1".into()));
    }
    Ok(*range.start())
}

fn oracle(cli: &Cli) -> Oracle {
    let mut limits = Limits::default();
    if let Some(v) = cli.max_free_len {
        limits.max_free_len = v;
    }
    if let Some(v) = cli.max_steps {
        limits.max_steps = v;
    }
    Oracle::new(limits)
}

/// An expression as an `A`-word, combing it if it uses `s<k>` atoms.
fn pure_word(e: &Expr, n: usize, oracle: &Oracle) -> Result<PureWord, Error> {
    match e.eval_pure(n)? {
        Some(w) => Ok(w),
        None => comb(&e.eval(n)?, oracle),
    }
}

fn verdict(command: &str, n: usize, value: bool) -> Output {
    Output::ok(value.to_string(), json!({ "command": command, "n": n, "result": value }))
}

fn word_output(command: &str, n: usize, word: String) -> Output {
    Output::ok(word.clone(), json!({ "command": command, "n": n, "result": word }))
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let oracle = oracle(cli);
    let params = SamplerParams::default().with_seed(cli.seed);
    if let Command::Check { ids, all, list } = &cli.command {
        return check(cli, ids, *all, *list, &params, &oracle);
    }
    let n = strands(cli)?;
    let braid = |s: &str| expr::eval(s, n);
    Ok(match &cli.command {
        Command::Eval { expr } => word_output("eval", n, braid(expr)?.free_cancel().to_string()),
        Command::Equal { lhs, rhs } => verdict("equal", n, oracle.equal(&braid(lhs)?, &braid(rhs)?)?),
        Command::Trivial { expr, dehornoy } => {
            let u = braid(expr)?;
            let value = if *dehornoy { oracle.is_trivial_dehornoy(&u)? } else { oracle.is_trivial(&u)? };
            verdict("trivial", n, value)
        }
        Command::Perm { expr } => {
            let p = braid(expr)?.permutation();
            Output::ok(p.to_string(), json!({ "command": "perm", "n": n, "result": p.images() }))
        }
        Command::Brunnian { expr } => verdict("brunnian", n, brunnian::is_brunnian(&braid(expr)?, &oracle)?),
        Command::InZ { expr } => {
            let e = expr::parse(expr, n)?;
            let value = match e.eval_pure(n)? {
                Some(w) => brunnian::in_z_pure(&w, &oracle)?,
                None => brunnian::in_z(&e.eval(n)?, &oracle)?,
            };
            verdict("in-z", n, value)
        }
        Command::Comb { expr } => word_output("comb", n, comb(&braid(expr)?, &oracle)?.to_string()),
        Command::Abelianize { expr } => {
            let e = expr::parse(expr, n)?;
            let v = match e.eval_pure(n)? {
                Some(w) => w.abelianize(),
                None => linking_vector(&e.eval(n)?)?,
            };
            let entries: Vec<Value> = v.entries().map(|((i, j), x)| json!([i, j, x])).collect();
            Output::ok(v.to_string(), json!({ "command": "abelianize", "n": n, "result": entries }))
        }
        Command::Apply { map, expr } => word_output("apply", n, apply(map, expr, n, &oracle)?),
        Command::Sample { set, count } => sample(set, *count, n, &params)?,
        Command::Check { .. } => unreachable!("handled above"),
    })
}

fn apply(map: &str, text: &str, n: usize, oracle: &Oracle) -> Result<String, Error> {
    let e = expr::parse(text, n)?;
    if let Some(k) = map.strip_prefix("d:") {
        let k = k.parse().map_err(|_| Error::InvalidArgument(format!("bad strand index in `{map}`")))?;
        return Ok(maps::delete_strand(&e.eval(n)?, k)?.free_cancel().to_string());
    }
    if let Some(beta) = map.strip_prefix("conj:") {
        let beta = expr::eval(beta, n)?;
        return Ok(maps::conjugate(&e.eval(n)?, &beta)?.free_cancel().to_string());
    }
    if map == "chi" {
        return Ok(e.eval(n)?.reflect().to_string());
    }
    let w = pure_word(&e, n, oracle)?;
    let image = match map {
        "theta" => maps::theta(&w)?,
        "theta-inv" => maps::theta_inv(&w)?,
        "w" => maps::w_map(&w)?,
        "del" => maps::del_pure(&w)?,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown map `{map}` (expected theta, theta-inv, w, chi, del, d:<k> or conj:<expr>)"
            )))
        }
    };
    Ok(image.free_cancel().to_string())
}

fn sample(set: &str, count: usize, n: usize, params: &SamplerParams) -> Result<Output, Error> {
    let mut rng = params.rng();
    let closure = match set.strip_prefix("closure:") {
        Some(letter) => match expr::parse(letter, n)?.eval_pure(n)? {
            Some(g) => Some(g),
            None => return Err(Error::InvalidArgument("closure:<letter> takes an A-word".into())),
        },
        None => None,
    };
    let mut words = Vec::with_capacity(count);
    for _ in 0..count {
        let w = match (set, &closure) {
            (_, Some(g)) => brunnian::sample_closure_with(g, params, &mut rng)?,
            ("brun", None) => brunnian::sample_brun_with(n, params, &mut rng)?,
            ("bd", None) => brunnian::sample_bd_with(n, params, &mut rng)?,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown set `{set}` (expected brun, bd or closure:<letter>)"
                )))
            }
        };
        words.push(w.free_cancel().to_string());
    }
    Ok(Output::ok(words.join("\n"), json!({ "command": "sample", "n": n, "seed": params.seed, "result": words })))
}

fn check(
    cli: &Cli,
    ids: &[String],
    all: bool,
    list: bool,
    params: &SamplerParams,
    oracle: &Oracle,
) -> Result<Output, Error> {
    if list {
        let lines: Vec<String> = verify::catalog()
            .iter()
            .map(|c| format!("{:<4} n={}..={}  {}", c.id, c.min_n, c.max_n, c.title))
            .collect();
        let entries: Vec<Value> = verify::catalog()
            .iter()
            .map(|c| json!({ "check": c.id, "min_n": c.min_n, "max_n": c.max_n, "title": c.title, "control": c.control }))
            .collect();
        return Ok(Output::ok(lines.join("\n"), Value::Array(entries)));
    }
    let text = cli.n.as_deref().ok_or_else(|| Error::InvalidArgument("--n is required".into()))?;
    let range = parse_range(text)?;
    let reports: Vec<CheckReport> = if all {
        if !ids.is_empty() {
            return Err(Error::InvalidArgument("give check ids or --all, not both".into()));
        }
        verify::run_all(range, params, oracle)?
    } else {
        let ids: Vec<&str> = ids.iter().flat_map(|s| s.split(',')).filter(|s| !s.is_empty()).collect();
        if ids.is_empty() {
            return Err(Error::InvalidArgument("no checks given (use ids or --all)".into()));
        }
        let mut out = Vec::new();
        for id in ids {
            for n in range.clone() {
                out.push(verify::run_check(id, n, params, oracle)?);
            }
        }
        out
    };
    let run = RunReport::new(reports);
    let mut lines: Vec<String> = run
        .reports
        .iter()
        .map(|r| format!("{:<4} n={} {} ({} ms): {}", r.check, r.n, r.status, r.elapsed_ms, r.witness))
        .collect();
    lines.push(format!("{} checks: {} passed, {} failed, {} skipped", run.total, run.passed, run.failed, run.skipped));
    let code = if run.all_passed() { 0 } else { 1 };
    Ok(Output { text: lines.join("\n"), json: serde_json::to_value(&run).expect("serializable"), code })
}
