use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use thrallkit::cache::IdempotentCache;
use thrallkit::json::{self as js, TensorInput};
use thrallkit::{init_threads, paper_suite, AppError, AppResult};
use thrallkit_core::combinatorics::{lie_dim, lyndon_words_up_to, num_standard, partitions, schur_dim, thrall_module_dim};
use thrallkit_core::free_lie::{is_lie_element, thrall_decompose, DecomposeBackend};
use thrallkit_core::group_algebra::{central_idempotent, K_MAX};
use thrallkit_core::invariants::{lie_invariants, path_invariants};
use thrallkit_core::rank_variety::{fls_check, hdet_pullback_check, rank_one_factors, signature_rank_one_check};
use thrallkit_core::shuffle::{log_signature, shuffle_identity_violation, signature};
use thrallkit_core::symfun::thrall_coefficients;
use thrallkit_core::{Error, Partition, Tensor};

#[derive(Parser)]
#[command(name = "thrallkit", version, about = "Exact computations with path signatures and Thrall modules")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Free Lie, Thrall module, Schur module and Schur-Weyl dimensions.
    Dims {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// Lyndon words of length at most K.
    Lyndon {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// Higher Lie idempotent E_λ, optionally times the central idempotent z_μ.
    Idempotent {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        partition: String,
        #[arg(long)]
        intersect_mu: Option<String>,
    },
    /// Thrall coefficients a^λ_μ.
    ThrallCoeffs {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Split a tensor into its Thrall components.
    Decompose {
        #[arg(long)]
        tensor: PathBuf,
        #[arg(long, value_enum, default_value_t = Backend::Idempotent)]
        backend: Backend,
    },
    /// SL-invariant functionals graded by Thrall modules.
    Invariants {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Signature (or log-signature) of a piecewise-linear path.
    Signature {
        #[arg(long)]
        path: PathBuf,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        log: bool,
    },
    /// Pass/fail diagnostics; exit code 0 on pass and 1 on fail.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        level: Option<usize>,
        /// Vouch that the tensor is a signature level (rank1 only).
        #[arg(long)]
        assert_in_u: bool,
    },
    /// Hyperdeterminant of phi_3 against its factored form at seeded points.
    HdetPullback {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Recompute the published worked examples.
    PaperSuite,
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Idempotent,
    Basis,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    GroupLike,
    Symmetric,
    Rank1,
    Fls,
    Lie,
}

struct Output {
    json: Value,
    text: String,
    passed: Option<bool>,
}

impl Output {
    fn plain(json: Value, text: String) -> Self {
        Output { json, text, passed: None }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads(cli.threads);
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => print!("{}", js::render(&out.json)),
                Format::Text => print!("{}", out.text),
            }
            match out.passed {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> AppResult<Output> {
    match command {
        Command::Dims { d, k } => dims(d, k),
        Command::Lyndon { d, k } => lyndon(d, k),
        Command::Idempotent { k, partition, intersect_mu } => idempotent(k, &partition, intersect_mu.as_deref()),
        Command::ThrallCoeffs { k, partition } => thrall(k, partition.as_deref()),
        Command::Decompose { tensor, backend } => decompose(&tensor, backend),
        Command::Invariants { d, ell } => invariants(d, ell),
        Command::Signature { path, level, log } => path_signature(&path, level, log),
        Command::Check { kind, input, level, assert_in_u } => check(kind, &input, level, assert_in_u),
        Command::HdetPullback { seed, samples } => hdet(seed, samples),
        Command::PaperSuite => suite(),
    }
}

fn usage(msg: impl Into<String>) -> AppError {
    AppError::Usage(msg.into())
}

fn parse_partition(s: &str, flag: &str) -> AppResult<Partition> {
    s.parse().map_err(|e: Error| usage(format!("--{}: {}", flag, e)))
}

fn read_json(path: &Path) -> AppResult<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| AppError::Io { path: path.display().to_string(), source })?;
    js::parse_document(&text)
}

fn guard(k: usize) -> AppResult<()> {
    if k > K_MAX {
        return Err(Error::ResourceLimit { requested: k, max: K_MAX }.into());
    }
    Ok(())
}

/// JSON number when it fits in `u64`, decimal string otherwise.
fn count(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| json!(n.to_string()), |n| json!(n))
}

fn dims(d: usize, k: usize) -> AppResult<Output> {
    if d == 0 || k == 0 {
        return Err(usage("--d and --k must be positive"));
    }
    let lie: Vec<u128> = (1..=k).map(|i| lie_dim(d, i)).collect();
    let rows: Vec<(Partition, u128, u128, u128)> = partitions(k)
        .into_par_iter()
        .map(|p| {
            let w = thrall_module_dim(&p, d);
            let s = schur_dim(&p, d);
            let m = num_standard(&p);
            (p, w, s, m)
        })
        .collect();
    let table: Vec<Value> = rows
        .iter()
        .map(|(p, w, s, m)| {
            json!({
                "partition": js::partition(p),
                "thrall_dim": count(*w),
                "schur_dim": count(*s),
                "schur_weyl_multiplicity": count(*m),
            })
        })
        .collect();
    let lie_text: Vec<String> = lie.iter().map(u128::to_string).collect();
    let lie_json: Vec<Value> = lie.iter().map(|&n| count(n)).collect();
    let mut text = format!("d={} k={}\nlie dims: {}\n", d, k, lie_text.join(", "));
    let _ = writeln!(text, "{:<16} {:>12} {:>12} {:>8}", "partition", "dim W", "dim S", "mult");
    for (p, w, s, m) in &rows {
        let _ = writeln!(text, "{:<16} {:>12} {:>12} {:>8}", p.to_string(), w, s, m);
    }
    Ok(Output::plain(json!({ "d": d, "k": k, "lie_dims": lie_json, "partitions": table }), text))
}

fn lyndon(d: usize, k: usize) -> AppResult<Output> {
    if d == 0 || d > 9 {
        return Err(usage("--d must be between 1 and 9"));
    }
    let mut words = lyndon_words_up_to(d, k);
    words.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let words: Vec<String> = words.iter().map(ToString::to_string).collect();
    let text = words.join("\n") + "\n";
    Ok(Output::plain(json!({ "d": d, "k": k, "words": words }), text))
}

fn idempotent(k: usize, partition: &str, mu: Option<&str>) -> AppResult<Output> {
    let lambda = parse_partition(partition, "partition")?;
    if lambda.weight() != k {
        return Err(usage(format!("--partition {} is not a partition of {}", lambda, k)));
    }
    guard(k)?;
    let cache = IdempotentCache::from_env();
    let mut e = cache.idempotent(&lambda)?;
    let mut doc = json!({ "k": k, "partition": js::partition(&lambda) });
    if let Some(mu) = mu {
        let mu = parse_partition(mu, "intersect-mu")?;
        if mu.weight() != k {
            return Err(usage(format!("--intersect-mu {} is not a partition of {}", mu, k)));
        }
        e = &e * &central_idempotent(&mu);
        doc["intersect_mu"] = js::partition(&mu);
    }
    doc["element"] = js::group_algebra(&e);
    let mut text = String::new();
    for (p, c) in e.terms() {
        let _ = writeln!(text, "{:>8}  {}", c.to_string(), p);
    }
    Ok(Output::plain(doc, text))
}

fn thrall(k: usize, partition: Option<&str>) -> AppResult<Output> {
    let lambdas = match partition {
        Some(s) => {
            let l = parse_partition(s, "partition")?;
            if l.weight() != k {
                return Err(usage(format!("--partition {} is not a partition of {}", l, k)));
            }
            vec![l]
        }
        None => partitions(k),
    };
    let rows = lambdas
        .into_par_iter()
        .map(|l| thrall_coefficients(&l).map(|a| (l, a)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    let table: Vec<Value> = rows
        .iter()
        .map(|(l, a)| {
            let terms: Vec<String> = a.iter().map(|(mu, c)| format!("{}·S{}", c, mu)).collect();
            let _ = writeln!(text, "W{} = {}", l, terms.join(" + "));
            let coeffs: Vec<Value> = a.iter().map(|(mu, c)| json!({ "mu": js::partition(mu), "a": c })).collect();
            json!({ "lambda": js::partition(l), "coefficients": coeffs })
        })
        .collect();
    Ok(Output::plain(json!({ "k": k, "table": table }), text))
}

fn decompose(path: &Path, backend: Backend) -> AppResult<Output> {
    let t = js::parse_tensor(&read_json(path)?)?;
    let backend = match backend {
        Backend::Idempotent => {
            guard(t.order())?;
            DecomposeBackend::Idempotent
        }
        Backend::Basis => DecomposeBackend::BasisSolve,
    };
    let parts = thrall_decompose(&t, backend)?;
    let mut text = String::new();
    let components: Vec<Value> = parts
        .iter()
        .map(|(l, c)| {
            let _ = writeln!(text, "{}: {} nonzero entries", l, c.terms().count());
            json!({ "lambda": js::partition(l), "tensor": js::tensor(c) })
        })
        .collect();
    Ok(Output::plain(json!({ "dim": t.dim(), "order": t.order(), "components": components }), text))
}

fn invariants(d: usize, ell: usize) -> AppResult<Output> {
    if d == 0 || ell == 0 {
        return Err(usage("--d and --ell must be positive"));
    }
    let graded = path_invariants(d, ell)?;
    let mut list = Vec::new();
    let mut dims = Map::new();
    let mut text = String::new();
    for (lambda, basis) in &graded {
        dims.insert(lambda.to_string(), json!(basis.len()));
        for beta in basis {
            list.push(js::graded_functional(beta, lambda));
            let terms: Vec<String> = beta.terms().iter().map(|(w, c)| format!("{}·T_{}", c, w)).collect();
            let _ = writeln!(text, "{}: {}", lambda, terms.join(" + "));
        }
    }
    let lie_dim = lie_invariants(d, ell).len();
    let doc = json!({ "d": d, "ell": ell, "dims": dims, "invariants": list, "lie_invariant_dim": lie_dim });
    Ok(Output::plain(doc, text))
}

fn path_signature(path: &Path, level: usize, log: bool) -> AppResult<Output> {
    let p = js::parse_path(&read_json(path)?)?;
    let s = if log { log_signature(&p, level) } else { signature(&p, level) };
    let mut text = String::new();
    for (i, t) in s.levels().iter().enumerate() {
        for (w, c) in t.terms() {
            let name = if i == 0 { "()".to_string() } else { w.to_string() };
            let _ = writeln!(text, "T_{} = {}", name, c);
        }
    }
    Ok(Output::plain(js::series(&s), text))
}

fn select_level(input: TensorInput, level: Option<usize>) -> AppResult<Tensor> {
    match (input, level) {
        (TensorInput::Tensor(t), None) => Ok(t),
        (TensorInput::Tensor(t), Some(k)) if k == t.order() => Ok(t),
        (TensorInput::Tensor(t), Some(k)) => Err(usage(format!("--level {} but the tensor has order {}", k, t.order()))),
        (TensorInput::Series(s), Some(k)) if k <= s.k_max() => Ok(s.level(k).clone()),
        (TensorInput::Series(s), Some(k)) => Err(usage(format!("--level {} exceeds k_max {}", k, s.k_max()))),
        (TensorInput::Series(_), None) => Err(usage("a series input needs --level")),
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

fn check(kind: CheckKind, input: &Path, level: Option<usize>, assert_in_u: bool) -> AppResult<Output> {
    let doc = read_json(input)?;
    let (mut report, passed) = match kind {
        CheckKind::GroupLike => {
            let s = js::parse_series(&doc)?;
            let violation = shuffle_identity_violation(&s)?;
            let v = violation.as_ref().map(|v| {
                json!({
                    "left": v.left.to_string(),
                    "right": v.right.to_string(),
                    "shuffled": js::scalar(&v.shuffled),
                    "product": js::scalar(&v.product),
                })
            });
            (json!({ "violation": v }), violation.is_none())
        }
        CheckKind::Symmetric => {
            let t = select_level(js::parse_tensor_or_series(&doc)?, level)?;
            let sym = t.is_symmetric();
            (json!({ "symmetric": sym }), sym)
        }
        CheckKind::Rank1 => {
            let t = select_level(js::parse_tensor_or_series(&doc)?, level)?;
            let r = signature_rank_one_check(&t, assert_in_u)?;
            let factors = if t.is_zero() { None } else { rank_one_factors(&t)? };
            (js::rank_one_report(&r, factors.as_deref()), r.rank_one)
        }
        CheckKind::Fls => {
            let p = js::parse_path(&doc)?;
            let r = fls_check(&p, level.unwrap_or(4))?;
            (js::fls_report(&r), r.criterion_a && r.criterion_b && r.criterion_c)
        }
        CheckKind::Lie => match js::parse_tensor_or_series(&doc)? {
            TensorInput::Tensor(t) => {
                let lie = is_lie_element(&t);
                (json!({ "levels": [lie] }), lie)
            }
            TensorInput::Series(s) => {
                let constant_zero = s.constant().is_zero();
                let levels: Vec<bool> = s.levels().iter().skip(1).map(is_lie_element).collect();
                let lie = constant_zero && levels.iter().all(|&b| b);
                (json!({ "constant_zero": constant_zero, "levels": levels }), lie)
            }
        },
    };
    let name = match kind {
        CheckKind::GroupLike => "group-like",
        CheckKind::Symmetric => "symmetric",
        CheckKind::Rank1 => "rank1",
        CheckKind::Fls => "fls",
        CheckKind::Lie => "lie",
    };
    report["check"] = json!(name);
    report["pass"] = json!(passed);
    let text = format!("{}: {}\n{}", name, verdict(passed), js::render(&report));
    Ok(Output { json: report, text, passed: Some(passed) })
}

fn hdet(seed: u64, samples: usize) -> AppResult<Output> {
    let r = hdet_pullback_check(seed, samples)?;
    let constant = r.constant.as_ref().map_or("undetermined".to_string(), ToString::to_string);
    let mut text = format!("hdet pullback: {} ({} samples, c = {})\n", verdict(r.passed), r.samples, constant);
    if let Some(c) = &r.counterexample {
        let _ = writeln!(text, "counterexample: {}", c);
    }
    Ok(Output { json: js::hdet_report(&r), text, passed: Some(r.passed) })
}

fn suite() -> AppResult<Output> {
    let outcomes = paper_suite::run();
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let mut text = String::new();
    for o in &outcomes {
        let _ = writeln!(text, "[{}] {}", verdict(o.passed), o.name);
        if let Some(d) = &o.detail {
            let _ = writeln!(text, "       {}", d);
        }
    }
    let _ = writeln!(text, "{}/{} passed", passed, outcomes.len());
    let results: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({ "name": o.name, "pass": o.passed, "detail": o.detail }))
        .collect();
    let all = passed == outcomes.len();
    let doc = json!({ "results": results, "passed": passed, "total": outcomes.len() });
    Ok(Output { json: doc, text, passed: Some(all) })
}
