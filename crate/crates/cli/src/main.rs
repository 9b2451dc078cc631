use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lrc_core::bounds::{classify_with, DefaultKopt, KoptTable};
use lrc_core::code::DEFAULT_ENUM_BUDGET;
use lrc_core::lrc::{locality_check, DEFAULT_MAX_SUBSETS};
use lrc_core::outer::{
    bundled_cap17, cap_code, cap_search, cyclic4, hamming4, hexacode, ingest, macdonald, mds_rs,
    parse_code, solomon_stiffler, MatrixKind, SubspaceSpec,
};
use lrc_core::repair::{global_decode, simulate, ErasureModel, ErasurePattern, RepairMethod};
use lrc_core::reproduce::{reproduce, ReproduceOptions, Status};
use lrc_core::{
    concatenate, AnyCode, BinaryLrc, DistanceCertificate, Error, FiniteField, Gf2, Gf4, LinearCode,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "lrc",
    version,
    about = "Binary locally repairable codes from GF(4) outer codes"
)]
struct Cli {
    /// Emit compact JSON instead of readable text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the command's main artifact here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Word budget for enumeration and distance searches.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_BUDGET)]
    max_enum: u64,
    /// Subset budget for the group-subspace distance certifier.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SUBSETS)]
    max_subsets: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include the slow enumerations in `reproduce`.
    #[arg(long, global = true)]
    heavy: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an outer code (and optionally its binary concatenation).
    Construct(ConstructArgs),
    /// Report distance, weights, locality and bounds for a code file.
    Analyze(AnalyzeArgs),
    /// Evaluate every bound for [n, k, d; r] parameters.
    Bounds(BoundsArgs),
    /// Decode an erasure pattern or run the erasure simulator on an LRC file.
    Repair(RepairArgs),
    /// Recompute the reference tables and worked examples.
    Reproduce {
        /// Item ids or scopes (`all`, `table1`, `table1.row2`, `example6.2`, ...).
        ids: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Mds,
    Hamming4,
    Hexacode,
    Macdonald,
    #[value(name = "solomon_stiffler", alias = "solomon-stiffler")]
    SolomonStiffler,
    Cap,
    Cyclic4,
    Ingest,
}

#[derive(Args)]
struct ConstructArgs {
    family: Family,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    k1: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    u: Option<usize>,
    /// Subspace dimensions for solomon_stiffler, e.g. `1,1,1`.
    #[arg(long, value_delimiter = ',')]
    dims: Vec<usize>,
    /// Cap file for `cap`; defaults to the bundled 17-cap of PG(3,4).
    #[arg(long)]
    cap_file: Option<PathBuf>,
    /// Search for a cap of this size instead of reading one.
    #[arg(long)]
    cap_size: Option<usize>,
    #[arg(long, default_value_t = 3)]
    ambient: usize,
    #[arg(long)]
    n: Option<usize>,
    /// Generator polynomial for cyclic4, ascending coefficients, e.g. `10W11w01`.
    #[arg(long)]
    poly: Option<String>,
    /// Code file for `ingest`.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Emit the binary LRC instead of the outer code.
    #[arg(long)]
    concat: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    path: PathBuf,
    #[arg(long)]
    distance: bool,
    #[arg(long)]
    weights: bool,
    #[arg(long)]
    locality: bool,
    #[arg(long)]
    bounds: bool,
    #[arg(long, default_value_t = 2)]
    r: usize,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// `n d kmax` lines overriding the default k_opt oracle.
    #[arg(long)]
    kopt_table: Option<PathBuf>,
}

#[derive(Args)]
struct RepairArgs {
    path: PathBuf,
    /// Erase these positions from one codeword and decode.
    #[arg(long, value_delimiter = ',')]
    erase: Vec<usize>,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Simulate exactly this many random erasures per trial.
    #[arg(long, conflicts_with = "prob")]
    erasures: Option<usize>,
    /// Simulate independent erasures with this probability.
    #[arg(long)]
    prob: Option<f64>,
}

/// A finished command: its report and exit status.
struct Outcome {
    report: Value,
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(report: Value, text: String) -> Self {
        Outcome {
            report,
            text,
            code: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = matches!(
                e.downcast_ref::<Error>(),
                Some(
                    Error::BudgetExceeded { .. }
                        | Error::SubsetBudgetExceeded { .. }
                        | Error::SearchBudgetExceeded { .. }
                )
            );
            ExitCode::from(if budget { EXIT_BUDGET } else { EXIT_USAGE })
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let outcome = match &cli.command {
        Command::Construct(a) => construct(cli, a)?,
        Command::Analyze(a) => analyze(cli, a)?,
        Command::Bounds(a) => bounds(a)?,
        Command::Repair(a) => repair(cli, a)?,
        Command::Reproduce { ids } => reproduce_cmd(cli, ids)?,
    };
    let rendered = if cli.json {
        format!("{}\n", serde_json::to_string(&outcome.report)?)
    } else {
        outcome.text
    };
    match (&cli.output, &cli.command) {
        (Some(p), c) if !matches!(c, Command::Construct(_)) => write_file(p, &rendered)?,
        _ => print!("{rendered}"),
    }
    Ok(outcome.code)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| anyhow::anyhow!("missing --{flag}"))
}

fn pretty(v: &Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("value serializes")
    )
}

fn symbols<F: FiniteField>(v: &[F]) -> String {
    v.iter().map(|x| x.symbol()).collect()
}

fn cert_json<F: FiniteField>(c: &DistanceCertificate<F>) -> Value {
    json!({"d": c.d, "method": c.method, "witness": symbols(&c.witness)})
}

fn budget_bracket(e: &Error) -> Option<Value> {
    match *e {
        Error::BudgetExceeded { lower, upper } | Error::SubsetBudgetExceeded { lower, upper } => {
            Some(json!({"status": "budget_exhausted", "lower": lower, "upper": upper}))
        }
        Error::SearchBudgetExceeded { budget } => {
            Some(json!({"status": "budget_exhausted", "budget": budget}))
        }
        _ => None,
    }
}

fn outer_code(cli: &Cli, a: &ConstructArgs) -> Result<LinearCode<Gf4>> {
    Ok(match a.family {
        Family::Mds => mds_rs(need(a.n1, "n1")?, need(a.k1, "k1")?)?,
        Family::Hamming4 => hamming4(need(a.t, "t")?)?,
        Family::Hexacode => hexacode(),
        Family::Macdonald => macdonald(need(a.m, "m")?, need(a.u, "u")?, need(a.t, "t")?)?,
        Family::SolomonStiffler => {
            solomon_stiffler(need(a.t, "t")?, &SubspaceSpec::new(a.dims.clone())?)?
        }
        Family::Cap => {
            let cap = match (&a.cap_file, a.cap_size) {
                (Some(p), _) => {
                    let text = fs::read_to_string(p)
                        .with_context(|| format!("cannot read {}", p.display()))?;
                    lrc_core::outer::CapSet::parse(&text)?
                }
                (None, Some(size)) if !(a.ambient == 3 && size == 17) => {
                    cap_search(a.ambient, size, cli.max_enum)?
                }
                _ => bundled_cap17(),
            };
            cap_code(&cap)?
        }
        Family::Cyclic4 => {
            let poly = a
                .poly
                .as_deref()
                .ok_or_else(|| anyhow::anyhow!("missing --poly"))?;
            let g = lrc_core::matspace::parse_symbols::<Gf4>(poly)?;
            cyclic4(need(a.n, "n")?, &g)?
        }
        Family::Ingest => unreachable!("handled by construct"),
    })
}

fn construct(cli: &Cli, a: &ConstructArgs) -> Result<Outcome> {
    if let Family::Ingest = a.family {
        let path = a
            .input
            .as_deref()
            .ok_or_else(|| anyhow::anyhow!("missing --input"))?;
        let rep = ingest(path, cli.max_enum)?;
        let mismatch = rep.log.iter().any(|l| l.starts_with("MISMATCH"));
        let report = json!({
            "family": "ingest",
            "field": rep.code.field().order(),
            "n": rep.code.n(),
            "k": rep.code.k(),
            "kind": match rep.kind { MatrixKind::Generator => "generator", MatrixKind::Parity => "parity" },
            "advertised_d": rep.advertised_d,
            "d": rep.computed_d,
            "log": rep.log,
        });
        let text = format!("{}{}", rep.log.join("\n"), "\n");
        return Ok(Outcome {
            report,
            text,
            code: if mismatch { EXIT_MISMATCH } else { 0 },
        });
    }
    let outer = outer_code(cli, a)?;
    let d1 = outer.min_distance(cli.max_enum)?;
    let mut report = json!({
        "outer": {"n": outer.n(), "k": outer.k(), "d": d1.d, "field": 4},
    });
    let (matrix, label) = if a.concat {
        let lrc = concatenate(&outer)?;
        let cert = lrc.distance_via_subspaces(cli.max_subsets)?;
        report["lrc"] = serde_json::from_str(&lrc.to_json())?;
        let label = format!("[{},{},{};2]", lrc.n(), lrc.k(), cert.d);
        (
            lrc.code()
                .parity_check()
                .to_text_with(&[("kind", "parity".into()), ("d", cert.d.to_string())]),
            label,
        )
    } else {
        (
            outer
                .parity_check()
                .to_text_with(&[("kind", "parity".into()), ("d", d1.d.to_string())]),
            format!("[{},{},{}]", outer.n(), outer.k(), d1.d),
        )
    };
    let mut text = format!("{label}\n");
    match &cli.output {
        Some(p) => write_file(p, &matrix)?,
        None => {
            report["matrix"] = json!(matrix);
            text.push_str(&matrix);
        }
    }
    Ok(Outcome::ok(report, text))
}

fn analyze(cli: &Cli, a: &AnalyzeArgs) -> Result<Outcome> {
    let text =
        fs::read_to_string(&a.path).with_context(|| format!("cannot read {}", a.path.display()))?;
    let parsed = parse_code(&text)?;
    let all = !(a.distance || a.weights || a.locality || a.bounds);
    let code = &parsed.code;
    let lrc = match code {
        AnyCode::Gf2(c) if c.n() % 3 == 0 => {
            BinaryLrc::from_parity_check(c.parity_check().clone()).ok()
        }
        _ => None,
    };
    let mut report = json!({
        "field": code.field().order(),
        "n": code.n(),
        "k": code.k(),
        "advertised_d": parsed.advertised_d,
        "group_form": lrc.is_some(),
    });
    let mut exit = 0;
    let mut d = None;
    if a.distance || a.bounds || all {
        let res = match (&lrc, code) {
            (Some(l), _) => l
                .distance_via_subspaces(cli.max_subsets)
                .map(|c| cert_json(&c)),
            (None, AnyCode::Gf2(c)) => c.min_distance(cli.max_enum).map(|c| cert_json(&c)),
            (None, AnyCode::Gf4(c)) => c.min_distance(cli.max_enum).map(|c| cert_json(&c)),
        };
        match res {
            Ok(v) => {
                d = v["d"].as_u64().map(|x| x as usize);
                if let (Some(adv), Some(found)) = (parsed.advertised_d, d) {
                    if adv != found {
                        report["mismatch"] =
                            json!(format!("file advertises d = {adv}, computed d = {found}"));
                        exit = EXIT_MISMATCH;
                    }
                }
                report["distance"] = v;
            }
            Err(e) => {
                let bracket = budget_bracket(&e).ok_or(e)?;
                report["distance"] = bracket;
                exit = EXIT_BUDGET;
            }
        }
    }
    if a.weights || all {
        match code.weight_distribution(cli.max_enum) {
            Ok(w) => {
                let m: serde_json::Map<String, Value> = w
                    .support()
                    .into_iter()
                    .map(|(i, c)| (i.to_string(), json!(c)))
                    .collect();
                report["weights"] = Value::Object(m);
            }
            Err(e) => {
                report["weights"] = budget_bracket(&e).ok_or(e)?;
                exit = EXIT_BUDGET;
            }
        }
    }
    if a.locality || all {
        report["locality"] = match code {
            AnyCode::Gf2(c) => match locality_check(c, a.r, cli.max_enum) {
                Ok(l) => {
                    json!({"r": l.r, "has_locality": l.has_locality(), "uncovered": l.uncovered()})
                }
                Err(e) => {
                    exit = EXIT_BUDGET;
                    budget_bracket(&e).ok_or(e)?
                }
            },
            AnyCode::Gf4(_) => json!({"status": "binary codes only"}),
        };
    }
    if a.bounds || all {
        report["bounds"] = match (code, d.or(parsed.advertised_d)) {
            (AnyCode::Gf2(c), Some(d)) => {
                serde_json::to_value(classify_with(c.n(), c.k(), d, a.r, &DefaultKopt::default()))?
            }
            (AnyCode::Gf2(_), None) => json!({"status": "distance unknown"}),
            (AnyCode::Gf4(_), _) => json!({"status": "binary codes only"}),
        };
    }
    let text = pretty(&report);
    Ok(Outcome {
        report,
        text,
        code: exit,
    })
}

fn bounds(a: &BoundsArgs) -> Result<Outcome> {
    let report = match &a.kopt_table {
        Some(p) => {
            let text =
                fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
            classify_with(a.n, a.k, a.d, a.r, &KoptTable::parse(&text)?)
        }
        None => classify_with(a.n, a.k, a.d, a.r, &DefaultKopt::default()),
    };
    let mut text = format!("[{},{},{};{}]\n", a.n, a.k, a.d, a.r);
    for e in &report.entries {
        text.push_str(&format!(
            "  {:<26} {:>8}  {}\n",
            e.name,
            e.value,
            if e.attained { "attained" } else { "" }
        ));
    }
    let v = &report.verdicts;
    text.push_str(&format!(
        "  singleton_optimal={} griesmer_like_d_optimal={} perfect={} k_optimal_sp={}",
        v.singleton_optimal, v.griesmer_like_d_optimal, v.perfect, v.k_optimal_sp
    ));
    if let (Some(np), Some(kj)) = (v.nearly_perfect, v.k_optimal_johnson) {
        text.push_str(&format!(" nearly_perfect={np} k_optimal_johnson={kj}"));
    }
    text.push('\n');
    Ok(Outcome::ok(serde_json::to_value(&report)?, text))
}

fn load_lrc(path: &Path) -> Result<BinaryLrc> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    match parse_code(&text)?.code {
        AnyCode::Gf2(c) => Ok(BinaryLrc::from_parity_check(c.parity_check().clone())?),
        AnyCode::Gf4(_) => bail!(
            "{} is a GF(4) code; repair needs a binary LRC",
            path.display()
        ),
    }
}

fn repair(cli: &Cli, a: &RepairArgs) -> Result<Outcome> {
    let lrc = load_lrc(&a.path)?;
    if !a.erase.is_empty() {
        // message bit i is bit (i mod 64) of the seed
        let msg: Vec<Gf2> = (0..lrc.k())
            .map(|i| Gf2::new(cli.seed >> (i % 64) & 1 == 1))
            .collect();
        let word = lrc.code().encode(&msg);
        let pattern = ErasurePattern::new(a.erase.iter().copied(), lrc.n())?;
        let report = match global_decode(&lrc, &pattern.apply(&word)) {
            Ok(out) => {
                let methods: serde_json::Map<String, Value> = out
                    .methods
                    .iter()
                    .map(|(p, m)| (p.to_string(), json!(m)))
                    .collect();
                json!({
                    "erased": pattern.positions(),
                    "status": if out.word == word { "recovered" } else { "wrong" },
                    "methods": methods,
                    "local": out.methods.values().filter(|m| **m == RepairMethod::Local).count(),
                    "accessed": out.accessed,
                })
            }
            Err(Error::AmbiguousDecode { dimension }) => json!({
                "erased": pattern.positions(),
                "status": "ambiguous",
                "dimension": dimension,
            }),
            Err(e) => return Err(e.into()),
        };
        let text = pretty(&report);
        return Ok(Outcome::ok(report, text));
    }
    let model = match (a.erasures, a.prob) {
        (Some(t), None) => ErasureModel::RandomT(t),
        (None, Some(p)) => ErasureModel::PerSymbol(p),
        _ => bail!("give --erase, --erasures or --prob"),
    };
    let rep = simulate(&lrc, a.trials, model, cli.seed)?;
    let report = serde_json::to_value(&rep)?;
    let text = pretty(&report);
    Ok(Outcome::ok(report, text))
}

fn reproduce_cmd(cli: &Cli, ids: &[String]) -> Result<Outcome> {
    let opts = ReproduceOptions {
        max_enum: cli.max_enum,
        max_subsets: cli.max_subsets,
        heavy: cli.heavy,
    };
    let items = reproduce(ids, &opts)?;
    let mut text = String::new();
    for it in &items {
        let status = match it.status {
            Status::Match => "match",
            Status::Mismatch => "MISMATCH",
            Status::PaperDiscrepancyNoted => "paper_discrepancy_noted",
        };
        text.push_str(&format!("{:<18} {status}\n", it.id));
        if it.status != Status::Match {
            text.push_str(&format!(
                "    expected {}\n    computed {}\n",
                it.expected, it.computed
            ));
        }
    }
    let mismatch = items.iter().any(|i| i.status == Status::Mismatch);
    Ok(Outcome {
        report: serde_json::to_value(&items)?,
        text,
        code: if mismatch { EXIT_MISMATCH } else { 0 },
    })
}
