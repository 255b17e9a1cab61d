use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use qdist::codes::io::{parse_code, write_code};
use qdist::codes::{parse_params, CodeFamily};
use qdist::decoder::{BpConfig, Decoder};
use qdist::estimator::{
    brute_force_distance, classify_residual, estimate_upper_bound_with, rates_csv, verify_witness, NoiseKind,
    ReportDocument, ReportMetadata, Support, TrialConfig, DEFAULT_RATES,
};
use qdist::{Pauli, StabilizerCode, SymplecticPauli};

#[derive(Parser)]
#[command(
    name = "qdist",
    version,
    about = "Stabilizer code distance upper bounds from decoding failures"
)]
struct Cli {
    /// Worker threads for Monte Carlo trials (default: all cores).
    #[arg(long, global = true, env = "QDIST_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate a distance upper bound by decoding random errors.
    Estimate(EstimateArgs),
    /// Check that a code's generators commute and its dimension is consistent.
    ValidateCode(CodeArgs),
    /// Exhaustive search for the minimum-weight logical operator.
    BruteForce(BruteForceArgs),
    /// Decode a single error and print the result.
    DecodeOne(DecodeOneArgs),
    /// List the built-in code families.
    ListCodes,
    /// Write a code in the plain-text code file format.
    ExportCode(ExportArgs),
}

#[derive(Args)]
struct CodeArgs {
    /// Built-in family: surface, toric, xzzx, ztgre or chamon.
    #[arg(
        long,
        requires = "params",
        required_unless_present = "code_file",
        conflicts_with = "code_file"
    )]
    code: Option<String>,
    /// Comma-separated family parameters, e.g. `3` or `3,3,3`.
    #[arg(long, requires = "code", conflicts_with = "code_file")]
    params: Option<String>,
    /// Path to a code file.
    #[arg(long)]
    code_file: Option<PathBuf>,
}

#[derive(Args)]
struct DecoderArgs {
    #[arg(long, default_value_t = 100)]
    max_iterations: usize,
    /// Bound on message magnitudes in the log domain.
    #[arg(long, default_value_t = 30.0)]
    clip: f64,
}

impl DecoderArgs {
    fn config(&self) -> anyhow::Result<BpConfig> {
        let cfg = BpConfig {
            max_iterations: self.max_iterations,
            clip: self.clip,
            ..BpConfig::default()
        };
        cfg.check().context("--max-iterations/--clip")?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct EstimateArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Comma-separated physical error rates.
    #[arg(long, value_parser = parse_rates)]
    rates: Option<Rates>,
    /// Trials per error rate.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// depolarizing or pure_x.
    #[arg(long, default_value = "depolarizing")]
    noise: NoiseKind,
    #[command(flatten)]
    decoder: DecoderArgs,
    /// JSON report path. Printed to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the per-rate table as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct BruteForceArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[arg(long)]
    max_weight: usize,
    /// Search X-only operators instead of all Paulis.
    #[arg(long)]
    x_only: bool,
    /// Refuse to start if more operators would be enumerated.
    #[arg(long, default_value_t = 1_000_000_000)]
    budget: u128,
}

#[derive(Args)]
struct DecodeOneArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Error as a dense IXYZ string or sparse terms such as "X0 Z5".
    #[arg(long)]
    error: String,
    /// Channel error rate used for the decoder prior.
    #[arg(long, default_value_t = 0.05)]
    p: f64,
    #[arg(long, default_value = "depolarizing")]
    noise: NoiseKind,
    #[command(flatten)]
    decoder: DecoderArgs,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Output path. Printed to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone)]
struct Rates(Vec<f64>);

fn parse_rates(s: &str) -> Result<Rates, String> {
    let rates = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("invalid rate {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    match rates.iter().find(|p| !(**p > 0.0 && **p < 1.0)) {
        Some(p) => Err(format!("rate {p} is outside (0, 1)")),
        None => Ok(Rates(rates)),
    }
}

fn load_code(args: &CodeArgs) -> anyhow::Result<StabilizerCode> {
    match (&args.code, &args.code_file) {
        (Some(name), None) => {
            let params = parse_params(args.params.as_deref().unwrap_or("")).context("--params")?;
            let family = CodeFamily::parse(name, &params).context("--code/--params")?;
            Ok(family.build()?)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Ok(qdist::codes::io::read_code(&text).with_context(|| format!("loading {}", path.display()))?)
        }
        _ => bail!("give exactly one of --code or --code-file"),
    }
}

fn parse_error(text: &str, n: usize) -> anyhow::Result<SymplecticPauli> {
    let text = text.trim();
    if text.chars().all(|c| Pauli::from_char(c).is_some()) {
        let e: SymplecticPauli = text.parse()?;
        if e.n() != n {
            bail!("--error has {} qubits, the code has {n}", e.n());
        }
        return Ok(e);
    }
    let mut terms = Vec::new();
    for term in text.split_whitespace() {
        let mut chars = term.chars();
        let op = chars
            .next()
            .and_then(Pauli::from_char)
            .with_context(|| format!("invalid term {term:?} in --error"))?;
        let q: usize = chars
            .as_str()
            .parse()
            .with_context(|| format!("invalid qubit in {term:?}"))?;
        terms.push((q, op));
    }
    Ok(SymplecticPauli::from_sparse(n, &terms)?)
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn estimate(args: &EstimateArgs, threads: usize) -> anyhow::Result<ExitCode> {
    let code = load_code(&args.code)?;
    let rates = args.rates.clone().map_or_else(|| DEFAULT_RATES.to_vec(), |r| r.0);
    let cfg = TrialConfig::new(rates, args.trials as usize, args.seed)
        .with_noise(args.noise)
        .with_decoder(args.decoder.config()?);

    let started = SystemTime::now().duration_since(UNIX_EPOCH).unwrap_or_default();
    let clock = Instant::now();
    let report = estimate_upper_bound_with(&code, &cfg, |s| {
        let w = s.min_weight.map_or("-".to_string(), |w| w.to_string());
        eprintln!(
            "p = {:<8} trials {:>8}  logical {:>7}  min weight {w}",
            s.p, s.trials, s.logical_events
        );
    })?;
    let metadata = ReportMetadata {
        started_unix_ms: started.as_millis(),
        elapsed_ms: clock.elapsed().as_millis(),
        threads,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let json = ReportDocument::new(&report, Some(metadata)).to_json();

    // Check what was produced, not the in-memory report.
    let doc = ReportDocument::from_json(&json).context("report failed the schema check")?;
    let verified = match doc.witness()? {
        Some(w) => verify_witness(&code, &w, doc.upper_bound),
        None => doc.upper_bound == code.n(),
    };

    write_output(args.out.as_deref(), &format!("{json}\n"))?;
    if let Some(path) = &args.csv {
        fs::write(path, rates_csv(&report.per_rate)?).with_context(|| format!("writing {}", path.display()))?;
    }
    let summary = if !verified {
        eprintln!("error: witness verification failed for {}", code.name());
        return Ok(ExitCode::FAILURE);
    } else if report.witness.is_some() {
        format!(
            "upper bound d ≤ {} (witness weight {} verified)",
            report.upper_bound, report.upper_bound
        )
    } else {
        format!("upper bound d ≤ {} (no logical residual observed)", report.upper_bound)
    };
    if args.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(ExitCode::SUCCESS)
}

fn validate(args: &CodeArgs) -> anyhow::Result<ExitCode> {
    let parsed = match (&args.code_file, &args.code) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_code(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        _ => {
            let code = load_code(args)?;
            let k = code.k();
            qdist::codes::io::ParsedCode { code, declared_k: k }
        }
    };
    let code = &parsed.code;
    println!(
        "{}: n = {}, k = {}, generators = {}",
        code.name(),
        code.n(),
        code.k(),
        code.num_generators()
    );
    match parsed.validate() {
        Ok(report) if report.passed() => {
            println!("valid ({} generators checked)", report.generators);
            Ok(ExitCode::SUCCESS)
        }
        Ok(report) => {
            if let Some(v) = report.first_violation {
                println!("invalid: {v}");
            }
            Ok(ExitCode::FAILURE)
        }
        Err(msg) => {
            println!("invalid: {msg}");
            Ok(ExitCode::FAILURE)
        }
    }
}

fn brute_force(args: &BruteForceArgs) -> anyhow::Result<ExitCode> {
    let code = load_code(&args.code)?;
    let support = if args.x_only { Support::XOnly } else { Support::All };
    let result = brute_force_distance(&code, args.max_weight, support, args.budget)?;
    match (result.found_distance, &result.witness) {
        (Some(d), Some(w)) => {
            println!("distance {d} ({} operators searched)", result.candidates);
            println!("witness {}", w.to_sparse_string());
        }
        _ => println!(
            "no logical of weight ≤ {} ({} operators searched)",
            result.searched_max_weight, result.candidates
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn decode_one(args: &DecodeOneArgs) -> anyhow::Result<ExitCode> {
    let code = load_code(&args.code)?;
    let e = parse_error(&args.error, code.n())?;
    let prior = args.noise.prior(args.p).context("--p")?;
    let mut decoder = Decoder::new(&code, prior, args.decoder.config()?)?;
    let s = code.syndrome(&e)?;
    let out = decoder.decode(&s)?;
    let residual = e.mul(&out.estimate)?;
    println!("error      {}", e.to_sparse_string());
    println!("syndrome   {s}");
    println!("estimate   {}", out.estimate.to_sparse_string());
    println!(
        "bp         {} after {} iterations{}",
        if out.bp_converged {
            "converged"
        } else {
            "did not converge"
        },
        out.iterations,
        if out.osd_applied { ", OSD-0 applied" } else { "" }
    );
    println!(
        "residual   {} ({:?})",
        residual.to_sparse_string(),
        classify_residual(&code, &residual)?
    );
    Ok(ExitCode::SUCCESS)
}

fn list_codes() -> ExitCode {
    for name in CodeFamily::NAMES {
        println!("{name:<8} {}", CodeFamily::describe(name));
    }
    ExitCode::SUCCESS
}

fn export(args: &ExportArgs) -> anyhow::Result<ExitCode> {
    let code = load_code(&args.code)?;
    write_output(args.out.as_deref(), &write_code(&code))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let threads = match cli.threads {
        Some(0) => bail!("--threads must be at least 1"),
        Some(t) => t,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    pool.install(|| match &cli.command {
        Command::Estimate(args) => estimate(args, threads),
        Command::ValidateCode(args) => validate(args),
        Command::BruteForce(args) => brute_force(args),
        Command::DecodeOne(args) => decode_one(args),
        Command::ListCodes => Ok(list_codes()),
        Command::ExportCode(args) => export(args),
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
