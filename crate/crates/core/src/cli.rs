//! Command-line front end: `verify`, `identities`, `conjectures`, `seq`.
//!
//! Every sampled parameter derives from (seed, case id, p), so a reported
//! failure is reproducible from the command line alone. Reports land in
//! `reports/<subcommand>-<config-hash>.<ext>` (append-only) unless `--out`
//! overrides the path; `--out -` prints to stdout.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use crate::conjectures::{self, ConjectureBounds};
use crate::engine;
use crate::identities;
use crate::modarith::{primes_in_range, FactorialTable, PadicResidue, PrimePower};
use crate::report::{self, OutputFormat, ReportMeta};
use crate::sequences::{self, ExactEntries, SequenceKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "franel",
    version,
    about = "Verification engine for congruences of Franel and Catalan-Larcombe-French numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sweep the congruence case registry over a prime range
    Verify(VerifyArgs),
    /// Run the exact identity suite
    Identities(IdentitiesArgs),
    /// Stress-test the open conjectures at bounded ranges
    Conjectures(ConjecturesArgs),
    /// Export a sequence table
    Seq(SeqArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated case ids (default: every registry case)
    #[arg(long, value_delimiter = ',')]
    pub cases: Option<Vec<String>>,
    /// Prime range LO..HI (inclusive), LO >= 3
    #[arg(long, default_value = "5..1000")]
    pub primes: String,
    /// Parameter draws per parameterized case
    #[arg(long, default_value_t = 5)]
    pub draws: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub jobs: Option<usize>,
    /// json, csv or md
    #[arg(long, default_value = "json")]
    pub format: String,
    /// Output path; "-" for stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Override the modulus exponent of every selected case (1..=3)
    #[arg(long)]
    pub exp: Option<u8>,
}

#[derive(Args, Debug)]
pub struct IdentitiesArgs {
    /// Override every identity's index window
    #[arg(long)]
    pub window: Option<usize>,
    /// Parameter tuples per parameterized identity (min 5)
    #[arg(long, default_value_t = 5)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// json, csv or md
    #[arg(long, default_value = "md")]
    pub format: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ConjecturesArgs {
    /// Comma-separated conjecture ids (default: all seven)
    #[arg(long, value_delimiter = ',')]
    pub ids: Option<Vec<String>>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Max prime for the index-(p-1)/2 displays of C2.1/C3.2
    #[arg(long, default_value_t = 200)]
    pub half_prime: u64,
    /// Max prime for the index-(p^2-1)/2 displays of C2.1/C3.2
    #[arg(long, default_value_t = 60)]
    pub square_prime: u64,
    /// Max prime for the divisibility conjectures C2.2/C3.3 (r <= 2)
    #[arg(long, default_value_t = 50)]
    pub div_prime: u64,
    /// Max prime checked at r = 3
    #[arg(long, default_value_t = 13)]
    pub div_r3_prime: u64,
    /// Upper m for the log-concavity window of C3.4
    #[arg(long, default_value_t = 3000)]
    pub max_m: u64,
    /// Max prime for the mod-p^2 pair conjectures C3.1/C4.1
    #[arg(long, default_value_t = 300)]
    pub pair_prime: u64,
    /// json, csv or md
    #[arg(long, default_value = "json")]
    pub format: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SeqArgs {
    /// franel, apery, domb, suna, almkvist-zudilin, clf-s, clf-p, spoly,
    /// cpoly or legendre
    #[arg(long)]
    pub kind: String,
    /// Table upper index (inclusive)
    #[arg(long)]
    pub n: usize,
    /// Parameter x as an integer or num/den fraction (polynomial kinds only)
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Reduce the table mod p^exp instead of exporting exact values
    #[arg(long)]
    pub modp: Option<u64>,
    /// Exponent e for --modp (1..=3)
    #[arg(long, default_value_t = 1)]
    pub exp: u8,
    /// json, csv or md
    #[arg(long, default_value = "csv")]
    pub format: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_prime_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s}"))?;
    let lo: u64 = lo.trim().parse().map_err(|_| format!("bad range start {lo}"))?;
    let hi: u64 = hi.trim().parse().map_err(|_| format!("bad range end {hi}"))?;
    if lo < 3 {
        return Err("prime range must start at 3 or above".to_string());
    }
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let parse_int = |t: &str| -> Result<BigInt, String> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("bad integer {t}"))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den == BigInt::from(0) {
                return Err("zero denominator".to_string());
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

fn build_pool(jobs: Option<usize>) -> Result<Option<rayon::ThreadPool>, String> {
    match jobs {
        None => Ok(None),
        Some(0) => Err("--jobs must be at least 1".to_string()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(Some)
            .map_err(|e| e.to_string()),
    }
}

fn with_pool<T: Send>(pool: &Option<rayon::ThreadPool>, f: impl FnOnce() -> T + Send) -> T {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

fn emit(
    meta: &ReportMeta,
    content: &str,
    fmt: OutputFormat,
    out: &Option<PathBuf>,
) -> Result<PathBuf, std::io::Error> {
    let path = match out {
        Some(p) if p.as_os_str() == "-" => {
            print!("{content}");
            return Ok(PathBuf::from("-"));
        }
        Some(p) => p.clone(),
        None => PathBuf::from("reports").join(format!(
            "{}-{}.{}",
            meta.subcommand,
            meta.config_hash,
            fmt.extension()
        )),
    };
    report::append_report(&path, content)
}

fn run_verify(args: &VerifyArgs) -> i32 {
    let (lo, hi) = match parse_prime_range(&args.primes) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    if args.draws == 0 {
        eprintln!("error: --draws must be at least 1");
        return EXIT_CONFIG;
    }
    if let Some(e) = args.exp {
        if !(1..=3).contains(&e) {
            eprintln!("error: --exp must be 1, 2 or 3");
            return EXIT_CONFIG;
        }
    }
    if let Some(cases) = &args.cases {
        for id in cases {
            if engine::case(id).is_none() {
                eprintln!(
                    "error: unknown case id {id} (known: {})",
                    engine::case_ids().join(", ")
                );
                return EXIT_CONFIG;
            }
        }
    }
    let Some(fmt) = OutputFormat::parse(&args.format) else {
        eprintln!("error: unknown format {}", args.format);
        return EXIT_CONFIG;
    };
    let pool = match build_pool(args.jobs) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    let config = json!({
        "subcommand": "verify",
        "cases": args.cases,
        "primes": [lo, hi],
        "draws": args.draws,
        "seed": args.seed,
        "exp": args.exp,
    });
    let meta = ReportMeta::new("verify", config);
    let primes = primes_in_range(lo.max(3), hi);
    let result = with_pool(&pool, || {
        engine::verify_all(
            &primes,
            args.cases.as_deref(),
            args.draws,
            args.seed,
            args.exp,
        )
    });
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    let content = report::render_verify(&meta, &report, fmt);
    match emit(&meta, &content, fmt, &args.out) {
        Ok(path) => {
            eprintln!(
                "verify: {} outcomes, {} hold, {} fail, {} skipped -> {}",
                report.summary.outcomes,
                report.summary.holds,
                report.summary.failed,
                report.summary.skipped,
                path.display()
            );
        }
        Err(e) => {
            eprintln!("i/o error: {e}");
            return EXIT_IO;
        }
    }
    if report.summary.failed == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    }
}

fn run_identities(args: &IdentitiesArgs) -> i32 {
    let Some(fmt) = OutputFormat::parse(&args.format) else {
        eprintln!("error: unknown format {}", args.format);
        return EXIT_CONFIG;
    };
    let pool = match build_pool(args.jobs) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    let config = json!({
        "subcommand": "identities",
        "window": args.window,
        "samples": args.samples,
        "seed": args.seed,
    });
    let meta = ReportMeta::new("identities", config);
    let outcomes = with_pool(&pool, || {
        identities::run_all(args.window, args.samples, args.seed)
    });
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let content = report::render_identities(&meta, &outcomes, fmt);
    match emit(&meta, &content, fmt, &args.out) {
        Ok(path) => {
            eprintln!(
                "identities: {} checked, {} failed -> {}",
                outcomes.len(),
                failed,
                path.display()
            );
        }
        Err(e) => {
            eprintln!("i/o error: {e}");
            return EXIT_IO;
        }
    }
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    }
}

fn run_conjectures(args: &ConjecturesArgs) -> i32 {
    let Some(fmt) = OutputFormat::parse(&args.format) else {
        eprintln!("error: unknown format {}", args.format);
        return EXIT_CONFIG;
    };
    if let Some(ids) = &args.ids {
        for id in ids {
            if !conjectures::CONJECTURE_IDS.contains(&id.as_str()) {
                eprintln!(
                    "error: unknown conjecture id {id} (known: {})",
                    conjectures::CONJECTURE_IDS.join(", ")
                );
                return EXIT_CONFIG;
            }
        }
    }
    let pool = match build_pool(args.jobs) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    let bounds = ConjectureBounds {
        half_index_prime: args.half_prime,
        square_index_prime: args.square_prime,
        divisibility_prime: args.div_prime,
        divisibility_r3_prime: args.div_r3_prime,
        log_concavity_max_m: args.max_m,
        pair_prime: args.pair_prime,
    };
    let config = json!({
        "subcommand": "conjectures",
        "ids": args.ids,
        "seed": args.seed,
        "bounds": bounds,
    });
    let meta = ReportMeta::new("conjectures", config);
    let reports = match with_pool(&pool, || {
        conjectures::run_all(args.ids.as_deref(), &bounds, args.seed)
    }) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    let counterexamples: usize = reports.iter().map(|r| r.counterexamples).sum();
    let content = report::render_conjectures(&meta, &reports, fmt);
    match emit(&meta, &content, fmt, &args.out) {
        Ok(path) => {
            eprintln!(
                "conjectures: {} instances, {} counterexamples -> {}",
                reports.iter().map(|r| r.tested).sum::<usize>(),
                counterexamples,
                path.display()
            );
        }
        Err(e) => {
            eprintln!("i/o error: {e}");
            return EXIT_IO;
        }
    }
    // counterexamples are data, not failures: exit 0 either way
    EXIT_OK
}

fn run_seq(args: &SeqArgs) -> i32 {
    let Some(kind) = SequenceKind::parse(&args.kind) else {
        eprintln!(
            "error: unknown kind {} (known: {})",
            args.kind,
            SequenceKind::all()
                .iter()
                .map(|k| k.name())
                .collect::<Vec<_>>()
                .join(", ")
        );
        return EXIT_CONFIG;
    };
    let Some(fmt) = OutputFormat::parse(&args.format) else {
        eprintln!("error: unknown format {}", args.format);
        return EXIT_CONFIG;
    };
    let x = match &args.x {
        Some(s) => match parse_rational(s) {
            Ok(r) => Some(r),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_CONFIG;
            }
        },
        None => None,
    };
    let config = json!({
        "subcommand": "seq",
        "kind": kind.name(),
        "n": args.n,
        "x": args.x,
        "modp": args.modp,
        "exp": args.modp.map(|_| args.exp),
    });
    let meta = ReportMeta::new("seq", config);
    let rows: Vec<(usize, String)> = match args.modp {
        None => match sequences::generate_exact(kind, args.n, x.as_ref()) {
            Ok(t) => match &t.entries {
                ExactEntries::Int(v) => {
                    v.iter().enumerate().map(|(i, x)| (i, x.to_string())).collect()
                }
                ExactEntries::Rat(v) => {
                    v.iter().enumerate().map(|(i, x)| (i, x.to_string())).collect()
                }
            },
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_CONFIG;
            }
        },
        Some(p) => {
            let pe = match PrimePower::new(p, args.exp) {
                Ok(pe) => pe,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_CONFIG;
                }
            };
            let ft = FactorialTable::new(pe, 6 * (args.n as u64 + 1) + 2);
            let x_mod = match &x {
                Some(r) => {
                    let num = i128::try_from(r.numer()).unwrap_or(0);
                    let den = i128::try_from(r.denom()).unwrap_or(1);
                    match PadicResidue::from_ratio(num, den, &pe) {
                        Ok(v) => Some(v),
                        Err(e) => {
                            eprintln!("error: {e}");
                            return EXIT_CONFIG;
                        }
                    }
                }
                None => None,
            };
            match sequences::generate_mod(kind, args.n, &ft, x_mod) {
                Ok(t) => t
                    .values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (i, v.to_string()))
                    .collect(),
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_CONFIG;
                }
            }
        }
    };
    let content = report::render_seq(&meta, &rows, fmt);
    match emit(&meta, &content, fmt, &args.out) {
        Ok(path) => {
            eprintln!("seq: {} rows -> {}", rows.len(), path.display());
            EXIT_OK
        }
        Err(e) => {
            eprintln!("i/o error: {e}");
            EXIT_IO
        }
    }
}

/// Dispatch a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match &cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Identities(args) => run_identities(args),
        Command::Conjectures(args) => run_conjectures(args),
        Command::Seq(args) => run_seq(args),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_range_parsing() {
        assert_eq!(parse_prime_range("5..100").unwrap(), (5, 100));
        assert!(parse_prime_range("2..100").is_err());
        assert!(parse_prime_range("100..5").is_err());
        assert!(parse_prime_range("xyz").is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(
            parse_rational("-2/3").unwrap(),
            BigRational::new(BigInt::from(-2), BigInt::from(3))
        );
        assert_eq!(
            parse_rational("7").unwrap(),
            BigRational::from_integer(BigInt::from(7))
        );
        assert!(parse_rational("1/0").is_err());
    }
}
