use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rankcrank::cyclotomic::{exact_quotient, phi, Modulus, Variant};
use rankcrank::partitions::{colored_count, modified_crank_poly, modified_rank_poly, SERIES_BOUND};
use rankcrank::qseries::{crank_series_corrected, rank_series};
use rankcrank::report::summary_csv;
use rankcrank::search::{self, SearchResult};
use rankcrank::verify::{self, ClaimOptions};
use rankcrank::{Error, LaurentPoly, Report};

#[derive(Parser)]
#[command(name = "rankcrank", version, about = "Exact partition rank/crank statistics and checks")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads for parallel suites.
    #[arg(long, global = true, env = "RANKCRANK_THREADS")]
    threads: Option<usize>,

    /// Series truncation order; must cover the largest n requested.
    #[arg(long, global = true)]
    q_order: Option<usize>,

    /// Report measured wall time instead of 0 in `elapsed_s`.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print a rank/crank polynomial.
    Poly {
        #[arg(value_enum)]
        which: PolyKind,
        #[arg(long)]
        n: u64,
        /// Prime for the modified polynomials.
        #[arg(long)]
        ell: Option<u64>,
    },
    /// Divide a Laurent polynomial by Phi_l(z), or by Phi_l(z^2) with --squared.
    Quotient {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        squared: bool,
        /// e.g. "z^-2 + 1 + z^2"
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Run a verification suite by claim id (`verify --list` shows them).
    Verify {
        #[arg(required_unless_present = "list")]
        claim_id: Option<String>,
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long)]
        k_max: Option<u64>,
        #[arg(long)]
        list: bool,
    },
    /// Unimodality thresholds over the colored crank space.
    Search(SearchArgs),
    /// Colored partition counts.
    Colored {
        #[command(subcommand)]
        what: ColoredCmd,
    },
    /// Compare N(m, n) with its sech^2 approximation.
    Asymptotic {
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0")]
        m: Vec<i64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Rank,
    Crank,
    ModifiedRank,
    ModifiedCrank,
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct SearchArgs {
    #[command(subcommand)]
    table: Option<SearchCmd>,
    #[arg(long, default_value_t = 3)]
    k_lo: u32,
    #[arg(long, default_value_t = 6)]
    k_hi: u32,
    #[arg(long, default_value_t = search::TABLE1_N_HI)]
    n_hi: u32,
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Recompute the published thresholds for 3 <= k <= 6; exits 1 on mismatch.
    Table1,
}

#[derive(Subcommand)]
enum ColoredCmd {
    /// p_k(n)
    Pk {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u64,
    },
}

/// Either a usage problem (exit 2) or a failed check (exit 1).
enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn check_order(cli: &Cli, n: u64) -> anyhow::Result<usize> {
    if n > SERIES_BOUND {
        bail!(Error::BoundExceeded { n, bound: SERIES_BOUND });
    }
    match cli.q_order {
        Some(q) if (q as u64) < n => bail!("--q-order {q} is below the requested n = {n}"),
        Some(q) => Ok(q),
        None => Ok(n as usize),
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Poly { which, n, ell } => {
            let p = match which {
                PolyKind::Rank => rank_series(check_order(cli, *n)?).coeff(*n as usize).clone(),
                PolyKind::Crank => crank_series_corrected(check_order(cli, *n)?).coeff(*n as usize).clone(),
                PolyKind::ModifiedRank => {
                    modified_rank_poly(ell.context("--ell is required for modified-rank")?, *n)?
                }
                PolyKind::ModifiedCrank => {
                    modified_crank_poly(ell.context("--ell is required for modified-crank")?, *n)?
                }
            };
            print_poly(&p, cli.format.unwrap_or(Format::Text));
            Ok(Outcome::Ok)
        }
        Command::Quotient { ell, squared, poly } => {
            let f: LaurentPoly = poly.parse()?;
            let variant = if *squared { Variant::Squared } else { Variant::Standard };
            match exact_quotient(&f, &phi(Modulus::new(*ell, variant)?)) {
                Ok(q) => {
                    print_poly(&q, cli.format.unwrap_or(Format::Text));
                    Ok(Outcome::Ok)
                }
                Err(Error::NotDivisible) => {
                    println!("NotDivisible");
                    Ok(Outcome::Failed)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify { claim_id, n_max, k_max, list } => {
            if *list {
                for id in verify::CLAIM_IDS {
                    println!("{id}\t{}", verify::claim_help(id).unwrap_or(""));
                }
                return Ok(Outcome::Ok);
            }
            let id = claim_id.as_deref().expect("clap enforces presence");
            let report = verify::run_claim(id, ClaimOptions { n_max: *n_max, k_max: *k_max })?;
            let report = if cli.timing { report } else { report.without_timing() };
            print_report(&report, cli.format.unwrap_or(Format::Json));
            Ok(if report.passed() { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Search(args) => {
            let format = cli.format.unwrap_or(Format::Csv);
            match args.table {
                Some(SearchCmd::Table1) => {
                    let results = search::exhaustive_search(3, 6, search::TABLE1_N_HI)?;
                    print_results(&results, format);
                    let matches = results
                        .iter()
                        .zip(search::table1_expected())
                        .all(|(r, (spec, want))| r.spec == spec && r.threshold == want);
                    if !matches {
                        eprintln!("computed thresholds differ from the published table");
                    }
                    Ok(if matches { Outcome::Ok } else { Outcome::Failed })
                }
                None => {
                    if args.k_lo < 3 || args.k_lo > args.k_hi || args.n_hi < 2 {
                        bail!("need 3 <= k-lo <= k-hi and n-hi >= 2");
                    }
                    let results = search::exhaustive_search(args.k_lo, args.k_hi, args.n_hi)?;
                    print_results(&results, format);
                    Ok(Outcome::Ok)
                }
            }
        }
        Command::Colored { what: ColoredCmd::Pk { k, n } } => {
            check_order(cli, *n)?;
            let v = colored_count(*k, *n as usize);
            match cli.format.unwrap_or(Format::Text) {
                Format::Text => println!("{v}"),
                Format::Csv => println!("k,n,p_k\n{k},{n},{v}"),
                Format::Json => println!("{}", serde_json::json!({"k": k, "n": n, "p_k": v.to_string()})),
            }
            Ok(Outcome::Ok)
        }
        Command::Asymptotic { n, m } => {
            let samples = verify::asymptotic_diagnostic(*n, m)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => println!("{}", serde_json::to_string_pretty(&samples)?),
                Format::Csv | Format::Text => {
                    println!("n,m,gamma,predicted,actual,rel_error,in_range");
                    for s in &samples {
                        println!(
                            "{},{},{:.6},{:.6e},{},{:.6},{}",
                            s.n, s.m, s.gamma, s.predicted, s.actual, s.rel_error, s.in_range
                        );
                    }
                }
            }
            Ok(Outcome::Ok)
        }
    }
}

fn print_poly(p: &LaurentPoly, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Json => println!("{}", serde_json::to_string(p).expect("polynomials serialize")),
        Format::Csv => {
            println!("exponent,coefficient");
            for (e, c) in p.terms() {
                println!("{e},{c}");
            }
        }
    }
}

fn print_report(r: &Report, format: Format) {
    match format {
        Format::Json => println!("{}", r.to_json()),
        Format::Csv => print!("{}", summary_csv(std::slice::from_ref(r))),
        Format::Text => {
            println!("{} [{}]: {:?}", r.claim_id, r.range, r.status);
            for c in &r.counterexamples {
                println!("  counterexample {} {:?}", c.check, c.params);
            }
            for n in &r.notes {
                println!("  note: {n}");
            }
        }
    }
}

fn print_results(results: &[SearchResult], format: Format) {
    match format {
        Format::Csv => print!("{}", search::to_csv(results)),
        Format::Json => println!("{}", serde_json::to_string_pretty(results).expect("results serialize")),
        Format::Text => {
            for r in results {
                let t = match r.threshold {
                    Some(t) => format!("unimodal for all n > {t}"),
                    None => "no".to_string(),
                };
                println!("{}: {t}", r.spec);
            }
        }
    }
}
