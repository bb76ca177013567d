use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclicity::harness::{
    builtin_corpus, golden_table, identity_suite, load_corpus, render_table, verify_theorem_a,
    verify_theorem_b, CampaignConfig, CorpusEntry, IdentityConfig,
};
use cyclicity::structure::{analyze, recognize};
use cyclicity::{build, census, GroupSpec};

#[derive(Parser)]
#[command(
    name = "cyclicity",
    version,
    about = "Count cyclic subgroups of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the order, the number of cyclic subgroups and its split by order.
    Count { spec: String },
    /// Print the cyclic subgroup census.
    Census {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification campaign over a corpus.
    Verify {
        #[arg(value_enum)]
        campaign: Campaign,
        #[command(flatten)]
        options: VerifyOptions,
    },
    /// Construct a group and print its structure.
    Build {
        spec: String,
        /// Also check the constructed order against the documented one.
        #[arg(long)]
        check: bool,
    },
    /// Recompute the reference values.
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Campaign {
    TheoremA,
    TheoremB,
    Identities,
}

#[derive(Args)]
struct VerifyOptions {
    /// Line-oriented JSON corpus; the built-in corpus when omitted.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    #[arg(long)]
    tsv: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Per-entry time budget in seconds.
    #[arg(long, default_value_t = 30.0)]
    timeout: f64,
}

fn parse_spec(text: &str) -> Result<GroupSpec, String> {
    GroupSpec::parse(text).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Count { spec } => {
            let g = build(&parse_spec(&spec)?).map_err(|e| e.to_string())?;
            let c = census(&g);
            println!("order {}", c.order);
            println!("c {}", c.total);
            for (m, n) in &c.by_order {
                println!("  order {m}: {n}");
            }
            Ok(0)
        }
        Command::Census { spec, json } => {
            let g = build(&parse_spec(&spec)?).map_err(|e| e.to_string())?;
            let c = census(&g);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&c).map_err(|e| e.to_string())?
                );
            } else {
                let split: Vec<String> =
                    c.by_order.iter().map(|(m, n)| format!("{m}:{n}")).collect();
                println!(
                    "{}\t{}\t{}\t{}",
                    g.label(),
                    c.order,
                    c.total,
                    split.join(" ")
                );
            }
            Ok(0)
        }
        Command::Build { spec, check } => {
            let spec = parse_spec(&spec)?;
            let g = build(&spec).map_err(|e| e.to_string())?;
            let report = analyze(&g);
            println!(
                "{}: order {} on {} points",
                g.label(),
                g.order(),
                g.degree()
            );
            println!(
                "solvable {} supersolvable {} perfect {} simple {}",
                report.solvable, report.supersolvable, report.perfect, report.simple
            );
            for (p, n) in &report.sylow_counts {
                println!("n_{p} = {n}");
            }
            if let Some(name) = recognize(&g).name() {
                println!("recognized as {name}");
            }
            if check {
                match cyclicity::constructors::documented_order(&spec) {
                    Some(expected) if expected != g.order() as u64 => {
                        println!("check FAILED: documented order {expected}");
                        return Ok(1);
                    }
                    Some(expected) => println!("check ok: documented order {expected}"),
                    None => println!("check ok: no documented order"),
                }
            }
            Ok(0)
        }
        Command::Table => {
            let rows = golden_table().map_err(|e| e.to_string())?;
            print!("{}", render_table(&rows));
            Ok(if rows.iter().all(|r| r.matches) { 0 } else { 1 })
        }
        Command::Verify { campaign, options } => verify(campaign, &options),
    }
}

fn verify(campaign: Campaign, options: &VerifyOptions) -> Result<u8, String> {
    let corpus: Vec<CorpusEntry> = match &options.corpus {
        Some(path) => load_corpus(path).map_err(|e| e.to_string())?,
        None => builtin_corpus(),
    };
    if !(options.timeout.is_finite() && options.timeout > 0.0) {
        return Err("--timeout must be a positive number of seconds".into());
    }
    let config = CampaignConfig {
        jobs: options.jobs.max(1),
        timeout: Duration::from_secs_f64(options.timeout),
    };
    let (text, code) = match campaign {
        Campaign::TheoremA | Campaign::TheoremB => {
            let report = match campaign {
                Campaign::TheoremA => verify_theorem_a(&corpus, &config),
                _ => verify_theorem_b(&corpus, &config),
            };
            let text = if options.tsv {
                report.to_tsv()
            } else if options.json {
                report.to_json()
            } else {
                let s = report.summary;
                format!(
                    "{} entries: {} violations, {} exceptions, {} errors, {} timeouts",
                    report.rows.len(),
                    s.violations,
                    s.exceptions,
                    s.errors,
                    s.timeouts
                )
            };
            (text, report.exit_code())
        }
        Campaign::Identities => {
            let report = identity_suite(&corpus, &IdentityConfig::default());
            let text = if options.tsv {
                report.to_tsv()
            } else if options.json {
                report.to_json()
            } else {
                let s = report.summary;
                format!(
                    "{} groups, {} coprime pairs, {} quotient checks: {} failures, {} errors",
                    s.groups,
                    s.pairs_checked,
                    s.quotient_checks,
                    s.failures(),
                    s.errors
                )
            };
            (text, report.exit_code())
        }
    };
    println!("{}", text.trim_end());
    Ok(code as u8)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}
