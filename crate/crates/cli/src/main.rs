use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use codeg_cli::checks::parse_check_list;
use codeg_cli::report::{set_text, table_json, verdict_text};
use codeg_cli::{analyze_spec, resolve, run_sweep, superset_values, CliError};
use codeg_core::format_table;

#[derive(Parser)]
#[command(
    name = "codeg",
    version,
    about = "Exact character codegrees of finite permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GroupFlags {
    /// Group spec: psl2:Q, pgl2:Q, sl2:Q, psigmal2:Q, pgammal2:Q, m10,
    /// file:PATH, or a bundled corpus id.
    spec: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Override the lifting prime (validated).
    #[arg(long)]
    prime: Option<u64>,
    /// Worker threads for class-matrix computation.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Refuse to build groups larger than this.
    #[arg(long, default_value_t = 100_000)]
    max_order: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the exact character table of a group.
    Table {
        #[command(flatten)]
        flags: GroupFlags,
    },
    /// Codegree report: degrees, codegrees, classification verdict, checks.
    Cod {
        #[command(flatten)]
        flags: GroupFlags,
    },
    /// Print only the classification verdict.
    Classify {
        #[command(flatten)]
        flags: GroupFlags,
    },
    /// Run the named checks across the bundled corpus.
    Sweep {
        /// Comma-separated subset of lemma21,ik,thmA,eqsets,prop22
        /// (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long)]
        json: bool,
        /// Worker threads (one group per worker).
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = 100_000)]
        max_order: u64,
        /// Also run the order-32736 group L2(32).
        #[arg(long)]
        include_l2_32: bool,
    },
    /// Evaluate a codegree/degree superset formula.
    Superset {
        q: u64,
        b: u64,
        /// Which formula: 1 (diagonal form, odd q), 2 (general), cd (degrees).
        #[arg(long)]
        eq: String,
        #[arg(long)]
        json: bool,
    },
}

/// Writes to stdout, exiting quietly if the downstream consumer closed the
/// pipe (e.g. `codeg table ... | head`).
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    if out.write_all(s.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn emit_line(s: &str) {
    emit(s);
    emit("\n");
}

fn run(cmd: Cmd) -> Result<bool, CliError> {
    match cmd {
        Cmd::Table { flags } => {
            let loaded = resolve::load_group(&flags.spec, flags.max_order)?;
            let table =
                codeg_cli::pipeline::compute_table(&loaded.group, flags.prime, flags.threads)?;
            if flags.json {
                emit_line(&serde_json::to_string_pretty(&table_json(&table)).expect("serializable"));
            } else {
                emit(&format_table(&table));
            }
            Ok(true)
        }
        Cmd::Cod { flags } => {
            let kinds = parse_check_list(&[])?;
            let analysis =
                analyze_spec(&flags.spec, &kinds, flags.prime, flags.threads, flags.max_order)?;
            if flags.json {
                emit_line(&serde_json::to_string_pretty(&analysis.to_json()).expect("serializable"));
            } else {
                emit(&analysis.to_text());
            }
            Ok(analysis.all_checks_pass())
        }
        Cmd::Classify { flags } => {
            let analysis =
                analyze_spec(&flags.spec, &[], flags.prime, flags.threads, flags.max_order)?;
            if flags.json {
                emit_line(&serde_json::to_string_pretty(&analysis.to_json()).expect("serializable"));
            } else {
                emit_line(&verdict_text(&analysis.core.verdict));
            }
            Ok(!matches!(
                analysis.core.verdict,
                codeg_core::codegree::Verdict::ThreeUnmatched { .. }
            ))
        }
        Cmd::Sweep {
            checks,
            json,
            threads,
            max_order,
            include_l2_32,
        } => {
            let kinds = parse_check_list(&checks)?;
            let result = run_sweep(&kinds, threads, max_order, include_l2_32);
            if json {
                emit_line(&serde_json::to_string_pretty(&result.json).expect("serializable"));
            } else {
                emit(&result.text);
            }
            Ok(result.all_pass)
        }
        Cmd::Superset { q, b, eq, json } => {
            let values = superset_values(q, b, &eq)?;
            if json {
                emit_line(&serde_json::json!({ "q": q, "b": b, "eq": eq, "set": values }).to_string());
            } else {
                emit_line(&set_text(&values));
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
