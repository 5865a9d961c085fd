//! Library behind the `codeg` binary: group-spec resolution, the bundled
//! corpus, report emission, and the named checks.

pub mod checks;
pub mod corpus;
pub mod pipeline;
pub mod report;
pub mod resolve;

use codeg_core::chartab::ChartabError;
use codeg_core::codegree::{classify_theorem_a, codegree_report, CodegreeReport};
use codeg_core::families::FamilyError;
use codeg_core::permgroup::PermError;
use codeg_core::CharacterTable;
use thiserror::Error;

use checks::{run_checks, CheckKind, NamedCheck};
use report::{report_json, sweep_line, ReportJson, SweepJson, SweepSummaryJson};
use resolve::LoadedGroup;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(
        "unknown group spec '{0}' (expected psl2:Q, pgl2:Q, sl2:Q, psigmal2:Q, pgammal2:Q, m10, file:PATH, or a corpus id)"
    )]
    UnknownSpec(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Family(#[from] FamilyError),
    #[error("{0}")]
    Perm(#[from] PermError),
    #[error("{0}")]
    Chartab(#[from] ChartabError),
    #[error("group order {order} exceeds the cap {cap} (raise --max-order)")]
    OrderCap { order: u64, cap: u64 },
    #[error("orthogonality verification failed: {0}")]
    Orthogonality(String),
    #[error("unknown check '{0}' (expected lemma21, ik, thmA, eqsets, prop22)")]
    UnknownCheck(String),
    #[error("invalid superset selector '{0}' (expected 1, 2, or cd)")]
    BadEq(String),
}

/// Everything computed for one group: the group itself, its exact character
/// table, the codegree report with verdict, and any executed checks.
pub struct Analysis {
    pub loaded: LoadedGroup,
    pub table: CharacterTable,
    pub core: CodegreeReport,
    pub checks: Vec<NamedCheck>,
}

impl Analysis {
    pub fn all_checks_pass(&self) -> bool {
        !self.checks.iter().any(|c| c.failed())
    }

    pub fn to_json(&self) -> ReportJson {
        report_json(&self.core, self.table.num_classes(), &self.checks)
    }

    pub fn to_text(&self) -> String {
        report::report_text(&self.core, self.table.num_classes(), &self.checks)
    }
}

pub fn analyze_loaded(
    loaded: LoadedGroup,
    kinds: &[CheckKind],
    prime: Option<u64>,
    threads: usize,
) -> Result<Analysis, CliError> {
    let table = pipeline::compute_table(&loaded.group, prime, threads)?;
    let verdict = classify_theorem_a(&loaded.group, &table);
    let checks = run_checks(kinds, &loaded, &table, &verdict);
    let core = codegree_report(&loaded.id, &loaded.group, &table);
    Ok(Analysis {
        loaded,
        table,
        core,
        checks,
    })
}

pub fn analyze_spec(
    spec: &str,
    kinds: &[CheckKind],
    prime: Option<u64>,
    threads: usize,
    max_order: u64,
) -> Result<Analysis, CliError> {
    let loaded = resolve::load_group(spec, max_order)?;
    analyze_loaded(loaded, kinds, prime, threads)
}

/// Outcome of one sweep entry, merged in manifest order.
enum EntryOutcome {
    Done(Box<Analysis>),
    /// Construction refused by the order cap — deliberate, not a failure.
    Skipped { id: String, reason: String },
    /// Unexpected per-entry error; recorded as a failed `construct` check.
    Failed { id: String, error: String },
}

fn sweep_entry(entry: &corpus::CorpusEntry, kinds: &[CheckKind], max_order: u64) -> EntryOutcome {
    let loaded = resolve::resolve_entry_source(entry.source)
        .and_then(|source| resolve::construct(entry.id, source, max_order));
    let loaded = match loaded {
        Ok(l) => l,
        Err(CliError::OrderCap { order, cap }) => {
            return EntryOutcome::Skipped {
                id: entry.id.to_string(),
                reason: format!("order {order} exceeds the cap {cap}"),
            }
        }
        Err(CliError::Perm(PermError::OrderCapExceeded(cap))) => {
            return EntryOutcome::Skipped {
                id: entry.id.to_string(),
                reason: format!("order exceeds the cap {cap}"),
            }
        }
        Err(e) => {
            return EntryOutcome::Failed {
                id: entry.id.to_string(),
                error: e.to_string(),
            }
        }
    };
    if loaded.group.order() != entry.expected_order {
        return EntryOutcome::Failed {
            id: entry.id.to_string(),
            error: format!(
                "constructed order {} != expected {}",
                loaded.group.order(),
                entry.expected_order
            ),
        };
    }
    match analyze_loaded(loaded, kinds, None, 1) {
        Ok(analysis) => EntryOutcome::Done(Box::new(analysis)),
        Err(e) => EntryOutcome::Failed {
            id: entry.id.to_string(),
            error: e.to_string(),
        },
    }
}

pub struct SweepResult {
    pub json: SweepJson,
    pub text: String,
    pub all_pass: bool,
}

/// Runs the selected checks over the bundled corpus. Entries are processed
/// in parallel (`threads` workers, round-robin) and merged back in manifest
/// order, so the output is independent of the thread count.
pub fn run_sweep(
    kinds: &[CheckKind],
    threads: usize,
    max_order: u64,
    include_l2_32: bool,
) -> SweepResult {
    let entries = corpus::corpus(include_l2_32);
    let n = entries.len();
    let workers = threads.clamp(1, n.max(1));
    let mut outcomes: Vec<Option<EntryOutcome>> = (0..n).map(|_| None).collect();
    std::thread::scope(|scope| {
        let entries = &entries;
        let handles: Vec<_> = (0..workers)
            .map(|t| {
                scope.spawn(move || -> Vec<(usize, EntryOutcome)> {
                    (t..n)
                        .step_by(workers)
                        .map(|i| (i, sweep_entry(&entries[i], kinds, max_order)))
                        .collect()
                })
            })
            .collect();
        for handle in handles {
            for (i, outcome) in handle.join().expect("sweep worker panicked") {
                outcomes[i] = Some(outcome);
            }
        }
    });

    let mut reports = Vec::new();
    let mut text = String::new();
    text.push_str(&format!("corpus {n} groups\n"));
    let mut pass = 0usize;
    let mut fail = 0usize;
    let mut not_applicable = 0usize;
    let mut skipped = 0usize;
    let mut all_pass = true;
    for outcome in outcomes.into_iter().map(|o| o.expect("entry processed")) {
        match outcome {
            EntryOutcome::Done(analysis) => {
                for c in &analysis.checks {
                    match c.status {
                        codeg_core::codegree::CheckStatus::Pass => pass += 1,
                        codeg_core::codegree::CheckStatus::NotApplicable => not_applicable += 1,
                        codeg_core::codegree::CheckStatus::Fail => fail += 1,
                    }
                }
                if !analysis.all_checks_pass() {
                    all_pass = false;
                }
                text.push_str(&sweep_line(&analysis.core, &analysis.checks));
                text.push('\n');
                reports.push(analysis.to_json());
            }
            EntryOutcome::Skipped { id, reason } => {
                skipped += 1;
                text.push_str(&format!("{id} skipped ({reason})\n"));
            }
            EntryOutcome::Failed { id, error } => {
                fail += 1;
                all_pass = false;
                text.push_str(&format!("{id} FAILED ({error})\n"));
                reports.push(ReportJson {
                    id,
                    order: 0,
                    num_classes: 0,
                    degrees: Vec::new(),
                    cod_all: Vec::new(),
                    cod_nonlinear: Vec::new(),
                    solvable: false,
                    verdict: report::VerdictJson {
                        kind: String::from("NotApplicable"),
                        family: None,
                        q: None,
                        witness: Some(String::from("construction failed")),
                    },
                    checks: vec![report::CheckJson {
                        name: String::from("construct"),
                        pass: false,
                        witness: Some(error),
                    }],
                });
            }
        }
    }
    text.push_str(&format!(
        "summary groups={n} pass={pass} fail={fail} na={not_applicable} skipped={skipped}\n"
    ));
    let json = SweepJson {
        version: String::from(env!("CARGO_PKG_VERSION")),
        reports,
        summary: SweepSummaryJson {
            groups: n,
            pass,
            fail,
            not_applicable,
        },
    };
    SweepResult {
        json,
        text,
        all_pass,
    }
}

/// `superset` verb payload.
pub fn superset_values(q: u64, b: u64, which: &str) -> Result<Vec<u64>, CliError> {
    match which {
        "1" => Ok(codeg_core::families::eq1_superset(q, b)?),
        "2" => Ok(codeg_core::families::eq2_superset(q, b)),
        "cd" => Ok(codeg_core::families::white_degree_superset(q, b)),
        other => Err(CliError::BadEq(other.to_string())),
    }
}
