//! Stable JSON report model and deterministic text rendering.
//!
//! Field names are part of the output contract:
//! `{id, order, num_classes, degrees[], cod_all[], cod_nonlinear[],
//!   solvable, verdict{kind, family?, q?, witness?},
//!   checks[{name, pass, witness?}]}`.

use std::fmt::Write as _;

use codeg_core::codegree::{CheckStatus, CodegreeReport, Verdict};
use codeg_core::CharacterTable;
use serde::{Deserialize, Serialize};

use crate::checks::NamedCheck;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub id: String,
    pub order: u64,
    pub num_classes: usize,
    pub degrees: Vec<u64>,
    pub cod_all: Vec<u64>,
    pub cod_nonlinear: Vec<u64>,
    pub solvable: bool,
    pub verdict: VerdictJson,
    pub checks: Vec<CheckJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummaryJson {
    pub groups: usize,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepJson {
    pub version: String,
    pub reports: Vec<ReportJson>,
    pub summary: SweepSummaryJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharRowJson {
    pub degree: u64,
    /// Canonical coefficient vectors modulo the cyclotomic polynomial,
    /// one per class, each of length `phi(exponent)`.
    pub values: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub order: u64,
    pub prime: u64,
    pub exponent: u64,
    pub class_sizes: Vec<u64>,
    pub rep_orders: Vec<u64>,
    pub chars: Vec<CharRowJson>,
}

/// `{a,b,c}` with ascending elements and no spaces.
pub fn set_text(xs: &[u64]) -> String {
    let mut out = String::from("{");
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{x}");
    }
    out.push('}');
    out
}

pub fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::NotApplicable => String::from("NotApplicable(solvable)"),
        Verdict::NotThree { cod_nonlinear } => {
            format!("NotThree({})", set_text(cod_nonlinear))
        }
        Verdict::ThreeMatched { family, q } => format!("ThreeMatched({family}, q={q})"),
        Verdict::ThreeUnmatched { cod_nonlinear } => {
            format!("ThreeUnmatched({})", set_text(cod_nonlinear))
        }
    }
}

pub fn verdict_json(v: &Verdict) -> VerdictJson {
    match v {
        Verdict::NotApplicable => VerdictJson {
            kind: String::from("NotApplicable"),
            family: None,
            q: None,
            witness: Some(String::from("solvable")),
        },
        Verdict::NotThree { cod_nonlinear } => VerdictJson {
            kind: String::from("NotThree"),
            family: None,
            q: None,
            witness: Some(format!(
                "|cod(G|G')| = {} != 3",
                cod_nonlinear.len()
            )),
        },
        Verdict::ThreeMatched { family, q } => VerdictJson {
            kind: String::from("ThreeMatched"),
            family: Some(family.to_string()),
            q: Some(*q),
            witness: None,
        },
        Verdict::ThreeUnmatched { cod_nonlinear } => VerdictJson {
            kind: String::from("ThreeUnmatched"),
            family: None,
            q: None,
            witness: Some(format!(
                "three codegrees {} match no family fingerprint",
                set_text(cod_nonlinear)
            )),
        },
    }
}

pub fn check_json(c: &NamedCheck) -> CheckJson {
    let witness = match c.status {
        CheckStatus::NotApplicable => Some(format!(
            "not applicable: {}",
            c.witness.as_deref().unwrap_or("")
        )),
        _ => c.witness.clone(),
    };
    CheckJson {
        name: c.name.to_string(),
        pass: c.status != CheckStatus::Fail,
        witness,
    }
}

pub fn check_status_text(c: &NamedCheck) -> String {
    match c.status {
        CheckStatus::Pass => String::from("pass"),
        CheckStatus::NotApplicable => format!(
            "na ({})",
            c.witness.as_deref().unwrap_or("not applicable")
        ),
        CheckStatus::Fail => format!(
            "FAIL ({})",
            c.witness.as_deref().unwrap_or("no witness recorded")
        ),
    }
}

pub fn report_json(
    core: &CodegreeReport,
    num_classes: usize,
    checks: &[NamedCheck],
) -> ReportJson {
    ReportJson {
        id: core.id.clone(),
        order: core.order,
        num_classes,
        degrees: core.degrees.clone(),
        cod_all: core.cod_all.clone(),
        cod_nonlinear: core.cod_nonlinear.clone(),
        solvable: core.solvable,
        verdict: verdict_json(&core.verdict),
        checks: checks.iter().map(check_json).collect(),
    }
}

/// Multi-line text block for `cod`.
pub fn report_text(core: &CodegreeReport, num_classes: usize, checks: &[NamedCheck]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "id {}", core.id);
    let _ = writeln!(out, "order {}", core.order);
    let _ = writeln!(out, "classes {num_classes}");
    let mut degrees = String::new();
    for (i, d) in core.degrees.iter().enumerate() {
        if i > 0 {
            degrees.push(' ');
        }
        let _ = write!(degrees, "{d}");
    }
    let _ = writeln!(out, "degrees {degrees}");
    let _ = writeln!(out, "cod_all {}", set_text(&core.cod_all));
    let _ = writeln!(out, "cod_nonlinear {}", set_text(&core.cod_nonlinear));
    let _ = writeln!(out, "solvable {}", core.solvable);
    let _ = writeln!(out, "verdict {}", verdict_text(&core.verdict));
    for c in checks {
        let _ = writeln!(out, "check {}: {}", c.name, check_status_text(c));
    }
    out
}

/// One compact line per sweep entry.
pub fn sweep_line(core: &CodegreeReport, checks: &[NamedCheck]) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "{} order={} cod_nonlinear={} verdict={}",
        core.id,
        core.order,
        set_text(&core.cod_nonlinear),
        verdict_text(&core.verdict)
    );
    for c in checks {
        let status = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::NotApplicable => "na",
            CheckStatus::Fail => "FAIL",
        };
        let _ = write!(out, " {}={status}", c.name);
    }
    out
}

pub fn table_json(t: &CharacterTable) -> TableJson {
    let chars = (0..t.num_classes())
        .map(|r| CharRowJson {
            degree: t.degree(r),
            values: (0..t.num_classes())
                .map(|c| t.value(r, c).canonical().to_vec())
                .collect(),
        })
        .collect();
    TableJson {
        order: t.order(),
        prime: t.prime(),
        exponent: t.exponent(),
        class_sizes: t.class_sizes().to_vec(),
        rep_orders: t.rep_orders().to_vec(),
        chars,
    }
}
