//! The five named per-group checks and their selection syntax.

use codeg_core::codegree::{
    check_isaacs_knutson_instance, check_lemma_smallest_prime, check_quotient_strict_containment,
    cod_sets, CheckReport, CheckStatus, Verdict,
};
use codeg_core::families::{eq1_superset, eq2_superset, white_degree_superset, FamilyKind};
use codeg_core::CharacterTable;

use crate::report::set_text;
use crate::resolve::LoadedGroup;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// Smallest prime divisor of `|G : G'|` is missing from `cod(G|G')`,
    /// and the two sets differ by at most one element.
    Lemma21,
    /// Every nontrivial normal subgroup with `|cd(G|N)| <= 2` is solvable.
    Ik,
    /// The verdict is never `ThreeUnmatched`.
    ThmA,
    /// Codegrees and degrees land in the closed-form supersets for the
    /// group's family parameters.
    Eqsets,
    /// Nonsolvable proper quotients satisfy
    /// `cod(G/N | (G/N)') strictly inside cod(G|G')`.
    Prop22,
}

pub const ALL_CHECKS: [CheckKind; 5] = [
    CheckKind::Lemma21,
    CheckKind::Ik,
    CheckKind::ThmA,
    CheckKind::Eqsets,
    CheckKind::Prop22,
];

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Lemma21 => "lemma21",
            CheckKind::Ik => "ik",
            CheckKind::ThmA => "thmA",
            CheckKind::Eqsets => "eqsets",
            CheckKind::Prop22 => "prop22",
        }
    }

    pub fn parse(s: &str) -> Result<CheckKind, CliError> {
        match s {
            "lemma21" => Ok(CheckKind::Lemma21),
            "ik" => Ok(CheckKind::Ik),
            "thmA" => Ok(CheckKind::ThmA),
            "eqsets" => Ok(CheckKind::Eqsets),
            "prop22" => Ok(CheckKind::Prop22),
            other => Err(CliError::UnknownCheck(other.to_string())),
        }
    }
}

/// Parses a `--checks` list; empty input selects all five.
pub fn parse_check_list(names: &[String]) -> Result<Vec<CheckKind>, CliError> {
    if names.is_empty() {
        return Ok(ALL_CHECKS.to_vec());
    }
    let mut kinds = Vec::new();
    for name in names {
        let kind = CheckKind::parse(name)?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    Ok(kinds)
}

/// One executed check, ready for text or JSON rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub witness: Option<String>,
}

impl NamedCheck {
    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

fn named(kind: CheckKind, report: CheckReport) -> NamedCheck {
    NamedCheck {
        name: kind.name(),
        status: report.status,
        witness: report.witness,
    }
}

pub fn run_check(
    kind: CheckKind,
    loaded: &LoadedGroup,
    t: &CharacterTable,
    verdict: &Verdict,
) -> NamedCheck {
    let g = &loaded.group;
    match kind {
        CheckKind::Lemma21 => named(kind, check_lemma_smallest_prime(g, t)),
        CheckKind::Ik => named(kind, check_isaacs_knutson_instance(g, t)),
        CheckKind::Prop22 => named(kind, check_quotient_strict_containment(g, t)),
        CheckKind::ThmA => named(kind, theorem_a_check(verdict)),
        CheckKind::Eqsets => named(kind, eqsets_check(loaded, t)),
    }
}

pub fn run_checks(
    kinds: &[CheckKind],
    loaded: &LoadedGroup,
    t: &CharacterTable,
    verdict: &Verdict,
) -> Vec<NamedCheck> {
    kinds
        .iter()
        .map(|&kind| run_check(kind, loaded, t, verdict))
        .collect()
}

fn theorem_a_check(verdict: &Verdict) -> CheckReport {
    match verdict {
        Verdict::ThreeUnmatched { cod_nonlinear } => CheckReport {
            status: CheckStatus::Fail,
            witness: Some(format!(
                "three nonlinear codegrees {} but no family fingerprint matches",
                set_text(cod_nonlinear)
            )),
        },
        _ => CheckReport {
            status: CheckStatus::Pass,
            witness: None,
        },
    }
}

/// Elements of `sub` missing from the sorted superset.
fn missing_from(sub: &[u64], superset: &[u64]) -> Vec<u64> {
    sub.iter()
        .copied()
        .filter(|x| superset.binary_search(x).is_err())
        .collect()
}

/// Containment of the nonlinear codegrees in the closed-form superset for
/// `(q, b)` — the diagonal-containing form when the group contains the
/// diagonal automorphisms, the general form otherwise — and of the degree
/// set in the corresponding degree superset.
fn eqsets_check(loaded: &LoadedGroup, t: &CharacterTable) -> CheckReport {
    let Some(spec) = &loaded.family else {
        return CheckReport {
            status: CheckStatus::NotApplicable,
            witness: Some(String::from("no field parameterization attached")),
        };
    };
    if spec.kind() == FamilyKind::Sl2 {
        return CheckReport {
            status: CheckStatus::NotApplicable,
            witness: Some(String::from("SL2(q) has a nontrivial center; not almost simple")),
        };
    }
    let q = spec.q();
    let b = spec.b();
    let (cod_superset, label) = if spec.contains_diagonal() {
        (
            eq1_superset(q, b).expect("diagonal automorphisms require odd q"),
            "eq1",
        )
    } else {
        (eq2_superset(q, b), "eq2")
    };
    let (_, cod_nonlinear) = cod_sets(t);
    let missing = missing_from(&cod_nonlinear, &cod_superset);
    if !missing.is_empty() {
        return CheckReport {
            status: CheckStatus::Fail,
            witness: Some(format!(
                "codegrees {} escape {label}({q},{b}) = {}",
                set_text(&missing),
                set_text(&cod_superset)
            )),
        };
    }
    let degree_superset = white_degree_superset(q, b);
    let missing = missing_from(&t.degree_set(), &degree_superset);
    if !missing.is_empty() {
        return CheckReport {
            status: CheckStatus::Fail,
            witness: Some(format!(
                "degrees {} escape the degree superset for ({q},{b}) = {}",
                set_text(&missing),
                set_text(&degree_superset)
            )),
        };
    }
    CheckReport {
        status: CheckStatus::Pass,
        witness: None,
    }
}
