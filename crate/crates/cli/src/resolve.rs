//! Group-spec resolution: family strings, bundled corpus ids, and
//! generator files.

use codeg_core::families::{build, FamilyKind, FamilySpec};
use codeg_core::permgroup::{generate_group, parse_gens};
use codeg_core::Group;

use crate::corpus::{self, Source};
use crate::CliError;

/// A resolved group source, before construction.
#[derive(Debug, Clone)]
pub enum ResolvedSource {
    Family(FamilySpec),
    /// Generator-file text with a display label.
    Text { label: String, text: String },
}

/// A constructed group together with its provenance.
pub struct LoadedGroup {
    pub id: String,
    pub group: Group,
    /// Present when the group came from a family spec; drives the
    /// superset-containment check.
    pub family: Option<FamilySpec>,
}

/// Parses `psl2:Q`, `pgl2:Q`, `sl2:Q`, `psigmal2:Q`, `pgammal2:Q`, `m10`,
/// `file:PATH`, or a bundled corpus id.
pub fn parse_group_spec(spec: &str) -> Result<ResolvedSource, CliError> {
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_string(),
            source,
        })?;
        return Ok(ResolvedSource::Text {
            label: spec.to_string(),
            text,
        });
    }
    if spec == "m10" {
        return Ok(ResolvedSource::Family(FamilySpec::new(FamilyKind::M10, 9)?));
    }
    if let Some((kind_str, q_str)) = spec.split_once(':') {
        let kind = match kind_str {
            "psl2" => FamilyKind::L2,
            "pgl2" => FamilyKind::Pgl2,
            "sl2" => FamilyKind::Sl2,
            "psigmal2" => FamilyKind::PsigmaL2,
            "pgammal2" => FamilyKind::PgammaL2,
            _ => return Err(CliError::UnknownSpec(spec.to_string())),
        };
        let q: u64 = q_str
            .parse()
            .map_err(|_| CliError::UnknownSpec(spec.to_string()))?;
        return Ok(ResolvedSource::Family(FamilySpec::new(kind, q)?));
    }
    if let Some(entry) = corpus::find(spec) {
        return resolve_entry_source(entry.source);
    }
    Err(CliError::UnknownSpec(spec.to_string()))
}

pub fn resolve_entry_source(source: Source) -> Result<ResolvedSource, CliError> {
    match source {
        Source::Family(spec_str) => parse_group_spec(spec_str),
        Source::Bundled(name, text) => Ok(ResolvedSource::Text {
            label: name.to_string(),
            text: text.to_string(),
        }),
    }
}

/// Builds the group behind a resolved source, enforcing the order cap.
pub fn construct(id: &str, source: ResolvedSource, max_order: u64) -> Result<LoadedGroup, CliError> {
    match source {
        ResolvedSource::Family(spec) => {
            let expected = spec.expected_order();
            if expected > max_order {
                return Err(CliError::OrderCap {
                    order: expected,
                    cap: max_order,
                });
            }
            let group = build(&spec)?;
            Ok(LoadedGroup {
                id: id.to_string(),
                group,
                family: Some(spec),
            })
        }
        ResolvedSource::Text { text, .. } => {
            let (degree, gens) = parse_gens(&text)?;
            let group = generate_group(degree, &gens, max_order)?;
            Ok(LoadedGroup {
                id: id.to_string(),
                group,
                family: None,
            })
        }
    }
}

/// One-shot resolution and construction for a command-line spec string.
pub fn load_group(spec: &str, max_order: u64) -> Result<LoadedGroup, CliError> {
    construct(spec, parse_group_spec(spec)?, max_order)
}
