use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constructors::GroupSpec;
use crate::error::{Error, Result};

/// Optional golden values pinned alongside a corpus entry.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_total: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solvable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub supersolvable: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub label: String,
    pub spec: GroupSpec,
    pub expected: Option<Expected>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    label: String,
    spec: String,
    #[serde(default)]
    expected: Option<Expected>,
}

const BUILTIN: &str = include_str!("../../corpus/builtin.jsonl");

/// The corpus shipped with the toolkit.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    parse_corpus(BUILTIN).expect("the built-in corpus parses")
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<CorpusEntry>> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_corpus(&text)
}

/// Parses line-oriented JSON, one entry object per line. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    let mut labels = HashSet::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let raw: RawEntry = serde_json::from_str(line).map_err(|e| Error::Parse {
            line: line_no,
            column: e.column(),
            message: e.to_string(),
        })?;
        let spec = raw.spec.parse::<GroupSpec>().map_err(|e| {
            // point at the spec text inside the line when it appears verbatim
            let base = line
                .find(&format!("\"{}\"", raw.spec))
                .map(|at| at + 1)
                .unwrap_or(0);
            Error::Parse {
                line: line_no,
                column: base + e.offset + 1,
                message: e.message,
            }
        })?;
        if !labels.insert(raw.label.clone()) {
            return Err(Error::DuplicateLabel {
                label: raw.label,
                line: line_no,
            });
        }
        entries.push(CorpusEntry {
            label: raw.label,
            spec,
            expected: raw.expected,
        });
    }
    Ok(entries)
}
