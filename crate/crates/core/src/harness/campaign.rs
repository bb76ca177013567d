use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::sync::Mutex;
use std::thread;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::constructors::build;
use crate::counting::census;
use crate::structure::{
    is_perfect, is_simple, is_solvable, is_supersolvable, recognize, Recognition,
};
use crate::TOOLKIT_VERSION;

use super::corpus::CorpusEntry;

/// Non-supersolvable groups allowed at most 17 cyclic subgroups; `Z<q> x A4`
/// is matched separately.
pub const THEOREM_B_EXCEPTIONS: &[&str] = &[
    "A4",
    "SL(2,3)",
    "S4",
    "SmallGroup(36,3)",
    "SmallGroup(56,11)",
    "SmallGroup(108,3)",
];

/// Below this many cyclic subgroups a group must be solvable, A5 or SL(2,5).
pub const THEOREM_A_BOUND: usize = 50;
/// Up to this many cyclic subgroups a group must be supersolvable or listed.
pub const THEOREM_B_BOUND: usize = 17;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremAStatus {
    #[serde(rename = "consistent")]
    Consistent,
    #[serde(rename = "exception_A5")]
    ExceptionA5,
    #[serde(rename = "exception_SL25")]
    ExceptionSl25,
    #[serde(rename = "VIOLATION")]
    Violation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremBStatus {
    #[serde(rename = "consistent")]
    Consistent,
    #[serde(rename = "exception_listed")]
    ExceptionListed,
    #[serde(rename = "VIOLATION")]
    Violation,
    #[serde(rename = "not_applicable")]
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowOutcome {
    Evaluated,
    Error,
    Timeout,
}

/// One evaluated corpus entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRow {
    pub label: String,
    pub spec: String,
    pub outcome: RowOutcome,
    pub order: Option<usize>,
    pub c_total: Option<usize>,
    pub c_by_order: Option<BTreeMap<usize, usize>>,
    pub solvable: Option<bool>,
    pub supersolvable: Option<bool>,
    pub perfect: Option<bool>,
    pub simple: Option<bool>,
    pub recognized_as: Option<String>,
    pub recognition_inconclusive: bool,
    pub theorem_a_status: Option<TheoremAStatus>,
    pub theorem_b_status: Option<TheoremBStatus>,
    pub error: Option<String>,
}

impl VerdictRow {
    fn failed(entry: &CorpusEntry, outcome: RowOutcome, error: String) -> VerdictRow {
        VerdictRow {
            label: entry.label.clone(),
            spec: entry.spec.to_string(),
            outcome,
            order: None,
            c_total: None,
            c_by_order: None,
            solvable: None,
            supersolvable: None,
            perfect: None,
            simple: None,
            recognized_as: None,
            recognition_inconclusive: false,
            theorem_a_status: None,
            theorem_b_status: None,
            error: Some(error),
        }
    }
}

pub fn theorem_a_status(
    c_total: usize,
    solvable: bool,
    recognized: Option<&str>,
) -> TheoremAStatus {
    if c_total >= THEOREM_A_BOUND || solvable {
        return TheoremAStatus::Consistent;
    }
    match recognized {
        Some("A5") => TheoremAStatus::ExceptionA5,
        Some("SL(2,5)") => TheoremAStatus::ExceptionSl25,
        _ => TheoremAStatus::Violation,
    }
}

/// True for `Z<q> x A4` with `q` prime, as produced by recognition.
fn is_zq_a4(name: &str) -> bool {
    name.strip_prefix('Z')
        .and_then(|rest| rest.strip_suffix(" x A4"))
        .and_then(|q| q.parse::<u64>().ok())
        .is_some_and(crate::counting::is_prime)
}

pub fn theorem_b_status(
    c_total: usize,
    supersolvable: bool,
    recognized: Option<&str>,
) -> TheoremBStatus {
    if c_total > THEOREM_B_BOUND {
        return TheoremBStatus::NotApplicable;
    }
    if supersolvable {
        return TheoremBStatus::Consistent;
    }
    match recognized {
        Some(name) if THEOREM_B_EXCEPTIONS.contains(&name) || is_zq_a4(name) => {
            TheoremBStatus::ExceptionListed
        }
        _ => TheoremBStatus::Violation,
    }
}

/// Builds and evaluates one entry. Build failures and golden mismatches are
/// reported in the row rather than returned.
pub fn evaluate_entry(entry: &CorpusEntry) -> VerdictRow {
    let g = match build(&entry.spec) {
        Ok(g) => g,
        Err(e) => return VerdictRow::failed(entry, RowOutcome::Error, e.to_string()),
    };
    let c = census(&g);
    let solvable = is_solvable(&g);
    let supersolvable = solvable && is_supersolvable(&g);
    let perfect = is_perfect(&g);
    let simple = g.order() > 1 && is_simple(&g).unwrap_or(false);
    let recognition = recognize(&g);
    let recognized = recognition.name().map(str::to_string);

    let mut mismatches = Vec::new();
    if let Some(exp) = &entry.expected {
        let mut check = |what: &str, expected: Option<String>, actual: String| {
            if let Some(expected) = expected {
                if expected != actual {
                    mismatches.push(format!("{what}: expected {expected}, computed {actual}"));
                }
            }
        };
        check(
            "order",
            exp.order.map(|v| v.to_string()),
            g.order().to_string(),
        );
        check(
            "c_total",
            exp.c_total.map(|v| v.to_string()),
            c.total.to_string(),
        );
        check(
            "solvable",
            exp.solvable.map(|v| v.to_string()),
            solvable.to_string(),
        );
        check(
            "supersolvable",
            exp.supersolvable.map(|v| v.to_string()),
            supersolvable.to_string(),
        );
    }

    VerdictRow {
        label: entry.label.clone(),
        spec: entry.spec.to_string(),
        outcome: if mismatches.is_empty() {
            RowOutcome::Evaluated
        } else {
            RowOutcome::Error
        },
        order: Some(g.order()),
        c_total: Some(c.total),
        theorem_a_status: Some(theorem_a_status(c.total, solvable, recognized.as_deref())),
        theorem_b_status: Some(theorem_b_status(
            c.total,
            supersolvable,
            recognized.as_deref(),
        )),
        c_by_order: Some(c.by_order),
        solvable: Some(solvable),
        supersolvable: Some(supersolvable),
        perfect: Some(perfect),
        simple: Some(simple),
        recognized_as: recognized,
        recognition_inconclusive: recognition == Recognition::Inconclusive,
        error: (!mismatches.is_empty())
            .then(|| format!("golden mismatch: {}", mismatches.join("; "))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CampaignConfig {
    pub jobs: usize,
    pub timeout: Duration,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            jobs: 1,
            timeout: Duration::from_secs(30),
        }
    }
}

/// Evaluates every entry, `jobs` at a time, returning rows in corpus order.
/// An entry that runs past the timeout is recorded as such; its worker
/// thread is abandoned.
pub fn evaluate_corpus(corpus: &[CorpusEntry], config: &CampaignConfig) -> Vec<VerdictRow> {
    let rows: Mutex<Vec<Option<VerdictRow>>> = Mutex::new(vec![None; corpus.len()]);
    let next = AtomicUsize::new(0);
    thread::scope(|scope| {
        for _ in 0..config.jobs.max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(entry) = corpus.get(i) else { break };
                let row = evaluate_with_timeout(entry, config.timeout);
                rows.lock().expect("row store poisoned")[i] = Some(row);
            });
        }
    });
    rows.into_inner()
        .expect("row store poisoned")
        .into_iter()
        .map(|r| r.expect("every entry evaluated"))
        .collect()
}

fn evaluate_with_timeout(entry: &CorpusEntry, timeout: Duration) -> VerdictRow {
    let (tx, rx) = mpsc::channel();
    let owned = entry.clone();
    thread::spawn(move || {
        let row = std::panic::catch_unwind(|| evaluate_entry(&owned)).unwrap_or_else(|_| {
            VerdictRow::failed(&owned, RowOutcome::Error, "evaluation panicked".into())
        });
        let _ = tx.send(row);
    });
    match rx.recv_timeout(timeout) {
        Ok(row) => row,
        Err(_) => VerdictRow::failed(
            entry,
            RowOutcome::Timeout,
            format!("timed out after {} s", timeout.as_secs_f64()),
        ),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    A,
    B,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub violations: usize,
    pub exceptions: usize,
    pub errors: usize,
    pub timeouts: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub theorem: Theorem,
    pub rows: Vec<VerdictRow>,
    pub summary: Summary,
    pub toolkit_version: String,
}

impl CampaignReport {
    /// 0 when everything is consistent or a listed exception, 2 on
    /// violations, 3 when any entry failed to build, mismatched its goldens or
    /// timed out.
    pub fn exit_code(&self) -> i32 {
        if self.summary.errors > 0 || self.summary.timeouts > 0 {
            3
        } else if self.summary.violations > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from(
            "label\torder\tc_total\tsolvable\tsupersolvable\tperfect\tsimple\trecognized_as\ttheorem_a\ttheorem_b\terror\n",
        );
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        for r in &self.rows {
            let a = r.theorem_a_status.map(|s| serde_json::to_value(s).unwrap());
            let b = r.theorem_b_status.map(|s| serde_json::to_value(s).unwrap());
            let fields = [
                r.label.clone(),
                opt(r.order.map(|v| v.to_string())),
                opt(r.c_total.map(|v| v.to_string())),
                opt(r.solvable.map(|v| v.to_string())),
                opt(r.supersolvable.map(|v| v.to_string())),
                opt(r.perfect.map(|v| v.to_string())),
                opt(r.simple.map(|v| v.to_string())),
                opt(r.recognized_as.clone()),
                opt(a.and_then(|v| v.as_str().map(str::to_string))),
                opt(b.and_then(|v| v.as_str().map(str::to_string))),
                opt(r.error.clone()),
            ];
            out.push_str(&fields.join("\t"));
            out.push('\n');
        }
        out
    }
}

pub fn summarize(theorem: Theorem, rows: &[VerdictRow]) -> Summary {
    let mut s = Summary::default();
    for r in rows {
        match r.outcome {
            RowOutcome::Timeout => s.timeouts += 1,
            RowOutcome::Error => s.errors += 1,
            RowOutcome::Evaluated => {}
        }
        match theorem {
            Theorem::A => match r.theorem_a_status {
                Some(TheoremAStatus::Violation) => s.violations += 1,
                Some(TheoremAStatus::ExceptionA5 | TheoremAStatus::ExceptionSl25) => {
                    s.exceptions += 1
                }
                _ => {}
            },
            Theorem::B => match r.theorem_b_status {
                Some(TheoremBStatus::Violation) => s.violations += 1,
                Some(TheoremBStatus::ExceptionListed) => s.exceptions += 1,
                _ => {}
            },
        }
    }
    s
}

pub fn verify(theorem: Theorem, corpus: &[CorpusEntry], config: &CampaignConfig) -> CampaignReport {
    let rows = evaluate_corpus(corpus, config);
    report_from_rows(theorem, rows)
}

pub fn report_from_rows(theorem: Theorem, rows: Vec<VerdictRow>) -> CampaignReport {
    CampaignReport {
        theorem,
        summary: summarize(theorem, &rows),
        rows,
        toolkit_version: TOOLKIT_VERSION.to_string(),
    }
}

/// Every group with fewer than 50 cyclic subgroups is solvable, A5 or SL(2,5).
pub fn verify_theorem_a(corpus: &[CorpusEntry], config: &CampaignConfig) -> CampaignReport {
    verify(Theorem::A, corpus, config)
}

/// Every group with at most 17 cyclic subgroups is supersolvable or one of
/// the listed exceptions.
pub fn verify_theorem_b(corpus: &[CorpusEntry], config: &CampaignConfig) -> CampaignReport {
    verify(Theorem::B, corpus, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::corpus::parse_corpus;

    fn entry(label: &str, spec: &str) -> CorpusEntry {
        CorpusEntry {
            label: label.into(),
            spec: spec.parse().unwrap(),
            expected: None,
        }
    }

    #[test]
    fn status_rules() {
        assert_eq!(
            theorem_a_status(32, false, Some("A5")),
            TheoremAStatus::ExceptionA5
        );
        assert_eq!(
            theorem_a_status(49, false, Some("SL(2,5)")),
            TheoremAStatus::ExceptionSl25
        );
        assert_eq!(theorem_a_status(49, false, None), TheoremAStatus::Violation);
        assert_eq!(
            theorem_a_status(50, false, None),
            TheoremAStatus::Consistent
        );
        assert_eq!(
            theorem_b_status(18, false, None),
            TheoremBStatus::NotApplicable
        );
        assert_eq!(
            theorem_b_status(8, false, Some("A4")),
            TheoremBStatus::ExceptionListed
        );
        assert_eq!(
            theorem_b_status(16, false, Some("Z7 x A4")),
            TheoremBStatus::ExceptionListed
        );
        assert_eq!(
            theorem_b_status(16, false, Some("Z8 x A4")),
            TheoremBStatus::Violation
        );
        assert_eq!(theorem_b_status(12, true, None), TheoremBStatus::Consistent);
    }

    #[test]
    fn rows_for_named_examples() {
        let rows = evaluate_corpus(
            &[
                entry("A5", "alternating 5"),
                entry("SL25", "sl2 5"),
                entry("Z30", "cyclic 30"),
                entry("A4", "alternating 4"),
                entry("G56", "named 56 11"),
                entry("D12", "dihedral 6"),
            ],
            &CampaignConfig {
                jobs: 3,
                ..Default::default()
            },
        );
        let a: Vec<_> = rows.iter().map(|r| r.theorem_a_status.unwrap()).collect();
        assert_eq!(
            a,
            vec![
                TheoremAStatus::ExceptionA5,
                TheoremAStatus::ExceptionSl25,
                TheoremAStatus::Consistent,
                TheoremAStatus::Consistent,
                TheoremAStatus::Consistent,
                TheoremAStatus::Consistent,
            ]
        );
        assert_eq!(rows[2].c_total, Some(8));
        assert_eq!(
            rows[3].theorem_b_status,
            Some(TheoremBStatus::ExceptionListed)
        );
        assert_eq!(rows[3].c_total, Some(8));
        assert_eq!(
            rows[4].theorem_b_status,
            Some(TheoremBStatus::ExceptionListed)
        );
        assert_eq!(rows[5].theorem_b_status, Some(TheoremBStatus::Consistent));
    }

    #[test]
    fn errors_and_goldens_are_reported_not_fatal() {
        let corpus = parse_corpus(
            "{\"label\": \"bad\", \"spec\": \"elementary_abelian 4 2\"}\n\
             {\"label\": \"wrong\", \"spec\": \"cyclic 6\", \"expected\": {\"c_total\": 5}}\n\
             {\"label\": \"right\", \"spec\": \"cyclic 6\", \"expected\": {\"c_total\": 4, \"order\": 6}}",
        )
        .unwrap();
        let report = verify_theorem_a(&corpus, &CampaignConfig::default());
        assert_eq!(report.rows[0].outcome, RowOutcome::Error);
        assert_eq!(report.rows[1].outcome, RowOutcome::Error);
        assert!(report.rows[1].error.as_ref().unwrap().contains("c_total"));
        assert_eq!(report.rows[2].outcome, RowOutcome::Evaluated);
        assert_eq!(report.summary.errors, 2);
        assert_eq!(report.exit_code(), 3);
    }

    #[test]
    fn timeouts_are_recorded() {
        let corpus = vec![entry("S7", "symmetric 7")];
        let config = CampaignConfig {
            jobs: 1,
            timeout: Duration::from_millis(1),
        };
        let report = verify_theorem_b(&corpus, &config);
        assert_eq!(report.rows[0].outcome, RowOutcome::Timeout);
        assert_eq!(report.summary.timeouts, 1);
        assert_eq!(report.exit_code(), 3);
    }

    #[test]
    fn reports_are_deterministic() {
        let corpus = vec![entry("S4", "symmetric 4"), entry("Q8", "quaternion 3")];
        let one = verify_theorem_b(
            &corpus,
            &CampaignConfig {
                jobs: 2,
                ..Default::default()
            },
        );
        let two = verify_theorem_b(&corpus, &CampaignConfig::default());
        assert_eq!(one.to_json(), two.to_json());
        assert!(one.to_tsv().lines().count() == 3);
    }
}
