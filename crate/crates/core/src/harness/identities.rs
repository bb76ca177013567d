use serde::{Deserialize, Serialize};

use crate::constructors::{build, direct_product};
use crate::counting::{
    census, divisor_bounds_from_census, order_identity_from_census, CyclicCensus,
};
use crate::group::Group;
use crate::subgroup::{normal_subgroups, quotient};
use crate::TOOLKIT_VERSION;

use super::corpus::CorpusEntry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityConfig {
    /// Most coprime pairs checked for multiplicativity.
    pub pair_budget: usize,
    /// Largest direct product built for a pair check.
    pub pair_order_limit: usize,
    /// Largest group whose normal subgroups feed the quotient checks.
    pub quotient_limit: usize,
    /// Cap on normal subgroups enumerated per group.
    pub normal_limit: usize,
}

impl Default for IdentityConfig {
    fn default() -> Self {
        IdentityConfig {
            pair_budget: 400,
            pair_order_limit: 20_000,
            quotient_limit: 2000,
            normal_limit: 4096,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupIdentityRow {
    pub label: String,
    pub order: usize,
    pub c_total: usize,
    pub order_identity_sum: usize,
    pub order_identity_holds: bool,
    pub bounds_hold: bool,
    /// Normal subgroups checked against the quotient inequalities, or `None`
    /// above the size limit.
    pub normal_subgroups_checked: Option<usize>,
    pub normal_search_complete: Option<bool>,
    pub quotient_failures: Vec<QuotientFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientFailure {
    pub normal_order: usize,
    pub c_normal: usize,
    pub c_quotient: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub left: String,
    pub right: String,
    pub c_left: usize,
    pub c_right: usize,
    pub c_product: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub groups: usize,
    pub order_identity_failures: usize,
    pub bounds_failures: usize,
    pub pairs_checked: usize,
    pub pairs_skipped: usize,
    pub pair_failures: usize,
    pub quotient_checks: usize,
    pub quotient_failures: usize,
    pub incomplete_normal_searches: usize,
    pub errors: usize,
}

impl IdentitySummary {
    pub fn failures(&self) -> usize {
        self.order_identity_failures
            + self.bounds_failures
            + self.pair_failures
            + self.quotient_failures
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub groups: Vec<GroupIdentityRow>,
    pub pairs: Vec<PairRow>,
    pub errors: Vec<String>,
    pub summary: IdentitySummary,
    pub toolkit_version: String,
}

impl IdentityReport {
    /// Same contract as the theorem campaigns: 3 on build errors, 2 on any
    /// failed identity, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.errors > 0 {
            3
        } else if self.summary.failures() > 0 {
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
            "label\torder\tc_total\torder_identity\tbounds\tnormal_checked\tquotient_failures\n",
        );
        for r in &self.groups {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.label,
                r.order,
                r.c_total,
                r.order_identity_holds,
                r.bounds_hold,
                r.normal_subgroups_checked
                    .map_or_else(|| "-".to_string(), |n| n.to_string()),
                r.quotient_failures.len()
            ));
        }
        out
    }
}

/// `c(G/N) <= c(G)` and `c(G) >= c(G/N) + c(N) - 1` for every normal `N`
/// found. Returns how many subgroups were checked, whether the search was
/// exhaustive, and the failures.
pub fn quotient_checks(
    g: &Group,
    c_g: usize,
    normal_limit: usize,
) -> (usize, bool, Vec<QuotientFailure>) {
    let normals = normal_subgroups(g, normal_limit);
    let mut failures = Vec::new();
    for n in &normals.subgroups {
        let c_normal = census(&n.to_group()).total;
        let c_quotient = census(&quotient(g, n).expect("normal by construction")).total;
        if c_quotient > c_g || c_g + 1 < c_quotient + c_normal {
            failures.push(QuotientFailure {
                normal_order: n.size(),
                c_normal,
                c_quotient,
            });
        }
    }
    (normals.subgroups.len(), normals.complete, failures)
}

/// Runs the counting identities over a corpus: the order identity and the
/// divisor/order bounds on every group, multiplicativity on coprime pairs,
/// and the quotient inequalities on groups up to the size limit.
pub fn identity_suite(corpus: &[CorpusEntry], config: &IdentityConfig) -> IdentityReport {
    let mut summary = IdentitySummary::default();
    let mut errors = Vec::new();
    let mut built: Vec<(String, Group, CyclicCensus)> = Vec::new();
    let mut groups = Vec::new();

    for entry in corpus {
        let g = match build(&entry.spec) {
            Ok(g) => g,
            Err(e) => {
                errors.push(format!("{}: {e}", entry.label));
                continue;
            }
        };
        let c = census(&g);
        let identity = order_identity_from_census(&c);
        let bounds = divisor_bounds_from_census(&g, &c);
        summary.groups += 1;
        summary.order_identity_failures += usize::from(!identity.holds);
        summary.bounds_failures += usize::from(!bounds.holds());

        let (checked, complete, failures) = if g.order() <= config.quotient_limit {
            let (n, complete, failures) = quotient_checks(&g, c.total, config.normal_limit);
            summary.quotient_checks += n;
            summary.quotient_failures += failures.len();
            summary.incomplete_normal_searches += usize::from(!complete);
            (Some(n), Some(complete), failures)
        } else {
            (None, None, Vec::new())
        };

        groups.push(GroupIdentityRow {
            label: entry.label.clone(),
            order: g.order(),
            c_total: c.total,
            order_identity_sum: identity.sum,
            order_identity_holds: identity.holds,
            bounds_hold: bounds.holds(),
            normal_subgroups_checked: checked,
            normal_search_complete: complete,
            quotient_failures: failures,
        });
        built.push((entry.label.clone(), g, c));
    }

    let mut pairs = Vec::new();
    for i in 0..built.len() {
        for j in i + 1..built.len() {
            let (la, a, ca) = &built[i];
            let (lb, b, cb) = &built[j];
            if a.order() == 1 || b.order() == 1 || num_integer::gcd(a.order(), b.order()) != 1 {
                continue;
            }
            if pairs.len() >= config.pair_budget || a.order() * b.order() > config.pair_order_limit
            {
                summary.pairs_skipped += 1;
                continue;
            }
            let product = match direct_product(a, b) {
                Ok(p) => p,
                Err(_) => {
                    summary.pairs_skipped += 1;
                    continue;
                }
            };
            let c_product = census(&product).total;
            let holds = c_product == ca.total * cb.total;
            summary.pair_failures += usize::from(!holds);
            pairs.push(PairRow {
                left: la.clone(),
                right: lb.clone(),
                c_left: ca.total,
                c_right: cb.total,
                c_product,
                holds,
            });
        }
    }
    summary.pairs_checked = pairs.len();
    summary.errors = errors.len();

    IdentityReport {
        groups,
        pairs,
        errors,
        summary,
        toolkit_version: TOOLKIT_VERSION.to_string(),
    }
}
