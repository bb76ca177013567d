use crate::counting::is_prime;
use crate::group::Group;
use crate::subgroup::{class_representatives, normal_closure_of, SubgroupSet};

/// A chief series `G = terms[0] > terms[1] > ... > 1`, every term normal in `G`.
#[derive(Debug, Clone)]
pub struct ChiefSeries<'g> {
    pub terms: Vec<SubgroupSet<'g>>,
    /// `|terms[i] / terms[i + 1]|`, top first.
    pub factor_orders: Vec<usize>,
}

impl ChiefSeries<'_> {
    pub fn length(&self) -> usize {
        self.factor_orders.len()
    }
}

/// Normal subgroups of `g` that properly contain `below` and are minimal with
/// that property, i.e. the pullbacks of the minimal normal subgroups of
/// `g / below`. Sorted canonically.
pub fn minimal_normal_over<'g>(g: &'g Group, below: &SubgroupSet<'g>) -> Vec<SubgroupSet<'g>> {
    let whole = SubgroupSet::whole(g);
    let base = below.generators();
    let mut candidates: Vec<SubgroupSet<'g>> = Vec::new();
    for x in class_representatives(g) {
        if below.contains(x) {
            continue;
        }
        let m = normal_closure_of(g, &whole, base.iter().copied().chain([x]));
        if !candidates.iter().any(|c| c == &m) {
            candidates.push(m);
        }
    }
    let mut minimal: Vec<SubgroupSet<'g>> = candidates
        .iter()
        .filter(|m| {
            !candidates
                .iter()
                .any(|c| c.size() < m.size() && c.is_subset_of(m))
        })
        .cloned()
        .collect();
    minimal.sort_by(|a, b| a.canonical_cmp(b));
    minimal
}

/// Builds the series from the bottom: at each step take the smallest minimal
/// normal subgroup of the current quotient (ties broken by the canonical
/// member order) and pull it back.
pub fn chief_series(g: &Group) -> ChiefSeries<'_> {
    build(g, false).expect("no early exit requested")
}

/// True iff every chief factor has prime order.
pub fn is_supersolvable(g: &Group) -> bool {
    build(g, true).is_some()
}

fn build(g: &Group, stop_on_composite: bool) -> Option<ChiefSeries<'_>> {
    let mut ascending = vec![SubgroupSet::trivial(g)];
    while !ascending.last().expect("nonempty").is_whole() {
        let current = ascending.last().expect("nonempty");
        let next = minimal_normal_over(g, current)
            .into_iter()
            .next()
            .expect("a proper normal subgroup has a minimal normal cover");
        if stop_on_composite && !is_prime((next.size() / current.size()) as u64) {
            return None;
        }
        ascending.push(next);
    }
    ascending.reverse();
    let factor_orders = ascending
        .windows(2)
        .map(|w| w[0].size() / w[1].size())
        .collect();
    Some(ChiefSeries {
        terms: ascending,
        factor_orders,
    })
}
