//! Structural predicates: solvability, supersolvability, simplicity, Sylow
//! counts and recognition of the exceptional groups.

mod chief;
mod recognize;
mod sylow;

pub use chief::{chief_series, is_supersolvable, minimal_normal_over, ChiefSeries};
pub use recognize::{
    find_isomorphism, fingerprint, recognize, Fingerprint, IsoOutcome, Recognition, ISO_NODE_BUDGET,
};
pub use sylow::{sylow_count, sylow_subgroup};

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::counting::factorize;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroup::{class_representatives, normal_closure, normal_closure_of, SubgroupSet};

/// Commutator subgroup of `h`, as a subgroup of `g`.
pub fn derived_of<'g>(g: &'g Group, h: &SubgroupSet<'g>) -> SubgroupSet<'g> {
    let gens = h.generators();
    let mut commutators = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            commutators.push(g.commutator(a, b));
        }
    }
    normal_closure_of(g, h, commutators)
}

pub fn derived_subgroup(g: &Group) -> SubgroupSet<'_> {
    derived_of(g, &SubgroupSet::whole(g))
}

/// `G, G', G'', ...` down to the first repeated term.
pub fn derived_series(g: &Group) -> Vec<SubgroupSet<'_>> {
    let mut series = vec![SubgroupSet::whole(g)];
    loop {
        let last = series.last().expect("series is never empty");
        let next = derived_of(g, last);
        if next.size() == last.size() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_solvable(g: &Group) -> bool {
    derived_series(g)
        .last()
        .is_some_and(SubgroupSet::is_trivial)
}

/// Number of steps for the derived series to reach the identity, if it does.
pub fn derived_length(g: &Group) -> Option<usize> {
    let series = derived_series(g);
    series
        .last()
        .is_some_and(SubgroupSet::is_trivial)
        .then(|| series.len() - 1)
}

pub fn is_perfect(g: &Group) -> bool {
    derived_subgroup(g).is_whole()
}

/// Inclusion-minimal normal closures of single non-identity elements, in
/// canonical order.
pub fn minimal_normal_subgroups(g: &Group) -> Vec<SubgroupSet<'_>> {
    let mut seen = HashSet::new();
    let mut closures: Vec<SubgroupSet<'_>> = Vec::new();
    for x in class_representatives(g).into_iter().skip(1) {
        let n = normal_closure(g, x);
        if seen.insert(n.bits().clone()) {
            closures.push(n);
        }
    }
    let mut minimal: Vec<SubgroupSet<'_>> = closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|m| m.size() < n.size() && m.is_subset_of(n))
        })
        .cloned()
        .collect();
    minimal.sort_by(|a, b| a.canonical_cmp(b));
    minimal
}

pub fn is_simple(g: &Group) -> Result<bool> {
    if g.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    Ok(class_representatives(g)
        .into_iter()
        .skip(1)
        .all(|x| normal_closure(g, x).is_whole()))
}

/// Summary of the structural predicates of one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub solvable: bool,
    pub perfect: bool,
    pub supersolvable: bool,
    pub simple: bool,
    pub sylow_counts: BTreeMap<u64, usize>,
    pub derived_length: Option<usize>,
}

pub fn analyze(g: &Group) -> StructureReport {
    let derived_length = derived_length(g);
    let solvable = derived_length.is_some();
    let sylow_counts = factorize(g.order() as u64)
        .into_iter()
        .map(|(p, _)| (p, sylow_count(g, p).expect("p divides the order")))
        .collect();
    StructureReport {
        solvable,
        perfect: is_perfect(g),
        // supersolvable groups are solvable, so skip the chief series otherwise
        supersolvable: solvable && is_supersolvable(g),
        simple: g.order() > 1 && is_simple(g).expect("order checked"),
        sylow_counts,
        derived_length,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alternating, cyclic, dihedral, symmetric};
    use crate::matrix_groups::sl2;

    #[test]
    fn derived_subgroups() {
        assert!(derived_subgroup(&cyclic(12).unwrap()).is_trivial());
        let s4 = symmetric(4).unwrap();
        assert_eq!(derived_subgroup(&s4).size(), 12);
        assert!(is_perfect(&alternating(5).unwrap()));
        assert!(!is_perfect(&s4));
        assert!(is_perfect(&cyclic(1).unwrap()));
    }

    #[test]
    fn solvability() {
        assert!(is_solvable(&symmetric(4).unwrap()));
        assert_eq!(derived_length(&symmetric(4).unwrap()), Some(3));
        assert!(!is_solvable(&alternating(5).unwrap()));
        assert!(!is_solvable(&sl2(5).unwrap()));
        assert!(is_solvable(&sl2(3).unwrap()));
    }

    #[test]
    fn minimal_normals() {
        let z7 = cyclic(7).unwrap();
        let m = minimal_normal_subgroups(&z7);
        assert_eq!(m.len(), 1);
        assert!(m[0].is_whole());
        let s4 = symmetric(4).unwrap();
        let sizes: Vec<usize> = minimal_normal_subgroups(&s4)
            .iter()
            .map(|h| h.size())
            .collect();
        assert_eq!(sizes, vec![4]);
        let a5 = alternating(5).unwrap();
        let m = minimal_normal_subgroups(&a5);
        assert_eq!(m.len(), 1);
        assert!(m[0].is_whole());
        // Z6 has two minimal normal subgroups, of orders 2 and 3
        let sizes: Vec<usize> = minimal_normal_subgroups(&cyclic(6).unwrap())
            .iter()
            .map(|h| h.size())
            .collect();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn simplicity() {
        assert!(is_simple(&cyclic(7).unwrap()).unwrap());
        assert!(is_simple(&alternating(5).unwrap()).unwrap());
        assert!(!is_simple(&symmetric(4).unwrap()).unwrap());
        assert_eq!(is_simple(&cyclic(1).unwrap()), Err(Error::TrivialGroup));
    }

    #[test]
    fn reports() {
        let r = analyze(&dihedral(6).unwrap());
        assert!(r.solvable && r.supersolvable && !r.simple && !r.perfect);
        assert_eq!(r.sylow_counts, BTreeMap::from([(2, 3), (3, 1)]));
        let r = analyze(&alternating(5).unwrap());
        assert!(!r.solvable && !r.supersolvable && r.simple && r.perfect);
        assert_eq!(r.derived_length, None);
        let r = analyze(&cyclic(1).unwrap());
        assert!(r.solvable && r.supersolvable && !r.simple);
    }
}
