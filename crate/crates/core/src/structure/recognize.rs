use std::collections::BTreeMap;

use once_cell::sync::Lazy;

use crate::constructors::{alternating, extend_homomorphism, named, symmetric, word_tree};
use crate::counting::{census, is_prime};
use crate::group::Group;
use crate::subgroup::{center, conjugacy_classes, normal_subgroups, SubgroupSet};

use super::{is_perfect, is_solvable};

/// Hard cap on backtracking nodes per isomorphism search.
pub const ISO_NODE_BUDGET: u64 = 10_000_000;

/// Largest group searched for a `Z_q x A4` factorization.
pub const FAMILY_LIMIT: usize = 2000;

/// Isomorphism invariants compared before any search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub element_orders: BTreeMap<usize, usize>,
    pub cyclic_by_order: BTreeMap<usize, usize>,
    pub center_size: usize,
    pub solvable: bool,
    pub perfect: bool,
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let mut element_orders = BTreeMap::new();
    for o in g.element_orders() {
        *element_orders.entry(o).or_insert(0) += 1;
    }
    Fingerprint {
        order: g.order(),
        element_orders,
        cyclic_by_order: census(g).by_order,
        center_size: center(g).size(),
        solvable: is_solvable(g),
        perfect: is_perfect(g),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `map[x]` is the image in the target of source element `x`.
    Isomorphic(Vec<usize>),
    NotIsomorphic,
    /// The node budget ran out first.
    Inconclusive,
}

/// Generators chosen greedily, highest element order first.
fn short_generating_set(g: &Group) -> Vec<usize> {
    let mut candidates: Vec<usize> = (0..g.order()).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = SubgroupSet::trivial(g);
    for x in candidates {
        if span.is_whole() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = SubgroupSet::generated(g, gens.iter().copied());
        }
    }
    gens
}

fn class_sizes(g: &Group) -> (Vec<usize>, Vec<bool>) {
    let mut size = vec![0; g.order()];
    let mut is_rep = vec![false; g.order()];
    for class in conjugacy_classes(g) {
        is_rep[class[0]] = true;
        for &x in &class {
            size[x] = class.len();
        }
    }
    (size, is_rep)
}

/// Backtracking search for an isomorphism `source -> target`.
///
/// Generator images are restricted to elements of equal order and equal
/// class size; the first image ranges over class representatives only, and
/// orders of pairwise products must agree.
pub fn find_isomorphism(source: &Group, target: &Group, budget: u64) -> IsoOutcome {
    if source.order() != target.order() {
        return IsoOutcome::NotIsomorphic;
    }
    let gens = short_generating_set(source);
    let tree = word_tree(source, &gens);
    let (src_class, _) = class_sizes(source);
    let (dst_class, dst_rep) = class_sizes(target);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            (0..target.order())
                .filter(|&y| {
                    target.element_order(y) == source.element_order(t)
                        && dst_class[y] == src_class[t]
                        && (i > 0 || dst_rep[y])
                })
                .collect()
        })
        .collect();

    struct Search<'a> {
        source: &'a Group,
        target: &'a Group,
        gens: &'a [usize],
        candidates: &'a [Vec<usize>],
        tree: &'a crate::constructors::WordTree,
        images: Vec<usize>,
        nodes: u64,
        budget: u64,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize) -> Option<IsoOutcome> {
            if depth == self.gens.len() {
                let map = extend_homomorphism(
                    self.source,
                    self.gens,
                    &self.images,
                    self.tree,
                    self.target,
                )?;
                let mut hit = vec![false; self.target.order()];
                for &y in &map {
                    if std::mem::replace(&mut hit[y], true) {
                        return None;
                    }
                }
                return Some(IsoOutcome::Isomorphic(map));
            }
            let t = self.gens[depth];
            for &y in &self.candidates[depth] {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Some(IsoOutcome::Inconclusive);
                }
                let compatible = self.gens[..depth]
                    .iter()
                    .zip(&self.images)
                    .all(|(&s, &img)| {
                        self.target.element_order(self.target.mul(img, y))
                            == self.source.element_order(self.source.mul(s, t))
                    });
                if !compatible {
                    continue;
                }
                self.images.push(y);
                if let Some(outcome) = self.run(depth + 1) {
                    return Some(outcome);
                }
                self.images.pop();
            }
            None
        }
    }

    let mut search = Search {
        source,
        target,
        gens: &gens,
        candidates: &candidates,
        tree: &tree,
        images: Vec::new(),
        nodes: 0,
        budget,
    };
    search.run(0).unwrap_or(IsoOutcome::NotIsomorphic)
}

/// Outcome of matching a group against the registry of exceptional groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Matched(String),
    NoMatch,
    Inconclusive,
}

impl Recognition {
    pub fn name(&self) -> Option<&str> {
        match self {
            Recognition::Matched(n) => Some(n),
            _ => None,
        }
    }
}

struct Target {
    name: &'static str,
    group: Group,
    fingerprint: Fingerprint,
}

static TARGETS: Lazy<Vec<Target>> = Lazy::new(|| {
    let builds: Vec<(&'static str, Group)> = vec![
        ("A4", alternating(4).expect("A4")),
        ("S4", symmetric(4).expect("S4")),
        ("A5", alternating(5).expect("A5")),
        ("SL(2,3)", named(24, 3).expect("SL(2,3)")),
        ("SL(2,5)", named(120, 5).expect("SL(2,5)")),
        ("SmallGroup(36,3)", named(36, 3).expect("SmallGroup(36,3)")),
        (
            "SmallGroup(56,11)",
            named(56, 11).expect("SmallGroup(56,11)"),
        ),
        (
            "SmallGroup(108,3)",
            named(108, 3).expect("SmallGroup(108,3)"),
        ),
    ];
    builds
        .into_iter()
        .map(|(name, group)| Target {
            name,
            fingerprint: fingerprint(&group),
            group,
        })
        .collect()
});

/// Names `g` if it is isomorphic to a registered exceptional group or to
/// `Z_q x A4` for a prime `q`.
pub fn recognize(g: &Group) -> Recognition {
    let fp = fingerprint(g);
    let mut inconclusive = false;
    for target in TARGETS.iter() {
        if target.fingerprint != fp {
            continue;
        }
        match find_isomorphism(&target.group, g, ISO_NODE_BUDGET) {
            IsoOutcome::Isomorphic(_) => return Recognition::Matched(target.name.to_string()),
            IsoOutcome::Inconclusive => inconclusive = true,
            IsoOutcome::NotIsomorphic => {}
        }
    }
    match zq_times_a4(g) {
        Some(Recognition::Matched(name)) => return Recognition::Matched(name),
        Some(Recognition::Inconclusive) => inconclusive = true,
        _ => {}
    }
    if inconclusive {
        Recognition::Inconclusive
    } else {
        Recognition::NoMatch
    }
}

/// Factor search: `g` is `Z_q x A4` iff it has a normal subgroup isomorphic to
/// A4 and a normal subgroup of order `q` meeting it trivially.
fn zq_times_a4(g: &Group) -> Option<Recognition> {
    let n = g.order();
    if !n.is_multiple_of(12) || n > FAMILY_LIMIT || !is_prime((n / 12) as u64) {
        return None;
    }
    let q = n / 12;
    let a4 = &TARGETS[0];
    let normals = normal_subgroups(g, usize::MAX);
    let mut inconclusive = false;
    for a in normals.subgroups.iter().filter(|h| h.size() == 12) {
        let candidate = a.to_group();
        if fingerprint(&candidate) != a4.fingerprint {
            continue;
        }
        match find_isomorphism(&a4.group, &candidate, ISO_NODE_BUDGET) {
            IsoOutcome::Isomorphic(_) => {}
            IsoOutcome::Inconclusive => {
                inconclusive = true;
                continue;
            }
            IsoOutcome::NotIsomorphic => continue,
        }
        if normals
            .subgroups
            .iter()
            .any(|z| z.size() == q && z.intersection(a).is_trivial())
        {
            return Some(Recognition::Matched(format!("Z{q} x A4")));
        }
    }
    inconclusive.then_some(Recognition::Inconclusive)
}
