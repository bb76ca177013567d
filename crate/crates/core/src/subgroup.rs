use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

/// A subgroup of a parent group, stored as a membership bitset over the
/// parent's element indices.
#[derive(Clone)]
pub struct SubgroupSet<'g> {
    group: &'g Group,
    members: FixedBitSet,
    size: usize,
}

impl<'g> SubgroupSet<'g> {
    fn from_bits(group: &'g Group, members: FixedBitSet) -> Self {
        let size = members.count_ones(..);
        assert!(members.contains(0), "subgroup must contain the identity");
        assert_eq!(
            group.order() % size,
            0,
            "Lagrange violated: subgroup of size {size} in group of order {}",
            group.order()
        );
        SubgroupSet {
            group,
            members,
            size,
        }
    }

    /// Validates an arbitrary element set as a subgroup.
    pub fn from_members(group: &'g Group, members: &[usize]) -> Result<Self> {
        if !is_subgroup(group, members) {
            return Err(Error::NotASubgroup);
        }
        let mut bits = FixedBitSet::with_capacity(group.order());
        members.iter().for_each(|&m| bits.insert(m));
        Ok(SubgroupSet::from_bits(group, bits))
    }

    pub fn trivial(group: &'g Group) -> Self {
        let mut bits = FixedBitSet::with_capacity(group.order());
        bits.insert(0);
        SubgroupSet::from_bits(group, bits)
    }

    pub fn whole(group: &'g Group) -> Self {
        let mut bits = FixedBitSet::with_capacity(group.order());
        bits.insert_range(..);
        SubgroupSet::from_bits(group, bits)
    }

    /// The subgroup generated by `gens`.
    pub fn generated(group: &'g Group, gens: impl IntoIterator<Item = usize>) -> Self {
        let mut closure = Closure::new(group);
        for g in gens {
            closure.add(g);
        }
        closure.finish()
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.size
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn is_whole(&self) -> bool {
        self.size == self.group.order()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    /// Member indices in increasing order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn is_subset_of(&self, other: &SubgroupSet<'_>) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &SubgroupSet<'g>) -> SubgroupSet<'g> {
        let mut bits = self.members.clone();
        bits.intersect_with(&other.members);
        SubgroupSet::from_bits(self.group, bits)
    }

    /// The subgroup generated by both subgroups.
    pub fn join(&self, other: &SubgroupSet<'g>) -> SubgroupSet<'g> {
        let mut closure = Closure::from_subgroup(self);
        for g in other.generators() {
            closure.add(g);
        }
        closure.finish()
    }

    /// A small generating set, found greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut closure = Closure::new(self.group);
        for m in self.members.ones() {
            if closure.size() == self.size {
                break;
            }
            closure.add(m);
        }
        closure.gens
    }

    /// Total order used for deterministic tie-breaking: by size, then by the
    /// sorted member list compared lexicographically.
    pub fn canonical_cmp(&self, other: &SubgroupSet<'_>) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }

    /// Re-enumerates the subgroup as a standalone group on the same points.
    pub fn to_group(&self) -> Group {
        let gens: Vec<Permutation> = self
            .generators()
            .into_iter()
            .map(|g| self.group.element(g).clone())
            .collect();
        let degree = self.group.degree();
        let gens = if gens.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            gens
        };
        Group::close_with_cap(&gens, usize::MAX)
            .expect("subgroup closure is bounded by its parent")
            .with_label(format!(
                "subgroup of order {} in {}",
                self.size,
                self.group.label()
            ))
    }
}

impl PartialEq for SubgroupSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.members == other.members
    }
}

impl Eq for SubgroupSet<'_> {}

impl std::hash::Hash for SubgroupSet<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for SubgroupSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SubgroupSet(size {} of {})",
            self.size,
            self.group.order()
        )
    }
}

/// Incremental subgroup closure. Adding a generator already inside the current
/// subgroup is a no-op.
struct Closure<'g> {
    group: &'g Group,
    members: FixedBitSet,
    list: Vec<usize>,
    gens: Vec<usize>,
}

impl<'g> Closure<'g> {
    fn new(group: &'g Group) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(0);
        Closure {
            group,
            members,
            list: vec![0],
            gens: Vec::new(),
        }
    }

    fn from_subgroup(h: &SubgroupSet<'g>) -> Self {
        Closure {
            group: h.group,
            members: h.members.clone(),
            list: h.members.ones().collect(),
            gens: h.generators(),
        }
    }

    fn size(&self) -> usize {
        self.list.len()
    }

    fn add(&mut self, x: usize) {
        if self.members.contains(x) {
            return;
        }
        self.gens.push(x);
        // Rerun the orbit of the identity under right multiplication; old
        // elements need the new generator, new elements need all of them.
        let mut head = 0;
        while head < self.list.len() {
            let y = self.list[head];
            for &s in &self.gens {
                let z = self.group.mul(y, s);
                if !self.members.contains(z) {
                    self.members.insert(z);
                    self.list.push(z);
                }
            }
            head += 1;
        }
    }

    fn finish(self) -> SubgroupSet<'g> {
        SubgroupSet::from_bits(self.group, self.members)
    }
}

/// True iff `set` contains the identity and is closed under multiplication
/// and inverses.
pub fn is_subgroup(g: &Group, set: &[usize]) -> bool {
    if set.is_empty() || set.iter().any(|&x| x >= g.order()) {
        return false;
    }
    let mut bits = FixedBitSet::with_capacity(g.order());
    set.iter().for_each(|&x| bits.insert(x));
    bits.contains(0)
        && bits.ones().all(|x| bits.contains(g.inv(x)))
        && bits
            .ones()
            .all(|x| bits.ones().all(|y| bits.contains(g.mul(x, y))))
}

/// The cyclic subgroup `{x^k}`.
pub fn cyclic_span(g: &Group, x: usize) -> SubgroupSet<'_> {
    let mut bits = FixedBitSet::with_capacity(g.order());
    let mut y = 0;
    loop {
        bits.insert(y);
        y = g.mul(y, x);
        if y == 0 {
            break;
        }
    }
    SubgroupSet::from_bits(g, bits)
}

/// Normality test; conjugating by the generators of `g` is enough.
pub fn is_normal(g: &Group, h: &SubgroupSet<'_>) -> Result<bool> {
    if !std::ptr::eq(g, h.group) {
        return Err(Error::NotASubgroup);
    }
    let hgens = h.generators();
    Ok(g.generators()
        .iter()
        .all(|&x| hgens.iter().all(|&m| h.contains(g.conjugate(m, x)))))
}

/// Coset bookkeeping for a normal subgroup: `coset_of[x]` is the coset index of
/// element `x`, and `reps[c]` the least element index in coset `c`. Cosets are
/// numbered by increasing representative, so the subgroup itself is coset 0.
#[derive(Debug, Clone)]
pub struct CosetTable {
    pub coset_of: Vec<usize>,
    pub reps: Vec<usize>,
}

pub fn coset_table(g: &Group, n: &SubgroupSet<'_>) -> CosetTable {
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::with_capacity(n.index());
    let members: Vec<usize> = n.members().collect();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &m in &members {
            coset_of[g.mul(m, x)] = c;
        }
    }
    CosetTable { coset_of, reps }
}

/// The quotient group `g / n`, acting on the cosets of `n` by right
/// multiplication. Element `c` of the quotient is the coset whose least member
/// is `coset_table(g, n).reps[c]`.
pub fn quotient(g: &Group, n: &SubgroupSet<'_>) -> Result<Group> {
    quotient_with_cosets(g, n).map(|(q, _)| q)
}

pub fn quotient_with_cosets(g: &Group, n: &SubgroupSet<'_>) -> Result<(Group, CosetTable)> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let table = coset_table(g, n);
    let k = table.reps.len();
    let elements: Vec<Permutation> = table
        .reps
        .iter()
        .map(|&r| {
            let images = table
                .reps
                .iter()
                .map(|&s| table.coset_of[g.mul(s, r)] as u32)
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    let mut gens: Vec<usize> = g.generators().iter().map(|&x| table.coset_of[x]).collect();
    if gens.is_empty() {
        gens.push(0);
    }
    debug_assert_eq!(elements.len(), k);
    let label = format!("{}/N{}", g.label(), n.size());
    Ok((Group::from_elements(label, elements, gens), table))
}

/// Conjugacy classes, each sorted, listed by increasing least member.
pub fn conjugacy_classes(g: &Group) -> Vec<Vec<usize>> {
    let mut assigned = FixedBitSet::with_capacity(g.order());
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if assigned.contains(x) {
            continue;
        }
        let class = conjugacy_class_unsorted(g, x);
        for &y in &class {
            assigned.insert(y);
        }
        let mut class = class;
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// The conjugacy class of `x`.
pub fn conjugacy_class(g: &Group, x: usize) -> Vec<usize> {
    let mut class = conjugacy_class_unsorted(g, x);
    class.sort_unstable();
    class
}

fn conjugacy_class_unsorted(g: &Group, x: usize) -> Vec<usize> {
    let mut seen = HashSet::new();
    seen.insert(x);
    let mut orbit = vec![x];
    let mut head = 0;
    while head < orbit.len() {
        let y = orbit[head];
        for &s in g.generators() {
            let z = g.conjugate(y, s);
            if seen.insert(z) {
                orbit.push(z);
            }
        }
        head += 1;
    }
    orbit
}

/// Least member of each conjugacy class.
pub fn class_representatives(g: &Group) -> Vec<usize> {
    conjugacy_classes(g).into_iter().map(|c| c[0]).collect()
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure(g: &Group, seed: usize) -> SubgroupSet<'_> {
    normal_closure_of(g, &SubgroupSet::whole(g), [seed])
}

/// Smallest subgroup containing `seeds` that is normalized by `within`.
///
/// `within` must contain the seeds for the result to lie inside it.
pub fn normal_closure_of<'g>(
    g: &'g Group,
    within: &SubgroupSet<'g>,
    seeds: impl IntoIterator<Item = usize>,
) -> SubgroupSet<'g> {
    let conj = within.generators();
    let mut closure = Closure::new(g);
    let mut seen = HashSet::new();
    let mut queue: Vec<usize> = Vec::new();
    for s in seeds {
        if seen.insert(s) {
            queue.push(s);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let y = queue[head];
        head += 1;
        closure.add(y);
        for &s in &conj {
            let z = g.conjugate(y, s);
            if seen.insert(z) {
                queue.push(z);
            }
        }
    }
    closure.finish()
}

/// `{y : yx = xy}`.
pub fn centralizer(g: &Group, x: usize) -> SubgroupSet<'_> {
    let mut bits = FixedBitSet::with_capacity(g.order());
    for y in 0..g.order() {
        if g.commutes(x, y) {
            bits.insert(y);
        }
    }
    SubgroupSet::from_bits(g, bits)
}

pub fn center(g: &Group) -> SubgroupSet<'_> {
    let mut bits = FixedBitSet::with_capacity(g.order());
    for y in 0..g.order() {
        if g.generators().iter().all(|&s| g.commutes(s, y)) {
            bits.insert(y);
        }
    }
    SubgroupSet::from_bits(g, bits)
}

/// `{y : y h y^-1 = h}`.
pub fn normalizer<'g>(g: &'g Group, h: &SubgroupSet<'g>) -> SubgroupSet<'g> {
    let hgens = h.generators();
    let mut bits = FixedBitSet::with_capacity(g.order());
    for y in 0..g.order() {
        if hgens.iter().all(|&m| h.contains(g.conjugate(m, y))) {
            bits.insert(y);
        }
    }
    SubgroupSet::from_bits(g, bits)
}

/// Normal subgroups discovered by joining normal closures of single elements.
#[derive(Debug, Clone)]
pub struct NormalSubgroups<'g> {
    /// Sorted by [`SubgroupSet::canonical_cmp`].
    pub subgroups: Vec<SubgroupSet<'g>>,
    /// False when the search stopped at its limit.
    pub complete: bool,
}

/// Every normal subgroup is a join of normal closures of single elements, so
/// a breadth-first search over joins finds all of them. Stops once `limit`
/// subgroups are known.
pub fn normal_subgroups(g: &Group, limit: usize) -> NormalSubgroups<'_> {
    let mut pieces: Vec<SubgroupSet<'_>> = Vec::new();
    let mut seen_pieces = HashSet::new();
    let mut covered = FixedBitSet::with_capacity(g.order());
    for x in class_representatives(g).into_iter().skip(1) {
        // x and its coprime powers have the same closure
        if covered.contains(x) {
            continue;
        }
        let span = cyclic_span(g, x);
        let ox = g.element_order(x);
        for y in span.members().filter(|&y| g.element_order(y) == ox) {
            covered.insert(y);
        }
        let piece = normal_closure(g, x);
        if seen_pieces.insert(piece.bits().clone()) {
            pieces.push(piece);
        }
    }

    let mut found: Vec<SubgroupSet<'_>> = vec![SubgroupSet::trivial(g)];
    let mut known: HashSet<FixedBitSet> = found.iter().map(|h| h.bits().clone()).collect();
    let mut complete = true;
    let mut head = 0;
    'search: while head < found.len() {
        let current = found[head].clone();
        head += 1;
        for piece in &pieces {
            if piece.is_subset_of(&current) {
                continue;
            }
            let joined = current.join(piece);
            if known.insert(joined.bits().clone()) {
                found.push(joined);
                if found.len() >= limit {
                    complete = false;
                    break 'search;
                }
            }
        }
    }
    found.sort_by(|a, b| a.canonical_cmp(b));
    NormalSubgroups {
        subgroups: found,
        complete,
    }
}

/// Distinct element sets, for oracle-style comparisons in tests.
pub fn member_set(h: &SubgroupSet<'_>) -> BTreeSet<usize> {
    h.members().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(gens: &[&str], degree: usize) -> Group {
        let perms: Vec<Permutation> = gens
            .iter()
            .map(|t| Permutation::parse_cycles(t, degree).unwrap())
            .collect();
        Group::close(&perms).unwrap()
    }

    fn s3() -> Group {
        group(&["(0 1 2)", "(0 1)"], 3)
    }

    fn s4() -> Group {
        group(&["(0 1 2 3)", "(0 1)"], 4)
    }

    fn a5() -> Group {
        group(&["(0 1 2 3 4)", "(0 1 2)"], 5)
    }

    fn idx(g: &Group, cycles: &str) -> usize {
        g.index_of(&Permutation::parse_cycles(cycles, g.degree()).unwrap())
            .unwrap()
    }

    #[test]
    fn cyclic_spans() {
        let g = s4();
        assert_eq!(cyclic_span(&g, 0).size(), 1);
        let t = idx(&g, "(0 1)");
        assert_eq!(member_set(&cyclic_span(&g, t)), [0, t].into());
        for x in 0..g.order() {
            let span = cyclic_span(&g, x);
            assert_eq!(span.size(), g.element_order(x));
            assert_eq!(span, cyclic_span(&g, g.inv(x)));
        }
    }

    #[test]
    fn subgroup_predicate() {
        let g = s4();
        assert!(is_subgroup(&g, &[0]));
        let c = idx(&g, "(0 1 2)");
        assert!(!is_subgroup(&g, &[0, c]));
        let all: Vec<usize> = (0..g.order()).collect();
        assert!(is_subgroup(&g, &all));
        assert_eq!(
            SubgroupSet::from_members(&g, &[0, c]).unwrap_err(),
            Error::NotASubgroup
        );
    }

    #[test]
    fn normality() {
        let g = s3();
        assert!(is_normal(&g, &SubgroupSet::trivial(&g)).unwrap());
        assert!(is_normal(&g, &SubgroupSet::whole(&g)).unwrap());
        let t = idx(&g, "(0 1)");
        assert!(!is_normal(&g, &cyclic_span(&g, t)).unwrap());
        let other = s3();
        assert_eq!(
            is_normal(&other, &SubgroupSet::trivial(&g)).unwrap_err(),
            Error::NotASubgroup
        );
    }

    #[test]
    fn quotients() {
        let g = s4();
        let q = quotient(&g, &SubgroupSet::trivial(&g)).unwrap();
        assert_eq!(q.order(), 24);
        let q = quotient(&g, &SubgroupSet::whole(&g)).unwrap();
        assert_eq!(q.order(), 1);
        let v4 = normal_closure(&g, idx(&g, "(0 1)(2 3)"));
        let (q, cosets) = quotient_with_cosets(&g, &v4).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        assert_eq!(cosets.reps[0], 0);
        // the induced multiplication matches coset arithmetic
        for a in 0..6 {
            for b in 0..6 {
                let prod = g.mul(cosets.reps[a], cosets.reps[b]);
                assert_eq!(q.mul(a, b), cosets.coset_of[prod]);
            }
        }
        let t = idx(&g, "(0 1)");
        assert_eq!(
            quotient(&g, &cyclic_span(&g, t)).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn classes_and_centralizers() {
        let g = s4();
        let classes = conjugacy_classes(&g);
        assert_eq!(classes[0], vec![0]);
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        for class in &classes {
            for &x in class {
                assert_eq!(class.len() * centralizer(&g, x).size(), g.order());
            }
        }
        assert!(centralizer(&g, 0).is_whole());
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = group(&["(0 1 2 3 4 5)"], 6);
        assert!(conjugacy_classes(&g).iter().all(|c| c.len() == 1));
        for x in 0..g.order() {
            assert_eq!(normal_closure(&g, x), cyclic_span(&g, x));
            assert!(centralizer(&g, x).is_whole());
        }
    }

    #[test]
    fn normal_closures() {
        let g = a5();
        for x in 1..g.order() {
            assert!(normal_closure(&g, x).is_whole());
        }
        let g = s4();
        assert_eq!(normal_closure(&g, idx(&g, "(0 1)(2 3)")).size(), 4);
        assert_eq!(normal_closure(&g, idx(&g, "(0 1 2)")).size(), 12);
        assert!(normal_closure(&g, idx(&g, "(0 1)")).is_whole());
    }

    #[test]
    fn normal_subgroup_search() {
        let g = s4();
        let found = normal_subgroups(&g, 100);
        assert!(found.complete);
        let sizes: Vec<usize> = found.subgroups.iter().map(|h| h.size()).collect();
        assert_eq!(sizes, vec![1, 4, 12, 24]);
        // V4 x Z2 ... the elementary abelian group of order 8 has 16 subgroups
        let e8 = group(&["(0 1)", "(2 3)", "(4 5)"], 6);
        assert_eq!(normal_subgroups(&e8, 100).subgroups.len(), 16);
        let limited = normal_subgroups(&e8, 5);
        assert!(!limited.complete);
    }

    #[test]
    fn to_group_preserves_order() {
        let g = s4();
        let a4 = normal_closure(&g, idx(&g, "(0 1 2)"));
        let h = a4.to_group();
        assert_eq!(h.order(), 12);
        assert_eq!(h.degree(), 4);
    }
}
