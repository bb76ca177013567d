use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::matrix_groups::sl2;

use super::{cyclic, elementary_abelian, semidirect_product};

/// A group identified by its small-group library coordinates.
#[derive(Debug, Clone, Copy)]
pub struct NamedGroup {
    pub order: usize,
    pub id: usize,
    pub name: &'static str,
    /// Pinned element-order multiset as `(element order, count)`.
    pub checksum: &'static [(usize, usize)],
    build: fn() -> Result<Group>,
}

const REGISTRY: &[NamedGroup] = &[
    NamedGroup {
        order: 24,
        id: 3,
        name: "SL(2,3)",
        checksum: &[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)],
        build: || sl2(3),
    },
    NamedGroup {
        order: 36,
        id: 3,
        name: "SmallGroup(36,3)",
        checksum: &[(1, 1), (2, 3), (3, 2), (6, 6), (9, 24)],
        build: || klein_by_cyclic(9),
    },
    NamedGroup {
        order: 56,
        id: 11,
        name: "SmallGroup(56,11)",
        checksum: &[(1, 1), (2, 7), (7, 48)],
        build: z2_cubed_by_z7,
    },
    NamedGroup {
        order: 108,
        id: 3,
        name: "SmallGroup(108,3)",
        checksum: &[(1, 1), (2, 3), (3, 2), (6, 6), (9, 6), (18, 18), (27, 72)],
        build: || klein_by_cyclic(27),
    },
    NamedGroup {
        order: 120,
        id: 5,
        name: "SL(2,5)",
        checksum: &[(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)],
        build: || sl2(5),
    },
];

pub fn registry_entries() -> &'static [NamedGroup] {
    REGISTRY
}

/// `(Z2 x Z2) : Z_m`, the generator of `Z_m` cycling the three involutions.
fn klein_by_cyclic(m: usize) -> Result<Group> {
    let v = elementary_abelian(2, 2)?;
    let (a, b) = (v.generators()[0], v.generators()[1]);
    // a -> b -> ab -> a
    let action = vec![vec![b, v.mul(a, b)]];
    semidirect_product(&v, &cyclic(m)?, &action)
}

/// `(Z2)^3 : Z7`, the generator acting as multiplication by x on
/// GF(2)[x]/(x^3 + x + 1).
fn z2_cubed_by_z7() -> Result<Group> {
    let v = elementary_abelian(2, 3)?;
    let (a, b, c) = (v.generators()[0], v.generators()[1], v.generators()[2]);
    let action = vec![vec![b, c, v.mul(a, b)]];
    semidirect_product(&v, &cyclic(7)?, &action)
}

pub(crate) fn order_multiset(g: &Group) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for o in g.element_orders() {
        *counts.entry(o).or_insert(0) += 1;
    }
    counts
}

/// Builds a registry group and checks it against its pinned checksum.
pub fn named(order: usize, id: usize) -> Result<Group> {
    let entry = REGISTRY
        .iter()
        .find(|e| e.order == order && e.id == id)
        .ok_or(Error::UnknownNamedGroup { order, id })?;
    let g = (entry.build)()?;
    let expected: BTreeMap<usize, usize> = entry.checksum.iter().copied().collect();
    if g.order() != order || order_multiset(&g) != expected {
        return Err(Error::RegistryDrift { order, id });
    }
    Ok(g.with_label(entry.name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::census;

    #[test]
    fn every_entry_builds() {
        for e in registry_entries() {
            let g = named(e.order, e.id).unwrap();
            assert_eq!(g.order(), e.order);
            assert_eq!(g.label(), e.name);
        }
    }

    #[test]
    fn registry_counts() {
        assert_eq!(census(&named(36, 3).unwrap()).total, 12);
        assert_eq!(census(&named(56, 11).unwrap()).total, 16);
        assert_eq!(census(&named(108, 3).unwrap()).total, 16);
    }

    #[test]
    fn unknown_entry() {
        assert_eq!(
            named(999, 1).unwrap_err(),
            Error::UnknownNamedGroup { order: 999, id: 1 }
        );
    }
}
