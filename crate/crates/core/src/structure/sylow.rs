use crate::counting::{factorize, is_prime};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroup::{cyclic_span, normalizer, SubgroupSet};

fn check_prime_divisor(g: &Group, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let order = g.order();
    factorize(order as u64)
        .into_iter()
        .find(|&(r, _)| r == p)
        .map(|(_, e)| p.pow(e))
        .ok_or(Error::PDoesNotDivide { p, order })
}

/// A Sylow p-subgroup, grown from a cyclic subgroup of order `p`: while the
/// current p-subgroup `P` is too small, some `y` in its normalizer has
/// `yP` of order `p` in `N(P)/P`, and `<P, y>` is a p-subgroup `p` times larger.
pub fn sylow_subgroup(g: &Group, p: u64) -> Result<SubgroupSet<'_>> {
    let full = check_prime_divisor(g, p)? as usize;
    let p = p as usize;
    let x = (0..g.order())
        .find(|&x| g.element_order(x) == p)
        .expect("Cauchy: an element of order p exists");
    let mut current = cyclic_span(g, x);
    while current.size() < full {
        let n = normalizer(g, &current);
        let y = n
            .members()
            .find(|&y| !current.contains(y) && current.contains(g.pow(y, p as u64)))
            .expect("a non-Sylow p-subgroup is properly contained in its normalizer's p-part");
        let grown = SubgroupSet::generated(g, current.generators().into_iter().chain([y]));
        debug_assert_eq!(grown.size(), current.size() * p);
        current = grown;
    }
    Ok(current)
}

/// `n_p = |G : N_G(P)|`, asserting the Sylow congruences.
pub fn sylow_count(g: &Group, p: u64) -> Result<usize> {
    let sylow = sylow_subgroup(g, p)?;
    let count = g.order() / normalizer(g, &sylow).size();
    let p = p as usize;
    assert_eq!(count % p, 1, "n_p must be 1 mod p");
    assert_eq!(
        (g.order() / sylow.size()) % count,
        0,
        "n_p must divide the p'-part"
    );
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alternating, cyclic, direct_product, symmetric};

    #[test]
    fn abelian_counts_are_one() {
        let g = direct_product(&cyclic(12).unwrap(), &cyclic(10).unwrap()).unwrap();
        for p in [2, 3, 5] {
            assert_eq!(sylow_count(&g, p).unwrap(), 1);
        }
    }

    #[test]
    fn known_counts() {
        assert_eq!(sylow_count(&alternating(4).unwrap(), 3).unwrap(), 4);
        assert_eq!(sylow_count(&alternating(4).unwrap(), 2).unwrap(), 1);
        let a5 = alternating(5).unwrap();
        assert_eq!(sylow_count(&a5, 5).unwrap(), 6);
        assert_eq!(sylow_count(&a5, 3).unwrap(), 10);
        assert_eq!(sylow_count(&a5, 2).unwrap(), 5);
        assert_eq!(sylow_count(&symmetric(4).unwrap(), 2).unwrap(), 3);
    }

    #[test]
    fn sylow_sizes() {
        let s6 = symmetric(6).unwrap();
        assert_eq!(sylow_subgroup(&s6, 2).unwrap().size(), 16);
        assert_eq!(sylow_subgroup(&s6, 3).unwrap().size(), 9);
    }

    #[test]
    fn errors() {
        let a4 = alternating(4).unwrap();
        assert_eq!(
            sylow_count(&a4, 5).unwrap_err(),
            Error::PDoesNotDivide { p: 5, order: 12 }
        );
        assert_eq!(sylow_count(&a4, 4).unwrap_err(), Error::NotPrime(4));
    }
}
