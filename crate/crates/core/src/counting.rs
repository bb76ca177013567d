//! Cyclic subgroup counting and the arithmetic identities built on it.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::group::Group;

/// Number of cyclic subgroups of a group, split by subgroup order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicCensus {
    pub order: usize,
    pub total: usize,
    pub by_order: BTreeMap<usize, usize>,
    pub involutions: usize,
}

impl CyclicCensus {
    pub fn count_of_order(&self, m: usize) -> usize {
        self.by_order.get(&m).copied().unwrap_or(0)
    }
}

/// Counts the distinct cyclic subgroups `<x>`.
///
/// Each cyclic subgroup of order `m` has exactly `phi(m)` generators, all of
/// them powers of each other, so one pass that marks the generators of every
/// newly met `<x>` visits each subgroup once.
pub fn census(g: &Group) -> CyclicCensus {
    let n = g.order();
    let mut absorbed = FixedBitSet::with_capacity(n);
    let mut by_order = BTreeMap::new();
    for x in 0..n {
        if absorbed.contains(x) {
            continue;
        }
        let ox = g.element_order(x);
        *by_order.entry(ox).or_insert(0) += 1;
        let mut y = x;
        for k in 1..=ox {
            if num_integer::gcd(k, ox) == 1 {
                absorbed.insert(y);
            }
            y = g.mul(y, x);
        }
    }
    let total = by_order.values().sum();
    let involutions = by_order.get(&2).copied().unwrap_or(0);
    CyclicCensus {
        order: n,
        total,
        by_order,
        involutions,
    }
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn num_divisors(n: u64) -> u64 {
    assert!(n >= 1);
    factorize(n)
        .into_iter()
        .map(|(_, e)| e as u64 + 1)
        .product()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderIdentityTerm {
    pub m: usize,
    pub count: usize,
    pub phi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderIdentityReport {
    pub order: usize,
    pub terms: Vec<OrderIdentityTerm>,
    pub sum: usize,
    pub holds: bool,
}

/// Checks `|G| = sum over m dividing |G| of c(m) * phi(m)`.
pub fn check_order_identity(g: &Group) -> OrderIdentityReport {
    order_identity_from_census(&census(g))
}

pub fn order_identity_from_census(c: &CyclicCensus) -> OrderIdentityReport {
    let terms: Vec<OrderIdentityTerm> = divisors(c.order as u64)
        .into_iter()
        .map(|m| OrderIdentityTerm {
            m: m as usize,
            count: c.count_of_order(m as usize),
            phi: euler_phi(m) as usize,
        })
        .collect();
    let sum = terms.iter().map(|t| t.count * t.phi).sum();
    // a stray order that does not divide |G| would also break the identity
    let stray = c.by_order.keys().any(|&m| !c.order.is_multiple_of(m));
    OrderIdentityReport {
        order: c.order,
        terms,
        sum,
        holds: sum == c.order && !stray,
    }
}

/// Lower bound `d(|G|) <= c(G)` and upper bound `c(G) <= |G|`, with equality
/// flags and the structural facts that should characterize equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorBounds {
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub lower_tight: bool,
    pub upper_tight: bool,
    pub cyclic: bool,
    pub elementary_abelian_2: bool,
}

impl DivisorBounds {
    /// Both bounds hold and equality occurs exactly where characterized.
    pub fn holds(&self) -> bool {
        self.lower_ok
            && self.upper_ok
            && self.lower_tight == self.cyclic
            && self.upper_tight == self.elementary_abelian_2
    }
}

pub fn check_divisor_bounds(g: &Group) -> DivisorBounds {
    divisor_bounds_from_census(g, &census(g))
}

pub fn divisor_bounds_from_census(g: &Group, c: &CyclicCensus) -> DivisorBounds {
    let d = num_divisors(g.order() as u64) as usize;
    DivisorBounds {
        lower_ok: c.total >= d,
        upper_ok: c.total <= g.order(),
        lower_tight: c.total == d,
        upper_tight: c.total == g.order(),
        cyclic: g.is_cyclic(),
        elementary_abelian_2: g.element_orders().all(|o| o <= 2),
    }
}

/// `c((Z_p)^n) = 1 + (p^n - 1)/(p - 1)`: the trivial subgroup plus one
/// subgroup per line of the vector space.
pub fn elementary_abelian_c(p: u64, n: u32) -> u64 {
    assert!(is_prime(p) && n >= 1);
    1 + (p.pow(n) - 1) / (p - 1)
}
