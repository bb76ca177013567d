//! Builders for the group families and named groups.

mod registry;
mod spec;

pub use registry::{named, registry_entries, NamedGroup};
pub use spec::{GroupSpec, SpecParseError};

use crate::counting::is_prime;
use crate::error::{Error, Result};
use crate::group::{Group, DEFAULT_CAP};
use crate::matrix_groups::{psl2, sl2};
use crate::perm::Permutation;

/// Largest semidirect product realized on its regular representation.
pub const REGULAR_LIMIT: usize = 8192;

/// Builds the group a spec describes.
pub fn build(spec: &GroupSpec) -> Result<Group> {
    let label = spec.to_string();
    let g = match spec {
        GroupSpec::Cyclic(n) => cyclic(*n)?,
        GroupSpec::Dihedral(n) => dihedral(*n)?,
        GroupSpec::GeneralizedQuaternion(k) => generalized_quaternion(*k)?,
        GroupSpec::Symmetric(n) => symmetric(*n)?,
        GroupSpec::Alternating(n) => alternating(*n)?,
        GroupSpec::ElementaryAbelian { p, n } => elementary_abelian(*p, *n)?,
        GroupSpec::DirectProduct(factors) => {
            let mut iter = factors.iter();
            let first = iter.next().ok_or_else(|| Error::BadParams {
                kind: "direct_product",
                reason: "needs at least one factor".into(),
            })?;
            let mut acc = build(first)?;
            for f in iter {
                acc = direct_product(&acc, &build(f)?)?;
            }
            acc
        }
        GroupSpec::SemidirectProduct {
            normal,
            acting,
            action,
        } => {
            let n = build(normal)?;
            let h = build(acting)?;
            let action = if action.is_empty() {
                vec![n.generators().to_vec(); h.generators().len()]
            } else {
                action.clone()
            };
            semidirect_product(&n, &h, &action)?
        }
        GroupSpec::Sl2(q) => sl2(*q)?,
        GroupSpec::Psl2(q) => psl2(*q)?,
        GroupSpec::Named { order, id } => named(*order, *id)?,
        GroupSpec::Explicit(gens) => explicit(gens)?,
    };
    Ok(g.with_label(label))
}

/// The order a spec promises, where it is determined by the parameters alone.
pub fn documented_order(spec: &GroupSpec) -> Option<u64> {
    use GroupSpec::*;
    let factorial = |n: usize| (1..=n as u64).product::<u64>();
    Some(match spec {
        Cyclic(n) => *n as u64,
        Dihedral(n) => 2 * *n as u64,
        GeneralizedQuaternion(k) => 1u64 << k,
        Symmetric(n) => factorial(*n),
        Alternating(n) => factorial(*n) / 2,
        ElementaryAbelian { p, n } => p.pow(*n),
        DirectProduct(fs) => fs.iter().map(documented_order).product::<Option<u64>>()?,
        SemidirectProduct { normal, acting, .. } => {
            documented_order(normal)? * documented_order(acting)?
        }
        Sl2(q) => q * (q * q - 1),
        Psl2(q) => q * (q * q - 1) / num_integer::gcd(2, q - 1),
        Named { order, .. } => *order as u64,
        Explicit(_) => return None,
    })
}

fn bad(kind: &'static str, reason: impl Into<String>) -> Error {
    Error::BadParams {
        kind,
        reason: reason.into(),
    }
}

fn cycle_on(degree: usize, points: impl IntoIterator<Item = u32>) -> Permutation {
    let cycle: Vec<u32> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[cycle]).expect("well-formed cycle")
}

pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(bad("cyclic", "order must be positive"));
    }
    Group::close(&[cycle_on(n, 0..n as u32)]).map(|g| g.with_label(format!("Z{n}")))
}

/// Dihedral group of order `2n`: the natural action on an n-gon for `n >= 3`,
/// the regular action otherwise.
pub fn dihedral(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(bad("dihedral", "n must be positive"));
    }
    let gens = if n >= 3 {
        let rotation = cycle_on(n, 0..n as u32);
        let reflection = Permutation::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
        vec![rotation, reflection]
    } else {
        // point i + n*j is r^i s^j; right multiplication by r and by s
        let pt = |i: usize, j: usize| (i % n + n * j) as u32;
        let mut by_r = Vec::with_capacity(2 * n);
        let mut by_s = Vec::with_capacity(2 * n);
        for j in 0..2 {
            for i in 0..n {
                by_r.push(if j == 0 {
                    pt(i + 1, 0)
                } else {
                    pt(i + n - 1, 1)
                });
                by_s.push(pt(i, 1 - j));
            }
        }
        vec![
            Permutation::from_images(by_r)?,
            Permutation::from_images(by_s)?,
        ]
    };
    Group::close(&gens).map(|g| g.with_label(format!("D{}", 2 * n)))
}

/// Generalized quaternion group of order `2^k` on its regular representation,
/// from `<a, b | a^(2^(k-1)), b^2 = a^(2^(k-2)), b a b^-1 = a^-1>`.
pub fn generalized_quaternion(k: u32) -> Result<Group> {
    if !(3..=16).contains(&k) {
        return Err(bad("generalized_quaternion", "exponent must lie in 3..=16"));
    }
    let n = 1usize << (k - 1);
    // point i + n*j is a^i b^j
    let pt = |i: usize, j: usize| (i % n + n * j) as u32;
    let mut by_a = Vec::with_capacity(2 * n);
    let mut by_b = Vec::with_capacity(2 * n);
    for j in 0..2 {
        for i in 0..n {
            // a^i b a = a^(i-1) b;  a^i b b = a^(i + n/2)
            by_a.push(if j == 0 {
                pt(i + 1, 0)
            } else {
                pt(i + n - 1, 1)
            });
            by_b.push(if j == 0 { pt(i, 1) } else { pt(i + n / 2, 0) });
        }
    }
    let gens = [
        Permutation::from_images(by_a)?,
        Permutation::from_images(by_b)?,
    ];
    Group::close(&gens).map(|g| g.with_label(format!("Q{}", 2 * n)))
}

pub fn symmetric(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(bad("symmetric", "degree must be positive"));
    }
    if n == 1 {
        return Group::close(&[]).map(|g| g.with_label("S1"));
    }
    let gens = [cycle_on(n, [0, 1]), cycle_on(n, 0..n as u32)];
    Group::close(&gens).map(|g| g.with_label(format!("S{n}")))
}

pub fn alternating(n: usize) -> Result<Group> {
    if n < 3 {
        return Err(bad("alternating", "degree must be at least 3"));
    }
    let long = if n % 2 == 1 {
        cycle_on(n, 0..n as u32)
    } else {
        cycle_on(n, 1..n as u32)
    };
    let gens = [cycle_on(n, [0, 1, 2]), long];
    Group::close(&gens).map(|g| g.with_label(format!("A{n}")))
}

/// `(Z_p)^n` as `n` disjoint p-cycles.
pub fn elementary_abelian(p: u64, n: u32) -> Result<Group> {
    if !is_prime(p) {
        return Err(bad("elementary_abelian", format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(bad("elementary_abelian", "rank must be at least 1"));
    }
    let p = p as usize;
    let degree = p * n as usize;
    let gens: Vec<Permutation> = (0..n as usize)
        .map(|k| cycle_on(degree, (k * p) as u32..((k + 1) * p) as u32))
        .collect();
    Group::close(&gens).map(|g| g.with_label(format!("Z{p}^{n}")))
}

/// Group generated by explicit permutations, padded to a common degree.
pub fn explicit(gens: &[Permutation]) -> Result<Group> {
    let degree = gens.iter().map(Permutation::degree).max().unwrap_or(1);
    let padded: Vec<Permutation> = gens.iter().map(|g| g.shifted(0, degree)).collect();
    Group::close(&padded)
}

/// `a x b` acting on the disjoint union of their point sets.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    if a.order().saturating_mul(b.order()) > DEFAULT_CAP {
        return Err(Error::CapExceeded { cap: DEFAULT_CAP });
    }
    let degree = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a
        .generator_perms()
        .iter()
        .map(|p| p.shifted(0, degree))
        .collect();
    gens.extend(
        b.generator_perms()
            .iter()
            .map(|p| p.shifted(a.degree(), degree)),
    );
    let g = Group::close(&gens)?;
    debug_assert_eq!(g.order(), a.order() * b.order());
    Ok(g.with_label(format!("{} x {}", a.label(), b.label())))
}

/// Breadth-first spanning tree of a group over its generators:
/// `elements[k] = parent * generators[via]` for every `k` after the first.
pub(crate) struct WordTree {
    pub order: Vec<usize>,
    pub parent: Vec<usize>,
    pub via: Vec<usize>,
}

pub(crate) fn word_tree(g: &Group, gens: &[usize]) -> WordTree {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut via = vec![0; n];
    let mut order = vec![0];
    parent[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        for (s, &t) in gens.iter().enumerate() {
            let y = g.mul(x, t);
            if parent[y] == usize::MAX {
                parent[y] = x;
                via[y] = s;
                order.push(y);
            }
        }
        head += 1;
    }
    WordTree { order, parent, via }
}

/// Extends generator images to a map on all of `source`, returning `None`
/// unless the result is a homomorphism into `target`.
pub(crate) fn extend_homomorphism(
    source: &Group,
    gens: &[usize],
    images: &[usize],
    tree: &WordTree,
    target: &Group,
) -> Option<Vec<usize>> {
    if tree.order.len() != source.order() {
        return None;
    }
    let mut map = vec![0; source.order()];
    for &x in &tree.order[1..] {
        map[x] = target.mul(map[tree.parent[x]], images[tree.via[x]]);
    }
    let consistent = (0..source.order()).all(|x| {
        gens.iter()
            .zip(images)
            .all(|(&s, &img)| map[source.mul(x, s)] == target.mul(map[x], img))
    });
    consistent.then_some(map)
}

/// `n ⋊ h` on the regular representation (points `m + |n| * k` for the element
/// `m k`). `action[i]` lists the images of `n.generators()` under the
/// automorphism by which the `i`-th generator of `h` acts, by conjugation
/// `m -> x m x^-1`.
pub fn semidirect_product(n: &Group, h: &Group, action: &[Vec<usize>]) -> Result<Group> {
    let total = n.order().saturating_mul(h.order());
    if total > DEFAULT_CAP {
        return Err(Error::CapExceeded { cap: DEFAULT_CAP });
    }
    if total > REGULAR_LIMIT {
        return Err(Error::TooLarge(format!(
            "semidirect product of order {total} exceeds the regular-carrier limit {REGULAR_LIMIT}"
        )));
    }
    if action.len() != h.generators().len() {
        return Err(Error::BadParams {
            kind: "semidirect_product",
            reason: format!(
                "{} action maps given for {} acting generators",
                action.len(),
                h.generators().len()
            ),
        });
    }
    let ngens = n.generators();
    let ntree = word_tree(n, ngens);
    let mut auts: Vec<Vec<usize>> = Vec::with_capacity(action.len());
    for (i, images) in action.iter().enumerate() {
        if images.len() != ngens.len() || images.iter().any(|&x| x >= n.order()) {
            return Err(Error::NotAnAutomorphism(i));
        }
        let map =
            extend_homomorphism(n, ngens, images, &ntree, n).ok_or(Error::NotAnAutomorphism(i))?;
        let mut hit = vec![false; n.order()];
        for &y in &map {
            if std::mem::replace(&mut hit[y], true) {
                return Err(Error::NotAnAutomorphism(i));
            }
        }
        auts.push(map);
    }

    // alpha_(x s) = alpha_x after alpha_s, over every element x of h
    let hgens = h.generators();
    let htree = word_tree(h, hgens);
    let mut alpha: Vec<Vec<usize>> = vec![Vec::new(); h.order()];
    alpha[0] = (0..n.order()).collect();
    for &x in &htree.order[1..] {
        let base = &alpha[htree.parent[x]];
        let step = &auts[htree.via[x]];
        alpha[x] = step.iter().map(|&m| base[m]).collect();
    }
    for x in 0..h.order() {
        for (s, &t) in hgens.iter().enumerate() {
            let composed: Vec<usize> = auts[s].iter().map(|&m| alpha[x][m]).collect();
            if alpha[h.mul(x, t)] != composed {
                return Err(Error::ActionIncompatible);
            }
        }
    }

    let nn = n.order();
    let pt = |m: usize, k: usize| (m + nn * k) as u32;
    let mut gens = Vec::new();
    for &t in ngens {
        // (m k) * t = m alpha_k(t) k
        let images = (0..h.order())
            .flat_map(|k| (0..nn).map(move |m| (m, k)))
            .map(|(m, k)| pt(n.mul(m, alpha[k][t]), k))
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    for &s in hgens {
        let images = (0..h.order())
            .flat_map(|k| (0..nn).map(move |m| (m, k)))
            .map(|(m, k)| pt(m, h.mul(k, s)))
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    let g = Group::close(&gens)?;
    assert_eq!(g.order(), total, "semidirect product closure order");
    Ok(g.with_label(format!("{} : {}", n.label(), h.label())))
}
