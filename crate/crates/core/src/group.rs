use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default closure cap, in elements.
pub const DEFAULT_CAP: usize = 200_000;

/// Groups up to this order carry a full multiplication table.
pub const TABLE_LIMIT: usize = 4096;

/// A finite permutation group with every element enumerated.
///
/// Elements are addressed by their index in the enumeration; index 0 is the
/// identity. The enumeration is breadth-first over generator words, trying
/// generators in the order given, so two closures of the same generator list
/// produce identical tables.
///
/// Groups are immutable once built and can be shared freely between threads.
pub struct Group {
    label: String,
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    generators: Vec<usize>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    // row-major, present only when order <= TABLE_LIMIT
    table: Option<Vec<u16>>,
}

impl Group {
    /// Enumerates the group generated by `generators` with the default cap.
    pub fn close(generators: &[Permutation]) -> Result<Group> {
        Group::close_with_cap(generators, DEFAULT_CAP)
    }

    pub fn close_with_cap(generators: &[Permutation], cap: usize) -> Result<Group> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => 1,
        };
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0u32);
        let mut head = 0;
        while head < elements.len() {
            for s in generators {
                let p = elements[head].compose(s);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(p.clone(), elements.len() as u32);
                    elements.push(p);
                }
            }
            head += 1;
        }
        let gens = generators.iter().map(|g| index[g] as usize).collect();
        Ok(Group::assemble(
            String::new(),
            degree,
            elements,
            index,
            gens,
        ))
    }

    /// Builds a group from a complete, closed element list whose first entry is
    /// the identity. `generators` index into `elements` and must generate.
    pub(crate) fn from_elements(
        label: String,
        elements: Vec<Permutation>,
        generators: Vec<usize>,
    ) -> Group {
        let degree = elements[0].degree();
        debug_assert!(elements[0].is_identity());
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        Group::assemble(label, degree, elements, index, generators)
    }

    fn assemble(
        label: String,
        degree: usize,
        elements: Vec<Permutation>,
        index: HashMap<Permutation, u32>,
        generators: Vec<usize>,
    ) -> Group {
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut group = Group {
            label,
            degree,
            elements,
            index,
            generators,
            inverses,
            orders: Vec::new(),
            table: None,
        };
        if group.order() <= TABLE_LIMIT {
            group.table = Some(group.build_table());
        }
        group.orders = (0..group.order()).map(|x| group.compute_order(x)).collect();
        group
    }

    /// Fills the table from right-multiplication edges along a BFS tree over the
    /// generators, so each entry costs one lookup.
    fn build_table(&self) -> Vec<u16> {
        let n = self.order();
        let k = self.generators.len();
        let mut right = vec![0u32; n * k];
        for x in 0..n {
            for (s, &g) in self.generators.iter().enumerate() {
                right[x * k + s] = self.mul_slow(x, g) as u32;
            }
        }
        // BFS tree: every non-identity element is parent * generator[via].
        let mut parent = vec![u32::MAX; n];
        let mut via = vec![0u16; n];
        let mut order = Vec::with_capacity(n);
        parent[0] = 0;
        order.push(0usize);
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            for s in 0..k {
                let y = right[x * k + s] as usize;
                if parent[y] == u32::MAX {
                    parent[y] = x as u32;
                    via[y] = s as u16;
                    order.push(y);
                }
            }
            head += 1;
        }
        assert_eq!(
            order.len(),
            n,
            "generators do not generate the element list"
        );
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            let row = i * n;
            table[row] = i as u16;
            for &j in &order[1..] {
                let p = table[row + parent[j] as usize] as usize;
                table[row + j] = right[p * k + via[j] as usize] as u16;
            }
        }
        table
    }

    fn compute_order(&self, x: usize) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Group {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, x: usize) -> &Permutation {
        &self.elements[x]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Generator indices, in the order the group was closed over.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        self.generators
            .iter()
            .map(|&g| self.elements[g].clone())
            .collect()
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose(&self.elements[b]);
        self.index[&p] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        k %= self.orders[a] as u64;
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `x * m * x^-1`.
    #[inline]
    pub fn conjugate(&self, m: usize, x: usize) -> usize {
        self.mul(self.mul(x, m), self.inv(x))
    }

    /// `a^-1 * b^-1 * a * b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// Least `k >= 1` with `x^k` the identity.
    #[inline]
    pub fn element_order(&self, x: usize) -> usize {
        self.orders[x] as usize
    }

    pub fn element_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.orders.iter().map(|&o| o as usize)
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.orders.iter().any(|&o| o as usize == n)
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order())
            .field("degree", &self.degree)
            .finish()
    }
}
