//! SL(2, q) and PSL(2, q) as permutation groups.

mod field;

pub use field::{FieldElement, GaloisField, MAX_FIELD_SIZE};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

/// Largest q accepted by [`sl2`].
pub const SL2_MAX_Q: u64 = 32;
/// Largest q accepted by [`psl2`].
pub const PSL2_MAX_Q: u64 = 64;

/// A 2x2 matrix `[[a, b], [c, d]]` over a [`GaloisField`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Mat2 {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity(f: &GaloisField) -> Self {
        Mat2::new(f.one(), f.zero(), f.zero(), f.one())
    }

    pub fn mul(&self, other: &Mat2, f: &GaloisField) -> Mat2 {
        let dot = |x, y, z, w| f.add(f.mul(x, y), f.mul(z, w));
        Mat2 {
            a: dot(self.a, other.a, self.b, other.c),
            b: dot(self.a, other.b, self.b, other.d),
            c: dot(self.c, other.a, self.d, other.c),
            d: dot(self.c, other.b, self.d, other.d),
        }
    }

    pub fn det(&self, f: &GaloisField) -> FieldElement {
        f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))
    }

    /// Row vector action `(x, y) -> (x, y) * M`.
    pub fn act_row(
        &self,
        x: FieldElement,
        y: FieldElement,
        f: &GaloisField,
    ) -> (FieldElement, FieldElement) {
        (
            f.add(f.mul(x, self.a), f.mul(y, self.c)),
            f.add(f.mul(x, self.b), f.mul(y, self.d)),
        )
    }
}

/// Matrices generating SL(2, q): a diagonal with primitive entry, the upper
/// unitriangular transvection, and the Weyl element.
pub fn sl2_generators(f: &GaloisField) -> Vec<Mat2> {
    let (zero, one) = (f.zero(), f.one());
    let w = f.primitive();
    let w_inv = f.inv(w).expect("primitive element is nonzero");
    vec![
        Mat2::new(w, zero, zero, w_inv),
        Mat2::new(one, one, zero, one),
        Mat2::new(zero, one, f.neg(one), zero),
    ]
}

fn field_for(q: u64, max: u64, what: &str) -> Result<GaloisField> {
    if q > max {
        return Err(Error::TooLarge(format!(
            "{what}({q}) is capped at q = {max}"
        )));
    }
    if q < 2 {
        return Err(Error::BadParams {
            kind: "sl2/psl2",
            reason: format!("q = {q} must be a prime power >= 2"),
        });
    }
    GaloisField::of_order(q)
}

fn close_matrices(
    f: &GaloisField,
    points: usize,
    act: impl Fn(&Mat2) -> Vec<u32>,
) -> Result<Group> {
    let gens: Vec<Permutation> = sl2_generators(f)
        .iter()
        .map(|m| Permutation::from_images(act(m)))
        .collect::<Result<_>>()?;
    debug_assert!(gens.iter().all(|g| g.degree() == points));
    Group::close(&gens)
}

/// SL(2, q) acting on the `q^2 - 1` nonzero row vectors, listed in increasing
/// `(x, y)` order.
pub fn sl2(q: u64) -> Result<Group> {
    let f = field_for(q, SL2_MAX_Q, "SL2")?;
    let vectors: Vec<(FieldElement, FieldElement)> = f
        .elements()
        .flat_map(|x| f.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| x.0 != 0 || y.0 != 0)
        .collect();
    let lookup: HashMap<(FieldElement, FieldElement), u32> = vectors
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32))
        .collect();
    let g = close_matrices(&f, vectors.len(), |m| {
        vectors
            .iter()
            .map(|&(x, y)| lookup[&m.act_row(x, y, &f)])
            .collect()
    })?;
    let expected = q * (q * q - 1);
    assert_eq!(g.order() as u64, expected, "SL(2,{q}) closure order");
    Ok(g.with_label(format!("SL(2,{q})")))
}

/// PSL(2, q) acting on the projective line: point 0 is infinity, point
/// `1 + t` is the field element `t`.
pub fn psl2(q: u64) -> Result<Group> {
    let f = field_for(q, PSL2_MAX_Q, "PSL2")?;
    let n = f.size() as usize;
    // [t : 1] -> t, [1 : 0] -> infinity
    let point = |x: FieldElement, y: FieldElement| -> u32 {
        match f.inv(y) {
            None => 0,
            Some(yi) => 1 + f.mul(x, yi).0,
        }
    };
    let g = close_matrices(&f, n + 1, |m| {
        let mut images = Vec::with_capacity(n + 1);
        let (x, y) = m.act_row(f.one(), f.zero(), &f);
        images.push(point(x, y));
        for t in f.elements() {
            let (x, y) = m.act_row(t, f.one(), &f);
            images.push(point(x, y));
        }
        images
    })?;
    let expected = q * (q * q - 1) / num_integer::gcd(2, q - 1);
    assert_eq!(g.order() as u64, expected, "PSL(2,{q}) closure order");
    Ok(g.with_label(format!("PSL(2,{q})")))
}

/// Number of involutions of PSL(2, q): `q^2 - 1` for even q, otherwise
/// `q(q + 1)/2` or `q(q - 1)/2` as q is 1 or 3 mod 4.
pub fn involution_count_formula(q: u64) -> u64 {
    assert!(q >= 2);
    if q.is_multiple_of(2) {
        q * q - 1
    } else if q % 4 == 1 {
        q * (q + 1) / 2
    } else {
        q * (q - 1) / 2
    }
}
