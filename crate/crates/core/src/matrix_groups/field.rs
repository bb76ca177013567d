use std::fmt;

use crate::counting::{factorize, is_prime};
use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// An element of a [`GaloisField`], encoded as the integer `sum c_i p^i` of its
/// polynomial coefficients. Integer order is lexicographic coefficient order,
/// highest degree first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

/// GF(p^m) with a fixed irreducible modulus; multiplication goes through
/// discrete log tables over a primitive element.
#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus coefficients, constant term first (length m + 1).
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl GaloisField {
    /// GF(p^m) with the lexicographically least monic irreducible modulus.
    pub fn new(p: u64, m: u32) -> Result<GaloisField> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::BadParams {
                kind: "gf",
                reason: "extension degree must be at least 1".into(),
            });
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or_else(|| Error::TooLarge(format!("GF({p}^{m})")))?;
        let (p, q) = (p as u32, q as u32);
        let modulus = least_irreducible(p, m);
        let mut field = GaloisField {
            p,
            m,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_log_tables();
        Ok(field)
    }

    /// The field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<GaloisField> {
        match factorize(q).as_slice() {
            [(p, m)] => GaloisField::new(*p, *m),
            _ => Err(Error::BadParams {
                kind: "gf",
                reason: format!("{q} is not a prime power"),
            }),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    /// Embeds an integer through the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElement {
        FieldElement(k.rem_euclid(self.p as i64) as u32)
    }

    fn digits(&self, mut x: u32) -> Vec<u32> {
        let mut d = vec![0; self.m as usize];
        for slot in d.iter_mut() {
            *slot = x % self.p;
            x /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.m == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let (mut x, mut y, mut place, mut out) = (a.0, b.0, 1, 0);
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let d: Vec<u32> = self
            .digits(a.0)
            .into_iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        FieldElement(self.undigits(&d))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let k = (self.log[a.0 as usize] + self.log[b.0 as usize]) % (self.q - 1);
        FieldElement(self.exp[k as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            return None;
        }
        let k = (self.q - 1 - self.log[a.0 as usize]) % (self.q - 1);
        Some(FieldElement(self.exp[k as usize]))
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return self.zero();
        }
        let e = (self.log[a.0 as usize] as u64 * k) % (self.q as u64 - 1);
        FieldElement(self.exp[e as usize])
    }

    /// The primitive element the log tables are built on.
    pub fn primitive(&self) -> FieldElement {
        FieldElement(self.exp[if self.q == 2 { 0 } else { 1 }])
    }

    /// Multiplication by polynomial arithmetic modulo the modulus; used to
    /// bootstrap the log tables.
    pub fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (p, m) = (self.p as u64, self.m as usize);
        let (x, y) = (self.digits(a.0), self.digits(b.0));
        let mut prod = vec![0u64; 2 * m];
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi as u64 * yj as u64) % p;
            }
        }
        // reduce degrees 2m-2 .. m using the monic modulus
        for deg in (m..2 * m).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for k in 0..m {
                let sub = c * self.modulus[k] as u64 % p;
                prod[deg - m + k] = (prod[deg - m + k] + p - sub) % p;
            }
        }
        let d: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        FieldElement(self.undigits(&d))
    }

    fn build_log_tables(&mut self) {
        let q = self.q;
        let group_order = (q - 1) as u64;
        let prime_factors: Vec<u64> = factorize(group_order).into_iter().map(|(r, _)| r).collect();
        let generator = (1..q)
            .map(FieldElement)
            .find(|&g| {
                prime_factors
                    .iter()
                    .all(|&r| self.pow_poly(g, group_order / r).0 != 1)
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = FieldElement(1);
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = x.0;
            log[x.0 as usize] = k as u32;
            x = self.mul_poly(x, generator);
        }
        self.exp = exp;
        self.log = log;
    }

    fn pow_poly(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement(1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            k >>= 1;
        }
        acc
    }
}

/// Least monic irreducible of degree `m` over Z_p, ordering candidates by their
/// lower coefficients read from the highest degree down.
fn least_irreducible(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(m);
    (0..count)
        .map(|code| {
            let mut coeffs = Vec::with_capacity(m as usize + 1);
            let mut c = code;
            for _ in 0..m {
                coeffs.push((c % p as u64) as u32);
                c /= p as u64;
            }
            coeffs.push(1);
            coeffs
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push((c % p as u64) as u32);
                c /= p as u64;
            }
            g.push(1);
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    let p = p as u64;
    for top in (dg..r.len()).rev() {
        let c = r[top] % p;
        if c == 0 {
            continue;
        }
        for (k, &gk) in g.iter().enumerate() {
            let idx = top - dg + k;
            r[idx] = (r[idx] + p * p - c * gk as u64 % p) % p;
        }
    }
    r[..dg].iter().all(|&c| c % p == 0)
}
