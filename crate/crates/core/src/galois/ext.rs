//! Table-free arithmetic in GF(p^d), elements stored as coefficient vectors
//! over GF(p) modulo a monic irreducible of degree d.
//!
//! This backs both the table-driven [`Field`](super::Field) construction and
//! the splitting fields used for minimal polynomials, which can be far larger
//! than anything worth tabulating (GF(2^36) shows up already for n = 37).

use num_prime::nt_funcs::factorize128;

use crate::error::{Error, Result};

/// Coefficient vector over GF(p), low degree first.
pub(crate) type Digits = Vec<u32>;

/// Largest field order handled without tables.
const MAX_ORDER_BITS: u32 = 126;

#[inline]
fn addm(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn mulm(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2)
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Product of two polynomials over GF(p), untrimmed.
fn mul_full(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u64; a.len() + b.len() - 1];
    let pp = p as u64;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += x as u64 * y as u64;
            if acc[i + j] >= 1 << 62 {
                acc[i + j] %= pp;
            }
        }
    }
    acc.into_iter().map(|c| (c % pp) as u32).collect()
}

/// Remainder of `a` modulo a monic `f`, returned with exactly `deg f` digits.
fn rem_monic(mut a: Vec<u32>, f: &[u32], p: u32) -> Vec<u32> {
    let d = f.len() - 1;
    while a.len() > d {
        let top = a.pop().unwrap();
        if top == 0 {
            continue;
        }
        let shift = a.len() - d;
        for (j, &c) in f[..d].iter().enumerate() {
            a[shift + j] = subm(a[shift + j], mulm(top, c, p), p);
        }
    }
    a.resize(d, 0);
    a
}

/// Monic gcd of two polynomials over GF(p).
pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem_general(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = inv_mod(lead, p);
        for c in a.iter_mut() {
            *c = mulm(*c, inv, p);
        }
    }
    a
}

fn rem_general(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while r.len() > db {
        let top = r.pop().unwrap();
        if top == 0 {
            continue;
        }
        let factor = mulm(top, inv, p);
        let shift = r.len() - db;
        for (j, &c) in b[..db].iter().enumerate() {
            r[shift + j] = subm(r[shift + j], mulm(factor, c, p), p);
        }
    }
    trim(&mut r);
    r
}

/// Ben-Or irreducibility test for a monic polynomial over GF(p).
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let mul = |a: &[u32], b: &[u32]| rem_monic(mul_full(a, b, p), f, p);
    let pow = |a: &[u32], mut e: u64| {
        let mut base = a.to_vec();
        let mut acc = rem_monic(vec![1], f, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = mul(&base, &base);
            }
        }
        acc
    };
    let x = rem_monic(vec![0, 1], f, p);
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = pow(&h, p as u64);
        let mut diff = h.clone();
        diff[1] = subm(diff[1], 1, p);
        trim(&mut diff);
        let g = gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Digits of `t` in base p, least significant first, padded to `len`.
pub(crate) fn digits_of(mut t: u128, p: u32, len: usize) -> Digits {
    let mut out = vec![0u32; len];
    for slot in out.iter_mut() {
        *slot = (t % p as u128) as u32;
        t /= p as u128;
    }
    out
}

pub(crate) fn index_of(d: &[u32], p: u32) -> u128 {
    d.iter()
        .rev()
        .fold(0u128, |acc, &c| acc * p as u128 + c as u128)
}

/// The smallest monic irreducible polynomial of degree `d` over GF(p).
///
/// Candidates are ordered by the integer value of their low-order
/// coefficients read as base-p digits, so x^3+x+1 precedes x^3+x^2+1.
/// Degree one always yields `x`.
pub(crate) fn smallest_irreducible(p: u32, d: usize) -> Vec<u32> {
    let mut t: u128 = 0;
    loop {
        let mut f = digits_of(t, p, d);
        f.push(1);
        if (d == 1 || f[0] != 0) && is_irreducible(&f, p) {
            return f;
        }
        t += 1;
    }
}

pub(crate) fn checked_order(p: u32, d: usize) -> Result<u128> {
    let mut q: u128 = 1;
    for _ in 0..d {
        q = q
            .checked_mul(p as u128)
            .filter(|v| *v < (1u128 << MAX_ORDER_BITS))
            .ok_or_else(|| Error::TooLarge(format!("GF({p}^{d}) exceeds 2^{MAX_ORDER_BITS}")))?;
    }
    Ok(q)
}

/// GF(p^d) without lookup tables.
#[derive(Debug, Clone)]
pub(crate) struct ExtField {
    p: u32,
    degree: usize,
    modulus: Vec<u32>,
    order: u128,
    primitive: Digits,
}

impl ExtField {
    pub(crate) fn new(p: u32, degree: usize) -> Result<Self> {
        let order = checked_order(p, degree)?;
        let modulus = smallest_irreducible(p, degree);
        let mut field = ExtField {
            p,
            degree,
            modulus,
            order,
            primitive: Vec::new(),
        };
        field.primitive = field.find_primitive();
        Ok(field)
    }

    pub(crate) fn order(&self) -> u128 {
        self.order
    }

    pub(crate) fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub(crate) fn primitive(&self) -> &Digits {
        &self.primitive
    }

    pub(crate) fn zero(&self) -> Digits {
        vec![0; self.degree]
    }

    pub(crate) fn one(&self) -> Digits {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    pub(crate) fn element_at(&self, t: u128) -> Digits {
        digits_of(t, self.p, self.degree)
    }

    pub(crate) fn add(&self, a: &[u32], b: &[u32]) -> Digits {
        a.iter().zip(b).map(|(&x, &y)| addm(x, y, self.p)).collect()
    }

    pub(crate) fn sub(&self, a: &[u32], b: &[u32]) -> Digits {
        a.iter().zip(b).map(|(&x, &y)| subm(x, y, self.p)).collect()
    }

    pub(crate) fn scale(&self, a: &[u32], c: u32) -> Digits {
        a.iter().map(|&x| mulm(x, c, self.p)).collect()
    }

    pub(crate) fn mul(&self, a: &[u32], b: &[u32]) -> Digits {
        rem_monic(mul_full(a, b, self.p), &self.modulus, self.p)
    }

    pub(crate) fn pow(&self, a: &[u32], mut e: u128) -> Digits {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub(crate) fn is_zero(&self, a: &[u32]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    /// Smallest element (by base-p index) of multiplicative order q - 1.
    fn find_primitive(&self) -> Digits {
        let group = self.order - 1;
        if group == 1 {
            return self.one();
        }
        let primes: Vec<u128> = factorize128(group).into_keys().collect();
        let one = self.one();
        (2..self.order)
            .map(|t| self.element_at(t))
            .find(|g| primes.iter().all(|&r| self.pow(g, group / r) != one))
            .expect("a finite field always has a primitive element")
    }
}
