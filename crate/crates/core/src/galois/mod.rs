//! Exact arithmetic in GF(p) and GF(p^m).
//!
//! Elements are stored as their polynomial-basis index: the coefficient
//! vector `(c_0, ..., c_{m-1})` is encoded as `c_0 + c_1 p + ... + c_{m-1} p^(m-1)`.
//! Multiplication goes through log/antilog tables built around the
//! canonical primitive element, so a [`Field`] is meant to be built once and
//! shared behind an [`Arc`].

pub(crate) mod ext;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use ext::ExtField;

/// Upper bound on the order of a tabulated field.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Fields up to this size get a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power into `(p, m)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

/// A finite field GF(p^m) with precomputed log/antilog tables.
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Field {}

/// Builds GF(p^m) over the smallest monic irreducible modulus of degree m.
pub fn make_field(p: u32, m: u32) -> Result<Arc<Field>> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if !(1..=16).contains(&m) {
        return Err(Error::DegreeOutOfRange(m));
    }
    let q = (p as u64)
        .checked_pow(m)
        .filter(|&q| q <= MAX_FIELD_ORDER)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{m} exceeds 2^20")))?;
    Ok(Arc::new(Field::tabulate(p, m, q as u32)?))
}

impl Field {
    /// GF(q) for a prime power q.
    pub fn with_order(q: u64) -> Result<Arc<Field>> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrime(q))?;
        make_field(p, m)
    }

    fn tabulate(p: u32, m: u32, q: u32) -> Result<Field> {
        let ext = ExtField::new(p, m as usize)?;
        let group = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * group.max(1)];
        let mut log = vec![0u32; q as usize];
        let beta = ext.primitive().clone();
        let mut cur = ext.one();
        for i in 0..group {
            let idx = ext::index_of(&cur, p) as u32;
            exp[i] = idx;
            exp[i + group] = idx;
            log[idx as usize] = i as u32;
            cur = ext.mul(&cur, &beta);
        }
        let neg = (0..q)
            .map(|a| ext::index_of(&ext.sub(&ext.zero(), &ext.element_at(a as u128)), p) as u32)
            .collect();
        let add = (p > 2 && m > 1 && q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digitwise_add(a, b, p);
                }
            }
            t
        });
        Ok(Field {
            p,
            m,
            q,
            modulus: ext.modulus().to_vec(),
            exp,
            log,
            neg,
            add,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the defining polynomial, low degree first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The canonical primitive element: the smallest element of
    /// multiplicative order q - 1.
    pub fn primitive(&self) -> u32 {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if self.m == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else if let Some(t) = &self.add {
            t[(a * self.q + b) as usize]
        } else {
            digitwise_add(a, b, self.p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let group = self.q - 1;
        Some(self.exp[((group - self.log[a as usize]) % group) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let group = (self.q - 1) as u64;
        let l = (self.log[a as usize] as u64 * (e % group)) % group;
        self.exp[l as usize]
    }

    /// Element with the given index, if in range.
    pub fn element(self: &Arc<Self>, value: u32) -> Option<FieldElement> {
        (value < self.q).then(|| FieldElement {
            field: Arc::clone(self),
            value,
        })
    }
}

fn digitwise_add(mut a: u32, mut b: u32, p: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// An element of a specific field. Arithmetic between elements of different
/// fields is an error.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<Field>,
    value: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.value, self.field.q)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.field == *other.field
    }
}

impl Eq for FieldElement {}

/// Binary operation selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    /// Polynomial-basis index of the element.
    pub fn value(&self) -> u32 {
        self.value
    }

    /// Coefficients over GF(p), low degree first, exactly m of them.
    pub fn coeffs(&self) -> Vec<u32> {
        ext::digits_of(self.value as u128, self.field.p, self.field.m as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: u32) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        field_arith(self, other, ArithOp::Add)
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        field_arith(self, other, ArithOp::Sub)
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        field_arith(self, other, ArithOp::Mul)
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        field_arith(self, other, ArithOp::Div)
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        self.field
            .inv(self.value)
            .map(|v| self.with(v))
            .ok_or(Error::DivisionByZero)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        if e < 0 {
            let inv = self.inverse()?;
            return Ok(inv.with(self.field.pow(inv.value, e.unsigned_abs())));
        }
        Ok(self.with(self.field.pow(self.value, e as u64)))
    }
}

/// Applies `op` to two elements of the same field.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    a.same_field(b)?;
    let f = &a.field;
    let v = match op {
        ArithOp::Add => f.add(a.value, b.value),
        ArithOp::Sub => f.sub(a.value, b.value),
        ArithOp::Mul => f.mul(a.value, b.value),
        ArithOp::Div => f.div(a.value, b.value).ok_or(Error::DivisionByZero)?,
    };
    Ok(a.with(v))
}

/// The canonical primitive n-th root of unity `beta^((q-1)/n)`.
pub fn nth_root_of_unity(field: &Arc<Field>, n: u64) -> Result<FieldElement> {
    let group = field.q as u64 - 1;
    if n == 0 || !group.is_multiple_of(n) {
        return Err(Error::OrderUnavailable {
            n,
            q: field.q as u64,
        });
    }
    let beta = field.primitive();
    Ok(FieldElement {
        field: Arc::clone(field),
        value: field.pow(beta, group / n),
    })
}
