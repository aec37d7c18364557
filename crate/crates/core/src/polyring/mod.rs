//! Polynomials over GF(q), cyclotomic cosets, and the factorization of
//! x^n - 1 into minimal polynomials.

mod splitting;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};

pub(crate) use splitting::SplittingField;

/// Dense polynomial over a field, low degree first, no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Arc<Field>,
    coeffs: Vec<u32>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && *self.field == *other.field
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.field.order(), self)
    }
}

/// Comma-separated coefficient indices, low degree first; `0` for the zero
/// polynomial.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl Poly {
    pub fn new(field: &Arc<Field>, mut coeffs: Vec<u32>) -> Result<Poly> {
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= field.order()) {
            return Err(Error::BadFlag(format!(
                "coefficient {bad} is not an element of GF({})",
                field.order()
            )));
        }
        trim(&mut coeffs);
        Ok(Poly {
            field: Arc::clone(field),
            coeffs,
        })
    }

    pub(crate) fn from_raw(field: &Arc<Field>, mut coeffs: Vec<u32>) -> Poly {
        trim(&mut coeffs);
        Poly {
            field: Arc::clone(field),
            coeffs,
        }
    }

    /// Parses the CLI text form, e.g. `"1,1,0,1"` for 1 + x + x^3.
    pub fn parse(field: &Arc<Field>, text: &str) -> Result<Poly> {
        let coeffs = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::BadFlag(format!("bad coefficient {s:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Poly::new(field, coeffs)
    }

    pub fn zero(field: &Arc<Field>) -> Poly {
        Poly::from_raw(field, Vec::new())
    }

    pub fn one(field: &Arc<Field>) -> Poly {
        Poly::from_raw(field, vec![1])
    }

    /// x^n - 1.
    pub fn xn_minus_one(field: &Arc<Field>, n: usize) -> Poly {
        let mut c = vec![0u32; n + 1];
        c[0] = field.neg(1);
        c[n] = 1;
        Poly::from_raw(field, c)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| {
                f.add(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    other.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Ok(Poly::from_raw(f, c))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let c = self.coeffs.iter().map(|&a| self.field.neg(a)).collect();
        Poly::from_raw(&self.field, c)
    }

    pub fn scale(&self, s: u32) -> Poly {
        let c = self.coeffs.iter().map(|&a| self.field.mul(a, s)).collect();
        Poly::from_raw(&self.field, c)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Poly::from_raw(f, c)
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let f = &self.field;
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f
            .inv(divisor.coeffs[d])
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - d];
        for top in (d..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, lead_inv);
            quot[top - d] = factor;
            for (j, &g) in divisor.coeffs.iter().enumerate() {
                let idx = top - d + j;
                rem[idx] = f.sub(rem[idx], f.mul(factor, g));
            }
        }
        rem.truncate(d);
        Ok((Poly::from_raw(f, quot), Poly::from_raw(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Monic scalar multiple; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(self.field.inv(l).unwrap()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        if !(Arc::ptr_eq(&self.field, x.field()) || *self.field == **x.field()) {
            return Err(Error::FieldMismatch);
        }
        let v = self.eval_raw(x.value());
        Ok(self.field.element(v).unwrap())
    }

    pub(crate) fn eval_raw(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// True if `self` divides `other` exactly.
    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }
}

/// Orbit of a residue under multiplication by q modulo n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicCoset {
    pub n: usize,
    pub q: u32,
    pub rep: usize,
    pub members: Vec<usize>,
}

impl CyclotomicCoset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, r: usize) -> bool {
        self.members.binary_search(&r).is_ok()
    }
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Partitions `{0, ..., n-1}` into q-cyclotomic cosets, sorted by representative.
pub fn cyclotomic_cosets(n: usize, q: u32) -> Result<Vec<CyclotomicCoset>> {
    if n == 0 || gcd_u64(n as u64, q as u64) != 1 {
        return Err(Error::NotCoprime {
            n: n as u64,
            q: q as u64,
        });
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for rep in 0..n {
        if seen[rep] {
            continue;
        }
        let mut members = Vec::new();
        let mut x = rep;
        while !seen[x] {
            seen[x] = true;
            members.push(x);
            x = (x as u64 * q as u64 % n as u64) as usize;
        }
        members.sort_unstable();
        out.push(CyclotomicCoset { n, q, rep, members });
    }
    Ok(out)
}

/// Multiplicative order of q modulo n (n >= 1, gcd(n, q) = 1).
pub(crate) fn multiplicative_order(q: u64, n: u64) -> usize {
    if n == 1 {
        return 1;
    }
    let mut x = q % n;
    let mut k = 1;
    while x != 1 {
        x = x * q % n;
        k += 1;
    }
    k
}

/// `prod_{i in coset} (x - alpha^i)` with alpha the canonical primitive n-th
/// root of unity of the splitting field.
pub fn minimal_polynomial(coset: &CyclotomicCoset, base: &Arc<Field>) -> Result<Poly> {
    if base.order() != coset.q {
        return Err(Error::FieldMismatch);
    }
    let split = SplittingField::new(coset.n, base)?;
    split.minimal_polynomial(&coset.members)
}

/// The cyclotomic cosets of (n, q) paired with their minimal polynomials;
/// their product is x^n - 1.
pub fn factor_xn_minus_1(n: usize, q: u32) -> Result<Vec<(CyclotomicCoset, Poly)>> {
    let cosets = cyclotomic_cosets(n, q)?;
    let base = Field::with_order(q as u64)?;
    let split = SplittingField::new(n, &base)?;
    cosets
        .into_iter()
        .map(|c| {
            let m = split.minimal_polynomial(&c.members)?;
            Ok((c, m))
        })
        .collect()
}
