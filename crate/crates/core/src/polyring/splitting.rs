use std::collections::HashMap;
use std::sync::Arc;

use super::{gcd_u64, multiplicative_order, Poly};
use crate::error::{Error, Result};
use crate::galois::ext::{digits_of, Digits, ExtField};
use crate::galois::Field;

/// GF(q^m) with m = ord_n(q), holding the canonical primitive n-th root of
/// unity and an embedding of the base field GF(q).
pub(crate) struct SplittingField {
    base: Arc<Field>,
    ext: ExtField,
    alpha_powers: Vec<Digits>,
    embed: Vec<Digits>,
    unembed: HashMap<Digits, u32>,
}

impl SplittingField {
    pub(crate) fn new(n: usize, base: &Arc<Field>) -> Result<Self> {
        let q = base.order() as u64;
        if n == 0 || gcd_u64(n as u64, q) != 1 {
            return Err(Error::NotCoprime { n: n as u64, q });
        }
        let ord = multiplicative_order(q, n as u64);
        let degree = base.degree() as usize * ord;
        let ext = ExtField::new(base.characteristic(), degree)?;
        let group = ext.order() - 1;
        let beta = ext.primitive().clone();

        let alpha = ext.pow(&beta, group / n as u128);
        let mut alpha_powers = Vec::with_capacity(n);
        let mut cur = ext.one();
        for _ in 0..n {
            alpha_powers.push(cur.clone());
            cur = ext.mul(&cur, &alpha);
        }

        // Image of the base field's generator y (a root of its modulus).
        let theta = if base.degree() == 1 {
            ext.one()
        } else {
            let omega = ext.pow(&beta, group / (q as u128 - 1));
            let modulus = base.modulus();
            let mut cand = ext.one();
            loop {
                let value = modulus.iter().rev().fold(ext.zero(), |acc, &c| {
                    ext.add(&ext.mul(&acc, &cand), &ext.scale(&ext.one(), c))
                });
                if ext.is_zero(&value) {
                    break cand;
                }
                cand = ext.mul(&cand, &omega);
            }
        };
        let m = base.degree() as usize;
        let mut theta_powers = vec![ext.one()];
        for _ in 1..m {
            let last = theta_powers.last().unwrap();
            theta_powers.push(ext.mul(last, &theta));
        }
        let embed: Vec<Digits> = (0..base.order())
            .map(|v| {
                let digits = digits_of(v as u128, base.characteristic(), m);
                digits
                    .iter()
                    .zip(&theta_powers)
                    .fold(ext.zero(), |acc, (&c, t)| ext.add(&acc, &ext.scale(t, c)))
            })
            .collect();
        let unembed = embed
            .iter()
            .enumerate()
            .map(|(v, d)| (d.clone(), v as u32))
            .collect();

        Ok(SplittingField {
            base: Arc::clone(base),
            ext,
            alpha_powers,
            embed,
            unembed,
        })
    }

    /// `prod (x - alpha^i)` over `exponents`, mapped back into the base field.
    pub(crate) fn minimal_polynomial(&self, exponents: &[usize]) -> Result<Poly> {
        let ext = &self.ext;
        let mut prod: Vec<Digits> = vec![ext.one()];
        for &i in exponents {
            let root = &self.alpha_powers[i % self.alpha_powers.len()];
            let mut next = vec![ext.zero(); prod.len() + 1];
            for (j, c) in prod.iter().enumerate() {
                next[j + 1] = ext.add(&next[j + 1], c);
                next[j] = ext.sub(&next[j], &ext.mul(c, root));
            }
            prod = next;
        }
        let coeffs = prod
            .iter()
            .map(|c| {
                self.unembed.get(c).copied().ok_or_else(|| {
                    Error::DimensionIdentity(
                        "minimal polynomial coefficient outside the base field".into(),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_raw(&self.base, coeffs))
    }

    /// Exponents i in [0, n) with g(alpha^i) = 0.
    pub(crate) fn zeros_of(&self, g: &Poly) -> Vec<usize> {
        let ext = &self.ext;
        let lifted: Vec<&Digits> = g
            .coeffs()
            .iter()
            .map(|&c| &self.embed[c as usize])
            .collect();
        self.alpha_powers
            .iter()
            .enumerate()
            .filter(|(_, x)| {
                let v = lifted
                    .iter()
                    .rev()
                    .fold(ext.zero(), |acc, c| ext.add(&ext.mul(&acc, x), c));
                ext.is_zero(&v)
            })
            .map(|(i, _)| i)
            .collect()
    }
}
