//! Cyclic codes of length n over GF(q), gcd(n, q) = 1, described by their
//! defining sets relative to the canonical primitive n-th root of unity.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::Field;
use crate::matrix::{dot, Matrix};
use crate::polyring::{cyclotomic_cosets, CyclotomicCoset, Poly, SplittingField};

/// Everything shared by the cyclic codes of one (n, q): cosets, minimal
/// polynomials and the splitting field that fixes alpha.
pub struct CodeSpace {
    n: usize,
    field: Arc<Field>,
    cosets: Vec<CyclotomicCoset>,
    coset_of: Vec<usize>,
    minpolys: Vec<Poly>,
    splitting: SplittingField,
}

impl fmt::Debug for CodeSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CodeSpace(n={}, q={})", self.n, self.field.order())
    }
}

impl CodeSpace {
    pub fn new(n: usize, q: u32) -> Result<Arc<CodeSpace>> {
        // coprimality first so (4, 2) reports NotCoprime, not a field error
        let cosets = cyclotomic_cosets(n, q)?;
        let field = Field::with_order(q as u64)?;
        Self::build(n, field, cosets)
    }

    pub fn with_field(n: usize, field: &Arc<Field>) -> Result<Arc<CodeSpace>> {
        let cosets = cyclotomic_cosets(n, field.order())?;
        Self::build(n, Arc::clone(field), cosets)
    }

    fn build(n: usize, field: Arc<Field>, cosets: Vec<CyclotomicCoset>) -> Result<Arc<CodeSpace>> {
        let splitting = SplittingField::new(n, &field)?;
        let mut coset_of = vec![0; n];
        for (i, c) in cosets.iter().enumerate() {
            for &m in &c.members {
                coset_of[m] = i;
            }
        }
        let minpolys = cosets
            .iter()
            .map(|c| splitting.minimal_polynomial(&c.members))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(CodeSpace {
            n,
            field,
            cosets,
            coset_of,
            minpolys,
            splitting,
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn cosets(&self) -> &[CyclotomicCoset] {
        &self.cosets
    }

    pub fn minimal_polynomials(&self) -> &[Poly] {
        &self.minpolys
    }

    /// Index of the coset containing residue `r`.
    pub fn coset_index(&self, r: usize) -> usize {
        self.coset_of[r]
    }

    fn same_as(&self, other: &CodeSpace) -> bool {
        self.n == other.n && *self.field == *other.field
    }

    /// Validates a residue list and returns it sorted.
    pub fn check_defset(&self, t: &[usize]) -> Result<Vec<usize>> {
        let mut seen = vec![false; self.n];
        for &r in t {
            if r >= self.n {
                return Err(Error::ResidueOutOfRange {
                    residue: r,
                    n: self.n,
                });
            }
            if seen[r] {
                return Err(Error::DuplicateResidues(r));
            }
            seen[r] = true;
        }
        let q = self.q() as u64;
        for &r in t {
            let next = (r as u64 * q % self.n as u64) as usize;
            if !seen[next] {
                return Err(Error::NotCosetClosed {
                    n: self.n,
                    q: self.q(),
                    missing: next,
                });
            }
        }
        Ok((0..self.n).filter(|&r| seen[r]).collect())
    }

    /// `{-t mod n}`, sorted.
    pub fn negate(&self, t: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = t.iter().map(|&r| (self.n - r) % self.n).collect();
        out.sort_unstable();
        out
    }

    pub fn code_from_defset(self: &Arc<Self>, t: &[usize]) -> Result<CyclicCode> {
        let defset = self.check_defset(t)?;
        Ok(self.closed_code(defset))
    }

    /// Code for a sorted, coset-closed defining set.
    pub(crate) fn closed_code(self: &Arc<Self>, defset: Vec<usize>) -> CyclicCode {
        let mut g = Poly::one(&self.field);
        for &r in &defset {
            let c = self.coset_of[r];
            if self.cosets[c].rep == r {
                g = g.mul_unchecked(&self.minpolys[c]);
            }
        }
        CyclicCode {
            space: Arc::clone(self),
            defset,
            generator: g,
        }
    }

    /// Recovers the defining set of a monic divisor of x^n - 1 by
    /// evaluating it at the powers of alpha.
    pub fn code_from_genpoly(self: &Arc<Self>, g: &Poly) -> Result<CyclicCode> {
        if **g.field() != *self.field {
            return Err(Error::FieldMismatch);
        }
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        if !g.divides(&Poly::xn_minus_one(&self.field, self.n))? {
            return Err(Error::NotDivisor(self.n));
        }
        let defset = self.splitting.zeros_of(g);
        let code = self.closed_code(defset);
        if code.generator != *g {
            return Err(Error::DimensionIdentity(format!(
                "generator {g} re-derived as {}",
                code.generator
            )));
        }
        Ok(code)
    }

    pub fn full_code(self: &Arc<Self>) -> CyclicCode {
        self.closed_code(Vec::new())
    }

    pub fn zero_code(self: &Arc<Self>) -> CyclicCode {
        self.closed_code((0..self.n).collect())
    }

    /// Every cyclic code of this length, one per subset of cosets, in
    /// binary-counter order over the coset list. `None` past `limit` cosets.
    pub fn all_codes(self: &Arc<Self>, max_cosets: usize) -> Option<Vec<CyclicCode>> {
        let c = self.cosets.len();
        if c > max_cosets {
            return None;
        }
        Some(
            (0u64..1 << c)
                .map(|mask| self.code_from_coset_mask(mask))
                .collect(),
        )
    }

    pub(crate) fn code_from_coset_mask(self: &Arc<Self>, mask: u64) -> CyclicCode {
        let mut t: Vec<usize> = self
            .cosets
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, c)| c.members.iter().copied())
            .collect();
        t.sort_unstable();
        self.closed_code(t)
    }
}

/// A cyclic code: its defining set T and generator polynomial g with
/// deg g = |T| and dimension n - |T|.
#[derive(Clone)]
pub struct CyclicCode {
    space: Arc<CodeSpace>,
    defset: Vec<usize>,
    generator: Poly,
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.space.same_as(&other.space) && self.defset == other.defset
    }
}

impl Eq for CyclicCode {}

impl fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}]_{} T={:?}",
            self.n(),
            self.k(),
            self.q(),
            self.defset
        )
    }
}

impl CyclicCode {
    pub fn space(&self) -> &Arc<CodeSpace> {
        &self.space
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.space.field
    }

    pub fn n(&self) -> usize {
        self.space.n
    }

    pub fn q(&self) -> u32 {
        self.space.q()
    }

    pub fn k(&self) -> usize {
        self.space.n - self.defset.len()
    }

    /// Sorted defining set.
    pub fn defset(&self) -> &[usize] {
        &self.defset
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn is_zero_code(&self) -> bool {
        self.k() == 0
    }

    fn check_compatible(&self, other: &CyclicCode) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch);
        }
        if *self.space.field != *other.space.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Euclidean dual, defining set `Z_n \ (-T)`.
    pub fn dual(&self) -> CyclicCode {
        let n = self.n();
        let mut neg = vec![false; n];
        for &r in &self.defset {
            neg[(n - r) % n] = true;
        }
        let t = (0..n).filter(|&r| !neg[r]).collect();
        self.space.closed_code(t)
    }

    /// `self ∩ other`, defining set `T_A ∪ T_B`.
    pub fn intersect(&self, other: &CyclicCode) -> Result<CyclicCode> {
        self.check_compatible(other)?;
        let mut t: Vec<usize> = self.defset.iter().chain(&other.defset).copied().collect();
        t.sort_unstable();
        t.dedup();
        Ok(self.space.closed_code(t))
    }

    /// `self + other`, defining set `T_A ∩ T_B`.
    pub fn sum(&self, other: &CyclicCode) -> Result<CyclicCode> {
        self.check_compatible(other)?;
        let t = self
            .defset
            .iter()
            .filter(|r| other.defset.binary_search(r).is_ok())
            .copied()
            .collect();
        Ok(self.space.closed_code(t))
    }

    /// `self ⊆ other`, i.e. `T_other ⊆ T_self`.
    pub fn is_subcode_of(&self, other: &CyclicCode) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other
            .defset
            .iter()
            .all(|r| self.defset.binary_search(r).is_ok()))
    }

    /// k x n matrix whose rows are the cyclic shifts x^i g(x), i < k.
    pub fn generator_matrix(&self) -> Matrix {
        let n = self.n();
        let g = self.generator.coeffs();
        let rows = (0..self.k())
            .map(|i| {
                let mut row = vec![0u32; n];
                row[i..i + g.len()].copy_from_slice(g);
                row
            })
            .collect();
        Matrix::from_rows(self.field(), n, rows)
    }

    /// Generator matrix of the dual code, (n - k) x n.
    pub fn parity_check_matrix(&self) -> Matrix {
        self.dual().generator_matrix()
    }

    /// Membership by syndrome.
    pub fn contains(&self, word: &[u32]) -> bool {
        let f = self.field();
        self.parity_check_matrix()
            .iter_rows()
            .all(|h| dot(f, h, word) == 0)
    }

    /// Every codeword, by direct message-times-generator products in
    /// odometer order. Only sensible for small q^k.
    pub fn codewords(&self) -> Vec<Vec<u32>> {
        let g = self.generator_matrix();
        let f = self.field();
        let q = self.q();
        let k = self.k();
        let n = self.n();
        let mut msg = vec![0u32; k];
        let mut out = Vec::new();
        loop {
            let mut word = vec![0u32; n];
            for (i, &m) in msg.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                for (w, &x) in word.iter_mut().zip(g.row(i)) {
                    *w = f.add(*w, f.mul(m, x));
                }
            }
            out.push(word);
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                msg[i] += 1;
                if msg[i] < q {
                    break;
                }
                msg[i] = 0;
                i += 1;
            }
        }
    }
}

pub fn code_from_defset(n: usize, q: u32, t: &[usize]) -> Result<CyclicCode> {
    CodeSpace::new(n, q)?.code_from_defset(t)
}

pub fn code_from_genpoly(n: usize, q: u32, g: &Poly) -> Result<CyclicCode> {
    if g.field().order() != q {
        return Err(Error::FieldMismatch);
    }
    CodeSpace::with_field(n, g.field())?.code_from_genpoly(g)
}

pub fn dual(c: &CyclicCode) -> CyclicCode {
    c.dual()
}

/// Selector for [`lattice_ops`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Intersect,
    Sum,
}

pub fn lattice_ops(a: &CyclicCode, b: &CyclicCode, op: LatticeOp) -> Result<CyclicCode> {
    match op {
        LatticeOp::Intersect => a.intersect(b),
        LatticeOp::Sum => a.sum(b),
    }
}

/// `a ⊆ b`.
pub fn is_subcode(a: &CyclicCode, b: &CyclicCode) -> Result<bool> {
    a.is_subcode_of(b)
}

/// BCH code with designed distance `delta`: zeros at alpha^b, ..., alpha^(b+delta-2)
/// and their conjugates.
pub fn bch_construct(n: usize, q: u32, delta: usize, b: usize) -> Result<CyclicCode> {
    let space = CodeSpace::new(n, q)?;
    if !(2..=n).contains(&delta) {
        return Err(Error::DeltaOutOfRange { delta, n });
    }
    let mut in_t = vec![false; n];
    for i in 0..delta - 1 {
        let c = space.coset_index((b + i) % n);
        for &m in &space.cosets[c].members {
            in_t[m] = true;
        }
    }
    let t = (0..n).filter(|&r| in_t[r]).collect();
    Ok(space.closed_code(t))
}

/// Reed-Solomon code of length q - 1 and dimension k, zeros
/// alpha^b, ..., alpha^(b+n-k-1).
pub fn rs_construct(q: u32, k: usize, b: usize) -> Result<CyclicCode> {
    let n = q.saturating_sub(1) as usize;
    if n == 0 {
        return Err(Error::NotPrime(q as u64));
    }
    let space = CodeSpace::new(n, q)?;
    if k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let mut t: Vec<usize> = (0..n - k).map(|i| (b + i) % n).collect();
    t.sort_unstable();
    space.code_from_defset(&t)
}
