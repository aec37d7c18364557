//! Asymmetric CSS codes and asymmetric subsystem codes built from pairs of
//! cyclic codes.
//!
//! For nested codes C2^⊥ ⊆ C1 the quantum code has k = k1 + k2 - n logical
//! qudits and the two relative weights
//!
//! ```text
//! w1 = wt(C1 \ C2^⊥),   w2 = wt(C2 \ C1^⊥)
//! ```
//!
//! give `dx = min(w1, w2)` and `dz = max(w1, w2)`.
//!
//! Two constructions describe the partner code indirectly, through a
//! generator-polynomial factor f(x) or a set T of cyclotomic cosets. In
//! both cases the derived code is placed so that the stated dimension
//! formula `2k1 - b - n` is reproduced: `<f g1>` serves as C2, and the code
//! with defining set `T(C1^⊥) \ (T ∪ -T)` serves as C2^⊥. Every
//! construction re-checks that formula against `k1 + k2 - n`.

use serde::{Deserialize, Serialize};

use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::polyring::Poly;
use crate::weights::{min_weight, relative_min_weight, WeightResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Css,
    Genpoly,
    Defset,
    Euclidean,
}

impl Construction {
    pub fn as_str(self) -> &'static str {
        match self {
            Construction::Css => "css",
            Construction::Genpoly => "genpoly",
            Construction::Defset => "defset",
            Construction::Euclidean => "euclidean",
        }
    }
}

/// An asymmetric quantum code [[n, k, dz/dx]]_q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AqecRecord {
    pub n: usize,
    pub q: u32,
    pub k: usize,
    pub dx: WeightResult,
    pub dz: WeightResult,
    /// wt(C1 \ C2^⊥)
    pub c1_weight: WeightResult,
    /// wt(C2 \ C1^⊥)
    pub c2_weight: WeightResult,
    pub construction: Construction,
    pub c1_defset: Vec<usize>,
    pub c2_defset: Vec<usize>,
    pub pure_x: Option<bool>,
    pub pure_z: Option<bool>,
}

/// An asymmetric subsystem code [[n, k, r, dz/dx]]_q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemRecord {
    pub n: usize,
    pub q: u32,
    pub k: usize,
    pub r: usize,
    pub dx: WeightResult,
    pub dz: WeightResult,
    pub construction: Construction,
    pub c1_defset: Vec<usize>,
    pub c2_defset: Vec<usize>,
    pub pure_x: Option<bool>,
    pub pure_z: Option<bool>,
}

/// CSS stabilizer generators: `hx` spans C2^⊥, `hz` spans C1^⊥.
#[derive(Debug, Clone)]
pub struct StabilizerPair {
    pub hx: Matrix,
    pub hz: Matrix,
}

impl StabilizerPair {
    /// `hx * hz^T == 0`.
    pub fn commutes(&self) -> bool {
        self.hx
            .mul_transpose(&self.hz)
            .map(|m| m.is_zero())
            .unwrap_or(false)
    }
}

/// Access to the two distances of a record.
pub trait Distances {
    fn dx(&self) -> &WeightResult;
    fn dz(&self) -> &WeightResult;
}

impl Distances for AqecRecord {
    fn dx(&self) -> &WeightResult {
        &self.dx
    }
    fn dz(&self) -> &WeightResult {
        &self.dz
    }
}

impl Distances for SubsystemRecord {
    fn dx(&self) -> &WeightResult {
        &self.dx
    }
    fn dz(&self) -> &WeightResult {
        &self.dz
    }
}

/// Correctable bit-flip and phase-flip weights `(⌊(dx-1)/2⌋, ⌊(dz-1)/2⌋)`.
pub fn correction_capability(rec: &impl Distances) -> Result<(usize, usize)> {
    if !rec.dx().exact || !rec.dz().exact {
        return Err(Error::InexactDistance);
    }
    Ok(((rec.dx().value - 1) / 2, (rec.dz().value - 1) / 2))
}

fn check_pair(c1: &CyclicCode, c2: &CyclicCode) -> Result<()> {
    if c1.n() != c2.n() {
        return Err(Error::LengthMismatch);
    }
    if c1.field() != c2.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Orders the two side weights into (dx, dz); ties put C1's side on dx.
fn split_distances(w1: &WeightResult, w2: &WeightResult) -> (WeightResult, WeightResult, bool) {
    if w1.value <= w2.value {
        (w1.clone(), w2.clone(), true)
    } else {
        (w2.clone(), w1.clone(), false)
    }
}

fn purity_flags(
    w1: &WeightResult,
    w2: &WeightResult,
    d1: &WeightResult,
    d2: &WeightResult,
) -> (bool, bool) {
    let side1 = w1.value == d1.value;
    let side2 = w2.value == d2.value;
    if w1.value <= w2.value {
        (side1, side2)
    } else {
        (side2, side1)
    }
}

/// CSS construction from C2^⊥ ⊆ C1.
pub fn css_aqec(c1: &CyclicCode, c2: &CyclicCode, budget: u64) -> Result<AqecRecord> {
    check_pair(c1, c2)?;
    let n = c1.n();
    let c2_dual = c2.dual();
    if !c2_dual.is_subcode_of(c1)? {
        return Err(Error::NotNested);
    }
    let k = c1.k() as i64 + c2.k() as i64 - n as i64;
    let k_alt = c1.k() as i64 - c2_dual.k() as i64;
    if k != k_alt {
        return Err(Error::DimensionIdentity(format!(
            "k1 + k2 - n = {k} but dim C1 - dim C2^perp = {k_alt}"
        )));
    }
    if k < 1 {
        return Err(Error::NonpositiveDimension(k));
    }
    let c1_dual = c1.dual();
    let (w1, w2) = rayon::join(
        || relative_min_weight(c1, &c2_dual, budget),
        || relative_min_weight(c2, &c1_dual, budget),
    );
    let (w1, w2) = (w1?, w2?);
    let (dx, dz, _) = split_distances(&w1, &w2);

    let (pure_x, pure_z) = if w1.exact && w2.exact {
        let (d1, d2) = rayon::join(|| min_weight(c1, budget), || min_weight(c2, budget));
        let (d1, d2) = (d1?, d2?);
        if d1.exact && d2.exact {
            let (x, z) = purity_flags(&w1, &w2, &d1, &d2);
            (Some(x), Some(z))
        } else {
            (None, None)
        }
    } else {
        (None, None)
    };

    Ok(AqecRecord {
        n,
        q: c1.q(),
        k: k as usize,
        dx,
        dz,
        c1_weight: w1,
        c2_weight: w2,
        construction: Construction::Css,
        c1_defset: c1.defset().to_vec(),
        c2_defset: c2.defset().to_vec(),
        pure_x,
        pure_z,
    })
}

/// Purity diagnostic: on each side, does the relative weight equal the
/// ambient minimum weight of that side's code?
pub fn purity_check(
    c1: &CyclicCode,
    c2: &CyclicCode,
    rec: &AqecRecord,
    budget: u64,
) -> Result<(bool, bool)> {
    if !rec.c1_weight.exact || !rec.c2_weight.exact {
        return Err(Error::InexactDistance);
    }
    let d1 = min_weight(c1, budget)?;
    let d2 = min_weight(c2, budget)?;
    if !d1.exact || !d2.exact {
        return Err(Error::InexactDistance);
    }
    Ok(purity_flags(&rec.c1_weight, &rec.c2_weight, &d1, &d2))
}

/// Subsystem variant: `r` of the `k1 + k2 - n` logical qudits become gauge.
pub fn css_subsystem(
    c1: &CyclicCode,
    c2: &CyclicCode,
    r: usize,
    budget: u64,
) -> Result<SubsystemRecord> {
    check_pair(c1, c2)?;
    // range check before the enumeration work
    let total = c1.k() as i64 + c2.k() as i64 - c1.n() as i64;
    if total >= 1 && r as i64 > total {
        return Err(Error::GaugeOutOfRange {
            r,
            max: total as usize,
        });
    }
    let rec = css_aqec(c1, c2, budget)?;
    Ok(SubsystemRecord {
        n: rec.n,
        q: rec.q,
        k: rec.k - r,
        r,
        dx: rec.dx,
        dz: rec.dz,
        construction: Construction::Css,
        c1_defset: rec.c1_defset,
        c2_defset: rec.c2_defset,
        pure_x: rec.pure_x,
        pure_z: rec.pure_z,
    })
}

/// C2 = <f(x) g1(x)>, giving [[n, 2k1 - deg f - n, dz/dx]].
pub fn genpoly_aqec(c1: &CyclicCode, f: &Poly, budget: u64) -> Result<AqecRecord> {
    if f.field() != c1.field() {
        return Err(Error::FieldMismatch);
    }
    let b = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::ConstantFactor),
    };
    let n = c1.n();
    let product = f.monic().mul(c1.generator())?;
    if !product.divides(&Poly::xn_minus_one(c1.field(), n))? {
        return Err(Error::NotDivisor(n));
    }
    let stated = 2 * c1.k() as i64 - b as i64 - n as i64;
    if stated < 1 {
        return Err(Error::NonpositiveDimension(stated));
    }
    let c2 = c1.space().code_from_genpoly(&product)?;
    let mut rec = css_aqec(c1, &c2, budget)?;
    if rec.k as i64 != stated {
        return Err(Error::DimensionIdentity(format!(
            "2k1 - b - n = {stated} but k1 + k2 - n = {}",
            rec.k
        )));
    }
    rec.construction = Construction::Genpoly;
    Ok(rec)
}

/// C2^⊥ has defining set `T(C1^⊥) \ (T ∪ -T)`, giving [[n, 2k1 - b - n, dz/dx]]
/// with b = |T ∪ -T|.
pub fn defset_aqec(c1: &CyclicCode, t: &[usize], budget: u64) -> Result<AqecRecord> {
    let space = c1.space();
    let t = space.check_defset(t)?;
    let n = c1.n();
    let mut u = t.clone();
    u.extend(space.negate(&t));
    u.sort_unstable();
    u.dedup();

    let c1_dual = c1.dual();
    let admissible: Vec<usize> = c1_dual
        .defset()
        .iter()
        .filter(|r| c1.defset().binary_search(r).is_err())
        .copied()
        .collect();
    if !u.iter().all(|r| admissible.binary_search(r).is_ok()) {
        return Err(Error::TNotInAdmissibleSet);
    }
    let b = u.len();
    let bound = 2 * c1.k() as i64 - n as i64;
    if b as i64 >= bound {
        return Err(Error::RangeViolation { b, bound });
    }

    let d_set: Vec<usize> = c1_dual
        .defset()
        .iter()
        .filter(|r| u.binary_search(r).is_err())
        .copied()
        .collect();
    let c2_dual = space.closed_code(d_set);
    let c2 = c2_dual.dual();
    let mut rec = css_aqec(c1, &c2, budget)?;
    let stated = bound - b as i64;
    if rec.k as i64 != stated {
        return Err(Error::DimensionIdentity(format!(
            "2k - b - n = {stated} but k1 + k2 - n = {}",
            rec.k
        )));
    }
    rec.construction = Construction::Defset;
    Ok(rec)
}

/// The hull C1 ∩ C1^⊥.
pub fn hull(c1: &CyclicCode) -> CyclicCode {
    c1.intersect(&c1.dual())
        .expect("a code and its dual share length and field")
}

/// Subsystem codes from C1 and its hull C2 = C1 ∩ C1^⊥ when k1 + k2 < n:
/// `[[n, n-(k1+k2), k1-k2]]` and `[[n, k1-k2, n-(k1+k2)]]`.
pub fn euclidean_assc(c1: &CyclicCode, budget: u64) -> Result<(SubsystemRecord, SubsystemRecord)> {
    if c1.is_zero_code() {
        return Err(Error::ZeroCode);
    }
    let n = c1.n();
    let c1_dual = c1.dual();
    let c2 = hull(c1);
    let (k1, k2) = (c1.k(), c2.k());
    if k1 + k2 >= n {
        return Err(Error::HullTooLarge { sum: k1 + k2, n });
    }
    let c2_dual = c2.dual();
    let (wa, wb) = rayon::join(
        || relative_min_weight(&c2_dual, c1, budget),
        || relative_min_weight(&c1_dual, &c2, budget),
    );
    let (wa, wb) = (wa?, wb?);
    let (dx, dz, _) = split_distances(&wa, &wb);
    let make = |k: usize, r: usize| SubsystemRecord {
        n,
        q: c1.q(),
        k,
        r,
        dx: dx.clone(),
        dz: dz.clone(),
        construction: Construction::Euclidean,
        c1_defset: c1.defset().to_vec(),
        c2_defset: c2.defset().to_vec(),
        pure_x: None,
        pure_z: None,
    };
    Ok((make(n - (k1 + k2), k1 - k2), make(k1 - k2, n - (k1 + k2))))
}

/// HX spans C2^⊥, HZ spans C1^⊥; fails unless they commute.
pub fn stabilizer_matrices(c1: &CyclicCode, c2: &CyclicCode) -> Result<StabilizerPair> {
    check_pair(c1, c2)?;
    if !c2.dual().is_subcode_of(c1)? {
        return Err(Error::NotNested);
    }
    let pair = StabilizerPair {
        hx: c2.dual().generator_matrix(),
        hz: c1.dual().generator_matrix(),
    };
    if !pair.commutes() {
        return Err(Error::NotNested);
    }
    Ok(pair)
}

/// Stabilizer of a Euclidean subsystem code: both halves generated by the hull.
pub fn hull_stabilizers(c1: &CyclicCode) -> Result<StabilizerPair> {
    let h_dual = hull(c1).dual();
    stabilizer_matrices(&h_dual, &h_dual)
}
