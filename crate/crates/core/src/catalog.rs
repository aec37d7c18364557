//! Serialized records, exhaustive searches over cyclic defining sets, and
//! re-verification of stored records.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::aqec::{
    correction_capability, css_aqec, css_subsystem, defset_aqec, euclidean_assc, genpoly_aqec,
    AqecRecord, Construction, SubsystemRecord,
};
use crate::cyclic::{CodeSpace, CyclicCode};
use crate::error::{Error, Result};
use crate::galois::prime_power;

/// Largest number of cyclotomic cosets a search will enumerate subsets of.
pub const MAX_SEARCH_COSETS: usize = 20;

pub const TOOL: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordKind {
    Aqec,
    Subsystem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchParams {
    pub n: usize,
    pub q: u32,
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchMeta {
    pub tool: String,
    pub search: SearchParams,
}

/// One record in the stable JSON layout. Fields serialize in declaration
/// order; `meta` is present only on entries produced by a search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    #[serde(rename = "type")]
    pub kind: RecordKind,
    pub n: usize,
    pub q: u32,
    pub k: usize,
    #[serde(deserialize_with = "required")]
    pub r: Option<usize>,
    pub dx: usize,
    pub dz: usize,
    pub dx_exact: bool,
    pub dz_exact: bool,
    pub construction: Construction,
    pub c1_defset: Vec<usize>,
    pub c2_defset: Vec<usize>,
    #[serde(deserialize_with = "required")]
    pub pure_x: Option<bool>,
    #[serde(deserialize_with = "required")]
    pub pure_z: Option<bool>,
    #[serde(deserialize_with = "required")]
    pub tx: Option<usize>,
    #[serde(deserialize_with = "required")]
    pub tz: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<SearchMeta>,
}

/// Nullable but not optional: the key must be present.
fn required<'de, D, T>(d: D) -> std::result::Result<Option<T>, D::Error>
where
    D: serde::Deserializer<'de>,
    T: Deserialize<'de>,
{
    Option::deserialize(d)
}

/// Column names of the CSV layout, in schema order.
pub const COLUMNS: [&str; 16] = [
    "type",
    "n",
    "q",
    "k",
    "r",
    "dx",
    "dz",
    "dx_exact",
    "dz_exact",
    "construction",
    "c1_defset",
    "c2_defset",
    "pure_x",
    "pure_z",
    "tx",
    "tz",
];

pub(crate) fn join_list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(String::new, T::to_string)
}

impl CatalogEntry {
    pub fn from_aqec(rec: &AqecRecord) -> CatalogEntry {
        let t = correction_capability(rec).ok();
        CatalogEntry {
            kind: RecordKind::Aqec,
            n: rec.n,
            q: rec.q,
            k: rec.k,
            r: None,
            dx: rec.dx.value,
            dz: rec.dz.value,
            dx_exact: rec.dx.exact,
            dz_exact: rec.dz.exact,
            construction: rec.construction,
            c1_defset: rec.c1_defset.clone(),
            c2_defset: rec.c2_defset.clone(),
            pure_x: rec.pure_x,
            pure_z: rec.pure_z,
            tx: t.map(|t| t.0),
            tz: t.map(|t| t.1),
            meta: None,
        }
    }

    pub fn from_subsystem(rec: &SubsystemRecord) -> CatalogEntry {
        let t = correction_capability(rec).ok();
        CatalogEntry {
            kind: RecordKind::Subsystem,
            n: rec.n,
            q: rec.q,
            k: rec.k,
            r: Some(rec.r),
            dx: rec.dx.value,
            dz: rec.dz.value,
            dx_exact: rec.dx.exact,
            dz_exact: rec.dz.exact,
            construction: rec.construction,
            c1_defset: rec.c1_defset.clone(),
            c2_defset: rec.c2_defset.clone(),
            pure_x: rec.pure_x,
            pure_z: rec.pure_z,
            tx: t.map(|t| t.0),
            tz: t.map(|t| t.1),
            meta: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("entry serializes")
    }

    pub fn from_json(text: &str) -> Result<CatalogEntry> {
        serde_json::from_str(text).map_err(|e| Error::SchemaViolation(e.to_string()))
    }

    /// Cells in `COLUMNS` order; lists are comma-joined, nulls are empty.
    pub fn csv_row(&self) -> Vec<String> {
        let kind = match self.kind {
            RecordKind::Aqec => "aqec",
            RecordKind::Subsystem => "subsystem",
        };
        vec![
            kind.to_string(),
            self.n.to_string(),
            self.q.to_string(),
            self.k.to_string(),
            opt(&self.r),
            self.dx.to_string(),
            self.dz.to_string(),
            self.dx_exact.to_string(),
            self.dz_exact.to_string(),
            self.construction.as_str().to_string(),
            join_list(&self.c1_defset),
            join_list(&self.c2_defset),
            opt(&self.pure_x),
            opt(&self.pure_z),
            opt(&self.tx),
            opt(&self.tz),
        ]
    }

    /// `[[n,k,dz/dx]]_q` or `[[n,k,r,dz/dx]]_q`.
    pub fn label(&self) -> String {
        match self.r {
            Some(r) => format!(
                "[[{},{},{},{}/{}]]_{}",
                self.n, self.k, r, self.dz, self.dx, self.q
            ),
            None => format!(
                "[[{},{},{}/{}]]_{}",
                self.n, self.k, self.dz, self.dx, self.q
            ),
        }
    }

    fn dedup_key(&self) -> (usize, usize, Option<usize>, usize, usize, RecordKind) {
        (self.n, self.k, self.r, self.dx, self.dz, self.kind)
    }
}

/// Catalog order: k, dz, dx descending; then defining sets, type and r.
fn catalog_order(a: &CatalogEntry, b: &CatalogEntry) -> std::cmp::Ordering {
    b.k.cmp(&a.k)
        .then(b.dz.cmp(&a.dz))
        .then(b.dx.cmp(&a.dx))
        .then_with(|| a.c1_defset.cmp(&b.c1_defset))
        .then_with(|| a.c2_defset.cmp(&b.c2_defset))
        .then(a.kind.cmp(&b.kind))
        .then(a.r.cmp(&b.r))
}

enum Job {
    Defset(usize, Vec<usize>),
    Euclidean(usize),
}

/// Keeps successes, drops domain rejections, forwards internal failures.
fn keep<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(e) if e.is_internal() => Err(e),
        Err(_) => Ok(None),
    }
}

/// Runs the defining-set construction for every dual-containing C1 and every
/// admissible negation-closed coset union, and the Euclidean construction for
/// every nonzero C1. Only records with exact distances are kept.
pub fn search_catalog(n: usize, q: u32, budget: u64) -> Result<Vec<CatalogEntry>> {
    let space = CodeSpace::new(n, q)?;
    let c = space.cosets().len();
    if c > MAX_SEARCH_COSETS {
        return Err(Error::SearchSpaceTooLarge { cosets: c });
    }
    let codes = space
        .all_codes(MAX_SEARCH_COSETS)
        .expect("coset count checked");

    let mut jobs = Vec::new();
    for (i, c1) in codes.iter().enumerate() {
        if c1.is_zero_code() {
            continue;
        }
        jobs.push(Job::Euclidean(i));
        if !c1.dual().is_subcode_of(c1)? {
            continue;
        }
        // Admissible residues form a negation-closed union of cosets; group
        // them into negation orbits and take every union of orbits.
        let admissible: Vec<usize> = c1
            .dual()
            .defset()
            .iter()
            .filter(|r| c1.defset().binary_search(r).is_err())
            .copied()
            .collect();
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; space.cosets().len()];
        for &r in &admissible {
            let ci = space.coset_index(r);
            if seen[ci] {
                continue;
            }
            let cj = space.coset_index((n - r) % n);
            seen[ci] = true;
            seen[cj] = true;
            let mut orbit = space.cosets()[ci].members.clone();
            if cj != ci {
                orbit.extend(&space.cosets()[cj].members);
            }
            orbits.push(orbit);
        }
        for mask in 0u64..(1 << orbits.len()) {
            let mut u: Vec<usize> = orbits
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .flat_map(|(_, o)| o.iter().copied())
                .collect();
            u.sort_unstable();
            jobs.push(Job::Defset(i, u));
        }
    }

    let results: Vec<Vec<CatalogEntry>> = jobs
        .par_iter()
        .map(|job| -> Result<Vec<CatalogEntry>> {
            let out = match job {
                Job::Defset(i, u) => keep(defset_aqec(&codes[*i], u, budget))?
                    .map(|r| vec![CatalogEntry::from_aqec(&r)])
                    .unwrap_or_default(),
                Job::Euclidean(i) => keep(euclidean_assc(&codes[*i], budget))?
                    .map(|(a, b)| {
                        vec![
                            CatalogEntry::from_subsystem(&a),
                            CatalogEntry::from_subsystem(&b),
                        ]
                    })
                    .unwrap_or_default(),
            };
            Ok(out)
        })
        .collect::<Result<_>>()?;

    let meta = SearchMeta {
        tool: TOOL.to_string(),
        search: SearchParams { n, q, budget },
    };
    let mut entries: Vec<CatalogEntry> = results
        .into_iter()
        .flatten()
        .filter(|e| e.dx_exact && e.dz_exact)
        .map(|mut e| {
            e.meta = Some(meta.clone());
            e
        })
        .collect();
    entries.sort_by(catalog_order);
    let mut seen = std::collections::HashSet::new();
    entries.retain(|e| seen.insert(e.dedup_key()));
    Ok(entries)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldCheck {
    pub field: &'static str,
    pub recorded: Value,
    pub recomputed: Value,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub label: String,
    pub pass: bool,
    pub fields: Vec<FieldCheck>,
}

impl VerifyReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &FieldCheck> {
        self.fields.iter().filter(|f| !f.matches)
    }
}

/// Fields whose agreement decides the verdict.
const DECISIVE: [&str; 6] = ["n", "q", "k", "r", "dx", "dz"];

fn schema(msg: impl Into<String>) -> Error {
    Error::SchemaViolation(msg.into())
}

fn rebuild(space: &std::sync::Arc<CodeSpace>, t: &[usize], which: &str) -> Result<CyclicCode> {
    space
        .code_from_defset(t)
        .map_err(|e| schema(format!("{which}: {e}")))
}

/// Rebuilds both codes from the stored defining sets, reruns the recorded
/// construction with fresh enumeration and compares every field.
pub fn verify_record(entry: &CatalogEntry, budget: u64) -> Result<VerifyReport> {
    match (entry.kind, entry.construction, entry.r) {
        (
            RecordKind::Aqec,
            Construction::Css | Construction::Genpoly | Construction::Defset,
            None,
        ) => {}
        (RecordKind::Subsystem, Construction::Css | Construction::Euclidean, Some(_)) => {}
        (kind, c, r) => {
            return Err(schema(format!(
                "type {kind:?} with construction {} and r {r:?} is not a valid combination",
                c.as_str()
            )))
        }
    }
    if prime_power(entry.q as u64).is_none() {
        return Err(schema(format!("q = {} is not a prime power", entry.q)));
    }
    let space = CodeSpace::new(entry.n, entry.q).map_err(|e| schema(e.to_string()))?;
    let c1 = rebuild(&space, &entry.c1_defset, "c1_defset")?;
    let c2 = rebuild(&space, &entry.c2_defset, "c2_defset")?;

    let fresh =
        match (entry.kind, entry.construction) {
            (RecordKind::Aqec, Construction::Css) => {
                CatalogEntry::from_aqec(&css_aqec(&c1, &c2, budget)?)
            }
            (RecordKind::Aqec, Construction::Genpoly) => {
                let (f, rem) = c2.generator().divmod(c1.generator())?;
                if !rem.is_zero() {
                    return Err(Error::NotDivisor(entry.n));
                }
                CatalogEntry::from_aqec(&genpoly_aqec(&c1, &f, budget)?)
            }
            (RecordKind::Aqec, Construction::Defset) => {
                let c2_dual = c2.dual();
                let u: Vec<usize> = c1
                    .dual()
                    .defset()
                    .iter()
                    .filter(|r| c2_dual.defset().binary_search(r).is_err())
                    .copied()
                    .collect();
                CatalogEntry::from_aqec(&defset_aqec(&c1, &u, budget)?)
            }
            (RecordKind::Subsystem, Construction::Css) => CatalogEntry::from_subsystem(
                &css_subsystem(&c1, &c2, entry.r.expect("checked above"), budget)?,
            ),
            (RecordKind::Subsystem, Construction::Euclidean) => {
                let (a, b) = euclidean_assc(&c1, budget)?;
                let pick = if Some(a.r) == entry.r { a } else { b };
                CatalogEntry::from_subsystem(&pick)
            }
            _ => unreachable!("combination checked above"),
        };
    if !fresh.dx_exact || !fresh.dz_exact {
        return Err(Error::BudgetExceeded(format!(
            "distances of {} not exact within {budget} codewords",
            fresh.label()
        )));
    }

    let recorded = serde_json::to_value(entry).expect("entry serializes");
    let recomputed = serde_json::to_value(&fresh).expect("entry serializes");
    let fields: Vec<FieldCheck> = COLUMNS
        .iter()
        .map(|&name| {
            let a = recorded[name].clone();
            let b = recomputed[name].clone();
            FieldCheck {
                field: name,
                matches: a == b,
                recorded: a,
                recomputed: b,
            }
        })
        .collect();
    let pass = fields
        .iter()
        .filter(|f| DECISIVE.contains(&f.field))
        .all(|f| f.matches);
    Ok(VerifyReport {
        label: entry.label(),
        pass,
        fields,
    })
}

/// Reads entries from a JSON array or from one JSON object per line.
pub fn parse_entries(text: &str) -> Result<Vec<CatalogEntry>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).map_err(|e| schema(e.to_string()));
    }
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(CatalogEntry::from_json)
        .collect()
}
