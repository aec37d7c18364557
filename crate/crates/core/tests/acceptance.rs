//! Acceptance suite. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits nonzero if any criterion fails.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cyclic_aqec::aqec::{
    css_aqec, defset_aqec, euclidean_assc, genpoly_aqec, hull, hull_stabilizers,
    stabilizer_matrices,
};
use cyclic_aqec::catalog::{CatalogEntry, RecordKind};
use cyclic_aqec::cyclic::{code_from_defset, rs_construct, CodeSpace, CyclicCode};
use cyclic_aqec::polyring::{cyclotomic_cosets, factor_xn_minus_1, Poly};
use cyclic_aqec::weights::{bch_bound, min_weight, DEFAULT_BUDGET};
use cyclic_aqec::{aqec::Construction, run_command};

type Word = Vec<u32>;

fn weight(w: &[u32]) -> usize {
    w.iter().filter(|&&x| x != 0).count()
}

/// Oracle: smallest weight of a listed word of `a` absent from `b`.
fn brute_relative(a: &CyclicCode, b: &CyclicCode) -> usize {
    let b_words: HashSet<Word> = b.codewords().into_iter().collect();
    a.codewords()
        .into_iter()
        .filter(|w| !b_words.contains(w))
        .map(|w| weight(&w))
        .min()
        .expect("difference is nonempty")
}

fn brute_min(a: &CyclicCode) -> usize {
    a.codewords()
        .into_iter()
        .map(|w| weight(&w))
        .filter(|&w| w > 0)
        .min()
        .expect("nonzero code")
}

/// Oracle distances of the pair (C1, C2): (min, max) of the two side weights.
fn brute_css(c1: &CyclicCode, c2: &CyclicCode) -> (usize, usize) {
    let w1 = brute_relative(c1, &c2.dual());
    let w2 = brute_relative(c2, &c1.dual());
    (w1.min(w2), w1.max(w2))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("cyclic-aqec")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_command(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn hamming15() -> CyclicCode {
    code_from_defset(15, 2, &[1, 2, 4, 8]).unwrap()
}

fn bch15_7() -> CyclicCode {
    code_from_defset(15, 2, &[1, 2, 3, 4, 6, 8, 9, 12]).unwrap()
}

fn ac1() {
    let (code, out, err) = run(&[
        "aqec",
        "css",
        "--n",
        "7",
        "--q",
        "2",
        "--defset1",
        "1,2,4",
        "--defset2",
        "1,2,4",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0, "{err}");
    let e = CatalogEntry::from_json(out.trim()).unwrap();
    assert_eq!((e.n, e.q, e.k, e.dx, e.dz), (7, 2, 1, 3, 3));
    assert!(e.dx_exact && e.dz_exact);
    assert_eq!((e.pure_x, e.pure_z), (Some(true), Some(true)));

    let h = code_from_defset(7, 2, &[1, 2, 4]).unwrap();
    assert_eq!(h.codewords().len(), 16);
    assert_eq!(brute_css(&h, &h), (3, 3));
    assert_eq!(brute_min(&h), 3);
}

fn ac2() {
    let c1 = hamming15();
    let rec = defset_aqec(&c1, &[5, 10], DEFAULT_BUDGET).unwrap();
    let c2 = c1.space().code_from_defset(&rec.c2_defset).unwrap();
    let (n, k1, k2, b) = (15i64, c1.k() as i64, c2.k() as i64, 2i64);
    assert_eq!(rec.k, 5);
    assert_eq!(2 * k1 - b - n, k1 + k2 - n);
    assert_eq!((k1, k2), (11, 9));
    assert!(rec.dx.exact && rec.dz.exact);
    assert!(rec.dz.value >= rec.dx.value);
    let oracle = brute_css(&c1, &c2);
    assert_eq!((rec.dx.value, rec.dz.value), oracle);
    assert_eq!(oracle, (3, 3), "pinned regression");
}

fn ac3() {
    let c1 = hamming15();
    let space = c1.space();
    let idx = space.coset_index(3);
    assert_eq!(space.cosets()[idx].members, vec![3, 6, 9, 12]);
    let f = space.minimal_polynomials()[idx].clone();
    assert_eq!(f.degree(), Some(4));
    let rec = genpoly_aqec(&c1, &f, DEFAULT_BUDGET).unwrap();
    let c2 = space.code_from_defset(&rec.c2_defset).unwrap();
    assert_eq!(rec.k, 3);
    assert_eq!(2 * 11 - 4 - 15, c1.k() + c2.k() - 15);
    // C2 is generated by f * g1
    assert_eq!(c2.generator(), &f.mul(c1.generator()).unwrap());
    let oracle = brute_css(&c1, &c2);
    assert_eq!((rec.dx.value, rec.dz.value), oracle);
    assert_eq!(oracle, (3, 5), "pinned regression");
}

fn ac4() {
    let c1 = bch15_7();
    let h = hull(&c1);
    assert_eq!(h.k(), 4);
    let (a, b) = euclidean_assc(&c1, DEFAULT_BUDGET).unwrap();
    assert_eq!((a.k, a.r), (4, 3));
    assert_eq!((b.k, b.r), (3, 4));
    assert_eq!((a.dx.value, a.dz.value), (b.dx.value, b.dz.value));
    assert!(a.dx.exact && a.dz.exact);

    let words = h.codewords();
    assert_eq!(words.len(), 16);
    let mut products = 0;
    for x in &words {
        for y in &words {
            let dot: u32 = x.iter().zip(y).map(|(a, b)| a * b).sum();
            assert_eq!(dot % 2, 0);
            products += 1;
        }
    }
    assert_eq!(products, 256);

    let wa = brute_relative(&h.dual(), &c1);
    let wb = brute_relative(&c1.dual(), &h);
    assert_eq!((a.dx.value, a.dz.value), (wa.min(wb), wa.max(wb)));
    assert_eq!((a.dx.value, a.dz.value), (3, 4), "pinned regression");
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Deterministic spread of coset masks when there are more than 2^12 codes.
fn sample_masks(c: usize) -> Vec<u64> {
    if c <= 12 {
        return (0..1u64 << c).collect();
    }
    let all = (1u64 << c) - 1;
    let mut state = 0x243F_6A88_85A3_08D3u64;
    let mut masks = vec![0, all];
    while masks.len() < 1 << 12 {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        masks.push((z ^ (z >> 31)) & all);
    }
    masks
}

fn ac5() {
    let mut pairs = 0;
    let mut codes = 0;
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        for n in 1..=40usize {
            if gcd(n, q as usize) != 1 {
                continue;
            }
            pairs += 1;
            let cosets = cyclotomic_cosets(n, q).unwrap();
            let mut seen = vec![0u32; n];
            for c in &cosets {
                for &r in &c.members {
                    seen[r] += 1;
                }
            }
            assert!(seen.iter().all(|&s| s == 1), "cosets of ({n},{q})");

            let factors = factor_xn_minus_1(n, q).unwrap();
            let field = factors[0].1.field().clone();
            let product = factors
                .iter()
                .fold(Poly::one(&field), |acc, (_, p)| acc.mul(p).unwrap());
            assert_eq!(product, Poly::xn_minus_one(&field, n), "({n},{q})");

            let space = CodeSpace::new(n, q).unwrap();
            for mask in sample_masks(cosets.len()) {
                let t: Vec<usize> = cosets
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .flat_map(|(_, c)| c.members.iter().copied())
                    .collect();
                let c = space.code_from_defset(&t).unwrap();
                let d = c.dual();
                assert_eq!(c.k() + d.k(), n);
                let dd = d.dual();
                assert_eq!(dd, c);
                assert_eq!(dd.generator(), c.generator());
                codes += 1;
            }
        }
    }
    assert!(pairs > 150 && codes > pairs);
}

/// Words of length <= 16 over GF(2) or GF(3), one coordinate per nibble.
fn nibbles(w: &[u32]) -> u64 {
    w.iter()
        .enumerate()
        .fold(0, |acc, (i, &x)| acc | (x as u64) << (4 * i))
}

const LOW: u64 = 0x1111_1111_1111_1111;

/// Coordinatewise sum mod q of two nibble words.
fn nibble_add(q: u32, a: u64, b: u64) -> u64 {
    if q == 2 {
        return a ^ b;
    }
    let s = a + b;
    // nibble >= 3 exactly when nibble + 5 reaches bit 3
    let wrap = ((s + 5 * LOW) >> 3) & LOW;
    s - 3 * wrap
}

/// (mask of coordinates equal to 1, mask of coordinates equal to 2).
fn split(w: u64) -> (u64, u64) {
    (w & LOW, (w >> 1) & LOW)
}

/// Whether `p` is orthogonal to every stored word; 2 = -1 in GF(3), so a
/// ternary dot is (#equal nonzero pairs) - (#opposite pairs).
#[inline(always)]
fn orthogonal_to_all(q: u32, p: (u64, u64), stored: &[(u64, u64)]) -> bool {
    if q == 2 {
        stored
            .iter()
            .all(|s| (p.0 & s.0).count_ones().is_multiple_of(2))
    } else {
        stored.iter().all(|s| {
            let same = ((p.0 & s.0) | (p.1 & s.1)).count_ones() as i32;
            let cross = ((p.0 & s.1) | (p.1 & s.0)).count_ones() as i32;
            (same - cross).rem_euclid(3) == 0
        })
    }
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "popcnt")]
unsafe fn orthogonal_to_all_popcnt(q: u32, p: (u64, u64), stored: &[(u64, u64)]) -> bool {
    orthogonal_to_all(q, p, stored)
}

fn check_word(q: u32, p: (u64, u64), stored: &[(u64, u64)]) -> bool {
    #[cfg(target_arch = "x86_64")]
    if std::arch::is_x86_feature_detected!("popcnt") {
        // SAFETY: the feature was detected at runtime.
        return unsafe { orthogonal_to_all_popcnt(q, p, stored) };
    }
    orthogonal_to_all(q, p, stored)
}

/// Every codeword of the larger code, generated by an odometer over message
/// digits, is dotted against every listed codeword of the smaller one.
fn exhaustive_orthogonal(big: &CyclicCode, small: &CyclicCode) -> u64 {
    let q = big.q();
    let stored: Vec<(u64, u64)> = small
        .codewords()
        .iter()
        .map(|w| split(nibbles(w)))
        .collect();
    let rows: Vec<u64> = big.generator_matrix().iter_rows().map(nibbles).collect();
    let mut word = 0u64;
    let mut digits = vec![0u32; rows.len()];
    let mut checked = 0u64;
    loop {
        assert!(check_word(q, split(word), &stored), "{word:x}");
        checked += stored.len() as u64;
        let mut i = 0;
        loop {
            if i == rows.len() {
                return checked;
            }
            word = nibble_add(q, word, rows[i]);
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn ac6() {
    for (x, y) in [(0u32, 0u32), (1, 1), (1, 2), (2, 2), (2, 0)] {
        let sum = nibble_add(3, nibbles(&[x, y, y]), nibbles(&[y, x, 2]));
        assert_eq!(sum, nibbles(&[(x + y) % 3, (x + y) % 3, (y + 2) % 3]));
    }
    let w = |v: &[u32]| split(nibbles(v));
    assert!(!check_word(3, w(&[1, 0]), &[w(&[1, 0])]));
    assert!(!check_word(3, w(&[2, 1]), &[w(&[1, 0])]));
    assert!(check_word(3, w(&[1, 2]), &[w(&[1, 1])]));
    assert!(check_word(3, w(&[1, 1, 1]), &[w(&[1, 1, 1])]));
    assert!(!check_word(2, w(&[1, 1, 1]), &[w(&[1, 1, 1])]));
    let mut pairs = 0u64;
    for q in [2u32, 3] {
        for n in 1..=16usize {
            if gcd(n, q as usize) != 1 {
                continue;
            }
            let space = CodeSpace::new(n, q).unwrap();
            let codes = space.all_codes(16).unwrap();
            for c in &codes {
                let g = c.generator_matrix();
                let h = c.parity_check_matrix();
                assert!(g.mul_transpose(&h).unwrap().is_zero());
                let d = c.dual();
                // each unordered {C, dual C} once
                if d.defset() < c.defset() {
                    continue;
                }
                let (big, small) = if c.k() >= d.k() { (c, &d) } else { (&d, c) };
                pairs += exhaustive_orthogonal(big, small);
            }
        }
    }
    assert!(pairs > 1_000_000_000);
}

fn ac7() {
    let budget = 1 << 24;
    for n in [7usize, 15, 17, 21, 23] {
        let space = CodeSpace::new(n, 2).unwrap();
        for c in space.all_codes(16).unwrap() {
            if c.is_zero_code() {
                continue;
            }
            let w = min_weight(&c, budget).unwrap();
            assert!(w.exact, "n={n} k={}", c.k());
            assert!(w.value >= bch_bound(&c), "{:?}", c.defset());
        }
    }
}

fn ac8() {
    for q in [5u32, 7, 8] {
        let n = q as usize - 1;
        for k in 1..=n {
            let c = rs_construct(q, k, 1).unwrap();
            assert_eq!(c.k(), k);
            let w = min_weight(&c, DEFAULT_BUDGET).unwrap();
            assert!(w.exact);
            assert_eq!(w.enumerated + 1, (q as u64).pow(k as u32));
            assert_eq!(w.value, n - k + 1, "q={q} k={k}");
        }
    }
}

fn commutes(e: &CatalogEntry) {
    let space = CodeSpace::new(e.n, e.q).unwrap();
    let c1 = space.code_from_defset(&e.c1_defset).unwrap();
    let pair = match (e.kind, e.construction) {
        (RecordKind::Subsystem, Construction::Euclidean) => {
            assert_eq!(hull(&c1).defset(), &e.c2_defset[..]);
            hull_stabilizers(&c1).unwrap()
        }
        _ => {
            let c2 = space.code_from_defset(&e.c2_defset).unwrap();
            stabilizer_matrices(&c1, &c2).unwrap()
        }
    };
    assert!(pair.commutes(), "{}", e.label());
}

fn ac9() {
    let b = DEFAULT_BUDGET;
    let h7 = code_from_defset(7, 2, &[1, 2, 4]).unwrap();
    let c1 = hamming15();
    let f = c1.space().minimal_polynomials()[c1.space().coset_index(3)].clone();
    let (x, y) = euclidean_assc(&bch15_7(), b).unwrap();
    let mut entries = vec![
        CatalogEntry::from_aqec(&css_aqec(&h7, &h7, b).unwrap()),
        CatalogEntry::from_aqec(&defset_aqec(&c1, &[5, 10], b).unwrap()),
        CatalogEntry::from_aqec(&genpoly_aqec(&c1, &f, b).unwrap()),
        CatalogEntry::from_subsystem(&x),
        CatalogEntry::from_subsystem(&y),
    ];
    let (code, out, err) = run(&["search", "--n", "15", "--q", "2", "--format", "json"]);
    assert_eq!(code, 0, "{err}");
    let found = out.lines().count();
    assert!(found > 0);
    entries.extend(out.lines().map(|l| CatalogEntry::from_json(l).unwrap()));
    for e in &entries {
        commutes(e);
    }
}

fn ac10() {
    let args = ["search", "--n", "15", "--q", "2", "--format", "json"];
    let (c1, first, _) = run(&args);
    let (c2, second, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(first.as_bytes(), second.as_bytes());
    let count = first.lines().count();
    assert!(count > 0);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.jsonl");
    std::fs::write(&path, &first).unwrap();
    let (code, out, err) = run(&["verify", "--in", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0, "{err}");
    let passed = out.lines().filter(|l| l.contains(r#""pass":true"#)).count();
    assert_eq!(passed, count);
}

fn main() {
    let criteria: [(&str, fn(), u64); 10] = [
        ("AC1 Steane [[7,1,3/3]] with purity flags", ac1, 1),
        ("AC2 defining-set construction [[15,5]]", ac2, 10),
        ("AC3 generator-polynomial construction [[15,3]]", ac3, 10),
        ("AC4 Euclidean subsystem codes from [15,7] BCH", ac4, 10),
        ("AC5 algebra suite q in {2,3,4,5,7,8,9}, n <= 40", ac5, 120),
        ("AC6 exhaustive orthogonality n <= 16, q in {2,3}", ac6, 60),
        ("AC7 minimum weight >= BCH bound", ac7, 60),
        ("AC8 Reed-Solomon codes are MDS", ac8, 30),
        ("AC9 stabilizer commutation", ac9, 60),
        ("AC10 catalog determinism and verification", ac10, 60),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let ok = outcome.is_ok() && in_time;
        if !ok {
            failed += 1;
        }
        let note = match (outcome.is_ok(), in_time) {
            (true, true) => String::new(),
            (false, _) => " (assertion failed)".to_string(),
            (true, false) => " (time limit exceeded)".to_string(),
        };
        println!(
            "[{}] {name}: {:.2} s, limit {limit} s{note}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
