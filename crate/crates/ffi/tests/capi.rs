use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use cyclic_aqec_ffi::*;

const BUDGET: u64 = 1 << 22;

fn defset_code(n: usize, q: u32, t: &[usize]) -> *mut AqecCode {
    let mut out = ptr::null_mut();
    let s = unsafe { aqec_code_from_defset(n, q, t.as_ptr(), t.len(), &mut out) };
    assert_eq!(s, AqecStatus::Ok);
    assert!(!out.is_null());
    out
}

fn last_error() -> String {
    let p = aqec_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn steane_through_the_c_abi() {
    let h = defset_code(7, 2, &[1, 2, 4]);
    unsafe {
        assert_eq!((aqec_code_length(h), aqec_code_dimension(h)), (7, 4));
        let mut buf = [0usize; 8];
        assert_eq!(aqec_code_defset(h, buf.as_mut_ptr(), buf.len()), 3);
        assert_eq!(&buf[..3], &[1, 2, 4]);

        let mut p = AqecParams::default();
        assert_eq!(aqec_css(h, h, BUDGET, &mut p), AqecStatus::Ok);
        assert_eq!((p.n, p.q, p.k, p.r, p.dx, p.dz), (7, 2, 1, -1, 3, 3));
        assert!(p.dx_exact && p.dz_exact);
        assert_eq!((p.pure_x, p.pure_z), (1, 1));

        assert_eq!(aqec_css_subsystem(h, h, 1, BUDGET, &mut p), AqecStatus::Ok);
        assert_eq!((p.k, p.r), (0, 1));
        assert_eq!(
            aqec_css_subsystem(h, h, 2, BUDGET, &mut p),
            AqecStatus::GaugeOutOfRange
        );
        assert!(last_error().starts_with("GaugeOutOfRange"));

        let mut w = AqecWeight::default();
        assert_eq!(aqec_code_min_weight(h, BUDGET, &mut w), AqecStatus::Ok);
        assert_eq!((w.value, w.exact), (3, true));

        let mut d = ptr::null_mut();
        assert_eq!(aqec_code_dual(h, &mut d), AqecStatus::Ok);
        assert_eq!(aqec_code_dimension(d), 3);

        let mut hx = vec![0u32; 21];
        let mut hz = vec![0u32; 21];
        let (mut rx, mut rz) = (0, 0);
        let s = aqec_stabilizer_matrices(
            h,
            h,
            hx.as_mut_ptr(),
            hx.len(),
            hz.as_mut_ptr(),
            hz.len(),
            &mut rx,
            &mut rz,
        );
        assert_eq!(s, AqecStatus::Ok);
        assert_eq!((rx, rz), (3, 3));
        for i in 0..3 {
            for j in 0..3 {
                let dot: u32 = (0..7).map(|c| hx[i * 7 + c] * hz[j * 7 + c]).sum();
                assert_eq!(dot % 2, 0);
            }
        }
        let s = aqec_stabilizer_matrices(
            h,
            h,
            hx.as_mut_ptr(),
            4,
            hz.as_mut_ptr(),
            4,
            &mut rx,
            &mut rz,
        );
        assert_eq!(s, AqecStatus::BufferTooSmall);

        aqec_code_free(d);
        aqec_code_free(h);
    }
}

#[test]
fn constructions_and_errors() {
    let c1 = defset_code(15, 2, &[1, 2, 4, 8]);
    unsafe {
        let mut p = AqecParams::default();
        let t = [5usize, 10];
        assert_eq!(
            aqec_defset(c1, t.as_ptr(), t.len(), BUDGET, &mut p),
            AqecStatus::Ok
        );
        assert_eq!(p.k, 5);
        let bad = [7usize, 11, 13, 14];
        assert_eq!(
            aqec_defset(c1, bad.as_ptr(), bad.len(), BUDGET, &mut p),
            AqecStatus::TNotInAdmissibleSet
        );
        let f = [1u32, 1, 1, 1, 1];
        assert_eq!(
            aqec_genpoly(c1, f.as_ptr(), f.len(), BUDGET, &mut p),
            AqecStatus::Ok
        );
        assert_eq!((p.k, p.dx, p.dz), (3, 3, 5));

        let mut bch = ptr::null_mut();
        assert_eq!(aqec_code_bch(15, 2, 5, 1, &mut bch), AqecStatus::Ok);
        let mut pair = [AqecParams::default(); 2];
        assert_eq!(
            aqec_euclidean(bch, BUDGET, pair.as_mut_ptr()),
            AqecStatus::Ok
        );
        assert_eq!((pair[0].k, pair[0].r, pair[1].k, pair[1].r), (4, 3, 3, 4));
        aqec_code_free(bch);

        let mut rs = ptr::null_mut();
        assert_eq!(aqec_code_rs(8, 3, 1, &mut rs), AqecStatus::Ok);
        let mut w = AqecWeight::default();
        assert_eq!(aqec_code_min_weight(rs, BUDGET, &mut w), AqecStatus::Ok);
        assert_eq!(w.value, 5);
        aqec_code_free(rs);

        let mut g = ptr::null_mut();
        let coeffs = [1u32, 1, 0, 0, 1];
        assert_eq!(
            aqec_code_from_genpoly(15, 2, coeffs.as_ptr(), coeffs.len(), &mut g),
            AqecStatus::Ok
        );
        assert_eq!(aqec_code_dimension(g), 11);
        aqec_code_free(g);

        let mut out = ptr::null_mut();
        let t = [1usize, 2];
        assert_eq!(
            aqec_code_from_defset(7, 2, t.as_ptr(), 2, &mut out),
            AqecStatus::NotCosetClosed
        );
        assert!(out.is_null());
        assert_eq!(
            aqec_code_from_defset(4, 2, ptr::null(), 0, &mut out),
            AqecStatus::NotCoprime
        );
        assert!(last_error().starts_with("NotCoprime"));
        assert_eq!(
            aqec_code_from_defset(7, 2, ptr::null(), 3, &mut out),
            AqecStatus::NullPointer
        );
        assert_eq!(
            aqec_css(c1, ptr::null(), BUDGET, &mut p),
            AqecStatus::NullPointer
        );

        aqec_code_free(c1);
        aqec_code_free(ptr::null_mut());
    }
}

#[test]
fn search_and_verify_json() {
    unsafe {
        let mut text = ptr::null_mut();
        assert_eq!(aqec_search_json(7, 2, BUDGET, &mut text), AqecStatus::Ok);
        let catalog = CStr::from_ptr(text).to_str().unwrap().to_string();
        aqec_string_free(text);
        assert!(catalog.lines().count() > 0);
        for line in catalog.lines() {
            let c = CString::new(line).unwrap();
            let mut pass = false;
            assert_eq!(
                aqec_verify_json(c.as_ptr(), BUDGET, &mut pass),
                AqecStatus::Ok
            );
            assert!(pass);
        }
        let tampered = catalog
            .lines()
            .next()
            .unwrap()
            .replacen(r#""dz":"#, r#""dz":9"#, 1);
        let c = CString::new(tampered).unwrap();
        let mut pass = true;
        assert_eq!(
            aqec_verify_json(c.as_ptr(), BUDGET, &mut pass),
            AqecStatus::Ok
        );
        assert!(!pass);

        let c = CString::new("{}").unwrap();
        assert_eq!(
            aqec_verify_json(c.as_ptr(), BUDGET, &mut pass),
            AqecStatus::SchemaViolation
        );
        let mut out = ptr::null_mut();
        assert_eq!(
            aqec_search_json(4, 2, BUDGET, &mut out),
            AqecStatus::NotCoprime
        );
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(aqec_version()) }.to_str().unwrap();
    assert_eq!(v, concat!("cyclic-aqec ", env!("CARGO_PKG_VERSION")));
}

/// The generated header must compile as C and declare every entry point.
#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/cyclic_aqec.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "aqec_code_from_defset",
        "aqec_code_from_genpoly",
        "aqec_code_bch",
        "aqec_code_rs",
        "aqec_code_dual",
        "aqec_code_free",
        "aqec_code_length",
        "aqec_code_dimension",
        "aqec_code_defset",
        "aqec_code_min_weight",
        "aqec_css",
        "aqec_css_subsystem",
        "aqec_genpoly",
        "aqec_defset",
        "aqec_euclidean",
        "aqec_stabilizer_matrices",
        "aqec_search_json",
        "aqec_verify_json",
        "aqec_string_free",
        "aqec_last_error_message",
        "aqec_version",
        "typedef struct AqecCode AqecCode",
    ] {
        assert!(text.contains(name), "{name}");
    }

    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler found; skipping syntax check");
        return;
    };
    assert!(cc.status.success());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use.c");
    std::fs::write(
        &src,
        r#"#include "cyclic_aqec.h"
int main(void) {
    AqecCode *c = NULL;
    size_t t[3] = {1, 2, 4};
    AqecParams p;
    if (aqec_code_from_defset(7, 2, t, 3, &c) != AQEC_STATUS_OK) return 1;
    if (aqec_css(c, c, 4194304, &p) != AQEC_STATUS_OK) return 1;
    aqec_code_free(c);
    return p.k == 1 ? 0 : 1;
}
"#,
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}
