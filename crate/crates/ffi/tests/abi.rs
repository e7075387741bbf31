use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use frieze_bracket_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { fb_string_free(s) };
    out
}

fn poly_text(p: *mut FbPoly) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { fb_poly_to_string(p, &mut s) }, FbStatus::Ok);
    take_string(s)
}

fn last_error() -> String {
    take_string(fb_last_error_message())
}

#[test]
fn bracket_of_example_word() {
    let w = CString::new("RL^2RL").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { fb_bracket_of_word(w.as_ptr(), &mut p) },
        FbStatus::Ok
    );
    assert_eq!(poly_text(p), "-A^12+2A^8-3A^4+4-3A^-4+3A^-8-2A^-12+A^-16");
    let (mut lo, mut hi) = (0, 0);
    assert_eq!(
        unsafe { fb_poly_degree_range(p, &mut lo, &mut hi) },
        FbStatus::Ok
    );
    assert_eq!((lo, hi), (-16, 12));
    let mut v = 0;
    assert_eq!(
        unsafe { fb_poly_eval_at_a4_minus1(p, &mut v) },
        FbStatus::Ok
    );
    assert_eq!(v, 19);
    unsafe { fb_poly_free(p) };
}

#[test]
fn fraction_entry_points() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { fb_denominator_link(7, 19, &mut p) }, FbStatus::Ok);
    assert_eq!(poly_text(p), "A^15-2A^11+3A^7-4A^3+3A^-1-3A^-5+2A^-9-A^-13");
    unsafe { fb_poly_free(p) };

    assert_eq!(
        unsafe { fb_bracket_num_of_fraction(7, 19, &mut p) },
        FbStatus::Ok
    );
    assert_eq!(poly_text(p), "1-A^-4+2A^-8-2A^-12+A^-16");
    unsafe { fb_poly_free(p) };

    assert_eq!(
        unsafe { fb_bracket_of_fraction(1, 2, &mut p) },
        FbStatus::Ok
    );
    assert_eq!(poly_text(p), "-A^4-A^-4");
    unsafe { fb_poly_free(p) };

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { fb_word_of_fraction(7, 19, &mut s) }, FbStatus::Ok);
    assert_eq!(take_string(s), "RL^2RL");

    let w = CString::new("LLLR").unwrap();
    let (mut num, mut den) = (0, 0);
    assert_eq!(
        unsafe { fb_fraction_of_word(w.as_ptr(), &mut num, &mut den) },
        FbStatus::Ok
    );
    assert_eq!((num, den), (5, 9));
    assert_eq!(
        unsafe { fb_complete_invariant(w.as_ptr(), &mut s) },
        FbStatus::Ok
    );
    assert_eq!(take_string(s), "{2/9, 4/9, 5/9, 7/9}");
}

#[test]
fn poly_round_trip_and_bar() {
    let t = CString::new("-A^4+1+A^-8").unwrap();
    let (mut p, mut b) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { fb_poly_parse(t.as_ptr(), &mut p) }, FbStatus::Ok);
    assert_eq!(unsafe { fb_poly_bar(p, &mut b) }, FbStatus::Ok);
    assert_eq!(poly_text(b), "A^8+1-A^-4");
    let mut eq = true;
    assert_eq!(unsafe { fb_poly_equal(p, b, &mut eq) }, FbStatus::Ok);
    assert!(!eq);
    unsafe {
        fb_poly_free(p);
        fb_poly_free(b);
    }
}

#[test]
fn frieze_handles() {
    let w = CString::new("L^2R^2L").unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(
        unsafe { fb_frieze_from_word(w.as_ptr(), &mut f) },
        FbStatus::Ok
    );
    let (mut h, mut n, mut per, mut m) = (0, 0, 0, 0);
    unsafe {
        assert_eq!(fb_frieze_height(f, &mut h), FbStatus::Ok);
        assert_eq!(fb_frieze_width(f, &mut n), FbStatus::Ok);
        assert_eq!(fb_frieze_period(f, &mut per), FbStatus::Ok);
        assert_eq!(fb_frieze_max_entry(f, &mut m), FbStatus::Ok);
    }
    assert_eq!((h, n, per, m), (6, 9, 9, 17));
    let mut e = 0;
    assert_eq!(unsafe { fb_frieze_entry(f, -1, 3, &mut e) }, FbStatus::Ok);
    assert_eq!(e, 1);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { fb_frieze_word(f, &mut s) }, FbStatus::Ok);
    assert_eq!(take_string(s), "L^2R^2L");
    assert_eq!(unsafe { fb_frieze_render(f, &mut s) }, FbStatus::Ok);
    assert!(take_string(s).contains("period 9"));
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { fb_frieze_bracket(f, &mut p) }, FbStatus::Ok);
    assert_eq!(poly_text(p), "-A^12+2A^8-3A^4+3-3A^-4+3A^-8-A^-12+A^-16");
    unsafe {
        fb_poly_free(p);
        fb_frieze_free(f);
    }
}

#[test]
fn non_zigzag_quiddity() {
    let q = [1u64, 4, 1, 2, 4, 1, 2, 3];
    let mut f = ptr::null_mut();
    assert_eq!(
        unsafe { fb_frieze_from_quiddity(q.as_ptr(), q.len(), &mut f) },
        FbStatus::Ok
    );
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { fb_frieze_word(f, &mut s) }, FbStatus::NotZigzag);
    assert!(s.is_null());
    assert!(last_error().contains("zigzag"));
    unsafe { fb_frieze_free(f) };
}

#[test]
fn errors_are_reported() {
    let mut p = ptr::null_mut();
    let bad = CString::new("A^^2").unwrap();
    assert_eq!(
        unsafe { fb_poly_parse(bad.as_ptr(), &mut p) },
        FbStatus::Parse
    );
    assert!(p.is_null());
    assert!(!last_error().is_empty());
    assert_eq!(
        unsafe { fb_poly_parse(ptr::null(), &mut p) },
        FbStatus::NullPointer
    );
    assert_eq!(
        unsafe { fb_bracket_of_fraction(0, 0, &mut p) },
        FbStatus::Domain
    );
    assert_eq!(
        unsafe { fb_denominator_link(3, 2, &mut p) },
        FbStatus::Domain
    );
    let w = CString::new("LRX").unwrap();
    assert_eq!(
        unsafe { fb_bracket_of_word(w.as_ptr(), &mut p) },
        FbStatus::Parse
    );
    let ok = CString::new("L").unwrap();
    assert_eq!(
        unsafe { fb_bracket_of_word(ok.as_ptr(), ptr::null_mut()) },
        FbStatus::NullPointer
    );
    let mut v = 0;
    assert_eq!(
        unsafe { fb_poly_eval_at_a4_minus1(ptr::null(), &mut v) },
        FbStatus::NullPointer
    );
    unsafe {
        fb_poly_free(ptr::null_mut());
        fb_frieze_free(ptr::null_mut());
        fb_string_free(ptr::null_mut());
    }
}

#[test]
fn status_values_are_stable() {
    assert_eq!(FbStatus::Ok as i32, 0);
    assert_eq!(FbStatus::NotZigzag as i32, 5);
    assert_eq!(FbStatus::Internal as i32, 99);
}

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/frieze_bracket.h")
}

#[test]
fn header_declares_everything() {
    let text = std::fs::read_to_string(header()).unwrap();
    for name in [
        "fb_last_error_message",
        "fb_string_free",
        "fb_poly_parse",
        "fb_poly_free",
        "fb_bracket_of_word",
        "fb_denominator_link",
        "fb_frieze_from_quiddity",
        "fb_frieze_free",
        "FB_STATUS_NOT_ZIGZAG = 5",
        "typedef struct FbPoly FbPoly;",
        "typedef struct FbFrieze FbFrieze;",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
}

#[test]
fn header_compiles() {
    for (cc, lang) in [("cc", "c"), ("c++", "c++")] {
        let Ok(out) = Command::new(cc)
            .args(["-fsyntax-only", "-Wall", "-Wextra", "-x", lang])
            .arg(header())
            .output()
        else {
            eprintln!("{cc} not found, skipping");
            continue;
        };
        assert!(
            out.status.success(),
            "{cc}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}
