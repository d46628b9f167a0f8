use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use parkvol_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    pv_string_free(s);
    out
}

fn last_error() -> String {
    let p = pv_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn numbers() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(pv_euler_number(8, &mut s), PvStatus::Ok);
        assert_eq!(take(s), "1385");
        let members = [2usize];
        assert_eq!(pv_beta(4, members.as_ptr(), 1, &mut s), PvStatus::Ok);
        assert_eq!(take(s), "5");
        assert_eq!(pv_beta(4, ptr::null(), 0, &mut s), PvStatus::Ok);
        assert_eq!(take(s), "1");
        let members = [7usize];
        assert_eq!(
            pv_beta(4, members.as_ptr(), 1, &mut s),
            PvStatus::InvalidArgument
        );
        assert!(!last_error().is_empty());
    }
}

#[test]
fn enumerators() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(pv_inversion_enumerator_new(4, 0, &mut p), PvStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(pv_unipoly_eval_minus_one(p, &mut s), PvStatus::Ok);
        assert_eq!(take(s), "5");
        let one = CString::new("1").unwrap();
        assert_eq!(pv_unipoly_eval(p, one.as_ptr(), &mut s), PvStatus::Ok);
        assert_eq!(take(s), "125");
        let mut deg = 0isize;
        assert_eq!(pv_unipoly_degree(p, &mut deg), PvStatus::Ok);
        assert_eq!(deg, 6);
        // increasing trees
        assert_eq!(pv_unipoly_coeff(p, 0, &mut s), PvStatus::Ok);
        assert_eq!(take(s), "24");
        pv_unipoly_free(p);

        assert_eq!(
            pv_inversion_enumerator_new(9, 0, &mut p),
            PvStatus::CapExceeded
        );
        assert!(last_error().contains("9"));

        let a = [1u32, 2, 3, 4];
        assert_eq!(
            pv_sum_enumerator_new(a.as_ptr(), 4, 0, &mut p),
            PvStatus::Ok
        );
        assert_eq!(pv_unipoly_eval_minus_one(p, &mut s), PvStatus::Ok);
        assert_eq!(take(s), "5");
        pv_unipoly_free(p);

        let a = [2u32, 1];
        assert_eq!(
            pv_sum_enumerator_new(a.as_ptr(), 2, 0, &mut p),
            PvStatus::InvalidArgument
        );
    }
}

#[test]
fn volumes() {
    unsafe {
        let members = [4usize];
        let d: Vec<CString> = ["1", "3/2", "2"]
            .iter()
            .map(|s| CString::new(*s).unwrap())
            .collect();
        let ptrs: Vec<*const c_char> = d.iter().map(|c| c.as_ptr()).collect();
        let mut spec = ptr::null_mut();
        assert_eq!(
            pv_volume_spec_new(5, members.as_ptr(), 1, ptrs.as_ptr(), 3, &mut spec),
            PvStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(pv_volume_formula(spec, &mut s), PvStatus::Ok);
        let formula = take(s);
        assert_eq!(pv_volume_parking_sum(spec, 0, &mut s), PvStatus::Ok);
        assert_eq!(take(s), formula);
        assert_eq!(pv_volume_integral(spec, 0, &mut s), PvStatus::Ok);
        assert_eq!(take(s), formula);
        assert_eq!(pv_volume_polynomial(spec, &mut s), PvStatus::Ok);
        assert!(take(s).ends_with("+ 20 * d1 d2^3 d3"));
        assert_eq!(pv_volume_json(spec, &mut s), PvStatus::Ok);
        let j: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(j["volume"], formula.as_str());
        assert_eq!(j["S"], serde_json::json!([4]));
        pv_volume_spec_free(spec);

        assert_eq!(
            pv_volume_formula(ptr::null(), &mut s),
            PvStatus::NullPointer
        );
        assert_eq!(
            pv_volume_spec_new(5, members.as_ptr(), 1, ptrs.as_ptr(), 2, &mut spec),
            PvStatus::InvalidArgument
        );
    }
}

#[test]
fn involution() {
    unsafe {
        let a = [3u32, 3, 6, 7];
        assert_eq!(pv_verify_involution(a.as_ptr(), 4, 0), PvStatus::Ok);
        assert!(pv_last_error().is_null());
        let a = [1u32; 7];
        assert_eq!(
            pv_verify_involution(a.as_ptr(), 7, 0),
            PvStatus::CapExceeded
        );
        assert_eq!(
            pv_verify_involution(ptr::null(), 3, 0),
            PvStatus::NullPointer
        );
    }
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_is_generated() {
    let header = std::fs::read_to_string(crate_dir().join("include/parkvol.h")).unwrap();
    for name in [
        "pv_volume_spec_new",
        "pv_string_free",
        "PV_STATUS_CAP_EXCEEDED",
        "typedef struct PvUniPoly PvUniPoly",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// The static library next to this test binary, or a fresh build of it when
/// the test target was built without it.
fn static_library() -> PathBuf {
    // target/<profile>/deps/<test binary> -> target/<profile>/libparkvol_ffi.a
    let exe = std::env::current_exe().unwrap();
    let beside = exe
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .join("libparkvol_ffi.a");
    if beside.exists() {
        return beside;
    }
    let target = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("staticlib");
    let status = Command::new(std::env::var("CARGO").unwrap_or_else(|_| "cargo".into()))
        .args([
            "build",
            "--quiet",
            "-p",
            "parkvol-ffi",
            "--lib",
            "--target-dir",
        ])
        .arg(&target)
        .current_dir(crate_dir())
        .status()
        .expect("cargo runs");
    assert!(status.success(), "building the static library failed");
    target.join("debug/libparkvol_ffi.a")
}

#[test]
fn c_program_links_against_static_library() {
    let staticlib = static_library();
    assert!(staticlib.exists(), "{} not built", staticlib.display());
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("pv_smoke");
    let status = Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("C compiler runs");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
