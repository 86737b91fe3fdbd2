use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use periplectic_ffi::*;

fn cstring(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    periplectic_string_free(s);
    out
}

unsafe fn diagram(json: &str) -> *mut PeriplecticDiagram {
    let mut d = ptr::null_mut();
    assert_eq!(periplectic_diagram_from_json(cstring(json).as_ptr(), &mut d), PeriplecticStatus::Ok);
    d
}

#[test]
fn diagram_round_trip_and_products() {
    unsafe {
        let x = diagram(r#"{"r":2,"s":2,"pairs":[[1,4],[2,3]]}"#);
        let mut s = ptr::null_mut();
        assert_eq!(periplectic_diagram_to_json(x, &mut s), PeriplecticStatus::Ok);
        assert_eq!(take_string(s), r#"{"r":2,"s":2,"pairs":[[1,4],[2,3]]}"#);

        let (mut sign, mut out) = (0i8, ptr::null_mut());
        assert_eq!(periplectic_diagram_multiply(x, x, &mut sign, &mut out), PeriplecticStatus::Ok);
        assert_eq!(sign, 1);
        let mut id = ptr::null_mut();
        periplectic_diagram_identity(2, &mut id);
        let mut same = ptr::null_mut();
        periplectic_diagram_to_json(out, &mut same);
        let mut expected = ptr::null_mut();
        periplectic_diagram_to_json(id, &mut expected);
        assert_eq!(take_string(same), take_string(expected));
        periplectic_diagram_free(out);

        assert_eq!(periplectic_diagram_phi(x, &mut sign, &mut out), PeriplecticStatus::Ok);
        assert_eq!(sign, -1);
        periplectic_diagram_free(out);

        let e = diagram(r#"{"r":2,"s":2,"pairs":[[1,2],[3,4]]}"#);
        assert_eq!(periplectic_diagram_multiply(e, e, &mut sign, &mut out), PeriplecticStatus::Ok);
        assert_eq!(sign, 0);
        assert!(out.is_null());

        let (mut r, mut c) = (0, 0);
        assert_eq!(periplectic_diagram_shape(e, &mut r, &mut c), PeriplecticStatus::Ok);
        assert_eq!((r, c), (2, 2));
        for d in [x, e, id] {
            periplectic_diagram_free(d);
        }
    }
}

#[test]
fn blocks_through_handles() {
    unsafe {
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(periplectic_blocks_classify(3, 5, &mut a), PeriplecticStatus::Ok);
        assert_eq!(periplectic_blocks_oracle(3, 5, &mut b), PeriplecticStatus::Ok);
        let mut count = 0;
        periplectic_blocks_count(a, &mut count);
        assert_eq!(count, 2);
        let mut equal = false;
        assert_eq!(periplectic_blocks_equal(a, b, &mut equal), PeriplecticStatus::Ok);
        assert!(equal);
        let mut s = ptr::null_mut();
        periplectic_blocks_to_json(b, &mut s);
        assert_eq!(take_string(s), r#"{"n":3,"p":5,"provenance":"oracle","blocks":[[[1,1,1],[3],[1]],[[2,1]]]}"#);
        periplectic_blocks_free(a);
        periplectic_blocks_free(b);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut b = ptr::null_mut();
        assert_eq!(periplectic_blocks_classify(3, 2, &mut b), PeriplecticStatus::Unsupported);
        assert!(b.is_null());
        assert_eq!(periplectic_blocks_classify(3, 9, &mut b), PeriplecticStatus::InvalidArgument);
        let message = CStr::from_ptr(periplectic_last_error()).to_str().unwrap();
        assert!(message.contains("not prime"), "{message}");
        assert_eq!(periplectic_blocks_oracle(9, 3, &mut b), PeriplecticStatus::Resource);
        assert_eq!(periplectic_blocks_classify(3, 5, ptr::null_mut()), PeriplecticStatus::NullPointer);

        let mut d = ptr::null_mut();
        assert_eq!(periplectic_diagram_from_json(cstring("{").as_ptr(), &mut d), PeriplecticStatus::Parse);
        assert_eq!(periplectic_diagram_from_json(ptr::null(), &mut d), PeriplecticStatus::NullPointer);

        let mut s = ptr::null_mut();
        assert_eq!(periplectic_p_core(cstring("(4,4,2,1)").as_ptr(), 3, &mut s), PeriplecticStatus::Ok);
        assert_eq!(take_string(s), "(1,1)");
        assert_eq!(periplectic_mullineux(cstring("(2,2)").as_ptr(), 3, &mut s), PeriplecticStatus::Ok);
        assert_eq!(take_string(s), "(1,1,1,1)");
        assert_eq!(periplectic_mullineux(cstring("(3)").as_ptr(), 3, &mut s), PeriplecticStatus::InvalidArgument);
        assert_eq!(periplectic_p_core(cstring("(1,2)").as_ptr(), 3, &mut s), PeriplecticStatus::InvalidArgument);

        let mut dim = 0;
        assert_eq!(periplectic_algebra_dimension(3, &mut dim), PeriplecticStatus::Ok);
        assert_eq!(dim, 15);
        assert_eq!(periplectic_algebra_dimension(40, &mut dim), PeriplecticStatus::Resource);

        let mut failed = 99;
        assert_eq!(periplectic_verify(2, 0, &mut failed), PeriplecticStatus::Ok);
        assert_eq!(failed, 0);
    }
}

/// Compiles a small C program against the generated header and the static
/// library when a C compiler is available.
#[test]
fn c_program_links_against_header() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header_dir = manifest.join("include");
    assert!(header_dir.join("periplectic.h").exists());
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap();
    let lib = profile_dir.join("libperiplectic_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping C link test: no cc or no {}", lib.display());
        return;
    }
    let dir = std::env::temp_dir().join(format!("periplectic-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let source = dir.join("main.c");
    std::fs::write(
        &source,
        r#"
#include <stdio.h>
#include "periplectic.h"
int main(void) {
    PeriplecticBlocks *b = NULL;
    size_t count = 0;
    if (periplectic_blocks_classify(5, 7, &b) != PERIPLECTIC_STATUS_OK) return 1;
    periplectic_blocks_count(b, &count);
    periplectic_blocks_free(b);
    if (periplectic_blocks_classify(5, 2, &b) != PERIPLECTIC_STATUS_UNSUPPORTED) return 2;
    printf("%zu %s\n", count, periplectic_last_error());
    return 0;
}
"#,
    )
    .unwrap();
    let binary = dir.join("main");
    let status = Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(&header_dir)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .status()
        .unwrap();
    assert!(status.success());
    let output = Command::new(&binary).output().unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.starts_with("2 unsupported"), "{stdout}");
    std::fs::remove_dir_all(&dir).ok();
}
