use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use rainbow_ffi::*;

fn last_error() -> Option<String> {
    let p = rb_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

#[test]
fn sample_query_and_free() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(rb_graph_sample(4, 5, 1.0, 3, &mut g), RbStatus::Ok);
        assert_eq!(rb_graph_left_size(g), 4);
        assert_eq!(rb_graph_right_size(g), 5);
        assert_eq!(rb_graph_edge_count(g), 20);

        let (mut u, mut v) = (0usize, 0usize);
        assert_eq!(rb_graph_edge(g, 6, &mut u, &mut v), RbStatus::Ok);
        assert_eq!((u, v), (1, 1));
        assert_eq!(rb_graph_edge(g, 20, &mut u, &mut v), RbStatus::InvalidArgument);

        let (mut d, mut connected) = (0usize, false);
        assert_eq!(rb_graph_diameter(g, &mut d, &mut connected), RbStatus::Ok);
        assert!(connected);
        assert_eq!(d, 2);
        rb_graph_free(g);
    }
}

#[test]
fn edges_and_text_round_trip() {
    unsafe {
        let us = [0usize, 1, 1];
        let vs = [0usize, 0, 1];
        let mut g = ptr::null_mut();
        assert_eq!(rb_graph_from_edges(2, 2, us.as_ptr(), vs.as_ptr(), 3, &mut g), RbStatus::Ok);

        let mut text = ptr::null_mut();
        assert_eq!(rb_graph_to_text(g, &mut text), RbStatus::Ok);
        let owned = CStr::from_ptr(text).to_str().unwrap().to_string();
        assert_eq!(owned, "2 2\n0 0\n1 0\n1 1\n");

        let mut h = ptr::null_mut();
        let c = CString::new(owned).unwrap();
        assert_eq!(rb_graph_from_text(c.as_ptr(), &mut h), RbStatus::Ok);
        assert_eq!(rb_graph_edge_count(h), 3);
        rb_string_free(text);
        rb_graph_free(h);

        let (mut d, mut connected) = (0usize, false);
        assert_eq!(rb_graph_diameter(g, &mut d, &mut connected), RbStatus::Ok);
        assert_eq!((d, connected), (3, true));
        rb_graph_free(g);
    }
}

#[test]
fn rainbow_check_through_handles() {
    unsafe {
        let us = [0usize, 1, 1];
        let vs = [0usize, 0, 1];
        let mut g = ptr::null_mut();
        assert_eq!(rb_graph_from_edges(2, 2, us.as_ptr(), vs.as_ptr(), 3, &mut g), RbStatus::Ok);

        let mut c = ptr::null_mut();
        let distinct = [1u32, 2, 3];
        assert_eq!(rb_coloring_from_colors(g, 3, distinct.as_ptr(), 3, &mut c), RbStatus::Ok);
        let mut ok = false;
        assert_eq!(rb_is_rainbow_k_connected(g, c, 1, 0, &mut ok), RbStatus::Ok);
        assert!(ok);
        let mut color = 0u32;
        assert_eq!(rb_coloring_color(c, 2, &mut color), RbStatus::Ok);
        assert_eq!(color, 3);
        rb_coloring_free(c);

        let repeated = [1u32, 2, 1];
        assert_eq!(rb_coloring_from_colors(g, 2, repeated.as_ptr(), 3, &mut c), RbStatus::Ok);
        assert_eq!(rb_is_rainbow_k_connected(g, c, 1, 0, &mut ok), RbStatus::Ok);
        assert!(!ok);
        rb_coloring_free(c);

        let mut random = ptr::null_mut();
        assert_eq!(rb_coloring_random(g, 4, 9, &mut random), RbStatus::Ok);
        rb_coloring_free(random);
        rb_graph_free(g);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(rb_graph_sample(3, 3, 1.5, 0, &mut g), RbStatus::InvalidArgument);
        assert!(g.is_null());
        assert!(last_error().unwrap().contains("1.5"));

        assert_eq!(rb_graph_sample(3, 3, 0.5, 0, ptr::null_mut()), RbStatus::NullPointer);
        assert!(last_error().unwrap().contains("null"));

        let us = [0usize, 0];
        let vs = [1usize, 1];
        assert_eq!(rb_graph_from_edges(2, 2, us.as_ptr(), vs.as_ptr(), 2, &mut g), RbStatus::InvalidArgument);
        assert_eq!(rb_graph_from_edges(2, 2, ptr::null(), vs.as_ptr(), 2, &mut g), RbStatus::NullPointer);

        let mut p = 0.0;
        assert_eq!(rb_p1(10, 10, 2, &mut p), RbStatus::InvalidArgument);
        assert!(last_error().unwrap().contains("parity"));
        assert_eq!(rb_p1(100, 100, 3, &mut p), RbStatus::Ok);
        assert!(last_error().is_none());
        assert!((p - 0.09729).abs() < 1e-4);
        assert_eq!(rb_threshold(400, 400, 2, &mut p), RbStatus::Ok);
        let mut q = 0.0;
        assert_eq!(rb_p2(400, 400, 2, &mut q), RbStatus::Ok);
        assert_eq!(p, q);

        let mut ok = false;
        assert_eq!(rb_is_rainbow_k_connected(ptr::null(), ptr::null(), 1, 3, &mut ok), RbStatus::NullPointer);

        let text = CString::new("2 2\n0 5\n").unwrap();
        assert_eq!(rb_graph_from_text(text.as_ptr(), &mut g), RbStatus::Parse);
    }
}

#[test]
fn coloring_must_match_graph() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(rb_graph_sample(2, 2, 1.0, 0, &mut g), RbStatus::Ok);
        let mut c = ptr::null_mut();
        let colors = [1u32, 2];
        assert_eq!(rb_coloring_from_colors(g, 2, colors.as_ptr(), 2, &mut c), RbStatus::ColoringMismatch);
        let colors = [1u32, 2, 3, 9];
        assert_eq!(rb_coloring_from_colors(g, 3, colors.as_ptr(), 4, &mut c), RbStatus::ColoringMismatch);
        assert_eq!(rb_coloring_random(g, 0, 0, &mut c), RbStatus::InvalidArgument);
        rb_graph_free(g);
        rb_graph_free(ptr::null_mut());
        rb_coloring_free(ptr::null_mut());
        rb_string_free(ptr::null_mut());
    }
}

/// Compiles and runs a C program against the generated header and the
/// static library, when a C compiler and the archive are available.
#[test]
fn c_program_links_against_header() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let target = std::env::var_os("CARGO_TARGET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| manifest.join("../../target"));
    let profile_dir = std::env::current_exe()
        .ok()
        .and_then(|exe| exe.parent()?.parent().map(PathBuf::from))
        .unwrap_or_else(|| target.join("debug"));
    let archive = profile_dir.join("librainbow_ffi.a");
    if !archive.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or {} missing", archive.display());
        return;
    }
    let exe = std::env::temp_dir().join(format!("rainbow_ffi_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("run cc");
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().expect("run smoke binary");
    let _ = std::fs::remove_file(&exe);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
