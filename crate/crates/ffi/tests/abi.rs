use std::ffi::{CStr, CString};
use std::ptr;

use lrhorn_ffi::*;

fn last_error() -> String {
    let p = lrhorn_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn graph_lifecycle_and_report() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(lrhorn_graph_new(2, 2, &mut g), LrhornStatus::Ok);
        for (x, y) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert_eq!(lrhorn_graph_add_edge(g, x, y), LrhornStatus::Ok);
        }
        assert_eq!(
            lrhorn_graph_add_edge(g, 2, 0),
            LrhornStatus::InvalidArgument
        );
        assert!(!last_error().is_empty());
        let mut count = 0;
        assert_eq!(lrhorn_graph_edge_count(g, &mut count), LrhornStatus::Ok);
        assert_eq!(count, 4);

        let mut r = ptr::null_mut();
        assert_eq!(lrhorn_analyze(g, &mut r), LrhornStatus::Ok);
        let mut integral = false;
        assert_eq!(
            lrhorn_report_is_integral(r, &mut integral),
            LrhornStatus::Ok
        );
        assert!(integral);
        let mut violations = usize::MAX;
        assert_eq!(
            lrhorn_report_violation_count(r, &mut violations),
            LrhornStatus::Ok
        );
        assert_eq!(violations, 0);
        let mut json = ptr::null_mut();
        assert_eq!(lrhorn_report_to_json(r, &mut json), LrhornStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_string();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["gamma"], serde_json::json!([4, 2, 2]));
        lrhorn_string_free(json);
        lrhorn_report_free(r);

        let mut verdict = LrhornRamanujan::default();
        assert_eq!(
            lrhorn_line_graph_ramanujan(g, &mut verdict),
            LrhornStatus::Ok
        );
        assert_eq!(verdict.degree, 2);
        assert!(verdict.exact);
        lrhorn_graph_free(g);
    }
}

#[test]
fn parse_and_preconditions() {
    unsafe {
        let text = CString::new("X 2\nY 2\n0 0\n1 1\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(lrhorn_graph_parse(text.as_ptr(), &mut g), LrhornStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(lrhorn_analyze(g, &mut r), LrhornStatus::Precondition);
        assert!(r.is_null());
        assert!(last_error().contains("not connected"));
        lrhorn_graph_free(g);

        let bad = CString::new("X 1\nY nope\n").unwrap();
        let mut g = ptr::null_mut();
        assert_ne!(lrhorn_graph_parse(bad.as_ptr(), &mut g), LrhornStatus::Ok);
        assert!(g.is_null());
        assert_eq!(
            lrhorn_graph_parse(ptr::null(), &mut g),
            LrhornStatus::NullPointer
        );
        assert_eq!(
            lrhorn_graph_new(1, 1, ptr::null_mut()),
            LrhornStatus::NullPointer
        );
        lrhorn_graph_free(ptr::null_mut());
        lrhorn_report_free(ptr::null_mut());
        lrhorn_candidate_set_free(ptr::null_mut());
        lrhorn_string_free(ptr::null_mut());
    }
}

#[test]
fn lr_and_horn() {
    unsafe {
        let (a, b, g) = ([2u64, 1], [2u64, 1], [3u64, 2, 1]);
        let mut c = 0;
        let st = lrhorn_lr_coefficient(a.as_ptr(), 2, b.as_ptr(), 2, g.as_ptr(), 3, &mut c);
        assert_eq!(st, LrhornStatus::Ok);
        assert_eq!(c, 2);
        let mut pos = true;
        let six = [6u64];
        let st = lrhorn_lr_positive(a.as_ptr(), 2, b.as_ptr(), 2, six.as_ptr(), 1, &mut pos);
        assert_eq!(st, LrhornStatus::Ok);
        assert!(!pos);
        // Empty partitions may be passed as NULL with length 0.
        let st = lrhorn_lr_coefficient(ptr::null(), 0, a.as_ptr(), 2, a.as_ptr(), 2, &mut c);
        assert_eq!(st, LrhornStatus::Ok);
        assert_eq!(c, 1);
        assert_eq!(
            lrhorn_lr_coefficient(ptr::null(), 1, a.as_ptr(), 2, a.as_ptr(), 2, &mut c),
            LrhornStatus::NullPointer
        );

        let mut ok = false;
        let st = lrhorn_horn_compatible_partitions(
            a.as_ptr(),
            2,
            b.as_ptr(),
            2,
            g.as_ptr(),
            3,
            3,
            &mut ok,
        );
        assert_eq!(st, LrhornStatus::Ok);
        assert!(ok);
        let st = lrhorn_horn_compatible_partitions(
            a.as_ptr(),
            2,
            b.as_ptr(),
            2,
            g.as_ptr(),
            3,
            2,
            &mut ok,
        );
        assert_eq!(st, LrhornStatus::InvalidArgument);

        let (x, y, z) = ([1.0f64, -1.0], [0.5, 0.5], [1.5, -0.5]);
        let st = lrhorn_horn_compatible_f64(x.as_ptr(), y.as_ptr(), z.as_ptr(), 2, 1e-9, &mut ok);
        assert_eq!(st, LrhornStatus::Ok);
        assert!(ok);
        let z = [3.0f64, -2.0];
        lrhorn_horn_compatible_f64(x.as_ptr(), y.as_ptr(), z.as_ptr(), 2, 1e-9, &mut ok);
        assert!(!ok);
        let nan = [f64::NAN, 0.0];
        let st = lrhorn_horn_compatible_f64(nan.as_ptr(), y.as_ptr(), z.as_ptr(), 2, 1e-9, &mut ok);
        assert_eq!(st, LrhornStatus::InvalidArgument);
    }
}

#[test]
fn candidate_sets() {
    unsafe {
        let (a, b) = ([3u64], [1u64, 1, 1]);
        let mut set = ptr::null_mut();
        assert_eq!(
            lrhorn_enumerate_p(a.as_ptr(), 1, b.as_ptr(), 3, &mut set),
            LrhornStatus::Ok
        );
        let mut len = 0;
        assert_eq!(lrhorn_candidate_set_len(set, &mut len), LrhornStatus::Ok);
        assert_eq!(len, 1);
        let mut buf = [0u64; 2];
        let mut parts = 0;
        let st = lrhorn_candidate_set_member(set, 0, buf.as_mut_ptr(), 2, &mut parts);
        assert_eq!(st, LrhornStatus::InvalidArgument);
        assert_eq!(parts, 3);
        let mut buf = [0u64; 4];
        let st = lrhorn_candidate_set_member(set, 0, buf.as_mut_ptr(), 4, &mut parts);
        assert_eq!(st, LrhornStatus::Ok);
        assert_eq!(&buf[..parts], &[4, 1, 1]);
        let st = lrhorn_candidate_set_member(set, 1, buf.as_mut_ptr(), 4, &mut parts);
        assert_eq!(st, LrhornStatus::InvalidArgument);
        lrhorn_candidate_set_free(set);

        let mut set = ptr::null_mut();
        let st = lrhorn_enumerate_p(a.as_ptr(), 1, b.as_ptr(), 2, &mut set);
        assert_eq!(st, LrhornStatus::InvalidArgument);
        assert!(last_error().contains("differs"));
    }
}

#[test]
fn errors_are_per_thread() {
    unsafe {
        lrhorn_graph_new(1, 1, ptr::null_mut());
    }
    let main_msg = last_error();
    std::thread::spawn(|| assert!(lrhorn_last_error_message().is_null()))
        .join()
        .unwrap();
    assert_eq!(last_error(), main_msg);
    let v = unsafe { CStr::from_ptr(lrhorn_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
