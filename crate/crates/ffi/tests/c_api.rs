use std::ffi::{c_char, CStr, CString};
use std::ptr;

use matchext_ffi::*;

fn graph6(text: &str) -> *mut MxGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { mx_graph_from_graph6(c.as_ptr(), &mut g) }, MxStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    let p = mx_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { mx_string_free(p) };
    s
}

#[test]
fn petersen_parameters() {
    let g = graph6("IheA@GUAo");
    unsafe {
        assert_eq!(mx_graph_order(g), 10);
        let mut t = MxRational { num: 0, den: 0, infinite: false };
        assert_eq!(mx_toughness(g, &mut t), MxStatus::Ok);
        assert_eq!((t.num, t.den, t.infinite), (4, 3, false));
        let mut kappa = 0;
        assert_eq!(mx_vertex_connectivity(g, &mut kappa), MxStatus::Ok);
        assert_eq!(kappa, 3);
        let mut girth = 0;
        assert_eq!(mx_girth(g, &mut girth), MxStatus::Ok);
        assert_eq!(girth, 5);
        let mut pm = false;
        assert_eq!(mx_has_perfect_matching(g, &mut pm), MxStatus::Ok);
        assert!(pm);
        let mut out = ptr::null_mut();
        assert_eq!(mx_graph_to_graph6(g, &mut out), MxStatus::Ok);
        assert_eq!(take_string(out), "IheA@GUAo");
        mx_graph_free(g);
    }
}

#[test]
fn edges_and_extendability_certificate() {
    let edges: Vec<usize> = (0..6).flat_map(|i| [i, (i + 1) % 6]).collect();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(mx_graph_from_edges(6, edges.as_ptr(), 6, &mut g), MxStatus::Ok);
        let mut holds = true;
        let mut cert = ptr::null_mut();
        assert_eq!(mx_is_k_extendable(g, 2, &mut holds, &mut cert), MxStatus::Ok);
        assert!(!holds);
        let json: serde_json::Value = serde_json::from_str(&take_string(cert)).unwrap();
        assert_eq!(json["required_matching"], serde_json::json!([[0, 1], [3, 4]]));

        assert_eq!(mx_is_k_extendable(g, 1, &mut holds, &mut cert), MxStatus::Ok);
        assert!(holds && cert.is_null());
        assert_eq!(mx_is_emn_extendable(g, 1, 1, false, &mut holds, ptr::null_mut()), MxStatus::Ok);
        assert!(!holds);
        assert_eq!(mx_is_n_factor_critical(g, 2, &mut holds, ptr::null_mut()), MxStatus::Ok);
        assert!(!holds);
        assert_eq!(mx_is_nk_extendable(g, 0, 1, &mut holds, ptr::null_mut()), MxStatus::Ok);
        assert!(holds);
        let mut b = MxRational { num: 0, den: 0, infinite: false };
        assert_eq!(mx_binding_number(g, &mut b), MxStatus::Ok);
        assert_eq!((b.num, b.den), (1, 1));
        mx_graph_free(g);
    }
}

#[test]
fn error_codes_and_messages() {
    let bad = CString::new("C~~").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(mx_graph_from_graph6(bad.as_ptr(), &mut g), MxStatus::ParseError);
        assert!(g.is_null());
        assert!(last_error().contains("byte"));
        assert_eq!(mx_graph_from_graph6(ptr::null(), &mut g), MxStatus::NullPointer);
        let looped = [0usize, 0];
        assert_eq!(mx_graph_from_edges(2, looped.as_ptr(), 1, &mut g), MxStatus::InvalidArgument);
        assert_eq!(mx_graph_from_edges(3, ptr::null(), 1, &mut g), MxStatus::NullPointer);

        let k1 = graph6("@");
        let mut r = MxRational { num: 0, den: 0, infinite: false };
        assert_eq!(mx_binding_number(k1, &mut r), MxStatus::Undefined);
        let mut holds = false;
        assert_eq!(mx_is_k_extendable(k1, 1, &mut holds, ptr::null_mut()), MxStatus::InvalidArgument);
        mx_graph_free(k1);

        let k4 = graph6("C~");
        assert_eq!(mx_toughness(k4, &mut r), MxStatus::Ok);
        assert!(r.infinite);
        assert!(mx_last_error().is_null());
        assert_eq!(mx_toughness(k4, ptr::null_mut()), MxStatus::NullPointer);
        mx_graph_free(k4);
        assert_eq!(mx_graph_order(ptr::null()), 0);
        mx_graph_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/matchext.h");
    for name in [
        "mx_last_error",
        "mx_graph_from_graph6",
        "mx_graph_from_edges",
        "mx_graph_free",
        "mx_graph_order",
        "mx_graph_to_graph6",
        "mx_string_free",
        "mx_binding_number",
        "mx_toughness",
        "mx_vertex_connectivity",
        "mx_girth",
        "mx_has_perfect_matching",
        "mx_is_k_extendable",
        "mx_is_n_factor_critical",
        "mx_is_nk_extendable",
        "mx_is_emn_extendable",
        "typedef struct MxGraph MxGraph",
        "MX_STATUS_RESOURCE_LIMIT = 3",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
