use spinnet::lattice_table::{build_case, CASES};
use spinnet::netfile;
use spinnet::AppError;
use spinnet_core::network::Network;

fn assert_same_network(a: &Network, b: &Network) {
    assert_eq!(a.n_sites(), b.n_sites());
    assert_eq!(
        a.edges().collect::<Vec<_>>(),
        b.edges().collect::<Vec<_>>()
    );
    assert_eq!(
        a.holes().collect::<Vec<_>>(),
        b.holes().collect::<Vec<_>>()
    );
    assert_eq!(a.label(), b.label());
}

#[test]
fn round_trip_small_ring() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ring.json");
    let net = Network::chain(3, true).unwrap();
    netfile::save(&net, &path).unwrap();
    let loaded = netfile::load(&path).unwrap();
    assert_same_network(&net, &loaded);
}

#[test]
fn round_trip_holed_cube() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cube.json");
    let net = build_case(&CASES[11]).unwrap();
    assert_eq!(net.n_edges(), 58);
    netfile::save(&net, &path).unwrap();
    let loaded = netfile::load(&path).unwrap();
    assert_same_network(&net, &loaded);
}

#[test]
fn save_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let net = build_case(&CASES[6]).unwrap();
    netfile::save(&net, &a).unwrap();
    netfile::save(&net, &b).unwrap();
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

fn parse_error(json: &str) -> String {
    let value: serde_json::Value = serde_json::from_str(json).unwrap();
    match netfile::from_json(&value) {
        Err(AppError::Parse(msg)) => msg,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn missing_field_is_named() {
    let msg = parse_error(r#"{"n_sites": 3, "edges": [[0,1]], "label": "x"}"#);
    assert!(msg.contains("\"holes\""), "message was: {msg}");
}

#[test]
fn wrong_type_is_named() {
    let msg = parse_error(r#"{"n_sites": "three", "edges": [], "holes": [], "label": "x"}"#);
    assert!(msg.contains("\"n_sites\""), "message was: {msg}");
}

#[test]
fn malformed_edge_is_named_with_index() {
    let msg =
        parse_error(r#"{"n_sites": 4, "edges": [[0,1],[1,2,3]], "holes": [], "label": "x"}"#);
    assert!(msg.contains("\"edges[1]\""), "message was: {msg}");
}

#[test]
fn edge_touching_hole_is_rejected() {
    let msg = parse_error(r#"{"n_sites": 3, "edges": [[0,1]], "holes": [1], "label": "x"}"#);
    assert!(msg.contains("hole"), "message was: {msg}");
}

#[test]
fn non_object_top_level_is_rejected() {
    let msg = parse_error("[1,2,3]");
    assert!(msg.contains("object"), "message was: {msg}");
}

#[test]
fn load_rejects_invalid_json_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{ not json").unwrap();
    match netfile::load(&path) {
        Err(AppError::Parse(msg)) => assert!(msg.contains("JSON"), "message was: {msg}"),
        other => panic!("expected a parse error, got {other:?}"),
    }
}
