use serde_json::json;
use spinnet::csvout;
use spinnet_core::grouptheory::complete_graph_levels;
use spinnet_core::manybody::{heisenberg_hamiltonian, ProductBasis};
use spinnet_core::network::Network;
use spinnet_core::spectral::{cluster, Spectrum, DEFAULT_REL_TOL};
use spinnet_core::walk::walk_matrix;

#[test]
fn sig17_prints_17_significant_digits() {
    assert_eq!(csvout::sig17(0.5), "5.0000000000000000e-1");
    assert_eq!(csvout::sig17(-0.25), "-2.5000000000000000e-1");
    assert_eq!(csvout::sig17(1640.25), "1.6402500000000000e3");
    assert_eq!(csvout::sig17(0.0), "0.0000000000000000e0");
}

#[test]
fn sig17_round_trips_exactly() {
    for x in [0.1, 1.0 / 3.0, -2.718281828459045, 1e-300, 6.02e23] {
        let back: f64 = csvout::sig17(x).parse().unwrap();
        assert_eq!(back, x, "value {x} did not round-trip");
    }
}

#[test]
fn csv_field_quotes_only_when_needed() {
    assert_eq!(csvout::csv_field("none"), "none");
    assert_eq!(csvout::csv_field("(1,2);(2,4)"), "\"(1,2);(2,4)\"");
    assert_eq!(csvout::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

#[test]
fn spectrum_csv_golden() {
    let spectrum = Spectrum::from_unsorted(vec![1.0, -1.0]);
    let text = csvout::spectrum_csv(&json!({"k": 1}), &spectrum);
    let expected = format!(
        "# spinnet {}\n# config {{\"k\":1}}\nindex,eigenvalue\n0,-1.0000000000000000e0\n1,1.0000000000000000e0\n",
        env!("CARGO_PKG_VERSION")
    );
    assert_eq!(text, expected);
}

#[test]
fn levels_csv_multiplicities() {
    let spectrum = Spectrum::from_unsorted(vec![2.0, 1.0, 1.0 + 1e-12]);
    let levels = cluster(&spectrum, DEFAULT_REL_TOL);
    let text = csvout::levels_csv(&json!({}), &levels);
    let body: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(body.len(), 3);
    assert_eq!(body[0], "value,multiplicity");
    assert!(body[1].ends_with(",2"));
    assert!(body[2].ends_with(",1"));
}

#[test]
fn closed_form_csv_serializes_partitions_with_pipes() {
    let levels = complete_graph_levels(3, 2).unwrap();
    let text = csvout::closed_form_csv(&json!({}), &levels);
    let body: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(
        body,
        vec![
            "partition,energy,degeneracy",
            "3|0,3.0000000000000000e0,4",
            "2|1,0.0000000000000000e0,4",
        ]
    );
}

#[test]
fn matrix_coordinate_text_upper_triangle_sorted() {
    let net = Network::chain(2, false).unwrap();
    let basis = ProductBasis::new(2, 2).unwrap();
    let matrix = heisenberg_hamiltonian(&net, &basis).unwrap();
    let text = csvout::matrix_coordinate_text(&matrix, 2, 2, "pair");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "4 2 2 pair");
    assert_eq!(
        &lines[1..],
        &[
            "0 0 1.2500000000000000e-1",
            "1 1 -1.2500000000000000e-1",
            "1 2 2.5000000000000000e-1",
            "2 2 -1.2500000000000000e-1",
            "3 3 1.2500000000000000e-1",
        ]
    );
}

#[test]
fn walk_matrix_csv_has_dimension_header_and_dense_rows() {
    let net = Network::chain(3, false).unwrap();
    let text = csvout::walk_matrix_csv(&json!({}), &walk_matrix(&net));
    let lines: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(lines[0], "dimension,3");
    assert_eq!(
        lines[1],
        "0.0000000000000000e0,1.0000000000000000e0,0.0000000000000000e0"
    );
    assert_eq!(
        lines[2],
        "5.0000000000000000e-1,0.0000000000000000e0,5.0000000000000000e-1"
    );
    assert_eq!(
        lines[3],
        "0.0000000000000000e0,1.0000000000000000e0,0.0000000000000000e0"
    );
}

#[test]
fn json_document_embeds_version_and_config() {
    let text = csvout::json_document(&json!({"n": 3}), json!([1, 2]));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["tool"], "spinnet");
    assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(doc["config"]["n"], 3);
    assert_eq!(doc["data"], json!([1, 2]));
}
