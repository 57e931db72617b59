//! Text renderings of spectra, level sets, closed forms, sweeps, and
//! matrices. Every file starts with comment lines carrying the tool
//! version and the fully resolved run configuration, and floats are
//! printed with 17 significant digits, so re-running a configuration
//! reproduces the output byte for byte.

use serde_json::Value;
use spinnet_core::grouptheory::ClosedFormLevel;
use spinnet_core::manybody::ManyBodyMatrix;
use spinnet_core::spectral::{LevelSet, Spectrum};
use spinnet_core::walk::WalkMatrix;

use crate::sweep::{LinkSummary, SweepRow};

/// 17 significant digits, enough to reconstruct any f64 exactly.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Quote a CSV field when it contains a delimiter, quote, or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Comment header shared by all CSV outputs.
pub fn csv_header(config: &Value) -> String {
    format!(
        "# spinnet {}\n# config {}\n",
        env!("CARGO_PKG_VERSION"),
        config
    )
}

/// Wrap a data payload in a JSON document carrying the same metadata
/// as the CSV comment header.
pub fn json_document(config: &Value, data: Value) -> String {
    let doc = serde_json::json!({
        "tool": "spinnet",
        "version": env!("CARGO_PKG_VERSION"),
        "config": config,
        "data": data,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("document is static json");
    text.push('\n');
    text
}

pub fn spectrum_csv(config: &Value, spectrum: &Spectrum) -> String {
    let mut out = csv_header(config);
    out.push_str("index,eigenvalue\n");
    for (k, value) in spectrum.eigenvalues().iter().enumerate() {
        out.push_str(&format!("{k},{}\n", sig17(*value)));
    }
    out
}

pub fn levels_csv(config: &Value, levels: &LevelSet) -> String {
    let mut out = csv_header(config);
    out.push_str("value,multiplicity\n");
    for level in levels.levels() {
        out.push_str(&format!("{},{}\n", sig17(level.value), level.multiplicity));
    }
    out
}

pub fn spectrum_json(config: &Value, spectrum: &Spectrum, levels: &LevelSet) -> String {
    let data = serde_json::json!({
        "eigenvalues": spectrum.eigenvalues(),
        "levels": levels
            .levels()
            .iter()
            .map(|l| serde_json::json!({"value": l.value, "multiplicity": l.multiplicity}))
            .collect::<Vec<_>>(),
        "rel_tol": levels.rel_tol(),
        "min_split_gap": levels.min_split_gap(),
    });
    json_document(config, data)
}

/// Closed-form levels, partitions serialized as `a1|a2|...|am`.
pub fn closed_form_csv(config: &Value, levels: &[ClosedFormLevel]) -> String {
    let mut out = csv_header(config);
    out.push_str("partition,energy,degeneracy\n");
    for level in levels {
        out.push_str(&format!(
            "{},{},{}\n",
            level.partition,
            sig17(level.energy),
            level.degeneracy
        ));
    }
    out
}

pub fn closed_form_json(config: &Value, levels: &[ClosedFormLevel]) -> String {
    let data = levels
        .iter()
        .map(|l| {
            serde_json::json!({
                "partition": l.partition.to_string(),
                "energy": l.energy,
                "degeneracy": l.degeneracy.to_string(),
            })
        })
        .collect::<Vec<_>>();
    json_document(config, Value::Array(data))
}

/// Rows are `(m, n, partition count, average degeneracy)`.
pub fn partition_table_csv(config: &Value, rows: &[(usize, usize, String, f64)]) -> String {
    let mut out = csv_header(config);
    out.push_str("m,n,partitions,average_degeneracy\n");
    for (m, n, count, avg) in rows {
        out.push_str(&format!("{m},{n},{count},{}\n", sig17(*avg)));
    }
    out
}

/// Per-trial rows followed by a per-link-count summary block.
pub fn sweep_csv(config: &Value, rows: &[SweepRow], summaries: &[LinkSummary]) -> String {
    let mut out = csv_header(config);
    out.push_str("p,seed,links,distinct\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            sig17(row.p),
            row.seed,
            row.links,
            row.distinct
        ));
    }
    out.push_str("# summary per link count\n");
    out.push_str("links,trials,mean_distinct\n");
    for s in summaries {
        out.push_str(&format!(
            "{},{},{}\n",
            s.links,
            s.trials,
            sig17(s.mean_distinct)
        ));
    }
    out
}

/// Dense walk matrix, one row per line, after a dimension header row.
pub fn walk_matrix_csv(config: &Value, matrix: &WalkMatrix) -> String {
    let n = matrix.dimension();
    let dense = matrix.to_dense();
    let mut out = csv_header(config);
    out.push_str(&format!("dimension,{n}\n"));
    for r in 0..n {
        let row: Vec<String> = (0..n).map(|c| sig17(dense[r * n + c])).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Coordinate text dump of a symmetric matrix: header `dim N m label`,
/// then one `row col value` triple per line, upper triangle only,
/// sorted.
pub fn matrix_coordinate_text(
    matrix: &ManyBodyMatrix,
    n_particles: usize,
    local_dim: usize,
    label: &str,
) -> String {
    let mut out = format!(
        "{} {} {} {}\n",
        matrix.dimension(),
        n_particles,
        local_dim,
        label
    );
    for ((r, c), v) in matrix.entries() {
        if r <= c {
            out.push_str(&format!("{r} {c} {}\n", sig17(v)));
        }
    }
    out
}
