//! Network files: one JSON object
//! `{"n_sites": n, "edges": [[i,j], ...], "holes": [h, ...], "label": s}`
//! with `i < j` and both lists sorted. Loading re-validates every
//! network invariant, so a file whose edge list touches a hole is
//! rejected, not repaired.

use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};
use spinnet_core::network::Network;

use crate::AppError;

/// Structural JSON form of a network. Edge pairs come out of the set
/// already normalized to `i < j` and sorted.
pub fn to_json(net: &Network) -> Value {
    json!({
        "n_sites": net.n_sites(),
        "edges": net.edges().map(|(i, j)| json!([i, j])).collect::<Vec<_>>(),
        "holes": net.holes().collect::<Vec<_>>(),
        "label": net.label(),
    })
}

pub fn save(net: &Network, path: &Path) -> Result<(), AppError> {
    let mut text = serde_json::to_string(&to_json(net)).expect("network json is static");
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

pub fn load(path: &Path) -> Result<Network, AppError> {
    let text = fs::read_to_string(path)?;
    let root: Value = serde_json::from_str(&text)
        .map_err(|e| AppError::Parse(format!("network file: not valid JSON: {e}")))?;
    from_json(&root)
}

fn bad_field(name: &str, want: &str) -> AppError {
    AppError::Parse(format!("network file: field \"{name}\" must be {want}"))
}

fn get<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value, AppError> {
    obj.get(name)
        .ok_or_else(|| AppError::Parse(format!("network file: missing field \"{name}\"")))
}

fn as_usize(value: &Value, name: &str) -> Result<usize, AppError> {
    value
        .as_u64()
        .and_then(|u| usize::try_from(u).ok())
        .ok_or_else(|| bad_field(name, "a nonnegative integer"))
}

/// Parse and validate a network from its JSON form. Errors name the
/// offending field.
pub fn from_json(root: &Value) -> Result<Network, AppError> {
    let obj = root
        .as_object()
        .ok_or_else(|| AppError::Parse("network file: top level must be a JSON object".into()))?;

    let n_sites = as_usize(get(obj, "n_sites")?, "n_sites")?;

    let edges_value = get(obj, "edges")?
        .as_array()
        .ok_or_else(|| bad_field("edges", "an array of [i, j] pairs"))?;
    let mut edges = Vec::with_capacity(edges_value.len());
    for (k, entry) in edges_value.iter().enumerate() {
        let name = format!("edges[{k}]");
        let pair = entry
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| bad_field(&name, "a two-element array"))?;
        let i = as_usize(&pair[0], &name)?;
        let j = as_usize(&pair[1], &name)?;
        edges.push((i, j));
    }

    let holes_value = get(obj, "holes")?
        .as_array()
        .ok_or_else(|| bad_field("holes", "an array of site indices"))?;
    let mut holes = Vec::with_capacity(holes_value.len());
    for (k, entry) in holes_value.iter().enumerate() {
        holes.push(as_usize(entry, &format!("holes[{k}]"))?);
    }

    let label = get(obj, "label")?
        .as_str()
        .ok_or_else(|| bad_field("label", "a string"))?;

    Network::new(n_sites, edges, holes, label)
        .map_err(|e| AppError::Parse(format!("network file: {e}")))
}
