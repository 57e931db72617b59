//! Reference lattice configurations for random walks: periodic chains,
//! grids, and cubes with a growing number of holes, together with their
//! expected link counts and distinct-eigenvalue counts. Hole positions
//! use the 1-based coordinate convention of the source table and are
//! converted to row-major site indices here.

use spinnet_core::network::Network;
use spinnet_core::spectral::cluster;
use spinnet_core::walk::{walk_matrix, walk_spectrum};

use crate::AppError;

/// One reference configuration. `holes` are 1-based coordinate tuples,
/// one tuple per hole, each of the same length as `dims`.
pub struct LatticeCase {
    pub shape: &'static str,
    pub dims: &'static [usize],
    pub holes: &'static [&'static [usize]],
    pub expected_links: usize,
    pub expected_distinct: usize,
}

/// The twelve reference rows. All lattices are periodic.
///
/// The four-hole cube row records 59 links; removing every link
/// incident to those four holes actually leaves 58, because the holes
/// at (3,3,1) and (3,3,2) are themselves linked and that link can only
/// be removed once. The row is kept as published; the self-test
/// reports the discrepancy.
pub const CASES: [LatticeCase; 12] = [
    LatticeCase {
        shape: "1x25",
        dims: &[25],
        holes: &[],
        expected_links: 25,
        expected_distinct: 13,
    },
    LatticeCase {
        shape: "1x25",
        dims: &[25],
        holes: &[&[4]],
        expected_links: 23,
        expected_distinct: 25,
    },
    LatticeCase {
        shape: "1x25",
        dims: &[25],
        holes: &[&[2], &[9]],
        expected_links: 21,
        expected_distinct: 21,
    },
    LatticeCase {
        shape: "1x25",
        dims: &[25],
        holes: &[&[3], &[8], &[13]],
        expected_links: 19,
        expected_distinct: 17,
    },
    LatticeCase {
        shape: "5x5",
        dims: &[5, 5],
        holes: &[],
        expected_links: 50,
        expected_distinct: 6,
    },
    LatticeCase {
        shape: "5x5",
        dims: &[5, 5],
        holes: &[&[1, 4]],
        expected_links: 46,
        expected_distinct: 17,
    },
    LatticeCase {
        shape: "5x5",
        dims: &[5, 5],
        holes: &[&[1, 2], &[2, 4]],
        expected_links: 42,
        expected_distinct: 23,
    },
    LatticeCase {
        shape: "5x5",
        dims: &[5, 5],
        holes: &[&[1, 3], &[2, 3], &[3, 3]],
        expected_links: 40,
        expected_distinct: 21,
    },
    LatticeCase {
        shape: "3x3x3",
        dims: &[3, 3, 3],
        holes: &[],
        expected_links: 81,
        expected_distinct: 4,
    },
    LatticeCase {
        shape: "3x3x3",
        dims: &[3, 3, 3],
        holes: &[&[2, 1, 1]],
        expected_links: 75,
        expected_distinct: 8,
    },
    LatticeCase {
        shape: "3x3x3",
        dims: &[3, 3, 3],
        holes: &[&[1, 2, 1], &[3, 3, 1]],
        expected_links: 69,
        expected_distinct: 15,
    },
    LatticeCase {
        shape: "3x3x3",
        dims: &[3, 3, 3],
        holes: &[&[2, 2, 1], &[3, 3, 1], &[3, 3, 2], &[2, 3, 3]],
        expected_links: 59,
        expected_distinct: 16,
    },
];

/// Convert a 1-based coordinate tuple into the row-major site index
/// used by the chain and grid builders (last axis fastest).
pub fn hole_index(dims: &[usize], tuple: &[usize]) -> Result<usize, AppError> {
    if tuple.len() != dims.len() {
        return Err(AppError::Parse(format!(
            "hole ({}) has {} coordinates, lattice has {} axes",
            join(tuple),
            tuple.len(),
            dims.len()
        )));
    }
    let mut index = 0usize;
    for (k, (&t, &d)) in tuple.iter().zip(dims).enumerate() {
        if t == 0 || t > d {
            return Err(AppError::Parse(format!(
                "hole coordinate {t} out of range 1..={d} on axis {k}"
            )));
        }
        index = index * d + (t - 1);
    }
    Ok(index)
}

fn join(tuple: &[usize]) -> String {
    tuple
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Hole list rendered back in the 1-based convention, in the same
/// syntax the --holes flag accepts.
pub fn holes_label(case: &LatticeCase) -> String {
    if case.holes.is_empty() {
        return "none".into();
    }
    case.holes
        .iter()
        .map(|tuple| {
            if tuple.len() == 1 {
                tuple[0].to_string()
            } else {
                format!("({})", join(tuple))
            }
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// Periodic lattice of the case's shape with its holes punched.
pub fn build_case(case: &LatticeCase) -> Result<Network, AppError> {
    let base = if case.dims.len() == 1 {
        Network::chain(case.dims[0], true)?
    } else {
        Network::grid(case.dims, true)?
    };
    let mut holes = Vec::with_capacity(case.holes.len());
    for tuple in case.holes {
        holes.push(hole_index(case.dims, tuple)?);
    }
    Ok(base.with_holes(holes)?)
}

/// Computed `(links, distinct eigenvalue count)` for one case.
pub fn evaluate_case(case: &LatticeCase, rel_tol: f64) -> Result<(usize, usize), AppError> {
    let net = build_case(case)?;
    let spectrum = walk_spectrum(&walk_matrix(&net))?;
    Ok((net.n_edges(), cluster(&spectrum, rel_tol).distinct_count()))
}
