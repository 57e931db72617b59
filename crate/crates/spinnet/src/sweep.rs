//! Random-network sweeps: how the number of distinct levels falls as
//! links are added. Each trial draws its network seed from a SplitMix64
//! stream over the master seed, so a sweep is one number away from
//! being rerun exactly.

use std::str::FromStr;

use spinnet_core::manybody::{class_operator, heisenberg_hamiltonian, ProductBasis};
use spinnet_core::network::Network;
use spinnet_core::rng::SplitMix64;
use spinnet_core::spectral::{cluster, eigenvalues_symmetric_with_limit};
use spinnet_core::walk::{walk_matrix, walk_spectrum};

use crate::AppError;

/// Which spectrum a sweep (or a single spectrum run) diagonalizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    /// Spin-half exchange Hamiltonian; requires m = 2.
    Heisenberg,
    /// Sum of transpositions over the links, any m.
    Permutation,
    /// Random-walk transition matrix on the network itself.
    Walk,
}

impl FromStr for Model {
    type Err = AppError;

    fn from_str(s: &str) -> Result<Self, AppError> {
        match s {
            "heisenberg" => Ok(Model::Heisenberg),
            "permutation" => Ok(Model::Permutation),
            "walk" => Ok(Model::Walk),
            other => Err(AppError::Parse(format!(
                "unknown model \"{other}\" (expected heisenberg, permutation, or walk)"
            ))),
        }
    }
}

/// Hard limits threaded through every spectrum computation: the
/// product-basis cap and the dense-solve cap.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub basis: usize,
    pub dense: usize,
}

/// Distinct-level count of the chosen model on one network.
pub fn distinct_for_network(
    net: &Network,
    model: Model,
    m: usize,
    rel_tol: f64,
    caps: Caps,
) -> Result<usize, AppError> {
    let spectrum = match model {
        Model::Walk => walk_spectrum(&walk_matrix(net))?,
        Model::Heisenberg | Model::Permutation => {
            let basis = ProductBasis::with_dim_cap(net.n_sites(), m, caps.basis)?;
            let matrix = match model {
                Model::Heisenberg => heisenberg_hamiltonian(net, &basis)?,
                _ => class_operator(net, &basis)?,
            };
            eigenvalues_symmetric_with_limit(&matrix, caps.dense)?
        }
    };
    Ok(cluster(&spectrum, rel_tol).distinct_count())
}

/// One sampled network.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub seed: u64,
    pub links: usize,
    pub distinct: usize,
}

/// Mean distinct count over all trials that landed on one link count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkSummary {
    pub links: usize,
    pub trials: usize,
    pub mean_distinct: f64,
}

/// Sweep `trials` random networks at every probability of the grid.
/// Rows come back in (grid, trial) order; identical inputs give
/// identical rows on every platform.
#[allow(clippy::too_many_arguments)]
pub fn sweep_random(
    n: usize,
    model: Model,
    m: usize,
    p_grid: &[f64],
    trials: usize,
    master_seed: u64,
    rel_tol: f64,
    caps: Caps,
) -> Result<Vec<SweepRow>, AppError> {
    if trials == 0 {
        return Err(AppError::Parse("sweep needs at least one trial".into()));
    }
    let mut rng = SplitMix64::new(master_seed);
    let mut rows = Vec::with_capacity(p_grid.len() * trials);
    for &p in p_grid {
        for _ in 0..trials {
            let seed = rng.next_u64();
            let net = Network::random_network(n, p, seed)?;
            let distinct = distinct_for_network(&net, model, m, rel_tol, caps)?;
            rows.push(SweepRow {
                p,
                seed,
                links: net.n_edges(),
                distinct,
            });
        }
    }
    Ok(rows)
}

/// Group rows by link count and average their distinct counts.
pub fn summarize_by_links(rows: &[SweepRow]) -> Vec<LinkSummary> {
    let mut acc: std::collections::BTreeMap<usize, (usize, usize)> =
        std::collections::BTreeMap::new();
    for row in rows {
        let slot = acc.entry(row.links).or_insert((0, 0));
        slot.0 += 1;
        slot.1 += row.distinct;
    }
    acc.into_iter()
        .map(|(links, (trials, total))| LinkSummary {
            links,
            trials,
            mean_distinct: total as f64 / trials as f64,
        })
        .collect()
}

/// Mean distinct count of the rows taken at exactly the grid value `p`.
pub fn mean_distinct_at(rows: &[SweepRow], p: f64) -> Option<f64> {
    let picked: Vec<usize> = rows
        .iter()
        .filter(|r| r.p == p)
        .map(|r| r.distinct)
        .collect();
    if picked.is_empty() {
        return None;
    }
    Some(picked.iter().sum::<usize>() as f64 / picked.len() as f64)
}
