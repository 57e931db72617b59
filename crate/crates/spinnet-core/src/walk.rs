//! Random-walk transition matrices on networks with holes.
//!
//! Row r of the walk matrix sends probability 1/deg(r) to each live
//! neighbor of r. Hole rows and columns are zero: a hole absorbs
//! nothing and emits nothing, it is simply outside the dynamics. The
//! entries are exact unit fractions by construction, so rows of live
//! sites sum to one as rationals.
//!
//! The matrix is not symmetric when degrees differ, but it is similar
//! to a symmetric one: conjugating by sqrt(deg) turns entry (r, c) into
//! 1/sqrt(deg(r) deg(c)) on the live block. The spectrum is therefore
//! real and lies in [-1, 1]; [`walk_spectrum`] diagonalizes the
//! symmetrized live block and appends one exact zero per dead site
//! (holes and isolated sites), which is the whole spectrum of the
//! original matrix.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::network::Network;
use crate::spectral::{eigenvalues_dense_symmetric, Spectrum, SpectralError, DEFAULT_DENSE_LIMIT};

/// Transition matrix of the uniform walk on a network.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkMatrix {
    n_sites: usize,
    /// Sorted live neighbors per site; empty for holes.
    neighbors: Vec<Vec<usize>>,
    holes: BTreeSet<usize>,
}

/// Build the walk matrix of a network. Cannot fail: the network already
/// guarantees that no edge touches a hole.
pub fn walk_matrix(net: &Network) -> WalkMatrix {
    WalkMatrix {
        n_sites: net.n_sites(),
        neighbors: net.adjacency(),
        holes: net.holes().collect(),
    }
}

impl WalkMatrix {
    pub fn dimension(&self) -> usize {
        self.n_sites
    }

    pub fn degree(&self, site: usize) -> usize {
        self.neighbors[site].len()
    }

    pub fn is_hole(&self, site: usize) -> bool {
        self.holes.contains(&site)
    }

    pub fn holes(&self) -> impl Iterator<Item = usize> + '_ {
        self.holes.iter().copied()
    }

    pub fn neighbors(&self, site: usize) -> &[usize] {
        &self.neighbors[site]
    }

    /// Transition probability from `from` to `to` as an exact fraction
    /// (numerator, denominator), or None when it is zero.
    pub fn transition(&self, from: usize, to: usize) -> Option<(u64, u64)> {
        if self.neighbors[from].binary_search(&to).is_ok() {
            Some((1, self.neighbors[from].len() as u64))
        } else {
            None
        }
    }

    /// Transition probability as a float.
    pub fn prob(&self, from: usize, to: usize) -> f64 {
        match self.transition(from, to) {
            Some((num, den)) => num as f64 / den as f64,
            None => 0.0,
        }
    }

    /// Live sites with no live neighbors. Their rows are zero like hole
    /// rows, which is worth knowing when interpreting zero eigenvalues.
    pub fn isolated_live_sites(&self) -> Vec<usize> {
        (0..self.n_sites)
            .filter(|&s| !self.is_hole(s) && self.neighbors[s].is_empty())
            .collect()
    }

    /// Dense row-major copy of the full matrix, holes included.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.n_sites;
        let mut dense = vec![0.0; n * n];
        for r in 0..n {
            let deg = self.neighbors[r].len();
            for &c in &self.neighbors[r] {
                dense[r * n + c] = 1.0 / deg as f64;
            }
        }
        dense
    }
}

/// Full spectrum of the walk matrix, sorted ascending.
///
/// Diagonalizes the symmetrized live block (entries
/// `1/sqrt(deg(r) deg(c))` on edges) and appends one exact zero per
/// dead site. Similarity guarantees this equals the spectrum of the
/// raw, non-symmetric matrix.
pub fn walk_spectrum(matrix: &WalkMatrix) -> Result<Spectrum, SpectralError> {
    let n = matrix.dimension();
    let live: Vec<usize> = (0..n).filter(|&s| matrix.degree(s) > 0).collect();
    let k = live.len();
    let mut pos = vec![usize::MAX; n];
    for (idx, &s) in live.iter().enumerate() {
        pos[s] = idx;
    }
    let mut dense = vec![0.0; k * k];
    for (a, &r) in live.iter().enumerate() {
        for &c in matrix.neighbors(r) {
            if c > r {
                let b = pos[c];
                let v = 1.0 / libm::sqrt((matrix.degree(r) * matrix.degree(c)) as f64);
                dense[a * k + b] = v;
                dense[b * k + a] = v;
            }
        }
    }
    let live_spectrum = eigenvalues_dense_symmetric(k, &dense, DEFAULT_DENSE_LIMIT)?;
    let mut all = live_spectrum.eigenvalues().to_vec();
    all.resize(n, 0.0);
    Ok(Spectrum::from_unsorted(all))
}
