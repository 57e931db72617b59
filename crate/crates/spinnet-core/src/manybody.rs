//! Operators on the product space of a network.
//!
//! A configuration of `n` sites with `m` local states is a base-`m`
//! integer; site 0 is the least significant digit. On this space the
//! module assembles, as sparse symmetric matrices:
//!
//! * `transposition_matrix(i, j)`: the permutation that swaps the local
//!   states of sites i and j;
//! * `class_operator`: the sum of transpositions over the edges of a
//!   network (or over all site pairs);
//! * `heisenberg_hamiltonian`: the spin-1/2 coupling sum over edges,
//!   (1/2) sum of S_i . S_j, which per edge is +1/8 on aligned
//!   configurations, -1/8 on anti-aligned ones and 1/4 on the flip;
//! * `u_generator(k, l)`: the unitary-group generator E_kl, summed over
//!   sites (the one deliberately non-symmetric builder);
//! * `casimir_matrix(order)`: cyclic generator strings
//!   sum E_{k1 k2} E_{k2 k3} ... E_{k_order k1} for order 1 to 3.
//!
//! Every entry produced here is a dyadic rational (integers, quarters,
//! eighths), so f64 arithmetic on them is exact and symmetry checks can
//! compare bits instead of tolerances.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::network::Network;

/// Default cap on the product-space dimension m^n.
pub const DEFAULT_DIM_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq)]
pub enum ManyBodyError {
    ZeroSites,
    ZeroStates,
    /// m^n exceeds the configured cap.
    DimensionCap {
        n_particles: usize,
        local_dim: usize,
        cap: usize,
    },
    IndexOutOfRange {
        index: usize,
        dimension: usize,
    },
    DigitOutOfRange {
        site: usize,
        digit: usize,
        local_dim: usize,
    },
    WrongDigitCount {
        got: usize,
        expected: usize,
    },
    SameSite {
        site: usize,
    },
    SiteOutOfRange {
        site: usize,
        n_particles: usize,
    },
    StateOutOfRange {
        state: usize,
        local_dim: usize,
    },
    /// Network and basis disagree on the number of sites.
    SiteCountMismatch {
        network: usize,
        basis: usize,
    },
    /// Spin-1/2 couplings need exactly two local states.
    LocalDimNotTwo {
        local_dim: usize,
    },
    /// Casimir strings are implemented for orders 1 to 3.
    UnsupportedOrder {
        order: u32,
    },
}

impl fmt::Display for ManyBodyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ManyBodyError::ZeroSites => write!(f, "basis needs at least one site"),
            ManyBodyError::ZeroStates => write!(f, "basis needs at least one local state"),
            ManyBodyError::DimensionCap {
                n_particles,
                local_dim,
                cap,
            } => write!(
                f,
                "dimension {local_dim}^{n_particles} exceeds the cap {cap}"
            ),
            ManyBodyError::IndexOutOfRange { index, dimension } => {
                write!(f, "state index {index} out of range for dimension {dimension}")
            }
            ManyBodyError::DigitOutOfRange {
                site,
                digit,
                local_dim,
            } => write!(f, "digit {digit} at site {site} exceeds local dimension {local_dim}"),
            ManyBodyError::WrongDigitCount { got, expected } => {
                write!(f, "got {got} digits, basis has {expected} sites")
            }
            ManyBodyError::SameSite { site } => {
                write!(f, "transposition needs two distinct sites, got {site} twice")
            }
            ManyBodyError::SiteOutOfRange { site, n_particles } => {
                write!(f, "site {site} out of range for {n_particles} particles")
            }
            ManyBodyError::StateOutOfRange { state, local_dim } => {
                write!(f, "local state {state} out of range for local dimension {local_dim}")
            }
            ManyBodyError::SiteCountMismatch { network, basis } => {
                write!(f, "network has {network} sites but the basis has {basis}")
            }
            ManyBodyError::LocalDimNotTwo { local_dim } => {
                write!(f, "spin-1/2 coupling needs local dimension 2, got {local_dim}")
            }
            ManyBodyError::UnsupportedOrder { order } => {
                write!(f, "casimir strings support orders 1 to 3, got {order}")
            }
        }
    }
}

impl core::error::Error for ManyBodyError {}

/// The m^n product basis of base-m strings over n sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductBasis {
    n_particles: usize,
    local_dim: usize,
    dimension: usize,
    /// powers[i] = local_dim^i, the stride of site i.
    powers: Vec<usize>,
}

impl ProductBasis {
    pub fn new(n_particles: usize, local_dim: usize) -> Result<Self, ManyBodyError> {
        Self::with_dim_cap(n_particles, local_dim, DEFAULT_DIM_CAP)
    }

    /// Like [`ProductBasis::new`] with an explicit dimension cap.
    pub fn with_dim_cap(
        n_particles: usize,
        local_dim: usize,
        cap: usize,
    ) -> Result<Self, ManyBodyError> {
        if n_particles == 0 {
            return Err(ManyBodyError::ZeroSites);
        }
        if local_dim == 0 {
            return Err(ManyBodyError::ZeroStates);
        }
        let over = ManyBodyError::DimensionCap {
            n_particles,
            local_dim,
            cap,
        };
        let mut powers = Vec::with_capacity(n_particles + 1);
        let mut acc: usize = 1;
        powers.push(acc);
        for _ in 0..n_particles {
            acc = acc.checked_mul(local_dim).ok_or(over.clone())?;
            if acc > cap {
                return Err(over);
            }
            powers.push(acc);
        }
        Ok(Self {
            n_particles,
            local_dim,
            dimension: acc,
            powers,
        })
    }

    pub fn n_particles(&self) -> usize {
        self.n_particles
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Local state of `site` in configuration `index` (unchecked).
    #[inline]
    pub fn digit(&self, index: usize, site: usize) -> usize {
        (index / self.powers[site]) % self.local_dim
    }

    /// Digits of a configuration, site 0 first.
    pub fn decode(&self, index: usize) -> Result<Vec<usize>, ManyBodyError> {
        if index >= self.dimension {
            return Err(ManyBodyError::IndexOutOfRange {
                index,
                dimension: self.dimension,
            });
        }
        Ok((0..self.n_particles).map(|s| self.digit(index, s)).collect())
    }

    /// Inverse of [`ProductBasis::decode`].
    pub fn encode(&self, digits: &[usize]) -> Result<usize, ManyBodyError> {
        if digits.len() != self.n_particles {
            return Err(ManyBodyError::WrongDigitCount {
                got: digits.len(),
                expected: self.n_particles,
            });
        }
        let mut index = 0;
        for (site, &d) in digits.iter().enumerate() {
            if d >= self.local_dim {
                return Err(ManyBodyError::DigitOutOfRange {
                    site,
                    digit: d,
                    local_dim: self.local_dim,
                });
            }
            index += d * self.powers[site];
        }
        Ok(index)
    }
}

/// Sparse real matrix over the product basis, ordered by (row, col).
///
/// Zero entries are never stored: accumulation that cancels exactly
/// removes the entry, so equality of two matrices is plain structural
/// equality and `is_zero` is just emptiness.
#[derive(Debug, Clone, PartialEq)]
pub struct ManyBodyMatrix {
    dimension: usize,
    entries: BTreeMap<(usize, usize), f64>,
}

impl ManyBodyMatrix {
    pub fn zero(dimension: usize) -> Self {
        Self {
            dimension,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dimension: usize) -> Self {
        Self {
            dimension,
            entries: (0..dimension).map(|i| ((i, i), 1.0)).collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries.get(&(row, col)).copied().unwrap_or(0.0)
    }

    /// Accumulate `value` at (row, col), dropping the entry if the sum
    /// cancels exactly.
    pub fn add_to(&mut self, row: usize, col: usize, value: f64) {
        assert!(
            row < self.dimension && col < self.dimension,
            "entry ({row}, {col}) out of range for dimension {}",
            self.dimension
        );
        if value == 0.0 {
            return;
        }
        let slot = self.entries.entry((row, col)).or_insert(0.0);
        *slot += value;
        if *slot == 0.0 {
            self.entries.remove(&(row, col));
        }
    }

    /// Entries in (row, col) order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Nonzero entries of one row, ascending column.
    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.entries
            .range((row, 0)..=(row, usize::MAX))
            .map(|(&(_, c), &v)| (c, v))
    }

    /// Exact (bitwise) symmetry test.
    pub fn is_symmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(r, c), &v)| r == c || self.get(c, r) == v)
    }

    pub fn trace(&self) -> f64 {
        (0..self.dimension).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries.values().fold(0.0, |m, &v| m.max(v.abs()))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = Self::zero(self.dimension);
        for (&k, &v) in &self.entries {
            let w = v * factor;
            if w != 0.0 {
                out.entries.insert(k, w);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dimension, rhs.dimension, "dimension mismatch");
        let mut out = self.clone();
        for (&(r, c), &v) in &rhs.entries {
            out.add_to(r, c, v);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scaled(-1.0))
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dimension, rhs.dimension, "dimension mismatch");
        let mut out = Self::zero(self.dimension);
        for (&(r, k), &a) in &self.entries {
            for (c, b) in rhs.row(k) {
                out.add_to(r, c, a * b);
            }
        }
        out
    }

    /// Dense row-major copy. The caller is responsible for checking the
    /// dimension against a dense limit first.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.dimension;
        let mut dense = vec![0.0; n * n];
        for (&(r, c), &v) in &self.entries {
            dense[r * n + c] = v;
        }
        dense
    }
}

fn check_site(site: usize, basis: &ProductBasis) -> Result<(), ManyBodyError> {
    if site >= basis.n_particles() {
        return Err(ManyBodyError::SiteOutOfRange {
            site,
            n_particles: basis.n_particles(),
        });
    }
    Ok(())
}

fn check_network(net: &Network, basis: &ProductBasis) -> Result<(), ManyBodyError> {
    if net.n_sites() != basis.n_particles() {
        return Err(ManyBodyError::SiteCountMismatch {
            network: net.n_sites(),
            basis: basis.n_particles(),
        });
    }
    Ok(())
}

/// Configuration reached from `s` by swapping the digits at sites i, j.
#[inline]
fn swap_digits(basis: &ProductBasis, s: usize, i: usize, j: usize) -> usize {
    let pi = basis.powers[i];
    let pj = basis.powers[j];
    let di = basis.digit(s, i);
    let dj = basis.digit(s, j);
    s - di * pi - dj * pj + dj * pi + di * pj
}

/// Permutation matrix swapping the local states of two distinct sites.
pub fn transposition_matrix(
    i: usize,
    j: usize,
    basis: &ProductBasis,
) -> Result<ManyBodyMatrix, ManyBodyError> {
    if i == j {
        return Err(ManyBodyError::SameSite { site: i });
    }
    check_site(i, basis)?;
    check_site(j, basis)?;
    let mut mat = ManyBodyMatrix::zero(basis.dimension());
    for s in 0..basis.dimension() {
        mat.add_to(swap_digits(basis, s, i, j), s, 1.0);
    }
    Ok(mat)
}

/// Sum of transpositions over the edges of a network.
pub fn class_operator(net: &Network, basis: &ProductBasis) -> Result<ManyBodyMatrix, ManyBodyError> {
    check_network(net, basis)?;
    let mut mat = ManyBodyMatrix::zero(basis.dimension());
    for (i, j) in net.edges() {
        for s in 0..basis.dimension() {
            mat.add_to(swap_digits(basis, s, i, j), s, 1.0);
        }
    }
    Ok(mat)
}

/// Sum of transpositions over all site pairs (the complete-graph case,
/// without building the network).
pub fn class_operator_all_pairs(basis: &ProductBasis) -> ManyBodyMatrix {
    let n = basis.n_particles();
    let mut mat = ManyBodyMatrix::zero(basis.dimension());
    for i in 0..n {
        for j in i + 1..n {
            for s in 0..basis.dimension() {
                mat.add_to(swap_digits(basis, s, i, j), s, 1.0);
            }
        }
    }
    mat
}

/// Spin-1/2 coupling sum (1/2) sum_edges S_i . S_j. Requires local
/// dimension 2. Per edge the entries are +1/8 (digits equal), -1/8
/// (digits differ) and +1/4 on the double flip, so the matrix relates
/// to the class operator P by H = P/4 - |edges|/8 identity, exactly.
pub fn heisenberg_hamiltonian(
    net: &Network,
    basis: &ProductBasis,
) -> Result<ManyBodyMatrix, ManyBodyError> {
    check_network(net, basis)?;
    if basis.local_dim() != 2 {
        return Err(ManyBodyError::LocalDimNotTwo {
            local_dim: basis.local_dim(),
        });
    }
    let mut mat = ManyBodyMatrix::zero(basis.dimension());
    for (i, j) in net.edges() {
        for s in 0..basis.dimension() {
            let t = swap_digits(basis, s, i, j);
            if t == s {
                mat.add_to(s, s, 0.125);
            } else {
                mat.add_to(s, s, -0.125);
                mat.add_to(t, s, 0.25);
            }
        }
    }
    Ok(mat)
}

/// Unitary-group generator E_kl summed over sites: maps local state l
/// to k wherever it appears. Not symmetric for k != l; its transpose is
/// E_lk.
pub fn u_generator(
    k: usize,
    l: usize,
    basis: &ProductBasis,
) -> Result<ManyBodyMatrix, ManyBodyError> {
    let m = basis.local_dim();
    for state in [k, l] {
        if state >= m {
            return Err(ManyBodyError::StateOutOfRange {
                state,
                local_dim: m,
            });
        }
    }
    let mut mat = ManyBodyMatrix::zero(basis.dimension());
    for s in 0..basis.dimension() {
        for site in 0..basis.n_particles() {
            if basis.digit(s, site) == l {
                let t = s - l * basis.powers[site] + k * basis.powers[site];
                mat.add_to(t, s, 1.0);
            }
        }
    }
    Ok(mat)
}

/// Cyclic generator string sum E_{k1 k2} E_{k2 k3} ... E_{k_order k1}
/// for order 1 to 3. Order 1 is the number operator sum (n identity),
/// order 2 the quadratic invariant, order 3 the cubic one.
pub fn casimir_matrix(order: u32, basis: &ProductBasis) -> Result<ManyBodyMatrix, ManyBodyError> {
    let m = basis.local_dim();
    match order {
        1 => {
            let mut acc = ManyBodyMatrix::zero(basis.dimension());
            for k in 0..m {
                acc = acc.add(&u_generator(k, k, basis)?);
            }
            Ok(acc)
        }
        2 => {
            let gens = all_generators(basis)?;
            let mut acc = ManyBodyMatrix::zero(basis.dimension());
            for k in 0..m {
                for l in 0..m {
                    acc = acc.add(&gens[k][l].matmul(&gens[l][k]));
                }
            }
            Ok(acc)
        }
        3 => {
            let gens = all_generators(basis)?;
            let mut acc = ManyBodyMatrix::zero(basis.dimension());
            for k1 in 0..m {
                for k2 in 0..m {
                    let head = gens[k1][k2].clone();
                    for k3 in 0..m {
                        acc = acc.add(&head.matmul(&gens[k2][k3]).matmul(&gens[k3][k1]));
                    }
                }
            }
            Ok(acc)
        }
        other => Err(ManyBodyError::UnsupportedOrder { order: other }),
    }
}

fn all_generators(basis: &ProductBasis) -> Result<Vec<Vec<ManyBodyMatrix>>, ManyBodyError> {
    let m = basis.local_dim();
    let mut gens = Vec::with_capacity(m);
    for k in 0..m {
        let mut row = Vec::with_capacity(m);
        for l in 0..m {
            row.push(u_generator(k, l, basis)?);
        }
        gens.push(row);
    }
    Ok(gens)
}
