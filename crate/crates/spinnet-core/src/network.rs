//! Undirected site networks: chains, grids, complete graphs, random
//! graphs, and versions of any of them with holes punched out.
//!
//! Sites are indexed `0..n_sites`. Edges are stored as pairs `(i, j)`
//! with `i < j` in a sorted set, so iteration order is deterministic and
//! independent of construction history. A hole is a site that has been
//! removed from the dynamics: it keeps its index so that lattice
//! coordinates stay meaningful, but no edge may touch it.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rng::SplitMix64;

/// Errors from network construction.
#[derive(Debug, Clone, PartialEq)]
pub enum NetworkError {
    /// Size parameter below the minimum the constructor supports.
    TooFewSites { got: usize, min: usize },
    /// Grid constructor called with an empty dimension list.
    EmptyDims,
    /// Periodic wrap requested along an axis of extent < 2.
    PeriodicAxisTooShort { axis: usize, extent: usize },
    /// Total site count overflows the address space.
    SizeOverflow,
    /// Site index outside `0..n_sites`.
    SiteOutOfRange { site: usize, n_sites: usize },
    /// Edge endpoints coincide.
    SelfLoop { site: usize },
    /// Edge touches a site declared as a hole.
    EdgeTouchesHole { i: usize, j: usize, hole: usize },
    /// Probability outside [0, 1].
    InvalidProbability { p: f64 },
}

impl fmt::Display for NetworkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NetworkError::TooFewSites { got, min } => {
                write!(f, "need at least {min} sites, got {got}")
            }
            NetworkError::EmptyDims => write!(f, "grid needs at least one dimension"),
            NetworkError::PeriodicAxisTooShort { axis, extent } => {
                write!(f, "periodic axis {axis} has extent {extent}, need at least 2")
            }
            NetworkError::SizeOverflow => write!(f, "site count overflows usize"),
            NetworkError::SiteOutOfRange { site, n_sites } => {
                write!(f, "site {site} out of range for {n_sites} sites")
            }
            NetworkError::SelfLoop { site } => write!(f, "self loop at site {site}"),
            NetworkError::EdgeTouchesHole { i, j, hole } => {
                write!(f, "edge ({i}, {j}) touches hole {hole}")
            }
            NetworkError::InvalidProbability { p } => {
                write!(f, "edge probability {p} not in [0, 1]")
            }
        }
    }
}

impl core::error::Error for NetworkError {}

/// An undirected graph of sites, possibly with holes.
///
/// Invariants held by every constructor:
/// * every edge `(i, j)` has `i < j < n_sites`;
/// * no edge touches a hole;
/// * every hole index is `< n_sites`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    n_sites: usize,
    edges: BTreeSet<(usize, usize)>,
    holes: BTreeSet<usize>,
    label: String,
}

impl Network {
    /// Build a network from raw parts, validating all invariants.
    /// Edge pairs are normalized to `i < j` and deduplicated.
    pub fn new(
        n_sites: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        holes: impl IntoIterator<Item = usize>,
        label: impl Into<String>,
    ) -> Result<Self, NetworkError> {
        if n_sites == 0 {
            return Err(NetworkError::TooFewSites { got: 0, min: 1 });
        }
        let mut hole_set = BTreeSet::new();
        for h in holes {
            if h >= n_sites {
                return Err(NetworkError::SiteOutOfRange { site: h, n_sites });
            }
            hole_set.insert(h);
        }
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(NetworkError::SelfLoop { site: a });
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if j >= n_sites {
                return Err(NetworkError::SiteOutOfRange { site: j, n_sites });
            }
            for end in [i, j] {
                if hole_set.contains(&end) {
                    return Err(NetworkError::EdgeTouchesHole { i, j, hole: end });
                }
            }
            edge_set.insert((i, j));
        }
        Ok(Self {
            n_sites,
            edges: edge_set,
            holes: hole_set,
            label: label.into(),
        })
    }

    /// Open or closed chain of `n >= 2` sites.
    pub fn chain(n: usize, periodic: bool) -> Result<Self, NetworkError> {
        if n < 2 {
            return Err(NetworkError::TooFewSites { got: n, min: 2 });
        }
        let mut edges: BTreeSet<(usize, usize)> = (0..n - 1).map(|k| (k, k + 1)).collect();
        if periodic {
            // n = 2 wraps onto the existing edge; the set absorbs it.
            edges.insert((0, n - 1));
        }
        let label = if periodic {
            format!("1x{n} periodic")
        } else {
            format!("1x{n}")
        };
        Ok(Self {
            n_sites: n,
            edges,
            holes: BTreeSet::new(),
            label,
        })
    }

    /// Hypercubic grid with the given extents, row-major site order
    /// (the last coordinate varies fastest). With `periodic` set, every
    /// axis is wrapped and must have extent >= 2.
    pub fn grid(dims: &[usize], periodic: bool) -> Result<Self, NetworkError> {
        if dims.is_empty() {
            return Err(NetworkError::EmptyDims);
        }
        let mut n_sites: usize = 1;
        for (axis, &d) in dims.iter().enumerate() {
            if d == 0 {
                return Err(NetworkError::TooFewSites { got: 0, min: 1 });
            }
            if periodic && d < 2 {
                return Err(NetworkError::PeriodicAxisTooShort { axis, extent: d });
            }
            n_sites = n_sites.checked_mul(d).ok_or(NetworkError::SizeOverflow)?;
        }
        // strides[a] = product of extents after axis a
        let mut strides = vec![1usize; dims.len()];
        for a in (0..dims.len().saturating_sub(1)).rev() {
            strides[a] = strides[a + 1] * dims[a + 1];
        }
        let mut edges = BTreeSet::new();
        for s in 0..n_sites {
            for (a, &d) in dims.iter().enumerate() {
                if d < 2 {
                    continue;
                }
                let coord = (s / strides[a]) % d;
                if coord + 1 < d {
                    edges.insert((s, s + strides[a]));
                } else if periodic {
                    // wrap back to coordinate 0; for d = 2 this repeats
                    // the open edge and the set absorbs it
                    let t = s - coord * strides[a];
                    let (i, j) = if t < s { (t, s) } else { (s, t) };
                    edges.insert((i, j));
                }
            }
        }
        let mut label = String::new();
        for (a, d) in dims.iter().enumerate() {
            if a > 0 {
                label.push('x');
            }
            label.push_str(&format!("{d}"));
        }
        if periodic {
            label.push_str(" periodic");
        }
        Ok(Self {
            n_sites,
            edges,
            holes: BTreeSet::new(),
            label,
        })
    }

    /// Complete graph on `n >= 2` sites.
    pub fn complete(n: usize) -> Result<Self, NetworkError> {
        if n < 2 {
            return Err(NetworkError::TooFewSites { got: n, min: 2 });
        }
        let mut edges = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.insert((i, j));
            }
        }
        Ok(Self {
            n_sites: n,
            edges,
            holes: BTreeSet::new(),
            label: format!("complete-{n}"),
        })
    }

    /// Erdos-Renyi graph: each of the n(n-1)/2 pairs is linked with
    /// probability `p`, decided by one draw from a SplitMix64 stream
    /// seeded with `seed`. Pairs are visited in lexicographic order, so
    /// a given (n, p, seed) always yields the same network.
    pub fn random_network(n: usize, p: f64, seed: u64) -> Result<Self, NetworkError> {
        if n == 0 {
            return Err(NetworkError::TooFewSites { got: 0, min: 1 });
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(NetworkError::InvalidProbability { p });
        }
        let mut rng = SplitMix64::new(seed);
        let mut edges = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.next_f64() < p {
                    edges.insert((i, j));
                }
            }
        }
        Ok(Self {
            n_sites: n,
            edges,
            holes: BTreeSet::new(),
            label: format!("random-{n} p={p} seed={seed}"),
        })
    }

    /// Copy of the network with the given sites turned into holes.
    /// Every edge incident to any new or existing hole is dropped.
    pub fn with_holes(&self, holes: impl IntoIterator<Item = usize>) -> Result<Self, NetworkError> {
        let mut hole_set = self.holes.clone();
        let mut added = Vec::new();
        for h in holes {
            if h >= self.n_sites {
                return Err(NetworkError::SiteOutOfRange {
                    site: h,
                    n_sites: self.n_sites,
                });
            }
            if hole_set.insert(h) {
                added.push(h);
            }
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(i, j)| !hole_set.contains(&i) && !hole_set.contains(&j))
            .collect();
        let label = if added.is_empty() {
            self.label.clone()
        } else {
            added.sort_unstable();
            let mut list = String::new();
            for (k, h) in added.iter().enumerate() {
                if k > 0 {
                    list.push(',');
                }
                list.push_str(&format!("{h}"));
            }
            format!("{} holes[{list}]", self.label)
        };
        Ok(Self {
            n_sites: self.n_sites,
            edges,
            holes: hole_set,
            label,
        })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order, each with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.edges.contains(&(i, j))
    }

    pub fn holes(&self) -> impl Iterator<Item = usize> + '_ {
        self.holes.iter().copied()
    }

    pub fn n_holes(&self) -> usize {
        self.holes.len()
    }

    pub fn is_hole(&self, site: usize) -> bool {
        self.holes.contains(&site)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Sorted neighbor lists per site. Holes get empty lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_sites];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains() {
        let open = Network::chain(5, false).unwrap();
        assert_eq!(open.n_sites(), 5);
        assert_eq!(open.n_edges(), 4);
        assert!(open.has_edge(3, 4));
        assert!(!open.has_edge(0, 4));

        let ring = Network::chain(5, true).unwrap();
        assert_eq!(ring.n_edges(), 5);
        assert!(ring.has_edge(4, 0));
        assert_eq!(ring.label(), "1x5 periodic");

        // the 2-ring wrap duplicates the open edge
        assert_eq!(Network::chain(2, true).unwrap().n_edges(), 1);

        assert_eq!(
            Network::chain(1, false),
            Err(NetworkError::TooFewSites { got: 1, min: 2 })
        );
    }

    #[test]
    fn grid_edge_counts() {
        let open = Network::grid(&[5, 5], false).unwrap();
        assert_eq!(open.n_sites(), 25);
        assert_eq!(open.n_edges(), 40);

        let torus = Network::grid(&[5, 5], true).unwrap();
        assert_eq!(torus.n_edges(), 50);
        assert_eq!(torus.label(), "5x5 periodic");

        let cube = Network::grid(&[3, 3, 3], true).unwrap();
        assert_eq!(cube.n_sites(), 27);
        assert_eq!(cube.n_edges(), 81);
    }

    #[test]
    fn grid_row_major_neighbors() {
        // last coordinate fastest: site 0 of a 5x5 torus touches
        // 1 (+x), 4 (-x wrap), 5 (+y), 20 (-y wrap)
        let torus = Network::grid(&[5, 5], true).unwrap();
        let adj = torus.adjacency();
        assert_eq!(adj[0], vec![1, 4, 5, 20]);
    }

    #[test]
    fn grid_matches_chain() {
        let a = Network::grid(&[25], true).unwrap();
        let b = Network::chain(25, true).unwrap();
        assert_eq!(
            a.edges().collect::<Vec<_>>(),
            b.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn degenerate_axes_carry_no_edges() {
        let flat = Network::grid(&[1, 4], false).unwrap();
        assert_eq!(flat.n_sites(), 4);
        assert_eq!(flat.n_edges(), 3);
    }

    #[test]
    fn grid_errors() {
        assert_eq!(Network::grid(&[], false), Err(NetworkError::EmptyDims));
        assert_eq!(
            Network::grid(&[3, 0], false),
            Err(NetworkError::TooFewSites { got: 0, min: 1 })
        );
        assert_eq!(
            Network::grid(&[3, 1], true),
            Err(NetworkError::PeriodicAxisTooShort { axis: 1, extent: 1 })
        );
    }

    #[test]
    fn complete_graph() {
        let k9 = Network::complete(9).unwrap();
        assert_eq!(k9.n_edges(), 36);
        assert_eq!(k9.adjacency()[4].len(), 8);
    }

    #[test]
    fn random_network_is_deterministic() {
        let a = Network::random_network(9, 0.5, 42).unwrap();
        let b = Network::random_network(9, 0.5, 42).unwrap();
        assert_eq!(a, b);
        assert!(Network::random_network(9, 0.0, 1).unwrap().n_edges() == 0);
        assert_eq!(Network::random_network(9, 1.0, 1).unwrap().n_edges(), 36);
        assert!(matches!(
            Network::random_network(9, 1.5, 1),
            Err(NetworkError::InvalidProbability { .. })
        ));
        assert!(matches!(
            Network::random_network(9, f64::NAN, 1),
            Err(NetworkError::InvalidProbability { .. })
        ));
    }

    #[test]
    fn holes_drop_incident_edges() {
        // one hole in a torus removes its 4 edges
        let torus = Network::grid(&[5, 5], true).unwrap();
        let holed = torus.with_holes([3]).unwrap();
        assert_eq!(holed.n_edges(), 46);
        assert!(holed.is_hole(3));
        assert_eq!(holed.adjacency()[3], Vec::<usize>::new());

        // ring of 25 with one hole: two incident edges gone
        let ring = Network::chain(25, true).unwrap();
        assert_eq!(ring.with_holes([3]).unwrap().n_edges(), 23);

        // adjacent holes share an edge; it is only removed once
        let pair = torus.with_holes([0, 1]).unwrap();
        assert_eq!(pair.n_edges(), 50 - 7);
    }

    #[test]
    fn with_holes_validates_range() {
        let ring = Network::chain(4, true).unwrap();
        assert_eq!(
            ring.with_holes([9]),
            Err(NetworkError::SiteOutOfRange { site: 9, n_sites: 4 })
        );
    }

    #[test]
    fn raw_construction_normalizes() {
        let net = Network::new(4, [(2, 1), (1, 2), (0, 3)], [], "web").unwrap();
        assert_eq!(net.n_edges(), 2);
        assert_eq!(net.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);

        assert_eq!(
            Network::new(4, [(1, 1)], [], ""),
            Err(NetworkError::SelfLoop { site: 1 })
        );
        assert_eq!(
            Network::new(4, [(0, 4)], [], ""),
            Err(NetworkError::SiteOutOfRange { site: 4, n_sites: 4 })
        );
        assert_eq!(
            Network::new(4, [(0, 1)], [1], ""),
            Err(NetworkError::EdgeTouchesHole { i: 0, j: 1, hole: 1 })
        );
    }
}
