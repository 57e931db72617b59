//! Property-based invariants over randomized inputs.

use num_bigint::BigUint;
use proptest::prelude::*;
use spinnet_core::grouptheory::{degeneracy, partitions, restricted_partition_count};
use spinnet_core::manybody::{class_operator, heisenberg_hamiltonian, ProductBasis};
use spinnet_core::network::Network;
use spinnet_core::spectral::{cluster, Spectrum};
use spinnet_core::walk::{walk_matrix, walk_spectrum};

proptest! {
    #[test]
    fn encode_decode_roundtrip(n in 1usize..8, m in 1usize..5, raw: u64) {
        let basis = ProductBasis::new(n, m).unwrap();
        let index = (raw % basis.dimension() as u64) as usize;
        let digits = basis.decode(index).unwrap();
        prop_assert_eq!(digits.len(), n);
        prop_assert!(digits.iter().all(|&d| d < m));
        prop_assert_eq!(basis.encode(&digits).unwrap(), index);
    }

    #[test]
    fn random_networks_are_seeded(n in 1usize..30, p in 0.0f64..=1.0, seed: u64) {
        let a = Network::random_network(n, p, seed).unwrap();
        let b = Network::random_network(n, p, seed).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.n_edges() <= n * (n - 1) / 2);
        for (i, j) in a.edges() {
            prop_assert!(i < j && j < n);
        }
    }

    #[test]
    fn hole_punching_is_exactly_incidence(n in 2usize..20, p in 0.0f64..=1.0, seed: u64, raw_holes: [u64; 3]) {
        let net = Network::random_network(n, p, seed).unwrap();
        let holes: Vec<usize> = raw_holes.iter().map(|&h| (h % n as u64) as usize).collect();
        let holed = net.with_holes(holes.iter().copied()).unwrap();
        let survivors: Vec<(usize, usize)> = net
            .edges()
            .filter(|&(i, j)| !holes.contains(&i) && !holes.contains(&j))
            .collect();
        prop_assert_eq!(holed.edges().collect::<Vec<_>>(), survivors);
        for &h in &holes {
            prop_assert!(holed.is_hole(h));
        }
    }

    #[test]
    fn degree_sum_counts_edges_twice(dims in prop::collection::vec(1usize..5, 1..4), periodic: bool) {
        prop_assume!(!periodic || dims.iter().all(|&d| d >= 2));
        let net = Network::grid(&dims, periodic).unwrap();
        let total: usize = net.adjacency().iter().map(|a| a.len()).sum();
        prop_assert_eq!(total, 2 * net.n_edges());
    }

    #[test]
    fn clustering_partitions_the_spectrum(
        values in prop::collection::vec(-1.0e3f64..1.0e3, 0..40),
        tol in 1e-12f64..1e-3,
    ) {
        let spectrum = Spectrum::from_unsorted(values.clone());
        let levels = cluster(&spectrum, tol);
        prop_assert_eq!(levels.multiplicity_sum(), values.len());
        let threshold = tol * spectrum.max_abs().max(1.0);
        for w in levels.levels().windows(2) {
            prop_assert!(w[0].value < w[1].value);
        }
        if levels.distinct_count() >= 2 {
            prop_assert!(levels.min_split_gap() > threshold);
        }
    }

    #[test]
    fn operator_builders_emit_symmetric_matrices(n in 2usize..7, p in 0.0f64..=1.0, seed: u64) {
        let net = Network::random_network(n, p, seed).unwrap();
        let basis = ProductBasis::new(n, 2).unwrap();
        let exchange = class_operator(&net, &basis).unwrap();
        prop_assert!(exchange.is_symmetric());
        let spin = heisenberg_hamiltonian(&net, &basis).unwrap();
        prop_assert!(spin.is_symmetric());
        // trace identities: exchange trace is |E| 2^(n-1), spin trace 0
        let expect = (net.n_edges() << (n - 1)) as f64;
        prop_assert_eq!(exchange.trace(), expect);
        prop_assert_eq!(spin.trace(), 0.0);
    }

    #[test]
    fn partition_family_is_consistent(n in 0usize..=14, m in 1usize..=4) {
        let family = partitions(n, m);
        prop_assert_eq!(BigUint::from(family.len()), restricted_partition_count(n, m));
        for p in &family {
            prop_assert_eq!(p.total(), n);
            prop_assert_eq!(p.num_slots(), m);
            prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(degeneracy(p).unwrap() > BigUint::ZERO);
        }
        for w in family.windows(2) {
            prop_assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn walk_rows_are_stochastic_and_bounded(n in 2usize..16, p in 0.1f64..=1.0, seed: u64, hole_raw: u64) {
        let hole = (hole_raw % n as u64) as usize;
        let net = Network::random_network(n, p, seed).unwrap().with_holes([hole]).unwrap();
        let wm = walk_matrix(&net);
        for r in 0..n {
            let deg = wm.degree(r);
            if deg > 0 {
                // each entry is exactly 1/deg and there are deg of them
                for &c in wm.neighbors(r) {
                    prop_assert_eq!(wm.transition(r, c), Some((1, deg as u64)));
                }
            } else {
                prop_assert!(wm.is_hole(r) || wm.isolated_live_sites().contains(&r));
            }
        }
        let spectrum = walk_spectrum(&wm).unwrap();
        prop_assert_eq!(spectrum.len(), n);
        for &v in spectrum.eigenvalues() {
            prop_assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&v));
        }
        let zeros = spectrum.eigenvalues().iter().filter(|v| v.abs() < 1e-14).count();
        prop_assert!(zeros >= 1);
    }
}
