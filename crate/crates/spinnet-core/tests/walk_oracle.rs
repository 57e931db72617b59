//! Walk spectra against two independent references: the closed forms
//! for rings and open chains, and nalgebra's general (non-symmetric)
//! eigensolver applied to the raw transition matrix. The second check
//! is what justifies diagonalizing the symmetrized live block instead
//! of the raw matrix.

use nalgebra::DMatrix;
use spinnet_core::network::Network;
use spinnet_core::spectral::{cluster, DEFAULT_REL_TOL};
use spinnet_core::walk::{walk_matrix, walk_spectrum};

fn raw_spectrum_via_nalgebra(net: &Network) -> Vec<f64> {
    let wm = walk_matrix(net);
    let n = wm.dimension();
    let dense = DMatrix::from_row_slice(n, n, &wm.to_dense());
    let complex = dense.complex_eigenvalues();
    let mut ev = Vec::with_capacity(n);
    for c in complex.iter() {
        assert!(
            f64::abs(c.im) < 1e-9,
            "walk spectrum must be real, got {c}"
        );
        ev.push(c.re);
    }
    ev.sort_by(f64::total_cmp);
    ev
}

fn symmetrized_spectrum(net: &Network) -> Vec<f64> {
    walk_spectrum(&walk_matrix(net)).unwrap().eigenvalues().to_vec()
}

#[test]
fn symmetrization_preserves_the_spectrum() {
    let mut cases: Vec<Network> = vec![
        Network::chain(25, true).unwrap(),
        Network::chain(25, true).unwrap().with_holes([3]).unwrap(),
        Network::chain(25, true).unwrap().with_holes([1, 8]).unwrap(),
        Network::grid(&[5, 5], true).unwrap(),
        Network::grid(&[5, 5], true).unwrap().with_holes([3]).unwrap(),
        Network::grid(&[5, 5], true)
            .unwrap()
            .with_holes([1, 8])
            .unwrap(),
        Network::grid(&[3, 3, 3], true).unwrap(),
        Network::complete(9).unwrap(),
    ];
    for seed in [11u64, 12, 13] {
        cases.push(
            Network::random_network(14, 0.35, seed)
                .unwrap()
                .with_holes([0, 5])
                .unwrap(),
        );
    }
    for net in &cases {
        let raw = raw_spectrum_via_nalgebra(net);
        let sym = symmetrized_spectrum(net);
        assert_eq!(raw.len(), sym.len());
        for (a, b) in raw.iter().zip(sym.iter()) {
            assert!(
                (a - b).abs() < 1e-8,
                "{}: {a} vs {b}",
                net.label()
            );
        }
    }
}

#[test]
fn ring_closed_form() {
    // eigenvalues cos(2 pi k / n)
    for n in [3usize, 4, 5, 6, 25] {
        let mut expect: Vec<f64> = (0..n)
            .map(|k| (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect();
        expect.sort_by(f64::total_cmp);
        let got = symmetrized_spectrum(&Network::chain(n, true).unwrap());
        for (a, b) in got.iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-12, "ring {n}: {a} vs {b}");
        }
    }
}

#[test]
fn open_chain_closed_form() {
    // eigenvalues cos(pi k / (n - 1))
    for n in [2usize, 3, 4, 5, 6, 10] {
        let mut expect: Vec<f64> = (0..n)
            .map(|k| (std::f64::consts::PI * k as f64 / (n - 1) as f64).cos())
            .collect();
        expect.sort_by(f64::total_cmp);
        let got = symmetrized_spectrum(&Network::chain(n, false).unwrap());
        for (a, b) in got.iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-12, "chain {n}: {a} vs {b}");
        }
    }
}

#[test]
fn holes_add_exact_zeros() {
    let base = Network::grid(&[5, 5], true).unwrap();
    let holed = base.with_holes([6, 12, 18]).unwrap();
    let ev = symmetrized_spectrum(&holed);
    let zeros = ev.iter().filter(|v| v.abs() < 1e-14).count();
    assert!(zeros >= 3);
}

#[test]
fn reference_distinct_counts() {
    // ring of 25: 13 distinct levels; 5x5 torus: 6; 3-cube: 4
    for (net, expect) in [
        (Network::chain(25, true).unwrap(), 13),
        (Network::grid(&[5, 5], true).unwrap(), 6),
        (Network::grid(&[3, 3, 3], true).unwrap(), 4),
    ] {
        let spectrum = walk_spectrum(&walk_matrix(&net)).unwrap();
        assert_eq!(
            cluster(&spectrum, DEFAULT_REL_TOL).distinct_count(),
            expect,
            "{}",
            net.label()
        );
    }
}
