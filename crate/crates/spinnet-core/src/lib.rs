//! Core routines for exchange-model spectra on networks.
//!
//! The crate offers two independent routes to the same level structure,
//! plus a single-particle counterpart:
//!
//! * [`network`]: undirected site graphs (chains, grids, complete and
//!   random graphs), optionally with holes punched out.
//! * [`manybody`]: operators on the m^N product space of a network,
//!   assembled from site transpositions: exchange sums, spin-1/2
//!   couplings, unitary-group generators and low-order Casimir strings.
//! * [`spectral`]: a dense symmetric eigensolver (Householder reduction
//!   plus implicit-shift QL) and gap-based clustering of eigenvalues
//!   into levels with multiplicities.
//! * [`grouptheory`]: the same levels obtained without any matrix, from
//!   integer partitions: closed-form energies, exact multiplicities,
//!   partition counting.
//! * [`walk`]: random-walk transition matrices on the network, with
//!   hole rows and columns zeroed, and their spectra.
//!
//! Everything is deterministic. Edges and matrix entries live in ordered
//! maps, random graphs draw from a pinned SplitMix64 stream, and the
//! operator builders emit only dyadic rationals, which f64 stores
//! exactly. File formats, drivers and the command line live in the
//! `spinnet` companion crate.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod grouptheory;
pub mod manybody;
pub mod network;
pub mod rng;
pub mod spectral;
pub mod walk;
