//! Level structure of the all-pairs exchange model in closed form.
//!
//! Levels of the sum of transpositions over all site pairs (and of the
//! Casimir strings built from the same generators) are labeled by
//! weakly decreasing integer partitions `a = (a_1 >= ... >= a_m)` of
//! the particle number into at most m parts. For such a label:
//!
//! * the power sums `S_k = sum_i [(a_i + m - i)^k - (m - i)^k]` carry
//!   all the invariant data;
//! * the quadratic and cubic invariants are `S_2 - (m-1) S_1` and
//!   `S_3 - (m - 3/2) S_2 - S_1^2 / 2 - (m-1) S_1`;
//! * the exchange energy is `sum_i a_i^2 / 2 - sum_i i a_i + n / 2`,
//!   always an integer;
//! * the multiplicity is a product of two integer dimension formulas,
//!   evaluated here in exact big-integer arithmetic with the division
//!   checked to be exact.
//!
//! Multiplicities over all labels sum to m^n, which is the strongest
//! cheap consistency check available and is used by the verification
//! suite. Note that for m > 2 two different labels can share an energy
//! (first at n = 6, m = 3), so matching against a diagonalized
//! spectrum must merge labels of equal energy first. At m = 2 the
//! energy is injective over labels.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

// Re-exported because multiplicities in the public API use it.
pub use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum GroupTheoryError {
    EmptyPartition,
    /// Parts must be weakly decreasing; `position` is the first offender.
    NotWeaklyDecreasing { position: usize },
    /// Invariants are implemented for orders 1 to 3.
    UnsupportedOrder { order: u32 },
    /// Antisymmetric filling cannot exceed the number of local states.
    TooManyFermions { occupied: usize, states: usize },
    /// A closed-form multiplicity failed to divide exactly. Indicates a
    /// bug, never expected on valid input.
    InexactDivision,
}

impl fmt::Display for GroupTheoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupTheoryError::EmptyPartition => write!(f, "partition needs at least one slot"),
            GroupTheoryError::NotWeaklyDecreasing { position } => {
                write!(f, "parts must be weakly decreasing, violated at position {position}")
            }
            GroupTheoryError::UnsupportedOrder { order } => {
                write!(f, "invariants support orders 1 to 3, got {order}")
            }
            GroupTheoryError::TooManyFermions { occupied, states } => {
                write!(f, "cannot occupy {occupied} of {states} local states antisymmetrically")
            }
            GroupTheoryError::InexactDivision => {
                write!(f, "closed-form multiplicity was not an exact integer")
            }
        }
    }
}

impl core::error::Error for GroupTheoryError {}

/// Weakly decreasing list of non-negative parts; the length counts
/// trailing zeros, so the label knows both n (the sum) and m (the
/// number of slots).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, GroupTheoryError> {
        if parts.is_empty() {
            return Err(GroupTheoryError::EmptyPartition);
        }
        for (k, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(GroupTheoryError::NotWeaklyDecreasing { position: k + 1 });
            }
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts (the particle number n).
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of slots including trailing zeros (the local dimension m).
    pub fn num_slots(&self) -> usize {
        self.parts.len()
    }

    /// Number of strictly positive parts.
    pub fn nonzero_len(&self) -> usize {
        self.parts.iter().take_while(|&&a| a > 0).count()
    }
}

impl fmt::Display for Partition {
    /// Pipe-joined parts, `3|1|0`, the interchange spelling.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// All partitions of `n` into at most `m` parts, zero-padded to length
/// `m`, in decreasing lexicographic order. `(n, 0, ..., 0)` comes
/// first.
pub fn partitions(n: usize, m: usize) -> Vec<Partition> {
    assert!(m >= 1, "need at least one slot");
    let mut out = Vec::new();
    let mut buf = vec![0usize; m];
    fill(n, n, 0, &mut buf, &mut out);
    out
}

fn fill(rem: usize, max_part: usize, slot: usize, buf: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let m = buf.len();
    if slot == m {
        if rem == 0 {
            out.push(Partition { parts: buf.clone() });
        }
        return;
    }
    let slots_left = m - slot;
    let hi = rem.min(max_part);
    let lo = rem.div_ceil(slots_left);
    if lo > hi {
        return;
    }
    for p in (lo..=hi).rev() {
        buf[slot] = p;
        fill(rem - p, p, slot + 1, buf, out);
    }
    buf[slot] = 0;
}

/// Power sum `S_k = sum_i [(a_i + m - i)^k - (m - i)^k]` with i
/// starting at 1.
pub fn casimir_s(partition: &Partition, k: u32) -> i64 {
    let m = partition.num_slots() as i64;
    let mut total = 0i64;
    for (idx, &a) in partition.parts().iter().enumerate() {
        let i = idx as i64 + 1;
        total += (a as i64 + m - i).pow(k) - (m - i).pow(k);
    }
    total
}

/// Eigenvalue of the order-1, -2 or -3 Casimir string on the level
/// labeled by `partition`.
pub fn casimir_eigenvalue(partition: &Partition, order: u32) -> Result<f64, GroupTheoryError> {
    let m = partition.num_slots() as f64;
    let s1 = casimir_s(partition, 1) as f64;
    match order {
        1 => Ok(s1),
        2 => {
            let s2 = casimir_s(partition, 2) as f64;
            Ok(s2 - (m - 1.0) * s1)
        }
        3 => {
            let s2 = casimir_s(partition, 2) as f64;
            let s3 = casimir_s(partition, 3) as f64;
            Ok(s3 - (m - 1.5) * s2 - 0.5 * s1 * s1 - (m - 1.0) * s1)
        }
        other => Err(GroupTheoryError::UnsupportedOrder { order: other }),
    }
}

/// Exchange energy of the level: `sum a_i^2 / 2 - sum i a_i + n / 2`.
/// Always an integer, since `sum a_i^2` and `n` have the same parity.
pub fn energy(partition: &Partition) -> f64 {
    let mut sq = 0i64;
    let mut lin = 0i64;
    let mut n = 0i64;
    for (idx, &a) in partition.parts().iter().enumerate() {
        let a = a as i64;
        sq += a * a;
        lin += (idx as i64 + 1) * a;
        n += a;
    }
    debug_assert!((sq + n) % 2 == 0);
    ((sq + n) / 2 - lin) as f64
}

fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

fn exact_div(num: BigUint, den: &BigUint) -> Result<BigUint, GroupTheoryError> {
    let q = &num / den;
    if &q * den != num {
        return Err(GroupTheoryError::InexactDivision);
    }
    Ok(q)
}

/// Exact multiplicity of the level labeled by `partition`: the product
/// of the two dimension formulas attached to the label, one over all m
/// slots, one over the nonzero parts. Evaluated in big-integer
/// arithmetic; the division is checked to be exact.
pub fn degeneracy(partition: &Partition) -> Result<BigUint, GroupTheoryError> {
    let a = partition.parts();
    let m = partition.num_slots();
    let l = partition.nonzero_len();
    let n = partition.total();

    let mut num = factorial(n);
    let mut den = BigUint::one();
    for i in 1..=m {
        for j in i + 1..=m {
            // a_i - a_j - i + j >= j - i >= 1
            num *= (a[i - 1] - a[j - 1] + j - i) as u64;
            den *= (j - i) as u64;
        }
    }
    for i in 1..=l {
        for j in i + 1..=l {
            num *= (a[i - 1] - a[j - 1] + j - i) as u64;
        }
        den *= factorial(l + a[i - 1] - i);
    }
    exact_div(num, &den)
}

/// One level of the all-pairs exchange model in closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormLevel {
    pub partition: Partition,
    pub energy: f64,
    pub degeneracy: BigUint,
}

/// Every level of the all-pairs exchange model on `n` sites with `m`
/// local states, one entry per partition label, in the enumeration
/// order of [`partitions`]. Labels with equal energy are kept separate;
/// merge them before comparing with a diagonalized spectrum.
pub fn complete_graph_levels(n: usize, m: usize) -> Result<Vec<ClosedFormLevel>, GroupTheoryError> {
    partitions(n, m)
        .into_iter()
        .map(|p| {
            let energy = energy(&p);
            let degeneracy = degeneracy(&p)?;
            Ok(ClosedFormLevel {
                partition: p,
                energy,
                degeneracy,
            })
        })
        .collect()
}

/// Energy convention for the two-state (m = 2) level table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinEnergyConvention {
    /// `s^2 - (n+1) s + n(n-1)/2`; matches exact diagonalization.
    Standard,
    /// Variant with the s-dependent terms doubled,
    /// `2 s^2 - 2 n s - 2 s + n(n-1)/2`. Disagrees with exact
    /// diagonalization (at n = 3, s = 1 it gives -3 where the spectrum
    /// has 0); kept only for cross-checking published level tables that
    /// use it.
    DoubledSTerms,
}

/// Exchange energy of the two-row level `(n - s, s)` under the chosen
/// convention.
pub fn spin_energy(n: usize, s: usize, convention: SpinEnergyConvention) -> f64 {
    let nf = n as f64;
    let sf = s as f64;
    match convention {
        SpinEnergyConvention::Standard => sf * sf - (nf + 1.0) * sf + 0.5 * nf * nf - 0.5 * nf,
        SpinEnergyConvention::DoubledSTerms => {
            2.0 * sf * sf - 2.0 * nf * sf - 2.0 * sf + 0.5 * nf * nf - 0.5 * nf
        }
    }
}

/// One two-row level: `s` antisymmetric pairs out of `n` sites.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinLevel {
    pub s: usize,
    pub energy: f64,
    pub degeneracy: BigUint,
}

/// The m = 2 level table: s runs from 0 to n/2, energies in the
/// standard convention, multiplicities from the two-row closed form
/// `(1 + n - 2s)^2 n! / ((1 + n - s)! s!)`. Agrees with
/// [`complete_graph_levels`] at m = 2 label by label.
pub fn heisenberg_m2_levels(n: usize) -> Result<Vec<SpinLevel>, GroupTheoryError> {
    (0..=n / 2)
        .map(|s| {
            let num = BigUint::from((1 + n - 2 * s) as u64).pow(2) * factorial(n);
            let den = factorial(1 + n - s) * factorial(s);
            Ok(SpinLevel {
                s,
                energy: spin_energy(n, s, SpinEnergyConvention::Standard),
                degeneracy: exact_div(num, &den)?,
            })
        })
        .collect()
}

/// Level of the fully symmetric filling `(n, 0, ..., 0)` over m slots:
/// energy `n(n-1)/2`, multiplicity `n! prod_{l=1}^{m-1} (l+n)^2 /
/// ((m-1)! (n+m-1)!)`, which reduces to binomial(n+m-1, n).
pub fn bosonic_level(n: usize, m: usize) -> Result<(f64, BigUint), GroupTheoryError> {
    assert!(m >= 1, "need at least one local state");
    let nf = n as f64;
    let energy = 0.5 * nf * nf - 0.5 * nf;
    let mut num = factorial(n);
    for l in 1..m {
        num *= BigUint::from((l + n) as u64).pow(2);
    }
    let den = factorial(m - 1) * factorial(n + m - 1);
    Ok((energy, exact_div(num, &den)?))
}

/// Level of the fully antisymmetric filling `(1, ..., 1, 0, ..., 0)`
/// with n ones over m slots: energy `n/2 - n^2/2`, multiplicity
/// binomial(m, n). Requires n <= m.
pub fn fermionic_level(n: usize, m: usize) -> Result<(f64, BigUint), GroupTheoryError> {
    if n > m {
        return Err(GroupTheoryError::TooManyFermions {
            occupied: n,
            states: m,
        });
    }
    let nf = n as f64;
    let energy = 0.5 * nf - 0.5 * nf * nf;
    let num = factorial(m);
    let den = factorial(m - n) * factorial(n);
    Ok((energy, exact_div(num, &den)?))
}

/// Number of partitions of `n` into at most `m` parts, exact.
pub fn restricted_partition_count(n: usize, m: usize) -> BigUint {
    // classic DP over maximum part size; parts of size <= m counts the
    // conjugate family, which has the same cardinality
    let kmax = m.min(n);
    let mut dp = vec![BigUint::zero(); n + 1];
    dp[0] = BigUint::one();
    for k in 1..=kmax {
        for j in k..=n {
            let (head, tail) = dp.split_at_mut(j);
            tail[0] += &head[j - k];
        }
    }
    dp[n].clone()
}

/// Mean level multiplicity of the all-pairs model: m^n divided by the
/// number of levels, i.e. by the partition count.
pub fn average_degeneracy(n: usize, m: usize) -> f64 {
    let dim = BigUint::from(m).pow(n as u32);
    let count = restricted_partition_count(n, m);
    dim.to_f64().unwrap_or(f64::INFINITY) / count.to_f64().unwrap_or(f64::INFINITY)
}
