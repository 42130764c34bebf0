//! Benchmarks for `zmlat-core`; see `benches/`.

use zmlat_core::ZmTriple;

/// Representative groups: two Frobenius groups, a group with a non-chain
/// normal lattice, and a larger group of order 480.
pub fn sample_groups() -> Vec<ZmTriple> {
    [(7, 3, 2), (5, 4, 2), (15, 4, 2), (31, 15, 2)]
        .into_iter()
        .map(|(m, n, r)| ZmTriple::new(m, n, r).expect("valid triple"))
        .collect()
}
