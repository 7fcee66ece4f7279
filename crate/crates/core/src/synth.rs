//! Seeded synthetic datasets for tests and benchmarks.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dataset::SimplicialDataset;

/// Generates a reproducible random dataset named `synth-<seed>`.
///
/// Sizes are uniform in `[2, max_order]`, nodes are drawn uniformly without
/// replacement from `0..n_nodes`, and timestamps increase strictly. The same
/// seed always yields the identical dataset.
pub fn generate_synthetic(
    seed: u64,
    n_nodes: usize,
    n_interactions: usize,
    max_order: usize,
) -> SimplicialDataset {
    assert!(max_order >= 2, "max_order must be at least 2");
    assert!(n_nodes >= max_order, "need at least max_order nodes");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::with_capacity(n_interactions);
    for t in 0..n_interactions {
        let size = rng.gen_range(2..=max_order);
        let nodes: Vec<u64> = sample(&mut rng, n_nodes, size)
            .into_iter()
            .map(|v| v as u64)
            .collect();
        records.push((nodes, t as i64));
    }
    SimplicialDataset::from_records(&format!("synth-{seed}"), records)
}
