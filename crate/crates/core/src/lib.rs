//! Higher-order link prediction in temporal simplicial networks.
//!
//! A dataset is a time-ordered list of *interactions* (simplices): node sets
//! with timestamps. Splitting the list at a training fraction gives a
//! training window whose skeleton graph contains *open* k-cliques, the
//! candidate k-simplices. Each candidate is scored by one of thirteen
//! similarity indices and labeled by whether some test-window interaction
//! contains it; ranking quality is summarized as average precision over the
//! random baseline.
//!
//! The pipeline, in dependency order:
//!
//! 1. [`dataset`] — three-file ingest, normalization, stats.
//! 2. [`complex`] — training-window view: skeleton adjacency, interaction
//!    incidence, closedness queries.
//! 3. [`cliques`] — k-clique enumeration and the open/closed partition.
//! 4. [`scoring`] — node-based and edge-weight-based candidate scores.
//! 5. [`eval`] — labeling, grouped-tie average precision, reports, sweeps.
//! 6. [`synth`] — seeded synthetic datasets for tests and benchmarks.

pub mod cliques;
pub mod complex;
pub mod dataset;
pub mod error;
pub mod eval;
pub mod scoring;
mod sets;
pub mod synth;
#[cfg(test)]
mod testkit;

pub use cliques::{
    candidates, enumerate_k_cliques, partition_cliques, CandidateSet, Clique, CliqueList,
    CliquePartition, DEFAULT_CANDIDATE_LIMIT,
};
pub use complex::ComplexView;
pub use dataset::{
    dataset_stats, load_dataset, write_dataset, Interaction, NodeId, SimplicialDataset,
    StatsRecord, MAX_ORDER,
};
pub use error::{Error, Result};
pub use eval::{
    average_precision, evaluate, label_candidates, report_csv, report_json, sweep, EvalConfig,
    EvalReport, MethodReport,
};
pub use scoring::{
    build_edge_cache, combine, crw_weight, score_candidates, sdw_weight, sw_weight,
    EdgeWeightCache, Mean, Method, ScoreEngine, ScoreTable, WeightKind,
};
pub use synth::generate_synthetic;

/// Configures the global thread pool used by all parallel stages.
///
/// `None` keeps the default (all cores). Returns an error string when the
/// pool was already initialized with a different size.
pub fn init_thread_pool(threads: Option<usize>) -> std::result::Result<(), String> {
    match threads {
        None => Ok(()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| e.to_string()),
    }
}
