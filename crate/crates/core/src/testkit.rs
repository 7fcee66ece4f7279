//! Shared fixtures for the unit tests.

use crate::dataset::{NodeId, SimplicialDataset};

/// Toy configuration used across the crate's tests: four nodes interact at
/// t1, then (3,5,6) at t2, a (4,5) contact, two contacts wiring node 7 to 2
/// and 3, and finally (3,4,5) closes at t5. With the first five interactions
/// as the training window, the open triangles are (2,3,7) and (3,4,5), and
/// only the latter closes in the test window.
pub(crate) fn toy() -> SimplicialDataset {
    SimplicialDataset::from_records(
        "toy",
        vec![
            (vec![1, 2, 3, 4], 1),
            (vec![3, 5, 6], 2),
            (vec![4, 5], 3),
            (vec![2, 7], 4),
            (vec![3, 7], 4),
            (vec![3, 4, 5], 5),
        ],
    )
}

/// Dense id of raw node `r` in the toy dataset (raw 1..=7 -> dense 0..=6).
pub(crate) fn d(r: u64) -> NodeId {
    (r - 1) as NodeId
}
