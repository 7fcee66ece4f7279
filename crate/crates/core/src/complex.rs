//! Training-window views over a dataset.
//!
//! A [`ComplexView`] fixes a half-open prefix of the interaction list (the
//! training window) and precomputes two read-only indexes over it: the
//! skeleton adjacency (sorted neighbor lists) and the per-node incidence
//! lists of window interaction indices. Closedness of a node set is decided
//! by intersecting incidence lists, never by materializing faces.

use std::ops::Range;

use rayon::prelude::*;

use crate::dataset::{NodeId, SimplicialDataset};
use crate::error::{Error, Result};
use crate::sets;

/// Compressed row storage: one sorted u32 row per node.
#[derive(Debug)]
struct Csr {
    offsets: Vec<usize>,
    values: Vec<u32>,
}

impl Csr {
    fn row(&self, i: usize) -> &[u32] {
        &self.values[self.offsets[i]..self.offsets[i + 1]]
    }
}

/// Immutable queryable view over a training window of a dataset.
pub struct ComplexView<'a> {
    ds: &'a SimplicialDataset,
    window: Range<usize>,
    adjacency: Csr,
    incidence: Csr,
}

impl<'a> ComplexView<'a> {
    /// Builds the view over the first `floor(train_fraction * len)` interactions.
    pub fn build(ds: &'a SimplicialDataset, train_fraction: f64) -> Result<Self> {
        if !(train_fraction > 0.0 && train_fraction < 1.0) {
            return Err(Error::BadTrainFraction(train_fraction));
        }
        let len = (train_fraction * ds.len() as f64).floor() as usize;
        Self::with_window_len(ds, len)
    }

    /// Builds the view over the first `len` interactions.
    pub fn with_window_len(ds: &'a SimplicialDataset, len: usize) -> Result<Self> {
        assert!(len <= ds.len(), "window extends past the dataset");
        if len == 0 {
            return Err(Error::EmptyTrainWindow);
        }
        let n = ds.node_count();

        let mut edges: Vec<u64> = Vec::new();
        for idx in 0..len {
            let ns = ds.nodes_of(idx);
            for i in 0..ns.len() {
                for j in i + 1..ns.len() {
                    edges.push((ns[i] as u64) << 32 | ns[j] as u64);
                }
            }
        }
        edges.par_sort_unstable();
        edges.dedup();

        let mut degree = vec![0usize; n];
        for &e in &edges {
            degree[(e >> 32) as usize] += 1;
            degree[(e & 0xffff_ffff) as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut cursor = offsets.clone();
        let mut values = vec![0u32; acc];
        // Edges arrive sorted by (low, high), so each row fills in ascending
        // order for both endpoints.
        for &e in &edges {
            let a = (e >> 32) as usize;
            let b = (e & 0xffff_ffff) as usize;
            values[cursor[a]] = b as u32;
            cursor[a] += 1;
            values[cursor[b]] = a as u32;
            cursor[b] += 1;
        }
        let adjacency = Csr { offsets, values };

        let mut counts = vec![0usize; n];
        for idx in 0..len {
            for &v in ds.nodes_of(idx) {
                counts[v as usize] += 1;
            }
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for c in &counts {
            acc += c;
            offsets.push(acc);
        }
        let mut cursor = offsets.clone();
        let mut values = vec![0u32; acc];
        for idx in 0..len {
            for &v in ds.nodes_of(idx) {
                values[cursor[v as usize]] = idx as u32;
                cursor[v as usize] += 1;
            }
        }
        let incidence = Csr { offsets, values };

        Ok(ComplexView {
            ds,
            window: 0..len,
            adjacency,
            incidence,
        })
    }

    pub fn dataset(&self) -> &SimplicialDataset {
        self.ds
    }

    /// The half-open interaction index range this view covers.
    pub fn window(&self) -> Range<usize> {
        self.window.clone()
    }

    pub fn window_len(&self) -> usize {
        self.window.end
    }

    pub fn node_count(&self) -> usize {
        self.ds.node_count()
    }

    /// Skeleton neighbors of `v`, ascending. Γ(v) of the similarity indices.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        self.adjacency.row(v as usize)
    }

    /// Skeleton degree of `v`.
    pub fn degree(&self, v: NodeId) -> usize {
        self.neighbors(v).len()
    }

    pub fn skeleton_edge_count(&self) -> usize {
        self.adjacency.values.len() / 2
    }

    /// Window interaction indices containing `v`, ascending.
    pub fn incident_interactions(&self, v: NodeId) -> &[u32] {
        self.incidence.row(v as usize)
    }

    /// Whether some window interaction contains `nodes` as a subset.
    ///
    /// Decided by intersecting the nodes' incidence lists with early exit;
    /// `nodes` must hold at least two distinct in-range ids.
    pub fn is_closed(&self, nodes: &[NodeId]) -> bool {
        debug_assert!(nodes.len() >= 2);
        let mut rows: Vec<&[u32]> = nodes
            .iter()
            .map(|&v| self.incident_interactions(v))
            .collect();
        rows.sort_by_key(|r| r.len());
        let (first, rest) = rows.split_first().expect("at least two rows");
        'outer: for ix in *first {
            for r in rest {
                if r.binary_search(ix).is_err() {
                    continue 'outer;
                }
            }
            return true;
        }
        false
    }

    /// Sorted indices of window interactions containing all of `nodes`.
    pub fn interactions_containing(&self, nodes: &[NodeId]) -> Vec<u32> {
        debug_assert!(!nodes.is_empty());
        let rows: Vec<&[u32]> = nodes
            .iter()
            .map(|&v| self.incident_interactions(v))
            .collect();
        sets::intersect_all(&rows)
    }

    /// Streams the window interactions containing both `a` and `b`.
    pub(crate) fn for_each_containing_pair(&self, a: NodeId, b: NodeId, f: impl FnMut(u32)) {
        sets::for_each_common(
            self.incident_interactions(a),
            self.incident_interactions(b),
            f,
        );
    }
}
