//! k-clique enumeration over the training skeleton and the open/closed split.
//!
//! Cliques are enumerated with an ordered-neighbor scheme: nodes are ranked
//! by (degree, id) ascending and every clique is discovered exactly once from
//! its lowest-ranked node, so the per-clique cost is bounded by neighbor-list
//! intersections. Results are emitted in lexicographic canonical order.
//!
//! A k-clique is *closed* when some window interaction contains it, *open*
//! otherwise; the open k-cliques are the candidate k-simplices.

use std::ops::Range;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::complex::ComplexView;
use crate::dataset::{NodeId, SimplicialDataset};
use crate::error::{Error, Result};
use crate::sets;

/// Default abort threshold for enumerated k-cliques.
pub const DEFAULT_CANDIDATE_LIMIT: usize = 100_000_000;

/// Up to four node ids packed big-endian into a u128, so that numeric order
/// on keys equals lexicographic order on ascending node tuples.
fn pack(nodes: &[NodeId]) -> u128 {
    debug_assert!(nodes.len() <= 4);
    let mut key = 0u128;
    for &n in nodes {
        key = (key << 32) | n as u128;
    }
    key
}

fn unpack(mut key: u128, k: usize) -> Clique {
    let mut ids = [0 as NodeId; 4];
    for i in (0..k).rev() {
        ids[i] = (key & 0xffff_ffff) as NodeId;
        key >>= 32;
    }
    Clique { len: k as u8, ids }
}

/// A clique of 2 to 4 nodes, stored inline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Clique {
    len: u8,
    ids: [NodeId; 4],
}

impl Clique {
    /// Node ids, ascending.
    pub fn nodes(&self) -> &[NodeId] {
        &self.ids[..self.len as usize]
    }
}

/// A list of same-order cliques in lexicographic canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueList {
    k: usize,
    keys: Vec<u128>,
}

impl CliqueList {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn get(&self, i: usize) -> Clique {
        unpack(self.keys[i], self.k)
    }

    pub fn iter(&self) -> impl Iterator<Item = Clique> + '_ {
        self.keys.iter().map(move |&key| unpack(key, self.k))
    }
}

/// The k-cliques of a window, split by closedness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition {
    pub closed: CliqueList,
    pub open: CliqueList,
}

/// Candidate k-simplices: the open k-cliques, with labels filled in by eval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    k: usize,
    keys: Vec<u128>,
    labels: Option<Vec<bool>>,
}

impl CandidateSet {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn get(&self, i: usize) -> Clique {
        unpack(self.keys[i], self.k)
    }

    pub fn iter(&self) -> impl Iterator<Item = Clique> + '_ {
        self.keys.iter().map(move |&key| unpack(key, self.k))
    }

    /// Per-candidate labels, once assigned (true = closes in the test window).
    pub fn labels(&self) -> Option<&[bool]> {
        self.labels.as_deref()
    }

    pub(crate) fn keys(&self) -> &[u128] {
        &self.keys
    }

    pub(crate) fn set_labels(&mut self, labels: Vec<bool>) {
        debug_assert_eq!(labels.len(), self.keys.len());
        self.labels = Some(labels);
    }
}

/// Enumerates every k-clique of the window skeleton, k in {2, 3, 4}.
///
/// Aborts with [`Error::CandidateLimit`] once more than `limit` cliques have
/// been produced, before the full list is materialized.
pub fn enumerate_k_cliques(view: &ComplexView, k: usize, limit: usize) -> Result<CliqueList> {
    if !(2..=4).contains(&k) {
        return Err(Error::BadOrder(k));
    }
    let n = view.node_count();

    if k == 2 {
        let mut keys = Vec::with_capacity(view.skeleton_edge_count());
        for v in 0..n as NodeId {
            let nbrs = view.neighbors(v);
            let from = nbrs.partition_point(|&u| u <= v);
            for &u in &nbrs[from..] {
                keys.push(pack(&[v, u]));
            }
            if keys.len() > limit {
                return Err(Error::CandidateLimit { limit });
            }
        }
        // Ascending v with ascending neighbors is already canonical order.
        return Ok(CliqueList { k, keys });
    }

    // Rank nodes by (degree, id); forward lists keep ascending-id order so
    // they intersect directly.
    let mut order: Vec<NodeId> = (0..n as NodeId).collect();
    order.sort_unstable_by_key(|&v| (view.degree(v), v));
    let mut rank = vec![0u32; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v as usize] = r as u32;
    }
    let forward: Vec<Vec<NodeId>> = (0..n as NodeId)
        .into_par_iter()
        .map(|v| {
            view.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| rank[u as usize] > rank[v as usize])
                .collect()
        })
        .collect();

    let produced = AtomicUsize::new(0);
    let per_seed: Result<Vec<Vec<u128>>> = (0..n as NodeId)
        .into_par_iter()
        .map(|v| {
            let fv = &forward[v as usize];
            let mut local = Vec::new();
            let mut tri = Vec::new();
            for &u in fv {
                if k == 3 {
                    sets::for_each_common(fv, &forward[u as usize], |w| {
                        let mut t = [v, u, w];
                        t.sort_unstable();
                        local.push(pack(&t));
                    });
                } else {
                    tri.clear();
                    sets::for_each_common(fv, &forward[u as usize], |w| tri.push(w));
                    for &w in &tri {
                        sets::for_each_common(&tri, &forward[w as usize], |x| {
                            let mut t = [v, u, w, x];
                            t.sort_unstable();
                            local.push(pack(&t));
                        });
                    }
                }
            }
            let total = produced.fetch_add(local.len(), Ordering::Relaxed) + local.len();
            if total > limit {
                return Err(Error::CandidateLimit { limit });
            }
            Ok(local)
        })
        .collect();
    let per_seed = per_seed?;

    let mut keys = Vec::with_capacity(produced.load(Ordering::Relaxed));
    for local in per_seed {
        keys.extend(local);
    }
    keys.par_sort_unstable();
    Ok(CliqueList { k, keys })
}

/// Sorted, deduplicated keys of every distinct k-subset of the interactions
/// in `range`. These are exactly the closed k-sets of that window: a k-set
/// is contained in some interaction iff it is a k-subset of one.
pub(crate) fn closed_k_sets(ds: &SimplicialDataset, range: Range<usize>, k: usize) -> Vec<u128> {
    debug_assert!((2..=4).contains(&k));
    let mut keys = Vec::new();
    for idx in range {
        let ns = ds.nodes_of(idx);
        if ns.len() < k {
            continue;
        }
        match k {
            2 => {
                for i in 0..ns.len() {
                    for j in i + 1..ns.len() {
                        keys.push(pack(&[ns[i], ns[j]]));
                    }
                }
            }
            3 => {
                for i in 0..ns.len() {
                    for j in i + 1..ns.len() {
                        for l in j + 1..ns.len() {
                            keys.push(pack(&[ns[i], ns[j], ns[l]]));
                        }
                    }
                }
            }
            _ => {
                for i in 0..ns.len() {
                    for j in i + 1..ns.len() {
                        for l in j + 1..ns.len() {
                            for m in l + 1..ns.len() {
                                keys.push(pack(&[ns[i], ns[j], ns[l], ns[m]]));
                            }
                        }
                    }
                }
            }
        }
    }
    keys.par_sort_unstable();
    keys.dedup();
    keys
}

/// Splits the window's k-cliques into closed and open lists, k in {3, 4}.
pub fn partition_cliques(view: &ComplexView, k: usize, limit: usize) -> Result<CliquePartition> {
    if !(3..=4).contains(&k) {
        return Err(Error::BadOrder(k));
    }
    let all = enumerate_k_cliques(view, k, limit)?;
    let closed_index = closed_k_sets(view.dataset(), view.window(), k);
    let flags: Vec<bool> = all
        .keys
        .par_iter()
        .map(|key| closed_index.binary_search(key).is_ok())
        .collect();
    let mut closed = Vec::new();
    let mut open = Vec::with_capacity(all.len());
    for (&key, &is_closed) in all.keys.iter().zip(&flags) {
        if is_closed {
            closed.push(key);
        } else {
            open.push(key);
        }
    }
    Ok(CliquePartition {
        closed: CliqueList { k, keys: closed },
        open: CliqueList { k, keys: open },
    })
}

/// The candidate k-simplices of the window: its open k-cliques.
pub fn candidates(view: &ComplexView, k: usize, limit: usize) -> Result<CandidateSet> {
    let partition = partition_cliques(view, k, limit)?;
    Ok(CandidateSet {
        k,
        keys: partition.open.keys,
        labels: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::SimplicialDataset;
    use crate::testkit::{d, toy};

    fn pairs(records: Vec<Vec<u64>>) -> SimplicialDataset {
        let recs = records
            .into_iter()
            .enumerate()
            .map(|(i, ns)| (ns, i as i64))
            .collect();
        SimplicialDataset::from_records("g", recs)
    }

    fn node_sets(list: &CliqueList) -> Vec<Vec<NodeId>> {
        list.iter().map(|c| c.nodes().to_vec()).collect()
    }

    #[test]
    fn triangle_graph_has_one_triangle() {
        let ds = pairs(vec![vec![1, 2], vec![2, 3], vec![1, 3]]);
        let view = ComplexView::with_window_len(&ds, 3).unwrap();
        let got = enumerate_k_cliques(&view, 3, usize::MAX).unwrap();
        assert_eq!(node_sets(&got), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn star_graph_has_no_triangles() {
        let ds = pairs(vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4]]);
        let view = ComplexView::with_window_len(&ds, 4).unwrap();
        let got = enumerate_k_cliques(&view, 3, usize::MAX).unwrap();
        assert!(got.is_empty());
    }

    #[test]
    fn two_cliques_are_the_skeleton_edges() {
        let ds = toy();
        let view = ComplexView::with_window_len(&ds, 5).unwrap();
        let got = enumerate_k_cliques(&view, 2, usize::MAX).unwrap();
        assert_eq!(got.len(), view.skeleton_edge_count());
        let sets = node_sets(&got);
        let mut sorted = sets.clone();
        sorted.sort();
        assert_eq!(sets, sorted, "canonical order");
    }

    #[test]
    fn toy_triangles_include_the_known_pair() {
        let ds = toy();
        let view = ComplexView::with_window_len(&ds, 5).unwrap();
        let got = node_sets(&enumerate_k_cliques(&view, 3, usize::MAX).unwrap());
        assert!(got.contains(&vec![d(2), d(3), d(7)]));
        assert!(got.contains(&vec![d(3), d(5), d(6)]));
    }

    #[test]
    fn toy_partition_and_candidates() {
        let ds = toy();
        let view = ComplexView::with_window_len(&ds, 5).unwrap();
        let part = partition_cliques(&view, 3, usize::MAX).unwrap();
        let closed = node_sets(&part.closed);
        let open = node_sets(&part.open);
        assert!(closed.contains(&vec![d(3), d(5), d(6)]));
        assert!(open.contains(&vec![d(2), d(3), d(7)]));
        assert_eq!(open, vec![vec![d(2), d(3), d(7)], vec![d(3), d(4), d(5)]]);

        let all = enumerate_k_cliques(&view, 3, usize::MAX).unwrap();
        assert_eq!(part.closed.len() + part.open.len(), all.len());
    }

    #[test]
    fn single_interaction_triangle_is_closed() {
        let ds = SimplicialDataset::from_records("c", vec![(vec![1, 2, 3], 1)]);
        let view = ComplexView::with_window_len(&ds, 1).unwrap();
        let part = partition_cliques(&view, 3, usize::MAX).unwrap();
        assert_eq!(node_sets(&part.closed), vec![vec![0, 1, 2]]);
        assert!(part.open.is_empty());
    }

    #[test]
    fn pairwise_triangle_is_open() {
        let ds = pairs(vec![vec![1, 2], vec![2, 3], vec![1, 3]]);
        let view = ComplexView::with_window_len(&ds, 3).unwrap();
        let part = partition_cliques(&view, 3, usize::MAX).unwrap();
        assert!(part.closed.is_empty());
        assert_eq!(node_sets(&part.open), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn k4_cliques_on_a_k5_skeleton() {
        let mut records = Vec::new();
        for a in 0u64..5 {
            for b in a + 1..5 {
                records.push(vec![a, b]);
            }
        }
        let ds = pairs(records);
        let view = ComplexView::with_window_len(&ds, 10).unwrap();
        let got = enumerate_k_cliques(&view, 4, usize::MAX).unwrap();
        assert_eq!(got.len(), 5); // C(5,4)
        let sets = node_sets(&got);
        let mut sorted = sets.clone();
        sorted.sort();
        assert_eq!(sets, sorted);
    }

    #[test]
    fn limit_aborts_enumeration() {
        let mut records = Vec::new();
        for a in 0u64..10 {
            for b in a + 1..10 {
                records.push(vec![a, b]);
            }
        }
        let ds = pairs(records);
        let view = ComplexView::with_window_len(&ds, ds.len()).unwrap();
        assert!(matches!(
            enumerate_k_cliques(&view, 3, 10),
            Err(Error::CandidateLimit { limit: 10 })
        ));
        assert!(enumerate_k_cliques(&view, 3, 120).is_ok()); // C(10,3) = 120
    }

    #[test]
    fn unsupported_order_is_rejected() {
        let ds = pairs(vec![vec![1, 2]]);
        let view = ComplexView::with_window_len(&ds, 1).unwrap();
        assert!(matches!(
            enumerate_k_cliques(&view, 5, usize::MAX),
            Err(Error::BadOrder(5))
        ));
        assert!(matches!(
            partition_cliques(&view, 2, usize::MAX),
            Err(Error::BadOrder(2))
        ));
    }

    #[test]
    fn enumeration_matches_brute_force_on_random_graphs() {
        // Deterministic LCG so the property is reproducible.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for round in 0..60 {
            let n = 4 + next() % 11; // 4..=14 nodes
            let mut records = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if next() % 100 < 35 {
                        records.push(vec![a, b]);
                    }
                }
            }
            if records.is_empty() {
                continue;
            }
            let ds = pairs(records);
            let view = ComplexView::with_window_len(&ds, ds.len()).unwrap();
            let nodes = view.node_count() as NodeId;
            let adj = |a: NodeId, b: NodeId| view.neighbors(a).binary_search(&b).is_ok();
            for k in [3usize, 4] {
                let got = node_sets(&enumerate_k_cliques(&view, k, usize::MAX).unwrap());
                let mut expected = Vec::new();
                for a in 0..nodes {
                    for b in a + 1..nodes {
                        for c in b + 1..nodes {
                            if k == 3 {
                                if adj(a, b) && adj(a, c) && adj(b, c) {
                                    expected.push(vec![a, b, c]);
                                }
                            } else {
                                for e in c + 1..nodes {
                                    if adj(a, b)
                                        && adj(a, c)
                                        && adj(a, e)
                                        && adj(b, c)
                                        && adj(b, e)
                                        && adj(c, e)
                                    {
                                        expected.push(vec![a, b, c, e]);
                                    }
                                }
                            }
                        }
                    }
                }
                assert_eq!(got, expected, "round {round} k {k}");
            }
        }
    }
}
