//! Brute-force reference implementations used to cross-check the library.
//!
//! Everything here favors obviousness over speed: subset scans instead of
//! indices, per-threshold precision-recall recounts, exhaustive clique
//! checks. The only shared vocabulary with the library is the `Method` name
//! enum. Where a check demands bit-for-bit equality the oracle applies the
//! same floating point operations in the same order, derived independently
//! from the definitions.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use holp_core::{Mean, Method, NodeId, SimplicialDataset, WeightKind};
use itertools::Itertools;

pub fn toy_records() -> Vec<(Vec<u64>, i64)> {
    vec![
        (vec![1, 2, 3, 4], 1),
        (vec![3, 5, 6], 2),
        (vec![4, 5], 3),
        (vec![2, 7], 4),
        (vec![3, 7], 4),
        (vec![3, 4, 5], 5),
    ]
}

pub fn toy_dataset() -> SimplicialDataset {
    SimplicialDataset::from_records("toy", toy_records())
}

fn edge(a: NodeId, b: NodeId) -> (NodeId, NodeId) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Skeleton of a training window, rebuilt the obvious way.
pub struct NaiveView {
    pub node_count: usize,
    pub edges: HashSet<(NodeId, NodeId)>,
    pub degrees: HashMap<NodeId, usize>,
}

impl NaiveView {
    pub fn build(ds: &SimplicialDataset, wlen: usize) -> Self {
        let mut edges = HashSet::new();
        for idx in 0..wlen {
            for pair in ds.nodes_of(idx).iter().combinations(2) {
                edges.insert(edge(*pair[0], *pair[1]));
            }
        }
        let mut degrees: HashMap<NodeId, usize> = HashMap::new();
        for &(a, b) in &edges {
            *degrees.entry(a).or_default() += 1;
            *degrees.entry(b).or_default() += 1;
        }
        NaiveView {
            node_count: ds.node_count(),
            edges,
            degrees,
        }
    }

    pub fn adjacent(&self, a: NodeId, b: NodeId) -> bool {
        self.edges.contains(&edge(a, b))
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.degrees.get(&v).copied().unwrap_or(0)
    }
}

/// Is some window interaction a superset of `nodes`?
pub fn naive_is_closed(ds: &SimplicialDataset, wlen: usize, nodes: &[NodeId]) -> bool {
    (0..wlen).any(|idx| {
        let record: HashSet<NodeId> = ds.nodes_of(idx).iter().copied().collect();
        nodes.iter().all(|n| record.contains(n))
    })
}

/// Every k-clique of the window skeleton, lexicographic.
pub fn naive_k_cliques(nv: &NaiveView, k: usize) -> Vec<Vec<NodeId>> {
    (0..nv.node_count as NodeId)
        .combinations(k)
        .filter(|c| {
            c.iter()
                .tuple_combinations()
                .all(|(a, b)| nv.adjacent(*a, *b))
        })
        .collect()
}

/// Open k-cliques of the window, lexicographic.
pub fn naive_candidates(
    ds: &SimplicialDataset,
    wlen: usize,
    nv: &NaiveView,
    k: usize,
) -> Vec<Vec<NodeId>> {
    naive_k_cliques(nv, k)
        .into_iter()
        .filter(|c| !naive_is_closed(ds, wlen, c))
        .collect()
}

/// True for candidates contained in some interaction past the window.
pub fn naive_labels(ds: &SimplicialDataset, wlen: usize, cands: &[Vec<NodeId>]) -> Vec<bool> {
    cands
        .iter()
        .map(|c| {
            (wlen..ds.len()).any(|idx| {
                let record: HashSet<NodeId> = ds.nodes_of(idx).iter().copied().collect();
                c.iter().all(|n| record.contains(n))
            })
        })
        .collect()
}

pub fn naive_common_neighbors(nv: &NaiveView, cand: &[NodeId]) -> Vec<NodeId> {
    (0..nv.node_count as NodeId)
        .filter(|z| !cand.contains(z))
        .filter(|z| cand.iter().all(|v| nv.adjacent(*v, *z)))
        .collect()
}

pub fn naive_sw(ds: &SimplicialDataset, wlen: usize, a: NodeId, b: NodeId) -> u64 {
    (0..wlen)
        .filter(|&idx| {
            let ns = ds.nodes_of(idx);
            ns.contains(&a) && ns.contains(&b)
        })
        .count() as u64
}

/// Literal face-sequence count: per containing interaction, enumerate the
/// order-k faces through the edge (or the record itself when smaller), then
/// every sub-face through the edge, with multiplicity.
pub fn naive_sdw(ds: &SimplicialDataset, wlen: usize, a: NodeId, b: NodeId, k: usize) -> u64 {
    let mut total = 0u64;
    for idx in 0..wlen {
        let ns = ds.nodes_of(idx);
        if !(ns.contains(&a) && ns.contains(&b)) {
            continue;
        }
        let rest: Vec<NodeId> = ns.iter().copied().filter(|&z| z != a && z != b).collect();
        if ns.len() >= k {
            // each k-face F through the edge contributes every subset of
            // F \ {a, b}: the faces of order 2..=k through the edge
            for face_rest in rest.iter().combinations(k - 2) {
                for take in 0..=face_rest.len() {
                    total += face_rest.iter().combinations(take).count() as u64;
                }
            }
        } else {
            for take in 0..=rest.len() {
                total += rest.iter().combinations(take).count() as u64;
            }
        }
    }
    total
}

/// Exhaustive closed/open classification of the node sets through an edge,
/// up to order k.
pub fn naive_crw(
    ds: &SimplicialDataset,
    wlen: usize,
    nv: &NaiveView,
    a: NodeId,
    b: NodeId,
    k: usize,
) -> f64 {
    let mut closed: HashSet<Vec<NodeId>> = HashSet::new();
    for idx in 0..wlen {
        let ns = ds.nodes_of(idx);
        if !(ns.contains(&a) && ns.contains(&b)) {
            continue;
        }
        let rest: Vec<NodeId> = ns.iter().copied().filter(|&z| z != a && z != b).collect();
        for take in 0..=(k - 2).min(rest.len()) {
            for extra in rest.iter().combinations(take) {
                let mut set: Vec<NodeId> = extra.into_iter().copied().collect();
                set.push(a);
                set.push(b);
                set.sort_unstable();
                closed.insert(set);
            }
        }
    }

    let mut open = 0usize;
    for q in 3..=k {
        for extra in (0..nv.node_count as NodeId)
            .filter(|&z| z != a && z != b)
            .combinations(q - 2)
        {
            let mut set: Vec<NodeId> = extra;
            set.push(a);
            set.push(b);
            set.sort_unstable();
            let clique = set
                .iter()
                .tuple_combinations()
                .all(|(x, y)| nv.adjacent(*x, *y));
            if clique && !closed.contains(&set) {
                open += 1;
            }
        }
    }
    closed.len() as f64 / (closed.len() + open) as f64
}

/// Same arithmetic as the library's `combine`, restated: equal weights short
/// circuit, then mean formulas with the extra 1/E factor on the geometric.
pub fn naive_combine(ws: &[f64], mean: Mean) -> f64 {
    let e = ws.len() as f64;
    let w0 = ws[0];
    if ws.iter().all(|&w| w == w0) {
        return match mean {
            Mean::Arithmetic | Mean::Harmonic => w0,
            Mean::Geometric => w0 / e,
        };
    }
    match mean {
        Mean::Arithmetic => ws.iter().sum::<f64>() / e,
        Mean::Geometric => ws.iter().product::<f64>().powf(1.0 / e) / e,
        Mean::Harmonic => e / ws.iter().map(|w| 1.0 / w).sum::<f64>(),
    }
}

/// Per-edge weights for one family over all skeleton edges.
pub fn naive_edge_weights(
    ds: &SimplicialDataset,
    wlen: usize,
    nv: &NaiveView,
    k: usize,
    kind: WeightKind,
) -> HashMap<(NodeId, NodeId), f64> {
    nv.edges
        .iter()
        .map(|&(a, b)| {
            let w = match kind {
                WeightKind::Sw => naive_sw(ds, wlen, a, b) as f64,
                WeightKind::Sdw => naive_sdw(ds, wlen, a, b, k) as f64,
                WeightKind::Crw => naive_crw(ds, wlen, nv, a, b, k),
            };
            ((a, b), w)
        })
        .collect()
}

/// Score one candidate with one method, from first principles. Edge-weight
/// methods read their weights out of a prebuilt map.
pub fn naive_score(
    nv: &NaiveView,
    cand: &[NodeId],
    method: Method,
    edge_weights: Option<&HashMap<(NodeId, NodeId), f64>>,
) -> f64 {
    match method {
        Method::Kcn => naive_common_neighbors(nv, cand).len() as f64,
        Method::Kaa => naive_common_neighbors(nv, cand)
            .iter()
            .map(|&z| 1.0 / (nv.degree(z) as f64).ln())
            .sum(),
        Method::Kra => naive_common_neighbors(nv, cand)
            .iter()
            .map(|&z| 1.0 / nv.degree(z) as f64)
            .sum(),
        Method::Kpa => cand.iter().map(|&v| nv.degree(v) as f64).product(),
        _ => {
            let (_, mean) = method.weighting().unwrap();
            let weights = edge_weights.expect("edge weights required");
            let ws: Vec<f64> = cand
                .iter()
                .combinations(2)
                .map(|pair| weights[&edge(*pair[0], *pair[1])])
                .collect();
            naive_combine(&ws, mean)
        }
    }
}

/// Average precision by per-threshold recount: for each distinct score,
/// re-scan the whole list to count predictions at or above it.
pub fn naive_average_precision(scores: &[f64], labels: &[bool]) -> f64 {
    let total_pos = labels.iter().filter(|&&l| l).count();
    assert!(total_pos > 0 && total_pos < labels.len());
    let mut thresholds = scores.to_vec();
    thresholds.sort_by(|a, b| b.total_cmp(a));
    thresholds.dedup();

    let mut ap = 0.0f64;
    let mut prev_recall = 0.0f64;
    for &t in &thresholds {
        let mut tp = 0usize;
        let mut predicted = 0usize;
        for (s, &l) in scores.iter().zip(labels) {
            if *s >= t {
                predicted += 1;
                tp += l as usize;
            }
        }
        let recall = tp as f64 / total_pos as f64;
        let precision = tp as f64 / predicted as f64;
        ap += (recall - prev_recall) * precision;
        prev_recall = recall;
    }
    ap
}

/// The training window length the split rule produces.
pub fn naive_window_len(n: usize, fraction: f64) -> usize {
    (fraction * n as f64).floor() as usize
}
