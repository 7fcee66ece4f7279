//! Candidate scoring: four node-based indices and nine edge-weight indices.
//!
//! Node-based scores generalize classic link prediction to a candidate's
//! common neighborhood: KCN counts the common neighbors of all k nodes, KAA
//! discounts each by 1/ln(degree), KRA by 1/degree, and KPA multiplies the
//! candidate's own degrees.
//!
//! Edge-weight scores assign every candidate edge a positive weight and fold
//! the k(k-1)/2 weights with an arithmetic, geometric, or harmonic mean:
//!
//! * `sw` — number of window interactions containing the edge;
//! * `sdw` — number of faces the edge's containing interactions decompose
//!   into at order k: a g-node interaction contributes C(g-2, k-2) * 2^(k-2)
//!   faces containing the edge when g >= k (each k-face plus its sub-faces
//!   of order 2..k-1 through the edge, counted with multiplicity), and
//!   2^(g-2) when g < k (the record itself plus its sub-faces);
//! * `crw` — closed fraction of the edge's cliques up to order k: distinct
//!   node sets containing the edge that appear inside some interaction,
//!   divided by those plus the open skeleton cliques through the edge.
//!
//! Note the geometric mean used here divides the k(k-1)/2-th root of the
//! product by k(k-1)/2 as well; it is not the textbook geometric mean, and
//! its scores are deliberately kept on that scale.
//!
//! Weights are cached lazily per (kind, k) over exactly the edges incident
//! to candidates; all scoring is deterministic and thread-count independent.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::cliques::CandidateSet;
use crate::complex::ComplexView;
use crate::dataset::NodeId;
use crate::error::Error;
use crate::sets;

/// The thirteen scoring methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Kcn,
    Kaa,
    Kra,
    Kpa,
    SwA,
    SwG,
    SwH,
    SdwA,
    SdwG,
    SdwH,
    CrwA,
    CrwG,
    CrwH,
}

/// Edge-weight families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    Sw,
    Sdw,
    Crw,
}

impl WeightKind {
    pub(crate) fn slot(self) -> usize {
        match self {
            WeightKind::Sw => 0,
            WeightKind::Sdw => 1,
            WeightKind::Crw => 2,
        }
    }
}

/// Averaging modes for edge weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mean {
    Arithmetic,
    Geometric,
    Harmonic,
}

impl Method {
    pub const ALL: [Method; 13] = [
        Method::Kcn,
        Method::Kaa,
        Method::Kra,
        Method::Kpa,
        Method::SwA,
        Method::SwG,
        Method::SwH,
        Method::SdwA,
        Method::SdwG,
        Method::SdwH,
        Method::CrwA,
        Method::CrwG,
        Method::CrwH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Kcn => "KCN",
            Method::Kaa => "KAA",
            Method::Kra => "KRA",
            Method::Kpa => "KPA",
            Method::SwA => "SWA",
            Method::SwG => "SWG",
            Method::SwH => "SWH",
            Method::SdwA => "SDWA",
            Method::SdwG => "SDWG",
            Method::SdwH => "SDWH",
            Method::CrwA => "CRWA",
            Method::CrwG => "CRWG",
            Method::CrwH => "CRWH",
        }
    }

    /// The weight family and mean for edge-weight methods, `None` for the
    /// node-based ones.
    pub fn weighting(self) -> Option<(WeightKind, Mean)> {
        match self {
            Method::Kcn | Method::Kaa | Method::Kra | Method::Kpa => None,
            Method::SwA => Some((WeightKind::Sw, Mean::Arithmetic)),
            Method::SwG => Some((WeightKind::Sw, Mean::Geometric)),
            Method::SwH => Some((WeightKind::Sw, Mean::Harmonic)),
            Method::SdwA => Some((WeightKind::Sdw, Mean::Arithmetic)),
            Method::SdwG => Some((WeightKind::Sdw, Mean::Geometric)),
            Method::SdwH => Some((WeightKind::Sdw, Mean::Harmonic)),
            Method::CrwA => Some((WeightKind::Crw, Mean::Arithmetic)),
            Method::CrwG => Some((WeightKind::Crw, Mean::Geometric)),
            Method::CrwH => Some((WeightKind::Crw, Mean::Harmonic)),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let upper = s.trim().to_ascii_uppercase();
        Method::ALL
            .into_iter()
            .find(|m| m.name() == upper)
            .ok_or_else(|| Error::UnknownMethod(s.trim().to_owned()))
    }
}

/// Common skeleton neighbors of all of `nodes`, ascending.
///
/// The candidate's own nodes can never appear: a node is not its own
/// neighbor, so it cannot lie in the full intersection.
pub fn common_neighbors(view: &ComplexView, nodes: &[NodeId]) -> Vec<NodeId> {
    let lists: Vec<&[u32]> = nodes.iter().map(|&v| view.neighbors(v)).collect();
    sets::intersect_all(&lists)
}

/// Count of common neighbors.
pub fn score_kcn(view: &ComplexView, nodes: &[NodeId]) -> f64 {
    common_neighbors(view, nodes).len() as f64
}

/// Sum of 1/ln(degree) over common neighbors.
pub fn score_kaa(view: &ComplexView, nodes: &[NodeId]) -> f64 {
    common_neighbors(view, nodes)
        .iter()
        .map(|&z| 1.0 / (view.degree(z) as f64).ln())
        .sum()
}

/// Sum of 1/degree over common neighbors.
pub fn score_kra(view: &ComplexView, nodes: &[NodeId]) -> f64 {
    common_neighbors(view, nodes)
        .iter()
        .map(|&z| 1.0 / view.degree(z) as f64)
        .sum()
}

/// Product of the candidate nodes' own degrees.
pub fn score_kpa(view: &ComplexView, nodes: &[NodeId]) -> f64 {
    nodes.iter().map(|&v| view.degree(v) as f64).product()
}

/// Number of window interactions containing both endpoints.
pub fn sw_weight(view: &ComplexView, a: NodeId, b: NodeId) -> u64 {
    let mut count = 0u64;
    view.for_each_containing_pair(a, b, |_| count += 1);
    count
}

fn choose(n: usize, r: usize) -> u64 {
    let n = n as u64;
    match r {
        0 => 1,
        1 => n,
        2 => n * (n - 1) / 2,
        _ => unreachable!("orders above 4 are rejected earlier"),
    }
}

/// Order-k face count of the edge's containing interactions (multiplicity
/// kept): per g-node interaction, C(g-2, k-2) * 2^(k-2) if g >= k, else
/// 2^(g-2). At k = 2 this reduces to `sw`.
pub fn sdw_weight(view: &ComplexView, a: NodeId, b: NodeId, k: usize) -> u64 {
    debug_assert!((2..=4).contains(&k));
    let ds = view.dataset();
    let mut total = 0u64;
    view.for_each_containing_pair(a, b, |idx| {
        let g = ds.nodes_of(idx as usize).len();
        total += if g >= k {
            choose(g - 2, k - 2) << (k - 2)
        } else {
            1u64 << (g - 2)
        };
    });
    total
}

/// Closed fraction of the edge's cliques up to order k, in (0, 1].
///
/// Closed cliques are distinct node sets T with edge ⊆ T, 2 <= |T| <= k,
/// contained in some window interaction; open cliques are the skeleton
/// q-cliques through the edge (3 <= q <= k) that are not closed. The edge
/// itself is always closed, so the ratio is never zero.
pub fn crw_weight(view: &ComplexView, a: NodeId, b: NodeId, k: usize) -> f64 {
    debug_assert!((2..=4).contains(&k));
    let ds = view.dataset();
    let mut thirds: Vec<NodeId> = Vec::new();
    let mut fourths: Vec<u64> = Vec::new();
    let mut edge_closed = false;
    view.for_each_containing_pair(a, b, |idx| {
        edge_closed = true;
        if k < 3 {
            return;
        }
        let ns = ds.nodes_of(idx as usize);
        for i in 0..ns.len() {
            let z = ns[i];
            if z == a || z == b {
                continue;
            }
            thirds.push(z);
            if k == 4 {
                for &w in &ns[i + 1..] {
                    if w == a || w == b {
                        continue;
                    }
                    fourths.push((z as u64) << 32 | w as u64);
                }
            }
        }
    });
    debug_assert!(edge_closed, "crw_weight expects a skeleton edge");
    thirds.sort_unstable();
    thirds.dedup();
    fourths.sort_unstable();
    fourths.dedup();
    let closed3 = thirds.len();
    let closed4 = fourths.len();

    let common = sets::intersect(view.neighbors(a), view.neighbors(b));
    let total3 = if k >= 3 { common.len() } else { 0 };
    let mut total4 = 0usize;
    if k == 4 {
        for (i, &c) in common.iter().enumerate() {
            sets::for_each_common(&common[i + 1..], view.neighbors(c), |_| total4 += 1);
        }
    }

    let closed = 1 + closed3 + closed4;
    let open = (total3 - closed3) + (total4 - closed4);
    closed as f64 / (closed + open) as f64
}

/// Folds positive edge weights into one score; `weights.len()` must be the
/// candidate's edge count k(k-1)/2.
pub fn combine(weights: &[f64], mean: Mean) -> f64 {
    debug_assert!(!weights.is_empty());
    debug_assert!(weights.iter().all(|&w| w > 0.0));
    let e = weights.len() as f64;
    let w0 = weights[0];
    if weights.iter().all(|&w| w == w0) {
        // Equal weights are common (every edge seen once, say) and the mean
        // of equal values must be the value itself; the round trips below
        // can drift an ulp, so short-circuit the exact answer.
        return match mean {
            Mean::Arithmetic | Mean::Harmonic => w0,
            Mean::Geometric => w0 / e,
        };
    }
    match mean {
        Mean::Arithmetic => weights.iter().sum::<f64>() / e,
        Mean::Geometric => weights.iter().product::<f64>().powf(1.0 / e) / e,
        Mean::Harmonic => e / weights.iter().map(|w| 1.0 / w).sum::<f64>(),
    }
}

fn pack_edge(a: NodeId, b: NodeId) -> u64 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    (lo as u64) << 32 | hi as u64
}

/// Weights for the skeleton edges touched by a candidate set, one family at
/// a fixed order k.
#[derive(Debug, Clone)]
pub struct EdgeWeightCache {
    kind: WeightKind,
    k: usize,
    keys: Vec<u64>,
    vals: Vec<f64>,
}

impl EdgeWeightCache {
    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn get(&self, a: NodeId, b: NodeId) -> Option<f64> {
        self.keys
            .binary_search(&pack_edge(a, b))
            .ok()
            .map(|i| self.vals[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = ((NodeId, NodeId), f64)> + '_ {
        self.keys.iter().zip(&self.vals).map(|(&key, &w)| {
            (((key >> 32) as NodeId, (key & 0xffff_ffff) as NodeId), w)
        })
    }
}

/// Computes one weight family over exactly the edges incident to candidates.
pub fn build_edge_cache(
    view: &ComplexView,
    cands: &CandidateSet,
    kind: WeightKind,
) -> EdgeWeightCache {
    let k = cands.k();
    let mut keys: Vec<u64> = Vec::with_capacity(cands.len().saturating_mul(k * (k - 1) / 2));
    for c in cands.iter() {
        let ns = c.nodes();
        for i in 0..ns.len() {
            for j in i + 1..ns.len() {
                keys.push(pack_edge(ns[i], ns[j]));
            }
        }
    }
    keys.par_sort_unstable();
    keys.dedup();
    let vals: Vec<f64> = keys
        .par_iter()
        .map(|&key| {
            let a = (key >> 32) as NodeId;
            let b = (key & 0xffff_ffff) as NodeId;
            match kind {
                WeightKind::Sw => sw_weight(view, a, b) as f64,
                WeightKind::Sdw => sdw_weight(view, a, b, k) as f64,
                WeightKind::Crw => crw_weight(view, a, b, k),
            }
        })
        .collect();
    EdgeWeightCache { kind, k, keys, vals }
}

/// Scores for one method, aligned with the candidate list.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreTable {
    pub method: Method,
    pub scores: Vec<f64>,
}

/// Scores candidates across methods, building each weight cache at most once.
pub struct ScoreEngine<'a> {
    view: &'a ComplexView<'a>,
    cands: &'a CandidateSet,
    caches: [Option<EdgeWeightCache>; 3],
}

impl<'a> ScoreEngine<'a> {
    pub fn new(view: &'a ComplexView<'a>, cands: &'a CandidateSet) -> Self {
        ScoreEngine {
            view,
            cands,
            caches: [None, None, None],
        }
    }

    /// The weight cache for `kind`, built on first use.
    pub fn cache(&mut self, kind: WeightKind) -> &EdgeWeightCache {
        let slot = &mut self.caches[kind.slot()];
        if slot.is_none() {
            *slot = Some(build_edge_cache(self.view, self.cands, kind));
        }
        slot.as_ref().unwrap()
    }

    pub fn scores(&mut self, method: Method) -> ScoreTable {
        let view = self.view;
        let cands = self.cands;
        let scores: Vec<f64> = match method.weighting() {
            None => (0..cands.len())
                .into_par_iter()
                .map(|i| {
                    let c = cands.get(i);
                    match method {
                        Method::Kcn => score_kcn(view, c.nodes()),
                        Method::Kaa => score_kaa(view, c.nodes()),
                        Method::Kra => score_kra(view, c.nodes()),
                        Method::Kpa => score_kpa(view, c.nodes()),
                        _ => unreachable!(),
                    }
                })
                .collect(),
            Some((kind, mean)) => {
                let cache = self.cache(kind);
                (0..cands.len())
                    .into_par_iter()
                    .map(|i| {
                        let ns = cands.get(i);
                        let ns = ns.nodes();
                        let mut ws = [0.0f64; 6];
                        let mut e = 0;
                        for i in 0..ns.len() {
                            for j in i + 1..ns.len() {
                                ws[e] = cache
                                    .get(ns[i], ns[j])
                                    .expect("candidate edge present in cache");
                                e += 1;
                            }
                        }
                        combine(&ws[..e], mean)
                    })
                    .collect()
            }
        };
        ScoreTable { method, scores }
    }
}

/// One-shot scoring of a candidate set with a single method.
pub fn score_candidates(view: &ComplexView, cands: &CandidateSet, method: Method) -> ScoreTable {
    ScoreEngine::new(view, cands).scores(method)
}
