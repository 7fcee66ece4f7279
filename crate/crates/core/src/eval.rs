//! Evaluation: label candidates against the held-out interactions, rank them
//! per method, and report area under the precision-recall curve relative to a
//! random baseline.
//!
//! A candidate is positive when its node set is contained in at least one
//! interaction after the training window. The random baseline equals the
//! positive fraction of the candidate pool, so `performance` is the factor by
//! which a method beats random ranking.

use rayon::prelude::*;
use serde::Serialize;

use crate::cliques::{candidates, closed_k_sets, CandidateSet};
use crate::complex::ComplexView;
use crate::dataset::SimplicialDataset;
use crate::error::{Error, Result};
use crate::scoring::{Method, ScoreEngine};

/// Settings for one evaluation run.
#[derive(Debug, Clone)]
pub struct EvalConfig {
    /// Candidate order: 3 (triangles) or 4 (tetrahedra).
    pub k: usize,
    /// Fraction of interactions forming the training window, in (0, 1).
    pub train_fraction: f64,
    /// Methods to rank with; empty means all thirteen.
    pub methods: Vec<Method>,
    /// Abort if enumeration exceeds this many cliques.
    pub max_candidates: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            k: 3,
            train_fraction: 0.8,
            methods: Vec::new(),
            max_candidates: crate::cliques::DEFAULT_CANDIDATE_LIMIT,
        }
    }
}

/// One method's result on one configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodReport {
    pub method: String,
    pub pr_auc: f64,
    pub baseline: f64,
    pub performance: f64,
}

/// Full result of an evaluation run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub dataset: String,
    pub k: usize,
    pub train_fraction: f64,
    pub candidates: usize,
    pub positives: usize,
    pub methods: Vec<MethodReport>,
}

/// Marks each candidate positive iff some post-window interaction contains
/// it. Requires a non-empty test window.
pub fn label_candidates(
    ds: &SimplicialDataset,
    view: &ComplexView,
    cands: &mut CandidateSet,
) -> Result<()> {
    let test = view.window().end..ds.len();
    if test.is_empty() {
        return Err(Error::EmptyTestWindow);
    }
    let index = closed_k_sets(ds, test, cands.k());
    let labels: Vec<bool> = cands
        .keys()
        .par_iter()
        .map(|key| index.binary_search(key).is_ok())
        .collect();
    cands.set_labels(labels);
    Ok(())
}

/// Area under the precision-recall curve by grouped interpolation: ranks by
/// descending score, treats candidates with exactly equal scores as one
/// group, and sums recall gain times precision at each group boundary.
///
/// Errors with [`Error::DegenerateLabels`] unless both classes are present.
pub fn average_precision(scores: &[f64], labels: &[bool]) -> Result<f64> {
    assert_eq!(scores.len(), labels.len());
    let total_pos = labels.iter().filter(|&&l| l).count();
    if total_pos == 0 || total_pos == labels.len() {
        return Err(Error::DegenerateLabels {
            positives: total_pos,
            negatives: labels.len() - total_pos,
        });
    }

    let mut order: Vec<(f64, bool)> = scores.iter().copied().zip(labels.iter().copied()).collect();
    order.sort_by(|a, b| b.0.total_cmp(&a.0));

    let mut ap = 0.0f64;
    let mut seen = 0usize;
    let mut seen_pos = 0usize;
    let mut prev_recall = 0.0f64;
    let mut i = 0usize;
    while i < order.len() {
        let mut j = i;
        let mut group_pos = 0usize;
        while j < order.len() && order[j].0 == order[i].0 {
            group_pos += order[j].1 as usize;
            j += 1;
        }
        seen += j - i;
        seen_pos += group_pos;
        let recall = seen_pos as f64 / total_pos as f64;
        let precision = seen_pos as f64 / seen as f64;
        ap += (recall - prev_recall) * precision;
        prev_recall = recall;
        i = j;
    }
    Ok(ap)
}

/// Runs the full pipeline on one dataset: split, enumerate open k-cliques,
/// label against the test window, and score with every requested method.
pub fn evaluate(ds: &SimplicialDataset, cfg: &EvalConfig) -> Result<EvalReport> {
    let view = ComplexView::build(ds, cfg.train_fraction)?;
    let mut cands = candidates(&view, cfg.k, cfg.max_candidates)?;
    if cands.is_empty() {
        return Err(Error::NoCandidates);
    }
    label_candidates(ds, &view, &mut cands)?;

    let labels = cands.labels().expect("labels were just assigned").to_vec();
    let positives = labels.iter().filter(|&&l| l).count();
    if positives == 0 || positives == labels.len() {
        return Err(Error::DegenerateLabels {
            positives,
            negatives: labels.len() - positives,
        });
    }
    let baseline = positives as f64 / labels.len() as f64;

    let methods: &[Method] = if cfg.methods.is_empty() {
        &Method::ALL
    } else {
        &cfg.methods
    };
    let mut engine = ScoreEngine::new(&view, &cands);
    let mut reports = Vec::with_capacity(methods.len());
    for &method in methods {
        let table = engine.scores(method);
        let pr_auc = average_precision(&table.scores, &labels)?;
        reports.push(MethodReport {
            method: method.name().to_owned(),
            pr_auc,
            baseline,
            performance: pr_auc / baseline,
        });
    }

    Ok(EvalReport {
        dataset: ds.name().to_owned(),
        k: cfg.k,
        train_fraction: cfg.train_fraction,
        candidates: labels.len(),
        positives,
        methods: reports,
    })
}

/// Evaluates one dataset across several training fractions.
pub fn sweep(
    ds: &SimplicialDataset,
    k: usize,
    fractions: &[f64],
    methods: &[Method],
    max_candidates: usize,
) -> Result<Vec<EvalReport>> {
    fractions
        .iter()
        .map(|&train_fraction| {
            evaluate(
                ds,
                &EvalConfig {
                    k,
                    train_fraction,
                    methods: methods.to_vec(),
                    max_candidates,
                },
            )
        })
        .collect()
}

#[derive(Serialize)]
struct Row<'a> {
    dataset: &'a str,
    k: usize,
    train_frac: f64,
    method: &'a str,
    pr_auc: f64,
    baseline: f64,
    performance: f64,
    candidates: usize,
    positives: usize,
}

fn rows<'a>(reports: &'a [EvalReport]) -> Vec<Row<'a>> {
    let mut out = Vec::new();
    for r in reports {
        for m in &r.methods {
            out.push(Row {
                dataset: &r.dataset,
                k: r.k,
                train_frac: r.train_fraction,
                method: &m.method,
                pr_auc: m.pr_auc,
                baseline: m.baseline,
                performance: m.performance,
                candidates: r.candidates,
                positives: r.positives,
            });
        }
    }
    out
}

/// Six significant digits, no exponent, trailing zeros trimmed off the
/// report's floats would lose alignment so they are kept.
fn fmt6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Renders reports as CSV, one row per (dataset, fraction, method).
pub fn report_csv(reports: &[EvalReport]) -> String {
    let mut out = String::from(
        "dataset,k,train_frac,method,pr_auc,baseline,performance,candidates,positives\n",
    );
    for row in rows(reports) {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            row.dataset,
            row.k,
            fmt6(row.train_frac),
            row.method,
            fmt6(row.pr_auc),
            fmt6(row.baseline),
            fmt6(row.performance),
            row.candidates,
            row.positives,
        ));
    }
    out
}

/// Renders reports as a pretty-printed JSON array with the same fields as
/// the CSV columns.
pub fn report_json(reports: &[EvalReport]) -> String {
    serde_json::to_string_pretty(&rows(reports)).expect("plain structs serialize")
}
