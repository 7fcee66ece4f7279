//! Error type shared across the crate.

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("missing dataset file {path}")]
    MissingFile { path: PathBuf },

    #[error("{path}:{line}: invalid integer token `{token}`")]
    BadToken {
        path: PathBuf,
        line: usize,
        token: String,
    },

    #[error("inconsistent dataset `{name}`: {detail}")]
    Inconsistent { name: String, detail: String },

    #[error("train fraction {0} is outside (0, 1)")]
    BadTrainFraction(f64),

    #[error("training window is empty")]
    EmptyTrainWindow,

    #[error("test window is empty")]
    EmptyTestWindow,

    #[error("order k = {0} is unsupported (expected 2, 3, or 4)")]
    BadOrder(usize),

    #[error("k-clique count exceeds the candidate limit of {limit}")]
    CandidateLimit { limit: usize },

    #[error("no candidate simplices in the training window")]
    NoCandidates,

    #[error("degenerate label set: {positives} positive, {negatives} negative candidates")]
    DegenerateLabels { positives: usize, negatives: usize },

    #[error(
        "unknown method `{0}`; valid methods are KCN, KAA, KRA, KPA, \
         SWA, SWG, SWH, SDWA, SDWG, SDWH, CRWA, CRWG, CRWH"
    )]
    UnknownMethod(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
