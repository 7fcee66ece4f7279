//! Timestamped simplex datasets in the three-file text format.
//!
//! A dataset `name` inside a directory is stored as three aligned files:
//! `<name>-nverts.txt` holds one simplex size per line, `<name>-simplices.txt`
//! holds the concatenated node ids (one per line), and `<name>-times.txt`
//! holds one integer timestamp per simplex. Loading normalizes the records:
//!
//! * records with repeated nodes or an empty node set are dropped and counted
//!   as degenerate;
//! * records with more than [`MAX_ORDER`] nodes are dropped entirely (never
//!   truncated) and counted as oversize;
//! * retained records are sorted stably by timestamp, so equal timestamps
//!   keep file order;
//! * node ids are re-indexed densely to `0..node_count` in ascending raw-id
//!   order, with the raw ids kept for round-tripping.
//!
//! Loading the same files twice yields bit-identical datasets.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader, Write as _};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type NodeId = u32;

/// Maximum simplex order retained at load time; larger records are dropped.
pub const MAX_ORDER: usize = 25;

/// One timestamped simplex, borrowed from a [`SimplicialDataset`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interaction<'a> {
    /// Dense node ids, sorted ascending, no repeats.
    pub nodes: &'a [NodeId],
    /// Timestamp in dataset-native units.
    pub time: i64,
}

/// A normalized, immutable list of interactions sorted by (time, input order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialDataset {
    name: String,
    /// Record boundaries into `nodes`; `offsets.len() == len() + 1`.
    offsets: Vec<usize>,
    nodes: Vec<NodeId>,
    times: Vec<i64>,
    /// Dense id -> raw id, strictly increasing.
    raw_ids: Vec<u64>,
    dropped_oversize: usize,
    dropped_degenerate: usize,
}

/// Table-1-style counts: nodes, skeleton edges, simplices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatsRecord {
    pub nodes: usize,
    pub skeleton_edges: usize,
    pub simplices: usize,
}

impl SimplicialDataset {
    /// Normalizes raw `(node list, timestamp)` records into a dataset.
    ///
    /// This is the single construction path shared by the file loader and
    /// the synthetic generator, so every dataset obeys the same invariants.
    pub fn from_records(name: &str, records: Vec<(Vec<u64>, i64)>) -> Self {
        let mut dropped_degenerate = 0usize;
        let mut dropped_oversize = 0usize;
        let mut kept: Vec<(Vec<u64>, i64)> = Vec::with_capacity(records.len());
        for (mut ns, t) in records {
            if ns.is_empty() {
                dropped_degenerate += 1;
                continue;
            }
            ns.sort_unstable();
            if ns.windows(2).any(|w| w[0] == w[1]) {
                dropped_degenerate += 1;
                continue;
            }
            if ns.len() > MAX_ORDER {
                dropped_oversize += 1;
                continue;
            }
            kept.push((ns, t));
        }
        // Stable: records with equal timestamps keep input order.
        kept.sort_by_key(|&(_, t)| t);

        let mut raw_ids: Vec<u64> = kept.iter().flat_map(|(ns, _)| ns.iter().copied()).collect();
        raw_ids.sort_unstable();
        raw_ids.dedup();
        assert!(
            raw_ids.len() <= u32::MAX as usize,
            "node count exceeds the u32 id space"
        );
        assert!(
            kept.len() < u32::MAX as usize,
            "interaction count exceeds the u32 index space"
        );

        let mut offsets = Vec::with_capacity(kept.len() + 1);
        let mut nodes = Vec::with_capacity(kept.iter().map(|(ns, _)| ns.len()).sum());
        let mut times = Vec::with_capacity(kept.len());
        offsets.push(0);
        for (ns, t) in &kept {
            for raw in ns {
                let dense = raw_ids.binary_search(raw).expect("raw id present") as NodeId;
                nodes.push(dense);
            }
            offsets.push(nodes.len());
            times.push(*t);
        }

        SimplicialDataset {
            name: name.to_owned(),
            offsets,
            nodes,
            times,
            raw_ids,
            dropped_oversize,
            dropped_degenerate,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Replaces the dataset name (used when writing under a different prefix).
    pub fn rename(&mut self, name: &str) {
        self.name = name.to_owned();
    }

    /// Number of retained interactions.
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Number of distinct nodes across retained interactions.
    pub fn node_count(&self) -> usize {
        self.raw_ids.len()
    }

    pub fn nodes_of(&self, index: usize) -> &[NodeId] {
        &self.nodes[self.offsets[index]..self.offsets[index + 1]]
    }

    pub fn time_of(&self, index: usize) -> i64 {
        self.times[index]
    }

    pub fn interaction(&self, index: usize) -> Interaction<'_> {
        Interaction {
            nodes: self.nodes_of(index),
            time: self.times[index],
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Interaction<'_>> + '_ {
        (0..self.len()).map(|i| self.interaction(i))
    }

    /// Raw id the dense node id was assigned from.
    pub fn raw_id(&self, node: NodeId) -> u64 {
        self.raw_ids[node as usize]
    }

    pub fn dropped_oversize(&self) -> usize {
        self.dropped_oversize
    }

    pub fn dropped_degenerate(&self) -> usize {
        self.dropped_degenerate
    }
}

fn parse_column<T>(path: &Path) -> Result<Vec<T>>
where
    T: FromStr,
{
    let file = File::open(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            Error::MissingFile {
                path: path.to_owned(),
            }
        } else {
            Error::Io(e)
        }
    })?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        let token = line.trim();
        if token.is_empty() {
            continue;
        }
        match token.parse::<T>() {
            Ok(v) => out.push(v),
            Err(_) => {
                return Err(Error::BadToken {
                    path: path.to_owned(),
                    line: i + 1,
                    token: token.to_owned(),
                })
            }
        }
    }
    Ok(out)
}

fn dataset_paths(dir: &Path, name: &str) -> [PathBuf; 3] {
    [
        dir.join(format!("{name}-nverts.txt")),
        dir.join(format!("{name}-simplices.txt")),
        dir.join(format!("{name}-times.txt")),
    ]
}

/// Loads and normalizes the three-file dataset `<name>-{nverts,simplices,times}.txt`.
pub fn load_dataset(dir: &Path, name: &str) -> Result<SimplicialDataset> {
    let [nverts_path, simplices_path, times_path] = dataset_paths(dir, name);
    let nverts: Vec<u64> = parse_column(&nverts_path)?;
    let flat: Vec<u64> = parse_column(&simplices_path)?;
    let times: Vec<i64> = parse_column(&times_path)?;

    if nverts.len() != times.len() {
        return Err(Error::Inconsistent {
            name: name.to_owned(),
            detail: format!(
                "{} sizes in nverts but {} timestamps",
                nverts.len(),
                times.len()
            ),
        });
    }
    let expected: u64 = nverts.iter().sum();
    if expected != flat.len() as u64 {
        return Err(Error::Inconsistent {
            name: name.to_owned(),
            detail: format!(
                "nverts sums to {expected} node entries but simplices holds {}",
                flat.len()
            ),
        });
    }

    let mut records = Vec::with_capacity(nverts.len());
    let mut cursor = 0usize;
    for (&size, &t) in nverts.iter().zip(&times) {
        let size = size as usize;
        records.push((flat[cursor..cursor + size].to_vec(), t));
        cursor += size;
    }
    Ok(SimplicialDataset::from_records(name, records))
}

/// Writes the dataset back out in the three-file ingest format (raw ids).
pub fn write_dataset(ds: &SimplicialDataset, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let [nverts_path, simplices_path, times_path] = dataset_paths(dir, ds.name());
    let mut nverts = String::new();
    let mut simplices = String::new();
    let mut times = String::new();
    for it in ds.iter() {
        writeln!(nverts, "{}", it.nodes.len()).unwrap();
        for &n in it.nodes {
            writeln!(simplices, "{}", ds.raw_id(n)).unwrap();
        }
        writeln!(times, "{}", it.time).unwrap();
    }
    File::create(nverts_path)?.write_all(nverts.as_bytes())?;
    File::create(simplices_path)?.write_all(simplices.as_bytes())?;
    File::create(times_path)?.write_all(times.as_bytes())?;
    Ok(())
}

/// Counts nodes, distinct skeleton edges, and simplices over the whole dataset.
pub fn dataset_stats(ds: &SimplicialDataset) -> StatsRecord {
    let mut edges: HashSet<u64> = HashSet::new();
    for it in ds.iter() {
        let ns = it.nodes;
        for i in 0..ns.len() {
            for j in i + 1..ns.len() {
                edges.insert((ns[i] as u64) << 32 | ns[j] as u64);
            }
        }
    }
    StatsRecord {
        nodes: ds.node_count(),
        skeleton_edges: edges.len(),
        simplices: ds.len(),
    }
}
