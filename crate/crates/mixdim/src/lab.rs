//! Probing `mdim(G) ≤ L1(G) + 2c(G)` beyond cacti.
//!
//! Cactus-family graphs are evaluated with the exact formula, everything
//! else with the brute-force oracle. Campaigns stream one record per graph
//! to a JSONL file and can be resumed.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use mixdim_core::{brute_force_mdim, classify, graph_stats, mdim_exact, Graph, OracleLimits};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::format::to_edge_list;
use crate::generate::{random_cactus, random_connected_graph, rng_for, CactusSpec, GenerateError};

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error(transparent)]
    Core(#[from] mixdim_core::Error),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}, line {line}: not a conjecture record ({source})")]
    Corrupt {
        path: PathBuf,
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("invalid campaign config: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MdimSource {
    Formula,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRecord {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub l1: usize,
    pub cyclomatic: usize,
    pub mdim: usize,
    pub mdim_source: MdimSource,
    /// `L1 + 2 * cyclomatic`.
    pub bound: usize,
    pub holds: bool,
    pub gap: i64,
    /// The graph is `C_n`, which the conjecture does not cover.
    pub excluded: bool,
}

impl ConjectureRecord {
    pub fn is_counterexample(&self) -> bool {
        !self.holds && !self.excluded
    }

    /// Single-line JSON with sorted keys.
    pub fn to_json_line(&self) -> String {
        let value = serde_json::to_value(self).expect("records serialize");
        value.to_string()
    }
}

/// First 16 hex digits of the SHA-256 of the canonical edge list.
pub fn graph_id(g: &Graph) -> String {
    let digest = Sha256::digest(to_edge_list(g).as_bytes());
    hex::encode(&digest[..8])
}

pub fn evaluate_conjecture(g: &Graph, limits: OracleLimits) -> Result<ConjectureRecord, LabError> {
    let class = classify(g);
    let (mdim, mdim_source) = if class.tag.is_cactus_family() {
        (mdim_exact(g)?.total, MdimSource::Formula)
    } else {
        (brute_force_mdim(g, limits)?.value, MdimSource::Oracle)
    };
    let l1 = g.leaves().len();
    let cyclomatic = g.cyclomatic();
    let bound = l1 + 2 * cyclomatic;
    Ok(ConjectureRecord {
        graph_id: graph_id(g),
        n: g.order(),
        m: g.size(),
        l1,
        cyclomatic,
        mdim,
        mdim_source,
        bound,
        holds: mdim <= bound,
        gap: bound as i64 - mdim as i64,
        excluded: g.is_cycle(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ThreeConnectedCheck {
    pub applicable: bool,
    /// `mdim < 2 * cyclomatic`.
    pub strict: bool,
    pub mdim: usize,
    pub bound: usize,
}

/// Oracle value against `2c(G)`, flagged by whether `G` is 3-connected.
pub fn check_3connected(g: &Graph, limits: OracleLimits) -> Result<ThreeConnectedCheck, LabError> {
    let mdim = brute_force_mdim(g, limits)?.value;
    let bound = 2 * g.cyclomatic();
    Ok(ThreeConnectedCheck {
        applicable: graph_stats(g).is_3_connected,
        strict: mdim < bound,
        mdim,
        bound,
    })
}

/// How the edge count of each sampled graph is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeStrategy {
    /// Exactly `m` edges, clamped to what `n` allows.
    Fixed(usize),
    /// `round(f * n(n-1)/2)` edges, clamped to `[n - 1, n(n-1)/2]`.
    Density(f64),
    /// Random cacti with this many cycles.
    Cactus {
        cycles: usize,
        lengths: (usize, usize),
    },
}

pub const DEFAULT_DENSITY: f64 = 0.4;

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub count: usize,
    /// Inclusive vertex-count range.
    pub n_range: (usize, usize),
    pub strategy: EdgeStrategy,
    pub seed: u64,
    pub output: PathBuf,
    pub limits: OracleLimits,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignSummary {
    pub total: usize,
    pub resumed_from: usize,
    pub holds: usize,
    pub excluded: usize,
    pub violations: usize,
    pub formula: usize,
    pub oracle: usize,
    pub distinct_graphs: usize,
    pub min_gap: Option<i64>,
    pub counterexamples: Vec<ConjectureRecord>,
}

impl CampaignSummary {
    fn from_records(records: &[ConjectureRecord], resumed_from: usize) -> Self {
        let ids: BTreeSet<&str> = records.iter().map(|r| r.graph_id.as_str()).collect();
        CampaignSummary {
            total: records.len(),
            resumed_from,
            holds: records.iter().filter(|r| r.holds).count(),
            excluded: records.iter().filter(|r| r.excluded).count(),
            violations: records.iter().filter(|r| r.is_counterexample()).count(),
            formula: records
                .iter()
                .filter(|r| r.mdim_source == MdimSource::Formula)
                .count(),
            oracle: records
                .iter()
                .filter(|r| r.mdim_source == MdimSource::Oracle)
                .count(),
            distinct_graphs: ids.len(),
            min_gap: records.iter().filter(|r| !r.excluded).map(|r| r.gap).min(),
            counterexamples: records
                .iter()
                .filter(|r| r.is_counterexample())
                .cloned()
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_value(self)
            .expect("summaries serialize")
            .to_string()
    }
}

impl CampaignConfig {
    fn validate(&self) -> Result<(), LabError> {
        let (lo, hi) = self.n_range;
        if lo < 2 || hi < lo {
            return Err(LabError::Config(format!("bad vertex range {lo}..{hi}")));
        }
        match self.strategy {
            EdgeStrategy::Density(f) if !(0.0..=1.0).contains(&f) => {
                Err(LabError::Config(format!("density {f} outside [0, 1]")))
            }
            _ => Ok(()),
        }
    }

    /// The graph for position `index` of the campaign's seed sequence.
    pub fn sample(&self, index: usize) -> Result<Graph, LabError> {
        let seed = self.seed.wrapping_add(index as u64);
        let mut rng = rng_for(seed);
        let (lo, hi) = self.n_range;
        let n = rng.random_range(lo..=hi);
        let max_m = n * (n - 1) / 2;
        let graph_seed = rng.random::<u64>();
        let g = match self.strategy {
            EdgeStrategy::Fixed(m) => random_connected_graph(n, m.clamp(n - 1, max_m), graph_seed)?,
            EdgeStrategy::Density(f) => {
                let m = (f * max_m as f64).round() as usize;
                random_connected_graph(n, m.clamp(n - 1, max_m), graph_seed)?
            }
            EdgeStrategy::Cactus { cycles, lengths } => {
                let base = 1 + cycles * (lengths.0 - 1);
                let extra = n.saturating_sub(base).max(usize::from(cycles == 0));
                random_cactus(&CactusSpec {
                    cycle_count: cycles,
                    cycle_length_range: lengths,
                    extra_tree_edges: extra,
                    seed: graph_seed,
                })?
            }
        };
        Ok(g)
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> LabError + '_ {
    move |source| LabError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Complete records already in `path`. A torn trailing line is cut off.
fn load_existing(path: &Path) -> Result<Vec<ConjectureRecord>, LabError> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(io_err(path)(e)),
    };
    let mut reader = BufReader::new(file);
    let mut records = Vec::new();
    let mut good_len = 0u64;
    let mut line = String::new();
    loop {
        line.clear();
        let read = reader.read_line(&mut line).map_err(io_err(path))?;
        if read == 0 || !line.ends_with('\n') {
            break;
        }
        let record = serde_json::from_str(line.trim_end()).map_err(|source| LabError::Corrupt {
            path: path.to_path_buf(),
            line: records.len() + 1,
            source,
        })?;
        records.push(record);
        good_len += read as u64;
    }
    let file = OpenOptions::new()
        .write(true)
        .open(path)
        .map_err(io_err(path))?;
    file.set_len(good_len).map_err(io_err(path))?;
    Ok(records)
}

const BATCH: usize = 64;

/// Runs or resumes a campaign.
///
/// Records are evaluated in parallel batches and appended in seed order, so
/// the file is identical however the work was scheduled or interrupted.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignSummary, LabError> {
    config.validate()?;
    let path = config.output.as_path();
    let mut records = load_existing(path)?;
    if records.len() > config.count {
        return Err(LabError::Config(format!(
            "{} already holds {} records, more than the requested {}",
            path.display(),
            records.len(),
            config.count
        )));
    }
    let resumed_from = records.len();
    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(io_err(path))?;
    let mut out = BufWriter::new(file);
    let mut next = resumed_from;
    while next < config.count {
        let end = (next + BATCH).min(config.count);
        let batch: Vec<ConjectureRecord> = (next..end)
            .into_par_iter()
            .map(|i| {
                let g = config.sample(i)?;
                evaluate_conjecture(&g, config.limits)
            })
            .collect::<Result<_, _>>()?;
        for r in &batch {
            writeln!(out, "{}", r.to_json_line()).map_err(io_err(path))?;
        }
        out.flush().map_err(io_err(path))?;
        records.extend(batch);
        next = end;
    }
    Ok(CampaignSummary::from_records(&records, resumed_from))
}
