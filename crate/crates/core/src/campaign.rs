//! Multi-seed campaigns over (generator × lane × test) cells.
//!
//! A cell fails *systematically* when every seed yields a decisive verdict.
//! Work items are (cell, seed) pairs run on a private thread pool; results
//! are gathered in item order, so reports do not depend on the worker count.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::battery::{
    run_test, LinearCompParams, MatrixRankParams, TestKind, TestParams, TestResult, Thresholds, Verdict,
};
use crate::bitlane::{LaneSource, LaneSpec};
use crate::error::Error;
use crate::prng::{seed_generator, GeneratorKind};

/// Seeds used by the desk preset.
pub const DESK_SEEDS: u64 = 10;
/// Seeds used by the full protocol.
pub const PAPER_SEEDS: u64 = 100;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub generators: Vec<GeneratorKind>,
    pub lanes: Vec<LaneSpec>,
    pub tests: Vec<TestParams>,
    pub seeds: Vec<u64>,
    pub workers: usize,
    pub thresholds: Thresholds,
}

impl CampaignConfig {
    /// Every generator on every lane, both tests at their defaults, seeds `1..=count`.
    pub fn with_seed_count(count: u64) -> Self {
        CampaignConfig {
            generators: GeneratorKind::ALL.to_vec(),
            lanes: LaneSpec::ALL.to_vec(),
            tests: vec![
                TestParams::LinearComp(LinearCompParams::default()),
                TestParams::MatrixRank(MatrixRankParams::default()),
            ],
            seeds: (1..=count).collect(),
            workers: default_workers(),
            thresholds: Thresholds::default(),
        }
    }

    pub fn desk() -> Self {
        Self::with_seed_count(DESK_SEEDS)
    }

    pub fn paper() -> Self {
        Self::with_seed_count(PAPER_SEEDS)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.generators.is_empty() {
            return Err(Error::InvalidParams("campaign has no generators".into()));
        }
        if self.lanes.is_empty() {
            return Err(Error::InvalidParams("campaign has no lanes".into()));
        }
        if self.tests.is_empty() {
            return Err(Error::InvalidParams("campaign has no tests".into()));
        }
        if self.seeds.is_empty() {
            return Err(Error::InvalidParams("campaign has no seeds".into()));
        }
        if self.workers == 0 {
            return Err(Error::InvalidParams("worker count must be at least 1".into()));
        }
        let mut seen = BTreeSet::new();
        if let Some(dup) = self.seeds.iter().find(|s| !seen.insert(**s)) {
            return Err(Error::InvalidParams(format!("seed {dup} listed twice")));
        }
        for t in &self.tests {
            t.validate()?;
        }
        self.thresholds.validate()
    }

    /// Parses the TOML campaign file format (see the repository README).
    pub fn from_toml_str(text: &str) -> Result<Self, Error> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        raw.into_config()
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)?;
        Self::from_toml_str(&text)
    }

    /// Renders the config in the file format; parses back to an equal config.
    pub fn to_toml_string(&self) -> String {
        let raw = RawConfig::from_config(self);
        toml::to_string(&raw).expect("campaign config is always representable as TOML")
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    generators: RawNames,
    #[serde(default)]
    lanes: RawNames,
    #[serde(default)]
    seeds: RawSeeds,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    run: Option<RawRun>,
    #[serde(default)]
    tests: Vec<RawTest>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNames {
    names: Vec<String>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSeeds {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    list: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    first: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    count: Option<u64>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRun {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    workers: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    threshold_decisive: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    threshold_suspect: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTest {
    kind: String,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    block_bits: Option<usize>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    count: Option<usize>,
    #[serde(rename = "s", default, skip_serializing_if = "Option::is_none")]
    bits_per_word: Option<u32>,
}

impl RawConfig {
    fn into_config(self) -> Result<CampaignConfig, Error> {
        let generators =
            self.generators.names.iter().map(|n| n.parse::<GeneratorKind>()).collect::<Result<Vec<_>, _>>()?;
        let lanes = self.lanes.names.iter().map(|n| n.parse::<LaneSpec>()).collect::<Result<Vec<_>, _>>()?;
        let seeds = match (self.seeds.list, self.seeds.first, self.seeds.count) {
            (Some(list), None, None) => list,
            (None, first, count) => {
                let first = first.unwrap_or(1);
                let count = count.unwrap_or(DESK_SEEDS);
                (first..first.saturating_add(count)).collect()
            }
            _ => return Err(Error::Config("[seeds] takes either `list` or `first`/`count`, not both".into())),
        };
        let tests = self.tests.into_iter().map(RawTest::into_params).collect::<Result<Vec<_>, _>>()?;
        let run = self.run.unwrap_or_default();
        let defaults = Thresholds::default();
        let config = CampaignConfig {
            generators,
            lanes,
            tests,
            seeds,
            workers: run.workers.unwrap_or_else(default_workers),
            thresholds: Thresholds {
                decisive: run.threshold_decisive.unwrap_or(defaults.decisive),
                suspect: run.threshold_suspect.unwrap_or(defaults.suspect),
            },
        };
        config.validate().map_err(|e| Error::Config(e.to_string()))?;
        Ok(config)
    }

    fn from_config(c: &CampaignConfig) -> Self {
        RawConfig {
            generators: RawNames { names: c.generators.iter().map(|g| g.name().to_string()).collect() },
            lanes: RawNames { names: c.lanes.iter().map(|l| l.name().to_string()).collect() },
            seeds: RawSeeds { list: Some(c.seeds.clone()), first: None, count: None },
            run: Some(RawRun {
                workers: Some(c.workers),
                threshold_decisive: Some(c.thresholds.decisive),
                threshold_suspect: Some(c.thresholds.suspect),
            }),
            tests: c.tests.iter().map(RawTest::from_params).collect(),
        }
    }
}

impl RawTest {
    fn into_params(self) -> Result<TestParams, Error> {
        let kind: TestKind = self.kind.parse()?;
        let params = match kind {
            TestKind::LinearComp => {
                if self.dim.is_some() {
                    return Err(Error::Config("LinearComp takes M, N, s (not L)".into()));
                }
                let d = LinearCompParams::default();
                TestParams::LinearComp(LinearCompParams {
                    block_bits: self.block_bits.unwrap_or(d.block_bits),
                    blocks: self.count.unwrap_or(d.blocks),
                    bits_per_word: self.bits_per_word.unwrap_or(d.bits_per_word),
                })
            }
            TestKind::MatrixRank => {
                if self.block_bits.is_some() {
                    return Err(Error::Config("MatrixRank takes L, N, s (not M)".into()));
                }
                let d = MatrixRankParams::default();
                TestParams::MatrixRank(MatrixRankParams {
                    dim: self.dim.unwrap_or(d.dim),
                    matrices: self.count.unwrap_or(d.matrices),
                    bits_per_word: self.bits_per_word.unwrap_or(d.bits_per_word),
                })
            }
        };
        Ok(params)
    }

    fn from_params(p: &TestParams) -> Self {
        match *p {
            TestParams::LinearComp(p) => RawTest {
                kind: TestKind::LinearComp.name().into(),
                dim: None,
                block_bits: Some(p.block_bits),
                count: Some(p.blocks),
                bits_per_word: Some(p.bits_per_word),
            },
            TestParams::MatrixRank(p) => RawTest {
                kind: TestKind::MatrixRank.name().into(),
                dim: Some(p.dim),
                block_bits: None,
                count: Some(p.matrices),
                bits_per_word: Some(p.bits_per_word),
            },
        }
    }
}

/// Identity of one campaign cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellKey {
    pub generator: GeneratorKind,
    pub lane: LaneSpec,
    pub test: TestParams,
}

/// What happened for one seed of a cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Outcome {
    Completed(TestResult),
    /// The seed could not be run (for example it expanded to an all-zero state).
    Failed {
        error: String,
    },
}

impl Outcome {
    pub fn verdict(&self) -> Option<Verdict> {
        match self {
            Outcome::Completed(r) => Some(r.verdict),
            Outcome::Failed { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedRun {
    pub seed: u64,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub key: CellKey,
    pub runs: Vec<SeedRun>,
    pub systematic: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    /// Wall-clock time of the run. Not part of any serialized output.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    /// In config order: generators, then lanes, then tests.
    pub cells: Vec<Cell>,
    pub metadata: Metadata,
}

impl CampaignReport {
    pub fn cell(&self, generator: GeneratorKind, lane: LaneSpec, test: TestKind) -> Option<&Cell> {
        self.cells.iter().find(|c| c.key.generator == generator && c.key.lane == lane && c.key.test.kind() == test)
    }
}

/// True iff there is at least one outcome and every one is a decisive verdict.
pub fn is_systematic<I: IntoIterator<Item = Option<Verdict>>>(verdicts: I) -> bool {
    let mut any = false;
    for v in verdicts {
        any = true;
        if !v.is_some_and(Verdict::is_decisive) {
            return false;
        }
    }
    any
}

/// Runs one seed of one cell.
pub fn run_cell_seed(key: &CellKey, seed: u64, thresholds: &Thresholds) -> Outcome {
    let result = seed_generator(key.generator, seed).and_then(|state| {
        let mut src = LaneSource::new(state, key.lane);
        run_test(&mut src, &key.test, thresholds)
    });
    match result {
        Ok(r) => Outcome::Completed(r),
        Err(e) => Outcome::Failed { error: e.to_string() },
    }
}

pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport, Error> {
    config.validate()?;
    let start = Instant::now();

    let keys: Vec<CellKey> = config
        .generators
        .iter()
        .flat_map(|&generator| {
            config
                .lanes
                .iter()
                .flat_map(move |&lane| config.tests.iter().map(move |&test| CellKey { generator, lane, test }))
        })
        .collect();
    let items: Vec<(usize, u64)> = (0..keys.len()).flat_map(|k| config.seeds.iter().map(move |&s| (k, s))).collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidParams(format!("cannot start {} workers: {e}", config.workers)))?;
    let thresholds = config.thresholds;
    let outcomes: Vec<Outcome> = pool.install(|| {
        items.par_iter().with_max_len(1).map(|&(k, seed)| run_cell_seed(&keys[k], seed, &thresholds)).collect()
    });

    let per_cell = config.seeds.len();
    let mut outcomes = outcomes.into_iter();
    let cells = keys
        .into_iter()
        .map(|key| {
            let runs: Vec<SeedRun> = config
                .seeds
                .iter()
                .zip(outcomes.by_ref().take(per_cell))
                .map(|(&seed, outcome)| SeedRun { seed, outcome })
                .collect();
            let systematic = is_systematic(runs.iter().map(|r| r.outcome.verdict()));
            Cell { key, runs, systematic }
        })
        .collect();

    Ok(CampaignReport {
        config: config.clone(),
        cells,
        metadata: Metadata { version: env!("CARGO_PKG_VERSION").to_string(), elapsed: start.elapsed() },
    })
}

/// One row of the systematic-failure table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub generator: GeneratorKind,
    pub lane: LaneSpec,
    /// Names of the tests that failed systematically, in config order.
    pub failed: Vec<String>,
}

/// One row per (generator, lane) in config order.
pub fn summarize(report: &CampaignReport) -> Vec<SummaryRow> {
    let mut rows = Vec::new();
    for &generator in &report.config.generators {
        for &lane in &report.config.lanes {
            let mut failed: Vec<String> = Vec::new();
            for cell in report.cells.iter().filter(|c| c.key.generator == generator && c.key.lane == lane) {
                let name = cell.key.test.kind().name();
                if cell.systematic && !failed.iter().any(|f| f == name) {
                    failed.push(name.to_string());
                }
            }
            rows.push(SummaryRow { generator, lane, failed });
        }
    }
    rows
}
