//! Flat result records, their CSV / JSON Lines encodings, and table rendering.
//!
//! One [`ResultRecord`] per (generator, lane, test, seed). Both machine
//! formats carry a `schema` column so downstream tooling can detect layout
//! changes. Everything written here is a pure function of the campaign
//! config and results: no timings, no worker counts.

use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::battery::{Auxiliary, TestKind, TestParams, TestResult, Thresholds, Verdict};
use crate::bitlane::LaneSpec;
use crate::campaign::{is_systematic, CampaignReport, Outcome, SummaryRow};
use crate::error::Error;
use crate::f2math::{Tail, COMPLEXITY_BUCKETS};
use crate::prng::GeneratorKind;

pub const SCHEMA_VERSION: u32 = 1;

/// Verdict column value for seeds that could not be run.
pub const ERROR_VERDICT: &str = "Error";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    HumanTable,
    MarkdownTable,
    Csv,
    JsonLines,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::HumanTable => "txt",
            OutputFormat::MarkdownTable => "md",
            OutputFormat::Csv => "csv",
            OutputFormat::JsonLines => "jsonl",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "human" | "table" | "text" | "txt" => Ok(OutputFormat::HumanTable),
            "markdown" | "md" => Ok(OutputFormat::MarkdownTable),
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" | "jsonlines" | "json" => Ok(OutputFormat::JsonLines),
            _ => Err(Error::InvalidParams(format!("unknown output format `{s}`"))),
        }
    }
}

/// Flat, serializable view of one seed's outcome in one cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema: u32,
    pub generator: String,
    pub lane: String,
    pub test: String,
    pub params: String,
    pub seed: u64,
    #[serde(with = "lossless_f64")]
    pub statistic: f64,
    #[serde(with = "lossless_f64")]
    pub p: f64,
    #[serde(with = "lossless_f64")]
    pub log10_p: f64,
    #[serde(with = "lossless_f64")]
    pub log10_1mp: f64,
    pub verdict: String,
    /// Auxiliary detail, `key=value` pairs joined by `;`.
    pub aux: String,
    /// Empty unless the seed could not be run.
    pub error: String,
}

impl ResultRecord {
    pub fn new(generator: GeneratorKind, lane: LaneSpec, params: &TestParams, seed: u64, outcome: &Outcome) -> Self {
        let base = ResultRecord {
            schema: SCHEMA_VERSION,
            generator: generator.name().to_string(),
            lane: lane.name().to_string(),
            test: params.kind().name().to_string(),
            params: params.to_string(),
            seed,
            statistic: f64::NAN,
            p: f64::NAN,
            log10_p: f64::NAN,
            log10_1mp: f64::NAN,
            verdict: ERROR_VERDICT.to_string(),
            aux: String::new(),
            error: String::new(),
        };
        match outcome {
            Outcome::Completed(r) => ResultRecord {
                statistic: r.statistic,
                p: r.p_value,
                log10_p: r.log10_p,
                log10_1mp: r.log10_one_minus_p,
                verdict: r.verdict.name().to_string(),
                aux: encode_aux(&r.auxiliary),
                ..base
            },
            Outcome::Failed { error } => ResultRecord { error: error.clone(), ..base },
        }
    }

    pub fn generator_kind(&self) -> Result<GeneratorKind, Error> {
        self.generator.parse()
    }

    pub fn lane_spec(&self) -> Result<LaneSpec, Error> {
        self.lane.parse()
    }

    pub fn test_params(&self) -> Result<TestParams, Error> {
        TestParams::parse(self.test.parse::<TestKind>()?, &self.params)
    }

    /// The verdict, `None` for a seed that could not be run.
    pub fn verdict(&self) -> Result<Option<Verdict>, Error> {
        if self.verdict == ERROR_VERDICT {
            Ok(None)
        } else {
            self.verdict.parse().map(Some)
        }
    }

    /// Rebuilds the outcome this record was made from.
    pub fn to_outcome(&self) -> Result<Outcome, Error> {
        if self.schema != SCHEMA_VERSION {
            return Err(Error::Record(format!("schema {} is not {SCHEMA_VERSION}", self.schema)));
        }
        let Some(verdict) = self.verdict()? else {
            return Ok(Outcome::Failed { error: self.error.clone() });
        };
        let params = self.test_params()?;
        Ok(Outcome::Completed(TestResult {
            params,
            statistic: self.statistic,
            p_value: self.p,
            log10_p: self.log10_p,
            log10_one_minus_p: self.log10_1mp,
            auxiliary: decode_aux(params.kind(), &self.aux)?,
            verdict,
        }))
    }
}

/// All records of a report, in cell order then seed order.
pub fn report_records(report: &CampaignReport) -> Vec<ResultRecord> {
    report
        .cells
        .iter()
        .flat_map(|cell| {
            cell.runs.iter().map(move |run| {
                ResultRecord::new(cell.key.generator, cell.key.lane, &cell.key.test, run.seed, &run.outcome)
            })
        })
        .collect()
}

fn join_counts(counts: &[u64]) -> String {
    counts.iter().map(u64::to_string).collect::<Vec<_>>().join("/")
}

fn encode_aux(aux: &Auxiliary) -> String {
    match aux {
        Auxiliary::RankHistogram { counts, min_rank, max_rank } => {
            format!("ranks={};min={min_rank};max={max_rank}", join_counts(counts))
        }
        Auxiliary::ComplexityBuckets { counts, min_complexity, max_complexity, saturation, saturation_verdict } => {
            format!(
                "buckets={};min={min_complexity};max={max_complexity};sat_p={:e};sat_log10_p={:e};sat_log10_1mp={:e};sat_verdict={saturation_verdict}",
                join_counts(counts),
                saturation.p,
                saturation.log10_p,
                saturation.log10_one_minus_p,
            )
        }
    }
}

fn decode_aux(kind: TestKind, text: &str) -> Result<Auxiliary, Error> {
    let mut fields = std::collections::BTreeMap::new();
    for part in text.split(';').filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| Error::Record(format!("aux field `{part}` lacks `=`")))?;
        fields.insert(k, v);
    }
    let get = |k: &str| fields.get(k).copied().ok_or_else(|| Error::Record(format!("aux lacks `{k}`")));
    let int = |k: &str| -> Result<usize, Error> {
        get(k)?.parse().map_err(|_| Error::Record(format!("aux `{k}` is not an integer")))
    };
    let float = |k: &str| -> Result<f64, Error> {
        get(k)?.parse().map_err(|_| Error::Record(format!("aux `{k}` is not a number")))
    };
    let counts = |k: &str, n: usize| -> Result<Vec<u64>, Error> {
        let v: Result<Vec<u64>, _> = get(k)?.split('/').map(str::parse).collect();
        let v = v.map_err(|_| Error::Record(format!("aux `{k}` has a non-integer count")))?;
        if v.len() != n {
            return Err(Error::Record(format!("aux `{k}` has {} counts, expected {n}", v.len())));
        }
        Ok(v)
    };
    Ok(match kind {
        TestKind::MatrixRank => Auxiliary::RankHistogram {
            counts: counts("ranks", 3)?.try_into().expect("length checked"),
            min_rank: int("min")?,
            max_rank: int("max")?,
        },
        TestKind::LinearComp => Auxiliary::ComplexityBuckets {
            counts: counts("buckets", COMPLEXITY_BUCKETS)?.try_into().expect("length checked"),
            min_complexity: int("min")?,
            max_complexity: int("max")?,
            saturation: Tail {
                p: float("sat_p")?,
                log10_p: float("sat_log10_p")?,
                log10_one_minus_p: float("sat_log10_1mp")?,
            },
            saturation_verdict: get("sat_verdict")?.parse()?,
        },
    })
}

/// Serde adapter that writes non-finite floats as the strings `"NaN"`,
/// `"inf"` and `"-inf"`, which JSON cannot represent as numbers.
mod lossless_f64 {
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};
    use std::fmt;

    pub fn serialize<S: Serializer>(v: &f64, ser: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            ser.serialize_f64(*v)
        } else if v.is_nan() {
            ser.serialize_str("NaN")
        } else if *v > 0.0 {
            ser.serialize_str("inf")
        } else {
            ser.serialize_str("-inf")
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<f64, D::Error> {
        struct F;
        impl Visitor<'_> for F {
            type Value = f64;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number or one of NaN, inf, -inf")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
                Ok(v)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
                v.parse().map_err(|_| E::custom(format!("not a number: {v}")))
            }
        }
        de.deserialize_any(F)
    }
}

// NaN != NaN, so records compare their floats bitwise in tests via this helper.
#[doc(hidden)]
pub fn records_identical(a: &ResultRecord, b: &ResultRecord) -> bool {
    let same = |x: f64, y: f64| x.to_bits() == y.to_bits() || (x.is_nan() && y.is_nan());
    a.schema == b.schema
        && a.generator == b.generator
        && a.lane == b.lane
        && a.test == b.test
        && a.params == b.params
        && a.seed == b.seed
        && same(a.statistic, b.statistic)
        && same(a.p, b.p)
        && same(a.log10_p, b.log10_p)
        && same(a.log10_1mp, b.log10_1mp)
        && a.verdict == b.verdict
        && a.aux == b.aux
        && a.error == b.error
}

pub fn write_jsonl<W: Write>(records: &[ResultRecord], mut out: W) -> Result<(), Error> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<ResultRecord>, Error> {
    let mut records = Vec::new();
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        records.push(serde_json::from_str(&line)?);
    }
    Ok(records)
}

pub fn write_csv<W: Write>(records: &[ResultRecord], out: W) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<ResultRecord>, Error> {
    let mut rd = csv::Reader::from_reader(input);
    rd.deserialize().map(|r| r.map_err(Error::from)).collect()
}

/// Rebuilds summary rows from flat records (as read back from disk).
///
/// Rows follow first appearance of each generator, and of each lane within
/// it; a test is listed when every record of its cell is decisive.
pub fn summarize_records(records: &[ResultRecord]) -> Result<Vec<SummaryRow>, Error> {
    type CellVerdicts = (TestParams, Vec<Option<Verdict>>);
    type LaneCells = (LaneSpec, Vec<CellVerdicts>);
    let mut gens: Vec<(GeneratorKind, Vec<LaneCells>)> = Vec::new();
    for r in records {
        let g = r.generator_kind()?;
        let l = r.lane_spec()?;
        let t = r.test_params()?;
        let v = r.verdict()?;
        let gi = gens.iter().position(|(k, _)| *k == g).unwrap_or_else(|| {
            gens.push((g, Vec::new()));
            gens.len() - 1
        });
        let lanes = &mut gens[gi].1;
        let li = lanes.iter().position(|(k, _)| *k == l).unwrap_or_else(|| {
            lanes.push((l, Vec::new()));
            lanes.len() - 1
        });
        let cells = &mut lanes[li].1;
        match cells.iter_mut().find(|(p, _)| *p == t) {
            Some((_, vs)) => vs.push(v),
            None => cells.push((t, vec![v])),
        }
    }
    Ok(gens
        .into_iter()
        .flat_map(|(generator, lanes)| {
            lanes.into_iter().map(move |(lane, cells)| {
                let mut failed: Vec<String> = Vec::new();
                for (params, verdicts) in cells {
                    let name = params.kind().name();
                    if is_systematic(verdicts) && !failed.iter().any(|f| f == name) {
                        failed.push(name.to_string());
                    }
                }
                SummaryRow { generator, lane, failed }
            })
        })
        .collect())
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    schema: u32,
    generator: &'a str,
    lane: &'a str,
    failed: &'a [String],
}

/// Renders the systematic-failure table.
pub fn render_summary(rows: &[SummaryRow], format: OutputFormat) -> Result<String, Error> {
    let failed_text = |r: &SummaryRow| if r.failed.is_empty() { "-".to_string() } else { r.failed.join(", ") };
    let mut s = String::new();
    match format {
        OutputFormat::HumanTable => {
            let gw = rows.iter().map(|r| r.generator.display_name().len()).max().unwrap_or(0).max(9);
            let lw = rows.iter().map(|r| r.lane.name().len()).max().unwrap_or(0).max(4);
            writeln!(s, "{:<gw$}  {:<lw$}  Failed systematically", "Generator", "Lane").unwrap();
            writeln!(s, "{}  {}  {}", "-".repeat(gw), "-".repeat(lw), "-".repeat(21)).unwrap();
            for r in rows {
                writeln!(s, "{:<gw$}  {:<lw$}  {}", r.generator.display_name(), r.lane.name(), failed_text(r)).unwrap();
            }
        }
        OutputFormat::MarkdownTable => {
            s.push_str("| Generator | Lane | Failed systematically |\n|---|---|---|\n");
            for r in rows {
                writeln!(s, "| {} | {} | {} |", r.generator.display_name(), r.lane.name(), failed_text(r)).unwrap();
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["schema", "generator", "lane", "failed"])?;
            for r in rows {
                w.write_record([
                    SCHEMA_VERSION.to_string(),
                    r.generator.name().to_string(),
                    r.lane.name().to_string(),
                    r.failed.join(";"),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            s = String::from_utf8(bytes).expect("csv output is UTF-8");
        }
        OutputFormat::JsonLines => {
            for r in rows {
                let line = SummaryLine {
                    schema: SCHEMA_VERSION,
                    generator: r.generator.name(),
                    lane: r.lane.name(),
                    failed: &r.failed,
                };
                s.push_str(&serde_json::to_string(&line)?);
                s.push('\n');
            }
        }
    }
    Ok(s)
}

/// Renders individual records (for single-test runs).
pub fn render_records(records: &[ResultRecord], format: OutputFormat) -> Result<String, Error> {
    Ok(match format {
        OutputFormat::HumanTable => {
            let mut s = String::new();
            for r in records {
                writeln!(s, "generator  {}", r.generator).unwrap();
                writeln!(s, "lane       {}", r.lane).unwrap();
                writeln!(s, "seed       {}", r.seed).unwrap();
                writeln!(s, "test       {} ({})", r.test, r.params).unwrap();
                if !r.error.is_empty() {
                    writeln!(s, "error      {}", r.error).unwrap();
                    continue;
                }
                writeln!(s, "statistic  {:.6}", r.statistic).unwrap();
                writeln!(s, "p          {:e}  (log10 p = {:.3}, log10(1-p) = {:.3})", r.p, r.log10_p, r.log10_1mp)
                    .unwrap();
                writeln!(s, "detail     {}", r.aux).unwrap();
                writeln!(s, "verdict    {}", r.verdict).unwrap();
            }
            s
        }
        OutputFormat::MarkdownTable => {
            let mut s = String::from(
                "| Generator | Lane | Seed | Test | Params | Statistic | log10 p | log10(1-p) | Verdict |\n|---|---|---|---|---|---|---|---|---|\n",
            );
            for r in records {
                writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {:.4} | {:.3} | {:.3} | {} |",
                    r.generator, r.lane, r.seed, r.test, r.params, r.statistic, r.log10_p, r.log10_1mp, r.verdict
                )
                .unwrap();
            }
            s
        }
        OutputFormat::Csv => {
            let mut buf = Vec::new();
            write_csv(records, &mut buf)?;
            String::from_utf8(buf).expect("csv output is UTF-8")
        }
        OutputFormat::JsonLines => {
            let mut buf = Vec::new();
            write_jsonl(records, &mut buf)?;
            String::from_utf8(buf).expect("json output is UTF-8")
        }
    })
}

/// Deterministic description of a campaign, written next to its results.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema: u32,
    pub version: String,
    pub generators: Vec<String>,
    pub lanes: Vec<String>,
    pub tests: Vec<String>,
    pub seeds: Vec<u64>,
    pub thresholds: Thresholds,
}

impl Manifest {
    pub fn from_report(report: &CampaignReport) -> Self {
        let c = &report.config;
        Manifest {
            schema: SCHEMA_VERSION,
            version: report.metadata.version.clone(),
            generators: c.generators.iter().map(|g| g.name().to_string()).collect(),
            lanes: c.lanes.iter().map(|l| l.name().to_string()).collect(),
            tests: c.tests.iter().map(|t| format!("{}({t})", t.kind())).collect(),
            seeds: c.seeds.clone(),
            thresholds: c.thresholds,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::battery::{LinearCompParams, MatrixRankParams};
    use crate::campaign::{run_campaign, summarize, CampaignConfig};
    use proptest::prelude::*;

    fn tiny_report() -> CampaignReport {
        run_campaign(&CampaignConfig {
            generators: vec![GeneratorKind::Xoroshiro128Plus, GeneratorKind::SplitMix64],
            lanes: vec![LaneSpec::LOW32_REVERSED, LaneSpec::INTERLEAVE],
            tests: vec![
                TestParams::LinearComp(LinearCompParams { block_bits: 300, blocks: 20, bits_per_word: 1 }),
                TestParams::MatrixRank(MatrixRankParams { dim: 160, matrices: 20, bits_per_word: 1 }),
            ],
            seeds: vec![3, 4],
            workers: 1,
            thresholds: Thresholds::default(),
        })
        .unwrap()
    }

    #[test]
    fn records_round_trip_through_both_formats() {
        let report = tiny_report();
        let records = report_records(&report);
        assert_eq!(records.len(), 16);

        let mut buf = Vec::new();
        write_jsonl(&records, &mut buf).unwrap();
        let back = read_jsonl(buf.as_slice()).unwrap();
        assert_eq!(back, records);

        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        let back = read_csv(buf.as_slice()).unwrap();
        assert_eq!(back, records);

        let outcomes: Vec<&Outcome> = report.cells.iter().flat_map(|c| c.runs.iter().map(|r| &r.outcome)).collect();
        for (rec, outcome) in records.iter().zip(outcomes) {
            assert_eq!(&rec.to_outcome().unwrap(), outcome);
        }
    }

    #[test]
    fn failed_outcome_round_trips() {
        let outcome = Outcome::Failed { error: "seed expands to the all-zero state".into() };
        let params = TestParams::default_for(TestKind::MatrixRank);
        let rec = ResultRecord::new(GeneratorKind::Xorshift128Plus, LaneSpec::INTERLEAVE, &params, 9, &outcome);
        let mut buf = Vec::new();
        write_jsonl(std::slice::from_ref(&rec), &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.contains("\"statistic\":\"NaN\""), "{text}");
        let back = read_jsonl(buf.as_slice()).unwrap();
        assert!(records_identical(&back[0], &rec));
        assert_eq!(back[0].to_outcome().unwrap(), outcome);

        let mut buf = Vec::new();
        write_csv(std::slice::from_ref(&rec), &mut buf).unwrap();
        let back = read_csv(buf.as_slice()).unwrap();
        assert!(records_identical(&back[0], &rec));
    }

    #[test]
    fn summary_from_records_matches_report() {
        let report = tiny_report();
        let rows = summarize(&report);
        assert_eq!(summarize_records(&report_records(&report)).unwrap(), rows);
        assert_eq!(rows[0].failed, ["LinearComp", "MatrixRank"]);
    }

    #[test]
    fn rendering() {
        let rows = vec![
            SummaryRow {
                generator: GeneratorKind::Xorshift128PlusV8,
                lane: LaneSpec::LOW32_REVERSED,
                failed: vec!["LinearComp".into(), "MatrixRank".into()],
            },
            SummaryRow { generator: GeneratorKind::SplitMix64, lane: LaneSpec::LOW32_REVERSED, failed: vec![] },
        ];
        let md = render_summary(&rows, OutputFormat::MarkdownTable).unwrap();
        assert!(md.contains("| xorshift128+ (v8) | low32-rev | LinearComp, MatrixRank |"));
        assert!(md.contains("| splitmix64 | low32-rev | - |"));
        let csv = render_summary(&rows, OutputFormat::Csv).unwrap();
        assert!(csv.starts_with("schema,generator,lane,failed\n1,xorshift128+v8,low32-rev,LinearComp;MatrixRank\n"));
        let jl = render_summary(&rows, OutputFormat::JsonLines).unwrap();
        assert_eq!(jl.lines().count(), 2);
        assert!(jl.contains("\"failed\":[]"));
        let human = render_summary(&rows, OutputFormat::HumanTable).unwrap();
        assert!(human.contains("LinearComp, MatrixRank"));
    }

    #[test]
    fn format_names() {
        assert_eq!("md".parse::<OutputFormat>().unwrap(), OutputFormat::MarkdownTable);
        assert_eq!("jsonl".parse::<OutputFormat>().unwrap(), OutputFormat::JsonLines);
        assert!("xml".parse::<OutputFormat>().is_err());
    }

    proptest! {
        #[test]
        fn record_encoding_is_lossless(
            statistic in prop_oneof![any::<f64>(), Just(f64::INFINITY), Just(f64::NEG_INFINITY)],
            log10_p in -1e6f64..0.0,
            counts in proptest::array::uniform7(0u64..1000),
            max in 0usize..5000,
            sat_log in prop_oneof![-1e5f64..0.0, Just(f64::NEG_INFINITY)],
        ) {
            let result = TestResult {
                params: TestParams::default_for(TestKind::LinearComp),
                statistic,
                p_value: 10f64.powf(log10_p),
                log10_p,
                log10_one_minus_p: -(10f64.powf(log10_p)),
                auxiliary: Auxiliary::ComplexityBuckets {
                    counts,
                    min_complexity: max / 2,
                    max_complexity: max,
                    saturation: Tail { p: 1.0, log10_p: 0.0, log10_one_minus_p: sat_log },
                    saturation_verdict: Verdict::Pass,
                },
                verdict: Verdict::Suspect,
            };
            let outcome = Outcome::Completed(result);
            let rec = ResultRecord::new(GeneratorKind::SplitMix64, LaneSpec::ALL[5], &TestParams::default_for(TestKind::LinearComp), 77, &outcome);
            let mut j = Vec::new();
            write_jsonl(std::slice::from_ref(&rec), &mut j).unwrap();
            let mut c = Vec::new();
            write_csv(std::slice::from_ref(&rec), &mut c).unwrap();
            for back in [read_jsonl(j.as_slice()).unwrap(), read_csv(c.as_slice()).unwrap()] {
                prop_assert!(records_identical(&back[0], &rec));
                if !statistic.is_nan() {
                    prop_assert_eq!(back[0].to_outcome().unwrap(), outcome.clone());
                }
            }
        }
    }
}
