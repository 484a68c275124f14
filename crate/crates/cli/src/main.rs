use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use xorlin::battery::{run_test, LinearCompParams, MatrixRankParams, TestKind, TestParams, Thresholds};
use xorlin::bitlane::{LaneSource, LaneSpec};
use xorlin::campaign::{run_campaign, summarize, CampaignConfig, Outcome};
use xorlin::prng::{seed_generator, GeneratorKind};
use xorlin::report::{
    read_csv, read_jsonl, render_records, render_summary, report_records, summarize_records, write_jsonl, Manifest,
    OutputFormat, ResultRecord,
};
use xorlin::Error;

const EXIT_USAGE: u8 = 2;
const EXIT_DECISIVE: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(name = "xorlin", version, about = "Linearity audit for scrambled xorshift generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List generators, lanes and tests.
    List,
    /// Write lane words to stdout as 4-byte little-endian groups.
    Stream(StreamArgs),
    /// Run one test on one generator, lane and seed.
    Test(TestArgs),
    /// Run every (generator, lane, test) cell over a set of seeds.
    Campaign(CampaignArgs),
    /// Re-render results written by `campaign`.
    Report(ReportArgs),
}

#[derive(Args)]
struct StreamArgs {
    #[arg(long = "gen")]
    generator: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "interleave")]
    lane: String,
    /// Number of 32-bit words; unbounded when omitted.
    #[arg(long)]
    words: Option<u64>,
}

#[derive(Args)]
struct ThresholdArgs {
    #[arg(long)]
    threshold_decisive: Option<f64>,
    #[arg(long)]
    threshold_suspect: Option<f64>,
}

impl ThresholdArgs {
    fn apply(&self, mut t: Thresholds) -> Thresholds {
        if let Some(d) = self.threshold_decisive {
            t.decisive = d;
        }
        if let Some(s) = self.threshold_suspect {
            t.suspect = s;
        }
        t
    }
}

#[derive(Args)]
struct TestArgs {
    #[arg(long = "gen")]
    generator: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "low32-rev")]
    lane: String,
    /// linearcomp or matrixrank.
    #[arg(long)]
    test: String,
    /// Block length in bits (linearcomp).
    #[arg(long = "m", short = 'M')]
    block_bits: Option<usize>,
    /// Matrix dimension (matrixrank).
    #[arg(long = "l", short = 'L')]
    dim: Option<usize>,
    /// Number of blocks or matrices.
    #[arg(long = "n", short = 'N')]
    count: Option<usize>,
    /// Bits taken from each 32-bit word, most significant first.
    #[arg(long = "s", short = 's')]
    bits_per_word: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(flatten)]
    thresholds: ThresholdArgs,
}

#[derive(Args)]
struct CampaignArgs {
    /// TOML campaign file; flags below override its settings.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Preset::Desk)]
    preset: Preset,
    #[arg(long = "gen", value_delimiter = ',')]
    generators: Vec<String>,
    #[arg(long = "lane", value_delimiter = ',')]
    lanes: Vec<String>,
    /// KIND or KIND:overrides, e.g. `linearcomp:M=500,N=20`.
    #[arg(long = "test")]
    tests: Vec<String>,
    /// Seed list such as `1..10` or `1,5,9`.
    #[arg(long)]
    seeds: Option<String>,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, default_value = "campaign-out")]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    #[command(flatten)]
    thresholds: ThresholdArgs,
}

#[derive(Args)]
struct ReportArgs {
    /// results.jsonl or results.csv from a campaign.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    /// Print every record instead of the summary table.
    #[arg(long)]
    records: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Markdown,
    Csv,
    Jsonl,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Human => OutputFormat::HumanTable,
            Format::Markdown => OutputFormat::MarkdownTable,
            Format::Csv => OutputFormat::Csv,
            Format::Jsonl => OutputFormat::JsonLines,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Desk,
    Paper,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(e: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Csv(_) | Error::Json(_) => EXIT_IO,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_IO, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List => cmd_list(),
        Command::Stream(a) => cmd_stream(a),
        Command::Test(a) => cmd_test(a),
        Command::Campaign(a) => cmd_campaign(a),
        Command::Report(a) => cmd_report(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("xorlin: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn cmd_list() -> Result<u8, Failure> {
    println!("generators:");
    for g in GeneratorKind::ALL {
        println!("  {:<16} {} state bits", g.name(), g.state_bits());
    }
    println!("lanes:");
    for l in LaneSpec::ALL {
        println!("  {}", l.name());
    }
    println!("tests:");
    for k in [TestKind::LinearComp, TestKind::MatrixRank] {
        println!("  {:<16} defaults {}", k.name(), TestParams::default_for(k));
    }
    Ok(0)
}

fn cmd_stream(a: StreamArgs) -> Result<u8, Failure> {
    let kind: GeneratorKind = a.generator.parse()?;
    let lane: LaneSpec = a.lane.parse()?;
    let mut src = LaneSource::new(seed_generator(kind, a.seed)?, lane);
    let stdout = io::stdout();
    let mut out = BufWriter::with_capacity(1 << 16, stdout.lock());
    let mut write_all = || -> io::Result<()> {
        let mut buf = [0u8; 4096];
        let mut remaining = a.words;
        loop {
            let n = remaining.map_or(buf.len() / 4, |r| r.min(buf.len() as u64 / 4) as usize);
            if n == 0 {
                break;
            }
            for chunk in buf[..n * 4].chunks_exact_mut(4) {
                chunk.copy_from_slice(&src.lane_next().to_le_bytes());
            }
            out.write_all(&buf[..n * 4])?;
            if let Some(r) = remaining.as_mut() {
                *r -= n as u64;
            }
        }
        out.flush()
    };
    match write_all() {
        // A closed pipe is how unbounded consumers stop reading.
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(0),
        Err(e) => Err(e.into()),
        Ok(()) => Ok(0),
    }
}

fn cmd_test(a: TestArgs) -> Result<u8, Failure> {
    let kind: GeneratorKind = a.generator.parse()?;
    let lane: LaneSpec = a.lane.parse()?;
    let test: TestKind = a.test.parse()?;
    let params = match test {
        TestKind::LinearComp => {
            if a.dim.is_some() {
                return Err(Failure::usage("--l applies to matrixrank only"));
            }
            let d = LinearCompParams::default();
            TestParams::LinearComp(LinearCompParams {
                block_bits: a.block_bits.unwrap_or(d.block_bits),
                blocks: a.count.unwrap_or(d.blocks),
                bits_per_word: a.bits_per_word.unwrap_or(d.bits_per_word),
            })
        }
        TestKind::MatrixRank => {
            if a.block_bits.is_some() {
                return Err(Failure::usage("--m applies to linearcomp only"));
            }
            let d = MatrixRankParams::default();
            TestParams::MatrixRank(MatrixRankParams {
                dim: a.dim.unwrap_or(d.dim),
                matrices: a.count.unwrap_or(d.matrices),
                bits_per_word: a.bits_per_word.unwrap_or(d.bits_per_word),
            })
        }
    };
    params.validate()?;
    let thresholds = a.thresholds.apply(Thresholds::default());
    thresholds.validate()?;

    let mut src = LaneSource::new(seed_generator(kind, a.seed)?, lane);
    let result = run_test(&mut src, &params, &thresholds)?;
    let verdict = result.verdict;
    let record = ResultRecord::new(kind, lane, &params, a.seed, &Outcome::Completed(result));
    print!("{}", render_records(&[record], a.format.into())?);
    Ok(if verdict.is_decisive() { EXIT_DECISIVE } else { 0 })
}

fn parse_seeds(text: &str) -> Result<Vec<u64>, Failure> {
    let bad = || Failure::usage(format!("bad seed list `{text}`"));
    let mut seeds = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u64 = hi.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            seeds.extend(lo..=hi);
        } else {
            seeds.push(part.parse().map_err(|_| bad())?);
        }
    }
    if seeds.is_empty() {
        return Err(bad());
    }
    Ok(seeds)
}

/// `linearcomp` or `linearcomp:M=500,N=20`; missing fields keep their defaults.
fn parse_test_spec(text: &str) -> Result<TestParams, Failure> {
    let (kind, overrides) = text.split_once(':').unwrap_or((text, ""));
    let kind: TestKind = kind.parse()?;
    let defaults = TestParams::default_for(kind).to_string();
    let merged = format!("{defaults},{overrides}");
    // Later keys win in the parser's map.
    Ok(TestParams::parse(kind, &merged)?)
}

fn campaign_config(a: &CampaignArgs) -> Result<CampaignConfig, Failure> {
    let mut config = match &a.config {
        Some(path) => CampaignConfig::load(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        None => match a.preset {
            Preset::Desk => CampaignConfig::desk(),
            Preset::Paper => CampaignConfig::paper(),
        },
    };
    if !a.generators.is_empty() {
        config.generators = a.generators.iter().map(|g| g.parse()).collect::<Result<_, Error>>()?;
    }
    if !a.lanes.is_empty() {
        config.lanes = a.lanes.iter().map(|l| l.parse()).collect::<Result<_, Error>>()?;
    }
    if !a.tests.is_empty() {
        config.tests = a.tests.iter().map(|t| parse_test_spec(t)).collect::<Result<_, _>>()?;
    }
    if let Some(seeds) = &a.seeds {
        config.seeds = parse_seeds(seeds)?;
    }
    if let Some(w) = a.workers {
        config.workers = w;
    }
    config.thresholds = a.thresholds.apply(config.thresholds);
    config.validate()?;
    Ok(config)
}

fn cmd_campaign(a: CampaignArgs) -> Result<u8, Failure> {
    let config = campaign_config(&a)?;
    let format: OutputFormat = a.format.into();
    // Fail on an unusable output directory before spending time on the run.
    fs::create_dir_all(&a.out).map_err(|e| io_failure(&a.out, e))?;

    let started = Instant::now();
    let report = run_campaign(&config)?;
    let records = report_records(&report);
    let summary = render_summary(&summarize(&report), format)?;

    let mut results = Vec::new();
    write_jsonl(&records, &mut results)?;
    write_file(&a.out.join("results.jsonl"), &results)?;
    write_file(&a.out.join(format!("summary.{}", format.extension())), summary.as_bytes())?;
    let manifest = serde_json::to_string_pretty(&Manifest::from_report(&report)).map_err(Error::from)? + "\n";
    write_file(&a.out.join("manifest.json"), manifest.as_bytes())?;

    print!("{summary}");
    eprintln!(
        "{} cells x {} seeds in {:.1}s, results in {}",
        report.cells.len(),
        config.seeds.len(),
        started.elapsed().as_secs_f64(),
        a.out.display()
    );
    Ok(0)
}

fn cmd_report(a: ReportArgs) -> Result<u8, Failure> {
    let file = fs::File::open(&a.input).map_err(|e| io_failure(&a.input, e))?;
    let records = if a.input.extension().is_some_and(|e| e == "csv") {
        read_csv(file)?
    } else {
        read_jsonl(io::BufReader::new(file))?
    };
    let format = a.format.into();
    let text = if a.records {
        render_records(&records, format)?
    } else {
        render_summary(&summarize_records(&records)?, format)?
    };
    print!("{text}");
    Ok(0)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| io_failure(path, e))
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure { code: EXIT_IO, message: format!("{}: {e}", path.display()) }
}
