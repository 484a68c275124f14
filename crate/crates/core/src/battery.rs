//! Matrix-rank and linear-complexity tests over a [`BitSource`].
//!
//! Both tests read the top `s` bits of each lane word, most significant
//! first. With `s = 1` on a reversed low lane the tested bit is exactly bit
//! 0 of the generator output, which every scrambled xorshift generator
//! leaves linear.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitlane::{BitReader, BitSource};
use crate::error::Error;
use crate::f2math::{
    chisq_tail, complexity_bucket, complexity_bucket_probs, complexity_log2_cdf, gf2_rank, log2_sum_exp2,
    pearson_statistic, rank_log2_probability, BerlekampMassey, BitMatrix, Tail, COMPLEXITY_BUCKETS,
    MIN_COMPLEXITY_BLOCK,
};

const LOG10_2: f64 = std::f64::consts::LOG10_2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TestKind {
    LinearComp,
    MatrixRank,
}

impl TestKind {
    pub fn name(self) -> &'static str {
        match self {
            TestKind::LinearComp => "LinearComp",
            TestKind::MatrixRank => "MatrixRank",
        }
    }
}

impl fmt::Display for TestKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TestKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "linearcomp" | "linearcomplexity" | "lc" => Ok(TestKind::LinearComp),
            "matrixrank" | "rank" | "mr" => Ok(TestKind::MatrixRank),
            _ => Err(Error::UnknownTest(s.to_string())),
        }
    }
}

/// Matrix-rank parameters: `matrices` square matrices of side `dim`,
/// `bits_per_word` bits taken from each lane word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MatrixRankParams {
    pub dim: usize,
    pub matrices: usize,
    pub bits_per_word: u32,
}

impl Default for MatrixRankParams {
    fn default() -> Self {
        MatrixRankParams { dim: 320, matrices: 50, bits_per_word: 1 }
    }
}

impl MatrixRankParams {
    pub fn validate(&self) -> Result<(), Error> {
        let MatrixRankParams { dim, matrices, bits_per_word: s } = *self;
        if dim < 2 {
            return Err(Error::InvalidParams(format!("matrix side L={dim} must be at least 2")));
        }
        if matrices < 20 {
            return Err(Error::InvalidParams(format!("matrix count N={matrices} must be at least 20")));
        }
        if !(1..=32).contains(&s) {
            return Err(Error::InvalidParams(format!("bits per word s={s} must lie in 1..=32")));
        }
        if dim % s as usize != 0 {
            return Err(Error::InvalidParams(format!("L={dim} is not divisible by s={s}")));
        }
        Ok(())
    }

    /// Lane words one run consumes.
    pub fn words_needed(&self) -> u64 {
        (self.matrices * self.dim * self.dim / self.bits_per_word as usize) as u64
    }
}

/// Linear-complexity parameters: `blocks` blocks of `block_bits` bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearCompParams {
    pub block_bits: usize,
    pub blocks: usize,
    pub bits_per_word: u32,
}

impl Default for LinearCompParams {
    fn default() -> Self {
        LinearCompParams { block_bits: 5000, blocks: 50, bits_per_word: 1 }
    }
}

impl LinearCompParams {
    pub fn validate(&self) -> Result<(), Error> {
        let LinearCompParams { block_bits, blocks, bits_per_word: s } = *self;
        if block_bits < MIN_COMPLEXITY_BLOCK {
            return Err(Error::InvalidParams(format!(
                "block length M={block_bits} must be at least {MIN_COMPLEXITY_BLOCK}"
            )));
        }
        if blocks < 20 {
            return Err(Error::InvalidParams(format!("block count N={blocks} must be at least 20")));
        }
        if !(1..=32).contains(&s) {
            return Err(Error::InvalidParams(format!("bits per word s={s} must lie in 1..=32")));
        }
        Ok(())
    }

    /// Complexity at or below which the block maximum counts as saturated.
    pub fn saturation_bound(&self) -> f64 {
        let m = self.block_bits as f64;
        m / 2.0 - 10.0 * m.sqrt()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TestParams {
    LinearComp(LinearCompParams),
    MatrixRank(MatrixRankParams),
}

impl TestParams {
    pub fn kind(&self) -> TestKind {
        match self {
            TestParams::LinearComp(_) => TestKind::LinearComp,
            TestParams::MatrixRank(_) => TestKind::MatrixRank,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        match self {
            TestParams::LinearComp(p) => p.validate(),
            TestParams::MatrixRank(p) => p.validate(),
        }
    }

    pub fn default_for(kind: TestKind) -> Self {
        match kind {
            TestKind::LinearComp => TestParams::LinearComp(LinearCompParams::default()),
            TestKind::MatrixRank => TestParams::MatrixRank(MatrixRankParams::default()),
        }
    }

    /// Parses the [`Display`](fmt::Display) form back, e.g. `M=5000,N=50,s=1`.
    pub fn parse(kind: TestKind, text: &str) -> Result<Self, Error> {
        let mut fields = std::collections::BTreeMap::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| Error::Record(format!("parameter `{part}` lacks `=`")))?;
            let v: usize =
                v.trim().parse().map_err(|_| Error::Record(format!("parameter `{part}` is not an integer")))?;
            fields.insert(k.trim().to_string(), v);
        }
        let get = |key: &str| fields.get(key).copied().ok_or_else(|| Error::Record(format!("missing parameter {key}")));
        let s = u32::try_from(get("s")?).map_err(|_| Error::Record("s out of range".into()))?;
        Ok(match kind {
            TestKind::LinearComp => {
                TestParams::LinearComp(LinearCompParams { block_bits: get("M")?, blocks: get("N")?, bits_per_word: s })
            }
            TestKind::MatrixRank => {
                TestParams::MatrixRank(MatrixRankParams { dim: get("L")?, matrices: get("N")?, bits_per_word: s })
            }
        })
    }
}

impl fmt::Display for TestParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TestParams::LinearComp(p) => write!(f, "M={},N={},s={}", p.block_bits, p.blocks, p.bits_per_word),
            TestParams::MatrixRank(p) => write!(f, "L={},N={},s={}", p.dim, p.matrices, p.bits_per_word),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Suspect,
    DecisiveLow,
    DecisiveHigh,
}

impl Verdict {
    pub fn is_decisive(self) -> bool {
        matches!(self, Verdict::DecisiveLow | Verdict::DecisiveHigh)
    }

    fn severity(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::Suspect => 1,
            Verdict::DecisiveLow | Verdict::DecisiveHigh => 2,
        }
    }

    /// The more severe of two verdicts, `self` on a tie.
    pub fn max_severity(self, other: Verdict) -> Verdict {
        if other.severity() > self.severity() {
            other
        } else {
            self
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "Pass",
            Verdict::Suspect => "Suspect",
            Verdict::DecisiveLow => "DecisiveLow",
            Verdict::DecisiveHigh => "DecisiveHigh",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Pass" => Ok(Verdict::Pass),
            "Suspect" => Ok(Verdict::Suspect),
            "DecisiveLow" => Ok(Verdict::DecisiveLow),
            "DecisiveHigh" => Ok(Verdict::DecisiveHigh),
            _ => Err(Error::Record(format!("unknown verdict `{s}`"))),
        }
    }
}

/// Tail thresholds for [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    pub decisive: f64,
    pub suspect: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds { decisive: 1e-10, suspect: 1e-4 }
    }
}

impl Thresholds {
    pub fn validate(&self) -> Result<(), Error> {
        let ok = |t: f64| t > 0.0 && t < 0.5;
        if !ok(self.decisive) || !ok(self.suspect) || self.decisive > self.suspect {
            return Err(Error::InvalidParams(format!(
                "thresholds need 0 < decisive ({}) <= suspect ({}) < 0.5",
                self.decisive, self.suspect
            )));
        }
        Ok(())
    }
}

/// Verdict for a tail. Uses the log tails, so it stays correct after the
/// linear `p` underflows.
pub fn classify(tail: &Tail, thresholds: &Thresholds) -> Verdict {
    let decisive = thresholds.decisive.log10();
    let suspect = thresholds.suspect.log10();
    if tail.log10_p < decisive {
        Verdict::DecisiveLow
    } else if tail.log10_one_minus_p < decisive {
        Verdict::DecisiveHigh
    } else if tail.log10_p < suspect || tail.log10_one_minus_p < suspect {
        Verdict::Suspect
    } else {
        Verdict::Pass
    }
}

/// Per-test detail behind the headline statistic.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Auxiliary {
    /// Counts of matrices with rank `<= L-2`, `L-1`, `L`.
    RankHistogram { counts: [u64; 3], min_rank: usize, max_rank: usize },
    /// Counts per deviation bucket plus the block-maximum saturation check.
    ComplexityBuckets {
        counts: [u64; COMPLEXITY_BUCKETS],
        min_complexity: usize,
        max_complexity: usize,
        /// `P(max complexity >= observed)` under the null.
        saturation: Tail,
        saturation_verdict: Verdict,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    pub params: TestParams,
    pub statistic: f64,
    pub p_value: f64,
    pub log10_p: f64,
    pub log10_one_minus_p: f64,
    pub auxiliary: Auxiliary,
    pub verdict: Verdict,
}

impl TestResult {
    pub fn kind(&self) -> TestKind {
        self.params.kind()
    }

    pub fn test_name(&self) -> &'static str {
        self.kind().name()
    }

    pub fn tail(&self) -> Tail {
        Tail { p: self.p_value, log10_p: self.log10_p, log10_one_minus_p: self.log10_one_minus_p }
    }
}

/// Runs whichever test `params` describes.
pub fn run_test<S: BitSource + ?Sized>(
    src: &mut S,
    params: &TestParams,
    thresholds: &Thresholds,
) -> Result<TestResult, Error> {
    match params {
        TestParams::LinearComp(p) => linear_complexity_test(src, p, thresholds),
        TestParams::MatrixRank(p) => matrix_rank_test(src, p, thresholds),
    }
}

/// Cell probabilities of the `{<= L-2, L-1, L}` rank categories.
pub fn rank_category_probs(dim: usize) -> Result<[f64; 3], Error> {
    let full = rank_log2_probability(dim, dim)?.exp2();
    let one_short = rank_log2_probability(dim, dim - 1)?.exp2();
    let tail_terms: Result<Vec<f64>, Error> = (0..dim - 1).map(|r| rank_log2_probability(dim, r)).collect();
    let tail = log2_sum_exp2(tail_terms?).exp2();
    Ok([tail, one_short, full])
}

/// Fills `matrices` bit matrices row-major from the source, ranks them, and
/// chi-squares the three rank categories (2 degrees of freedom).
pub fn matrix_rank_test<S: BitSource + ?Sized>(
    src: &mut S,
    params: &MatrixRankParams,
    thresholds: &Thresholds,
) -> Result<TestResult, Error> {
    params.validate()?;
    let dim = params.dim;
    let probs = rank_category_probs(dim)?;
    let mut reader = BitReader::new(src, params.bits_per_word)?;
    let mut counts = [0u64; 3];
    let (mut min_rank, mut max_rank) = (usize::MAX, 0);
    for _ in 0..params.matrices {
        let mut m = BitMatrix::zeros(dim);
        for row in 0..dim {
            reader.read_packed(m.row_mut(row), dim)?;
        }
        let rank = gf2_rank(m);
        min_rank = min_rank.min(rank);
        max_rank = max_rank.max(rank);
        let cat = if rank == dim {
            2
        } else if rank + 1 == dim {
            1
        } else {
            0
        };
        counts[cat] += 1;
    }
    let statistic = pearson_statistic(&counts, &probs);
    let tail = chisq_tail(statistic, 2)?;
    Ok(TestResult {
        params: TestParams::MatrixRank(*params),
        statistic,
        p_value: tail.p,
        log10_p: tail.log10_p,
        log10_one_minus_p: tail.log10_one_minus_p,
        auxiliary: Auxiliary::RankHistogram { counts, min_rank, max_rank },
        verdict: classify(&tail, thresholds),
    })
}

/// Computes the linear complexity of each block, chi-squares the seven
/// deviation buckets (6 degrees of freedom), and checks whether the largest
/// block complexity sits far below the random-sequence mean.
pub fn linear_complexity_test<S: BitSource + ?Sized>(
    src: &mut S,
    params: &LinearCompParams,
    thresholds: &Thresholds,
) -> Result<TestResult, Error> {
    params.validate()?;
    let m = params.block_bits;
    let probs = complexity_bucket_probs(m)?;
    let mut reader = BitReader::new(src, params.bits_per_word)?;
    let mut block = vec![0u64; m.div_ceil(64)];
    let mut bm = BerlekampMassey::default();
    let mut counts = [0u64; COMPLEXITY_BUCKETS];
    let (mut min_c, mut max_c) = (usize::MAX, 0);
    for _ in 0..params.blocks {
        reader.read_packed(&mut block, m)?;
        let c = bm.complexity(&block, m);
        min_c = min_c.min(c);
        max_c = max_c.max(c);
        counts[complexity_bucket(m, c)] += 1;
    }
    let statistic = pearson_statistic(&counts, &probs);
    let tail = chisq_tail(statistic, (COMPLEXITY_BUCKETS - 1) as u32)?;

    // P(max >= c) = 1 - F(c - 1)^N, so log10(1 - p) = N log10 F(c - 1).
    let log10_below = if max_c == 0 {
        f64::NEG_INFINITY
    } else {
        params.blocks as f64 * complexity_log2_cdf(m, max_c - 1)? * LOG10_2
    };
    let below = 10f64.powf(log10_below);
    let saturation =
        Tail { p: 1.0 - below, log10_p: (-below).ln_1p() / std::f64::consts::LN_10, log10_one_minus_p: log10_below };
    let saturation_verdict =
        if (max_c as f64) <= params.saturation_bound() { Verdict::DecisiveHigh } else { Verdict::Pass };

    let verdict = classify(&tail, thresholds).max_severity(saturation_verdict);
    Ok(TestResult {
        params: TestParams::LinearComp(*params),
        statistic,
        p_value: tail.p,
        log10_p: tail.log10_p,
        log10_one_minus_p: tail.log10_one_minus_p,
        auxiliary: Auxiliary::ComplexityBuckets {
            counts,
            min_complexity: min_c,
            max_complexity: max_c,
            saturation,
            saturation_verdict,
        },
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitlane::{ConstantSource, FnSource, LaneSource, LaneSpec, SliceSource};
    use crate::f2math::rank_probability;
    use crate::prng::{seed_generator, GeneratorKind};

    fn lane(kind: GeneratorKind, seed: u64, lane: LaneSpec) -> LaneSource {
        LaneSource::new(seed_generator(kind, seed).unwrap(), lane)
    }

    #[test]
    fn classify_examples() {
        let th = Thresholds::default();
        assert_eq!(classify(&Tail::from_p(0.5), &th), Verdict::Pass);
        assert_eq!(classify(&Tail::from_p(1e-100), &th), Verdict::DecisiveLow);
        assert_eq!(classify(&Tail::from_p(1.0 - 1e-15), &th), Verdict::DecisiveHigh);
        assert_eq!(classify(&Tail::from_p(1e-5), &th), Verdict::Suspect);
        assert_eq!(classify(&Tail::from_p(1.0 - 1e-5), &th), Verdict::Suspect);
        assert_eq!(classify(&Tail::from_ln(-1e6, 0.0), &th), Verdict::DecisiveLow);
        let loose = Thresholds { decisive: 1e-3, suspect: 1e-2 };
        assert_eq!(classify(&Tail::from_p(1e-4), &loose), Verdict::DecisiveLow);
    }

    #[test]
    fn threshold_validation() {
        assert!(Thresholds::default().validate().is_ok());
        assert!(Thresholds { decisive: 1e-2, suspect: 1e-4 }.validate().is_err());
        assert!(Thresholds { decisive: 0.0, suspect: 1e-4 }.validate().is_err());
    }

    #[test]
    fn params_validation() {
        let bad = |p: MatrixRankParams| matches!(p.validate(), Err(Error::InvalidParams(_)));
        assert!(bad(MatrixRankParams { matrices: 0, ..Default::default() }));
        assert!(bad(MatrixRankParams { dim: 1, ..Default::default() }));
        assert!(bad(MatrixRankParams { dim: 320, bits_per_word: 3, ..Default::default() }));
        assert!(MatrixRankParams { dim: 320, bits_per_word: 32, ..Default::default() }.validate().is_ok());
        assert!(LinearCompParams { block_bits: 99, ..Default::default() }.validate().is_err());
        assert!(LinearCompParams { blocks: 19, ..Default::default() }.validate().is_err());
        assert!(LinearCompParams { bits_per_word: 33, ..Default::default() }.validate().is_err());
    }

    #[test]
    fn params_text_round_trip() {
        for p in [
            TestParams::default_for(TestKind::LinearComp),
            TestParams::default_for(TestKind::MatrixRank),
            TestParams::MatrixRank(MatrixRankParams { dim: 64, matrices: 25, bits_per_word: 8 }),
        ] {
            assert_eq!(TestParams::parse(p.kind(), &p.to_string()).unwrap(), p);
        }
        assert!(TestParams::parse(TestKind::LinearComp, "L=3,N=2,s=1").is_err());
    }

    #[test]
    fn rank_categories_partition() {
        for dim in [2usize, 3, 32, 320] {
            let p = rank_category_probs(dim).unwrap();
            assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            assert_eq!(p[2], rank_probability(dim, dim).unwrap());
        }
        let p = rank_category_probs(320).unwrap();
        assert!((p[0] - 0.1336).abs() < 1e-3, "{}", p[0]);
    }

    #[test]
    fn all_zero_source_is_decisive() {
        let th = Thresholds::default();
        let p = LinearCompParams { block_bits: 500, blocks: 20, bits_per_word: 1 };
        let r = linear_complexity_test(&mut ConstantSource(0), &p, &th).unwrap();
        match r.auxiliary {
            Auxiliary::ComplexityBuckets { max_complexity, counts, saturation_verdict, .. } => {
                assert_eq!(max_complexity, 0);
                assert_eq!(counts[0], 20);
                assert_eq!(saturation_verdict, Verdict::DecisiveHigh);
            }
            _ => unreachable!(),
        }
        assert!(r.verdict.is_decisive());

        let mp = MatrixRankParams { dim: 32, matrices: 20, bits_per_word: 1 };
        let r = matrix_rank_test(&mut ConstantSource(0), &mp, &th).unwrap();
        assert_eq!(r.verdict, Verdict::DecisiveLow);
    }

    #[test]
    fn finite_source_runs_dry() {
        let words = vec![0u32; 10];
        let p = LinearCompParams { block_bits: 500, blocks: 20, bits_per_word: 1 };
        let err = linear_complexity_test(&mut SliceSource::new(&words), &p, &Thresholds::default());
        assert!(matches!(err, Err(Error::InsufficientStream { consumed: 10 })));
    }

    #[test]
    fn reversed_low_lane_of_128_bit_generators_fails_both() {
        let th = Thresholds::default();
        for kind in [GeneratorKind::Xorshift128Plus, GeneratorKind::Xorshift128PlusV8, GeneratorKind::Xoroshiro128Plus]
        {
            let r = matrix_rank_test(&mut lane(kind, 1, LaneSpec::LOW32_REVERSED), &MatrixRankParams::default(), &th)
                .unwrap();
            match r.auxiliary {
                Auxiliary::RankHistogram { max_rank, .. } => assert!(max_rank <= 128, "{kind}: {max_rank}"),
                _ => unreachable!(),
            }
            // Every matrix lands in the tail bin: chi2 = N / p_tail - N.
            let p_tail = rank_category_probs(320).unwrap()[0];
            assert!((r.statistic - (50.0 / p_tail - 50.0)).abs() < 1e-9, "{kind}");
            assert!(r.log10_p < -10.0, "{kind}");

            let r =
                linear_complexity_test(&mut lane(kind, 1, LaneSpec::LOW32_REVERSED), &LinearCompParams::default(), &th)
                    .unwrap();
            match r.auxiliary {
                Auxiliary::ComplexityBuckets { max_complexity, .. } => assert!(max_complexity <= 128),
                _ => unreachable!(),
            }
            assert!(r.verdict.is_decisive());
        }
    }

    #[test]
    fn reversed_low_lane_of_1024_bit_generators_saturates_at_state_size() {
        let th = Thresholds::default();
        for kind in [GeneratorKind::Xorshift1024Star, GeneratorKind::Xorshift1024Plus] {
            let r =
                linear_complexity_test(&mut lane(kind, 2, LaneSpec::LOW32_REVERSED), &LinearCompParams::default(), &th)
                    .unwrap();
            match r.auxiliary {
                Auxiliary::ComplexityBuckets { max_complexity, .. } => assert!(max_complexity <= 1024),
                _ => unreachable!(),
            }
            assert!(r.verdict.is_decisive());
        }
    }

    #[test]
    fn splitmix_passes_small_runs() {
        let th = Thresholds::default();
        let p = LinearCompParams { block_bits: 1000, blocks: 30, bits_per_word: 1 };
        let r =
            linear_complexity_test(&mut lane(GeneratorKind::SplitMix64, 4, LaneSpec::LOW32_REVERSED), &p, &th).unwrap();
        assert!(!r.verdict.is_decisive(), "{r:?}");
        let p = MatrixRankParams { dim: 64, matrices: 40, bits_per_word: 8 };
        let r = matrix_rank_test(&mut lane(GeneratorKind::SplitMix64, 4, LaneSpec::INTERLEAVE), &p, &th).unwrap();
        assert!(!r.verdict.is_decisive(), "{r:?}");
    }

    #[test]
    fn multi_bit_consumption_matches_manual_unpacking() {
        // With s = 4 the bit stream is the top nibble of each word, MSB first.
        let th = Thresholds::default();
        let p = LinearCompParams { block_bits: 200, blocks: 20, bits_per_word: 4 };
        let base = lane(GeneratorKind::SplitMix64, 9, LaneSpec::INTERLEAVE);
        let a = linear_complexity_test(&mut base.clone(), &p, &th).unwrap();
        let mut words = base.clone();
        let mut nibbles: Vec<u32> = Vec::new();
        let mut bit_src = FnSource(move || {
            if nibbles.is_empty() {
                let w = words.lane_next() >> 28;
                nibbles = (0..4).rev().map(|i| ((w >> i) & 1) << 31).collect();
                nibbles.reverse();
            }
            nibbles.pop()
        });
        let b = linear_complexity_test(&mut bit_src, &LinearCompParams { bits_per_word: 1, ..p }, &th).unwrap();
        assert_eq!(a.auxiliary_counts(), b.auxiliary_counts());
    }

    impl TestResult {
        fn auxiliary_counts(&self) -> Vec<u64> {
            match &self.auxiliary {
                Auxiliary::RankHistogram { counts, .. } => counts.to_vec(),
                Auxiliary::ComplexityBuckets { counts, .. } => counts.to_vec(),
            }
        }
    }

    #[test]
    fn reproducible() {
        let th = Thresholds::default();
        let p = MatrixRankParams { dim: 64, matrices: 30, bits_per_word: 1 };
        let a = matrix_rank_test(&mut lane(GeneratorKind::Xorshift1024Plus, 5, LaneSpec::ALL[3]), &p, &th).unwrap();
        let b = matrix_rank_test(&mut lane(GeneratorKind::Xorshift1024Plus, 5, LaneSpec::ALL[3]), &p, &th).unwrap();
        assert_eq!(a, b);
    }
}
