//! Linearity audit for scrambled xorshift generators.
//!
//! The low bits of xorshift-family generators with additive or
//! multiplicative scramblers remain GF(2)-linear. This crate makes that
//! visible: it cuts 32-bit lanes out of the 64-bit output (optionally
//! bit-reversed), feeds them to matrix-rank and linear-complexity tests,
//! and runs those tests over many seeds to separate systematic failures
//! from bad luck.
//!
//! ```
//! use xorlin::prelude::*;
//!
//! let gen = seed_generator(GeneratorKind::Xorshift128Plus, 1).unwrap();
//! let mut src = LaneSource::new(gen, LaneSpec::LOW32_REVERSED);
//! let params = LinearCompParams { block_bits: 500, blocks: 20, bits_per_word: 1 };
//! let result = linear_complexity_test(&mut src, &params, &Thresholds::default()).unwrap();
//! assert!(result.verdict.is_decisive());
//! ```

pub mod battery;
pub mod bitlane;
pub mod campaign;
pub mod error;
pub mod f2math;
pub mod prng;
pub mod report;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::battery::{
        classify, linear_complexity_test, matrix_rank_test, LinearCompParams, MatrixRankParams, TestKind, TestParams,
        TestResult, Thresholds, Verdict,
    };
    pub use crate::bitlane::{reverse32, BitSource, LaneSelector, LaneSource, LaneSpec};
    pub use crate::campaign::{run_campaign, summarize, CampaignConfig, CampaignReport};
    pub use crate::error::Error;
    pub use crate::prng::{seed_generator, GeneratorKind, GeneratorState};
}
