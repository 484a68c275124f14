//! GF(2) kernels and the statistics behind the two linearity tests.

mod bm;
mod chisq;
mod dist;
mod rank;

pub use bm::{berlekamp_massey, BerlekampMassey, BitSeq, ComplexityProfile};
pub use chisq::{chisq_pvalue, chisq_tail, ln_regularized_gamma, pearson_statistic, Tail};
pub use dist::{
    bucket_of_deviation, complexity_bucket, complexity_bucket_probs, complexity_deviation, complexity_log2_cdf,
    complexity_log2_pmf, complexity_mean, complexity_pmf, log2_sum_exp2, rank_log2_probability, rank_probability,
    COMPLEXITY_BUCKETS, MIN_COMPLEXITY_BLOCK,
};
pub use rank::{gf2_rank, BitMatrix};
