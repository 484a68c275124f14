//! Exact null distributions for the rank and linear-complexity statistics.

use crate::error::Error;

/// `log2` of the probability that a uniform random `dim × dim` GF(2) matrix
/// has rank exactly `r`:
///
/// ```text
/// 2^{r(2L - r) - L^2} * prod_{i<r} (1 - 2^{i-L})^2 / (1 - 2^{i-r})
/// ```
///
/// Evaluated entirely in the log domain, so huge `dim` is fine.
pub fn rank_log2_probability(dim: usize, r: usize) -> Result<f64, Error> {
    if dim == 0 || r > dim {
        return Err(Error::Domain(format!("rank {r} of a {dim}x{dim} matrix")));
    }
    let (l, rf) = (dim as f64, r as f64);
    let mut log2p = rf * (2.0 * l - rf) - l * l;
    for i in 0..r {
        let a = log2_one_minus_pow2(i as f64 - l);
        let b = log2_one_minus_pow2(i as f64 - rf);
        log2p += 2.0 * a - b;
    }
    Ok(log2p)
}

pub fn rank_probability(dim: usize, r: usize) -> Result<f64, Error> {
    rank_log2_probability(dim, r).map(f64::exp2)
}

/// `log2(1 - 2^e)` for `e < 0`.
#[inline]
fn log2_one_minus_pow2(e: f64) -> f64 {
    (-(e.exp2())).ln_1p() / std::f64::consts::LN_2
}

/// `log2` of `sum 2^x` over the inputs, stable for very negative inputs.
pub fn log2_sum_exp2<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let terms: Vec<f64> = terms.into_iter().collect();
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + terms.iter().map(|&t| (t - max).exp2()).sum::<f64>().log2()
}

/// `log2` of the probability that a uniform `m`-bit sequence has linear
/// complexity exactly `c`.
pub fn complexity_log2_pmf(m: usize, c: usize) -> Result<f64, Error> {
    if m == 0 || c > m {
        return Err(Error::Domain(format!("complexity {c} of an {m}-bit block")));
    }
    let mf = m as f64;
    if c == 0 {
        return Ok(-mf);
    }
    let count_log2 = (2 * (m - c)).min(2 * c - 1) as f64;
    Ok(count_log2 - mf)
}

pub fn complexity_pmf(m: usize, c: usize) -> Result<f64, Error> {
    complexity_log2_pmf(m, c).map(f64::exp2)
}

/// Mean linear complexity of a uniform `m`-bit sequence.
pub fn complexity_mean(m: usize) -> f64 {
    let mf = m as f64;
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 }; // (-1)^{m+1}
    mf / 2.0 + (9.0 + sign) / 36.0 - (mf / 3.0 + 2.0 / 9.0) / mf.exp2()
}

/// Normalized deviation `(-1)^m (c - mean) + 2/9`; an integer for every `c`.
pub fn complexity_deviation(m: usize, c: usize) -> f64 {
    let parity = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    parity * (c as f64 - complexity_mean(m)) + 2.0 / 9.0
}

pub const COMPLEXITY_BUCKETS: usize = 7;

/// Minimum block length for the seven-bucket layout.
pub const MIN_COMPLEXITY_BLOCK: usize = 100;

/// Bucket of a deviation: `T <= -2.5`, `(-2.5, -1.5]`, ..., `(1.5, 2.5]`, `T > 2.5`.
pub fn bucket_of_deviation(t: f64) -> usize {
    const EDGES: [f64; 6] = [-2.5, -1.5, -0.5, 0.5, 1.5, 2.5];
    EDGES.iter().position(|&e| t <= e).unwrap_or(COMPLEXITY_BUCKETS - 1)
}

pub fn complexity_bucket(m: usize, c: usize) -> usize {
    bucket_of_deviation(complexity_deviation(m, c))
}

/// Exact bucket probabilities for block length `m`, summed from
/// [`complexity_pmf`].
pub fn complexity_bucket_probs(m: usize) -> Result<[f64; COMPLEXITY_BUCKETS], Error> {
    if m < MIN_COMPLEXITY_BLOCK {
        return Err(Error::Domain(format!("block length {m} below {MIN_COMPLEXITY_BLOCK}; bucket layout unreliable")));
    }
    let mut probs = [0.0; COMPLEXITY_BUCKETS];
    for c in 0..=m {
        probs[complexity_bucket(m, c)] += complexity_pmf(m, c)?;
    }
    Ok(probs)
}

/// `log2 P(C <= c)` for the complexity of a uniform `m`-bit block.
pub fn complexity_log2_cdf(m: usize, c: usize) -> Result<f64, Error> {
    if m == 0 || c > m {
        return Err(Error::Domain(format!("complexity {c} of an {m}-bit block")));
    }
    let terms: Result<Vec<f64>, Error> = (0..=c).map(|k| complexity_log2_pmf(m, k)).collect();
    Ok(log2_sum_exp2(terms?).min(0.0))
}
