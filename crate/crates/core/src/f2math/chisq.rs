//! Chi-square tail probabilities with log-domain output.
//!
//! The decisive failures this crate hunts for land hundreds of orders of
//! magnitude past `f64` underflow, so every tail is carried as `log10` of
//! both `p` and `1 - p` next to the linear value.

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::Error;

const LN_10: f64 = std::f64::consts::LN_10;
const MAX_ITER: usize = 10_000;
const EPS: f64 = 1e-16;
const TINY: f64 = 1e-300;

/// An upper-tail probability together with both log tails.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tail {
    pub p: f64,
    pub log10_p: f64,
    pub log10_one_minus_p: f64,
}

impl Tail {
    /// From a linear probability; logs are only as good as `p` itself.
    pub fn from_p(p: f64) -> Self {
        Tail { p, log10_p: p.log10(), log10_one_minus_p: (-p).ln_1p() / LN_10 }
    }

    /// From the natural logs of both tails.
    pub fn from_ln(ln_p: f64, ln_one_minus_p: f64) -> Self {
        Tail { p: ln_p.exp(), log10_p: ln_p / LN_10, log10_one_minus_p: ln_one_minus_p / LN_10 }
    }

    /// The tail on the other side: `p` and `1 - p` swapped.
    pub fn complement(self) -> Self {
        Tail { p: 10f64.powf(self.log10_one_minus_p), log10_p: self.log10_one_minus_p, log10_one_minus_p: self.log10_p }
    }
}

/// `(ln P(a, x), ln Q(a, x))`, the regularized lower and upper incomplete
/// gamma functions. Series for `x < a + 1`, Lentz continued fraction otherwise.
pub fn ln_regularized_gamma(a: f64, x: f64) -> (f64, f64) {
    debug_assert!(a > 0.0 && x >= 0.0);
    if x == 0.0 {
        return (f64::NEG_INFINITY, 0.0);
    }
    let ln_prefix = -x + a * x.ln() - ln_gamma(a);
    if x < a + 1.0 {
        let mut ap = a;
        let mut del = 1.0 / a;
        let mut sum = del;
        for _ in 0..MAX_ITER {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if del.abs() < sum.abs() * EPS {
                break;
            }
        }
        let ln_p = ln_prefix + sum.ln();
        (ln_p, (-ln_p.exp()).ln_1p())
    } else {
        let mut b = x + 1.0 - a;
        let mut c = 1.0 / TINY;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..MAX_ITER {
            let an = -(i as f64) * (i as f64 - a);
            b += 2.0;
            d = an * d + b;
            if d.abs() < TINY {
                d = TINY;
            }
            c = b + an / c;
            if c.abs() < TINY {
                c = TINY;
            }
            d = 1.0 / d;
            let del = d * c;
            h *= del;
            if (del - 1.0).abs() < EPS {
                break;
            }
        }
        let ln_q = ln_prefix + h.ln();
        ((-ln_q.exp()).ln_1p(), ln_q)
    }
}

/// Upper tail `P(chi2_k >= x)` with both log tails.
pub fn chisq_tail(x: f64, k: u32) -> Result<Tail, Error> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::Domain(format!("chi-square statistic {x} must be non-negative")));
    }
    if k < 1 {
        return Err(Error::Domain("chi-square needs at least one degree of freedom".into()));
    }
    let (ln_lower, ln_upper) = ln_regularized_gamma(f64::from(k) / 2.0, x / 2.0);
    Ok(Tail::from_ln(ln_upper, ln_lower))
}

pub fn chisq_pvalue(x: f64, k: u32) -> Result<f64, Error> {
    chisq_tail(x, k).map(|t| t.p)
}

/// Pearson statistic of observed counts against cell probabilities.
pub fn pearson_statistic(observed: &[u64], probs: &[f64]) -> f64 {
    assert_eq!(observed.len(), probs.len());
    let n: u64 = observed.iter().sum();
    observed
        .iter()
        .zip(probs)
        .map(|(&o, &p)| {
            let e = n as f64 * p;
            let d = o as f64 - e;
            d * d / e
        })
        .sum()
}
