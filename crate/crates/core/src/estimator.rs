//! Spectral-expansion decision from two exact `H_k` values, the ratio
//! estimator of `mu(X)`, and the one-sided scan for a negative `H_k`.
//!
//! For even `k`, `H_k >= 0` implies `mu(X) <= 1 + (4n-7)^{1/k}`; the step
//! count is chosen so that this bound is at most `2 + eps`. When both
//! `H_k` and `H_{k+2}` are negative, `sqrt(H'/H) + sqrt(H/H')` approximates
//! `mu(X)` and is compared against `2 + eps` instead. That branch can be wrong
//! when `eps` is large, which is why every produced estimate carries
//! [`EstimateReport::caveat`].

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::RegularGraph;
use crate::ladder::{HValue, Ladder};

#[derive(Clone, Debug, PartialEq)]
pub struct EstimateReport {
    pub epsilon: f64,
    pub k: u64,
    pub k_prime: u64,
    pub h: HValue,
    pub h_prime: HValue,
    pub within_bound: bool,
    /// `sqrt(H'/H) + sqrt(H/H')`, present iff both values are negative.
    pub estimate: Option<f64>,
    /// Set whenever an estimate was produced: the ratio branch is heuristic.
    pub caveat: bool,
}

/// Outcome of scanning `H_1 ..= H_{k_max}` for a negative value. A negative
/// value certifies `mu(X) > 2`; its absence up to `k_max` proves nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub k_max: u64,
    pub first_negative_k: Option<u64>,
    pub all_nonneg: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitEntry {
    /// Lower index `2j` of the pair `(H_{2j}, H_{2j+2})`.
    pub k: u64,
    /// `None` when either value is nonnegative.
    pub value: Option<f64>,
}

/// `k = 2 * ceil(log(4n - 7) / (2 log(1 + eps)))`.
///
/// The ceiling is taken in `f64`; when the quotient lands within `1e-9` of an
/// integer it is settled exactly by comparing `(1 + eps)^{2t}` with `4n - 7`
/// in rationals.
pub fn expansion_k(n: usize, epsilon: f64) -> Result<u64> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    if n < 3 {
        return Err(Error::DegenerateOrder(n));
    }
    let target = 4 * n as u64 - 7;
    let x = (target as f64).ln() / (2.0 * epsilon.ln_1p());
    let nearest = x.round();
    let t = if (x - nearest).abs() < 1e-9 && (1.0..1e5).contains(&nearest) {
        let t = nearest as u64;
        let base = BigRational::from_integer(1.into())
            + BigRational::from_float(epsilon).expect("finite epsilon");
        let power = num_traits::pow::Pow::pow(&base, 2 * t);
        if power >= BigRational::from_integer(BigInt::from(target)) {
            t
        } else {
            t + 1
        }
    } else {
        x.ceil() as u64
    };
    Ok(2 * t)
}

/// `sqrt(r) + 1/sqrt(r)` for `r = a/b`, computed as the square root of the
/// exact rational `(a + b)^2 / (ab)`. Symmetric in its arguments by
/// construction. Returns the float and its exact square.
fn ratio_estimate(a: &BigRational, b: &BigRational) -> Option<(f64, BigRational)> {
    if !(a.is_negative() && b.is_negative()) {
        return None;
    }
    let sum = a + b;
    let squared = &sum * &sum / (a * b);
    let value = squared.to_f64()?.sqrt();
    Some((value, squared))
}

fn even_rational(h: &HValue) -> &BigRational {
    h.as_rational().expect("even-index H is rational")
}

/// Runs the spectral-expansion decision for `mu(X) <= 2 + eps`.
pub fn spectral_expansion(g: &RegularGraph, epsilon: f64) -> Result<EstimateReport> {
    let k = expansion_k(g.n(), epsilon)?;
    let k_prime = k + 2;
    let ladder = Ladder::new(g);
    let (h, h_prime) = std::thread::scope(|s| {
        let first = s.spawn(|| ladder.h_value(k));
        let second = ladder.h_value(k_prime);
        (first.join().expect("ladder thread"), second)
    });
    let (h, h_prime) = (h?, h_prime?);

    if h.sign() != Sign::Minus || h_prime.sign() != Sign::Minus {
        return Ok(EstimateReport {
            epsilon,
            k,
            k_prime,
            h,
            h_prime,
            within_bound: true,
            estimate: None,
            caveat: false,
        });
    }
    let (value, squared) =
        ratio_estimate(even_rational(&h), even_rational(&h_prime)).expect("both negative");
    // lambda >= 2 > 0, so lambda <= 2 + eps iff lambda^2 <= (2 + eps)^2
    let bound = BigRational::from_integer(2.into())
        + BigRational::from_float(epsilon).expect("finite epsilon");
    let within_bound = squared <= &bound * &bound;
    Ok(EstimateReport {
        epsilon,
        k,
        k_prime,
        h,
        h_prime,
        within_bound,
        estimate: Some(value),
        caveat: true,
    })
}

/// Ratio estimates for the pairs `(H_{2j}, H_{2j+2})` with `2j = 2, 4, ..., k_max`.
pub fn mu_limit_sequence(g: &RegularGraph, k_max: u64) -> Result<Vec<LimitEntry>> {
    if k_max < 2 {
        return Ok(Vec::new());
    }
    let ladder = Ladder::new(g);
    let top = k_max - k_max % 2 + 2;
    let hs = (1..=top / 2)
        .map(|j| ladder.h_value(2 * j))
        .collect::<Result<Vec<_>>>()?;
    Ok(hs
        .windows(2)
        .map(|w| LimitEntry {
            k: w[0].k,
            value: ratio_estimate(even_rational(&w[0]), even_rational(&w[1])).map(|(v, _)| v),
        })
        .collect())
}

/// Finds the first `k <= k_max` with `H_k < 0`, decided exactly.
pub fn ramanujan_scan(g: &RegularGraph, k_max: u64) -> Result<ScanReport> {
    let ladder = Ladder::new(g);
    let mut first_negative_k = None;
    for k in 1..=k_max {
        if ladder.h_value(k)?.is_negative() {
            first_negative_k = Some(k);
            break;
        }
    }
    Ok(ScanReport {
        k_max,
        first_negative_k,
        all_nonneg: first_negative_k.is_none(),
    })
}

/// `1 + (4n - 7)^{1/k}`: the bound on `mu(X)` certified by `H_k >= 0` at even `k`.
pub fn certified_bound(n: usize, k: u64) -> f64 {
    1.0 + ((4 * n - 7) as f64).powf(1.0 / k as f64)
}
