//! Ground truth that shares no code path with the ladder: the directed edge
//! matrix `W` with `N_k = trace(W^k)`, a Jacobi eigensolver, and the
//! eigenvalue form `H_k = 2(n-1) - sum_{i>=2} T_k(lambda_i / sqrt q)`.

mod chebyshev;
mod jacobi;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::Result;
use crate::graph::RegularGraph;
use crate::ladder::Ladder;
use crate::numeric::BigMatrix;

pub use chebyshev::chebyshev;
pub use jacobi::{symmetric_eigenvalues, JACOBI_MAX_SWEEPS};

/// Default off-diagonal tolerance for the eigensolver.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Non-backtracking matrix on oriented edges.
#[derive(Clone, Debug)]
pub struct EdgeMatrix {
    pub w: BigMatrix,
}

impl EdgeMatrix {
    pub fn order(&self) -> usize {
        self.w.order()
    }
}

/// `W[e][f] = 1` iff `e` ends where `f` starts and `f` is not `e` reversed.
/// Indexing follows [`RegularGraph::oriented_edges`].
pub fn edge_matrix(g: &RegularGraph) -> EdgeMatrix {
    let oriented = g.oriented_edges();
    let w = BigMatrix::from_fn(oriented.len(), |e, f| {
        let (e, f) = (oriented[e], oriented[f]);
        BigInt::from((e.end == f.start && f != e.inverse()) as u8)
    });
    EdgeMatrix { w }
}

/// `N_k = trace(W^k)`.
pub fn ngc_oracle(g: &RegularGraph, k: u64) -> BigInt {
    edge_matrix(g).w.pow(k).trace()
}

/// Adjacency eigenvalues, descending.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    /// The nontrivial eigenvalues `lambda_2 ..= lambda_n`.
    pub fn nontrivial(&self) -> &[f64] {
        &self.eigenvalues[1..]
    }
}

pub fn eigen_spectrum(g: &RegularGraph, tol: f64) -> Result<Spectrum> {
    let mut eigenvalues = symmetric_eigenvalues(g.adjacency_f64(), tol)?;
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    Ok(Spectrum { eigenvalues, tol })
}

/// `H_k` from the spectrum, in floating point.
pub fn h_oracle(g: &RegularGraph, k: u64, tol: f64) -> Result<f64> {
    let spectrum = eigen_spectrum(g, tol)?;
    Ok(h_from_spectrum(g.n(), g.q(), spectrum.nontrivial(), k))
}

pub fn h_from_spectrum(n: usize, q: u64, nontrivial: &[f64], k: u64) -> f64 {
    let sq = (q as f64).sqrt();
    let sum: f64 = nontrivial.iter().map(|&l| chebyshev(k, &(l / sq))).sum();
    2.0 * (n as f64 - 1.0) - sum
}

/// Exact `H_k` for even `k` from a known integer spectrum (`lambda_1` first),
/// using `T_{2j}(x) = T_j(x^2 - 2)` so every term stays rational.
pub fn h_exact_even(q: u64, eigenvalues: &[i64], k: u64) -> Option<BigRational> {
    if !k.is_multiple_of(2) || eigenvalues.is_empty() {
        return None;
    }
    let two = BigRational::from_integer(2.into());
    let qr = BigRational::from_integer(q.into());
    let sum = eigenvalues[1..]
        .iter()
        .map(|&l| {
            let x = BigRational::from_integer((l * l).into()) / &qr - &two;
            chebyshev(k / 2, &x)
        })
        .fold(BigRational::from_integer(0.into()), |acc, t| acc + t);
    let n = eigenvalues.len() as i64;
    Some(BigRational::from_integer((2 * (n - 1)).into()) - sum)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MuReport {
    /// `max_{i>=2} |lambda_i| / sqrt q`.
    pub mu: f64,
    /// `q + 1 - max_{i>=2} |lambda_i|`.
    pub spectral_gap: f64,
    /// All eigenvalues with `|lambda| < q+1` are at most `2 sqrt q` in magnitude.
    pub is_ramanujan: bool,
}

pub fn mu_from_spectrum(q: u64, spectrum: &Spectrum) -> MuReport {
    let degree = q as f64 + 1.0;
    let sq = (q as f64).sqrt();
    let slack = spectrum.tol.max(1e-9);
    let max_abs = spectrum
        .nontrivial()
        .iter()
        .map(|l| l.abs())
        .fold(0.0, f64::max);
    let is_ramanujan = spectrum
        .eigenvalues
        .iter()
        .map(|l| l.abs())
        .filter(|&a| a < degree - slack)
        .all(|a| a <= 2.0 * sq + slack);
    MuReport {
        mu: max_abs / sq,
        spectral_gap: degree - max_abs,
        is_ramanujan,
    }
}

pub fn mu_oracle(g: &RegularGraph, tol: f64) -> Result<MuReport> {
    Ok(mu_from_spectrum(g.q(), &eigen_spectrum(g, tol)?))
}

/// First `k <= k_max` violating the geodesic-count bounds
/// `|N_k - q^k - 1| <= 2(n-1) q^{k/2}` (odd `k`) and
/// `|N_k - n(q-1) - q^k - 1| <= 2(n-1) q^{k/2}` (even `k`).
/// Compared exactly after squaring both sides.
pub fn nk_bounds_first_violation(g: &RegularGraph, k_max: u64) -> Result<Option<u64>> {
    let ladder = Ladder::new(g);
    let q = BigInt::from(g.q());
    let n = BigInt::from(g.n() as u64);
    let shift_even = &n * (&q - 1);
    let radius_sq = BigInt::from(4) * (&n - 1) * (&n - 1);
    for k in 1..=k_max {
        let nk = ladder.ngc(k)?;
        let qk = Pow::pow(&q, k);
        let mut dev = nk - &qk - BigInt::one();
        if k % 2 == 0 {
            dev -= &shift_even;
        }
        if &dev * &dev > &radius_sq * &qk {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

pub fn nk_bounds_check(g: &RegularGraph, k_max: u64) -> Result<bool> {
    Ok(nk_bounds_first_violation(g, k_max)?.is_none())
}
