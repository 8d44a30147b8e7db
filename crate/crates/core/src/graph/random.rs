use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::RegularGraph;

const MAX_ATTEMPTS: usize = 100_000;

/// Connected `(q+1)`-regular simple graph on `n` vertices from the pairing
/// (configuration) model, rejecting loops, multi-edges and disconnected
/// outcomes. Deterministic for a fixed seed.
pub fn random_regular(n: usize, q: u64, seed: u64) -> Result<RegularGraph> {
    let degree = q as usize + 1;
    if q < 1 {
        return Err(Error::InfeasibleParameters(format!("q = {q}, need q >= 1")));
    }
    if !(n * degree).is_multiple_of(2) {
        return Err(Error::InfeasibleParameters(format!(
            "n(q+1) = {} is odd",
            n * degree
        )));
    }
    if n < degree + 1 {
        return Err(Error::InfeasibleParameters(format!(
            "n = {n} is below q + 2 = {}",
            degree + 1
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n)
        .flat_map(|v| std::iter::repeat_n(v, degree))
        .collect();
    'attempt: for _ in 0..MAX_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut seen = HashSet::with_capacity(points.len() / 2);
        let mut edges = Vec::with_capacity(points.len() / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        match RegularGraph::from_edges(n, &edges) {
            Ok(g) => return Ok(g),
            Err(Error::Disconnected { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RejectionBudget(MAX_ATTEMPTS))
}
