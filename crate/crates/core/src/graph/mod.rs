//! Connected `(q+1)`-regular simple graphs.
//!
//! A [`RegularGraph`] can only be obtained through validation, so every value
//! of the type is symmetric, loop-free, regular of degree at least 2 and
//! connected.

mod edgelist;
mod named;
mod random;

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::BigMatrix;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use named::{named_graph, NamedGraph};
pub use random::random_regular;

/// One direction of an undirected edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrientedEdge {
    pub start: usize,
    pub end: usize,
}

impl OrientedEdge {
    pub fn inverse(self) -> Self {
        Self {
            start: self.end,
            end: self.start,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularGraph {
    n: usize,
    q: u64,
    adjacency: BigMatrix,
    neighbors: Vec<Vec<usize>>,
}

impl RegularGraph {
    /// Validates a candidate adjacency matrix.
    pub fn validate(adjacency: BigMatrix) -> Result<Self> {
        let n = adjacency.order();
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        let one = BigInt::one();
        for i in 0..n {
            for j in 0..n {
                let x = adjacency.get(i, j);
                if !x.is_zero() && *x != one {
                    return Err(Error::NonBinary { row: i, col: j });
                }
            }
        }
        for i in 0..n {
            if !adjacency.get(i, i).is_zero() {
                return Err(Error::SelfLoop(i));
            }
            for j in (i + 1)..n {
                if adjacency.get(i, j) != adjacency.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        let neighbors: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| adjacency.get(i, j).is_one()).collect())
            .collect();
        let degree = neighbors[0].len();
        if let Some((vertex, nb)) = neighbors
            .iter()
            .enumerate()
            .find(|(_, nb)| nb.len() != degree)
        {
            return Err(Error::Irregular {
                vertex,
                degree: nb.len(),
                expected: degree,
            });
        }
        if degree < 2 {
            return Err(Error::DegreeTooLow(degree));
        }
        let reached = bfs_reach(&neighbors);
        if reached != n {
            return Err(Error::Disconnected { reached, n });
        }
        Ok(Self {
            n,
            q: degree as u64 - 1,
            adjacency,
            neighbors,
        })
    }

    /// Validates a 0/1 matrix given as rows.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        Self::validate(BigMatrix::from_rows(rows)?)
    }

    /// Builds from an undirected edge list on vertices `0..n`. Duplicate edges
    /// and loops are caught by validation.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut a = BigMatrix::zeros(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            a.set(u, v, BigInt::one());
            a.set(v, u, BigInt::one());
        }
        Self::validate(a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `degree - 1`.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.q as usize + 1
    }

    pub fn adjacency(&self) -> &BigMatrix {
        &self.adjacency
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u, v).is_one()
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    /// All `m = n(q+1)` oriented edges. Edge `j` of [`edges`](Self::edges)
    /// yields index `2j` for `u → v` and `2j + 1` for `v → u`.
    pub fn oriented_edges(&self) -> Vec<OrientedEdge> {
        self.edges()
            .into_iter()
            .flat_map(|(u, v)| {
                let e = OrientedEdge { start: u, end: v };
                [e, e.inverse()]
            })
            .collect()
    }

    /// Adjacency as `f64` rows, for the eigensolver.
    pub fn adjacency_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if self.has_edge(i, j) { 1.0 } else { 0.0 })
                    .collect()
            })
            .collect()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None; self.n];
        color[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            let c = color[u].expect("queued vertices are colored");
            for &v in &self.neighbors[u] {
                match color[v] {
                    None => {
                        color[v] = Some(!c);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == c => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

fn bfs_reach(neighbors: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; neighbors.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &neighbors[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k33_validates() {
        let rows: Vec<Vec<u8>> = (0..6)
            .map(|i| (0..6).map(|j| ((i < 3) != (j < 3)) as u8).collect())
            .collect();
        let g = RegularGraph::from_rows(&rows).unwrap();
        assert_eq!((g.n(), g.q()), (6, 2));
        assert_eq!(g.edges().len(), 9);
        assert_eq!(g.oriented_edges().len(), 18);
        assert!(g.is_bipartite());
    }

    #[test]
    fn path_is_irregular() {
        let err =
            RegularGraph::from_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap_err();
        assert!(matches!(err, Error::Irregular { .. }));
    }

    #[test]
    fn distinct_validation_errors() {
        assert_eq!(
            RegularGraph::from_rows(&[vec![0]]).unwrap_err(),
            Error::TooFewVertices(1)
        );
        assert!(matches!(
            RegularGraph::from_rows(&[vec![0, 2], vec![2, 0]]).unwrap_err(),
            Error::NonBinary { .. }
        ));
        assert_eq!(
            RegularGraph::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap_err(),
            Error::SelfLoop(0)
        );
        assert!(matches!(
            RegularGraph::from_rows(&[vec![0, 1, 1], vec![0, 0, 1], vec![1, 1, 0]]).unwrap_err(),
            Error::NotSymmetric { row: 0, col: 1 }
        ));
        // K2: degree 1, q = 0
        assert_eq!(
            RegularGraph::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap_err(),
            Error::DegreeTooLow(1)
        );
        // two disjoint triangles
        let err = RegularGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
            .unwrap_err();
        assert_eq!(err, Error::Disconnected { reached: 3, n: 6 });
        assert!(matches!(
            RegularGraph::from_rows(&[vec![0, 1], vec![1]]).unwrap_err(),
            Error::NotSquare { .. }
        ));
    }

    #[test]
    fn oriented_edges_pair_up() {
        let g = named_graph("petersen").unwrap();
        let oe = g.oriented_edges();
        assert_eq!(oe.len(), g.n() * g.degree());
        for pair in oe.chunks(2) {
            assert_eq!(pair[0].inverse(), pair[1]);
            assert!(pair[0].start < pair[0].end);
        }
    }
}
