use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::RegularGraph;

/// Graphs available by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    /// K_{3,3}.
    Utility,
    /// The 3-cube Q₃.
    Cube,
    /// Chvátal's 4-regular graph on 12 vertices.
    Chvatal,
    Petersen,
    Complete(usize),
    Cycle(usize),
}

const CHVATAL_EDGES: [(usize, usize); 24] = [
    (0, 1),
    (0, 4),
    (0, 6),
    (0, 9),
    (1, 2),
    (1, 5),
    (1, 7),
    (2, 3),
    (2, 6),
    (2, 8),
    (3, 4),
    (3, 7),
    (3, 9),
    (4, 5),
    (4, 8),
    (5, 10),
    (5, 11),
    (6, 10),
    (6, 11),
    (7, 8),
    (7, 11),
    (8, 10),
    (9, 10),
    (9, 11),
];

impl NamedGraph {
    pub fn build(self) -> Result<RegularGraph> {
        match self {
            NamedGraph::Utility => {
                let edges: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
                RegularGraph::from_edges(6, &edges)
            }
            NamedGraph::Cube => {
                let edges: Vec<_> = (0..8usize)
                    .flat_map(|u| [1, 2, 4].into_iter().map(move |bit| (u, u ^ bit)))
                    .filter(|(u, v)| u < v)
                    .collect();
                RegularGraph::from_edges(8, &edges)
            }
            NamedGraph::Chvatal => RegularGraph::from_edges(12, &CHVATAL_EDGES),
            NamedGraph::Petersen => {
                let edges: Vec<_> = (0..5)
                    .flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)])
                    .collect();
                RegularGraph::from_edges(10, &edges)
            }
            NamedGraph::Complete(k) => {
                if k < 3 {
                    return Err(Error::InfeasibleParameters(format!(
                        "complete({k}) needs at least 3 vertices"
                    )));
                }
                let edges: Vec<_> = (0..k)
                    .flat_map(|u| ((u + 1)..k).map(move |v| (u, v)))
                    .collect();
                RegularGraph::from_edges(k, &edges)
            }
            NamedGraph::Cycle(k) => {
                if k < 3 {
                    return Err(Error::InfeasibleParameters(format!(
                        "cycle({k}) needs at least 3 vertices"
                    )));
                }
                let edges: Vec<_> = (0..k).map(|u| (u, (u + 1) % k)).collect();
                RegularGraph::from_edges(k, &edges)
            }
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let name = s.trim().to_ascii_lowercase();
        let param = |prefix: &str| -> Option<usize> {
            name.strip_prefix(prefix)?
                .strip_prefix('(')?
                .strip_suffix(')')?
                .trim()
                .parse()
                .ok()
        };
        match name.as_str() {
            "utility" | "k33" => Ok(NamedGraph::Utility),
            "cube" => Ok(NamedGraph::Cube),
            "chvatal" => Ok(NamedGraph::Chvatal),
            "petersen" => Ok(NamedGraph::Petersen),
            _ => param("complete")
                .map(NamedGraph::Complete)
                .or_else(|| param("cycle").map(NamedGraph::Cycle))
                .ok_or_else(|| Error::UnknownGraph(s.to_string())),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Utility => write!(f, "utility"),
            NamedGraph::Cube => write!(f, "cube"),
            NamedGraph::Chvatal => write!(f, "chvatal"),
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::Complete(k) => write!(f, "complete({k})"),
            NamedGraph::Cycle(k) => write!(f, "cycle({k})"),
        }
    }
}

/// Looks up a graph by name, e.g. `"chvatal"` or `"cycle(5)"`.
pub fn named_graph(name: &str) -> Result<RegularGraph> {
    name.parse::<NamedGraph>()?.build()
}
