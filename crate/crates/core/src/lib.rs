pub mod error;
pub mod estimator;
pub mod graph;
pub mod ladder;
pub mod numeric;
pub mod oracle;

pub use error::{Error, Result};
pub use estimator::{
    expansion_k, mu_limit_sequence, ramanujan_scan, spectral_expansion, EstimateReport, LimitEntry,
    ScanReport,
};
pub use graph::{named_graph, random_regular, NamedGraph, OrientedEdge, RegularGraph};
pub use ladder::{h_value, indices, ladder_mult_count, ngc, HValue, IndexLadder, Ladder};
pub use numeric::{BigMatrix, MulCounter, QuadExt};
pub use oracle::{
    edge_matrix, eigen_spectrum, h_oracle, mu_oracle, ngc_oracle, nk_bounds_check, EdgeMatrix,
    MuReport, Spectrum,
};
