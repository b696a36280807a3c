//! Graph primitives for Wiener-index computations on graphs of at most 64
//! vertices.

pub mod blocks;
pub mod canon;
pub mod coloring;
pub mod cycles;
pub mod distance;
pub mod error;
pub mod graph;
pub mod ops;
pub mod shard;

pub use blocks::{blocks, cut_vertices, is_biconnected, BlockDecomposition};
pub use canon::{
    are_isomorphic, automorphism_orbits, canonical_form, canonical_labeling, is_vertex_transitive,
    orbit_partition, CanonicalForm, CanonicalLabeling,
};
pub use coloring::{chromatic_number, for_each_proper_coloring};
pub use cycles::circumference;
pub use distance::{
    diameter, distance_matrix, eccentricity_profile, radius, transmissions, wiener,
    wiener_dimension, DistanceMatrix, Eccentricities,
};
pub use error::{invalid, Error, Result};
pub use graph::{bits, full_mask, mask_of, Graph, MAX_ORDER};
pub use shard::Shard;
pub use ops::{blowup, cartesian_product, delete_vertex, delete_vertices, line_graph};
