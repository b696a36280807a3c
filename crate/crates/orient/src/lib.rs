//! Digraphs under the unreachable-is-zero distance convention, and
//! orientations of graphs.

pub mod coloring;
pub mod digraph;
pub mod named;
pub mod orientation;
pub mod product;

pub use coloring::{coloring_induced_orientations, induced_dirs, min_chromatic_induced_wiener, ColoringSweep};
pub use digraph::{
    core_vertices, digraph_wiener, for_each_digraph, graph_tau, is_no_zig_zag, tau, total_increment,
    wiener_increment, Digraph, TauConvention,
};
pub use named::{
    core_examples, dankelmann, directed_cycle, directed_path, grid, grid_c, grid_d, grid_vertex, ladder_formula,
    ladder_max, out_star, theta_321_drawn, theta_max, DankelmannLayout,
};
pub use orientation::{
    enumerate_orientations, for_each_orientation, max_orientation_wiener, min_orientation_wiener, orient_edges,
    Extremes, Orientation, OrientationStats, ORIENTATION_EDGE_LIMIT,
};
pub use product::{product_bound, ProductBound, TauReading};
