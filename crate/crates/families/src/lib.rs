//! Deterministic generators for named graphs and extremal constructions.

mod cubic;
mod cycles;
pub mod figures;
mod spec;
mod standard;
mod trees;

pub use cubic::cubic_l;
pub use cycles::{barbell, cambie_haslegrave, dumbbell, g_nrs, h_npq, h_plus, soltes_b, theta};
pub use spec::FamilySpec;
pub use standard::{circulant, complete, complete_bipartite, cycle, heawood, hypercube, path, petersen, standard, star};
pub use trees::{broom_t, diameter4_trees, double_broom, join_clique_tree, k_n_c, t_n, t_n_prime};
pub use wiener_core::blowup;
