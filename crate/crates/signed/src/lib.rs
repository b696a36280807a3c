//! Signed graphs: signed distance min_P |σ(P)|, the signed Wiener index,
//! its minimum over signatures, and k-canceling signatures.

pub mod distance;
pub mod search;
pub mod signed;

pub use distance::{is_canceling, signed_distance, signed_distances, signed_wiener, SIGNED_PATH_LIMIT};
pub use search::{
    exists_k_canceling, is_k_canceling, min_signed_wiener, set_members, CancelSearch, CancelVerdict, SignedMinimum,
    SIGNATURE_EDGE_LIMIT,
};
pub use signed::SignedGraph;
