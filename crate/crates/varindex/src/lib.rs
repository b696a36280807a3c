//! Szeged index, the variable Wiener and Szeged indices, and sign changes
//! of h(α) = Sz^α − W^α.

pub mod critical;
pub mod profile;
pub mod split;

pub use critical::{critical_exponents, CriticalScan, RootBracket, ScanParams, DEFAULT_GRID, DEFAULT_TOLERANCE};
pub use profile::{cambie_haslegrave_profile, compensated_sum, variable_szeged, variable_wiener, IndexProfile};
pub use split::{classify_equality, edge_split_counts, szeged, EdgeSplitCounts, EqualityClass};
