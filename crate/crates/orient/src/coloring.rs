use wiener_core::{chromatic_number, for_each_proper_coloring, Graph, Result};

use crate::digraph::{digraph_wiener, Digraph};
use crate::orientation::orient_edges;

/// Outcome of a coloring-induced sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSweep {
    pub colorings: u64,
    /// Set when k < χ(G); the stream is then empty.
    pub below_chromatic: bool,
}

/// Direction vector of the orientation induced by `colour`: every edge
/// points from the larger colour to the smaller.
pub fn induced_dirs(edges: &[(usize, usize)], colour: &[usize]) -> u64 {
    let mut dirs = 0;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if colour[u] < colour[v] {
            dirs |= 1 << i;
        }
    }
    dirs
}

/// Streams one orientation per proper k-colouring (duplicates included).
pub fn coloring_induced_orientations(
    g: &Graph,
    k: usize,
    mut visit: impl FnMut(u64, &Digraph),
) -> Result<ColoringSweep> {
    let chi = chromatic_number(g)?;
    if k < chi {
        return Ok(ColoringSweep { colorings: 0, below_chromatic: true });
    }
    let edges = g.edge_list();
    let colorings = for_each_proper_coloring(g, k, |colour| {
        let dirs = induced_dirs(&edges, colour);
        visit(dirs, &orient_edges(g.order(), &edges, dirs));
    })?;
    Ok(ColoringSweep { colorings, below_chromatic: false })
}

/// Minimum W over the χ(G)-coloring-induced orientations.
pub fn min_chromatic_induced_wiener(g: &Graph) -> Result<Option<u64>> {
    let chi = chromatic_number(g)?;
    let mut best: Option<u64> = None;
    let mut seen = std::collections::HashSet::new();
    coloring_induced_orientations(g, chi, |dirs, d| {
        if seen.insert(dirs) {
            let w = digraph_wiener(d);
            best = Some(best.map_or(w, |b| b.min(w)));
        }
    })?;
    Ok(best)
}
