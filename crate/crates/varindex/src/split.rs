use wiener_core::{blocks, distance_matrix, wiener, Error, Graph, Result};

/// Per edge uv (lexicographic, u < v): (n_v(u), n_u(v)), the numbers of
/// vertices strictly closer to u than to v and vice versa.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSplitCounts {
    pub edges: Vec<(usize, usize)>,
    pub counts: Vec<(u64, u64)>,
}

impl EdgeSplitCounts {
    pub fn products(&self) -> impl Iterator<Item = u64> + '_ {
        self.counts.iter().map(|&(a, b)| a * b)
    }
}

pub fn edge_split_counts(g: &Graph) -> Result<EdgeSplitCounts> {
    let d = distance_matrix(g);
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = g.edge_list();
    let counts = edges
        .iter()
        .map(|&(u, v)| {
            let (ru, rv) = (d.row(u), d.row(v));
            let closer_u = ru.iter().zip(rv).filter(|(a, b)| a < b).count() as u64;
            let closer_v = ru.iter().zip(rv).filter(|(a, b)| a > b).count() as u64;
            (closer_u, closer_v)
        })
        .collect();
    Ok(EdgeSplitCounts { edges, counts })
}

/// Sz(G) = Σ_{uv ∈ E} n_v(u)·n_u(v).
pub fn szeged(g: &Graph) -> Result<u64> {
    Ok(edge_split_counts(g)?.products().sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EqualityClass {
    pub szeged_equals_wiener: bool,
    pub blocks_complete: bool,
}

impl EqualityClass {
    pub fn agree(&self) -> bool {
        self.szeged_equals_wiener == self.blocks_complete
    }
}

/// Sz = W, computed independently of whether every block is complete.
pub fn classify_equality(g: &Graph) -> Result<EqualityClass> {
    Ok(EqualityClass {
        szeged_equals_wiener: szeged(g)? == wiener(g)?,
        blocks_complete: blocks(g).all_blocks_complete(g),
    })
}
