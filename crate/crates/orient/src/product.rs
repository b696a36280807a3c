use wiener_core::{cartesian_product, Error, Graph, Result, Shard};

use crate::digraph::{graph_tau, tau, TauConvention};
use crate::orientation::{enumerate_orientations, orient_edges, ORIENTATION_EDGE_LIMIT};

/// What τ(H) is taken to mean in W_max(G□H) ≥ W_max(G)τ(H) + W_max(H)|V(G)|².
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauReading {
    /// τ of the undirected graph H.
    Graph,
    /// τ of a W_max-attaining orientation of H, the least such value.
    ExtremalMin,
    /// τ of a W_max-attaining orientation of H, the largest such value.
    ExtremalMax,
}

impl TauReading {
    pub const ALL: [TauReading; 3] = [TauReading::Graph, TauReading::ExtremalMin, TauReading::ExtremalMax];
}

/// Both sides of the product lower bound for one ordered pair (G, H).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductBound {
    pub wmax_product: u64,
    pub wmax_g: u64,
    pub wmax_h: u64,
    pub order_g: u64,
    /// τ values indexed by (reading, convention).
    taus: [[u64; 2]; 3],
}

fn conv_index(c: TauConvention) -> usize {
    match c {
        TauConvention::SelfCounts => 0,
        TauConvention::NoSelf => 1,
    }
}

fn reading_index(r: TauReading) -> usize {
    match r {
        TauReading::Graph => 0,
        TauReading::ExtremalMin => 1,
        TauReading::ExtremalMax => 2,
    }
}

impl ProductBound {
    pub fn tau(&self, reading: TauReading, convention: TauConvention) -> u64 {
        self.taus[reading_index(reading)][conv_index(convention)]
    }

    pub fn rhs(&self, reading: TauReading, convention: TauConvention) -> u64 {
        self.wmax_g * self.tau(reading, convention) + self.wmax_h * self.order_g * self.order_g
    }

    pub fn holds(&self, reading: TauReading, convention: TauConvention) -> bool {
        self.wmax_product >= self.rhs(reading, convention)
    }
}

/// Evaluates the bound exhaustively; |E(G□H)| must fit the orientation budget.
pub fn product_bound(g: &Graph, h: &Graph) -> Result<ProductBound> {
    let gh = cartesian_product(g, h)?;
    if gh.edge_count() > ORIENTATION_EDGE_LIMIT {
        return Err(Error::EdgeBudget { op: "product bound", limit: ORIENTATION_EDGE_LIMIT, m: gh.edge_count() });
    }
    let sg = enumerate_orientations(g, Shard::ALL)?;
    let sh = enumerate_orientations(h, Shard::ALL)?;
    let sgh = enumerate_orientations(&gh, Shard::ALL)?;
    let edges = h.edge_list();
    let mut taus = [[0u64; 2]; 3];
    for (ci, conv) in [TauConvention::SelfCounts, TauConvention::NoSelf].into_iter().enumerate() {
        taus[0][ci] = graph_tau(h, conv);
        let ext: Vec<u64> = sh.all.argmax.iter().map(|&x| tau(&orient_edges(h.order(), &edges, x), conv)).collect();
        taus[1][ci] = ext.iter().copied().min().unwrap_or(0);
        taus[2][ci] = ext.iter().copied().max().unwrap_or(0);
    }
    Ok(ProductBound {
        wmax_product: sgh.all.max,
        wmax_g: sg.all.max,
        wmax_h: sh.all.max,
        order_g: g.order() as u64,
        taus,
    })
}
