//! Isomorph-free generation of connected graphs, trees, regular graphs and
//! graphs with a prescribed number of blocks.

mod augment;
mod filter;
mod record;

pub use augment::shard_level;
pub use wiener_core::Shard;
pub use filter::ClassFilter;
pub use record::{extremal_search, Direction, SearchRecord};

use augment::Generator;
use wiener_core::{Error, Graph, Result};

pub const UNFILTERED_LIMIT: usize = 10;
pub const DEGREE_FILTERED_LIMIT: usize = 14;
pub const TREE_LIMIT: usize = 16;
pub const BLOCKS_LIMIT: usize = 9;

fn budget(n: usize, filter: &ClassFilter) -> Result<()> {
    let (op, limit) = if filter.tree {
        ("tree enumeration", TREE_LIMIT)
    } else if let Some(k) = filter.regular {
        match k {
            0..=3 => ("regular enumeration", DEGREE_FILTERED_LIMIT),
            4 => ("4-regular enumeration", 11),
            _ => ("regular enumeration", UNFILTERED_LIMIT),
        }
    } else if filter.max_degree.is_some_and(|d| d <= 4) {
        ("degree-bounded enumeration", DEGREE_FILTERED_LIMIT)
    } else {
        ("connected graph enumeration", UNFILTERED_LIMIT)
    };
    if n > limit {
        return Err(Error::SizeGuard { op, limit, n });
    }
    Ok(())
}

/// Visits one representative of every isomorphism class of connected
/// graphs on `n` vertices passing `filter`. Returns the number visited.
pub fn connected_graphs(n: usize, filter: &ClassFilter, visit: impl FnMut(&Graph)) -> Result<u64> {
    connected_graphs_sharded(n, filter, Shard::ALL, visit)
}

pub fn connected_graphs_sharded(
    n: usize,
    filter: &ClassFilter,
    shard: Shard,
    visit: impl FnMut(&Graph),
) -> Result<u64> {
    filter.validate()?;
    budget(n, filter)?;
    let mut gen = Generator::new(n, filter, shard, visit);
    gen.run()?;
    Ok(gen.visited)
}

/// Collects the graphs of a class; convenient at small orders.
pub fn collect(n: usize, filter: &ClassFilter) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    connected_graphs(n, filter, |g| out.push(g.clone()))?;
    Ok(out)
}

pub fn trees(n: usize, visit: impl FnMut(&Graph)) -> Result<u64> {
    connected_graphs(n, &ClassFilter::trees(), visit)
}

/// Connected `k`-regular graphs on `n` vertices.
pub fn regular_graphs(n: usize, k: usize, visit: impl FnMut(&Graph)) -> Result<u64> {
    if n * k % 2 == 1 {
        return Err(Error::InvalidParameter(format!("no {k}-regular graph on {n} vertices")));
    }
    if k >= n {
        return Err(Error::InvalidParameter(format!("degree {k} impossible on {n} vertices")));
    }
    connected_graphs(n, &ClassFilter::connected().with_regular(k), visit)
}

/// Connected graphs on `n` vertices with exactly `p` blocks.
pub fn blocks_class(n: usize, p: usize, visit: impl FnMut(&Graph)) -> Result<u64> {
    if n > BLOCKS_LIMIT {
        return Err(Error::SizeGuard { op: "blocks class enumeration", limit: BLOCKS_LIMIT, n });
    }
    let filter = if p == n.saturating_sub(1) {
        ClassFilter::trees().with_blocks(p)
    } else {
        ClassFilter::connected().with_blocks(p)
    };
    connected_graphs(n, &filter, visit)
}
