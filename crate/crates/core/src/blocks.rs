//! Blocks (maximal non-separable subgraphs) and cut vertices.

use crate::graph::{bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex set of each block, as a mask. Isolated vertices form no block.
    pub blocks: Vec<u64>,
    pub cut_vertices: u64,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_edge_count(&self, g: &Graph, block: usize) -> usize {
        let b = self.blocks[block];
        bits(b).map(|v| (g.neighbors(v) & b).count_ones() as usize).sum::<usize>() / 2
    }

    pub fn all_blocks_complete(&self, g: &Graph) -> bool {
        (0..self.blocks.len()).all(|i| {
            let k = self.blocks[i].count_ones() as usize;
            self.block_edge_count(g, i) == k * (k - 1) / 2
        })
    }

    /// Every block is a single edge or a cycle.
    pub fn is_cactus(&self, g: &Graph) -> bool {
        (0..self.blocks.len()).all(|i| {
            let k = self.blocks[i].count_ones() as usize;
            let m = self.block_edge_count(g, i);
            k == 2 || m == k
        })
    }
}

/// Hopcroft–Tarjan edge-stack decomposition.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut st = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cuts: 0,
    };
    for root in 0..n {
        if st.disc[root] == 0 {
            st.time += 1;
            st.disc[root] = st.time;
            st.low[root] = st.time;
            let children = st.visit(root, usize::MAX);
            if children < 2 {
                st.cuts &= !(1 << root);
            }
        }
    }
    let mut blocks = st.blocks;
    blocks.sort_unstable();
    BlockDecomposition { blocks, cut_vertices: st.cuts }
}

struct State<'a> {
    g: &'a Graph,
    disc: Vec<u32>,
    low: Vec<u32>,
    time: u32,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<u64>,
    cuts: u64,
}

impl State<'_> {
    /// Returns the number of DFS children of `u`.
    fn visit(&mut self, u: usize, parent: usize) -> usize {
        let mut children = 0;
        for w in bits(self.g.neighbors(u)) {
            if self.disc[w] == 0 {
                children += 1;
                self.edge_stack.push((u, w));
                self.time += 1;
                self.disc[w] = self.time;
                self.low[w] = self.time;
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    self.cuts |= 1 << u;
                    let mut block = 0u64;
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block |= 1 << a | 1 << b;
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.edge_stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        children
    }
}

/// Cut vertices by direct deletion test; fast for the small orders used in
/// enumeration.
pub fn cut_vertices(g: &Graph) -> u64 {
    let all = g.vertex_mask();
    let mut cuts = 0;
    for v in 0..g.order() {
        let nbrs = g.neighbors(v);
        if nbrs.count_ones() < 2 {
            continue;
        }
        // v separates iff its neighbours fall into different pieces of G - v
        let reach = g.reach_within(nbrs.trailing_zeros() as usize, all & !(1 << v));
        if nbrs & !reach != 0 {
            cuts |= 1 << v;
        }
    }
    cuts
}

pub fn is_biconnected(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && cut_vertices(g) == 0
}
