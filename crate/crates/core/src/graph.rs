use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order; one `u64` adjacency row per vertex.
pub const MAX_ORDER: usize = 64;

/// Iterate the set bits of a word, lowest first.
#[inline]
pub fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(b)
        }
    })
}

#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    pub(crate) n: usize,
    pub(crate) adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics if `n > 64`.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph",
                needed: n,
                limit: MAX_ORDER,
            });
        }
        Ok(Self::new(n))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::try_new(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph",
                needed: n,
                limit: MAX_ORDER,
            });
        }
        let mask = full_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(crate::invalid(format!("row {u} has bits beyond order {n}")));
            }
            if row >> u & 1 == 1 {
                return Err(crate::invalid(format!("self-loop at {u}")));
            }
            for v in bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(crate::invalid(format!("asymmetric adjacency {u}-{v}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            g.adj[u] = full_mask(n) & !(1 << u);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    /// Cycle `C_n`; for `n < 3` this degenerates to a path.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    /// Star `S_n` on `n` vertices with center 0.
    pub fn star(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.add_edge(0, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Adds `uv`. Panics on out-of-range vertices or a loop.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(crate::invalid(format!("self-loop at {u}")));
        }
        self.add_edge(u, v);
        Ok(())
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Appends a vertex adjacent to `nbrs` and returns its index.
    pub fn push_vertex(&mut self, nbrs: u64) -> usize {
        assert!(self.n < MAX_ORDER);
        assert!(nbrs & !self.vertex_mask() == 0);
        let v = self.n;
        self.n += 1;
        self.adj.push(nbrs);
        for u in bits(nbrs) {
            self.adj[u] |= 1 << v;
        }
        v
    }

    /// Removes the highest-numbered vertex.
    pub fn pop_vertex(&mut self) {
        let v = self.n - 1;
        let nbrs = self.adj.pop().expect("pop on empty graph");
        for u in bits(nbrs) {
            self.adj[u] &= !(1 << v);
        }
        self.n -= 1;
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Vertices reachable from `start` inside the vertex set `within`.
    pub fn reach_within(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn component_of(&self, v: usize) -> u64 {
        self.reach_within(v, self.vertex_mask())
    }

    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach_within(left.trailing_zeros() as usize, left);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// The empty graph counts as connected; so does `K_1`.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0) == self.vertex_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() + 1 == self.n && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Returns the mask of one side of a proper 2-coloring, if any.
    pub fn two_coloring(&self) -> Option<u64> {
        let mut side = 0u64;
        let mut seen = 0u64;
        for comp in self.components() {
            let root = comp.trailing_zeros() as usize;
            let mut frontier = 1u64 << root;
            seen |= frontier;
            let mut parity = true;
            while frontier != 0 {
                if parity {
                    side |= frontier;
                }
                let mut next = 0;
                for u in bits(frontier) {
                    next |= self.adj[u];
                }
                if next & frontier != 0 {
                    return None;
                }
                next &= !seen;
                seen |= next;
                frontier = next;
                parity = !parity;
            }
        }
        Some(side)
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let adj = (0..self.n).map(|u| !self.adj[u] & mask & !(1 << u)).collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `keep`, relabelled in increasing vertex order.
    pub fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let verts: Vec<usize> = bits(keep).collect();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            let mut row = 0u64;
            for w in bits(self.adj[v] & keep) {
                row |= 1 << index[w];
            }
            g.adj[i] = row;
        }
        g
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::try_new(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        Ok(g)
    }

    /// Join: every vertex of `self` adjacent to every vertex of `other`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        Ok(g)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_list())
    }
}

pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}
