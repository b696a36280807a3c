use wiener_core::{bits, invalid, Error, Graph, Result};

/// Graph with a ±1 sign on every edge. Bit i of `negative` marks the i-th
/// edge (lexicographic, u < v) as −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    base: Graph,
    edges: Vec<(usize, usize)>,
    negative: u64,
    neg_rows: Vec<u64>,
}

impl SignedGraph {
    pub fn new(base: &Graph, negative: u64) -> Result<Self> {
        let edges = base.edge_list();
        if edges.len() > 64 {
            return Err(Error::EdgeBudget { op: "signature", limit: 64, m: edges.len() });
        }
        let mut s = SignedGraph { base: base.clone(), edges, negative: 0, neg_rows: vec![0; base.order()] };
        s.set_signature(negative);
        Ok(s)
    }

    /// Every edge +1, or every edge −1.
    pub fn constant(base: &Graph, positive: bool) -> Result<Self> {
        SignedGraph::new(base, if positive { 0 } else { !0 })
    }

    /// Signs in lexicographic edge order.
    pub fn from_signs(base: &Graph, signs: &[i8]) -> Result<Self> {
        if signs.len() != base.edge_count() {
            return Err(invalid(format!("{} signs for {} edges", signs.len(), base.edge_count())));
        }
        let mut negative = 0;
        for (i, &s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => negative |= 1 << i,
                _ => return Err(invalid(format!("sign {s} is not ±1"))),
            }
        }
        SignedGraph::new(base, negative)
    }

    /// Alternating signature along the path 0-1-…-(n−1): first edge +1.
    pub fn alternating_path(n: usize) -> Result<Self> {
        let signs: Vec<i8> = (0..n.saturating_sub(1)).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
        SignedGraph::from_signs(&Graph::path(n), &signs)
    }

    pub(crate) fn set_signature(&mut self, negative: u64) {
        let m = self.edges.len();
        self.negative = if m == 64 { negative } else { negative & ((1u64 << m) - 1) };
        self.neg_rows.iter_mut().for_each(|r| *r = 0);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if self.negative >> i & 1 == 1 {
                self.neg_rows[u] |= 1 << v;
                self.neg_rows[v] |= 1 << u;
            }
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn signature(&self) -> u64 {
        self.negative
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub(crate) fn negative_row(&self, u: usize) -> u64 {
        self.neg_rows[u]
    }

    /// Sign of edge uv, `None` if absent.
    pub fn sign(&self, u: usize, v: usize) -> Option<i8> {
        if !self.base.has_edge(u, v) {
            None
        } else if self.neg_rows[u] >> v & 1 == 1 {
            Some(-1)
        } else {
            Some(1)
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.edges.len()).map(|i| if self.negative >> i & 1 == 1 { -1 } else { 1 }).collect()
    }

    /// −σ.
    pub fn negated(&self) -> SignedGraph {
        let mut s = self.clone();
        s.set_signature(!self.negative);
        s
    }

    /// Induced signed subgraph on V \ remove, vertices relabelled in order.
    pub fn delete_vertices(&self, remove: u64) -> Result<SignedGraph> {
        let keep: Vec<usize> = (0..self.order()).filter(|&v| remove >> v & 1 == 0).collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.add_edge(index[u], index[v]);
            }
        }
        let mut signs = Vec::with_capacity(g.edge_count());
        for (a, b) in g.edges() {
            signs.push(self.sign(keep[a], keep[b]).unwrap());
        }
        SignedGraph::from_signs(&g, &signs)
    }

    /// σ(P) for a walk given as a vertex sequence.
    pub fn path_sum(&self, path: &[usize]) -> Result<i64> {
        let mut total = 0;
        for w in path.windows(2) {
            total += self.sign(w[0], w[1]).ok_or_else(|| invalid(format!("{}-{} is not an edge", w[0], w[1])))? as i64;
        }
        Ok(total)
    }

    pub(crate) fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> {
        bits(self.base.neighbors(u))
    }
}
