use wiener_core::{bits, full_mask, invalid, Error, Graph, Result, MAX_ORDER};

/// Digraph on at most 64 vertices as out-neighbour bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs().collect::<Vec<_>>())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TauConvention {
    /// x reaches itself by the trivial path.
    #[default]
    SelfCounts,
    NoSelf,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "digraph order {n} exceeds 64");
        Digraph { n, out: vec![0; n] }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::Capacity { what: "digraph", needed: n, limit: MAX_ORDER });
        }
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            d.try_add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn out_rows(&self) -> &[u64] {
        &self.out
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.try_add_arc(u, v).unwrap()
    }

    pub fn try_add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(invalid(format!("self-loop at {u}")));
        }
        self.out[u] |= 1 << v;
        Ok(())
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        self.out[u] &= !(1 << v);
    }

    pub(crate) fn flip(&mut self, u: usize, v: usize) {
        self.out[u] ^= 1 << v;
        self.out[v] ^= 1 << u;
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.out.iter().filter(|&&r| r >> v & 1 == 1).count()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.out[u]).map(move |v| (u, v)))
    }

    /// Reverses every arc.
    pub fn converse(&self) -> Digraph {
        let mut c = Digraph::new(self.n);
        for (u, v) in self.arcs() {
            c.out[v] |= 1 << u;
        }
        c
    }

    /// No pair of opposite arcs.
    pub fn is_oriented(&self) -> bool {
        (0..self.n).all(|u| bits(self.out[u]).all(|v| !self.has_arc(v, u)))
    }

    /// Underlying simple graph; opposite arcs merge into one edge.
    pub fn underlying(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.arcs() {
            if !g.has_edge(u, v) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Vertices reachable from `s`, including `s`.
    pub fn reach(&self, s: usize) -> u64 {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.out[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    /// w(u): sum of directed distances from u, unreachable counted as 0.
    pub fn transmission(&self, s: usize) -> u64 {
        self.transmission_reach(s).0
    }

    /// w(u) and the number of vertices reachable from u (u included).
    pub fn transmission_reach(&self, s: usize) -> (u64, u32) {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut total = 0;
        let mut d = 0;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.out[v];
            }
            frontier = next & !seen;
            seen |= frontier;
            d += 1;
            total += d * frontier.count_ones() as u64;
        }
        (total, seen.count_ones())
    }

    /// Directed distance, `None` when unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        let mut seen = 1u64 << u;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            if frontier >> v & 1 == 1 {
                return Some(d);
            }
            let mut next = 0;
            for x in bits(frontier) {
                next |= self.out[x];
            }
            frontier = next & !seen;
            seen |= frontier;
            d += 1;
        }
        None
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n == 0 || (self.reach(0).count_ones() as usize == self.n && self.converse().reach(0).count_ones() as usize == self.n)
    }

    pub fn is_acyclic(&self) -> bool {
        let mut left = full_mask(self.n);
        loop {
            let sinks = bits(left).filter(|&v| self.out[v] & left == 0).fold(0, |m, v| m | 1 << v);
            if sinks == 0 {
                return left == 0;
            }
            left &= !sinks;
        }
    }
}

/// W(D): sum over ordered pairs, unreachable pairs contributing 0.
pub fn digraph_wiener(d: &Digraph) -> u64 {
    (0..d.order()).map(|u| d.transmission(u)).sum()
}

/// Δw(u) = w(u) - d⁺(u).
pub fn wiener_increment(d: &Digraph, u: usize) -> u64 {
    d.transmission(u) - d.out_degree(u) as u64
}

/// ΔW(D) = Σ Δw(u) = W(D) - |A(D)|.
pub fn total_increment(d: &Digraph) -> u64 {
    (0..d.order()).map(|u| wiener_increment(d, u)).sum()
}

/// τ(D) = Σ_x σ(x), σ(x) the number of vertices reachable from x.
pub fn tau(d: &Digraph, convention: TauConvention) -> u64 {
    let own = match convention {
        TauConvention::SelfCounts => 0,
        TauConvention::NoSelf => 1,
    };
    (0..d.order()).map(|x| d.reach(x).count_ones() as u64 - own).sum()
}

/// τ of an undirected graph: reachability within components.
pub fn graph_tau(g: &Graph, convention: TauConvention) -> u64 {
    let own = match convention {
        TauConvention::SelfCounts => 0,
        TauConvention::NoSelf => 1,
    };
    (0..g.order()).map(|x| g.component_of(x).count_ones() as u64 - own).sum()
}

/// Core vertices of an oriented tree: comparable with every vertex by a
/// directed path. Nonempty iff the orientation is no-zig-zag.
pub fn core_vertices(d: &Digraph) -> Result<u64> {
    if !d.is_oriented() || !d.underlying().is_tree() {
        return Err(Error::NotATree);
    }
    let n = d.order();
    let reach: Vec<u64> = (0..n).map(|v| d.reach(v)).collect();
    let all = full_mask(n);
    Ok((0..n)
        .filter(|&v| {
            let reached_by = (0..n).filter(|&u| reach[u] >> v & 1 == 1).fold(0u64, |m, u| m | 1 << u);
            reach[v] | reached_by == all
        })
        .fold(0, |m, v| m | 1 << v))
}

pub fn is_no_zig_zag(d: &Digraph) -> Result<bool> {
    Ok(core_vertices(d)? != 0)
}

/// Every digraph on `n <= 5` vertices (opposite arcs allowed), by arc
/// mask over the ordered pairs in lexicographic order.
pub fn for_each_digraph(n: usize, mut visit: impl FnMut(&Digraph)) -> Result<u64> {
    if n > 5 {
        return Err(Error::SizeGuard { op: "all-digraph enumeration", limit: 5, n });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let mut d = Digraph::new(n);
    let total = 1u64 << pairs.len();
    for mask in 0..total {
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                d.out[u] |= 1 << v;
            } else {
                d.out[u] &= !(1 << v);
            }
        }
        visit(&d);
    }
    Ok(total)
}
