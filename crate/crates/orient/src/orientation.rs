use wiener_core::{Error, Graph, Result, Shard};

use crate::digraph::Digraph;

/// Exhaustive search budget on edge count.
pub const ORIENTATION_EDGE_LIMIT: usize = 30;

/// Orientation of a base graph. Bit i of `dirs` concerns the i-th edge
/// (u, v), u < v, in lexicographic order: 0 is u→v, 1 is v→u.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub base: Graph,
    pub edges: Vec<(usize, usize)>,
    pub dirs: u64,
}

impl Orientation {
    pub fn new(base: &Graph, dirs: u64) -> Result<Self> {
        let edges = base.edge_list();
        if edges.len() > 64 {
            return Err(Error::EdgeBudget { op: "orientation", limit: 64, m: edges.len() });
        }
        let mask = if edges.len() == 64 { !0 } else { (1u64 << edges.len()) - 1 };
        Ok(Orientation { base: base.clone(), edges, dirs: dirs & mask })
    }

    /// Recovers the direction vector of an oriented digraph of `base`.
    pub fn from_digraph(base: &Graph, d: &Digraph) -> Result<Self> {
        let edges = base.edge_list();
        let mut dirs = 0u64;
        for (i, &(u, v)) in edges.iter().enumerate() {
            match (d.has_arc(u, v), d.has_arc(v, u)) {
                (true, false) => {}
                (false, true) => dirs |= 1 << i,
                _ => return Err(wiener_core::invalid(format!("edge {u}-{v} is not oriented exactly once"))),
            }
        }
        if d.arc_count() != edges.len() {
            return Err(wiener_core::invalid("digraph has arcs outside the base graph"));
        }
        Ok(Orientation { base: base.clone(), edges, dirs })
    }

    pub fn arc(&self, i: usize) -> (usize, usize) {
        let (u, v) = self.edges[i];
        if self.dirs >> i & 1 == 0 {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn to_digraph(&self) -> Digraph {
        orient_edges(self.base.order(), &self.edges, self.dirs)
    }
}

/// Digraph on `n` vertices orienting `edges` by the bits of `dirs`.
pub fn orient_edges(n: usize, edges: &[(usize, usize)], dirs: u64) -> Digraph {
    let mut d = Digraph::new(n);
    for (i, &(u, v)) in edges.iter().enumerate() {
        if dirs >> i & 1 == 0 {
            d.add_arc(u, v);
        } else {
            d.add_arc(v, u);
        }
    }
    d
}

/// Extremes of W over a set of orientations, with exact argument lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Extremes {
    pub count: u64,
    pub max: u64,
    pub min: u64,
    pub argmax: Vec<u64>,
    pub argmin: Vec<u64>,
}

impl Extremes {
    pub fn offer(&mut self, w: u64, dirs: u64) {
        if self.count == 0 {
            self.max = w;
            self.min = w;
            self.argmax = vec![dirs];
            self.argmin = vec![dirs];
        } else {
            if w > self.max {
                self.max = w;
                self.argmax.clear();
            }
            if w == self.max {
                self.argmax.push(dirs);
            }
            if w < self.min {
                self.min = w;
                self.argmin.clear();
            }
            if w == self.min {
                self.argmin.push(dirs);
            }
        }
        self.count += 1;
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn merge(&mut self, other: &Extremes) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = other.clone();
            return;
        }
        if other.max > self.max {
            self.max = other.max;
            self.argmax = other.argmax.clone();
        } else if other.max == self.max {
            self.argmax.extend_from_slice(&other.argmax);
        }
        if other.min < self.min {
            self.min = other.min;
            self.argmin = other.argmin.clone();
        } else if other.min == self.min {
            self.argmin.extend_from_slice(&other.argmin);
        }
        self.argmax.sort_unstable();
        self.argmin.sort_unstable();
        self.count += other.count;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OrientationStats {
    pub all: Extremes,
    pub acyclic: Extremes,
    pub strong: Extremes,
}

impl OrientationStats {
    pub fn merge(&mut self, other: &OrientationStats) {
        self.all.merge(&other.all);
        self.acyclic.merge(&other.acyclic);
        self.strong.merge(&other.strong);
    }
}

fn budget(g: &Graph) -> Result<usize> {
    let m = g.edge_count();
    if m > ORIENTATION_EDGE_LIMIT {
        return Err(Error::EdgeBudget { op: "exhaustive orientation search", limit: ORIENTATION_EDGE_LIMIT, m });
    }
    Ok(m)
}

/// Visits the orientations of `g` owned by `shard`, in increasing order of
/// the direction vector. Each step flips only the edges whose bit changes.
pub fn for_each_orientation(g: &Graph, shard: Shard, mut visit: impl FnMut(u64, &Digraph)) -> Result<u64> {
    let m = budget(g)?;
    let edges = g.edge_list();
    let total = 1u64 << m;
    let step = shard.total as u64;
    let mut x = shard.index as u64;
    if x >= total {
        return Ok(0);
    }
    let mut d = Orientation::new(g, x)?.to_digraph();
    let mut visited = 0;
    loop {
        visit(x, &d);
        visited += 1;
        let next = x + step;
        if next >= total {
            break;
        }
        let mut changed = x ^ next;
        while changed != 0 {
            let i = changed.trailing_zeros() as usize;
            changed &= changed - 1;
            let (u, v) = edges[i];
            d.flip(u, v);
        }
        x = next;
    }
    Ok(visited)
}

/// W(D) together with strong connectivity, from one BFS per vertex.
fn wiener_strong(d: &Digraph) -> (u64, bool) {
    let n = d.order();
    let mut w = 0;
    let mut strong = true;
    for s in 0..n {
        let (t, reached) = d.transmission_reach(s);
        w += t;
        strong &= reached as usize == n;
    }
    (w, strong)
}

/// W_max and W_min over all orientations (or one shard of them), with the
/// acyclic-only and strongly-connected-only variants.
pub fn enumerate_orientations(g: &Graph, shard: Shard) -> Result<OrientationStats> {
    let mut stats = OrientationStats::default();
    for_each_orientation(g, shard, |x, d| {
        let (w, strong) = wiener_strong(d);
        stats.all.offer(w, x);
        if strong {
            stats.strong.offer(w, x);
        }
        if d.is_acyclic() {
            stats.acyclic.offer(w, x);
        }
    })?;
    Ok(stats)
}

pub fn max_orientation_wiener(g: &Graph) -> Result<u64> {
    Ok(enumerate_orientations(g, Shard::ALL)?.all.max)
}

pub fn min_orientation_wiener(g: &Graph) -> Result<u64> {
    Ok(enumerate_orientations(g, Shard::ALL)?.all.min)
}
