//! Canonical labelling by partition refinement and individualization,
//! with automorphism pruning.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const CANON_LIMIT: usize = 16;

/// Canonical form: the adjacency rows of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    pub n: u8,
    pub rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph { n: self.n as usize, adj: self.rows.clone() }
    }

    /// Upper triangle packed into 128 bits, available for n <= 16.
    pub fn packed(&self) -> Option<u128> {
        let n = self.n as usize;
        if n > 16 {
            return None;
        }
        let mut out = 0u128;
        for i in 0..n {
            for j in i + 1..n {
                out = out << 1 | (self.rows[i] >> j & 1) as u128;
            }
        }
        Some(out)
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    pub form: CanonicalForm,
    /// `lab[i]` is the vertex placed at canonical position `i`.
    pub lab: Vec<usize>,
    /// Generators of the automorphism group, as vertex maps.
    pub generators: Vec<Vec<usize>>,
    /// Smallest vertex in each vertex's orbit.
    pub orbits: Vec<usize>,
}

impl CanonicalLabeling {
    pub fn position(&self, v: usize) -> usize {
        self.lab.iter().position(|&x| x == v).unwrap()
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbits[u] == self.orbits[v]
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.iter().enumerate().filter(|&(v, &r)| v == r).count()
    }
}

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a < b {
            self.0[b] = a;
        } else if b < a {
            self.0[a] = b;
        }
    }
}

/// Refines an ordered partition until equitable. Split pieces are ordered
/// by their neighbour count into the splitter.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>, queue: &mut VecDeque<u64>) {
    let n = g.order();
    let mut groups: Vec<(u32, u64)> = Vec::with_capacity(8);
    while let Some(w) = queue.pop_front() {
        if cells.len() == n {
            queue.clear();
            return;
        }
        let mut i = 0;
        while i < cells.len() {
            let x = cells[i];
            if x & (x - 1) == 0 {
                i += 1;
                continue;
            }
            groups.clear();
            for v in bits(x) {
                let c = (g.adj[v] & w).count_ones();
                match groups.iter_mut().find(|e| e.0 == c) {
                    Some(e) => e.1 |= 1 << v,
                    None => groups.push((c, 1 << v)),
                }
            }
            if groups.len() == 1 {
                i += 1;
                continue;
            }
            groups.sort_unstable_by_key(|e| e.0);
            cells.splice(i..=i, groups.iter().map(|e| e.1));
            queue.extend(groups.iter().map(|e| e.1));
            i += groups.len();
        }
    }
}

/// Equitable partition reached from the unit partition.
pub fn equitable_partition(g: &Graph) -> Vec<u64> {
    let all = g.vertex_mask();
    if all == 0 {
        return Vec::new();
    }
    let mut cells = vec![all];
    let mut queue = VecDeque::from([all]);
    refine(g, &mut cells, &mut queue);
    cells
}

struct Leaf {
    rows: Vec<u64>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    rows: Vec<u64>,
    lab: Vec<usize>,
    inv: Vec<usize>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Search {
            g,
            path: Vec::new(),
            first: None,
            best: None,
            generators: Vec::new(),
            rows: vec![0; n],
            lab: vec![0; n],
            inv: vec![0; n],
        }
    }

    fn record(&mut self, other: &[usize]) {
        let n = self.g.order();
        let mut gamma = vec![0; n];
        for i in 0..n {
            gamma[other[i]] = self.lab[i];
        }
        if gamma.iter().enumerate().any(|(v, &w)| v != w) && !self.generators.contains(&gamma) {
            self.generators.push(gamma);
        }
    }

    /// Returns the depth to unwind to when the leaf proves the current
    /// branch equivalent to an earlier one.
    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let n = self.g.order();
        for (i, &c) in cells.iter().enumerate() {
            let v = c.trailing_zeros() as usize;
            self.lab[i] = v;
            self.inv[v] = i;
        }
        for i in 0..n {
            let mut r = 0u64;
            for w in bits(self.g.adj[self.lab[i]]) {
                r |= 1 << self.inv[w];
            }
            self.rows[i] = r;
        }
        let Some(first) = &self.first else {
            let leaf = Leaf { rows: self.rows.clone(), lab: self.lab.clone(), path: self.path.clone() };
            self.best = Some(Leaf { rows: leaf.rows.clone(), lab: leaf.lab.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if first.rows == self.rows {
            let (lab, k) = (first.lab.clone(), common_prefix(&first.path, &self.path));
            self.record(&lab);
            return Some(k);
        }
        let best = self.best.as_mut().unwrap();
        match self.rows.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                let (lab, k) = (best.lab.clone(), common_prefix(&best.path, &self.path));
                self.record(&lab);
                Some(k)
            }
            std::cmp::Ordering::Greater => {
                best.rows.copy_from_slice(&self.rows);
                best.lab.copy_from_slice(&self.lab);
                best.path.clone_from(&self.path);
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }

    fn fixing_orbits(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.g.order());
        for gamma in &self.generators {
            if self.path.iter().all(|&p| gamma[p] == p) {
                for (v, &w) in gamma.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        uf
    }

    fn search(&mut self, cells: &[u64]) -> Option<usize> {
        if cells.len() == self.g.order() {
            return self.leaf(cells);
        }
        let depth = self.path.len();
        let ti = cells.iter().position(|c| c & (c - 1) != 0).unwrap();
        let target = cells[ti];
        let mut tried: Vec<usize> = Vec::new();
        let mut known_gens = 0;
        let mut uf = UnionFind::new(0);
        let mut queue = VecDeque::new();
        for v in bits(target) {
            if !tried.is_empty() {
                if known_gens != self.generators.len() || uf.0.is_empty() {
                    uf = self.fixing_orbits();
                    known_gens = self.generators.len();
                }
                let rv = uf.find(v);
                if tried.iter().any(|&t| uf.find(t) == rv) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            queue.clear();
            queue.push_back(1u64 << v);
            refine(self.g, &mut child, &mut queue);
            self.path.push(v);
            let r = self.search(&child);
            self.path.pop();
            if let Some(t) = r {
                if t < depth {
                    return Some(t);
                }
            }
        }
        None
    }
}

/// Canonical labelling, automorphism generators and orbits.
pub fn canonical_labeling(g: &Graph) -> Result<CanonicalLabeling> {
    let n = g.order();
    if n > CANON_LIMIT {
        return Err(Error::SizeGuard { op: "canonical labeling", limit: CANON_LIMIT, n });
    }
    Ok(labeling_unguarded(g))
}

pub(crate) fn labeling_unguarded(g: &Graph) -> CanonicalLabeling {
    let n = g.order();
    if n == 0 {
        return CanonicalLabeling {
            form: CanonicalForm { n: 0, rows: Vec::new() },
            lab: Vec::new(),
            generators: Vec::new(),
            orbits: Vec::new(),
        };
    }
    let cells = equitable_partition(g);
    let mut s = Search::new(g);
    s.search(&cells);
    let best = s.best.take().unwrap();
    let mut uf = UnionFind::new(n);
    for gamma in &s.generators {
        for (v, &w) in gamma.iter().enumerate() {
            uf.union(v, w);
        }
    }
    let orbits = (0..n).map(|v| uf.find(v)).collect();
    CanonicalLabeling {
        form: CanonicalForm { n: n as u8, rows: best.rows },
        lab: best.lab,
        generators: s.generators,
        orbits,
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.form)
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Orbit representative (smallest member) for each vertex.
pub fn automorphism_orbits(g: &Graph) -> Result<Vec<usize>> {
    Ok(canonical_labeling(g)?.orbits)
}

/// Vertex orbits as sorted vertex lists.
pub fn orbit_partition(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let orb = automorphism_orbits(g)?;
    Ok((0..g.order())
        .filter(|&v| orb[v] == v)
        .map(|r| (0..g.order()).filter(|&v| orb[v] == r).collect())
        .collect())
}

pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    Ok(automorphism_orbits(g)?.iter().all(|&r| r == 0))
}

/// Image of a vertex set under a vertex map.
pub fn map_mask(gamma: &[usize], mask: u64) -> u64 {
    bits(mask).fold(0, |acc, v| acc | 1 << gamma[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn shuffled(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        g.permute(&perm)
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        fn go(cur: &mut Vec<usize>, used: u64, n: usize, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for v in 0..n {
                if used >> v & 1 == 0 {
                    cur.push(v);
                    go(cur, used | 1 << v, n, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), 0, n, &mut out);
        out
    }

    /// Brute force: all automorphisms by trying every permutation.
    fn brute_orbits(g: &Graph, perms: &[Vec<usize>]) -> (Vec<usize>, usize) {
        let n = g.order();
        let mut rep: Vec<usize> = (0..n).collect();
        let mut order = 0;
        for p in perms {
            if g.permute(p) == *g {
                order += 1;
                for v in 0..n {
                    rep[p[v]] = rep[p[v]].min(v);
                    rep[v] = rep[v].min(p[v]);
                }
            }
        }
        // close under the group: orbit min is min over images of v
        let mut orb = vec![usize::MAX; n];
        for p in perms {
            if g.permute(p) == *g {
                for v in 0..n {
                    orb[v] = orb[v].min(p[v]);
                }
            }
        }
        (orb, order)
    }

    fn group_order(gens: &[Vec<usize>], n: usize) -> usize {
        let id: Vec<usize> = (0..n).collect();
        let mut seen = std::collections::HashSet::from([id.clone()]);
        let mut stack = vec![id];
        while let Some(p) = stack.pop() {
            for g in gens {
                let q: Vec<usize> = p.iter().map(|&x| g[x]).collect();
                if seen.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn form_is_invariant_and_separating() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let h = shuffled(&mut rng, &g);
            assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            assert!(are_isomorphic(&canonical_graph(&g).unwrap(), &g).unwrap());
            // canonical graph is a relabelling of g
            let c = canonical_labeling(&g).unwrap();
            let mut perm = vec![0; n];
            for (i, &v) in c.lab.iter().enumerate() {
                perm[v] = i;
            }
            assert_eq!(g.permute(&perm), c.form.to_graph());
        }
    }

    #[test]
    fn orbits_and_group_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=7 {
            let perms = all_perms(n);
            for _ in 0..60 {
                let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
                let c = canonical_labeling(&g).unwrap();
                let (orb, order) = brute_orbits(&g, &perms);
                assert_eq!(c.orbits, orb, "{g:?}");
                assert_eq!(group_order(&c.generators, n), order, "{g:?}");
                for gamma in &c.generators {
                    assert_eq!(g.permute(gamma), g);
                }
            }
        }
    }

    #[test]
    fn distinguishes_hard_pairs() {
        // two cospectral-ish 3-regular graphs on 6 vertices
        let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!are_isomorphic(&k33, &prism).unwrap());
        assert!(is_vertex_transitive(&k33).unwrap());
        assert!(is_vertex_transitive(&prism).unwrap());
        assert!(!are_isomorphic(&Graph::cycle(6), &Graph::cycle(3).disjoint_union(&Graph::cycle(3)).unwrap()).unwrap());
    }

    #[test]
    fn symmetric_graphs() {
        assert_eq!(labeling_unguarded(&Graph::complete(40)).orbit_count(), 1);
        assert_eq!(labeling_unguarded(&Graph::new(30)).orbit_count(), 1);
        assert_eq!(labeling_unguarded(&Graph::cycle(60)).orbit_count(), 1);
        assert_eq!(canonical_labeling(&Graph::star(16)).unwrap().orbit_count(), 2);
        assert_eq!(group_order(&canonical_labeling(&Graph::complete(5)).unwrap().generators, 5), 120);
        assert!(canonical_form(&Graph::path(17)).is_err());
        let parts = orbit_partition(&Graph::star(4)).unwrap();
        assert_eq!(parts, vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn packed_form_roundtrip() {
        let f = canonical_form(&Graph::path(4)).unwrap();
        assert!(f.packed().is_some());
        assert!(labeling_unguarded(&Graph::path(17)).form.packed().is_none());
    }
}
