use wiener_core::{invalid, Error, Graph, Result, MAX_ORDER};
use wiener_families::theta;

use crate::digraph::{digraph_wiener, Digraph};

/// Directed cycle 0→1→…→n−1→0.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(invalid(format!("directed cycle needs 3 <= n <= 64, got {n}")));
    }
    Digraph::from_arcs(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

/// Directed path 0→1→…→n−1.
pub fn directed_path(n: usize) -> Result<Digraph> {
    Digraph::from_arcs(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

/// Star with every arc leaving the centre 0.
pub fn out_star(n: usize) -> Result<Digraph> {
    Digraph::from_arcs(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>())
}

/// Largest c for which the c-path of `theta_max` is searched exhaustively.
pub const THETA_SEARCH_LIMIT: usize = 20;

/// Orientation of Θ_{a,b,c} (vertex layout of `wiener_families::theta`)
/// where the paths of lengths a+1 and b+1 form the directed cycle
/// u1 → a-path → u2 → b-path → u1. The c-path takes the best of its
/// 2^(c+1) orientations.
pub fn theta_max(a: usize, b: usize, c: usize) -> Result<Digraph> {
    let g = theta(a, b, c)?;
    if c > THETA_SEARCH_LIMIT {
        return Err(Error::SizeGuard { op: "theta c-path search", limit: THETA_SEARCH_LIMIT, n: c });
    }
    let mut d = Digraph::new(g.order());
    let path = |start: usize, len: usize| -> Vec<usize> {
        let mut p = vec![0];
        p.extend(start..start + len);
        p.push(1);
        p
    };
    for w in path(2, a).windows(2) {
        d.add_arc(w[0], w[1]);
    }
    for w in path(2 + a, b).windows(2) {
        d.add_arc(w[1], w[0]);
    }
    let cp = path(2 + a + b, c);
    let mut best: Option<(u64, Digraph)> = None;
    for dirs in 0u64..1 << (c + 1) {
        let mut e = d.clone();
        for (i, w) in cp.windows(2).enumerate() {
            if dirs >> i & 1 == 0 {
                e.add_arc(w[0], w[1]);
            } else {
                e.add_arc(w[1], w[0]);
            }
        }
        let w = digraph_wiener(&e);
        if best.as_ref().map_or(true, |(bw, _)| w > *bw) {
            best = Some((w, e));
        }
    }
    Ok(best.unwrap().1)
}

/// Vertex (i, j) of the grid, 1-based row i (row 1 on top) and column j.
pub fn grid_vertex(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// G_{m,n} = P_m □ P_n with `grid_vertex` labels: columns are the
/// P_m-layers, rows the P_n-layers.
pub fn grid(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 || m * n > MAX_ORDER {
        return Err(Error::Capacity { what: "grid", needed: m * n, limit: MAX_ORDER });
    }
    let mut g = Graph::new(m * n);
    for i in 1..=m {
        for j in 1..=n {
            if j < n {
                g.add_edge(grid_vertex(n, i, j), grid_vertex(n, i, j + 1));
            }
            if i < m {
                g.add_edge(grid_vertex(n, i, j), grid_vertex(n, i + 1, j));
            }
        }
    }
    Ok(g)
}

/// D_{m,n}: columns point up except the last, rows point left except the
/// first. The ladder orientation is D_{2,n}.
pub fn grid_d(m: usize, n: usize) -> Result<Digraph> {
    if m < 2 || n < 2 {
        return Err(invalid(format!("grid D needs m, n >= 2, got ({m},{n})")));
    }
    grid(m, n)?;
    let mut d = Digraph::new(m * n);
    let v = |i, j| grid_vertex(n, i, j);
    for j in 1..=n {
        for i in 1..m {
            if j == n {
                d.add_arc(v(i, j), v(i + 1, j));
            } else {
                d.add_arc(v(i + 1, j), v(i, j));
            }
        }
    }
    for i in 1..=m {
        for j in 1..n {
            if i == 1 {
                d.add_arc(v(i, j), v(i, j + 1));
            } else {
                d.add_arc(v(i, j + 1), v(i, j));
            }
        }
    }
    Ok(d)
}

/// The ladder orientation of P_n □ P_2.
pub fn ladder_max(n: usize) -> Result<Digraph> {
    grid_d(2, n)
}

/// (8n³+3n²−5n+6)/3.
pub fn ladder_formula(n: u64) -> u64 {
    (8 * n * n * n + 3 * n * n + 6 - 5 * n) / 3
}

/// C_{m,n}: the top row runs right and closes into a Hamiltonian cycle
/// snaking through columns n−1..2 between rows 2 and m. Remaining edges
/// point from the later vertex to the earlier one along the cycle from
/// (1,1).
pub fn grid_c(m: usize, n: usize) -> Result<Digraph> {
    if n < 4 || n % 2 == 1 || m < 2 {
        return Err(invalid(format!("grid C needs n even >= 4 and m >= 2, got ({m},{n})")));
    }
    let g = grid(m, n)?;
    let v = |i, j| grid_vertex(n, i, j);
    let mut cycle: Vec<usize> = (1..=n).map(|j| v(1, j)).collect();
    cycle.extend((2..=m).map(|i| v(i, n)));
    for c in (2..n).rev() {
        if (n - c) % 2 == 1 {
            cycle.extend((2..=m).rev().map(|i| v(i, c)));
        } else {
            cycle.extend((2..=m).map(|i| v(i, c)));
        }
    }
    cycle.extend((2..=m).rev().map(|i| v(i, 1)));
    debug_assert_eq!(cycle.len(), m * n);
    let mut pos = vec![0; m * n];
    for (k, &x) in cycle.iter().enumerate() {
        pos[x] = k;
    }
    let mut d = Digraph::new(m * n);
    for k in 0..cycle.len() {
        let (x, y) = (cycle[k], cycle[(k + 1) % cycle.len()]);
        debug_assert!(g.has_edge(x, y));
        d.add_arc(x, y);
    }
    for (x, y) in g.edges() {
        if !d.has_arc(x, y) && !d.has_arc(y, x) {
            if pos[x] > pos[y] {
                d.add_arc(x, y);
            } else {
                d.add_arc(y, x);
            }
        }
    }
    Ok(d)
}

/// Vertex layout of `dankelmann(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DankelmannLayout {
    pub w: Vec<usize>,
    pub u: Vec<usize>,
    pub x: Vec<usize>,
    pub y: usize,
}

impl DankelmannLayout {
    pub fn new(k: usize) -> Self {
        let leaves = k * k / 9;
        DankelmannLayout {
            w: (0..k).collect(),
            u: (k..k + leaves).collect(),
            x: (k + leaves..k + leaves + 5).collect(),
            y: k + leaves + 5,
        }
    }

    pub fn order(&self) -> usize {
        self.y + 1
    }
}

/// D_k on T_k: the path w_1…w_k points towards w_k, every u_i→w_1,
/// x_1…x_5 points towards x_5 with w_2→x_1, and y_1→w_3. The arc set
/// follows the construction in words; it is a zig-zag orientation even
/// though the accompanying drawing is captioned "no-zig-zag".
pub fn dankelmann(k: usize) -> Result<Digraph> {
    if k == 0 || k % 3 != 0 {
        return Err(invalid(format!("dankelmann needs k a positive multiple of 3, got {k}")));
    }
    let l = DankelmannLayout::new(k);
    if l.order() > MAX_ORDER {
        return Err(Error::Capacity { what: "dankelmann tree", needed: l.order(), limit: MAX_ORDER });
    }
    let mut d = Digraph::new(l.order());
    for p in l.w.windows(2) {
        d.add_arc(p[0], p[1]);
    }
    for &u in &l.u {
        d.add_arc(u, l.w[0]);
    }
    d.add_arc(l.w[1], l.x[0]);
    for p in l.x.windows(2) {
        d.add_arc(p[0], p[1]);
    }
    d.add_arc(l.y, l.w[2]);
    Ok(d)
}

/// The oriented Θ_{3,2,1} of the drawing: cycle u1→a1→a2→a3→u2→b2→b1→u1
/// and z1 pointing to both u1 and u2.
pub fn theta_321_drawn() -> Digraph {
    Digraph::from_arcs(8, &[(0, 2), (2, 3), (3, 4), (4, 1), (1, 6), (6, 5), (5, 0), (7, 0), (7, 1)]).unwrap()
}

/// The two drawn oriented trees on a..f = 0..5: the first has core
/// vertices c and d, the second has none.
pub fn core_examples() -> (Digraph, Digraph) {
    let left = Digraph::from_arcs(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
    let right = Digraph::from_arcs(6, &[(0, 2), (1, 2), (3, 2), (3, 4), (3, 5)]).unwrap();
    (left, right)
}
