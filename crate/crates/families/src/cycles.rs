//! Constructions built from cycles, paths and cliques.

use wiener_core::{invalid, Graph, Result, MAX_ORDER};

fn fits(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(invalid(format!("order {n} exceeds 64")));
    }
    Ok(())
}

/// Appends a path of `len` new vertices starting next to `from` and
/// returns the last one (or `from` when `len` = 0).
fn hang_path(g: &mut Graph, from: usize, len: usize) -> usize {
    let mut last = from;
    for _ in 0..len {
        last = g.push_vertex(1 << last);
    }
    last
}

/// Θ_{a,b,c}: vertices 0 and 1 joined by paths with a, b, c inner
/// vertices (lengths a+1, b+1, c+1), laid out in that order.
pub fn theta(a: usize, b: usize, c: usize) -> Result<Graph> {
    if !(a >= b && b >= c && b >= 1) {
        return Err(invalid(format!("theta needs a >= b >= c >= 0 and b >= 1, got ({a},{b},{c})")));
    }
    fits(a + b + c + 2)?;
    let mut g = Graph::new(2);
    for len in [a, b, c] {
        if len == 0 {
            g.add_edge(0, 1);
        } else {
            let end = hang_path(&mut g, 0, len);
            g.add_edge(end, 1);
        }
    }
    Ok(g)
}

/// H_{n,p,q}: three internally disjoint 0–1 paths of lengths p, q and
/// n-p-q+1.
pub fn h_npq(n: usize, p: usize, q: usize) -> Result<Graph> {
    if !(1 <= p && p <= q && q > 1 && q + p <= n + 1 && q <= n + 1 - p - q) {
        return Err(invalid(format!("H_(n,p,q) needs 1 <= p <= q <= n-p-q+1 and q > 1, got ({n},{p},{q})")));
    }
    fits(n)?;
    let mut g = Graph::new(2);
    for len in [p, q, n + 1 - p - q] {
        if len == 1 {
            g.add_edge(0, 1);
        } else {
            let end = hang_path(&mut g, 0, len - 1);
            g.add_edge(end, 1);
        }
    }
    Ok(g)
}

/// H^+_{n,2,2}: H_{n,2,2} plus an edge between the middle vertices of the
/// two paths of length 2.
pub fn h_plus(n: usize) -> Result<Graph> {
    if n < 7 {
        return Err(invalid("H^+_(n,2,2) needs n >= 7"));
    }
    let mut g = h_npq(n, 2, 2)?;
    g.add_edge(2, 3);
    Ok(g)
}

/// D_c(a,b): K_a, then the path v_1..v_c, then K_b; v_1 and v_c attach
/// to the lowest vertex of their clique.
pub fn dumbbell(c: usize, a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 || a == 2 || b == 2 || c == 0 {
        return Err(invalid(format!("dumbbell D_{c}({a},{b}) needs a,b >= 1, a,b != 2, c >= 1")));
    }
    fits(a + b + c)?;
    let mut g = Graph::complete(a);
    let end = hang_path(&mut g, 0, c);
    let first_b = g.order();
    g.push_vertex(1 << end);
    for _ in 1..b {
        let all_b = ((1u64 << g.order()) - 1) & !((1u64 << first_b) - 1);
        g.push_vertex(all_b);
    }
    Ok(g)
}

fn push_complete_bipartite(g: &mut Graph, x: usize, y: usize) -> usize {
    let base = g.order();
    for _ in 0..x {
        g.push_vertex(0);
    }
    for _ in 0..y {
        g.push_vertex(((1u64 << x) - 1) << base);
    }
    base
}

/// Barbell: K_{a1,a2}, a path of c vertices, K_{b1,b2}; the path attaches
/// to the lowest vertex of each end.
pub fn barbell(c: usize, a: (usize, usize), b: (usize, usize)) -> Result<Graph> {
    if a.0 == 0 || a.1 == 0 || b.0 == 0 || b.1 == 0 || c == 0 {
        return Err(invalid("barbell needs nonempty bipartite parts and c >= 1"));
    }
    fits(a.0 + a.1 + b.0 + b.1 + c)?;
    let mut g = Graph::new(0);
    push_complete_bipartite(&mut g, a.0, a.1);
    let end = hang_path(&mut g, 0, c);
    let base = push_complete_bipartite(&mut g, b.0, b.1);
    g.add_edge(end, base);
    Ok(g)
}

/// G_{n,r,s}: a 2r-cycle v_1..v_2r whose v_2 and v_3 are blown up into
/// cliques of orders s and n-2r+2-s joined completely to each other.
pub fn g_nrs(n: usize, r: usize, s: usize) -> Result<Graph> {
    if r < 3 || n < 2 * r || s == 0 || s > n + 1 - 2 * r {
        return Err(invalid(format!("G_(n,r,s) needs n >= 2r, r >= 3, 1 <= s <= n-2r+1, got ({n},{r},{s})")));
    }
    fits(n)?;
    let t = n + 2 - 2 * r - s;
    // v_1 = 0, K_s, K_t, then v_4..v_2r
    let mut g = Graph::new(1);
    let ks: Vec<usize> = (0..s).map(|_| g.push_vertex(0)).collect();
    let kt: Vec<usize> = (0..t).map(|_| g.push_vertex(0)).collect();
    for (i, &x) in ks.iter().enumerate() {
        g.add_edge(0, x);
        for &y in &ks[i + 1..] {
            g.add_edge(x, y);
        }
        for &y in &kt {
            g.add_edge(x, y);
        }
    }
    for (i, &x) in kt.iter().enumerate() {
        for &y in &kt[i + 1..] {
            g.add_edge(x, y);
        }
    }
    let v4 = g.push_vertex(kt.iter().fold(0, |m, &x| m | 1 << x));
    let last = hang_path(&mut g, v4, 2 * r - 4);
    g.add_edge(last, 0);
    Ok(g)
}

/// G_{k,ℓ}: K_k minus the Hamiltonian cycle 0-1-..-(k-1), every clique
/// vertex joined to the first vertex k of a path k..k+ℓ.
pub fn cambie_haslegrave(k: usize, l: usize) -> Result<Graph> {
    if k < 5 || l == 0 {
        return Err(invalid(format!("G_(k,ℓ) needs k >= 5 and ℓ >= 1, got ({k},{l})")));
    }
    fits(k + l + 1)?;
    let mut g = Graph::complete(k);
    for i in 0..k {
        g.remove_edge(i, (i + 1) % k);
    }
    let apex = g.push_vertex((1u64 << k) - 1);
    hang_path(&mut g, apex, l);
    Ok(g)
}

/// B(k): vertices 0 and 1 joined by k paths of length 6 and one of
/// length 5.
pub fn soltes_b(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(invalid("B(k) needs k >= 2"));
    }
    fits(5 * k + 6)?;
    let mut g = Graph::new(2);
    for len in std::iter::repeat(6).take(k).chain([5]) {
        let end = hang_path(&mut g, 0, len - 1);
        g.add_edge(end, 1);
    }
    Ok(g)
}
