use wiener_core::{invalid, Graph, Result, MAX_ORDER};

fn order_ok(n: usize, what: &str) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(invalid(format!("{what}: order {n} outside 1..=64")));
    }
    Ok(())
}

pub fn path(n: usize) -> Result<Graph> {
    order_ok(n, "path")?;
    Ok(Graph::path(n))
}

/// Star S_n on n vertices, centre 0.
pub fn star(n: usize) -> Result<Graph> {
    order_ok(n, "star")?;
    Ok(Graph::star(n))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    order_ok(n, "cycle")?;
    Ok(Graph::cycle(n))
}

pub fn complete(n: usize) -> Result<Graph> {
    order_ok(n, "complete graph")?;
    Ok(Graph::complete(n))
}

/// K_{a,b}; the first part is 0..a.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("complete bipartite parts must be nonempty"));
    }
    order_ok(a + b, "complete bipartite graph")?;
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Circulant C_n(j_1, ..., j_t): i ~ i ± j_s (mod n).
pub fn circulant(n: usize, jumps: &[usize]) -> Result<Graph> {
    order_ok(n, "circulant")?;
    if jumps.is_empty() {
        return Err(invalid("circulant needs at least one jump"));
    }
    let mut g = Graph::new(n);
    for &j in jumps {
        if j == 0 || j > n / 2 {
            return Err(invalid(format!("circulant jump {j} outside 1..={}", n / 2)));
        }
        for i in 0..n {
            g.add_edge(i, (i + j) % n);
        }
    }
    Ok(g)
}

/// Outer 5-cycle 0..5, spokes i ~ i+5, inner pentagram.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// LCF notation [5,-5]^7.
pub fn heawood() -> Graph {
    let mut g = Graph::cycle(14);
    for i in (0..14).step_by(2) {
        g.add_edge(i, (i + 5) % 14);
    }
    g
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 6 {
        return Err(invalid(format!("hypercube Q_{d} exceeds 64 vertices")));
    }
    let n = 1 << d;
    let mut g = Graph::new(n);
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                g.add_edge(v, w);
            }
        }
    }
    Ok(g)
}

/// Named standard graph. Parameters: path/star/cycle/complete `[n]`,
/// complete_bipartite `[a, b]`, circulant `[n, j1, j2, ...]`,
/// hypercube `[d]`; petersen and heawood take none.
pub fn standard(name: &str, params: &[usize]) -> Result<Graph> {
    let want = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(invalid(format!("{name} takes {k} parameter(s), got {}", params.len())))
        }
    };
    match name {
        "path" | "P" => want(1).and_then(|_| path(params[0])),
        "star" | "S" => want(1).and_then(|_| star(params[0])),
        "cycle" | "C" => want(1).and_then(|_| cycle(params[0])),
        "complete" | "K" => want(1).and_then(|_| complete(params[0])),
        "complete_bipartite" | "Kab" => want(2).and_then(|_| complete_bipartite(params[0], params[1])),
        "circulant" => match params.split_first() {
            Some((&n, jumps)) => circulant(n, jumps),
            None => Err(invalid("circulant needs n and jumps")),
        },
        "petersen" => want(0).map(|_| petersen()),
        "heawood" => want(0).map(|_| heawood()),
        "hypercube" | "Q" => want(1).and_then(|_| hypercube(params[0])),
        _ => Err(invalid(format!("unknown standard graph {name:?}"))),
    }
}
