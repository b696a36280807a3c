use wiener_core::{invalid, Graph, Result, MAX_ORDER};

fn fits(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(invalid(format!("order {n} exceeds 64")));
    }
    Ok(())
}

/// T_{n,Δ}: a path on n-Δ+1 vertices with Δ-1 pendants at vertex 0.
pub fn broom_t(n: usize, delta: usize) -> Result<Graph> {
    if delta < 2 || n < delta + 1 {
        return Err(invalid(format!("broom T(n={n}, Δ={delta}) needs Δ >= 2 and n >= Δ+1")));
    }
    fits(n)?;
    let spine = n - delta + 1;
    let mut g = Graph::path(spine);
    for _ in 0..delta - 1 {
        g.push_vertex(1);
    }
    Ok(g)
}

/// D(n, a, b): a leaves on one end of a path, b on the other.
pub fn double_broom(n: usize, a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 || n < a + b + 2 {
        return Err(invalid(format!("double broom D({n},{a},{b}) needs a,b >= 1 and n >= a+b+2")));
    }
    fits(n)?;
    let spine = n - a - b;
    let mut g = Graph::path(spine);
    for _ in 0..a {
        g.push_vertex(1);
    }
    for _ in 0..b {
        g.push_vertex(1 << (spine - 1));
    }
    Ok(g)
}

/// K_n^c: a K_c core with n-c pendants spread as evenly as possible,
/// lower-indexed core vertices taking the larger share.
pub fn k_n_c(n: usize, c: usize) -> Result<Graph> {
    if c == 0 || c > n {
        return Err(invalid(format!("K_n^c needs 1 <= c <= n, got n={n}, c={c}")));
    }
    fits(n)?;
    if c == 1 && n > 1 {
        return Ok(Graph::star(n));
    }
    let mut g = Graph::complete(c);
    let extra = n - c;
    for i in 0..c {
        let share = extra / c + usize::from(i < extra % c);
        for _ in 0..share {
            g.push_vertex(1 << i);
        }
    }
    Ok(g)
}

fn root_k(n: usize) -> usize {
    let mut k = (((n - 1) as f64).sqrt()) as usize;
    while k * k > n - 1 {
        k -= 1;
    }
    while (k + 1) * (k + 1) <= n - 1 {
        k += 1;
    }
    k
}

/// Rooted tree: root 0 with children of the given child counts.
fn two_level(children: &[usize]) -> Graph {
    let mut g = Graph::new(1);
    for &c in children {
        let x = g.push_vertex(1);
        for _ in 0..c {
            g.push_vertex(1 << x);
        }
    }
    g
}

/// T_n (needs k²+k >= n-1, k = ⌊√(n-1)⌋): root of degree k, n-k²-1 of
/// its neighbours of degree k+1, the rest of degree k.
pub fn t_n(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(invalid("T_n needs n >= 5"));
    }
    fits(n)?;
    let k = root_k(n);
    if k * k + k < n - 1 {
        return Err(invalid(format!("T_n needs k²+k >= n-1 (n={n}, k={k})")));
    }
    let big = n - k * k - 1;
    let children: Vec<usize> = (0..k).map(|i| if i < big { k } else { k - 1 }).collect();
    Ok(two_level(&children))
}

/// T_n' (needs k²+k <= n-1): root of degree k+1, n-k²-k-1 neighbours of
/// degree k+1, the rest of degree k.
pub fn t_n_prime(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(invalid("T_n' needs n >= 5"));
    }
    fits(n)?;
    let k = root_k(n);
    if k * k + k > n - 1 {
        return Err(invalid(format!("T_n' needs k²+k <= n-1 (n={n}, k={k})")));
    }
    let big = n - k * k - k - 1;
    if big > k + 1 {
        return Err(invalid(format!("T_n' undefined for n={n}")));
    }
    let children: Vec<usize> = (0..=k).map(|i| if i < big { k } else { k - 1 }).collect();
    Ok(two_level(&children))
}

/// Whichever of T_n, T_n' exist for this n.
pub fn diameter4_trees(n: usize) -> Result<(Option<Graph>, Option<Graph>)> {
    if n < 5 {
        return Err(invalid("diameter-4 extremal trees need n >= 5"));
    }
    Ok((t_n(n).ok(), t_n_prime(n).ok()))
}

/// Join of K_ℓ and a tree; clique vertices come first.
pub fn join_clique_tree(l: usize, t: &Graph) -> Result<Graph> {
    if !t.is_tree() {
        return Err(wiener_core::Error::NotATree);
    }
    if l == 0 {
        return Err(invalid("join needs ℓ >= 1"));
    }
    Graph::complete(l).join(t)
}
