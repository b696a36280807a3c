use wiener_core::*;
use wiener_families::*;

fn w(g: &Graph) -> u64 {
    wiener(g).unwrap()
}

/// Floyd–Warshall Wiener index, independent of the BFS code.
fn w_floyd(g: &Graph) -> u64 {
    let n = g.order();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| d[i][j]).sum()
}

fn iso(a: &Graph, b: &Graph) -> bool {
    are_isomorphic(a, b).unwrap()
}

#[test]
fn standard_graphs() {
    assert!(iso(&circulant(8, &[1, 3]).unwrap(), &complete_bipartite(4, 4).unwrap()));
    let p = petersen();
    assert_eq!((p.order(), p.is_regular(), p.max_degree()), (10, true, 3));
    assert_eq!(diameter(&p).unwrap(), 2);
    assert_eq!(w(&complete_bipartite(4, 4).unwrap()), 40);
    let h = heawood();
    assert!(h.is_regular() && h.max_degree() == 3 && h.is_bipartite());
    assert_eq!(circumference(&hypercube(3).unwrap()).unwrap(), Some(8));
    assert_eq!(girth_by_bfs(&h), 6);
    assert!(is_vertex_transitive(&circulant(8, &[1, 2]).unwrap()).unwrap());
    assert_eq!(orbit_partition(&star(4).unwrap()).unwrap().len(), 2);
    assert!(is_vertex_transitive(&p).unwrap());
    assert!(standard("petersen", &[1]).is_err());
    assert!(circulant(6, &[4]).is_err());
    assert!(standard("nope", &[]).is_err());
}

fn girth_by_bfs(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for (u, v) in g.edges() {
        let mut h = g.clone();
        h.remove_edge(u, v);
        if let Some(d) = distance_matrix(&h).get(u, v) {
            best = best.min(d as usize + 1);
        }
    }
    best
}

#[test]
fn brooms() {
    let t = broom_t(9, 4).unwrap();
    assert!(t.is_tree());
    assert_eq!(t.max_degree(), 4);
    // path b..g plus pendants a, i, j on b, as drawn
    assert_eq!(w(&t), w_floyd(&t));
    assert_eq!(w(&t), 104);
    for n in 3..12 {
        assert!(iso(&broom_t(n, 2).unwrap(), &Graph::path(n)));
        assert!(iso(&double_broom(n + 1, 1, 1).unwrap(), &Graph::path(n + 1)));
    }
    let d = double_broom(12, 4, 3).unwrap();
    assert_eq!((d.order(), diameter(&d).unwrap()), (12, 6));
    assert!(broom_t(4, 4).is_err());
    assert!(double_broom(6, 2, 3).is_err());
}

#[test]
fn cubic_l_graphs() {
    for n in (10..=40).step_by(2) {
        let g = cubic_l(n).unwrap();
        assert_eq!(g.order(), n);
        assert!(g.is_connected() && g.degrees().iter().all(|&d| d == 3), "L_{n}");
    }
    assert!(cubic_l(8).is_err());
    assert!(cubic_l(11).is_err());
}

#[test]
fn theta_graphs() {
    assert!(iso(&theta(1, 1, 1).unwrap(), &complete_bipartite(2, 3).unwrap()));
    // K_{2,3}: six adjacent pairs, four pairs at distance 2
    assert_eq!(w(&theta(1, 1, 1).unwrap()), 14);
    assert_eq!(w_floyd(&theta(1, 1, 1).unwrap()), 14);
    let t = theta(3, 2, 1).unwrap();
    assert_eq!((t.order(), t.edge_count()), (8, 9));
    assert!(theta(1, 2, 1).is_err());
    assert!(theta(2, 0, 0).is_err());
}

#[test]
fn dumbbells_and_barbells() {
    let d = dumbbell(5, 3, 4).unwrap();
    assert_eq!((d.order(), d.edge_count()), (12, 3 + 6 + 6));
    assert!(iso(&dumbbell(1, 1, 1).unwrap(), &Graph::path(3)));
    assert_eq!(blocks(&dumbbell(1, 3, 3).unwrap()).len(), 4);
    for n in 5..=12 {
        let g = dumbbell(n - 4, 3, 1).unwrap();
        let formula = 1 + (1..=n - 2).map(|i| (n - i) * i).sum::<usize>();
        assert_eq!(w(&g), formula as u64, "n = {n}");
    }
    assert!(dumbbell(1, 2, 3).is_err());
    let b = barbell(2, (2, 3), (1, 2)).unwrap();
    assert_eq!((b.order(), b.edge_count()), (10, 6 + 1 + 2 + 2));
    assert!(b.is_bipartite());
}

#[test]
fn k_n_c_graphs() {
    let g = k_n_c(15, 4).unwrap();
    let pendants: Vec<usize> = (0..4).map(|v| g.degree(v) - 3).collect();
    assert_eq!(pendants, vec![3, 3, 3, 2]);
    assert_eq!(diameter(&g).unwrap(), 3);
    assert!(iso(&k_n_c(6, 6).unwrap(), &Graph::complete(6)));
    assert!(k_n_c(5, 0).is_err());
}

#[test]
fn diameter_four_trees() {
    for n in 5..=30 {
        let (a, b) = diameter4_trees(n).unwrap();
        let k = (1..).take_while(|k| k * k <= n - 1).last().unwrap();
        assert_eq!(a.is_some(), k * k + k >= n - 1);
        assert_eq!(b.is_some(), k * k + k <= n - 1);
        for t in a.iter().chain(b.iter()) {
            assert!(t.is_tree() && t.order() == n);
            assert_eq!(diameter(t).unwrap(), 4, "n = {n}");
        }
        if let (Some(a), Some(b)) = (&a, &b) {
            assert_eq!(w(a), w(b), "equality case n = {n}");
        }
    }
    let t = t_n(10).unwrap();
    assert_eq!(t.degree(0), 3);
}

#[test]
fn h_graphs() {
    let h = h_npq(7, 1, 2).unwrap();
    assert_eq!((h.order(), h.edge_count()), (7, 8));
    assert!(is_biconnected(&h));
    let mut c = Graph::cycle(7);
    c.add_edge(0, 2);
    assert!(iso(&h, &c));
    for n in 7..=16 {
        assert_eq!(w(&h_plus(n).unwrap()) + 1, w(&h_npq(n, 2, 2).unwrap()), "n = {n}");
    }
    assert!(h_npq(7, 3, 2).is_err());
    assert!(h_npq(7, 1, 1).is_err());
    assert!(h_plus(6).is_err());
}

#[test]
fn g_nrs_graphs() {
    let g = g_nrs(8, 3, 1).unwrap();
    assert_eq!(radius(&g).unwrap(), 3);
    assert_eq!(w(&g), 48);
    assert_eq!(w(&g), w(&g_nrs(8, 3, 2).unwrap()));
    for n in 6..=16 {
        for r in [3, 4] {
            if n < 2 * r {
                continue;
            }
            let base = w(&g_nrs(n, r, 1).unwrap());
            for s in 1..=n + 1 - 2 * r {
                let g = g_nrs(n, r, s).unwrap();
                assert_eq!(g.order(), n);
                assert_eq!(radius(&g).unwrap(), r as u32);
                assert_eq!(w(&g), base);
            }
        }
    }
    assert!(g_nrs(8, 3, 4).is_err());
    assert!(g_nrs(8, 2, 1).is_err());
}

#[test]
fn cambie_haslegrave_graphs() {
    let g = cambie_haslegrave(8, 3).unwrap();
    assert_eq!(g.order(), 12);
    assert!((0..8).all(|v| g.degree(v) == 6));
    assert!(g.is_connected() && !g.is_complete());
    assert!(cambie_haslegrave(4, 3).is_err());
}

#[test]
fn soltes_b_graphs() {
    let b = soltes_b(2).unwrap();
    assert_eq!(b.order(), 16);
    assert!(is_biconnected(&b));
    assert_eq!(soltes_b(3).unwrap().order(), 21);
    assert!(soltes_b(1).is_err());
}

#[test]
fn clique_tree_joins() {
    assert_eq!(w(&join_clique_tree(1, &Graph::path(2)).unwrap()), 3);
    let star = Graph::star(4);
    for t in [Graph::path(4), star.clone()] {
        assert_eq!(w(&join_clique_tree(2, &t).unwrap()), 18);
    }
    assert!(join_clique_tree(2, &Graph::cycle(4)).is_err());
}

#[test]
fn blowups() {
    let k222 = blowup(&Graph::cycle(3), &[2, 2, 2]).unwrap();
    let mut expect = Graph::complete(6);
    for i in 0..3 {
        expect.remove_edge(2 * i, 2 * i + 1);
    }
    assert!(iso(&k222, &expect));
    let p = petersen();
    assert!(iso(&blowup(&p, &[1; 10]).unwrap(), &p));
    assert!(blowup(&p, &[1; 9]).is_err());
}

#[test]
fn family_specs() {
    assert_eq!(FamilySpec::parse("theta:3,2,1").unwrap().build().unwrap(), theta(3, 2, 1).unwrap());
    assert_eq!(FamilySpec::parse("petersen").unwrap().build().unwrap(), petersen());
    assert!(FamilySpec::parse("theta:3,x").is_err());
    assert!(FamilySpec::new("theta", &[1]).build().is_err());
}

#[test]
fn coloring_counterexample_fixture() {
    let g = figures::coloring_counterexample();
    assert_eq!((g.order(), g.edge_count()), (18, 19));
    assert_eq!(chromatic_number(&g).unwrap(), 3);
}
