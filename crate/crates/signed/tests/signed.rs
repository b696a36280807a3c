use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wiener_core::{blowup, wiener, Graph, Shard};
use wiener_signed::*;

/// All simple u-v paths, listed explicitly.
fn all_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, path: &mut Vec<usize>, v: usize, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == v {
            out.push(path.clone());
            return;
        }
        for w in 0..g.order() {
            if g.has_edge(last, w) && !path.contains(&w) {
                path.push(w);
                go(g, path, v, out);
                path.pop();
            }
        }
    }
    let mut out = vec![];
    go(g, &mut vec![u], v, &mut out);
    out
}

fn oracle_wiener(s: &SignedGraph) -> u64 {
    let n = s.order();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            total += all_paths(s.base(), u, v).iter().map(|p| s.path_sum(p).unwrap().unsigned_abs()).min().unwrap();
        }
    }
    total
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

fn random_tree(n: usize, parents: &[usize]) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(parents[v - 1] % v, v);
    }
    g
}

fn double_star(n: usize, a: usize) -> Graph {
    let mut g = Graph::new(n);
    g.add_edge(0, 1);
    for v in 2..n {
        g.add_edge(if v - 2 < a { 0 } else { 1 }, v);
    }
    g
}

proptest! {
    #[test]
    fn tree_distance_parity(n in 2usize..20, parents in proptest::collection::vec(0usize..64, 19), signs in any::<u64>()) {
        let t = random_tree(n, &parents);
        let s = SignedGraph::new(&t, signs).unwrap();
        let hop = wiener_core::distance_matrix(&t);
        for u in 0..n {
            for v in 0..n {
                let d = signed_distance(&s, u, v).unwrap();
                prop_assert_eq!(d % 2, hop.get(u, v).unwrap() % 2);
                prop_assert!(d <= hop.get(u, v).unwrap());
            }
        }
        prop_assert_eq!(signed_wiener(&s).unwrap(), signed_wiener(&s.negated()).unwrap());
    }

    #[test]
    fn matches_path_oracle(seed in any::<u64>(), n in 2usize..8, signs in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, n, 0.5);
        let s = SignedGraph::new(&g, signs).unwrap();
        prop_assert_eq!(signed_wiener(&s).unwrap(), oracle_wiener(&s));
        prop_assert_eq!(signed_wiener(&s).unwrap(), signed_wiener(&s.negated()).unwrap());
        let d = signed_distances(&s).unwrap();
        for u in 0..n {
            for v in 0..n {
                for p in all_paths(&g, u, v) {
                    prop_assert!(d[u][v] as i64 <= s.path_sum(&p).unwrap().abs());
                }
                prop_assert_eq!(d[u][v], signed_distance(&s, u, v).unwrap());
            }
        }
        prop_assert_eq!(is_canceling(&s).unwrap(), oracle_wiener(&s) == 0);
    }
}

#[test]
fn small_values() {
    let p3 = SignedGraph::from_signs(&Graph::path(3), &[1, -1]).unwrap();
    assert_eq!(signed_distance(&p3, 0, 2).unwrap(), 0);
    assert_eq!(signed_wiener(&p3).unwrap(), 2);
    assert_eq!(signed_wiener(&SignedGraph::alternating_path(4).unwrap()).unwrap(), 4);
    // Cycle 0-1-2-3-0 with edges (0,1)+ (0,3)- (1,2)- (2,3)+ in lexicographic order.
    let c4 = SignedGraph::from_signs(&Graph::cycle(4), &[1, -1, -1, 1]).unwrap();
    assert_eq!(c4.sign(1, 2), Some(-1));
    assert_eq!(signed_distance(&c4, 0, 2).unwrap(), 0);
    assert_eq!(signed_distance(&c4, 1, 3).unwrap(), 0);
    assert!(SignedGraph::from_signs(&Graph::path(3), &[1, 0]).is_err());
    assert!(signed_wiener(&SignedGraph::constant(&Graph::new(3), true).unwrap()).is_err());
    assert!(signed_wiener(&SignedGraph::constant(&Graph::cycle(15), true).unwrap()).is_err());
    assert!(SignedGraph::constant(&Graph::complete(12), true).is_err());
    assert!(signed_wiener(&SignedGraph::constant(&Graph::path(40), true).unwrap()).is_ok());
    let k2 = min_signed_wiener(&Graph::path(2), Shard::ALL).unwrap();
    assert_eq!(k2.value, 1);
}

#[test]
fn constant_signature_gives_wiener() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..100 {
        let n = 2 + i % 9;
        let p = 0.3 + 0.4 * rng.gen::<f64>();
        let g = random_connected(&mut rng, n, p);
        for positive in [true, false] {
            let s = SignedGraph::constant(&g, positive).unwrap();
            assert_eq!(signed_wiener(&s).unwrap(), wiener(&g).unwrap());
        }
    }
}

#[test]
fn path_minimum_is_alternating() {
    for n in 2..=9 {
        let alt = signed_wiener(&SignedGraph::alternating_path(n).unwrap()).unwrap();
        let min = min_signed_wiener(&Graph::path(n), Shard::ALL).unwrap();
        assert_eq!(min.value, alt, "P_{n}");
    }
}

#[test]
fn tree_conjecture_up_to_eight() {
    for n in 2..=8 {
        let lower = min_signed_wiener(&Graph::path(n), Shard::ALL).unwrap().value;
        let alt = signed_wiener(&SignedGraph::alternating_path(n).unwrap()).unwrap();
        let upper = (0..=(n - 2) / 2).map(|a| min_signed_wiener(&double_star(n, a), Shard::ALL).unwrap().value).max().unwrap();
        let mut count = 0;
        wiener_enumerate::trees(n, |t| {
            let w = min_signed_wiener(t, Shard::ALL).unwrap().value;
            assert!(alt <= w && lower <= w && w <= upper, "n={n}: {lower} <= {w} <= {upper}");
            count += 1;
        })
        .unwrap();
        assert!(count > 0);
    }
}

#[test]
fn shards_merge() {
    let g = Graph::cycle(7);
    let full = min_signed_wiener(&g, Shard::ALL).unwrap();
    let mut merged = SignedMinimum { value: 0, argmin: vec![], visited: 0 };
    for sh in Shard::all(3) {
        merged.merge(&min_signed_wiener(&g, sh).unwrap());
    }
    assert_eq!(merged, full);
    assert_eq!(full.visited, 64);
}

#[test]
fn complete_six_is_one_canceling() {
    let k6 = Graph::complete(6);
    let found = exists_k_canceling(&k6, 1, Shard::ALL).unwrap();
    let sig = found.signature.expect("K_6 has a canceling signature");
    let s = SignedGraph::new(&k6, sig).unwrap();
    assert_eq!(oracle_wiener(&s), 0);
    assert_eq!(is_k_canceling(&s, 1).unwrap(), CancelVerdict::Holds);
    for n in 3..=5 {
        let g = Graph::complete(n);
        let m = g.edge_count();
        let oracle = (0..1u64 << m).any(|x| oracle_wiener(&SignedGraph::new(&g, x).unwrap()) == 0);
        assert_eq!(exists_k_canceling(&g, 1, Shard::ALL).unwrap().signature.is_some(), oracle, "K_{n}");
    }
}

#[test]
fn trees_never_cancel() {
    let t = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
    assert_eq!(exists_k_canceling(&t, 1, Shard::ALL).unwrap().signature, None);
}

#[test]
fn bipartite_plus_cliques_instance() {
    // G' = K_{3,3} minus a perfect matching on U = {0,1,2}, V = {3,4,5};
    // both sides then become triangles.
    let mut g = Graph::new(6);
    for u in 0..3 {
        for v in 3..6 {
            if v - 3 != u {
                g.add_edge(u, v);
            }
        }
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)] {
        g.add_edge(a, b);
    }
    let found = exists_k_canceling(&g, 1, Shard::ALL).unwrap();
    let s = SignedGraph::new(&g, found.signature.unwrap()).unwrap();
    assert_eq!(oracle_wiener(&s), 0);
}

#[test]
fn odd_cycle_blowup_is_one_canceling() {
    let g = blowup(&Graph::cycle(5), &[2; 5]).unwrap();
    assert_eq!((g.order(), g.edge_count()), (10, 20));
    let found = exists_k_canceling(&g, 1, Shard::ALL).unwrap();
    let s = SignedGraph::new(&g, found.signature.expect("blowup has a canceling signature")).unwrap();
    assert_eq!(signed_wiener(&s).unwrap(), 0);
}

#[test]
fn removal_reports() {
    // K_6 with a pendant: deleting the attachment vertex disconnects it.
    let mut g = Graph::complete(6);
    g.push_vertex(1);
    let s = SignedGraph::constant(&g, true).unwrap();
    assert!(matches!(is_k_canceling(&s, 2).unwrap(), CancelVerdict::Fails(0)));
    let k6 = Graph::complete(6);
    let sig = exists_k_canceling(&k6, 1, Shard::ALL).unwrap().signature.unwrap();
    let s = SignedGraph::new(&k6, sig).unwrap();
    let two = is_k_canceling(&s, 2).unwrap();
    assert!(matches!(two, CancelVerdict::Fails(set) if set.count_ones() == 1));
    let path = SignedGraph::from_signs(&Graph::path(3), &[1, -1]).unwrap();
    assert_eq!(is_k_canceling(&path, 2).unwrap(), CancelVerdict::Fails(0));
    let single = SignedGraph::constant(&Graph::path(1), true).unwrap();
    assert_eq!(is_k_canceling(&single, 1).unwrap(), CancelVerdict::Holds);
    let star = Graph::star(4);
    let s = SignedGraph::constant(&star, true).unwrap();
    assert_eq!(s.delete_vertices(1).unwrap().base().edge_count(), 0);
    assert_eq!(set_members(0b101), vec![0, 2]);
}
