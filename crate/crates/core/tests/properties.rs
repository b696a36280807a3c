use proptest::prelude::*;
use wiener_core::*;

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs), proptest::collection::vec(0..n.max(1), n))
        })
        .prop_map(|(n, bits, parents)| {
            let mut g = Graph::new(n);
            // random spanning tree keeps the graph connected
            for v in 1..n {
                g.add_edge(v, parents[v] % v);
            }
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn transmissions_sum_to_twice_wiener(g in connected_graph(14)) {
        let t = transmissions(&g).unwrap();
        prop_assert_eq!(t.iter().sum::<u64>(), 2 * wiener(&g).unwrap());
    }

    #[test]
    fn folklore_bounds(g in connected_graph(14)) {
        let n = g.order() as u64;
        let w = wiener(&g).unwrap();
        prop_assert!(binom(n, 2) <= w && w <= binom(n + 1, 3));
    }

    #[test]
    fn radius_diameter_sandwich(g in connected_graph(14)) {
        let e = eccentricity_profile(&g).unwrap();
        prop_assert!(e.radius <= e.diameter && e.diameter <= 2 * e.radius);
    }

    #[test]
    fn canonical_form_is_permutation_invariant(g in connected_graph(8), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permute(&perm)).unwrap());
    }

    #[test]
    fn edge_monotonicity(g in connected_graph(12)) {
        let w = wiener(&g).unwrap();
        let n = g.order();
        for u in 0..n {
            for v in u + 1..n {
                let mut h = g.clone();
                if g.has_edge(u, v) {
                    h.remove_edge(u, v);
                    if h.is_connected() {
                        prop_assert!(wiener(&h).unwrap() > w);
                    }
                } else {
                    h.add_edge(u, v);
                    prop_assert!(wiener(&h).unwrap() < w);
                }
            }
        }
    }

    #[test]
    fn block_edges_partition_edge_set(g in connected_graph(14)) {
        let b = blocks(&g);
        let total: usize = (0..b.len()).map(|i| b.block_edge_count(&g, i)).sum();
        prop_assert_eq!(total, g.edge_count());
        for (i, &x) in b.blocks.iter().enumerate() {
            for &y in &b.blocks[i + 1..] {
                prop_assert!((x & y).count_ones() <= 1);
            }
        }
    }
}
