mod common;

use common::{all_graphs, all_graphs_from_matrices, isomorphic, IsoSet};
use wiener_core::{blocks, circumference, eccentricity_profile, is_biconnected, Graph};
use wiener_enumerate::*;

fn check(n: usize, filter: &ClassFilter, oracle: &[Graph], pred: impl Fn(&Graph) -> bool) {
    let expected = oracle.iter().filter(|g| g.is_connected() && pred(g)).count();
    let mut seen = IsoSet::default();
    let got = connected_graphs(n, filter, |g| {
        assert!(g.is_connected() && pred(g), "{g:?}");
        assert!(seen.insert(g.clone()), "duplicate {g:?}");
    })
    .unwrap();
    assert_eq!(got as usize, expected, "n = {n}, {filter:?}");
}

#[test]
fn matrix_oracle_agrees_with_extension_oracle() {
    for n in 1..=6 {
        let a = all_graphs_from_matrices(n);
        let b = all_graphs(n);
        assert_eq!(a.len(), b.len());
        assert!(a.iter().all(|g| b.iter().any(|h| isomorphic(g, h))));
    }
    assert_eq!(all_graphs_from_matrices(4).iter().filter(|g| g.is_connected()).count(), 6);
}

#[test]
fn generator_matches_oracle_up_to_eight() {
    for n in 1..=8 {
        let oracle = all_graphs(n);
        check(n, &ClassFilter::connected(), &oracle, |_| true);
        check(n, &ClassFilter::chemical(), &oracle, |g| g.max_degree() <= 4);
        check(n, &ClassFilter::connected().with_max_degree(3), &oracle, |g| g.max_degree() <= 3);
        check(n, &ClassFilter::trees(), &oracle, |g| g.is_tree());
        check(n, &ClassFilter::connected().biconnected(), &oracle, is_biconnected);
        if n % 2 == 0 && n >= 4 {
            check(n, &ClassFilter::connected().with_regular(3), &oracle, |g| g.degrees().iter().all(|&d| d == 3));
        }
        if n >= 5 {
            check(n, &ClassFilter::connected().with_regular(4), &oracle, |g| g.degrees().iter().all(|&d| d == 4));
        }
        for p in 1..n {
            check(n, &ClassFilter::connected().with_blocks(p), &oracle, |g| blocks(g).len() == p);
        }
        for d in 1..n as u32 {
            check(n, &ClassFilter::connected().with_diameter(d), &oracle, |g| {
                eccentricity_profile(g).unwrap().diameter == d
            });
            check(n, &ClassFilter::trees().with_diameter(d), &oracle, |g| {
                g.is_tree() && eccentricity_profile(g).unwrap().diameter == d
            });
        }
        check(n, &ClassFilter::connected().with_max_circumference(4), &oracle, |g| {
            circumference(g).unwrap().unwrap_or(0) <= 4
        });
    }
}

#[test]
fn blocks_class_matches_filter() {
    for n in 2..=7 {
        for p in 1..n {
            let a = blocks_class(n, p, |_| {}).unwrap();
            let mut count = 0;
            connected_graphs(n, &ClassFilter::connected(), |g| count += (blocks(g).len() == p) as u64).unwrap();
            assert_eq!(a, count);
        }
    }
}

#[test]
fn sharding_partitions_the_output() {
    let filter = ClassFilter::chemical();
    let mut whole = Vec::new();
    connected_graphs(8, &filter, |g| whole.push(wiener_core::canonical_form(g).unwrap())).unwrap();
    let mut parts = Vec::new();
    for i in 0..8 {
        connected_graphs_sharded(8, &filter, Shard::new(i, 8).unwrap(), |g| {
            parts.push(wiener_core::canonical_form(g).unwrap())
        })
        .unwrap();
    }
    whole.sort();
    parts.sort();
    assert_eq!(whole.len(), 1929);
    assert_eq!(whole, parts);
}

#[test]
fn deterministic_order() {
    let run = || {
        let mut v = Vec::new();
        connected_graphs(7, &ClassFilter::connected(), |g| v.push(g.clone())).unwrap();
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn guards_and_validation() {
    assert!(connected_graphs(11, &ClassFilter::connected(), |_| {}).is_err());
    assert!(trees(17, |_| {}).is_err());
    assert!(regular_graphs(7, 3, |_| {}).is_err());
    assert!(regular_graphs(12, 4, |_| {}).is_err());
    assert!(blocks_class(10, 2, |_| {}).is_err());
    assert!(connected_graphs(5, &ClassFilter::connected().with_regular(3).with_max_degree(2), |_| {}).is_err());
    assert!(Shard::new(3, 3).is_err());
    assert_eq!(connected_graphs(1, &ClassFilter::connected(), |_| {}).unwrap(), 1);
    assert_eq!(trees(2, |_| {}).unwrap(), 1);
}

#[test]
fn extremal_records() {
    let stream = collect(7, &ClassFilter::connected()).unwrap();
    let rec = extremal_search(stream, "wiener", Direction::Max, |g| wiener_core::wiener(g)).unwrap();
    assert_eq!(rec.best, Some(56));
    assert_eq!(rec.count(), 1);
    assert!(rec.attains(&Graph::path(7)).unwrap());
    assert!(extremal_search(Vec::new(), "wiener", Direction::Min, |g| wiener_core::wiener(g)).is_err());
    // merging shard records gives the unsharded record
    let mut parts: Vec<SearchRecord<u64>> = Vec::new();
    for i in 0..3 {
        let mut r = SearchRecord::new("wiener", Direction::Min);
        connected_graphs_sharded(7, &ClassFilter::chemical(), Shard::new(i, 3).unwrap(), |g| {
            r.offer(g, wiener_core::wiener(g).unwrap()).unwrap()
        })
        .unwrap();
        parts.push(r);
    }
    let merged = parts.into_iter().reduce(SearchRecord::merge).unwrap();
    let mut whole = SearchRecord::new("wiener", Direction::Min);
    connected_graphs(7, &ClassFilter::chemical(), |g| whole.offer(g, wiener_core::wiener(g).unwrap()).unwrap()).unwrap();
    assert_eq!(merged.best, whole.best);
    assert_eq!(merged.attaining, whole.attaining);
    assert_eq!(merged.visited, whole.visited);
}
