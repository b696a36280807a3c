use num_rational::Ratio;
use wiener_core::Graph;
use wiener_enumerate::ClassFilter;
use wiener_families::soltes_b;
use wiener_soltes::*;

/// W by Floyd–Warshall on an explicit vertex subset.
fn w_subset(g: &Graph, keep: &[usize]) -> Option<i64> {
    let n = keep.len();
    let inf = i64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                d[i][j] = 0;
            } else if g.has_edge(keep[i], keep[j]) {
                d[i][j] = 1;
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
    let mut w = 0;
    for i in 0..n {
        for j in i + 1..n {
            if d[i][j] >= inf {
                return None;
            }
            w += d[i][j];
        }
    }
    Some(w)
}

fn oracle_deltas(g: &Graph) -> Vec<Option<i64>> {
    let all: Vec<usize> = (0..g.order()).collect();
    let w = w_subset(g, &all).unwrap();
    (0..g.order())
        .map(|v| {
            let keep: Vec<usize> = all.iter().copied().filter(|&x| x != v).collect();
            w_subset(g, &keep).map(|r| w - r)
        })
        .collect()
}

#[test]
fn cycles() {
    for n in 3..=20 {
        let p = soltes_profile(&Graph::cycle(n)).unwrap();
        assert_eq!(p.deltas, oracle_deltas(&Graph::cycle(n)));
        assert_eq!(p.is_soltes_graph(), n == 11, "C_{n}");
    }
    assert_eq!(z_level_vertices(&Graph::cycle(11), 1).unwrap(), 0);
    assert_eq!(z_level_vertices(&Graph::cycle(11), 0).unwrap(), (1 << 11) - 1);
    assert_eq!(delta_for_set(&Graph::cycle(11), 1 << 4).unwrap(), 0);
}

#[test]
fn small_values() {
    let k5 = Graph::complete(5);
    assert_eq!(delta_for_set(&k5, 0).unwrap(), 0);
    assert_eq!(delta_for_set(&k5, 1).unwrap(), 4);
    for n in 3..=9 {
        let p = soltes_profile(&Graph::complete(n)).unwrap();
        assert_eq!(p.level(n as i64 - 1).count_ones() as usize, n);
    }
    let path = Graph::path(5);
    assert!(matches!(delta_for_set(&path, 1 << 2), Err(wiener_core::Error::UndefinedRemoval(v)) if v == vec![2]));
    let p = soltes_profile(&path).unwrap();
    assert_eq!(p.undefined(), 0b01110);
    assert!(p.deltas[0].unwrap() > 0 && p.deltas[4].unwrap() > 0);
    assert!(soltes_profile(&Graph::path(2)).is_err());
    assert!(soltes_profile(&Graph::new(4)).is_err());
}

#[test]
fn b_family_proportions() {
    for k in 2..=6 {
        let g = soltes_b(k).unwrap();
        let p = soltes_profile(&g).unwrap();
        assert_eq!(p.deltas, oracle_deltas(&g));
        assert_eq!(p.proportion(), Ratio::new(2 * k as u64, 5 * k as u64 + 6), "B({k})");
        assert!(p.is_alpha_soltes(Ratio::new(1, 4)) == (p.proportion() >= Ratio::new(1, 4)));
    }
    assert_eq!(soltes_profile(&soltes_b(2).unwrap()).unwrap().soltes_count(), 4);
}

#[test]
fn cubic_graphs() {
    for n in [4, 6, 8, 10, 12] {
        wiener_enumerate::regular_graphs(n, 3, |g| {
            assert_eq!(soltes_profile(g).unwrap().soltes_count(), 0);
        })
        .unwrap();
    }
    let mut with = vec![];
    wiener_enumerate::regular_graphs(14, 3, |g| {
        let p = soltes_profile(g).unwrap();
        let c = p.soltes_count();
        if c > 0 {
            assert_eq!(p.deltas, oracle_deltas(g));
            with.push(c);
        }
    })
    .unwrap();
    // Three graphs carry two Šoltés vertices; four more carry one.
    with.sort_unstable();
    assert_eq!(with, vec![1, 1, 1, 1, 2, 2, 2]);
}

#[test]
fn sufficient_conditions_over_small_graphs() {
    for n in 3..=8 {
        wiener_enumerate::connected_graphs(n, &ClassFilter::connected(), |g| {
            let p = soltes_profile(g).unwrap();
            for v in 0..n {
                if g.degree(v) == 1 {
                    assert!(p.deltas[v].unwrap() > 0);
                }
                if g.degree(v) > 1 && p.deltas[v].is_some() {
                    assert!(delta_for_set(g, 1 << v).is_ok());
                }
            }
            assert!(!min_degree_guard_check(g).unwrap().violated());
            assert!(!short_cycle_guard_check(g).unwrap().violated());
        })
        .unwrap();
    }
    let k6 = min_degree_guard_check(&Graph::complete(6)).unwrap();
    assert!(k6.applies && k6.holds);
    assert!(!min_degree_guard_check(&Graph::cycle(5)).unwrap().applies);
}
