use wiener_enumerate::*;

fn count(n: usize, f: &ClassFilter) -> u64 {
    connected_graphs(n, f, |_| {}).unwrap()
}

#[test]
fn connected_counts() {
    // OEIS A001349
    let known = [1, 1, 2, 6, 21, 112, 853, 11117, 261080];
    for (i, &c) in known.iter().enumerate() {
        assert_eq!(count(i + 1, &ClassFilter::connected()), c, "n = {}", i + 1);
    }
}

#[test]
fn tree_counts() {
    // OEIS A000055
    let known = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320];
    for (i, &c) in known.iter().enumerate() {
        assert_eq!(trees(i + 1, |g| assert!(g.is_tree())).unwrap(), c, "n = {}", i + 1);
    }
}

#[test]
fn cubic_counts() {
    // OEIS A002851
    for (n, c) in [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85), (14, 509)] {
        assert_eq!(regular_graphs(n, 3, |g| assert!(g.is_regular())).unwrap(), c, "n = {n}");
    }
}

#[test]
fn quartic_counts() {
    // OEIS A006820
    for (n, c) in [(5, 1), (6, 1), (7, 2), (8, 6), (9, 16), (10, 59), (11, 265)] {
        assert_eq!(regular_graphs(n, 4, |_| {}).unwrap(), c, "n = {n}");
    }
}
