//! Fixed graphs drawn as examples.

use wiener_core::Graph;

use crate::standard::circulant;

/// Two triangles a-b-f and c-d-e joined by the edge b-c, with three
/// pendants on each of a, d, e, f (18 vertices, 19 edges).
/// Labels: a=0, b=1, c=2, d=3, e=4, f=5.
pub fn coloring_counterexample() -> Graph {
    let mut g = Graph::from_edges(6, &[(0, 1), (1, 5), (5, 0), (2, 3), (3, 4), (4, 2), (1, 2)]).unwrap();
    for hub in [5, 4, 0, 3] {
        for _ in 0..3 {
            g.push_vertex(1 << hub);
        }
    }
    g
}

/// The named minimum-Wiener chemical graphs: C_6(1,2), C_7(1,2), and for
/// n = 8 the circulant C_8(1,2), K_4 □ P_2 and K_{4,4} = C_8(1,3).
pub fn named_chemical_minima(n: usize) -> Vec<Graph> {
    match n {
        6 | 7 => vec![circulant(n, &[1, 2]).unwrap()],
        8 => vec![
            circulant(8, &[1, 2]).unwrap(),
            wiener_core::cartesian_product(&Graph::complete(4), &Graph::path(2)).unwrap(),
            circulant(8, &[1, 3]).unwrap(),
        ],
        _ => Vec::new(),
    }
}
