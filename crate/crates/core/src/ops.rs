//! Graph constructions: line graphs, products, vertex deletion.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Line graph; vertex `i` is the `i`-th edge in lexicographic order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edge_list();
    if edges.is_empty() {
        return Err(Error::Empty);
    }
    if edges.len() > MAX_ORDER {
        return Err(Error::Capacity {
            what: "line graph",
            needed: edges.len(),
            limit: MAX_ORDER,
        });
    }
    let mut incident = vec![0u64; g.order()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u] |= 1 << i;
        incident[v] |= 1 << i;
    }
    let rows = edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| (incident[u] | incident[v]) & !(1 << i))
        .collect();
    Graph::from_rows(rows)
}

/// `L^k(G)`; `k = 0` returns a copy.
pub fn iterated_line_graph(g: &Graph, k: usize) -> Result<Graph> {
    let mut cur = g.clone();
    for _ in 0..k {
        cur = line_graph(&cur)?;
    }
    Ok(cur)
}

/// Box product; vertex `(a, b)` is numbered `a * |V(H)| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    if n > MAX_ORDER {
        return Err(Error::Capacity {
            what: "cartesian product",
            needed: n,
            limit: MAX_ORDER,
        });
    }
    let mut out = Graph::new(n);
    for a in 0..ng {
        for (b, c) in h.edges() {
            out.add_edge(a * nh + b, a * nh + c);
        }
    }
    for (a, c) in g.edges() {
        for b in 0..nh {
            out.add_edge(a * nh + b, c * nh + b);
        }
    }
    Ok(out)
}

/// Induced subgraph on `V \ S`, keeping the relative vertex order.
pub fn delete_vertices(g: &Graph, remove: u64) -> Result<Graph> {
    let all = g.vertex_mask();
    if remove & !all != 0 {
        let v = (remove & !all).trailing_zeros() as usize;
        return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
    }
    if remove == all && g.order() > 0 {
        return Err(crate::invalid("cannot delete every vertex"));
    }
    Ok(g.induced(all & !remove))
}

pub fn delete_vertex(g: &Graph, v: usize) -> Result<Graph> {
    delete_vertices(g, 1 << v)
}

/// `(n_1, ..., n_t)`-blowup: vertex `v_i` becomes an independent set of size
/// `sizes[i]`, and classes of adjacent vertices are completely joined.
pub fn blowup(g: &Graph, sizes: &[usize]) -> Result<Graph> {
    if sizes.len() != g.order() {
        return Err(crate::invalid(format!(
            "blowup needs {} class sizes, got {}",
            g.order(),
            sizes.len()
        )));
    }
    let total: usize = sizes.iter().sum();
    if total > MAX_ORDER {
        return Err(Error::Capacity { what: "blowup", needed: total, limit: MAX_ORDER });
    }
    let mut start = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        start.push(acc);
        acc += s;
    }
    let mut out = Graph::new(total);
    for (i, j) in g.edges() {
        for a in 0..sizes[i] {
            for b in 0..sizes[j] {
                out.add_edge(start[i] + a, start[j] + b);
            }
        }
    }
    Ok(out)
}

/// Number of edges of `L(G)` without building it.
pub fn line_graph_edge_count(g: &Graph) -> usize {
    (0..g.order())
        .map(|v| {
            let d = g.degree(v);
            d * d.saturating_sub(1) / 2
        })
        .sum()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn line_graph_examples() {
        assert_eq!(line_graph(&Graph::star(4)).unwrap(), Graph::complete(3));
        assert_eq!(line_graph(&Graph::path(5)).unwrap(), Graph::path(4));
        let c7 = Graph::cycle(7);
        assert!(are_isomorphic(&line_graph(&c7).unwrap(), &c7).unwrap());
        assert_eq!(line_graph(&Graph::new(3)), Err(Error::Empty));
        assert!(matches!(line_graph(&Graph::complete(13)), Err(Error::Capacity { .. })));
    }

    #[test]
    fn iterated_line_graph_examples() {
        assert_eq!(iterated_line_graph(&Graph::path(5), 2).unwrap(), Graph::path(3));
        let claw = Graph::star(4);
        let l3 = iterated_line_graph(&claw, 3).unwrap();
        assert!(are_isomorphic(&l3, &Graph::cycle(3)).unwrap());
        let g = Graph::cycle(5);
        assert_eq!(iterated_line_graph(&g, 0).unwrap(), g);
        assert_eq!(iterated_line_graph(&Graph::path(3), 3), Err(Error::Empty));
    }

    #[test]
    fn product_examples() {
        let p2 = Graph::path(2);
        let sq = cartesian_product(&p2, &p2).unwrap();
        assert!(are_isomorphic(&sq, &Graph::cycle(4)).unwrap());
        let k4p2 = cartesian_product(&Graph::complete(4), &p2).unwrap();
        assert_eq!((k4p2.order(), k4p2.edge_count()), (8, 16));
        let ladder = cartesian_product(&Graph::path(6), &p2).unwrap();
        assert_eq!((ladder.order(), ladder.edge_count()), (12, 16));
        assert!(cartesian_product(&Graph::complete(9), &Graph::complete(8)).is_err());
    }

    #[test]
    fn deletion_examples() {
        assert_eq!(delete_vertex(&Graph::cycle(11), 4).unwrap().order(), 10);
        assert!(are_isomorphic(&delete_vertex(&Graph::cycle(11), 4).unwrap(), &Graph::path(10)).unwrap());
        assert_eq!(delete_vertex(&Graph::complete(5), 0).unwrap(), Graph::complete(4));
        let s = delete_vertex(&Graph::star(4), 0).unwrap();
        assert_eq!((s.order(), s.edge_count()), (3, 0));
        assert!(!s.is_connected());
        assert!(delete_vertices(&Graph::path(2), 0b11).is_err());
    }

    #[test]
    fn blowup_examples() {
        let k222 = blowup(&Graph::cycle(3), &[2, 2, 2]).unwrap();
        assert_eq!(k222.edge_count(), 12);
        assert!(k222.is_regular() && k222.degree(0) == 4);
        let c5 = Graph::cycle(5);
        assert_eq!(blowup(&c5, &[1; 5]).unwrap(), c5);
        assert!(blowup(&c5, &[1; 4]).is_err());
    }

    #[test]
    fn line_graph_edge_count_matches() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(line_graph(&g).unwrap().edge_count(), line_graph_edge_count(&g));
    }
}
