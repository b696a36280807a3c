//! Hop distances and the Wiener-type invariants derived from them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// All-pairs hop distances. `None` marks pairs in different components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u8>,
}

pub const UNREACHABLE: u8 = u8::MAX;

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.d[u * self.n + v] {
            UNREACHABLE => None,
            x => Some(x as u32),
        }
    }

    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u8 {
        self.d[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&UNREACHABLE)
    }

    pub fn row(&self, u: usize) -> &[u8] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

/// Breadth-first layers from `src`, written into `out` (length n).
#[inline]
pub fn bfs_layers(g: &Graph, src: usize, out: &mut [u8]) {
    out.fill(UNREACHABLE);
    let mut seen = 1u64 << src;
    let mut frontier = seen;
    let mut depth = 0u8;
    out[src] = 0;
    while frontier != 0 {
        depth += 1;
        let mut next = 0;
        for u in bits(frontier) {
            next |= g.neighbors(u);
        }
        next &= !seen;
        for v in bits(next) {
            out[v] = depth;
        }
        seen |= next;
        frontier = next;
    }
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = vec![UNREACHABLE; n * n];
    for u in 0..n {
        bfs_layers(g, u, &mut d[u * n..(u + 1) * n]);
    }
    DistanceMatrix { n, d }
}

/// Transmission of a single vertex, or `None` if some vertex is unreachable.
#[inline]
pub fn transmission_of(g: &Graph, src: usize) -> Option<u64> {
    let all = g.vertex_mask();
    let mut seen = 1u64 << src;
    let mut frontier = seen;
    let mut depth = 0u64;
    let mut total = 0u64;
    while frontier != 0 {
        depth += 1;
        let mut next = 0;
        for u in bits(frontier) {
            next |= g.neighbors(u);
        }
        next &= !seen;
        total += depth * next.count_ones() as u64;
        seen |= next;
        frontier = next;
    }
    (seen == all).then_some(total)
}

pub fn transmissions(g: &Graph) -> Result<Vec<u64>> {
    (0..g.order())
        .map(|u| transmission_of(g, u).ok_or(Error::Disconnected))
        .collect()
}

/// Sum of distances over unordered pairs.
pub fn wiener(g: &Graph) -> Result<u64> {
    let mut total = 0;
    for u in 0..g.order() {
        total += transmission_of(g, u).ok_or(Error::Disconnected)?;
    }
    Ok(total / 2)
}

/// Number of distinct transmissions.
pub fn wiener_dimension(g: &Graph) -> Result<usize> {
    Ok(transmissions(g)?.into_iter().collect::<BTreeSet<_>>().len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eccentricities {
    pub per_vertex: Vec<u32>,
    pub diameter: u32,
    pub radius: u32,
}

pub fn eccentricity_profile(g: &Graph) -> Result<Eccentricities> {
    let n = g.order();
    if n == 0 {
        return Ok(Eccentricities { per_vertex: vec![], diameter: 0, radius: 0 });
    }
    let mut buf = vec![0u8; n];
    let mut per_vertex = Vec::with_capacity(n);
    for u in 0..n {
        bfs_layers(g, u, &mut buf);
        if buf.contains(&UNREACHABLE) {
            return Err(Error::Disconnected);
        }
        per_vertex.push(*buf.iter().max().unwrap() as u32);
    }
    let diameter = *per_vertex.iter().max().unwrap();
    let radius = *per_vertex.iter().min().unwrap();
    Ok(Eccentricities { per_vertex, diameter, radius })
}

pub fn diameter(g: &Graph) -> Result<u32> {
    eccentricity_profile(g).map(|e| e.diameter)
}

pub fn radius(g: &Graph) -> Result<u32> {
    eccentricity_profile(g).map(|e| e.radius)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance_matrix(&Graph::path(4)).get(0, 3), Some(3));
        let k5 = distance_matrix(&Graph::complete(5));
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(k5.get(u, v), Some(u32::from(u != v)));
            }
        }
        assert_eq!(distance_matrix(&Graph::cycle(5)).get(0, 2), Some(2));
        let split = distance_matrix(&Graph::new(2));
        assert_eq!(split.get(0, 1), None);
        assert!(!split.is_connected());
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(wiener(&Graph::path(4)).unwrap(), 10);
        assert_eq!(wiener(&Graph::star(5)).unwrap(), 16);
        assert_eq!(wiener(&Graph::complete(5)).unwrap(), 10);
        assert_eq!(wiener(&Graph::cycle(5)).unwrap(), 15);
        assert_eq!(wiener(&Graph::new(2)), Err(Error::Disconnected));
        assert_eq!(
            Error::Disconnected.to_string(),
            "wiener undefined on disconnected graph"
        );
    }

    #[test]
    fn transmission_examples() {
        assert_eq!(transmissions(&Graph::cycle(6)).unwrap(), vec![9; 6]);
        assert_eq!(transmissions(&Graph::star(4)).unwrap(), vec![3, 5, 5, 5]);
        assert_eq!(transmissions(&Graph::complete(2)).unwrap(), vec![1, 1]);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(wiener_dimension(&Graph::cycle(6)).unwrap(), 1);
        assert_eq!(wiener_dimension(&Graph::star(4)).unwrap(), 2);
        assert_eq!(transmissions(&Graph::path(5)).unwrap(), vec![10, 7, 6, 7, 10]);
        assert_eq!(wiener_dimension(&Graph::path(5)).unwrap(), 3);
    }

    #[test]
    fn eccentricity_examples() {
        let e = eccentricity_profile(&Graph::path(5)).unwrap();
        assert_eq!((e.diameter, e.radius), (4, 2));
        let e = eccentricity_profile(&Graph::complete(4)).unwrap();
        assert_eq!((e.diameter, e.radius), (1, 1));
        let e = eccentricity_profile(&petersen()).unwrap();
        assert_eq!((e.diameter, e.radius), (2, 2));
    }
}
