use std::collections::BTreeMap;

use wiener_core::{distance_matrix, invalid, Error, Graph, Result};

use crate::split::edge_split_counts;

/// Neumaier-compensated sum.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut c = 0.0f64;
    for x in values {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            c += (sum - t) + x;
        } else {
            c += (x - t) + sum;
        }
        sum = t;
    }
    sum + c
}

/// Multisets behind W^α and Sz^α: pair distances and edge products, each
/// as value → multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndexProfile {
    pub distances: BTreeMap<u64, u64>,
    pub products: BTreeMap<u64, u64>,
}

fn power_sum(multiset: &BTreeMap<u64, u64>, alpha: f64) -> f64 {
    compensated_sum(multiset.iter().map(|(&v, &c)| c as f64 * (v as f64).powf(alpha)))
}

impl IndexProfile {
    pub fn of_graph(g: &Graph) -> Result<Self> {
        let d = distance_matrix(g);
        if !d.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut p = IndexProfile::default();
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                *p.distances.entry(d.get(u, v).unwrap() as u64).or_default() += 1;
            }
        }
        for x in edge_split_counts(g)?.products() {
            *p.products.entry(x).or_default() += 1;
        }
        Ok(p)
    }

    pub fn variable_wiener(&self, alpha: f64) -> f64 {
        power_sum(&self.distances, alpha)
    }

    pub fn variable_szeged(&self, alpha: f64) -> f64 {
        power_sum(&self.products, alpha)
    }

    /// h(α) = Sz^α − W^α, summed as one compensated sequence.
    pub fn h(&self, alpha: f64) -> f64 {
        let sz = self.products.iter().map(|(&v, &c)| c as f64 * (v as f64).powf(alpha));
        let w = self.distances.iter().map(|(&v, &c)| -(c as f64) * (v as f64).powf(alpha));
        compensated_sum(sz.chain(w))
    }

    /// Scale used to decide when h is numerically zero.
    pub fn magnitude(&self, alpha: f64) -> f64 {
        self.variable_szeged(alpha) + self.variable_wiener(alpha)
    }

    /// h ≡ 0: every pair at distance 1 and every product 1 (complete graphs).
    pub fn is_degenerate(&self) -> bool {
        self.distances.keys().all(|&d| d == 1)
            && self.products.keys().all(|&p| p == 1)
            && self.distances.values().sum::<u64>() == self.products.values().sum::<u64>()
    }

    pub fn pair_count(&self) -> u64 {
        self.distances.values().sum()
    }

    pub fn edge_count(&self) -> u64 {
        self.products.values().sum()
    }
}

pub fn variable_wiener(g: &Graph, alpha: f64) -> Result<f64> {
    Ok(IndexProfile::of_graph(g)?.variable_wiener(alpha))
}

pub fn variable_szeged(g: &Graph, alpha: f64) -> Result<f64> {
    Ok(IndexProfile::of_graph(g)?.variable_szeged(alpha))
}

/// Profile of G_{k,ℓ} (K_k minus a Hamiltonian cycle, all joined to the end
/// of a path with ℓ further vertices) from its structure, for any size.
pub fn cambie_haslegrave_profile(k: u64, l: u64) -> Result<IndexProfile> {
    if k < 5 || l == 0 {
        return Err(invalid(format!("G_(k,ℓ) needs k >= 5 and ℓ >= 1, got ({k},{l})")));
    }
    let mut p = IndexProfile::default();
    let add = |m: &mut BTreeMap<u64, u64>, v: u64, c: u64| {
        if c > 0 {
            *m.entry(v).or_default() += c;
        }
    };
    // Clique pairs: non-cycle pairs are adjacent, cycle neighbours meet at
    // distance 2 through a common neighbour.
    add(&mut p.distances, 1, k * (k - 1) / 2 - k);
    add(&mut p.distances, 2, k);
    // Clique vertex to the path vertex j steps from the apex (apex is j = 0).
    for j in 0..=l {
        add(&mut p.distances, j + 1, k);
    }
    // Pairs on the apex path.
    for d in 1..=l {
        add(&mut p.distances, d, l + 1 - d);
    }
    // Clique edge uv: u, plus v's cycle neighbours other than u's, are
    // strictly closer to u. Pairs two apart on the cycle share a neighbour.
    add(&mut p.products, 4, k);
    add(&mut p.products, 9, k * (k - 1) / 2 - 2 * k);
    // Clique vertex to apex: only the vertex itself is closer to it; the
    // apex side holds the path and the two cycle neighbours.
    add(&mut p.products, l + 3, k);
    for j in 0..l {
        add(&mut p.products, (k + 1 + j) * (l - j), 1);
    }
    Ok(p)
}
