//! Δ_v(G) = W(G) − W(G − v) and the vertices where it vanishes.

use num_rational::Ratio;
use wiener_core::{bits, circumference, delete_vertices, full_mask, wiener, Error, Graph, Result};

/// Per-vertex Δ_v ledger. `None` marks a cut vertex, where W(G − v) is
/// undefined; such vertices are never Šoltés vertices but still count in
/// the denominator of the proportion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoltesProfile {
    pub wiener: u64,
    pub deltas: Vec<Option<i64>>,
}

impl SoltesProfile {
    pub fn order(&self) -> usize {
        self.deltas.len()
    }

    /// Vertices with Δ_v = z.
    pub fn level(&self, z: i64) -> u64 {
        self.deltas.iter().enumerate().filter(|(_, d)| **d == Some(z)).fold(0, |m, (v, _)| m | 1 << v)
    }

    pub fn soltes_vertices(&self) -> u64 {
        self.level(0)
    }

    pub fn soltes_count(&self) -> usize {
        self.soltes_vertices().count_ones() as usize
    }

    pub fn undefined(&self) -> u64 {
        self.deltas.iter().enumerate().filter(|(_, d)| d.is_none()).fold(0, |m, (v, _)| m | 1 << v)
    }

    pub fn is_soltes_graph(&self) -> bool {
        self.deltas.iter().all(|d| *d == Some(0))
    }

    /// |{v : Δ_v = 0}| / |V(G)|.
    pub fn proportion(&self) -> Ratio<u64> {
        Ratio::new(self.soltes_count() as u64, self.order() as u64)
    }

    /// Proportion at least `alpha`.
    pub fn is_alpha_soltes(&self, alpha: Ratio<u64>) -> bool {
        self.proportion() >= alpha
    }
}

pub fn soltes_profile(g: &Graph) -> Result<SoltesProfile> {
    let n = g.order();
    if n < 3 {
        return Err(Error::SizeGuard { op: "soltes profile needs n >= 3;", limit: 3, n });
    }
    let w = wiener(g)?;
    let deltas = (0..n)
        .map(|v| {
            let rest = delete_vertices(g, 1 << v).ok()?;
            let wr = wiener(&rest).ok()?;
            Some(w as i64 - wr as i64)
        })
        .collect();
    Ok(SoltesProfile { wiener: w, deltas })
}

/// W(G) − W(G − S).
pub fn delta_for_set(g: &Graph, set: u64) -> Result<i64> {
    let w = wiener(g)?;
    if set == 0 {
        return Ok(0);
    }
    let keep = full_mask(g.order()) & !set;
    let rest = delete_vertices(g, set)?;
    if keep == 0 || !rest.is_connected() {
        return Err(Error::UndefinedRemoval(bits(set).collect()));
    }
    Ok(w as i64 - wiener(&rest)? as i64)
}

/// {v : Δ_v(G) defined and equal to z}.
pub fn z_level_vertices(g: &Graph, z: i64) -> Result<u64> {
    Ok(soltes_profile(g)?.level(z))
}

/// Whether a sufficient condition for "no Šoltés vertex" applies to a
/// graph, and whether the conclusion held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GuardCheck {
    pub applies: bool,
    pub holds: bool,
}

impl GuardCheck {
    pub fn violated(&self) -> bool {
        self.applies && !self.holds
    }
}

/// δ(G) ≥ n/2 forces W(G) ≠ W(G − v) for every v.
pub fn min_degree_guard_check(g: &Graph) -> Result<GuardCheck> {
    let p = soltes_profile(g)?;
    let applies = 2 * g.min_degree() >= g.order();
    Ok(GuardCheck { applies, holds: p.soltes_count() == 0 })
}

/// Longest cycle of length at most 4 (or no cycle) forces no Šoltés vertex.
pub fn short_cycle_guard_check(g: &Graph) -> Result<GuardCheck> {
    let p = soltes_profile(g)?;
    let applies = circumference(g)?.map_or(true, |c| c <= 4);
    Ok(GuardCheck { applies, holds: p.soltes_count() == 0 })
}
