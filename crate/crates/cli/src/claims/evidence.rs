use wiener_core::{wiener, Graph, Shard};
use wiener_enumerate::{collect, connected_graphs, ClassFilter, Direction, SearchRecord};
use wiener_orient::{enumerate_orientations, product_bound, TauConvention, TauReading};

use super::{Outcome, Settings};
use crate::error::CliResult;

pub fn four_regular(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("every min-W chemical graph on 9 and 10 vertices is 4-regular");
    let c = &mut out.check;
    for n in [9, 10] {
        let mut rec = SearchRecord::new("W", Direction::Min);
        let mut err = None;
        connected_graphs(n, &ClassFilter::chemical(), |g| {
            if let Err(e) = wiener(g).and_then(|w| rec.offer(g, w)) {
                err.get_or_insert(e);
            }
        })?;
        if let Some(e) = err {
            return Err(e.into());
        }
        let regular = rec.attaining.iter().filter(|f| f.to_graph().degrees().iter().all(|&d| d == 4)).count();
        c.note(format!("n={n}: {} chemical graphs, min W {:?} by {} graphs, {regular} of them 4-regular", rec.visited, rec.best, rec.count()));
        if let Some(f) = rec.attaining.iter().find(|f| !f.to_graph().degrees().iter().all(|&d| d == 4)) {
            c.expect_on(false, &f.to_graph(), || format!("n={n}: a minimiser is not 4-regular"));
        }
    }
    Ok(out)
}

pub fn acyclic(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("W_min over all orientations equals W_min over acyclic orientations, connected n <= 6");
    let c = &mut out.check;
    let mut graphs = 0;
    for n in 2..=6 {
        for g in collect(n, &ClassFilter::connected())? {
            let s = enumerate_orientations(&g, Shard::ALL)?;
            c.expect_on(s.acyclic.min == s.all.min, &g, || format!("n={n}: W_min {} but acyclic min {}", s.all.min, s.acyclic.min));
            graphs += 1;
        }
    }
    c.note(format!("{graphs} graphs"));
    Ok(out)
}

/// Ordered pairs of connected graphs with |E(G□H)| <= 14.
fn product_pairs() -> CliResult<Vec<(Graph, Graph)>> {
    let mut small = vec![];
    for n in 2..=5 {
        small.extend(collect(n, &ClassFilter::connected())?);
    }
    let edges = |g: &Graph, h: &Graph| g.edge_count() * h.order() + h.edge_count() * g.order();
    let mut out = vec![];
    for g in &small {
        for h in &small {
            if edges(g, h) <= 14 {
                out.push((g.clone(), h.clone()));
            }
        }
    }
    Ok(out)
}

pub fn product(s: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new(
        "W_max(G□H) >= W_max(G)τ(H) + W_max(H)|V(G)|² for all pairs with |E(G□H)| <= 14; status follows the selected τ convention with τ taken from the least-τ W_max orientation of H",
    );
    let c = &mut out.check;
    let pairs = product_pairs()?;
    let mut violations = [[0usize; 2]; 3];
    for (g, h) in &pairs {
        let b = product_bound(g, h)?;
        for (ri, r) in TauReading::ALL.into_iter().enumerate() {
            for (ci, conv) in [TauConvention::SelfCounts, TauConvention::NoSelf].into_iter().enumerate() {
                if !b.holds(r, conv) {
                    violations[ri][ci] += 1;
                }
            }
        }
        c.expect_on(b.holds(TauReading::ExtremalMin, s.tau), g, || {
            format!("pair G {:?} / H {:?}: {} < {}", g.edge_list(), h.edge_list(), b.wmax_product, b.rhs(TauReading::ExtremalMin, s.tau))
        });
    }
    c.note(format!("{} pairs", pairs.len()));
    for (ri, r) in TauReading::ALL.into_iter().enumerate() {
        c.note(format!("{r:?}: violations self {}, noself {}", violations[ri][0], violations[ri][1]));
    }
    Ok(out)
}
