use std::collections::BTreeMap;

use num_rational::Ratio;
use wiener_core::{blocks, canonical_form, diameter, line_graph, wiener, CanonicalForm, Graph};
use wiener_enumerate::{blocks_class, connected_graphs, trees, ClassFilter, Direction, SearchRecord};
use wiener_families::{diameter4_trees, dumbbell, g_nrs, h_npq, h_plus, join_clique_tree};
use wiener_varindex::variable_wiener;

use super::{forms, Outcome, Settings};
use crate::error::CliResult;

pub fn diameter_four(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("max W over diameter-4 trees: T_n if k²+k > n−1, T_n' if k²+k < n−1, both if equal (k = ⌊√(n−1)⌋)");
    let c = &mut out.check;
    for n in 5..=12usize {
        let mut rec = SearchRecord::new("W", Direction::Max);
        let mut err = None;
        trees(n, |t| {
            if diameter(t).is_ok_and(|d| d == 4) {
                if let Err(e) = wiener(t).and_then(|w| rec.offer(t, w)) {
                    err.get_or_insert(e);
                }
            }
        })?;
        if let Some(e) = err {
            return Err(e.into());
        }
        let k = (1..).take_while(|k| k * k <= n - 1).last().unwrap_or(1);
        let (tn, tn2) = diameter4_trees(n)?;
        let want: Vec<Graph> = match (k * k + k).cmp(&(n - 1)) {
            std::cmp::Ordering::Greater => tn.into_iter().collect(),
            std::cmp::Ordering::Less => tn2.into_iter().collect(),
            std::cmp::Ordering::Equal => tn.into_iter().chain(tn2).collect(),
        };
        let case = if k * k + k == n - 1 { "equality" } else if k * k + k > n - 1 { "T_n" } else { "T_n'" };
        c.note(format!("n={n}: k={k}, {case}, max {:?} by {}", rec.best, rec.count()));
        c.expect(!want.is_empty() && rec.attaining == forms(&want)?, || format!("n={n}: extremal set differs from the {case} case"));
    }
    Ok(out)
}

pub fn gnrs(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("W(G_{n,r,s}) equal for all 1 <= s <= n−2r+1, n <= 16, r in {3,4}");
    let c = &mut out.check;
    let mut families = 0;
    for r in [3usize, 4] {
        for n in 2 * r..=16 {
            let ws = (1..=n + 1 - 2 * r).map(|s| g_nrs(n, r, s).and_then(|g| wiener(&g))).collect::<Result<Vec<_>, _>>()?;
            c.expect(ws.windows(2).all(|p| p[0] == p[1]), || format!("G_({n},{r},s): W values {ws:?}"));
            families += 1;
        }
    }
    c.note(format!("{families} (n, r) families"));
    Ok(out)
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

pub fn apex(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new(
        "W(K_ℓ+T) = (2n²−2nℓ−4n+ℓ²+3ℓ+2)/2 for ℓ <= 3, |T| <= 6; W(D_{n−4}(3,1)) = 1+Σ(n−i)i for n <= 12 (also W^α at α = 2, −1)",
    );
    let c = &mut out.check;
    let mut joins = 0;
    for l in 1..=3i64 {
        for t in 2..=6usize {
            let n = l + t as i64;
            let exact = (2 * n * n - 2 * n * l - 4 * n + l * l + 3 * l + 2) / 2;
            let mut err = None;
            trees(t, |tree| {
                let g = match join_clique_tree(l as usize, tree) {
                    Ok(g) => g,
                    Err(e) => {
                        err.get_or_insert(e);
                        return;
                    }
                };
                let w = wiener(&g).map(|w| w as i64).unwrap_or(-1);
                c.expect_on(w == exact, &g, || format!("K_{l}+T, n={n}: W = {w}, formula {exact}"));
                for a in [2.0f64, -1.0] {
                    let nf = n as f64;
                    let lf = l as f64;
                    let f = (nf * nf - 2.0 * nf * lf - 3.0 * nf + lf * lf + 3.0 * lf + 2.0) * 2f64.powf(a - 1.0)
                        + (2.0 * nf * lf + 2.0 * nf - lf * lf - 3.0 * lf - 2.0) / 2.0;
                    let v = variable_wiener(&g, a).unwrap_or(f64::NAN);
                    c.expect_on(close(v, f), &g, || format!("K_{l}+T, n={n}, α={a}: {v} vs {f}"));
                }
                joins += 1;
            })?;
            if let Some(e) = err {
                return Err(e.into());
            }
        }
    }
    c.note(format!("{joins} joins K_ℓ + T"));
    for n in 5..=12u64 {
        let g = dumbbell(n as usize - 4, 3, 1)?;
        let exact = 1 + (1..=n - 2).map(|i| (n - i) * i).sum::<u64>();
        let w = wiener(&g)?;
        c.expect_on(w == exact, &g, || format!("D_{}(3,1): W = {w}, formula {exact}", n - 4));
        for a in [2.0f64, -1.0] {
            let f = 1.0 + (1..=n - 2).map(|i| (n - i) as f64 * (i as f64).powf(a)).sum::<f64>();
            let v = variable_wiener(&g, a)?;
            c.expect_on(close(v, f), &g, || format!("D_{}(3,1), α={a}: {v} vs {f}", n - 4));
        }
    }
    c.note("dumbbells n = 5..12");
    Ok(out)
}

pub fn line_ratios(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("over connected n = 7: min W(L(G))/W(G) = 5/12 uniquely at S_7, max = 15 uniquely at K_7");
    let mut lo = SearchRecord::new("W(L)/W", Direction::Min);
    let mut hi = SearchRecord::new("W(L)/W", Direction::Max);
    let mut err = None;
    connected_graphs(7, &ClassFilter::connected(), |g| {
        let r = line_graph(g)
            .and_then(|l| wiener(&l))
            .and_then(|wl| wiener(g).map(|w| Ratio::new(wl, w)))
            .and_then(|q| lo.offer(g, q).and_then(|_| hi.offer(g, q)));
        if let Err(e) = r {
            err.get_or_insert(e);
        }
    })?;
    if let Some(e) = err {
        return Err(e.into());
    }
    let c = &mut out.check;
    let show = |r: &Option<Ratio<u64>>| r.map_or("none".to_owned(), |r| r.to_string());
    c.note(format!("{} graphs; min {} by {}, max {} by {}", lo.visited, show(&lo.best), lo.count(), show(&hi.best), hi.count()));
    c.expect(lo.best == Some(Ratio::new(5, 12)) && lo.attaining == forms(&[Graph::star(7)])?, || "minimum is not 5/12 at S_7 alone".into());
    c.expect(hi.best == Some(Ratio::from_integer(15)) && hi.attaining == forms(&[Graph::complete(7)])?, || {
        "maximum is not 15 at K_7 alone".into()
    });
    Ok(out)
}

/// C_a ∘_u P_{p−1} ∘_v C_b, where C_2 is an edge.
pub fn cycle_path_cycle(a: usize, b: usize, p: usize) -> Graph {
    let len = p - 1;
    let mut g = Graph::path(len);
    for (end, size) in [(0, a), (len - 1, b)] {
        let mut prev = end;
        for _ in 1..size {
            prev = g.push_vertex(1 << prev);
        }
        if size > 2 {
            g.add_edge(prev, end);
        }
    }
    g
}

pub fn block_shapes(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new(
        "n <= 8, 2 <= p < n: every max-W graph is C_a∘P_{p−1}∘C_b with a+b = n−p+3; n = 9, p = 1: C_9 first, H_{9,1,2} second; W(H+_{n,2,2}) = W(H_{n,2,2}) − 1 for 7 <= n <= 16",
    );
    let c = &mut out.check;
    for n in 3..=8usize {
        let mut recs: BTreeMap<usize, SearchRecord<u64>> = BTreeMap::new();
        let mut err = None;
        connected_graphs(n, &ClassFilter::connected(), |g| {
            let p = blocks(g).len();
            let rec = recs.entry(p).or_insert_with(|| SearchRecord::new("W", Direction::Max));
            if let Err(e) = wiener(g).and_then(|w| rec.offer(g, w)) {
                err.get_or_insert(e);
            }
        })?;
        if let Some(e) = err {
            return Err(e.into());
        }
        for p in 2..n {
            let Some(rec) = recs.get(&p) else {
                c.expect(false, || format!("n={n}: no graph with {p} blocks"));
                continue;
            };
            let shapes: Vec<Graph> = (2..=n - p + 1).map(|a| cycle_path_cycle(a, n - p + 3 - a, p)).collect();
            let shape_forms = forms(&shapes)?;
            let outside: Vec<&CanonicalForm> = rec.attaining.iter().filter(|f| !shape_forms.contains(f)).collect();
            if let Some(f) = outside.first() {
                c.expect_on(false, &f.to_graph(), || format!("n={n}, p={p}: maximiser outside the C_a∘P∘C_b shapes"));
            }
        }
    }
    c.note("n = 3..8: all maximisers have the cycle-path-cycle shape");

    let mut by_w: BTreeMap<u64, Vec<CanonicalForm>> = BTreeMap::new();
    let mut err = None;
    blocks_class(9, 1, |g| match wiener(g).and_then(|w| canonical_form(g).map(|f| (w, f))) {
        Ok((w, f)) => by_w.entry(w).or_default().push(f),
        Err(e) => {
            err.get_or_insert(e);
        }
    })?;
    if let Some(e) = err {
        return Err(e.into());
    }
    let mut ranked = by_w.iter().rev();
    let first = ranked.next();
    let second = ranked.next();
    let c9 = canonical_form(&Graph::cycle(9))?;
    let h = canonical_form(&h_npq(9, 1, 2)?)?;
    c.note(format!(
        "2-connected n=9: first W {:?} by {}, second W {:?} by {}",
        first.map(|f| f.0),
        first.map_or(0, |f| f.1.len()),
        second.map(|f| f.0),
        second.map_or(0, |f| f.1.len())
    ));
    c.expect(first.is_some_and(|(_, fs)| fs == &vec![c9.clone()]), || "C_9 is not the unique maximum".into());
    c.expect(second.is_some_and(|(_, fs)| fs.contains(&h)), || "H_{9,1,2} is not at the second level".into());

    for n in 7..=16 {
        let (wp, w) = (wiener(&h_plus(n)?)?, wiener(&h_npq(n, 2, 2)?)?);
        c.expect_on(wp + 1 == w, &h_plus(n)?, || format!("n={n}: W(H+) = {wp}, W(H) = {w}"));
    }
    c.note("H+ identity for n = 7..16");
    Ok(out)
}
