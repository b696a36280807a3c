use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wiener_core::{blocks, wiener, Graph, Shard};
use wiener_enumerate::{collect, connected_graphs, regular_graphs, trees, ClassFilter};
use wiener_families::soltes_b;
use wiener_signed::{exists_k_canceling, is_k_canceling, min_signed_wiener, signed_wiener, CancelVerdict, SignedGraph};
use wiener_soltes::{min_degree_guard_check, soltes_profile};
use wiener_varindex::{
    cambie_haslegrave_profile, critical_exponents, szeged, IndexProfile, ScanParams, DEFAULT_TOLERANCE,
};

use super::{Check, Outcome, Settings};
use crate::error::CliResult;

fn c11_into(c: &mut Check) -> CliResult<()> {
    let p = soltes_profile(&Graph::cycle(11))?;
    c.note(format!("C_11: W = {}, Δ = {:?}", p.wiener, p.deltas.iter().flatten().collect::<Vec<_>>()));
    c.expect(p.is_soltes_graph(), || "C_11 has a vertex with Δ_v ≠ 0".into());
    Ok(())
}

pub fn c11(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("W(C_11 − v) = W(C_11) for every v");
    c11_into(&mut out.check)?;
    Ok(out)
}

pub fn soltes(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new(
        "C_11 Šoltés; no other C_n (n <= 20); no cubic Šoltés vertex for n <= 12; order 14: exactly three cubic graphs with two Šoltés vertices, none with more; B(k) proportion 2k/(5k+6), k = 2, 3; δ >= n/2 theorem holds for connected n <= 8",
    );
    let c = &mut out.check;
    c11_into(c)?;
    for n in (3..=20).filter(|&n| n != 11) {
        let p = soltes_profile(&Graph::cycle(n))?;
        c.expect(!p.is_soltes_graph(), || format!("C_{n} is a Šoltés graph"));
    }
    for n in [4, 6, 8, 10, 12] {
        let mut err = None;
        regular_graphs(n, 3, |g| match soltes_profile(g) {
            Ok(p) => {
                c.expect_on(p.soltes_count() == 0, g, || format!("cubic n={n} has a Šoltés vertex"));
            }
            Err(e) => {
                err.get_or_insert(e);
            }
        })?;
        if let Some(e) = err {
            return Err(e.into());
        }
    }
    let mut counts = vec![];
    let mut err = None;
    let total = regular_graphs(14, 3, |g| match soltes_profile(g) {
        Ok(p) if p.soltes_count() > 0 => counts.push(p.soltes_count()),
        Ok(_) => {}
        Err(e) => {
            err.get_or_insert(e);
        }
    })?;
    if let Some(e) = err {
        return Err(e.into());
    }
    counts.sort_unstable();
    let two = counts.iter().filter(|&&k| k == 2).count();
    let more = counts.iter().filter(|&&k| k > 2).count();
    c.note(format!("cubic n=14: {total} graphs, {} with a Šoltés vertex, counts {counts:?}", counts.len()));
    c.expect(two == 3 && more == 0, || format!("{two} graphs with two Šoltés vertices, {more} with more"));
    for k in [2usize, 3] {
        let p = soltes_profile(&soltes_b(k)?)?;
        let want = Ratio::new(2 * k as u64, 5 * k as u64 + 6);
        c.expect(p.proportion() == want, || format!("B({k}): proportion {} ≠ {want}", p.proportion()));
    }
    let mut applied = 0;
    for n in 3..=8 {
        let mut err = None;
        connected_graphs(n, &ClassFilter::connected(), |g| match min_degree_guard_check(g) {
            Ok(chk) => {
                applied += chk.applies as u64;
                c.expect_on(!chk.violated(), g, || format!("δ >= n/2 but a Šoltés vertex exists (n={n})"));
            }
            Err(e) => {
                err.get_or_insert(e);
            }
        })?;
        if let Some(e) = err {
            return Err(e.into());
        }
    }
    c.note(format!("δ >= n/2 applies to {applied} graphs, no violation"));
    Ok(out)
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

fn double_star(n: usize, a: usize) -> Graph {
    let mut g = Graph::new(n);
    g.add_edge(0, 1);
    for v in 2..n {
        g.add_edge(if v - 2 < a { 0 } else { 1 }, v);
    }
    g
}

pub fn signed(s: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new(
        "W_σ = W for constant σ on 100 random connected graphs (n <= 10); W_*(P_n) <= W_*(T) <= max double-star W_* for trees n <= 8; K_6 is 1-canceling",
    );
    let c = &mut out.check;
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    for i in 0..100 {
        let n = 2 + i % 9;
        let p = 0.3 + 0.4 * rng.gen::<f64>();
        let g = random_connected(&mut rng, n, p);
        let w = wiener(&g)?;
        for positive in [true, false] {
            let ws = signed_wiener(&SignedGraph::constant(&g, positive)?)?;
            c.expect_on(ws == w, &g, || format!("constant σ: W_σ = {ws}, W = {w}"));
        }
    }
    c.note(format!("100 random graphs (seed {})", s.seed));
    for n in 2..=8 {
        let lower = min_signed_wiener(&Graph::path(n), Shard::ALL)?.value;
        let upper = (0..=(n - 2) / 2).map(|a| min_signed_wiener(&double_star(n, a), Shard::ALL).map(|m| m.value)).try_fold(0, |m, v| {
            v.map(|v| m.max(v))
        })?;
        let mut err = None;
        let count = trees(n, |t| match min_signed_wiener(t, Shard::ALL) {
            Ok(m) => {
                c.expect_on(lower <= m.value && m.value <= upper, t, || format!("n={n}: W_* = {} outside [{lower}, {upper}]", m.value));
            }
            Err(e) => {
                err.get_or_insert(e);
            }
        })?;
        if let Some(e) = err {
            return Err(e.into());
        }
        c.note(format!("n={n}: {count} trees within [{lower}, {upper}]"));
    }
    let k6 = Graph::complete(6);
    let found = exists_k_canceling(&k6, 1, Shard::ALL)?;
    match found.signature {
        Some(sig) => {
            let v = is_k_canceling(&SignedGraph::new(&k6, sig)?, 1)?;
            c.note(format!("K_6 canceling signature {sig:#x}"));
            c.expect(v == CancelVerdict::Holds, || format!("K_6 signature re-check: {v:?}"));
        }
        None => {
            c.expect(false, || "no 1-canceling signature of K_6".into());
        }
    }
    Ok(out)
}

pub fn varindex(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new(
        "Sz >= W with equality iff all blocks complete (n <= 8); Sz^α > W^α for α in {1.5,2,3} and < for α in {−1,−0.5} (non-complete n <= 7); one sign change of h on (0,4] per tree (n <= 9); G_{1000,120} has >= 3 sign changes",
    );
    let c = &mut out.check;
    for n in 1..=8 {
        for g in collect(n, &ClassFilter::connected())? {
            let (sz, w) = (szeged(&g)?, wiener(&g)?);
            c.expect_on(sz >= w && (sz == w) == blocks(&g).all_blocks_complete(&g), &g, || format!("Sz = {sz}, W = {w}"));
        }
    }
    for n in 3..=7 {
        for g in collect(n, &ClassFilter::connected())?.into_iter().filter(|g| !g.is_complete()) {
            let p = IndexProfile::of_graph(&g)?;
            for a in [1.5, 2.0, 3.0] {
                c.expect_on(p.variable_szeged(a) > p.variable_wiener(a), &g, || format!("α = {a}: Sz^α <= W^α"));
            }
            for a in [-1.0, -0.5] {
                c.expect_on(p.variable_szeged(a) < p.variable_wiener(a), &g, || format!("α = {a}: Sz^α >= W^α"));
            }
        }
    }
    let mut tree_count = 0;
    for n in 3..=9 {
        let mut err = None;
        trees(n, |t| {
            let r = IndexProfile::of_graph(t).and_then(|p| critical_exponents(&p, ScanParams::default()));
            match r {
                Ok(scan) => {
                    let ok = scan.sign_changes() == 1
                        && scan.brackets[0].hi - scan.brackets[0].lo <= 2.0 * DEFAULT_TOLERANCE;
                    c.expect_on(ok, t, || format!("tree with {} sign changes", scan.sign_changes()));
                    tree_count += 1;
                }
                Err(e) => {
                    err.get_or_insert(e);
                }
            }
        })?;
        if let Some(e) = err {
            return Err(e.into());
        }
    }
    c.note(format!("{tree_count} trees with one crossing each"));
    let scan = critical_exponents(&cambie_haslegrave_profile(1000, 120)?, ScanParams::default())?;
    let roots: Vec<String> = scan.roots().iter().map(|r| format!("{r:.6}")).collect();
    c.note(format!("G_(1000,120): {} sign changes at {}", scan.sign_changes(), roots.join(", ")));
    c.expect(scan.sign_changes() >= 3, || format!("fixture has {} sign changes", scan.sign_changes()));
    Ok(out)
}
