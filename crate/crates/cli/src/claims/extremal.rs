use wiener_core::{canonical_form, wiener, Graph};
use wiener_enumerate::{connected_graphs, regular_graphs, ClassFilter, Direction, SearchRecord};
use wiener_families::{broom_t, cubic_l, figures};

use super::{forms, g6, Outcome, Settings};
use crate::error::CliResult;

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn records(n: usize, filter: &ClassFilter) -> CliResult<(SearchRecord<u64>, SearchRecord<u64>)> {
    let mut lo = SearchRecord::new("W", Direction::Min);
    let mut hi = SearchRecord::new("W", Direction::Max);
    let mut err = None;
    connected_graphs(n, filter, |g| {
        let r = wiener(g).and_then(|w| lo.offer(g, w).and_then(|_| hi.offer(g, w)));
        if let Err(e) = r {
            err.get_or_insert(e);
        }
    })?;
    match err {
        Some(e) => Err(e.into()),
        None => Ok((lo, hi)),
    }
}

pub fn folklore(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("C(n,2) <= W <= C(n+1,3), equality only at K_n / P_n (n <= 8); trees: min S_n, max P_n uniquely (n <= 9)");
    let c = &mut out.check;
    let mut total = 0u64;
    for n in 1..=8usize {
        let (lo, hi) = (binom(n as u64, 2), binom(n as u64 + 1, 3));
        let path = canonical_form(&Graph::path(n))?;
        let mut err = None;
        total += connected_graphs(n, &ClassFilter::connected(), |g| {
            let w = match wiener(g) {
                Ok(w) => w,
                Err(e) => {
                    err.get_or_insert(e);
                    return;
                }
            };
            c.expect_on(lo <= w && w <= hi, g, || format!("n={n}: W = {w} outside [{lo}, {hi}]"));
            c.expect_on((w == lo) == g.is_complete(), g, || format!("n={n}: W = C(n,2) iff complete fails"));
            let is_path = canonical_form(g).is_ok_and(|f| f == path);
            c.expect_on((w == hi) == is_path, g, || format!("n={n}: W = C(n+1,3) iff path fails"));
        })?;
        if let Some(e) = err {
            return Err(e.into());
        }
    }
    c.note(format!("{total} connected graphs on 1..8 vertices"));
    for n in 1..=9usize {
        let (lo, hi) = records(n, &ClassFilter::trees())?;
        let star = forms(&[Graph::star(n)])?;
        let path = forms(&[Graph::path(n)])?;
        c.expect(lo.attaining == star, || format!("n={n}: tree minimum not uniquely S_n ({} graphs)", lo.count()));
        c.expect(hi.attaining == path, || format!("n={n}: tree maximum not uniquely P_n ({} graphs)", hi.count()));
        c.expect(lo.best == Some((n as u64 - 1).pow(2)), || format!("n={n}: W(S_n) = {:?}", lo.best));
        c.expect(hi.best == Some(binom(n as u64 + 1, 3)), || format!("n={n}: W(P_n) = {:?}", hi.best));
    }
    c.note("tree extremes S_n / P_n unique for n = 1..9");
    Ok(out)
}

fn chem8_into(out: &mut Outcome) -> CliResult<()> {
    let (lo, _) = records(8, &ClassFilter::chemical())?;
    let c = &mut out.check;
    c.note(format!("chemical n=8: {} graphs, min W = {:?} by {} graphs", lo.visited, lo.best, lo.count()));
    c.expect(lo.visited == 1929, || format!("visited {} chemical graphs, expected 1929", lo.visited));
    c.expect(lo.best == Some(40), || format!("min W {:?}, expected 40", lo.best));
    c.expect(lo.count() == 6, || format!("{} minimising graphs, expected 6", lo.count()));
    for g in figures::named_chemical_minima(8) {
        c.expect(lo.attains(&g)?, || format!("named minimum {} missing from the extremal set", g6(&g)));
    }
    Ok(())
}

pub fn chem8(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("1929 chemical graphs on 8 vertices; min W = 40 attained by 6 graphs");
    chem8_into(&mut out)?;
    Ok(out)
}

pub fn chemical(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new(
        "n=8: 1929 graphs, min 40 by 6 (incl. C_8(1,2), K_4□P_2, K_4,4); n<=5: K_n only; n=6,7 minima include C_6(1,2), C_7(1,2)",
    );
    chem8_into(&mut out)?;
    let c = &mut out.check;
    for n in 1..=5 {
        let (lo, _) = records(n, &ClassFilter::chemical())?;
        c.expect(lo.attaining == forms(&[Graph::complete(n)])?, || format!("n={n}: chemical minimum is not uniquely K_n"));
    }
    for n in [6, 7] {
        let (lo, _) = records(n, &ClassFilter::chemical())?;
        c.note(format!("n={n}: min W = {:?} by {} graphs", lo.best, lo.count()));
        let named = figures::named_chemical_minima(n);
        c.expect(!named.is_empty(), || format!("no named minimum for n={n}"));
        for g in named {
            c.expect(lo.attains(&g)?, || format!("n={n}: {} not in the extremal set", g6(&g)));
        }
    }
    let mut unfiltered = 0;
    connected_graphs(8, &ClassFilter::connected(), |_| unfiltered += 1)?;
    c.note(format!("all connected graphs on 8 vertices: {unfiltered}"));
    Ok(out)
}

pub fn brooms(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("for 3 <= n <= 10 and 2 <= Δ <= n−1, T_{n,Δ} is the unique max-W graph with Δ(G) = Δ");
    let c = &mut out.check;
    let mut cases = 0;
    for n in 3..=10usize {
        let mut recs: Vec<SearchRecord<u64>> = (0..n).map(|_| SearchRecord::new("W", Direction::Max)).collect();
        let mut err = None;
        connected_graphs(n, &ClassFilter::connected(), |g| {
            if let Err(e) = wiener(g).and_then(|w| recs[g.max_degree()].offer(g, w)) {
                err.get_or_insert(e);
            }
        })?;
        if let Some(e) = err {
            return Err(e.into());
        }
        for (delta, rec) in recs.iter().enumerate().skip(2) {
            let t = broom_t(n, delta)?;
            let ok = rec.attaining == forms(&[t.clone()])? && rec.best == Some(wiener(&t)?);
            c.expect_on(ok, &t, || format!("n={n}, Δ={delta}: max {:?} by {} graphs, W(T) = {:?}", rec.best, rec.count(), wiener(&t).ok()));
            cases += 1;
        }
    }
    c.note(format!("{cases} (n, Δ) classes checked exhaustively"));
    Ok(out)
}

pub fn cubic(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("L_10 attains max W over connected cubic graphs on 10 vertices");
    let mut rec = SearchRecord::new("W", Direction::Max);
    let mut err = None;
    regular_graphs(10, 3, |g| {
        if let Err(e) = wiener(g).and_then(|w| rec.offer(g, w)) {
            err.get_or_insert(e);
        }
    })?;
    if let Some(e) = err {
        return Err(e.into());
    }
    let l10 = cubic_l(10)?;
    let c = &mut out.check;
    c.note(format!("{} cubic graphs, max W = {:?} by {} graph(s), W(L_10) = {}", rec.visited, rec.best, rec.count(), wiener(&l10)?));
    c.expect_on(rec.attains(&l10)?, &l10, || "L_10 does not attain the maximum".into());
    Ok(out)
}
