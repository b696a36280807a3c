use wiener_core::Shard;
use wiener_families::{figures, theta as theta_graph};
use wiener_orient::{
    digraph_wiener, directed_cycle, enumerate_orientations, for_each_digraph, grid, grid_c, grid_d, ladder_formula as ladder_closed_form,
    ladder_max, max_orientation_wiener, min_chromatic_induced_wiener, min_orientation_wiener, theta_max, Digraph,
};

use super::{Check, Outcome, Settings};
use crate::error::CliResult;

fn ladder_case(c: &mut Check, n: usize) -> CliResult<()> {
    let g = grid(2, n)?;
    let stats = enumerate_orientations(&g, Shard::ALL)?;
    let formula = ladder_closed_form(n as u64);
    let drawn = digraph_wiener(&ladder_max(n)?);
    c.note(format!("n={n}: {} orientations, brute force {}, formula {formula}, construction {drawn}", stats.all.count, stats.all.max));
    c.expect(stats.all.count == 1 << (3 * n - 2), || format!("n={n}: {} orientations visited", stats.all.count));
    c.expect(stats.all.max == formula, || format!("n={n}: W_max {} ≠ formula {formula}", stats.all.max));
    c.expect(drawn == formula, || format!("n={n}: construction gives {drawn}"));
    Ok(())
}

pub fn ladder_formula_claim(ns: &[usize]) -> CliResult<Outcome> {
    let mut out = Outcome::new(format!("W_max(P_n □ P_2) = (8n³+3n²−5n+6)/3 by exhaustion, n in {ns:?}"));
    for &n in ns {
        ladder_case(&mut out.check, n)?;
    }
    Ok(out)
}

pub fn ladder_formula(_: &Settings) -> CliResult<Outcome> {
    ladder_formula_claim(&[2, 3, 4])
}

pub fn ladder_single(s: &Settings) -> CliResult<Outcome> {
    ladder_formula_claim(&[s.ladder_n.unwrap_or(3)])
}

pub fn grids(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("W(C_{3,4}) > W(D_{3,4}) and W(C_{3,6}) > W(D_{3,6})");
    for n in [4, 6] {
        let (wc, wd) = (digraph_wiener(&grid_c(3, n)?), digraph_wiener(&grid_d(3, n)?));
        out.check.note(format!("n={n}: C {wc}, D {wd}"));
        out.check.expect(wc > wd, || format!("n={n}: W(C) = {wc} <= W(D) = {wd}"));
    }
    Ok(out)
}

pub fn theta(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("W(directed-cycle Θ orientation) = exhaustive W_max for all Θ_{a,b,c}, a+b+c+2 <= 10");
    let c = &mut out.check;
    let mut cases = 0;
    for n in 4..=10usize {
        for a in 1..=n - 2 {
            for b in 1..=a.min(n - 2 - a) {
                let cc = n - 2 - a - b;
                if cc > b {
                    continue;
                }
                let g = theta_graph(a, b, cc)?;
                let best = theta_max(a, b, cc)?;
                let (w, exhaustive) = (digraph_wiener(&best), max_orientation_wiener(&g)?);
                c.expect_on(best.underlying() == g && w == exhaustive, &g, || format!("Θ_({a},{b},{cc}): {w} vs {exhaustive}"));
                cases += 1;
            }
        }
    }
    c.note(format!("{cases} Θ graphs, all maxima attained"));
    Ok(out)
}

pub fn coloring(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("on the 18-vertex two-triangle graph, min W over 2^19 orientations < min over 3-coloring-induced orientations");
    let g = figures::coloring_counterexample();
    let all = min_orientation_wiener(&g)?;
    let induced = min_chromatic_induced_wiener(&g)?;
    let c = &mut out.check;
    c.note(format!("min over orientations {all}, over coloring-induced {induced:?}"));
    c.expect_on(induced.is_some_and(|m| all < m), &g, || "no strict gap".into());
    Ok(out)
}

fn is_directed_hamiltonian_cycle(d: &Digraph) -> bool {
    let n = d.order();
    d.arc_count() == n && (0..n).all(|v| d.out_degree(v) == 1 && d.in_degree(v) == 1) && d.is_strongly_connected()
}

pub fn directed_cycles(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("for n = 3, 4 the max-W digraphs are exactly the (n−1)! labelled directed n-cycles");
    let c = &mut out.check;
    for n in [3usize, 4] {
        let (mut best, mut arg, mut seen) = (0u64, Vec::new(), 0u64);
        for_each_digraph(n, |d| {
            seen += 1;
            let w = digraph_wiener(d);
            if w > best {
                best = w;
                arg.clear();
            }
            if w == best {
                arg.push(d.clone());
            }
        })?;
        let cycle_w = digraph_wiener(&directed_cycle(n)?);
        let fact: usize = (1..n).product();
        c.note(format!("n={n}: {seen} digraphs, max W {best} by {} digraphs, W(C_n) = {cycle_w}", arg.len()));
        c.expect(seen == 1 << (n * (n - 1)), || format!("n={n}: visited {seen} digraphs"));
        c.expect(best == cycle_w, || format!("n={n}: max {best} ≠ W(C_n) {cycle_w}"));
        c.expect(arg.len() == fact && arg.iter().all(is_directed_hamiltonian_cycle), || {
            format!("n={n}: maximisers are not exactly the directed n-cycles")
        });
    }
    Ok(out)
}
