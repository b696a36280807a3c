//! Registry of reproducible checks. Each claim recomputes its evidence
//! from scratch and reports expected against observed values.

mod codec;
mod digraphs;
mod evidence;
mod extremal;
mod indices;
mod structure;

use std::time::Instant;

use serde::Serialize;
use wiener_core::{Error, Graph};
use wiener_orient::TauConvention;

use crate::error::{CliError, CliResult};
use crate::graph6;

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedBudget => "skipped-budget",
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Conventions {
    pub tau: &'static str,
    pub seed: u64,
}

#[derive(Serialize, Clone, Debug)]
pub struct ClaimResult {
    pub id: String,
    /// Acceptance criterion number, if the claim is one.
    pub criterion: Option<u8>,
    /// Evidence reports do not gate `verify all`.
    pub gate: bool,
    pub status: Status,
    pub expected: String,
    pub observed: String,
    /// graph6 of a failing graph, when a single graph witnesses the failure.
    pub counterexample: Option<String>,
    pub runtime_ms: u128,
    pub conventions: Conventions,
}

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub tau: TauConvention,
    pub seed: u64,
    /// Restricts `ladder-wmax` to one n.
    pub ladder_n: Option<usize>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { tau: TauConvention::SelfCounts, seed: 7, ladder_n: None }
    }
}

/// Collected observations and failures of one claim.
#[derive(Default, Debug)]
pub struct Check {
    observed: Vec<String>,
    failures: Vec<String>,
    counterexample: Option<String>,
}

impl Check {
    pub fn note(&mut self, s: impl Into<String>) {
        self.observed.push(s.into());
    }

    pub fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        if !ok {
            self.failures.push(what());
        }
        ok
    }

    /// Like `expect`, recording `g` as the counterexample on the first failure.
    pub fn expect_on(&mut self, ok: bool, g: &Graph, what: impl FnOnce() -> String) -> bool {
        if !ok && self.counterexample.is_none() {
            self.counterexample = graph6::encode(g).ok();
        }
        self.expect(ok, what)
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub struct Outcome {
    pub expected: String,
    pub check: Check,
}

impl Outcome {
    pub fn new(expected: impl Into<String>) -> Self {
        Outcome { expected: expected.into(), check: Check::default() }
    }
}

type Runner = fn(&Settings) -> CliResult<Outcome>;

pub struct Claim {
    pub id: &'static str,
    pub criterion: Option<u8>,
    pub gate: bool,
    pub summary: &'static str,
    run: Runner,
}

const fn criterion(n: u8, id: &'static str, summary: &'static str, run: Runner) -> Claim {
    Claim { id, criterion: Some(n), gate: true, summary, run }
}

const fn check(id: &'static str, summary: &'static str, run: Runner) -> Claim {
    Claim { id, criterion: None, gate: true, summary, run }
}

const fn report(id: &'static str, summary: &'static str, run: Runner) -> Claim {
    Claim { id, criterion: None, gate: false, summary, run }
}

pub static REGISTRY: &[Claim] = &[
    criterion(1, "folklore-bounds", "C(n,2) <= W <= C(n+1,3) for n <= 8; S_n and P_n are the tree extremes for n <= 9", extremal::folklore),
    criterion(2, "chemical-minima", "chemical minima: 1929 graphs at n = 8, min 40 by 6 graphs; K_n for n <= 5; C_6(1,2), C_7(1,2)", extremal::chemical),
    criterion(3, "broom-maximality", "T_{n,Δ} is the unique max-W graph with maximum degree Δ, n <= 10", extremal::brooms),
    criterion(4, "cubic-maximizer", "L_10 attains max W over cubic graphs on 10 vertices", extremal::cubic),
    criterion(5, "ladder-formula", "W_max(P_n □ P_2) = (8n³+3n²−5n+6)/3 for n = 2, 3, 4", digraphs::ladder_formula),
    criterion(6, "grid-comparison", "W(C_{3,n}) > W(D_{3,n}) for n = 4, 6", digraphs::grids),
    criterion(7, "theta-orientation", "the directed-cycle Θ orientation attains W_max up to 10 vertices", digraphs::theta),
    criterion(8, "coloring-counterexample", "min W over orientations < min over 3-coloring-induced orientations", digraphs::coloring),
    criterion(9, "directed-cycle", "the directed n-cycle is the unique max-W digraph for n = 3, 4", digraphs::directed_cycles),
    criterion(10, "diameter4-trees", "T_n / T_n' maximise W over diameter-4 trees, 5 <= n <= 12", structure::diameter_four),
    criterion(11, "gnrs-invariance", "W(G_{n,r,s}) does not depend on s, n <= 16, r in {3,4}", structure::gnrs),
    criterion(12, "soltes-suite", "C_11, cycles, cubic graphs, B(k) proportions, minimum-degree theorem", indices::soltes),
    criterion(13, "signed-suite", "constant signatures, tree conjecture for n <= 8, K_6 is 1-canceling", indices::signed),
    criterion(14, "varindex-suite", "Sz vs W, sign pattern of Sz^α − W^α, tree crossings, G_{k,ℓ} fixture", indices::varindex),
    criterion(15, "apex-formulas", "W(K_ℓ + T) and W^α(D_{n−4}(3,1)) closed forms", structure::apex),
    criterion(16, "line-graph-ratios", "W(L(G))/W(G) over n = 7: min 5/12 at S_7, max 15 at K_7", structure::line_ratios),
    criterion(17, "blocks", "max W with p blocks is C_a∘P∘C_b; C_9 then H_{9,1,2}; W(H+) = W(H) − 1", structure::block_shapes),
    criterion(18, "codec-hygiene", "graph6 round trip for n <= 8; 8-way chemical shards reunite", codec::hygiene),
    check("chem8-min", "chemical graphs on 8 vertices: min W = 40 by 6 graphs", extremal::chem8),
    check("c11-soltes", "every vertex of C_11 has Δ_v = 0", indices::c11),
    check("ladder-wmax", "ladder W_max by formula and brute force (--n selects one n)", digraphs::ladder_single),
    report("evidence-4regular", "chemical minima at n = 9, 10 are 4-regular", evidence::four_regular),
    report("evidence-acyclic", "W_min is attained by an acyclic orientation, connected n <= 6", evidence::acyclic),
    report("evidence-product", "W_max(G□H) lower bound under both τ conventions, |E(G□H)| <= 14", evidence::product),
];

pub fn find(id: &str) -> CliResult<&'static Claim> {
    REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| CliError::UnknownClaim { id: id.to_owned(), known: listing() })
}

pub fn listing() -> String {
    REGISTRY
        .iter()
        .map(|c| {
            let tag = match (c.criterion, c.gate) {
                (Some(n), _) => format!("[{n:>2}]"),
                (None, true) => "[ck]".to_owned(),
                (None, false) => "[ev]".to_owned(),
            };
            format!("  {tag} {:<24} {}", c.id, c.summary)
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Claims selected by `all`: every gating claim.
pub fn gating() -> impl Iterator<Item = &'static Claim> {
    REGISTRY.iter().filter(|c| c.gate)
}

pub fn criteria() -> impl Iterator<Item = &'static Claim> {
    REGISTRY.iter().filter(|c| c.criterion.is_some())
}

fn tau_name(t: TauConvention) -> &'static str {
    match t {
        TauConvention::SelfCounts => "self",
        TauConvention::NoSelf => "noself",
    }
}

impl Claim {
    pub fn run(&self, settings: &Settings) -> ClaimResult {
        let start = Instant::now();
        let outcome = (self.run)(settings);
        let runtime_ms = start.elapsed().as_millis();
        let conventions = Conventions { tau: tau_name(settings.tau), seed: settings.seed };
        let base = |status, expected: String, observed: String, counterexample| ClaimResult {
            id: self.id.to_owned(),
            criterion: self.criterion,
            gate: self.gate,
            status,
            expected,
            observed,
            counterexample,
            runtime_ms,
            conventions: conventions.clone(),
        };
        match outcome {
            Ok(Outcome { expected, check }) => {
                let status = if check.passed() { Status::Pass } else { Status::Fail };
                let mut observed = check.observed;
                observed.extend(check.failures.iter().map(|f| format!("FAILED: {f}")));
                base(status, expected, observed.join("; "), check.counterexample)
            }
            Err(CliError::Core(e @ (Error::SizeGuard { .. } | Error::EdgeBudget { .. } | Error::Capacity { .. }))) => {
                base(Status::SkippedBudget, String::new(), e.to_string(), None)
            }
            Err(e) => base(Status::Fail, String::new(), format!("error: {e}"), None),
        }
    }
}

/// Runs claims on up to `threads` workers; results keep the input order.
pub fn run_all(claims: &[&'static Claim], settings: &Settings, threads: usize) -> Vec<ClaimResult> {
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Mutex;

    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<ClaimResult>>> = Mutex::new(vec![None; claims.len()]);
    std::thread::scope(|scope| {
        for _ in 0..threads.clamp(1, claims.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(c) = claims.get(i) else { break };
                let r = c.run(settings);
                slots.lock().expect("no worker panicked")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("no worker panicked").into_iter().map(|r| r.expect("every slot filled")).collect()
}

/// Canonical forms of a list of graphs, sorted, for set comparison.
pub(crate) fn forms(graphs: &[Graph]) -> CliResult<Vec<wiener_core::CanonicalForm>> {
    let mut f = graphs.iter().map(wiener_core::canonical_form).collect::<Result<Vec<_>, _>>()?;
    f.sort();
    f.dedup();
    Ok(f)
}

pub(crate) fn g6(g: &Graph) -> String {
    graph6::encode(g).unwrap_or_else(|_| format!("<order {}>", g.order()))
}
