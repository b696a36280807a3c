use wiener_core::{canonical_form, Shard};
use wiener_enumerate::{connected_graphs, connected_graphs_sharded, ClassFilter};

use super::{Outcome, Settings};
use crate::error::CliResult;
use crate::graph6::{decode, encode};

pub fn hygiene(_: &Settings) -> CliResult<Outcome> {
    let mut out = Outcome::new("decode(encode(G)) = G for every connected graph n <= 8; union of 8 chemical n = 8 shards = unsharded run");
    let c = &mut out.check;
    c.expect(encode(&wiener_core::Graph::complete(2))? == "A_", || "K_2 does not encode as A_".into());
    c.expect(encode(&wiener_core::Graph::new(1))? == "@", || "K_1 does not encode as @".into());
    let mut total = 0;
    for n in 1..=8 {
        total += connected_graphs(n, &ClassFilter::connected(), |g| {
            let ok = encode(g).and_then(|s| decode(&s).map(|h| (s, h))).is_ok_and(|(s, h)| h == *g && encode(&h).is_ok_and(|t| t == s));
            c.expect_on(ok, g, || "graph6 round trip changed the graph".into());
        })?;
    }
    c.note(format!("{total} graphs round-tripped"));
    let filter = ClassFilter::chemical();
    let mut whole = vec![];
    connected_graphs(8, &filter, |g| whole.push(canonical_form(g)))?;
    let mut whole = whole.into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut parts = vec![];
    let mut sizes = vec![];
    for sh in Shard::all(8) {
        let before = parts.len();
        connected_graphs_sharded(8, &filter, sh, |g| parts.push(canonical_form(g)))?;
        sizes.push(parts.len() - before);
    }
    let mut parts = parts.into_iter().collect::<Result<Vec<_>, _>>()?;
    whole.sort();
    parts.sort();
    c.note(format!("unsharded {} graphs, shard sizes {sizes:?}", whole.len()));
    c.expect(whole == parts, || "shard union differs from the unsharded multiset".into());
    Ok(out)
}
