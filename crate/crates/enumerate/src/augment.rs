//! Canonical augmentation by vertex addition. Every intermediate graph is
//! connected; a child is accepted iff the added vertex lies in the orbit of
//! the canonically chosen non-cut vertex.

use std::collections::HashSet;

use wiener_core::canon::map_mask;
use wiener_core::{bits, canonical_labeling, circumference, cut_vertices, CanonicalLabeling, Graph, Result, Shard};

use crate::filter::ClassFilter;

/// Search-tree level whose nodes are dealt out to shards.
pub fn shard_level(n: usize) -> usize {
    n.saturating_sub(2).max(1)
}

pub(crate) struct Generator<'a, F: FnMut(&Graph)> {
    target: usize,
    filter: &'a ClassFilter,
    cap: Option<usize>,
    shard: Shard,
    level: usize,
    counter: u64,
    visit: F,
    pub(crate) visited: u64,
}

fn key(g: &Graph, v: usize) -> u64 {
    let nb = g.neighbors(v);
    let deg_sum: u32 = bits(nb).map(|w| g.degree(w) as u32).sum();
    let inner: u32 = bits(nb).map(|w| (g.neighbors(w) & nb).count_ones()).sum();
    (g.degree(v) as u64) << 40 | (deg_sum as u64) << 20 | inner as u64
}

impl<'a, F: FnMut(&Graph)> Generator<'a, F> {
    pub(crate) fn new(target: usize, filter: &'a ClassFilter, shard: Shard, visit: F) -> Self {
        Generator {
            target,
            filter,
            cap: filter.degree_cap(),
            shard,
            level: shard_level(target),
            counter: 0,
            visit,
            visited: 0,
        }
    }

    pub(crate) fn run(&mut self) -> Result<()> {
        if self.target == 0 {
            return Ok(());
        }
        self.node(Graph::new(1), None)
    }

    fn node(&mut self, g: Graph, lab: Option<CanonicalLabeling>) -> Result<()> {
        let k = g.order();
        if k == self.level.min(self.target) {
            let c = self.counter;
            self.counter += 1;
            if !self.shard.owns(c) {
                return Ok(());
            }
        }
        if k == self.target {
            if self.filter.accepts_output(&g) {
                self.visited += 1;
                (self.visit)(&g);
            }
            return Ok(());
        }
        let lab = match lab {
            Some(l) => l,
            None => canonical_labeling(&g)?,
        };
        let noncut = g.vertex_mask() & !cut_vertices(&g);
        let degs = g.degrees();
        let mut open = g.vertex_mask();
        if let Some(c) = self.cap {
            open = bits(open).filter(|&v| degs[v] < c).fold(0, |a, v| a | 1 << v);
        }
        let max_s = if self.filter.tree { 1 } else { self.cap.unwrap_or(k) };
        let mut seen: HashSet<u64> = HashSet::new();
        let symmetric = !lab.generators.is_empty();
        // ascending submasks of `open`
        let mut s: u64 = 0;
        loop {
            s = s.wrapping_sub(open) & open;
            if s == 0 {
                break;
            }
            let size = s.count_ones() as usize;
            if size > max_s {
                continue;
            }
            if symmetric {
                if seen.contains(&s) {
                    continue;
                }
                let mut stack = vec![s];
                seen.insert(s);
                while let Some(x) = stack.pop() {
                    for gamma in &lab.generators {
                        let y = map_mask(gamma, x);
                        if seen.insert(y) {
                            stack.push(y);
                        }
                    }
                }
            }
            // a vertex that stays non-cut in the child with smaller degree
            // than the new vertex rules the child out
            let surely = noncut & if size == 1 { !s } else { !0 };
            if bits(surely).any(|w| degs[w] + (((s >> w) & 1) as usize) < size) {
                continue;
            }
            if let Some(child_lab) = self.try_child(&g, s)? {
                self.node(child_lab.0, child_lab.1)?;
            }
        }
        Ok(())
    }

    fn try_child(&self, g: &Graph, s: u64) -> Result<Option<(Graph, Option<CanonicalLabeling>)>> {
        let mut child = g.clone();
        let v = child.push_vertex(s);
        let n = child.order();
        if let Some(c) = self.filter.max_circumference {
            if circumference(&child)?.is_some_and(|len| len > c) {
                return Ok(None);
            }
        }
        if let Some(r) = self.filter.regular {
            let deficit: usize = child.degrees().iter().map(|&d| r - d).sum();
            let rem = self.target - n;
            let slack = (r * rem).checked_sub(deficit);
            match slack {
                None => return Ok(None),
                Some(x) if x % 2 == 1 || x / 2 > rem * rem.saturating_sub(1) / 2 => return Ok(None),
                _ => {}
            }
            if rem > 0 && deficit == 0 {
                return Ok(None);
            }
        }
        let noncut = child.vertex_mask() & !cut_vertices(&child);
        let mut best = u64::MAX;
        let mut ties = 0u64;
        for w in bits(noncut) {
            let kw = key(&child, w);
            if kw < best {
                best = kw;
                ties = 1 << w;
            } else if kw == best {
                ties |= 1 << w;
            }
        }
        if ties >> v & 1 == 0 {
            return Ok(None);
        }
        if ties == 1 << v {
            return Ok(Some((child, None)));
        }
        let cl = canonical_labeling(&child)?;
        let w = bits(ties).max_by_key(|&w| cl.position(w)).unwrap();
        if cl.same_orbit(v, w) {
            Ok(Some((child, Some(cl))))
        } else {
            Ok(None)
        }
    }
}
