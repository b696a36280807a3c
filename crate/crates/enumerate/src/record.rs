use wiener_core::{canonical_form, CanonicalForm, Error, Graph, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Min,
    Max,
}

/// Running extremum with the exact set of attaining graphs.
#[derive(Clone, Debug)]
pub struct SearchRecord<V> {
    pub objective: String,
    pub direction: Direction,
    pub best: Option<V>,
    pub attaining: Vec<CanonicalForm>,
    pub visited: u64,
}

impl<V: Ord + Clone> SearchRecord<V> {
    pub fn new(objective: impl Into<String>, direction: Direction) -> Self {
        SearchRecord { objective: objective.into(), direction, best: None, attaining: Vec::new(), visited: 0 }
    }

    fn better(&self, a: &V, b: &V) -> bool {
        match self.direction {
            Direction::Min => a < b,
            Direction::Max => a > b,
        }
    }

    pub fn offer(&mut self, g: &Graph, value: V) -> Result<()> {
        self.visited += 1;
        match &self.best {
            Some(b) if self.better(b, &value) => {}
            Some(b) if *b == value => {
                let f = canonical_form(g)?;
                if !self.attaining.contains(&f) {
                    self.attaining.push(f);
                    self.attaining.sort();
                }
            }
            _ => {
                self.best = Some(value);
                self.attaining = vec![canonical_form(g)?];
            }
        }
        Ok(())
    }

    pub fn count(&self) -> usize {
        self.attaining.len()
    }

    pub fn attains(&self, g: &Graph) -> Result<bool> {
        Ok(self.attaining.contains(&canonical_form(g)?))
    }

    /// Combines records of disjoint shards.
    pub fn merge(mut self, other: SearchRecord<V>) -> Self {
        self.visited += other.visited;
        match (&self.best, other.best) {
            (_, None) => {}
            (None, Some(b)) => {
                self.best = Some(b);
                self.attaining = other.attaining;
            }
            (Some(a), Some(b)) => {
                if self.better(&b, a) {
                    self.best = Some(b);
                    self.attaining = other.attaining;
                } else if *a == b {
                    self.attaining.extend(other.attaining);
                    self.attaining.sort();
                    self.attaining.dedup();
                }
            }
        }
        self
    }
}

/// Extremal value of `objective` over a stream of graphs.
pub fn extremal_search<V: Ord + Clone>(
    stream: impl IntoIterator<Item = Graph>,
    objective: &str,
    direction: Direction,
    mut f: impl FnMut(&Graph) -> Result<V>,
) -> Result<SearchRecord<V>> {
    let mut rec = SearchRecord::new(objective, direction);
    for g in stream {
        let v = f(&g)?;
        rec.offer(&g, v)?;
    }
    if rec.best.is_none() {
        return Err(Error::InvalidParameter("extremal search over an empty stream".into()));
    }
    Ok(rec)
}
