use crate::error::{invalid, Result};

/// Deterministic slice `index` of `total` of a search space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shard {
    pub index: usize,
    pub total: usize,
}

impl Shard {
    pub const ALL: Shard = Shard { index: 0, total: 1 };

    pub fn new(index: usize, total: usize) -> Result<Self> {
        if total == 0 || index >= total {
            return Err(invalid(format!("shard {index}/{total}")));
        }
        Ok(Shard { index, total })
    }

    /// Parses `i/N`.
    pub fn parse(text: &str) -> Result<Self> {
        let (i, n) = text.split_once('/').ok_or_else(|| invalid(format!("shard {text:?} is not i/N")))?;
        let i = i.trim().parse().map_err(|_| invalid(format!("shard index {i:?}")))?;
        let n = n.trim().parse().map_err(|_| invalid(format!("shard total {n:?}")))?;
        Shard::new(i, n)
    }

    pub fn owns(&self, item: u64) -> bool {
        item % self.total as u64 == self.index as u64
    }

    pub fn all(total: usize) -> impl Iterator<Item = Shard> {
        (0..total).map(move |index| Shard { index, total })
    }
}
