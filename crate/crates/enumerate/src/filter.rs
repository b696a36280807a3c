use wiener_core::{blocks, eccentricity_profile, is_biconnected, Error, Graph, Result};

/// Class restrictions applied during generation. Degree, tree and
/// circumference bounds prune intermediate graphs; the rest only filter
/// the output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassFilter {
    pub max_degree: Option<usize>,
    pub regular: Option<usize>,
    /// 1 = connected (always), 2 = 2-connected.
    pub connectivity: u8,
    pub diameter: Option<u32>,
    pub radius: Option<u32>,
    pub block_count: Option<usize>,
    pub tree: bool,
    pub max_circumference: Option<usize>,
}

impl ClassFilter {
    pub fn connected() -> Self {
        ClassFilter { connectivity: 1, ..Default::default() }
    }

    pub fn chemical() -> Self {
        Self::connected().with_max_degree(4)
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn with_regular(mut self, k: usize) -> Self {
        self.regular = Some(k);
        self
    }

    pub fn biconnected(mut self) -> Self {
        self.connectivity = 2;
        self
    }

    pub fn with_diameter(mut self, d: u32) -> Self {
        self.diameter = Some(d);
        self
    }

    pub fn with_radius(mut self, r: u32) -> Self {
        self.radius = Some(r);
        self
    }

    pub fn with_blocks(mut self, p: usize) -> Self {
        self.block_count = Some(p);
        self
    }

    pub fn trees() -> Self {
        ClassFilter { tree: true, ..Self::connected() }
    }

    pub fn with_max_circumference(mut self, c: usize) -> Self {
        self.max_circumference = Some(c);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let (Some(k), Some(d)) = (self.regular, self.max_degree) {
            if d < k {
                return Err(Error::InvalidParameter(format!("regular degree {k} exceeds max degree {d}")));
            }
        }
        if self.connectivity > 2 {
            return Err(Error::InvalidParameter(format!("connectivity level {} unsupported", self.connectivity)));
        }
        if self.tree && (self.connectivity == 2 || self.regular.is_some_and(|k| k > 1)) {
            return Err(Error::InvalidParameter("tree flag conflicts with 2-connectivity or regularity".into()));
        }
        if let (Some(r), Some(d)) = (self.radius, self.diameter) {
            if r > d || d > 2 * r {
                return Err(Error::InvalidParameter(format!("radius {r} and diameter {d} are inconsistent")));
            }
        }
        Ok(())
    }

    /// Largest degree any intermediate graph may have.
    pub(crate) fn degree_cap(&self) -> Option<usize> {
        match (self.max_degree, self.regular) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub(crate) fn accepts_output(&self, g: &Graph) -> bool {
        if let Some(k) = self.regular {
            if g.degrees().iter().any(|&d| d != k) {
                return false;
            }
        }
        if self.connectivity == 2 && !is_biconnected(g) {
            return false;
        }
        if self.diameter.is_some() || self.radius.is_some() {
            let e = eccentricity_profile(g).expect("generated graphs are connected");
            if self.diameter.is_some_and(|d| d != e.diameter) || self.radius.is_some_and(|r| r != e.radius) {
                return false;
            }
        }
        if let Some(p) = self.block_count {
            if blocks(g).len() != p {
                return false;
            }
        }
        true
    }
}
