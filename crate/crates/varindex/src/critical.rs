use wiener_core::{invalid, Error, Result};

use crate::profile::IndexProfile;

pub const DEFAULT_GRID: usize = 4096;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// |h| below this fraction of Sz^α + W^α counts as zero.
pub const RELATIVE_ZERO: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanParams {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
    pub tolerance: f64,
}

impl Default for ScanParams {
    fn default() -> Self {
        ScanParams { lo: 0.0, hi: 4.0, steps: DEFAULT_GRID, tolerance: DEFAULT_TOLERANCE }
    }
}

/// A sign change of h between `lo` and `hi`, narrowed to `tolerance`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub h_lo: f64,
    pub h_hi: f64,
}

impl RootBracket {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriticalScan {
    pub params: ScanParams,
    /// One bracket per sign change; at least this many roots exist.
    pub brackets: Vec<RootBracket>,
}

impl CriticalScan {
    pub fn sign_changes(&self) -> usize {
        self.brackets.len()
    }

    pub fn roots(&self) -> Vec<f64> {
        self.brackets.iter().map(RootBracket::midpoint).collect()
    }
}

fn sign(p: &IndexProfile, alpha: f64) -> (i8, f64) {
    let h = p.h(alpha);
    if h.abs() <= RELATIVE_ZERO * p.magnitude(alpha) {
        (0, h)
    } else if h > 0.0 {
        (1, h)
    } else {
        (-1, h)
    }
}

/// Uniform grid scan of h(α) = Sz^α − W^α on [lo, hi]. Grid points where h
/// is numerically zero are skipped, so a touch without crossing does not
/// count. Each bracket is bisected down to the tolerance.
pub fn critical_exponents(p: &IndexProfile, params: ScanParams) -> Result<CriticalScan> {
    if p.is_degenerate() {
        return Err(Error::Degenerate("complete graph: Sz^α = W^α for every α"));
    }
    if !(params.lo < params.hi) || params.steps == 0 || !(params.tolerance > 0.0) || !params.hi.is_finite() {
        return Err(invalid(format!("scan parameters {params:?}")));
    }
    let step = (params.hi - params.lo) / params.steps as f64;
    let mut last: Option<(f64, i8, f64)> = None;
    let mut brackets = vec![];
    for i in 0..=params.steps {
        let a = if i == params.steps { params.hi } else { params.lo + step * i as f64 };
        let (s, h) = sign(p, a);
        if s == 0 {
            continue;
        }
        if let Some((la, ls, lh)) = last {
            if ls != s {
                brackets.push(bisect(p, la, ls, lh, a, h, params.tolerance));
            }
        }
        last = Some((a, s, h));
    }
    Ok(CriticalScan { params, brackets })
}

fn bisect(p: &IndexProfile, mut lo: f64, s_lo: i8, mut h_lo: f64, mut hi: f64, mut h_hi: f64, tol: f64) -> RootBracket {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let (s, h) = sign(p, mid);
        if s == 0 {
            // Numerically on the root: shrink around it.
            return RootBracket { lo: mid - tol / 2.0, hi: mid + tol / 2.0, h_lo: h, h_hi: h };
        }
        if s == s_lo {
            lo = mid;
            h_lo = h;
        } else {
            hi = mid;
            h_hi = h;
        }
    }
    RootBracket { lo, hi, h_lo, h_hi }
}
