use wiener_core::{blowup, invalid, Graph, Result};

use crate::*;

/// A family name with integer parameters, e.g. `theta 3 2 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(name: impl Into<String>, params: &[usize]) -> Self {
        FamilySpec { name: name.into(), params: params.to_vec() }
    }

    /// Parses `name:p1,p2,...` (or a bare name).
    pub fn parse(text: &str) -> Result<Self> {
        let (name, rest) = text.split_once(':').unwrap_or((text, ""));
        let params = rest
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<usize>().map_err(|e| invalid(format!("parameter {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec::new(name.trim(), &params))
    }

    pub fn build(&self) -> Result<Graph> {
        let p = &self.params;
        let want = |k: usize| {
            if p.len() == k {
                Ok(())
            } else {
                Err(invalid(format!("{} takes {k} parameter(s), got {}", self.name, p.len())))
            }
        };
        match self.name.as_str() {
            "broom" | "T" => want(2).and_then(|_| broom_t(p[0], p[1])),
            "cubic_l" | "L" => want(1).and_then(|_| cubic_l(p[0])),
            "theta" => want(3).and_then(|_| theta(p[0], p[1], p[2])),
            "dumbbell" => want(3).and_then(|_| dumbbell(p[0], p[1], p[2])),
            "barbell" => want(5).and_then(|_| barbell(p[0], (p[1], p[2]), (p[3], p[4]))),
            "double_broom" => want(3).and_then(|_| double_broom(p[0], p[1], p[2])),
            "k_n_c" => want(2).and_then(|_| k_n_c(p[0], p[1])),
            "t_n" => want(1).and_then(|_| t_n(p[0])),
            "t_n_prime" => want(1).and_then(|_| t_n_prime(p[0])),
            "h" => want(3).and_then(|_| h_npq(p[0], p[1], p[2])),
            "h_plus" => want(1).and_then(|_| h_plus(p[0])),
            "g_nrs" => want(3).and_then(|_| g_nrs(p[0], p[1], p[2])),
            "g_kl" => want(2).and_then(|_| cambie_haslegrave(p[0], p[1])),
            "soltes_b" | "B" => want(1).and_then(|_| soltes_b(p[0])),
            "blowup_cycle" => match p.split_first() {
                Some((&n, sizes)) => blowup(&cycle(n)?, sizes),
                None => Err(invalid("blowup_cycle needs n and sizes")),
            },
            name => standard(name, p),
        }
    }
}
