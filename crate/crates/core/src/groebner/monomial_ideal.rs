use std::fmt;

use crate::error::{Error, Result};
use crate::polyarith::{Monomial, Ring};

/// Monomial ideal stored by its minimal generators.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes the given generators; the surviving order follows the input order.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let all: Vec<Monomial> = gens.into_iter().collect();
        if let Some(m) = all.iter().find(|m| m.nvars() != nvars) {
            return Err(Error::Dimension {
                expected: nvars,
                found: m.nvars(),
            });
        }
        let mut minimal: Vec<Monomial> = Vec::new();
        for (i, m) in all.iter().enumerate() {
            let redundant = all.iter().enumerate().any(|(j, d)| {
                j != i && d.divides(m) && (d != m || j < i)
            });
            if !redundant {
                minimal.push(m.clone());
            }
        }
        Ok(MonomialIdeal { nvars, gens: minimal })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_proper(&self) -> bool {
        !self.gens.iter().any(Monomial::is_one)
    }

    /// Same generator set, ignoring order.
    pub fn same_generators(&self, other: &MonomialIdeal) -> bool {
        self.nvars == other.nvars
            && self.gens.len() == other.gens.len()
            && self.gens.iter().all(|g| other.gens.contains(g))
    }

    pub fn display(&self, ring: &Ring) -> String {
        let gs: Vec<String> = self.gens.iter().map(|m| ring.format_monomial(m)).collect();
        format!("<{}>", gs.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(&Ring::xs(self.nvars)))
    }
}

/// Krull dimension of `R / M`: the largest variable subset `S` such that no
/// generator is supported inside `S`.
pub fn krull_dim_monomial(m: &MonomialIdeal) -> Result<usize> {
    if !m.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let n = m.nvars;
    if n > 24 {
        return Err(Error::Range(format!("{n} variables is too many for subset search")));
    }
    let masks: Vec<u32> = m
        .gens
        .iter()
        .map(|g| g.support().fold(0u32, |acc, i| acc | 1 << i))
        .collect();
    let mut best = 0;
    for s in 0u32..(1 << n) {
        let size = s.count_ones() as usize;
        if size > best && masks.iter().all(|&g| g & !s != 0) {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(ring: &Ring, s: &str) -> Monomial {
        ring.parse_monomial(s).unwrap()
    }

    #[test]
    fn minimal_generators() {
        let r = Ring::xs(3);
        let m = MonomialIdeal::new(3, ["x1^2", "x1^2*x2", "x2", "x2", "x3^2*x2"].map(|s| mono(&r, s))).unwrap();
        assert_eq!(m.generators(), &[mono(&r, "x1^2"), mono(&r, "x2")]);
        assert!(m.contains(&mono(&r, "x1^3*x3")));
        assert!(!m.contains(&mono(&r, "x1*x3^5")));
    }

    #[test]
    fn krull_dimensions() {
        let r2 = Ring::xs(2);
        assert_eq!(krull_dim_monomial(&MonomialIdeal::new(2, [mono(&r2, "x1")]).unwrap()).unwrap(), 1);
        let r = Ring::xs(3);
        let artinian = MonomialIdeal::new(3, ["x1^2", "x2^2", "x3^3"].map(|s| mono(&r, s))).unwrap();
        assert_eq!(krull_dim_monomial(&artinian).unwrap(), 0);
        let line = MonomialIdeal::new(3, ["x1*x2", "x1*x3", "x2*x3"].map(|s| mono(&r, s))).unwrap();
        assert_eq!(krull_dim_monomial(&line).unwrap(), 1);
        assert_eq!(krull_dim_monomial(&MonomialIdeal::new(3, []).unwrap()).unwrap(), 3);
        let unit = MonomialIdeal::new(3, [Monomial::one(3)]).unwrap();
        assert_eq!(krull_dim_monomial(&unit), Err(Error::ImproperIdeal));
    }
}
