use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A term `x^exponent · f_component` of the free module `F = D^n`.
///
/// `component` is zero-based here; file formats use one-based indices.
/// The `Ord` impl is the standard ranking (see [`Ranking`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleTerm {
    pub exponent: Vec<u32>,
    pub component: usize,
}

impl ModuleTerm {
    pub fn new(exponent: Vec<u32>, component: usize) -> Self {
        Self { exponent, component }
    }

    pub fn ord(&self) -> u32 {
        self.exponent.iter().sum()
    }

    /// `θ · self`.
    pub fn times(&self, monomial: &[u32]) -> ModuleTerm {
        ModuleTerm {
            exponent: self.exponent.iter().zip(monomial).map(|(a, b)| a + b).collect(),
            component: self.component,
        }
    }

    /// The monomial `θ` with `θ · divisor = self`, if any.
    pub fn quotient(&self, divisor: &ModuleTerm) -> Option<Vec<u32>> {
        if self.component != divisor.component {
            return None;
        }
        self.exponent
            .iter()
            .zip(&divisor.exponent)
            .map(|(a, b)| a.checked_sub(*b))
            .collect()
    }

    pub fn divides(&self, other: &ModuleTerm) -> bool {
        other.quotient(self).is_some()
    }

    /// Least common multiple of two terms in the same component.
    pub fn lcm(&self, other: &ModuleTerm) -> Option<ModuleTerm> {
        (self.component == other.component).then(|| ModuleTerm {
            exponent: self.exponent.iter().zip(&other.exponent).map(|(a, b)| *a.max(b)).collect(),
            component: self.component,
        })
    }

    /// True when the two exponent vectors share no variable.
    pub fn coprime(&self, other: &ModuleTerm) -> bool {
        self.exponent.iter().zip(&other.exponent).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn render(&self, vars: &[String]) -> String {
        let mut factors: Vec<String> = Vec::new();
        for (i, &e) in self.exponent.iter().enumerate() {
            let name = vars.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
            match e {
                0 => {}
                1 => factors.push(name),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        factors.push(format!("f{}", self.component + 1));
        factors.join("*")
    }
}

impl Ord for ModuleTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ord()
            .cmp(&other.ord())
            .then(self.component.cmp(&other.component))
            // Lexicographic with x1 > x2 > … > xm.
            .then_with(|| self.exponent.cmp(&other.exponent))
    }
}

impl PartialOrd for ModuleTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ModuleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankingKind {
    /// Total order first, then component index, then lex with `x1 > … > xm`.
    Standard,
}

/// A ranking on the terms of `F`; only the standard (orderly) one is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ranking {
    pub kind: RankingKind,
    pub m: usize,
    pub n: usize,
}

impl Ranking {
    pub fn standard(m: usize, n: usize) -> Self {
        Self { kind: RankingKind::Standard, m, n }
    }

    pub fn compare(&self, a: &ModuleTerm, b: &ModuleTerm) -> Result<Ordering> {
        for t in [a, b] {
            if t.exponent.len() != self.m || t.component >= self.n {
                return Err(Error::DimensionMismatch(format!(
                    "term {t} does not live in a rank-{} module over {} variables",
                    self.n, self.m
                )));
            }
        }
        Ok(match self.kind {
            RankingKind::Standard => a.cmp(b),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(exp: &[u32], comp: usize) -> ModuleTerm {
        ModuleTerm::new(exp.to_vec(), comp)
    }

    #[test]
    fn standard_ranking_examples() {
        let r = Ranking::standard(2, 2);
        assert_eq!(r.compare(&t(&[1, 1], 0), &t(&[3, 0], 1)).unwrap(), Ordering::Less);
        assert_eq!(r.compare(&t(&[2, 0], 0), &t(&[0, 2], 1)).unwrap(), Ordering::Less);
        assert_eq!(r.compare(&t(&[1, 2], 0), &t(&[2, 1], 0)).unwrap(), Ordering::Less);
        assert!(r.compare(&t(&[1, 2, 0], 0), &t(&[2, 1], 0)).is_err());
        assert!(r.compare(&t(&[1, 2], 2), &t(&[2, 1], 0)).is_err());
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = t(&[1, 2], 0);
        let b = t(&[3, 1], 0);
        assert_eq!(a.lcm(&b), Some(t(&[3, 2], 0)));
        assert_eq!(t(&[3, 2], 0).quotient(&a), Some(vec![2, 0]));
        assert!(!a.divides(&b));
        assert!(a.lcm(&t(&[0, 0], 1)).is_none());
        assert!(t(&[2, 0], 0).coprime(&t(&[0, 3], 0)));
    }

    fn arb_term() -> impl Strategy<Value = ModuleTerm> {
        (prop::collection::vec(0u32..=4, 3), 0usize..2).prop_map(|(e, c)| ModuleTerm::new(e, c))
    }

    proptest! {
        #[test]
        fn ranking_is_orderly_and_multiplicative(
            a in arb_term(),
            b in arb_term(),
            theta in prop::collection::vec(0u32..=3, 3),
        ) {
            if a.ord() < b.ord() {
                prop_assert!(a < b);
            }
            let (ta, tb) = (a.times(&theta), b.times(&theta));
            prop_assert_eq!(a.cmp(&b), ta.cmp(&tb));
            prop_assert!(a <= a.times(&theta));
        }
    }
}
