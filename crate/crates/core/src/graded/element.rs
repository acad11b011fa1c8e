use super::term::ModuleTerm;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A finite `Q`-linear combination of module terms; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ModuleElement {
    terms: BTreeMap<ModuleTerm, BigRational>,
}

impl ModuleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ModuleTerm, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (t, c) in terms {
            out.add_term(t, c);
        }
        out
    }

    /// Convenience for tests and fixtures: integer coefficients.
    pub fn from_int_terms(terms: &[(&[u32], usize, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|(e, c, v)| (ModuleTerm::new(e.to_vec(), *c), BigRational::from_integer(BigInt::from(*v)))),
        )
    }

    pub fn add_term(&mut self, term: ModuleTerm, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(term.clone()).or_insert_with(BigRational::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&term);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ModuleTerm, &BigRational)> {
        self.terms.iter()
    }

    /// The maximal term under the standard ranking.
    pub fn leader(&self) -> Result<&ModuleTerm> {
        self.terms.keys().next_back().ok_or(Error::ZeroElement)
    }

    pub fn leading_coeff(&self) -> Result<&BigRational> {
        self.terms.values().next_back().ok_or(Error::ZeroElement)
    }

    /// Common order of all terms, or `None` if the element is zero or not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut orders = self.terms.keys().map(ModuleTerm::ord);
        let first = orders.next()?;
        orders.all(|o| o == first).then_some(first)
    }

    /// Highest order among terms in component `j`.
    pub fn order_in(&self, component: usize) -> Option<u32> {
        self.terms.keys().filter(|t| t.component == component).map(ModuleTerm::ord).max()
    }

    pub fn times_monomial(&self, monomial: &[u32]) -> ModuleElement {
        ModuleElement { terms: self.terms.iter().map(|(t, c)| (t.times(monomial), c.clone())).collect() }
    }

    pub fn scaled(&self, factor: &BigRational) -> ModuleElement {
        if factor.is_zero() {
            return Self::zero();
        }
        ModuleElement { terms: self.terms.iter().map(|(t, c)| (t.clone(), c * factor)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> ModuleElement {
        match self.leading_coeff() {
            Ok(lc) if !lc.is_one() => self.scaled(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// `self −= factor · θ · other`.
    pub fn sub_multiple(&mut self, other: &ModuleElement, factor: &BigRational, monomial: &[u32]) {
        for (t, c) in &other.terms {
            self.add_term(t.times(monomial), -(c * factor));
        }
    }

    pub fn render(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (t, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&t.render(vars));
        }
        out
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}
