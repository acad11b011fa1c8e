//! Minimizing coefficients and membership in the class `W` of Kolchin
//! dimension polynomials.
//!
//! For `ω` of degree `d > 0` with leading standard coefficient `a_d`, one
//! step of the construction forms
//!
//! ```text
//! v(s) = ω(s + a_d) − C(s+1+d+a_d, d+1) + C(s+d+1, d+1)
//! ```
//!
//! which has degree `< d`, and sets `b(ω) = (a_d, 0, …, 0, b(v))`. A
//! numerical polynomial is a dimension polynomial iff all of its minimizing
//! coefficients are nonnegative.

use crate::binomial::NumericalPolynomial;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The sequence `(b_d, …, b_0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinimizingCoefficients {
    #[serde(with = "crate::serde_big::vec")]
    b: Vec<BigInt>,
}

impl MinimizingCoefficients {
    /// Wraps `(b_d, …, b_0)`; an empty list is read as `(0)`.
    pub fn new(desc: Vec<BigInt>) -> Self {
        if desc.is_empty() {
            return Self { b: vec![BigInt::zero()] };
        }
        Self { b: desc }
    }

    pub fn from_i64s(desc: &[i64]) -> Self {
        Self::new(desc.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// `(b_d, …, b_0)`.
    pub fn as_slice(&self) -> &[BigInt] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    /// `b_i` by subscript.
    pub fn get(&self, i: usize) -> Option<&BigInt> {
        self.b.len().checked_sub(i + 1).map(|pos| &self.b[pos])
    }
}

impl fmt::Display for MinimizingCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.b.iter().map(BigInt::to_string).collect();
        write!(f, "[{}]", items.join(", "))
    }
}

/// One step of the construction: returns `a_d` and the lower-degree remainder `v`.
pub fn minimizing_step(omega: &NumericalPolynomial) -> Result<(BigInt, NumericalPolynomial)> {
    let d = omega.degree().unwrap_or(0);
    let lead = omega.leading();
    let top = NumericalPolynomial::basis(d + 1);
    let v = &(&omega.shift(lead.clone()) - &top.shift(lead.clone())) + &top;
    match v.degree() {
        Some(k) if k >= d => Err(Error::DegreeNotDropped { degree: d, remainder: k }),
        _ => Ok((lead, v)),
    }
}

/// Computes `b(ω)`. The zero polynomial gets `(0)`.
pub fn minimizing_coefficients(omega: &NumericalPolynomial) -> Result<MinimizingCoefficients> {
    let Some(d) = omega.degree() else {
        return Ok(MinimizingCoefficients::new(vec![BigInt::zero()]));
    };
    let mut out = Vec::with_capacity(d + 1);
    let mut current = omega.clone();
    let mut current_deg = d;
    while current_deg > 0 {
        let (lead, v) = minimizing_step(&current)?;
        out.push(lead);
        let next_deg = v.degree().unwrap_or(0);
        out.extend(std::iter::repeat_n(BigInt::zero(), current_deg - 1 - next_deg));
        current = v;
        current_deg = next_deg;
    }
    out.push(current.coeff(0));
    Ok(MinimizingCoefficients::new(out))
}

/// Inverse of [`minimizing_coefficients`]:
/// `ω(t) = v(t − a_d) + C(t+1+d, d+1) − C(t+d+1−a_d, d+1)`, outward from the
/// innermost constant.
///
/// Leading zeros (which no valid sequence of length `> 1` has) are dropped.
pub fn reconstruct(b: &MinimizingCoefficients) -> NumericalPolynomial {
    let coeffs = b.as_slice();
    let start = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len().saturating_sub(1));
    reconstruct_tail(&coeffs[start..])
}

fn reconstruct_tail(desc: &[BigInt]) -> NumericalPolynomial {
    match desc {
        [] => NumericalPolynomial::zero(),
        [c] => NumericalPolynomial::constant(c.clone()),
        [lead, rest @ ..] => {
            let d = rest.len();
            let inner_start = rest.iter().position(|c| !c.is_zero()).unwrap_or(rest.len() - 1);
            let v = reconstruct_tail(&rest[inner_start..]);
            let top = NumericalPolynomial::basis(d + 1);
            &(&v.shift(-lead) + &top) - &top.shift(-lead)
        }
    }
}

/// Outcome of the `W` membership test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WMembership {
    pub minimizing: MinimizingCoefficients,
    pub in_w: bool,
    /// First negative coefficient as `(subscript i, b_i)`, scanning from `b_d` down.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<NegativeCoefficient>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeCoefficient {
    pub index: usize,
    #[serde(with = "crate::serde_big")]
    pub value: BigInt,
}

/// Decides whether `ω` is a Kolchin dimension polynomial.
pub fn is_in_w(omega: &NumericalPolynomial) -> Result<WMembership> {
    let minimizing = minimizing_coefficients(omega)?;
    let len = minimizing.len();
    let witness = minimizing
        .as_slice()
        .iter()
        .enumerate()
        .find(|(_, v)| v.is_negative())
        .map(|(pos, v)| NegativeCoefficient { index: len - 1 - pos, value: v.clone() });
    Ok(WMembership { in_w: witness.is_none(), minimizing, witness })
}
