//! Symbolic typical-dimension bound for an arbitrary codimension.
//!
//! After `m − 1 − τ` applications of `Δ₁`, the template for an ideal with one
//! generator of order `e` says that
//!
//! ```text
//! u(s) = C(s+e+τ, τ) − C(s+τ, τ) = w′(s) + τ_d
//! ```
//!
//! where `w′` is a dimension polynomial of degree `τ − 1`, so it is
//! `reconstruct(b_{τ−1}, …, b_0)`. Matching the coefficient of `C(s+i, i)`
//! for `i = τ−1, …, 1` pins each `b_i` in turn. What is left is the constant
//! `τ_d = u − w′`, maximized by `b_0 = 0`.

use crate::binomial::NumericalPolynomial;
use crate::error::{Error, Result};
use crate::minimizing::{minimizing_coefficients, reconstruct, MinimizingCoefficients};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// One forced coefficient and what remains after fixing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stage {
    pub subscript: usize,
    #[serde(with = "crate::serde_big")]
    pub coefficient: BigInt,
    /// `u − w′` with the coefficients fixed so far; degree `< subscript`.
    pub remainder: NumericalPolynomial,
}

/// The full trace of a derivation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Derivation {
    pub target: NumericalPolynomial,
    /// `b_{τ−1}, …, b_0`.
    #[serde(with = "crate::serde_big::vec")]
    pub b: Vec<BigInt>,
    /// `c_{τ−1}, …, c_0` with `c_i = Σ_{j ≥ i} b_j`.
    #[serde(with = "crate::serde_big::vec")]
    pub c: Vec<BigInt>,
    pub stages: Vec<Stage>,
}

impl Derivation {
    pub fn minimizing(&self) -> MinimizingCoefficients {
        MinimizingCoefficients::new(self.b.clone())
    }
}

/// `C(s+e+τ, τ) − C(s+τ, τ)`.
pub fn target_polynomial(codim: usize, e: u64) -> NumericalPolynomial {
    let top = NumericalPolynomial::basis(codim);
    &top.shift(BigInt::from(e)) - &top
}

/// Runs the derivation and returns `(τ_d, trace)`.
pub fn derive(codim: usize, e: u64) -> Result<(BigInt, Derivation)> {
    if codim == 0 {
        return Err(Error::InvalidInput("the symbolic derivation needs codimension ≥ 1".into()));
    }
    if e == 0 {
        return Err(Error::InvalidInput("the order e must be positive".into()));
    }
    let target = target_polynomial(codim, e);
    // b[pos] holds b_{codim−1−pos}.
    let mut b = vec![BigInt::zero(); codim];
    let remainder_for = |b: &[BigInt]| -> NumericalPolynomial {
        &target - &reconstruct(&MinimizingCoefficients::new(b.to_vec()))
    };
    let mut stages = Vec::with_capacity(codim);
    for subscript in (1..codim).rev() {
        let pos = codim - 1 - subscript;
        b[pos] = BigInt::zero();
        let at_zero = remainder_for(&b).coeff(subscript);
        b[pos] = BigInt::from(1);
        let slope = remainder_for(&b).coeff(subscript) - &at_zero;
        if slope.is_zero() {
            return Err(Error::NonForcedCoefficient { index: subscript });
        }
        let (value, rest) = (-&at_zero).div_mod_floor(&slope);
        if !rest.is_zero() {
            return Err(Error::NonForcedCoefficient { index: subscript });
        }
        b[pos] = value.clone();
        let remainder = remainder_for(&b);
        if remainder.degree().is_some_and(|d| d >= subscript) {
            return Err(Error::NonForcedCoefficient { index: subscript });
        }
        stages.push(Stage { subscript, coefficient: value, remainder });
    }
    let remainder = remainder_for(&b);
    if remainder.degree().is_some_and(|d| d > 0) {
        return Err(Error::NonForcedCoefficient { index: 0 });
    }
    let bound = remainder.coeff(0);
    stages.push(Stage { subscript: 0, coefficient: BigInt::zero(), remainder });

    let mut c = Vec::with_capacity(codim);
    let mut running = BigInt::zero();
    for value in &b {
        running += value;
        c.push(running.clone());
    }
    Ok((bound, Derivation { target, b, c, stages }))
}

/// Checks produced alongside a derivation: sign conditions and the
/// independent route through [`minimizing_coefficients`] of the target,
/// whose last entry must be the bound and the others the forced `b_i`.
pub fn derivation_flags(derivation: &Derivation, bound: &BigInt) -> Vec<String> {
    let mut flags = Vec::new();
    let len = derivation.b.len();
    for (pos, value) in derivation.b.iter().enumerate() {
        if value.is_negative() {
            flags.push(format!("forced coefficient b_{} = {value} is negative", len - 1 - pos));
        }
    }
    if bound.is_negative() {
        flags.push(format!("derived bound {bound} is negative"));
    }
    match minimizing_coefficients(&derivation.target) {
        Ok(direct) if agrees(direct.as_slice(), &derivation.b, bound) => {}
        Ok(direct) => {
            flags.push(format!("minimizing coefficients of the target are {direct}, derivation gave {}", derivation.minimizing()))
        }
        Err(err) => flags.push(format!("minimizing coefficients of the target failed: {err}")),
    }
    flags
}

fn agrees(direct: &[BigInt], forced: &[BigInt], bound: &BigInt) -> bool {
    match (direct.split_last(), forced.split_last()) {
        (Some((last, head)), Some((_, forced_head))) => last == bound && head == forced_head,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bound(codim: usize, e: u64) -> BigInt {
        derive(codim, e).unwrap().0
    }

    #[test]
    fn low_codimensions() {
        for e in 1..=10u64 {
            assert_eq!(bound(1, e), BigInt::from(e));
            assert_eq!(bound(2, e), BigInt::from(e * e));
        }
    }

    #[test]
    fn frozen_values() {
        let expect: [(usize, [u64; 5]); 3] = [
            (3, [2, 18, 72, 200, 450]),
            (4, [6, 246, 3216, 22800, 110550]),
            (5, [36, 34056, 5345316, 263180100, 6145374600]),
        ];
        for (codim, values) in expect {
            for (i, v) in values.iter().enumerate() {
                assert_eq!(bound(codim, i as u64 + 1), BigInt::from(*v), "codim {codim}, e = {}", i + 1);
            }
        }
        assert_eq!(bound(6, 1), BigInt::from(876));
        assert_eq!(bound(6, 2), BigInt::from(585852156u64));
        assert_eq!(bound(6, 3), BigInt::from(14297856407496u64));
    }

    #[test]
    fn trace_shape() {
        let (_, d) = derive(3, 2).unwrap();
        assert_eq!(d.b.len(), 3);
        assert_eq!(d.b[0], BigInt::from(2));
        assert_eq!(d.b[2], BigInt::zero());
        assert_eq!(d.c[0], d.b[0]);
        assert_eq!(d.c[2], d.b.iter().sum::<BigInt>());
        assert_eq!(d.stages.len(), 3);
        for st in &d.stages {
            assert!(st.remainder.degree().is_none_or(|deg| deg < st.subscript.max(1)));
        }
    }

    #[test]
    fn agrees_with_direct_minimizing_coefficients() {
        for codim in 1..=6 {
            for e in 1..=4 {
                let (bound, d) = derive(codim, e).unwrap();
                assert!(derivation_flags(&d, &bound).is_empty(), "codim {codim}, e = {e}");
            }
        }
    }

    #[test]
    fn rejects_degenerate_input() {
        assert!(derive(0, 1).is_err());
        assert!(derive(2, 0).is_err());
    }
}
