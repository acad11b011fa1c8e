//! Integer-valued univariate polynomials in the binomial basis.
//!
//! A [`NumericalPolynomial`] is stored by its standard coefficients: the
//! integers `a_i` with `v(s) = Σ a_i·C(s+i, i)`. In this basis every
//! integer-valued polynomial has integer coordinates, the backward difference
//! `Δ₁v(s) = v(s) − v(s−1)` just drops `a_0`, and equality is structural.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Generalized binomial coefficient `C(x, k) = x(x−1)…(x−k+1)/k!` for any integer `x`.
pub fn binom(x: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(x, i) is an integer at every step, so the division is exact.
        acc = acc * (x - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// An integer-valued polynomial in one variable `s`.
///
/// Coefficients are kept in ascending order (`coeffs[i]` multiplies
/// `C(s+i, i)`) with no trailing zeros; the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NumericalPolynomial {
    coeffs: Vec<BigInt>,
}

impl NumericalPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_ascending(vec![c.into()])
    }

    /// The basis polynomial `C(s+d, d)`.
    pub fn basis(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        Self { coeffs }
    }

    /// Builds from `(a_0, …, a_d)`.
    pub fn from_ascending(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds from the standard coefficient list `(a_d, …, a_0)`.
    pub fn from_standard_coeffs(desc: Vec<BigInt>) -> Self {
        let mut coeffs = desc;
        coeffs.reverse();
        Self::from_ascending(coeffs)
    }

    /// Convenience constructor from small integers `(a_d, …, a_0)`.
    pub fn from_i64s(desc: &[i64]) -> Self {
        Self::from_standard_coeffs(desc.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Standard coefficients `(a_d, …, a_0)`; empty for zero.
    pub fn standard_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn ascending(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Standard coefficient `a_i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Leading standard coefficient `a_d`, zero for the zero polynomial.
    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, s: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * binom(&(s + BigInt::from(i)), i))
            .sum()
    }

    pub fn eval_i64(&self, s: i64) -> BigInt {
        self.eval(&BigInt::from(s))
    }

    /// Interpolates the unique polynomial of degree `≤ values.len() − 1` taking
    /// `values[i]` at `s = i`.
    pub fn from_values(values: &[BigInt]) -> Self {
        if values.is_empty() {
            return Self::zero();
        }
        // Newton forward differences at s = 0.
        let mut newton = Vec::with_capacity(values.len());
        let mut row = values.to_vec();
        while !row.is_empty() {
            newton.push(row[0].clone());
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        let newton_eval = |s: &BigInt| -> BigInt {
            newton
                .iter()
                .enumerate()
                .map(|(k, c)| c * binom(s, k))
                .sum()
        };
        // a_k = (Δ₁ᵏ p)(−1) = Σ_j (−1)^j C(k, j) p(−1−j).
        let d = values.len() - 1;
        let at_negative: Vec<BigInt> = (0..=d)
            .map(|j| newton_eval(&BigInt::from(-1 - j as i64)))
            .collect();
        let coeffs = (0..=d)
            .map(|k| {
                (0..=k)
                    .map(|j| {
                        let term = binom(&BigInt::from(k), j) * &at_negative[j];
                        if j % 2 == 0 {
                            term
                        } else {
                            -term
                        }
                    })
                    .sum()
            })
            .collect();
        Self::from_ascending(coeffs)
    }

    /// Interpolation from rational samples; fails unless the interpolant is a
    /// numerical polynomial.
    pub fn from_rational_values(values: &[BigRational]) -> Result<Self> {
        let mut newton = Vec::with_capacity(values.len());
        let mut row = values.to_vec();
        while !row.is_empty() {
            newton.push(row[0].clone());
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        // Integer Newton coefficients characterise integer-valued polynomials.
        if newton.iter().any(|c| !c.is_integer()) {
            return Err(Error::NonIntegralCoefficients);
        }
        let ints: Vec<BigInt> = (0..values.len())
            .map(|s| {
                newton
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c.to_integer() * binom(&BigInt::from(s), k))
                    .sum()
            })
            .collect();
        Ok(Self::from_values(&ints))
    }

    /// `q(s) = p(s + j)`, recomputed by interpolating `d + 1` shifted samples.
    pub fn shift(&self, j: impl Into<BigInt>) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let j = j.into();
        let samples: Vec<BigInt> = (0..=d).map(|i| self.eval(&(&j + BigInt::from(i)))).collect();
        Self::from_values(&samples)
    }

    /// Backward difference `Δ₁p(s) = p(s) − p(s−1)`.
    pub fn delta1(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_ascending(self.coeffs[1..].to_vec())
    }

    /// `Δ₁` applied `times` times.
    pub fn delta1_pow(&self, times: usize) -> Self {
        if times >= self.coeffs.len() {
            return Self::zero();
        }
        Self::from_ascending(self.coeffs[times..].to_vec())
    }

    /// Coefficients in the power basis, ascending: `p(s) = Σ c_k s^k`.
    pub fn ordinary_coeffs(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // C(s+i, i) = Π_{t=1..i} (s + t) / i!
            let mut poly = vec![BigRational::one()];
            for t in 1..=i {
                let mut next = vec![BigRational::zero(); poly.len() + 1];
                for (k, c) in poly.iter().enumerate() {
                    next[k] += c * BigRational::from_integer(BigInt::from(t));
                    next[k + 1] += c;
                }
                poly = next;
            }
            let scale = BigRational::new(a.clone(), factorial(i));
            for (k, c) in poly.into_iter().enumerate() {
                out[k] += c * &scale;
            }
        }
        out
    }

    /// `a_d*C(s+d,d) + … + a_0`.
    pub fn render_binomial(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let body = if i == 0 {
                a.abs().to_string()
            } else {
                format!("{}*C(s+{i},{i})", a.abs())
            };
            parts.push((a.is_negative(), body));
        }
        join_signed(parts)
    }

    /// Power-basis rendering with exact rational coefficients, e.g. `1/2*s^2 + 3/2*s + 1`.
    pub fn render_expanded(&self) -> String {
        let coeffs = self.ordinary_coeffs();
        if coeffs.iter().all(Zero::is_zero) {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match k {
                0 => mag.to_string(),
                _ => {
                    let var = if k == 1 { "s".to_string() } else { format!("s^{k}") };
                    if mag.is_one() {
                        var
                    } else {
                        format!("{mag}*{var}")
                    }
                }
            };
            parts.push((c.is_negative(), body));
        }
        join_signed(parts)
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn join_signed(parts: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (idx, (neg, body)) in parts.into_iter().enumerate() {
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for NumericalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_binomial())
    }
}

fn zip_with(p: &NumericalPolynomial, q: &NumericalPolynomial, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> NumericalPolynomial {
    let zero = BigInt::zero();
    let len = p.coeffs.len().max(q.coeffs.len());
    let coeffs = (0..len)
        .map(|i| op(p.coeffs.get(i).unwrap_or(&zero), q.coeffs.get(i).unwrap_or(&zero)))
        .collect();
    NumericalPolynomial::from_ascending(coeffs)
}

impl Add for &NumericalPolynomial {
    type Output = NumericalPolynomial;
    fn add(self, rhs: Self) -> NumericalPolynomial {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &NumericalPolynomial {
    type Output = NumericalPolynomial;
    fn sub(self, rhs: Self) -> NumericalPolynomial {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Add for NumericalPolynomial {
    type Output = NumericalPolynomial;
    fn add(self, rhs: Self) -> NumericalPolynomial {
        &self + &rhs
    }
}

impl Sub for NumericalPolynomial {
    type Output = NumericalPolynomial;
    fn sub(self, rhs: Self) -> NumericalPolynomial {
        &self - &rhs
    }
}

impl Neg for &NumericalPolynomial {
    type Output = NumericalPolynomial;
    fn neg(self) -> NumericalPolynomial {
        NumericalPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl std::iter::Sum for NumericalPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

/// Scalar multiple by an integer.
impl std::ops::Mul<&BigInt> for &NumericalPolynomial {
    type Output = NumericalPolynomial;
    fn mul(self, rhs: &BigInt) -> NumericalPolynomial {
        NumericalPolynomial::from_ascending(self.coeffs.iter().map(|c| c * rhs).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    #[serde(with = "crate::serde_big::vec")]
    standard_coeffs: Vec<BigInt>,
}

impl Serialize for NumericalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { standard_coeffs: self.standard_coeffs() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        Ok(Self::from_standard_coeffs(wire.standard_coeffs))
    }
}
