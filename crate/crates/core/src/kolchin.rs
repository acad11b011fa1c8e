//! Kolchin dimension polynomials of finite subsets `E ⊂ N₀^m`.
//!
//! `ω_E(s)` counts the points `x ∈ N₀^m` with `ord x ≤ s` that dominate no
//! row of `E` (componentwise order). The counting function agrees with a
//! numerical polynomial for all large `s`.
//!
//! The evaluator is inclusion–exclusion over the canonical antichain:
//!
//! ```text
//! ω_E(s) = Σ_{J ⊆ E} (−1)^{|J|} C(s + m − ord(∨J), m)
//! ```
//!
//! where `∨J` is the componentwise maximum. Each summand equals the truncated
//! count as soon as `s ≥ ord(∨J) − m`, so `ord(∨E)` is a (conservative)
//! threshold beyond which the polynomial and the count agree.

use crate::binomial::NumericalPolynomial;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Canonical antichains larger than this are evaluated by interpolating brute counts.
pub const MAX_INCLUSION_EXCLUSION_ROWS: usize = 20;

/// A finite set of exponent vectors, one per row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixWire", into = "MatrixWire")]
pub struct ExponentMatrix {
    m: usize,
    rows: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    m: usize,
    rows: Vec<Vec<u64>>,
}

impl TryFrom<MatrixWire> for ExponentMatrix {
    type Error = Error;
    fn try_from(w: MatrixWire) -> Result<Self> {
        ExponentMatrix::new(w.m, w.rows)
    }
}

impl From<ExponentMatrix> for MatrixWire {
    fn from(e: ExponentMatrix) -> Self {
        MatrixWire { m: e.m, rows: e.rows }
    }
}

impl ExponentMatrix {
    pub fn new(m: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("matrix needs at least one column".into()));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != m) {
            return Err(Error::DimensionMismatch(format!(
                "row {i} has {} entries, expected {m}",
                row.len()
            )));
        }
        Ok(Self { m, rows })
    }

    pub fn empty(m: usize) -> Result<Self> {
        Self::new(m, Vec::new())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Removes dominated and duplicate rows and sorts the rest lexicographically.
    pub fn canonicalize(&self) -> ExponentMatrix {
        let mut rows = self.rows.clone();
        rows.sort();
        rows.dedup();
        let kept: Vec<Vec<u64>> = rows
            .iter()
            .filter(|r| !rows.iter().any(|o| o != *r && dominates(r, o)))
            .cloned()
            .collect();
        ExponentMatrix { m: self.m, rows: kept }
    }

    /// Adds a row (no canonicalization).
    pub fn with_row(&self, row: Vec<u64>) -> Result<ExponentMatrix> {
        let mut rows = self.rows.clone();
        rows.push(row);
        ExponentMatrix::new(self.m, rows)
    }

    /// Componentwise maximum of all rows (the zero vector when empty).
    pub fn join(&self) -> Vec<u64> {
        join_all(self.m, self.rows.iter())
    }

    /// `true` iff `x` is excluded, i.e. dominates some row.
    pub fn excludes(&self, x: &[u64]) -> bool {
        self.rows.iter().any(|r| dominates(x, r))
    }

    /// `Card V_E(s)`, by enumerating every point of order `≤ s`.
    pub fn brute_count(&self, s: u64) -> BigInt {
        let mut point = vec![0u64; self.m];
        let mut count: u128 = 0;
        count_points(self, &mut point, 0, s, &mut count);
        BigInt::from(count)
    }

    /// The Kolchin dimension polynomial together with a threshold from which it
    /// agrees with the counting function.
    pub fn dimension_polynomial(&self) -> DimPolyResult {
        let canon = self.canonicalize();
        let stability_bound = order(&canon.join());
        let polynomial = if canon.rows.len() > MAX_INCLUSION_EXCLUSION_ROWS {
            interpolate_counts(&canon, stability_bound)
        } else {
            inclusion_exclusion(&canon)
        };
        DimPolyResult { polynomial, stability_bound }
    }

    /// Splits `ω_E(s) = ω_{E∪e}(s) + ω_H(s − ord e)`, where `H` subtracts `e`
    /// from every row and clamps at zero.
    pub fn decompose(&self, e: &[u64]) -> Result<Decomposition> {
        if e.len() != self.m {
            return Err(Error::DimensionMismatch(format!(
                "vector has {} entries, expected {}",
                e.len(),
                self.m
            )));
        }
        let extended = self.with_row(e.to_vec())?;
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().zip(e).map(|(a, b)| a.saturating_sub(*b)).collect())
            .collect();
        Ok(Decomposition {
            extended,
            remainder: ExponentMatrix::new(self.m, rows)?,
            shift: order(e),
        })
    }

    /// Evaluates `ω_E` by recursing on the decomposition identity with unit
    /// pivots. Independent of the inclusion–exclusion evaluator; used to
    /// cross-check it.
    pub fn dimension_polynomial_by_decomposition(&self) -> NumericalPolynomial {
        let canon = self.canonicalize();
        if canon.rows.iter().any(|r| r.iter().all(|&v| v == 0)) {
            return NumericalPolynomial::zero();
        }
        let is_unit = |r: &Vec<u64>| order(r) == 1;
        let units = canon.rows.iter().filter(|r| is_unit(r)).count();
        let pivot = (0..canon.m).find(|&k| {
            let has_unit = canon.rows.iter().any(|r| is_unit(r) && r[k] == 1);
            !has_unit && canon.rows.iter().any(|r| r[k] > 0)
        });
        match pivot {
            // Only unit rows remain: the free coordinates span C(s+m−t, m−t).
            None => NumericalPolynomial::basis(canon.m - units),
            Some(k) => {
                let mut e = vec![0; canon.m];
                e[k] = 1;
                let d = canon.decompose(&e).expect("pivot has matching width");
                let head = d.extended.dimension_polynomial_by_decomposition();
                let tail = d.remainder.dimension_polynomial_by_decomposition().shift(-1);
                &head + &tail
            }
        }
    }

    /// Reads the plain-text format: first line `m`, then one row per line.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let m = lines
            .next()
            .ok_or_else(|| Error::InvalidInput("missing column count".into()))?
            .parse::<usize>()
            .map_err(|e| Error::InvalidInput(format!("bad column count: {e}")))?;
        let rows = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<u64>().map_err(|e| Error::InvalidInput(format!("bad entry {t:?}: {e}"))))
                    .collect::<Result<Vec<u64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.m);
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(u64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Output of [`ExponentMatrix::dimension_polynomial`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimPolyResult {
    pub polynomial: NumericalPolynomial,
    /// The polynomial equals the counting function for every `s ≥ stability_bound`.
    pub stability_bound: u64,
}

/// Output of [`ExponentMatrix::decompose`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// `E ∪ {e}`.
    pub extended: ExponentMatrix,
    /// `H`: rows of `E` minus `e`, clamped at zero.
    pub remainder: ExponentMatrix,
    /// `ord e`.
    pub shift: u64,
}

impl Decomposition {
    /// Right-hand side `ω_{E∪e}(s) + ω_H(s − ord e)` as a polynomial.
    pub fn recombine(&self) -> NumericalPolynomial {
        let head = self.extended.dimension_polynomial().polynomial;
        let tail = self
            .remainder
            .dimension_polynomial()
            .polynomial
            .shift(-BigInt::from(self.shift));
        &head + &tail
    }
}

pub fn order(v: &[u64]) -> u64 {
    v.iter().sum()
}

/// `x ≥ y` componentwise.
pub fn dominates(x: &[u64], y: &[u64]) -> bool {
    x.iter().zip(y).all(|(a, b)| a >= b)
}

fn join_all<'a>(m: usize, rows: impl Iterator<Item = &'a Vec<u64>>) -> Vec<u64> {
    rows.fold(vec![0; m], |mut acc, r| {
        for (a, b) in acc.iter_mut().zip(r) {
            *a = (*a).max(*b);
        }
        acc
    })
}

fn count_points(e: &ExponentMatrix, point: &mut Vec<u64>, idx: usize, budget: u64, count: &mut u128) {
    if idx == point.len() {
        if !e.excludes(point) {
            *count += 1;
        }
        return;
    }
    for v in 0..=budget {
        point[idx] = v;
        count_points(e, point, idx + 1, budget - v, count);
    }
    point[idx] = 0;
}

/// Signed subset counts grouped by `ord(∨J)`, then summed as shifted binomials.
fn inclusion_exclusion(canon: &ExponentMatrix) -> NumericalPolynomial {
    let mut by_order: BTreeMap<u64, i64> = BTreeMap::new();
    let mut stack = vec![0u64; canon.m];
    subset_joins(&canon.rows, 0, &mut stack, 1, &mut by_order);
    let top = NumericalPolynomial::basis(canon.m);
    by_order
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(ord, c)| &top.shift(-BigInt::from(ord)) * &BigInt::from(c))
        .sum()
}

fn subset_joins(rows: &[Vec<u64>], next: usize, join: &mut Vec<u64>, sign: i64, acc: &mut BTreeMap<u64, i64>) {
    *acc.entry(order(join)).or_insert(0) += sign;
    for i in next..rows.len() {
        let saved = join.clone();
        for (a, b) in join.iter_mut().zip(&rows[i]) {
            *a = (*a).max(*b);
        }
        subset_joins(rows, i + 1, join, -sign, acc);
        *join = saved;
    }
}

/// Fallback for large antichains: interpolate `m + 1` counts past the threshold.
fn interpolate_counts(canon: &ExponentMatrix, start: u64) -> NumericalPolynomial {
    let samples: Vec<BigInt> = (0..=canon.m as u64).map(|i| canon.brute_count(start + i)).collect();
    let local = NumericalPolynomial::from_values(&samples);
    if local.is_zero() {
        return local;
    }
    local.shift(-BigInt::from(start))
}

impl DimPolyResult {
    /// Checks `eval(ω, s) = Card V_E(s)` for `s` in `[stability_bound, upto]`;
    /// returns the first failing `s`.
    pub fn first_mismatch(&self, e: &ExponentMatrix, upto: u64) -> Option<u64> {
        (self.stability_bound..=upto).find(|&s| self.polynomial.eval(&BigInt::from(s)) != e.brute_count(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn mat(m: usize, rows: &[&[u64]]) -> ExponentMatrix {
        ExponentMatrix::new(m, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(mat(2, &[&[1, 1], &[2, 1]]).canonicalize(), mat(2, &[&[1, 1]]));
        assert_eq!(mat(2, &[]).canonicalize(), mat(2, &[]));
        let anti = mat(2, &[&[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(anti.canonicalize(), mat(2, &[&[0, 2], &[1, 1], &[2, 0]]));
        assert_eq!(mat(2, &[&[1, 1], &[1, 1]]).canonicalize(), mat(2, &[&[1, 1]]));
    }

    #[test]
    fn brute_count_examples() {
        assert_eq!(mat(2, &[&[1, 1]]).brute_count(2), BigInt::from(5));
        assert_eq!(mat(2, &[]).brute_count(3), BigInt::from(10));
        for m in 1..4 {
            let zero = ExponentMatrix::new(m, vec![vec![0; m]]).unwrap();
            for s in 0..5 {
                assert_eq!(zero.brute_count(s), BigInt::zero());
            }
        }
    }

    #[test]
    fn dimension_polynomial_examples() {
        let free = mat(3, &[]).dimension_polynomial();
        assert_eq!(free.polynomial, NumericalPolynomial::from_i64s(&[1, 0, 0, 0]));
        assert_eq!(free.stability_bound, 0);

        let single = mat(2, &[&[1, 1]]).dimension_polynomial();
        assert_eq!(single.polynomial, NumericalPolynomial::from_i64s(&[2, -1]));
        assert_eq!(single.stability_bound, 2);

        let ex = mat(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1]]).dimension_polynomial();
        assert_eq!(ex.polynomial, NumericalPolynomial::from_i64s(&[2, -1]));
        assert_eq!(ex.polynomial.delta1(), NumericalPolynomial::constant(2));
    }

    #[test]
    fn zero_row_kills_everything() {
        let d = mat(3, &[&[0, 0, 0], &[1, 2, 0]]).dimension_polynomial();
        assert!(d.polynomial.is_zero());
    }

    #[test]
    fn large_antichain_uses_interpolation() {
        // 22 points on the line a + b = 21 form an antichain in N₀².
        let rows: Vec<Vec<u64>> = (0..=21).map(|a| vec![a, 21 - a]).collect();
        let e = ExponentMatrix::new(2, rows).unwrap();
        assert!(e.canonicalize().rows().len() > MAX_INCLUSION_EXCLUSION_ROWS);
        let d = e.dimension_polynomial();
        // Everything of order ≤ 20 survives: C(22, 2) points.
        assert_eq!(d.polynomial, NumericalPolynomial::constant(231));
        assert_eq!(d.first_mismatch(&e, d.stability_bound + 3), None);
    }

    #[test]
    fn decompose_example() {
        let d = mat(2, &[&[2, 2]]).decompose(&[0, 2]).unwrap();
        assert_eq!(d.extended, mat(2, &[&[2, 2], &[0, 2]]));
        assert_eq!(d.remainder, mat(2, &[&[2, 0]]));
        assert_eq!(d.shift, 2);
        assert_eq!(d.recombine(), mat(2, &[&[2, 2]]).dimension_polynomial().polynomial);
    }

    #[test]
    fn text_format_round_trip() {
        let e = mat(3, &[&[1, 0, 2], &[0, 4, 0]]);
        assert_eq!(ExponentMatrix::parse_text(&e.to_text()).unwrap(), e);
        assert!(ExponentMatrix::parse_text("2\n1 2 3\n").is_err());
        assert!(ExponentMatrix::new(0, vec![]).is_err());
    }

    #[test]
    fn json_format() {
        let e: ExponentMatrix = serde_json::from_str(r#"{"m":4,"rows":[[1,0,0,0],[0,1,0,0]]}"#).unwrap();
        assert_eq!(e, mat(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        assert!(serde_json::from_str::<ExponentMatrix>(r#"{"m":2,"rows":[[1]]}"#).is_err());
    }

    fn arb_matrix(max_m: usize, max_rows: usize, max_entry: u64) -> impl Strategy<Value = ExponentMatrix> {
        (1..=max_m).prop_flat_map(move |m| {
            prop::collection::vec(prop::collection::vec(0..=max_entry, m), 0..=max_rows)
                .prop_map(move |rows| ExponentMatrix::new(m, rows).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn polynomial_matches_counts_past_threshold(e in arb_matrix(4, 5, 4)) {
            let d = e.dimension_polynomial();
            let upto = d.stability_bound + e.m() as u64 + 2;
            prop_assert_eq!(d.first_mismatch(&e, upto), None);
        }

        #[test]
        fn canonicalize_preserves_counts(e in arb_matrix(3, 6, 3)) {
            let c = e.canonicalize();
            for s in 0..=8 {
                prop_assert_eq!(c.brute_count(s), e.brute_count(s));
            }
        }

        #[test]
        fn row_order_is_irrelevant(e in arb_matrix(3, 5, 3)) {
            let mut rows = e.rows().to_vec();
            rows.reverse();
            let r = ExponentMatrix::new(e.m(), rows).unwrap();
            prop_assert_eq!(r.dimension_polynomial(), e.dimension_polynomial());
        }

        #[test]
        fn degree_bounds(e in arb_matrix(4, 4, 3)) {
            let d = e.dimension_polynomial().polynomial;
            if e.is_empty() {
                prop_assert_eq!(d.degree(), Some(e.m()));
            } else {
                prop_assert!(d.degree().is_none_or(|deg| deg < e.m()));
            }
        }

        #[test]
        fn adding_a_row_never_increases_counts(e in arb_matrix(3, 4, 3), extra in prop::collection::vec(0u64..=3, 3)) {
            let extra = extra[..e.m()].to_vec();
            let bigger = e.with_row(extra).unwrap();
            let (a, b) = (e.dimension_polynomial(), bigger.dimension_polynomial());
            let from = a.stability_bound.max(b.stability_bound);
            for s in from..from + 5 {
                let s = BigInt::from(s);
                prop_assert!(b.polynomial.eval(&s) <= a.polynomial.eval(&s));
            }
        }

        #[test]
        fn recursive_evaluator_agrees(e in arb_matrix(4, 5, 3)) {
            prop_assert_eq!(e.dimension_polynomial_by_decomposition(), e.dimension_polynomial().polynomial);
        }

        #[test]
        fn decomposition_identity(e in arb_matrix(3, 4, 4), v in prop::collection::vec(0u64..=3, 3)) {
            let v = v[..e.m()].to_vec();
            let d = e.decompose(&v).unwrap();
            prop_assert_eq!(d.recombine(), e.dimension_polynomial().polynomial);
        }
    }
}
