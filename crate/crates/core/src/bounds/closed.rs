//! Closed-form typical dimension bounds for codimensions 0 through 5.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Result of a closed-form evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedValue {
    pub value: BigInt,
    /// Set when the printed expression is not an integer at this argument
    /// (the value is then the floor).
    pub inexact: bool,
}

/// Evaluates the closed-form bound for codimension `codim`.
///
/// Codimension 2 uses `(Σe)·max e + Σ_{i<j} e_i e_j` (the elementary
/// symmetric sum; the alternative reading with a product of pairwise terms
/// does not follow from the derivation). Codimension 5 is the displayed
/// degree-16 polynomial kept as printed, including its trailing `(e+1)²`
/// factor.
pub fn closed_form(codim: usize, orders: &[u64]) -> Result<ClosedValue> {
    if codim >= 3 && orders.len() != 1 {
        return Err(Error::MultipleOrdersUnsupported { codim, count: orders.len() });
    }
    let es: Vec<BigInt> = orders.iter().map(|&e| BigInt::from(e)).collect();
    let exact = |value: BigInt| Ok(ClosedValue { value, inexact: false });
    match codim {
        0 => exact(BigInt::from(orders.len())),
        1 => exact(es.iter().sum()),
        2 => {
            let sum: BigInt = es.iter().sum();
            let max = es.iter().max().cloned().unwrap_or_default();
            let mut pairs = BigInt::zero();
            for i in 0..es.len() {
                for j in i + 1..es.len() {
                    pairs += &es[i] * &es[j];
                }
            }
            exact(sum * max + pairs)
        }
        3..=5 => {
            let e = &es[0];
            let e1: BigInt = e + 1;
            let base: BigInt = e * e * &e1 * &e1;
            let (numerator, denominator) = match codim {
                3 => (base, 2u32),
                4 => (base * horner(e, &[8, 8, 11, 6, 3]), 24),
                _ => (
                    base * horner(e, &[288, 480, 952, 1264, 1592, 1648, 1529, 1174, 775, 420, 183, 54, 9]) * &e1 * &e1,
                    1152,
                ),
            };
            let (q, r) = numerator.div_mod_floor(&BigInt::from(denominator));
            Ok(ClosedValue { value: q, inexact: !r.is_zero() })
        }
        _ => Err(Error::UnsupportedCodim(codim)),
    }
}

/// `Σ coeffs[k]·e^k`.
fn horner(e: &BigInt, ascending: &[i64]) -> BigInt {
    ascending.iter().rev().fold(BigInt::zero(), |acc, &c| acc * e + BigInt::from(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(codim: usize, orders: &[u64]) -> BigInt {
        closed_form(codim, orders).unwrap().value
    }

    #[test]
    fn low_codimensions() {
        assert_eq!(val(0, &[4, 1, 2]), BigInt::from(3));
        assert_eq!(val(1, &[2, 3]), BigInt::from(5));
        // (2+3)·3 + 2·3
        assert_eq!(val(2, &[2, 3]), BigInt::from(21));
        assert_eq!(val(2, &[4]), BigInt::from(16));
    }

    #[test]
    fn ideal_codimensions() {
        assert_eq!(val(3, &[2]), BigInt::from(18));
        assert_eq!(val(3, &[1]), BigInt::from(2));
        assert_eq!(val(4, &[1]), BigInt::from(6));
        assert_eq!(val(4, &[2]), BigInt::from(246));
        assert_eq!(val(5, &[1]), BigInt::from(144));
        assert!(!closed_form(5, &[1]).unwrap().inexact);
    }

    #[test]
    fn errors() {
        assert_eq!(closed_form(6, &[1]).unwrap_err(), Error::UnsupportedCodim(6));
        assert_eq!(closed_form(3, &[1, 2]).unwrap_err(), Error::MultipleOrdersUnsupported { codim: 3, count: 2 });
    }
}
