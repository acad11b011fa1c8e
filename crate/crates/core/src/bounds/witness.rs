//! A family of leader sets in four indeterminates, one per order `k`, whose
//! typical dimension reaches the codimension-3 bound `k²(k+1)²/2`.

use crate::graded::GradedSystem;
use crate::kolchin::ExponentMatrix;
use num_bigint::BigInt;

/// Rows `(k,0,0,0)`, `(0,k,0,0)` and `(k−i, 0, ik, i)` for `i = 1..k`.
pub fn leader_matrix(k: u64) -> ExponentMatrix {
    let mut rows = vec![vec![k, 0, 0, 0], vec![0, k, 0, 0]];
    rows.extend((1..=k).map(|i| vec![k - i, 0, i * k, i]));
    ExponentMatrix::new(4, rows).expect("rows have width 4")
}

/// The ideal with these leaders, given by its leader matrix, with declared
/// generator order `k`.
pub fn system(k: u64) -> GradedSystem {
    GradedSystem::from_leader_matrices(4, vec![leader_matrix(k)], None)
        .expect("one well-formed matrix")
        .with_orders(vec![k])
}

/// `k²(k+1)²/2`.
pub fn expected_typical_dimension(k: u64) -> BigInt {
    let k = BigInt::from(k);
    let k1 = &k + 1u32;
    &k * &k * &k1 * &k1 / 2u32
}
