use dimpoly::bounds::{bound_closed, bound_general, jacobi_number};
use num_bigint::BigInt;
use proptest::prelude::*;

fn best_transversal(matrix: &[Vec<Option<i64>>]) -> Option<i64> {
    let n = matrix.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = None;
    loop {
        let sum: Option<i64> = perm.iter().enumerate().map(|(i, &j)| matrix[i][j]).sum();
        best = best.max(sum);
        // Next permutation in lexicographic order.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return if n == 0 { Some(0) } else { best };
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<Option<i64>>>> {
    (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(prop_oneof![1 => Just(None), 3 => (-5i64..=9).prop_map(Some)], n), n))
}

proptest! {
    #[test]
    fn jacobi_matches_enumeration(m in matrix_strategy()) {
        prop_assert_eq!(jacobi_number(&m).unwrap(), best_transversal(&m));
    }

    #[test]
    fn codim_two_relaxation(orders in prop::collection::vec(1u64..=20, 1..6)) {
        let sum: u64 = orders.iter().sum();
        let b = bound_closed(2, &orders).unwrap().bound;
        prop_assert!(b <= BigInt::from(sum * sum));
        prop_assert!(b >= bound_closed(1, &orders).unwrap().bound);
    }

    #[test]
    fn general_bound_grows_with_order(codim in 1usize..=5, e in 1u64..=6) {
        let lo = bound_general(codim, e).unwrap().bound;
        let hi = bound_general(codim, e + 1).unwrap().bound;
        prop_assert!(lo <= hi);
    }

    #[test]
    fn flags_mark_exactly_the_mismatches(codim in 1usize..=5, e in 1u64..=8) {
        let r = bound_general(codim, e).unwrap();
        let closed = r.closed_form.clone().unwrap();
        prop_assert_eq!(r.discrepancy_flags.is_empty(), closed == r.bound);
    }
}

#[test]
fn printed_codim_five_is_an_extra_square_factor() {
    for e in 1..=8u64 {
        let r = bound_general(5, e).unwrap();
        let factor = BigInt::from((e + 1) * (e + 1));
        assert_eq!(r.closed_form.unwrap(), &r.bound * factor, "e = {e}");
    }
}
