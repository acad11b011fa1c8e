//! Jacobi number of a square matrix of orders: the maximal transversal sum,
//! where undefined entries may not be used.
//!
//! Computed as a minimum-cost assignment (Hungarian method with potentials).
//! Undefined cells get a cost large enough that any assignment touching one
//! is worse than every fully defined assignment.

use crate::error::{Error, Result};

/// `None` when no transversal avoids the undefined cells.
pub fn jacobi_number(matrix: &[Vec<Option<i64>>]) -> Result<Option<i64>> {
    let n = matrix.len();
    if let Some((i, row)) = matrix.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("row {i} has {} entries, matrix has {n} rows", row.len())));
    }
    if n == 0 {
        return Ok(Some(0));
    }
    let widest = matrix.iter().flatten().flatten().map(|v| i128::from(*v).abs()).max().unwrap_or(0);
    let forbidden = 2 * (n as i128) * (widest + 1) + 1;
    let cost: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|c| c.map_or(forbidden, |v| -i128::from(v))).collect())
        .collect();
    let assignment = min_cost_assignment(&cost);
    let mut total: i64 = 0;
    for (row, &col) in assignment.iter().enumerate() {
        match matrix[row][col] {
            Some(v) => total += v,
            None => return Ok(None),
        }
    }
    Ok(Some(total))
}

/// Row `i` is assigned column `result[i]`.
fn min_cost_assignment(cost: &[Vec<i128>]) -> Vec<usize> {
    let n = cost.len();
    let inf = i128::MAX / 4;
    let mut u = vec![0i128; n + 1];
    let mut v = vec![0i128; n + 1];
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        owner[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut result = vec![0usize; n];
    for j in 1..=n {
        result[owner[j] - 1] = j - 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(jacobi_number(&[vec![Some(7)]]).unwrap(), Some(7));
        assert_eq!(jacobi_number(&[vec![Some(1), Some(2)], vec![Some(3), Some(4)]]).unwrap(), Some(5));
        assert_eq!(jacobi_number(&[vec![Some(1), None], vec![None, None]]).unwrap(), None);
        assert_eq!(jacobi_number(&[vec![None, Some(2)], vec![Some(3), None]]).unwrap(), Some(5));
        assert_eq!(jacobi_number(&[]).unwrap(), Some(0));
    }

    #[test]
    fn forbidden_cells_are_avoided_even_when_costly() {
        // Diagonal is undefined; the only transversal is the anti-diagonal.
        let m = vec![vec![None, Some(0)], vec![Some(-5), None]];
        assert_eq!(jacobi_number(&m).unwrap(), Some(-5));
    }

    #[test]
    fn non_square_is_rejected() {
        assert!(jacobi_number(&[vec![Some(1), Some(2)]]).is_err());
    }
}
