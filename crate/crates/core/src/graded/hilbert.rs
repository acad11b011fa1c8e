//! Degreewise dimension count of `F/H` by exact linear algebra.
//!
//! For each degree `s`, `H_s` is spanned by all products `θ·g` with
//! `ord θ = s − deg g`. Its rank is found by sparse Gaussian elimination
//! over `Q`, and `dim (F/H)_s = n·C(s+m−1, m−1) − rank`. Nothing here uses
//! Gröbner bases.

use super::element::ModuleElement;
use super::term::ModuleTerm;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

/// All exponent vectors in `N₀^m` of total order `degree`, in a fixed order.
pub fn monomials_of_degree(m: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == m {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in (0..=left).rev() {
            prefix.push(v);
            rec(m, left - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, degree, &mut Vec::with_capacity(m), &mut out);
    out
}

type SparseRow = BTreeMap<usize, BigRational>;

/// Row-echelon accumulator keyed by pivot column.
#[derive(Default)]
struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    fn insert(&mut self, mut row: SparseRow) -> bool {
        while let Some((&col, value)) = row.iter().next() {
            let value = value.clone();
            match self.pivots.get(&col) {
                Some(pivot) => {
                    for (c, v) in pivot {
                        let entry = row.entry(*c).or_insert_with(BigRational::zero);
                        *entry -= &value * v;
                        if entry.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = value.recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
        false
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// `dim_Q (F/H)_s` for `s = 0..=s_max`.
pub fn hilbert_oracle(m: usize, n: usize, generators: &[ModuleElement], s_max: u32) -> Result<Vec<u64>> {
    let mut gens: Vec<(u32, &ModuleElement)> = Vec::new();
    for (index, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let deg = g.homogeneous_degree().ok_or(Error::NonHomogeneousInput { index })?;
        gens.push((deg, g));
    }
    let mut out = Vec::with_capacity(s_max as usize + 1);
    for s in 0..=s_max {
        let mut index: HashMap<ModuleTerm, usize> = HashMap::new();
        for exp in monomials_of_degree(m, s) {
            for comp in 0..n {
                let next = index.len();
                index.insert(ModuleTerm::new(exp.clone(), comp), next);
            }
        }
        let mut echelon = Echelon::default();
        for (deg, g) in &gens {
            if *deg > s {
                continue;
            }
            for theta in monomials_of_degree(m, s - deg) {
                let row: SparseRow = g
                    .terms()
                    .map(|(t, c)| {
                        let col = *index
                            .get(&t.times(&theta))
                            .ok_or_else(|| Error::DimensionMismatch(format!("term {t} outside the module")))?;
                        Ok((col, c.clone()))
                    })
                    .collect::<Result<_>>()?;
                echelon.insert(row);
                if echelon.rank() == index.len() {
                    break;
                }
            }
        }
        out.push((index.len() - echelon.rank()) as u64);
    }
    Ok(out)
}
