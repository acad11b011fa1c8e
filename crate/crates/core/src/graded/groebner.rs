//! Buchberger completion for homogeneous submodules of `Q[x_1..x_m]^n`
//! under the standard ranking.
//!
//! Pairs are processed in order of increasing lcm degree. Two pair
//! eliminations are applied: the coprime-leader criterion (only for ideals,
//! `n = 1`, where it is valid) and the chain criterion.

use super::element::ModuleElement;
use super::term::ModuleTerm;
use crate::error::{Error, Result};
use crate::kolchin::ExponentMatrix;
use std::collections::BTreeSet;

/// A reduced Gröbner basis, sorted by leader.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    m: usize,
    n: usize,
    elements: Vec<ModuleElement>,
}

impl GroebnerBasis {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[ModuleElement] {
        &self.elements
    }

    pub fn leaders(&self) -> Vec<&ModuleTerm> {
        self.elements.iter().map(|g| g.leader().expect("basis elements are nonzero")).collect()
    }

    /// `E_j`: exponents of the leaders lying in component `j`, canonicalized.
    pub fn leader_matrices(&self) -> Vec<ExponentMatrix> {
        (0..self.n)
            .map(|j| {
                let rows = self
                    .leaders()
                    .into_iter()
                    .filter(|t| t.component == j)
                    .map(|t| t.exponent.iter().map(|&e| u64::from(e)).collect())
                    .collect();
                ExponentMatrix::new(self.m, rows).expect("leader widths match m").canonicalize()
            })
            .collect()
    }

    /// Full normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &ModuleElement) -> ModuleElement {
        normal_form(f, &self.elements)
    }

    /// True iff every S-polynomial of the basis reduces to zero.
    pub fn s_polynomials_reduce_to_zero(&self) -> bool {
        let k = self.elements.len();
        (0..k).all(|i| {
            (i + 1..k).all(|j| match s_polynomial(&self.elements[i], &self.elements[j]) {
                Some(s) => self.reduce(&s).is_zero(),
                None => true,
            })
        })
    }
}

/// S-polynomial of two elements whose leaders share a component.
pub fn s_polynomial(f: &ModuleElement, g: &ModuleElement) -> Option<ModuleElement> {
    let (lf, lg) = (f.leader().ok()?, g.leader().ok()?);
    let lcm = lf.lcm(lg)?;
    let mut s = f.times_monomial(&lcm.quotient(lf)?).scaled(&f.leading_coeff().ok()?.recip());
    let g_factor = g.leading_coeff().ok()?.recip();
    s.sub_multiple(g, &g_factor, &lcm.quotient(lg)?);
    Some(s)
}

fn normal_form(f: &ModuleElement, basis: &[ModuleElement]) -> ModuleElement {
    let mut rest = f.clone();
    let mut done = ModuleElement::zero();
    while let (Ok(lead), Ok(coef)) = (rest.leader().cloned(), rest.leading_coeff().cloned()) {
        let reducer = basis.iter().find_map(|g| {
            let gl = g.leader().ok()?;
            lead.quotient(gl).map(|theta| (g, theta))
        });
        match reducer {
            Some((g, theta)) => {
                let factor = coef / g.leading_coeff().expect("nonzero");
                rest.sub_multiple(g, &factor, &theta);
            }
            None => {
                done.add_term(lead.clone(), coef.clone());
                rest.add_term(lead, -coef);
            }
        }
    }
    done
}

/// Computes the reduced Gröbner basis of the submodule generated by `generators`.
pub fn buchberger(m: usize, n: usize, generators: &[ModuleElement]) -> Result<GroebnerBasis> {
    for (index, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        if g.homogeneous_degree().is_none() {
            return Err(Error::NonHomogeneousInput { index });
        }
        if let Some((t, _)) = g.terms().find(|(t, _)| t.exponent.len() != m || t.component >= n) {
            return Err(Error::DimensionMismatch(format!(
                "generator {index} has term {t} outside a rank-{n} module over {m} variables"
            )));
        }
    }

    let mut basis: Vec<ModuleElement> = generators.iter().filter(|g| !g.is_zero()).map(ModuleElement::monic).collect();
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&basis, &mut pending, i, j);
        }
    }

    while let Some(&(deg, i, j)) = pending.iter().next() {
        pending.remove(&(deg, i, j));
        let (li, lj) = (basis[i].leader()?.clone(), basis[j].leader()?.clone());
        if n == 1 && li.coprime(&lj) {
            continue;
        }
        if chain_criterion(&basis, &pending, i, j) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]).expect("pairs share a component");
        let r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        let new = basis.len() - 1;
        for k in 0..new {
            push_pair(&basis, &mut pending, k, new);
        }
    }

    Ok(GroebnerBasis { m, n, elements: interreduce(basis) })
}

fn push_pair(basis: &[ModuleElement], pending: &mut BTreeSet<(u32, usize, usize)>, i: usize, j: usize) {
    let (li, lj) = (basis[i].leader().expect("nonzero"), basis[j].leader().expect("nonzero"));
    if let Some(l) = li.lcm(lj) {
        pending.insert((l.ord(), i, j));
    }
}

fn is_pending(pending: &BTreeSet<(u32, usize, usize)>, basis: &[ModuleElement], a: usize, b: usize) -> bool {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    let (li, lj) = (basis[i].leader().expect("nonzero"), basis[j].leader().expect("nonzero"));
    li.lcm(lj).is_some_and(|l| pending.contains(&(l.ord(), i, j)))
}

/// Skip `(i, j)` when some third leader divides their lcm and both of its
/// pairs with `i` and `j` are already treated.
fn chain_criterion(basis: &[ModuleElement], pending: &BTreeSet<(u32, usize, usize)>, i: usize, j: usize) -> bool {
    let lcm = basis[i].leader().expect("nonzero").lcm(basis[j].leader().expect("nonzero")).expect("same component");
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].leader().expect("nonzero").divides(&lcm)
            && !is_pending(pending, basis, i, k)
            && !is_pending(pending, basis, j, k)
    })
}

fn interreduce(basis: Vec<ModuleElement>) -> Vec<ModuleElement> {
    // Keep one element per minimal leader.
    let mut minimal: Vec<ModuleElement> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lg = g.leader().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(o, h)| {
            let lh = h.leader().expect("nonzero");
            o != idx && lh.divides(lg) && (lh != lg || o < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<ModuleElement> = (0..minimal.len())
        .map(|i| {
            let others: Vec<ModuleElement> =
                minimal.iter().enumerate().filter(|(o, _)| *o != i).map(|(_, g)| g.clone()).collect();
            normal_form(&minimal[i], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| a.leader().expect("nonzero").cmp(b.leader().expect("nonzero")));
    reduced
}
