//! Characteristic polynomials of graded submodules of a free module over a
//! ring of generalized polynomials.
//!
//! A system is either a list of homogeneous generators over commutative
//! polynomials (the Gröbner engine computes the leader matrices), or the
//! leader matrices themselves, which is how systems over noncommutative
//! rings (e.g. differential operators) enter. In both cases
//!
//! ```text
//! ω(s) = Σ_j Δ₁ ω_{E_j}(s − α_j)
//! ```
//!
//! with `α_j = 0` unless generator degrees are given.

mod element;
mod groebner;
mod hilbert;
mod term;

pub use element::ModuleElement;
pub use groebner::{buchberger, s_polynomial, GroebnerBasis};
pub use hilbert::{hilbert_oracle, monomials_of_degree};
pub use term::{ModuleTerm, Ranking, RankingKind};

use crate::binomial::NumericalPolynomial;
use crate::error::{Error, Result};
use crate::kolchin::ExponentMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemData {
    /// Homogeneous generators over `Q[x_1..x_m]`.
    Generators(Vec<ModuleElement>),
    /// Precomputed leader matrices `E_1..E_n` with generator degrees `α_j`.
    LeaderMatrices { matrices: Vec<ExponentMatrix>, degrees: Vec<u64> },
}

/// A graded system `Σ` in the free module of rank `n` over `m` indeterminates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSystem {
    m: usize,
    n: usize,
    vars: Vec<String>,
    data: SystemData,
    orders: Option<Vec<u64>>,
}

impl GradedSystem {
    pub fn from_generators(m: usize, n: usize, generators: Vec<ModuleElement>) -> Result<Self> {
        check_shape(m, n)?;
        for (index, g) in generators.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            if g.homogeneous_degree().is_none() {
                return Err(Error::NonHomogeneousInput { index });
            }
            if let Some((t, _)) = g.terms().find(|(t, _)| t.exponent.len() != m || t.component >= n) {
                return Err(Error::DimensionMismatch(format!("generator {index} has term {t} outside F")));
            }
        }
        Ok(Self { m, n, vars: default_vars(m), data: SystemData::Generators(generators), orders: None })
    }

    /// Leader matrices `E_j`; missing degrees default to zero.
    pub fn from_leader_matrices(m: usize, matrices: Vec<ExponentMatrix>, degrees: Option<Vec<u64>>) -> Result<Self> {
        let n = matrices.len();
        check_shape(m, n)?;
        if let Some(e) = matrices.iter().find(|e| e.m() != m) {
            return Err(Error::DimensionMismatch(format!("leader matrix has {} columns, expected {m}", e.m())));
        }
        let degrees = degrees.unwrap_or_else(|| vec![0; n]);
        if degrees.len() != n {
            return Err(Error::DimensionMismatch(format!("{} degrees for {n} components", degrees.len())));
        }
        Ok(Self {
            m,
            n,
            vars: default_vars(m),
            data: SystemData::LeaderMatrices { matrices, degrees },
            orders: None,
        })
    }

    /// Declares the generator orders `e_j` used by the bound checks.
    pub fn with_orders(mut self, orders: Vec<u64>) -> Self {
        self.orders = Some(orders);
        self
    }

    pub fn with_vars(mut self, vars: Vec<String>) -> Self {
        self.vars = vars;
        self
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn data(&self) -> &SystemData {
        &self.data
    }

    pub fn generators(&self) -> Option<&[ModuleElement]> {
        match &self.data {
            SystemData::Generators(g) => Some(g),
            SystemData::LeaderMatrices { .. } => None,
        }
    }

    /// `e_j = max_h ord_{f_j} h`, declared or read off the generators.
    pub fn orders(&self) -> Option<Vec<u64>> {
        if let Some(o) = &self.orders {
            return Some(o.clone());
        }
        let gens = self.generators()?;
        Some(
            (0..self.n)
                .map(|j| gens.iter().filter_map(|g| g.order_in(j)).max().map_or(0, u64::from))
                .collect(),
        )
    }

    pub fn groebner(&self) -> Result<GroebnerBasis> {
        match &self.data {
            SystemData::Generators(g) => buchberger(self.m, self.n, g),
            SystemData::LeaderMatrices { .. } => Err(Error::UnsupportedRing),
        }
    }

    pub fn hilbert_oracle(&self, s_max: u32) -> Result<Vec<u64>> {
        match &self.data {
            SystemData::Generators(g) => hilbert_oracle(self.m, self.n, g, s_max),
            SystemData::LeaderMatrices { .. } => Err(Error::UnsupportedRing),
        }
    }

    /// The characteristic polynomial with the data it was computed from.
    pub fn characteristic(&self) -> Result<Characteristic> {
        let (matrices, degrees) = match &self.data {
            SystemData::Generators(_) => (self.groebner()?.leader_matrices(), vec![0; self.n]),
            SystemData::LeaderMatrices { matrices, degrees } => (matrices.clone(), degrees.clone()),
        };
        let mut polynomial = NumericalPolynomial::zero();
        let mut stability_start = 0;
        for (e, &alpha) in matrices.iter().zip(&degrees) {
            let d = e.dimension_polynomial();
            stability_start = stability_start.max(d.stability_bound + alpha);
            polynomial = &polynomial + &d.polynomial.delta1().shift(-BigInt::from(alpha));
        }
        Ok(Characteristic { polynomial, leader_matrices: matrices, degrees, stability_start })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SystemWire::from(self)).expect("system serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let wire: SystemWire = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        wire.try_into()
    }
}

fn check_shape(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidInput(format!("need m ≥ 1 and n ≥ 1, got m = {m}, n = {n}")));
    }
    Ok(())
}

fn default_vars(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("x{i}")).collect()
}

/// Output of [`GradedSystem::characteristic`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Characteristic {
    pub polynomial: NumericalPolynomial,
    pub leader_matrices: Vec<ExponentMatrix>,
    pub degrees: Vec<u64>,
    /// The polynomial equals the degreewise dimension for every `s ≥ stability_start`.
    pub stability_start: u64,
}

/// `ω_[Σ]` as a numerical polynomial.
pub fn charpoly(system: &GradedSystem) -> Result<NumericalPolynomial> {
    system.characteristic().map(|c| c.polynomial)
}

/// Type, codimension and typical dimension of a characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Invariants {
    /// `ω = 0`: the type is undefined.
    NullModule,
    Graded {
        type_degree: usize,
        codimension: usize,
        #[serde(with = "crate::serde_big")]
        typical_dimension: BigInt,
    },
}

impl Invariants {
    pub fn codimension(&self) -> Option<usize> {
        match self {
            Invariants::NullModule => None,
            Invariants::Graded { codimension, .. } => Some(*codimension),
        }
    }

    pub fn typical_dimension(&self) -> Option<&BigInt> {
        match self {
            Invariants::NullModule => None,
            Invariants::Graded { typical_dimension, .. } => Some(typical_dimension),
        }
    }
}

/// `d = deg ω`, `τ = m − 1 − d`, `τ_d = a_d`.
pub fn invariants_of(omega: &NumericalPolynomial, m: usize) -> Result<Invariants> {
    let Some(d) = omega.degree() else {
        return Ok(Invariants::NullModule);
    };
    if m == 0 || d > m - 1 {
        return Err(Error::DegreeExceedsAmbient { degree: d, max: m.saturating_sub(1) });
    }
    Ok(Invariants::Graded { type_degree: d, codimension: m - 1 - d, typical_dimension: omega.leading() })
}

// ---- file format ----

#[derive(Debug, Serialize, Deserialize)]
struct SystemWire {
    m: usize,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vars: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<GeneratorWire>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    leader_matrices: Option<Vec<RowsWire>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orders: Option<Vec<u64>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GeneratorWire {
    terms: Vec<TermWire>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TermWire {
    exp: Vec<u32>,
    comp: usize,
    coef: CoefWire,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum CoefWire {
    Int(i64),
    Text(String),
}

#[derive(Debug, Serialize, Deserialize)]
struct RowsWire {
    rows: Vec<Vec<u64>>,
}

impl TryFrom<SystemWire> for GradedSystem {
    type Error = Error;

    fn try_from(w: SystemWire) -> Result<Self> {
        let mut system = match (w.generators, w.leader_matrices) {
            (Some(gens), None) => {
                let elements = gens
                    .into_iter()
                    .enumerate()
                    .map(|(gi, g)| {
                        let mut el = ModuleElement::zero();
                        for t in g.terms {
                            if t.comp == 0 || t.comp > w.n {
                                return Err(Error::InvalidInput(format!(
                                    "generator {gi}: component {} not in 1..={}",
                                    t.comp, w.n
                                )));
                            }
                            let coef = match t.coef {
                                CoefWire::Int(v) => BigRational::from_integer(v.into()),
                                CoefWire::Text(s) => parse_rational(&s)?,
                            };
                            el.add_term(ModuleTerm::new(t.exp, t.comp - 1), coef);
                        }
                        Ok(el)
                    })
                    .collect::<Result<Vec<_>>>()?;
                if w.degrees.is_some() {
                    return Err(Error::InvalidInput("degrees only apply to leader_matrices systems".into()));
                }
                GradedSystem::from_generators(w.m, w.n, elements)?
            }
            (None, Some(mats)) => {
                if mats.len() != w.n {
                    return Err(Error::DimensionMismatch(format!("{} leader matrices for n = {}", mats.len(), w.n)));
                }
                let matrices =
                    mats.into_iter().map(|r| ExponentMatrix::new(w.m, r.rows)).collect::<Result<Vec<_>>>()?;
                GradedSystem::from_leader_matrices(w.m, matrices, w.degrees)?
            }
            _ => {
                return Err(Error::InvalidInput(
                    "system needs exactly one of \"generators\" or \"leader_matrices\"".into(),
                ))
            }
        };
        if let Some(vars) = w.vars {
            if vars.len() != w.m {
                return Err(Error::DimensionMismatch(format!("{} variable names for m = {}", vars.len(), w.m)));
            }
            system = system.with_vars(vars);
        }
        if let Some(orders) = w.orders {
            if orders.len() != w.n {
                return Err(Error::DimensionMismatch(format!("{} orders for n = {}", orders.len(), w.n)));
            }
            system = system.with_orders(orders);
        }
        Ok(system)
    }
}

impl From<&GradedSystem> for SystemWire {
    fn from(s: &GradedSystem) -> Self {
        let (generators, leader_matrices, degrees) = match &s.data {
            SystemData::Generators(gens) => {
                let g = gens
                    .iter()
                    .map(|el| GeneratorWire {
                        terms: el
                            .terms()
                            .rev()
                            .map(|(t, c)| TermWire {
                                exp: t.exponent.clone(),
                                comp: t.component + 1,
                                coef: CoefWire::Text(c.to_string()),
                            })
                            .collect(),
                    })
                    .collect();
                (Some(g), None, None)
            }
            SystemData::LeaderMatrices { matrices, degrees } => (
                None,
                Some(matrices.iter().map(|e| RowsWire { rows: e.rows().to_vec() }).collect()),
                Some(degrees.clone()),
            ),
        };
        SystemWire { m: s.m, n: s.n, vars: Some(s.vars.clone()), generators, leader_matrices, degrees, orders: s.orders.clone() }
    }
}

/// Parses `"3"`, `"-2/5"` or a finite decimal such as `"0.125"`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::InvalidInput(format!("not an exact rational: {text:?}"));
    if let Some((num, den)) = t.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let digits = format!("{whole_digits}{frac}");
        let mut num: BigInt = digits.parse().map_err(|_| bad())?;
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(num, den));
    }
    let v: BigInt = t.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(v))
}
