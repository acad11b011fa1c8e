//! Upper bounds on the typical dimension of a graded system in terms of the
//! orders of its generators.

mod closed;
mod general;
mod jacobi;
pub mod witness;

pub use closed::{closed_form, ClosedValue};
pub use general::{derive, derivation_flags, target_polynomial, Derivation, Stage};
pub use jacobi::jacobi_number;

use crate::error::{Error, Result};
use crate::graded::{invariants_of, GradedSystem, Invariants};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMethod {
    Closed,
    General,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub codim: usize,
    pub orders: Vec<u64>,
    pub method: BoundMethod,
    #[serde(with = "crate::serde_big")]
    pub bound: BigInt,
    /// The closed-form value, when one exists for this codimension.
    #[serde(with = "crate::serde_big::option", skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivation: Option<Derivation>,
    pub discrepancy_flags: Vec<String>,
}

impl BoundReport {
    pub fn without_derivation(mut self) -> Self {
        self.derivation = None;
        self
    }
}

/// Closed-form bound for codimension `0..=5`.
pub fn bound_closed(codim: usize, orders: &[u64]) -> Result<BoundReport> {
    if orders.is_empty() {
        return Err(Error::InvalidInput("at least one order is required".into()));
    }
    let value = closed_form(codim, orders)?;
    let discrepancy_flags = if value.inexact {
        vec![format!("closed form for codimension {codim} is not an integer here; rounded down to {}", value.value)]
    } else {
        Vec::new()
    };
    Ok(BoundReport {
        codim,
        orders: orders.to_vec(),
        method: BoundMethod::Closed,
        bound: value.value.clone(),
        closed_form: Some(value.value),
        derivation: None,
        discrepancy_flags,
    })
}

/// Symbolic bound for an ideal with one generator of order `e`, compared
/// against the closed form where one exists.
pub fn bound_general(codim: usize, e: u64) -> Result<BoundReport> {
    let (bound, derivation) = derive(codim, e)?;
    let mut discrepancy_flags = derivation_flags(&derivation, &bound);
    let closed = match closed_form(codim, &[e]) {
        Ok(v) => Some(v.value),
        Err(Error::UnsupportedCodim(_)) => None,
        Err(err) => return Err(err),
    };
    if let Some(c) = &closed {
        if *c != bound {
            discrepancy_flags.push(format!(
                "codimension {codim}, e = {e}: derivation gives {bound}, closed form gives {c}"
            ));
        }
    }
    Ok(BoundReport {
        codim,
        orders: vec![e],
        method: BoundMethod::General,
        bound,
        closed_form: closed,
        derivation: Some(derivation),
        discrepancy_flags,
    })
}

/// Outcome of comparing a system's typical dimension with its bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundVerdict {
    pub invariants: Invariants,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<BoundReport>,
    /// False when no bound is asserted: the null module, or codimension 0,
    /// whose hypotheses are not checkable from the system alone.
    pub applicable: bool,
    /// `τ_d ≤ bound`; vacuously true when not applicable.
    pub holds: bool,
}

/// Computes the invariants of `system` and checks `τ_d` against the bound
/// for its codimension (closed form up to 5, the derivation beyond).
pub fn check_bound_against_system(system: &GradedSystem) -> Result<BoundVerdict> {
    let omega = system.characteristic()?.polynomial;
    let invariants = invariants_of(&omega, system.m())?;
    let (codim, typical) = match &invariants {
        Invariants::NullModule => {
            return Ok(BoundVerdict { invariants, report: None, applicable: false, holds: true })
        }
        Invariants::Graded { codimension, typical_dimension, .. } => (*codimension, typical_dimension.clone()),
    };
    let orders = system
        .orders()
        .ok_or_else(|| Error::InvalidInput("generator orders are required for systems given by leader matrices".into()))?;
    let report = if codim <= 2 {
        bound_closed(codim, &orders)?
    } else {
        if orders.len() != 1 {
            return Err(Error::MultipleOrdersUnsupported { codim, count: orders.len() });
        }
        if codim <= 5 {
            bound_closed(codim, &orders)?
        } else {
            bound_general(codim, orders[0])?.without_derivation()
        }
    };
    let applicable = codim > 0;
    let holds = !applicable || typical <= report.bound;
    Ok(BoundVerdict { invariants, report: Some(report), applicable, holds })
}
