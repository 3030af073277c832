//! Overspill tester: a positive formula with one free variable that holds
//! at every sampled natural should also hold at `∞` in ℕ ∪ {∞}.

use super::{assignment, sat, ElementId, EvalBound, EvalError, StructureSpec, Truth3};
use crate::syntax::{is_positive, Formula, Ident};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OverspillOutcome {
    /// Every sample held and the formula holds at `∞`.
    Pass,
    /// Every sample held but the formula fails at `∞` (would refute the
    /// overspill property).
    Fail,
    /// Every sample held but the verdict at `∞` is undecided at this bound.
    UndecidedAtInfinity(u64),
    /// Some sample failed or was undecided; the hypothesis is not met and
    /// nothing is claimed.
    HypothesisNotMet { at: u64, verdict: Truth3 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverspillReport {
    pub formula: String,
    pub samples: u64,
    pub outcome: OverspillOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OverspillError {
    #[error("formula must be positive")]
    NotPositive,
    #[error("formula must have exactly the free variable '{expected}', found {found:?}")]
    WrongArity { expected: Ident, found: Vec<Ident> },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Checks `A(0), ..., A(N)` in ℕ ∪ {∞} and, if all hold, asserts `A(∞)`.
pub fn overspill_check(
    a: &Formula,
    x: &Ident,
    sample_range: u64,
    b: EvalBound,
) -> Result<OverspillReport, OverspillError> {
    if !is_positive(a) {
        return Err(OverspillError::NotPositive);
    }
    let fv: Vec<Ident> = a.free_vars().into_iter().collect();
    if fv != [x.clone()] {
        return Err(OverspillError::WrongArity {
            expected: x.clone(),
            found: fv,
        });
    }
    let star = StructureSpec::NStar;
    let inf_bound = EvalBound {
        witness_bound: b.witness_bound,
        include_inf: true,
    };
    for n in 0..=sample_range {
        let asg = assignment(&[(x.as_str(), ElementId::Nat(n))]);
        let v = sat(&star, a, &asg, inf_bound)?;
        if v != Truth3::True {
            return Ok(OverspillReport {
                formula: a.to_string(),
                samples: sample_range,
                outcome: OverspillOutcome::HypothesisNotMet { at: n, verdict: v },
            });
        }
    }
    let asg = assignment(&[(x.as_str(), ElementId::Inf)]);
    let outcome = match sat(&star, a, &asg, inf_bound)? {
        Truth3::True => OverspillOutcome::Pass,
        Truth3::False => OverspillOutcome::Fail,
        Truth3::Unknown(bound) => OverspillOutcome::UndecidedAtInfinity(bound),
    };
    Ok(OverspillReport {
        formula: a.to_string(),
        samples: sample_range,
        outcome,
    })
}
