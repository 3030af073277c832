//! Classical structures (ℕ, ℕ ∪ {∞}, finite tables), bounded three-valued
//! satisfaction, and Kripke forcing over finite frames.

mod json;
mod kripke;
mod overspill;
mod structure;

pub use json::{model_from_json, model_to_json, ModelJsonError};
pub use kripke::{
    add_root, force, force_at, force_rule, force_sequent, make_kstar, validate_model, Evidence,
    ForceOutcome, KripkeModel, ModelNode, NodeId, ValidationReport,
};
pub use overspill::{overspill_check, OverspillError, OverspillOutcome, OverspillReport};
pub use structure::{eval_term, sat, sat_capped, EvalError};

use crate::syntax::Ident;
use std::collections::BTreeMap;
use std::fmt;

/// An element of a structure's domain: a natural number, or the nonstandard
/// point `∞` in structures that declare it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementId {
    Nat(u64),
    Inf,
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementId::Nat(n) => write!(f, "{n}"),
            ElementId::Inf => write!(f, "inf"),
        }
    }
}

/// Operation and order tables for a finite carrier `{0, ..., size-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTables {
    pub size: u64,
    /// `succ[a]`
    pub succ: Vec<u64>,
    /// `add[a][b]`
    pub add: Vec<Vec<u64>>,
    /// `mul[a][b]`
    pub mul: Vec<Vec<u64>>,
    /// `lt[a][b]`
    pub lt: Vec<Vec<bool>>,
    /// optional `monus[a][b]`
    pub monus: Option<Vec<Vec<u64>>>,
}

/// A classical node structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureSpec {
    /// The standard naturals; `monus_enabled` turns on cut-off subtraction.
    StdN { monus_enabled: bool },
    /// ℕ ∪ {∞} with the absorption laws `S∞ = ∞`, `∞+∞ = ∞`, `∞·∞ = ∞`,
    /// `0·∞ = ∞·0 = 0`, `∞ < ∞`, `n < ∞`, `∞ ≮ n`, `n+∞ = ∞+n = ∞`, and
    /// `(n+1)·∞ = ∞·(n+1) = ∞`. `∸` is not defined here.
    NStar,
    FiniteTable(FiniteTables),
}

impl StructureSpec {
    pub fn std_n() -> StructureSpec {
        StructureSpec::StdN {
            monus_enabled: false,
        }
    }

    pub fn std_n_with_monus() -> StructureSpec {
        StructureSpec::StdN {
            monus_enabled: true,
        }
    }

    pub fn has_inf(&self) -> bool {
        matches!(self, StructureSpec::NStar)
    }

    pub fn monus_enabled(&self) -> bool {
        match self {
            StructureSpec::StdN { monus_enabled } => *monus_enabled,
            StructureSpec::NStar => false,
            StructureSpec::FiniteTable(t) => t.monus.is_some(),
        }
    }

    /// Whether `e` belongs to this structure's domain.
    pub fn contains(&self, e: ElementId) -> bool {
        match (self, e) {
            (StructureSpec::StdN { .. }, ElementId::Nat(_)) => true,
            (StructureSpec::StdN { .. }, ElementId::Inf) => false,
            (StructureSpec::NStar, _) => true,
            (StructureSpec::FiniteTable(t), ElementId::Nat(n)) => n < t.size,
            (StructureSpec::FiniteTable(_), ElementId::Inf) => false,
        }
    }

    /// Domain-inclusion order on structures under the canonical embedding
    /// `Nat(n) ↦ Nat(n)`.
    pub fn domain_subset_of(&self, other: &StructureSpec) -> bool {
        match (self, other) {
            (StructureSpec::FiniteTable(a), StructureSpec::FiniteTable(b)) => a.size <= b.size,
            (StructureSpec::FiniteTable(_), _) => true,
            (StructureSpec::StdN { .. }, StructureSpec::StdN { .. }) => true,
            (StructureSpec::StdN { .. }, StructureSpec::NStar) => true,
            (StructureSpec::NStar, StructureSpec::NStar) => true,
            _ => false,
        }
    }
}

/// Three-valued verdict of a bounded evaluation. `True`/`False` are always
/// sound; `Unknown(b)` records the exhausted witness bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truth3 {
    True,
    False,
    Unknown(u64),
}

impl Truth3 {
    pub fn is_true(self) -> bool {
        self == Truth3::True
    }

    pub fn is_decided(self) -> bool {
        !matches!(self, Truth3::Unknown(_))
    }

    pub fn negate(self) -> Truth3 {
        match self {
            Truth3::True => Truth3::False,
            Truth3::False => Truth3::True,
            u => u,
        }
    }

    pub fn and(self, other: Truth3) -> Truth3 {
        match (self, other) {
            (Truth3::False, _) | (_, Truth3::False) => Truth3::False,
            (Truth3::True, o) => o,
            (o, Truth3::True) => o,
            (Truth3::Unknown(a), Truth3::Unknown(b)) => Truth3::Unknown(a.max(b)),
        }
    }

    pub fn or(self, other: Truth3) -> Truth3 {
        match (self, other) {
            (Truth3::True, _) | (_, Truth3::True) => Truth3::True,
            (Truth3::False, o) => o,
            (o, Truth3::False) => o,
            (Truth3::Unknown(a), Truth3::Unknown(b)) => Truth3::Unknown(a.max(b)),
        }
    }
}

impl fmt::Display for Truth3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truth3::True => write!(f, "true"),
            Truth3::False => write!(f, "false"),
            Truth3::Unknown(b) => write!(f, "unknown(bound {b})"),
        }
    }
}

/// Witness-search discipline for quantifiers over infinite carriers:
/// candidates are `{0, ..., witness_bound}`, plus `∞` when the carrier has
/// it and `include_inf` is set. Bounded Δ₀ patterns with a finite bound
/// value are always evaluated exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalBound {
    pub witness_bound: u64,
    pub include_inf: bool,
}

impl EvalBound {
    pub fn new(witness_bound: u64) -> EvalBound {
        EvalBound {
            witness_bound,
            include_inf: false,
        }
    }

    pub fn with_inf(witness_bound: u64) -> EvalBound {
        EvalBound {
            witness_bound,
            include_inf: true,
        }
    }
}

/// Variable assignment into a structure's domain.
pub type Assignment = BTreeMap<Ident, ElementId>;

pub fn assignment(pairs: &[(&str, ElementId)]) -> Assignment {
    pairs
        .iter()
        .map(|(v, e)| (v.to_string(), *e))
        .collect()
}

/// Parses `x=3,y=inf` into an assignment.
pub fn assignment_from_pairs(text: &str) -> Result<Assignment, String> {
    let mut out = Assignment::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (var, val) = part
            .split_once('=')
            .ok_or_else(|| format!("bad assignment entry '{part}'"))?;
        let e = if val.trim() == "inf" {
            ElementId::Inf
        } else {
            ElementId::Nat(
                val.trim()
                    .parse()
                    .map_err(|_| format!("bad value '{val}'"))?,
            )
        };
        out.insert(var.trim().to_string(), e);
    }
    Ok(out)
}
