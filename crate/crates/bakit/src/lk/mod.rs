//! Classical sequent calculus over lists, with equality axioms, arithmetic
//! axioms, and a class-restricted induction rule; plus cut elimination for
//! cut formulas outside a designated class and the bridge to the
//! block-quantifier calculus.

pub mod builder;
mod bridge;
mod check;
mod cutelim;
mod formula;
mod json;

pub use bridge::{ba_to_lk, formula_of_lk, lk_of_formula, lk_pos_to_ba, BridgeError};
pub use check::{check_lk, LkCheckErrorKind, LkError};
pub use cutelim::{eliminate_cuts_outside, CutElimError};
pub use formula::{parse_lk_formula, parse_lk_sequent, print_lk_formula, print_lk_sequent};
pub use json::{lk_from_json, lk_to_json, LkJsonError};

use crate::syntax::{Ident, Term};
use std::collections::BTreeSet;
use std::fmt;

/// Formulas in standard first-order syntax: negation, implication, and
/// single-variable universal quantification are first-class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LkFormula {
    Top,
    Bot,
    Eq(Term, Term),
    Lt(Term, Term),
    And(Box<LkFormula>, Box<LkFormula>),
    Or(Box<LkFormula>, Box<LkFormula>),
    Neg(Box<LkFormula>),
    Imp(Box<LkFormula>, Box<LkFormula>),
    Exists(Ident, Box<LkFormula>),
    Forall(Ident, Box<LkFormula>),
}

#[allow(clippy::should_implement_trait)]
impl LkFormula {
    pub fn and(l: LkFormula, r: LkFormula) -> LkFormula {
        LkFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: LkFormula, r: LkFormula) -> LkFormula {
        LkFormula::Or(Box::new(l), Box::new(r))
    }

    pub fn neg(f: LkFormula) -> LkFormula {
        LkFormula::Neg(Box::new(f))
    }

    pub fn imp(l: LkFormula, r: LkFormula) -> LkFormula {
        LkFormula::Imp(Box::new(l), Box::new(r))
    }

    pub fn exists(x: &str, f: LkFormula) -> LkFormula {
        LkFormula::Exists(x.to_string(), Box::new(f))
    }

    pub fn forall(x: &str, f: LkFormula) -> LkFormula {
        LkFormula::Forall(x.to_string(), Box::new(f))
    }

    pub fn is_atomic(&self) -> bool {
        matches!(
            self,
            LkFormula::Top | LkFormula::Bot | LkFormula::Eq(_, _) | LkFormula::Lt(_, _)
        )
    }

    /// Number of connectives and quantifiers; invariant under substitution.
    pub fn grade(&self) -> usize {
        match self {
            LkFormula::Top | LkFormula::Bot | LkFormula::Eq(_, _) | LkFormula::Lt(_, _) => 0,
            LkFormula::Neg(f) => 1 + f.grade(),
            LkFormula::And(l, r) | LkFormula::Or(l, r) | LkFormula::Imp(l, r) => {
                1 + l.grade().max(r.grade())
            }
            LkFormula::Exists(_, f) | LkFormula::Forall(_, f) => 1 + f.grade(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut BTreeSet::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut BTreeSet<Ident>, out: &mut BTreeSet<Ident>) {
        match self {
            LkFormula::Top | LkFormula::Bot => {}
            LkFormula::Eq(l, r) | LkFormula::Lt(l, r) => {
                for v in l.vars().union(&r.vars()) {
                    if !bound.contains(v) {
                        out.insert(v.clone());
                    }
                }
            }
            LkFormula::And(l, r) | LkFormula::Or(l, r) | LkFormula::Imp(l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            LkFormula::Neg(f) => f.collect_free(bound, out),
            LkFormula::Exists(x, f) | LkFormula::Forall(x, f) => {
                let fresh = bound.insert(x.clone());
                f.collect_free(bound, out);
                if fresh {
                    bound.remove(x);
                }
            }
        }
    }

    pub fn all_names(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut BTreeSet<Ident>) {
        match self {
            LkFormula::Top | LkFormula::Bot => {}
            LkFormula::Eq(l, r) | LkFormula::Lt(l, r) => {
                out.extend(l.vars());
                out.extend(r.vars());
            }
            LkFormula::And(l, r) | LkFormula::Or(l, r) | LkFormula::Imp(l, r) => {
                l.collect_names(out);
                r.collect_names(out);
            }
            LkFormula::Neg(f) => f.collect_names(out),
            LkFormula::Exists(x, f) | LkFormula::Forall(x, f) => {
                out.insert(x.clone());
                f.collect_names(out);
            }
        }
    }

    /// Capture-checked substitution of a single variable.
    pub fn substituted(&self, x: &str, t: &Term) -> Result<LkFormula, String> {
        let sub = crate::syntax::Substitution::single(x, t.clone());
        self.subst(&sub)
    }

    fn subst(&self, sub: &crate::syntax::Substitution) -> Result<LkFormula, String> {
        if sub.is_empty() {
            return Ok(self.clone());
        }
        match self {
            LkFormula::Top | LkFormula::Bot => Ok(self.clone()),
            LkFormula::Eq(l, r) => Ok(LkFormula::Eq(sub.apply_term(l), sub.apply_term(r))),
            LkFormula::Lt(l, r) => Ok(LkFormula::Lt(sub.apply_term(l), sub.apply_term(r))),
            LkFormula::And(l, r) => Ok(LkFormula::and(l.subst(sub)?, r.subst(sub)?)),
            LkFormula::Or(l, r) => Ok(LkFormula::or(l.subst(sub)?, r.subst(sub)?)),
            LkFormula::Imp(l, r) => Ok(LkFormula::imp(l.subst(sub)?, r.subst(sub)?)),
            LkFormula::Neg(f) => Ok(LkFormula::neg(f.subst(sub)?)),
            LkFormula::Exists(x, f) | LkFormula::Forall(x, f) => {
                let mut inner = sub.clone();
                inner.0.remove(x);
                let body_free = f.free_vars();
                for (v, t) in &inner.0 {
                    if body_free.contains(v) && t.vars().contains(x) {
                        return Err(format!("substituting for '{v}' captures '{x}'"));
                    }
                }
                let body = f.subst(&inner)?;
                Ok(match self {
                    LkFormula::Exists(_, _) => LkFormula::Exists(x.clone(), Box::new(body)),
                    _ => LkFormula::Forall(x.clone(), Box::new(body)),
                })
            }
        }
    }
}

impl fmt::Display for LkFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_lk_formula(self))
    }
}

/// Sequents are ordered finite lists on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LkSequent {
    pub ante: Vec<LkFormula>,
    pub cons: Vec<LkFormula>,
}

impl LkSequent {
    pub fn new(ante: Vec<LkFormula>, cons: Vec<LkFormula>) -> LkSequent {
        LkSequent { ante, cons }
    }

    pub fn free_vars(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        for f in self.ante.iter().chain(&self.cons) {
            out.extend(f.free_vars());
        }
        out
    }

    pub fn formulas(&self) -> impl Iterator<Item = &LkFormula> {
        self.ante.iter().chain(self.cons.iter())
    }
}

impl fmt::Display for LkSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_lk_sequent(self))
    }
}

/// Rule identifiers with their explicit instantiation data. Active
/// formulas live at fixed list positions — the end of antecedents and the
/// front of consequents; the exchange rules move everything else around.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LkRule {
    Ax { a: LkFormula },
    ExL { i: usize },
    ExR { i: usize },
    WkL { a: LkFormula },
    WkR { a: LkFormula },
    CtrL,
    CtrR,
    Cut,
    TopR,
    BotL,
    NegL,
    NegR,
    AndL1 { other: LkFormula },
    AndL2 { other: LkFormula },
    AndR,
    OrL,
    OrR1 { other: LkFormula },
    OrR2 { other: LkFormula },
    ImpL,
    ImpR,
    ExistsL { x: Ident, y: Ident, body: LkFormula },
    ExistsR { x: Ident, t: Term, body: LkFormula },
    ForallL { x: Ident, t: Term, body: LkFormula },
    ForallR { x: Ident, y: Ident, body: LkFormula },
    EqRefl { s: Term },
    EqEqv { s: Term, t: Term, s2: Term, t2: Term },
    SFnc { s: Term, t: Term },
    AddFnc { s: Term, t: Term, s2: Term, t2: Term },
    MulFnc { s: Term, t: Term, s2: Term, t2: Term },
    LtRel { s: Term, t: Term, s2: Term, t2: Term },
    SPos { s: Term },
    SInj { s: Term, t: Term },
    AddZero { s: Term },
    AddSucc { s: Term, t: Term },
    MulZero { s: Term },
    MulSucc { s: Term, t: Term },
    Ind { x: Ident, t: Term, a: LkFormula },
}

impl LkRule {
    pub fn id(&self) -> &'static str {
        match self {
            LkRule::Ax { .. } => "ax",
            LkRule::ExL { .. } => "ex-l",
            LkRule::ExR { .. } => "ex-r",
            LkRule::WkL { .. } => "wk-l",
            LkRule::WkR { .. } => "wk-r",
            LkRule::CtrL => "ctr-l",
            LkRule::CtrR => "ctr-r",
            LkRule::Cut => "cut",
            LkRule::TopR => "top-r",
            LkRule::BotL => "bot-l",
            LkRule::NegL => "neg-l",
            LkRule::NegR => "neg-r",
            LkRule::AndL1 { .. } => "and-l1",
            LkRule::AndL2 { .. } => "and-l2",
            LkRule::AndR => "and-r",
            LkRule::OrL => "or-l",
            LkRule::OrR1 { .. } => "or-r1",
            LkRule::OrR2 { .. } => "or-r2",
            LkRule::ImpL => "imp-l",
            LkRule::ImpR => "imp-r",
            LkRule::ExistsL { .. } => "exists-l",
            LkRule::ExistsR { .. } => "exists-r",
            LkRule::ForallL { .. } => "forall-l",
            LkRule::ForallR { .. } => "forall-r",
            LkRule::EqRefl { .. } => "eq-ref",
            LkRule::EqEqv { .. } => "eq-eqv",
            LkRule::SFnc { .. } => "s-fnc",
            LkRule::AddFnc { .. } => "add-fnc",
            LkRule::MulFnc { .. } => "mul-fnc",
            LkRule::LtRel { .. } => "lt-rel",
            LkRule::SPos { .. } => "s-pos",
            LkRule::SInj { .. } => "s-inj",
            LkRule::AddZero { .. } => "add-0",
            LkRule::AddSucc { .. } => "add-s",
            LkRule::MulZero { .. } => "mul-0",
            LkRule::MulSucc { .. } => "mul-s",
            LkRule::Ind { .. } => "ind",
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            LkRule::Cut | LkRule::AndR | LkRule::OrL | LkRule::ImpL => 2,
            LkRule::Ax { .. }
            | LkRule::TopR
            | LkRule::BotL
            | LkRule::EqRefl { .. }
            | LkRule::EqEqv { .. }
            | LkRule::SFnc { .. }
            | LkRule::AddFnc { .. }
            | LkRule::MulFnc { .. }
            | LkRule::LtRel { .. }
            | LkRule::SPos { .. }
            | LkRule::SInj { .. }
            | LkRule::AddZero { .. }
            | LkRule::AddSucc { .. }
            | LkRule::MulZero { .. }
            | LkRule::MulSucc { .. } => 0,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LkProof {
    pub conclusion: LkSequent,
    pub rule: LkRule,
    pub premises: Vec<LkProof>,
}

impl LkProof {
    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(LkProof::node_count).sum::<usize>()
    }

    pub fn for_each_formula(&self, f: &mut impl FnMut(&LkFormula)) {
        for g in self.conclusion.formulas() {
            f(g);
        }
        for p in &self.premises {
            p.for_each_formula(f);
        }
    }

    /// Cut formulas of every cut node in the tree.
    pub fn cut_formulas(&self) -> Vec<LkFormula> {
        let mut out = Vec::new();
        self.collect_cuts(&mut out);
        out
    }

    fn collect_cuts(&self, out: &mut Vec<LkFormula>) {
        if matches!(self.rule, LkRule::Cut) {
            if let Some(a) = self.premises[0].conclusion.cons.first() {
                out.push(a.clone());
            }
        }
        for p in &self.premises {
            p.collect_cuts(out);
        }
    }

    pub fn all_names(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        self.collect_all_names(&mut out);
        out
    }

    fn collect_all_names(&self, out: &mut BTreeSet<Ident>) {
        for f in self.conclusion.formulas() {
            out.extend(f.all_names());
        }
        match &self.rule {
            LkRule::ExistsL { x, y, body } | LkRule::ForallR { x, y, body } => {
                out.insert(x.clone());
                out.insert(y.clone());
                out.extend(body.all_names());
            }
            LkRule::ExistsR { x, t, body } | LkRule::ForallL { x, t, body } => {
                out.insert(x.clone());
                out.extend(t.vars());
                out.extend(body.all_names());
            }
            LkRule::Ind { x, t, a } => {
                out.insert(x.clone());
                out.extend(t.vars());
                out.extend(a.all_names());
            }
            _ => {}
        }
        for p in &self.premises {
            p.collect_all_names(out);
        }
    }
}

/// A named decidable formula class, required to contain every atom and be
/// closed under subformulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassPredicate {
    /// No `¬`, `→`, `∀` anywhere (the positive-existential fragment).
    PositiveExistential,
    /// Atoms closed under `∧`, `∨`, `→`, `¬`, and the bounded-quantifier
    /// patterns.
    DeltaZero,
    /// Quantifier-free.
    Open,
}

impl ClassPredicate {
    pub fn name(self) -> &'static str {
        match self {
            ClassPredicate::PositiveExistential => "pos",
            ClassPredicate::DeltaZero => "delta0",
            ClassPredicate::Open => "open",
        }
    }

    pub fn by_name(name: &str) -> Option<ClassPredicate> {
        match name {
            "pos" => Some(ClassPredicate::PositiveExistential),
            "delta0" => Some(ClassPredicate::DeltaZero),
            "open" => Some(ClassPredicate::Open),
            _ => None,
        }
    }

    pub fn accepts(self, f: &LkFormula) -> bool {
        match self {
            ClassPredicate::PositiveExistential => lk_positive(f),
            ClassPredicate::DeltaZero => lk_delta_zero(f),
            ClassPredicate::Open => lk_open(f),
        }
    }
}

pub(crate) fn lk_positive(f: &LkFormula) -> bool {
    match f {
        LkFormula::Top | LkFormula::Bot | LkFormula::Eq(_, _) | LkFormula::Lt(_, _) => true,
        LkFormula::And(l, r) | LkFormula::Or(l, r) => lk_positive(l) && lk_positive(r),
        LkFormula::Exists(_, body) => lk_positive(body),
        LkFormula::Neg(_) | LkFormula::Imp(_, _) | LkFormula::Forall(_, _) => false,
    }
}

fn lk_open(f: &LkFormula) -> bool {
    match f {
        LkFormula::Top | LkFormula::Bot | LkFormula::Eq(_, _) | LkFormula::Lt(_, _) => true,
        LkFormula::And(l, r) | LkFormula::Or(l, r) | LkFormula::Imp(l, r) => {
            lk_open(l) && lk_open(r)
        }
        LkFormula::Neg(body) => lk_open(body),
        LkFormula::Exists(_, _) | LkFormula::Forall(_, _) => false,
    }
}

fn lk_bound_guard(x: &str, guard: &LkFormula) -> bool {
    match guard {
        LkFormula::Lt(Term::Var(v), s) => v == x && !s.vars().contains(x),
        _ => false,
    }
}

fn lk_delta_zero(f: &LkFormula) -> bool {
    match f {
        LkFormula::Top | LkFormula::Bot | LkFormula::Eq(_, _) | LkFormula::Lt(_, _) => true,
        LkFormula::And(l, r) | LkFormula::Or(l, r) | LkFormula::Imp(l, r) => {
            lk_delta_zero(l) && lk_delta_zero(r)
        }
        LkFormula::Neg(body) => lk_delta_zero(body),
        LkFormula::Exists(x, body) => match body.as_ref() {
            LkFormula::And(guard, rest) => lk_bound_guard(x, guard) && lk_delta_zero(rest),
            _ => false,
        },
        LkFormula::Forall(x, body) => match body.as_ref() {
            LkFormula::Imp(guard, rest) => lk_bound_guard(x, guard) && lk_delta_zero(rest),
            _ => false,
        },
    }
}
