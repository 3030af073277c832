//! Abstract syntax for the arithmetic language: terms over `{0, S, +, ·}`
//! (plus cut-off subtraction `∸` in the extended language), formulas built
//! from atoms, `∧`, `∨`, `∃`, and the block quantifier `∀x̄(A → B)`, and
//! sequents `A ⇒ B`.
//!
//! Implication is the empty block `∀()(A → B)` and `¬A` abbreviates
//! `∀()(A → ⊥)`; there is no separate implication node.

mod classify;
mod parse;
mod print;
mod subst;

pub use classify::{classify, desugar_order, is_delta_zero, is_positive, is_quantifier_free, FormulaClass};
pub use parse::{parse_formula, parse_sequent, parse_term, ParseError};
pub use print::{print_formula, print_sequent, print_term};
pub use subst::{rename_bound, substitute, RenameError, SubstError, Substitution};

use std::collections::BTreeSet;
use std::fmt;

/// Variable names are nonempty lowercase identifiers (`[a-z][a-z0-9_']*`).
pub type Ident = String;

/// Which term language is in play: `L` is `{0, S, +, ·}`; `Lc` adds `∸`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Lang {
    L,
    Lc,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Ident),
    Zero,
    Succ(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    /// Cut-off subtraction; only meaningful in `Lang::Lc`.
    Monus(Box<Term>, Box<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Top,
    Bot,
    Eq(Term, Term),
    Lt(Term, Term),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Exists(Ident, Box<Formula>),
    /// The block quantifier `∀x̄(ante → cons)`. The variable list may be
    /// empty (plain implication) and must be free of repetitions.
    Block(Vec<Ident>, Box<Formula>, Box<Formula>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub ante: Formula,
    pub cons: Formula,
}

#[allow(clippy::should_implement_trait)]
impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn succ(t: Term) -> Term {
        Term::Succ(Box::new(t))
    }

    pub fn add(l: Term, r: Term) -> Term {
        Term::Add(Box::new(l), Box::new(r))
    }

    pub fn mul(l: Term, r: Term) -> Term {
        Term::Mul(Box::new(l), Box::new(r))
    }

    pub fn monus(l: Term, r: Term) -> Term {
        Term::Monus(Box::new(l), Box::new(r))
    }

    /// The numeral `S^n 0`.
    pub fn num(n: u64) -> Term {
        let mut t = Term::Zero;
        for _ in 0..n {
            t = Term::succ(t);
        }
        t
    }

    pub fn vars(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Ident>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Zero => {}
            Term::Succ(t) => t.collect_vars(out),
            Term::Add(l, r) | Term::Mul(l, r) | Term::Monus(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn uses_monus(&self) -> bool {
        match self {
            Term::Var(_) | Term::Zero => false,
            Term::Succ(t) => t.uses_monus(),
            Term::Add(l, r) | Term::Mul(l, r) => l.uses_monus() || r.uses_monus(),
            Term::Monus(_, _) => true,
        }
    }
}

/// The numeral for `n` (`n`-fold `S` applied to `0`).
pub fn numeral(n: u64) -> Term {
    Term::num(n)
}

#[allow(clippy::should_implement_trait)]
impl Formula {
    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn exists(v: &str, body: Formula) -> Formula {
        Formula::Exists(v.to_string(), Box::new(body))
    }

    pub fn block(vars: &[&str], ante: Formula, cons: Formula) -> Formula {
        Formula::Block(
            vars.iter().map(|v| v.to_string()).collect(),
            Box::new(ante),
            Box::new(cons),
        )
    }

    /// Implication `A → B`, i.e. the empty block.
    pub fn imp(ante: Formula, cons: Formula) -> Formula {
        Formula::Block(Vec::new(), Box::new(ante), Box::new(cons))
    }

    /// `¬A`, i.e. `A → ⊥`.
    pub fn not(a: Formula) -> Formula {
        Formula::imp(a, Formula::Bot)
    }

    pub fn eq(l: Term, r: Term) -> Formula {
        Formula::Eq(l, r)
    }

    pub fn lt(l: Term, r: Term) -> Formula {
        Formula::Lt(l, r)
    }

    /// `s ≤ t`, sugar for `s < t ∨ s = t`.
    pub fn le(l: Term, r: Term) -> Formula {
        Formula::or(Formula::Lt(l.clone(), r.clone()), Formula::Eq(l, r))
    }

    /// `s | t`, sugar for `∃x(s·x = t)` with `x` fresh for `s, t`.
    pub fn divides(s: Term, t: Term) -> Formula {
        let mut used = s.vars();
        used.extend(t.vars());
        let x = fresh_name("w", &used);
        Formula::Exists(
            x.clone(),
            Box::new(Formula::Eq(Term::mul(s, Term::Var(x)), t)),
        )
    }

    pub fn is_atomic(&self) -> bool {
        matches!(
            self,
            Formula::Top | Formula::Bot | Formula::Eq(_, _) | Formula::Lt(_, _)
        )
    }

    pub fn free_vars(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut BTreeSet::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut BTreeSet<Ident>, out: &mut BTreeSet<Ident>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Eq(l, r) | Formula::Lt(l, r) => {
                for v in l.vars().union(&r.vars()) {
                    if !bound.contains(v) {
                        out.insert(v.clone());
                    }
                }
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            Formula::Exists(v, body) => {
                let fresh = bound.insert(v.clone());
                body.collect_free(bound, out);
                if fresh {
                    bound.remove(v);
                }
            }
            Formula::Block(vars, ante, cons) => {
                let added: Vec<_> = vars.iter().filter(|v| bound.insert((*v).clone())).collect();
                ante.collect_free(bound, out);
                cons.collect_free(bound, out);
                for v in added {
                    bound.remove(v);
                }
            }
        }
    }

    /// Every variable that is bound by some quantifier occurrence in the
    /// formula (regardless of whether the body uses it).
    pub fn binding_vars(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        self.collect_binding(&mut out);
        out
    }

    fn collect_binding(&self, out: &mut BTreeSet<Ident>) {
        match self {
            Formula::Top | Formula::Bot | Formula::Eq(_, _) | Formula::Lt(_, _) => {}
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_binding(out);
                r.collect_binding(out);
            }
            Formula::Exists(v, body) => {
                out.insert(v.clone());
                body.collect_binding(out);
            }
            Formula::Block(vars, ante, cons) => {
                out.extend(vars.iter().cloned());
                ante.collect_binding(out);
                cons.collect_binding(out);
            }
        }
    }

    pub fn uses_monus(&self) -> bool {
        match self {
            Formula::Top | Formula::Bot => false,
            Formula::Eq(l, r) | Formula::Lt(l, r) => l.uses_monus() || r.uses_monus(),
            Formula::And(l, r) | Formula::Or(l, r) => l.uses_monus() || r.uses_monus(),
            Formula::Exists(_, body) => body.uses_monus(),
            Formula::Block(_, ante, cons) => ante.uses_monus() || cons.uses_monus(),
        }
    }

    /// All variable names occurring anywhere (free, bound, or as binders).
    pub fn all_names(&self) -> BTreeSet<Ident> {
        let mut out = self.free_vars();
        out.extend(self.binding_vars());
        self.collect_inner_term_vars(&mut out);
        out
    }

    fn collect_inner_term_vars(&self, out: &mut BTreeSet<Ident>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Eq(l, r) | Formula::Lt(l, r) => {
                out.extend(l.vars());
                out.extend(r.vars());
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_inner_term_vars(out);
                r.collect_inner_term_vars(out);
            }
            Formula::Exists(_, body) => body.collect_inner_term_vars(out),
            Formula::Block(_, ante, cons) => {
                ante.collect_inner_term_vars(out);
                cons.collect_inner_term_vars(out);
            }
        }
    }
}

impl Sequent {
    pub fn new(ante: Formula, cons: Formula) -> Sequent {
        Sequent { ante, cons }
    }

    /// `⊤ ⇒ A`, the sequent form of asserting a formula.
    pub fn assert(cons: Formula) -> Sequent {
        Sequent {
            ante: Formula::Top,
            cons,
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Ident> {
        let mut out = self.ante.free_vars();
        out.extend(self.cons.free_vars());
        out
    }

    pub fn binding_vars(&self) -> BTreeSet<Ident> {
        let mut out = self.ante.binding_vars();
        out.extend(self.cons.binding_vars());
        out
    }

    pub fn uses_monus(&self) -> bool {
        self.ante.uses_monus() || self.cons.uses_monus()
    }
}

/// First identifier of the shape `base`, `base'`, `base''`, ... that is not
/// in `used`; the chosen name is inserted into `used`.
pub fn fresh_name(base: &str, used: &BTreeSet<Ident>) -> Ident {
    let mut candidate = base.to_string();
    while used.contains(&candidate) {
        candidate.push('\'');
    }
    candidate
}

/// Stateful fresh-name source; remembers every name it has handed out.
#[derive(Clone, Debug, Default)]
pub struct FreshVars {
    used: BTreeSet<Ident>,
}

impl FreshVars {
    pub fn new() -> FreshVars {
        FreshVars::default()
    }

    pub fn reserving<I: IntoIterator<Item = Ident>>(names: I) -> FreshVars {
        FreshVars {
            used: names.into_iter().collect(),
        }
    }

    pub fn reserve(&mut self, names: impl IntoIterator<Item = Ident>) {
        self.used.extend(names);
    }

    pub fn fresh(&mut self, base: &str) -> Ident {
        let name = fresh_name(base, &self.used);
        self.used.insert(name.clone());
        name
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_term(self))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_formula(self))
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_sequent(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeral_shapes() {
        assert_eq!(numeral(0), Term::Zero);
        assert_eq!(numeral(2), Term::succ(Term::succ(Term::Zero)));
        let five = numeral(5);
        let mut n = 0;
        let mut t = &five;
        while let Term::Succ(inner) = t {
            n += 1;
            t = inner;
        }
        assert_eq!(n, 5);
        assert_eq!(*t, Term::Zero);
    }

    #[test]
    fn free_vars_of_block_exclude_binders() {
        // ![x,y](x = z -> y = w) has free variables {z, w}
        let f = Formula::block(
            &["x", "y"],
            Formula::eq(Term::var("x"), Term::var("z")),
            Formula::eq(Term::var("y"), Term::var("w")),
        );
        let fv = f.free_vars();
        assert_eq!(
            fv.into_iter().collect::<Vec<_>>(),
            vec!["w".to_string(), "z".to_string()]
        );
    }

    #[test]
    fn free_vars_examples() {
        let f = Formula::eq(Term::var("x"), Term::succ(Term::var("y")));
        assert_eq!(f.free_vars().len(), 2);
        let g = Formula::exists("x", Formula::eq(Term::var("x"), Term::var("y")));
        assert_eq!(g.free_vars().into_iter().collect::<Vec<_>>(), vec!["y"]);
    }

    #[test]
    fn shadowing_inside_block() {
        // ![x](T -> E x. x = y): inner x bound by E, y free
        let f = Formula::block(
            &["x"],
            Formula::Top,
            Formula::exists("x", Formula::eq(Term::var("x"), Term::var("y"))),
        );
        assert_eq!(f.free_vars().into_iter().collect::<Vec<_>>(), vec!["y"]);
    }
}
