//! Syntactic formula classes.
//!
//! All tests are purely structural; no provable-equivalence closure is
//! applied. `<` atoms count as atomic throughout (the extended language).
//! The existential classes are closed under `∧`, `∨`, and `∃` so that the
//! chain Positive ⊆ ∃₁⁺ ⊆ ∃₁ ⊆ Σ₁ holds formula by formula; each member of
//! the liberal classes prenexes to the usual quantifier-prefix form.

use super::{Formula, Term};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum FormulaClass {
    Atomic,
    QuantifierFree,
    Positive,
    /// ∃₁: built from quantifier-free formulas by `∧`, `∨`, `∃`.
    ExistsOne,
    /// ∃₁⁺: built from positive quantifier-free formulas by `∧`, `∨`, `∃`;
    /// coincides with Positive.
    ExistsOnePos,
    DeltaZero,
    SigmaOne,
    PiTwo,
}

/// Quantifier-free: no `∃` and every block is an implication (empty vars).
pub fn is_quantifier_free(f: &Formula) -> bool {
    match f {
        Formula::Top | Formula::Bot | Formula::Eq(_, _) | Formula::Lt(_, _) => true,
        Formula::And(l, r) | Formula::Or(l, r) => is_quantifier_free(l) && is_quantifier_free(r),
        Formula::Exists(_, _) => false,
        Formula::Block(vars, ante, cons) => {
            vars.is_empty() && is_quantifier_free(ante) && is_quantifier_free(cons)
        }
    }
}

/// Positive: no block node anywhere (no `→`, no `∀`).
pub fn is_positive(f: &Formula) -> bool {
    match f {
        Formula::Top | Formula::Bot | Formula::Eq(_, _) | Formula::Lt(_, _) => true,
        Formula::And(l, r) | Formula::Or(l, r) => is_positive(l) && is_positive(r),
        Formula::Exists(_, body) => is_positive(body),
        Formula::Block(_, _, _) => false,
    }
}

fn is_exists_one(f: &Formula) -> bool {
    match f {
        Formula::And(l, r) | Formula::Or(l, r) => is_exists_one(l) && is_exists_one(r),
        Formula::Exists(_, body) => is_exists_one(body),
        _ => is_quantifier_free(f),
    }
}

/// Bounded-quantifier pattern: the guard is `x < s` with `x` the bound
/// variable and `x` not occurring in the bounding term.
fn is_bound_guard(x: &str, guard: &Formula) -> bool {
    match guard {
        Formula::Lt(Term::Var(v), s) => v == x && !s.vars().contains(x),
        _ => false,
    }
}

/// Δ₀: atoms, closed under `∧`, `∨`, `→`, and the bounded patterns
/// `∃x(x<s ∧ A)` and `∀x(x<s → A)` (single-variable block).
pub fn is_delta_zero(f: &Formula) -> bool {
    match f {
        Formula::Top | Formula::Bot | Formula::Eq(_, _) | Formula::Lt(_, _) => true,
        Formula::And(l, r) | Formula::Or(l, r) => is_delta_zero(l) && is_delta_zero(r),
        Formula::Exists(x, body) => match body.as_ref() {
            Formula::And(guard, rest) => is_bound_guard(x, guard) && is_delta_zero(rest),
            _ => false,
        },
        Formula::Block(vars, ante, cons) => match vars.as_slice() {
            [] => is_delta_zero(ante) && is_delta_zero(cons),
            [x] => is_bound_guard(x, ante) && is_delta_zero(cons),
            _ => false,
        },
    }
}

fn is_sigma_one(f: &Formula) -> bool {
    match f {
        Formula::And(l, r) | Formula::Or(l, r) => is_sigma_one(l) && is_sigma_one(r),
        Formula::Exists(_, body) => is_sigma_one(body),
        _ => is_delta_zero(f),
    }
}

/// Π₂: literally `∀x̄(⊤ → A)` with `A` in Σ₁.
fn is_pi_two(f: &Formula) -> bool {
    match f {
        Formula::Block(_, ante, cons) => **ante == Formula::Top && is_sigma_one(cons),
        _ => false,
    }
}

/// Every class the formula belongs to.
pub fn classify(f: &Formula) -> BTreeSet<FormulaClass> {
    let mut out = BTreeSet::new();
    if f.is_atomic() {
        out.insert(FormulaClass::Atomic);
    }
    if is_quantifier_free(f) {
        out.insert(FormulaClass::QuantifierFree);
    }
    if is_positive(f) {
        out.insert(FormulaClass::Positive);
        out.insert(FormulaClass::ExistsOnePos);
    }
    if is_exists_one(f) {
        out.insert(FormulaClass::ExistsOne);
    }
    if is_delta_zero(f) {
        out.insert(FormulaClass::DeltaZero);
    }
    if is_sigma_one(f) {
        out.insert(FormulaClass::SigmaOne);
    }
    if is_pi_two(f) {
        out.insert(FormulaClass::PiTwo);
    }
    out
}

/// Eliminates `<`: every `s < t` becomes `∃x(s + Sx = t)` with `x` fresh.
pub fn desugar_order(f: &Formula) -> Formula {
    let mut used = f.all_names();
    desugar_rec(f, &mut used)
}

fn desugar_rec(f: &Formula, used: &mut BTreeSet<String>) -> Formula {
    match f {
        Formula::Top | Formula::Bot | Formula::Eq(_, _) => f.clone(),
        Formula::Lt(s, t) => {
            let x = super::fresh_name("w", used);
            used.insert(x.clone());
            Formula::Exists(
                x.clone(),
                Box::new(Formula::Eq(
                    Term::add(s.clone(), Term::succ(Term::Var(x))),
                    t.clone(),
                )),
            )
        }
        Formula::And(l, r) => Formula::and(desugar_rec(l, used), desugar_rec(r, used)),
        Formula::Or(l, r) => Formula::or(desugar_rec(l, used), desugar_rec(r, used)),
        Formula::Exists(v, body) => Formula::Exists(v.clone(), Box::new(desugar_rec(body, used))),
        Formula::Block(vars, ante, cons) => Formula::Block(
            vars.clone(),
            Box::new(desugar_rec(ante, used)),
            Box::new(desugar_rec(cons, used)),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, Lang};

    fn f(s: &str) -> Formula {
        parse_formula(s, Lang::L).unwrap()
    }

    fn classes(s: &str) -> BTreeSet<FormulaClass> {
        classify(&f(s))
    }

    #[test]
    fn atom_is_everything_but_pi2() {
        use FormulaClass::*;
        let got = classes("x = y");
        for c in [
            Atomic,
            QuantifierFree,
            Positive,
            ExistsOne,
            ExistsOnePos,
            DeltaZero,
            SigmaOne,
        ] {
            assert!(got.contains(&c), "{c:?} missing");
        }
        assert!(!got.contains(&PiTwo));
    }

    #[test]
    fn negated_atom_is_not_positive() {
        use FormulaClass::*;
        let got = classes("(x = 0 -> F)");
        assert!(got.contains(&QuantifierFree));
        assert!(got.contains(&ExistsOne));
        assert!(got.contains(&DeltaZero));
        assert!(got.contains(&SigmaOne));
        assert!(!got.contains(&Positive));
        assert!(!got.contains(&ExistsOnePos));
        assert!(!got.contains(&Atomic));
    }

    #[test]
    fn bounded_exists_is_delta_zero() {
        let got = classes("E x. x < s & x = y");
        assert!(got.contains(&FormulaClass::DeltaZero));
        assert!(got.contains(&FormulaClass::SigmaOne));
    }

    #[test]
    fn bounded_forall_is_delta_zero() {
        let got = classes("![x](x < y + z -> x = 0)");
        assert!(got.contains(&FormulaClass::DeltaZero));
        // Bound mentioning the bound variable is not a bounded pattern.
        let got = classes("![x](x < S x -> x = 0)");
        assert!(!got.contains(&FormulaClass::DeltaZero));
    }

    #[test]
    fn unbounded_exists_is_sigma1_not_delta0() {
        let got = classes("E x. x = y");
        assert!(got.contains(&FormulaClass::SigmaOne));
        assert!(!got.contains(&FormulaClass::DeltaZero));
    }

    #[test]
    fn pi_two_shape() {
        let got = classes("![x](T -> E y. y = x)");
        assert!(got.contains(&FormulaClass::PiTwo));
        assert!(!classes("E y. y = x").contains(&FormulaClass::PiTwo));
    }

    #[test]
    fn desugar_examples() {
        let got = desugar_order(&f("0 < S0"));
        assert_eq!(got, f("E w. 0 + S w = S0"));
        // fresh variable avoids the ones present
        let got = desugar_order(&f("x < x"));
        assert_eq!(got, f("E w. x + S w = x"));
        let got = desugar_order(&f("w < w"));
        assert_eq!(got, f("E w'. w + S w' = w"));
        // no Lt: unchanged
        let g = f("E x. x = 0");
        assert_eq!(desugar_order(&g), g);
    }

    #[test]
    fn desugar_strips_all_lt() {
        let got = desugar_order(&f("x < y & ![z](z < y -> z < S y)"));
        fn has_lt(f: &Formula) -> bool {
            match f {
                Formula::Lt(_, _) => true,
                Formula::Top | Formula::Bot | Formula::Eq(_, _) => false,
                Formula::And(l, r) | Formula::Or(l, r) => has_lt(l) || has_lt(r),
                Formula::Exists(_, b) => has_lt(b),
                Formula::Block(_, a, c) => has_lt(a) || has_lt(c),
            }
        }
        assert!(!has_lt(&got));
    }
}
