//! Formula-to-formula translations: positive and semi-positive parts, the
//! open positivization pair, bounded negation, the `∸`-elimination
//! translation, and the Σ₁ totalizer construction.

mod star;
mod totalizer;

pub use star::star_translate;
pub use totalizer::{sigma1_totalizer, TotalizerError, TotalizerInput};

use crate::syntax::{classify, Formula, FormulaClass, Term};
use thiserror::Error;

/// The positive part `A^∃`: atoms, `∧`, `∨`, `∃` are preserved and every
/// block collapses to `⊤`.
pub fn positive_part(f: &Formula) -> Formula {
    match f {
        Formula::Top | Formula::Bot | Formula::Eq(_, _) | Formula::Lt(_, _) => f.clone(),
        Formula::And(l, r) => Formula::and(positive_part(l), positive_part(r)),
        Formula::Or(l, r) => Formula::or(positive_part(l), positive_part(r)),
        Formula::Exists(v, body) => Formula::Exists(v.clone(), Box::new(positive_part(body))),
        Formula::Block(_, _, _) => Formula::Top,
    }
}

/// The semi-positive part `A^∀`: like `A^∃` except that a block
/// `∀x̄(A' → A'')` becomes `∀x̄(A'^∃ → A''^∃)`.
pub fn semi_positive_part(f: &Formula) -> Formula {
    match f {
        Formula::Top | Formula::Bot | Formula::Eq(_, _) | Formula::Lt(_, _) => f.clone(),
        Formula::And(l, r) => Formula::and(semi_positive_part(l), semi_positive_part(r)),
        Formula::Or(l, r) => Formula::or(semi_positive_part(l), semi_positive_part(r)),
        Formula::Exists(v, body) => {
            Formula::Exists(v.clone(), Box::new(semi_positive_part(body)))
        }
        Formula::Block(vars, ante, cons) => Formula::Block(
            vars.clone(),
            Box::new(positive_part(ante)),
            Box::new(positive_part(cons)),
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("formula is not quantifier-free")]
    NotQuantifierFree,
    #[error("formula is not Delta_0")]
    NotDeltaZero,
}

/// The positive equivalent `A⁺` of a quantifier-free formula.
pub fn open_positive(f: &Formula) -> Result<Formula, TransformError> {
    let (pos, _) = open_pair(f)?;
    Ok(pos)
}

/// The positive negation `A^¬` of a quantifier-free formula.
pub fn open_negation(f: &Formula) -> Result<Formula, TransformError> {
    let (_, neg) = open_pair(f)?;
    Ok(neg)
}

fn open_pair(f: &Formula) -> Result<(Formula, Formula), TransformError> {
    match f {
        Formula::Top => Ok((Formula::Top, Formula::Bot)),
        Formula::Bot => Ok((Formula::Bot, Formula::Top)),
        Formula::Eq(s, t) => Ok((
            f.clone(),
            Formula::or(Formula::Lt(s.clone(), t.clone()), Formula::Lt(t.clone(), s.clone())),
        )),
        Formula::Lt(s, t) => Ok((
            f.clone(),
            Formula::or(Formula::Eq(s.clone(), t.clone()), Formula::Lt(t.clone(), s.clone())),
        )),
        Formula::And(l, r) => {
            let (lp, ln) = open_pair(l)?;
            let (rp, rn) = open_pair(r)?;
            Ok((Formula::and(lp, rp), Formula::or(ln, rn)))
        }
        Formula::Or(l, r) => {
            let (lp, ln) = open_pair(l)?;
            let (rp, rn) = open_pair(r)?;
            Ok((Formula::or(lp, rp), Formula::and(ln, rn)))
        }
        Formula::Block(vars, ante, cons) if vars.is_empty() => {
            let (ap, an) = open_pair(ante)?;
            let (cp, cn) = open_pair(cons)?;
            Ok((Formula::or(an, cp), Formula::and(ap, cn)))
        }
        Formula::Exists(_, _) | Formula::Block(_, _, _) => {
            Err(TransformError::NotQuantifierFree)
        }
    }
}

/// The bounded negation `A^¬Δ₀` of a Δ₀ formula; again Δ₀, and classically
/// equivalent to `¬A`.
pub fn bounded_negation(f: &Formula) -> Result<Formula, TransformError> {
    if !classify(f).contains(&FormulaClass::DeltaZero) {
        return Err(TransformError::NotDeltaZero);
    }
    Ok(bneg(f))
}

fn bneg(f: &Formula) -> Formula {
    match f {
        Formula::Top => Formula::Bot,
        Formula::Bot => Formula::Top,
        Formula::Eq(s, t) => {
            Formula::or(Formula::Lt(t.clone(), s.clone()), Formula::Lt(s.clone(), t.clone()))
        }
        Formula::Lt(s, t) => {
            Formula::or(Formula::Lt(t.clone(), s.clone()), Formula::Eq(s.clone(), t.clone()))
        }
        Formula::And(l, r) => Formula::or(bneg(l), bneg(r)),
        Formula::Or(l, r) => Formula::and(bneg(l), bneg(r)),
        // ∃x(x<t ∧ B)  ↦  ∀x(x<t → B^¬Δ₀)
        Formula::Exists(x, body) => match body.as_ref() {
            Formula::And(guard, rest) => Formula::Block(
                vec![x.clone()],
                Box::new((**guard).clone()),
                Box::new(bneg(rest)),
            ),
            _ => unreachable!("checked Delta_0"),
        },
        Formula::Block(vars, ante, cons) => match vars.as_slice() {
            // (B → C)^¬Δ₀ = B ∧ C^¬Δ₀
            [] => Formula::and((**ante).clone(), bneg(cons)),
            // ∀x(x<t → B)  ↦  ∃x(x<t ∧ B^¬Δ₀)
            [x] => Formula::Exists(
                x.clone(),
                Box::new(Formula::and((**ante).clone(), bneg(cons))),
            ),
            _ => unreachable!("checked Delta_0"),
        },
    }
}

/// `s ≤ t` rendered as `s < St`; used where a Δ₀ bounded pattern is needed.
pub(crate) fn le_strict(s: Term, t: Term) -> Formula {
    Formula::Lt(s, Term::succ(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{is_positive, parse_formula, Lang};

    fn f(s: &str) -> Formula {
        parse_formula(s, Lang::L).unwrap()
    }

    #[test]
    fn positive_part_examples() {
        assert_eq!(positive_part(&f("(T -> F)")), Formula::Top);
        assert_eq!(
            positive_part(&f("E y. y = 0 & (T -> F)")),
            f("E y. y = 0 & T")
        );
        assert_eq!(positive_part(&f("x = y")), f("x = y"));
    }

    #[test]
    fn positive_part_idempotent_and_positive() {
        for s in [
            "![x](x = 0 -> E y. y = x)",
            "(T -> F) | E z. z = z",
            "x < y & ![u,v](u = v -> v = u)",
        ] {
            let p = positive_part(&f(s));
            assert!(is_positive(&p));
            assert_eq!(positive_part(&p), p);
        }
    }

    #[test]
    fn semi_positive_examples() {
        assert_eq!(
            semi_positive_part(&f("![x]((T -> F) -> x = 0)")),
            f("![x](T -> x = 0)")
        );
        let pos = f("E y. y = 0 | y < S0");
        assert_eq!(semi_positive_part(&pos), pos);
        assert_eq!(
            semi_positive_part(&f("(x = 0 -> (T -> F))")),
            f("(x = 0 -> T)")
        );
    }

    #[test]
    fn semi_then_positive_is_positive() {
        for s in [
            "![x](x = 0 -> E y. y = x)",
            "(x = 0 -> (T -> F))",
            "E u. ![v](v < u -> v = 0)",
        ] {
            let a = f(s);
            assert_eq!(
                positive_part(&semi_positive_part(&a)),
                positive_part(&a)
            );
        }
    }

    #[test]
    fn open_negation_of_eq() {
        assert_eq!(open_negation(&f("s = t")).unwrap(), f("s < t | t < s"));
        assert_eq!(open_negation(&f("s < t")).unwrap(), f("s = t | t < s"));
        assert_eq!(open_positive(&f("T")).unwrap(), Formula::Top);
    }

    #[test]
    fn open_positive_of_implication() {
        // (x=0 -> y=0)+ = (x=0)^neg | (y=0)+
        assert_eq!(
            open_positive(&f("(x = 0 -> y = 0)")).unwrap(),
            f("(x < 0 | 0 < x) | y = 0")
        );
    }

    #[test]
    fn open_rejects_quantifiers() {
        assert_eq!(
            open_positive(&f("E x. x = 0")),
            Err(TransformError::NotQuantifierFree)
        );
        assert_eq!(
            open_negation(&f("![x](T -> x = x)")),
            Err(TransformError::NotQuantifierFree)
        );
    }

    #[test]
    fn bounded_negation_clauses() {
        assert_eq!(bounded_negation(&f("T")).unwrap(), Formula::Bot);
        assert_eq!(
            bounded_negation(&f("s < t")).unwrap(),
            f("t < s | s = t")
        );
        assert_eq!(
            bounded_negation(&f("E x. x < t & x = y")).unwrap(),
            f("![x](x < t -> (y < x | x < y))")
        );
        assert_eq!(
            bounded_negation(&f("![x](x < t -> x = y)")).unwrap(),
            f("E x. x < t & (y < x | x < y)")
        );
        assert_eq!(
            bounded_negation(&f("E x. x = y")),
            Err(TransformError::NotDeltaZero)
        );
    }

    #[test]
    fn bounded_negation_stays_delta_zero() {
        use crate::syntax::classify;
        for s in [
            "E x. x < t & x = y",
            "![x](x < t -> (x = 0 -> F))",
            "x = y | (x < y & T)",
        ] {
            let b = bounded_negation(&f(s)).unwrap();
            assert!(classify(&b).contains(&FormulaClass::DeltaZero), "{b}");
        }
    }
}
