//! Term evaluation and bounded classical satisfaction in a single
//! structure.

use super::{Assignment, ElementId, EvalBound, FiniteTables, StructureSpec, Truth3};
use crate::syntax::{Formula, Term};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unassigned variable '{0}'")]
    Unassigned(String),
    #[error("cut-off subtraction is not available in this structure")]
    MonusDisabled,
    #[error("element {0} outside finite carrier of size {1}")]
    OutOfCarrier(u64, u64),
}

fn nstar_add(a: ElementId, b: ElementId) -> ElementId {
    use ElementId::*;
    match (a, b) {
        (Nat(x), Nat(y)) => Nat(x + y),
        _ => Inf,
    }
}

fn nstar_mul(a: ElementId, b: ElementId) -> ElementId {
    use ElementId::*;
    match (a, b) {
        (Nat(x), Nat(y)) => Nat(x * y),
        (Nat(0), Inf) | (Inf, Nat(0)) => Nat(0),
        _ => Inf,
    }
}

fn nstar_lt(a: ElementId, b: ElementId) -> bool {
    use ElementId::*;
    match (a, b) {
        (Nat(x), Nat(y)) => x < y,
        (_, Inf) => true, // n < ∞ and ∞ < ∞
        (Inf, Nat(_)) => false,
    }
}

fn table(t: &FiniteTables, e: ElementId) -> Result<u64, EvalError> {
    match e {
        ElementId::Nat(n) if n < t.size => Ok(n),
        ElementId::Nat(n) => Err(EvalError::OutOfCarrier(n, t.size)),
        ElementId::Inf => Err(EvalError::OutOfCarrier(u64::MAX, t.size)),
    }
}

/// Evaluates a term bottom-up on the term tree.
pub fn eval_term(s: &StructureSpec, t: &Term, asg: &Assignment) -> Result<ElementId, EvalError> {
    match t {
        Term::Var(v) => asg
            .get(v)
            .copied()
            .ok_or_else(|| EvalError::Unassigned(v.clone())),
        Term::Zero => Ok(ElementId::Nat(0)),
        Term::Succ(inner) => {
            let x = eval_term(s, inner, asg)?;
            match s {
                StructureSpec::StdN { .. } => match x {
                    ElementId::Nat(n) => Ok(ElementId::Nat(n + 1)),
                    ElementId::Inf => unreachable!("no ∞ in ℕ"),
                },
                StructureSpec::NStar => Ok(match x {
                    ElementId::Nat(n) => ElementId::Nat(n + 1),
                    ElementId::Inf => ElementId::Inf,
                }),
                StructureSpec::FiniteTable(t) => {
                    let a = table(t, x)?;
                    Ok(ElementId::Nat(t.succ[a as usize]))
                }
            }
        }
        Term::Add(l, r) => {
            let a = eval_term(s, l, asg)?;
            let b = eval_term(s, r, asg)?;
            match s {
                StructureSpec::StdN { .. } => match (a, b) {
                    (ElementId::Nat(x), ElementId::Nat(y)) => Ok(ElementId::Nat(x + y)),
                    _ => unreachable!("no ∞ in ℕ"),
                },
                StructureSpec::NStar => Ok(nstar_add(a, b)),
                StructureSpec::FiniteTable(t) => {
                    let (x, y) = (table(t, a)?, table(t, b)?);
                    Ok(ElementId::Nat(t.add[x as usize][y as usize]))
                }
            }
        }
        Term::Mul(l, r) => {
            let a = eval_term(s, l, asg)?;
            let b = eval_term(s, r, asg)?;
            match s {
                StructureSpec::StdN { .. } => match (a, b) {
                    (ElementId::Nat(x), ElementId::Nat(y)) => Ok(ElementId::Nat(x * y)),
                    _ => unreachable!("no ∞ in ℕ"),
                },
                StructureSpec::NStar => Ok(nstar_mul(a, b)),
                StructureSpec::FiniteTable(t) => {
                    let (x, y) = (table(t, a)?, table(t, b)?);
                    Ok(ElementId::Nat(t.mul[x as usize][y as usize]))
                }
            }
        }
        Term::Monus(l, r) => {
            if !s.monus_enabled() {
                return Err(EvalError::MonusDisabled);
            }
            let a = eval_term(s, l, asg)?;
            let b = eval_term(s, r, asg)?;
            match s {
                StructureSpec::StdN { .. } => match (a, b) {
                    (ElementId::Nat(x), ElementId::Nat(y)) => {
                        Ok(ElementId::Nat(x.saturating_sub(y)))
                    }
                    _ => unreachable!("no ∞ in ℕ"),
                },
                StructureSpec::NStar => Err(EvalError::MonusDisabled),
                StructureSpec::FiniteTable(t) => {
                    let (x, y) = (table(t, a)?, table(t, b)?);
                    let m = t.monus.as_ref().expect("monus_enabled checked");
                    Ok(ElementId::Nat(m[x as usize][y as usize]))
                }
            }
        }
    }
}

pub(crate) fn rel_lt(s: &StructureSpec, a: ElementId, b: ElementId) -> Result<bool, EvalError> {
    match s {
        StructureSpec::StdN { .. } => match (a, b) {
            (ElementId::Nat(x), ElementId::Nat(y)) => Ok(x < y),
            _ => unreachable!("no ∞ in ℕ"),
        },
        StructureSpec::NStar => Ok(nstar_lt(a, b)),
        StructureSpec::FiniteTable(t) => {
            let (x, y) = (table(t, a)?, table(t, b)?);
            Ok(t.lt[x as usize][y as usize])
        }
    }
}

/// Quantifier candidate set: the whole carrier when finite (exhaustive),
/// otherwise `{0..B}` plus optionally `∞`.
pub(crate) fn candidates(s: &StructureSpec, b: EvalBound) -> (Vec<ElementId>, bool) {
    match s {
        StructureSpec::FiniteTable(t) => ((0..t.size).map(ElementId::Nat).collect(), true),
        StructureSpec::StdN { .. } => ((0..=b.witness_bound).map(ElementId::Nat).collect(), false),
        StructureSpec::NStar => {
            let mut v: Vec<ElementId> = (0..=b.witness_bound).map(ElementId::Nat).collect();
            if b.include_inf {
                v.push(ElementId::Inf);
            }
            (v, false)
        }
    }
}

/// Elements strictly below `bound` in the structure; `None` when that set
/// is not finitely enumerable (i.e. the bound is `∞`).
pub(crate) fn below(s: &StructureSpec, bound: ElementId) -> Option<Vec<ElementId>> {
    match bound {
        ElementId::Nat(n) => match s {
            StructureSpec::FiniteTable(t) => Some(
                (0..t.size)
                    .filter(|&m| t.lt[m as usize][n as usize])
                    .map(ElementId::Nat)
                    .collect(),
            ),
            _ => Some((0..n).map(ElementId::Nat).collect()),
        },
        // x < ∞ holds for every element including ∞ itself
        ElementId::Inf => None,
    }
}

/// All tuples `range^n`, streamed through a callback; the callback returns
/// `false` to stop early.
pub(crate) fn for_each_tuple(
    range: &[ElementId],
    n: usize,
    mut f: impl FnMut(&[ElementId]) -> bool,
) {
    if n == 0 {
        f(&[]);
        return;
    }
    if range.is_empty() {
        return;
    }
    let total = (range.len() as u128).pow(n as u32);
    let mut tuple = vec![range[0]; n];
    for mut code in 0..total {
        for slot in tuple.iter_mut() {
            *slot = range[(code % range.len() as u128) as usize];
            code /= range.len() as u128;
        }
        if !f(&tuple) {
            return;
        }
    }
}

/// Bounded classical satisfaction. `True`/`False` are sound; `Unknown`
/// only arises from an exhausted witness search over an infinite carrier.
pub fn sat(s: &StructureSpec, f: &Formula, asg: &Assignment, b: EvalBound) -> Result<Truth3, EvalError> {
    match f {
        Formula::Top => Ok(Truth3::True),
        Formula::Bot => Ok(Truth3::False),
        Formula::Eq(l, r) => {
            let (a, c) = (eval_term(s, l, asg)?, eval_term(s, r, asg)?);
            Ok(if a == c { Truth3::True } else { Truth3::False })
        }
        Formula::Lt(l, r) => {
            let (a, c) = (eval_term(s, l, asg)?, eval_term(s, r, asg)?);
            Ok(if rel_lt(s, a, c)? {
                Truth3::True
            } else {
                Truth3::False
            })
        }
        Formula::And(l, r) => Ok(sat(s, l, asg, b)?.and(sat(s, r, asg, b)?)),
        Formula::Or(l, r) => Ok(sat(s, l, asg, b)?.or(sat(s, r, asg, b)?)),
        Formula::Exists(x, body) => {
            // Δ₀ bounded pattern ∃x(x<s ∧ A): exact when the bound is finite.
            if let Formula::And(guard, rest) = body.as_ref() {
                if let Formula::Lt(Term::Var(v), bound_term) = guard.as_ref() {
                    if v == x && !bound_term.vars().contains(x) {
                        let bound_val = eval_term(s, bound_term, asg)?;
                        if let Some(range) = below(s, bound_val) {
                            return exists_over(s, x, rest, asg, b, range, true);
                        }
                    }
                }
            }
            let (range, exhaustive) = candidates(s, b);
            exists_over(s, x, body, asg, b, range, exhaustive)
        }
        Formula::Block(vars, ante, cons) => {
            // Classical reading: ∀vars (ante → cons).
            if let [x] = vars.as_slice() {
                if let Formula::Lt(Term::Var(v), bound_term) = ante.as_ref() {
                    if v == x && !bound_term.vars().contains(x) {
                        let bound_val = eval_term(s, bound_term, asg)?;
                        if let Some(range) = below(s, bound_val) {
                            return forall_over(
                                s,
                                std::slice::from_ref(x),
                                &Formula::Top,
                                cons,
                                asg,
                                b,
                                range,
                                true,
                            );
                        }
                    }
                }
            }
            let (range, exhaustive) = candidates(s, b);
            forall_over(s, vars, ante, cons, asg, b, range, exhaustive)
        }
    }
}

fn exists_over(
    s: &StructureSpec,
    x: &str,
    body: &Formula,
    asg: &Assignment,
    b: EvalBound,
    range: Vec<ElementId>,
    exhaustive: bool,
) -> Result<Truth3, EvalError> {
    let mut all_false = true;
    for e in range {
        let mut inner = asg.clone();
        inner.insert(x.to_string(), e);
        match sat(s, body, &inner, b)? {
            Truth3::True => return Ok(Truth3::True),
            Truth3::False => {}
            Truth3::Unknown(_) => all_false = false,
        }
    }
    if exhaustive && all_false {
        Ok(Truth3::False)
    } else {
        Ok(Truth3::Unknown(b.witness_bound))
    }
}

#[allow(clippy::too_many_arguments)]
fn forall_over(
    s: &StructureSpec,
    vars: &[String],
    ante: &Formula,
    cons: &Formula,
    asg: &Assignment,
    b: EvalBound,
    range: Vec<ElementId>,
    exhaustive: bool,
) -> Result<Truth3, EvalError> {
    let mut undecided = false;
    let mut refuted = false;
    let mut failure: Option<EvalError> = None;
    for_each_tuple(&range, vars.len(), |tuple| {
        let mut inner = asg.clone();
        for (v, e) in vars.iter().zip(tuple) {
            inner.insert(v.clone(), *e);
        }
        let a = match sat(s, ante, &inner, b) {
            Ok(v) => v,
            Err(e) => {
                failure = Some(e);
                return false;
            }
        };
        if a == Truth3::False {
            return true;
        }
        let c = match sat(s, cons, &inner, b) {
            Ok(v) => v,
            Err(e) => {
                failure = Some(e);
                return false;
            }
        };
        match (a, c) {
            (Truth3::True, Truth3::False) => {
                refuted = true;
                false
            }
            (Truth3::True, Truth3::True) => true,
            _ => {
                undecided = true;
                true
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let _ = exhaustive; // the candidate set is the test domain for ∀
    if refuted {
        Ok(Truth3::False)
    } else if undecided {
        Ok(Truth3::Unknown(b.witness_bound))
    } else {
        Ok(Truth3::True)
    }
}

fn formula_size(f: &Formula) -> usize {
    match f {
        Formula::Top | Formula::Bot | Formula::Eq(_, _) | Formula::Lt(_, _) => 1,
        Formula::And(l, r) | Formula::Or(l, r) => 1 + formula_size(l) + formula_size(r),
        Formula::Exists(_, b) => 2 + formula_size(b),
        Formula::Block(_, a, c) => 2 + formula_size(a) + formula_size(c),
    }
}

fn order_by_size<'a>(l: &'a Formula, r: &'a Formula) -> (&'a Formula, &'a Formula) {
    if formula_size(r) < formula_size(l) {
        (r, l)
    } else {
        (l, r)
    }
}

fn bounded_range_exists(
    s: &StructureSpec,
    x: &str,
    body: &Formula,
    asg: &Assignment,
) -> Result<Option<Vec<ElementId>>, EvalError> {
    if let Formula::And(guard, _) = body {
        if let Formula::Lt(Term::Var(v), bound_term) = guard.as_ref() {
            if v == x && !bound_term.vars().contains(x) {
                let bound_val = eval_term(s, bound_term, asg)?;
                return Ok(below(s, bound_val));
            }
        }
    }
    Ok(None)
}

/// Two-valued evaluation that *treats the candidate set as exhaustive*.
/// Sound only when the caller knows every witness relevant to the formula
/// lies within the bound (e.g. guarded existentials whose witness is forced
/// below a term value). Scenario code uses this for table comparisons.
pub fn sat_capped(
    s: &StructureSpec,
    f: &Formula,
    asg: &Assignment,
    cap: u64,
) -> Result<bool, EvalError> {
    match f {
        Formula::Top => Ok(true),
        Formula::Bot => Ok(false),
        Formula::Eq(l, r) => Ok(eval_term(s, l, asg)? == eval_term(s, r, asg)?),
        Formula::Lt(l, r) => rel_lt(s, eval_term(s, l, asg)?, eval_term(s, r, asg)?),
        // evaluate the syntactically smaller operand first so that a
        // cheap decisive side short-circuits a quantifier-heavy one
        Formula::And(l, r) => {
            let (first, second) = order_by_size(l, r);
            Ok(sat_capped(s, first, asg, cap)? && sat_capped(s, second, asg, cap)?)
        }
        Formula::Or(l, r) => {
            let (first, second) = order_by_size(l, r);
            Ok(sat_capped(s, first, asg, cap)? || sat_capped(s, second, asg, cap)?)
        }
        Formula::Exists(x, body) => {
            // Δ₀ bounded pattern: range below the actual bound value
            let range = bounded_range_exists(s, x, body, asg)?
                .map(Ok)
                .unwrap_or_else(|| Ok(candidates(s, EvalBound::new(cap)).0))?;
            for e in range {
                let mut inner = asg.clone();
                inner.insert(x.clone(), e);
                if sat_capped(s, body, &inner, cap)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Formula::Block(vars, ante, cons) => {
            if let [x] = vars.as_slice() {
                if let Formula::Lt(Term::Var(v), bound_term) = ante.as_ref() {
                    if v == x && !bound_term.vars().contains(x) {
                        let bound_val = eval_term(s, bound_term, asg)?;
                        if let Some(range) = below(s, bound_val) {
                            for e in range {
                                let mut inner = asg.clone();
                                inner.insert(x.clone(), e);
                                if !sat_capped(s, cons, &inner, cap)? {
                                    return Ok(false);
                                }
                            }
                            return Ok(true);
                        }
                    }
                }
            }
            let (range, _) = candidates(s, EvalBound::new(cap));
            if vars.is_empty() {
                return Ok(!sat_capped(s, ante, asg, cap)? || sat_capped(s, cons, asg, cap)?);
            }
            let mut holds = true;
            let mut failure: Option<EvalError> = None;
            for_each_tuple(&range, vars.len(), |tuple| {
                let mut inner = asg.clone();
                for (v, e) in vars.iter().zip(tuple) {
                    inner.insert(v.clone(), *e);
                }
                let step = sat_capped(s, ante, &inner, cap)
                    .and_then(|a| Ok(a && !sat_capped(s, cons, &inner, cap)?));
                match step {
                    Ok(true) => {
                        holds = false;
                        false
                    }
                    Ok(false) => true,
                    Err(e) => {
                        failure = Some(e);
                        false
                    }
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
            Ok(holds)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_term, Lang};

    fn star() -> StructureSpec {
        StructureSpec::NStar
    }

    fn t(s: &str) -> Term {
        parse_term(s, Lang::Lc).unwrap()
    }

    fn f(s: &str) -> Formula {
        parse_formula(s, Lang::L).unwrap()
    }

    #[test]
    fn nstar_laws() {
        use ElementId::*;
        let asg = super::super::assignment(&[("a", Inf), ("n", Nat(3))]);
        let ev = |src: &str| eval_term(&star(), &t(src), &asg).unwrap();
        assert_eq!(ev("S a"), Inf);
        assert_eq!(ev("a + a"), Inf);
        assert_eq!(ev("a * a"), Inf);
        assert_eq!(ev("0 * a"), Nat(0));
        assert_eq!(ev("a * 0"), Nat(0));
        assert_eq!(ev("n + a"), Inf);
        assert_eq!(ev("a + n"), Inf);
        assert_eq!(ev("SSS0 * a"), Inf);
        assert_eq!(ev("a * SSSS0"), Inf);
    }

    #[test]
    fn nstar_order() {
        use ElementId::*;
        assert!(rel_lt(&star(), Inf, Inf).unwrap());
        assert!(rel_lt(&star(), Nat(7), Inf).unwrap());
        assert!(!rel_lt(&star(), Inf, Nat(7)).unwrap());
        assert!(rel_lt(&star(), Nat(2), Nat(3)).unwrap());
    }

    #[test]
    fn monus_cutoff_on_n() {
        let s = StructureSpec::std_n_with_monus();
        let asg = super::super::assignment(&[("x", ElementId::Nat(3)), ("y", ElementId::Nat(5))]);
        assert_eq!(
            eval_term(&s, &t("x -. y"), &asg).unwrap(),
            ElementId::Nat(0)
        );
        assert_eq!(
            eval_term(&s, &t("y -. x"), &asg).unwrap(),
            ElementId::Nat(2)
        );
        assert_eq!(
            eval_term(&star(), &t("x -. y"), &asg),
            Err(EvalError::MonusDisabled)
        );
    }

    #[test]
    fn exists_with_inf_witness() {
        // ℕ* ⊨ ∃y(a = y + y) with a := ∞, witnessed by ∞
        let asg = super::super::assignment(&[("a", ElementId::Inf)]);
        let got = sat(&star(), &f("E y. a = y + y"), &asg, EvalBound::with_inf(4)).unwrap();
        assert_eq!(got, Truth3::True);
    }

    #[test]
    fn unbounded_search_is_honestly_unknown() {
        // ℕ ⊨ ∃y(S0 = y + y) is false, but bounded search alone cannot say so
        let got = sat(
            &StructureSpec::std_n(),
            &f("E y. S0 = y + y"),
            &Assignment::new(),
            EvalBound::new(8),
        )
        .unwrap();
        assert_eq!(got, Truth3::Unknown(8));
    }

    #[test]
    fn bounded_patterns_are_exact() {
        let s = StructureSpec::std_n();
        let none = Assignment::new();
        let b = EvalBound::new(2); // deliberately tiny; patterns ignore it
        assert_eq!(
            sat(&s, &f("E x. x < SSSSS0 & x = SSSS0"), &none, b).unwrap(),
            Truth3::True
        );
        assert_eq!(
            sat(&s, &f("E x. x < SSS0 & x = SSSS0"), &none, b).unwrap(),
            Truth3::False
        );
        assert_eq!(
            sat(&s, &f("![x](x < SSSSS0 -> x < SSSSSS0)"), &none, b).unwrap(),
            Truth3::True
        );
        assert_eq!(
            sat(&s, &f("![x](x < SSSSS0 -> x < SSSS0)"), &none, b).unwrap(),
            Truth3::False
        );
    }

    #[test]
    fn bounded_pattern_with_inf_bound_falls_back() {
        // in ℕ*, ∃x(x < a ∧ ...) with a = ∞ ranges over everything
        let asg = super::super::assignment(&[("a", ElementId::Inf)]);
        let got = sat(&star(), &f("E x. x < a & x = a"), &asg, EvalBound::with_inf(2)).unwrap();
        assert_eq!(got, Truth3::True); // witness ∞ since ∞ < ∞
    }

    #[test]
    fn finite_table_is_exhaustive() {
        let tables = FiniteTables {
            size: 2,
            succ: vec![1, 1],
            add: vec![vec![0, 1], vec![1, 1]],
            mul: vec![vec![0, 0], vec![0, 1]],
            lt: vec![vec![false, true], vec![false, false]],
            monus: None,
        };
        let s = StructureSpec::FiniteTable(tables);
        let none = Assignment::new();
        assert_eq!(
            sat(&s, &f("E x. x = S0"), &none, EvalBound::new(0)).unwrap(),
            Truth3::True
        );
        assert_eq!(
            sat(&s, &f("E x. S x = 0"), &none, EvalBound::new(0)).unwrap(),
            Truth3::False
        );
    }
}
