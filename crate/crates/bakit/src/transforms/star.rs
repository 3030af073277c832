//! Elimination of cut-off subtraction: each atom `B(t ∸ s)` becomes
//! `∃z(((t < s ∧ z = 0) ∨ t = s + z) ∧ B(z))` with `z` fresh, iterated to a
//! fixpoint. The innermost, leftmost `∸` occurrence is rewritten first, so
//! the guard terms are always `∸`-free.

use crate::syntax::{fresh_name, Formula, Ident, Term};
use std::collections::BTreeSet;

/// Rewrites a formula of the extended language into one without `∸`,
/// preserving truth over the naturals with `∸` read as cut-off.
pub fn star_translate(f: &Formula) -> Formula {
    let mut used = f.all_names();
    let mut cur = f.clone();
    while let Some(next) = step(&cur, &mut used) {
        cur = next;
    }
    cur
}

/// One rewrite step, or `None` at the fixpoint.
fn step(f: &Formula, used: &mut BTreeSet<Ident>) -> Option<Formula> {
    match f {
        Formula::Top | Formula::Bot => None,
        Formula::Eq(_, _) | Formula::Lt(_, _) => rewrite_atom(f, used),
        Formula::And(l, r) => combine(l, r, used, Formula::and),
        Formula::Or(l, r) => combine(l, r, used, Formula::or),
        Formula::Exists(v, body) => {
            step(body, used).map(|b| Formula::Exists(v.clone(), Box::new(b)))
        }
        Formula::Block(vars, ante, cons) => match step(ante, used) {
            Some(a) => Some(Formula::Block(vars.clone(), Box::new(a), Box::new((**cons).clone()))),
            None => step(cons, used)
                .map(|c| Formula::Block(vars.clone(), Box::new((**ante).clone()), Box::new(c))),
        },
    }
}

fn combine(
    l: &Formula,
    r: &Formula,
    used: &mut BTreeSet<Ident>,
    mk: impl Fn(Formula, Formula) -> Formula,
) -> Option<Formula> {
    match step(l, used) {
        Some(l2) => Some(mk(l2, r.clone())),
        None => step(r, used).map(|r2| mk(l.clone(), r2)),
    }
}

/// Replaces the innermost-leftmost `∸` occurrence of an atom, wrapping the
/// atom in the guard existential.
type Rebuild = fn(&Formula, Vec<Term>) -> Formula;

fn rewrite_atom(atom: &Formula, used: &mut BTreeSet<Ident>) -> Option<Formula> {
    let (terms, rebuild): (Vec<&Term>, Rebuild) = match atom {
        Formula::Eq(l, r) | Formula::Lt(l, r) => (vec![l, r], |orig, ts| {
            let mut it = ts.into_iter();
            let l = it.next().unwrap();
            let r = it.next().unwrap();
            match orig {
                Formula::Eq(_, _) => Formula::Eq(l, r),
                Formula::Lt(_, _) => Formula::Lt(l, r),
                _ => unreachable!(),
            }
        }),
        _ => return None,
    };
    let mut target: Option<(Term, Term)> = None; // (t, s) of the chosen t ∸ s
    let z = fresh_name("z", used);
    let mut new_terms = Vec::new();
    for t in terms {
        if target.is_none() {
            let (replaced, hit) = replace_innermost(t, &z);
            if let Some(ts) = hit {
                target = Some(ts);
                new_terms.push(replaced);
                continue;
            }
        }
        new_terms.push(t.clone());
    }
    let (t, s) = target?;
    used.insert(z.clone());
    let body = rebuild(atom, new_terms);
    // ((t < s & z = 0) | t = s + z) & B(z)
    let guard = Formula::or(
        Formula::and(
            Formula::Lt(t.clone(), s.clone()),
            Formula::Eq(Term::Var(z.clone()), Term::Zero),
        ),
        Formula::Eq(t, Term::add(s, Term::Var(z.clone()))),
    );
    Some(Formula::Exists(z, Box::new(Formula::and(guard, body))))
}

/// Replaces the leftmost `∸` node with no `∸` inside its own arguments by
/// the variable `z`; returns the rewritten term and the `(t, s)` pair.
fn replace_innermost(term: &Term, z: &str) -> (Term, Option<(Term, Term)>) {
    match term {
        Term::Var(_) | Term::Zero => (term.clone(), None),
        Term::Succ(inner) => {
            let (t, hit) = replace_innermost(inner, z);
            (Term::succ(t), hit)
        }
        Term::Add(l, r) => binary(l, r, z, Term::add),
        Term::Mul(l, r) => binary(l, r, z, Term::mul),
        Term::Monus(l, r) => {
            // Prefer a deeper occurrence on the left, then on the right.
            let (l2, hit) = replace_innermost(l, z);
            if hit.is_some() {
                return (Term::monus(l2, (**r).clone()), hit);
            }
            let (r2, hit) = replace_innermost(r, z);
            if hit.is_some() {
                return (Term::monus((**l).clone(), r2), hit);
            }
            (Term::var(z), Some(((**l).clone(), (**r).clone())))
        }
    }
}

fn binary(
    l: &Term,
    r: &Term,
    z: &str,
    mk: impl Fn(Term, Term) -> Term,
) -> (Term, Option<(Term, Term)>) {
    let (l2, hit) = replace_innermost(l, z);
    if hit.is_some() {
        return (mk(l2, r.clone()), hit);
    }
    let (r2, hit) = replace_innermost(r, z);
    (mk(l.clone(), r2), hit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, Lang};

    fn fc(s: &str) -> Formula {
        parse_formula(s, Lang::Lc).unwrap()
    }

    #[test]
    fn single_replacement() {
        let got = star_translate(&fc("x -. y = 0"));
        let want = fc("E z. ((x < y & z = 0) | x = y + z) & z = 0");
        assert_eq!(got, want);
    }

    #[test]
    fn monus_free_is_fixpoint() {
        let g = fc("E x. x = 0 & ![y](y < x -> y = 0)");
        assert_eq!(star_translate(&g), g);
    }

    #[test]
    fn nested_innermost_first() {
        let got = star_translate(&fc("(x -. y) -. y = 0"));
        // inner x -. y becomes z, then z -. y becomes z'
        let want = fc(
            "E z. ((x < y & z = 0) | x = y + z) & \
             (E z'. ((z < y & z' = 0) | z = y + z') & z' = 0)",
        );
        assert_eq!(got, want);
        assert!(!got.uses_monus());
    }

    #[test]
    fn output_is_monus_free() {
        for s in [
            "S(x -. y) = y -. x",
            "E u. u -. S0 < x",
            "![a](a -. a = 0 -> T)",
        ] {
            assert!(!star_translate(&fc(s)).uses_monus(), "{s}");
        }
    }
}
