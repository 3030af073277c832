//! Simultaneous substitution with capture *checking*.
//!
//! Substitution never renames: if a replaced occurrence would place a
//! variable of the substituted term under a quantifier binding that
//! variable, the whole substitution is rejected. Proof authors who need a
//! different bound name use [`rename_bound`] explicitly.

use super::{Formula, Ident, Term};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// A simultaneous substitution `[x₁/t₁, ..., xₙ/tₙ]`; domain variables are
/// pairwise distinct by construction of the map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution(pub BTreeMap<Ident, Term>);

impl Substitution {
    pub fn single(var: &str, t: Term) -> Substitution {
        let mut m = BTreeMap::new();
        m.insert(var.to_string(), t);
        Substitution(m)
    }

    pub fn of(pairs: &[(&str, Term)]) -> Substitution {
        Substitution(
            pairs
                .iter()
                .map(|(v, t)| (v.to_string(), t.clone()))
                .collect(),
        )
    }

    pub fn from_lists(vars: &[Ident], terms: &[Term]) -> Substitution {
        assert_eq!(vars.len(), terms.len());
        Substitution(vars.iter().cloned().zip(terms.iter().cloned()).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply_term(&self, t: &Term) -> Term {
        match t {
            Term::Var(v) => self.0.get(v).cloned().unwrap_or_else(|| t.clone()),
            Term::Zero => Term::Zero,
            Term::Succ(inner) => Term::succ(self.apply_term(inner)),
            Term::Add(l, r) => Term::add(self.apply_term(l), self.apply_term(r)),
            Term::Mul(l, r) => Term::mul(self.apply_term(l), self.apply_term(r)),
            Term::Monus(l, r) => Term::monus(self.apply_term(l), self.apply_term(r)),
        }
    }

    fn without(&self, binders: &[Ident]) -> Substitution {
        let mut m = self.0.clone();
        for b in binders {
            m.remove(b);
        }
        Substitution(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SubstError {
    /// Substituting `t` for `var` would put the occurrence of `captured`
    /// (a variable of `t`) in the scope of a quantifier binding it.
    #[error("substituting for '{var}' captures '{captured}' under the quantifier binding '{captured}'")]
    Capture { var: Ident, captured: Ident },
}

/// Simultaneous substitution of free occurrences, rejecting capture.
pub fn substitute(f: &Formula, sub: &Substitution) -> Result<Formula, SubstError> {
    if sub.is_empty() {
        return Ok(f.clone());
    }
    match f {
        Formula::Top | Formula::Bot => Ok(f.clone()),
        Formula::Eq(l, r) => Ok(Formula::Eq(sub.apply_term(l), sub.apply_term(r))),
        Formula::Lt(l, r) => Ok(Formula::Lt(sub.apply_term(l), sub.apply_term(r))),
        Formula::And(l, r) => Ok(Formula::and(substitute(l, sub)?, substitute(r, sub)?)),
        Formula::Or(l, r) => Ok(Formula::or(substitute(l, sub)?, substitute(r, sub)?)),
        Formula::Exists(v, body) => {
            let inner = sub.without(std::slice::from_ref(v));
            check_capture(&inner, std::slice::from_ref(v), body.free_vars())?;
            Ok(Formula::Exists(v.clone(), Box::new(substitute(body, &inner)?)))
        }
        Formula::Block(vars, ante, cons) => {
            let inner = sub.without(vars);
            let mut free = ante.free_vars();
            free.extend(cons.free_vars());
            check_capture(&inner, vars, free)?;
            Ok(Formula::Block(
                vars.clone(),
                Box::new(substitute(ante, &inner)?),
                Box::new(substitute(cons, &inner)?),
            ))
        }
    }
}

/// A binding actually fires under these binders iff its domain variable is
/// free in the scope; in that case no binder may occur in the replacement.
fn check_capture(
    sub: &Substitution,
    binders: &[Ident],
    scope_free: BTreeSet<Ident>,
) -> Result<(), SubstError> {
    for (v, t) in &sub.0 {
        if !scope_free.contains(v) {
            continue;
        }
        let tvars = t.vars();
        for b in binders {
            if tvars.contains(b) {
                return Err(SubstError::Capture {
                    var: v.clone(),
                    captured: b.clone(),
                });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RenameError {
    #[error("'{0}' already occurs in the formula")]
    NotFresh(Ident),
}

/// Renames every binder named `from` (with its bound occurrences) to `to`.
/// `to` must not occur anywhere in the formula.
pub fn rename_bound(f: &Formula, from: &str, to: &str) -> Result<Formula, RenameError> {
    if f.all_names().contains(to) {
        return Err(RenameError::NotFresh(to.to_string()));
    }
    Ok(rename_rec(f, from, to, false))
}

fn rename_term(t: &Term, from: &str, to: &str) -> Term {
    Substitution::single(from, Term::var(to)).apply_term(t)
}

fn rename_rec(f: &Formula, from: &str, to: &str, active: bool) -> Formula {
    match f {
        Formula::Top | Formula::Bot => f.clone(),
        Formula::Eq(l, r) => {
            if active {
                Formula::Eq(rename_term(l, from, to), rename_term(r, from, to))
            } else {
                f.clone()
            }
        }
        Formula::Lt(l, r) => {
            if active {
                Formula::Lt(rename_term(l, from, to), rename_term(r, from, to))
            } else {
                f.clone()
            }
        }
        Formula::And(l, r) => Formula::and(
            rename_rec(l, from, to, active),
            rename_rec(r, from, to, active),
        ),
        Formula::Or(l, r) => Formula::or(
            rename_rec(l, from, to, active),
            rename_rec(r, from, to, active),
        ),
        Formula::Exists(v, body) => {
            if v == from {
                Formula::Exists(to.to_string(), Box::new(rename_rec(body, from, to, true)))
            } else {
                Formula::Exists(v.clone(), Box::new(rename_rec(body, from, to, active)))
            }
        }
        Formula::Block(vars, ante, cons) => {
            let hit = vars.iter().any(|v| v == from);
            let vars = vars
                .iter()
                .map(|v| {
                    if v == from {
                        to.to_string()
                    } else {
                        v.clone()
                    }
                })
                .collect();
            let inner_active = active || hit;
            Formula::Block(
                vars,
                Box::new(rename_rec(ante, from, to, inner_active)),
                Box::new(rename_rec(cons, from, to, inner_active)),
            )
        }
    }
}
