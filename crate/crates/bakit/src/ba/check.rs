//! The proof checker: recomputes each node's conclusion from its rule id,
//! explicit instantiation, and premises, checks all side conditions, and
//! compares against the recorded conclusion. Nothing is ever inferred by
//! matching.

use super::{BaProof, BaRule, BindValue, Bindings, ProjSide, TheoryPack};
use crate::syntax::{substitute, Formula, Ident, Lang, Sequent, SubstError, Substitution, Term};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CheckErrorKind {
    #[error("rule {rule} takes {expected} premise(s), found {found}")]
    WrongArity {
        rule: String,
        expected: usize,
        found: usize,
    },
    #[error("missing binding '{0}'")]
    MissingBinding(String),
    #[error("binding '{0}' has the wrong kind")]
    BadBindingKind(String),
    #[error("conclusion mismatch: expected '{expected}', found '{found}'")]
    ConclusionMismatch { expected: String, found: String },
    #[error("premise mismatch: {0}")]
    PremiseMismatch(String),
    #[error("side condition violated: {0}")]
    SideCondition(String),
    #[error("capture in instantiation: {0}")]
    Capture(SubstError),
    #[error("theory axiom '{0}' is not available in pack '{1}'")]
    UnknownTheoryAxiom(String, String),
    #[error("cut-off subtraction used but the pack language is L")]
    LanguageViolation,
    #[error("variable list contains a repetition: {0:?}")]
    RepeatedVars(Vec<Ident>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at node {path:?} ({rule}): {kind}")]
pub struct ProofError {
    /// Premise indices from the root to the offending node.
    pub path: Vec<usize>,
    pub rule: String,
    pub kind: CheckErrorKind,
}

type Check<T> = Result<T, CheckErrorKind>;

fn get<'a>(bind: &'a Bindings, key: &str) -> Check<&'a BindValue> {
    bind.get(key)
        .ok_or_else(|| CheckErrorKind::MissingBinding(key.to_string()))
}

fn formula(bind: &Bindings, key: &str) -> Check<Formula> {
    match get(bind, key)? {
        BindValue::Formula(f) => Ok(f.clone()),
        _ => Err(CheckErrorKind::BadBindingKind(key.to_string())),
    }
}

fn term(bind: &Bindings, key: &str) -> Check<Term> {
    match get(bind, key)? {
        BindValue::Term(t) => Ok(t.clone()),
        _ => Err(CheckErrorKind::BadBindingKind(key.to_string())),
    }
}

fn var(bind: &Bindings, key: &str) -> Check<Ident> {
    match get(bind, key)? {
        BindValue::Var(v) => Ok(v.clone()),
        _ => Err(CheckErrorKind::BadBindingKind(key.to_string())),
    }
}

fn vars(bind: &Bindings, key: &str) -> Check<Vec<Ident>> {
    match get(bind, key)? {
        BindValue::Vars(v) => Ok(v.clone()),
        _ => Err(CheckErrorKind::BadBindingKind(key.to_string())),
    }
}

fn terms(bind: &Bindings, key: &str) -> Check<Vec<Term>> {
    match get(bind, key)? {
        BindValue::Terms(t) => Ok(t.clone()),
        _ => Err(CheckErrorKind::BadBindingKind(key.to_string())),
    }
}

fn side(bind: &Bindings, key: &str) -> Check<ProjSide> {
    match get(bind, key)? {
        BindValue::Side(s) => Ok(*s),
        _ => Err(CheckErrorKind::BadBindingKind(key.to_string())),
    }
}

fn distinct(vs: &[Ident]) -> Check<()> {
    let set: BTreeSet<_> = vs.iter().collect();
    if set.len() != vs.len() {
        Err(CheckErrorKind::RepeatedVars(vs.to_vec()))
    } else {
        Ok(())
    }
}

fn subst(f: &Formula, sub: &Substitution) -> Check<Formula> {
    substitute(f, sub).map_err(CheckErrorKind::Capture)
}

/// `t̄` may not mention any variable that is bound by a quantifier of the
/// given formulas (the literal reading of the substitution conditions on
/// axiom 11 and rule 17).
fn no_bound_vars_of(ts: &[Term], formulas: &[&Formula]) -> Check<()> {
    let mut binders = BTreeSet::new();
    for f in formulas {
        binders.extend(f.binding_vars());
    }
    for t in ts {
        for v in t.vars() {
            if binders.contains(&v) {
                return Err(CheckErrorKind::SideCondition(format!(
                    "variable '{v}' of the substituted terms is bound by a quantifier"
                )));
            }
        }
    }
    Ok(())
}

fn is_atomic_for_eq_axiom(f: &Formula, pack: &TheoryPack) -> bool {
    match f {
        Formula::Top | Formula::Bot | Formula::Eq(_, _) => true,
        Formula::Lt(_, _) => !pack.strict_atomic,
        _ => false,
    }
}

/// Computes the conclusion a node must have, also validating all side
/// conditions relative to the premises' (already accepted) conclusions.
fn expected_conclusion(
    rule: &BaRule,
    bind: &Bindings,
    premises: &[&Sequent],
    pack: &TheoryPack,
) -> Check<Sequent> {
    match rule {
        BaRule::BqcAx1 => {
            let a = formula(bind, "A")?;
            Ok(Sequent::new(a.clone(), a))
        }
        BaRule::BqcAx2 => Ok(Sequent::new(formula(bind, "A")?, Formula::Top)),
        BaRule::BqcAx3 => Ok(Sequent::new(Formula::Bot, formula(bind, "A")?)),
        BaRule::BqcAx4 => {
            let (a, b, c) = (formula(bind, "A")?, formula(bind, "B")?, formula(bind, "C")?);
            Ok(Sequent::new(
                Formula::and(a.clone(), Formula::or(b.clone(), c.clone())),
                Formula::or(Formula::and(a.clone(), b), Formula::and(a, c)),
            ))
        }
        BaRule::BqcAx5 => {
            let (a, x, b) = (formula(bind, "A")?, var(bind, "x")?, formula(bind, "B")?);
            if a.free_vars().contains(&x) {
                return Err(CheckErrorKind::SideCondition(format!(
                    "'{x}' must not be free in the conjunct outside the existential"
                )));
            }
            Ok(Sequent::new(
                Formula::and(a.clone(), Formula::Exists(x.clone(), Box::new(b.clone()))),
                Formula::Exists(x, Box::new(Formula::and(a, b))),
            ))
        }
        BaRule::BqcAx6 => {
            let t = term(bind, "t")?;
            Ok(Sequent::assert(Formula::Eq(t.clone(), t)))
        }
        BaRule::BqcAx7 => {
            let (x, t, a) = (var(bind, "x")?, term(bind, "t")?, formula(bind, "A")?);
            if !is_atomic_for_eq_axiom(&a, pack) {
                return Err(CheckErrorKind::SideCondition(
                    "equality axiom requires an atomic formula".into(),
                ));
            }
            let replaced = subst(&a, &Substitution::single(&x, t.clone()))?;
            Ok(Sequent::new(
                Formula::and(Formula::Eq(Term::Var(x), t), a),
                replaced,
            ))
        }
        BaRule::BqcAx8 => {
            let xs = vars(bind, "xs")?;
            distinct(&xs)?;
            let (a, b, c) = (formula(bind, "A")?, formula(bind, "B")?, formula(bind, "C")?);
            let blk = |l: &Formula, r: &Formula| {
                Formula::Block(xs.clone(), Box::new(l.clone()), Box::new(r.clone()))
            };
            Ok(Sequent::new(
                Formula::and(blk(&a, &b), blk(&b, &c)),
                blk(&a, &c),
            ))
        }
        BaRule::BqcAx9 => {
            let xs = vars(bind, "xs")?;
            distinct(&xs)?;
            let (a, b, c) = (formula(bind, "A")?, formula(bind, "B")?, formula(bind, "C")?);
            let blk = |l: Formula, r: Formula| {
                Formula::Block(xs.clone(), Box::new(l), Box::new(r))
            };
            Ok(Sequent::new(
                Formula::and(blk(a.clone(), b.clone()), blk(a.clone(), c.clone())),
                blk(a, Formula::and(b, c)),
            ))
        }
        BaRule::BqcAx10 => {
            let xs = vars(bind, "xs")?;
            distinct(&xs)?;
            let (a, b, c) = (formula(bind, "A")?, formula(bind, "B")?, formula(bind, "C")?);
            let blk = |l: Formula, r: Formula| {
                Formula::Block(xs.clone(), Box::new(l), Box::new(r))
            };
            Ok(Sequent::new(
                Formula::and(blk(b.clone(), a.clone()), blk(c.clone(), a.clone())),
                blk(Formula::or(b, c), a),
            ))
        }
        BaRule::BqcAx11 => {
            let xs = vars(bind, "xs")?;
            distinct(&xs)?;
            let ts = terms(bind, "ts")?;
            if ts.len() != xs.len() {
                return Err(CheckErrorKind::SideCondition(
                    "substituted terms must match the block variables in number".into(),
                ));
            }
            let (a, b) = (formula(bind, "A")?, formula(bind, "B")?);
            no_bound_vars_of(&ts, &[&a, &b])?;
            let sub = Substitution::from_lists(&xs, &ts);
            let (a2, b2) = (subst(&a, &sub)?, subst(&b, &sub)?);
            Ok(Sequent::new(
                Formula::Block(xs.clone(), Box::new(a), Box::new(b)),
                Formula::Block(xs, Box::new(a2), Box::new(b2)),
            ))
        }
        BaRule::BqcAx12 => {
            let xs = vars(bind, "xs")?;
            let ys = vars(bind, "ys")?;
            distinct(&xs)?;
            distinct(&ys)?;
            let (a, b) = (formula(bind, "A")?, formula(bind, "B")?);
            let lhs = Formula::Block(xs, Box::new(a.clone()), Box::new(b.clone()));
            let lhs_free = lhs.free_vars();
            for y in &ys {
                if lhs_free.contains(y) {
                    return Err(CheckErrorKind::SideCondition(format!(
                        "'{y}' is free on the left-hand side"
                    )));
                }
            }
            let rhs = Formula::Block(ys, Box::new(a), Box::new(b));
            Ok(Sequent::new(lhs, rhs))
        }
        BaRule::BqcAx13 => {
            let ys = vars(bind, "ys")?;
            let x = var(bind, "x")?;
            let mut ysx = ys.clone();
            ysx.push(x.clone());
            distinct(&ysx)?;
            let (b, a) = (formula(bind, "B")?, formula(bind, "A")?);
            if a.free_vars().contains(&x) {
                return Err(CheckErrorKind::SideCondition(format!(
                    "'{x}' must not be free in the conclusion formula"
                )));
            }
            Ok(Sequent::new(
                Formula::Block(ysx, Box::new(b.clone()), Box::new(a.clone())),
                Formula::Block(
                    ys,
                    Box::new(Formula::Exists(x, Box::new(b))),
                    Box::new(a),
                ),
            ))
        }
        BaRule::R14 => {
            let (p, q) = (premises[0], premises[1]);
            if p.cons != q.ante {
                return Err(CheckErrorKind::PremiseMismatch(format!(
                    "middle formulas differ: '{}' vs '{}'",
                    p.cons, q.ante
                )));
            }
            Ok(Sequent::new(p.ante.clone(), q.cons.clone()))
        }
        BaRule::R15 => {
            let (p, q) = (premises[0], premises[1]);
            if p.ante != q.ante {
                return Err(CheckErrorKind::PremiseMismatch(
                    "premises must share their antecedent".into(),
                ));
            }
            Ok(Sequent::new(
                p.ante.clone(),
                Formula::and(p.cons.clone(), q.cons.clone()),
            ))
        }
        BaRule::R15Rev => {
            let p = premises[0];
            match &p.cons {
                Formula::And(l, r) => Ok(Sequent::new(
                    p.ante.clone(),
                    match side(bind, "side")? {
                        ProjSide::Left => (**l).clone(),
                        ProjSide::Right => (**r).clone(),
                    },
                )),
                _ => Err(CheckErrorKind::PremiseMismatch(
                    "premise consequent must be a conjunction".into(),
                )),
            }
        }
        BaRule::R16 => {
            let (p, q) = (premises[0], premises[1]);
            if p.cons != q.cons {
                return Err(CheckErrorKind::PremiseMismatch(
                    "premises must share their consequent".into(),
                ));
            }
            Ok(Sequent::new(
                Formula::or(p.ante.clone(), q.ante.clone()),
                p.cons.clone(),
            ))
        }
        BaRule::R16Rev => {
            let p = premises[0];
            match &p.ante {
                Formula::Or(l, r) => Ok(Sequent::new(
                    match side(bind, "side")? {
                        ProjSide::Left => (**l).clone(),
                        ProjSide::Right => (**r).clone(),
                    },
                    p.cons.clone(),
                )),
                _ => Err(CheckErrorKind::PremiseMismatch(
                    "premise antecedent must be a disjunction".into(),
                )),
            }
        }
        BaRule::R17 => {
            let xs = vars(bind, "xs")?;
            distinct(&xs)?;
            let ts = terms(bind, "ts")?;
            if ts.len() != xs.len() {
                return Err(CheckErrorKind::SideCondition(
                    "substituted terms must match the variables in number".into(),
                ));
            }
            let p = premises[0];
            no_bound_vars_of(&ts, &[&p.ante, &p.cons])?;
            let sub = Substitution::from_lists(&xs, &ts);
            Ok(Sequent::new(subst(&p.ante, &sub)?, subst(&p.cons, &sub)?))
        }
        BaRule::R18 => {
            let x = var(bind, "x")?;
            let p = premises[0];
            if p.cons.free_vars().contains(&x) {
                return Err(CheckErrorKind::SideCondition(format!(
                    "'{x}' must not be free in the consequent"
                )));
            }
            Ok(Sequent::new(
                Formula::Exists(x, Box::new(p.ante.clone())),
                p.cons.clone(),
            ))
        }
        BaRule::R18Rev => {
            let x = var(bind, "x")?;
            let p = premises[0];
            match &p.ante {
                Formula::Exists(v, body) if *v == x => {
                    if p.cons.free_vars().contains(&x) {
                        return Err(CheckErrorKind::SideCondition(format!(
                            "'{x}' must not be free in the consequent"
                        )));
                    }
                    Ok(Sequent::new((**body).clone(), p.cons.clone()))
                }
                _ => Err(CheckErrorKind::PremiseMismatch(format!(
                    "premise antecedent must be an existential binding '{x}'"
                ))),
            }
        }
        BaRule::R19 => {
            let xs = vars(bind, "xs")?;
            distinct(&xs)?;
            let p = premises[0];
            match &p.ante {
                Formula::And(a, b) => {
                    let a_free = a.free_vars();
                    for x in &xs {
                        if a_free.contains(x) {
                            return Err(CheckErrorKind::SideCondition(format!(
                                "'{x}' is free in the retained antecedent"
                            )));
                        }
                    }
                    Ok(Sequent::new(
                        (**a).clone(),
                        Formula::Block(xs, b.clone(), Box::new(p.cons.clone())),
                    ))
                }
                _ => Err(CheckErrorKind::PremiseMismatch(
                    "premise antecedent must be a conjunction".into(),
                )),
            }
        }
        BaRule::BaAx1 => {
            let t = term(bind, "t")?;
            Ok(Sequent::new(
                Formula::Eq(Term::succ(t), Term::Zero),
                Formula::Bot,
            ))
        }
        BaRule::BaAx2 => {
            let (s, t) = (term(bind, "s")?, term(bind, "t")?);
            Ok(Sequent::new(
                Formula::Eq(Term::succ(s.clone()), Term::succ(t.clone())),
                Formula::Eq(s, t),
            ))
        }
        BaRule::BaAx3 => {
            let t = term(bind, "t")?;
            Ok(Sequent::assert(Formula::Eq(
                Term::add(t.clone(), Term::Zero),
                t,
            )))
        }
        BaRule::BaAx4 => {
            let (s, t) = (term(bind, "s")?, term(bind, "t")?);
            Ok(Sequent::assert(Formula::Eq(
                Term::add(s.clone(), Term::succ(t.clone())),
                Term::succ(Term::add(s, t)),
            )))
        }
        BaRule::BaAx5 => {
            let t = term(bind, "t")?;
            Ok(Sequent::assert(Formula::Eq(
                Term::mul(t, Term::Zero),
                Term::Zero,
            )))
        }
        BaRule::BaAx6 => {
            let (s, t) = (term(bind, "s")?, term(bind, "t")?);
            Ok(Sequent::assert(Formula::Eq(
                Term::mul(s.clone(), Term::succ(t.clone())),
                Term::add(Term::mul(s.clone(), t), s),
            )))
        }
        BaRule::BaAx7 => {
            let ys = vars(bind, "ys")?;
            let x = var(bind, "x")?;
            let mut ysx = ys;
            ysx.push(x.clone());
            distinct(&ysx)?;
            let a = formula(bind, "A")?;
            let a_succ = subst(&a, &Substitution::single(&x, Term::succ(Term::Var(x.clone()))))?;
            let a_zero = subst(&a, &Substitution::single(&x, Term::Zero))?;
            Ok(Sequent::new(
                Formula::Block(ysx.clone(), Box::new(a.clone()), Box::new(a_succ)),
                Formula::Block(ysx, Box::new(a_zero), Box::new(a)),
            ))
        }
        BaRule::BaInd => {
            let x = var(bind, "x")?;
            let p = premises[0];
            let a = &p.ante;
            let a_succ = subst(a, &Substitution::single(&x, Term::succ(Term::Var(x.clone()))))?;
            if p.cons != a_succ {
                return Err(CheckErrorKind::PremiseMismatch(format!(
                    "premise consequent must be the antecedent with '{x}' advanced; expected '{a_succ}'"
                )));
            }
            let a_zero = subst(a, &Substitution::single(&x, Term::Zero))?;
            Ok(Sequent::new(a_zero, a.clone()))
        }
        BaRule::MonusLe => {
            if !pack.monus_axioms {
                return Err(CheckErrorKind::UnknownTheoryAxiom(
                    rule.id(),
                    pack.name.clone(),
                ));
            }
            let (s, t) = (term(bind, "s")?, term(bind, "t")?);
            Ok(Sequent::new(
                Formula::le(s.clone(), t.clone()),
                Formula::Eq(Term::monus(s, t), Term::Zero),
            ))
        }
        BaRule::MonusGt => {
            if !pack.monus_axioms {
                return Err(CheckErrorKind::UnknownTheoryAxiom(
                    rule.id(),
                    pack.name.clone(),
                ));
            }
            let (s, t) = (term(bind, "s")?, term(bind, "t")?);
            Ok(Sequent::new(
                Formula::le(t.clone(), s.clone()),
                Formula::Eq(
                    Term::monus(Term::succ(s.clone()), t.clone()),
                    Term::succ(Term::monus(s, t)),
                ),
            ))
        }
        BaRule::Theory(name) => theory_conclusion(name, bind, pack),
    }
}

fn theory_conclusion(name: &str, bind: &Bindings, pack: &TheoryPack) -> Check<Sequent> {
    match name {
        "u" if pack.cancellation_axiom => {
            let (s, t, r) = (term(bind, "s")?, term(bind, "t")?, term(bind, "r")?);
            Ok(Sequent::new(
                Formula::Eq(
                    Term::add(s.clone(), r.clone()),
                    Term::add(t.clone(), r),
                ),
                Formula::Eq(s, t),
            ))
        }
        "eba" if pack.eba_axiom => Ok(Sequent::new(
            Formula::imp(Formula::Top, Formula::Bot),
            Formula::Bot,
        )),
        // defining axioms of the order relation (conservative extension,
        // available in every pack)
        "lt-fwd" | "lt-bwd" => {
            let (s, t, z) = (term(bind, "s")?, term(bind, "t")?, var(bind, "z")?);
            if s.vars().contains(&z) || t.vars().contains(&z) {
                return Err(CheckErrorKind::SideCondition(format!(
                    "witness variable '{z}' occurs in the related terms"
                )));
            }
            let lt = Formula::Lt(s.clone(), t.clone());
            let defn = Formula::Exists(
                z.clone(),
                Box::new(Formula::Eq(
                    Term::add(s, Term::succ(Term::Var(z))),
                    t,
                )),
            );
            Ok(if name == "lt-fwd" {
                Sequent::new(lt, defn)
            } else {
                Sequent::new(defn, lt)
            })
        }
        _ => {
            for (n, s) in &pack.extra {
                if n == name {
                    return Ok(s.clone());
                }
            }
            Err(CheckErrorKind::UnknownTheoryAxiom(
                name.to_string(),
                pack.name.clone(),
            ))
        }
    }
}

/// Checks a proof tree against a theory pack.
pub fn check_proof(p: &BaProof, pack: &TheoryPack) -> Result<(), ProofError> {
    let mut path = Vec::new();
    check_rec(p, pack, &mut path)
}

fn check_rec(p: &BaProof, pack: &TheoryPack, path: &mut Vec<usize>) -> Result<(), ProofError> {
    let fail = |path: &[usize], kind: CheckErrorKind| ProofError {
        path: path.to_vec(),
        rule: p.just.rule.id(),
        kind,
    };
    let expected = p.just.rule.arity();
    if p.premises.len() != expected {
        return Err(fail(
            path,
            CheckErrorKind::WrongArity {
                rule: p.just.rule.id(),
                expected,
                found: p.premises.len(),
            },
        ));
    }
    for (i, q) in p.premises.iter().enumerate() {
        path.push(i);
        check_rec(q, pack, path)?;
        path.pop();
    }
    if pack.lang == Lang::L && p.conclusion.uses_monus() {
        return Err(fail(path, CheckErrorKind::LanguageViolation));
    }
    let premise_seqs: Vec<&Sequent> = p.premises.iter().map(|q| &q.conclusion).collect();
    let want = expected_conclusion(&p.just.rule, &p.just.bind, &premise_seqs, pack)
        .map_err(|kind| fail(path, kind))?;
    if want != p.conclusion {
        return Err(fail(
            path,
            CheckErrorKind::ConclusionMismatch {
                expected: want.to_string(),
                found: p.conclusion.to_string(),
            },
        ));
    }
    Ok(())
}
