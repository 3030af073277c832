//! Checker for the list-based sequent calculus. Like the other checker,
//! every conclusion is recomputed from the rule data and premises and
//! compared literally.

use super::{ClassPredicate, LkFormula, LkProof, LkRule, LkSequent};
use crate::syntax::Term;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LkCheckErrorKind {
    #[error("rule {rule} takes {expected} premise(s), found {found}")]
    WrongArity {
        rule: String,
        expected: usize,
        found: usize,
    },
    #[error("conclusion mismatch: expected '{expected}', found '{found}'")]
    ConclusionMismatch { expected: String, found: String },
    #[error("premise mismatch: {0}")]
    PremiseMismatch(String),
    #[error("eigenvariable violation: {0}")]
    Eigenvariable(String),
    #[error("substitution error: {0}")]
    Substitution(String),
    #[error("induction formula outside the class '{0}': {1}")]
    InductionClass(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at node {path:?} ({rule}): {kind}")]
pub struct LkError {
    pub path: Vec<usize>,
    pub rule: String,
    pub kind: LkCheckErrorKind,
}

type Check<T> = Result<T, LkCheckErrorKind>;

fn mismatch(msg: impl Into<String>) -> LkCheckErrorKind {
    LkCheckErrorKind::PremiseMismatch(msg.into())
}

fn last_ante(s: &LkSequent) -> Check<(&[LkFormula], &LkFormula)> {
    match s.ante.split_last() {
        Some((last, rest)) => Ok((rest, last)),
        None => Err(mismatch("premise antecedent is empty")),
    }
}

fn first_cons(s: &LkSequent) -> Check<(&LkFormula, &[LkFormula])> {
    match s.cons.split_first() {
        Some((first, rest)) => Ok((first, rest)),
        None => Err(mismatch("premise consequent is empty")),
    }
}

fn cat(a: &[LkFormula], b: &[LkFormula]) -> Vec<LkFormula> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

fn with_last(a: &[LkFormula], f: LkFormula) -> Vec<LkFormula> {
    let mut v = a.to_vec();
    v.push(f);
    v
}

fn with_first(f: LkFormula, a: &[LkFormula]) -> Vec<LkFormula> {
    let mut v = vec![f];
    v.extend_from_slice(a);
    v
}

fn substituted(a: &LkFormula, x: &str, t: &Term) -> Check<LkFormula> {
    a.substituted(x, t).map_err(LkCheckErrorKind::Substitution)
}

/// Eigenvariable must not occur free in the conclusion parts.
fn eigen_ok(y: &str, parts: &[&[LkFormula]], also: &LkFormula) -> Check<()> {
    for part in parts {
        for f in *part {
            if f.free_vars().contains(y) {
                return Err(LkCheckErrorKind::Eigenvariable(format!(
                    "'{y}' is free in the context"
                )));
            }
        }
    }
    if also.free_vars().contains(y) {
        return Err(LkCheckErrorKind::Eigenvariable(format!(
            "'{y}' is free in the principal formula"
        )));
    }
    Ok(())
}

fn expected_conclusion(rule: &LkRule, premises: &[&LkSequent]) -> Check<LkSequent> {
    match rule {
        LkRule::Ax { a } => Ok(LkSequent::new(vec![a.clone()], vec![a.clone()])),
        LkRule::ExL { i } => {
            let p = premises[0];
            if i + 1 >= p.ante.len() {
                return Err(mismatch("exchange index out of range"));
            }
            let mut ante = p.ante.clone();
            ante.swap(*i, i + 1);
            Ok(LkSequent::new(ante, p.cons.clone()))
        }
        LkRule::ExR { i } => {
            let p = premises[0];
            if i + 1 >= p.cons.len() {
                return Err(mismatch("exchange index out of range"));
            }
            let mut cons = p.cons.clone();
            cons.swap(*i, i + 1);
            Ok(LkSequent::new(p.ante.clone(), cons))
        }
        LkRule::WkL { a } => {
            let p = premises[0];
            Ok(LkSequent::new(
                with_last(&p.ante, a.clone()),
                p.cons.clone(),
            ))
        }
        LkRule::WkR { a } => {
            let p = premises[0];
            Ok(LkSequent::new(
                p.ante.clone(),
                with_first(a.clone(), &p.cons),
            ))
        }
        LkRule::CtrL => {
            let p = premises[0];
            let n = p.ante.len();
            if n < 2 || p.ante[n - 1] != p.ante[n - 2] {
                return Err(mismatch("last two antecedent formulas must be equal"));
            }
            Ok(LkSequent::new(p.ante[..n - 1].to_vec(), p.cons.clone()))
        }
        LkRule::CtrR => {
            let p = premises[0];
            if p.cons.len() < 2 || p.cons[0] != p.cons[1] {
                return Err(mismatch("first two consequent formulas must be equal"));
            }
            Ok(LkSequent::new(p.ante.clone(), p.cons[1..].to_vec()))
        }
        LkRule::Cut => {
            let (p, q) = (premises[0], premises[1]);
            let (a, delta2) = first_cons(p)?;
            let (pi, a2) = last_ante(q)?;
            if a != a2 {
                return Err(mismatch(format!(
                    "cut formulas differ: '{a}' vs '{a2}'"
                )));
            }
            Ok(LkSequent::new(
                cat(&p.ante, pi),
                cat(delta2, &q.cons),
            ))
        }
        LkRule::TopR => Ok(LkSequent::new(vec![], vec![LkFormula::Top])),
        LkRule::BotL => Ok(LkSequent::new(vec![LkFormula::Bot], vec![])),
        LkRule::NegL => {
            let p = premises[0];
            let (a, rest) = first_cons(p)?;
            Ok(LkSequent::new(
                with_last(&p.ante, LkFormula::neg(a.clone())),
                rest.to_vec(),
            ))
        }
        LkRule::NegR => {
            let p = premises[0];
            let (rest, a) = last_ante(p)?;
            Ok(LkSequent::new(
                rest.to_vec(),
                with_first(LkFormula::neg(a.clone()), &p.cons),
            ))
        }
        LkRule::AndL1 { other } => {
            let p = premises[0];
            let (rest, a) = last_ante(p)?;
            Ok(LkSequent::new(
                with_last(rest, LkFormula::and(a.clone(), other.clone())),
                p.cons.clone(),
            ))
        }
        LkRule::AndL2 { other } => {
            let p = premises[0];
            let (rest, b) = last_ante(p)?;
            Ok(LkSequent::new(
                with_last(rest, LkFormula::and(other.clone(), b.clone())),
                p.cons.clone(),
            ))
        }
        LkRule::AndR => {
            let (p, q) = (premises[0], premises[1]);
            let (a, d2) = first_cons(p)?;
            let (b, d3) = first_cons(q)?;
            Ok(LkSequent::new(
                cat(&p.ante, &q.ante),
                with_first(LkFormula::and(a.clone(), b.clone()), &cat(d2, d3)),
            ))
        }
        LkRule::OrL => {
            let (p, q) = (premises[0], premises[1]);
            let (rest_p, a) = last_ante(p)?;
            let (rest_q, b) = last_ante(q)?;
            Ok(LkSequent::new(
                with_last(
                    &cat(rest_p, rest_q),
                    LkFormula::or(a.clone(), b.clone()),
                ),
                cat(&p.cons, &q.cons),
            ))
        }
        LkRule::OrR1 { other } => {
            let p = premises[0];
            let (a, rest) = first_cons(p)?;
            Ok(LkSequent::new(
                p.ante.clone(),
                with_first(LkFormula::or(a.clone(), other.clone()), rest),
            ))
        }
        LkRule::OrR2 { other } => {
            let p = premises[0];
            let (b, rest) = first_cons(p)?;
            Ok(LkSequent::new(
                p.ante.clone(),
                with_first(LkFormula::or(other.clone(), b.clone()), rest),
            ))
        }
        LkRule::ImpL => {
            let (p, q) = (premises[0], premises[1]);
            let (a, d2) = first_cons(p)?;
            let (rest_q, b) = last_ante(q)?;
            Ok(LkSequent::new(
                with_last(
                    &cat(&p.ante, rest_q),
                    LkFormula::imp(a.clone(), b.clone()),
                ),
                cat(d2, &q.cons),
            ))
        }
        LkRule::ImpR => {
            let p = premises[0];
            let (rest, a) = last_ante(p)?;
            let (b, d) = first_cons(p)?;
            Ok(LkSequent::new(
                rest.to_vec(),
                with_first(LkFormula::imp(a.clone(), b.clone()), d),
            ))
        }
        LkRule::ExistsL { x, y, body } => {
            let p = premises[0];
            let (rest, active) = last_ante(p)?;
            let expected = substituted(body, x, &Term::var(y))?;
            if *active != expected {
                return Err(mismatch(format!(
                    "active formula must be '{expected}'"
                )));
            }
            let principal = LkFormula::Exists(x.clone(), Box::new(body.clone()));
            eigen_ok(y, &[rest, &p.cons], &principal)?;
            Ok(LkSequent::new(
                with_last(rest, principal),
                p.cons.clone(),
            ))
        }
        LkRule::ExistsR { x, t, body } => {
            let p = premises[0];
            let (active, rest) = first_cons(p)?;
            let expected = substituted(body, x, t)?;
            if *active != expected {
                return Err(mismatch(format!(
                    "active formula must be '{expected}'"
                )));
            }
            Ok(LkSequent::new(
                p.ante.clone(),
                with_first(
                    LkFormula::Exists(x.clone(), Box::new(body.clone())),
                    rest,
                ),
            ))
        }
        LkRule::ForallL { x, t, body } => {
            let p = premises[0];
            let (rest, active) = last_ante(p)?;
            let expected = substituted(body, x, t)?;
            if *active != expected {
                return Err(mismatch(format!(
                    "active formula must be '{expected}'"
                )));
            }
            Ok(LkSequent::new(
                with_last(rest, LkFormula::Forall(x.clone(), Box::new(body.clone()))),
                p.cons.clone(),
            ))
        }
        LkRule::ForallR { x, y, body } => {
            let p = premises[0];
            let (active, rest) = first_cons(p)?;
            let expected = substituted(body, x, &Term::var(y))?;
            if *active != expected {
                return Err(mismatch(format!(
                    "active formula must be '{expected}'"
                )));
            }
            let principal = LkFormula::Forall(x.clone(), Box::new(body.clone()));
            eigen_ok(y, &[&p.ante, rest], &principal)?;
            Ok(LkSequent::new(
                p.ante.clone(),
                with_first(principal, rest),
            ))
        }
        LkRule::EqRefl { s } => Ok(LkSequent::new(
            vec![],
            vec![LkFormula::Eq(s.clone(), s.clone())],
        )),
        LkRule::EqEqv { s, t, s2, t2 } => Ok(LkSequent::new(
            vec![
                LkFormula::Eq(s.clone(), t.clone()),
                LkFormula::Eq(s2.clone(), t2.clone()),
                LkFormula::Eq(s.clone(), s2.clone()),
            ],
            vec![LkFormula::Eq(t.clone(), t2.clone())],
        )),
        LkRule::SFnc { s, t } => Ok(LkSequent::new(
            vec![LkFormula::Eq(s.clone(), t.clone())],
            vec![LkFormula::Eq(Term::succ(s.clone()), Term::succ(t.clone()))],
        )),
        LkRule::AddFnc { s, t, s2, t2 } => Ok(LkSequent::new(
            vec![
                LkFormula::Eq(s.clone(), t.clone()),
                LkFormula::Eq(s2.clone(), t2.clone()),
            ],
            vec![LkFormula::Eq(
                Term::add(s.clone(), s2.clone()),
                Term::add(t.clone(), t2.clone()),
            )],
        )),
        LkRule::MulFnc { s, t, s2, t2 } => Ok(LkSequent::new(
            vec![
                LkFormula::Eq(s.clone(), t.clone()),
                LkFormula::Eq(s2.clone(), t2.clone()),
            ],
            vec![LkFormula::Eq(
                Term::mul(s.clone(), s2.clone()),
                Term::mul(t.clone(), t2.clone()),
            )],
        )),
        LkRule::LtRel { s, t, s2, t2 } => Ok(LkSequent::new(
            vec![
                LkFormula::Eq(s.clone(), t.clone()),
                LkFormula::Eq(s2.clone(), t2.clone()),
                LkFormula::Lt(s.clone(), s2.clone()),
            ],
            vec![LkFormula::Lt(t.clone(), t2.clone())],
        )),
        LkRule::SPos { s } => Ok(LkSequent::new(
            vec![LkFormula::Eq(Term::succ(s.clone()), Term::Zero)],
            vec![],
        )),
        LkRule::SInj { s, t } => Ok(LkSequent::new(
            vec![LkFormula::Eq(Term::succ(s.clone()), Term::succ(t.clone()))],
            vec![LkFormula::Eq(s.clone(), t.clone())],
        )),
        LkRule::AddZero { s } => Ok(LkSequent::new(
            vec![],
            vec![LkFormula::Eq(Term::add(s.clone(), Term::Zero), s.clone())],
        )),
        LkRule::AddSucc { s, t } => Ok(LkSequent::new(
            vec![],
            vec![LkFormula::Eq(
                Term::add(s.clone(), Term::succ(t.clone())),
                Term::succ(Term::add(s.clone(), t.clone())),
            )],
        )),
        LkRule::MulZero { s } => Ok(LkSequent::new(
            vec![],
            vec![LkFormula::Eq(Term::mul(s.clone(), Term::Zero), Term::Zero)],
        )),
        LkRule::MulSucc { s, t } => Ok(LkSequent::new(
            vec![],
            vec![LkFormula::Eq(
                Term::mul(s.clone(), Term::succ(t.clone())),
                Term::add(Term::mul(s.clone(), t.clone()), s.clone()),
            )],
        )),
        LkRule::Ind { x, t, a } => {
            let p = premises[0];
            let (rest, active) = last_ante(p)?;
            if active != a {
                return Err(mismatch(format!("active formula must be '{a}'")));
            }
            let (step, d2) = first_cons(p)?;
            let expected_step = substituted(a, x, &Term::succ(Term::var(x)))?;
            if *step != expected_step {
                return Err(mismatch(format!(
                    "first consequent must be '{expected_step}'"
                )));
            }
            for f in rest.iter().chain(d2.iter()) {
                if f.free_vars().contains(x) {
                    return Err(LkCheckErrorKind::Eigenvariable(format!(
                        "induction variable '{x}' is free in the context"
                    )));
                }
            }
            let base = substituted(a, x, &Term::Zero)?;
            let at_t = substituted(a, x, t)?;
            Ok(LkSequent::new(
                with_last(rest, base),
                with_first(at_t, d2),
            ))
        }
    }
}

/// Checks a proof; every induction formula must satisfy the class.
pub fn check_lk(p: &LkProof, cls: ClassPredicate) -> Result<(), LkError> {
    let mut path = Vec::new();
    check_rec(p, cls, &mut path)
}

fn check_rec(p: &LkProof, cls: ClassPredicate, path: &mut Vec<usize>) -> Result<(), LkError> {
    let fail = |path: &[usize], kind: LkCheckErrorKind| LkError {
        path: path.to_vec(),
        rule: p.rule.id().to_string(),
        kind,
    };
    let expected = p.rule.arity();
    if p.premises.len() != expected {
        return Err(fail(
            path,
            LkCheckErrorKind::WrongArity {
                rule: p.rule.id().to_string(),
                expected,
                found: p.premises.len(),
            },
        ));
    }
    if let LkRule::Ind { a, .. } = &p.rule {
        if !cls.accepts(a) {
            return Err(fail(
                path,
                LkCheckErrorKind::InductionClass(cls.name().to_string(), a.to_string()),
            ));
        }
    }
    for (i, q) in p.premises.iter().enumerate() {
        path.push(i);
        check_rec(q, cls, path)?;
        path.pop();
    }
    let premise_seqs: Vec<&LkSequent> = p.premises.iter().map(|q| &q.conclusion).collect();
    let want =
        expected_conclusion(&p.rule, &premise_seqs).map_err(|kind| fail(path, kind))?;
    if want != p.conclusion {
        return Err(fail(
            path,
            LkCheckErrorKind::ConclusionMismatch {
                expected: want.to_string(),
                found: p.conclusion.to_string(),
            },
        ));
    }
    Ok(())
}
