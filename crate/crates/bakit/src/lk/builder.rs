//! Construction helpers for list-based sequent proofs: rule application
//! with computed conclusions, exchange chains for moving formulas, and
//! `repair`, which derives one sequent from another using weakening,
//! contraction, and exchange only.

use super::{LkFormula, LkProof, LkRule, LkSequent};
use crate::syntax::Term;
use std::collections::BTreeMap;

fn node(rule: LkRule, conclusion: LkSequent, premises: Vec<LkProof>) -> LkProof {
    LkProof {
        conclusion,
        rule,
        premises,
    }
}

pub fn ax(a: LkFormula) -> LkProof {
    node(
        LkRule::Ax { a: a.clone() },
        LkSequent::new(vec![a.clone()], vec![a]),
        vec![],
    )
}

pub fn top_r() -> LkProof {
    node(LkRule::TopR, LkSequent::new(vec![], vec![LkFormula::Top]), vec![])
}

pub fn bot_l() -> LkProof {
    node(LkRule::BotL, LkSequent::new(vec![LkFormula::Bot], vec![]), vec![])
}

pub fn ex_l(p: LkProof, i: usize) -> LkProof {
    let mut ante = p.conclusion.ante.clone();
    assert!(i + 1 < ante.len(), "ex_l out of range");
    ante.swap(i, i + 1);
    let conclusion = LkSequent::new(ante, p.conclusion.cons.clone());
    node(LkRule::ExL { i }, conclusion, vec![p])
}

pub fn ex_r(p: LkProof, i: usize) -> LkProof {
    let mut cons = p.conclusion.cons.clone();
    assert!(i + 1 < cons.len(), "ex_r out of range");
    cons.swap(i, i + 1);
    let conclusion = LkSequent::new(p.conclusion.ante.clone(), cons);
    node(LkRule::ExR { i }, conclusion, vec![p])
}

/// Appends a formula at the end of the antecedent.
pub fn wk_l(p: LkProof, a: LkFormula) -> LkProof {
    let mut ante = p.conclusion.ante.clone();
    ante.push(a.clone());
    let conclusion = LkSequent::new(ante, p.conclusion.cons.clone());
    node(LkRule::WkL { a }, conclusion, vec![p])
}

/// Prepends a formula at the front of the consequent.
pub fn wk_r(p: LkProof, a: LkFormula) -> LkProof {
    let mut cons = vec![a.clone()];
    cons.extend(p.conclusion.cons.iter().cloned());
    let conclusion = LkSequent::new(p.conclusion.ante.clone(), cons);
    node(LkRule::WkR { a }, conclusion, vec![p])
}

/// Contracts the last two (equal) antecedent formulas.
pub fn ctr_l(p: LkProof) -> LkProof {
    let ante = &p.conclusion.ante;
    let n = ante.len();
    assert!(n >= 2 && ante[n - 1] == ante[n - 2], "ctr_l shape");
    let conclusion = LkSequent::new(ante[..n - 1].to_vec(), p.conclusion.cons.clone());
    node(LkRule::CtrL, conclusion, vec![p])
}

/// Contracts the first two (equal) consequent formulas.
pub fn ctr_r(p: LkProof) -> LkProof {
    let cons = &p.conclusion.cons;
    assert!(cons.len() >= 2 && cons[0] == cons[1], "ctr_r shape");
    let conclusion = LkSequent::new(p.conclusion.ante.clone(), cons[1..].to_vec());
    node(LkRule::CtrR, conclusion, vec![p])
}

/// Moves ante[from] to position `to` by adjacent exchanges.
pub fn move_ante(mut p: LkProof, from: usize, to: usize) -> LkProof {
    use std::cmp::Ordering;
    match from.cmp(&to) {
        Ordering::Equal => p,
        Ordering::Less => {
            for i in from..to {
                p = ex_l(p, i);
            }
            p
        }
        Ordering::Greater => {
            for i in (to..from).rev() {
                p = ex_l(p, i);
            }
            p
        }
    }
}

/// Moves cons[from] to position `to` by adjacent exchanges.
pub fn move_cons(mut p: LkProof, from: usize, to: usize) -> LkProof {
    use std::cmp::Ordering;
    match from.cmp(&to) {
        Ordering::Equal => p,
        Ordering::Less => {
            for i in from..to {
                p = ex_r(p, i);
            }
            p
        }
        Ordering::Greater => {
            for i in (to..from).rev() {
                p = ex_r(p, i);
            }
            p
        }
    }
}

pub fn cut(p: LkProof, q: LkProof) -> LkProof {
    let a = p.conclusion.cons.first().expect("cut: left cons empty").clone();
    let a2 = q.conclusion.ante.last().expect("cut: right ante empty").clone();
    assert_eq!(a, a2, "cut formulas differ");
    let mut ante = p.conclusion.ante.clone();
    ante.extend(q.conclusion.ante[..q.conclusion.ante.len() - 1].iter().cloned());
    let mut cons = p.conclusion.cons[1..].to_vec();
    cons.extend(q.conclusion.cons.iter().cloned());
    node(LkRule::Cut, LkSequent::new(ante, cons), vec![p, q])
}

pub fn neg_l(p: LkProof) -> LkProof {
    let a = p.conclusion.cons.first().expect("neg_l").clone();
    let mut ante = p.conclusion.ante.clone();
    ante.push(LkFormula::neg(a));
    let conclusion = LkSequent::new(ante, p.conclusion.cons[1..].to_vec());
    node(LkRule::NegL, conclusion, vec![p])
}

pub fn neg_r(p: LkProof) -> LkProof {
    let a = p.conclusion.ante.last().expect("neg_r").clone();
    let ante = p.conclusion.ante[..p.conclusion.ante.len() - 1].to_vec();
    let mut cons = vec![LkFormula::neg(a)];
    cons.extend(p.conclusion.cons.iter().cloned());
    node(LkRule::NegR, LkSequent::new(ante, cons), vec![p])
}

pub fn and_l1(p: LkProof, other: LkFormula) -> LkProof {
    let a = p.conclusion.ante.last().expect("and_l1").clone();
    let mut ante = p.conclusion.ante[..p.conclusion.ante.len() - 1].to_vec();
    ante.push(LkFormula::and(a, other.clone()));
    node(
        LkRule::AndL1 { other },
        LkSequent::new(ante, p.conclusion.cons.clone()),
        vec![p],
    )
}

pub fn and_l2(p: LkProof, other: LkFormula) -> LkProof {
    let b = p.conclusion.ante.last().expect("and_l2").clone();
    let mut ante = p.conclusion.ante[..p.conclusion.ante.len() - 1].to_vec();
    ante.push(LkFormula::and(other.clone(), b));
    node(
        LkRule::AndL2 { other },
        LkSequent::new(ante, p.conclusion.cons.clone()),
        vec![p],
    )
}

pub fn and_r(p: LkProof, q: LkProof) -> LkProof {
    let a = p.conclusion.cons.first().expect("and_r").clone();
    let b = q.conclusion.cons.first().expect("and_r").clone();
    let mut ante = p.conclusion.ante.clone();
    ante.extend(q.conclusion.ante.iter().cloned());
    let mut cons = vec![LkFormula::and(a, b)];
    cons.extend(p.conclusion.cons[1..].iter().cloned());
    cons.extend(q.conclusion.cons[1..].iter().cloned());
    node(LkRule::AndR, LkSequent::new(ante, cons), vec![p, q])
}

pub fn or_l(p: LkProof, q: LkProof) -> LkProof {
    let a = p.conclusion.ante.last().expect("or_l").clone();
    let b = q.conclusion.ante.last().expect("or_l").clone();
    let mut ante = p.conclusion.ante[..p.conclusion.ante.len() - 1].to_vec();
    ante.extend(q.conclusion.ante[..q.conclusion.ante.len() - 1].iter().cloned());
    ante.push(LkFormula::or(a, b));
    let mut cons = p.conclusion.cons.clone();
    cons.extend(q.conclusion.cons.iter().cloned());
    node(LkRule::OrL, LkSequent::new(ante, cons), vec![p, q])
}

pub fn or_r1(p: LkProof, other: LkFormula) -> LkProof {
    let a = p.conclusion.cons.first().expect("or_r1").clone();
    let mut cons = vec![LkFormula::or(a, other.clone())];
    cons.extend(p.conclusion.cons[1..].iter().cloned());
    node(
        LkRule::OrR1 { other },
        LkSequent::new(p.conclusion.ante.clone(), cons),
        vec![p],
    )
}

pub fn or_r2(p: LkProof, other: LkFormula) -> LkProof {
    let b = p.conclusion.cons.first().expect("or_r2").clone();
    let mut cons = vec![LkFormula::or(other.clone(), b)];
    cons.extend(p.conclusion.cons[1..].iter().cloned());
    node(
        LkRule::OrR2 { other },
        LkSequent::new(p.conclusion.ante.clone(), cons),
        vec![p],
    )
}

pub fn imp_l(p: LkProof, q: LkProof) -> LkProof {
    let a = p.conclusion.cons.first().expect("imp_l").clone();
    let b = q.conclusion.ante.last().expect("imp_l").clone();
    let mut ante = p.conclusion.ante.clone();
    ante.extend(q.conclusion.ante[..q.conclusion.ante.len() - 1].iter().cloned());
    ante.push(LkFormula::imp(a, b));
    let mut cons = p.conclusion.cons[1..].to_vec();
    cons.extend(q.conclusion.cons.iter().cloned());
    node(LkRule::ImpL, LkSequent::new(ante, cons), vec![p, q])
}

pub fn imp_r(p: LkProof) -> LkProof {
    let a = p.conclusion.ante.last().expect("imp_r").clone();
    let b = p.conclusion.cons.first().expect("imp_r").clone();
    let ante = p.conclusion.ante[..p.conclusion.ante.len() - 1].to_vec();
    let mut cons = vec![LkFormula::imp(a, b)];
    cons.extend(p.conclusion.cons[1..].iter().cloned());
    node(LkRule::ImpR, LkSequent::new(ante, cons), vec![p])
}

pub fn exists_l(p: LkProof, x: &str, y: &str, body: LkFormula) -> LkProof {
    let rest = p.conclusion.ante[..p.conclusion.ante.len() - 1].to_vec();
    let mut ante = rest;
    ante.push(LkFormula::Exists(x.to_string(), Box::new(body.clone())));
    node(
        LkRule::ExistsL {
            x: x.to_string(),
            y: y.to_string(),
            body,
        },
        LkSequent::new(ante, p.conclusion.cons.clone()),
        vec![p],
    )
}

pub fn exists_r(p: LkProof, x: &str, t: Term, body: LkFormula) -> LkProof {
    let mut cons = vec![LkFormula::Exists(x.to_string(), Box::new(body.clone()))];
    cons.extend(p.conclusion.cons[1..].iter().cloned());
    node(
        LkRule::ExistsR {
            x: x.to_string(),
            t,
            body,
        },
        LkSequent::new(p.conclusion.ante.clone(), cons),
        vec![p],
    )
}

pub fn forall_l(p: LkProof, x: &str, t: Term, body: LkFormula) -> LkProof {
    let mut ante = p.conclusion.ante[..p.conclusion.ante.len() - 1].to_vec();
    ante.push(LkFormula::Forall(x.to_string(), Box::new(body.clone())));
    node(
        LkRule::ForallL {
            x: x.to_string(),
            t,
            body,
        },
        LkSequent::new(ante, p.conclusion.cons.clone()),
        vec![p],
    )
}

pub fn forall_r(p: LkProof, x: &str, y: &str, body: LkFormula) -> LkProof {
    let mut cons = vec![LkFormula::Forall(x.to_string(), Box::new(body.clone()))];
    cons.extend(p.conclusion.cons[1..].iter().cloned());
    node(
        LkRule::ForallR {
            x: x.to_string(),
            y: y.to_string(),
            body,
        },
        LkSequent::new(p.conclusion.ante.clone(), cons),
        vec![p],
    )
}

pub fn eq_refl(s: Term) -> LkProof {
    node(
        LkRule::EqRefl { s: s.clone() },
        LkSequent::new(vec![], vec![LkFormula::Eq(s.clone(), s)]),
        vec![],
    )
}

pub fn eq_eqv(s: Term, t: Term, s2: Term, t2: Term) -> LkProof {
    node(
        LkRule::EqEqv {
            s: s.clone(),
            t: t.clone(),
            s2: s2.clone(),
            t2: t2.clone(),
        },
        LkSequent::new(
            vec![
                LkFormula::Eq(s.clone(), t.clone()),
                LkFormula::Eq(s2.clone(), t2.clone()),
                LkFormula::Eq(s, s2),
            ],
            vec![LkFormula::Eq(t, t2)],
        ),
        vec![],
    )
}

pub fn s_fnc(s: Term, t: Term) -> LkProof {
    node(
        LkRule::SFnc {
            s: s.clone(),
            t: t.clone(),
        },
        LkSequent::new(
            vec![LkFormula::Eq(s.clone(), t.clone())],
            vec![LkFormula::Eq(Term::succ(s), Term::succ(t))],
        ),
        vec![],
    )
}

pub fn add_zero(s: Term) -> LkProof {
    node(
        LkRule::AddZero { s: s.clone() },
        LkSequent::new(
            vec![],
            vec![LkFormula::Eq(Term::add(s.clone(), Term::Zero), s)],
        ),
        vec![],
    )
}

pub fn add_succ(s: Term, t: Term) -> LkProof {
    node(
        LkRule::AddSucc {
            s: s.clone(),
            t: t.clone(),
        },
        LkSequent::new(
            vec![],
            vec![LkFormula::Eq(
                Term::add(s.clone(), Term::succ(t.clone())),
                Term::succ(Term::add(s, t)),
            )],
        ),
        vec![],
    )
}

pub fn ind(p: LkProof, x: &str, t: Term, a: LkFormula) -> LkProof {
    let rest = p.conclusion.ante[..p.conclusion.ante.len() - 1].to_vec();
    let d2 = p.conclusion.cons[1..].to_vec();
    let base = a.substituted(x, &Term::Zero).expect("ind base");
    let at_t = a.substituted(x, &t).expect("ind target");
    let mut ante = rest;
    ante.push(base);
    let mut cons = vec![at_t];
    cons.extend(d2);
    node(
        LkRule::Ind {
            x: x.to_string(),
            t,
            a,
        },
        LkSequent::new(ante, cons),
        vec![p],
    )
}

// ---- multiset repair ----

fn key(f: &LkFormula) -> String {
    format!("{f}")
}

fn counts(list: &[LkFormula]) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for f in list {
        *m.entry(key(f)).or_insert(0) += 1;
    }
    m
}

/// Derives `target` from `p` using only weakening, contraction, and
/// exchange. Requires the support of `p`'s sides to be included in the
/// support of `target`'s sides.
pub fn repair(mut p: LkProof, target: &LkSequent) -> Result<LkProof, String> {
    // antecedent: first contract surplus copies, then weaken in missing
    // formulas, then sort into place
    let tgt_ante = counts(&target.ante);
    for (k, have) in counts(&p.conclusion.ante) {
        let want = tgt_ante.get(&k).copied().unwrap_or(0);
        if want == 0 {
            return Err(format!(
                "cannot delete '{k}' from the antecedent (target lacks it)"
            ));
        }
        for _ in want..have {
            p = contract_ante_copy(p, &k);
        }
    }
    for (k, want) in &tgt_ante {
        let have = counts(&p.conclusion.ante).get(k).copied().unwrap_or(0);
        if have < *want {
            let f = target
                .ante
                .iter()
                .find(|f| key(f) == *k)
                .expect("target formula")
                .clone();
            for _ in have..*want {
                p = wk_l(p, f.clone());
            }
        }
    }
    // sort ante to match target order
    for i in 0..target.ante.len() {
        let j = (i..p.conclusion.ante.len())
            .find(|&j| p.conclusion.ante[j] == target.ante[i])
            .ok_or_else(|| format!("antecedent repair failed at position {i}"))?;
        p = move_ante(p, j, i);
    }

    // consequent: same, with front-anchored contraction and weakening
    let tgt_cons = counts(&target.cons);
    for (k, have) in counts(&p.conclusion.cons) {
        let want = tgt_cons.get(&k).copied().unwrap_or(0);
        if want == 0 {
            return Err(format!(
                "cannot delete '{k}' from the consequent (target lacks it)"
            ));
        }
        for _ in want..have {
            p = contract_cons_copy(p, &k);
        }
    }
    for (k, want) in &tgt_cons {
        let have = counts(&p.conclusion.cons).get(k).copied().unwrap_or(0);
        if have < *want {
            let f = target
                .cons
                .iter()
                .find(|f| key(f) == *k)
                .expect("target formula")
                .clone();
            for _ in have..*want {
                p = wk_r(p, f.clone());
            }
        }
    }
    for i in 0..target.cons.len() {
        let j = (i..p.conclusion.cons.len())
            .find(|&j| p.conclusion.cons[j] == target.cons[i])
            .ok_or_else(|| format!("consequent repair failed at position {i}"))?;
        p = move_cons(p, j, i);
    }
    debug_assert_eq!(&p.conclusion, target);
    Ok(p)
}

/// Merges two copies of the formula (by printed key) in the antecedent.
fn contract_ante_copy(p: LkProof, k: &str) -> LkProof {
    let occ: Vec<usize> = p
        .conclusion
        .ante
        .iter()
        .enumerate()
        .filter(|(_, f)| key(f) == k)
        .map(|(i, _)| i)
        .collect();
    assert!(occ.len() >= 2, "contract_ante_copy needs two copies");
    let n = p.conclusion.ante.len();
    let (a, b) = (occ[occ.len() - 2], occ[occ.len() - 1]);
    let p = move_ante(p, b, n - 1);
    let a = if a > b { a - 1 } else { a }; // index shift after the move
    let p = move_ante(p, a, n - 2);
    ctr_l(p)
}

/// Merges two copies of the formula in the consequent.
fn contract_cons_copy(p: LkProof, k: &str) -> LkProof {
    let occ: Vec<usize> = p
        .conclusion
        .cons
        .iter()
        .enumerate()
        .filter(|(_, f)| key(f) == k)
        .map(|(i, _)| i)
        .collect();
    assert!(occ.len() >= 2, "contract_cons_copy needs two copies");
    let (a, b) = (occ[0], occ[1]);
    let p = move_cons(p, a, 0);
    let b = if b < a { b + 1 } else { b };
    let p = move_cons(p, b, 1);
    ctr_r(p)
}


// ---- equality convenience (⇒-form) ----

/// Cuts away every antecedent entry of the form `s = s` using the
/// reflexivity axiom.
pub fn discharge_refl(mut p: LkProof) -> LkProof {
    loop {
        let pos = p.conclusion.ante.iter().position(|f| match f {
            LkFormula::Eq(l, r) => l == r,
            _ => false,
        });
        match pos {
            None => return p,
            Some(i) => {
                let n = p.conclusion.ante.len();
                let s = match &p.conclusion.ante[i] {
                    LkFormula::Eq(l, _) => l.clone(),
                    _ => unreachable!(),
                };
                p = move_ante(p, i, n - 1);
                p = cut(eq_refl(s), p);
            }
        }
    }
}

/// From `⇒ x = y`, `⇒ y = x`.
pub fn seq_sym(p: LkProof) -> LkProof {
    let LkFormula::Eq(x, y) = p.conclusion.cons[0].clone() else {
        panic!("seq_sym: not an equality")
    };
    assert!(p.conclusion.ante.is_empty(), "seq_sym wants a ⇒-sequent");
    let symm = eq_eqv(x.clone(), y.clone(), x.clone(), x.clone());
    let symm = repair(
        symm,
        &LkSequent::new(
            vec![
                LkFormula::Eq(x.clone(), x.clone()),
                LkFormula::Eq(x.clone(), x.clone()),
                LkFormula::Eq(x.clone(), y.clone()),
            ],
            vec![LkFormula::Eq(y, x)],
        ),
    )
    .expect("seq_sym repair");
    discharge_refl(cut(p, symm))
}

/// From `⇒ x = y` and `⇒ y = z`, `⇒ x = z`.
pub fn seq_trans(p: LkProof, q: LkProof) -> LkProof {
    let LkFormula::Eq(x, y) = p.conclusion.cons[0].clone() else {
        panic!("seq_trans: not an equality")
    };
    let LkFormula::Eq(y2, z) = q.conclusion.cons[0].clone() else {
        panic!("seq_trans: not an equality")
    };
    assert_eq!(y, y2, "seq_trans: middle terms differ");
    let trans = eq_eqv(y.clone(), x.clone(), y.clone(), z.clone());
    // [y=x, y=z, y=y] ⇒ [x=z]; feed y=x then y=z, discharge y=y
    let trans = repair(
        trans,
        &LkSequent::new(
            vec![
                LkFormula::Eq(y.clone(), y.clone()),
                LkFormula::Eq(y.clone(), z.clone()),
                LkFormula::Eq(y.clone(), x.clone()),
            ],
            vec![LkFormula::Eq(x.clone(), z.clone())],
        ),
    )
    .expect("seq_trans repair");
    let step = cut(seq_sym(p), trans);
    let step = repair(
        step,
        &LkSequent::new(
            vec![
                LkFormula::Eq(y.clone(), y.clone()),
                LkFormula::Eq(y.clone(), z.clone()),
            ],
            vec![LkFormula::Eq(x.clone(), z.clone())],
        ),
    )
    .expect("seq_trans repair 2");
    let step = cut(q, step);
    discharge_refl(step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lk::{check_lk, parse_lk_formula, ClassPredicate};

    fn f(s: &str) -> LkFormula {
        parse_lk_formula(s).unwrap()
    }

    fn ok(p: &LkProof) {
        check_lk(p, ClassPredicate::DeltaZero).unwrap_or_else(|e| panic!("{e}"));
    }

    #[test]
    fn moves_are_checked_exchanges() {
        let p = wk_l(wk_l(wk_l(ax(f("x = 0")), f("a = 0")), f("b = 0")), f("c = 0"));
        // ante: [x=0, a=0, b=0, c=0]
        let q = move_ante(p, 3, 0);
        assert_eq!(q.conclusion.ante[0], f("c = 0"));
        ok(&q);
    }

    #[test]
    fn repair_reaches_arbitrary_supersets() {
        let p = ax(f("x = 0"));
        let target = LkSequent::new(
            vec![f("a = 0"), f("x = 0"), f("x = 0"), f("b = 0")],
            vec![f("c = 0"), f("x = 0")],
        );
        let q = repair(p, &target).unwrap();
        assert_eq!(q.conclusion, target);
        ok(&q);
    }

    #[test]
    fn repair_contracts_duplicates() {
        let p = wk_l(wk_l(ax(f("x = 0")), f("x = 0")), f("x = 0"));
        // ante has three copies; target has one
        let target = LkSequent::new(vec![f("x = 0")], vec![f("x = 0")]);
        let q = repair(p, &target).unwrap();
        assert_eq!(q.conclusion, target);
        ok(&q);
    }

    #[test]
    fn repair_rejects_deletion() {
        let p = ax(f("x = 0"));
        let target = LkSequent::new(vec![f("y = 0")], vec![f("x = 0")]);
        assert!(repair(p, &target).is_err());
    }

    #[test]
    fn logical_builders_check() {
        let p = and_r(ax(f("x = 0")), ax(f("y = 0")));
        ok(&p);
        let q = or_l(ax(f("x = 0")), ax(f("y = 0")));
        ok(&q);
        let r = imp_l(ax(f("x = 0")), ax(f("y = 0")));
        ok(&r);
        let s = imp_r(wk_l(ax(f("y = 0")), f("x = 0")));
        // premise: [y=0, x=0] ⇒ [y=0]: imp_r gives [y=0] ⇒ [(x=0 -> y=0)]
        ok(&s);
        let n = neg_r(wk_l(ax(f("y = 0")), f("x = 0")));
        ok(&n);
    }

    #[test]
    fn quantifier_builders_check() {
        // premise [y = y] ⇒ [y = y] becomes [y = y] ⇒ [E x. x = y]
        let p = exists_r(ax(f("y = y")), "x", Term::var("y"), f("x = y"));
        ok(&p);
        // ∃x(x = c) ⇒ ∃w(w = c) with eigenvariable z
        let inner = exists_r(ax(f("z = c")), "w", Term::var("z"), f("w = c"));
        let q = exists_l(inner, "x", "z", f("x = c"));
        ok(&q);
        // reusing an eigenvariable free in the context must fail the check
        let bad = exists_l(ax(f("z = c")), "x", "z", f("x = c"));
        assert!(check_lk(&bad, ClassPredicate::DeltaZero).is_err());
    }

    #[test]
    fn cut_builder_checks() {
        let p = cut(ax(f("x = 0")), ax(f("x = 0")));
        ok(&p);
        assert_eq!(p.conclusion, LkSequent::new(vec![f("x = 0")], vec![f("x = 0")]));
    }

    #[test]
    fn ind_builder_checks() {
        // A := x = x; step premise is the successor functionality axiom
        let premise = s_fnc(Term::var("x"), Term::var("x"));
        assert_eq!(
            premise.conclusion,
            LkSequent::new(vec![f("x = x")], vec![f("S x = S x")])
        );
        let p = ind(premise, "x", Term::var("y"), f("x = x"));
        ok(&p);
        assert_eq!(
            p.conclusion,
            LkSequent::new(vec![f("0 = 0")], vec![f("y = y")])
        );
    }
}
