//! Bridge between the two calculi: formula converters, sequent embedding,
//! and the translation of positive-existential LK proofs into checkable
//! block-calculus proofs of `⋀Δ ⇒ ⋁Δ'`.

use super::{lk_positive, LkFormula, LkProof, LkRule, LkSequent};
use crate::ba::builder as bb;
use crate::ba::BaProof;
use crate::syntax::{substitute, Formula, Sequent, Substitution, Term};
use thiserror::Error;

/// Block-calculus formula to first-order syntax: a block `∀x̄(A→B)` maps
/// to `∀x₁...∀xₙ(A → B)`; with empty variables this is implication, and
/// `∀x(⊤→A)` is the single-variable universal.
pub fn lk_of_formula(f: &Formula) -> LkFormula {
    match f {
        Formula::Top => LkFormula::Top,
        Formula::Bot => LkFormula::Bot,
        Formula::Eq(l, r) => LkFormula::Eq(l.clone(), r.clone()),
        Formula::Lt(l, r) => LkFormula::Lt(l.clone(), r.clone()),
        Formula::And(l, r) => LkFormula::and(lk_of_formula(l), lk_of_formula(r)),
        Formula::Or(l, r) => LkFormula::or(lk_of_formula(l), lk_of_formula(r)),
        Formula::Exists(x, body) => LkFormula::Exists(x.clone(), Box::new(lk_of_formula(body))),
        Formula::Block(vars, ante, cons) => {
            // ∀x(⊤ → A) is identified with the plain universal
            let mut out = if **ante == Formula::Top && !vars.is_empty() {
                lk_of_formula(cons)
            } else {
                LkFormula::imp(lk_of_formula(ante), lk_of_formula(cons))
            };
            for v in vars.iter().rev() {
                out = LkFormula::Forall(v.clone(), Box::new(out));
            }
            out
        }
    }
}

/// First-order syntax back into the block calculus: `A → B` becomes the
/// empty block, `¬A` the block to `⊥`, and `∀xA` the block `∀x(⊤ → A)`.
pub fn formula_of_lk(f: &LkFormula) -> Formula {
    match f {
        LkFormula::Top => Formula::Top,
        LkFormula::Bot => Formula::Bot,
        LkFormula::Eq(l, r) => Formula::Eq(l.clone(), r.clone()),
        LkFormula::Lt(l, r) => Formula::Lt(l.clone(), r.clone()),
        LkFormula::And(l, r) => Formula::and(formula_of_lk(l), formula_of_lk(r)),
        LkFormula::Or(l, r) => Formula::or(formula_of_lk(l), formula_of_lk(r)),
        LkFormula::Neg(body) => Formula::not(formula_of_lk(body)),
        LkFormula::Imp(l, r) => Formula::imp(formula_of_lk(l), formula_of_lk(r)),
        LkFormula::Exists(x, body) => {
            Formula::Exists(x.clone(), Box::new(formula_of_lk(body)))
        }
        LkFormula::Forall(x, body) => Formula::Block(
            vec![x.clone()],
            Box::new(Formula::Top),
            Box::new(formula_of_lk(body)),
        ),
    }
}

/// Wraps a block-calculus sequent as a singleton-list sequent.
pub fn ba_to_lk(s: &Sequent) -> LkSequent {
    LkSequent::new(vec![lk_of_formula(&s.ante)], vec![lk_of_formula(&s.cons)])
}

#[derive(Clone, Debug, Error)]
pub enum BridgeError {
    #[error("formula '{0}' is not positive-existential")]
    NotPositive(String),
    #[error("rule {0} has no counterpart in the positive fragment")]
    ForbiddenRule(String),
    #[error("substitution failed during translation: {0}")]
    Substitution(String),
}

/// `⋀Δ` with `⋀∅ = ⊤`.
pub fn big_and(fs: &[Formula]) -> Formula {
    match fs.split_first() {
        None => Formula::Top,
        Some((f, [])) => f.clone(),
        Some((f, rest)) => Formula::and(f.clone(), big_and(rest)),
    }
}

/// `⋁Δ` with `⋁∅ = ⊥`.
pub fn big_or(fs: &[Formula]) -> Formula {
    match fs.split_first() {
        None => Formula::Bot,
        Some((f, [])) => f.clone(),
        Some((f, rest)) => Formula::or(f.clone(), big_or(rest)),
    }
}

/// `⋀L ⇒ L[i]`
fn conj_proj(fs: &[Formula], i: usize) -> BaProof {
    match (fs.len(), i) {
        (0, _) => panic!("conj_proj on empty list"),
        (1, 0) => bb::ax1(fs[0].clone()),
        (_, 0) => bb::proj1(fs[0].clone(), big_and(&fs[1..])),
        _ => bb::compose(
            bb::proj2(fs[0].clone(), big_and(&fs[1..])),
            conj_proj(&fs[1..], i - 1),
        ),
    }
}

/// `X ⇒ ⋀L` from proofs of `X ⇒ L[i]` (in order); with no parts, `X ⇒ ⊤`.
fn conj_intro(x: &Formula, mut parts: Vec<BaProof>) -> BaProof {
    if parts.is_empty() {
        return bb::ax2(x.clone());
    }
    if parts.len() == 1 {
        return parts.pop().unwrap();
    }
    let head = parts.remove(0);
    bb::pair(head, conj_intro(x, parts))
}

/// `L[i] ⇒ ⋁L`
fn disj_inj(fs: &[Formula], i: usize) -> BaProof {
    match (fs.len(), i) {
        (0, _) => panic!("disj_inj on empty list"),
        (1, 0) => bb::ax1(fs[0].clone()),
        (_, 0) => bb::inj1(fs[0].clone(), big_or(&fs[1..])),
        _ => bb::compose(
            disj_inj(&fs[1..], i - 1),
            bb::inj2(fs[0].clone(), big_or(&fs[1..])),
        ),
    }
}

/// `⋁L ⇒ Y` from proofs of `L[i] ⇒ Y`; with no parts, `⊥ ⇒ Y`.
fn disj_elim(y: &Formula, mut parts: Vec<BaProof>) -> BaProof {
    if parts.is_empty() {
        return bb::ax3(y.clone());
    }
    if parts.len() == 1 {
        return parts.pop().unwrap();
    }
    let head = parts.remove(0);
    bb::by_cases(head, disj_elim(y, parts))
}

/// `⋀L ⇒ ⋀M` where every formula of `M` occurs in `L`.
fn conj_reshape(from: &[Formula], to: &[Formula]) -> BaProof {
    let x = big_and(from);
    let parts = to
        .iter()
        .map(|f| {
            let i = from
                .iter()
                .position(|g| g == f)
                .expect("conj_reshape: formula missing");
            conj_proj(from, i)
        })
        .collect();
    conj_intro(&x, parts)
}

/// `⋁L ⇒ ⋁M` where every formula of `L` occurs in `M`.
fn disj_reshape(from: &[Formula], to: &[Formula]) -> BaProof {
    let y = big_or(to);
    let parts = from
        .iter()
        .map(|f| {
            let i = to
                .iter()
                .position(|g| g == f)
                .expect("disj_reshape: formula missing");
            disj_inj(to, i)
        })
        .collect();
    disj_elim(&y, parts)
}

/// `⋁L ⇒ L[0] ∨ ⋁L[1..]`; identity unless `L` is a singleton, where the
/// fold omits the `⊥` tail.
fn or_head_adapter(fs: &[Formula]) -> BaProof {
    assert!(!fs.is_empty());
    if fs.len() == 1 {
        bb::inj1(fs[0].clone(), Formula::Bot)
    } else {
        bb::ax1(big_or(fs))
    }
}

fn convert(f: &LkFormula) -> Result<Formula, BridgeError> {
    if !lk_positive(f) {
        return Err(BridgeError::NotPositive(f.to_string()));
    }
    Ok(formula_of_lk(f))
}

fn convert_side(fs: &[LkFormula]) -> Result<Vec<Formula>, BridgeError> {
    fs.iter().map(convert).collect()
}

fn sub1(f: &Formula, x: &str, t: &Term) -> Result<Formula, BridgeError> {
    substitute(f, &Substitution::single(x, t.clone()))
        .map_err(|e| BridgeError::Substitution(e.to_string()))
}

/// `X ⇒ ⋀prem` where each premise-list formula is either a context
/// formula found in `ctx` (projected through `X ⇒ ⋀ctx ∧ active`) or the
/// active formula itself.
fn assemble_premise_ante(
    ctx: &[Formula],
    active: &Formula,
    prem_ante: &[Formula],
) -> BaProof {
    let ctx_fold = big_and(ctx);
    let src = Formula::and(ctx_fold.clone(), active.clone());
    let parts: Vec<BaProof> = prem_ante
        .iter()
        .map(|f| {
            if f == active {
                bb::proj2(ctx_fold.clone(), active.clone())
            } else {
                let i = ctx
                    .iter()
                    .position(|g| g == f)
                    .expect("context formula missing");
                bb::compose(
                    bb::proj1(ctx_fold.clone(), active.clone()),
                    conj_proj(ctx, i),
                )
            }
        })
        .collect();
    conj_intro(&src, parts)
}

/// Translates an all-positive LK proof into a checkable proof of
/// `⋀Δ ⇒ ⋁Δ'` in the block calculus. The input must not use the
/// negation, implication, or universal rules.
pub fn lk_pos_to_ba(p: &LkProof) -> Result<BaProof, BridgeError> {
    let mut bad: Option<LkFormula> = None;
    p.for_each_formula(&mut |f| {
        if bad.is_none() && !lk_positive(f) {
            bad = Some(f.clone());
        }
    });
    if let Some(f) = bad {
        return Err(BridgeError::NotPositive(f.to_string()));
    }
    translate(p)
}

fn translate(p: &LkProof) -> Result<BaProof, BridgeError> {
    let ante = convert_side(&p.conclusion.ante)?;
    let cons = convert_side(&p.conclusion.cons)?;
    let goal_ante = big_and(&ante);
    let goal_cons = big_or(&cons);
    let out = match &p.rule {
        LkRule::Ax { .. } => bb::ax1(goal_ante.clone()),
        LkRule::ExL { .. } | LkRule::CtrL | LkRule::WkL { .. } => {
            let q = translate(&p.premises[0])?;
            let from = convert_side(&p.premises[0].conclusion.ante)?;
            bb::compose(conj_reshape(&ante, &from), q)
        }
        LkRule::ExR { .. } | LkRule::CtrR | LkRule::WkR { .. } => {
            let q = translate(&p.premises[0])?;
            let to = convert_side(&p.premises[0].conclusion.cons)?;
            bb::compose(q, disj_reshape(&to, &cons))
        }
        LkRule::Cut => {
            // ⋀Γ ⇒ ⋁(A∥Δ″) and ⋀(Π∥A) ⇒ ⋁Λ give ⋀(Γ∥Π) ⇒ ⋁(Δ″∥Λ)
            let left = translate(&p.premises[0])?;
            let right = translate(&p.premises[1])?;
            let gamma = convert_side(&p.premises[0].conclusion.ante)?;
            let cons1 = convert_side(&p.premises[0].conclusion.cons)?;
            let a = cons1[0].clone();
            let delta2 = cons1[1..].to_vec();
            let pi_a = convert_side(&p.premises[1].conclusion.ante)?;
            let pi = pi_a[..pi_a.len() - 1].to_vec();
            let lambda = convert_side(&p.premises[1].conclusion.cons)?;
            let pi_fold = big_and(&pi);
            // X ⇒ ⋀Π ∧ (A ∨ ⋁Δ″)
            let to_left = bb::compose(
                bb::compose(conj_reshape(&ante, &gamma), left),
                or_head_adapter(&cons1),
            );
            let paired = bb::pair(conj_reshape(&ante, &pi), to_left);
            let dist = bb::ax4(pi_fold.clone(), a.clone(), big_or(&delta2));
            // branch 1: ⋀Π ∧ A ⇒ ⋀(Π∥A) ⇒ ⋁Λ ⇒ ⋁(Δ″∥Λ)
            let branch1 = bb::compose(
                bb::compose(assemble_premise_ante(&pi, &a, &pi_a), right),
                disj_reshape(&lambda, &cons),
            );
            // branch 2: ⋀Π ∧ ⋁Δ″ ⇒ ⋁(Δ″∥Λ)
            let branch2 = bb::compose(
                bb::proj2(pi_fold.clone(), big_or(&delta2)),
                disj_reshape(&delta2, &cons),
            );
            bb::compose(paired, bb::compose(dist, bb::by_cases(branch1, branch2)))
        }
        LkRule::TopR => bb::ax2(Formula::Top),
        LkRule::BotL => bb::ax1(Formula::Bot),
        LkRule::AndL1 { .. } | LkRule::AndL2 { .. } => {
            let q = translate(&p.premises[0])?;
            let from = convert_side(&p.premises[0].conclusion.ante)?;
            let parts: Vec<BaProof> = from
                .iter()
                .map(|f| {
                    if let Some(i) = ante.iter().position(|g| g == f) {
                        conj_proj(&ante, i)
                    } else {
                        // the active conjunct of the principal formula
                        let i = ante.len() - 1;
                        let Formula::And(l, r) = &ante[i] else {
                            panic!("and-l shape")
                        };
                        let side = if **l == *f {
                            bb::proj1((**l).clone(), (**r).clone())
                        } else {
                            bb::proj2((**l).clone(), (**r).clone())
                        };
                        bb::compose(conj_proj(&ante, i), side)
                    }
                })
                .collect();
            bb::compose(conj_intro(&goal_ante, parts), q)
        }
        LkRule::AndR => {
            let l = translate(&p.premises[0])?;
            let r = translate(&p.premises[1])?;
            let gamma1 = convert_side(&p.premises[0].conclusion.ante)?;
            let gamma2 = convert_side(&p.premises[1].conclusion.ante)?;
            let cons1 = convert_side(&p.premises[0].conclusion.cons)?;
            let cons2 = convert_side(&p.premises[1].conclusion.cons)?;
            let (a, d2) = (cons1[0].clone(), cons1[1..].to_vec());
            let (b, d3) = (cons2[0].clone(), cons2[1..].to_vec());
            let a_or = Formula::or(a.clone(), big_or(&d2));
            let to_l = bb::compose(
                bb::compose(conj_reshape(&ante, &gamma1), l),
                or_head_adapter(&cons1),
            );
            let to_r = bb::compose(
                bb::compose(conj_reshape(&ante, &gamma2), r),
                or_head_adapter(&cons2),
            );
            let both = bb::pair(to_l, to_r);
            // (A∨D2) ∧ (B∨D3) ⇒ (A∧B) ∨ D2 ∨ D3
            let dist1 = bb::ax4(a_or.clone(), b.clone(), big_or(&d3));
            let then_b = {
                let sw = bb::pair(
                    bb::proj2(a_or.clone(), b.clone()),
                    bb::proj1(a_or.clone(), b.clone()),
                );
                let dist2 = bb::ax4(b.clone(), a.clone(), big_or(&d2));
                let ba = bb::pair(
                    bb::proj2(b.clone(), a.clone()),
                    bb::proj1(b.clone(), a.clone()),
                );
                let and_in = bb::compose(ba, disj_inj(&cons, 0));
                let d2_in = bb::compose(
                    bb::proj2(b.clone(), big_or(&d2)),
                    disj_reshape(&d2, &cons),
                );
                bb::compose(sw, bb::compose(dist2, bb::by_cases(and_in, d2_in)))
            };
            let then_d3 = bb::compose(
                bb::proj2(a_or.clone(), big_or(&d3)),
                disj_reshape(&d3, &cons),
            );
            let cases = bb::by_cases(then_b, then_d3);
            bb::compose(both, bb::compose(dist1, cases))
        }
        LkRule::OrL => {
            let l = translate(&p.premises[0])?;
            let r = translate(&p.premises[1])?;
            let ante1 = convert_side(&p.premises[0].conclusion.ante)?;
            let ante2 = convert_side(&p.premises[1].conclusion.ante)?;
            let cons1 = convert_side(&p.premises[0].conclusion.cons)?;
            let cons2 = convert_side(&p.premises[1].conclusion.cons)?;
            let a = ante1.last().expect("or-l").clone();
            let b = ante2.last().expect("or-l").clone();
            let ctx = ante[..ante.len() - 1].to_vec();
            let ctx_fold = big_and(&ctx);
            let split = bb::pair(
                conj_reshape(&ante, &ctx),
                conj_proj(&ante, ante.len() - 1),
            );
            let dist = bb::ax4(ctx_fold.clone(), a.clone(), b.clone());
            let b1 = bb::compose(
                bb::compose(assemble_premise_ante(&ctx, &a, &ante1), l),
                disj_reshape(&cons1, &cons),
            );
            let b2 = bb::compose(
                bb::compose(assemble_premise_ante(&ctx, &b, &ante2), r),
                disj_reshape(&cons2, &cons),
            );
            bb::compose(split, bb::compose(dist, bb::by_cases(b1, b2)))
        }
        LkRule::OrR1 { .. } | LkRule::OrR2 { .. } => {
            let q = translate(&p.premises[0])?;
            let prem_cons = convert_side(&p.premises[0].conclusion.cons)?;
            let Formula::Or(l, r) = cons[0].clone() else {
                panic!("or-r shape")
            };
            let inj = if matches!(p.rule, LkRule::OrR1 { .. }) {
                bb::inj1((*l).clone(), (*r).clone())
            } else {
                bb::inj2((*l).clone(), (*r).clone())
            };
            let head = bb::compose(inj, disj_inj(&cons, 0));
            let mut parts = vec![head];
            for f in &prem_cons[1..] {
                let i = cons.iter().position(|g| g == f).expect("or-r context");
                parts.push(disj_inj(&cons, i));
            }
            bb::compose(q, disj_elim(&goal_cons, parts))
        }
        LkRule::ExistsL { x, y, .. } => {
            let q = translate(&p.premises[0])?;
            let prem_ante = convert_side(&p.premises[0].conclusion.ante)?;
            let ctx = ante[..ante.len() - 1].to_vec();
            let Formula::Exists(ex, body) = ante.last().expect("exists-l").clone() else {
                panic!("exists-l shape")
            };
            let body = *body;
            debug_assert_eq!(ex, *x);
            let ctx_fold = big_and(&ctx);
            let body_y = sub1(&body, x, &Term::var(y))?;
            let split = bb::pair(
                conj_reshape(&ante, &ctx),
                conj_proj(&ante, ante.len() - 1),
            );
            // ∃xB ⇒ ∃y B[x/y] (identity when the eigenvariable is the
            // bound variable itself)
            let rename = if *y == ex {
                bb::ax1(Formula::exists(&ex, body.clone()))
            } else {
                bb::exists_left(
                    &ex,
                    bb::exists_intro_term(y, body_y.clone(), Term::var(&ex)),
                )
            };
            let conj = bb::conj_mono(bb::ax1(ctx_fold.clone()), rename);
            // Frobenius: ⋀ctx ∧ ∃y B[x/y] ⇒ ∃y(⋀ctx ∧ B[x/y])
            let frob = bb::ax5(ctx_fold.clone(), y, body_y.clone());
            let descend = bb::exists_left(
                y,
                bb::compose(assemble_premise_ante(&ctx, &body_y, &prem_ante), q),
            );
            bb::compose(split, bb::compose(conj, bb::compose(frob, descend)))
        }
        LkRule::ExistsR { x, t, body } => {
            let q = translate(&p.premises[0])?;
            let prem_cons = convert_side(&p.premises[0].conclusion.cons)?;
            let body_ba = convert(body)?;
            let intro = bb::exists_intro_term(x, body_ba, t.clone());
            let head = bb::compose(intro, disj_inj(&cons, 0));
            let mut parts = vec![head];
            for f in &prem_cons[1..] {
                let i = cons.iter().position(|g| g == f).expect("exists-r context");
                parts.push(disj_inj(&cons, i));
            }
            bb::compose(q, disj_elim(&goal_cons, parts))
        }
        LkRule::Ind { x, t, a } => {
            let q = translate(&p.premises[0])?;
            let a_ba = convert(a)?;
            let prem_ante = convert_side(&p.premises[0].conclusion.ante)?;
            let prem_cons = convert_side(&p.premises[0].conclusion.cons)?;
            let ctx = prem_ante[..prem_ante.len() - 1].to_vec();
            let d2 = prem_cons[1..].to_vec();
            let g = big_and(&ctx);
            let h = big_or(&d2);
            let a_succ = sub1(&a_ba, x, &Term::succ(Term::var(x)))?;
            let a_zero = sub1(&a_ba, x, &Term::Zero)?;
            let a_t = sub1(&a_ba, x, t)?;
            // induction formula B := ⋀ctx ∧ (A ∨ ⋁Δ'); its step follows
            // from the premise by distribution
            let step = {
                let dist = bb::ax4(g.clone(), a_ba.clone(), h.clone());
                let run = bb::compose(
                    bb::compose(assemble_premise_ante(&ctx, &a_ba, &prem_ante), q),
                    or_head_adapter(&prem_cons),
                );
                let b1 = bb::pair(bb::proj1(g.clone(), a_ba.clone()), run);
                let b2 = bb::pair(
                    bb::proj1(g.clone(), h.clone()),
                    bb::compose(
                        bb::proj2(g.clone(), h.clone()),
                        bb::inj2(a_succ.clone(), h.clone()),
                    ),
                );
                bb::compose(dist, bb::by_cases(b1, b2))
            };
            let ind = bb::ind(x, step);
            let at_t = bb::subst_proof(ind, &[(x, t.clone())]);
            // conclusion antecedent ⇒ B[x/0]
            let pack = {
                let inj_base = bb::compose(
                    conj_proj(&ante, ante.len() - 1),
                    bb::inj1(a_zero.clone(), h.clone()),
                );
                conj_intro(&goal_ante, vec![conj_reshape(&ante, &ctx), inj_base])
            };
            // B[x/t] ⇒ ⋁(A[x/t]∥Δ')
            let unpack = {
                let body = Formula::or(a_t.clone(), h.clone());
                let drop = bb::proj2(g.clone(), body);
                let cases =
                    bb::by_cases(disj_inj(&cons, 0), disj_reshape(&d2, &cons));
                bb::compose(drop, cases)
            };
            bb::compose(pack, bb::compose(at_t, unpack))
        }
        LkRule::EqRefl { s } => bb::ax6(s.clone()),
        LkRule::EqEqv { .. } => {
            let e1 = conj_proj(&ante, 0); // s=t
            let e2 = conj_proj(&ante, 1); // s'=t'
            let e3 = conj_proj(&ante, 2); // s=s'
            let t_eq_s = bb::sym_under(e1);
            let t_eq_s2 = bb::trans_under(t_eq_s, e3);
            bb::trans_under(t_eq_s2, e2)
        }
        LkRule::SFnc { s, t } => {
            let e = conj_proj(&ante, 0);
            let refl = bb::from_true(goal_ante.clone(), bb::ax6(Term::succ(s.clone())));
            let s0 = s.clone();
            bb::rewrite_under(e, refl, s.clone(), t.clone(), move |w| {
                Formula::Eq(Term::succ(s0.clone()), Term::succ(w))
            })
        }
        LkRule::AddFnc { s, t, s2, t2 } => {
            let e1 = conj_proj(&ante, 0);
            let e2 = conj_proj(&ante, 1);
            let refl = bb::from_true(
                goal_ante.clone(),
                bb::ax6(Term::add(s.clone(), s2.clone())),
            );
            let (sa, sb) = (s.clone(), s2.clone());
            let step1 = bb::rewrite_under(e1, refl, s.clone(), t.clone(), move |w| {
                Formula::Eq(Term::add(sa.clone(), sb.clone()), Term::add(w, sb.clone()))
            });
            let (sc, tb) = (s.clone(), t.clone());
            bb::rewrite_under(e2, step1, s2.clone(), t2.clone(), move |w| {
                Formula::Eq(Term::add(sc.clone(), s2.clone()), Term::add(tb.clone(), w))
            })
        }
        LkRule::MulFnc { s, t, s2, t2 } => {
            let e1 = conj_proj(&ante, 0);
            let e2 = conj_proj(&ante, 1);
            let refl = bb::from_true(
                goal_ante.clone(),
                bb::ax6(Term::mul(s.clone(), s2.clone())),
            );
            let (sa, sb) = (s.clone(), s2.clone());
            let step1 = bb::rewrite_under(e1, refl, s.clone(), t.clone(), move |w| {
                Formula::Eq(Term::mul(sa.clone(), sb.clone()), Term::mul(w, sb.clone()))
            });
            let (sc, tb) = (s.clone(), t.clone());
            bb::rewrite_under(e2, step1, s2.clone(), t2.clone(), move |w| {
                Formula::Eq(Term::mul(sc.clone(), s2.clone()), Term::mul(tb.clone(), w))
            })
        }
        LkRule::LtRel { s, t, s2, t2 } => {
            let e1 = conj_proj(&ante, 0);
            let e2 = conj_proj(&ante, 1);
            let e3 = conj_proj(&ante, 2);
            let sb = s2.clone();
            let step1 = bb::rewrite_under(e1, e3, s.clone(), t.clone(), move |w| {
                Formula::Lt(w, sb.clone())
            });
            let tb = t.clone();
            bb::rewrite_under(e2, step1, s2.clone(), t2.clone(), move |w| {
                Formula::Lt(tb.clone(), w)
            })
        }
        LkRule::SPos { s } => bb::ba_ax1(s.clone()),
        LkRule::SInj { s, t } => bb::ba_ax2(s.clone(), t.clone()),
        LkRule::AddZero { s } => bb::ba_ax3(s.clone()),
        LkRule::AddSucc { s, t } => bb::ba_ax4(s.clone(), t.clone()),
        LkRule::MulZero { s } => bb::ba_ax5(s.clone()),
        LkRule::MulSucc { s, t } => bb::ba_ax6(s.clone(), t.clone()),
        LkRule::NegL
        | LkRule::NegR
        | LkRule::ImpL
        | LkRule::ImpR
        | LkRule::ForallL { .. }
        | LkRule::ForallR { .. } => {
            return Err(BridgeError::ForbiddenRule(p.rule.id().to_string()))
        }
    };
    debug_assert_eq!(
        out.conclusion,
        Sequent::new(goal_ante, goal_cons),
        "translated conclusion mismatch for {}",
        p.rule.id()
    );
    Ok(out)
}
