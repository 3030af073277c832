//! Deterministic random proof assembly for both calculi. Proofs are grown
//! forward from axiom leaves by applying whichever rules fit the shapes at
//! hand, so every output is checkable by construction.

#![allow(dead_code)]

use bakit::ba::{builder as bb, BaProof};
use bakit::lk::{builder as lb, LkFormula, LkProof};
use bakit::syntax::{Formula, Term};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use super::{random_positive, random_qf};

fn small_term(r: &mut ChaCha8Rng) -> Term {
    super::random_term(r, 1, &["x", "y"], false)
}

fn seed_proof(r: &mut ChaCha8Rng) -> BaProof {
    match r.gen_range(0..8) {
        0 => bb::ax1(random_qf(r, 2, &["x", "y"])),
        1 => bb::ax2(random_qf(r, 2, &["x", "y"])),
        2 => bb::ax3(random_qf(r, 1, &["x", "y"])),
        3 => bb::ax6(small_term(r)),
        4 => bb::ba_ax3(small_term(r)),
        5 => bb::ba_ax4(small_term(r), small_term(r)),
        6 => bb::ba_ax2(small_term(r), small_term(r)),
        _ => bb::lt_fwd(Term::var("x"), Term::var("y"), "q"),
    }
}

/// A random checked derivation with at most `max_nodes` nodes.
pub fn random_ba_proof(r: &mut ChaCha8Rng, max_nodes: usize) -> BaProof {
    let mut p = seed_proof(r);
    for _ in 0..32 {
        let candidate = grow(r, p.clone(), max_nodes);
        if candidate.node_count() > max_nodes {
            break;
        }
        p = candidate;
    }
    p
}

fn grow(r: &mut ChaCha8Rng, p: BaProof, max_nodes: usize) -> BaProof {
    let budget = max_nodes.saturating_sub(p.node_count());
    let ante = p.conclusion.ante.clone();
    let cons = p.conclusion.cons.clone();
    match r.gen_range(0..12) {
        // weaken the consequent to ⊤ through composition
        0 if budget >= 2 => bb::compose(p, bb::ax2(cons)),
        // pair with a trivial second component
        1 if budget >= 3 => bb::pair(p.clone(), bb::ax2(ante)),
        2 if budget >= 2 => match &cons {
            Formula::And(_, _) => {
                if r.gen_bool(0.5) {
                    bb::split_left(p)
                } else {
                    bb::split_right(p)
                }
            }
            _ => p,
        },
        3 if budget >= 3 => bb::by_cases(p, bb::ax3(cons)),
        4 if budget >= 2 => match &ante {
            Formula::Or(_, _) => {
                if r.gen_bool(0.5) {
                    bb::case_left(p)
                } else {
                    bb::case_right(p)
                }
            }
            _ => p,
        },
        // generalize an antecedent variable existentially
        5 if budget >= 2 => {
            let fv_cons = cons.free_vars();
            let candidate = ante
                .free_vars()
                .into_iter()
                .find(|v| !fv_cons.contains(v));
            match candidate {
                Some(x) => bb::exists_left(&x, p),
                None => p,
            }
        }
        // substitution instance, avoiding the literal binder condition
        6 if budget >= 2 => {
            let binders = {
                let mut b = ante.binding_vars();
                b.extend(cons.binding_vars());
                b
            };
            let fv: Vec<String> = p.conclusion.free_vars().into_iter().collect();
            if fv.is_empty() {
                return p;
            }
            let target = fv[r.gen_range(0..fv.len())].clone();
            let t = small_term(r);
            if t.vars().iter().any(|v| binders.contains(v)) {
                return p;
            }
            bb::subst_proof(p, &[(target.as_str(), t)])
        }
        // abstract into a block when the antecedent splits
        7 if budget >= 2 => match &ante {
            Formula::And(a, _) => {
                let a_free = a.free_vars();
                let xs: Vec<String> = ["x", "y"]
                    .iter()
                    .filter(|v| !a_free.contains(**v))
                    .map(|v| v.to_string())
                    .take(r.gen_range(0..=2))
                    .collect();
                bb::to_block(&xs, p)
            }
            _ => p,
        },
        8 if budget >= 4 => {
            let q = seed_proof(r);
            bb::conj_mono(p, q)
        }
        9 if budget >= 4 => {
            let q = seed_proof(r);
            bb::disj_mono(p, q)
        }
        10 if budget >= 3 => bb::lift_imp(p),
        _ if budget >= 2 => bb::compose(bb::ax1(ante), p),
        _ => p,
    }
}

// ---- sequent-calculus side ----

fn positive_lk(r: &mut ChaCha8Rng, depth: usize) -> LkFormula {
    bakit::lk::lk_of_formula(&random_positive(r, depth, &["x", "y"]))
}

/// Any first-order formula, used as a cut detour (may contain negation,
/// implication, universal quantification).
fn arbitrary_lk(r: &mut ChaCha8Rng, depth: usize) -> LkFormula {
    if depth == 0 {
        return positive_lk(r, 0);
    }
    match r.gen_range(0..6) {
        0 => LkFormula::neg(arbitrary_lk(r, depth - 1)),
        1 => LkFormula::imp(arbitrary_lk(r, depth - 1), arbitrary_lk(r, depth - 1)),
        2 => LkFormula::forall("t", arbitrary_lk(r, depth - 1)),
        3 => LkFormula::and(arbitrary_lk(r, depth - 1), arbitrary_lk(r, depth - 1)),
        4 => LkFormula::or(arbitrary_lk(r, depth - 1), arbitrary_lk(r, depth - 1)),
        _ => positive_lk(r, depth - 1),
    }
}

fn lk_seed(r: &mut ChaCha8Rng) -> LkProof {
    match r.gen_range(0..5) {
        0 => lb::ax(positive_lk(r, 1)),
        1 => lb::eq_refl(small_term(r)),
        2 => lb::add_zero(small_term(r)),
        3 => lb::add_succ(small_term(r), small_term(r)),
        _ => lb::s_fnc(small_term(r), small_term(r)),
    }
}

/// A random checked sequent proof whose end-sequent is entirely
/// positive-existential, salted with cuts on arbitrary formulas.
pub fn random_lk_proof(r: &mut ChaCha8Rng, max_nodes: usize) -> LkProof {
    let mut p = lk_seed(r);
    for _ in 0..24 {
        let candidate = lk_grow(r, p.clone(), max_nodes);
        if candidate.node_count() > max_nodes {
            break;
        }
        p = candidate;
    }
    p
}

fn lk_grow(r: &mut ChaCha8Rng, p: LkProof, max_nodes: usize) -> LkProof {
    let budget = max_nodes.saturating_sub(p.node_count());
    match r.gen_range(0..10) {
        0 if budget >= 1 => lb::wk_l(p, positive_lk(r, 1)),
        1 if budget >= 1 => lb::wk_r(p, positive_lk(r, 1)),
        2 if budget >= 1 && p.conclusion.ante.len() >= 2 => {
            let i = r.gen_range(0..p.conclusion.ante.len() - 1);
            lb::ex_l(p, i)
        }
        3 if budget >= 1 && p.conclusion.cons.len() >= 2 => {
            let i = r.gen_range(0..p.conclusion.cons.len() - 1);
            lb::ex_r(p, i)
        }
        4 if budget >= 2 => {
            // duplicate the last antecedent formula and contract it back
            match p.conclusion.ante.last() {
                Some(a) => lb::ctr_l(lb::wk_l(p.clone(), a.clone())),
                None => p,
            }
        }
        // an offending-cut detour through an arbitrary formula
        5 | 6 if budget >= lk_seed_cost() + 3 => {
            let f = arbitrary_lk(r, 2);
            let q = lk_seed(r);
            lb::cut(lb::wk_r(p, f.clone()), lb::wk_l(q, f))
        }
        7 if budget >= 2 && !p.conclusion.cons.is_empty() => {
            lb::or_r1(p, positive_lk(r, 1))
        }
        8 if budget >= 2 && !p.conclusion.ante.is_empty() => {
            lb::and_l1(p, positive_lk(r, 1))
        }
        9 if budget >= 2 && !p.conclusion.cons.is_empty() => {
            // generalize the first consequent formula at the identity
            // witness: the active formula is body[x/x] = body itself
            let body = p.conclusion.cons[0].clone();
            lb::exists_r(p, "x", Term::var("x"), body)
        }
        _ => p,
    }
}

fn lk_seed_cost() -> usize {
    1
}

/// Structured cut detours that exercise the principal grade-reduction
/// and rank-reduction paths of the eliminator, not just the weakening
/// dissolution.
pub fn structured_cut_proof(r: &mut ChaCha8Rng) -> LkProof {
    match r.gen_range(0..7) {
        // principal implication pair: ⇒ (G → G) cut against [G, G→G] ⇒ G
        0 => {
            let g = positive_lk(r, 1);
            let left = lb::imp_r(lb::ax(g.clone()));
            let right = lb::imp_l(lb::ax(g.clone()), lb::ax(g));
            lb::cut(left, right)
        }
        // principal negation pair: [G] ⇒ [¬G, G] against [G, ¬G] ⇒ []
        1 => {
            let g = positive_lk(r, 1);
            let left = lb::neg_r(lb::ax(g.clone()));
            let right = lb::neg_l(lb::ax(g));
            lb::cut(left, right)
        }
        // principal universal pair with a real witness term
        2 => {
            let body = LkFormula::Eq(Term::var("x"), Term::var("x"));
            let left = lb::forall_r(lb::eq_refl(Term::var("e")), "x", "e", body.clone());
            let witness = super::random_term(r, 1, &[], false);
            let at_w = body.substituted("x", &witness).unwrap();
            let right = lb::forall_l(lb::ax(at_w), "x", witness, body);
            lb::cut(left, right)
        }
        // principal existential pair
        3 => {
            let body = LkFormula::Eq(Term::var("x"), Term::var("x"));
            let witness = super::random_term(r, 1, &[], false);
            let at_w = body.substituted("x", &witness).unwrap();
            let left = lb::exists_r(lb::ax(at_w.clone()), "x", witness, body.clone());
            // left: [witness=witness] ⇒ [∃x(x=x)]
            let inner = lb::exists_r(lb::ax(body.substituted("x", &Term::var("e")).unwrap()), "k", Term::var("e"), LkFormula::Eq(Term::var("k"), Term::var("k")));
            let right = lb::exists_l(inner, "x", "e", body);
            lb::cut(left, right)
        }
        // rank reduction: the cut formula sits in context above a logical
        // rule on the right
        4 => {
            let f = arbitrary_lk(r, 2);
            let (g1, g2) = (positive_lk(r, 1), positive_lk(r, 1));
            let left = lb::wk_r(lk_seed(r), f.clone());
            let right = lb::or_l(
                lb::wk_l(lb::ax(g1.clone()), f.clone()),
                lb::wk_l(lb::ax(g2.clone()), f.clone()),
            );
            // right ante: [g1, f, g2, f, g1∨g2]: move one f to the end
            let pos = right
                .conclusion
                .ante
                .iter()
                .position(|x| *x == f)
                .unwrap();
            let n = right.conclusion.ante.len();
            let right = lb::move_ante(right, pos, n - 1);
            lb::cut(left, right)
        }
        // rank reduction on the left: cut formula in context above a
        // two-premise right rule
        5 => {
            let f = arbitrary_lk(r, 2);
            let (g1, g2) = (positive_lk(r, 1), positive_lk(r, 1));
            let l1 = lb::move_cons(lb::wk_r(lb::ax(g1.clone()), f.clone()), 0, 1);
            let l2 = lb::move_cons(lb::wk_r(lb::ax(g2.clone()), f.clone()), 0, 1);
            let left = lb::and_r(l1, l2);
            // left cons: [g1∧g2, f, f]: bring one f to the front
            let left = lb::move_cons(left, 1, 0);
            let right = lb::wk_l(lk_seed(r), f);
            lb::cut(left, right)
        }
        // eigen clash: the right premise uses an eigenvariable that is
        // free on the left side of the cut
        _ => {
            let f = LkFormula::neg(LkFormula::Eq(Term::var("e"), Term::Zero));
            let body = LkFormula::Eq(Term::var("x"), Term::var("c"));
            let inner = lb::exists_r(
                lb::ax(LkFormula::Eq(Term::var("e"), Term::var("c"))),
                "k",
                Term::var("e"),
                LkFormula::Eq(Term::var("k"), Term::var("c")),
            );
            let elim = lb::exists_l(inner, "x", "e", body.clone());
            // elim: [∃x(x=c)] ⇒ [∃k(k=c)] with eigen e; detour the cut on
            // a formula mentioning e free
            let left = lb::wk_r(
                lb::exists_r(
                    lb::ax(LkFormula::Eq(Term::var("c"), Term::var("c"))),
                    "x",
                    Term::var("c"),
                    body,
                ),
                f.clone(),
            );
            let right = lb::move_ante(lb::wk_l(elim, f), 0, 1);
            lb::cut(left, right)
        }
    }
}
