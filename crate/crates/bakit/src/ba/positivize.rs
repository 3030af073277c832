//! Proof-level positivization: rewrites a checked proof into a checked
//! proof of the positive (resp. semi-positive) parts of its end-sequent.
//!
//! The positive pass never uses axioms 8–13, rule 19, or the induction
//! axiom schema, and never increases the height of the tree: axiom nodes
//! are replaced by the same axiom at positive parts, block axioms and the
//! abstraction rule collapse to `A ⇒ ⊤`, and every other rule is reapplied
//! unchanged.

use super::builder::{self, ax2, compose, to_block};
use super::{check_proof, BaProof, BaRule, BindValue, Bindings, ProjSide, TheoryPack};
use crate::syntax::{Formula, Ident, Term};
use crate::transforms::{positive_part, semi_positive_part};
use thiserror::Error;

#[derive(Clone, Debug, Error)]
pub enum PositivizeError {
    #[error("input proof does not check: {0}")]
    NotChecked(#[from] super::ProofError),
    #[error("theory pack '{0}' has a non-positive extra axiom")]
    NonPositiveTheory(String),
}

fn bf(bind: &Bindings, key: &str) -> Formula {
    match bind.get(key) {
        Some(BindValue::Formula(f)) => f.clone(),
        other => panic!("checked proof: expected formula binding '{key}', got {other:?}"),
    }
}

fn bv(bind: &Bindings, key: &str) -> Ident {
    match bind.get(key) {
        Some(BindValue::Var(v)) => v.clone(),
        other => panic!("checked proof: expected var binding '{key}', got {other:?}"),
    }
}

fn bvs(bind: &Bindings, key: &str) -> Vec<Ident> {
    match bind.get(key) {
        Some(BindValue::Vars(v)) => v.clone(),
        other => panic!("checked proof: expected vars binding '{key}', got {other:?}"),
    }
}

fn bts(bind: &Bindings, key: &str) -> Vec<Term> {
    match bind.get(key) {
        Some(BindValue::Terms(t)) => t.clone(),
        other => panic!("checked proof: expected terms binding '{key}', got {other:?}"),
    }
}

fn bside(bind: &Bindings, key: &str) -> ProjSide {
    match bind.get(key) {
        Some(BindValue::Side(s)) => *s,
        other => panic!("checked proof: expected side binding '{key}', got {other:?}"),
    }
}

/// Proof of `A ⇒ A^∃` in the bare theory.
pub fn synth_pos_upper(a: &Formula) -> BaProof {
    match a {
        Formula::Top | Formula::Bot | Formula::Eq(_, _) | Formula::Lt(_, _) => {
            builder::ax1(a.clone())
        }
        Formula::Block(_, _, _) => ax2(a.clone()),
        Formula::And(l, r) => builder::conj_mono(synth_pos_upper(l), synth_pos_upper(r)),
        Formula::Or(l, r) => builder::disj_mono(synth_pos_upper(l), synth_pos_upper(r)),
        Formula::Exists(x, body) => builder::exists_mono(x, synth_pos_upper(body)),
    }
}

/// Proof of `A^∀ ⇒ A^∃` in the bare theory.
pub fn synth_semipos_to_pos(a: &Formula) -> BaProof {
    match a {
        Formula::Top | Formula::Bot | Formula::Eq(_, _) | Formula::Lt(_, _) => {
            builder::ax1(a.clone())
        }
        Formula::Block(vars, ante, cons) => ax2(Formula::Block(
            vars.clone(),
            Box::new(positive_part(ante)),
            Box::new(positive_part(cons)),
        )),
        Formula::And(l, r) => {
            builder::conj_mono(synth_semipos_to_pos(l), synth_semipos_to_pos(r))
        }
        Formula::Or(l, r) => {
            builder::disj_mono(synth_semipos_to_pos(l), synth_semipos_to_pos(r))
        }
        Formula::Exists(x, body) => builder::exists_mono(x, synth_semipos_to_pos(body)),
    }
}

fn require_positive_pack(p: &BaProof, pack: &TheoryPack) -> Result<(), PositivizeError> {
    check_proof(p, pack)?;
    if !pack.extras_positive() {
        return Err(PositivizeError::NonPositiveTheory(pack.name.clone()));
    }
    Ok(())
}

/// From a checked proof of `A ⇒ B`, a checked proof of `A^∃ ⇒ B^∃` that
/// avoids axioms 8–13, rule 19, and the induction axiom schema, with
/// height at most the input's.
pub fn positivize_proof(p: &BaProof, pack: &TheoryPack) -> Result<BaProof, PositivizeError> {
    require_positive_pack(p, pack)?;
    Ok(positivize_rec(p))
}

fn positivize_rec(p: &BaProof) -> BaProof {
    let bind = &p.just.bind;
    match &p.just.rule {
        BaRule::BqcAx1 => builder::ax1(positive_part(&bf(bind, "A"))),
        BaRule::BqcAx2 => ax2(positive_part(&bf(bind, "A"))),
        BaRule::BqcAx3 => builder::ax3(positive_part(&bf(bind, "A"))),
        BaRule::BqcAx4 => builder::ax4(
            positive_part(&bf(bind, "A")),
            positive_part(&bf(bind, "B")),
            positive_part(&bf(bind, "C")),
        ),
        BaRule::BqcAx5 => builder::ax5(
            positive_part(&bf(bind, "A")),
            &bv(bind, "x"),
            positive_part(&bf(bind, "B")),
        ),
        // atomic axioms and positive theory axioms are their own positive
        // parts
        BaRule::BqcAx6
        | BaRule::BqcAx7
        | BaRule::BaAx1
        | BaRule::BaAx2
        | BaRule::BaAx3
        | BaRule::BaAx4
        | BaRule::BaAx5
        | BaRule::BaAx6
        | BaRule::MonusLe
        | BaRule::MonusGt
        | BaRule::Theory(_) => p.clone(),
        // every block axiom has a block on the right, so the positive part
        // is provable by `A ⇒ ⊤` alone
        BaRule::BqcAx8
        | BaRule::BqcAx9
        | BaRule::BqcAx10
        | BaRule::BqcAx11
        | BaRule::BqcAx12
        | BaRule::BqcAx13
        | BaRule::BaAx7 => ax2(positive_part(&p.conclusion.ante)),
        BaRule::R14 => compose(
            positivize_rec(&p.premises[0]),
            positivize_rec(&p.premises[1]),
        ),
        BaRule::R15 => builder::pair(
            positivize_rec(&p.premises[0]),
            positivize_rec(&p.premises[1]),
        ),
        BaRule::R15Rev => match bside(bind, "side") {
            ProjSide::Left => builder::split_left(positivize_rec(&p.premises[0])),
            ProjSide::Right => builder::split_right(positivize_rec(&p.premises[0])),
        },
        BaRule::R16 => builder::by_cases(
            positivize_rec(&p.premises[0]),
            positivize_rec(&p.premises[1]),
        ),
        BaRule::R16Rev => match bside(bind, "side") {
            ProjSide::Left => builder::case_left(positivize_rec(&p.premises[0])),
            ProjSide::Right => builder::case_right(positivize_rec(&p.premises[0])),
        },
        BaRule::R17 => {
            let xs = bvs(bind, "xs");
            let ts = bts(bind, "ts");
            let pairs: Vec<(&str, Term)> = xs
                .iter()
                .map(|x| x.as_str())
                .zip(ts.iter().cloned())
                .collect();
            builder::subst_proof(positivize_rec(&p.premises[0]), &pairs)
        }
        BaRule::R18 => builder::exists_left(&bv(bind, "x"), positivize_rec(&p.premises[0])),
        BaRule::R18Rev => builder::from_exists(&bv(bind, "x"), positivize_rec(&p.premises[0])),
        BaRule::R19 => ax2(positive_part(&p.conclusion.ante)),
        BaRule::BaInd => builder::ind(&bv(bind, "x"), positivize_rec(&p.premises[0])),
    }
}

/// From a checked proof of `A ⇒ B`, a checked proof of `A^∀ ⇒ B^∀`.
pub fn semi_positivize_proof(p: &BaProof, pack: &TheoryPack) -> Result<BaProof, PositivizeError> {
    require_positive_pack(p, pack)?;
    Ok(semi_rec(p))
}

fn semi_rec(p: &BaProof) -> BaProof {
    let bind = &p.just.bind;
    match &p.just.rule {
        BaRule::BqcAx1 => builder::ax1(semi_positive_part(&bf(bind, "A"))),
        BaRule::BqcAx2 => ax2(semi_positive_part(&bf(bind, "A"))),
        BaRule::BqcAx3 => builder::ax3(semi_positive_part(&bf(bind, "A"))),
        BaRule::BqcAx4 => builder::ax4(
            semi_positive_part(&bf(bind, "A")),
            semi_positive_part(&bf(bind, "B")),
            semi_positive_part(&bf(bind, "C")),
        ),
        BaRule::BqcAx5 => builder::ax5(
            semi_positive_part(&bf(bind, "A")),
            &bv(bind, "x"),
            semi_positive_part(&bf(bind, "B")),
        ),
        BaRule::BqcAx6
        | BaRule::BqcAx7
        | BaRule::BaAx1
        | BaRule::BaAx2
        | BaRule::BaAx3
        | BaRule::BaAx4
        | BaRule::BaAx5
        | BaRule::BaAx6
        | BaRule::MonusLe
        | BaRule::MonusGt
        | BaRule::Theory(_) => p.clone(),
        // inside a block, the semi-positive part positivizes both sides,
        // so block axioms survive at the positive parts of their bindings
        BaRule::BqcAx8 => builder::ax8(
            &bvs(bind, "xs"),
            positive_part(&bf(bind, "A")),
            positive_part(&bf(bind, "B")),
            positive_part(&bf(bind, "C")),
        ),
        BaRule::BqcAx9 => builder::ax9(
            &bvs(bind, "xs"),
            positive_part(&bf(bind, "A")),
            positive_part(&bf(bind, "B")),
            positive_part(&bf(bind, "C")),
        ),
        BaRule::BqcAx10 => builder::ax10(
            &bvs(bind, "xs"),
            positive_part(&bf(bind, "A")),
            positive_part(&bf(bind, "B")),
            positive_part(&bf(bind, "C")),
        ),
        BaRule::BqcAx11 => builder::ax11(
            &bvs(bind, "xs"),
            &bts(bind, "ts"),
            positive_part(&bf(bind, "A")),
            positive_part(&bf(bind, "B")),
        ),
        BaRule::BqcAx12 => builder::ax12(
            &bvs(bind, "xs"),
            &bvs(bind, "ys"),
            positive_part(&bf(bind, "A")),
            positive_part(&bf(bind, "B")),
        ),
        BaRule::BqcAx13 => builder::ax13(
            &bvs(bind, "ys"),
            &bv(bind, "x"),
            positive_part(&bf(bind, "B")),
            positive_part(&bf(bind, "A")),
        ),
        BaRule::BaAx7 => builder::ba_ax7(
            &bvs(bind, "ys"),
            &bv(bind, "x"),
            positive_part(&bf(bind, "A")),
        ),
        BaRule::R14 => compose(semi_rec(&p.premises[0]), semi_rec(&p.premises[1])),
        BaRule::R15 => builder::pair(semi_rec(&p.premises[0]), semi_rec(&p.premises[1])),
        BaRule::R15Rev => match bside(bind, "side") {
            ProjSide::Left => builder::split_left(semi_rec(&p.premises[0])),
            ProjSide::Right => builder::split_right(semi_rec(&p.premises[0])),
        },
        BaRule::R16 => builder::by_cases(semi_rec(&p.premises[0]), semi_rec(&p.premises[1])),
        BaRule::R16Rev => match bside(bind, "side") {
            ProjSide::Left => builder::case_left(semi_rec(&p.premises[0])),
            ProjSide::Right => builder::case_right(semi_rec(&p.premises[0])),
        },
        BaRule::R17 => {
            let xs = bvs(bind, "xs");
            let ts = bts(bind, "ts");
            let pairs: Vec<(&str, Term)> = xs
                .iter()
                .map(|x| x.as_str())
                .zip(ts.iter().cloned())
                .collect();
            builder::subst_proof(semi_rec(&p.premises[0]), &pairs)
        }
        BaRule::R18 => builder::exists_left(&bv(bind, "x"), semi_rec(&p.premises[0])),
        BaRule::R18Rev => builder::from_exists(&bv(bind, "x"), semi_rec(&p.premises[0])),
        // the one interesting case: positivize the premise, re-abstract,
        // and precompose with the synthesized A^∀ ⇒ A^∃ segment
        BaRule::R19 => {
            let xs = bvs(bind, "xs");
            let positivized = positivize_rec(&p.premises[0]);
            let reblocked = to_block(&xs, positivized);
            let upper = synth_semipos_to_pos(&p.conclusion.ante);
            compose(upper, reblocked)
        }
        BaRule::BaInd => builder::ind(&bv(bind, "x"), semi_rec(&p.premises[0])),
    }
}
