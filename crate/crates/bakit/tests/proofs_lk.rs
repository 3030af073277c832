//! Sequent-calculus checker, cut elimination, and the bridge into the
//! block calculus, over fixtures and a random corpus.

mod common;

use bakit::ba::{check_proof, TheoryPack};
use bakit::lk::{
    ba_to_lk, check_lk, eliminate_cuts_outside, lk_from_json, lk_pos_to_ba, lk_to_json,
    ClassPredicate, LkProof,
};
use bakit::scenarios::fixtures::lk_fixtures;
use bakit::syntax::{parse_sequent, Lang};
use common::proofgen::random_lk_proof;
use common::rng;

const POS: ClassPredicate = ClassPredicate::PositiveExistential;

fn random_corpus(n: usize) -> Vec<LkProof> {
    let mut r = rng(401);
    (0..n).map(|_| random_lk_proof(&mut r, 25)).collect()
}

#[test]
fn random_corpus_is_checked_and_positive_ended() {
    for (i, p) in random_corpus(200).iter().enumerate() {
        check_lk(p, POS).unwrap_or_else(|e| panic!("#{i}: {e}"));
        for f in p.conclusion.formulas() {
            assert!(POS.accepts(f), "#{i}: end-sequent formula {f}");
        }
        assert!(p.node_count() <= 25, "#{i}");
    }
}

#[test]
fn cut_elimination_on_random_corpus() {
    common::with_big_stack(cut_elimination_on_random_corpus_inner);
}

fn cut_elimination_on_random_corpus_inner() {
    let mut with_offender = 0;
    for (i, p) in random_corpus(200).iter().enumerate() {
        if p.cut_formulas().iter().any(|c| !POS.accepts(c)) {
            with_offender += 1;
        }
        let out = eliminate_cuts_outside(p, POS).unwrap_or_else(|e| panic!("#{i}: {e}"));
        assert_eq!(out.conclusion, p.conclusion, "#{i}: end-sequent changed");
        check_lk(&out, POS).unwrap_or_else(|e| panic!("#{i}: {e}"));
        for c in out.cut_formulas() {
            assert!(POS.accepts(&c), "#{i}: offending cut survived: {c}");
        }
        // subformula closure of the class propagates to every formula
        let mut all_in_class = true;
        out.for_each_formula(&mut |f| {
            all_in_class &= POS.accepts(f);
        });
        assert!(all_in_class, "#{i}");
    }
    assert!(with_offender >= 60, "only {with_offender} offending-cut proofs");
}

#[test]
fn cut_elimination_on_fixtures() {
    common::with_big_stack(cut_elimination_on_fixtures_inner);
}

fn cut_elimination_on_fixtures_inner() {
    for (name, p) in lk_fixtures() {
        let out = eliminate_cuts_outside(&p, POS).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(out.conclusion, p.conclusion, "{name}");
        check_lk(&out, POS).unwrap_or_else(|e| panic!("{name}: {e}"));
        for c in out.cut_formulas() {
            assert!(POS.accepts(&c), "{name}: {c}");
        }
    }
}

#[test]
fn in_class_cuts_survive_untouched() {
    let (_, p) = lk_fixtures()
        .into_iter()
        .find(|(n, _)| *n == "in-class-cut")
        .unwrap();
    let out = eliminate_cuts_outside(&p, POS).unwrap();
    assert_eq!(out, p, "proof without offending cuts must come back as-is");
}

#[test]
fn implication_free_after_elimination() {
    let (_, p) = lk_fixtures()
        .into_iter()
        .find(|(n, _)| *n == "arith-via-implication-cut")
        .unwrap();
    let out = eliminate_cuts_outside(&p, POS).unwrap();
    let mut clean = true;
    out.for_each_formula(&mut |f| clean &= POS.accepts(f));
    assert!(clean, "an implication survived");
}

#[test]
fn bridge_round_trip_on_positive_fixtures() {
    // every all-positive fixture (after elimination) maps to a checked
    // block-calculus proof of the folded sequent
    let pack = TheoryPack::ba();
    for (name, p) in lk_fixtures() {
        let cleaned = eliminate_cuts_outside(&p, POS).unwrap();
        let mut all_pos = true;
        cleaned.for_each_formula(&mut |f| all_pos &= POS.accepts(f));
        if !all_pos {
            continue;
        }
        let q = lk_pos_to_ba(&cleaned).unwrap_or_else(|e| panic!("{name}: {e}"));
        check_proof(&q, &pack).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn bridge_round_trip_on_random_positive_proofs() {
    common::with_big_stack(bridge_round_trip_on_random_positive_proofs_inner);
}

fn bridge_round_trip_on_random_positive_proofs_inner() {
    let pack = TheoryPack::ba();
    let mut translated = 0;
    for (i, p) in random_corpus(120).iter().enumerate() {
        let cleaned = eliminate_cuts_outside(p, POS).unwrap();
        let mut all_pos = true;
        cleaned.for_each_formula(&mut |f| all_pos &= POS.accepts(f));
        if !all_pos {
            continue;
        }
        let q = lk_pos_to_ba(&cleaned).unwrap_or_else(|e| panic!("#{i}: {e}"));
        check_proof(&q, &pack).unwrap_or_else(|e| panic!("#{i}: {e}"));
        translated += 1;
    }
    assert!(translated >= 100, "{translated}");
}

#[test]
fn ba_sequent_embedding() {
    let s = parse_sequent("x = y => E z. z = x", Lang::L).unwrap();
    let lk = ba_to_lk(&s);
    assert_eq!(lk.ante.len(), 1);
    assert_eq!(lk.cons.len(), 1);
    assert_eq!(lk.to_string(), "x = y => E z. z = x");
}

#[test]
fn lk_json_round_trip_on_fixtures() {
    for (name, p) in lk_fixtures() {
        let text = lk_to_json(&p);
        let back = lk_from_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(back, p, "{name}");
    }
}

#[test]
fn eigenvariable_checks_fire() {
    use bakit::lk::builder as lb;
    use bakit::lk::parse_lk_formula;
    use bakit::syntax::Term;
    // y free in the context: must be rejected
    let lf = |s: &str| parse_lk_formula(s).unwrap();
    let premise = lb::wk_r(lb::ax(lf("e = c")), lf("e = e"));
    let bad = lb::exists_l(premise, "x", "e", lf("x = c"));
    let err = check_lk(&bad, POS).unwrap_err();
    assert!(err.to_string().contains("eigenvariable"), "{err}");
    // induction context must not mention the induction variable
    let premise = lb::wk_l(lb::s_fnc(Term::var("n"), Term::var("n")), lf("n = 0"));
    let premise = lb::move_ante(premise, 1, 0);
    let bad = lb::ind(premise, "n", Term::var("m"), lf("n = n"));
    assert!(check_lk(&bad, POS).is_err());
}

#[test]
fn cut_elimination_on_structured_detours() {
    common::with_big_stack(|| {
        let mut r = rng(402);
        for i in 0..300 {
            let p = common::proofgen::structured_cut_proof(&mut r);
            check_lk(&p, POS).unwrap_or_else(|e| panic!("#{i} input: {e}"));
            // these proofs may have non-positive end-sequent parts when the
            // detour formula leaks into the conclusion; skip those, the
            // eliminator's precondition excludes them
            if p.conclusion.formulas().any(|f| !POS.accepts(f)) {
                continue;
            }
            let out = eliminate_cuts_outside(&p, POS).unwrap_or_else(|e| panic!("#{i}: {e}"));
            assert_eq!(out.conclusion, p.conclusion, "#{i}");
            check_lk(&out, POS).unwrap_or_else(|e| panic!("#{i} output: {e}"));
            for c in out.cut_formulas() {
                assert!(POS.accepts(&c), "#{i}: {c}");
            }
        }
    });
}
