//! Proof checker and proof-transformation properties over the bundled
//! fixtures and a randomly assembled corpus.

mod common;

use bakit::ba::{
    check_proof, positivize_proof, proof_from_json, proof_to_json, semi_positivize_proof,
    synth_pos_upper, synth_semipos_to_pos, BaProof, TheoryPack,
};
use bakit::scenarios::fixtures::{ba_fixtures, cutoff_graph};
use bakit::syntax::{parse_formula, parse_sequent, Formula, Lang, Sequent};
use bakit::transforms::{positive_part, semi_positive_part};
use common::proofgen::random_ba_proof;
use common::rng;

const FORBIDDEN: [&str; 8] = [
    "bqc-ax8", "bqc-ax9", "bqc-ax10", "bqc-ax11", "bqc-ax12", "bqc-ax13", "bqc-r19", "ba-ax7",
];

fn corpus() -> Vec<BaProof> {
    let mut r = rng(301);
    let mut out: Vec<BaProof> = ba_fixtures().into_iter()
        .filter(|(_, theory, _)| *theory == "ba")
        .map(|(_, _, p)| p)
        .collect();
    for _ in 0..200 {
        out.push(random_ba_proof(&mut r, 20));
    }
    out
}

#[test]
fn corpus_is_checked_and_sized() {
    let pack = TheoryPack::ba();
    let proofs = corpus();
    assert!(proofs.len() >= 220);
    for (i, p) in proofs.iter().enumerate() {
        check_proof(p, &pack).unwrap_or_else(|e| panic!("#{i}: {e}"));
    }
    let random_part = &proofs[proofs.len() - 200..];
    assert!(random_part.iter().all(|p| p.node_count() <= 20));
}

#[test]
fn positivize_whole_corpus() {
    let pack = TheoryPack::ba();
    for (i, p) in corpus().iter().enumerate() {
        let q = positivize_proof(p, &pack).unwrap_or_else(|e| panic!("#{i}: {e}"));
        check_proof(&q, &pack).unwrap_or_else(|e| panic!("#{i}: {e}"));
        assert_eq!(
            q.conclusion,
            Sequent::new(
                positive_part(&p.conclusion.ante),
                positive_part(&p.conclusion.cons)
            ),
            "#{i}"
        );
        let used = q.rules_used();
        for r in FORBIDDEN {
            assert!(!used.contains(r), "#{i} uses {r}");
        }
        assert!(q.height() <= p.height(), "#{i} grew");
        // every formula in the result is positive
        let mut all_positive = true;
        q.for_each_formula(&mut |f| {
            all_positive &= bakit::syntax::is_positive(f);
        });
        assert!(all_positive, "#{i}");
    }
}

#[test]
fn semi_positivize_whole_corpus() {
    let pack = TheoryPack::ba();
    for (i, p) in corpus().iter().enumerate() {
        let q = semi_positivize_proof(p, &pack).unwrap_or_else(|e| panic!("#{i}: {e}"));
        check_proof(&q, &pack).unwrap_or_else(|e| panic!("#{i}: {e}"));
        assert_eq!(
            q.conclusion,
            Sequent::new(
                semi_positive_part(&p.conclusion.ante),
                semi_positive_part(&p.conclusion.cons)
            ),
            "#{i}"
        );
    }
}

#[test]
fn synthesizers_on_random_formulas() {
    let pack = TheoryPack::ba();
    let mut r = rng(302);
    for i in 0..300 {
        let a = common::random_formula(&mut r, 3);
        let up = synth_pos_upper(&a);
        check_proof(&up, &pack).unwrap_or_else(|e| panic!("#{i}: {e}"));
        assert_eq!(
            up.conclusion,
            Sequent::new(a.clone(), positive_part(&a))
        );
        let semi = synth_semipos_to_pos(&a);
        check_proof(&semi, &pack).unwrap_or_else(|e| panic!("#{i}: {e}"));
        assert_eq!(
            semi.conclusion,
            Sequent::new(semi_positive_part(&a), positive_part(&a))
        );
    }
}

#[test]
fn uniqueness_conditional_pipeline() {
    // from a checked conditional-uniqueness proof, semi-positivization
    // yields a checked conditional for the positive part of the graph
    let pack = TheoryPack::ba();
    for (name, theory, p) in ba_fixtures() {
        if !name.starts_with("cutoff-uniqueness") || theory != "ba" {
            continue;
        }
        let q = semi_positivize_proof(&p, &pack).unwrap();
        check_proof(&q, &pack).unwrap();
        // the conclusion must be the conditional for the positive parts
        let Formula::Block(vars, ante, cons) = &q.conclusion.cons else {
            panic!("conditional shape")
        };
        assert!(vars.is_empty());
        assert!(bakit::syntax::is_positive(ante));
        assert!(bakit::syntax::is_positive(cons));
    }
    // explicit check on the padded (non-positive) variant
    let padded = ba_fixtures()
        .into_iter()
        .find(|(n, _, _)| *n == "cutoff-uniqueness-padded")
        .unwrap()
        .2;
    let q = semi_positivize_proof(&padded, &pack).unwrap();
    check_proof(&q, &pack).unwrap();
    let a = cutoff_graph("x", "y", "z");
    let graph_u = bakit::syntax::substitute(
        &Formula::and(a.clone(), Formula::Top),
        &bakit::syntax::Substitution::single("z", bakit::syntax::Term::var("u")),
    )
    .unwrap();
    let graph_v = bakit::syntax::substitute(
        &Formula::and(a, Formula::Top),
        &bakit::syntax::Substitution::single("z", bakit::syntax::Term::var("v")),
    )
    .unwrap();
    let expected = Sequent::new(
        Formula::Top,
        Formula::imp(
            Formula::and(graph_u, graph_v),
            Formula::Eq(bakit::syntax::Term::var("u"), bakit::syntax::Term::var("v")),
        ),
    );
    assert_eq!(q.conclusion, expected);
}

#[test]
fn checker_rejects_broken_instances() {
    use bakit::ba::builder as bb;
    let pack = TheoryPack::ba();
    let f = |s: &str| parse_formula(s, Lang::L).unwrap();
    // tampered conclusion
    let mut p = bb::ax1(f("x = y"));
    p.conclusion = parse_sequent("x = y => y = x", Lang::L).unwrap();
    assert!(check_proof(&p, &pack).is_err());
    // rule 19 side condition: block variable free in the kept antecedent
    let premise = bb::proj1(f("x = 0"), f("y = 0"));
    let mut bad = bb::to_block(&[], premise);
    if let bakit::ba::BindValue::Vars(vs) = bad
        .just
        .bind
        .get_mut("xs")
        .expect("xs binding")
    {
        vs.push("x".to_string());
    }
    assert!(check_proof(&bad, &pack).is_err());
    // theory axiom outside the pack
    let u = bb::theory_u(
        bakit::syntax::Term::var("a"),
        bakit::syntax::Term::var("b"),
        bakit::syntax::Term::var("c"),
    );
    assert!(check_proof(&u, &TheoryPack::ba()).is_err());
    assert!(check_proof(&u, &TheoryPack::ba_u()).is_ok());
    // language violation: cut-off term under the plain language
    let m = bb::monus_le(bakit::syntax::Term::var("a"), bakit::syntax::Term::var("b"));
    assert!(check_proof(&m, &TheoryPack::ba()).is_err());
    assert!(check_proof(&m, &TheoryPack::ba_c()).is_ok());
}

#[test]
fn proof_files_round_trip_whole_corpus() {
    let pack = TheoryPack::ba();
    let mut r = rng(303);
    for i in 0..50 {
        let p = random_ba_proof(&mut r, 16);
        let text = proof_to_json(&p);
        let back = proof_from_json(&text, Lang::L).unwrap_or_else(|e| panic!("#{i}: {e}"));
        assert_eq!(back, p, "#{i}");
        check_proof(&back, &pack).unwrap();
    }
}

#[test]
fn convention_sequent_for_axiom_six() {
    // one-node tree: ⊤ ⇒ x = x
    use bakit::ba::builder as bb;
    let p = bb::ax6(bakit::syntax::Term::var("x"));
    assert_eq!(
        p.conclusion,
        parse_sequent("T => x = x", Lang::L).unwrap()
    );
    check_proof(&p, &TheoryPack::ba()).unwrap();
}

#[test]
fn induction_rule_example() {
    // from A ⇒ A[x/Sx] conclude A[x/0] ⇒ A
    use bakit::ba::builder as bb;
    let p = bakit::scenarios::fixtures::zero_add("u");
    check_proof(&p, &TheoryPack::ba()).unwrap();
    // its shape ends in a composition whose right premise is the rule
    let _ = bb::ax1(parse_formula("T", Lang::L).unwrap());
    assert!(p.rules_used().contains("ba-ind"));
}
