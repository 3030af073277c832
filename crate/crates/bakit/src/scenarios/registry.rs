//! The registered scenarios: each builds its models and formulas, runs
//! its assertions, and emits a deterministic report.

use super::fixtures;
use super::report::{AssertionReport, ScenarioReport};
use crate::ba::{check_proof, positivize_proof, semi_positivize_proof, TheoryPack};
use crate::lk::{eliminate_cuts_outside, ClassPredicate};
use crate::semantics::{
    assignment, force_at, force_sequent, make_kstar, overspill_check, sat_capped, add_root,
    ElementId, EvalBound, OverspillOutcome, StructureSpec, Truth3,
};
use crate::syntax::{parse_formula, parse_sequent, Formula, Lang, Sequent, Term};
use crate::transforms::{sigma1_totalizer, TotalizerInput};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("unknown scenario '{0}'")]
    Unknown(String),
}

pub fn scenario_names() -> Vec<&'static str> {
    vec![
        "cutoff-uniqueness-failure",
        "even-undecidable",
        "prime-divisor-failure",
        "cancellation-U-failure",
        "two-node-cancellation-conditional",
        "positivize-pipeline",
        "totalizer-demo",
        "cutelim-demo",
        "overspill-suite",
    ]
}

pub fn run_scenario(name: &str) -> Result<ScenarioReport, ScenarioError> {
    match name {
        "cutoff-uniqueness-failure" => Ok(cutoff_uniqueness_failure()),
        "even-undecidable" => Ok(even_undecidable()),
        "prime-divisor-failure" => Ok(prime_divisor_failure()),
        "cancellation-U-failure" => Ok(cancellation_u_failure()),
        "two-node-cancellation-conditional" => Ok(two_node_conditional()),
        "positivize-pipeline" => Ok(positivize_pipeline()),
        "totalizer-demo" => Ok(totalizer_demo()),
        "cutelim-demo" => Ok(cutelim_demo()),
        "overspill-suite" => Ok(overspill_suite()),
        other => Err(ScenarioError::Unknown(other.to_string())),
    }
}

pub fn run_all() -> Vec<ScenarioReport> {
    scenario_names()
        .into_iter()
        .map(|n| run_scenario(n).expect("registered"))
        .collect()
}

fn f(src: &str) -> Formula {
    parse_formula(src, Lang::L).unwrap()
}

fn seq(src: &str) -> Sequent {
    parse_sequent(src, Lang::L).unwrap()
}

fn truth_assert(
    report: &mut ScenarioReport,
    description: &str,
    note: &str,
    expected: Truth3,
    actual: Truth3,
    evidence: Option<serde_json::Value>,
) {
    report.push(AssertionReport {
        description: description.to_string(),
        note: note.to_string(),
        expected: expected.to_string(),
        actual: actual.to_string(),
        pass: expected == actual,
        undecided: expected != actual && !actual.is_decided(),
        evidence,
    });
}

fn flag_assert(
    report: &mut ScenarioReport,
    description: &str,
    note: &str,
    pass: bool,
    detail: Option<serde_json::Value>,
) {
    report.push(AssertionReport {
        description: description.to_string(),
        note: note.to_string(),
        expected: "ok".into(),
        actual: if pass { "ok".into() } else { "violated".into() },
        pass,
        undecided: false,
        evidence: detail,
    });
}

fn evidence_json(outcome: &crate::semantics::ForceOutcome) -> Option<serde_json::Value> {
    outcome.evidence.as_ref().map(|e| {
        serde_json::json!({
            "node": e.node,
            "assignment": e
                .assignment
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect::<std::collections::BTreeMap<_, _>>(),
        })
    })
}

/// The uniqueness sequent `A(x̄,u) ∧ A(x̄,v) ⇒ u = v` for an output
/// variable `z` of `a`.
fn uniqueness_sequent(a: &Formula, z: &str, u: &str, vv: &str) -> Sequent {
    use crate::syntax::{substitute, Substitution};
    let au = substitute(a, &Substitution::single(z, Term::var(u))).unwrap();
    let av = substitute(a, &Substitution::single(z, Term::var(vv))).unwrap();
    Sequent::new(
        Formula::and(au, av),
        Formula::Eq(Term::var(u), Term::var(vv)),
    )
}

fn cutoff_uniqueness_failure() -> ScenarioReport {
    let mut report = ScenarioReport::new("cutoff-uniqueness-failure");
    let m = make_kstar();
    let b = EvalBound::with_inf(4);
    let a = fixtures::cutoff_graph("x", "y", "z");
    use ElementId::*;
    let at = |xx, yy, zz| {
        force_at(&m, 0, &a, &assignment(&[("x", xx), ("y", yy), ("z", zz)]), b).unwrap()
    };
    truth_assert(
        &mut report,
        "the graph holds at (∞, ∞, 0)",
        "∞ < ∞ holds and 0 = 0, so the left disjunct is forced",
        Truth3::True,
        at(Inf, Inf, Nat(0)),
        None,
    );
    // A(S∞, ∞, 1): the successor argument evaluates to ∞ again
    let a_succ = crate::syntax::substitute(
        &a,
        &crate::syntax::Substitution::single("x", Term::succ(Term::var("x"))),
    )
    .unwrap();
    let got = force_at(
        &m,
        0,
        &a_succ,
        &assignment(&[("x", Inf), ("y", Inf), ("z", Nat(1))]),
        b,
    )
    .unwrap();
    truth_assert(
        &mut report,
        "the graph holds at (S∞, ∞, 1)",
        "S∞ = ∞ and ∞ = ∞ + 1, so the right disjunct is forced",
        Truth3::True,
        got,
        None,
    );
    let us = uniqueness_sequent(&a, "z", "u", "v");
    let out = force_sequent(&m, 0, &us, b).unwrap();
    truth_assert(
        &mut report,
        "the uniqueness sequent is refuted",
        "u = 0 and v = 1 both fit the graph at x = y = ∞, but 0 ≠ 1",
        Truth3::False,
        out.verdict,
        evidence_json(&out),
    );
    report
}

fn even_undecidable() -> ScenarioReport {
    let mut report = ScenarioReport::new("even-undecidable");
    let m = make_kstar();
    let b = EvalBound::with_inf(4);
    // B(x,y) := ∃z(A_even(x,z) ∧ ((z=0 ∧ y=0) ∨ (z>0 ∧ y=1)))
    let bxy = f(
        "E z. (((E w. x = w + w) & z = S0 | (E w. x = w + w + S0) & z = 0) \
         & (z = 0 & y = 0 | 0 < z & y = S0))",
    );
    use ElementId::*;
    let at = |xx, yy| {
        force_at(&m, 0, &bxy, &assignment(&[("x", xx), ("y", yy)]), b).unwrap()
    };
    truth_assert(
        &mut report,
        "B(∞, 0) is forced",
        "∞ = ∞ + ∞ + S0 with witness w = ∞ makes the odd disjunct true, so z = 0 works",
        Truth3::True,
        at(Inf, Nat(0)),
        None,
    );
    truth_assert(
        &mut report,
        "B(∞, 1) is forced",
        "∞ = ∞ + ∞ with witness w = ∞ makes the even disjunct true, so z = S0 works",
        Truth3::True,
        at(Inf, Nat(1)),
        None,
    );
    let us = uniqueness_sequent(&bxy, "y", "u", "v");
    let out = force_sequent(&m, 0, &us, b).unwrap();
    truth_assert(
        &mut report,
        "the uniqueness sequent for B is refuted",
        "both outputs 0 and 1 fit at x = ∞",
        Truth3::False,
        out.verdict,
        evidence_json(&out),
    );
    report
}

fn prime_divisor_failure() -> ScenarioReport {
    let mut report = ScenarioReport::new("prime-divisor-failure");
    let m = make_kstar();
    let b = EvalBound::with_inf(4);
    // P(y) := ∀d(d|y → d=1 ∨ d=y) ∧ S0 < y, with d|y := ∃w(d·w = y)
    let p = f("![d](E w. d * w = y -> d = S0 | d = y) & S0 < y");
    use ElementId::*;
    let got = force_at(&m, 0, &p, &assignment(&[("y", Inf)]), b).unwrap();
    truth_assert(
        &mut report,
        "P(∞) is forced",
        "the divisor block is vacuous at the irreflexive node and S0 < ∞",
        Truth3::True,
        got,
        None,
    );
    let divides = f("E w. SS0 * w = x");
    let got = force_at(&m, 0, &divides, &assignment(&[("x", Inf)]), b).unwrap();
    truth_assert(
        &mut report,
        "2 divides ∞",
        "witness w = ∞ since 2·∞ = ∞",
        Truth3::True,
        got,
        None,
    );
    let s = seq("(![d](E w. d * w = x -> d = S0 | d = x) & S0 < x) & E w. y * w = x => y = S0 | y = x");
    let out = force_sequent(&m, 0, &s, b).unwrap();
    truth_assert(
        &mut report,
        "the primality-divisor sequent is refuted",
        "at x = ∞, y = 2: P(∞) and 2|∞ hold but 2 ≠ 1 and 2 ≠ ∞",
        Truth3::False,
        out.verdict,
        evidence_json(&out),
    );
    report
}

fn cancellation_u_failure() -> ScenarioReport {
    let mut report = ScenarioReport::new("cancellation-U-failure");
    let m = make_kstar();
    let out = force_sequent(&m, 0, &seq("x + z = y + z => x = y"), EvalBound::with_inf(2))
        .unwrap();
    truth_assert(
        &mut report,
        "the cancellation sequent is refuted at the nonstandard node",
        "0 + ∞ = ∞ = S0 + ∞ while 0 ≠ S0",
        Truth3::False,
        out.verdict,
        evidence_json(&out),
    );
    report
}

fn two_node_conditional() -> ScenarioReport {
    let mut report = ScenarioReport::new("two-node-cancellation-conditional");
    let m = add_root(&make_kstar(), false);
    let s = seq("T => (E x. x + y = x + z -> y = z)");
    let out = force_sequent(&m, 0, &s, EvalBound::with_inf(2)).unwrap();
    truth_assert(
        &mut report,
        "the conditional cancellation with an existential antecedent fails",
        "at the root with y = 0, z = S0 the implication fails through the upper node, where x = ∞ witnesses the antecedent",
        Truth3::False,
        out.verdict,
        evidence_json(&out),
    );
    // the blocked form with quantified antecedent variable fails too,
    // while each pure-ℕ instance at the root is harmless
    let ok = force_at(
        &m,
        0,
        &f("(E x. x + 0 = x + 0 -> 0 = 0)"),
        &assignment(&[]),
        EvalBound::with_inf(2),
    )
    .unwrap();
    truth_assert(
        &mut report,
        "the diagonal instance is forced",
        "0 = 0 holds wherever the antecedent does",
        Truth3::True,
        ok,
        None,
    );
    report
}

fn positivize_pipeline() -> ScenarioReport {
    let mut report = ScenarioReport::new("positivize-pipeline");
    let forbidden = [
        "bqc-ax8", "bqc-ax9", "bqc-ax10", "bqc-ax11", "bqc-ax12", "bqc-ax13", "bqc-r19",
        "ba-ax7",
    ];
    for (name, theory, proof) in fixtures::ba_fixtures() {
        let pack = TheoryPack::by_name(theory).unwrap();
        if !pack.extras_positive() {
            continue;
        }
        let positivized = match positivize_proof(&proof, &pack) {
            Ok(p) => p,
            Err(e) => {
                flag_assert(
                    &mut report,
                    &format!("positivize {name}"),
                    "positivization applies to every checked fixture over a positive pack",
                    false,
                    Some(serde_json::json!({ "error": e.to_string() })),
                );
                continue;
            }
        };
        let checked = check_proof(&positivized, &pack).is_ok();
        let rules = positivized.rules_used();
        let no_forbidden = forbidden.iter().all(|r| !rules.contains(*r));
        let height_ok = positivized.height() <= proof.height();
        let concludes = positivized.conclusion
            == Sequent::new(
                crate::transforms::positive_part(&proof.conclusion.ante),
                crate::transforms::positive_part(&proof.conclusion.cons),
            );
        flag_assert(
            &mut report,
            &format!("positivize {name}"),
            "output checks, proves the positive parts, avoids the block axioms and abstraction rule, and does not grow",
            checked && no_forbidden && height_ok && concludes,
            None,
        );
        let semi = semi_positivize_proof(&proof, &pack).unwrap();
        let semi_ok = check_proof(&semi, &pack).is_ok()
            && semi.conclusion
                == Sequent::new(
                    crate::transforms::semi_positive_part(&proof.conclusion.ante),
                    crate::transforms::semi_positive_part(&proof.conclusion.cons),
                );
        flag_assert(
            &mut report,
            &format!("semi-positivize {name}"),
            "output checks and proves the semi-positive parts",
            semi_ok,
            None,
        );
    }
    report
}

fn totalizer_demo() -> ScenarioReport {
    let mut report = ScenarioReport::new("totalizer-demo");
    // any witness of the construction is either the padding value 0 or
    // bounded by the output sought, so a small cap is exhaustive here
    let cap = 8;
    let n = StructureSpec::std_n();
    // cut-off graph with padding witness
    let graph = f("((x1 < x2 & y = 0) | x1 = x2 + y) & z = z");
    let input = TotalizerInput {
        graph,
        inputs: vec!["x1".into(), "x2".into()],
        output: "y".into(),
        witnesses: vec!["z".into()],
    };
    let d = sigma1_totalizer(&input).unwrap();
    let mut all_match = true;
    for a in 0..=8u64 {
        for b in 0..=8u64 {
            for c in 0..=8u64 {
                let asg = assignment(&[
                    ("x1", ElementId::Nat(a)),
                    ("x2", ElementId::Nat(b)),
                    ("y", ElementId::Nat(c)),
                ]);
                let got = sat_capped(&n, &d, &asg, cap).unwrap();
                let want = a.saturating_sub(b) == c;
                if got != want {
                    all_match = false;
                }
            }
        }
    }
    flag_assert(
        &mut report,
        "the totalized formula defines cut-off subtraction on arguments up to 8",
        "every witness of the construction is bounded by the sum term, so the capped search is exhaustive",
        all_match,
        None,
    );
    // existence and uniqueness instances in the standard model
    let mut es_ok = true;
    let mut us_ok = true;
    for a in 0..=8u64 {
        for b in 0..=8u64 {
            let mut found = 0;
            for c in 0..=16u64 {
                let asg = assignment(&[
                    ("x1", ElementId::Nat(a)),
                    ("x2", ElementId::Nat(b)),
                    ("y", ElementId::Nat(c)),
                ]);
                if sat_capped(&n, &d, &asg, cap).unwrap() {
                    found += 1;
                }
            }
            es_ok &= found >= 1;
            us_ok &= found <= 1;
        }
    }
    flag_assert(
        &mut report,
        "existence holds: every input has an output",
        "the output is the cut-off difference itself",
        es_ok,
        None,
    );
    flag_assert(
        &mut report,
        "uniqueness holds: no input has two outputs",
        "the minimality clause pins the output",
        us_ok,
        None,
    );
    // identity graph
    let input = TotalizerInput {
        graph: f("y = x & z = z"),
        inputs: vec!["x".into()],
        output: "y".into(),
        witnesses: vec!["z".into()],
    };
    let d = sigma1_totalizer(&input).unwrap();
    let mut id_ok = true;
    for a in 0..=8u64 {
        for c in 0..=8u64 {
            let asg = assignment(&[("x", ElementId::Nat(a)), ("y", ElementId::Nat(c))]);
            let got = sat_capped(&n, &d, &asg, cap).unwrap();
            if got != (a == c) {
                id_ok = false;
            }
        }
    }
    flag_assert(
        &mut report,
        "the totalized identity graph defines the identity on arguments up to 8",
        "same bounded-witness argument as for cut-off",
        id_ok,
        None,
    );
    report
}

fn cutelim_demo() -> ScenarioReport {
    let mut report = ScenarioReport::new("cutelim-demo");
    let cls = ClassPredicate::PositiveExistential;
    for (name, proof) in fixtures::lk_fixtures() {
        match eliminate_cuts_outside(&proof, cls) {
            Ok(out) => {
                let same_end = out.conclusion == proof.conclusion;
                let clean = out.cut_formulas().iter().all(|c| cls.accepts(c));
                flag_assert(
                    &mut report,
                    &format!("eliminate cuts in '{name}'"),
                    "output proves the identical end-sequent and keeps only in-class cut formulas",
                    same_end && clean,
                    Some(serde_json::json!({
                        "nodes_before": proof.node_count(),
                        "nodes_after": out.node_count(),
                    })),
                );
            }
            Err(e) => flag_assert(
                &mut report,
                &format!("eliminate cuts in '{name}'"),
                "reduction must succeed on every bundled fixture",
                false,
                Some(serde_json::json!({ "error": e.to_string() })),
            ),
        }
    }
    report
}

/// A 50-formula positive corpus with one free variable.
pub fn overspill_corpus() -> Vec<Formula> {
    let mut out = vec![
        f("x = x"),
        f("x < S x"),
        f("(E y. x = y + y) | (E y. x = y + y + S0)"),
        f("E y. y < S x"),
        f("E y. (y < S x | y = x)"),
        f("E y. x + y = x + y"),
        f("E y. x * y = x * y"),
        f("E y. x = y"),
        f("E y. y + x = x + y & y = 0"),
        f("x < S(x + x) | x = 0"),
        f("x = 0 | E y. x = S y"),
        f("E y. (0 < y & x < x + y)"),
        f("x < SSSSS0"),
    ];
    // residue classes modulo 2..7
    for k in 2..=7u64 {
        let mut disj: Option<Formula> = None;
        for r in 0..k {
            let mut body = Term::mul(Term::num(k), Term::var("y"));
            if r > 0 {
                body = Term::add(body, Term::num(r));
            }
            let case = Formula::exists("y", Formula::Eq(Term::var("x"), body));
            disj = Some(match disj {
                None => case,
                Some(d) => Formula::or(d, case),
            });
        }
        out.push(disj.unwrap());
    }
    // linear shifts: ∃y(x = y + k) ∨ x < k  (total split)
    for k in 1..=8u64 {
        out.push(Formula::or(
            Formula::exists(
                "y",
                Formula::Eq(Term::var("x"), Term::add(Term::var("y"), Term::num(k))),
            ),
            Formula::Lt(Term::var("x"), Term::num(k)),
        ));
    }
    // multiplicative paddings: x·1 = x, x·(k·0+1) = x and friends
    for k in 1..=6u64 {
        out.push(Formula::Eq(
            Term::mul(Term::var("x"), Term::num(1)),
            Term::mul(Term::var("x"), Term::add(Term::mul(Term::num(k), Term::Zero), Term::num(1))),
        ));
    }
    // sums with themselves: ∃y(x + x + k = y)
    for k in 0..=14u64 {
        out.push(Formula::exists(
            "y",
            Formula::Eq(
                Term::add(Term::add(Term::var("x"), Term::var("x")), Term::num(k)),
                Term::var("y"),
            ),
        ));
    }
    // a couple of vacuous-hypothesis members (small numeral bounds)
    out.push(f("x < SSS0"));
    out.push(f("x = SSSSSS0"));
    out.truncate(50);
    assert_eq!(out.len(), 50);
    out
}

fn overspill_suite() -> ScenarioReport {
    let mut report = ScenarioReport::new("overspill-suite");
    let corpus = overspill_corpus();
    let mut pass = 0usize;
    let mut vacuous = 0usize;
    let mut failures = Vec::new();
    for a in &corpus {
        let rep = overspill_check(&a.clone(), &"x".to_string(), 64, EvalBound::new(160))
            .expect("corpus is positive and unary");
        match rep.outcome {
            OverspillOutcome::Pass => pass += 1,
            OverspillOutcome::HypothesisNotMet { .. } => vacuous += 1,
            other => failures.push(serde_json::json!({
                "formula": a.to_string(),
                "outcome": format!("{other:?}"),
            })),
        }
    }
    flag_assert(
        &mut report,
        "every corpus formula that holds on all of 0..64 also holds at ∞",
        "positive formulas with infinitely many witnesses spill over to the nonstandard point",
        failures.is_empty(),
        Some(serde_json::json!({
            "pass": pass,
            "hypothesis_not_met": vacuous,
            "failures": failures,
        })),
    );
    report
}
