//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line with its elapsed time. Tolerances are exact (no approximations)
//! and the stated time budgets are asserted.

mod common;

use bakit::ba::{
    check_proof, positivize_proof, semi_positivize_proof, synth_semipos_to_pos, TheoryPack,
};
use bakit::lk::{check_lk, eliminate_cuts_outside, ClassPredicate};
use bakit::scenarios::fixtures::{ba_fixtures, lk_fixtures};
use bakit::scenarios::{run_scenario, ScenarioOutcome};
use bakit::semantics::*;
use bakit::syntax::{Formula, Sequent, Term};
use bakit::transforms::{positive_part, semi_positive_part};
use common::proofgen::{random_ba_proof, random_lk_proof};
use common::rng;
use std::time::Instant;

struct Criterion {
    id: u32,
    what: &'static str,
    budget_ms: u128,
}

impl Criterion {
    fn run(self, body: impl FnOnce() -> Result<(), String>) {
        let start = Instant::now();
        let result = body();
        let ms = start.elapsed().as_millis();
        match &result {
            Ok(()) => println!("criterion {}: PASS — {} ({} ms)", self.id, self.what, ms),
            Err(e) => println!(
                "criterion {}: FAIL — {} ({} ms): {}",
                self.id, self.what, ms, e
            ),
        }
        if let Err(e) = result {
            panic!("criterion {} failed: {e}", self.id);
        }
        assert!(
            ms <= self.budget_ms,
            "criterion {} exceeded its {} ms budget ({} ms)",
            self.id,
            self.budget_ms,
            ms
        );
    }
}

fn expect(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

#[test]
fn criterion_1_nonstandard_law_table() {
    Criterion {
        id: 1,
        what: "all defining clauses of the nonstandard structure hold for n ≤ 64",
        budget_ms: 1_000,
    }
    .run(|| {
        let s = StructureSpec::NStar;
        let inf = ElementId::Inf;
        let term = |t: &Term, asg: &Assignment| eval_term(&s, t, asg).unwrap();
        let v = Term::var;
        let asg1 = assignment(&[("a", inf)]);
        // S∞ = ∞, ∞+∞ = ∞, ∞·∞ = ∞, 0·∞ = ∞·0 = 0, ∞ < ∞
        expect(term(&Term::succ(v("a")), &asg1) == inf, "S∞ = ∞")?;
        expect(term(&Term::add(v("a"), v("a")), &asg1) == inf, "∞+∞ = ∞")?;
        expect(term(&Term::mul(v("a"), v("a")), &asg1) == inf, "∞·∞ = ∞")?;
        expect(
            term(&Term::mul(Term::Zero, v("a")), &asg1) == ElementId::Nat(0),
            "0·∞ = 0",
        )?;
        expect(
            term(&Term::mul(v("a"), Term::Zero), &asg1) == ElementId::Nat(0),
            "∞·0 = 0",
        )?;
        expect(
            sat(&s, &Formula::Lt(v("a"), v("a")), &asg1, EvalBound::new(0)).unwrap()
                == Truth3::True,
            "∞ < ∞",
        )?;
        for n in 0..=64u64 {
            let asg = assignment(&[("a", inf), ("n", ElementId::Nat(n))]);
            expect(
                sat(&s, &Formula::Lt(v("n"), v("a")), &asg, EvalBound::new(0)).unwrap()
                    == Truth3::True,
                "n < ∞",
            )?;
            expect(
                sat(&s, &Formula::Lt(v("a"), v("n")), &asg, EvalBound::new(0)).unwrap()
                    == Truth3::False,
                "∞ ≮ n",
            )?;
            expect(term(&Term::add(v("n"), v("a")), &asg) == inf, "n+∞ = ∞")?;
            expect(term(&Term::add(v("a"), v("n")), &asg) == inf, "∞+n = ∞")?;
            // (n+1)·∞ = ∞·(n+1) = ∞
            let n1 = Term::succ(v("n"));
            expect(
                term(&Term::mul(n1.clone(), v("a")), &asg) == inf,
                "(n+1)·∞ = ∞",
            )?;
            expect(
                term(&Term::mul(v("a"), n1), &asg) == inf,
                "∞·(n+1) = ∞",
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_2_cutoff_uniqueness_scenario() {
    Criterion {
        id: 2,
        what: "cut-off graph forced at (∞,∞,0) and (S∞,∞,1), uniqueness refuted",
        budget_ms: 1_000,
    }
    .run(|| {
        let report = run_scenario("cutoff-uniqueness-failure").unwrap();
        expect(
            report.outcome() == ScenarioOutcome::Pass,
            &report.render_text(),
        )
    });
}

#[test]
fn criterion_3_remaining_countermodel_scenarios() {
    for name in [
        "even-undecidable",
        "prime-divisor-failure",
        "cancellation-U-failure",
        "two-node-cancellation-conditional",
    ] {
        Criterion {
            id: 3,
            what: name,
            budget_ms: 1_000,
        }
        .run(|| {
            let report = run_scenario(name).unwrap();
            expect(
                report.outcome() == ScenarioOutcome::Pass,
                &report.render_text(),
            )
        });
    }
}

fn proof_corpus() -> Vec<bakit::ba::BaProof> {
    let bundled: Vec<_> = ba_fixtures()
        .into_iter()
        .filter(|(_, theory, _)| *theory == "ba")
        .map(|(_, _, p)| p)
        .collect();
    assert!(ba_fixtures().len() >= 20, "need at least 20 bundled fixtures");
    let mut r = rng(901);
    let mut out = bundled;
    for _ in 0..200 {
        out.push(random_ba_proof(&mut r, 20));
    }
    out
}

#[test]
fn criterion_4_positivization_suite() {
    Criterion {
        id: 4,
        what: "positivization over bundled fixtures and 200 random proofs",
        budget_ms: 10_000,
    }
    .run(|| {
        let pack = TheoryPack::ba();
        let forbidden = [
            "bqc-ax8", "bqc-ax9", "bqc-ax10", "bqc-ax11", "bqc-ax12", "bqc-ax13", "bqc-r19",
            "ba-ax7",
        ];
        for (i, p) in proof_corpus().iter().enumerate() {
            check_proof(p, &pack).map_err(|e| format!("#{i} input: {e}"))?;
            let q = positivize_proof(p, &pack).map_err(|e| format!("#{i}: {e}"))?;
            check_proof(&q, &pack).map_err(|e| format!("#{i} output: {e}"))?;
            expect(
                q.conclusion
                    == Sequent::new(
                        positive_part(&p.conclusion.ante),
                        positive_part(&p.conclusion.cons),
                    ),
                &format!("#{i}: wrong conclusion"),
            )?;
            let used = q.rules_used();
            for f in forbidden {
                expect(!used.contains(f), &format!("#{i}: uses {f}"))?;
            }
            expect(q.height() <= p.height(), &format!("#{i}: height grew"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_5_semi_positivization_suite() {
    Criterion {
        id: 5,
        what: "semi-positivization and the uniqueness-conditional pipeline",
        budget_ms: 10_000,
    }
    .run(|| {
        let pack = TheoryPack::ba();
        let mut r = rng(902);
        for (i, p) in proof_corpus().iter().enumerate() {
            let q = semi_positivize_proof(p, &pack).map_err(|e| format!("#{i}: {e}"))?;
            check_proof(&q, &pack).map_err(|e| format!("#{i} output: {e}"))?;
            expect(
                q.conclusion
                    == Sequent::new(
                        semi_positive_part(&p.conclusion.ante),
                        semi_positive_part(&p.conclusion.cons),
                    ),
                &format!("#{i}: wrong conclusion"),
            )?;
        }
        for i in 0..100 {
            let a = common::random_formula(&mut r, 3);
            let q = synth_semipos_to_pos(&a);
            check_proof(&q, &pack).map_err(|e| format!("synth #{i}: {e}"))?;
        }
        // the conditional-uniqueness pipeline: semi-positivizing each
        // bundled uniqueness conditional yields a checked conditional for
        // the positive part
        for (name, theory, p) in ba_fixtures() {
            if !name.starts_with("cutoff-uniqueness") || theory != "ba" {
                continue;
            }
            let q = semi_positivize_proof(&p, &pack).map_err(|e| format!("{name}: {e}"))?;
            check_proof(&q, &pack).map_err(|e| format!("{name}: {e}"))?;
            let Formula::Block(vars, ante, cons) = &q.conclusion.cons else {
                return Err(format!("{name}: not a conditional"));
            };
            expect(
                vars.is_empty()
                    && bakit::syntax::is_positive(ante)
                    && bakit::syntax::is_positive(cons),
                &format!("{name}: conditional not on positive parts"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_6_cut_elimination_suite() {
    Criterion {
        id: 6,
        what: "class-restricted cut elimination over fixtures and 200 random proofs",
        budget_ms: 30_000,
    }
    .run(|| {
        common::with_big_stack(|| {
            let cls = ClassPredicate::PositiveExistential;
            let fixtures = lk_fixtures();
            expect(fixtures.len() >= 10, "need at least 10 fixtures")?;
            let mut corpus: Vec<_> = fixtures.into_iter().map(|(_, p)| p).collect();
            let mut r = rng(903);
            for _ in 0..200 {
                corpus.push(random_lk_proof(&mut r, 25));
            }
            for (i, p) in corpus.iter().enumerate() {
                check_lk(p, cls).map_err(|e| format!("#{i} input: {e}"))?;
                let out =
                    eliminate_cuts_outside(p, cls).map_err(|e| format!("#{i}: {e}"))?;
                check_lk(&out, cls).map_err(|e| format!("#{i} output: {e}"))?;
                expect(
                    out.conclusion == p.conclusion,
                    &format!("#{i}: end-sequent changed"),
                )?;
                for c in out.cut_formulas() {
                    expect(cls.accepts(&c), &format!("#{i}: offending cut '{c}'"))?;
                }
            }
            Ok(())
        })
    });
}

#[test]
fn criterion_7_translation_semantic_suites() {
    Criterion {
        id: 7,
        what: "open positivization, bounded negation, star translation, totalizer tables",
        budget_ms: 60_000,
    }
    .run(|| {
        use bakit::transforms::*;
        use common::{naive_eval, random_delta0, random_lc_sentence, random_qf, Env};
        use rand::Rng;
        // open positivization pair on 500 quantifier-free formulas,
        // variables valued in 0..=20
        let mut r = rng(904);
        let mut envs = Vec::new();
        for _ in 0..10 {
            let mut env = Env::new();
            for v in ["x", "y", "z"] {
                env.insert(v.to_string(), r.gen_range(0..=20));
            }
            envs.push(env);
        }
        for i in 0..500 {
            let a = random_qf(&mut r, 3, &["x", "y", "z"]);
            let pos = open_positive(&a).map_err(|e| e.to_string())?;
            let neg = open_negation(&a).map_err(|e| e.to_string())?;
            for env in &envs {
                let truth = naive_eval(&a, &mut env.clone(), 0);
                expect(
                    naive_eval(&pos, &mut env.clone(), 0) == truth,
                    &format!("open positivization #{i}"),
                )?;
                expect(
                    naive_eval(&neg, &mut env.clone(), 0) == !truth,
                    &format!("open negation #{i}"),
                )?;
            }
        }
        // bounded negation on 500 bounded sentences
        for i in 0..500 {
            let a = random_delta0(&mut r, 3, 8, &[]);
            let neg = bounded_negation(&a).map_err(|e| e.to_string())?;
            expect(
                naive_eval(&neg, &mut Env::new(), 8) != naive_eval(&a, &mut Env::new(), 8),
                &format!("bounded negation #{i}: {a}"),
            )?;
        }
        // star translation on 300 extended-language sentences
        for i in 0..300 {
            let a = random_lc_sentence(&mut r, 10);
            let out = star_translate(&a);
            expect(!out.uses_monus(), &format!("star #{i}: residue"))?;
            expect(
                naive_eval(&out, &mut Env::new(), 64) == naive_eval(&a, &mut Env::new(), 64),
                &format!("star #{i}: truth changed for {a}"),
            )?;
        }
        // totalizer graph equivalence for cut-off and identity, args ≤ 8
        let table = |graph: &str, inputs: &[&str], f: &dyn Fn(&[u64]) -> u64| -> Result<(), String> {
            let input = TotalizerInput {
                graph: bakit::syntax::parse_formula(graph, bakit::syntax::Lang::L).unwrap(),
                inputs: inputs.iter().map(|s| s.to_string()).collect(),
                output: "y".into(),
                witnesses: vec!["z".into()],
            };
            let d = sigma1_totalizer(&input).map_err(|e| e.to_string())?;
            let mut args = vec![0u64; inputs.len()];
            let total = 9u64.pow(inputs.len() as u32);
            for code in 0..total {
                let mut c = code;
                for slot in args.iter_mut() {
                    *slot = c % 9;
                    c /= 9;
                }
                for y in 0..=8u64 {
                    let mut env = Env::new();
                    for (name, value) in inputs.iter().zip(&args) {
                        env.insert(name.to_string(), *value);
                    }
                    env.insert("y".into(), y);
                    let got = naive_eval(&d, &mut env, 8);
                    expect(
                        got == (f(&args) == y),
                        &format!("totalizer at {args:?}, y={y}"),
                    )?;
                }
            }
            Ok(())
        };
        table(
            "((x1 < x2 & y = 0) | x1 = x2 + y) & z = z",
            &["x1", "x2"],
            &|a| a[0].saturating_sub(a[1]),
        )?;
        table("y = x & z = z", &["x"], &|a| a[0])?;
        Ok(())
    });
}

#[test]
fn criterion_8_forcing_engine_properties() {
    Criterion {
        id: 8,
        what: "locality, persistence, positive-part equivalence, three-valued soundness",
        budget_ms: 60_000,
    }
    .run(|| {
        use common::{naive_eval, random_delta0, random_formula, random_positive, Env};
        let kstar = make_kstar();
        let two = add_root(&kstar, false);
        let models = vec![kstar.clone(), two.clone(), add_root(&two, true)];
        for m in &models {
            expect(validate_model(m, 32).ok(), "model validation")?;
        }
        let b = EvalBound::with_inf(6);
        let mut r = rng(905);
        // locality of positive formulas
        for i in 0..500 {
            let a = random_positive(&mut r, 3, &["x"]);
            for m in &models {
                for k in 0..m.nodes.len() {
                    for e in [ElementId::Nat(0), ElementId::Nat(3), ElementId::Inf] {
                        if !m.structure(k).contains(e) {
                            continue;
                        }
                        let asg = assignment(&[("x", e)]);
                        expect(
                            force_at(m, k, &a, &asg, b).unwrap()
                                == sat(m.structure(k), &a, &asg, b).unwrap(),
                            &format!("locality #{i}"),
                        )?;
                    }
                }
            }
        }
        // persistence on validated models
        for i in 0..300 {
            let a = random_formula(&mut r, 3);
            if !a.free_vars().is_empty() {
                continue;
            }
            for m in &models {
                for k in 0..m.nodes.len() {
                    if force_at(m, k, &a, &Assignment::new(), b).unwrap() == Truth3::True {
                        for &(from, to) in &m.succ {
                            if from == k {
                                expect(
                                    force_at(m, to, &a, &Assignment::new(), b).unwrap()
                                        == Truth3::True,
                                    &format!("persistence #{i}"),
                                )?;
                            }
                        }
                    }
                }
            }
        }
        // positive-part equivalence at the one-node nonstandard model
        for i in 0..500 {
            let a = random_formula(&mut r, 3);
            if !a.free_vars().is_empty() {
                continue;
            }
            expect(
                force_at(&kstar, 0, &a, &Assignment::new(), b).unwrap()
                    == force_at(&kstar, 0, &positive_part(&a), &Assignment::new(), b)
                        .unwrap(),
                &format!("positive-part equivalence #{i}"),
            )?;
        }
        // three-valued soundness against the naive enumerator
        let n = StructureSpec::std_n();
        for i in 0..1000 {
            let a = random_delta0(&mut r, 3, 8, &[]);
            let got = sat(&n, &a, &Assignment::new(), EvalBound::new(8)).unwrap();
            expect(got.is_decided(), &format!("soundness #{i}: undecided"))?;
            expect(
                got.is_true() == naive_eval(&a, &mut Env::new(), 8),
                &format!("soundness #{i}: disagreement on {a}"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_9_overspill_suite() {
    Criterion {
        id: 9,
        what: "all 50 corpus formulas with full 0..64 agreement hold at the nonstandard point",
        budget_ms: 10_000,
    }
    .run(|| {
        let report = run_scenario("overspill-suite").unwrap();
        expect(
            report.outcome() == ScenarioOutcome::Pass,
            &report.render_text(),
        )
    });
}
