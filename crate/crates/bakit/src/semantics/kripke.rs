//! Kripke frames with a strict, transitive, not-necessarily-reflexive
//! accessibility relation, and the forcing relation for formulas, sequents,
//! and rules.
//!
//! A block `∀x̄(A → B)` is forced at `k` iff for every strict successor
//! `k' ≻ k` and parameters `c̄ ∈ D(k')`, forcing of `A[x̄/c̄]` at `k'`
//! implies forcing of `B[x̄/c̄]` at `k'`. A reflexive node counts among its
//! own strict successors. Sequents and rules quantify over `k' ⪰ k`, the
//! reflexive closure.

use super::structure::{below, candidates, for_each_tuple, rel_lt};
use super::{Assignment, ElementId, EvalBound, EvalError, StructureSpec, Truth3};
use crate::syntax::{Formula, Sequent, Term};
use std::collections::BTreeSet;

pub type NodeId = usize;

#[derive(Clone, Debug)]
pub struct ModelNode {
    pub name: String,
    pub reflexive: bool,
    pub structure: StructureSpec,
}

#[derive(Clone, Debug, Default)]
pub struct KripkeModel {
    pub nodes: Vec<ModelNode>,
    /// Strict accessibility; must be transitive and irreflexive as stored
    /// (reflexivity lives in the per-node flag).
    pub succ: BTreeSet<(NodeId, NodeId)>,
}

impl KripkeModel {
    pub fn node_by_name(&self, name: &str) -> Option<NodeId> {
        self.nodes.iter().position(|n| n.name == name)
    }

    pub fn structure(&self, k: NodeId) -> &StructureSpec {
        &self.nodes[k].structure
    }

    /// Strict successors of `k`; includes `k` itself when `k` is reflexive.
    pub fn successors(&self, k: NodeId) -> Vec<NodeId> {
        let mut out: Vec<NodeId> = Vec::new();
        if self.nodes[k].reflexive {
            out.push(k);
        }
        for &(a, b) in &self.succ {
            if a == k {
                out.push(b);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `k` itself plus its strict successors (the `⪰` set).
    pub fn at_least(&self, k: NodeId) -> Vec<NodeId> {
        let mut out = self.successors(k);
        if !out.contains(&k) {
            out.push(k);
        }
        out.sort_unstable();
        out
    }
}

/// The one-node irreflexive model carrying ℕ ∪ {∞}.
pub fn make_kstar() -> KripkeModel {
    KripkeModel {
        nodes: vec![ModelNode {
            name: "star".to_string(),
            reflexive: false,
            structure: StructureSpec::NStar,
        }],
        succ: BTreeSet::new(),
    }
}

/// Adds a new root below every existing node, carrying the standard
/// naturals; `reflexive` selects between the two root constructions.
pub fn add_root(m: &KripkeModel, reflexive: bool) -> KripkeModel {
    let mut nodes = vec![ModelNode {
        name: unique_name(m, "root"),
        reflexive,
        structure: StructureSpec::std_n(),
    }];
    nodes.extend(m.nodes.iter().cloned());
    let mut succ: BTreeSet<(NodeId, NodeId)> =
        m.succ.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    for i in 1..nodes.len() {
        succ.insert((0, i));
    }
    KripkeModel { nodes, succ }
}

fn unique_name(m: &KripkeModel, base: &str) -> String {
    let mut name = base.to_string();
    let mut i = 1;
    while m.nodes.iter().any(|n| n.name == name) {
        name = format!("{base}{i}");
        i += 1;
    }
    name
}

/// Counterexample or witness data attached to a forcing verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub node: String,
    pub assignment: Assignment,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForceOutcome {
    pub verdict: Truth3,
    pub evidence: Option<Evidence>,
}

impl ForceOutcome {
    fn plain(verdict: Truth3) -> ForceOutcome {
        ForceOutcome {
            verdict,
            evidence: None,
        }
    }
}

/// Forcing of a formula at a node. Free variables not covered by `asg` are
/// universally closed over `k' ⪰ k` and parameters from `D(k')`.
pub fn force(
    m: &KripkeModel,
    k: NodeId,
    f: &Formula,
    asg: &Assignment,
    b: EvalBound,
) -> Result<Truth3, EvalError> {
    let unassigned: Vec<String> = f
        .free_vars()
        .into_iter()
        .filter(|v| !asg.contains_key(v))
        .collect();
    if unassigned.is_empty() {
        return force_at(m, k, f, asg, b);
    }
    let mut verdict = Truth3::True;
    for k2 in m.at_least(k) {
        let (range, exhaustive) = candidates(m.structure(k2), b);
        let mut failure: Option<EvalError> = None;
        let mut local = Truth3::True;
        for_each_tuple(&range, unassigned.len(), |tuple| {
            let mut inner = asg.clone();
            for (v, e) in unassigned.iter().zip(tuple) {
                inner.insert(v.clone(), *e);
            }
            match force_at(m, k2, f, &inner, b) {
                Ok(Truth3::True) => true,
                Ok(Truth3::False) => {
                    local = Truth3::False;
                    false
                }
                Ok(u) => {
                    local = local.and(u);
                    true
                }
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        let _ = exhaustive;
        verdict = verdict.and(local);
        if verdict == Truth3::False {
            return Ok(Truth3::False);
        }
    }
    Ok(verdict)
}

/// Forcing with all free variables assigned (parameters from `D(k)`).
pub fn force_at(
    m: &KripkeModel,
    k: NodeId,
    f: &Formula,
    asg: &Assignment,
    b: EvalBound,
) -> Result<Truth3, EvalError> {
    let s = m.structure(k);
    match f {
        Formula::Top => Ok(Truth3::True),
        Formula::Bot => Ok(Truth3::False),
        Formula::Eq(l, r) => {
            let (a, c) = (
                super::eval_term(s, l, asg)?,
                super::eval_term(s, r, asg)?,
            );
            Ok(if a == c { Truth3::True } else { Truth3::False })
        }
        Formula::Lt(l, r) => {
            let (a, c) = (
                super::eval_term(s, l, asg)?,
                super::eval_term(s, r, asg)?,
            );
            Ok(if rel_lt(s, a, c)? {
                Truth3::True
            } else {
                Truth3::False
            })
        }
        Formula::And(l, r) => Ok(force_at(m, k, l, asg, b)?.and(force_at(m, k, r, asg, b)?)),
        Formula::Or(l, r) => Ok(force_at(m, k, l, asg, b)?.or(force_at(m, k, r, asg, b)?)),
        Formula::Exists(x, body) => {
            // local witness search, with the Δ₀ pattern evaluated exactly
            if let Formula::And(guard, rest) = body.as_ref() {
                if let Formula::Lt(Term::Var(v), bound_term) = guard.as_ref() {
                    if v == x && !bound_term.vars().contains(x) {
                        let bound_val = super::eval_term(s, bound_term, asg)?;
                        if let Some(range) = below(s, bound_val) {
                            return exists_nodes(m, k, x, rest, asg, b, range, true);
                        }
                    }
                }
            }
            let (range, exhaustive) = candidates(s, b);
            exists_nodes(m, k, x, body, asg, b, range, exhaustive)
        }
        Formula::Block(vars, ante, cons) => {
            let mut verdict = Truth3::True;
            for k2 in m.successors(k) {
                let (range, exhaustive) = candidates(m.structure(k2), b);
                let mut failure: Option<EvalError> = None;
                let mut local_undecided = false;
                let mut refuted = false;
                for_each_tuple(&range, vars.len(), |tuple| {
                    let mut inner = asg.clone();
                    for (v, e) in vars.iter().zip(tuple) {
                        inner.insert(v.clone(), *e);
                    }
                    let step = (|| -> Result<Truth3, EvalError> {
                        let a = force_at(m, k2, ante, &inner, b)?;
                        if a == Truth3::False {
                            return Ok(Truth3::True);
                        }
                        let c = force_at(m, k2, cons, &inner, b)?;
                        Ok(match (a, c) {
                            (Truth3::True, Truth3::False) => Truth3::False,
                            (Truth3::True, Truth3::True) => Truth3::True,
                            _ => Truth3::Unknown(b.witness_bound),
                        })
                    })();
                    match step {
                        Ok(Truth3::False) => {
                            refuted = true;
                            false
                        }
                        Ok(Truth3::True) => true,
                        Ok(_) => {
                            local_undecided = true;
                            true
                        }
                        Err(e) => {
                            failure = Some(e);
                            false
                        }
                    }
                });
                if let Some(e) = failure {
                    return Err(e);
                }
                if refuted {
                    return Ok(Truth3::False);
                }
                let _ = exhaustive; // candidates are the test domain for blocks
                if local_undecided {
                    verdict = verdict.and(Truth3::Unknown(b.witness_bound));
                }
            }
            Ok(verdict)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn exists_nodes(
    m: &KripkeModel,
    k: NodeId,
    x: &str,
    body: &Formula,
    asg: &Assignment,
    b: EvalBound,
    range: Vec<ElementId>,
    exhaustive: bool,
) -> Result<Truth3, EvalError> {
    let mut all_false = true;
    for e in range {
        let mut inner = asg.clone();
        inner.insert(x.to_string(), e);
        match force_at(m, k, body, &inner, b)? {
            Truth3::True => return Ok(Truth3::True),
            Truth3::False => {}
            Truth3::Unknown(_) => all_false = false,
        }
    }
    if exhaustive && all_false {
        Ok(Truth3::False)
    } else {
        Ok(Truth3::Unknown(b.witness_bound))
    }
}

/// Forcing of a sequent at `k`: over all `k' ⪰ k` and all parameter tuples
/// for the sequent's free variables, forcing of the antecedent implies
/// forcing of the consequent. On `False`, the returned evidence names the
/// node and assignment of a counterexample.
pub fn force_sequent(
    m: &KripkeModel,
    k: NodeId,
    s: &Sequent,
    b: EvalBound,
) -> Result<ForceOutcome, EvalError> {
    let vars: Vec<String> = s.free_vars().into_iter().collect();
    let mut undecided = false;
    for k2 in m.at_least(k) {
        let (range, exhaustive) = candidates(m.structure(k2), b);
        let mut failure: Option<EvalError> = None;
        let mut counterexample: Option<Evidence> = None;
        for_each_tuple(&range, vars.len(), |tuple| {
            let mut inner: Assignment = Assignment::new();
            for (v, e) in vars.iter().zip(tuple) {
                inner.insert(v.clone(), *e);
            }
            let step = (|| -> Result<Truth3, EvalError> {
                let a = force_at(m, k2, &s.ante, &inner, b)?;
                if a == Truth3::False {
                    return Ok(Truth3::True);
                }
                let c = force_at(m, k2, &s.cons, &inner, b)?;
                Ok(match (a, c) {
                    (Truth3::True, Truth3::False) => Truth3::False,
                    (Truth3::True, Truth3::True) => Truth3::True,
                    _ => Truth3::Unknown(b.witness_bound),
                })
            })();
            match step {
                Ok(Truth3::False) => {
                    counterexample = Some(Evidence {
                        node: m.nodes[k2].name.clone(),
                        assignment: inner,
                    });
                    false
                }
                Ok(Truth3::True) => true,
                Ok(_) => {
                    undecided = true;
                    true
                }
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if let Some(ev) = counterexample {
            return Ok(ForceOutcome {
                verdict: Truth3::False,
                evidence: Some(ev),
            });
        }
        let _ = exhaustive;
    }
    Ok(ForceOutcome::plain(if undecided {
        Truth3::Unknown(b.witness_bound)
    } else {
        Truth3::True
    }))
}

/// Forcing of a rule: at every `k' ⪰ k`, if all premises are forced then
/// the conclusion is forced.
pub fn force_rule(
    m: &KripkeModel,
    k: NodeId,
    premises: &[Sequent],
    conclusion: &Sequent,
    b: EvalBound,
) -> Result<ForceOutcome, EvalError> {
    let mut undecided = false;
    for k2 in m.at_least(k) {
        let mut all_premises = Truth3::True;
        for p in premises {
            all_premises = all_premises.and(force_sequent(m, k2, p, b)?.verdict);
        }
        let c = force_sequent(m, k2, conclusion, b)?;
        match (all_premises, c.verdict) {
            (Truth3::True, Truth3::False) => {
                return Ok(ForceOutcome {
                    verdict: Truth3::False,
                    evidence: c.evidence,
                })
            }
            (Truth3::False, _) | (Truth3::True, Truth3::True) => {}
            _ => undecided = true,
        }
    }
    Ok(ForceOutcome::plain(if undecided {
        Truth3::Unknown(b.witness_bound)
    } else {
        Truth3::True
    }))
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the frame conditions: transitivity and strictness of the stored
/// relation, domain monotonicity along edges, and sampled atomic
/// persistence (operations and order agree upward on embedded elements).
pub fn validate_model(m: &KripkeModel, sample: u64) -> ValidationReport {
    let mut report = ValidationReport::default();
    for &(a, b) in &m.succ {
        if a == b {
            report
                .violations
                .push(format!("edge {a} -> {a} stored in the strict relation"));
        }
        if a >= m.nodes.len() || b >= m.nodes.len() {
            report.violations.push(format!("edge ({a},{b}) out of range"));
        }
    }
    for &(a, b) in &m.succ {
        for &(c, d) in &m.succ {
            if b == c && !m.succ.contains(&(a, d)) && a != d {
                report
                    .violations
                    .push(format!("transitivity violation: {a} -> {b} -> {d}"));
            }
        }
    }
    for &(a, b) in &m.succ {
        let sa = m.structure(a);
        let sb = m.structure(b);
        if !sa.domain_subset_of(sb) {
            report.violations.push(format!(
                "domain of node {a} not included in domain of node {b}"
            ));
            continue;
        }
        // sampled persistence: embedded elements compute and compare alike
        let max = match sa {
            StructureSpec::FiniteTable(t) => t.size,
            _ => sample,
        };
        'outer: for x in 0..max.min(sample) {
            for y in 0..max.min(sample) {
                let (ex, ey) = (ElementId::Nat(x), ElementId::Nat(y));
                let checks: [(&str, Result<bool, EvalError>); 4] = [
                    ("S", op_agree_succ(sa, sb, ex)),
                    ("+", op_agree_add(sa, sb, ex, ey)),
                    ("*", op_agree_mul(sa, sb, ex, ey)),
                    ("<", lt_persists(sa, sb, ex, ey)),
                ];
                for (what, r) in checks {
                    match r {
                        Ok(true) => {}
                        Ok(false) => {
                            report.violations.push(format!(
                                "atomic persistence violation on '{what}' at ({x},{y}) along {a} -> {b}"
                            ));
                            break 'outer;
                        }
                        Err(e) => {
                            report
                                .violations
                                .push(format!("evaluation error during validation: {e}"));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    report
}

fn op_agree_succ(
    sa: &StructureSpec,
    sb: &StructureSpec,
    x: ElementId,
) -> Result<bool, EvalError> {
    if !sa.contains(x) {
        return Ok(true);
    }
    let asg = super::assignment(&[("a", x)]);
    let t = Term::succ(Term::var("a"));
    let va = super::eval_term(sa, &t, &asg)?;
    let vb = super::eval_term(sb, &t, &asg)?;
    Ok(va == vb)
}

fn op_agree_add(
    sa: &StructureSpec,
    sb: &StructureSpec,
    x: ElementId,
    y: ElementId,
) -> Result<bool, EvalError> {
    if !sa.contains(x) || !sa.contains(y) {
        return Ok(true);
    }
    let asg = super::assignment(&[("a", x), ("b", y)]);
    let t = Term::add(Term::var("a"), Term::var("b"));
    Ok(super::eval_term(sa, &t, &asg)? == super::eval_term(sb, &t, &asg)?)
}

fn op_agree_mul(
    sa: &StructureSpec,
    sb: &StructureSpec,
    x: ElementId,
    y: ElementId,
) -> Result<bool, EvalError> {
    if !sa.contains(x) || !sa.contains(y) {
        return Ok(true);
    }
    let asg = super::assignment(&[("a", x), ("b", y)]);
    let t = Term::mul(Term::var("a"), Term::var("b"));
    Ok(super::eval_term(sa, &t, &asg)? == super::eval_term(sb, &t, &asg)?)
}

fn lt_persists(
    sa: &StructureSpec,
    sb: &StructureSpec,
    x: ElementId,
    y: ElementId,
) -> Result<bool, EvalError> {
    if !sa.contains(x) || !sa.contains(y) {
        return Ok(true);
    }
    // only truth must persist
    Ok(!rel_lt(sa, x, y)? || rel_lt(sb, x, y)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::assignment;
    use crate::syntax::{parse_formula, parse_sequent, Lang};

    fn f(s: &str) -> Formula {
        parse_formula(s, Lang::L).unwrap()
    }

    fn seq(s: &str) -> Sequent {
        parse_sequent(s, Lang::L).unwrap()
    }

    #[test]
    fn kstar_forces_blocks_vacuously() {
        let m = make_kstar();
        let got = force_at(
            &m,
            0,
            &f("![x](T -> F)"),
            &Assignment::new(),
            EvalBound::with_inf(4),
        )
        .unwrap();
        assert_eq!(got, Truth3::True);
    }

    #[test]
    fn kstar_cutoff_graph_points() {
        let m = make_kstar();
        let a = f("(x < y & z = 0) | x = y + z");
        let b = EvalBound::with_inf(4);
        use ElementId::*;
        let at = |x, y, z| {
            force_at(&m, 0, &a, &assignment(&[("x", x), ("y", y), ("z", z)]), b).unwrap()
        };
        assert_eq!(at(Inf, Inf, Nat(0)), Truth3::True); // ∞ < ∞ and 0 = 0
        assert_eq!(at(Inf, Inf, Nat(1)), Truth3::True); // ∞ = ∞ + 1
    }

    #[test]
    fn kstar_refutes_cancellation() {
        let m = make_kstar();
        let out = force_sequent(&m, 0, &seq("x + z = y + z => x = y"), EvalBound::with_inf(2))
            .unwrap();
        assert_eq!(out.verdict, Truth3::False);
        let ev = out.evidence.unwrap();
        assert_eq!(ev.node, "star");
        // any counterexample needs z = ∞ and x ≠ y
        assert_eq!(ev.assignment["z"], ElementId::Inf);
        assert_ne!(ev.assignment["x"], ev.assignment["y"]);
    }

    #[test]
    fn kstar_forces_succ_not_zero() {
        let m = make_kstar();
        let out = force_sequent(&m, 0, &seq("S x = 0 => F"), EvalBound::with_inf(8)).unwrap();
        assert_eq!(out.verdict, Truth3::True);
    }

    #[test]
    fn add_root_builds_two_node_model() {
        let m = add_root(&make_kstar(), false);
        assert_eq!(m.nodes.len(), 2);
        assert_eq!(m.nodes[0].name, "root");
        assert!(!m.nodes[0].reflexive);
        assert_eq!(m.succ.iter().collect::<Vec<_>>(), vec![&(0, 1)]);
        assert!(validate_model(&m, 32).ok());
    }

    #[test]
    fn add_root_to_empty_is_single_node() {
        let m = add_root(&KripkeModel::default(), true);
        assert_eq!(m.nodes.len(), 1);
        assert!(m.nodes[0].reflexive);
        assert!(m.succ.is_empty());
    }

    #[test]
    fn validate_flags_intransitive_chain() {
        let n = |name: &str| ModelNode {
            name: name.into(),
            reflexive: false,
            structure: StructureSpec::std_n(),
        };
        let m = KripkeModel {
            nodes: vec![n("a"), n("b"), n("c")],
            succ: [(0, 1), (1, 2)].into_iter().collect(),
        };
        let report = validate_model(&m, 8);
        assert!(!report.ok());
        assert!(report.violations[0].contains("transitivity"));
    }

    #[test]
    fn reflexive_root_sees_itself_in_block() {
        // at a reflexive ℕ node, ⊤ → ⊥ is not forced
        let m = add_root(&KripkeModel::default(), true);
        let got = force_at(&m, 0, &f("(T -> F)"), &Assignment::new(), EvalBound::new(2)).unwrap();
        assert_eq!(got, Truth3::False);
        // at an irreflexive singleton it is forced
        let m = add_root(&KripkeModel::default(), false);
        let got = force_at(&m, 0, &f("(T -> F)"), &Assignment::new(), EvalBound::new(2)).unwrap();
        assert_eq!(got, Truth3::True);
    }

    #[test]
    fn two_node_conditional_cancellation_fails() {
        // root ℕ below ℕ*: ⊤ ⇒ (∃x(x+y = x+z) → y = z) is refuted at the
        // root with (y,z) = (0,1), the implication failing at the top node
        // with witness x = ∞.
        let m = add_root(&make_kstar(), false);
        let s = seq("T => (E x. x + y = x + z -> y = z)");
        let out = force_sequent(&m, 0, &s, EvalBound::with_inf(2)).unwrap();
        assert_eq!(out.verdict, Truth3::False);
        let ev = out.evidence.unwrap();
        assert_eq!(ev.node, "root");
        let y = ev.assignment["y"];
        let z = ev.assignment["z"];
        assert_ne!(y, z);
    }
}
