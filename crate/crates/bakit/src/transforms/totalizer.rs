//! The Σ₁ totalizer: given a positive quantifier-free graph formula
//! `A(x̄, y, z̄)` whose existential closure `∃z̄ A` defines a total function
//! of `x̄`, builds a Σ₁ formula `D(x̄, y)` that defines the same function in
//! ℕ without appealing to cancellation.
//!
//! With `t ≡ y + z₁ + ⋯ + zₘ`:
//!
//! * `U(x) ≡ ∀uvw(u+v+w ≤ x ∧ u+w = v+w → u = v)` (cancellation below `x`),
//! * `B ≡ U(t) ∧ A ∧ ∀y'z̄'(t' ≤ t ∧ A(x̄,y',z̄') → y = y')`,
//! * `C ≡ ¬U(t) ∧ y = 0 ∧ ∀y'z̄'(t' ≤ t → ¬B(x̄,y',z̄'))`,
//! * `D(x̄, y) ≡ ∃z̄(B ∨ C)`.
//!
//! Universal quantifiers are emitted as nested single-variable bounded
//! blocks (each variable below `St`), and `s ≤ t` as `s < St`, so that `B`
//! and `C` are syntactically Δ₀ and `D` is syntactically Σ₁. The nested
//! form is equivalent to the flat block: every component of a sum bounded
//! by `x` is itself at most `x`.

use super::le_strict;
use crate::syntax::{is_positive, is_quantifier_free, Formula, FreshVars, Ident, Substitution, Term};
use std::collections::BTreeSet;
use thiserror::Error;

/// Input to the totalizer: the graph formula and its variable roles.
#[derive(Clone, Debug)]
pub struct TotalizerInput {
    /// Positive quantifier-free graph `A(x̄, y, z̄)`.
    pub graph: Formula,
    /// Input variables `x̄`.
    pub inputs: Vec<Ident>,
    /// Output variable `y`.
    pub output: Ident,
    /// Witness variables `z̄`; must be nonempty (pad with `z = z` if needed).
    pub witnesses: Vec<Ident>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TotalizerError {
    #[error("graph formula must be positive")]
    NotPositive,
    #[error("graph formula must be quantifier-free")]
    NotQuantifierFree,
    #[error("witness variable list must be nonempty")]
    EmptyWitnesses,
    #[error("variable '{0}' occurs in more than one role")]
    OverlappingRoles(Ident),
    #[error("free variable '{0}' of the graph is not covered by the variable lists")]
    UncoveredVariable(Ident),
}

fn sum(vars: impl IntoIterator<Item = Term>) -> Term {
    let mut it = vars.into_iter();
    let first = it.next().expect("nonempty sum");
    it.fold(first, Term::add)
}

/// Nested bounded universal: `∀v₁(v₁ < bound → ... ∀vₙ(vₙ < bound → body))`.
fn bounded_forall(vars: &[Ident], bound: &Term, body: Formula) -> Formula {
    vars.iter().rev().fold(body, |acc, v| {
        Formula::Block(
            vec![v.clone()],
            Box::new(Formula::Lt(Term::Var(v.clone()), bound.clone())),
            Box::new(acc),
        )
    })
}

/// `U(x)`: cancellation holds for sums bounded by `x`.
fn cancellation_below(x: &Term, fresh: &mut FreshVars) -> Formula {
    let u = fresh.fresh("u");
    let v = fresh.fresh("v");
    let w = fresh.fresh("w");
    let tu = || Term::Var(u.clone());
    let tv = || Term::Var(v.clone());
    let tw = || Term::Var(w.clone());
    let body = Formula::imp(
        Formula::and(
            le_strict(Term::add(Term::add(tu(), tv()), tw()), x.clone()),
            Formula::Eq(Term::add(tu(), tw()), Term::add(tv(), tw())),
        ),
        Formula::Eq(tu(), tv()),
    );
    let bound = Term::succ(x.clone());
    bounded_forall(&[u, v, w], &bound, body)
}

struct Build {
    graph: Formula,
    inputs: Vec<Ident>,
    output: Ident,
    witnesses: Vec<Ident>,
}

impl Build {
    fn graph_at(&self, y: &Ident, zs: &[Ident]) -> Formula {
        let mut sub = Substitution::default();
        sub.0.insert(self.output.clone(), Term::Var(y.clone()));
        for (z, z2) in self.witnesses.iter().zip(zs) {
            sub.0.insert(z.clone(), Term::Var(z2.clone()));
        }
        // the graph is quantifier-free, so no capture is possible
        crate::syntax::substitute(&self.graph, &sub).expect("quantifier-free graph")
    }

    fn t_of(&self, y: &Ident, zs: &[Ident]) -> Term {
        sum(std::iter::once(Term::Var(y.clone())).chain(zs.iter().map(|z| Term::Var(z.clone()))))
    }

    /// `B(x̄, y, z̄)` for the given output/witness names.
    fn b_at(&self, y: &Ident, zs: &[Ident], fresh: &mut FreshVars) -> Formula {
        let t = self.t_of(y, zs);
        let u_of_t = cancellation_below(&t, fresh);
        let a = self.graph_at(y, zs);
        // minimality: ∀y'z̄'(t' ≤ t ∧ A(x̄,y',z̄') → y = y')
        let yp = fresh.fresh(&format!("{}'", self.output));
        let zps: Vec<Ident> = self
            .witnesses
            .iter()
            .map(|z| fresh.fresh(&format!("{z}'")))
            .collect();
        let tp = self.t_of(&yp, &zps);
        let ap = self.graph_at(&yp, &zps);
        let inner = Formula::imp(
            Formula::and(le_strict(tp, t.clone()), ap),
            Formula::Eq(Term::Var(y.clone()), Term::Var(yp.clone())),
        );
        let bound = Term::succ(t);
        let mut quantified = vec![yp];
        quantified.extend(zps);
        let minimality = bounded_forall(&quantified, &bound, inner);
        Formula::and(Formula::and(u_of_t, a), minimality)
    }

    /// `C(x̄, y, z̄)`.
    fn c_at(&self, y: &Ident, zs: &[Ident], fresh: &mut FreshVars) -> Formula {
        let t = self.t_of(y, zs);
        let not_u = Formula::not(cancellation_below(&t, fresh));
        let y_zero = Formula::Eq(Term::Var(y.clone()), Term::Zero);
        let yp = fresh.fresh(&format!("{}'", self.output));
        let zps: Vec<Ident> = self
            .witnesses
            .iter()
            .map(|z| fresh.fresh(&format!("{z}'")))
            .collect();
        let tp = self.t_of(&yp, &zps);
        let b_inner = self.b_at(&yp, &zps, fresh);
        let inner = Formula::imp(le_strict(tp, t.clone()), Formula::not(b_inner));
        let bound = Term::succ(t);
        let mut quantified = vec![yp];
        quantified.extend(zps);
        let no_b_below = bounded_forall(&quantified, &bound, inner);
        Formula::and(Formula::and(not_u, y_zero), no_b_below)
    }
}

/// Builds `D(x̄, y) = ∃z̄(B ∨ C)`.
pub fn sigma1_totalizer(input: &TotalizerInput) -> Result<Formula, TotalizerError> {
    if !is_quantifier_free(&input.graph) {
        return Err(TotalizerError::NotQuantifierFree);
    }
    if !is_positive(&input.graph) {
        return Err(TotalizerError::NotPositive);
    }
    if input.witnesses.is_empty() {
        return Err(TotalizerError::EmptyWitnesses);
    }
    let mut seen: BTreeSet<&Ident> = BTreeSet::new();
    for v in input
        .inputs
        .iter()
        .chain(std::iter::once(&input.output))
        .chain(input.witnesses.iter())
    {
        if !seen.insert(v) {
            return Err(TotalizerError::OverlappingRoles(v.clone()));
        }
    }
    for v in input.graph.free_vars() {
        if !seen.contains(&v) {
            return Err(TotalizerError::UncoveredVariable(v));
        }
    }

    let mut fresh = FreshVars::reserving(input.graph.all_names());
    fresh.reserve(input.inputs.iter().cloned());
    fresh.reserve([input.output.clone()]);
    fresh.reserve(input.witnesses.iter().cloned());

    let build = Build {
        graph: input.graph.clone(),
        inputs: input.inputs.clone(),
        output: input.output.clone(),
        witnesses: input.witnesses.clone(),
    };
    let _ = &build.inputs; // inputs stay free in D
    let b = build.b_at(&input.output, &input.witnesses, &mut fresh);
    let c = build.c_at(&input.output, &input.witnesses, &mut fresh);
    let mut d = Formula::or(b, c);
    for z in input.witnesses.iter().rev() {
        d = Formula::Exists(z.clone(), Box::new(d));
    }
    Ok(d)
}
