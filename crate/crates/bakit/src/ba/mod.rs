//! Proof trees and checker for the sequent-style calculus without Modus
//! Ponens (axioms 1–13 and rules 14–19), the arithmetic axioms and
//! induction on top of it, and the theory packs that extend it.

pub mod builder;
mod check;
mod json;
mod positivize;

pub use check::{check_proof, CheckErrorKind, ProofError};
pub use json::{proof_from_json, proof_to_json, ProofJsonError};
pub use positivize::{
    positivize_proof, semi_positivize_proof, synth_pos_upper, synth_semipos_to_pos,
    PositivizeError,
};

use crate::syntax::{Formula, Ident, Lang, Sequent, Term};
use std::fmt;

/// Rule and axiom identifiers. Double-line (reversible) rules are split
/// into a forward and an explicit reversed id so that every inference in a
/// proof file names the direction it uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaRule {
    BqcAx1,
    BqcAx2,
    BqcAx3,
    BqcAx4,
    BqcAx5,
    BqcAx6,
    BqcAx7,
    BqcAx8,
    BqcAx9,
    BqcAx10,
    BqcAx11,
    BqcAx12,
    BqcAx13,
    R14,
    R15,
    R15Rev,
    R16,
    R16Rev,
    R17,
    R18,
    R18Rev,
    R19,
    BaAx1,
    BaAx2,
    BaAx3,
    BaAx4,
    BaAx5,
    BaAx6,
    BaAx7,
    BaInd,
    MonusLe,
    MonusGt,
    Theory(String),
}

impl BaRule {
    pub fn id(&self) -> String {
        match self {
            BaRule::BqcAx1 => "bqc-ax1".into(),
            BaRule::BqcAx2 => "bqc-ax2".into(),
            BaRule::BqcAx3 => "bqc-ax3".into(),
            BaRule::BqcAx4 => "bqc-ax4".into(),
            BaRule::BqcAx5 => "bqc-ax5".into(),
            BaRule::BqcAx6 => "bqc-ax6".into(),
            BaRule::BqcAx7 => "bqc-ax7".into(),
            BaRule::BqcAx8 => "bqc-ax8".into(),
            BaRule::BqcAx9 => "bqc-ax9".into(),
            BaRule::BqcAx10 => "bqc-ax10".into(),
            BaRule::BqcAx11 => "bqc-ax11".into(),
            BaRule::BqcAx12 => "bqc-ax12".into(),
            BaRule::BqcAx13 => "bqc-ax13".into(),
            BaRule::R14 => "bqc-r14".into(),
            BaRule::R15 => "bqc-r15".into(),
            BaRule::R15Rev => "bqc-r15rev".into(),
            BaRule::R16 => "bqc-r16".into(),
            BaRule::R16Rev => "bqc-r16rev".into(),
            BaRule::R17 => "bqc-r17".into(),
            BaRule::R18 => "bqc-r18".into(),
            BaRule::R18Rev => "bqc-r18rev".into(),
            BaRule::R19 => "bqc-r19".into(),
            BaRule::BaAx1 => "ba-ax1".into(),
            BaRule::BaAx2 => "ba-ax2".into(),
            BaRule::BaAx3 => "ba-ax3".into(),
            BaRule::BaAx4 => "ba-ax4".into(),
            BaRule::BaAx5 => "ba-ax5".into(),
            BaRule::BaAx6 => "ba-ax6".into(),
            BaRule::BaAx7 => "ba-ax7".into(),
            BaRule::BaInd => "ba-ind".into(),
            BaRule::MonusLe => "bac-monus-le".into(),
            BaRule::MonusGt => "bac-monus-gt".into(),
            BaRule::Theory(name) => format!("theory:{name}"),
        }
    }

    pub fn from_id(id: &str) -> Option<BaRule> {
        Some(match id {
            "bqc-ax1" => BaRule::BqcAx1,
            "bqc-ax2" => BaRule::BqcAx2,
            "bqc-ax3" => BaRule::BqcAx3,
            "bqc-ax4" => BaRule::BqcAx4,
            "bqc-ax5" => BaRule::BqcAx5,
            "bqc-ax6" => BaRule::BqcAx6,
            "bqc-ax7" => BaRule::BqcAx7,
            "bqc-ax8" => BaRule::BqcAx8,
            "bqc-ax9" => BaRule::BqcAx9,
            "bqc-ax10" => BaRule::BqcAx10,
            "bqc-ax11" => BaRule::BqcAx11,
            "bqc-ax12" => BaRule::BqcAx12,
            "bqc-ax13" => BaRule::BqcAx13,
            "bqc-r14" => BaRule::R14,
            "bqc-r15" => BaRule::R15,
            "bqc-r15rev" => BaRule::R15Rev,
            "bqc-r16" => BaRule::R16,
            "bqc-r16rev" => BaRule::R16Rev,
            "bqc-r17" => BaRule::R17,
            "bqc-r18" => BaRule::R18,
            "bqc-r18rev" => BaRule::R18Rev,
            "bqc-r19" => BaRule::R19,
            "ba-ax1" => BaRule::BaAx1,
            "ba-ax2" => BaRule::BaAx2,
            "ba-ax3" => BaRule::BaAx3,
            "ba-ax4" => BaRule::BaAx4,
            "ba-ax5" => BaRule::BaAx5,
            "ba-ax6" => BaRule::BaAx6,
            "ba-ax7" => BaRule::BaAx7,
            "ba-ind" => BaRule::BaInd,
            "bac-monus-le" => BaRule::MonusLe,
            "bac-monus-gt" => BaRule::MonusGt,
            _ => {
                let name = id.strip_prefix("theory:")?;
                return Some(BaRule::Theory(name.to_string()));
            }
        })
    }

    /// Number of premises this rule takes.
    pub fn arity(&self) -> usize {
        match self {
            BaRule::R14 | BaRule::R15 | BaRule::R16 => 2,
            BaRule::R15Rev
            | BaRule::R16Rev
            | BaRule::R17
            | BaRule::R18
            | BaRule::R18Rev
            | BaRule::R19
            | BaRule::BaInd => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for BaRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Which conjunct / disjunct a reversed rule extracts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjSide {
    Left,
    Right,
}

/// One metavariable binding of a schema instantiation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BindValue {
    Formula(Formula),
    Term(Term),
    Var(Ident),
    Vars(Vec<Ident>),
    Terms(Vec<Term>),
    Side(ProjSide),
}

pub type Bindings = std::collections::BTreeMap<String, BindValue>;

/// A rule id together with its explicit schema instantiation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaJustification {
    pub rule: BaRule,
    pub bind: Bindings,
}

/// A justification-annotated proof tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaProof {
    pub conclusion: Sequent,
    pub just: BaJustification,
    pub premises: Vec<BaProof>,
}

impl BaProof {
    pub fn height(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(BaProof::height)
            .max()
            .unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(BaProof::node_count).sum::<usize>()
    }

    /// All rule ids used anywhere in the tree.
    pub fn rules_used(&self) -> std::collections::BTreeSet<String> {
        let mut out = std::collections::BTreeSet::new();
        self.collect_rules(&mut out);
        out
    }

    fn collect_rules(&self, out: &mut std::collections::BTreeSet<String>) {
        out.insert(self.just.rule.id());
        for p in &self.premises {
            p.collect_rules(out);
        }
    }

    /// Visits every formula appearing in any conclusion.
    pub fn for_each_formula(&self, f: &mut impl FnMut(&Formula)) {
        f(&self.conclusion.ante);
        f(&self.conclusion.cons);
        for p in &self.premises {
            p.for_each_formula(f);
        }
    }
}

/// Named theory the checker validates against: which axiom schemas beyond
/// the base calculus are available, and in which language.
#[derive(Clone, Debug)]
pub struct TheoryPack {
    pub name: String,
    pub lang: Lang,
    /// `x ≤ y ⇒ x∸y = 0` and `y ≤ x ⇒ Sx∸y = S(x∸y)` available.
    pub monus_axioms: bool,
    /// `⊤→⊥ ⇒ ⊥` available.
    pub eba_axiom: bool,
    /// cancellation `x+z = y+z ⇒ x = y` available.
    pub cancellation_axiom: bool,
    /// extra named axioms, matched exactly against node conclusions.
    pub extra: Vec<(String, Sequent)>,
    /// reject `<` atoms in the atomic-equality axiom (axiom 7).
    pub strict_atomic: bool,
}

impl TheoryPack {
    pub fn ba() -> TheoryPack {
        TheoryPack {
            name: "ba".into(),
            lang: Lang::L,
            monus_axioms: false,
            eba_axiom: false,
            cancellation_axiom: false,
            extra: Vec::new(),
            strict_atomic: false,
        }
    }

    pub fn ba_u() -> TheoryPack {
        TheoryPack {
            name: "ba-u".into(),
            cancellation_axiom: true,
            ..TheoryPack::ba()
        }
    }

    pub fn ba_c() -> TheoryPack {
        TheoryPack {
            name: "ba-c".into(),
            lang: Lang::Lc,
            monus_axioms: true,
            ..TheoryPack::ba()
        }
    }

    pub fn eba() -> TheoryPack {
        TheoryPack {
            name: "eba".into(),
            eba_axiom: true,
            ..TheoryPack::ba()
        }
    }

    pub fn with_extra(mut self, name: &str, axiom: Sequent) -> TheoryPack {
        self.extra.push((name.to_string(), axiom));
        self
    }

    pub fn by_name(name: &str) -> Option<TheoryPack> {
        match name {
            "ba" => Some(TheoryPack::ba()),
            "ba-u" => Some(TheoryPack::ba_u()),
            "ba-c" => Some(TheoryPack::ba_c()),
            "eba" => Some(TheoryPack::eba()),
            _ => None,
        }
    }

    /// Every enabled extra-axiom sequent is positive (taking the pack as a
    /// set Γ of sequents, Γ = Γ^∃). Required by the positivization passes.
    pub fn extras_positive(&self) -> bool {
        use crate::syntax::is_positive;
        if self.eba_axiom {
            return false;
        }
        // cancellation and the monus axioms are positive sequents, as are
        // the order-defining axioms available in every pack
        self.extra
            .iter()
            .all(|(_, s)| is_positive(&s.ante) && is_positive(&s.cons))
    }
}
