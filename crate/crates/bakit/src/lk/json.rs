//! Proof files for the sequent calculus: same shape as the block-calculus
//! format, with list-sequent conclusions.

use super::{
    parse_lk_formula, parse_lk_sequent, LkFormula, LkProof, LkRule, LkSequent,
};
use crate::syntax::{parse_term, Lang, Term};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Serialize, Deserialize)]
struct ProofDoc {
    conclusion: String,
    rule: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    bind: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    premises: Vec<ProofDoc>,
}

#[derive(Debug, Error)]
pub enum LkJsonError {
    #[error("invalid proof JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("unknown rule id '{0}'")]
    UnknownRule(String),
    #[error("missing binding '{0}' for rule '{1}'")]
    MissingBinding(String, String),
    #[error("in binding '{key}': {err}")]
    BadBinding {
        key: String,
        err: crate::syntax::ParseError,
    },
    #[error("binding 'i' must be a number")]
    BadIndex,
    #[error("parse error in conclusion: {0}")]
    BadConclusion(crate::syntax::ParseError),
}

fn rule_bindings(rule: &LkRule) -> BTreeMap<String, String> {
    let mut b = BTreeMap::new();
    let mut f = |k: &str, v: String| {
        b.insert(k.to_string(), v);
    };
    match rule {
        LkRule::Ax { a } | LkRule::WkL { a } | LkRule::WkR { a } => f("A", a.to_string()),
        LkRule::ExL { i } | LkRule::ExR { i } => f("i", i.to_string()),
        LkRule::AndL1 { other } | LkRule::OrR1 { other } => f("B", other.to_string()),
        LkRule::AndL2 { other } | LkRule::OrR2 { other } => f("A", other.to_string()),
        LkRule::ExistsL { x, y, body } | LkRule::ForallR { x, y, body } => {
            f("x", x.clone());
            f("y", y.clone());
            f("A", body.to_string());
        }
        LkRule::ExistsR { x, t, body } | LkRule::ForallL { x, t, body } => {
            f("x", x.clone());
            f("t", t.to_string());
            f("A", body.to_string());
        }
        LkRule::EqRefl { s } | LkRule::SPos { s } | LkRule::AddZero { s } | LkRule::MulZero { s } => {
            f("s", s.to_string())
        }
        LkRule::SFnc { s, t }
        | LkRule::SInj { s, t }
        | LkRule::AddSucc { s, t }
        | LkRule::MulSucc { s, t } => {
            f("s", s.to_string());
            f("t", t.to_string());
        }
        LkRule::EqEqv { s, t, s2, t2 }
        | LkRule::AddFnc { s, t, s2, t2 }
        | LkRule::MulFnc { s, t, s2, t2 }
        | LkRule::LtRel { s, t, s2, t2 } => {
            f("s", s.to_string());
            f("t", t.to_string());
            f("s'", s2.to_string());
            f("t'", t2.to_string());
        }
        LkRule::Ind { x, t, a } => {
            f("x", x.clone());
            f("t", t.to_string());
            f("A", a.to_string());
        }
        _ => {}
    }
    b
}

fn to_doc(p: &LkProof) -> ProofDoc {
    ProofDoc {
        conclusion: p.conclusion.to_string(),
        rule: p.rule.id().to_string(),
        bind: rule_bindings(&p.rule),
        premises: p.premises.iter().map(to_doc).collect(),
    }
}

pub fn lk_to_json(p: &LkProof) -> String {
    serde_json::to_string_pretty(&to_doc(p)).expect("proof serialization")
}

struct Binds<'a> {
    rule: &'a str,
    map: &'a BTreeMap<String, String>,
}

impl<'a> Binds<'a> {
    fn raw(&self, key: &str) -> Result<&'a str, LkJsonError> {
        self.map
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| LkJsonError::MissingBinding(key.into(), self.rule.into()))
    }

    fn formula(&self, key: &str) -> Result<LkFormula, LkJsonError> {
        parse_lk_formula(self.raw(key)?).map_err(|err| LkJsonError::BadBinding {
            key: key.into(),
            err,
        })
    }

    fn term(&self, key: &str) -> Result<Term, LkJsonError> {
        parse_term(self.raw(key)?, Lang::Lc).map_err(|err| LkJsonError::BadBinding {
            key: key.into(),
            err,
        })
    }

    fn var(&self, key: &str) -> Result<String, LkJsonError> {
        Ok(self.raw(key)?.trim().to_string())
    }

    fn index(&self, key: &str) -> Result<usize, LkJsonError> {
        self.raw(key)?
            .trim()
            .parse()
            .map_err(|_| LkJsonError::BadIndex)
    }
}

fn rule_from(doc: &ProofDoc) -> Result<LkRule, LkJsonError> {
    let b = Binds {
        rule: &doc.rule,
        map: &doc.bind,
    };
    Ok(match doc.rule.as_str() {
        "ax" => LkRule::Ax { a: b.formula("A")? },
        "ex-l" => LkRule::ExL { i: b.index("i")? },
        "ex-r" => LkRule::ExR { i: b.index("i")? },
        "wk-l" => LkRule::WkL { a: b.formula("A")? },
        "wk-r" => LkRule::WkR { a: b.formula("A")? },
        "ctr-l" => LkRule::CtrL,
        "ctr-r" => LkRule::CtrR,
        "cut" => LkRule::Cut,
        "top-r" => LkRule::TopR,
        "bot-l" => LkRule::BotL,
        "neg-l" => LkRule::NegL,
        "neg-r" => LkRule::NegR,
        "and-l1" => LkRule::AndL1 {
            other: b.formula("B")?,
        },
        "and-l2" => LkRule::AndL2 {
            other: b.formula("A")?,
        },
        "and-r" => LkRule::AndR,
        "or-l" => LkRule::OrL,
        "or-r1" => LkRule::OrR1 {
            other: b.formula("B")?,
        },
        "or-r2" => LkRule::OrR2 {
            other: b.formula("A")?,
        },
        "imp-l" => LkRule::ImpL,
        "imp-r" => LkRule::ImpR,
        "exists-l" => LkRule::ExistsL {
            x: b.var("x")?,
            y: b.var("y")?,
            body: b.formula("A")?,
        },
        "exists-r" => LkRule::ExistsR {
            x: b.var("x")?,
            t: b.term("t")?,
            body: b.formula("A")?,
        },
        "forall-l" => LkRule::ForallL {
            x: b.var("x")?,
            t: b.term("t")?,
            body: b.formula("A")?,
        },
        "forall-r" => LkRule::ForallR {
            x: b.var("x")?,
            y: b.var("y")?,
            body: b.formula("A")?,
        },
        "eq-ref" => LkRule::EqRefl { s: b.term("s")? },
        "eq-eqv" => LkRule::EqEqv {
            s: b.term("s")?,
            t: b.term("t")?,
            s2: b.term("s'")?,
            t2: b.term("t'")?,
        },
        "s-fnc" => LkRule::SFnc {
            s: b.term("s")?,
            t: b.term("t")?,
        },
        "add-fnc" => LkRule::AddFnc {
            s: b.term("s")?,
            t: b.term("t")?,
            s2: b.term("s'")?,
            t2: b.term("t'")?,
        },
        "mul-fnc" => LkRule::MulFnc {
            s: b.term("s")?,
            t: b.term("t")?,
            s2: b.term("s'")?,
            t2: b.term("t'")?,
        },
        "lt-rel" => LkRule::LtRel {
            s: b.term("s")?,
            t: b.term("t")?,
            s2: b.term("s'")?,
            t2: b.term("t'")?,
        },
        "s-pos" => LkRule::SPos { s: b.term("s")? },
        "s-inj" => LkRule::SInj {
            s: b.term("s")?,
            t: b.term("t")?,
        },
        "add-0" => LkRule::AddZero { s: b.term("s")? },
        "add-s" => LkRule::AddSucc {
            s: b.term("s")?,
            t: b.term("t")?,
        },
        "mul-0" => LkRule::MulZero { s: b.term("s")? },
        "mul-s" => LkRule::MulSucc {
            s: b.term("s")?,
            t: b.term("t")?,
        },
        "ind" => LkRule::Ind {
            x: b.var("x")?,
            t: b.term("t")?,
            a: b.formula("A")?,
        },
        other => return Err(LkJsonError::UnknownRule(other.to_string())),
    })
}

fn from_doc(doc: &ProofDoc) -> Result<LkProof, LkJsonError> {
    let conclusion: LkSequent =
        parse_lk_sequent(&doc.conclusion).map_err(LkJsonError::BadConclusion)?;
    let rule = rule_from(doc)?;
    let premises = doc
        .premises
        .iter()
        .map(from_doc)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LkProof {
        conclusion,
        rule,
        premises,
    })
}

pub fn lk_from_json(text: &str) -> Result<LkProof, LkJsonError> {
    let doc: ProofDoc = serde_json::from_str(text)?;
    from_doc(&doc)
}
