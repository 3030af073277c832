//! Proof file format: a node is
//! `{"conclusion": "<sequent>", "rule": "<id>", "bind": {...},
//!   "premises": [...]}` with formulas, terms, and variable lists in the
//! concrete grammar (lists comma-separated).

use super::{BaJustification, BaProof, BaRule, BindValue, Bindings, ProjSide};
use crate::syntax::{parse_formula, parse_sequent, parse_term, Lang};
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
pub enum ProofJsonError {
    #[error("invalid proof JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("unknown rule id '{0}'")]
    UnknownRule(String),
    #[error("in binding '{key}': {err}")]
    BadBinding {
        key: String,
        err: crate::syntax::ParseError,
    },
    #[error("unknown binding key '{0}' for rule '{1}'")]
    UnknownKey(String, String),
    #[error("parse error in conclusion: {0}")]
    BadConclusion(crate::syntax::ParseError),
}

#[derive(Clone, Copy)]
enum Kind {
    F,
    T,
    V,
    Vs,
    Ts,
    Side,
}

/// Binding keys and their kinds, per rule.
fn signature(rule: &BaRule) -> Vec<(&'static str, Kind)> {
    match rule {
        BaRule::BqcAx1 | BaRule::BqcAx2 | BaRule::BqcAx3 => vec![("A", Kind::F)],
        BaRule::BqcAx4 => vec![("A", Kind::F), ("B", Kind::F), ("C", Kind::F)],
        BaRule::BqcAx5 => vec![("A", Kind::F), ("x", Kind::V), ("B", Kind::F)],
        BaRule::BqcAx6 => vec![("t", Kind::T)],
        BaRule::BqcAx7 => vec![("x", Kind::V), ("t", Kind::T), ("A", Kind::F)],
        BaRule::BqcAx8 | BaRule::BqcAx9 | BaRule::BqcAx10 => vec![
            ("xs", Kind::Vs),
            ("A", Kind::F),
            ("B", Kind::F),
            ("C", Kind::F),
        ],
        BaRule::BqcAx11 => vec![
            ("xs", Kind::Vs),
            ("ts", Kind::Ts),
            ("A", Kind::F),
            ("B", Kind::F),
        ],
        BaRule::BqcAx12 => vec![
            ("xs", Kind::Vs),
            ("ys", Kind::Vs),
            ("A", Kind::F),
            ("B", Kind::F),
        ],
        BaRule::BqcAx13 => vec![
            ("ys", Kind::Vs),
            ("x", Kind::V),
            ("B", Kind::F),
            ("A", Kind::F),
        ],
        BaRule::R14 | BaRule::R15 | BaRule::R16 => vec![],
        BaRule::R15Rev | BaRule::R16Rev => vec![("side", Kind::Side)],
        BaRule::R17 => vec![("xs", Kind::Vs), ("ts", Kind::Ts)],
        BaRule::R18 | BaRule::R18Rev | BaRule::BaInd => vec![("x", Kind::V)],
        BaRule::R19 => vec![("xs", Kind::Vs)],
        BaRule::BaAx1 | BaRule::BaAx3 | BaRule::BaAx5 => vec![("t", Kind::T)],
        BaRule::BaAx2 | BaRule::BaAx4 | BaRule::BaAx6 | BaRule::MonusLe | BaRule::MonusGt => {
            vec![("s", Kind::T), ("t", Kind::T)]
        }
        BaRule::BaAx7 => vec![("ys", Kind::Vs), ("x", Kind::V), ("A", Kind::F)],
        BaRule::Theory(name) => match name.as_str() {
            "u" => vec![("s", Kind::T), ("t", Kind::T), ("r", Kind::T)],
            "lt-fwd" | "lt-bwd" => vec![("s", Kind::T), ("t", Kind::T), ("z", Kind::V)],
            _ => vec![],
        },
    }
}

fn bind_to_string(v: &BindValue) -> String {
    match v {
        BindValue::Formula(f) => f.to_string(),
        BindValue::Term(t) => t.to_string(),
        BindValue::Var(x) => x.clone(),
        BindValue::Vars(xs) => xs.join(","),
        BindValue::Terms(ts) => ts
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(", "),
        BindValue::Side(ProjSide::Left) => "l".into(),
        BindValue::Side(ProjSide::Right) => "r".into(),
    }
}

fn to_doc(p: &BaProof) -> ProofDoc {
    ProofDoc {
        conclusion: p.conclusion.to_string(),
        rule: p.just.rule.id(),
        bind: p
            .just
            .bind
            .iter()
            .map(|(k, v)| (k.clone(), bind_to_string(v)))
            .collect(),
        premises: p.premises.iter().map(to_doc).collect(),
    }
}

pub fn proof_to_json(p: &BaProof) -> String {
    serde_json::to_string_pretty(&to_doc(p)).expect("proof serialization")
}

fn parse_bind(
    key: &str,
    kind: Kind,
    raw: &str,
    lang: Lang,
) -> Result<BindValue, ProofJsonError> {
    let err = |e| ProofJsonError::BadBinding {
        key: key.to_string(),
        err: e,
    };
    Ok(match kind {
        Kind::F => BindValue::Formula(parse_formula(raw, lang).map_err(err)?),
        Kind::T => BindValue::Term(parse_term(raw, lang).map_err(err)?),
        Kind::V => BindValue::Var(raw.trim().to_string()),
        Kind::Vs => BindValue::Vars(
            raw.split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect(),
        ),
        Kind::Ts => {
            let mut out = Vec::new();
            for part in raw.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                out.push(parse_term(part, lang).map_err(err)?);
            }
            BindValue::Terms(out)
        }
        Kind::Side => BindValue::Side(if raw.trim() == "r" {
            ProjSide::Right
        } else {
            ProjSide::Left
        }),
    })
}

fn from_doc(doc: &ProofDoc, lang: Lang) -> Result<BaProof, ProofJsonError> {
    let rule = BaRule::from_id(&doc.rule)
        .ok_or_else(|| ProofJsonError::UnknownRule(doc.rule.clone()))?;
    let sig = signature(&rule);
    let mut bind = Bindings::new();
    for (key, raw) in &doc.bind {
        let kind = sig
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, kind)| *kind)
            .ok_or_else(|| ProofJsonError::UnknownKey(key.clone(), doc.rule.clone()))?;
        bind.insert(key.clone(), parse_bind(key, kind, raw, lang)?);
    }
    let conclusion = parse_sequent(&doc.conclusion, lang).map_err(ProofJsonError::BadConclusion)?;
    let premises = doc
        .premises
        .iter()
        .map(|d| from_doc(d, lang))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BaProof {
        conclusion,
        just: BaJustification { rule, bind },
        premises,
    })
}

pub fn proof_from_json(text: &str, lang: Lang) -> Result<BaProof, ProofJsonError> {
    let doc: ProofDoc = serde_json::from_str(text)?;
    from_doc(&doc, lang)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ba::builder;
    use crate::ba::{check_proof, TheoryPack};
    use crate::syntax::Term;

    #[test]
    fn round_trip() {
        let p = builder::lift_imp(builder::ba_ax2(Term::var("x"), Term::var("y")));
        let text = proof_to_json(&p);
        let back = proof_from_json(&text, Lang::L).unwrap();
        assert_eq!(back, p);
        check_proof(&back, &TheoryPack::ba()).unwrap();
    }

    #[test]
    fn unknown_rule_rejected() {
        let text = r#"{"conclusion": "T => T", "rule": "nope"}"#;
        assert!(matches!(
            proof_from_json(text, Lang::L),
            Err(ProofJsonError::UnknownRule(_))
        ));
    }
}
