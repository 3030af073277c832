//! JSON interchange for Kripke models:
//! `{"nodes": [{"id", "reflexive", "structure": {"kind", ...}}],
//!   "edges": [["a","b"], ...]}` with structure kinds `"nat"`,
//! `"nat-star"`, and `"table"`.

use super::{FiniteTables, KripkeModel, ModelNode, StructureSpec};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Serialize, Deserialize)]
struct ModelDoc {
    nodes: Vec<NodeDoc>,
    edges: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
struct NodeDoc {
    id: String,
    reflexive: bool,
    structure: StructureDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum StructureDoc {
    #[serde(rename = "nat")]
    Nat {
        #[serde(default)]
        monus: bool,
    },
    #[serde(rename = "nat-star")]
    NatStar,
    #[serde(rename = "table")]
    Table {
        size: u64,
        succ: Vec<u64>,
        add: Vec<Vec<u64>>,
        mul: Vec<Vec<u64>>,
        lt: Vec<Vec<bool>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        monus: Option<Vec<Vec<u64>>>,
    },
}

#[derive(Debug, Error)]
pub enum ModelJsonError {
    #[error("invalid model JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("duplicate node id '{0}'")]
    DuplicateNode(String),
    #[error("edge references unknown node '{0}'")]
    UnknownNode(String),
    #[error("table for node '{0}' has inconsistent dimensions")]
    BadTable(String),
}

pub fn model_to_json(m: &KripkeModel) -> String {
    let doc = ModelDoc {
        nodes: m
            .nodes
            .iter()
            .map(|n| NodeDoc {
                id: n.name.clone(),
                reflexive: n.reflexive,
                structure: match &n.structure {
                    StructureSpec::StdN { monus_enabled } => StructureDoc::Nat {
                        monus: *monus_enabled,
                    },
                    StructureSpec::NStar => StructureDoc::NatStar,
                    StructureSpec::FiniteTable(t) => StructureDoc::Table {
                        size: t.size,
                        succ: t.succ.clone(),
                        add: t.add.clone(),
                        mul: t.mul.clone(),
                        lt: t.lt.clone(),
                        monus: t.monus.clone(),
                    },
                },
            })
            .collect(),
        edges: m
            .succ
            .iter()
            .map(|&(a, b)| (m.nodes[a].name.clone(), m.nodes[b].name.clone()))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("model serialization")
}

pub fn model_from_json(text: &str) -> Result<KripkeModel, ModelJsonError> {
    let doc: ModelDoc = serde_json::from_str(text)?;
    let mut model = KripkeModel::default();
    for n in &doc.nodes {
        if model.node_by_name(&n.id).is_some() {
            return Err(ModelJsonError::DuplicateNode(n.id.clone()));
        }
        let structure = match &n.structure {
            StructureDoc::Nat { monus } => StructureSpec::StdN {
                monus_enabled: *monus,
            },
            StructureDoc::NatStar => StructureSpec::NStar,
            StructureDoc::Table {
                size,
                succ,
                add,
                mul,
                lt,
                monus,
            } => {
                let n_ok = |v: &Vec<u64>| v.len() as u64 == *size && v.iter().all(|&x| x < *size);
                let sq = |m: &Vec<Vec<u64>>| m.len() as u64 == *size && m.iter().all(n_ok);
                let ok = n_ok(succ)
                    && sq(add)
                    && sq(mul)
                    && lt.len() as u64 == *size
                    && lt.iter().all(|row| row.len() as u64 == *size)
                    && monus.as_ref().map(sq).unwrap_or(true);
                if !ok {
                    return Err(ModelJsonError::BadTable(n.id.clone()));
                }
                StructureSpec::FiniteTable(FiniteTables {
                    size: *size,
                    succ: succ.clone(),
                    add: add.clone(),
                    mul: mul.clone(),
                    lt: lt.clone(),
                    monus: monus.clone(),
                })
            }
        };
        model.nodes.push(ModelNode {
            name: n.id.clone(),
            reflexive: n.reflexive,
            structure,
        });
    }
    for (a, b) in &doc.edges {
        let ia = model
            .node_by_name(a)
            .ok_or_else(|| ModelJsonError::UnknownNode(a.clone()))?;
        let ib = model
            .node_by_name(b)
            .ok_or_else(|| ModelJsonError::UnknownNode(b.clone()))?;
        model.succ.insert((ia, ib));
    }
    Ok(model)
}
