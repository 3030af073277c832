//! The committed proof and model files under `fixtures/` must stay in
//! sync with the builders that define them. Run the ignored test to
//! regenerate after changing a fixture.

use bakit::ba::{proof_from_json, proof_to_json, TheoryPack};
use bakit::lk::{lk_from_json, lk_to_json};
use bakit::scenarios::fixtures::{ba_fixtures, lk_fixtures};
use bakit::semantics::{add_root, make_kstar, model_from_json, model_to_json};
use std::fs;
use std::path::PathBuf;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn models() -> Vec<(&'static str, bakit::semantics::KripkeModel)> {
    vec![
        ("kstar", make_kstar()),
        ("root-under-star", add_root(&make_kstar(), false)),
        ("reflexive-root", add_root(&bakit::semantics::KripkeModel::default(), true)),
    ]
}

#[test]
#[ignore = "writes the fixture files; run explicitly after changing builders"]
fn regenerate_fixture_files() {
    let dir = fixture_dir();
    for (name, theory, proof) in ba_fixtures() {
        let path = dir.join("ba").join(format!("{name}.json"));
        let doc = serde_json::json!({
            "theory": theory,
            "proof": serde_json::from_str::<serde_json::Value>(&proof_to_json(&proof)).unwrap(),
        });
        fs::write(&path, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    }
    for (name, proof) in lk_fixtures() {
        let path = dir.join("lk").join(format!("{name}.json"));
        fs::write(&path, lk_to_json(&proof)).unwrap();
    }
    for (name, model) in models() {
        let path = dir.join("models").join(format!("{name}.json"));
        fs::write(&path, model_to_json(&model)).unwrap();
    }
}

#[test]
fn committed_ba_fixtures_match_builders_and_check() {
    let dir = fixture_dir().join("ba");
    for (name, theory, proof) in ba_fixtures() {
        let path = dir.join(format!("{name}.json"));
        let text = fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{}: {e} (regenerate_fixture_files?)", path.display()));
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["theory"].as_str().unwrap(), theory, "{name}");
        let pack = TheoryPack::by_name(theory).unwrap();
        let loaded =
            proof_from_json(&doc["proof"].to_string(), pack.lang).unwrap_or_else(|e| {
                panic!("{name}: {e}")
            });
        assert_eq!(loaded, proof, "{name} drifted from its builder");
        bakit::ba::check_proof(&loaded, &pack).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn committed_lk_fixtures_match_builders_and_check() {
    let dir = fixture_dir().join("lk");
    for (name, proof) in lk_fixtures() {
        let path = dir.join(format!("{name}.json"));
        let text = fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{}: {e} (regenerate_fixture_files?)", path.display()));
        let loaded = lk_from_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(loaded, proof, "{name} drifted from its builder");
        bakit::lk::check_lk(&loaded, bakit::lk::ClassPredicate::PositiveExistential)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn committed_models_parse() {
    let dir = fixture_dir().join("models");
    for (name, model) in models() {
        let path = dir.join(format!("{name}.json"));
        let text = fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{}: {e} (regenerate_fixture_files?)", path.display()));
        let loaded = model_from_json(&text).unwrap();
        assert_eq!(loaded.nodes.len(), model.nodes.len(), "{name}");
        assert_eq!(loaded.succ, model.succ, "{name}");
    }
}
