//! Command-line interface: parsing and classification, the translation
//! passes, both proof checkers, cut elimination, Kripke forcing, and the
//! scenario runner.

use crate::ba::{check_proof, proof_from_json, TheoryPack};
use crate::lk::{check_lk, eliminate_cuts_outside, lk_from_json, lk_to_json, ClassPredicate};
use crate::scenarios::{run_all, run_scenario, scenario_names, ScenarioOutcome};
use crate::semantics::{
    assignment_from_pairs, force, force_sequent, model_from_json, EvalBound, Truth3,
};
use crate::syntax::{classify, parse_formula, parse_sequent, print_formula, Lang};
use crate::transforms;
use clap::{Args, Parser, Subcommand};
use std::fs;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "bakit",
    about = "workbench for a weak arithmetic: formula classes, proof checking, translations, and Kripke countermodels",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum LangArg {
    L,
    Lc,
}

impl From<LangArg> for Lang {
    fn from(l: LangArg) -> Lang {
        match l {
            LangArg::L => Lang::L,
            LangArg::Lc => Lang::Lc,
        }
    }
}

#[derive(Args)]
struct FormulaInput {
    /// File containing a formula (or sequent with --sequent); `-` for stdin.
    file: PathBuf,
    /// Term language.
    #[arg(long, value_enum, default_value = "l")]
    lang: LangArg,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula (or sequent) and echo its canonical form.
    Parse {
        #[command(flatten)]
        input: FormulaInput,
        /// Parse a sequent `A => B` instead of a formula.
        #[arg(long)]
        sequent: bool,
    },
    /// Print every syntactic class a formula belongs to.
    Classify {
        #[command(flatten)]
        input: FormulaInput,
    },
    /// Apply a translation pass to a formula.
    Transform {
        #[command(flatten)]
        input: FormulaInput,
        #[arg(long, value_parser = ["pos", "semipos", "openpos", "openneg", "bneg", "star", "totalize", "desugar"])]
        pass: String,
        /// Input variables for --pass totalize (comma separated).
        #[arg(long, default_value = "")]
        xs: String,
        /// Output variable for --pass totalize.
        #[arg(long, default_value = "y")]
        y: String,
        /// Witness variables for --pass totalize (comma separated).
        #[arg(long, default_value = "")]
        zs: String,
    },
    /// Check a proof file against a theory pack.
    CheckBa {
        file: PathBuf,
        #[arg(long, value_parser = ["ba", "ba-u", "ba-c", "eba"], default_value = "ba")]
        theory: String,
    },
    /// Check a sequent-calculus proof file.
    CheckLk {
        file: PathBuf,
        #[arg(long, value_parser = ["pos", "delta0", "open"], default_value = "pos")]
        class: String,
    },
    /// Eliminate cut formulas outside the class; prints the new proof.
    Cutelim {
        file: PathBuf,
        #[arg(long, value_parser = ["pos", "delta0", "open"], default_value = "pos")]
        class: String,
    },
    /// Evaluate forcing in a Kripke model read from JSON.
    Force {
        /// Model file.
        model: PathBuf,
        /// Node id to evaluate at.
        #[arg(long)]
        at: String,
        /// Formula text (mutually exclusive with --sequent-text).
        #[arg(long)]
        formula: Option<String>,
        /// Sequent text `A => B`.
        #[arg(long)]
        sequent_text: Option<String>,
        /// Witness bound for quantifier search.
        #[arg(long, default_value_t = 8)]
        bound: u64,
        /// Include the nonstandard point in witness searches.
        #[arg(long)]
        inf: bool,
        /// Variable assignment, e.g. `x=inf,y=3`.
        #[arg(long, default_value = "")]
        assign: String,
    },
    /// Run one scenario, or all with --all.
    Scenario {
        name: Option<String>,
        #[arg(long)]
        all: bool,
        /// Emit structured JSON reports.
        #[arg(long)]
        json: bool,
        /// Run the scenarios on parallel threads (they share no state).
        #[arg(long)]
        parallel: bool,
        /// List registered scenario names.
        #[arg(long)]
        list: bool,
    },
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn run_inner() -> Result<i32, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Parse { input, sequent } => {
            let text = read_input(&input.file)?;
            let lang = input.lang.into();
            if sequent {
                let s = parse_sequent(text.trim(), lang).map_err(|e| e.to_string())?;
                println!("{s}");
            } else {
                let f = parse_formula(text.trim(), lang).map_err(|e| e.to_string())?;
                println!("{f}");
            }
            Ok(0)
        }
        Command::Classify { input } => {
            let text = read_input(&input.file)?;
            let f = parse_formula(text.trim(), input.lang.into()).map_err(|e| e.to_string())?;
            for c in classify(&f) {
                println!("{c:?}");
            }
            Ok(0)
        }
        Command::Transform {
            input,
            pass,
            xs,
            y,
            zs,
        } => {
            let text = read_input(&input.file)?;
            let f = parse_formula(text.trim(), input.lang.into()).map_err(|e| e.to_string())?;
            let out = match pass.as_str() {
                "pos" => transforms::positive_part(&f),
                "semipos" => transforms::semi_positive_part(&f),
                "openpos" => transforms::open_positive(&f).map_err(|e| e.to_string())?,
                "openneg" => transforms::open_negation(&f).map_err(|e| e.to_string())?,
                "bneg" => transforms::bounded_negation(&f).map_err(|e| e.to_string())?,
                "star" => transforms::star_translate(&f),
                "desugar" => crate::syntax::desugar_order(&f),
                "totalize" => {
                    let split = |s: &str| -> Vec<String> {
                        s.split(',')
                            .map(str::trim)
                            .filter(|p| !p.is_empty())
                            .map(String::from)
                            .collect()
                    };
                    let input = transforms::TotalizerInput {
                        graph: f,
                        inputs: split(&xs),
                        output: y.clone(),
                        witnesses: split(&zs),
                    };
                    transforms::sigma1_totalizer(&input).map_err(|e| e.to_string())?
                }
                _ => unreachable!("clap-validated"),
            };
            println!("{}", print_formula(&out));
            Ok(0)
        }
        Command::CheckBa { file, theory } => {
            let pack = TheoryPack::by_name(&theory).expect("clap-validated");
            let text = read_input(&file)?;
            let proof = proof_from_json(&text, pack.lang).map_err(|e| e.to_string())?;
            match check_proof(&proof, &pack) {
                Ok(()) => {
                    println!("ok: {}", proof.conclusion);
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("invalid: {e}");
                    Ok(1)
                }
            }
        }
        Command::CheckLk { file, class } => {
            let cls = ClassPredicate::by_name(&class).expect("clap-validated");
            let text = read_input(&file)?;
            let proof = lk_from_json(&text).map_err(|e| e.to_string())?;
            match check_lk(&proof, cls) {
                Ok(()) => {
                    println!("ok: {}", proof.conclusion);
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("invalid: {e}");
                    Ok(1)
                }
            }
        }
        Command::Cutelim { file, class } => {
            let cls = ClassPredicate::by_name(&class).expect("clap-validated");
            let text = read_input(&file)?;
            let proof = lk_from_json(&text).map_err(|e| e.to_string())?;
            let out = eliminate_cuts_outside(&proof, cls).map_err(|e| e.to_string())?;
            println!("{}", lk_to_json(&out));
            Ok(0)
        }
        Command::Force {
            model,
            at,
            formula,
            sequent_text,
            bound,
            inf,
            assign,
        } => {
            let text = read_input(&model)?;
            let m = model_from_json(&text).map_err(|e| e.to_string())?;
            let node = m
                .node_by_name(&at)
                .ok_or_else(|| format!("unknown node '{at}'"))?;
            let b = EvalBound {
                witness_bound: bound,
                include_inf: inf,
            };
            let asg = assignment_from_pairs(&assign).map_err(|e| e.to_string())?;
            let verdict = match (&formula, &sequent_text) {
                (Some(ftext), None) => {
                    let f = parse_formula(ftext, Lang::L).map_err(|e| e.to_string())?;
                    force(&m, node, &f, &asg, b).map_err(|e| e.to_string())?
                }
                (None, Some(stext)) => {
                    let s = parse_sequent(stext, Lang::L).map_err(|e| e.to_string())?;
                    let out = force_sequent(&m, node, &s, b).map_err(|e| e.to_string())?;
                    if let Some(e) = out.evidence {
                        let pairs: Vec<String> = e
                            .assignment
                            .iter()
                            .map(|(k, v)| format!("{k}={v}"))
                            .collect();
                        println!("counterexample at node {}: {}", e.node, pairs.join(", "));
                    }
                    out.verdict
                }
                _ => return Err("give exactly one of --formula or --sequent-text".into()),
            };
            println!("{verdict}");
            Ok(match verdict {
                Truth3::True => 0,
                Truth3::False => 1,
                Truth3::Unknown(_) => 2,
            })
        }
        Command::Scenario {
            name,
            all,
            json,
            parallel,
            list,
        } => {
            if list {
                for n in scenario_names() {
                    println!("{n}");
                }
                return Ok(0);
            }
            let reports = if all && parallel {
                std::thread::scope(|scope| {
                    let handles: Vec<_> = scenario_names()
                        .into_iter()
                        .map(|n| scope.spawn(move || run_scenario(n).expect("registered")))
                        .collect();
                    handles.into_iter().map(|h| h.join().expect("join")).collect()
                })
            } else if all {
                run_all()
            } else {
                let name = name.ok_or("scenario name required (or --all)")?;
                vec![run_scenario(&name).map_err(|e| e.to_string())?]
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            } else {
                for r in &reports {
                    print!("{}", r.render_text());
                }
            }
            let mut code = 0;
            for r in &reports {
                match r.outcome() {
                    ScenarioOutcome::Pass => {}
                    ScenarioOutcome::Undecided => code = code.max(2),
                    ScenarioOutcome::Fail => code = code.max(1),
                }
            }
            Ok(code)
        }
    }
}

pub fn run() -> i32 {
    match run_inner() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}
