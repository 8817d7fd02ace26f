use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use relfree::classify::{classify, Verdict};
use relfree::nf::{verify_pair, CheckOutcome};
use relfree::presentation::{PresentationError, RelativePresentation};
use relfree::report::{render_json, render_text, report_json};
use relfree::RelativeWord;
use serde_json::json;

const OK: u8 = 0;
const MALFORMED: u8 = 1;
const OUT_OF_SCOPE: u8 = 2;
const COUNTEREXAMPLE: u8 = 3;

#[derive(Parser)]
#[command(name = "relfree", version, about = "Free subgroups of one-relator relative presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a presentation file, or every *.pres file in a directory.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Include intermediate words in the report.
        #[arg(long)]
        trace_verbose: bool,
    },
    /// Search for relations between two words in a computable model.
    Verify {
        path: PathBuf,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long, default_value_t = 10)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force reference evaluations.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Complexity class of a cyclic sign sequence such as "++-".
    Complexity {
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
    },
    /// Proper-power test for a word such as "x1 x2 x1 x2".
    Power {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Smith invariants of a matrix such as "2 0; 0 3".
    Snf {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { MALFORMED } else { OK });
        }
    };
    ExitCode::from(match cli.command {
        Command::Analyze { path, json, trace_verbose } => {
            if path.is_dir() {
                analyze_dir(&path, trace_verbose)
            } else {
                analyze_file(&path, json, trace_verbose)
            }
        }
        Command::Verify { path, u, v, depth, json } => verify(&path, &u, &v, depth, json),
        Command::Oracle { which } => oracle(which),
    })
}

enum Loaded {
    Ok(RelativePresentation),
    Failed(u8, String),
}

fn load(path: &Path) -> Loaded {
    let text = match std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display())) {
        Ok(t) => t,
        Err(e) => return Loaded::Failed(MALFORMED, format!("{e:#}")),
    };
    match RelativePresentation::parse(&text) {
        Ok(p) => Loaded::Ok(p),
        Err(e) => Loaded::Failed(parse_exit(&e), format!("{}: {e}", path.display())),
    }
}

fn parse_exit(e: &PresentationError) -> u8 {
    if e.is_out_of_scope() {
        OUT_OF_SCOPE
    } else {
        MALFORMED
    }
}

fn verdict_exit(v: Verdict) -> u8 {
    if v == Verdict::OutOfScope {
        OUT_OF_SCOPE
    } else {
        OK
    }
}

fn analyze_file(path: &Path, as_json: bool, verbose: bool) -> u8 {
    let p = match load(path) {
        Loaded::Ok(p) => p,
        Loaded::Failed(code, msg) => {
            eprintln!("error: {msg}");
            return code;
        }
    };
    let c = classify(&p);
    if as_json {
        print!("{}", render_json(&report_json(&p, &c, verbose)));
    } else {
        print!("{}", render_text(&p, &c, verbose));
    }
    verdict_exit(c.verdict)
}

fn analyze_dir(dir: &Path, verbose: bool) -> u8 {
    let mut files: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(entries) => entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "pres"))
            .collect(),
        Err(e) => {
            eprintln!("error: reading {}: {e}", dir.display());
            return MALFORMED;
        }
    };
    files.sort();
    let results: Vec<(u8, String)> = files
        .par_iter()
        .map(|path| match load(path) {
            Loaded::Failed(code, msg) => (code, format!("{}: error: {msg}", path.display())),
            Loaded::Ok(p) => {
                let c = classify(&p);
                let out = path.with_extension("report.json");
                let body = render_json(&report_json(&p, &c, verbose));
                match std::fs::write(&out, body) {
                    Ok(()) => (verdict_exit(c.verdict), format!("{}: {}", path.display(), c.verdict)),
                    Err(e) => (MALFORMED, format!("{}: error: writing {}: {e}", path.display(), out.display())),
                }
            }
        })
        .collect();
    for (_, line) in &results {
        println!("{line}");
    }
    let codes: Vec<u8> = results.iter().map(|r| r.0).collect();
    if codes.contains(&MALFORMED) {
        MALFORMED
    } else if codes.contains(&OUT_OF_SCOPE) {
        OUT_OF_SCOPE
    } else {
        OK
    }
}

fn verify(path: &Path, u: &str, v: &str, depth: usize, as_json: bool) -> u8 {
    let p = match load(path) {
        Loaded::Ok(p) => p,
        Loaded::Failed(code, msg) => {
            eprintln!("error: {msg}");
            return code;
        }
    };
    let (wu, wv) = match (RelativeWord::parse(u, p.coeff, p.tpart), RelativeWord::parse(v, p.coeff, p.tpart)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return MALFORMED;
        }
    };
    let c = classify(&p);
    let Some(model) = c.model else {
        eprintln!("no computable model for this presentation (verdict {})", c.verdict);
        return OUT_OF_SCOPE;
    };
    let outcome = verify_pair(&model, &wu, &wv, depth);
    let (code, result, counterexample) = match &outcome {
        CheckOutcome::Pass { .. } => (OK, "pass", None),
        CheckOutcome::Counterexample(w) => (COUNTEREXAMPLE, "counterexample", Some(w.to_string())),
    };
    if as_json {
        let value = json!({
            "u": wu.to_string(),
            "v": wv.to_string(),
            "depth": depth,
            "model": model.kind(),
            "result": result,
            "counterexample": counterexample,
        });
        print!("{}", render_json(&value));
    } else {
        match counterexample {
            None => println!("pass: no relation of length <= {depth} in the {} model", model.kind()),
            Some(w) => println!("counterexample: {w}"),
        }
    }
    code
}

fn parse_oracle_word(text: &str) -> Option<Vec<i32>> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let (sym, exp) = match token.split_once('^') {
            Some((s, e)) => (s, e.parse::<i32>().ok()?),
            None => (token, 1),
        };
        let gen: i32 = match sym {
            "a" => 1,
            "b" => 2,
            s => s.strip_prefix('x')?.parse().ok().filter(|&i| i >= 1)?,
        };
        for _ in 0..exp.unsigned_abs() {
            let x = gen * exp.signum();
            if letters.last() == Some(&-x) {
                letters.pop();
            } else {
                letters.push(x);
            }
        }
    }
    Some(letters)
}

fn oracle(which: OracleCommand) -> u8 {
    match which {
        OracleCommand::Complexity { seq } => {
            match relfree_oracle::parse_signs(&seq).and_then(|s| relfree_oracle::complexity_by_pairs(&s)) {
                Some(c) => {
                    println!("{c}");
                    OK
                }
                None => {
                    eprintln!("error: expected a nonempty sequence of + and -");
                    MALFORMED
                }
            }
        }
        OracleCommand::Power { word } => match parse_oracle_word(&word) {
            Some(letters) if !letters.is_empty() => {
                match relfree_oracle::proper_power_brute(&letters) {
                    Some((root, k)) => {
                        let root: Vec<String> =
                            root.iter().map(|&x| if x > 0 { format!("x{x}") } else { format!("x{}^-1", -x) }).collect();
                        println!("root {} k={k}", root.join(" "));
                    }
                    None => println!("not a proper power"),
                }
                OK
            }
            _ => {
                eprintln!("error: expected a nonempty word over x1, x2, ...");
                MALFORMED
            }
        },
        OracleCommand::Snf { matrix } => match relfree_oracle::parse_matrix(&matrix) {
            Some(m) => {
                let d: Vec<String> = relfree_oracle::smith_by_minors(&m).iter().map(|x| x.to_string()).collect();
                println!("{}", d.join(" "));
                OK
            }
            None => {
                eprintln!("error: expected rows of integers separated by `;`");
                MALFORMED
            }
        },
    }
}
