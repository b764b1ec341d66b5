//! Command-line front end.  Every subcommand is a pure function of its
//! arguments; exit code 0 means success or "property holds", 1 means a
//! checked property failed, 2 means the input was invalid.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::json;

use crate::classify;
use crate::compose::{check_hypotheses, compose, verify_main_identity, WPlacement};
use crate::decomp::{decompose, hamel_goulden, sylvester_check, DecompKind};
use crate::diagram::{Cell, SkewDiagram};
use crate::schur::{skew_schur, SchurPoly};
use crate::suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

#[derive(Parser)]
#[command(name = "skewkit", version, about = "exact skew Schur function toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Nw,
    Se,
    Jt,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand the skew Schur function of a diagram in the Schur basis.
    Expand {
        #[arg(long)]
        diagram: String,
    },
    /// Test two diagrams for skew-equivalence.
    Equal {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Compose two diagrams along an identified subdiagram.
    Compose {
        #[arg(long)]
        d: String,
        #[arg(long)]
        e: String,
        /// Anchor spec: `empty` or `{"sw":[[r,c],...],"ne":[[r,c],...]}`.
        #[arg(long)]
        w: String,
        /// Also check the determinantal identity for this composition.
        #[arg(long)]
        verify: bool,
    },
    /// Report the structural hypotheses of a placement.
    Hypotheses {
        #[arg(long)]
        e: String,
        #[arg(long)]
        w: String,
    },
    /// Build a Hamel-Goulden matrix and compare its determinant with the
    /// direct expansion.
    Hg {
        #[arg(long)]
        diagram: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        show_matrix: bool,
    },
    /// Check Sylvester's determinantal identity on random integer matrices.
    Sylvester {
        #[arg(long, default_value_t = 5)]
        size: usize,
        #[arg(long, default_value_t = 25)]
        trials: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Classify connected diagrams by skew-equivalence.
    Classes {
        #[arg(long)]
        max_cells: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, default_value = "paper-examples")]
        suite: String,
    },
    /// Render a diagram as ASCII art, optionally marking a placement.
    Render {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        w: Option<String>,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnchorSpec {
    Word(String),
    Cells { sw: Vec<Cell>, ne: Vec<Cell> },
}

fn parse_diagram(s: &str) -> Result<SkewDiagram, String> {
    serde_json::from_str(s).map_err(|e| format!("bad diagram {s:?}: {e}"))
}

fn parse_placement(e: &SkewDiagram, spec: &str) -> Result<WPlacement, String> {
    let anchor: AnchorSpec =
        serde_json::from_str(spec).map_err(|e| format!("bad anchor spec {spec:?}: {e}"))?;
    match anchor {
        AnchorSpec::Word(word) if word == "empty" => {
            WPlacement::empty(e).map_err(|e| e.to_string())
        }
        AnchorSpec::Word(word) => Err(format!("unknown anchor word {word:?}")),
        AnchorSpec::Cells { sw, ne } => {
            let sw: BTreeSet<Cell> = sw.into_iter().collect();
            let ne: BTreeSet<Cell> = ne.into_iter().collect();
            WPlacement::new(e, sw, ne).map_err(|e| e.to_string())
        }
    }
}

/// Parses and runs a command line, returning the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version through this path
            let _ = e.print();
            return if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_BAD_INPUT
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<i32, String> {
    match cmd {
        Cmd::Expand { diagram } => {
            let d = parse_diagram(&diagram)?;
            println!("{}", skew_schur(&d).fingerprint());
            Ok(EXIT_OK)
        }
        Cmd::Equal { a, b } => {
            let da = parse_diagram(&a)?;
            let db = parse_diagram(&b)?;
            let fa = skew_schur(&da);
            let fb = skew_schur(&db);
            if fa == fb {
                println!("equivalent");
                println!("{}", fa.fingerprint());
                Ok(EXIT_OK)
            } else {
                println!("not equivalent");
                let diff = first_difference(&fa, &fb);
                println!("{diff}");
                Ok(EXIT_CHECK_FAILED)
            }
        }
        Cmd::Compose { d, e, w, verify } => {
            let dd = parse_diagram(&d)?;
            let ee = parse_diagram(&e)?;
            let pl = parse_placement(&ee, &w)?;
            let composed = compose(&dd, &pl).map_err(|e| e.to_string())?;
            let mut doc = json!({
                "composition": composed,
                "case": pl.case().map(|c| c.letter().to_string()),
            });
            let mut code = EXIT_OK;
            if verify {
                let check = verify_main_identity(&dd, &pl).map_err(|e| e.to_string())?;
                if !check.holds || !check.sign_matches {
                    code = EXIT_CHECK_FAILED;
                }
                doc["identity"] = serde_json::to_value(&check).unwrap();
            }
            println!("{}", serde_json::to_string(&doc).unwrap());
            Ok(code)
        }
        Cmd::Hypotheses { e, w } => {
            let ee = parse_diagram(&e)?;
            let pl = parse_placement(&ee, &w)?;
            let report = check_hypotheses(&pl).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(if report.all_i_to_v { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Cmd::Hg { diagram, kind, show_matrix } => {
            let d = parse_diagram(&diagram)?;
            let kind = match kind {
                Kind::Nw => DecompKind::Northwest,
                Kind::Se => DecompKind::Southeast,
                Kind::Jt => DecompKind::JacobiTrudi,
            };
            let dec = decompose(&d, kind).map_err(|e| e.to_string())?;
            for (i, r) in dec.ribbons.iter().enumerate() {
                println!("theta_{}: contents [{}, {}], {} cells", i + 1, r.p, r.q, r.cells.len());
            }
            let (matrix, det) = hamel_goulden(&dec);
            if show_matrix {
                for i in 0..dec.len() {
                    for j in 0..dec.len() {
                        let interval = dec.hash_op(i, j);
                        let label = interval.label(dec.ribbons[j].p, dec.ribbons[i].q);
                        println!("({},{}) {} = {}", i + 1, j + 1, label, matrix[i][j].fingerprint());
                    }
                }
            }
            let expected = skew_schur(&d);
            let ok = det == expected;
            println!("determinant = {}", det.fingerprint());
            println!("matches direct expansion: {ok}");
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Cmd::Sylvester { size, trials, seed } => {
            if size == 0 || size > 8 {
                return Err("size must be between 1 and 8".into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut all_hold = true;
            for t in 0..trials {
                let m: Vec<Vec<i128>> = (0..size)
                    .map(|_| (0..size).map(|_| rng.gen_range(-9..=9)).collect())
                    .collect();
                let s: BTreeSet<usize> =
                    (0..size).filter(|_| rng.gen_bool(0.5)).collect();
                let ok = sylvester_check(&m, &s);
                if !ok {
                    all_hold = false;
                    println!("trial {t}: FAILED for S = {s:?}, M = {m:?}");
                }
            }
            println!(
                "sylvester identity on {trials} random {size}x{size} matrices: {}",
                if all_hold { "all hold" } else { "FAILURES" }
            );
            Ok(if all_hold { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Cmd::Classes { max_cells, out, workers } => {
            let classes = match workers {
                Some(n) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(n)
                        .build()
                        .map_err(|e| e.to_string())?;
                    pool.install(|| classify::classify(max_cells))
                }
                None => classify::classify(max_cells),
            }
            .map_err(|e| e.to_string())?;
            let mut all_pow2 = true;
            let report: Vec<serde_json::Value> = classes
                .iter()
                .map(|c| {
                    let pow2 = c.members.len().is_power_of_two();
                    all_pow2 &= pow2;
                    json!({
                        "members": c.members,
                        "fingerprint": serde_json::from_str::<serde_json::Value>(&c.fingerprint).unwrap(),
                        "invariants": c.invariants,
                        "power_of_two": pow2,
                    })
                })
                .collect();
            let doc = json!({
                "max_cells": max_cells,
                "class_count": classes.len(),
                "all_sizes_power_of_two": all_pow2,
                "classes": report,
            });
            let text = serde_json::to_string_pretty(&doc).unwrap();
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| e.to_string())?,
                None => println!("{text}"),
            }
            Ok(EXIT_OK)
        }
        Cmd::Verify { suite: name } => {
            if name != "paper-examples" {
                return Err(format!("unknown suite {name:?}"));
            }
            let results = suite::paper_examples();
            let mut ok = true;
            for r in &results {
                ok &= r.pass;
                println!("{} {}: {}", if r.pass { "PASS" } else { "FAIL" }, r.name, r.detail);
            }
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Cmd::Render { diagram, w } => {
            let d = parse_diagram(&diagram)?;
            match w {
                Some(spec) => {
                    let pl = parse_placement(&d, &spec)?;
                    let marks: BTreeSet<Cell> =
                        pl.sw_cells().iter().chain(pl.ne_cells()).copied().collect();
                    print!("{}", d.ascii_marked(&marks));
                }
                None => print!("{}", d.ascii()),
            }
            Ok(EXIT_OK)
        }
    }
}

fn first_difference(a: &SchurPoly, b: &SchurPoly) -> String {
    let keys: BTreeSet<_> = a.terms().map(|(p, _)| p.clone()).chain(b.terms().map(|(p, _)| p.clone())).collect();
    for p in keys {
        let (ca, cb) = (a.coeff(&p), b.coeff(&p));
        if ca != cb {
            return format!("first differing coefficient at {p}: {ca} vs {cb}");
        }
    }
    String::from("no differing coefficient")
}
