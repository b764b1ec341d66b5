//! Acceptance suite: one check per shipped guarantee, each printed as a
//! pass/fail line with its runtime.  Run with
//! `cargo test --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use skewkit::classify::{check_class_invariants, classify, enumerate_connected};
use skewkit::compose::{
    check_hypotheses_with, compose, find_w_placements, sign_of, verify_main_identity, AttachCase,
    WPlacement,
};
use skewkit::decomp::{decompose, hamel_goulden, sylvester_check, DecompKind};
use skewkit::diagram::Partition;
use skewkit::schur::{eval_in_vars, lr_coefficient, lr_mult, monomial_oracle, skew_schur};
use skewkit::suite;
use skewkit::SkewDiagram;

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
}

fn run_criterion(
    results: &mut Vec<(String, bool, Duration)>,
    c: Criterion,
    body: impl FnOnce() -> Result<(), String>,
) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let within_budget = c.budget.map_or(true, |b| elapsed <= b);
    let pass = outcome.is_ok() && within_budget;
    let status = if pass { "PASS" } else { "FAIL" };
    let mut line = format!("criterion {}: {status} ({:.2?})", c.name, elapsed);
    if let Err(e) = &outcome {
        line.push_str(&format!(" — {e}"));
    }
    if !within_budget {
        line.push_str(&format!(" — exceeded budget {:?}", c.budget.unwrap()));
    }
    println!("{line}");
    results.push((c.name.to_string(), pass, elapsed));
}

fn d(lambda: &[u32], mu: &[u32]) -> SkewDiagram {
    SkewDiagram::new(lambda, mu).unwrap()
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

#[test]
fn acceptance() {
    let mut results = Vec::new();

    run_criterion(
        &mut results,
        Criterion { name: "1 worked-example corpus", budget: secs(10) },
        criterion_1,
    );
    run_criterion(
        &mut results,
        Criterion { name: "2 unique eight-cell equivalence", budget: secs(30) },
        criterion_2,
    );
    run_criterion(
        &mut results,
        Criterion { name: "3 six eighteen-cell equivalences", budget: secs(300) },
        criterion_3,
    );
    run_criterion(
        &mut results,
        Criterion { name: "4 determinant soundness to nine cells", budget: secs(600) },
        criterion_4,
    );
    run_criterion(
        &mut results,
        Criterion { name: "5 main identity with signs", budget: secs(900) },
        criterion_5,
    );
    run_criterion(
        &mut results,
        Criterion { name: "6 power-of-two class sizes to twelve cells", budget: None },
        criterion_6,
    );
    run_criterion(
        &mut results,
        Criterion { name: "7 property suites", budget: secs(600) },
        criterion_7,
    );
    run_criterion(
        &mut results,
        Criterion { name: "8 fifth-hypothesis probe", budget: secs(60) },
        criterion_8,
    );

    let failures: Vec<&(String, bool, Duration)> =
        results.iter().filter(|(_, pass, _)| !pass).collect();
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}

fn criterion_1() -> Result<(), String> {
    let results = suite::paper_examples();
    let failures: Vec<String> = results
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{}: {}", r.name, r.detail))
        .collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("; "))
    }
}

fn criterion_2() -> Result<(), String> {
    let classes = classify(8).map_err(|e| e.to_string())?;
    let nontrivial: Vec<_> = classes.iter().filter(|c| !c.is_rotation_class()).collect();
    if nontrivial.len() != 1 {
        return Err(format!("expected one non-rotation class, found {}", nontrivial.len()));
    }
    let class = nontrivial[0];
    let a = d(&[4, 3, 2, 1], &[2]);
    let b = d(&[4, 3, 2, 1], &[1, 1]);
    let expect: BTreeSet<SkewDiagram> =
        [a.clone(), b.clone(), a.rotate180(), b.rotate180()].into_iter().collect();
    let got: BTreeSet<SkewDiagram> = class.members.iter().cloned().collect();
    if got != expect {
        return Err(format!("class members {:?}", class.members));
    }
    if a.rotate180() == b {
        return Err("pair members must not be rotations of each other".into());
    }
    Ok(())
}

fn criterion_3() -> Result<(), String> {
    let configs = suite::unexplained_configurations();
    let staircase = d(&[2, 1], &[]);
    let rotated = staircase.rotate180();
    let outcomes: Vec<Result<(), String>> = configs
        .par_iter()
        .enumerate()
        .map(|(i, pl)| {
            let f = compose(&staircase, pl).map_err(|e| e.to_string())?;
            let g = compose(&rotated, pl).map_err(|e| e.to_string())?;
            if skew_schur(&f) != skew_schur(&g) {
                return Err(format!("configuration {i}: expansions differ"));
            }
            if i == 0 {
                let want: BTreeSet<SkewDiagram> = [
                    d(&[6, 5, 5, 3, 2, 2], &[4, 2, 1, 1]),
                    d(&[6, 5, 5, 4, 4, 2], &[4, 3, 3, 1]),
                ]
                .into_iter()
                .collect();
                let got: BTreeSet<SkewDiagram> = [f, g].into_iter().collect();
                if got != want {
                    return Err(format!("first pair mismatch: {got:?}"));
                }
            }
            Ok(())
        })
        .collect();
    for o in outcomes {
        o?;
    }
    Ok(())
}

fn criterion_4() -> Result<(), String> {
    let mut diagrams = Vec::new();
    for n in 1..=9 {
        diagrams.extend(enumerate_connected(n).map_err(|e| e.to_string())?);
    }
    let failures: Vec<String> = diagrams
        .par_iter()
        .flat_map(|sh| {
            [DecompKind::Northwest, DecompKind::Southeast, DecompKind::JacobiTrudi]
                .into_par_iter()
                .filter_map(move |kind| {
                    let dec = match decompose(sh, kind) {
                        Ok(d) => d,
                        Err(e) => return Some(format!("{sh:?} {kind:?}: {e}")),
                    };
                    let (_, det) = hamel_goulden(&dec);
                    (det != skew_schur(sh)).then(|| format!("{sh:?} {kind:?}: determinant mismatch"))
                })
        })
        .collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(format!("{} failures, first: {}", failures.len(), failures[0]))
    }
}

/// (E, placement) pairs with all five hypotheses, for diagrams up to
/// `max_e` cells.
fn hypothesis_pool(max_e: usize) -> Vec<WPlacement> {
    let mut es = Vec::new();
    for n in 1..=max_e {
        es.extend(enumerate_connected(n).unwrap());
    }
    es.par_iter()
        .flat_map(|e| {
            let placements = find_w_placements(e).unwrap();
            let kept: Vec<WPlacement> = placements
                .iter()
                .filter(|pl| check_hypotheses_with(pl, &placements).all_i_to_v)
                .cloned()
                .collect();
            kept
        })
        .collect()
}

fn check_identity_with_sign(dd: &SkewDiagram, pl: &WPlacement) -> Result<(), String> {
    let r = verify_main_identity(dd, pl).map_err(|e| e.to_string())?;
    if !r.holds {
        return Err(format!("identity fails for D={dd:?}, E={:?}, W={:?}", pl.e(), pl.w()));
    }
    match pl.case() {
        Some(AttachCase::A) | Some(AttachCase::B) => {
            if r.sign != 1 {
                return Err(format!("sign {} for same-attachment case, D={dd:?}", r.sign));
            }
        }
        _ => {
            let expect = sign_of(dd).map_err(|e| e.to_string())?;
            if r.sign != expect {
                return Err(format!(
                    "sign {} does not match decomposition sign {expect} for D={dd:?}",
                    r.sign
                ));
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Result<(), String> {
    // paper corpus triples
    let mut corpus: Vec<(SkewDiagram, WPlacement)> = Vec::new();
    let box22 = d(&[2, 2], &[]);
    corpus.push((box22.clone(), suite::amalg_example_placement()));
    corpus.push((
        box22.clone(),
        WPlacement::new(
            &d(&[4, 4, 2], &[3]),
            [(1, 0), (2, 0)].into_iter().collect(),
            [(0, 3), (1, 3)].into_iter().collect(),
        )
        .unwrap(),
    ));
    corpus.push((
        box22.clone(),
        WPlacement::new(
            &d(&[3, 3, 3, 2], &[2, 2]),
            [(2, 0), (3, 0)].into_iter().collect(),
            [(0, 2), (1, 2)].into_iter().collect(),
        )
        .unwrap(),
    ));
    corpus.push((box22, WPlacement::empty(&d(&[2, 2], &[])).unwrap()));
    let staircase = suite::staircase_placement();
    corpus.push((d(&[2, 1], &[]), staircase.clone()));
    corpus.push((d(&[2, 2], &[1]), staircase));
    for pl in suite::unexplained_configurations() {
        corpus.push((d(&[2, 1], &[]), pl.clone()));
        corpus.push((d(&[2, 2], &[1]), pl));
    }

    // randomized pool
    let pool = hypothesis_pool(8);
    let mut ds = Vec::new();
    for n in 1..=4 {
        ds.extend(enumerate_connected(n).map_err(|e| e.to_string())?);
    }
    let mut all_pairs: Vec<(usize, usize)> = (0..pool.len())
        .flat_map(|p| (0..ds.len()).map(move |q| (p, q)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    all_pairs.shuffle(&mut rng);
    let sample: Vec<(SkewDiagram, WPlacement)> = all_pairs
        .into_iter()
        .take(220)
        .map(|(p, q)| (ds[q].clone(), pool[p].clone()))
        .collect();
    if sample.len() < 200 {
        return Err(format!("only {} randomized triples available", sample.len()));
    }

    let failures: Vec<String> = corpus
        .into_par_iter()
        .chain(sample)
        .filter_map(|(dd, pl)| check_identity_with_sign(&dd, &pl).err())
        .collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(format!("{} failures, first: {}", failures.len(), failures[0]))
    }
}

fn criterion_6() -> Result<(), String> {
    let classes = classify(12).map_err(|e| e.to_string())?;
    let mut by_size: std::collections::BTreeMap<usize, usize> = Default::default();
    for c in &classes {
        *by_size.entry(c.invariants.cells).or_default() += 1;
        if !c.members.len().is_power_of_two() {
            return Err(format!(
                "class of size {} is not a power of two; members {:?}",
                c.members.len(),
                c.members
            ));
        }
        check_class_invariants(c)?;
    }
    println!("  classes by cell count: {by_size:?}");
    Ok(())
}

fn criterion_7() -> Result<(), String> {
    // Littlewood-Richardson symmetry and adjointness, all shapes to 8 cells
    let lr_failures: Vec<String> = (1..=8u32)
        .into_par_iter()
        .flat_map(|n| Partition::all(n).into_par_iter())
        .filter_map(|la| {
            for mu in la.subpartitions() {
                let rest = la.size() - mu.size();
                let skew = skew_schur(&SkewDiagram::from_parts(&la, &mu).unwrap());
                for nu in Partition::all(rest) {
                    let a = lr_coefficient(&la, &mu, &nu);
                    let b = lr_coefficient(&la, &nu, &mu);
                    if a != b {
                        return Some(format!("symmetry fails at ({la}, {mu}, {nu}): {a} vs {b}"));
                    }
                    let c = skew.coeff(&nu);
                    let viaprod = lr_mult(&mu, &nu).coeff(&la);
                    if c != viaprod {
                        return Some(format!("adjointness fails at ({la}, {mu}, {nu})"));
                    }
                }
            }
            None
        })
        .collect();
    if !lr_failures.is_empty() {
        return Err(lr_failures[0].clone());
    }

    // omega involution plus transposition, to 8 cells
    let mut small = Vec::new();
    for n in 1..=8 {
        small.extend(enumerate_connected(n).map_err(|e| e.to_string())?);
    }
    let omega_failures: Vec<String> = small
        .par_iter()
        .filter_map(|sh| {
            let f = skew_schur(sh);
            if f.omega().omega() != f {
                return Some(format!("omega is not an involution on {sh:?}"));
            }
            if f.omega() != skew_schur(&sh.transpose()) {
                return Some(format!("omega vs transpose fails on {sh:?}"));
            }
            let n = sh.size();
            if monomial_oracle(sh, n) != eval_in_vars(&f, n) {
                return Some(format!("monomial oracle disagrees on {sh:?}"));
            }
            None
        })
        .collect();
    if !omega_failures.is_empty() {
        return Err(omega_failures[0].clone());
    }

    // rotation invariance to 10 cells
    let mut bigger = Vec::new();
    for n in 1..=10 {
        bigger.extend(enumerate_connected(n).map_err(|e| e.to_string())?);
    }
    let rot_failures: Vec<String> = bigger
        .par_iter()
        .filter_map(|sh| {
            (skew_schur(sh) != skew_schur(&sh.rotate180()))
                .then(|| format!("rotation equivalence fails on {sh:?}"))
        })
        .collect();
    if !rot_failures.is_empty() {
        return Err(rot_failures[0].clone());
    }

    // Sylvester's identity on 100 random integer matrices
    let mut rng = ChaCha8Rng::seed_from_u64(0x0001_d1ce);
    for t in 0..100 {
        let n = 3 + (t % 4) as usize;
        let m: Vec<Vec<i128>> = (0..n)
            .map(|_| (0..n).map(|_| rand::Rng::gen_range(&mut rng, -9..=9)).collect())
            .collect();
        let s: BTreeSet<usize> = (0..n).filter(|_| rand::Rng::gen_bool(&mut rng, 0.4)).collect();
        if !sylvester_check(&m, &s) {
            return Err(format!("sylvester identity fails on trial {t}: M={m:?}, S={s:?}"));
        }
    }
    Ok(())
}

fn criterion_8() -> Result<(), String> {
    let pl = suite::hypothesis_v_failing_placement();
    let report = skewkit::compose::check_hypotheses(&pl).map_err(|e| e.to_string())?;
    if !report.all_i_to_iv || report.h5_single_attach_cell.holds {
        return Err(format!("unexpected hypothesis report: {report:?}"));
    }
    let staircase = d(&[2, 1], &[]);
    let rotated = staircase.rotate180();
    check_identity_with_sign(&staircase, &pl)?;
    check_identity_with_sign(&rotated, &pl)?;
    let f = compose(&staircase, &pl).map_err(|e| e.to_string())?;
    let g = compose(&rotated, &pl).map_err(|e| e.to_string())?;
    let (want_a, want_b) = suite::hypothesis_v_pair();
    let got: BTreeSet<SkewDiagram> = [f.clone(), g.clone()].into_iter().collect();
    let want: BTreeSet<SkewDiagram> = [want_a, want_b].into_iter().collect();
    if got != want {
        return Err(format!("pair mismatch: {got:?}"));
    }
    if skew_schur(&f) != skew_schur(&g) {
        return Err("printed pair is not skew-equivalent".into());
    }
    Ok(())
}
