//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use groebner_sat::buchberger::{
    buchberger, generates_ideal, is_groebner, reduce_basis, BuchbergerConfig, Criteria,
    GroebnerBasis, SelectionStrategy,
};
use groebner_sat::cnf::random::{random_3cnf, seeded_rng};
use groebner_sat::cnf::{
    brute_force_sat, emit_dimacs, parse_dimacs, precheck, Assignment, Clause, CnfFormula, Precheck,
};
use groebner_sat::encoder::{assignment_to_point, encode_clause, encode_formula, EncodingMode};
use groebner_sat::polyring::{
    normal_form, Ideal, Monomial, MonomialOrder, Polynomial, Rational, Term,
};
use groebner_sat::satdecide::{
    decide, extract_solution, verify_unsat_certificate, DecideConfig, Status,
};
use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;

const LITERALS: [i64; 6] = [1, -1, 2, -2, 3, -3];

/// All 56 multisets of three literals over x1..x3.
fn clause_universe() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for (a, &x) in LITERALS.iter().enumerate() {
        for (b, &y) in LITERALS.iter().enumerate().skip(a) {
            for &z in &LITERALS[b..] {
                out.push(vec![x, y, z]);
            }
        }
    }
    out
}

/// Every set of at most 3 distinct clauses from the universe (k = 3).
fn exhaustive_formulas() -> Vec<CnfFormula> {
    let u = clause_universe();
    let mk = |cs: &[&Vec<i64>]| {
        let refs: Vec<&[i64]> = cs.iter().map(|c| c.as_slice()).collect();
        CnfFormula::from_dimacs_clauses(3, &refs).unwrap()
    };
    let mut out = vec![mk(&[])];
    for i in 0..u.len() {
        out.push(mk(&[&u[i]]));
        for j in i + 1..u.len() {
            out.push(mk(&[&u[i], &u[j]]));
            for l in j + 1..u.len() {
                out.push(mk(&[&u[i], &u[j], &u[l]]));
            }
        }
    }
    out
}

fn random_formulas(seed: u64, count: usize) -> Vec<CnfFormula> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| {
            let k = rng.random_range(3..=6);
            let n = rng.random_range(0..=10);
            random_3cnf(&mut rng, k, n).unwrap()
        })
        .collect()
}

fn oracle_status(f: &CnfFormula) -> Status {
    match brute_force_sat(f).unwrap() {
        Some(_) => Status::Sat,
        None => Status::Unsat,
    }
}

fn gb_config(mode: EncodingMode) -> DecideConfig {
    DecideConfig {
        mode,
        use_precheck: false,
        extract_model: false,
        ..DecideConfig::default()
    }
}

struct Report {
    failures: usize,
}

impl Report {
    fn record(&mut self, name: &str, started: Instant, result: Result<String, String>) {
        let secs = started.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  {name}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                self.failures += 1;
                println!("FAIL  {name}: {detail} ({secs:.1}s)");
            }
        }
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Sweep {
    formulas: Vec<CnfFormula>,
    oracle: Vec<Status>,
}

/// Criterion 1 (decision equivalence) and 2 (UNSAT certificate is {1}).
fn decision_equivalence(
    sweep: &Sweep,
    random_bare: usize,
) -> (Result<String, String>, Result<String, String>) {
    let mut unsat_checked = 0usize;
    let mut problems: Vec<String> = Vec::new();
    let mut cert_problems: Vec<String> = Vec::new();
    for mode in [EncodingMode::Boolean, EncodingMode::Bare] {
        let limit = match mode {
            EncodingMode::Boolean => sweep.formulas.len(),
            EncodingMode::Bare => sweep.formulas.len() - 500 + random_bare,
        };
        let results: Vec<(usize, Status, bool)> = sweep.formulas[..limit]
            .par_iter()
            .enumerate()
            .map(|(i, f)| {
                let d = decide(f, &gb_config(mode)).unwrap();
                let cert = d.certificate.as_ref().unwrap();
                let unit = cert.polys() == [Polynomial::one(f.num_vars(), cert.order())];
                let cert_ok = match d.status {
                    Status::Unsat => unit && verify_unsat_certificate(f, cert, mode),
                    Status::Sat => !cert.is_unit(),
                };
                (i, d.status, cert_ok)
            })
            .collect();
        for (i, status, cert_ok) in results {
            if status != sweep.oracle[i] {
                problems.push(format!(
                    "{mode} #{i}: decide {status}, oracle {}",
                    sweep.oracle[i]
                ));
            }
            if status == Status::Unsat {
                unsat_checked += 1;
            }
            if !cert_ok {
                cert_problems.push(format!("{mode} #{i}"));
            }
        }
    }
    let c1 = if problems.is_empty() {
        Ok(format!(
            "{n} exhaustive + 500 random in boolean mode, {n} exhaustive + {random_bare} random in bare mode, all match brute force",
            n = sweep.formulas.len() - 500,
        ))
    } else {
        Err(format!(
            "{} mismatches, first: {}",
            problems.len(),
            problems[0]
        ))
    };
    let c2 = if cert_problems.is_empty() {
        Ok(format!(
            "{unsat_checked} UNSAT decisions, every reduced basis is exactly {{1}}"
        ))
    } else {
        Err(format!(
            "{} bad certificates, first: {}",
            cert_problems.len(),
            cert_problems[0]
        ))
    };
    (c1, c2)
}

/// Criterion 3: every clause of width <= 3 over 3 variables, all 8 points.
fn lemma_bijection() -> Result<String, String> {
    let mut clauses: Vec<Vec<i64>> = vec![vec![]];
    for width in 1..=3 {
        let mut next = Vec::new();
        for c in clauses.iter().filter(|c| c.len() == width - 1) {
            for l in LITERALS {
                let mut d = c.clone();
                d.push(l);
                next.push(d);
            }
        }
        clauses.extend(next);
    }
    let mut checks = 0;
    for lits in &clauses {
        let clause = Clause::from_dimacs(lits);
        let poly = encode_clause(&clause, 3, MonomialOrder::Grevlex).map_err(|e| e.to_string())?;
        check(
            poly.total_degree().unwrap_or(0) == lits.len() as u64,
            || format!("degree of {lits:?} is not {}", lits.len()),
        )?;
        for code in 0..8u8 {
            let a = Assignment::new((0..3).map(|i| code >> i & 1 == 1).collect());
            let vanishes = poly
                .eval(&assignment_to_point(&a).coords())
                .map_err(|e| e.to_string())?
                .is_zero();
            check(vanishes == clause.is_satisfied(&a), || {
                format!("clause {lits:?} at {:?}", a.values())
            })?;
            checks += 1;
        }
    }
    Ok(format!(
        "{} clauses x 8 points = {checks} checks",
        clauses.len()
    ))
}

fn configs() -> Vec<BuchbergerConfig> {
    let mut out = Vec::new();
    for strategy in [SelectionStrategy::Normal, SelectionStrategy::Fifo] {
        for criteria in [Criteria::ALL, Criteria::NONE] {
            out.push(BuchbergerConfig {
                criteria,
                strategy,
                budget: None,
            });
        }
    }
    out
}

/// Buchberger postconditions on one ideal, across all strategy/criteria combinations.
fn check_completion(ideal: &Ideal) -> Result<(), String> {
    let mut reference: Option<GroebnerBasis> = None;
    for cfg in configs() {
        let (raw, _) = buchberger(ideal, &cfg).map_err(|e| e.to_string())?;
        check(is_groebner(raw.polys()).unwrap(), || {
            format!("{cfg:?}: output not a Gröbner basis")
        })?;
        check(generates_ideal(&raw, ideal).unwrap(), || {
            format!("{cfg:?}: generator does not reduce to 0")
        })?;
        let reduced = reduce_basis(&raw).map_err(|e| e.to_string())?;
        check(is_groebner(reduced.polys()).unwrap(), || {
            format!("{cfg:?}: reduced basis not Gröbner")
        })?;
        match &reference {
            None => reference = Some(reduced),
            Some(r) => check(r == &reduced, || format!("{cfg:?}: reduced basis differs"))?,
        }
    }
    Ok(())
}

fn random_poly<R: Rng>(
    rng: &mut R,
    nvars: usize,
    order: MonomialOrder,
    max_terms: usize,
    max_deg: u32,
) -> Polynomial {
    loop {
        let nterms = rng.random_range(1..=max_terms);
        let terms = (0..nterms).map(|_| {
            let mut exps = vec![0u32; nvars];
            let deg = rng.random_range(0..=max_deg);
            for _ in 0..deg {
                exps[rng.random_range(0..nvars)] += 1;
            }
            let num: i64 = rng.random_range(-5..=5);
            let den: i64 = rng.random_range(1..=3);
            Term::new(Rational::new(num.into(), den.into()), Monomial::new(exps))
        });
        let p = Polynomial::from_terms(nvars, order, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// Criterion 4.
fn buchberger_correctness(sweep: &Sweep) -> Result<String, String> {
    let mut rng = seeded_rng(4);
    let random_ideals: Vec<Ideal> = (0..200)
        .map(|_| {
            let nvars = rng.random_range(1..=3);
            let order = MonomialOrder::ALL[rng.random_range(0..3)];
            let ngens = rng.random_range(1..=3);
            let gens = (0..ngens)
                .map(|_| random_poly(&mut rng, nvars, order, 3, 3))
                .collect();
            Ideal::new(nvars, order, gens).unwrap()
        })
        .collect();
    random_ideals
        .par_iter()
        .enumerate()
        .try_for_each(|(i, ideal)| {
            check_completion(ideal).map_err(|e| format!("random ideal #{i}: {e}"))
        })?;

    let mut encoded = 0usize;
    for mode in [EncodingMode::Boolean, EncodingMode::Bare] {
        let ideals: Vec<Ideal> = sweep
            .formulas
            .iter()
            .map(|f| encode_formula(f, mode, MonomialOrder::Grevlex).unwrap())
            .collect();
        ideals.par_iter().enumerate().try_for_each(|(i, ideal)| {
            check_completion(ideal).map_err(|e| format!("{mode} formula #{i}: {e}"))
        })?;
        encoded += ideals.len();
    }
    Ok(format!(
        "{} random ideals + {encoded} SAT encodings, 4 strategy/criteria variants each",
        random_ideals.len()
    ))
}

/// Independent expansion of sum(q_i g_i) + r into exponent-keyed coefficients.
fn expand(qs: &[Polynomial], gs: &[Polynomial], r: &Polynomial) -> HashMap<Vec<u32>, Rational> {
    let mut acc: HashMap<Vec<u32>, Rational> = HashMap::new();
    let mut add = |e: Vec<u32>, c: Rational| {
        *acc.entry(e).or_insert_with(Rational::zero) += c;
    };
    for t in r.terms() {
        add(t.monomial.exponents().to_vec(), t.coeff.clone());
    }
    for (q, g) in qs.iter().zip(gs) {
        for a in q.terms() {
            for b in g.terms() {
                let e = a
                    .monomial
                    .exponents()
                    .iter()
                    .zip(b.monomial.exponents())
                    .map(|(x, y)| x + y)
                    .collect();
                add(e, &a.coeff * &b.coeff);
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

/// Criterion 5.
fn division_identity() -> Result<String, String> {
    let mut rng = seeded_rng(5);
    for case in 0..1000 {
        let nvars = rng.random_range(1..=4);
        let order = MonomialOrder::ALL[rng.random_range(0..3)];
        let f = random_poly(&mut rng, nvars, order, 6, 5);
        let ngens = rng.random_range(1..=3);
        let gs: Vec<Polynomial> = (0..ngens)
            .map(|_| random_poly(&mut rng, nvars, order, 3, 3))
            .collect();
        let d = normal_form(&f, &gs).map_err(|e| e.to_string())?;
        let mut expected: HashMap<Vec<u32>, Rational> = f
            .terms()
            .iter()
            .map(|t| (t.monomial.exponents().to_vec(), t.coeff.clone()))
            .collect();
        expected.retain(|_, c| !c.is_zero());
        check(expand(&d.quotients, &gs, &d.remainder) == expected, || {
            format!("case {case}: f != sum q_i g_i + r for f = {f}")
        })?;
        for t in d.remainder.terms() {
            check(
                gs.iter()
                    .all(|g| !g.leading_monomial().unwrap().divides(&t.monomial)),
                || format!("case {case}: remainder term {} is reducible", t.monomial),
            )?;
        }
    }
    Ok("1000 random divisions reconstruct exactly with irreducible remainders".into())
}

/// Criterion 6.
fn precheck_bounds() -> Result<String, String> {
    let all8: Vec<Vec<i64>> = (0..8u8)
        .map(|b| {
            (1..=3)
                .map(|v| if b >> (v - 1) & 1 == 1 { v } else { -v })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = all8.iter().map(Vec::as_slice).collect();
    let f = CnfFormula::from_dimacs_clauses(3, &refs).unwrap();
    check(precheck(&f) == Precheck::Unsat, || {
        "all 8 sign patterns not Unsat".into()
    })?;
    check(brute_force_sat(&f).unwrap().is_none(), || {
        "oracle finds a model for all 8 patterns".into()
    })?;

    // Every 7-clause subset of distinct 3-variable clauses with k = 4.
    let mut pool: Vec<Vec<i64>> = Vec::new();
    for vars in [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]] {
        for b in 0..8u8 {
            pool.push(
                vars.iter()
                    .enumerate()
                    .map(|(i, &v)| if b >> i & 1 == 1 { v } else { -v })
                    .collect(),
            );
        }
    }
    let mut rng = seeded_rng(6);
    let mut sevens = 0;
    for _ in 0..500 {
        let picks = rand::seq::index::sample(&mut rng, pool.len(), 7).into_vec();
        let cl: Vec<&[i64]> = picks.iter().map(|&i| pool[i].as_slice()).collect();
        let f = CnfFormula::from_dimacs_clauses(4, &cl).unwrap();
        check(precheck(&f) == Precheck::Sat, || {
            format!("7 clauses {cl:?} not Sat")
        })?;
        check(brute_force_sat(&f).unwrap().is_some(), || {
            format!("oracle: {cl:?} unsat")
        })?;
        sevens += 1;
    }
    // and all 7-subsets of the single-triple sign patterns
    for skip in 0..8 {
        let cl: Vec<&[i64]> = refs
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, c)| *c)
            .collect();
        let f = CnfFormula::from_dimacs_clauses(3, &cl).unwrap();
        check(
            precheck(&f) == Precheck::Sat && brute_force_sat(&f).unwrap().is_some(),
            || format!("7 of 8 patterns (skip {skip})"),
        )?;
        sevens += 1;
    }

    let contradiction = CnfFormula::from_dimacs_clauses(1, &[&[1, 1, 1], &[-1, -1, -1]]).unwrap();
    check(precheck(&contradiction) == Precheck::Unknown, || {
        "guard failed".into()
    })?;
    check(brute_force_sat(&contradiction).unwrap().is_none(), || {
        "contradiction has a model".into()
    })?;
    Ok(format!(
        "8-pattern Unsat, {sevens} seven-clause Sat instances, guard returns Unknown"
    ))
}

/// Criterion 7.
fn extraction(sweep: &Sweep) -> Result<String, String> {
    let sat: Vec<&CnfFormula> = sweep
        .formulas
        .iter()
        .zip(&sweep.oracle)
        .filter(|(_, s)| **s == Status::Sat)
        .map(|(f, _)| f)
        .collect();
    let cfg = DecideConfig::default();
    sat.par_iter().enumerate().try_for_each(|(i, f)| {
        let a = extract_solution(f, &cfg).map_err(|e| format!("#{i}: {e}"))?;
        check(f.evaluate(&a).unwrap(), || {
            format!("#{i}: model does not satisfy")
        })?;
        let b = extract_solution(f, &cfg).map_err(|e| format!("#{i}: {e}"))?;
        check(a == b, || format!("#{i}: extraction not deterministic"))
    })?;
    Ok(format!(
        "{} SAT instances, every extracted model satisfies its formula",
        sat.len()
    ))
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

/// Criterion 8.
fn dimacs_and_cli() -> Result<String, String> {
    let bin = env!("CARGO_BIN_EXE_groebner-sat");
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "cnf"))
        .collect();
    files.sort();
    check(files.len() >= 10, || {
        format!("only {} corpus files", files.len())
    })?;
    let mut compared = 0;
    for path in &files {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let f = parse_dimacs(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let emitted = emit_dimacs(&f);
        check(parse_dimacs(&emitted).as_ref() == Ok(&f), || {
            format!("{}: round trip", path.display())
        })?;
        check(
            emit_dimacs(&parse_dimacs(&emitted).unwrap()) == emitted,
            || format!("{}: emit not canonical", path.display()),
        )?;

        let out = Command::new(bin)
            .arg("solve")
            .arg(path)
            .output()
            .map_err(|e| e.to_string())?;
        let expect_code = match oracle_status(&f) {
            Status::Sat => 10,
            Status::Unsat => 20,
        };
        check(out.status.code() == Some(expect_code), || {
            format!(
                "{}: exit {:?}, expected {expect_code}",
                path.display(),
                out.status.code()
            )
        })?;
        for (cmd, ext) in [("solve", "solve.out"), ("encode", "encode.out")] {
            let expected_path = path.with_extension(ext);
            let expected = std::fs::read_to_string(&expected_path)
                .map_err(|e| format!("{}: {e}", expected_path.display()))?;
            let got = Command::new(bin)
                .arg(cmd)
                .arg(path)
                .output()
                .map_err(|e| e.to_string())?;
            check(String::from_utf8_lossy(&got.stdout) == expected, || {
                format!(
                    "{cmd} {}: output differs from {}",
                    path.display(),
                    expected_path.display()
                )
            })?;
            compared += 1;
        }
    }
    let bench_expected =
        std::fs::read_to_string(corpus_dir().join("bench_seed7.out")).map_err(|e| e.to_string())?;
    let got = Command::new(bin)
        .args([
            "bench", "--seed", "7", "--k", "5", "--n", "15", "--count", "100",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    check(got.status.code() == Some(0), || "bench exit code".into())?;
    check(
        String::from_utf8_lossy(&got.stdout) == bench_expected,
        || "bench output differs".into(),
    )?;
    check(bench_expected.ends_with("agreement 100/100\n"), || {
        "bench agreement".into()
    })?;
    Ok(format!(
        "{} corpus files, {compared} byte-exact outputs, seeded bench reproduced",
        files.len()
    ))
}

fn main() {
    let mut report = Report { failures: 0 };
    let t = Instant::now();
    let mut formulas = exhaustive_formulas();
    formulas.extend(random_formulas(1, 500));
    let oracle: Vec<Status> = formulas.par_iter().map(oracle_status).collect();
    let sweep = Sweep { formulas, oracle };
    println!(
        "acceptance: {} instances ({} UNSAT by brute force), prepared in {:.1}s",
        sweep.formulas.len(),
        sweep.oracle.iter().filter(|s| **s == Status::Unsat).count(),
        t.elapsed().as_secs_f64()
    );

    let t = Instant::now();
    let (c1, c2) = decision_equivalence(&sweep, 500);
    report.record("1 decision equivalence", t, c1);
    report.record("2 UNSAT certificate is {1}", t, c2);
    let t = Instant::now();
    report.record("3 Lemma bijection", t, lemma_bijection());
    let t = Instant::now();
    report.record(
        "4 Buchberger correctness",
        t,
        buchberger_correctness(&sweep),
    );
    let t = Instant::now();
    report.record("5 division identity", t, division_identity());
    let t = Instant::now();
    report.record("6 precheck bounds", t, precheck_bounds());
    let t = Instant::now();
    report.record("7 extraction", t, extraction(&sweep));
    let t = Instant::now();
    report.record("8 DIMACS round trip and CLI", t, dimacs_and_cli());

    if report.failures > 0 {
        println!("acceptance: {} criteria FAILED", report.failures);
        std::process::exit(1);
    }
    println!("acceptance: all 8 criteria passed");
}
