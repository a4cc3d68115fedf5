//! Acceptance criteria 1–10. Prints one PASS/FAIL line per criterion with its
//! time budget. Verdicts are discrete, so every comparison is exact.
//!
//! Exits nonzero if any criterion other than those listed in
//! `KNOWN_UNATTAINABLE` fails, or if one of those unexpectedly passes.

#[path = "../../core/tests/support/mod.rs"]
mod support;
mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use fpure_cli::parse_polynomial;
use fpure_core::zoo::{verify_all, verify_case, CaseId, CaseOutcome, DohertyOptions, SweepOptions};
use fpure_core::{
    fedder_hypersurface, finjective_cm_quotient, frobenius_power, is_frobenius_closed, normal_form, pe_th_root,
    pigeonhole_precheck, ClosureOptions, ClosureStatus, FinjectivityDetail, FinjectivityOutcome, FpurityOutcome, Ideal,
    Monomial, PolyRing, Polynomial, PrimeChar, QuotientPresentation,
};
use rand::Rng;
use support::*;

/// Criteria that cannot hold as stated, with the reason.
const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[(
    3,
    "the expansion has a second product reaching (z1 z2 z_r z_{r+1})^(p-1); at p = 5 the coefficient is 4, not (-3)^4 = 1",
)];

type Outcome = Result<String, String>;
type Constraint = (&'static str, u32, fn(usize) -> bool);
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rem(a: i128, p: u64) -> u32 {
    a.rem_euclid(p as i128) as u32
}

fn exact_binomial(n: u64, k: u64) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn z_ring(p: u64, r: usize) -> PolyRing {
    PolyRing::indexed(PrimeChar::new(p).unwrap(), "z", r + 1, fpure_core::MonomialOrder::GrevLex).unwrap()
}

/// Admissible `(case, p, r, d)` from the constraint table, written out independently.
fn admissible(p: u32, r: usize) -> Vec<(&'static str, Option<usize>)> {
    let mut out: Vec<(&'static str, Option<usize>)> = (1..=r + 1).map(|d| ("0", Some(d))).collect();
    let table: [Constraint; 7] = [
        ("1a", 2, |r| r >= 2),
        ("1b", 3, |r| r >= 4),
        ("2a", 2, |r| r >= 3),
        ("2b", 3, |r| r == 5),
        ("2c", 2, |r| r == 5),
        ("3", 2, |r| r >= 4),
        ("4", 2, |r| r == 5),
    ];
    for (id, bad_p, rank_ok) in table {
        if p != bad_p && rank_ok(r) {
            out.push((id, None));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let chars = [5u64, 7, 11, 13];
    let reports = verify_all(&chars, &[1, 2, 3, 4, 5], SweepOptions { include_doherty: false, ..Default::default() });
    let mut expected = BTreeSet::new();
    for &p in &chars {
        for r in 1..=5 {
            for (id, d) in admissible(p as u32, r) {
                expected.insert((id.to_string(), p as u32, r, d));
            }
        }
    }
    let mut seen = BTreeSet::new();
    for rep in &reports {
        match &rep.outcome {
            CaseOutcome::Excluded(_) => continue,
            CaseOutcome::Failed(e) => return Err(format!("{} p={} r={}: {e}", rep.case, rep.p, rep.r)),
            CaseOutcome::Verified { .. } => {}
        }
        check(rep.matches && rep.computed == Some(FpurityOutcome::FPure), || {
            format!("{} p={} r={} d={:?} computed {:?}", rep.case, rep.p, rep.r, rep.d, rep.computed)
        })?;
        seen.insert((rep.case.label().to_string(), rep.p, rep.r, rep.d));
    }
    check(seen == expected, || format!("verified set differs: {} vs {} instances", seen.len(), expected.len()))?;

    let run = common::fpure(&["zoo", "sweep", "--chars", "5,7,11,13", "--max-r", "5", "--json"]);
    check(run.code == 0, || format!("CLI exit {}", run.code))?;
    let v = run.json();
    check(v["verdict"]["all_match"] == true, || "CLI sweep reports a mismatch".into())?;
    Ok(format!("{} admissible instances FPure, match=true (library and CLI)", seen.len()))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for p in [3u64, 5, 7] {
        for r in 2..=5usize {
            let ring = z_ring(p, r);
            let text = format!("z{r}^2 - z1^2*z{}", r + 1);
            let f = parse_polynomial(&text, &ring).map_err(|e| e.to_string())?;
            let bracket = Ideal::new(&ring, (0..=r).map(|i| ring.var(i).pow(p))).map_err(|e| e.to_string())?;
            let nf = normal_form(&f.pow(p - 1), bracket.basis().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let h = (p - 1) / 2;
            let sign = if h % 2 == 0 { 1 } else { -1 };
            let mut exps = vec![0u32; r + 1];
            exps[0] = (p - 1) as u32;
            exps[r - 1] = (p - 1) as u32;
            exps[r] = h as u32;
            let expected = ring
                .from_terms([(Monomial::new(exps), rem(sign * exact_binomial(p - 1, h), p) as i64)])
                .map_err(|e| e.to_string())?;
            check(nf == expected, || format!("p={p} r={r}: got {nf}, expected {expected}"))?;
            checked += 1;
        }
    }
    Ok(format!("normal form equals the closed form term-exactly ({checked} instances, p in {{3,5,7}})"))
}

fn cubic_text(r: usize) -> String {
    let (a, b, c, zr, s) = ("z1", "z2", "z3", format!("z{r}"), format!("z{}", r + 1));
    format!(
        "{zr}^3 + {a}^2*{c}*{zr} - {a}^3*{s} + 2*{b}*{c}*{zr}^2 - 3*{a}*{b}*{zr}*{s} \
         + {a}^2*{c}^2*{zr} - {a}*{b}^2*{c}*{s} - {b}^3*{s}^2"
    )
}

fn cubic_survivor(p: u64, r: usize) -> Result<u32, String> {
    let ring = z_ring(p, r);
    let f = parse_polynomial(&cubic_text(r), &ring).map_err(|e| e.to_string())?;
    let k = (p - 1) as u32;
    let mut exps = vec![0u32; r + 1];
    for i in [0, 1, r - 1, r] {
        exps[i] = k;
    }
    Ok(f.pow(p - 1).coefficient_of(&Monomial::new(exps)).value())
}

/// The literal statement: coefficient = (-3)^(p-1) mod p, nonzero, for p in {5,7};
/// zero at p = 3.
fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for p in [5u64, 7] {
        let got = cubic_survivor(p, 4)?;
        let claimed = rem((-3i128).pow((p - 1) as u32), p);
        notes.push(format!("p={p}: {got} vs (-3)^{} = {claimed}", p - 1));
        if got != claimed || got == 0 {
            failures.push(format!("p={p}: coefficient {got}, claimed {claimed}"));
        }
    }
    let at3 = cubic_survivor(3, 4)?;
    if at3 != 0 {
        failures.push(format!("p=3: coefficient {at3}, expected 0"));
    }
    notes.push(format!("p=3: {at3}"));
    if failures.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(failures.join("; "))
    }
}

/// The corrected statement, reported alongside criterion 3.
fn criterion_3_corrected() -> Outcome {
    let fact = |n: u64| (1..=n as i128).product::<i128>();
    let closed = |p: u64| -> i128 {
        (0..=(p - 1) / 3)
            .map(|a| fact(p - 1) / (fact(a).pow(3) * fact(p - 1 - 3 * a)) * (-3i128).pow((p - 1 - 3 * a) as u32))
            .sum()
    };
    let mut notes = Vec::new();
    for p in [3u64, 5, 7] {
        let got = cubic_survivor(p, 4)?;
        let want = rem(closed(p), p);
        check(got == want, || format!("p={p}: {got} vs closed form {want}"))?;
        check((got == 0) == (p == 3), || format!("p={p}: unexpected vanishing behaviour"))?;
        notes.push(format!("p={p}: {got}"));
    }
    Ok(format!("coefficient matches the full multiset sum, nonzero iff p != 3 ({})", notes.join(", ")))
}

fn criterion_4() -> Outcome {
    let r2 = z_ring(2, 2);
    let pinch = parse_polynomial("z2^2 - z1^2*z3", &r2).map_err(|e| e.to_string())?;
    let v = fedder_hypersurface(&pinch).map_err(|e| e.to_string())?;
    check(v.outcome == FpurityOutcome::NotFPure && v.verify().unwrap_or(false), || "pinch at p=2".into())?;
    check(in_bracket_of_maximal(&pinch, 2), || "pinch not in m^[2] by inspection".into())?;
    let r3 = z_ring(3, 4);
    let cubic = parse_polynomial(&cubic_text(4), &r3).map_err(|e| e.to_string())?;
    let v = fedder_hypersurface(&cubic).map_err(|e| e.to_string())?;
    check(v.outcome == FpurityOutcome::NotFPure && v.verify().unwrap_or(false), || "case 1b at p=3".into())?;
    check(in_bracket_of_maximal(&cubic.pow(2), 3), || "1b square not in m^[3] by inspection".into())?;
    Ok("pinch point at p=2 and case 1b at p=3 are NotFPure".into())
}

fn criterion_5() -> Outcome {
    for p in [2u64, 3, 5] {
        let ring = z_ring(p, 30);
        let f = parse_polynomial("(z1*z2*z3*z4*z5*z6*z7*z8)^4", &ring).map_err(|e| e.to_string())?;
        let v = pigeonhole_precheck(&f).map_err(|e| e.to_string())?.ok_or_else(|| format!("p={p}: bound did not fire"))?;
        check(v.outcome == FpurityOutcome::NotFPure && v.verify().unwrap_or(false), || format!("p={p}"))?;
        check(f.order_at_origin().unwrap() == 32, || "multiplicity is not 32".into())?;
        if p == 2 {
            check(in_bracket_of_maximal(&f, 2), || "f not in m^[2] by expansion".into())?;
            let direct = fedder_hypersurface(&f).map_err(|e| e.to_string())?;
            check(direct.outcome == FpurityOutcome::NotFPure, || "direct Fedder disagrees".into())?;
        }
        let rep = verify_case(CaseId::Doherty, PrimeChar::new(p).unwrap(), 30, None, DohertyOptions::default())
            .map_err(|e| e.to_string())?;
        check(rep.matches, || format!("zoo doherty p={p}"))?;
    }
    Ok("pigeonhole fires for p in {2,3,5}; p=2 expansion lies in m^[2]".into())
}

fn criterion_6() -> Outcome {
    let ring = PolyRing::new(PrimeChar::new(2).unwrap(), ["a", "b", "c"], fpure_core::MonomialOrder::GrevLex).unwrap();
    let f = parse_polynomial("b^2 - a*c^2", &ring).map_err(|e| e.to_string())?;
    let v = fedder_hypersurface(&f).map_err(|e| e.to_string())?;
    check(v.outcome == FpurityOutcome::NotFPure && v.verify().unwrap_or(false), || "Fedder verdict".into())?;
    let q = QuotientPresentation::new(Ideal::new(&ring, [f.clone()]).unwrap()).map_err(|e| e.to_string())?;
    let (a, b, c) = (ring.var(0), ring.var(1), ring.var(2));
    let fi = finjective_cm_quotient(&q, &[a.clone(), c.clone()], ClosureOptions::default(), false)
        .map_err(|e| e.to_string())?;
    check(fi.outcome == FinjectivityOutcome::NotFInjective, || format!("{:?}", fi.outcome))?;
    let FinjectivityDetail::Closure { report, .. } = &fi.detail else { return Err("no closure detail".into()) };
    check(report.status == ClosureStatus::NotClosed { level: 1 }, || format!("{:?}", report.status))?;
    check(report.witness.as_ref() == Some(&b), || format!("witness {:?}", report.witness.as_ref().map(|w| w.to_string())))?;
    let j = Ideal::new(&ring, [a.clone(), c.clone()]).unwrap();
    check(report.verify_witness(&j, &q).unwrap_or(false), || "witness re-verification".into())?;
    // independent membership: b^2 ∈ (a^2, c^2, f) and b ∉ (a, c, f)
    check(macaulay_member(&b.pow(2), &[a.pow(2), c.pow(2), f.clone()], 4), || "b^2 membership".into())?;
    check(!macaulay_member(&b, &[a, c, f], 6), || "b non-membership".into())?;
    Ok("NotFPure; parameters (a,c) give NotFInjective with witness b at e=1; both recheck".into())
}

fn criterion_7() -> Outcome {
    for p in [2u64, 3, 5] {
        let ring = PolyRing::new(PrimeChar::new(p).unwrap(), ["x", "y"], fpure_core::MonomialOrder::GrevLex).unwrap();
        let (x, y) = (ring.var(0), ring.var(1));
        let q = QuotientPresentation::new(Ideal::new(&ring, [&x * &y]).unwrap()).unwrap();
        let j = Ideal::new(&ring, [&x - &y]).unwrap();
        let report = is_frobenius_closed(&j, &q, ClosureOptions { e_max: 3, early_stop: false }).map_err(|e| e.to_string())?;
        check(report.status == ClosureStatus::ClosedUpTo(3) && report.witness.is_none(), || {
            format!("p={p}: {:?}", report.status)
        })?;
    }
    Ok("(x-y) in k[x,y]/(xy) has no witness up to e=3 for p in {2,3,5}".into())
}

fn random_ideal(seed: u64) -> (Ideal, Vec<Polynomial>) {
    let mut g = rng(seed);
    let p = [2u64, 3, 5, 7][g.gen_range(0..4)];
    let n = g.gen_range(1..=3);
    let r = ring(p, &["x", "y", "z"][..n]);
    let k = g.gen_range(1..=3);
    let mut gens: Vec<Polynomial> = (0..k).map(|_| random_poly(&r, &mut g, 3, 3, false)).filter(|f| !f.is_zero()).collect();
    if gens.is_empty() {
        gens.push(r.var(0));
    }
    (Ideal::new(&r, gens.clone()).unwrap(), gens)
}

fn criterion_8() -> Outcome {
    for seed in 0..100 {
        let (i, _) = random_ideal(seed);
        let b = i.basis().map_err(|e| format!("seed {seed}: {e}"))?;
        check(b.satisfies_buchberger_criterion(), || format!("seed {seed}: S-pair criterion fails"))?;
    }
    let mut agreements = 0;
    for seed in 0..20u64 {
        let mut g = rng(1000 + seed);
        let p = [2u64, 3, 5, 7][g.gen_range(0..4)];
        let r = ring(p, &["x", "y", "z"]);
        let mut gens = Vec::new();
        for _ in 0..g.gen_range(1..=3) {
            let d = g.gen_range(1..=3);
            let f = random_homogeneous(&r, &mut g, 3, d);
            if !f.is_zero() {
                gens.push(f);
            }
        }
        if gens.is_empty() {
            gens.push(r.var(0));
        }
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let d = g.gen_range(1..=6);
        let f = random_homogeneous(&r, &mut g, 4, d);
        let member = &random_homogeneous(&r, &mut g, 2, 6u32.saturating_sub(gens[0].total_degree().unwrap() as u32)) * &gens[0];
        for h in [f, member] {
            let deg = if h.is_zero() { 0 } else { h.total_degree().unwrap() as u32 };
            let gb = i.contains(&h).map_err(|e| e.to_string())?;
            check(gb == macaulay_member(&h, &gens, deg), || format!("seed {seed}: {h} in {i}"))?;
            agreements += 1;
        }
    }
    Ok(format!("100 bases pass the S-pair criterion; {agreements} membership checks agree with the Macaulay oracle"))
}

fn criterion_9() -> Outcome {
    const CASES: [(u64, u32); 6] = [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (5, 2)];
    for seed in 0..100 {
        let mut g = rng(seed + 40_000);
        let (p, e) = CASES[g.gen_range(0..CASES.len())];
        let q = p.pow(e);
        let n = g.gen_range(2..=3);
        let r = ring(p, &["x", "y", "z"][..n]);
        let (a, b) = (random_poly(&r, &mut g, 3, 2, false), random_poly(&r, &mut g, 3, 2, false));
        check((&a + &b).pow(q) == &a.pow(q) + &b.pow(q), || format!("seed {seed}: additivity"))?;

        // monomial or binomial generators
        let mut gens = Vec::new();
        for _ in 0..g.gen_range(1..=2) {
            let f = random_poly(&r, &mut g, 2, 2, true);
            if !f.is_zero() {
                gens.push(f);
            }
        }
        if gens.is_empty() {
            gens.push(r.var(0));
        }
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let err = |e: fpure_core::Error| format!("seed {seed}: {e}");

        let h = random_poly(&r, &mut g, 2, 1, false);
        let mut other = gens.clone();
        let combo = gens.iter().fold(r.zero(), |acc, f| &acc + &(&h * f));
        other[0] = &other[0] + &combo;
        other.push(combo);
        let j = Ideal::new(&r, other).unwrap();
        check(i.same_ideal(&j).map_err(err)?, || format!("seed {seed}: generating sets differ"))?;
        let (pi, pj) = (frobenius_power(&i, e).map_err(err)?, frobenius_power(&j, e).map_err(err)?);
        check(pi.same_ideal(&pj).map_err(err)?, || format!("seed {seed}: bracket power depends on generators"))?;

        let root = pe_th_root(&i, e).map_err(err)?;
        check(i.is_subset_of(&frobenius_power(&root, e).map_err(err)?).map_err(err)?, || format!("seed {seed}: I ⊄ root^[q]"))?;
        let back = pe_th_root(&pi, e).map_err(err)?;
        check(i.is_subset_of(&back).map_err(err)?, || format!("seed {seed}: I ⊄ root(I^[q])"))?;
    }
    Ok("additivity, generator independence and both Galois inclusions on 100 instances".into())
}

fn criterion_10() -> Outcome {
    use rand::SeedableRng;
    let mut g = rand_chacha::ChaCha8Rng::seed_from_u64(10);
    for i in 0..200 {
        let p = [2u64, 3, 5, 7, 101][g.gen_range(0..5)];
        let n = g.gen_range(1..=4);
        let order = if g.gen_bool(0.5) { fpure_core::MonomialOrder::Lex } else { fpure_core::MonomialOrder::GrevLex };
        let r = PolyRing::indexed(PrimeChar::new(p).unwrap(), "v", n, order).unwrap();
        let f = random_poly(&r, &mut g, 6, 5, false);
        let back = parse_polynomial(&f.to_string(), &r).map_err(|e| format!("case {i}: {e}"))?;
        check(back == f, || format!("case {i}: {f} reparsed as {back}"))?;
    }
    let schema = common::schema();
    let mut validated = 0;
    for (args, code) in common::EXIT_MATRIX {
        let run = common::fpure(args);
        check(run.code == *code, || format!("{args:?}: exit {} (expected {code})", run.code))?;
        if args == &["nonsense"] {
            continue;
        }
        let mut with_json = args.to_vec();
        with_json.push("--json");
        let run = common::fpure(&with_json);
        if run.stdout.is_empty() {
            continue;
        }
        let errors = common::schema_errors(&schema, &run.json());
        check(errors.is_empty(), || format!("{args:?}: {errors:?}"))?;
        validated += 1;
    }
    Ok(format!("200 round trips; {} exit-code fixtures; {validated} reports schema-valid", common::EXIT_MATRIX.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "zoo sweep p in {5,7,11,13}, r <= 5", 60, criterion_1),
        (2, "pinch point normal form identity", 1, criterion_2),
        (3, "case 1b survivor equals (-3)^(p-1)", 30, criterion_3),
        (4, "excluded characteristics are NotFPure", 1, criterion_4),
        (5, "multiplicity-32 pigeonhole bound", 10, criterion_5),
        (6, "negative oracle ring k[a,b,c]/(b^2-ac^2)", 1, criterion_6),
        (7, "parameter ideal of the node is Frobenius closed", 5, criterion_7),
        (8, "Groebner property suite", 120, criterion_8),
        (9, "Frobenius algebra properties", 60, criterion_9),
        (10, "CLI contract", 10, criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (n, name, budget, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let pass = result.is_ok() && in_time;
        let detail = match &result {
            Ok(s) => s.clone(),
            Err(s) => s.clone(),
        };
        let timing = format!("{:.2}s/{budget}s{}", elapsed.as_secs_f64(), if in_time { "" } else { " OVER BUDGET" });
        println!("criterion {n:>2}: {} [{timing}] {name}: {detail}", if pass { "PASS" } else { "FAIL" });
        let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == n);
        match (pass, known) {
            (false, Some((_, why))) => println!("              known unattainable: {why}"),
            (false, None) => unexpected.push(format!("criterion {n} failed")),
            (true, Some(_)) => unexpected.push(format!("criterion {n} passed but is listed as unattainable")),
            (true, None) => {}
        }
        if n == 3 {
            let corrected = criterion_3_corrected();
            let ok = corrected.is_ok();
            let detail = corrected.unwrap_or_else(|e| e);
            println!("criterion  3 (corrected): {} {detail}", if ok { "PASS" } else { "FAIL" });
            if !ok {
                unexpected.push("corrected criterion 3 failed".into());
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("acceptance: {}", unexpected.join("; "));
        std::process::exit(1);
    }
    println!("acceptance: all attainable criteria pass");
}
