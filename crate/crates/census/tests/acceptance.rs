//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, with timing.
//!
//! Runs without the libtest harness. A failing criterion makes the process
//! exit nonzero unless the failure is listed in `DOCUMENTED` as a known
//! disagreement with a printed value.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sigpet::clustering::{cluster_report, is_clusterable};
use sigpet::coloring::{balanced_expansion, chi3_difference, chromatic_numbers, count_colorations};
use sigpet::frustration::{alpha_k, frustration_index, frustration_number};
use sigpet::graph::edges_of;
use sigpet::six::petersen_negative_circles;
use sigpet::{
    aut_signed, enumerate_cycles, max_inclusterability, orbit_counts, swaut, FiniteGroup, Permutation, Petersen,
    SignedGraph, SixType,
};
use sigpet_census::expected as x;
use sigpet_census::products::{agreement, check_p32_table, check_p33_rules, Agreement};
use sigpet_census::run_census;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Criteria expected to fail because a printed value is wrong.
const DOCUMENTED: &[usize] = &[5];

fn ensure(ok: bool, message: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message.into())
    }
}

fn within(elapsed: Duration, budget: Duration, what: &str) -> Result<(), String> {
    ensure(
        elapsed < budget,
        format!("{what} took {elapsed:.2?}, budget {budget:?}"),
    )
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn standards() -> Vec<SignedGraph> {
    SixType::ALL.iter().map(|t| t.standard()).collect()
}

/// Negative circles of length 5 and 6 by direct circle enumeration.
fn circle_scan(s: &SignedGraph) -> (i64, i64) {
    let cycles = enumerate_cycles(s.graph(), 6).unwrap();
    let negative = |len: usize| {
        cycles
            .iter()
            .filter(|c| c.len() == len && (c.edges() & s.negative_edges()).count_ones() % 2 == 1)
            .count() as i64
    };
    (negative(5), negative(6))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for (i, s) in standards().iter().enumerate() {
        let (c5, c6) = petersen_negative_circles(s.petersen_mask().map_err(err)?);
        let scan = circle_scan(s);
        ensure(
            (c5 as i64, c6 as i64) == (x::T1_C5[i], x::T1_C6[i]) && scan == (x::T1_C5[i], x::T1_C6[i]),
            format!("{}: c5/c6 {c5}/{c6}, scan {scan:?}", SixType::ALL[i]),
        )?;
    }
    within(start.elapsed(), Duration::from_secs(1), "T1")?;
    Ok("c5-/c6- match for all six classes".into())
}

fn criterion_2() -> Outcome {
    for (i, s) in standards().iter().enumerate() {
        let l = frustration_index(s).map_err(err)?.0 as i64;
        let l0 = frustration_number(s).map_err(err)?.0 as i64;
        ensure(
            l == x::T2_L[i] && l0 == x::T3_L0[i],
            format!("{}: l = {l}, l0 = {l0}", SixType::ALL[i]),
        )?;
    }
    let start = Instant::now();
    let mut mismatches = 0;
    for mask in 0..0x8000u16 {
        let s = SignedGraph::petersen(mask).map_err(err)?;
        let l = frustration_index(&s).map_err(err)?.0;
        let l0 = frustration_number(&s).map_err(err)?.0;
        if l0 != l {
            mismatches += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(60), "full l0 scan")?;
    ensure(mismatches == 0, format!("{mismatches} signatures with l0 != l"))?;
    Ok(format!("l0 = l on all 32768 signatures ({:.2?})", start.elapsed()))
}

fn criterion_3() -> Outcome {
    let mut slowest = Duration::ZERO;
    for (i, s) in standards().iter().enumerate() {
        let aut = aut_signed(s).map_err(err)?;
        let start = Instant::now();
        let sw = swaut(s).map_err(err)?;
        slowest = slowest.max(start.elapsed());
        let got = (
            aut.order() as i64,
            aut.label().to_string(),
            sw.order() as i64,
            sw.label().to_string(),
        );
        let want = (
            x::T4_AUT_ORDER[i],
            x::T4_AUT_LABEL[i].to_string(),
            x::T4_SWAUT_ORDER[i],
            x::T4_SWAUT_LABEL[i].to_string(),
        );
        ensure(got == want, format!("{}: {got:?}, expected {want:?}", SixType::ALL[i]))?;
    }
    within(slowest, Duration::from_secs(1), "SwAut construction")?;
    Ok(format!("orders and labels match, slowest SwAut {slowest:.2?}"))
}

fn criterion_4() -> Outcome {
    let report = run_census().map_err(err)?;
    for (i, s) in standards().iter().enumerate() {
        let (copies, classes) = orbit_counts(s).map_err(err)?;
        let c = &report.classes[i];
        let quotient = (copies as i64, classes as i64);
        let tally = (c.minimal_signatures as i64, c.switching_classes as i64);
        let want = (x::T5_COPIES[i], x::T5_SWITCHING_CLASSES[i]);
        ensure(
            quotient == want && tally == want,
            format!("{}: quotients {quotient:?}, census {tally:?}", SixType::ALL[i]),
        )?;
        ensure(
            c.signatures == 512 * c.switching_classes,
            "signatures != 512 * switching classes",
        )?;
    }
    ensure(
        report.total_signatures == 32768 && report.total_switching_classes == 64,
        "census totals",
    )?;
    Ok("group-order quotients equal the census tally".into())
}

fn criterion_5() -> Outcome {
    for &(r, c, v) in x::P32_WORKED {
        ensure(
            agreement(r, c, v).map_err(err)? == Agreement::Exact,
            format!("worked example {r} * {c}"),
        )?;
    }
    let (checks, failures) = check_p33_rules();
    ensure(
        failures == 0,
        format!("P33: {failures} of {checks} products break the rule"),
    )?;
    let cells = check_p32_table(x::P32_PRODUCTS).map_err(err)?;
    let differing: Vec<_> = cells.iter().filter(|c| c.agreement != Agreement::Exact).collect();
    let sign_only = differing.iter().filter(|c| c.agreement == Agreement::SignOnly).count();
    for c in &differing {
        println!(
            "        {} * {}: printed {}, computed {}",
            c.row, c.col, c.printed, c.computed
        );
    }
    ensure(
        differing.is_empty(),
        format!(
            "{} of {} P32 cells differ from the printed value ({} sign only, {} other element); \
             worked examples and {checks} P33 products agree",
            differing.len(),
            cells.len(),
            sign_only,
            differing.len() - sign_only
        ),
    )?;
    Ok(format!("{} P32 cells and {checks} P33 products agree", cells.len()))
}

fn criterion_6() -> Outcome {
    for (i, s) in standards().iter().enumerate() {
        let (chi, chi_star) = chromatic_numbers(s).map_err(err)?;
        ensure(
            (chi as i64, chi_star as i64) == (x::T8_CHI[i], x::T8_CHI_STAR[i]),
            format!("{}: ({chi}, {chi_star})", SixType::ALL[i]),
        )?;
    }
    Ok("(chi, chi*) match".into())
}

/// Proper colorations by plain enumeration of every assignment.
fn naive_count(s: &SignedGraph, palette: &[i32]) -> u64 {
    let g = s.graph();
    let n = g.vertex_count();
    let y = palette.len();
    let edges: Vec<(usize, usize, i32)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| (u, v, s.sign(e).value()))
        .collect();
    let mut digits = vec![0usize; n];
    let mut count = 0;
    loop {
        if edges
            .iter()
            .all(|&(u, v, sign)| palette[digits[v]] != sign * palette[digits[u]])
        {
            count += 1;
        }
        let mut i = 0;
        while i < n && digits[i] + 1 == y {
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
        digits[i] += 1;
    }
}

fn criterion_7() -> Outcome {
    for (i, s) in standards().iter().enumerate() {
        let start = Instant::now();
        let name = SixType::ALL[i];
        for k in 0..=2 {
            let a = alpha_k(s, k).map_err(err)? as i64;
            ensure(a == x::T9_ALPHA[k][i], format!("{name}: alpha{k} = {a}"))?;
        }
        let neg: i64 = (0..=2)
            .map(|k| alpha_k(&s.negate(), k).map(|a| a as i64))
            .sum::<Result<i64, _>>()
            .map_err(err)?;
        ensure(
            neg == x::T9_NEG_ALPHA_SUM[i],
            format!("{name}: negation alpha sum {neg}"),
        )?;
        let (_, c6) = circle_scan(s);
        ensure(c6 == x::T1_C6[i], format!("{name}: c6- = {c6}"))?;
        let formula = chi3_difference(s).map_err(err)?;
        let direct = naive_count(s, &[-1, 0, 1]) as i64;
        let search = count_colorations(s, 1, false).map_err(err)? as i64;
        ensure(
            formula == x::T9_DIFFERENCE[i] && direct - 120 == formula && search == direct && direct == x::T9_CHI3[i],
            format!("{name}: formula {formula}, enumeration {direct}, search {search}"),
        )?;
        within(start.elapsed(), Duration::from_secs(10), name.name())?;
    }
    Ok("difference formula equals 3^10 enumeration for every class".into())
}

fn criterion_8() -> Outcome {
    let mut col = 0;
    for t in SixType::ALL {
        for s in [t.standard(), t.standard().negate()] {
            let r = cluster_report(&s).map_err(err)?;
            let clun = r.clun.map(|c| c as i64);
            ensure(
                clun == x::T10_CLUN[col] && r.q as i64 == x::T10_Q[col],
                format!("{}: clun {clun:?}, Q {}", x::T10_COLUMNS[col], r.q),
            )?;
            col += 1;
        }
    }
    let g = Petersen::get().graph();
    let start = Instant::now();
    let full = max_inclusterability(g, false).map_err(err)?;
    let elapsed = start.elapsed();
    let shortcut = max_inclusterability(g, true).map_err(err)?;
    within(elapsed, Duration::from_secs(600), "full inclusterability scan")?;
    ensure(
        full as i64 == x::MAX_INCLUSTERABILITY && shortcut == full,
        format!("max Q: full {full}, shortcut {shortcut}"),
    )?;
    Ok(format!(
        "T10 matches; max Q = 3 by full scan ({elapsed:.2?}) and shortcut"
    ))
}

fn check_group_axioms<T: Eq + std::hash::Hash + Clone>(g: &FiniteGroup<T>) -> Result<(), String> {
    let n = g.order();
    let e = g.identity();
    for a in 0..n {
        ensure(g.mul(e, a) == a && g.mul(a, e) == a, "identity")?;
        ensure(g.mul(a, g.inverse(a)) == e, "inverse")?;
    }
    for a in (0..n).step_by(7) {
        for b in 0..n {
            for c in (0..n).step_by(5) {
                ensure(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), "associativity")?;
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    const SAMPLES: usize = 1000;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let p = Petersen::get();
    let g = p.graph();
    let cycles = enumerate_cycles(g, 10).map_err(err)?;
    let auts = sigpet::automorphisms(g).map_err(err)?;
    for _ in 0..SAMPLES {
        let mask: u16 = rng.gen_range(0..0x8000);
        let x: u32 = rng.gen_range(0..1024);
        let s = SignedGraph::petersen(mask).map_err(err)?;
        let t = s.switch_set(x);
        let same = |f: &dyn Fn(&SignedGraph) -> Result<u64, sigpet::Error>| -> Result<bool, String> {
            Ok(f(&s).map_err(err)? == f(&t).map_err(err)?)
        };
        ensure(
            same(&|z| frustration_index(z).map(|r| r.0 as u64))?,
            format!("l changes under switching {mask:#x}"),
        )?;
        ensure(
            same(&|z| frustration_number(z).map(|r| r.0 as u64))?,
            format!("l0 changes under switching {mask:#x}"),
        )?;
        ensure(
            s.negative_circle_counts(&[5, 6, 8, 9]).map_err(err)?
                == t.negative_circle_counts(&[5, 6, 8, 9]).map_err(err)?,
            format!("circle signs change under switching {mask:#x}"),
        )?;
        ensure(
            same(&|z| count_colorations(z, 1, false))?,
            "chi(3) changes under switching",
        )?;
        ensure(
            same(&|z| count_colorations(z, 1, true))?,
            "chi*(2) changes under switching",
        )?;
        let (left, right) = balanced_expansion(&s, 1).map_err(err)?;
        ensure(
            left == right,
            format!("balanced expansion {left} != {right} at {mask:#x}"),
        )?;
        let lonely = cycles
            .iter()
            .any(|c| (c.edges() & s.negative_edges()).count_ones() == 1);
        let contraction = g.contract(s.positive_edges());
        let loop_free = !edges_of(s.negative_edges()).any(|e| {
            let (u, v) = g.edges()[e];
            contraction.origin.iter().any(|&o| o >> u & 1 == 1 && o >> v & 1 == 1)
        });
        let library = is_clusterable(&s).map_err(err)?.is_clusterable();
        ensure(
            !lonely == loop_free && loop_free == library && contraction.has_loop == !loop_free,
            format!("Davis criterion disagrees at {mask:#x}"),
        )?;
        let alpha = &auts[rng.gen_range(0..auts.len())];
        ensure(
            sigpet::six::classify_mask(mask)
                == sigpet::six::classify_six(&s.permute(alpha).map_err(err)?).map_err(err)?,
            "class changes under Aut P",
        )?;
    }
    let mut groups = 0;
    let mut masks: Vec<u16> = SixType::ALL.iter().map(|t| t.standard_mask()).collect();
    masks.extend((0..60).map(|_| rng.gen_range(0..0x8000u16)));
    for mask in masks {
        let s = SignedGraph::petersen(mask).map_err(err)?;
        let aut = aut_signed(&s).map_err(err)?;
        let sw = swaut(&s).map_err(err)?;
        check_group_axioms(&aut)?;
        check_group_axioms(&sw)?;
        let mut projection: Vec<&Permutation> = sw.elements().iter().map(|e| e.alpha()).collect();
        projection.sort();
        projection.dedup();
        ensure(
            projection.len() == sw.order(),
            format!("projection not injective at {mask:#x}"),
        )?;
        groups += 2;
    }
    Ok(format!(
        "{SAMPLES} random signatures and switchings, {groups} groups checked"
    ))
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let run = || -> Result<Vec<u64>, String> {
        standards()
            .iter()
            .map(|s| count_colorations(s, 2, true).map_err(err))
            .collect()
    };
    let first = run()?;
    let second = run()?;
    ensure(first == second, "zero-free counts are not deterministic")?;
    for (i, s) in standards().iter().enumerate() {
        let naive = naive_count(s, &[-2, -1, 1, 2]);
        ensure(
            naive == first[i],
            format!("{}: search {} vs enumeration {naive}", SixType::ALL[i], first[i]),
        )?;
    }
    within(start.elapsed(), Duration::from_secs(60), "zero-free counts")?;
    let mut distinct = first.clone();
    distinct.sort();
    distinct.dedup();
    Ok(format!(
        "chi*(4) = {first:?} ({} distinct values, {:.2?})",
        distinct.len(),
        start.elapsed()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("T1 negative pentagons and hexagons", criterion_1),
        ("T2/T3 frustration index and number", criterion_2),
        ("T4 Aut and SwAut", criterion_3),
        ("T5 copies and switching classes", criterion_4),
        ("P32 and P33 multiplication tables", criterion_5),
        ("T8 chromatic numbers", criterion_6),
        ("T9 chi(3) difference formula", criterion_7),
        ("T10 clusterability and max Q", criterion_8),
        ("property suites", criterion_9),
        ("zero-free counts at 4", criterion_10),
    ];
    let mut unexpected = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {n:>2} {name} ({elapsed:.2?}): {detail}"),
            Err(detail) => {
                let known = DOCUMENTED.contains(&n);
                if !known {
                    unexpected += 1;
                }
                let tag = if known { " [documented]" } else { "" };
                println!("FAIL {n:>2} {name} ({elapsed:.2?}){tag}: {detail}");
            }
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed");
        std::process::exit(1);
    }
}
