//! Acceptance criteria 1 to 9, one PASS/FAIL line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ulocal::bruhat::symmetric_unit_census;
use ulocal::localring::{Ring, RingSpec};
use ulocal::reduce::det_image;
use ulocal::suite::{run_suite, SuiteReport};

type Criterion = fn() -> Result<Outcome, String>;

struct Outcome {
    ok: bool,
    note: String,
}

fn suite(name: &str) -> Result<SuiteReport, String> {
    let rep = run_suite(name).map_err(|e| format!("{name}: {e}"))?;
    for c in rep.claims.iter().filter(|c| !c.passed) {
        println!("    failed claim: {} ({} of {} failed) {}", c.name, c.failures, c.checked, c.detail);
    }
    Ok(rep)
}

fn checked(rep: &SuiteReport, prefix: &str) -> u64 {
    rep.claims.iter().filter(|c| c.name.starts_with(prefix)).map(|c| c.checked).sum()
}

fn detail_u64(rep: &SuiteReport, claim: &str, key: &str) -> Option<u64> {
    rep.claims.iter().find(|c| c.name == claim)?.detail.get(key)?.as_u64()
}

fn c1() -> Result<Outcome, String> {
    let rep = suite("bruhat-z25")?;
    // 5^4 * 24
    let order = detail_u64(&rep, "closure order", "order");
    let ok = rep.ok && order == Some(15000) && checked(&rep, "factor round-trips") == 15000;
    Ok(Outcome { ok, note: format!("order {order:?}") })
}

fn c2() -> Result<Outcome, String> {
    let rep = suite("presentation")?;
    let f5 = detail_u64(&rep, "F5: generated order", "generated");
    let f25 = detail_u64(&rep, "F25: generated order", "generated");
    let f25_brute = detail_u64(&rep, "F25: generated order", "brute_force");
    let words = checked(&rep, "F5: rewriting") + checked(&rep, "F25: rewriting");
    let ok = rep.ok && f5 == Some(120) && f25.is_some() && f25 == f25_brute && words == 2000;
    Ok(Outcome { ok, note: format!("orders F5 {f5:?}, F25 {f25:?}, {words} words") })
}

/// Independent count of invertible 2x2 matrices fixed by the conjugate transpose:
/// diagonal entries in the fixed field, off-diagonal entries free.
fn count_invertible_hermitian_2x2(r: &Ring) -> (u64, u64) {
    let fixed: Vec<_> = r.iter().filter(|&a| r.is_symmetric(a)).collect();
    let (mut total, mut inv) = (0, 0);
    for &a in &fixed {
        for &d in &fixed {
            for b in r.iter() {
                total += 1;
                let det = r.sub(r.mul(a, d), r.mul(b, r.star(b)));
                if r.is_unit(det) {
                    inv += 1;
                }
            }
        }
    }
    (total, inv)
}

fn c3() -> Result<Outcome, String> {
    let rep = suite("correction-q5")?;
    let mut ok = rep.ok;
    let mut notes = Vec::new();
    for spec in [RingSpec::zmod(5, 1), RingSpec::galois(5, 1)] {
        let r = Ring::new(spec).unwrap();
        let census = symmetric_unit_census(&r, 2).map_err(|e| e.to_string())?;
        let (total, inv) = count_invertible_hermitian_2x2(&r);
        ok &= census.symmetric == total && census.invertible_symmetric == inv;
        notes.push(format!("{inv}/{total}"));
    }
    Ok(Outcome { ok, note: format!("m = 2 counts {}", notes.join(", ")) })
}

fn c4() -> Result<Outcome, String> {
    let rep = suite("gauss-identities")?;
    let n = checked(&rep, "");
    Ok(Outcome { ok: rep.ok, note: format!("{n} identities") })
}

fn c5() -> Result<Outcome, String> {
    let rep = suite("weil-z5")?;
    let hom = checked(&rep, "n = 1: homomorphism");
    let inter = checked(&rep, "n = 1: intertwining");
    let inter2 = checked(&rep, "n = 2: intertwining");
    let rel2: Vec<u64> = rep
        .claims
        .iter()
        .filter(|c| c.name.starts_with("n = 2: ") && !c.name.contains("sigma^2"))
        .filter(|c| !c.name.contains("commutant"))
        .map(|c| c.checked)
        .collect();
    // 120^2 pairs, 120 elements times 3 Heisenberg generators
    let ok = rep.ok && hom == 14400 && inter == 360 && inter2 == 200 && rel2.iter().all(|&c| c == 200);
    Ok(Outcome { ok, note: format!("{hom} pairs, {inter} intertwinings, n = 2 relation counts {rel2:?}") })
}

fn c6() -> Result<Outcome, String> {
    let rep = suite("transvections")?;
    let sp = checked(&rep, "Sp(2, Z/25)");
    let su = checked(&rep, "SU(4");
    Ok(Outcome { ok: rep.ok && sp == 15000 && su == 1000, note: format!("{sp} symplectic, {su} special unitary") })
}

fn c7() -> Result<Outcome, String> {
    let rep = suite("witt")?;
    let n = checked(&rep, "");
    Ok(Outcome { ok: rep.ok && n == 2000, note: format!("{n} sets") })
}

fn c8() -> Result<Outcome, String> {
    let rep = suite("reduction")?;
    let lifts = checked(&rep, "") - 1;
    // a + bt has norm a^2, so norm one means a = 1 or a = -1; 1 + m keeps a = 1
    let d = Ring::new(RingSpec::dual(5, 1)).unwrap();
    let image = det_image(&d, 1).map_err(|e| e.to_string())?;
    let ok = rep.ok && lifts == 600 && image.norm_one.len() == 10 && image.claimed_image.len() == 5;
    Ok(Outcome { ok, note: format!("{lifts} lifts, det image size {}", image.claimed_image.len()) })
}

fn c9() -> Result<Outcome, String> {
    let rep = suite("controls")?;
    Ok(Outcome { ok: rep.ok && rep.claims.len() == 4, note: String::new() })
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion, u64); 9] = [
        ("1 Bruhat completeness", c1, 60),
        ("2 presentation", c2, 300),
        ("3 correction", c3, 10),
        ("4 Gauss identities", c4, 10),
        ("5 Weil representation", c5, 300),
        ("6 transvection generation", c6, 300),
        ("7 Witt extension", c7, 300),
        ("8 reduction surjectivity", c8, 300),
        ("9 controls", c9, 300),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut all = true;
    for (name, f, limit) in criteria {
        if !filter.is_empty() && !filter.iter().any(|s| name.contains(s.as_str())) {
            continue;
        }
        let start = Instant::now();
        let res = f();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (ok, note) = match res {
            Ok(o) => (o.ok && in_time, o.note),
            Err(e) => (false, e),
        };
        all &= ok;
        println!(
            "criterion {name}: {} ({:.2} s, limit {limit} s) {note}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
