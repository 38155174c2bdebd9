//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hermitian_codes::cli::{self, Command, RunConfig, SmallwordsAction, Suite};
use hermitian_codes::codes::{Budget, Distance};
use hermitian_codes::cohomology;
use hermitian_codes::geometry::{all_lines, HermitianCurve};
use hermitian_codes::gf::{Elem, Field};
use hermitian_codes::improve;
use hermitian_codes::minwords::{self, Family};
use hermitian_codes::onepoint;
use hermitian_codes::smallwords::{self, CaseTag};
use serde_json::Value;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_json(command: Command, workers: Option<usize>) -> Result<(Value, bool, String), String> {
    let mut cfg = RunConfig::new(command);
    cfg.workers = workers;
    cfg.counterexample = std::env::temp_dir().join("hermitian-acceptance-counterexample.json");
    let out = cli::run(&cfg).map_err(|e| e.to_string())?;
    let v: Value = serde_json::from_str(&out.json).map_err(|e| e.to_string())?;
    Ok((v["result"].clone(), out.passed, out.json))
}

fn verify(suite: Suite) -> Command {
    Command::Verify { suite }
}

// Brute-force rational points of y^q z + y z^q = x^{q+1}, P_inf included.
fn brute_points(f: &Field, q: u64) -> Vec<[Elem; 3]> {
    let mut pts = Vec::new();
    for x in f.elements() {
        for y in f.elements() {
            if f.add(f.powu(y, q), y) == f.powu(x, q + 1) {
                pts.push([x, y, Elem::ONE]);
            }
        }
    }
    pts.push([Elem::ZERO, Elem::ONE, Elem::ZERO]);
    pts
}

fn criterion_1() -> Check {
    let mut notes = Vec::new();
    for q in [2u32, 3, 4] {
        let (res, passed, _) = run_json(verify(Suite::Lines { q }), None)?;
        ensure(passed, || format!("q={q}: {}", res["problems"]))?;
        let curve = HermitianCurve::new(q).map_err(|e| e.to_string())?;
        let f = curve.field();
        let pts = brute_points(f, q as u64);
        let lines = all_lines(f);
        let q64 = q as u64;
        ensure(lines.len() as u64 == q64.pow(4) + q64.pow(2) + 1, || format!("q={q}: {} lines", lines.len()))?;
        let mut tangents = 0;
        for l in &lines {
            let [a, b, c] = l.coeffs();
            let hits = pts
                .iter()
                .filter(|p| f.sum([f.mul(a, p[0]), f.mul(b, p[1]), f.mul(c, p[2])]).is_zero())
                .count();
            ensure(hits == 1 || hits == q as usize + 1, || format!("q={q}: line {l:?} has {hits} points"))?;
            if hits == 1 {
                tangents += 1;
            }
        }
        ensure(tangents == pts.len(), || format!("q={q}: {tangents} single-point lines"))?;
        notes.push(format!("q={q}: {} lines, {tangents} tangent", lines.len()));
    }
    Ok(notes.join("; "))
}

fn brute_parabola_census(q: u32) -> BTreeMap<usize, u64> {
    let f = Field::new(prime_of(q), (2 * degree_of(q)) as u32).unwrap();
    let q64 = q as u64;
    let mut census = BTreeMap::new();
    for a in f.elements().skip(1) {
        for b in f.elements() {
            for c in f.elements() {
                let h = f
                    .elements()
                    .filter(|&x| {
                        let y = f.sum([f.mul(a, f.mul(x, x)), f.mul(b, x), c]);
                        f.add(f.powu(y, q64), y) == f.powu(x, q64 + 1)
                    })
                    .count();
                *census.entry(h).or_insert(0) += 1;
            }
        }
    }
    census
}

fn prime_of(q: u32) -> u64 {
    (2..=q as u64).find(|p| q as u64 % p == 0).unwrap()
}

fn degree_of(q: u32) -> u64 {
    let p = prime_of(q);
    let (mut k, mut r) = (0, q as u64);
    while r > 1 {
        r /= p;
        k += 1;
    }
    k
}

fn criterion_2() -> Check {
    let mut notes = Vec::new();
    for q in [2u32, 3, 4, 5] {
        let (res, passed, _) = run_json(verify(Suite::Parabolas { q }), None)?;
        ensure(passed, || format!("q={q}: {}", res["problems"]))?;
        let curve = HermitianCurve::new(q).map_err(|e| e.to_string())?;
        let census = curve.parabola_census();
        ensure(census == brute_parabola_census(q), || format!("q={q}: census differs from brute force"))?;
        let cap = if q % 2 == 1 { 2 * q as usize } else { 2 * q as usize - 1 };
        ensure(census.keys().all(|&h| h <= cap), || format!("q={q}: census {census:?} exceeds {cap}"))?;
        match q {
            3 => ensure(census.get(&6) == Some(&36), || format!("q=3 census[6] = {:?}", census.get(&6)))?,
            5 => ensure(census.get(&10) == Some(&300), || format!("q=5 census[10] = {:?}", census.get(&10)))?,
            _ => {}
        }
        notes.push(format!("q={q}: max hits {}", census.keys().max().unwrap()));
    }
    Ok(notes.join("; "))
}

// Minimum weight of C_m at q = 2 by enumerating every combination of
// directly evaluated monomials.
fn brute_min_distance_q2(m: i64) -> usize {
    let f = Field::new(2, 2).unwrap();
    let pts: Vec<[Elem; 3]> = brute_points(&f, 2).into_iter().filter(|p| p[2] == Elem::ONE).collect();
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for j in 0..2u64 {
        for i in 0..=8u64 {
            if (i * 2 + j * 3) as i64 <= m {
                rows.push(pts.iter().map(|p| f.mul(f.powu(p[0], i), f.powu(p[1], j))).collect());
            }
        }
    }
    let total = 4u64.pow(rows.len() as u32);
    let mut best = usize::MAX;
    for code in 1..total {
        let mut word = vec![Elem::ZERO; pts.len()];
        let mut c = code;
        for r in &rows {
            let s = f.element((c % 4) as u32).unwrap();
            c /= 4;
            for (w, &v) in word.iter_mut().zip(r) {
                *w = f.add(*w, f.mul(s, v));
            }
        }
        let wt = word.iter().filter(|x| !x.is_zero()).count();
        if wt > 0 {
            best = best.min(wt);
        }
    }
    best
}

fn criterion_3(cache: &mut BTreeMap<&'static str, String>) -> Check {
    let (res2, passed2, _) = run_json(verify(Suite::Table1 { q: 2 }), Some(1))?;
    ensure(passed2, || "q=2 mismatch".into())?;
    for e in res2["entries"].as_array().unwrap() {
        let m = e["m"].as_i64().unwrap();
        ensure(e["status"] == "match" && e["strategy"] == "exhaustive", || format!("q=2 m={m}: {e}"))?;
        if m <= 8 {
            let brute = brute_min_distance_q2(m);
            let designed = onepoint::designed_distance(2, m).unwrap() as usize;
            ensure(brute == designed, || format!("q=2 m={m}: brute {brute} vs designed {designed}"))?;
        }
    }
    let (res3, passed3, json3) = run_json(verify(Suite::Table1 { q: 3 }), Some(1))?;
    cache.insert("table1_q3", json3);
    ensure(passed3, || "q=3 mismatch".into())?;
    let phases: Vec<u64> = res3["phases_covered"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    ensure([1, 2, 5].iter().all(|p| phases.contains(p)), || format!("q=3 phases {phases:?}"))?;
    Ok(format!(
        "q=2: all m exhaustive and brute force for m<=8; q=3: {} codes exact, phases {phases:?}, skipped m = {}",
        res3["checked"], res3["skipped"]
    ))
}

fn criterion_4() -> Check {
    let mut notes = Vec::new();
    for q in [2u32, 3] {
        let (res, passed, _) = run_json(verify(Suite::Duality { q }), None)?;
        ensure(passed, || format!("q={q}: {}", res["failures"]))?;
        ensure(res["checked"].as_i64() == Some(onepoint::max_m(q) + 1), || format!("q={q}: {}", res["checked"]))?;
        notes.push(format!("q={q}: {} values of m", res["checked"]));
    }
    Ok(notes.join("; "))
}

fn criterion_5() -> Check {
    let mut notes = Vec::new();
    for q in [2u32, 3, 4] {
        let (res, passed, _) = run_json(verify(Suite::Isometry { q }), None)?;
        ensure(passed, || format!("q={q}: {}", res["failures"]))?;
        ensure(res["checked"].as_u64() == Some((q * (q + 1)) as u64), || format!("q={q}: {}", res["checked"]))?;
        notes.push(format!("q={q}: m=1..={}", q * (q + 1)));
    }
    Ok(notes.join("; "))
}

fn criterion_6() -> Check {
    let mut notes = Vec::new();
    for q in [2u32, 3] {
        let (res, passed, _) = run_json(verify(Suite::Oracle { q, samples: 200 }), None)?;
        ensure(passed, || format!("q={q}: {}", res["failures"]))?;
        let curve = HermitianCurve::new(q).map_err(|e| e.to_string())?;
        let instances = cli::oracle_instances(q, 200, 1);
        ensure(instances.len() == 200, || format!("q={q}: {} instances", instances.len()))?;
        for (d, a, s) in &instances {
            let (kernel, h1) = cohomology::kernel_and_h1(&curve, *d, *a, s).map_err(|e| e.to_string())?;
            ensure(kernel == h1, || format!("q={q} (d,a)=({d},{a}) S={s:?}: kernel {kernel}, h1 {h1}"))?;
        }
        notes.push(format!("q={q}: 200 instances, {} with h1 > 0", res["h1_positive"]));
    }
    Ok(notes.join("; "))
}

fn criterion_7() -> Check {
    let budget = Budget::default();
    let mut checked = 0;
    for q in [3u32, 4, 5] {
        let curve = HermitianCurve::new(q).map_err(|e| e.to_string())?;
        for d in 1..q {
            for a in 0..=d {
                let c = minwords::verify(&curve, d, a, q == 3, &budget).map_err(|e| e.to_string())?;
                ensure(c.passed && c.closed_form_matches == Some(true), || {
                    format!("q={q} (d,a)=({d},{a}): count {} A={} closed {:?}", c.support_count, c.a_delta, c.closed_form)
                })?;
                ensure(c.kernel_verified == c.support_count, || format!("q={q} (d,a)=({d},{a}): kernel failures"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (q,d,a) censuses match the closed form; q=3 exhaustive scans clean"))
}

fn criterion_8() -> Check {
    let budget = Budget::default();
    let c3 = HermitianCurve::new(3).map_err(|e| e.to_string())?;
    let r3 = minwords::verify(&c3, 3, 2, true, &budget).map_err(|e| e.to_string())?;
    let pairs = r3.families.get(&Family::ConicPairLines).copied().unwrap_or(0);
    let parabolas = r3.families.get(&Family::ConicParabola).copied().unwrap_or(0);
    ensure(r3.passed && r3.support_count == 72 && pairs == 36 && parabolas == 36 && r3.a_delta == 576, || {
        format!("q=3: {} supports {:?}, A={}", r3.support_count, r3.families, r3.a_delta)
    })?;
    ensure(r3.exhaustive && r3.extra_supports.is_empty(), || "q=3 exhaustive scan found extras".into())?;
    let c4 = HermitianCurve::new(4).map_err(|e| e.to_string())?;
    let r4 = minwords::verify(&c4, 4, 2, false, &budget).map_err(|e| e.to_string())?;
    ensure(r4.passed && r4.support_count == 120 && r4.a_delta == 1800 && r4.kernel_verified == 120, || {
        format!("q=4: {} supports, A={}, kernel verified {}", r4.support_count, r4.a_delta, r4.kernel_verified)
    })?;
    Ok("q=3: 72 = 36 line pairs + 36 parabolas, A=576, no extra 6-subsets; q=4: 120 supports, A=1800".into())
}

fn criterion_9() -> Check {
    let claims = vec!["closed formula=112896".to_string(), "worked example text=66382848".to_string()];
    let cmd = || Command::Minwords { q: 7, d: 7, a: 3, exhaustive: false, emit_supports: None, claims: claims.clone() };
    let start = Instant::now();
    let (res, passed, json) = run_json(cmd(), None)?;
    let elapsed = start.elapsed();
    let (_, _, again) = run_json(cmd(), None)?;
    ensure(json == again, || "two runs differ".into())?;
    ensure(passed, || format!("census failed: {res}"))?;
    let census = &res;
    ensure(census["support_count"] == 2352 && census["A_delta"] == 112896 && census["kernel_verified"] == 2352, || {
        format!("census {census}")
    })?;
    let adj = &res["adjudication"];
    ensure(adj["supported"] == serde_json::json!(["closed formula"]), || format!("adjudication {adj}"))?;
    ensure(adj["flagged"] == serde_json::json!(["worked example text"]), || format!("adjudication {adj}"))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("A_14 = 112896 from 2352 kernel-checked supports; flagged 66382848; {:.2?}", elapsed))
}

fn criterion_10() -> Check {
    let budget = Budget::default();
    let mut notes = Vec::new();
    for (q, size, length) in [(3u32, 9usize, 18usize), (5, 75, 50)] {
        let curve = HermitianCurve::new(q).map_err(|e| e.to_string())?;
        let set = improve::minimal_improving_set(&curve, 2, 1).map_err(|e| e.to_string())?;
        ensure(set.h.len() == size, || format!("q={q}: |H| = {}", set.h.len()))?;
        let r = improve::improved_report(&curve, 2, 1, &set.h, &budget).map_err(|e| e.to_string())?;
        ensure(r.is_improving && r.consistent && r.new_length == length, || format!("q={q}: {r:?}"))?;
        ensure(r.dual_distance == Distance::Exceeds(3) && r.dual_distance_bound >= 4, || {
            format!("q={q}: dual distance {:?}", r.dual_distance)
        })?;
        ensure(r.new_length <= (q * q * 2) as usize, || format!("q={q}: length above q^2 d"))?;
        for &p in &set.h {
            let smaller: Vec<usize> = set.h.iter().copied().filter(|&x| x != p).collect();
            ensure(!improve::is_improving(&curve, 2, 1, &smaller).unwrap(), || format!("q={q}: H minus {p} still improving"))?;
            if q == 3 {
                let r = improve::improved_report(&curve, 2, 1, &smaller, &budget).map_err(|e| e.to_string())?;
                ensure(r.dual_distance == Distance::Exact(3) && r.collinear_witness_verified == Some(true), || {
                    format!("q=3: H minus {p}: {r:?}")
                })?;
            }
        }
        notes.push(format!("q={q}: |H|={size}, length {length}, no weight <= 3 dual words, every point needed"));
    }
    Ok(notes.join("; "))
}

fn criterion_11() -> Check {
    let budget = Budget::default();
    let curve = HermitianCurve::new(3).map_err(|e| e.to_string())?;
    let mut totals: BTreeMap<CaseTag, u64> = BTreeMap::new();
    let mut converse = 0;
    for d in 1..=2u32 {
        for a in 0..=d {
            let w_max = (3 * d - 1 - a) as usize;
            if w_max == 0 {
                continue;
            }
            let r = smallwords::soundness_sweep(&curve, d, a, 1..=w_max, &budget).map_err(|e| e.to_string())?;
            ensure(r.passed && r.counterexamples.is_empty() && r.converse_failures.is_empty(), || {
                format!("(d,a)=({d},{a}): {} counterexamples, {:?}", r.counterexamples.len(), r.converse_failures)
            })?;
            ensure(!r.histogram.contains_key(&CaseTag::Unclassified), || format!("(d,a)=({d},{a}) unclassified"))?;
            let expected = smallwords::line_case_sets(&curve, d, a).len() as u64;
            ensure(r.converse_checked == expected, || format!("(d,a)=({d},{a}): converse {}", r.converse_checked))?;
            converse += r.converse_checked;
            for (t, c) in r.histogram {
                *totals.entry(t).or_insert(0) += c;
            }
        }
    }
    Ok(format!("tags {totals:?}, zero unclassified, {converse} converse witnesses"))
}

fn criterion_12(cache: &BTreeMap<&'static str, String>) -> Check {
    let suites: Vec<(&str, Command)> = vec![
        ("table1_q3", verify(Suite::Table1 { q: 3 })),
        ("table1_q2", verify(Suite::Table1 { q: 2 })),
        ("lines", verify(Suite::Lines { q: 4 })),
        ("parabolas", verify(Suite::Parabolas { q: 5 })),
        ("duality", verify(Suite::Duality { q: 3 })),
        ("isometry", verify(Suite::Isometry { q: 4 })),
        ("oracle", verify(Suite::Oracle { q: 3, samples: 200 })),
        ("minwords", Command::Minwords { q: 3, d: 3, a: 2, exhaustive: true, emit_supports: None, claims: vec![] }),
        ("improve", Command::Improve { q: 5, d: 2, a: 1, h: None }),
        (
            "sweep",
            Command::Smallwords { action: SmallwordsAction::Sweep { q: 3, d: 2, a: 0, w_min: None, w_max: None } },
        ),
    ];
    let n = 4;
    for (name, cmd) in &suites {
        let one = match cache.get(name) {
            Some(j) => j.clone(),
            None => run_json(cmd.clone(), Some(1))?.2,
        };
        let many = run_json(cmd.clone(), Some(n))?.2;
        ensure(one == many, || format!("{name}: 1 vs {n} workers differ"))?;
    }
    Ok(format!("{} suites byte-identical with 1 and {n} workers", suites.len()))
}

fn main() {
    let mut cache = BTreeMap::new();
    let mut results: Vec<(u32, &str, Check, Duration)> = Vec::new();
    let mut record = |id: u32, name: &'static str, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let r = f();
        let t = start.elapsed();
        let status = if r.is_ok() { "PASS" } else { "FAIL" };
        let detail = match &r {
            Ok(s) | Err(s) => s.clone(),
        };
        println!("criterion {id:>2} {status} [{name}] ({:.1?}): {detail}", t);
        results.push((id, name, r, t));
    };
    record(1, "line dichotomy", &mut criterion_1);
    record(2, "parabola census", &mut criterion_2);
    record(3, "minimum distance table", &mut || criterion_3(&mut cache));
    record(4, "duality", &mut criterion_4);
    record(5, "construction isometry", &mut criterion_5);
    record(6, "kernel / h1 oracle", &mut criterion_6);
    record(7, "minimum-weight census", &mut criterion_7);
    record(8, "conic minimum-weight census", &mut criterion_8);
    record(9, "q=7 adjudication", &mut criterion_9);
    record(10, "improving sets", &mut criterion_10);
    record(11, "small-weight soundness", &mut criterion_11);
    record(12, "determinism", &mut || criterion_12(&cache));
    let failed: Vec<u32> = results.iter().filter(|r| r.2.is_err()).map(|r| r.0).collect();
    let limits = [(1u32, 10u64), (2, 30), (9, 60)];
    let slow: Vec<u32> = limits
        .iter()
        .filter(|(id, secs)| results.iter().any(|r| r.0 == *id && r.3 > Duration::from_secs(*secs)))
        .map(|l| l.0)
        .collect();
    for id in &slow {
        println!("criterion {id:>2} exceeded its time limit");
    }
    println!("{} of {} criteria passed", results.len() - failed.len(), results.len());
    if !failed.is_empty() || !slow.is_empty() {
        std::process::exit(1);
    }
}
