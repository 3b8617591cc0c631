//! Acceptance criteria, one line each. Exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use braidkit::brunnian::{in_z_pure, is_brunnian, sample_bd_with, sample_brun_with, SamplerParams};
use braidkit::pure::{comb, linking_vector};
use braidkit::verify::{run_check, Status};
use braidkit::{BraidWord, Generator, Oracle};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

/// Runs catalog checks and requires every report to pass within `limit`
/// per report.
fn checks(ids: &[&str], ns: &[usize], limit: Duration) -> Outcome {
    let (params, oracle) = (SamplerParams::default(), Oracle::default());
    let mut notes = Vec::new();
    let mut ok = true;
    for id in ids {
        for &n in ns {
            let r = run_check(id, n, &params, &oracle).expect("catalog id");
            let in_time = Duration::from_millis(r.elapsed_ms) < limit;
            if r.status != Status::Pass || !in_time {
                ok = false;
                notes.push(format!("{id} n={n} {} ({} ms): {}", r.status, r.elapsed_ms, r.witness));
            }
        }
    }
    if ok {
        outcome(true, format!("{} reports pass", ids.len() * ns.len()))
    } else {
        outcome(false, notes.join("; "))
    }
}

fn random_word<R: Rng>(n: usize, len: usize, rng: &mut R) -> Vec<Generator> {
    (0..len)
        .map(|_| Generator::new(rng.gen_range(1..n), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect()
}

/// A random word followed by a bubble sort of its strands, so the result is
/// pure; at most `12 + n(n-1)/2` letters.
fn random_pure<R: Rng>(n: usize, rng: &mut R) -> BraidWord {
    let len = rng.gen_range(0..=12);
    let mut letters = random_word(n, len, rng);
    let mut at: Vec<usize> = (0..n).collect();
    for g in &letters {
        at.swap(g.index() - 1, g.index());
    }
    for end in (1..n).rev() {
        for i in 0..end {
            if at[i] > at[i + 1] {
                at.swap(i, i + 1);
                letters.push(Generator::new(i + 1, if rng.gen_bool(0.5) { 1 } else { -1 }));
            }
        }
    }
    BraidWord::new(n, letters).unwrap()
}

fn combing_round_trip() -> Outcome {
    let oracle = Oracle::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut longest = 0;
    for t in 0..600 {
        let n = rng.gen_range(2..=5);
        let u = random_pure(n, &mut rng);
        assert!(u.is_pure() && u.len() <= 24);
        longest = longest.max(u.len());
        let w = match comb(&u, &oracle) {
            Ok(w) => w,
            Err(e) => return outcome(false, format!("word {t} ({u}): {e}")),
        };
        if !oracle.equal(&w.expand(), &u).unwrap() {
            return outcome(false, format!("expand(comb(u)) != u for u = {u}"));
        }
        if w.abelianize() != linking_vector(&u).unwrap() {
            return outcome(false, format!("abelianization mismatch for u = {u}"));
        }
    }
    outcome(true, format!("600 pure words, n <= 5, up to {longest} letters"))
}

fn oracle_agreement() -> Outcome {
    let oracle = Oracle::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut trivial = 0;
    for t in 0..10_000 {
        let n = rng.gen_range(2..=5);
        let u = if t % 4 == 0 && n >= 3 {
            // a conjugated braid relation: trivial, but not freely
            let k = rng.gen_range(1..n - 1) as i32;
            let c = BraidWord::new(n, random_word(n, rng.gen_range(0..=7), &mut rng)).unwrap();
            let rel = BraidWord::from_signed(n, &[k, k + 1, k, -k - 1, -k, -k - 1]).unwrap();
            BraidWord::product(n, [&c, &rel, &c.inverse()]).unwrap()
        } else {
            let len = rng.gen_range(0..=20);
            BraidWord::new(n, random_word(n, len, &mut rng)).unwrap()
        };
        let (a, d) = (oracle.is_trivial(&u).unwrap(), oracle.is_trivial_dehornoy(&u).unwrap());
        if a != d {
            return outcome(false, format!("verdicts differ on {u}: artin {a}, handle reduction {d}"));
        }
        trivial += usize::from(a);
    }
    outcome(true, format!("10000 words agree ({trivial} trivial)"))
}

fn samplers() -> Outcome {
    let oracle = Oracle::default();
    let params = SamplerParams::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in [3, 4] {
        for _ in 0..100 {
            let w = sample_brun_with(n, &params, &mut rng).unwrap();
            match is_brunnian(&w.expand(), &oracle) {
                Ok(true) if w.abelianize().is_zero() => {}
                Ok(_) => return outcome(false, format!("sample_brun({n}) produced {w}")),
                Err(e) => return outcome(false, format!("sample_brun({n}): {e}")),
            }
        }
    }
    for _ in 0..100 {
        let w = sample_bd_with(3, &params, &mut rng).unwrap();
        match in_z_pure(&w, &oracle) {
            Ok(true) => {}
            Ok(false) => return outcome(false, format!("sample_bd(3) produced {w}, not in Z_3")),
            Err(e) => return outcome(false, format!("sample_bd(3): {e}")),
        }
    }
    outcome(true, "200 Brunnian samples (n = 3, 4), 100 boundary samples (n = 3)")
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn cli(args: &[&str]) -> (Option<i32>, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_braidkit")).args(args).output().expect("binary runs");
    (o.status.code(), String::from_utf8_lossy(&o.stdout).into_owned())
}

fn negative_control() -> Outcome {
    let (code, out) = cli(&["check", "X11", "--n", "4"]);
    let ok = code == Some(1) && out.contains("fail") && out.contains(" != ");
    outcome(ok, format!("exit {code:?}: {}", out.lines().next().unwrap_or("")))
}

fn full_run() -> Outcome {
    let (code, out) = cli(&["check", "--all", "--n", "3..5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json report");
    let failed: Vec<String> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "fail")
        .map(|r| format!("{} n={}", r["check"].as_str().unwrap(), r["n"]))
        .collect();
    let summary = format!("exit {code:?}; {} passed, {} failed, {} skipped", v["passed"], v["failed"], v["skipped"]);
    if code == Some(0) {
        outcome(true, summary)
    } else {
        outcome(false, format!("{summary}; failing: {}", failed.join(", ")))
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);
    let criteria: Vec<Criterion> = vec![
        ("C10 full-twist identity, n = 3..6", secs(40), Box::new(|| checks(&["C10"], &[3, 4, 5, 6], secs(10)))),
        ("C9 w_n action table and w_n(z) = z^-1, n = 3..5", secs(30), Box::new(|| checks(&["C9"], &[3, 4, 5], secs(30)))),
        ("C11 + C15 boundary of A[0,1] and the Delta inequality, n = 4, 5", secs(10), Box::new(|| checks(&["C11", "C15"], &[4, 5], secs(10)))),
        ("C17 Delta-group identities, n = 3, 4", secs(60), Box::new(|| checks(&["C17"], &[3, 4], secs(60)))),
        ("C18 identities in P_3", secs(10), Box::new(|| checks(&["C18"], &[3], secs(10)))),
        ("combing round trip", secs(300), Box::new(combing_round_trip)),
        ("Artin / handle-reduction agreement", secs(300), Box::new(oracle_agreement)),
        ("sampler suites", secs(300), Box::new(samplers)),
        ("negative control X11 exits 1 with a witness", secs(60), Box::new(negative_control)),
        ("check --all --n 3..5 exits 0", secs(900), Box::new(full_run)),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let ok = out.ok && elapsed < *limit;
        failures += usize::from(!ok);
        let verdict = if ok { "PASS" } else { "FAIL" };
        let timing = if elapsed < *limit { String::new() } else { format!(" [over the {limit:?} limit]") };
        println!("criterion {:>2}: {verdict} {name} ({elapsed:.2?}){timing} -- {}", i + 1, out.detail);
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
