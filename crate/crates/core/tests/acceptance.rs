//! Acceptance gate: every reproduced result at zero tolerance, with its time
//! budget. Prints one PASS/FAIL line per criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sgt_core::commgraph::{chromatic_number, clique_number, girth};
use sgt_core::verify::{run, Suite, VerificationReport, VerifyOptions};

struct Criterion {
    number: usize,
    title: &'static str,
    budget: Duration,
    passed: bool,
    elapsed: Duration,
    detail: String,
}

fn from_report(
    number: usize,
    title: &'static str,
    budget: Duration,
    suite: Suite,
    prefixes: &[&str],
) -> Criterion {
    let (passed, elapsed, detail) = match run(suite, &VerifyOptions::default()) {
        Ok(report) => summarize(&report, prefixes),
        Err(e) => (false, Duration::ZERO, format!("error: {e}")),
    };
    Criterion {
        number,
        title,
        budget,
        passed,
        elapsed,
        detail,
    }
}

/// Pass flag, summed wall time and details of the entries matching `prefixes`.
fn summarize(report: &VerificationReport, prefixes: &[&str]) -> (bool, Duration, String) {
    let entries: Vec<_> = report
        .entries
        .iter()
        .filter(|e| prefixes.iter().any(|p| e.id.starts_with(p)))
        .collect();
    let passed = !entries.is_empty() && entries.iter().all(|e| e.pass);
    let elapsed = Duration::from_secs_f64(entries.iter().map(|e| e.ms).sum::<f64>() / 1e3);
    let detail = entries
        .iter()
        .map(|e| format!("{}{}={}", if e.pass { "" } else { "!" }, e.id, e.actual))
        .collect::<Vec<_>>()
        .join("; ");
    (passed, elapsed, detail)
}

fn solver_equivalence() -> Criterion {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e11);
    let mut mismatches = Vec::new();
    for i in 0..200 {
        let g = common::random_graph(&mut rng, 12);
        let ours = (girth(&g), clique_number(&g), chromatic_number(&g));
        let oracle = (
            common::brute_girth(&g),
            common::brute_clique(&g),
            common::brute_chromatic(&g),
        );
        if ours != oracle {
            mismatches.push(format!("graph {i}: {ours:?} vs {oracle:?}"));
        }
    }
    Criterion {
        number: 10,
        title: "solver oracle equivalence",
        budget: Duration::from_secs(60),
        passed: mismatches.is_empty(),
        elapsed: start.elapsed(),
        detail: if mismatches.is_empty() {
            "200/200 graphs agree on girth, ω, χ".into()
        } else {
            mismatches.join("; ")
        },
    }
}

fn main() -> ExitCode {
    let ms = Duration::from_millis;
    let criteria = vec![
        from_report(1, "girth-4 band", ms(1), Suite::Tables, &["girth4band."]),
        from_report(2, "girth-2n family", ms(1000), Suite::Girth, &["girth2n.n"]),
        from_report(
            3,
            "product laws vs transformations",
            ms(1000),
            Suite::Tables,
            &["girth2n.maps."],
        ),
        from_report(4, "group figures", ms(10), Suite::Groups, &["group."]),
        from_report(
            5,
            "direct product ω and χ",
            ms(5000),
            Suite::All,
            &["clique.sym3xc", "chromatic.sym3xc"],
        ),
        from_report(
            6,
            "zero-union ω and χ",
            ms(5000),
            Suite::All,
            &["clique.zerounion", "chromatic.zerounion"],
        ),
        from_report(7, "knit degree of I_m", ms(30_000), Suite::Knit, &["knit."]),
        from_report(
            8,
            "Vagner-Preston",
            ms(5000),
            Suite::VagnerPreston,
            &["vagner-preston."],
        ),
        from_report(
            9,
            "exhaustive theorems, order <= 4",
            ms(300_000),
            Suite::Exhaustive,
            &["exhaustive.", "constructed."],
        ),
        solver_equivalence(),
        from_report(
            11,
            "lemma identities",
            ms(30_000),
            Suite::Lemmas,
            &["lemma."],
        ),
    ];
    let mut failed = 0;
    for c in &criteria {
        let in_time = c.elapsed <= c.budget;
        let ok = c.passed && in_time;
        failed += usize::from(!ok);
        println!(
            "{} criterion {:>2} {:<34} {:>9.3} ms (budget {} ms){}  {}",
            if ok { "PASS" } else { "FAIL" },
            c.number,
            c.title,
            c.elapsed.as_secs_f64() * 1e3,
            c.budget.as_millis(),
            if in_time { "" } else { " over budget" },
            c.detail
        );
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
