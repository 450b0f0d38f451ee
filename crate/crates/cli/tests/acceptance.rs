//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines are always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use specht_core::verify::{combinatorics_suite, counting_suite, dominance_suite};
use specht_core::{QuiverParams, Report};
use specht_hecke::suites::{self, Semisimple};
use specht_hecke::HeckeParams;

struct Outcome {
    ok: bool,
    detail: String,
}

fn merge(reports: &[Report]) -> (u64, u64, Vec<String>) {
    let checked = reports.iter().map(|r| r.checked).sum();
    let violations = reports.iter().map(|r| r.violation_count).sum();
    let messages = reports
        .iter()
        .flat_map(|r| r.violations.iter().take(3).map(move |m| format!("{}: {m}", r.suite)))
        .take(5)
        .collect();
    (checked, violations, messages)
}

fn judge(reports: &[Report], elapsed: Duration, limit: Duration) -> Outcome {
    let (checked, violations, messages) = merge(reports);
    let in_time = elapsed <= limit;
    let mut detail = format!(
        "{checked} checks, {violations} violations, {:.1}s (limit {}s)",
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    if !messages.is_empty() {
        detail.push_str(&format!("; first: {messages:?}"));
    }
    if !in_time {
        detail.push_str("; over the time limit");
    }
    Outcome {
        ok: violations == 0 && checked > 0 && in_time,
        detail,
    }
}

fn combinatorics() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    for e in [0, 2, 3, 4] {
        for kappa in [vec![0], vec![0, 0], vec![3, 0], vec![7, 3, 0]] {
            let params = QuiverParams::new(e, kappa).expect("valid parameters");
            reports.push(combinatorics_suite(&params, 6));
        }
    }
    judge(&reports, start.elapsed(), Duration::from_secs(60))
}

fn counting() -> Outcome {
    let start = Instant::now();
    let reports: Vec<Report> = (1..=3).map(|level| counting_suite(level, 5)).collect();
    judge(&reports, start.elapsed(), Duration::from_secs(60))
}

fn semisimple_engine() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut slowest = Duration::ZERO;
    for (n, level) in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2)] {
        let t = Instant::now();
        let ctx = match Semisimple::new(HeckeParams::semisimple(n, level)) {
            Ok(ctx) => ctx,
            Err(e) => {
                return Outcome {
                    ok: false,
                    detail: format!("n={n} ℓ={level}: {e}"),
                }
            }
        };
        reports.push(suites::strong(&ctx));
        match (suites::tilting(&ctx), suites::lk_action(&ctx)) {
            (Ok(a), Ok(b)) => reports.extend([a, b]),
            (Err(e), _) | (_, Err(e)) => {
                return Outcome {
                    ok: false,
                    detail: format!("n={n} ℓ={level}: {e}"),
                }
            }
        }
        slowest = slowest.max(t.elapsed());
    }
    let mut out = judge(&reports, start.elapsed(), Duration::from_secs(600));
    out.detail
        .push_str(&format!("; slowest size {:.1}s", slowest.as_secs_f64()));
    out
}

fn cross_model() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    for level in 1..=2 {
        for n in 1..=3 {
            let res = Semisimple::new(HeckeParams::semisimple(n, level))
                .and_then(|ctx| suites::cross_model(&ctx));
            match res {
                Ok(r) => reports.push(r),
                Err(e) => {
                    return Outcome {
                        ok: false,
                        detail: format!("n={n} ℓ={level}: {e}"),
                    }
                }
            }
        }
    }
    judge(&reports, start.elapsed(), Duration::from_secs(600))
}

fn klr() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    for p in [2, 3] {
        for kappa in [vec![0], vec![0, 0], vec![0, 1], vec![1, 0]] {
            for n in 1..=3 {
                let res = HeckeParams::prime(p, kappa.clone(), n).and_then(suites::klr);
                match res {
                    Ok(r) => reports.push(r),
                    Err(e) => {
                        return Outcome {
                            ok: false,
                            detail: format!("p={p} κ={kappa:?} n={n}: {e}"),
                        }
                    }
                }
            }
        }
    }
    judge(&reports, start.elapsed(), Duration::from_secs(120))
}

fn dominance() -> Outcome {
    let start = Instant::now();
    let report = dominance_suite(4, 2);
    let counterexample = report.notes.iter().any(|n| n.starts_with("converse fails"));
    let mut out = judge(&[report], start.elapsed(), Duration::from_secs(120));
    if !counterexample {
        out.ok = false;
        out.detail.push_str("; no counterexample to the converse recorded");
    }
    out
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("combinatorics sweep, n ≤ 6, e ∈ {0,2,3,4}", combinatorics),
        ("Σ|Std(μ)|² = ℓ^n n!, n ≤ 5, ℓ ≤ 3", counting),
        ("semisimple engine: eigenvectors, strong unitriangularity, tilting, L_k action", semisimple_engine),
        ("seminormal model relations and traces against the engine, n ≤ 3", cross_model),
        ("degenerate KLR idempotents over F_2, F_3, n ≤ 3, ℓ ≤ 2", klr),
        ("dominance infrastructure, n ≤ 4", dominance),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        all &= outcome.ok;
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {}: {name} ({})", i + 1, outcome.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
