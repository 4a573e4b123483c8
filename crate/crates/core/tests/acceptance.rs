//! Acceptance gate: ten criteria over the default corpus, one PASS/FAIL
//! line each. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use galg_core::verify::{self, SuiteConfig, SuiteReport};
use galg_core::Result;

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Option<Duration>,
    run: fn(&SuiteConfig) -> Result<Vec<SuiteReport>>,
}

fn one(r: Result<SuiteReport>) -> Result<Vec<SuiteReport>> {
    r.map(|r| vec![r])
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "D6 classes and character table",
            limit: secs(1),
            run: |c| one(verify::d6_golden(c)),
        },
        Criterion {
            id: 2,
            name: "three-dimensional Lie ideal of C[D6]",
            limit: secs(1),
            run: |c| one(verify::d6_lie_ideal_example(c)),
        },
        Criterion {
            id: 3,
            name: "factor-wise translation test in C[D6xD6]",
            limit: secs(5),
            run: |c| one(verify::product_translation_example(c)),
        },
        Criterion {
            id: 4,
            name: "central idempotents and minimal ideals",
            limit: secs(60),
            run: |c| one(verify::idempotents(c)),
        },
        Criterion {
            id: 5,
            name: "translation criterion equals commutator test",
            limit: secs(300),
            run: |c| one(verify::criterion_equivalence(c)),
        },
        Criterion {
            id: 6,
            name: "block sandwich for Lie ideals of C[G]",
            limit: None,
            run: |c| one(verify::sandwich(c)),
        },
        Criterion {
            id: 7,
            name: "exactly four Lie ideals of M2 and M3",
            limit: None,
            run: |c| one(verify::matrix_lie_ideals(c)),
        },
        Criterion {
            id: 8,
            name: "lifted subspaces and central indicators",
            limit: None,
            run: |c| one(verify::lifts(c)),
        },
        Criterion {
            id: 9,
            name: "centers of generalized group algebras",
            limit: secs(300),
            run: |c| Ok(vec![verify::center_suite(c)?, verify::center_tensor_suite(c)?]),
        },
        Criterion {
            id: 10,
            name: "conjugation average",
            limit: secs(60),
            run: |c| one(verify::sharp_suite(c)),
        },
    ]
}

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut all_ok = true;
    for c in criteria() {
        let start = Instant::now();
        let outcome = (c.run)(&cfg);
        let elapsed = start.elapsed();
        let (ok, summary) = match &outcome {
            Ok(reports) => {
                let passed = reports.iter().all(|r| r.passed);
                let checks: usize = reports.iter().map(|r| r.checks).sum();
                let failures: usize = reports.iter().map(|r| r.failures).sum();
                let worst = reports
                    .iter()
                    .flat_map(|r| r.residuals.iter())
                    .map(|(k, v)| format!("{k}={:.1e}/{:.0e}", v.max, v.tolerance))
                    .collect::<Vec<_>>()
                    .join(" ");
                (passed, format!("checks={checks} failures={failures} {worst}"))
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = c.limit.is_none_or(|l| elapsed <= l);
        let pass = ok && in_time;
        all_ok &= pass;
        let limit = c.limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
        println!(
            "criterion {:>2} {}: {} [{:.2}s{}] {}",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.name,
            elapsed.as_secs_f64(),
            limit,
            summary
        );
        if !pass {
            if let Ok(reports) = &outcome {
                for r in reports.iter().filter(|r| r.witness.is_some()) {
                    println!("    witness ({}): {}", r.suite, r.witness.as_ref().unwrap());
                }
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
