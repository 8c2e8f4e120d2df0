//! Acceptance run: each criterion is a set of suite checks at fixed bounds,
//! plus a time limit. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mahonian::poly::exponents;
use mahonian::verify::{check_named, run_suite, Params, Profile};
use mahonian::LaurentPoly;
use num_bigint::BigInt;

struct Criterion {
    id: u32,
    title: &'static str,
    checks: &'static [(&'static str, &'static [(&'static str, usize)])],
    limit: Option<Duration>,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "Foata worked example with its seven-stage trace",
        checks: &[("phi-worked-example", &[])],
        limit: Some(Duration::from_secs(1)),
    },
    Criterion {
        id: 2,
        title: "maj v = inv φ(v) on {1,2,3}^<=9 and {1,2}^<=14",
        checks: &[("maj-inv-phi", &[("ternary_len", 9), ("binary_len", 14)])],
        limit: Some(Duration::from_secs(30)),
    },
    Criterion {
        id: 3,
        title: "φ(B_n), φ^-1(B_n) and the R_n generating function for n <= 6",
        checks: &[
            ("phi-Bn", &[("n", 6)]),
            ("phi-inv-Bn", &[("n", 6)]),
            ("Rn-catalan-qt", &[("n", 6)]),
        ],
        limit: None,
    },
    Criterion {
        id: 4,
        title: "Catalan layer: c_n(q,1), C_n(q) squares, four-term identity, β, Σ C_{n,d}^2",
        checks: &[
            ("catalan-q1", &[("n", 7)]),
            ("q-catalan-squares", &[("n", 7)]),
            ("four-term-cnqt", &[("n", 5)]),
            ("beta-composition", &[("n", 6)]),
            ("catalan-squares", &[("n", 10)]),
        ],
        limit: None,
    },
    Criterion {
        id: 5,
        title: "Fibonacci layer: counts, f_n(q,t), φ(F_n), φ^-1(F_n), H_n",
        checks: &[
            ("fib-counts", &[("n", 14)]),
            ("fib-poly", &[("n", 12)]),
            ("phi-Fnk", &[("n", 12)]),
            ("phi-inv-Fn", &[("n", 12)]),
            ("Hn-mahonian", &[("n", 14)]),
        ],
        limit: None,
    },
    Criterion {
        id: 6,
        title: "partition layer: products to q^20, infinite pairs to length 14, CSV, GK",
        checks: &[
            ("rank-vs-no-ones", &[("degree", 20)]),
            ("p-neq1-product", &[("degree", 20)]),
            ("rank-interval-vs-residues", &[("degree", 20), ("max_modulus", 7)]),
            ("infinite-pairs", &[("max_len", 14)]),
            ("infinite-pairs-product", &[("degree", 20)]),
            ("csv-worked-example", &[]),
            ("csv-gk-conjugacy", &[("max_size", 22)]),
            ("gk-bijective", &[("max_len", 14), ("degree", 13)]),
        ],
        limit: Some(Duration::from_secs(300)),
    },
    Criterion {
        id: 7,
        title: "lucanomial positivity, the s,t-Catalan split, specializations, pattern pairs",
        checks: &[
            ("lucanomial-positivity", &[("n", 8)]),
            ("st-catalan-split", &[("n", 8)]),
            ("lucanomial-specializations", &[("n", 5)]),
            ("pattern-pairs", &[("n", 7)]),
        ],
        limit: None,
    },
    Criterion {
        id: 8,
        title: "prime map identities, MacMahon on multisets of size <= 8, e(w) = n - p(w)",
        checks: &[
            ("prime-map", &[("binary_len", 14)]),
            ("macmahon", &[("size", 8)]),
            ("excess-pairs", &[("n", 7)]),
        ],
        limit: None,
    },
];

fn ring_sample() -> Vec<LaurentPoly> {
    let m = |c: i64, q, t, z, s| LaurentPoly::monomial(BigInt::from(c), exponents(q, t, z, s));
    vec![
        LaurentPoly::zero(),
        LaurentPoly::one(),
        m(-3, 0, 0, 0, 0),
        &m(1, 1, 0, 0, 0) + &m(1, 0, 1, 0, 0),
        &m(2, -2, 1, 0, 0) - &m(5, 3, 0, -1, 0),
        &(&m(1, 0, 0, 1, 1) + &m(-1, 1, 2, -3, 0)) + &m(7, 0, 0, 0, 0),
        &m(4, -1, -1, 0, 0) * &m(1, 1, 0, 2, 1),
    ]
}

/// Ring axioms over every triple from a fixed sample.
fn ring_axioms() -> Option<String> {
    let sample = ring_sample();
    for a in &sample {
        if &(a + &LaurentPoly::zero()) != a || &(a * &LaurentPoly::one()) != a || !(a + &(-a.clone())).is_zero() {
            return Some(format!("identities fail at {a}"));
        }
        for b in &sample {
            if a + b != b + a || a * b != b * a {
                return Some(format!("commutativity fails at {a}, {b}"));
            }
            for c in &sample {
                if &(a + b) + c != a + &(b + c)
                    || &(a * b) * c != a * &(b * c)
                    || a * &(b + c) != &(a * b) + &(a * c)
                {
                    return Some(format!("associativity or distributivity fails at {a}, {b}, {c}"));
                }
            }
        }
    }
    None
}

fn report(id: u32, title: &str, problems: &[String], elapsed: Duration) -> bool {
    let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!("{verdict} criterion {id}: {title} ({} ms)", elapsed.as_millis());
    for p in problems {
        println!("    {p}");
    }
    problems.is_empty()
}

fn run_criterion(c: &Criterion) -> bool {
    let start = Instant::now();
    let mut problems = Vec::new();
    for &(check, bounds) in c.checks {
        let params: Params = bounds.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        match check_named(check, Profile::Full, &params) {
            Ok(r) if r.passed() => {}
            Ok(r) => problems.push(r.to_string()),
            Err(e) => problems.push(format!("{check}: {e}")),
        }
    }
    if c.id == 8 {
        problems.extend(ring_axioms());
    }
    let elapsed = start.elapsed();
    if let Some(limit) = c.limit {
        if elapsed > limit {
            problems.push(format!("took longer than {} s", limit.as_secs()));
        }
    }
    report(c.id, c.title, &problems, elapsed)
}

fn run_profile(profile: Profile, limit: Duration) -> (Vec<String>, Duration) {
    let start = Instant::now();
    let reports = run_suite(profile, |_| true);
    let elapsed = start.elapsed();
    let mut problems: Vec<String> =
        reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    if elapsed > limit {
        problems.push(format!("{profile:?} profile took longer than {} s", limit.as_secs()));
    }
    (problems, elapsed)
}

fn main() -> ExitCode {
    let mut ok = true;
    for c in CRITERIA {
        ok &= run_criterion(c);
    }
    let (mut problems, quick) = run_profile(Profile::Quick, Duration::from_secs(10));
    let (full_problems, full) = run_profile(Profile::Full, Duration::from_secs(600));
    problems.extend(full_problems);
    ok &= report(
        9,
        &format!("quick profile in {} ms, full profile in {} ms", quick.as_millis(), full.as_millis()),
        &problems,
        quick + full,
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
