//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use monores::analysis::{
    check_column_support, entries_from_ideal, rows_contained_in_ideal, Verdict,
};
use monores::batch::{run_suite, SuiteConfig};
use monores::compare::equivalent;
use monores::verify::Mutation;
use monores::{resolve, Monomial, MonomialIdeal};

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn ideal(text: &str) -> MonomialIdeal {
    monores::io::parse_ideal(&text.replace(',', "\n"), true).unwrap()
}

fn betti_vectors() -> Outcome {
    let cases = [
        ("y*z^2, x^5, x^3*y^2, y^5, z^5, x^3*z^3", [1, 6, 9, 4]),
        ("x^4, x^2*y^2, x*y^3, y^4, x^3*z, z^5", [1, 6, 9, 4]),
        ("x^5, x^4*y, x^2*y^3, x*y^4, y^5, z^5", [1, 6, 9, 4]),
        ("x^2, x*y, y^2, x*z, y*z, z^2", [1, 6, 8, 3]),
        ("x^3, x^2*y, y^3, z^3, x^2*z^2", [1, 5, 6, 2]),
        ("x^4, x^3*y*z, x^3*y^3, x^3*z^3, y^3*z^3", [1, 5, 6, 2]),
    ];
    let start = Instant::now();
    let mut wrong = Vec::new();
    for (text, expected) in cases {
        let got = resolve(&ideal(text)).unwrap().betti();
        if got != expected {
            wrong.push(format!("{text}: {got:?}"));
        }
    }
    let elapsed = start.elapsed();
    check(
        wrong.is_empty() && elapsed < Duration::from_secs(1),
        format!("6 ideals in {elapsed:?}; mismatches {wrong:?}"),
    )
}

fn max_entries_sharpness() -> Outcome {
    let res = resolve_fixture("example_C");
    let f2 = entries_from_ideal(&res.f2, &res.ideal);
    let f3 = entries_from_ideal(&res.f3, &res.ideal);
    let rows = rows_contained_in_ideal(&res);
    check(
        f2.count == 10 && f3.count == 4 && f3.common == Some(Monomial::z(5)) && rows == 4,
        format!(
            "f2 {} f3 {} common {:?} rows {}",
            f2.count, f3.count, f3.common, rows
        ),
    )
}

fn second_example_triples() -> Outcome {
    let res = resolve_fixture("example_B");
    let f3 = entries_from_ideal(&res.f3, &res.ideal);
    let triples: BTreeSet<Vec<usize>> = f3
        .positions
        .iter()
        .map(|&(_, c)| res.provenance3[c].iter().map(|i| i + 1).collect())
        .collect();
    let expected = BTreeSet::from([vec![2, 3, 6], vec![3, 4, 6]]);
    check(
        f3.count == 2 && f3.common == Some(Monomial::z(5)) && triples == expected,
        format!(
            "count {} common {:?} triples (1-based) {:?}",
            f3.count, f3.common, triples
        ),
    )
}

fn non_generic_structure() -> Outcome {
    let msq = resolve(&MonomialIdeal::maximal_power(2)).unwrap();
    let wide_pure = (0..msq.m()).any(|c| {
        let col: Vec<_> = msq.f3.column(c).collect();
        col.len() == 4 && col.iter().all(|e| e.value.mono().is_pure_power())
    });
    let j = resolve_fixture("example_J");
    let y2z = Monomial::new(0, 2, 1);
    let wide = (0..j.m()).find(|&c| {
        let col: Vec<_> = j.f3.column(c).collect();
        col.len() == 4 && col.iter().any(|e| e.value.mono() == y2z)
    });
    let shared_x2 = wide.is_some_and(|c| {
        j.f3.column(c).any(|e| {
            let (a, b) = j.provenance2[e.row];
            j.ideal.gen(a).exponents()[0] == 2 && j.ideal.gen(b).exponents()[0] == 2
        })
    });
    check(
        wide_pure && wide.is_some() && shared_x2,
        format!("m^2 four pure entries {wide_pure}; J wide column {wide:?}, shared x^2 pair {shared_x2}"),
    )
}

fn non_primary_counterexample() -> Outcome {
    let res = resolve_fixture("nonprimary");
    let threes = (0..res.m()).all(|c| {
        let col: Vec<_> = res.f3.column(c).collect();
        col.len() == 3 && col.iter().all(|e| e.value.mono().is_pure_power())
    });
    let verdict = check_column_support(&res);
    check(
        threes && !res.ideal.is_generic() && verdict == Verdict::NotApplicable,
        format!(
            "all columns three pure powers {threes}, generic {}, verdict {verdict:?}",
            res.ideal.is_generic()
        ),
    )
}

fn golden_matrices() -> Outcome {
    let mismatched: Vec<&str> = FIXTURES
        .iter()
        .copied()
        .filter(|name| !equivalent(&fixture_resolution(name), &resolve_fixture(name)))
        .collect();
    check(
        mismatched.is_empty(),
        format!(
            "{} fixtures compared; mismatched {mismatched:?}",
            FIXTURES.len()
        ),
    )
}

fn property_suite() -> Outcome {
    let cfg = SuiteConfig::default();
    let start = Instant::now();
    let summary = run_suite(&cfg).unwrap();
    let elapsed = start.elapsed();
    check(
        summary.instances >= 500 && summary.passed() && elapsed < Duration::from_secs(300),
        format!(
            "{} instances ({} generic, {} skipped), {} failures, {elapsed:?}",
            summary.instances,
            summary.generic,
            summary.skipped,
            summary.failures.len()
        ),
    )
}

fn n4_counts(text: &str) -> (usize, usize) {
    let res = resolve(&ideal(text)).unwrap();
    (
        entries_from_ideal(&res.f2, &res.ideal).count,
        entries_from_ideal(&res.f3, &res.ideal).count,
    )
}

fn boundary_case_as_stated() -> Outcome {
    let (f2, f3) = n4_counts("x^2, y^2, z^2, x*y");
    check(
        f2 == 6 && f3 == 0,
        format!("<x^2, y^2, z^2, xy>: f2 {f2}, f3 {f3} (expected 6, 0)"),
    )
}

fn boundary_case_all_positive() -> Outcome {
    let (f2, f3) = n4_counts("x^2, y^2, z^2, x*y*z");
    check(
        f2 == 6 && f3 == 0,
        format!("<x^2, y^2, z^2, xyz>: f2 {f2}, f3 {f3} (expected 6, 0)"),
    )
}

fn mutations() -> Outcome {
    let mut missed = Vec::new();
    let mut total = 0;
    for name in DISPLAYED {
        let res = fixture_resolution(name);
        for m in Mutation::ALL {
            total += 1;
            if m.is_caught(&res, 11) || !m.is_caught(&m.apply(&res), 11) {
                missed.push(format!("{name}/{m:?}"));
            }
        }
    }
    check(
        missed.is_empty(),
        format!("{total} mutations; missed {missed:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1", betti_vectors),
        ("2", max_entries_sharpness),
        ("3", second_example_triples),
        ("4", non_generic_structure),
        ("5", non_primary_counterexample),
        ("6", golden_matrices),
        ("7", property_suite),
        ("8", boundary_case_as_stated),
        ("8b", boundary_case_all_positive),
        ("9", mutations),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let outcome = panic::catch_unwind(run).unwrap_or_else(|_| Err(String::from("panicked")));
        match outcome {
            Ok(detail) => println!("criterion {id:<3} PASS  {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:<3} FAIL  {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
