//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero on any FAIL.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fdl_core::oracle::sweeps::{self, SweepConfig};
use fdl_core::tables::compute_all;
use fdl_core::{design, Big as BigUint};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

/// Expected ladders, deepest level first, for `n` and (when present) `m`.
const WORKED: [(usize, usize, &[&str], &[&str]); 6] = [
    (11, 3, &["2", "1,2", "4,4,3"], &[]),
    (13, 5, &["2", "2,1", "1,2,2", "3,3,2,3,2"], &[]),
    (
        16,
        6,
        &["2,2", "1,2,1,2", "3,3,2,3,3,2"],
        &["3,1", "1,1,2,2", "3,3,3,2,3,2"],
    ),
    (
        26,
        10,
        &["2,2", "2,1,2,1", "1,2,2,1,2,2", "3,3,2,3,2,3,3,2,3,2"],
        &["1,3", "2,2,1,1", "1,2,1,2,2,2", "3,3,2,3,3,2,3,2,3,2"],
    ),
    (
        24,
        9,
        &["2,2,2", "1,2,1,2,1,2", "3,3,2,3,3,2,3,3,2"],
        &["3,2,1", "1,1,2,1,2,2", "3,3,3,2,3,3,2,3,2"],
    ),
    (
        39,
        15,
        &[
            "2,2,2",
            "2,1,2,1,2,1",
            "1,2,2,1,2,2,1,2,2",
            "3,3,2,3,2,3,3,2,3,2,3,3,2,3,2",
        ],
        &[
            "1,2,3",
            "2,2,1,2,1,1",
            "1,2,1,2,2,1,2,2,2",
            "3,3,2,3,3,2,3,2,3,3,2,3,2,3,2",
        ],
    ),
];

fn worked_examples() -> Outcome {
    let mut lines = 0;
    for (m, k, want_n, want_m) in WORKED {
        let d = design(m, k).map_err(|e| format!("({m},{k}): {e}"))?;
        let got_n: Vec<String> = d.lift_n.iter().map(|l| l.sequence.to_string()).collect();
        if got_n != want_n {
            return Err(format!("({m},{k}) n ladder {got_n:?}"));
        }
        let got_m: Vec<String> = d
            .lift_m
            .iter()
            .flatten()
            .map(|l| l.sequence.to_string())
            .collect();
        if got_m != want_m {
            return Err(format!("({m},{k}) m ladder {got_m:?}"));
        }
        lines += want_n.len() + want_m.len();
    }
    Ok(format!("{lines} sequences across 6 instances"))
}

const TABLE_ROWS: [(&str, u64); 24] = [
    ("3,3,2,1,5,2", 3543),
    ("3,3,2,2,4,2", 4327),
    ("3,3,2,3,3,2", 4599),
    ("3,3,2,4,2,2", 4359),
    ("3,3,2,5,1,2", 3607),
    ("2,3,2,3,3,3", 4231),
    ("3,2,2,3,3,3", 4395),
    ("3,2,3,2,3,3", 4439),
    ("3,2,3,3,2,3", 4455),
    ("3,2,3,3,3,2", 4579),
    ("3,3,2,3,3,2", 4599),
    ("3,3,3,2,3,2", 4599),
    ("(1,1,5,1,1,1)→(3,3,3,2,2,2,2,3,3,3)", 1072727),
    ("(1,1,4,2,1,1)→(3,3,3,2,2,2,3,2,3,3)", 1084591),
    ("(1,1,3,3,1,1)→(3,3,3,2,2,3,2,2,3,3)", 1086295),
    ("(1,1,2,4,1,1)→(3,3,3,2,3,2,2,2,3,3)", 1084655),
    ("(1,1,1,5,1,1)→(3,3,3,3,2,2,2,2,3,3)", 1073111),
    ("(2,2,2,1,2,1)→(3,2,3,2,3,2,3,3,2,3)", 1104735),
    ("(2,2,1,2,2,1)→(3,2,3,2,3,3,2,3,2,3)", 1104799),
    ("(2,2,1,2,1,2)→(3,2,3,2,3,3,2,3,3,2)", 1136415),
    ("(2,1,2,2,1,2)→(3,2,3,3,2,3,2,3,3,2)", 1136495),
    ("(1,2,2,2,1,2)→(3,3,2,3,2,3,2,3,3,2)", 1140511),
    ("(1,2,2,1,2,2)→(3,3,2,3,2,3,3,2,3,2)", 1141023),
    ("(1,2,1,2,2,2)→(3,3,2,3,3,2,3,2,3,2)", 1141023),
];

fn table_rows() -> Outcome {
    let rows = compute_all().map_err(|e| e.to_string())?;
    if rows.len() != TABLE_ROWS.len() {
        return Err(format!("{} rows computed", rows.len()));
    }
    for (row, (label, b)) in rows.iter().zip(TABLE_ROWS) {
        if row.label() != label || row.b != BigUint::from(b) {
            return Err(format!(
                "got {} = {}, want {label} = {b}",
                row.label(),
                row.b
            ));
        }
    }
    Ok(format!("{} rows bit-exact", rows.len()))
}

fn sweep_outcome(r: sweeps::SweepReport) -> Outcome {
    if r.passed() {
        let mut s = r.to_string();
        for n in &r.notes {
            s.push_str("; ");
            s.push_str(n);
        }
        Ok(s)
    } else {
        Err(format!("{r}; first: {}", r.failures[0]))
    }
}

fn optimality() -> Outcome {
    sweep_outcome(sweeps::optimality(&SweepConfig::default()))
}

fn oracle_pinning() -> Outcome {
    sweep_outcome(sweeps::oracle_pinning(12, 4, false))
}

fn lemma_suites() -> Outcome {
    let reports = sweeps::run_all(&SweepConfig::default());
    let total: usize = reports.iter().map(|r| r.checked).sum();
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(format!("{} suites, {total} cases, seed 0", reports.len())),
        Some(r) => Err(format!("{r}; first: {}", r.failures[0])),
    }
}

fn gcd_two() -> Outcome {
    sweep_outcome(sweeps::gcd_two_equality(40, false))
}

fn fdl(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fdl"))
        .args(args)
        .output()
        .expect("fdl binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn cli_contract() -> Outcome {
    let expect = |args: &[&str], code: i32, needle: &str| -> Result<String, String> {
        let (got, out, err) = fdl(args);
        if err.contains("panicked") {
            return Err(format!("{args:?} panicked: {err}"));
        }
        if got != code || !out.contains(needle) {
            return Err(format!(
                "{args:?} exited {got}, stdout {out:?}, stderr {err:?}"
            ));
        }
        Ok(out)
    };
    expect(&["verify", "-M", "16", "-k", "6"], 0, "AGREE")?;
    expect(&["verify", "-M", "11", "-k", "3"], 0, "AGREE")?;
    // 24 fibers exceed the default cap of 22
    expect(&["verify", "-M", "24", "-k", "9"], 2, "")?;
    expect(
        &["verify", "-M", "24", "-k", "9", "--brute-cap", "24"],
        0,
        "both candidates optimal here: yes",
    )?;

    let json = expect(
        &["design", "-M", "26", "-k", "10", "--format", "json"],
        0,
        "",
    )?;
    let v: serde_json::Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    let candidates = v["candidates"].as_array().ok_or("no candidates array")?;
    if candidates.len() != 2
        || candidates.iter().any(|c| {
            c["B"] != "1141023"
                || !c["delays"]
                    .as_array()
                    .is_some_and(|d| d.iter().all(|x| x.is_string()))
        })
    {
        return Err(format!("design json {json}"));
    }

    let malformed = [
        "3,x",
        "",
        ",",
        "0,3",
        "1,3,2,5,1,4",
        "3,3,2",
        "-1,17",
        "99999999999999999999999,1",
        "3;3;2;3;3;2",
    ];
    for p in malformed {
        expect(&["value", "-M", "16", "-k", "6", "--profile", p], 2, "")?;
    }
    expect(&["value", "-M", "16", "-k", "6"], 2, "")?;
    expect(&["design", "-M", "5", "-k", "0"], 2, "")?;
    expect(&["design", "-M", "abc", "-k", "2"], 2, "")?;
    Ok(format!(
        "4 verify runs, json B strings, {} malformed inputs",
        malformed.len() + 3
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 worked examples", worked_examples, Duration::from_secs(1)),
        ("2 table reproduction", table_rows, Duration::from_secs(1)),
        (
            "3 exhaustive optimality, M <= 14",
            optimality,
            Duration::from_secs(30),
        ),
        (
            "4 subset-sum pinning, M <= 12, k <= 4",
            oracle_pinning,
            Duration::from_secs(60),
        ),
        ("5 lemma suites", lemma_suites, Duration::from_secs(120)),
        (
            "6 gcd 2 equality, M <= 40",
            gcd_two,
            Duration::from_secs(10),
        ),
        ("7 cli contract", cli_contract, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {budget:?}")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {name} ({:.2?}): {detail}",
            if ok { "PASS" } else { "FAIL" },
            took
        );
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
