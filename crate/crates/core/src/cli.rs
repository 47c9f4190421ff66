//! The `fdl` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or lemma sweep finds a
//! disagreement, 2 on usage and domain errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::construction::Construction;
use crate::error::{Error, Result};
use crate::optimizer::{design, Classification, DesignResult, LevelSequence};
use crate::oracle::sweeps::{run_all, SweepConfig};
use crate::oracle::{verify_instance, DEFAULT_BRUTE_CAP};
use crate::profile::Profile;
use crate::tables::{compute_all, TABLES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "fdl",
    version,
    about = "Optimal fiber delay line profiles with a bounded number of recirculations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct Instance {
    /// Number of fibers M.
    #[arg(short = 'M', long = "fibers")]
    pub m: usize,
    /// Maximum number of recirculations k.
    #[arg(short = 'k', long = "recirc")]
    pub k: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct the candidate optimal profile(s) for (M, k).
    Design(Instance),
    /// Delays and B of a given profile.
    Value {
        /// Number of fibers M (defaults to the profile sum).
        #[arg(short = 'M', long = "fibers")]
        m: Option<usize>,
        /// Recirculations k (defaults to the profile length).
        #[arg(short = 'k', long = "recirc")]
        k: Option<usize>,
        /// Comma-separated block sizes, e.g. 3,3,2,3,2.
        #[arg(long)]
        profile: String,
    },
    /// Compare the design with an exhaustive search.
    Verify {
        #[command(flatten)]
        instance: Instance,
        /// Largest M the exhaustive search will accept.
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        brute_cap: usize,
    },
    /// Recompute the reference tables.
    Tables,
    /// Run the lemma sweeps.
    Lemmas {
        /// Largest M for the exhaustive level-1 sweeps.
        #[arg(long)]
        max_m: Option<usize>,
        /// Largest M for the exhaustive level-2..4 sweeps.
        #[arg(long)]
        max_m_deep: Option<usize>,
        /// Cases per sampled suite.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print every checked case.
        #[arg(long)]
        verbose: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let text = match &cli.command {
        Command::Design(i) => design_report(i.m, i.k, cli.format)?,
        Command::Value { m, k, profile } => value_report(*m, *k, profile, cli.format)?,
        Command::Verify {
            instance,
            brute_cap,
        } => return verify_report(instance.m, instance.k, *brute_cap, cli.format, out),
        Command::Tables => tables_report(cli.format)?,
        Command::Lemmas {
            max_m,
            max_m_deep,
            samples,
            seed,
            verbose,
        } => {
            let mut cfg = SweepConfig {
                seed: *seed,
                verbose: *verbose,
                ..SweepConfig::default()
            };
            if let Some(m) = max_m {
                cfg.max_m_top = *m;
                cfg.max_m_sample_top = *m;
            }
            if let Some(m) = max_m_deep {
                cfg.max_m_deep = *m;
                cfg.max_m_sample_deep = *m;
            }
            if let Some(s) = samples {
                cfg.samples = *s;
            }
            return lemmas_report(&cfg, cli.format, out);
        }
    };
    emit(out, &text)?;
    Ok(0)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Precondition(format!("cannot write output: {e}")))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn joined<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).join(",")
}

fn candidate_json(p: &Profile) -> Result<Value> {
    let c = Construction::<BigUint>::build(p)?;
    Ok(json!({
        "profile": p.parts(),
        "delays": c.delays().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "B": c.max_representable().to_string(),
    }))
}

fn csv_rows<'a>(rows: impl Iterator<Item = (String, &'a BigUint)>) -> String {
    let mut s = String::from("profile,B\n");
    for (label, b) in rows {
        s.push_str(&format!("\"{label}\",{b}\n"));
    }
    s
}

fn ladder_line(ladder: &[LevelSequence]) -> String {
    ladder
        .iter()
        .map(|l| format!("({})", l.sequence))
        .join(" -> ")
}

fn design_report(m: usize, k: usize, format: Format) -> Result<String> {
    let d = design(m, k)?;
    match format {
        Format::Json => {
            let candidates = d
                .candidates()
                .map(|(p, _)| candidate_json(p))
                .collect::<Result<Vec<_>>>()?;
            Ok(pretty(&json!({
                "m": m,
                "k": k,
                "gcd": d.trace.gcd(),
                "depth": d.trace.depth(),
                "classification": d.classification,
                "candidates": candidates,
            })))
        }
        Format::Csv => Ok(csv_rows(d.candidates().map(|(p, b)| (p.to_string(), b)))),
        Format::Human => design_human(&d),
    }
}

fn design_human(d: &DesignResult) -> Result<String> {
    let t = &d.trace;
    let mut s = String::new();
    s.push_str(&format!("instance      M={} k={}\n", t.m(), t.k()));
    s.push_str(&format!("remainders    {}\n", joined(t.remainders())));
    s.push_str(&format!("quotients     {}\n", joined(t.quotients())));
    s.push_str(&format!(
        "depth         {} ({})\n",
        t.depth(),
        if t.depth_is_odd() { "odd" } else { "even" }
    ));
    s.push_str(&format!("gcd           {}\n", t.gcd()));
    s.push_str(&format!("classification {}\n", d.classification));
    let lifts = std::iter::once(&d.lift_n).chain(d.lift_m.as_ref());
    for (name, ((p, _), ladder)) in ["n", "m"].iter().zip(d.candidates().zip(lifts)) {
        let c = Construction::<BigUint>::build(p)?;
        s.push_str(&format!("\ncandidate {name}   {p}\n"));
        s.push_str(&format!("  lift        {}\n", ladder_line(ladder)));
        s.push_str(&format!("  delays      {}\n", joined(c.delays())));
        s.push_str(&format!("  B           {}\n", c.max_representable()));
    }
    if d.classification == Classification::AtMostTwo {
        s.push_str(
            "\nnote: with gcd >= 3 at most two profiles are optimal; that both candidates \
             are optimal is not established in general (check small cases with `fdl verify`)\n",
        );
    }
    Ok(s)
}

fn value_report(m: Option<usize>, k: Option<usize>, text: &str, format: Format) -> Result<String> {
    let parsed: Profile = text.parse()?;
    let m = m.unwrap_or(parsed.total());
    let k = k.unwrap_or(parsed.len());
    let p = Profile::in_space(m, k, parsed.parts().to_vec())?;
    let c = Construction::<BigUint>::build(&p)?;
    Ok(match format {
        Format::Json => {
            let mut v = json!({ "m": m, "k": k });
            if let (Value::Object(obj), Value::Object(rest)) = (&mut v, candidate_json(&p)?) {
                obj.extend(rest);
            }
            pretty(&v)
        }
        Format::Csv => csv_rows(std::iter::once((p.to_string(), c.max_representable()))),
        Format::Human => format!(
            "profile  {p}\ndelays   {}\nB        {}\n",
            joined(c.delays()),
            c.max_representable()
        ),
    })
}

fn verify_report(
    m: usize,
    k: usize,
    cap: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    let a = verify_instance(m, k, cap)?;
    let verdict = if a.agrees { "AGREE" } else { "DISAGREE" };
    let gcd = a.design.trace.gcd();
    let text = match format {
        Format::Json => {
            let candidates = a
                .design
                .candidates()
                .map(|(p, b)| json!({ "profile": p.parts(), "B": b.to_string(), "optimal": a.optimal.contains(p) }))
                .collect::<Vec<_>>();
            pretty(&json!({
                "m": m,
                "k": k,
                "gcd": gcd,
                "classification": a.design.classification,
                "space_size": a.optimal.space_size,
                "best_B": a.optimal.best_b.to_string(),
                "argmax": a.optimal.argmax.iter().map(|p| p.parts()).collect::<Vec<_>>(),
                "candidates": candidates,
                "all_candidates_optimal": a.all_candidates_optimal,
                "result": verdict,
            }))
        }
        Format::Csv => csv_rows(
            a.optimal
                .argmax
                .iter()
                .map(|p| (p.to_string(), &a.optimal.best_b)),
        ),
        Format::Human => {
            let mut s = format!(
                "instance     M={m} k={k} gcd={gcd} ({})\nsearched     {} profiles\nbest B       {}\nargmax       {}\n",
                a.design.classification,
                a.optimal.space_size,
                a.optimal.best_b,
                a.optimal.argmax.iter().map(|p| format!("({p})")).join(" ")
            );
            for (p, b) in a.design.candidates() {
                s.push_str(&format!(
                    "candidate    ({p}) B={b} {}\n",
                    if a.optimal.contains(p) {
                        "optimal"
                    } else {
                        "not optimal"
                    }
                ));
            }
            if gcd >= 3 {
                s.push_str(&format!(
                    "both candidates optimal here: {}\n",
                    if a.all_candidates_optimal {
                        "yes"
                    } else {
                        "no"
                    }
                ));
            }
            s.push_str(verdict);
            s.push('\n');
            s
        }
    };
    emit(out, &text)?;
    Ok(if a.agrees { 0 } else { 1 })
}

fn tables_report(format: Format) -> Result<String> {
    let rows = compute_all()?;
    Ok(match format {
        Format::Csv => csv_rows(rows.iter().map(|r| (r.label(), &r.b))),
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|r| {
                    json!({
                        "table": r.table,
                        "level_two": r.level_two.as_ref().map(|l| l.parts()),
                        "profile": r.profile.parts(),
                        "B": r.b.to_string(),
                    })
                })
                .collect(),
        )),
        Format::Human => {
            let mut s = String::new();
            for t in &TABLES {
                if !s.is_empty() {
                    s.push('\n');
                }
                s.push_str(&format!(
                    "Table {}: {} (M={}, k={})\n",
                    t.number, t.title, t.m, t.k
                ));
                for r in rows.iter().filter(|r| r.table == t.number) {
                    s.push_str(&format!("  {:<40} {}\n", r.label(), r.b));
                }
            }
            s
        }
    })
}

fn lemmas_report(cfg: &SweepConfig, format: Format, out: &mut dyn Write) -> Result<i32> {
    let reports = run_all(cfg);
    let passed = reports.iter().all(|r| r.passed());
    let text = match format {
        Format::Json => pretty(&json!({
            "seed": cfg.seed,
            "suites": reports.iter().map(|r| json!({
                "name": r.name,
                "checked": r.checked,
                "failed": r.failures.len(),
                "failures": r.failures,
                "notes": r.notes,
            })).collect::<Vec<_>>(),
            "passed": passed,
        })),
        Format::Csv => {
            let mut s = String::from("suite,checked,failed\n");
            for r in &reports {
                s.push_str(&format!(
                    "\"{}\",{},{}\n",
                    r.name,
                    r.checked,
                    r.failures.len()
                ));
            }
            s
        }
        Format::Human => {
            let mut s = format!("seed {}\n", cfg.seed);
            for r in &reports {
                for line in &r.cases {
                    s.push_str(line);
                    s.push('\n');
                }
                if !cfg.verbose {
                    for line in &r.failures {
                        s.push_str(&format!("FAIL {line}\n"));
                    }
                }
                s.push_str(&format!("{r}\n"));
                for n in &r.notes {
                    s.push_str(&format!("  {n}\n"));
                }
            }
            s
        }
    };
    emit(out, &text)?;
    Ok(if passed { 0 } else { 1 })
}
