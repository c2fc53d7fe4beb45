mod args;
mod output;

use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::Parser;
use mtheta::catalog::{self, MockThetaId};
use mtheta::density::{self, DensityResult, Schedule};
use mtheta::exec::{self, ExecMode};
use mtheta::numtheory;
use mtheta::verify::{self, Claim, ClaimKind, VerificationReport};
use serde::Serialize;

use args::{Cli, Command, Format, KindArg, RunOpts};
use output::Sink;

/// Verify rows as written to CSV.
#[derive(Serialize)]
struct VerifyRow<'a> {
    claim_id: &'a str,
    kind: String,
    depth: usize,
    status: &'static str,
    mismatch_index: Option<i64>,
    lhs: Option<&'a str>,
    rhs: Option<&'a str>,
    millis: f64,
}

impl<'a> From<&'a VerificationReport> for VerifyRow<'a> {
    fn from(r: &'a VerificationReport) -> Self {
        VerifyRow {
            claim_id: &r.claim_id,
            kind: r.kind.to_string(),
            depth: r.depth,
            status: if r.passed() { "pass" } else { "fail" },
            mismatch_index: r.mismatch.as_ref().map(|m| m.index),
            lhs: r.mismatch.as_ref().map(|m| m.lhs.as_str()),
            rhs: r.mismatch.as_ref().map(|m| m.rhs.as_str()),
            millis: r.wall_ms,
        }
    }
}

#[derive(Serialize)]
struct DensityRow<'a> {
    sequence: &'a str,
    #[serde(rename = "X")]
    x: u64,
    odd_count: u64,
    delta: &'a str,
}

impl<'a> From<&'a DensityResult> for DensityRow<'a> {
    fn from(r: &'a DensityResult) -> Self {
        DensityRow {
            sequence: &r.sequence,
            x: r.x,
            odd_count: r.odd_count,
            delta: &r.delta,
        }
    }
}

#[derive(Serialize)]
struct CoefRow {
    n: usize,
    coefficient: String,
}

#[derive(Serialize)]
struct PredicateRow {
    n: i64,
    target: String,
    special: bool,
    p: Option<u64>,
    a: Option<u32>,
    m: Option<u64>,
}

fn plain_verify(r: &VerificationReport) -> String {
    let mut s = format!(
        "{:<6} {:<34} {:>6}  {}",
        if r.passed() { "PASS" } else { "FAIL" },
        r.claim_id,
        r.depth,
        r.statement
    );
    if let Some(m) = &r.mismatch {
        s.push_str(&format!(
            "\n       first mismatch at n = {}: {} vs {}",
            m.index, m.lhs, m.rhs
        ));
    }
    if let Some(n) = r.note.as_deref().filter(|_| !r.passed()) {
        s.push_str(&format!("\n       {n}"));
    }
    s
}

fn select(kind: Option<KindArg>, ids: &[String]) -> Result<Vec<Claim>> {
    let all = verify::claims();
    if !ids.is_empty() {
        return ids.iter().map(|id| Ok(verify::find_claim(id)?)).collect();
    }
    Ok(match kind {
        None => all,
        Some(k) => {
            let k = match k {
                KindArg::Characterization => ClaimKind::Characterization,
                KindArg::Congruence => ClaimKind::Congruence,
                KindArg::Identity => ClaimKind::Identity,
                KindArg::Count => ClaimKind::CountFormula,
            };
            all.into_iter().filter(|c| c.kind == k).collect()
        }
    })
}

/// Runs claims and writes reports; true iff all passed.
fn run_verify(claims: &[Claim], opts: &RunOpts, format: Format, sink: &mut Sink) -> Result<bool> {
    let mode = if opts.sequential {
        ExecMode::Sequential
    } else {
        ExecMode::Parallel
    };
    let mut reports = verify::run_claims(claims, &opts.depth, mode);
    if !opts.timing {
        reports.iter_mut().for_each(|r| r.wall_ms = 0.0);
    }
    match format {
        Format::Json => sink.emit(format, &reports, |_| String::new())?,
        _ => {
            let rows: Vec<VerifyRow> = reports.iter().map(VerifyRow::from).collect();
            let by_id: std::collections::HashMap<&str, &VerificationReport> =
                reports.iter().map(|r| (r.claim_id.as_str(), r)).collect();
            sink.emit(format, &rows, |row| plain_verify(by_id[row.claim_id]))?;
        }
    }
    let ok = verify::all_passed(&reports);
    if format == Format::Plain {
        let failed = reports.iter().filter(|r| !r.passed()).count();
        sink.line(&format!(
            "{} claims, {} passed, {} failed",
            reports.len(),
            reports.len() - failed,
            failed
        ))?;
    }
    Ok(ok)
}

fn density_rows(rows: &[DensityResult], format: Format, sink: &mut Sink) -> Result<()> {
    let out: Vec<DensityRow> = rows.iter().map(DensityRow::from).collect();
    sink.emit(format, &out, |r| {
        format!(
            "{:<16} X={:<8} odd={:<8} delta={}",
            r.sequence, r.x, r.odd_count, r.delta
        )
    })
}

fn run(cli: Cli) -> Result<bool> {
    let format = cli
        .common
        .format
        .unwrap_or_else(|| cli.command.default_format());
    // validate inputs that clap cannot see before any work starts
    match &cli.command {
        Command::Predicate { cond, n, to } => {
            numtheory::special_predicates(*cond)?;
            if to.is_some_and(|t| t < *n) {
                bail!(Usage("--to must not be below --n".into()));
            }
        }
        Command::Expand { id, rep, .. } => {
            representation(*id, rep)?;
        }
        Command::Density { limit: 0, .. } | Command::Table1 { limit: 0 } => {
            bail!(Usage("--limit must be at least 1".into()))
        }
        Command::Verify { claim, .. } => {
            for c in claim {
                verify::find_claim(c).map_err(|e| Usage(e.to_string()))?;
            }
        }
        _ => {}
    }
    let mut sink = Sink::open(cli.common.out.as_deref())?;
    let threads = cli.common.threads;
    let ok = exec::with_threads(threads, || -> Result<bool> {
        match cli.command {
            Command::Expand { id, terms, rep } => {
                let r = representation(id, &rep)?;
                let s = r.expand(terms)?;
                let rows: Vec<CoefRow> = (0..terms)
                    .map(|n| CoefRow {
                        n,
                        coefficient: s.coeff(n as i64).map(|c| c.to_string()).unwrap_or_default(),
                    })
                    .collect();
                sink.emit(format, &rows, |r| format!("{}\t{}", r.n, r.coefficient))?;
                Ok(true)
            }
            Command::Parity { id, terms } => {
                let ones = catalog::parity(id, terms)?.ones();
                #[derive(Serialize)]
                struct Odd {
                    n: usize,
                }
                let rows: Vec<Odd> = ones.into_iter().map(|n| Odd { n }).collect();
                sink.emit(format, &rows, |r| r.n.to_string())?;
                Ok(true)
            }
            Command::Verify {
                claim, kind, run, ..
            } => run_verify(&select(kind, &claim)?, &run, format, &mut sink),
            Command::Identities { run } => run_verify(
                &select(Some(KindArg::Identity), &[])?,
                &run,
                format,
                &mut sink,
            ),
            Command::Counts { run } => {
                run_verify(&select(Some(KindArg::Count), &[])?, &run, format, &mut sink)
            }
            Command::Density {
                seq,
                limit,
                step,
                factor,
                upto,
            } => {
                let schedule = match (step, factor) {
                    (Some(s), _) => Some(Schedule::Linear(s)),
                    (None, Some(f)) => Some(Schedule::Geometric(f)),
                    _ => None,
                };
                let per_seq = exec::map(ExecMode::Parallel, &seq, |s| match schedule {
                    Some(sch) => density::density_profile(s, limit, sch, upto.unwrap_or(limit)),
                    None => density::delta(s, limit).map(|r| vec![r]),
                });
                let mut rows = Vec::new();
                for r in per_seq {
                    rows.extend(r?);
                }
                density_rows(&rows, format, &mut sink)?;
                Ok(true)
            }
            Command::Table1 { limit } => {
                let rows = density::table1_compare(limit, ExecMode::Parallel)?;
                if format == Format::Plain {
                    let show_printed = limit == density::TABLE1_DEFAULT_X;
                    for r in &rows {
                        let mut s = format!(
                            "{:<16} X={:<8} odd={:<8} delta={}",
                            r.result.sequence, r.result.x, r.result.odd_count, r.result.delta
                        );
                        if show_printed {
                            s.push_str(&format!("  printed={} diff={:+}", r.printed, r.diff_units));
                        }
                        sink.line(&s)?;
                    }
                } else {
                    let results: Vec<DensityResult> = rows.into_iter().map(|r| r.result).collect();
                    density_rows(&results, format, &mut sink)?;
                }
                Ok(true)
            }
            Command::Predicate { cond, n, to } => {
                let c = numtheory::special_predicates(cond)?;
                let rows = (n..=to.unwrap_or(n))
                    .map(|k| {
                        let w = numtheory::is_special_form(&c, k)?;
                        Ok(PredicateRow {
                            n: k,
                            target: c.target(k).to_string(),
                            special: w.is_some(),
                            p: w.map(|w| w.p),
                            a: w.map(|w| w.a),
                            m: w.map(|w| w.m),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                sink.emit(format, &rows, |r| match (r.p, r.a, r.m) {
                    (Some(p), Some(a), Some(m)) => {
                        format!(
                            "n={}: {}*{}{:+} = {} = {p}^{} * {m}^2, true",
                            r.n,
                            c.a,
                            r.n,
                            c.b,
                            r.target,
                            4 * a + 1
                        )
                    }
                    _ => format!("n={}: {}*{}{:+} = {}, false", r.n, c.a, r.n, c.b, r.target),
                })?;
                Ok(true)
            }
        }
    })?;
    sink.finish()?;
    Ok(ok)
}

#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn representation(id: MockThetaId, rep: &str) -> Result<&'static catalog::Representation> {
    let e = catalog::entry(id);
    e.by_label(rep)
        .or_else(|| e.representations.iter().find(|r| r.kind.to_string() == rep))
        .ok_or_else(|| {
            let labels: Vec<&str> = e.representations.iter().map(|r| r.label).collect();
            anyhow!(Usage(format!(
                "{} has no representation `{rep}` (available: {})",
                id.slug(),
                labels.join(", ")
            )))
        })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e.downcast_ref::<Usage>().is_some()
                || matches!(
                    e.downcast_ref::<numtheory::NumError>(),
                    Some(numtheory::NumError::NoCharacterization(_))
                );
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
