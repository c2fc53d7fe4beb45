//! Executable restatements of the parity theorems: characterizations,
//! congruences, exact identities and closed counts. Every claim produces a
//! [`VerificationReport`] with the first mismatch when it fails.

mod claims;
pub mod expr;
mod manifest;

use std::cmp::Ordering;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogError, MockThetaId};
use crate::exec::{self, ExecMode};
use crate::numtheory::{self, NumError};
use crate::qseries::{ParitySeries, SeriesError};
use expr::{Ex, Px};

pub use claims::{claims, rho3_predicted_parity};
pub use manifest::{manifest, TheoremEntry};

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("no claim with id {0}")]
    UnknownClaim(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    Characterization,
    Congruence,
    Identity,
    #[serde(rename = "count")]
    CountFormula,
}

impl std::fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ClaimKind::Characterization => "characterization",
            ClaimKind::Congruence => "congruence",
            ClaimKind::Identity => "identity",
            ClaimKind::CountFormula => "count",
        })
    }
}

/// Which profile depth a claim runs at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DepthClass {
    /// exact identities over Q
    Identity,
    /// mod-2 statements
    Parity,
    /// mod-4 and exact coefficient relations
    Modular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub identity: usize,
    pub parity: usize,
    pub modular: usize,
}

impl Default for Profile {
    fn default() -> Self {
        Profile {
            identity: 300,
            parity: 5000,
            modular: 2000,
        }
    }
}

impl Profile {
    pub fn uniform(n: usize) -> Profile {
        Profile {
            identity: n,
            parity: n,
            modular: n,
        }
    }

    pub fn depth(&self, class: DepthClass) -> usize {
        match class {
            DepthClass::Identity => self.identity,
            DepthClass::Parity => self.parity,
            DepthClass::Modular => self.modular,
        }
    }
}

/// What is compared.
#[derive(Clone)]
pub enum Check {
    /// Coefficients `from..N`, exactly (`modulus == 0`) or modulo `modulus`.
    Exact {
        lhs: Ex,
        rhs: Ex,
        modulus: u32,
    },
    /// GF(2) sequences on `0..N`.
    Parity {
        lhs: Px,
        rhs: Px,
    },
    /// `count_formula(id, M)` against the running count of odd terms, all `M < N`.
    Count {
        id: MockThetaId,
    },
    Custom(Arc<dyn Fn(usize) -> Result<Outcome, VerifyError> + Send + Sync>),
}

#[derive(Clone)]
pub struct Claim {
    pub id: String,
    pub kind: ClaimKind,
    pub subject: Option<MockThetaId>,
    pub statement: String,
    pub depth: DepthClass,
    /// First index compared; `None` starts at the lowest exponent present.
    pub from: Option<i64>,
    pub check: Check,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub index: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub compared: usize,
    pub mismatch: Option<Mismatch>,
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub kind: ClaimKind,
    pub statement: String,
    pub depth: usize,
    pub status: Status,
    pub compared: usize,
    pub mismatch: Option<Mismatch>,
    pub note: Option<String>,
    pub wall_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Flat record for CSV output.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub claim_id: String,
    pub kind: String,
    pub depth: usize,
    pub status: String,
    pub compared: usize,
    pub mismatch_index: Option<i64>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub note: Option<String>,
    pub wall_ms: f64,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> Self {
        ReportRecord {
            claim_id: r.claim_id.clone(),
            kind: r.kind.to_string(),
            depth: r.depth,
            status: if r.passed() {
                "pass".into()
            } else {
                "fail".into()
            },
            compared: r.compared,
            mismatch_index: r.mismatch.as_ref().map(|m| m.index),
            lhs: r.mismatch.as_ref().map(|m| m.lhs.clone()),
            rhs: r.mismatch.as_ref().map(|m| m.rhs.clone()),
            note: r.note.clone(),
            wall_ms: r.wall_ms,
        }
    }
}

/// Orders ids like `R2 < R10 < R10-chi`.
pub fn claim_order(a: &str, b: &str) -> Ordering {
    fn key(s: &str) -> Vec<(String, u64)> {
        let mut out = Vec::new();
        let mut text = String::new();
        let mut num = String::new();
        for ch in s.chars() {
            if ch.is_ascii_digit() {
                num.push(ch);
            } else {
                if !num.is_empty() {
                    out.push((std::mem::take(&mut text), num.parse().unwrap_or(0)));
                    num.clear();
                }
                text.push(ch);
            }
        }
        out.push((text, num.parse().unwrap_or(0)));
        out
    }
    key(a).cmp(&key(b)).then_with(|| a.cmp(b))
}

fn bit(b: bool) -> String {
    u8::from(b).to_string()
}

fn compare_parity(a: &ParitySeries, b: &ParitySeries, n: usize) -> Outcome {
    let n = n.min(a.precision()).min(b.precision());
    let mismatch = (0..n).find(|&i| a.get(i) != b.get(i)).map(|i| Mismatch {
        index: i as i64,
        lhs: bit(a.get(i)),
        rhs: bit(b.get(i)),
    });
    Outcome {
        compared: n,
        mismatch,
        note: None,
    }
}

fn short(n: usize, reached: usize, side: &str) -> Outcome {
    Outcome {
        compared: reached,
        mismatch: Some(Mismatch {
            index: reached as i64,
            lhs: String::new(),
            rhs: String::new(),
        }),
        note: Some(format!(
            "{side} side reached only {reached} of {n} coefficients"
        )),
    }
}

fn run_check(claim: &Claim, n: usize) -> Result<Outcome, VerifyError> {
    match &claim.check {
        Check::Exact { lhs, rhs, modulus } => {
            let (a, b) = (lhs.eval(n as i64)?, rhs.eval(n as i64)?);
            for (s, side) in [(&a, "left"), (&b, "right")] {
                if (s.precision() as usize) < n {
                    return Ok(short(n, s.precision().max(0) as usize, side));
                }
            }
            let from = claim
                .from
                .unwrap_or_else(|| a.offset().min(b.offset()).min(0))
                .min(n as i64);
            let mut out = Outcome {
                compared: (n as i64 - from) as usize,
                ..Outcome::default()
            };
            if *modulus == 0 {
                out.mismatch = a
                    .first_mismatch(&b, from, n as i64)
                    .map(|(index, x, y)| Mismatch {
                        index,
                        lhs: x.to_string(),
                        rhs: y.to_string(),
                    });
            } else {
                let m = num_bigint::BigInt::from(*modulus);
                for e in from..n as i64 {
                    let (x, y) = (a.int_coeff(e)?, b.int_coeff(e)?);
                    let d = (&x - &y) % &m;
                    if d != num_bigint::BigInt::from(0) {
                        out.mismatch = Some(Mismatch {
                            index: e,
                            lhs: x.to_string(),
                            rhs: y.to_string(),
                        });
                        break;
                    }
                }
            }
            Ok(out)
        }
        Check::Parity { lhs, rhs } => {
            let (a, b) = (lhs.eval(n)?, rhs.eval(n)?);
            for (s, side) in [(&a, "left"), (&b, "right")] {
                if s.precision() < n {
                    return Ok(short(n, s.precision(), side));
                }
            }
            let mut out = compare_parity(&a, &b, n);
            if let Some(f) = claim.from.filter(|&f| f > 0 && (f as usize) < n) {
                out = compare_parity(&a.shifted(-f), &b.shifted(-f), n - f as usize);
                out.mismatch.iter_mut().for_each(|m| m.index += f);
            }
            Ok(out)
        }
        Check::Count { id } => {
            let bits = match id {
                MockThetaId::Omega3 => expr::func_par(*id).dissect(2, 0).eval(n)?,
                _ => expr::func_par(*id).eval(n)?,
            };
            let mut running = 0u64;
            for m in 0..n {
                running += u64::from(bits.get(m));
                let formula = numtheory::count_formula(*id, m as u64)?;
                if formula != running {
                    return Ok(Outcome {
                        compared: m + 1,
                        mismatch: Some(Mismatch {
                            index: m as i64,
                            lhs: formula.to_string(),
                            rhs: running.to_string(),
                        }),
                        note: None,
                    });
                }
            }
            Ok(Outcome {
                compared: n,
                mismatch: None,
                note: Some(format!("{running} odd terms below {n}")),
            })
        }
        Check::Custom(f) => f(n),
    }
}

/// Runs one claim to depth `n`. Evaluation errors become failed reports.
pub fn run_claim(claim: &Claim, n: usize) -> VerificationReport {
    let start = Instant::now();
    let outcome = run_check(claim, n).unwrap_or_else(|e| Outcome {
        compared: 0,
        mismatch: Some(Mismatch {
            index: -1,
            lhs: String::new(),
            rhs: String::new(),
        }),
        note: Some(format!("evaluation error: {e}")),
    });
    VerificationReport {
        claim_id: claim.id.clone(),
        kind: claim.kind,
        statement: claim.statement.clone(),
        depth: n,
        status: if outcome.mismatch.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        compared: outcome.compared,
        mismatch: outcome.mismatch,
        note: outcome.note,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

pub fn find_claim(id: &str) -> Result<Claim, VerifyError> {
    claims()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| VerifyError::UnknownClaim(id.to_string()))
}

/// Runs the claim with the given id to depth `n`.
pub fn verify_claim(id: &str, n: usize) -> Result<VerificationReport, VerifyError> {
    Ok(run_claim(&find_claim(id)?, n))
}

/// All characterization claims about `id`, merged: the first failing part,
/// or a pass summing the compared counts.
pub fn verify_characterization(
    id: MockThetaId,
    n: usize,
) -> Result<VerificationReport, VerifyError> {
    let parts: Vec<Claim> = claims()
        .into_iter()
        .filter(|c| c.kind == ClaimKind::Characterization && c.subject == Some(id))
        .collect();
    if parts.is_empty() {
        return Err(NumError::NoCharacterization(id).into());
    }
    let reports: Vec<VerificationReport> = parts.iter().map(|c| run_claim(c, n)).collect();
    if let Some(bad) = reports.iter().find(|r| !r.passed()) {
        return Ok(bad.clone());
    }
    let mut merged = reports[0].clone();
    if reports.len() > 1 {
        merged.claim_id = format!("char:{}", id.slug());
        merged.statement = reports
            .iter()
            .map(|r| r.statement.as_str())
            .collect::<Vec<_>>()
            .join("; ");
        merged.compared = reports.iter().map(|r| r.compared).sum();
        merged.wall_ms = reports.iter().map(|r| r.wall_ms).sum();
        merged.note = None;
    }
    Ok(merged)
}

fn verify_kind(kind: ClaimKind, id: &str, n: usize) -> Result<VerificationReport, VerifyError> {
    let c = find_claim(id)?;
    if c.kind != kind {
        return Err(VerifyError::UnknownClaim(format!(
            "{id} is a {} claim",
            c.kind
        )));
    }
    Ok(run_claim(&c, n))
}

pub fn verify_congruence(relation_id: &str, n: usize) -> Result<VerificationReport, VerifyError> {
    verify_kind(ClaimKind::Congruence, relation_id, n)
}

pub fn verify_identity(identity_id: &str, n: usize) -> Result<VerificationReport, VerifyError> {
    verify_kind(ClaimKind::Identity, identity_id, n)
}

pub fn verify_count(id: MockThetaId, n: usize) -> Result<VerificationReport, VerifyError> {
    numtheory::count_formula(id, 0)?;
    verify_kind(ClaimKind::CountFormula, &format!("count:{}", id.slug()), n)
}

/// Runs `claims` at their profile depths, sorted by claim id.
pub fn run_claims(claims: &[Claim], profile: &Profile, mode: ExecMode) -> Vec<VerificationReport> {
    let mut reports = exec::map(mode, claims, |c| run_claim(c, profile.depth(c.depth)));
    reports.sort_by(|a, b| claim_order(&a.claim_id, &b.claim_id));
    reports
}

/// Every registered claim.
pub fn run_all(profile: &Profile, mode: ExecMode) -> Vec<VerificationReport> {
    run_claims(&claims(), profile, mode)
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}
