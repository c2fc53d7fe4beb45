//! The eight acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mtheta::catalog::{self, MockThetaId, MockThetaId::*};
use mtheta::density::{self, TABLE1_DEFAULT_X};
use mtheta::exec::ExecMode;
use mtheta::numtheory::{
    self, class_count_h, enumerate_representatives, ideal_count_t, QuadField, SpecialFormCondition,
};
use mtheta::verify::{self, Check, VerificationReport};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

const PARITY_TYPE_ONE_ZERO: [MockThetaId; 21] = [
    A2, B2, Psi3, Omega3, Nu3, Rho3, Psi0_5, Psi1_5, BigF0_5, BigF1_5, Rho6, Sigma6, PhiMinus6,
    PsiMinus6, T0_8, T1_8, U1_8, V0_8, V1_8, Phi10, Psi10,
];

fn failures(reports: &[VerificationReport]) -> Verdict {
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| match &r.mismatch {
            Some(m) => format!("{} at {}: {} vs {}", r.claim_id, m.index, m.lhs, m.rhs),
            None => format!("{}: {}", r.claim_id, r.note.as_deref().unwrap_or("failed")),
        })
        .collect();
    if bad.is_empty() {
        Ok(format!(
            "{} claims, {} coefficients compared",
            reports.len(),
            reports.iter().map(|r| r.compared).sum::<usize>()
        ))
    } else {
        Err(bad.join("; "))
    }
}

fn table1() -> Verdict {
    let t = Instant::now();
    let rows =
        density::table1_compare(TABLE1_DEFAULT_X, ExecMode::Parallel).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let off: Vec<String> = rows
        .iter()
        .filter(|r| !r.within_one_unit())
        .map(|r| {
            format!(
                "{} = {} vs {}",
                r.result.sequence, r.result.delta, r.printed
            )
        })
        .collect();
    if !off.is_empty() {
        return Err(off.join("; "));
    }
    if elapsed > Duration::from_secs(300) {
        return Err(format!("took {elapsed:.1?}"));
    }
    let exact = rows.iter().filter(|r| r.exact_match()).count();
    let counts: Vec<String> = rows
        .iter()
        .map(|r| format!("{}={}", r.result.sequence, r.result.odd_count))
        .collect();
    Ok(format!(
        "15/15 within one unit, {exact} exact, {elapsed:.2?}; counts {}",
        counts.join(" ")
    ))
}

fn characterizations() -> Verdict {
    let reports = PARITY_TYPE_ONE_ZERO
        .iter()
        .map(|&id| verify::verify_characterization(id, 5000))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    failures(&reports)
}

fn class_counts() -> Verdict {
    let field = |d| QuadField::new(d).unwrap();
    let reps = |d, m: i64| {
        enumerate_representatives(field(d), m)
            .map(|v| v.len() as u64)
            .map_err(|e| e.to_string())
    };
    let mut checked = 0;
    for d in [2, 3, 6] {
        let f = field(d);
        for n in 1..=2000i64 {
            let t = ideal_count_t(f, n as u64).map_err(|e| e.to_string())?;
            let (hp, hm) = (
                class_count_h(f, n).map_err(|e| e.to_string())?,
                class_count_h(f, -n).map_err(|e| e.to_string())?,
            );
            if hp != reps(d, n)? || hm != reps(d, -n)? {
                return Err(format!("d={d} n=+-{n}: H does not match enumeration"));
            }
            let relation = if d == 2 {
                hp == t && hm == t
            } else {
                hp + hm == t && hp * hm == 0
            };
            if !relation {
                return Err(format!("d={d} n={n}: H(n)={hp} H(-n)={hm} T={t}"));
            }
            checked += 2;
        }
    }
    let f = field(15);
    for n in (1..=4000i64).filter(|n| matches!(n % 20, 1 | 9) || matches!(n % 40, 26 | 34)) {
        let t = ideal_count_t(f, n as u64).map_err(|e| e.to_string())?;
        if class_count_h(f, n).map_err(|e| e.to_string())? != t || reps(15, n)? != t {
            return Err(format!("d=15 n={n}"));
        }
        checked += 1;
    }
    for d in [3, 6, 15] {
        if reps(d, -1)? != 0 {
            return Err(format!("norm -1 represented for d={d}"));
        }
    }
    Ok(format!(
        "{checked} values of H agree with enumeration and T; norm -1 empty for 3, 6, 15"
    ))
}

fn identities() -> Verdict {
    let exact: Vec<_> = verify::claims()
        .into_iter()
        .filter(|c| matches!(c.check, Check::Exact { modulus: 0, .. }))
        .collect();
    let reports: Vec<_> = exact.iter().map(|c| verify::run_claim(c, 300)).collect();
    // representations against the primary form, outside the claim registry
    let mut forms = 0;
    for e in catalog::registry() {
        let primary = e.primary();
        let base = primary.expand(300).map_err(|err| err.to_string())?;
        for r in e
            .representations
            .iter()
            .filter(|r| r.is_exact() && r.label != primary.label)
        {
            let s = r.expand(300).map_err(|err| err.to_string())?;
            if s != base {
                return Err(format!(
                    "{} form {} differs from the Eulerian series",
                    e.id.slug(),
                    r.label
                ));
            }
            forms += 1;
        }
    }
    failures(&reports).map(|s| format!("{s}; {forms} exact catalog forms equal to O(q^300)"))
}

fn congruences() -> Verdict {
    let claims: Vec<_> = verify::claims()
        .into_iter()
        .filter(|c| {
            c.id.strip_prefix('R')
                .and_then(|r| r.split('-').next()?.parse::<u32>().ok())
                .is_some_and(|k| (1..=20).contains(&k))
        })
        .collect();
    for (id, m) in [("R1", 4), ("R3", 4), ("R19", 4)] {
        let c = claims
            .iter()
            .find(|c| c.id == id)
            .ok_or(format!("{id} missing"))?;
        if !matches!(c.check, Check::Exact { modulus, .. } if modulus == m) {
            return Err(format!("{id} is not checked mod {m}"));
        }
    }
    let reports = verify::run_claims(&claims, &verify::Profile::uniform(2000), ExecMode::Parallel);
    failures(&reports)
}

fn counts() -> Verdict {
    let reports = [B2, Nu3, Omega3, Rho6, V0_8, Phi10, Psi10]
        .iter()
        .map(|&id| verify::verify_count(id, 10_001))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    failures(&reports)
}

fn gamma_constants() -> Verdict {
    let n = 1_000_000u64;
    let mut parts = Vec::new();
    for (a, b, want) in [
        (4, 3, PI * PI / 4.0),
        (8, 7, PI * PI / 4.0),
        (24, 23, PI * PI / 3.0),
    ] {
        let t = Instant::now();
        let cond = SpecialFormCondition::new(a, b);
        let g = numtheory::gamma_count(&cond, n).map_err(|e| e.to_string())?;
        let elapsed = t.elapsed();
        let ratio = g as f64 * (n as f64).ln() / n as f64;
        let rel = (ratio - want).abs() / want;
        parts.push(format!(
            "({a},{b}) gamma={g} ratio={ratio:.4} target={want:.4} off={:.1}% {elapsed:.2?}",
            100.0 * rel
        ));
        if rel > 0.2 || elapsed > Duration::from_secs(120) {
            return Err(parts.join("; "));
        }
    }
    Ok(parts.join("; "))
}

fn almost_even() -> Verdict {
    let r = verify::verify_claim("rho3-almost-even", 5000).map_err(|e| e.to_string())?;
    let note = r.note.clone().unwrap_or_default();
    failures(&[r]).map(|_| note)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 table1 reproduction", table1),
        ("2 characterization suite", characterizations),
        ("3 H/T agreement", class_counts),
        ("4 identity suite", identities),
        ("5 congruence suite", congruences),
        ("6 count formulas", counts),
        ("7 asymptotic constant", gamma_constants),
        ("8 rho3 almost even", almost_even),
    ];
    let mut ok = true;
    for (name, run) in criteria {
        let t = Instant::now();
        let v = run();
        let elapsed = t.elapsed();
        match v {
            Ok(detail) => println!("PASS criterion {name} ({elapsed:.2?}): {detail}"),
            Err(detail) => {
                ok = false;
                println!("FAIL criterion {name} ({elapsed:.2?}): {detail}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
