//! The predicate "An+B = p^{4a+1} m^2 with p prime, p not dividing m", its
//! per-function instances, and the counting function gamma(N).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::factor::{factor, Factorization};
use super::NumError;
use crate::catalog::MockThetaId;

/// Largest target value a sieve may be built for.
pub const MAX_SIEVE: u64 = 1 << 25;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueConstraint {
    pub modulus: u64,
    pub allowed: Vec<u64>,
}

/// One alternative of a condition: `target = multiplier * p^{4a+1} m^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub multiplier: u64,
    pub residue: Option<ResidueConstraint>,
}

/// `A n + B` is of special form for one of the branches.
///
/// `index` = (k, r) says the condition governs c(k n + r); `also_odd` lists
/// indices n that are odd outside the progression.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialFormCondition {
    pub a: u64,
    pub b: i64,
    pub branches: Vec<Branch>,
    pub index: (u64, u64),
    pub also_odd: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub p: u64,
    pub a: u32,
    pub m: u64,
}

impl SpecialFormCondition {
    pub fn new(a: u64, b: i64) -> Self {
        SpecialFormCondition {
            a,
            b,
            branches: vec![Branch {
                multiplier: 1,
                residue: None,
            }],
            index: (1, 0),
            also_odd: Vec::new(),
        }
    }

    pub fn with_residue(mut self, modulus: u64, allowed: &[u64]) -> Self {
        for br in &mut self.branches {
            br.residue = Some(ResidueConstraint {
                modulus,
                allowed: allowed.to_vec(),
            });
        }
        self
    }

    pub fn or_branch(mut self, multiplier: u64, residue: Option<(u64, &[u64])>) -> Self {
        let residue = residue.map(|(modulus, allowed)| ResidueConstraint {
            modulus,
            allowed: allowed.to_vec(),
        });
        self.branches.push(Branch {
            multiplier,
            residue,
        });
        self
    }

    pub fn on_index(mut self, k: u64, r: u64) -> Self {
        self.index = (k, r);
        self
    }

    pub fn also_odd_at(mut self, ns: &[u64]) -> Self {
        self.also_odd = ns.to_vec();
        self
    }

    pub fn target(&self, n: i64) -> i128 {
        self.a as i128 * n as i128 + self.b as i128
    }

    /// The same progression shifted so that B lies in [0, A): n -> n + s.
    /// Returns (B', s).
    pub fn normalized(&self) -> (i64, i64) {
        let a = self.a as i64;
        let s = (-self.b).div_euclid(a) + i64::from((-self.b).rem_euclid(a) != 0);
        (self.b + a * s, s)
    }

    /// Text form such as `8n-1 = p^{4a+1}m^2`.
    pub fn describe(&self) -> String {
        let lin = match self.b {
            0 => format!("{}n", self.a),
            b if b > 0 => format!("{}n+{}", self.a, b),
            b => format!("{}n{}", self.a, b),
        };
        let alts: Vec<String> = self
            .branches
            .iter()
            .map(|br| {
                let mult = if br.multiplier == 1 {
                    String::new()
                } else {
                    br.multiplier.to_string()
                };
                let res = br.residue.as_ref().map_or(String::new(), |r| {
                    let list: Vec<String> = r.allowed.iter().map(u64::to_string).collect();
                    format!(", p = {} (mod {})", list.join(","), r.modulus)
                });
                format!("{lin} = {mult}p^(4a+1)m^2{res}")
            })
            .collect();
        alts.join(" or ")
    }
}

/// Witness for `t = p^{4a+1} m^2`, read off a factorization of t > 0.
pub fn special_witness_of(
    f: &Factorization,
    residue: Option<&ResidueConstraint>,
) -> Option<Witness> {
    if f.sign < 0 {
        return None;
    }
    let mut found: Option<(u64, u32)> = None;
    for &(p, e) in &f.factors {
        match e % 4 {
            1 if found.is_none() => found = Some((p, e)),
            0 | 2 => {}
            _ => return None,
        }
    }
    let (p, e) = found?;
    if let Some(r) = residue {
        if !r.allowed.contains(&(p % r.modulus)) {
            return None;
        }
    }
    let m = f
        .factors
        .iter()
        .filter(|f| f.0 != p)
        .map(|&(q, e)| q.pow(e / 2))
        .product();
    Some(Witness {
        p,
        a: (e - 1) / 4,
        m,
    })
}

/// Witness for a bare target value (no residue constraint).
pub fn special_witness(target: u64) -> Result<Option<Witness>, NumError> {
    if target == 0 {
        return Ok(None);
    }
    Ok(special_witness_of(&factor(target as i128)?, None))
}

fn branch_witness(
    br: &Branch,
    target: i128,
    fac: &mut impl FnMut(u64) -> Result<Factorization, NumError>,
) -> Result<Option<Witness>, NumError> {
    if target <= 0 || target % br.multiplier as i128 != 0 {
        return Ok(None);
    }
    let t = u64::try_from(target / br.multiplier as i128)
        .map_err(|_| NumError::Overflow(target.to_string()))?;
    Ok(special_witness_of(&fac(t)?, br.residue.as_ref()))
}

fn witness_with(
    cond: &SpecialFormCondition,
    n: i64,
    fac: &mut impl FnMut(u64) -> Result<Factorization, NumError>,
) -> Result<Option<Witness>, NumError> {
    let target = cond.target(n);
    for br in &cond.branches {
        if let Some(w) = branch_witness(br, target, fac)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Witness (p, a, m) when `A n + B` satisfies the condition. A nonpositive
/// target never does.
pub fn is_special_form(cond: &SpecialFormCondition, n: i64) -> Result<Option<Witness>, NumError> {
    witness_with(cond, n, &mut |t| factor(t as i128))
}

/// The registered special-form characterization of `id`.
pub fn special_predicates(id: MockThetaId) -> Result<SpecialFormCondition, NumError> {
    use MockThetaId::*;
    let c = SpecialFormCondition::new;
    Ok(match id {
        A2 | U1_8 => c(8, -1),
        Psi3 | PhiMinus6 => c(24, -1),
        Rho3 => c(6, 5).on_index(2, 1),
        F0_5 => c(120, 59).on_index(2, 1),
        F1_5 => c(120, 11).on_index(2, 0),
        Psi0_5 => c(60, -1),
        Psi1_5 => c(60, 11),
        BigF0_5 => c(120, -1).also_odd_at(&[0]),
        BigF1_5 => c(120, 71),
        Sigma6 => c(12, -1),
        PsiMinus6 => c(8, -3)
            .with_residue(24, &[5])
            .or_branch(3, Some((24, &[23]))),
        T0_8 => c(16, -1),
        T1_8 => c(16, 7),
        V1_8 => c(4, -1),
        other => return Err(NumError::NoCharacterization(other)),
    })
}

/// Smallest-prime-factor table for 0..=limit.
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    pub fn new(limit: u64) -> Result<SpfSieve, NumError> {
        if limit > MAX_SIEVE {
            return Err(NumError::SieveCapacity {
                needed: limit,
                capacity: MAX_SIEVE,
            });
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        for i in 2..=n {
            if spf[i] == 0 {
                for j in (i..=n).step_by(i) {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                }
            }
        }
        Ok(SpfSieve { spf })
    }

    pub fn limit(&self) -> u64 {
        self.spf.len() as u64 - 1
    }

    pub fn factor(&self, mut n: u64) -> Result<Factorization, NumError> {
        if n == 0 {
            return Err(NumError::Zero);
        }
        if n > self.limit() {
            return Err(NumError::SieveCapacity {
                needed: n,
                capacity: self.limit(),
            });
        }
        let mut factors: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            n /= p;
            match factors.last_mut() {
                Some(last) if last.0 == p => last.1 += 1,
                _ => factors.push((p, 1)),
            }
        }
        Ok(Factorization { sign: 1, factors })
    }
}

/// gamma(N) = #{0 <= n <= N : A n + B special}, by a sieve over the targets.
pub fn gamma_count(cond: &SpecialFormCondition, n_max: u64) -> Result<u64, NumError> {
    let top = cond.target(n_max as i64).max(0) as u64;
    let sieve = SpfSieve::new(top)?;
    gamma_count_with(&sieve, cond, n_max)
}

pub fn gamma_count_with(
    sieve: &SpfSieve,
    cond: &SpecialFormCondition,
    n_max: u64,
) -> Result<u64, NumError> {
    let mut count = 0;
    for n in 0..=n_max {
        if witness_with(cond, n as i64, &mut |t| sieve.factor(t))?.is_some() {
            count += 1;
        }
    }
    Ok(count)
}

/// pi^2/6 * prod_{p | A} (1 + 1/p).
pub fn gamma_constant(a: u64) -> f64 {
    let f = factor(a as i128).expect("A >= 1");
    PI * PI / 6.0
        * f.factors
            .iter()
            .map(|&(p, _)| 1.0 + 1.0 / p as f64)
            .product::<f64>()
}

/// Leading term of gamma(N): constant * N / log N.
pub fn gamma_asymptotic(cond: &SpecialFormCondition, n: f64) -> f64 {
    gamma_constant(cond.a) * n / n.ln()
}
