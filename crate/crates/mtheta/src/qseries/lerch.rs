//! Lerch-type sums `Σ_r ± q^{e(r)} P_r(q) / (1 - c q^{v(r)})` and the
//! Appell-Lerch function `m(x, q, z)` at signed q-power arguments.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::error::{Result, SeriesError};
use super::series::Series;
use super::theta::{ThetaBlock, ThetaProduct};

/// `sign * q^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMonomial {
    pub sign: i64,
    pub exp: i64,
}

impl QMonomial {
    pub const fn new(sign: i64, exp: i64) -> QMonomial {
        QMonomial { sign, exp }
    }
}

/// Summation range of a Lerch sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LerchRange {
    Bilateral,
    From(i64),
}

/// `prefactor * Σ_r (-1)^{σ r} q^{(a r² + b r + c)/den} Σ_t c_t q^{s_t r + i_t} / (1 - κ q^{v r + w})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LerchSpec {
    pub prefactor: ThetaProduct,
    pub range: LerchRange,
    pub sign: i64,
    pub quad: (i64, i64, i64, i64),
    pub numer: Vec<(i64, i64, i64)>,
    pub denom: (i64, i64, i64),
}

impl LerchSpec {
    fn exponent(&self, r: i64) -> Result<i64> {
        let (a, b, c, d) = self.quad;
        let v = a * r * r + b * r + c;
        if v % d != 0 {
            return Err(SeriesError::NonIntegralExponent(format!(
                "e({r}) = {v}/{d}"
            )));
        }
        Ok(v / d)
    }

    fn denom_exponent(&self, r: i64) -> i64 {
        self.denom.1 * r + self.denom.2
    }

    /// Lower bound of the exponents contributed by summand `r`, per
    /// numerator term.
    fn row_mins(&self, r: i64) -> Result<Vec<i64>> {
        let e = self.exponent(r)?;
        let v = self.denom_exponent(r);
        Ok(self
            .numer
            .iter()
            .map(|t| e + t.1 * r + t.2 + (-v).max(0))
            .collect())
    }

    fn settled(&self, r: i64, dir: i64, precision: i64) -> Result<bool> {
        let m0 = self.row_mins(r)?;
        let m1 = self.row_mins(r + dir)?;
        let m2 = self.row_mins(r + 2 * dir)?;
        Ok(m0
            .iter()
            .zip(&m1)
            .zip(&m2)
            .all(|((x0, x1), x2)| *x0 >= precision && x1 >= x0 && x2 - 2 * x1 + x0 >= 0))
    }

    /// `2 ×` the bare sum to precision `precision`, as integer coefficients
    /// (the factor 2 absorbs the `1/2` from `1/(1 - (-1))`).
    fn doubled_sum(&self, precision: i64) -> Result<HashMap<i64, i64>> {
        let cap = 4 * (precision.unsigned_abs() as f64).sqrt() as usize + 64;
        let mut acc: HashMap<i64, i64> = HashMap::new();
        let kappa = self.denom.0;
        let dirs: Vec<(i64, i64)> = match self.range {
            LerchRange::Bilateral => vec![(0, 1), (-1, -1)],
            LerchRange::From(r0) => vec![(r0, 1)],
        };
        for (r0, dir) in dirs {
            let mut r = r0;
            let mut steps = 0usize;
            while !self.settled(r, dir, precision)? {
                steps += 1;
                if steps > cap {
                    return Err(SeriesError::TruncationOverflow {
                        target: precision,
                        cap,
                    });
                }
                let sgn = if (self.sign * r).rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                };
                let e = self.exponent(r)?;
                let v = self.denom_exponent(r);
                for t in &self.numer {
                    let base = e + t.1 * r + t.2;
                    let c = 2 * sgn * t.0;
                    match v.cmp(&0) {
                        std::cmp::Ordering::Greater => {
                            let mut k = 0i64;
                            let mut ck = c;
                            while base + k * v < precision {
                                *acc.entry(base + k * v).or_insert(0) += ck;
                                k += 1;
                                ck *= kappa;
                            }
                        }
                        std::cmp::Ordering::Less => {
                            let mut k = 1i64;
                            let mut ck = -c * kappa;
                            while base - k * v < precision {
                                *acc.entry(base - k * v).or_insert(0) += ck;
                                k += 1;
                                ck *= kappa;
                            }
                        }
                        std::cmp::Ordering::Equal => {
                            if kappa == 1 {
                                return Err(SeriesError::PoleAtUnity { index: r });
                            }
                            *acc.entry(base).or_insert(0) += c / 2;
                        }
                    }
                }
                r += dir;
            }
        }
        Ok(acc)
    }

    /// The bare sum without prefactor.
    pub fn bare_sum(&self, precision: i64) -> Result<Series> {
        let acc = self.doubled_sum(precision)?;
        let s = Series::from_terms(
            acc.into_iter().map(|(e, c)| (e, BigInt::from(c))),
            precision,
        );
        Ok(s.scale(&BigRational::new(BigInt::from(1), BigInt::from(2))))
    }
}

/// Prefactor times Lerch sum, to precision at least `precision`.
pub fn lerch_sum(spec: &LerchSpec, precision: i64) -> Result<Series> {
    let mut work = precision;
    for _ in 0..8 {
        let sum = spec.bare_sum(work)?;
        let pre = spec.prefactor.series(work)?;
        let s = pre.mul(&sum);
        if s.precision() >= precision {
            return Ok(s.truncate(precision));
        }
        work += precision - s.precision();
    }
    Err(SeriesError::InvalidSpec(
        "Lerch sum precision did not converge".into(),
    ))
}

/// The Lerch data of `m(x, q^M, z)`:
/// `(1 / j(z; q^M)) Σ_r (-1)^r q^{M r(r-1)/2} z^r / (1 - q^{M(r-1)} x z)`.
pub fn appell_lerch_spec(x: QMonomial, base: i64, z: QMonomial) -> Result<LerchSpec> {
    if base <= 0 {
        return Err(SeriesError::InvalidSpec(
            "base exponent must be positive".into(),
        ));
    }
    if z.sign == 1 && z.exp.rem_euclid(base) == 0 {
        return Err(SeriesError::ZeroThetaDenominator);
    }
    let theta = if z.sign == 1 {
        ThetaBlock::j(z.exp, base, -1)
    } else {
        ThetaBlock::jbar(z.exp, base, -1)
    };
    Ok(LerchSpec {
        prefactor: ThetaProduct::new(vec![theta]),
        range: LerchRange::Bilateral,
        // (-1)^r z^r = (-sign)^r q^{exp r}
        sign: if z.sign == 1 { 1 } else { 0 },
        quad: (base, 2 * z.exp - base, 0, 2),
        numer: vec![(1, 0, 0)],
        denom: (x.sign * z.sign, base, x.exp + z.exp - base),
    })
}

/// `m(x, q^M, z)` to precision at least `precision`.
pub fn appell_lerch_m(x: QMonomial, base: i64, z: QMonomial, precision: i64) -> Result<Series> {
    let spec = appell_lerch_spec(x, base, z)?;
    let theta = spec.prefactor.blocks[0].base_series(precision);
    if theta.is_zero() {
        return Err(SeriesError::ZeroThetaDenominator);
    }
    lerch_sum(&spec, precision)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pole_at_unity_is_reported() {
        // x z = q^M gives v = 0 at r = 0 with κ = +1.
        let r = appell_lerch_m(QMonomial::new(1, 5), 6, QMonomial::new(1, 1), 20);
        assert!(matches!(r, Err(SeriesError::PoleAtUnity { .. })));
    }

    #[test]
    fn vanishing_theta_is_reported() {
        let r = appell_lerch_m(QMonomial::new(-1, 1), 6, QMonomial::new(1, 6), 20);
        assert_eq!(r, Err(SeriesError::ZeroThetaDenominator));
    }
}
