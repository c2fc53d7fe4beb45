//! Jacobi theta blocks `J_m`, `J_{a,m}`, `J̄_{a,m}` and their products.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::error::{Result, SeriesError};
use super::parity::ParitySeries;
use super::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    /// `J_m = (q^m; q^m)_∞`
    Eta,
    /// `J_{a,m} = j(q^a; q^m)`
    J,
    /// `J̄_{a,m} = j(-q^a; q^m)`
    JBar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaBlock {
    pub kind: BlockKind,
    pub a: i64,
    pub m: i64,
    pub exponent: i64,
}

impl ThetaBlock {
    pub const fn eta(m: i64, exponent: i64) -> ThetaBlock {
        ThetaBlock {
            kind: BlockKind::Eta,
            a: 0,
            m,
            exponent,
        }
    }

    pub const fn j(a: i64, m: i64, exponent: i64) -> ThetaBlock {
        ThetaBlock {
            kind: BlockKind::J,
            a,
            m,
            exponent,
        }
    }

    pub const fn jbar(a: i64, m: i64, exponent: i64) -> ThetaBlock {
        ThetaBlock {
            kind: BlockKind::JBar,
            a,
            m,
            exponent,
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs of the block to the first
    /// power, for exponents below `precision`, from the triple product sum.
    pub fn terms(&self, precision: i64) -> Vec<(i64, i64)> {
        assert!(self.m > 0, "theta block modulus must be positive");
        let (m, a) = (self.m, self.a);
        let expo = |n: i64| -> i64 {
            match self.kind {
                BlockKind::Eta => m * n * (3 * n - 1) / 2,
                _ => m * n * (n - 1) / 2 + a * n,
            }
        };
        let sign = |n: i64| -> i64 {
            match self.kind {
                BlockKind::JBar => 1,
                _ => {
                    if n.rem_euclid(2) == 0 {
                        1
                    } else {
                        -1
                    }
                }
            }
        };
        let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
        for dir in [1i64, -1] {
            let mut n = if dir == 1 { 0 } else { -1 };
            loop {
                let e = expo(n);
                let next = expo(n + dir);
                if e < precision {
                    *acc.entry(e).or_insert(0) += sign(n);
                } else if next >= e {
                    break;
                }
                n += dir;
            }
        }
        acc.into_iter().filter(|(_, c)| *c != 0).collect()
    }

    /// The block to the first power.
    pub fn base_series(&self, precision: i64) -> Series {
        Series::from_terms(
            self.terms(precision)
                .into_iter()
                .map(|(e, c)| (e, BigInt::from(c))),
            precision,
        )
    }

    /// The block raised to its exponent.
    pub fn series(&self, precision: i64) -> Result<Series> {
        ThetaProduct::new(vec![*self]).series(precision)
    }
}

impl fmt::Display for ThetaBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BlockKind::Eta => write!(f, "J{}", self.m)?,
            BlockKind::J => write!(f, "J{{{},{}}}", self.a, self.m)?,
            BlockKind::JBar => write!(f, "Jbar{{{},{}}}", self.a, self.m)?,
        }
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

/// `coef * q^shift * prod blocks`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaProduct {
    pub coef: (i64, i64),
    pub shift: i64,
    pub blocks: Vec<ThetaBlock>,
}

impl ThetaProduct {
    pub fn new(blocks: Vec<ThetaBlock>) -> ThetaProduct {
        ThetaProduct {
            coef: (1, 1),
            shift: 0,
            blocks,
        }
    }

    pub fn unit() -> ThetaProduct {
        ThetaProduct::new(Vec::new())
    }

    /// Eta quotient `prod J_m^{e_m}` from `(m, e_m)` pairs.
    pub fn eta_quotient(parts: &[(i64, i64)]) -> ThetaProduct {
        ThetaProduct::new(parts.iter().map(|&(m, e)| ThetaBlock::eta(m, e)).collect())
    }

    pub fn with_coef(mut self, num: i64, den: i64) -> ThetaProduct {
        self.coef = (num, den);
        self
    }

    pub fn with_shift(mut self, shift: i64) -> ThetaProduct {
        self.shift = shift;
        self
    }

    pub fn times(mut self, other: &ThetaProduct) -> ThetaProduct {
        self.coef = (self.coef.0 * other.coef.0, self.coef.1 * other.coef.1);
        self.shift += other.shift;
        self.blocks.extend(other.blocks.iter().copied());
        self
    }

    fn coef_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.coef.0), BigInt::from(self.coef.1))
    }

    fn series_at(&self, work: i64) -> Result<Series> {
        let mut acc = Series::one(work);
        for b in self.blocks.iter().filter(|b| b.exponent > 0) {
            let base = b.base_series(work);
            for _ in 0..b.exponent {
                acc = acc.mul(&base);
            }
        }
        for b in self.blocks.iter().filter(|b| b.exponent < 0) {
            let base = b.base_series(work);
            if base.is_zero() {
                return Err(SeriesError::ZeroLeadingCoefficient);
            }
            for _ in 0..(-b.exponent) {
                acc = acc.div(&base)?;
            }
        }
        Ok(acc.scale(&self.coef_rational()).shift(self.shift))
    }

    /// Expansion to precision at least `precision`.
    pub fn series(&self, precision: i64) -> Result<Series> {
        let mut work = (precision - self.shift).max(1);
        for _ in 0..8 {
            let s = self.series_at(work)?;
            if s.precision() >= precision {
                return Ok(s.truncate(precision));
            }
            work += precision - s.precision();
        }
        Err(SeriesError::InvalidSpec(
            "theta product precision did not converge".into(),
        ))
    }

    /// Expansion mod 2. The coefficient must be an odd integer (an even
    /// integer gives zero) and divisor blocks must have odd constant term.
    pub fn parity(&self, precision: usize) -> Result<ParitySeries> {
        let c = Rational64::new(self.coef.0, self.coef.1);
        if !c.is_integer() {
            return Err(SeriesError::NonIntegerCoefficient {
                exponent: self.shift,
            });
        }
        if c.to_integer().is_even() {
            return Ok(ParitySeries::zero(precision));
        }
        if self.shift < 0 {
            return Err(SeriesError::NegativeOffset(self.shift));
        }
        let p = precision as i64;
        let odd = |b: &ThetaBlock| -> Result<Vec<usize>> {
            let t = b.terms(p);
            if t.first().is_some_and(|(e, _)| *e < 0) {
                return Err(SeriesError::NegativeOffset(t[0].0));
            }
            Ok(t.into_iter()
                .filter(|(_, c)| c.rem_euclid(2) == 1)
                .map(|(e, _)| e as usize)
                .collect())
        };
        let mut acc = ParitySeries::one(precision);
        for b in &self.blocks {
            let exps = odd(b)?;
            for _ in 0..b.exponent.abs() {
                acc = if b.exponent > 0 {
                    acc.mul_sparse(&exps)
                } else {
                    acc.div_sparse(&exps)?
                };
            }
        }
        Ok(acc.shifted(self.shift))
    }
}

impl fmt::Display for ThetaProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef != (1, 1) {
            write!(f, "({}/{})", self.coef.0, self.coef.1)?;
        }
        if self.shift != 0 {
            write!(f, "q^{}", self.shift)?;
        }
        for b in &self.blocks {
            write!(f, " {b}")?;
        }
        Ok(())
    }
}

/// `(sign * q^a; q^m)_n = prod_{k<n} (1 - sign * q^{a + k m})`, or the
/// infinite product when `terms` is `None`.
pub fn pochhammer(
    a: Rational64,
    m: Rational64,
    sign: i64,
    terms: Option<u64>,
    precision: i64,
) -> Result<Series> {
    if !a.is_integer() || !m.is_integer() {
        return Err(SeriesError::NonIntegralExponent(format!(
            "a = {a}, m = {m}"
        )));
    }
    let (a, m) = (a.to_integer(), m.to_integer());
    if m <= 0 || a < 0 {
        return Err(SeriesError::InvalidSpec(format!(
            "pochhammer needs a >= 0, m > 0 (a = {a}, m = {m})"
        )));
    }
    let mut acc = Series::one(precision);
    let mut k: u64 = 0;
    loop {
        if terms.is_some_and(|t| k >= t) {
            break;
        }
        let e = a + k as i64 * m;
        if e >= precision && e > 0 {
            break;
        }
        acc = acc.mul_binomial(-sign, e);
        k += 1;
    }
    Ok(acc)
}

/// `(q^a; q^m)_∞` as a plain integer coefficient vector, used as an oracle
/// in tests.
pub fn infinite_product_naive(a: i64, m: i64, precision: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); precision];
    c[0] = BigInt::one();
    let mut e = a;
    while (e as usize) < precision {
        for i in (e as usize..precision).rev() {
            let t = c[i - e as usize].clone();
            c[i] -= t;
        }
        e += m;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_matches_pentagonal_product() {
        let j1 = ThetaBlock::eta(1, 1).series(40).unwrap();
        let naive = infinite_product_naive(1, 1, 40);
        assert_eq!(j1.int_coeffs(0, 40).unwrap(), naive);
    }

    #[test]
    fn j13_is_eta() {
        let a = ThetaBlock::j(1, 3, 1).series(80).unwrap();
        let b = ThetaBlock::eta(1, 1).series(80).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn jbar_zero_block_has_constant_two() {
        let t = ThetaBlock::jbar(0, 1, 1).terms(10);
        assert_eq!(t[0], (0, 2));
    }

    #[test]
    fn pochhammer_small_cases() {
        let one = Rational64::from_integer(1);
        let two = Rational64::from_integer(2);
        assert_eq!(
            pochhammer(one, one, 1, Some(0), 10).unwrap(),
            Series::one(10)
        );
        let p = pochhammer(one, two, -1, Some(2), 10).unwrap();
        assert_eq!(p.to_i64_vec(6), vec![1, 1, 0, 1, 1, 0]);
        let half = Rational64::new(1, 2);
        assert!(matches!(
            pochhammer(half, one, 1, None, 10),
            Err(SeriesError::NonIntegralExponent(_))
        ));
    }

    #[test]
    fn laurent_block() {
        let s = ThetaBlock::j(-2, 6, 1).base_series(10);
        assert_eq!(s.offset(), -2);
    }
}
