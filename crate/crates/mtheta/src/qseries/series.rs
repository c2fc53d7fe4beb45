//! Dense truncated Laurent series with exact rational coefficients.
//!
//! A [`Series`] stores the coefficients of `q^offset .. q^(precision-1)` as
//! big-integer numerators over one shared positive denominator. The canonical
//! form keeps `offset` at the first nonzero coefficient (or at `precision` for
//! the zero series) and the denominator coprime to every numerator, so derived
//! equality is semantic equality at equal precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::error::{Result, SeriesError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    offset: i64,
    precision: i64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Series {
    /// Builds a series from numerators starting at `offset` over `den`,
    /// truncating anything at or beyond `precision`.
    pub fn from_parts(offset: i64, mut num: Vec<BigInt>, den: BigInt, precision: i64) -> Series {
        assert!(!den.is_zero(), "zero denominator");
        let keep = (precision - offset).max(0) as usize;
        num.truncate(keep);
        let mut s = Series {
            offset,
            precision,
            num,
            den,
        };
        s.canonicalize();
        s
    }

    pub fn zero(precision: i64) -> Series {
        Series {
            offset: precision,
            precision,
            num: Vec::new(),
            den: BigInt::one(),
        }
    }

    pub fn one(precision: i64) -> Series {
        Series::monomial(BigInt::one(), 0, precision)
    }

    pub fn monomial(coef: BigInt, exponent: i64, precision: i64) -> Series {
        Series::from_parts(exponent, vec![coef], BigInt::one(), precision)
    }

    pub fn monomial_rational(coef: &BigRational, exponent: i64, precision: i64) -> Series {
        Series::from_parts(
            exponent,
            vec![coef.numer().clone()],
            coef.denom().clone(),
            precision,
        )
    }

    pub fn from_ints(offset: i64, coeffs: &[i64], precision: i64) -> Series {
        Series::from_parts(
            offset,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            BigInt::one(),
            precision,
        )
    }

    pub fn from_bigints(offset: i64, coeffs: Vec<BigInt>, precision: i64) -> Series {
        Series::from_parts(offset, coeffs, BigInt::one(), precision)
    }

    pub fn from_rationals(offset: i64, coeffs: &[BigRational], precision: i64) -> Series {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Series::from_parts(offset, num, den, precision)
    }

    /// Sparse construction from `(exponent, coefficient)` pairs; repeated
    /// exponents accumulate.
    pub fn from_terms<I>(terms: I, precision: i64) -> Series
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().filter(|(e, _)| *e < precision).collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Series::zero(precision);
        };
        let mut num = vec![BigInt::zero(); (precision - lo) as usize];
        for (e, c) in terms {
            num[(e - lo) as usize] += c;
        }
        Series::from_parts(lo, num, BigInt::one(), precision)
    }

    fn canonicalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in self.num.iter_mut() {
                *c = -&*c;
            }
        }
        let lead = self.num.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.num.clear();
                self.offset = self.precision;
                self.den = BigInt::one();
                return;
            }
            Some(0) => {}
            Some(k) => {
                self.num.drain(..k);
                self.offset += k as i64;
            }
        }
        while self.num.last().is_some_and(|c| c.is_zero()) {
            self.num.pop();
        }
        if !self.den.is_one() {
            let mut g = self.den.clone();
            for c in &self.num {
                if g.is_one() {
                    break;
                }
                if !c.is_zero() {
                    g = g.gcd(c);
                }
            }
            if !g.is_one() {
                self.den /= &g;
                for c in self.num.iter_mut() {
                    *c /= &g;
                }
            }
        }
    }

    /// Lowest exponent with a nonzero coefficient, or `precision` when zero.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn valuation(&self) -> Option<i64> {
        if self.num.is_empty() {
            None
        } else {
            Some(self.offset)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    fn raw(&self, e: i64) -> Option<&BigInt> {
        if e < self.offset {
            return None;
        }
        self.num.get((e - self.offset) as usize)
    }

    /// Coefficient of `q^e`; `None` when `e` is at or beyond the precision.
    pub fn coeff(&self, e: i64) -> Option<BigRational> {
        if e >= self.precision {
            return None;
        }
        let n = self.raw(e).cloned().unwrap_or_default();
        Some(BigRational::new(n, self.den.clone()))
    }

    /// Integer coefficient of `q^e`.
    pub fn int_coeff(&self, e: i64) -> Result<BigInt> {
        if e >= self.precision {
            return Err(SeriesError::InvalidSpec(format!(
                "q^{e} is beyond precision {}",
                self.precision
            )));
        }
        let n = self.raw(e).cloned().unwrap_or_default();
        if self.den.is_one() {
            Ok(n)
        } else if n.is_multiple_of(&self.den) {
            Ok(n / &self.den)
        } else {
            Err(SeriesError::NonIntegerCoefficient { exponent: e })
        }
    }

    /// Integer coefficients of `q^from .. q^(to-1)`.
    pub fn int_coeffs(&self, from: i64, to: i64) -> Result<Vec<BigInt>> {
        (from..to.min(self.precision))
            .map(|e| self.int_coeff(e))
            .collect()
    }

    /// Coefficients of `q^0 .. q^(n-1)` as `i64`; panics on overflow or
    /// non-integral values. Meant for small test fixtures.
    pub fn to_i64_vec(&self, n: i64) -> Vec<i64> {
        (0..n)
            .map(|e| {
                self.int_coeff(e)
                    .expect("integral")
                    .to_i64()
                    .expect("fits in i64")
            })
            .collect()
    }

    /// Nonzero `(exponent, numerator)` pairs.
    fn nonzero(&self) -> Vec<(i64, &BigInt)> {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.offset + i as i64, c))
            .collect()
    }

    pub fn truncate(&self, precision: i64) -> Series {
        let p = precision.min(self.precision);
        Series::from_parts(self.offset, self.num.clone(), self.den.clone(), p)
    }

    fn combine(&self, other: &Series, sign: i64) -> Series {
        let p = self.precision.min(other.precision);
        let lo = self.offset.min(other.offset).min(p);
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let mut num = vec![BigInt::zero(); (p - lo).max(0) as usize];
        for (i, c) in self.num.iter().enumerate() {
            let e = self.offset + i as i64;
            if e < p {
                num[(e - lo) as usize] += c * &fa;
            }
        }
        for (i, c) in other.num.iter().enumerate() {
            let e = other.offset + i as i64;
            if e < p {
                let t = c * &fb;
                if sign > 0 {
                    num[(e - lo) as usize] += t;
                } else {
                    num[(e - lo) as usize] -= t;
                }
            }
        }
        Series::from_parts(lo, num, den, p)
    }

    pub fn add(&self, other: &Series) -> Series {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.combine(other, -1)
    }

    pub fn neg(&self) -> Series {
        Series {
            offset: self.offset,
            precision: self.precision,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Series {
        Series::from_parts(
            self.offset,
            self.num.iter().map(|c| c * k).collect(),
            self.den.clone(),
            self.precision,
        )
    }

    pub fn scale(&self, k: &BigRational) -> Series {
        Series::from_parts(
            self.offset,
            self.num.iter().map(|c| c * k.numer()).collect(),
            &self.den * k.denom(),
            self.precision,
        )
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Series {
        Series {
            offset: if self.num.is_empty() {
                self.precision + k
            } else {
                self.offset + k
            },
            precision: self.precision + k,
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    /// Effective valuation bound: the valuation, or the precision when no
    /// coefficient is known to be nonzero.
    fn val_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.precision)
    }

    /// Truncated product. The result precision is
    /// `min(pa + vb, pb + va)` with `v` the valuations.
    pub fn mul(&self, other: &Series) -> Series {
        let p = (self.precision + other.val_bound()).min(other.precision + self.val_bound());
        if self.is_zero() || other.is_zero() {
            return Series::zero(p);
        }
        let lo = self.offset + other.offset;
        let len = (p - lo).max(0) as usize;
        let mut num = vec![BigInt::zero(); len];
        let (sparse, dense) = if self.num.len() <= other.num.len() {
            (self, other)
        } else {
            (other, self)
        };
        let nz = sparse.nonzero();
        for (ea, ca) in nz {
            let base = (ea - sparse.offset) as usize;
            for (j, cb) in dense.num.iter().enumerate() {
                let k = base + j;
                if k >= len {
                    break;
                }
                if !cb.is_zero() {
                    num[k] += ca * cb;
                }
            }
        }
        Series::from_parts(lo, num, &self.den * &other.den, p)
    }

    /// Multiplication by `(1 + c q^k)`, `k >= 0`.
    pub fn mul_binomial(&self, c: i64, k: i64) -> Series {
        assert!(k >= 0, "binomial exponent must be nonnegative");
        if k == 0 {
            return self.scale_int(&BigInt::from(1 + c));
        }
        let mut num = self.num.clone();
        num.resize(
            (self.precision - self.offset).max(0) as usize,
            BigInt::zero(),
        );
        let cb = BigInt::from(c);
        let k = k as usize;
        for i in (k..num.len()).rev() {
            let t = &num[i - k] * &cb;
            num[i] += t;
        }
        Series::from_parts(self.offset, num, self.den.clone(), self.precision)
    }

    /// Division by `(1 + c q^k)`, `k >= 0`.
    pub fn div_binomial(&self, c: i64, k: i64) -> Result<Series> {
        assert!(k >= 0, "binomial exponent must be nonnegative");
        if k == 0 {
            if c == -1 {
                return Err(SeriesError::DivisionByZero);
            }
            return Ok(self.scale(&BigRational::new(BigInt::one(), BigInt::from(1 + c))));
        }
        let mut num = self.num.clone();
        num.resize(
            (self.precision - self.offset).max(0) as usize,
            BigInt::zero(),
        );
        let k = k as usize;
        for i in k..num.len() {
            let t = &num[i - k] * c;
            num[i] -= t;
        }
        Ok(Series::from_parts(
            self.offset,
            num,
            self.den.clone(),
            self.precision,
        ))
    }

    /// Quotient `self / other`. With `other = q^v u`, `u(0) != 0`, the
    /// result precision is `min(pa, pb - vb + va) - vb`.
    pub fn div(&self, other: &Series) -> Result<Series> {
        let vb = other
            .valuation()
            .ok_or(SeriesError::ZeroLeadingCoefficient)?;
        let va = self.val_bound();
        let p_quot = self.precision.min(other.precision - vb + va);
        let p = p_quot - vb;
        if self.is_zero() {
            return Ok(Series::zero(p));
        }
        let lo = self.offset;
        let len = (p_quot - lo).max(0) as usize;
        let u: Vec<(usize, &BigInt)> = other
            .num
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let u0 = &other.num[0];
        let mut a: Vec<BigInt> = self.num.clone();
        a.resize(len, BigInt::zero());
        if u0.abs().is_one() {
            let sign = u0.signum();
            let mut out: Vec<BigInt> = Vec::with_capacity(len);
            for n in 0..len {
                let mut acc = a[n].clone();
                for &(k, ck) in &u {
                    if k > n {
                        break;
                    }
                    acc -= ck * &out[n - k];
                }
                out.push(if sign.is_negative() { -acc } else { acc });
            }
            let res = Series::from_parts(lo - vb, out, self.den.clone(), p);
            Ok(res.scale_int(&other.den))
        } else {
            let u0r = BigRational::from_integer(u0.clone());
            let mut out: Vec<BigRational> = Vec::with_capacity(len);
            for n in 0..len {
                let mut acc = BigRational::from_integer(a[n].clone());
                for &(k, ck) in &u {
                    if k > n {
                        break;
                    }
                    acc -= &out[n - k] * ck;
                }
                out.push(acc / &u0r);
            }
            let res = Series::from_rationals(lo - vb, &out, p);
            Ok(res.scale(&BigRational::new(other.den.clone(), self.den.clone())))
        }
    }

    pub fn invert(&self) -> Result<Series> {
        let v = self
            .valuation()
            .ok_or(SeriesError::ZeroLeadingCoefficient)?;
        Series::one(self.precision - v).div(self)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Series> {
        if e < 0 {
            return self.invert()?.pow(-e);
        }
        let v = self.val_bound();
        let mut acc = Series::one(self.precision - v);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// The substitution `q -> q^k`, `k >= 1`.
    pub fn subs(&self, k: i64) -> Series {
        assert!(k >= 1, "substitution power must be positive");
        if self.is_zero() {
            return Series::zero(self.precision * k);
        }
        let mut num = vec![BigInt::zero(); (self.num.len() - 1) * k as usize + 1];
        for (i, c) in self.num.iter().enumerate() {
            num[i * k as usize] = c.clone();
        }
        Series::from_parts(self.offset * k, num, self.den.clone(), self.precision * k)
    }

    /// The substitution `q -> -q`.
    pub fn negate_q(&self) -> Series {
        let num = self
            .num
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if (self.offset + i as i64).rem_euclid(2) == 1 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        Series::from_parts(self.offset, num, self.den.clone(), self.precision)
    }

    /// `sum_n c(k n + r) q^n`, with precision `ceil((N - r) / k)`.
    pub fn dissect(&self, k: i64, r: i64) -> Series {
        assert!(k >= 1 && (0..k).contains(&r), "need 0 <= r < k");
        let p = Integer::div_ceil(&(self.precision - r), &k);
        if self.is_zero() {
            return Series::zero(p);
        }
        let lo = Integer::div_ceil(&(self.offset - r), &k);
        let num = (lo..p)
            .map(|n| self.raw(k * n + r).cloned().unwrap_or_default())
            .collect();
        Series::from_parts(lo, num, self.den.clone(), p)
    }

    /// First exponent in `[from, to)` where `self` and `other` differ, with
    /// both coefficients. Exponents beyond either precision are not compared.
    pub fn first_mismatch(
        &self,
        other: &Series,
        from: i64,
        to: i64,
    ) -> Option<(i64, BigRational, BigRational)> {
        let to = to.min(self.precision).min(other.precision);
        (from..to).find_map(|e| {
            let a = self.coeff(e)?;
            let b = other.coeff(e)?;
            (a != b).then_some((e, a, b))
        })
    }

    /// Agreement of all coefficients below `to` (both must reach `to`).
    pub fn agrees_to(&self, other: &Series, to: i64) -> bool {
        self.precision >= to
            && other.precision >= to
            && self
                .first_mismatch(other, self.offset.min(other.offset), to)
                .is_none()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.nonzero() {
            let r = BigRational::new(c.clone(), self.den.clone());
            let (sign, mag) = if r.is_negative() { ("-", -r) } else { ("+", r) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (mag.is_one(), e) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "q")?,
                (true, _) => write!(f, "q^{e}")?,
                (false, 1) => write!(f, "{mag}*q")?,
                (false, _) => write!(f, "{mag}*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.precision)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series, n: i64) -> Vec<i64> {
        s.to_i64_vec(n)
    }

    #[test]
    fn difference_of_squares() {
        let a = Series::from_ints(0, &[1, 1], 3);
        let b = Series::from_ints(0, &[1, -1], 3);
        assert_eq!(ints(&a.mul(&b), 3), vec![1, 0, -1]);
    }

    #[test]
    fn geometric_inverse() {
        let a = Series::from_ints(0, &[1, -1], 8);
        assert_eq!(ints(&a.invert().unwrap(), 8), vec![1; 8]);
    }

    #[test]
    fn constant_inverse_is_rational() {
        let two = Series::from_ints(0, &[2], 5);
        let inv = two.invert().unwrap();
        assert_eq!(inv.coeff(0).unwrap(), BigRational::new(1.into(), 2.into()));
        assert!(!inv.is_integral());
    }

    #[test]
    fn zero_series_has_no_inverse() {
        assert_eq!(
            Series::zero(10).invert(),
            Err(SeriesError::ZeroLeadingCoefficient)
        );
    }

    #[test]
    fn laurent_inverse_negates_offset() {
        let a = Series::from_ints(2, &[1, 1], 10);
        let inv = a.invert().unwrap();
        assert_eq!(inv.offset(), -2);
        assert_eq!(inv.precision(), 6);
        assert_eq!(inv.mul(&a).truncate(4), Series::one(4));
    }

    #[test]
    fn binomial_round_trip() {
        let a = Series::from_ints(0, &[3, -1, 4, 1, -5, 9, 2, 6], 8);
        let b = a.mul_binomial(-1, 3).div_binomial(-1, 3).unwrap();
        assert_eq!(a, b);
        let c = a.mul_binomial(1, 2);
        assert_eq!(c, a.mul(&Series::from_ints(0, &[1, 0, 1], 8)));
    }

    #[test]
    fn dissect_and_offsets() {
        let a = Series::from_ints(0, &[1, 1, 1, 1], 4);
        assert_eq!(ints(&a.dissect(2, 0), 2), vec![1, 1]);
        let b = Series::from_ints(-3, &[1, 2, 3, 4, 5, 6], 3);
        let d = b.dissect(2, 1);
        assert_eq!(d.offset(), -2);
        assert_eq!(d.coeff(-1).unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(d.precision(), 1);
    }

    #[test]
    fn substitution_and_negation() {
        let a = Series::from_ints(0, &[1, 2, 3], 3);
        let s = a.subs(2);
        assert_eq!(s.precision(), 6);
        assert_eq!(ints(&s, 6), vec![1, 0, 2, 0, 3, 0]);
        assert_eq!(ints(&a.negate_q(), 3), vec![1, -2, 3]);
    }

    #[test]
    fn mixed_precision_truncates_to_minimum() {
        let a = Series::from_ints(0, &[1, 1, 1, 1, 1], 5);
        let b = Series::from_ints(0, &[1, 1, 1], 3);
        assert_eq!(a.add(&b).precision(), 3);
        assert_eq!(a.mul(&b).precision(), 3);
    }

    #[test]
    fn display_format() {
        let a = Series::from_ints(0, &[1, -2, 0, 3], 5);
        assert_eq!(a.to_string(), "1 - 2*q + 3*q^3 + O(q^5)");
    }
}
