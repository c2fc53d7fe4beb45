//! Hecke-type double sums over indefinite quadratic forms.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::error::{Result, SeriesError};
use super::series::Series;
use super::theta::ThetaProduct;

/// `(a n² + b n j + c j² + d n + e j + f) / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
    pub den: i64,
}

impl QuadForm {
    pub const fn new(a: i64, b: i64, c: i64, d: i64, e: i64, f: i64, den: i64) -> QuadForm {
        QuadForm {
            a,
            b,
            c,
            d,
            e,
            f,
            den,
        }
    }

    pub fn eval(&self, n: i64, j: i64) -> Result<i64> {
        let v = self.a * n * n + self.b * n * j + self.c * j * j + self.d * n + self.e * j + self.f;
        if v % self.den != 0 {
            return Err(SeriesError::NonIntegralExponent(format!(
                "Q({n}, {j}) = {v}/{}",
                self.den
            )));
        }
        Ok(v / self.den)
    }
}

/// Inner range `lo.0 n + lo.1 <= j <= hi.0 n + hi.1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JRange {
    pub lo: (i64, i64),
    pub hi: (i64, i64),
}

impl JRange {
    /// `|j| <= n`
    pub const SYMMETRIC: JRange = JRange {
        lo: (-1, 0),
        hi: (1, 0),
    };
    /// `0 <= j <= n`
    pub const HALF: JRange = JRange {
        lo: (0, 0),
        hi: (1, 0),
    };

    pub const fn new(lo: (i64, i64), hi: (i64, i64)) -> JRange {
        JRange { lo, hi }
    }
}

/// One double sum
/// `coef q^shift Σ_{n ≥ n_min} Σ_j (-1)^{sn n + sj j} q^{Q(n,j)} Σ_t c_t q^{L_t(n,j)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeComponent {
    pub coef: i64,
    pub shift: i64,
    pub quad: QuadForm,
    pub sign: (i64, i64),
    pub n_min: i64,
    pub n_max: Option<i64>,
    pub range: JRange,
    /// `(c_t, dn, dj, e0)` for `c_t q^{dn n + dj j + e0}`.
    pub terms: Vec<(i64, i64, i64, i64)>,
}

impl HeckeComponent {
    pub fn new(quad: QuadForm, range: JRange) -> HeckeComponent {
        HeckeComponent {
            coef: 1,
            shift: 0,
            quad,
            sign: (0, 0),
            n_min: 0,
            n_max: None,
            range,
            terms: vec![(1, 0, 0, 0)],
        }
    }

    pub fn coef(mut self, c: i64) -> Self {
        self.coef = c;
        self
    }

    pub fn shift(mut self, s: i64) -> Self {
        self.shift = s;
        self
    }

    pub fn sign(mut self, sn: i64, sj: i64) -> Self {
        self.sign = (sn, sj);
        self
    }

    pub fn n_min(mut self, n: i64) -> Self {
        self.n_min = n;
        self
    }

    pub fn n_max(mut self, n: i64) -> Self {
        self.n_max = Some(n);
        self
    }

    /// Multiplier `(1 - q^{dn n + dj j + e0})`.
    pub fn one_minus(mut self, dn: i64, dj: i64, e0: i64) -> Self {
        self.terms = vec![(1, 0, 0, 0), (-1, dn, dj, e0)];
        self
    }

    /// Multiplier `(1 + q^{dn n + dj j + e0})`.
    pub fn one_plus(mut self, dn: i64, dj: i64, e0: i64) -> Self {
        self.terms = vec![(1, 0, 0, 0), (1, dn, dj, e0)];
        self
    }

    pub fn terms(mut self, t: Vec<(i64, i64, i64, i64)>) -> Self {
        self.terms = t;
        self
    }

    fn exponent(&self, n: i64, j: i64, t: &(i64, i64, i64, i64)) -> Result<i64> {
        Ok(self.shift + self.quad.eval(n, j)? + t.1 * n + t.2 * j + t.3)
    }

    fn endpoints(&self, n: i64) -> (i64, i64) {
        (
            self.range.lo.0 * n + self.range.lo.1,
            self.range.hi.0 * n + self.range.hi.1,
        )
    }

    /// Smallest exponent in row `n` and whether every endpoint curve is
    /// convex and nondecreasing from `n` on.
    fn row_bound(&self, n: i64) -> Result<(Option<i64>, bool)> {
        let (lo, hi) = self.endpoints(n);
        if lo > hi {
            return Ok((None, true));
        }
        let mut min: Option<i64> = None;
        let mut settled = true;
        for t in &self.terms {
            for slope in [self.range.lo, self.range.hi] {
                let at = |k: i64| self.exponent(k, slope.0 * k + slope.1, t);
                let (e0, e1, e2) = (at(n)?, at(n + 1)?, at(n + 2)?);
                min = Some(min.map_or(e0, |m: i64| m.min(e0)));
                if e1 < e0 || e2 - 2 * e1 + e0 < 0 {
                    settled = false;
                }
            }
        }
        Ok((min, settled))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeSpec {
    pub prefactor: ThetaProduct,
    pub components: Vec<HeckeComponent>,
}

impl HeckeSpec {
    pub fn new(prefactor: ThetaProduct, components: Vec<HeckeComponent>) -> HeckeSpec {
        HeckeSpec {
            prefactor,
            components,
        }
    }

    fn validate(&self) -> Result<()> {
        for c in &self.components {
            // Concavity in j keeps each row minimum at an endpoint.
            if c.quad.c > 0 {
                return Err(SeriesError::InvalidSpec(
                    "quadratic form must be concave in j".into(),
                ));
            }
        }
        Ok(())
    }

    /// The bare double sum (no prefactor) to precision `precision`.
    pub fn double_sum(&self, precision: i64) -> Result<Series> {
        self.validate()?;
        let cap = (4.0 * (precision.max(0) as f64).sqrt()) as usize + 16;
        let mut acc: HashMap<i64, i64> = HashMap::new();
        for comp in &self.components {
            let mut n = comp.n_min;
            let mut rows = 0usize;
            loop {
                if comp.n_max.is_some_and(|m| n > m) {
                    break;
                }
                let (min, settled) = comp.row_bound(n)?;
                if settled && min.is_none_or(|m| m >= precision) {
                    break;
                }
                rows += 1;
                if rows > cap {
                    return Err(SeriesError::TruncationOverflow {
                        target: precision,
                        cap,
                    });
                }
                let (lo, hi) = comp.endpoints(n);
                for j in lo..=hi {
                    let s = if (comp.sign.0 * n + comp.sign.1 * j).rem_euclid(2) == 0 {
                        1
                    } else {
                        -1
                    };
                    for t in &comp.terms {
                        let e = comp.exponent(n, j, t)?;
                        if e < precision {
                            *acc.entry(e).or_insert(0) += comp.coef * s * t.0;
                        }
                    }
                }
                n += 1;
            }
        }
        Ok(Series::from_terms(
            acc.into_iter().map(|(e, c)| (e, BigInt::from(c))),
            precision,
        ))
    }
}

/// Prefactor times double sum, to precision at least `precision`.
pub fn hecke_sum(spec: &HeckeSpec, precision: i64) -> Result<Series> {
    let mut work = precision;
    for _ in 0..8 {
        let sum = spec.double_sum(work)?;
        let pre = spec.prefactor.series(work)?;
        let s = pre.mul(&sum);
        if s.precision() >= precision {
            return Ok(s.truncate(precision));
        }
        work += precision - s.precision();
    }
    Err(SeriesError::InvalidSpec(
        "Hecke sum precision did not converge".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_range_gives_zero() {
        let spec = HeckeSpec::new(
            ThetaProduct::unit(),
            vec![
                HeckeComponent::new(QuadForm::new(1, 0, -1, 0, 0, 0, 1), JRange::SYMMETRIC)
                    .n_max(-1),
            ],
        );
        assert!(hecke_sum(&spec, 20).unwrap().is_zero());
    }

    #[test]
    fn non_integral_form_is_rejected() {
        let spec = HeckeSpec::new(
            ThetaProduct::unit(),
            vec![HeckeComponent::new(
                QuadForm::new(1, 0, -1, 1, 0, 0, 3),
                JRange::SYMMETRIC,
            )],
        );
        assert!(matches!(
            hecke_sum(&spec, 20),
            Err(SeriesError::NonIntegralExponent(_))
        ));
    }

    #[test]
    fn divergent_form_overflows() {
        // n^2 - 4 j^2 over |j| <= n drops without bound.
        let spec = HeckeSpec::new(
            ThetaProduct::unit(),
            vec![HeckeComponent::new(
                QuadForm::new(1, 0, -4, 0, 0, 0, 1),
                JRange::SYMMETRIC,
            )],
        );
        assert!(matches!(
            hecke_sum(&spec, 20),
            Err(SeriesError::TruncationOverflow { .. })
        ));
    }
}
