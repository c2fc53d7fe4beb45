//! Lazily evaluated sides of a claim: exact q-series and GF(2) series, each a
//! function of the number of coefficients wanted.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::VerifyError;
use crate::catalog::{self, AuxSequence, MockThetaId};
use crate::qseries::{appell_lerch_m, ParitySeries, QMonomial, Series, ThetaBlock, ThetaProduct};

type ExactFn = dyn Fn(i64) -> Result<Series, VerifyError> + Send + Sync;
type ParityFn = dyn Fn(usize) -> Result<ParitySeries, VerifyError> + Send + Sync;

/// Exact series; `eval(n)` has precision at least `n`.
#[derive(Clone)]
pub struct Ex(Arc<ExactFn>);

impl Ex {
    pub fn new(f: impl Fn(i64) -> Result<Series, VerifyError> + Send + Sync + 'static) -> Ex {
        Ex(Arc::new(f))
    }

    pub fn eval(&self, n: i64) -> Result<Series, VerifyError> {
        (self.0)(n)
    }

    /// `sum c(k n + r) q^n`.
    pub fn dissect(self, k: i64, r: i64) -> Ex {
        Ex::new(move |n| Ok(self.eval(k * n + r)?.dissect(k, r)))
    }

    /// `f(q^k)`.
    pub fn subs(self, k: i64) -> Ex {
        Ex::new(move |n| Ok(self.eval((n + k - 1) / k)?.subs(k).truncate(n.max(0))))
    }

    /// `f(-q)`.
    pub fn negq(self) -> Ex {
        Ex::new(move |n| Ok(self.eval(n)?.negate_q()))
    }

    /// `q^s f`.
    pub fn shift(self, s: i64) -> Ex {
        Ex::new(move |n| Ok(self.eval((n - s).max(1))?.shift(s)))
    }

    pub fn scale(self, num: i64, den: i64) -> Ex {
        let k = BigRational::new(BigInt::from(num), BigInt::from(den));
        Ex::new(move |n| Ok(self.eval(n)?.scale(&k)))
    }

    pub fn constant(c: i64) -> Ex {
        Ex::new(move |n| Ok(Series::monomial(BigInt::from(c), 0, n)))
    }

    /// Series from a coefficient rule on `0 <= k < n`.
    pub fn from_fn(f: impl Fn(i64) -> BigInt + Send + Sync + 'static) -> Ex {
        Ex::new(move |n| Ok(Series::from_bigints(0, (0..n).map(&f).collect(), n)))
    }
}

impl Add for Ex {
    type Output = Ex;
    fn add(self, o: Ex) -> Ex {
        Ex::new(move |n| Ok(self.eval(n)?.add(&o.eval(n)?)))
    }
}

impl Sub for Ex {
    type Output = Ex;
    fn sub(self, o: Ex) -> Ex {
        Ex::new(move |n| Ok(self.eval(n)?.sub(&o.eval(n)?)))
    }
}

impl Neg for Ex {
    type Output = Ex;
    fn neg(self) -> Ex {
        Ex::new(move |n| Ok(self.eval(n)?.neg()))
    }
}

/// Product of two series with valuations >= 0 after the shifts they carry;
/// both factors are taken to the same depth.
impl Mul for Ex {
    type Output = Ex;
    fn mul(self, o: Ex) -> Ex {
        Ex::new(move |n| Ok(self.eval(n)?.mul(&o.eval(n)?).truncate(n)))
    }
}

/// `c(id; n)` from the defining Eulerian series.
pub fn func(id: MockThetaId) -> Ex {
    Ex::new(move |n| Ok(catalog::expand_label(id, "eulerian", n.max(1) as usize)?))
}

pub fn theta(t: ThetaProduct) -> Ex {
    Ex::new(move |n| Ok(t.series(n)?))
}

/// Eta quotient `coef * q^shift * prod J_m^e`.
pub fn eta(coef: i64, shift: i64, parts: &[(i64, i64)]) -> Ex {
    theta(
        ThetaProduct::eta_quotient(parts)
            .with_coef(coef, 1)
            .with_shift(shift),
    )
}

/// A single block `J_{a,m}` or `Jbar_{a,m}` to the first power.
pub fn block(b: ThetaBlock) -> Ex {
    theta(ThetaProduct::new(vec![b]))
}

/// `m(x, q^base, z)` for `x = sx q^ex`, `z = sz q^ez`.
pub fn lerch_m(sx: i64, ex: i64, base: i64, sz: i64, ez: i64) -> Ex {
    Ex::new(move |n| {
        Ok(appell_lerch_m(
            QMonomial::new(sx, ex),
            base,
            QMonomial::new(sz, ez),
            n,
        )?)
    })
}

pub fn aux(seq: AuxSequence) -> Ex {
    Ex::new(move |n| Ok(catalog::aux(&seq, n.max(1) as usize)))
}

/// Series with all coefficients below `n` reduced into `[0, m)`; integral input.
pub fn residues(s: &Series, n: i64, m: u32) -> Result<Vec<u32>, VerifyError> {
    let m = BigInt::from(m);
    (0..n)
        .map(|e| {
            let c = s.int_coeff(e)?;
            let r = ((c % &m) + &m) % &m;
            Ok(u32::try_from(r).unwrap_or(0))
        })
        .collect()
}

/// GF(2) series; `eval(n)` has precision at least `n`.
#[derive(Clone)]
pub struct Px(Arc<ParityFn>);

impl Px {
    pub fn new(
        f: impl Fn(usize) -> Result<ParitySeries, VerifyError> + Send + Sync + 'static,
    ) -> Px {
        Px(Arc::new(f))
    }

    pub fn eval(&self, n: usize) -> Result<ParitySeries, VerifyError> {
        Ok((self.0)(n)?.truncate(n))
    }

    pub fn dissect(self, k: usize, r: usize) -> Px {
        Px::new(move |n| Ok(self.eval(k * n + r)?.dissect(k, r)))
    }

    pub fn subs(self, k: usize) -> Px {
        Px::new(move |n| Ok(self.eval(n.div_ceil(k))?.subs(k)))
    }

    /// `q^s f`; a negative shift drops the first |s| coefficients.
    pub fn shift(self, s: i64) -> Px {
        Px::new(move |n| {
            Ok(self
                .eval(n + s.min(0).unsigned_abs() as usize)?
                .shifted(s)
                .truncate(n))
        })
    }

    /// Bits from an index predicate.
    pub fn from_fn(f: impl Fn(usize) -> bool + Send + Sync + 'static) -> Px {
        Px::new(move |n| Ok(ParitySeries::from_indices((0..n).filter(|&i| f(i)), n)))
    }

    /// Bits of an exact integral series.
    pub fn of(e: Ex) -> Px {
        Px::new(move |n| Ok(ParitySeries::from_series(&e.eval(n as i64)?)?))
    }
}

impl Add for Px {
    type Output = Px;
    fn add(self, o: Px) -> Px {
        Px::new(move |n| {
            let mut a = self.eval(n)?;
            a.xor_assign(&o.eval(n)?);
            Ok(a)
        })
    }
}

/// `c(id; n) mod 2` from the GF(2) run of the defining Eulerian series.
pub fn func_par(id: MockThetaId) -> Px {
    Px::new(move |n| Ok(catalog::entry(id).primary().parity(n)?))
}

pub fn theta_par(t: ThetaProduct) -> Px {
    Px::new(move |n| Ok(t.parity(n)?))
}

/// `prod_{s in S} 1/(1 - q^s)` mod 2, one cyclotomic division per part size.
pub fn parts_par(allowed: impl Fn(usize) -> bool + Send + Sync + 'static, copies: usize) -> Px {
    Px::new(move |n| {
        let mut p = ParitySeries::one(n);
        for s in (1..n).filter(|&s| allowed(s)) {
            for _ in 0..copies {
                p.div_one_plus(s)?;
            }
        }
        Ok(p)
    })
}

/// `p_{-k}(n)` mod 2.
pub fn partitions_par(k: usize) -> Px {
    parts_par(|_| true, k)
}
