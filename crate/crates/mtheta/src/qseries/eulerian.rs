//! Eulerian sums driven by term-ratio recurrences.
//!
//! A sum `Σ_{n ≥ n0} t_n` is described by its first term and the ratio
//! `t_n / t_{n-1}`, both products of a signed monomial and binomials
//! `(1 + c q^{a n + b})`. The same description runs exactly over ℚ or over
//! GF(2) with bitset shifts and stride XORs.

use num_bigint::BigInt;

use super::error::{Result, SeriesError};
use super::parity::ParitySeries;
use super::series::Series;

/// The binomial `1 + c q^{a n + b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Binomial {
    pub c: i64,
    pub a: i64,
    pub b: i64,
}

impl Binomial {
    /// `1 + q^{a n + b}`
    pub const fn plus(a: i64, b: i64) -> Binomial {
        Binomial { c: 1, a, b }
    }

    /// `1 - q^{a n + b}`
    pub const fn minus(a: i64, b: i64) -> Binomial {
        Binomial { c: -1, a, b }
    }

    pub fn exponent(&self, n: i64) -> i64 {
        self.a * n + self.b
    }
}

/// `sign * q^{shift.0 n + shift.1} * prod num / prod den`, evaluated at `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub sign: i64,
    pub shift: (i64, i64),
    pub num: Vec<Binomial>,
    pub den: Vec<Binomial>,
}

impl Step {
    pub fn new(sign: i64, shift: (i64, i64), num: Vec<Binomial>, den: Vec<Binomial>) -> Step {
        Step {
            sign,
            shift,
            num,
            den,
        }
    }

    pub fn monomial(sign: i64, exponent: i64) -> Step {
        Step::new(sign, (0, exponent), Vec::new(), Vec::new())
    }

    /// Normalized factors at `n`: overall sign, monomial exponent, scalar
    /// factor `(num, den)` from zero-exponent binomials, and the binomials
    /// `(c, k)` with `k > 0` for numerator and denominator.
    fn resolve(&self, n: i64) -> Resolved {
        let mut r = Resolved {
            sign: self.sign,
            shift: self.shift.0 * n + self.shift.1,
            scalar: (1, 1),
            num: Vec::new(),
            den: Vec::new(),
        };
        for (list, is_num) in [(&self.num, true), (&self.den, false)] {
            for f in list.iter() {
                let e = f.exponent(n);
                if e == 0 {
                    if is_num {
                        r.scalar.0 *= 1 + f.c;
                    } else {
                        r.scalar.1 *= 1 + f.c;
                    }
                    continue;
                }
                let (c, k) = if e < 0 {
                    // 1 + c q^e = c q^e (1 + c q^{-e}) for c = ±1
                    r.sign *= f.c;
                    r.shift += if is_num { e } else { -e };
                    (f.c, -e)
                } else {
                    (f.c, e)
                };
                if is_num {
                    r.num.push((c, k));
                } else {
                    r.den.push((c, k));
                }
            }
        }
        r
    }
}

struct Resolved {
    sign: i64,
    shift: i64,
    scalar: (i64, i64),
    num: Vec<(i64, i64)>,
    den: Vec<(i64, i64)>,
}

/// How fast the valuation of `t_n` grows, which fixes the iteration cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Growth {
    /// Valuation grows like `n^2`; cap `4 sqrt(N) + 16`.
    Quadratic,
    /// Valuation grows like `n`; cap `N + 16`.
    Linear,
}

impl Growth {
    pub fn cap(self, precision: i64) -> usize {
        let n = precision.max(0) as f64;
        match self {
            Growth::Quadratic => (4.0 * n.sqrt()) as usize + 16,
            Growth::Linear => precision.max(0) as usize + 16,
        }
    }
}

/// A complete Eulerian recurrence: `scale * Σ_{n ≥ start} t_n * mult(n) + add`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianSpec {
    pub start: i64,
    pub first: Step,
    pub ratio: Step,
    pub multiplier: Vec<Binomial>,
    pub scale: i64,
    pub add: i64,
    pub growth: Growth,
}

impl EulerianSpec {
    pub fn new(start: i64, first: Step, ratio: Step, growth: Growth) -> EulerianSpec {
        EulerianSpec {
            start,
            first,
            ratio,
            multiplier: Vec::new(),
            scale: 1,
            add: 0,
            growth,
        }
    }

    pub fn with_multiplier(mut self, m: Vec<Binomial>) -> EulerianSpec {
        self.multiplier = m;
        self
    }

    pub fn with_affine(mut self, scale: i64, add: i64) -> EulerianSpec {
        self.scale = scale;
        self.add = add;
        self
    }
}

fn apply_exact(t: &Series, r: &Resolved, precision: i64) -> Result<Series> {
    if r.scalar.1 == 0 {
        return Err(SeriesError::DivisionByZero);
    }
    let mut s = t.shift(r.shift).truncate(precision);
    if r.sign < 0 {
        s = s.neg();
    }
    if r.scalar != (1, 1) {
        s = s.scale(&num_rational::BigRational::new(
            BigInt::from(r.scalar.0),
            BigInt::from(r.scalar.1),
        ));
    }
    for &(c, k) in &r.num {
        s = s.mul_binomial(c, k);
    }
    for &(c, k) in &r.den {
        s = s.div_binomial(c, k)?;
    }
    Ok(s)
}

fn apply_parity(t: &mut ParitySeries, r: &Resolved) -> Result<()> {
    if r.scalar.1 % 2 == 0 {
        return Err(SeriesError::DivisionByZero);
    }
    if r.shift != 0 {
        *t = t.shifted(r.shift);
    }
    if r.scalar.0 % 2 == 0 {
        *t = ParitySeries::zero(t.precision());
        return Ok(());
    }
    for &(_, k) in &r.num {
        t.mul_one_plus(k as usize);
    }
    for &(_, k) in &r.den {
        t.div_one_plus(k as usize)?;
    }
    Ok(())
}

fn multiplier_step(m: &[Binomial]) -> Step {
    Step::new(1, (0, 0), m.to_vec(), Vec::new())
}

fn check_ratio(r: &Resolved, n: i64) -> Result<()> {
    if r.shift < 0 {
        return Err(SeriesError::InvalidSpec(format!(
            "ratio at n = {n} has negative valuation {}",
            r.shift
        )));
    }
    Ok(())
}

/// Exact evaluation to precision `precision`.
pub fn eulerian_sum(spec: &EulerianSpec, precision: i64) -> Result<Series> {
    let cap = spec.growth.cap(precision);
    let mut term = apply_exact(
        &Series::one(precision),
        &spec.first.resolve(spec.start),
        precision,
    )?;
    let mult = multiplier_step(&spec.multiplier);
    let with_mult = |t: &Series, n: i64| -> Result<Series> {
        if spec.multiplier.is_empty() {
            Ok(t.clone())
        } else {
            apply_exact(t, &mult.resolve(n), precision)
        }
    };
    let mut sum = with_mult(&term, spec.start)?;
    let mut n = spec.start;
    let mut iterations = 0usize;
    while !term.is_zero() {
        iterations += 1;
        if iterations > cap {
            return Err(SeriesError::NonterminatingValuation {
                target: precision,
                cap,
            });
        }
        n += 1;
        let r = spec.ratio.resolve(n);
        check_ratio(&r, n)?;
        term = apply_exact(&term, &r, precision)?;
        sum = sum.add(&with_mult(&term, n)?);
    }
    let mut out = sum.scale_int(&BigInt::from(spec.scale));
    if spec.add != 0 {
        out = out.add(&Series::monomial(BigInt::from(spec.add), 0, precision));
    }
    Ok(out)
}

/// Evaluation over GF(2) to precision `precision`.
pub fn eulerian_parity(spec: &EulerianSpec, precision: usize) -> Result<ParitySeries> {
    let cap = spec.growth.cap(precision as i64);
    let mut term = ParitySeries::one(precision);
    apply_parity(&mut term, &spec.first.resolve(spec.start))?;
    let mult = multiplier_step(&spec.multiplier);
    let with_mult = |t: &ParitySeries, n: i64| -> Result<ParitySeries> {
        let mut x = t.clone();
        if !spec.multiplier.is_empty() {
            apply_parity(&mut x, &mult.resolve(n))?;
        }
        Ok(x)
    };
    let mut sum = with_mult(&term, spec.start)?;
    let mut n = spec.start;
    let mut iterations = 0usize;
    while !term.is_zero() {
        iterations += 1;
        if iterations > cap {
            return Err(SeriesError::NonterminatingValuation {
                target: precision as i64,
                cap,
            });
        }
        n += 1;
        let r = spec.ratio.resolve(n);
        check_ratio(&r, n)?;
        apply_parity(&mut term, &r)?;
        sum.xor_assign(&with_mult(&term, n)?);
    }
    if spec.scale % 2 == 0 {
        sum = ParitySeries::zero(precision);
    }
    if spec.add % 2 != 0 && precision > 0 {
        sum.flip(0);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> EulerianSpec {
        EulerianSpec::new(
            0,
            Step::monomial(1, 0),
            Step::new(
                1,
                (2, -1),
                vec![],
                vec![Binomial::plus(1, 0), Binomial::plus(1, 0)],
            ),
            Growth::Quadratic,
        )
    }

    #[test]
    fn third_order_f() {
        let s = eulerian_sum(&f3(), 7).unwrap();
        assert_eq!(s.to_i64_vec(7), vec![1, 1, -2, 3, -3, 3, -5]);
    }

    #[test]
    fn parity_matches_exact() {
        let s = eulerian_sum(&f3(), 300).unwrap();
        let p = eulerian_parity(&f3(), 300).unwrap();
        assert_eq!(ParitySeries::from_series(&s).unwrap(), p);
    }

    #[test]
    fn cap_is_enforced() {
        // Σ q^0 never gains valuation.
        let spec = EulerianSpec::new(
            0,
            Step::monomial(1, 0),
            Step::monomial(1, 0),
            Growth::Quadratic,
        );
        assert!(matches!(
            eulerian_sum(&spec, 50),
            Err(SeriesError::NonterminatingValuation { .. })
        ));
    }
}
