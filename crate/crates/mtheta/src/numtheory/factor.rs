//! Certified factorization of 64-bit magnitudes and the Jacobi symbol.

use num_integer::Integer;

use super::NumError;

/// `sign * prod p^e`, primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> i128 {
        let mag: i128 = self
            .factors
            .iter()
            .map(|&(p, e)| (p as i128).pow(e))
            .product();
        self.sign as i128 * mag
    }

    /// Exponent of `p` (0 if absent).
    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.iter().find(|f| f.0 == p).map_or(0, |f| f.1)
    }

    pub fn is_prime(&self) -> bool {
        self.sign == 1 && self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.sign < 0 {
            parts.push("-1".into());
        }
        for &(p, e) in &self.factors {
            parts.push(if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            });
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join("*"))
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin; the first twelve primes as witnesses are
/// enough for every n < 2^64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho; `n` odd composite.
fn rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut r = 1u64;
        let mut ys = 0u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..r.min(128).min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = rho(n);
    split(d, out);
    split(n / d, out);
}

/// Factors a nonzero integer with |n| < 2^64.
pub fn factor(n: i128) -> Result<Factorization, NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    let mag = n.unsigned_abs();
    let mut m = u64::try_from(mag).map_err(|_| NumError::Overflow(n.to_string()))?;
    let sign = if n < 0 { -1 } else { 1 };
    let mut primes = Vec::new();
    for p in 2..1000u64 {
        if p * p > m {
            break;
        }
        while m % p == 0 {
            primes.push(p);
            m /= p;
        }
    }
    split(m, &mut primes);
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some(last) if last.0 == p => last.1 += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { sign, factors })
}

/// Jacobi symbol (a/b) for odd positive b.
pub fn jacobi(a: i64, b: i64) -> Result<i8, NumError> {
    if b <= 0 {
        return Err(NumError::NonPositiveModulus(b));
    }
    if b % 2 == 0 {
        return Err(NumError::EvenModulus(b));
    }
    let mut n = b as u64;
    let mut a = a.rem_euclid(b) as u64;
    let mut t = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    Ok(if n == 1 { t } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = factor(60).unwrap();
        assert_eq!(f.factors, vec![(2, 2), (3, 1), (5, 1)]);
        assert!(factor((1i128 << 61) - 1).unwrap().is_prime());
        let f = factor(-45).unwrap();
        assert_eq!((f.sign, f.factors.clone()), (-1, vec![(3, 2), (5, 1)]));
        assert_eq!(f.to_string(), "-1*3^2*5");
        assert!(matches!(factor(0), Err(NumError::Zero)));
        assert!(matches!(factor(1i128 << 64), Err(NumError::Overflow(_))));
    }

    #[test]
    fn large_semiprimes() {
        let p = 4_294_967_291u64;
        let q = 4_294_967_279u64;
        let f = factor(p as i128 * q as i128).unwrap();
        assert_eq!(f.factors, vec![(q, 1), (p, 1)]);
        assert_eq!(factor(u64::MAX as i128).unwrap().value(), u64::MAX as i128);
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(2, 15).unwrap(), 1);
        assert_eq!(jacobi(1, 21).unwrap(), 1);
        assert_eq!(jacobi(3, 9).unwrap(), 0);
        assert_eq!(jacobi(-1, 3).unwrap(), -1);
        assert!(matches!(jacobi(1, 4), Err(NumError::EvenModulus(4))));
    }
}
