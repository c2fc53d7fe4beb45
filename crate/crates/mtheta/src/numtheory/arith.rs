//! Classical arithmetic functions and the closed counts of odd coefficients.

use num_integer::Roots;

use super::factor::factor;
use super::NumError;
use crate::catalog::MockThetaId;

/// Number of (x, y) in Z^2 with x^2 + y^2 = n.
pub fn r2(n: u64) -> Result<u64, NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    let mut r = 4;
    for (p, e) in factor(n as i128)?.factors {
        match p % 4 {
            1 => r *= e as u64 + 1,
            3 if e % 2 == 1 => return Ok(0),
            _ => {}
        }
    }
    Ok(r)
}

/// Number of 3-core partitions of n, from the factorization of 3n+1.
pub fn a3(n: u64) -> Result<u64, NumError> {
    let mut r = 1;
    for (p, e) in factor(3 * n as i128 + 1)?.factors {
        match p % 3 {
            1 => r *= e as u64 + 1,
            _ if e % 2 == 1 => return Ok(0),
            _ => {}
        }
    }
    Ok(r)
}

pub fn divisor_count(n: u64) -> Result<u64, NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    Ok(factor(n as i128)?
        .factors
        .iter()
        .map(|&(_, e)| e as u64 + 1)
        .product())
}

/// #{k in Z : -s <= 5k + c <= s}.
fn centered_count(s: i64, c: i64) -> u64 {
    let lo = (-s - c).div_euclid(5) + i64::from((-s - c).rem_euclid(5) != 0);
    let hi = (s - c).div_euclid(5);
    (hi - lo + 1).max(0) as u64
}

/// Closed form of #{0 <= n <= N : c(id; n) odd}. For omega(3) the count is
/// over the even-index coefficients c(2n).
pub fn count_formula(id: MockThetaId, n: u64) -> Result<u64, NumError> {
    use MockThetaId::*;
    Ok(match id {
        B2 => (2 * n + 1).sqrt().div_ceil(2),
        Nu3 | Omega3 => {
            let s = (3 * n + 1).sqrt();
            s - s / 3
        }
        Rho6 => (4 * n + 1).sqrt().div_ceil(2),
        Phi10 => centered_count((5 * n + 1).sqrt() as i64, 1),
        Psi10 if n == 0 => 0,
        Psi10 => centered_count((5 * n - 1).sqrt() as i64, 2),
        V0_8 => 1,
        other => return Err(NumError::NoClosedCount(other)),
    })
}

/// The indices n <= N with c(id; n) odd, generated from the parametrization
/// (for omega(3): the n with c(2n) odd).
pub fn characterizing_values(id: MockThetaId, n_max: u64) -> Result<Vec<u64>, NumError> {
    use MockThetaId::*;
    let bound = n_max as i64;
    let k = (3 * bound + 1).sqrt() + 2;
    let k_range = -k..=k;
    let poly: Box<dyn Fn(i64) -> Option<i64>> = match id {
        B2 => Box::new(|k| (k >= 0).then_some(2 * k * k + 2 * k)),
        Nu3 | Omega3 => Box::new(|k| (k >= 1 && k % 3 != 0).then(|| (k * k - 1) / 3)),
        Rho6 => Box::new(|k| (k >= 0).then_some(k * (k + 1))),
        Phi10 => Box::new(|k| Some(5 * k * k + 2 * k)),
        Psi10 => Box::new(|k| Some(5 * k * k + 4 * k + 1)),
        V0_8 => Box::new(|k| (k == 0).then_some(0)),
        other => return Err(NumError::NoClosedCount(other)),
    };
    let mut v: Vec<u64> = k_range
        .filter_map(poly)
        .filter(|&x| (0..=bound).contains(&x))
        .map(|x| x as u64)
        .collect();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

/// Positive squares up to N: the n with c(V0; n) = 2 (mod 4).
pub fn square_count(n: u64) -> u64 {
    n.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use MockThetaId::*;

    #[test]
    fn examples() {
        assert_eq!(r2(1).unwrap(), 4);
        assert_eq!(r2(3).unwrap(), 0);
        assert_eq!(r2(25).unwrap(), 12);
        assert_eq!([0, 2, 3].map(|n| a3(n).unwrap()), [1, 2, 0]);
        assert_eq!([1, 3, 12].map(|n| divisor_count(n).unwrap()), [1, 2, 6]);
        assert_eq!(count_formula(B2, 100).unwrap(), 7);
        assert_eq!(count_formula(Nu3, 10).unwrap(), 4);
        assert_eq!(count_formula(Rho6, 0).unwrap(), 1);
        assert!(matches!(
            count_formula(A2, 5),
            Err(NumError::NoClosedCount(A2))
        ));
    }

    #[test]
    fn r2_by_lattice_scan() {
        for n in 1..300i64 {
            let mut c = 0;
            for x in -20..=20i64 {
                for y in -20..=20i64 {
                    c += u64::from(x * x + y * y == n);
                }
            }
            assert_eq!(r2(n as u64).unwrap(), c, "n={n}");
        }
    }

    #[test]
    fn small_value_sets() {
        assert_eq!(characterizing_values(Nu3, 10).unwrap(), vec![0, 1, 5, 8]);
        assert_eq!(
            characterizing_values(Phi10, 30).unwrap(),
            vec![0, 3, 7, 16, 24]
        );
        assert_eq!(
            characterizing_values(Psi10, 30).unwrap(),
            vec![1, 2, 10, 13, 29]
        );
    }
}
