//! Real quadratic fields Q(sqrt d), d in {2, 3, 6, 15}: the character, ideal
//! counts T and counts H of inequivalent elements of a given norm.

use std::sync::OnceLock;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use super::factor::{factor, jacobi};
use super::NumError;

/// Largest |m| accepted by [`enumerate_representatives`].
pub const MAX_ENUM_NORM: u64 = 1_000_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadField {
    pub d: u32,
    /// D = d if d = 1 (mod 4), else 4d.
    pub disc: u32,
    /// Fundamental solution of x^2 - d y^2 = 1.
    pub pell: (u64, u64),
}

const TABLE: [(u32, (u64, u64)); 4] = [(2, (3, 2)), (3, (2, 1)), (6, (5, 2)), (15, (4, 1))];

fn minimal_pell(d: u64) -> (u64, u64) {
    (1u64..)
        .find_map(|y| {
            let t = d * y * y + 1;
            let x = t.sqrt();
            (x * x == t).then_some((x, y))
        })
        .unwrap_or((1, 0))
}

fn validated() -> &'static [QuadField; 4] {
    static FIELDS: OnceLock<[QuadField; 4]> = OnceLock::new();
    FIELDS.get_or_init(|| {
        TABLE.map(|(d, pell)| {
            assert_eq!(minimal_pell(d as u64), pell, "Pell table entry for d={d}");
            QuadField {
                d,
                disc: if d % 4 == 1 { d } else { 4 * d },
                pell,
            }
        })
    })
}

impl QuadField {
    pub fn new(d: u32) -> Result<QuadField, NumError> {
        validated()
            .iter()
            .copied()
            .find(|f| f.d == d)
            .ok_or(NumError::UnsupportedField(d))
    }

    pub fn all() -> [QuadField; 4] {
        *validated()
    }
}

/// The field character chi_K, completely multiplicative with chi(-1) = 1.
pub fn chi(field: QuadField, x: i64) -> i8 {
    if num_integer::gcd(x, field.disc as i64) != 1 {
        return 0;
    }
    let d = field.d as i64;
    let x = x as i128;
    let sign = |e: i128| if e.rem_euclid(2) == 0 { 1 } else { -1 };
    let jac = |m: i64| jacobi(x.rem_euclid(m as i128) as i64, m).expect("odd modulus");
    match d % 4 {
        1 => jac(d),
        3 => sign((x - 1) / 2) * jac(d),
        _ => {
            let dp = d / 2;
            let j = if dp == 1 { 1 } else { jac(dp) };
            sign((x * x - 1) / 8 + (x - 1) * (dp as i128 - 1) / 4) * j
        }
    }
}

fn local_t(c: i8, e: u32) -> u64 {
    match c {
        1 => e as u64 + 1,
        0 => 1,
        _ => u64::from(e.is_multiple_of(2)),
    }
}

/// T(n) = sum over m | n of chi(m), the number of ideals of norm n.
pub fn ideal_count_t(field: QuadField, n: u64) -> Result<u64, NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    let f = factor(n as i128)?;
    Ok(f.factors
        .iter()
        .map(|&(p, e)| local_t(chi(field, p as i64), e))
        .product())
}

fn in_proven_class_15(n: i64) -> bool {
    n > 0 && (matches!(n % 20, 1 | 9) || matches!(n % 40, 26 | 34))
}

/// H(n) from the closed forms. For d = 15 only the classes 1, 9 (mod 20)
/// and 26, 34 (mod 40), where H = T.
pub fn class_count_h(field: QuadField, n: i64) -> Result<u64, NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    let mag = n.unsigned_abs();
    match field.d {
        2 => ideal_count_t(field, mag),
        3 | 6 => {
            let f = factor(mag as i128)?;
            let modulus = if field.d == 3 { 12 } else { 24 };
            let mut parity = 0u32;
            let mut count = 1u64;
            for &(p, e) in &f.factors {
                match (field.d, p % modulus) {
                    (_, _) if p == 2 => parity += e,
                    (3, _) if p == 3 => parity += e,
                    (6, _) if p == 3 => {}
                    (3, 1) | (6, 1 | 19) => count *= e as u64 + 1,
                    (3, 11) | (6, 5 | 23) => {
                        parity += e;
                        count *= e as u64 + 1;
                    }
                    _ => {
                        if e % 2 == 1 {
                            return Ok(0);
                        }
                    }
                }
            }
            let want_even = n > 0;
            Ok(if parity.is_multiple_of(2) == want_even {
                count
            } else {
                0
            })
        }
        15 if in_proven_class_15(n) => ideal_count_t(field, mag),
        15 => Err(NumError::UnsupportedResidue { d: 15, n }),
        d => Err(NumError::UnsupportedField(d)),
    }
}

/// Canonical representatives of the classes of solutions of u^2 - d v^2 = m
/// under multiplication by units of norm 1:
/// m > 0: u > 0, -y1 u < (x1+1) v <= y1 u;
/// m < 0: v > 0, -d y1 v < (x1+1) u <= d y1 v.
pub fn enumerate_representatives(field: QuadField, m: i64) -> Result<Vec<(i64, i64)>, NumError> {
    if m == 0 {
        return Err(NumError::Zero);
    }
    let bound = MAX_ENUM_NORM;
    if m.unsigned_abs() > bound {
        return Err(NumError::SearchBoundExceeded { m, bound });
    }
    let d = field.d as i128;
    let (x1, y1) = (field.pell.0 as i128, field.pell.1 as i128);
    let mi = m as i128;
    let t = (mi.unsigned_abs() * (y1 * y1) as u128).div_ceil((x1 - 1) as u128);
    let vmax = t.sqrt() as i128 + 2;
    let mut reps = Vec::new();
    for v in -vmax..=vmax {
        let u2 = mi + d * v * v;
        if u2 < 0 {
            continue;
        }
        let r = (u2 as u128).sqrt() as i128;
        if r * r != u2 {
            continue;
        }
        for u in if r == 0 { vec![0] } else { vec![r, -r] } {
            let ok = if m > 0 {
                u > 0 && -y1 * u < (x1 + 1) * v && (x1 + 1) * v <= y1 * u
            } else {
                v > 0 && -d * y1 * v < (x1 + 1) * u && (x1 + 1) * u <= d * y1 * v
            };
            if ok {
                reps.push((u as i64, v as i64));
            }
        }
    }
    reps.sort_unstable();
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(d: u32) -> QuadField {
        QuadField::new(d).unwrap()
    }

    #[test]
    fn fields() {
        assert_eq!(f(2).disc, 8);
        assert_eq!(f(15).disc, 60);
        assert_eq!(f(6).pell, (5, 2));
        assert!(matches!(
            QuadField::new(5),
            Err(NumError::UnsupportedField(5))
        ));
    }

    #[test]
    fn character_tables() {
        for x in 1..200i64 {
            let want6 = match x % 24 {
                1 | 5 | 19 | 23 => 1,
                7 | 11 | 13 | 17 => -1,
                _ => 0,
            };
            assert_eq!(chi(f(6), x), want6, "x={x}");
            let want15 = match x % 60 {
                1 | 59 | 7 | 53 | 11 | 49 | 17 | 43 => 1,
                13 | 47 | 19 | 41 | 23 | 37 | 29 | 31 => -1,
                _ => 0,
            };
            assert_eq!(chi(f(15), x), want15, "x={x}");
        }
        assert_eq!(chi(f(6), 5), 1);
        assert_eq!(chi(f(6), 7), -1);
        assert_eq!(chi(f(15), 7), 1);
    }

    #[test]
    fn counts() {
        assert_eq!(ideal_count_t(f(6), 5).unwrap(), 2);
        assert_eq!(ideal_count_t(f(6), 2).unwrap(), 1);
        for d in [2, 3, 6, 15] {
            assert_eq!(ideal_count_t(f(d), 1).unwrap(), 1);
        }
        assert_eq!(class_count_h(f(2), 7).unwrap(), 2);
        assert_eq!(class_count_h(f(3), -2).unwrap(), 1);
        assert_eq!(class_count_h(f(6), -1).unwrap(), 0);
        assert!(matches!(
            class_count_h(f(15), 7),
            Err(NumError::UnsupportedResidue { .. })
        ));
        assert_eq!(class_count_h(f(15), 1).unwrap(), 1);
    }

    #[test]
    fn representatives() {
        assert_eq!(enumerate_representatives(f(2), 1).unwrap(), vec![(1, 0)]);
        assert_eq!(enumerate_representatives(f(2), -1).unwrap(), vec![(1, 1)]);
        assert_eq!(enumerate_representatives(f(6), 3).unwrap(), vec![(3, 1)]);
        assert_eq!(enumerate_representatives(f(2), 7).unwrap().len(), 2);
    }
}
