use mtheta::catalog::MockThetaId::{self, *};
use mtheta::numtheory::*;
use proptest::prelude::*;

fn field(d: u32) -> QuadField {
    QuadField::new(d).unwrap()
}

fn count(d: u32, m: i64) -> u64 {
    enumerate_representatives(field(d), m).unwrap().len() as u64
}

#[test]
fn chi_is_completely_multiplicative() {
    for f in QuadField::all() {
        for x in -1000..=1000i64 {
            let cx = chi(f, x);
            for y in (-1000..=1000i64).step_by(7) {
                assert_eq!(cx * chi(f, y), chi(f, x * y), "d={} x={x} y={y}", f.d);
            }
        }
    }
}

#[test]
fn sqrt2_h_equals_t_equals_enumeration() {
    let f = field(2);
    for n in 1..=2000i64 {
        let t = ideal_count_t(f, n as u64).unwrap();
        assert_eq!(class_count_h(f, n).unwrap(), t, "n={n}");
        assert_eq!(class_count_h(f, -n).unwrap(), t, "n=-{n}");
        assert_eq!(count(2, n), t, "n={n}");
        assert_eq!(count(2, -n), t, "n=-{n}");
    }
}

#[test]
fn sqrt3_sqrt6_split_t_between_signs() {
    for d in [3, 6] {
        let f = field(d);
        for n in 1..=2000i64 {
            let (hp, hm) = (class_count_h(f, n).unwrap(), class_count_h(f, -n).unwrap());
            assert_eq!(hp * hm, 0, "d={d} n={n}");
            assert_eq!(hp + hm, ideal_count_t(f, n as u64).unwrap(), "d={d} n={n}");
            assert_eq!(count(d, n), hp, "d={d} n={n}");
            assert_eq!(count(d, -n), hm, "d={d} n=-{n}");
        }
    }
}

#[test]
fn sqrt15_enumeration_matches_t_in_proven_classes() {
    let f = field(15);
    let mut checked = 0;
    for n in 1..=4000i64 {
        if matches!(n % 20, 1 | 9) || matches!(n % 40, 26 | 34) {
            let t = ideal_count_t(f, n as u64).unwrap();
            assert_eq!(count(15, n), t, "n={n}");
            assert_eq!(class_count_h(f, n).unwrap(), t);
            checked += 1;
        } else {
            assert!(class_count_h(f, n).is_err());
        }
    }
    assert_eq!(checked, 600);
}

#[test]
fn sqrt15_outside_proven_classes_differs_somewhere() {
    // 3 and 5 are ramified but 3 = u^2 - 15 v^2 has no solution.
    assert_eq!(ideal_count_t(field(15), 3).unwrap(), 1);
    assert_eq!(count(15, 3), 0);
}

#[test]
fn norm_minus_one_is_empty() {
    for d in [3, 6, 15] {
        assert!(
            enumerate_representatives(field(d), -1).unwrap().is_empty(),
            "d={d}"
        );
    }
    assert_eq!(count(2, -1), 1);
}

#[test]
fn representatives_are_canonical_solutions() {
    for f in QuadField::all() {
        let (x1, y1) = (f.pell.0 as i64, f.pell.1 as i64);
        let d = f.d as i64;
        for m in (-300..=300i64).filter(|&m| m != 0) {
            let reps = enumerate_representatives(f, m).unwrap();
            for &(u, v) in &reps {
                assert_eq!(u * u - d * v * v, m);
                // applying the fundamental unit leaves the canonical region
                let (u2, v2) = (u * x1 + d * v * y1, u * y1 + v * x1);
                assert!(!reps.contains(&(u2, v2)));
            }
        }
    }
}

#[test]
fn search_bound_is_enforced() {
    let err = enumerate_representatives(field(2), (MAX_ENUM_NORM + 1) as i64).unwrap_err();
    assert!(matches!(err, NumError::SearchBoundExceeded { .. }));
}

#[test]
fn gamma_count_matches_predicate_loop() {
    let conds = [
        SpecialFormCondition::new(8, 7),
        SpecialFormCondition::new(24, 23),
        SpecialFormCondition::new(4, 3),
        SpecialFormCondition::new(60, 59),
        SpecialFormCondition::new(16, 7),
        special_predicates(PsiMinus6).unwrap(),
    ];
    for c in &conds {
        let direct = (0..=10_000)
            .filter(|&n| is_special_form(c, n).unwrap().is_some())
            .count() as u64;
        assert_eq!(gamma_count(c, 10_000).unwrap(), direct, "{}", c.describe());
    }
}

#[test]
fn a2_predicate_needs_no_residue() {
    let plain = special_predicates(A2).unwrap();
    let restricted = plain.clone().with_residue(8, &[7]);
    for n in 1..=5000 {
        assert_eq!(
            is_special_form(&plain, n).unwrap().is_some(),
            is_special_form(&restricted, n).unwrap().is_some(),
        );
    }
}

#[test]
fn count_formula_matches_enumeration() {
    let ids = [B2, Nu3, Omega3, Rho6, Phi10, Psi10, V0_8];
    for id in ids {
        let values = characterizing_values(id, 10_000).unwrap();
        let mut i = 0;
        for n in 0..=10_000u64 {
            while i < values.len() && values[i] <= n {
                i += 1;
            }
            assert_eq!(count_formula(id, n).unwrap(), i as u64, "{id} N={n}");
        }
    }
}

#[test]
fn a3_matches_three_core_count() {
    // a3 from the product (q^3;q^3)^3 / (q;q)
    let n = 150usize;
    let mut euler = vec![0i64; n + 1];
    euler[0] = 1;
    for k in 1..=n {
        for i in (k..=n).rev() {
            euler[i] -= euler[i - k];
        }
    }
    let mut num = vec![0i64; n + 1];
    for (i, c) in euler.iter().enumerate() {
        if 3 * i <= n {
            num[3 * i] = *c;
        }
    }
    let mut cube = num.clone();
    for _ in 0..2 {
        let mut next = vec![0i64; n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                next[i + j] += cube[i] * num[j];
            }
        }
        cube = next;
    }
    // divide by (q;q): multiply by the partition generating function
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for k in 1..=n {
        for i in k..=n {
            p[i] += p[i - k];
        }
    }
    for m in 0..=n {
        let c: i64 = (0..=m).map(|i| cube[i] * p[m - i]).sum();
        assert_eq!(a3(m as u64).unwrap() as i64, c, "n={m}");
    }
}

#[test]
fn divisor_count_by_scan() {
    for n in 1..=2000u64 {
        assert_eq!(
            divisor_count(n).unwrap(),
            (1..=n).filter(|d| n % d == 0).count() as u64
        );
    }
}

#[test]
fn gamma_leading_term_constants() {
    use std::f64::consts::PI;
    for (a, want) in [
        (4, PI * PI / 4.0),
        (24, PI * PI / 3.0),
        (60, 2.0 * PI * PI / 5.0),
        (8, PI * PI / 4.0),
    ] {
        assert!((gamma_constant(a) - want).abs() < 1e-12);
    }
    let c = SpecialFormCondition::new(8, 7);
    let n = 1e6;
    assert!((gamma_asymptotic(&c, n) - PI * PI / 4.0 * n / n.ln()).abs() < 1e-6);
}

#[test]
fn predicate_registry() {
    let with: Vec<MockThetaId> = MockThetaId::ALL
        .iter()
        .copied()
        .filter(|&id| special_predicates(id).is_ok())
        .collect();
    assert_eq!(with.len(), 16);
    for id in [Chi3, Gamma6, F3, Mu2, Lambda6, TwoMu6, X10] {
        assert!(special_predicates(id).is_err());
    }
}

proptest! {
    #[test]
    fn factorization_reconstructs(n in (i64::MIN + 1)..i64::MAX) {
        prop_assume!(n != 0);
        let f = factor(n as i128).unwrap();
        prop_assert_eq!(f.value(), n as i128);
        prop_assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
        prop_assert!(f.factors.iter().all(|&(p, _)| is_prime(p)));
    }

    #[test]
    fn t_is_multiplicative(m in 1u64..5000, n in 1u64..5000) {
        prop_assume!(num_integer::gcd(m, n) == 1);
        for f in QuadField::all() {
            prop_assert_eq!(
                ideal_count_t(f, m * n).unwrap(),
                ideal_count_t(f, m).unwrap() * ideal_count_t(f, n).unwrap()
            );
        }
    }

    #[test]
    fn t_is_divisor_sum(n in 1u64..3000) {
        for f in QuadField::all() {
            let s: i64 = (1..=n).filter(|m| n % m == 0).map(|m| chi(f, m as i64) as i64).sum();
            prop_assert_eq!(ideal_count_t(f, n).unwrap() as i64, s);
        }
    }

    #[test]
    fn jacobi_matches_euler_criterion_for_primes(a in -1000i64..1000, idx in 1usize..60) {
        let p = (3u64..).filter(|&q| is_prime(q)).nth(idx).unwrap() as i64;
        let r = a.rem_euclid(p);
        let e = (0..(p - 1) / 2).fold(1i64, |acc, _| acc * r % p);
        let want = if r == 0 { 0 } else if e == 1 { 1 } else { -1 };
        prop_assert_eq!(jacobi(a, p).unwrap() as i64, want);
    }

    #[test]
    fn witness_reconstructs_target(t in 1u64..1_000_000) {
        if let Some(w) = special_witness(t).unwrap() {
            prop_assert_eq!(w.p.pow(4 * w.a + 1) as u128 * (w.m as u128).pow(2), t as u128);
            prop_assert!(w.m % w.p != 0);
        }
    }
}
