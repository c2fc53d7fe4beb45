//! The registered claim set.

use std::sync::Arc;

use num_bigint::BigInt;

use super::expr::{
    aux, block, eta, func, func_par, lerch_m, partitions_par, theta, theta_par, Ex, Px,
};
use super::{Check, Claim, ClaimKind, DepthClass, Mismatch, Outcome, VerifyError};
use crate::catalog::{self, AuxSequence, MockThetaId, MockThetaId::*};
use crate::numtheory::{self, NumError, SpecialFormCondition};
use crate::qseries::{
    eulerian_sum, Binomial, EulerianSpec, Growth, ParitySeries, Series, Step, ThetaBlock as TB,
    ThetaProduct,
};

fn claim(
    id: impl Into<String>,
    kind: ClaimKind,
    subject: Option<MockThetaId>,
    statement: impl Into<String>,
    depth: DepthClass,
    check: Check,
) -> Claim {
    Claim {
        id: id.into(),
        kind,
        subject,
        statement: statement.into(),
        depth,
        from: None,
        check,
    }
}

fn from(mut c: Claim, n: i64) -> Claim {
    c.from = Some(n);
    c
}

fn parity(
    id: &str,
    kind: ClaimKind,
    subject: Option<MockThetaId>,
    statement: &str,
    depth: DepthClass,
    lhs: Px,
    rhs: Px,
) -> Claim {
    claim(
        id,
        kind,
        subject,
        statement,
        depth,
        Check::Parity { lhs, rhs },
    )
}

fn exact(id: &str, statement: &str, lhs: Ex, rhs: Ex) -> Claim {
    claim(
        id,
        ClaimKind::Identity,
        None,
        statement,
        DepthClass::Identity,
        Check::Exact {
            lhs,
            rhs,
            modulus: 0,
        },
    )
}

fn congruence(id: &str, subject: MockThetaId, statement: &str, lhs: Px, rhs: Px) -> Claim {
    parity(
        id,
        ClaimKind::Congruence,
        Some(subject),
        statement,
        DepthClass::Modular,
        lhs,
        rhs,
    )
}

fn modular(
    id: &str,
    subject: MockThetaId,
    statement: &str,
    lhs: Ex,
    rhs: Ex,
    modulus: u32,
) -> Claim {
    claim(
        id,
        ClaimKind::Congruence,
        Some(subject),
        statement,
        DepthClass::Modular,
        Check::Exact { lhs, rhs, modulus },
    )
}

fn q(parts: &[(i64, i64)]) -> Ex {
    eta(1, 0, parts)
}

/// `num/den * q^shift * prod J_m^e`.
fn qr(num: i64, den: i64, shift: i64, parts: &[(i64, i64)]) -> Ex {
    theta(
        ThetaProduct::eta_quotient(parts)
            .with_coef(num, den)
            .with_shift(shift),
    )
}

/// Bits from a fallible index predicate.
fn pred_par(f: impl Fn(usize) -> Result<bool, VerifyError> + Send + Sync + 'static) -> Px {
    Px::new(move |n| {
        let mut idx = Vec::new();
        for i in 0..n {
            if f(i)? {
                idx.push(i);
            }
        }
        Ok(ParitySeries::from_indices(idx, n))
    })
}

fn a3_odd(n: u64) -> Result<bool, NumError> {
    Ok(numtheory::a3(n)? % 2 == 1)
}

fn a3_par() -> Px {
    pred_par(|i| Ok(a3_odd(i as u64)?))
}

fn special_par(cond: SpecialFormCondition) -> Px {
    pred_par(move |i| {
        Ok(cond.also_odd.contains(&(i as u64))
            || numtheory::is_special_form(&cond, i as i64)?.is_some())
    })
}

/// Bits at `scale * v` for the characterizing values `v` of `id`.
fn values_par(id: MockThetaId, scale: usize) -> Px {
    Px::new(move |n| {
        let top = n.saturating_sub(1) / scale;
        let vals = numtheory::characterizing_values(id, top as u64)?;
        Ok(ParitySeries::from_indices(
            vals.into_iter()
                .map(|v| v as usize * scale)
                .filter(|&v| v < n),
            n,
        ))
    })
}

fn is_triangular(n: u64) -> bool {
    let s = (8 * n + 1).isqrt();
    s * s == 8 * n + 1
}

/// `n = 2k(3k+1)` for some integer `k`.
fn is_rho_pentagonal(n: u64) -> bool {
    let d = 6 * n + 1;
    let s = d.isqrt();
    s * s == d && ((s + 1).is_multiple_of(6) || (s - 1).is_multiple_of(6))
}

/// Parity of `c(rho3; n)` predicted from the two partial characterizations
/// and the 4n+2 recurrence.
pub fn rho3_predicted_parity(n: u64) -> Result<bool, NumError> {
    match n % 4 {
        1 | 3 => Ok(numtheory::is_special_form(
            &numtheory::special_predicates(Rho3)?,
            ((n - 1) / 2) as i64,
        )?
        .is_some()),
        0 => Ok(is_rho_pentagonal(n / 4)),
        _ => {
            let m = (n - 2) / 4;
            Ok(rho3_predicted_parity(m)? ^ (m.is_multiple_of(2) && a3_odd(m / 2)?))
        }
    }
}

fn characterizations() -> Vec<Claim> {
    let mut v = Vec::new();
    let ch = |id: &str, subject: MockThetaId, statement: String, lhs: Px, rhs: Px| {
        parity(
            id,
            ClaimKind::Characterization,
            Some(subject),
            &statement,
            DepthClass::Parity,
            lhs,
            rhs,
        )
    };
    for id in [
        A2, Psi3, Psi0_5, Psi1_5, BigF0_5, BigF1_5, Sigma6, PhiMinus6, PsiMinus6, T0_8, T1_8, U1_8,
        V1_8,
    ] {
        let cond = numtheory::special_predicates(id).expect("registered predicate");
        let mut statement = format!("c({};n) odd iff {}", id.slug(), cond.describe());
        if !cond.also_odd.is_empty() {
            statement.push_str(&format!(", or n in {:?}", cond.also_odd));
        }
        v.push(ch(
            &format!("char:{}", id.slug()),
            id,
            statement,
            func_par(id),
            special_par(cond),
        ));
    }
    for (id, statement) in [
        (B2, "c(B2;n) odd iff n = 2k^2+2k, k >= 0"),
        (Nu3, "c(nu3;n) odd iff n = (k^2-1)/3, 3 does not divide k"),
        (Rho6, "c(rho6;n) odd iff n = k(k+1)"),
        (V0_8, "c(V0_8;n) odd iff n = 0"),
        (Phi10, "c(phi10;n) odd iff n = 5k^2+2k"),
        (Psi10, "c(psi10;n) odd iff n = 5k^2+4k+1"),
    ] {
        v.push(ch(
            &format!("char:{}", id.slug()),
            id,
            statement.into(),
            func_par(id),
            values_par(id, 1),
        ));
    }
    v.push(ch(
        "char:omega3",
        Omega3,
        "c(omega3;n) odd iff n = 2(k^2-1)/3, 3 does not divide k".into(),
        func_par(Omega3),
        values_par(Omega3, 2),
    ));
    v.push(ch(
        "char:rho3-4n",
        Rho3,
        "c(rho3;4n) odd iff n = 2k(3k+1)".into(),
        func_par(Rho3).dissect(4, 0),
        Px::from_fn(|i| is_rho_pentagonal(i as u64)),
    ));
    let rho = numtheory::special_predicates(Rho3).expect("registered predicate");
    v.push(ch(
        "char:rho3-2n1",
        Rho3,
        format!("c(rho3;2n+1) odd iff {}", rho.describe()),
        func_par(Rho3).dissect(2, 1),
        special_par(rho),
    ));
    for (id, slug, k, r) in [(F0_5, "char:f0_5-2n1", 2, 1), (F1_5, "char:f1_5-2n", 2, 0)] {
        let cond = numtheory::special_predicates(id).expect("registered predicate");
        let what = if r == 1 { "2n+1" } else { "2n" };
        v.push(ch(
            slug,
            id,
            format!("c({};{what}) odd iff {}", id.slug(), cond.describe()),
            func_par(id).dissect(k, r),
            special_par(cond),
        ));
    }
    v
}

fn lambert_lhs(n: i64) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(0); n.max(0) as usize];
    let mut k = 1;
    while k * k < n {
        let mut e = k * k;
        while e < n {
            c[e as usize] += 1;
            e += 2 * k - 1;
        }
        k += 1;
    }
    c
}

fn lambert_rhs(n: i64) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(0); n.max(0) as usize];
    for k in 1..n {
        let mut e = k;
        while e < n {
            c[e as usize] += 1;
            e += 4 * k - 1;
        }
    }
    c
}

fn congruences() -> Vec<Claim> {
    let p = || partitions_par(1);
    let p3 = || partitions_par(3);
    vec![
        modular(
            "R1",
            F3,
            "c(f3;n) = p(n) (mod 4)",
            func(F3),
            aux(AuxSequence::Partitions),
            4,
        ),
        congruence("R2", Phi3, "c(phi3;n) = p(n) (mod 2)", func_par(Phi3), p()),
        modular(
            "R3",
            Mu2,
            "c(mu2;n) = p_{-3}(n) (mod 4)",
            func(Mu2),
            aux(AuxSequence::PartitionsNegK(3)),
            4,
        ),
        congruence(
            "R4",
            Nu3,
            "c(nu3;n) = a3(n) (mod 2)",
            func_par(Nu3),
            a3_par(),
        ),
        congruence(
            "R5-odd",
            Omega3,
            "c(omega3;2n+1) = 0 (mod 2)",
            func_par(Omega3).dissect(2, 1),
            Px::from_fn(|_| false),
        ),
        congruence(
            "R5-even",
            Omega3,
            "c(omega3;2n) = a3(n) (mod 2)",
            func_par(Omega3).dissect(2, 0),
            a3_par(),
        ),
        congruence(
            "R6",
            Rho3,
            "c(rho3;4n+2) + c(rho3;n) = a3(n/2) (mod 2), a3 of a non-integer taken as 0",
            func_par(Rho3).dissect(4, 2) + func_par(Rho3),
            pred_par(|i| Ok(i % 2 == 0 && a3_odd(i as u64 / 2)?)),
        ),
        congruence(
            "R8",
            Rho3,
            "c(rho3;4n+3) = c(sigma6;n+1) (mod 2)",
            func_par(Rho3).dissect(4, 3),
            func_par(Sigma6).shift(-1),
        ),
        from(
            claim(
                "R9-F0",
                ClaimKind::Congruence,
                Some(BigF0_5),
                "c(F0_5;n) = c(psi0_5;2n), n >= 1",
                DepthClass::Modular,
                Check::Exact {
                    lhs: func(BigF0_5),
                    rhs: func(Psi0_5).dissect(2, 0),
                    modulus: 0,
                },
            ),
            1,
        ),
        from(
            claim(
                "R9-F1",
                ClaimKind::Congruence,
                Some(BigF1_5),
                "c(F1_5;n) = c(psi1_5;2n+1)",
                DepthClass::Modular,
                Check::Exact {
                    lhs: func(BigF1_5),
                    rhs: func(Psi1_5).dissect(2, 1),
                    modulus: 0,
                },
            ),
            0,
        ),
        congruence(
            "R10-chi0",
            Chi0_5,
            "c(chi0_5;n) = c(phi0_5;n) (mod 2)",
            func_par(Chi0_5),
            func_par(Phi0_5),
        ),
        congruence(
            "R10-chi1",
            Chi1_5,
            "c(chi1_5;n) = c(phi1_5;n+1) (mod 2)",
            func_par(Chi1_5),
            func_par(Phi1_5).shift(-1),
        ),
        congruence("R11", Phi6, "c(phi6;n) = p(n) (mod 2)", func_par(Phi6), p()),
        congruence(
            "R13-odd",
            Lambda6,
            "c(lambda6;2n-1) = c(psi6;n) (mod 2)",
            func_par(Lambda6).dissect(2, 1).shift(1),
            func_par(Psi6),
        ),
        congruence(
            "R13-even",
            Lambda6,
            "c(lambda6;2n) odd iff n = k(k+1)/2",
            func_par(Lambda6).dissect(2, 0),
            Px::from_fn(|i| is_triangular(i as u64)),
        ),
        congruence(
            "R14",
            Psi3,
            "c(psi3;n) = c(phiminus6;n) (mod 2)",
            func_par(Psi3),
            func_par(PhiMinus6),
        ),
        congruence(
            "R15-even",
            TwoMu6,
            "c(2mu6;2n) = p(n) (mod 2)",
            func_par(TwoMu6).dissect(2, 0),
            p(),
        ),
        congruence(
            "R15-odd",
            TwoMu6,
            "c(2mu6;2n+1) = 0 (mod 2)",
            func_par(TwoMu6).dissect(2, 1),
            Px::from_fn(|_| false),
        ),
        congruence(
            "R16-F0",
            F0_7,
            "c(F0_7;n) = p_{S0}(n) (mod 2)",
            func_par(F0_7),
            Px::of(aux(AuxSequence::order7(0))),
        ),
        congruence(
            "R16-F1",
            F1_7,
            "c(F1_7;n) = p_{S1}(n-1) (mod 2)",
            func_par(F1_7),
            Px::of(aux(AuxSequence::order7(1))).shift(1),
        ),
        congruence(
            "R16-F2",
            F2_7,
            "c(F2_7;n) = p_{S2}(n) (mod 2)",
            func_par(F2_7),
            Px::of(aux(AuxSequence::order7(2))),
        ),
        claim(
            "R17-U0",
            ClaimKind::Congruence,
            Some(U0_8),
            "U0_8(q) = S0_8(q^2) + q S1_8(q^2)",
            DepthClass::Modular,
            Check::Exact {
                lhs: func(U0_8),
                rhs: func(S0_8).subs(2) + func(S1_8).subs(2).shift(1),
                modulus: 0,
            },
        ),
        claim(
            "R17-U1",
            ClaimKind::Congruence,
            Some(U1_8),
            "U1_8(q) = T0_8(q^2) + q T1_8(q^2)",
            DepthClass::Modular,
            Check::Exact {
                lhs: func(U1_8),
                rhs: func(T0_8).subs(2) + func(T1_8).subs(2).shift(1),
                modulus: 0,
            },
        ),
        congruence(
            "R18-U0",
            U0_8,
            "c(U0_8;n) = p_{-3}(n) (mod 2)",
            func_par(U0_8),
            p3(),
        ),
        congruence(
            "R18-S0",
            S0_8,
            "c(S0_8;n) = p_{-3}(2n) (mod 2)",
            func_par(S0_8),
            p3().dissect(2, 0),
        ),
        congruence(
            "R18-S1",
            S1_8,
            "c(S1_8;n) = p_{-3}(2n+1) (mod 2)",
            func_par(S1_8),
            p3().dissect(2, 1),
        ),
        modular(
            "R19",
            V0_8,
            "c(V0_8;n) = 1, 2, 0 (mod 4) for n = 0, n a positive square, otherwise",
            func(V0_8),
            Ex::from_fn(|k| {
                let s = (k as u64).isqrt() as i64;
                BigInt::from(if k == 0 {
                    1
                } else if s * s == k {
                    2
                } else {
                    0
                })
            }),
            4,
        ),
        congruence(
            "R20-X",
            X10,
            "X10 = J_{8,20}/J1^3 (mod 2)",
            func_par(X10),
            theta_par(ThetaProduct::new(vec![TB::j(8, 20, 1), TB::eta(1, -3)])),
        ),
        congruence(
            "R20-chi",
            Chi10,
            "chi10 = q J_{4,20}/J1^3 (mod 2)",
            func_par(Chi10),
            theta_par(ThetaProduct::new(vec![TB::j(4, 20, 1), TB::eta(1, -3)]).with_shift(1)),
        ),
        claim(
            "R21",
            ClaimKind::Congruence,
            None,
            "sum q^{n^2}/(1-q^{2n-1}) = sum q^n/(1-q^{4n-1})",
            DepthClass::Modular,
            Check::Exact {
                lhs: Ex::new(|n| Ok(Series::from_bigints(0, lambert_lhs(n), n))),
                rhs: Ex::new(|n| Ok(Series::from_bigints(0, lambert_rhs(n), n))),
                modulus: 0,
            },
        ),
        from(
            claim(
                "R21-divisor",
                ClaimKind::Congruence,
                None,
                "coefficient of q^n in sum q^{n^2}/(1-q^{2n-1}) is d(4n-1)/2",
                DepthClass::Modular,
                Check::Exact {
                    lhs: Ex::new(|n| Ok(Series::from_bigints(0, lambert_lhs(n), n))),
                    rhs: Ex::new(|n| {
                        let mut c = vec![BigInt::from(0)];
                        for k in 1..n {
                            c.push(BigInt::from(
                                numtheory::divisor_count(4 * k as u64 - 1)? / 2,
                            ));
                        }
                        c.truncate(n.max(0) as usize);
                        Ok(Series::from_bigints(0, c, n))
                    }),
                    modulus: 0,
                },
            ),
            1,
        ),
        congruence(
            "f0-G-mod2",
            F0_5,
            "f0_5(q) = G(q) (mod 2)",
            func_par(F0_5),
            Px::of(aux(AuxSequence::RogersRamanujanG)),
        ),
        congruence(
            "f1-H-mod2",
            F1_5,
            "f1_5(q) = H(q) (mod 2)",
            func_par(F1_5),
            Px::of(aux(AuxSequence::RogersRamanujanH)),
        ),
    ]
}

fn j_identities() -> Vec<Claim> {
    vec![
        exact(
            "jbar-0-1",
            "Jbar_{0,1} = 2 J2^2/J1",
            block(TB::jbar(0, 1, 1)),
            eta(2, 0, &[(2, 2), (1, -1)]),
        ),
        exact(
            "jbar-0-1-vs-1-4",
            "Jbar_{0,1} = 2 Jbar_{1,4}",
            block(TB::jbar(0, 1, 1)),
            block(TB::jbar(1, 4, 1)).scale(2, 1),
        ),
        exact(
            "jbar-1-2",
            "Jbar_{1,2} = J2^5/(J1^2 J4^2)",
            block(TB::jbar(1, 2, 1)),
            q(&[(2, 5), (1, -2), (4, -2)]),
        ),
        exact(
            "j-1-2",
            "J_{1,2} = J1^2/J2",
            block(TB::j(1, 2, 1)),
            q(&[(1, 2), (2, -1)]),
        ),
        exact(
            "jbar-1-3",
            "Jbar_{1,3} = J2 J3^2/(J1 J6)",
            block(TB::jbar(1, 3, 1)),
            q(&[(2, 1), (3, 2), (1, -1), (6, -1)]),
        ),
        exact(
            "j-1-4",
            "J_{1,4} = J1 J4/J2",
            block(TB::j(1, 4, 1)),
            q(&[(1, 1), (4, 1), (2, -1)]),
        ),
        exact(
            "j-1-6",
            "J_{1,6} = J1 J6^2/(J2 J3)",
            block(TB::j(1, 6, 1)),
            q(&[(1, 1), (6, 2), (2, -1), (3, -1)]),
        ),
        exact(
            "jbar-1-6",
            "Jbar_{1,6} = J2^2 J3 J12/(J1 J4 J6)",
            block(TB::jbar(1, 6, 1)),
            q(&[(2, 2), (3, 1), (12, 1), (1, -1), (4, -1), (6, -1)]),
        ),
    ]
}

fn dissection_identities() -> Vec<Claim> {
    vec![
        exact(
            "J1-inv-square-2dissection",
            "1/J1^2 = J8^5/(J2^5 J16^2) + 2q J4^2 J16^2/(J2^5 J8)",
            q(&[(1, -2)]),
            q(&[(8, 5), (2, -5), (16, -2)]) + eta(2, 1, &[(4, 2), (16, 2), (2, -5), (8, -1)]),
        ),
        exact(
            "J1-J3cube-2dissection",
            "J1/J3^3 = J2 J4^2 J12^2/J6^7 - q J2^3 J12^6/(J4^2 J6^9)",
            q(&[(1, 1), (3, -3)]),
            q(&[(2, 1), (4, 2), (12, 2), (6, -7)])
                - eta(1, 1, &[(2, 3), (12, 6), (4, -2), (6, -9)]),
        ),
        exact(
            "J3cube-J1-2dissection",
            "J3^3/J1 = J4^3 J6^2/(J2^2 J12) + q J12^3/J4",
            q(&[(3, 3), (1, -1)]),
            q(&[(4, 3), (6, 2), (2, -2), (12, -1)]) + eta(1, 1, &[(12, 3), (4, -1)]),
        ),
        exact(
            "J3-J1cube-2dissection",
            "J3/J1^3 = J4^6 J6^3/(J2^9 J12^2) + 3q J4^2 J6 J12^2/J2^7",
            q(&[(3, 1), (1, -3)]),
            q(&[(4, 6), (6, 3), (2, -9), (12, -2)])
                + eta(3, 1, &[(4, 2), (6, 1), (12, 2), (2, -7)]),
        ),
        exact(
            "J13-2dissection",
            "J1^2/J3^2 = J2 J4^2 J12^4/(J6^5 J8 J24) - 2q J2^2 J8 J12 J24/(J4 J6^4)",
            q(&[(1, 2), (3, -2)]),
            q(&[(2, 1), (4, 2), (12, 4), (6, -5), (8, -1), (24, -1)])
                - eta(2, 1, &[(2, 2), (8, 1), (12, 1), (24, 1), (4, -1), (6, -4)]),
        ),
        exact(
            "J1J3-2dissection",
            "1/(J1 J3) = J8^2 J12^5/(J2^2 J4 J6^4 J24^2) + q J4^5 J24^2/(J2^4 J6^2 J8^2 J12)",
            q(&[(1, -1), (3, -1)]),
            q(&[(8, 2), (12, 5), (2, -2), (4, -1), (6, -4), (24, -2)])
                + eta(
                    1,
                    1,
                    &[(4, 5), (24, 2), (2, -4), (6, -2), (8, -2), (12, -1)],
                ),
        ),
    ]
}

fn rho_identities() -> Vec<Claim> {
    let rho = || func(Rho3);
    vec![
        exact("rho3-m", "rho3(q) = q^{-1} m(q, q^6, -q)", rho(), lerch_m(1, 1, 6, -1, 1).shift(-1)),
        exact(
            "rho-2n",
            "sum c(rho3;2n) q^n = -q^{-3} m(-q^{-2}, q^12, q^2) - 1/2 q^{-1} J1^2 J4 J6^2 J12^2/(J2^2 J3^2 J24^2)",
            rho().dissect(2, 0),
            -lerch_m(-1, -2, 12, 1, 2).shift(-3) - qr(1, 2, -1, &[(1, 2), (4, 1), (6, 2), (12, 2), (2, -2), (3, -2), (24, -2)]),
        ),
        exact(
            "rho-2n1",
            "sum c(rho3;2n+1) q^n = q^{-1} m(-q^4, q^12, q^2) - J1^2 J4 J6^4 J24^2/(J2^2 J3^2 J12^4)",
            rho().dissect(2, 1),
            lerch_m(-1, 4, 12, 1, 2).shift(-1) - q(&[(1, 2), (4, 1), (6, 4), (24, 2), (2, -2), (3, -2), (12, -4)]),
        ),
        exact("rho-4n", "sum c(rho3;4n) q^n = J4 J6^3/(J3^2 J12)", rho().dissect(4, 0), q(&[(4, 1), (6, 3), (3, -2), (12, -1)])),
        exact(
            "rho-4n1",
            "sum c(rho3;4n+1) q^n = -J2^3 J12/(J1 J3 J4)",
            rho().dissect(4, 1),
            eta(-1, 0, &[(2, 3), (12, 1), (1, -1), (3, -1), (4, -1)]),
        ),
        exact(
            "rho-4n2",
            "sum c(rho3;4n+2) q^n = q^{-1} m(-q, q^6, q) + J2^6 J12^3/(J1^2 J4^3 J6^3)",
            rho().dissect(4, 2),
            lerch_m(-1, 1, 6, 1, 1).shift(-1) + q(&[(2, 6), (12, 3), (1, -2), (4, -3), (6, -3)]),
        ),
        exact(
            "rho-4n3",
            "sum c(rho3;4n+3) q^n = q^{-1} m(-q^2, q^6, q) + 2 J4 J12^3/J6^3",
            rho().dissect(4, 3),
            lerch_m(-1, 2, 6, 1, 1).shift(-1) + eta(2, 0, &[(4, 1), (12, 3), (6, -3)]),
        ),
        exact(
            "add-rho4n2",
            "sum c(rho3;4n+2) q^n = q^{-1} m(-q, q^6, q^5) - 1/2 q^{-1} J2^3 J6^6/(J1 J3^3 J4 J12^3)",
            rho().dissect(4, 2),
            lerch_m(-1, 1, 6, 1, 5).shift(-1) - qr(1, 2, -1, &[(2, 3), (6, 6), (1, -1), (3, -3), (4, -1), (12, -3)]),
        ),
        exact(
            "add-rho-4n2-m",
            "m(-q, q^6, q^5) - m(-q, q^6, q) = 1/2 J2^6 J3^3/(J1^3 J4^2 J6^3)",
            lerch_m(-1, 1, 6, 1, 5) - lerch_m(-1, 1, 6, 1, 1),
            qr(1, 2, 0, &[(2, 6), (3, 3), (1, -3), (4, -2), (6, -3)]),
        ),
        exact(
            "rho3-add",
            "sum (c(rho3;4n+2) + (-1)^n c(rho3;n)) q^n = J2^6 J12^3/(J1^2 J4^3 J6^3)",
            rho().dissect(4, 2) + rho().negq(),
            q(&[(2, 6), (12, 3), (1, -2), (4, -3), (6, -3)]),
        ),
        exact(
            "rho-add-middle",
            "sum (c(rho3;8n+2) + c(rho3;2n)) q^n = J1 J4^5 J6^3/(J2^3 J3^3 J8^2)",
            rho().dissect(8, 2) + rho().dissect(2, 0),
            q(&[(1, 1), (4, 5), (6, 3), (2, -3), (3, -3), (8, -2)]),
        ),
        exact(
            "rho-add-last",
            "sum (c(rho3;16n+2) + c(rho3;4n)) q^n = J2^7 J6^2/(J1^2 J3^4 J4^2)",
            rho().dissect(16, 2) + rho().dissect(4, 0),
            q(&[(2, 7), (6, 2), (1, -2), (3, -4), (4, -2)]),
        ),
        exact(
            "rho-last",
            "J2^7 J3/(J1^3 J4^2) - J4 J6 J3^3/(J1 J12) = 2q J6 J12^2",
            q(&[(2, 7), (3, 1), (1, -3), (4, -2)]) - q(&[(4, 1), (6, 1), (3, 3), (1, -1), (12, -1)]),
            eta(2, 1, &[(6, 1), (12, 2)]),
        ),
        exact(
            "rho3-16n2",
            "sum c(rho3;16n+2) q^n = 2q J1 J6^3 J12^2/J3^5",
            rho().dissect(16, 2),
            eta(2, 1, &[(1, 1), (6, 3), (12, 2), (3, -5)]),
        ),
        exact("sigma6-m", "sigma6(q) = -m(q^2, q^6, q)", func(Sigma6), -lerch_m(1, 2, 6, 1, 1)),
    ]
}

fn liu_alternating() -> Ex {
    let spec = EulerianSpec::new(
        0,
        Step::monomial(1, 0),
        Step::new(-1, (2, -1), Vec::new(), vec![Binomial::minus(2, -1)]),
        Growth::Quadratic,
    );
    Ex::new(move |n| Ok(eulerian_sum(&spec, n)?))
}

fn other_identities() -> Vec<Claim> {
    let rr = |s: AuxSequence| aux(s);
    vec![
        exact(
            "6-lambda-psi-id-1",
            "sum c(lambda6;2n) q^n = J2^3 J3^2/(J1^3 J6)",
            func(Lambda6).dissect(2, 0),
            q(&[(2, 3), (3, 2), (1, -3), (6, -1)]),
        ),
        exact(
            "6-lambda-psi-id-2",
            "sum_{n>=1} (2c(psi6;n) - c(lambda6;2n-1)) q^n = 3q J6^3/(J1 J2)",
            func(Psi6).scale(2, 1) - func(Lambda6).dissect(2, 1).shift(1),
            eta(3, 1, &[(6, 3), (1, -1), (2, -1)]),
        ),
        exact(
            "6-psi-lambda-Rama-id",
            "2q^{-1} psi6(q^2) + lambda6(-q) = J2^6 J3 J12/(J1^3 J4^3 J6)",
            func(Psi6).subs(2).shift(-1).scale(2, 1) + func(Lambda6).negq(),
            q(&[(2, 6), (3, 1), (12, 1), (1, -3), (4, -3), (6, -1)]),
        ),
        exact(
            "6-phi-mu",
            "2 phi6(q^2) - 2 mu6(-q) = J2^4 J6^5/(J1^2 J3^2 J4^2 J12^2)",
            func(Phi6).subs(2).scale(2, 1) - func(TwoMu6).negq(),
            q(&[(2, 4), (6, 5), (1, -2), (3, -2), (4, -2), (12, -2)]),
        ),
        exact(
            "6-mu-2n1",
            "sum c(2mu6;2n+1) q^n = 2 J2^2 J6^2/(J1^2 J3)",
            func(TwoMu6).dissect(2, 1),
            eta(2, 0, &[(2, 2), (6, 2), (1, -2), (3, -1)]),
        ),
        exact(
            "psi0-F0",
            "psi0_5(q) - F0_5(q^2) + 1 = q psi(q^2) H(q^4)",
            func(Psi0_5) - func(BigF0_5).subs(2) + Ex::constant(1),
            (rr(AuxSequence::PsiTheta).subs(2) * rr(AuxSequence::RogersRamanujanH).subs(4))
                .shift(1),
        ),
        exact(
            "psi1-F1",
            "psi1_5(q) - q F1_5(q^2) = psi(q^2) G(q^4)",
            func(Psi1_5) - func(BigF1_5).subs(2).shift(1),
            rr(AuxSequence::PsiTheta).subs(2) * rr(AuxSequence::RogersRamanujanG).subs(4),
        ),
        exact(
            "chi0-F0-phi0",
            "chi0_5(q) = 2 F0_5(q) - phi0_5(-q)",
            func(Chi0_5),
            func(BigF0_5).scale(2, 1) - func(Phi0_5).negq(),
        ),
        exact(
            "chi1-F1-phi1",
            "chi1_5(q) = 2 F1_5(q) + q^{-1} phi1_5(-q)",
            func(Chi1_5),
            func(BigF1_5).scale(2, 1) + func(Phi1_5).negq().shift(-1),
        ),
        exact(
            "liu-hecke",
            "sum (-1)^n q^{n^2}/(q;q^2)_n equals the Hecke-type double sum",
            liu_alternating(),
            Ex::new(|n| {
                Ok(catalog::expand_label(
                    Psi3,
                    "hecke-alternating-mod2",
                    n.max(0) as usize,
                )?)
            }) + Ex::constant(1),
        ),
        parity(
            "psi6-product-mod2",
            ClaimKind::Identity,
            Some(Psi6),
            "psi6 = q J3^6/J1^3 (mod 2)",
            DepthClass::Modular,
            func_par(Psi6),
            theta_par(ThetaProduct::eta_quotient(&[(3, 6), (1, -3)]).with_shift(1)),
        ),
        parity(
            "F0_7-product-mod2",
            ClaimKind::Identity,
            Some(F0_7),
            "F0_7 = J_{6,14}/J1 (mod 2)",
            DepthClass::Modular,
            func_par(F0_7),
            theta_par(ThetaProduct::new(vec![TB::j(6, 14, 1), TB::eta(1, -1)])),
        ),
        parity(
            "F1_7-product-mod2",
            ClaimKind::Identity,
            Some(F1_7),
            "F1_7 = q J_{2,14}/J1 (mod 2)",
            DepthClass::Modular,
            func_par(F1_7),
            theta_par(ThetaProduct::new(vec![TB::j(2, 14, 1), TB::eta(1, -1)]).with_shift(1)),
        ),
        parity(
            "F2_7-product-mod2",
            ClaimKind::Identity,
            Some(F2_7),
            "F2_7 = J_{4,14}/J1 (mod 2)",
            DepthClass::Modular,
            func_par(F2_7),
            theta_par(ThetaProduct::new(vec![TB::j(4, 14, 1), TB::eta(1, -1)])),
        ),
    ]
}

/// Every non-primary registered form against the defining series.
fn representations() -> Vec<Claim> {
    let mut v = Vec::new();
    for e in catalog::registry() {
        let id = e.id;
        for (i, rep) in e.representations.iter().enumerate().skip(1) {
            let label = rep.label;
            let cid = format!("repr:{}:{label}", id.slug());
            let rep_ex = Ex::new(move |n| {
                Ok(catalog::entry(id).representations[i].expand(n.max(0) as usize)?)
            });
            match rep.modulus {
                None => v.push(claim(
                    cid,
                    ClaimKind::Identity,
                    Some(id),
                    format!("{} {} form equals its Eulerian series", id.slug(), label),
                    DepthClass::Identity,
                    Check::Exact {
                        lhs: func(id),
                        rhs: rep_ex,
                        modulus: 0,
                    },
                )),
                Some(2) => v.push(parity(
                    &cid,
                    ClaimKind::Congruence,
                    Some(id),
                    &format!("{} {} form agrees mod 2", id.slug(), label),
                    DepthClass::Modular,
                    func_par(id),
                    Px::new(move |n| Ok(catalog::entry(id).representations[i].parity(n)?)),
                )),
                Some(m) => v.push(modular(
                    &cid,
                    id,
                    &format!("{} {} form agrees mod {m}", id.slug(), label),
                    func(id),
                    rep_ex,
                    m,
                )),
            }
        }
    }
    v
}

fn counts() -> Vec<Claim> {
    [B2, Nu3, Omega3, Rho6, V0_8, Phi10, Psi10]
        .into_iter()
        .map(|id| {
            let what = if id == Omega3 {
                "c(omega3;2n)"
            } else {
                "coefficients"
            };
            claim(
                format!("count:{}", id.slug()),
                ClaimKind::CountFormula,
                Some(id),
                format!(
                    "number of odd {what} of {} up to N matches the closed count",
                    id.slug()
                ),
                DepthClass::Parity,
                Check::Count { id },
            )
        })
        .collect()
}

/// `s_k` of the progressions `2^k n + s_k`.
fn s_k(k: u32) -> u64 {
    let h = k / 2;
    ((1u64 << (2 * h + 1)) - 2) / 3
}

fn rho3_almost_even(n: usize) -> Result<Outcome, VerifyError> {
    let bits = func_par(Rho3).eval(n)?;
    for i in 0..n {
        let want = rho3_predicted_parity(i as u64)?;
        if bits.get(i) != want {
            return Ok(Outcome {
                compared: i + 1,
                mismatch: Some(Mismatch {
                    index: i as i64,
                    lhs: u8::from(bits.get(i)).to_string(),
                    rhs: u8::from(want).to_string(),
                }),
                note: Some(
                    "parity differs from the partial characterizations and recurrence".into(),
                ),
            });
        }
    }
    let total = bits.count_ones();
    let mut notes = vec![format!("odd below {n}: {total}")];
    let mut last = f64::INFINITY;
    for k in 1..=4u32 {
        let (step, s) = (1usize << k, s_k(k) as usize);
        let inside = (s..n).step_by(step).filter(|&i| bits.get(i)).count();
        let members = if s < n { (n - s).div_ceil(step) } else { 0 };
        let bound = 1.0 / step as f64 + 1.0 / n.max(1) as f64;
        let frac = members as f64 / n.max(1) as f64;
        notes.push(format!("k={k}: s_k={s}, progression share {frac:.5} <= {bound:.5}, odd inside {inside}, odd outside {}", total - inside));
        if frac > bound || bound >= last {
            return Ok(Outcome {
                compared: n,
                mismatch: Some(Mismatch {
                    index: k as i64,
                    lhs: format!("{frac:.6}"),
                    rhs: format!("{bound:.6}"),
                }),
                note: Some(notes.join("; ")),
            });
        }
        last = bound;
    }
    Ok(Outcome {
        compared: n,
        mismatch: None,
        note: Some(notes.join("; ")),
    })
}

fn custom() -> Vec<Claim> {
    vec![claim(
        "rho3-almost-even",
        ClaimKind::Characterization,
        None,
        "odd c(rho3;n) outside 2^k n + s_k are exactly those given by the partial characterizations, k <= 4",
        DepthClass::Parity,
        Check::Custom(Arc::new(rho3_almost_even)),
    )]
}

/// The full registry.
pub fn claims() -> Vec<Claim> {
    let mut v = characterizations();
    v.extend(congruences());
    v.extend(j_identities());
    v.extend(dissection_identities());
    v.extend(rho_identities());
    v.extend(other_identities());
    v.extend(representations());
    v.extend(counts());
    v.extend(custom());
    v
}
