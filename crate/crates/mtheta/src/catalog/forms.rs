use super::id::MockThetaId::{self, *};
use crate::qseries::lerch::appell_lerch_spec;
use crate::qseries::{
    HeckeComponent as C, HeckeSpec, JRange, LerchRange, LerchSpec, QMonomial, QuadForm as Q,
    ThetaBlock as TB, ThetaProduct,
};

fn eta(parts: &[(i64, i64)]) -> ThetaProduct {
    ThetaProduct::eta_quotient(parts)
}

/// `J_2 / J_1^2 = (-q;q)_∞ / (q;q)_∞`
fn minus_q_over_j1() -> ThetaProduct {
    eta(&[(2, 1), (1, -2)])
}

/// The standard two-component shape
/// `Σ_{|j|≤n} q^{Q1}(1 - q^{m1}) + k Σ_{0≤j≤n} q^{Q2}(1 - q^{m2})`.
fn two_part(q1: Q, m1: (i64, i64), k: i64, q2: Q, m2: (i64, i64)) -> Vec<C> {
    vec![
        C::new(q1, JRange::SYMMETRIC).one_minus(m1.0, 0, m1.1),
        C::new(q2, JRange::HALF).coef(k).one_minus(m2.0, 0, m2.1),
    ]
}

/// Hecke-type double-sum forms as `(label, spec, modulus)`; `modulus` is
/// `Some(2)` for forms that match the function only mod 2.
pub(crate) fn hecke_forms(id: MockThetaId) -> Vec<(&'static str, HeckeSpec, Option<u32>)> {
    let j1inv = || eta(&[(1, -1)]);
    match id {
        A2 => vec![(
            "hecke",
            HeckeSpec::new(
                minus_q_over_j1().with_shift(1),
                vec![C::new(Q::new(2, 0, -1, 3, -1, 0, 1), JRange::HALF)
                    .sign(1, 0)
                    .one_minus(2, 0, 2)],
            ),
            None,
        )],
        B2 => vec![(
            "hecke",
            HeckeSpec::new(
                minus_q_over_j1(),
                vec![C::new(Q::new(2, 0, -1, 2, 0, 0, 1), JRange::SYMMETRIC).sign(1, 0)],
            ),
            None,
        )],
        Psi3 => vec![(
            "hecke-alternating-mod2",
            HeckeSpec::new(
                ThetaProduct::unit(),
                vec![
                    C::new(Q::new(3, 0, -2, 1, -1, 0, 1), JRange::SYMMETRIC)
                        .sign(1, 0)
                        .one_minus(4, 0, 2),
                    C::new(Q::new(0, 0, 0, 0, 0, 0, 1), JRange::SYMMETRIC)
                        .n_max(0)
                        .coef(-1),
                ],
            ),
            Some(2),
        )],
        F0_5 => vec![(
            "hecke",
            HeckeSpec::new(
                j1inv(),
                vec![C::new(Q::new(5, 0, -2, 1, 0, 0, 2), JRange::SYMMETRIC)
                    .sign(0, 1)
                    .one_minus(4, 0, 2)],
            ),
            None,
        )],
        Psi0_5 => vec![(
            "hecke",
            HeckeSpec::new(
                minus_q_over_j1().with_coef(-1, 1),
                vec![C::new(
                    Q::new(5, 0, -3, -1, -1, 0, 2),
                    JRange::new((-1, 0), (1, -1)),
                )
                .sign(0, 1)
                .n_min(1)
                .one_minus(1, 0, 0)],
            ),
            None,
        )],
        Psi1_5 => vec![(
            "hecke",
            HeckeSpec::new(
                minus_q_over_j1(),
                vec![C::new(Q::new(5, 0, -3, 3, -1, 0, 2), JRange::SYMMETRIC)
                    .sign(0, 1)
                    .one_minus(2, 0, 1)],
            ),
            None,
        )],
        Psi6 => vec![(
            "hecke",
            HeckeSpec::new(
                eta(&[(1, 1), (2, -2)]).with_shift(1),
                vec![C::new(Q::new(3, 0, -1, 3, 0, 0, 1), JRange::SYMMETRIC).sign(1, 1)],
            ),
            None,
        )],
        Rho6 => vec![(
            "hecke",
            HeckeSpec::new(
                minus_q_over_j1(),
                vec![C::new(Q::new(3, 0, -1, 3, -1, 0, 2), JRange::SYMMETRIC).sign(1, 0)],
            ),
            None,
        )],
        Sigma6 => vec![(
            "hecke",
            HeckeSpec::new(
                minus_q_over_j1().with_shift(1),
                vec![C::new(Q::new(3, 0, -1, 5, -1, 0, 2), JRange::HALF)
                    .sign(1, 0)
                    .one_minus(1, 0, 1)],
            ),
            None,
        )],
        PhiMinus6 => vec![(
            "hecke",
            HeckeSpec::new(
                minus_q_over_j1(),
                vec![C::new(Q::new(3, 0, -2, 5, -3, 1, 1), JRange::HALF)
                    .sign(1, 0)
                    .terms(vec![
                        (1, 0, 0, 0),
                        (1, 0, 2, 1),
                        (-1, 2, 0, 2),
                        (-1, 2, 2, 3),
                    ])],
            ),
            None,
        )],
        PsiMinus6 => vec![(
            "hecke",
            HeckeSpec::new(
                minus_q_over_j1().with_shift(1),
                vec![C::new(Q::new(3, 0, -2, 3, -1, 0, 1), JRange::SYMMETRIC).sign(1, 0)],
            ),
            None,
        )],
        F0_7 => vec![
            (
                "hecke",
                HeckeSpec::new(
                    j1inv(),
                    two_part(
                        Q::new(7, 0, -1, 1, 0, 0, 1),
                        (12, 6),
                        -2,
                        Q::new(7, 0, -1, 8, -1, 2, 1),
                        (12, 12),
                    ),
                ),
                None,
            ),
            (
                "hecke-printed",
                HeckeSpec::new(
                    j1inv(),
                    two_part(
                        Q::new(7, 0, -1, 1, 0, 0, 1),
                        (12, 6),
                        -2,
                        Q::new(7, 0, -1, 8, -1, 1, 1),
                        (12, 13),
                    ),
                ),
                Some(2),
            ),
        ],
        F1_7 => vec![(
            "hecke",
            HeckeSpec::new(
                j1inv(),
                two_part(
                    Q::new(7, 0, -1, 5, 0, 1, 1),
                    (4, 2),
                    -2,
                    Q::new(7, 0, -1, 12, -1, 5, 1),
                    (4, 4),
                ),
            ),
            None,
        )],
        F2_7 => vec![(
            "hecke",
            HeckeSpec::new(
                j1inv(),
                two_part(
                    Q::new(7, 0, -1, 3, 0, 0, 1),
                    (8, 4),
                    -2,
                    Q::new(7, 0, -1, 10, -1, 3, 1),
                    (8, 8),
                ),
            ),
            None,
        )],
        T0_8 => vec![(
            "hecke",
            HeckeSpec::new(
                eta(&[(4, 1), (2, -2)]).with_shift(2),
                vec![
                    C::new(Q::new(4, 0, -2, 7, -3, 0, 1), JRange::new((-1, -1), (1, 0)))
                        .sign(0, 1)
                        .one_minus(2, 0, 2),
                ],
            ),
            None,
        )],
        T1_8 => vec![(
            "hecke",
            HeckeSpec::new(
                eta(&[(4, 1), (2, -2)]),
                vec![C::new(Q::new(4, 0, -2, 3, -1, 0, 1), JRange::SYMMETRIC)
                    .sign(0, 1)
                    .one_minus(2, 0, 1)],
            ),
            None,
        )],
        Phi10 => vec![(
            "hecke",
            HeckeSpec::new(
                minus_q_over_j1(),
                two_part(
                    Q::new(5, 0, -1, 2, 0, 0, 1),
                    (6, 3),
                    -2,
                    Q::new(5, 0, -1, 7, -1, 2, 1),
                    (6, 6),
                ),
            ),
            None,
        )],
        Psi10 => vec![(
            "hecke",
            HeckeSpec::new(
                minus_q_over_j1(),
                two_part(
                    Q::new(5, 0, -1, 4, 0, 1, 1),
                    (2, 1),
                    -2,
                    Q::new(5, 0, -1, 9, -1, 4, 1),
                    (2, 2),
                ),
            ),
            None,
        )],
        X10 => vec![(
            "hecke",
            HeckeSpec::new(
                eta(&[(1, 1), (2, -2)]),
                two_part(
                    Q::new(10, 0, -2, 2, 0, 0, 1),
                    (16, 8),
                    2,
                    Q::new(10, 0, -2, 12, -2, 3, 1),
                    (16, 16),
                ),
            ),
            None,
        )],
        Chi10 => vec![(
            "hecke",
            HeckeSpec::new(
                eta(&[(1, 1), (2, -2)]),
                two_part(
                    Q::new(10, 0, -2, 6, 0, 1, 1),
                    (8, 4),
                    2,
                    Q::new(10, 0, -2, 16, -2, 6, 1),
                    (8, 8),
                ),
            ),
            None,
        )],
        _ => Vec::new(),
    }
}

fn lerch(
    prefactor: ThetaProduct,
    range: LerchRange,
    sign: i64,
    quad: (i64, i64, i64, i64),
    numer: Vec<(i64, i64, i64)>,
    denom: (i64, i64, i64),
) -> LerchSpec {
    LerchSpec {
        prefactor,
        range,
        sign,
        quad,
        numer,
        denom,
    }
}

/// Appell-Lerch and Lerch-type single-sum forms.
pub(crate) fn lerch_forms(id: MockThetaId) -> Vec<(&'static str, LerchSpec)> {
    use LerchRange::*;
    match id {
        Mu2 => vec![(
            "lerch",
            lerch(
                eta(&[(1, 1), (2, -2)]).with_coef(2, 1),
                Bilateral,
                0,
                (2, 1, 0, 1),
                vec![(1, 0, 0)],
                (-1, 2, 0),
            ),
        )],
        F3 => vec![(
            "lerch",
            lerch(
                eta(&[(1, -1)]).with_coef(2, 1),
                Bilateral,
                1,
                (3, 1, 0, 2),
                vec![(1, 0, 0)],
                (-1, 1, 0),
            ),
        )],
        Phi3 => vec![(
            "lerch",
            lerch(
                eta(&[(1, -1)]),
                Bilateral,
                1,
                (3, 1, 0, 2),
                vec![(1, 0, 0), (1, 1, 0)],
                (-1, 2, 0),
            ),
        )],
        Omega3 => vec![(
            "lerch",
            lerch(
                eta(&[(2, -1)]),
                From(0),
                1,
                (3, 3, 0, 1),
                vec![(1, 0, 0), (1, 2, 1)],
                (1, 2, 1),
            ),
        )],
        Nu3 => vec![(
            "lerch",
            lerch(
                eta(&[(1, -1)]),
                From(0),
                1,
                (3, 3, 0, 2),
                vec![(1, 0, 0), (-1, 2, 1)],
                (-1, 2, 1),
            ),
        )],
        Rho3 => {
            let mut s =
                appell_lerch_spec(QMonomial::new(1, 1), 6, QMonomial::new(-1, 1)).expect("valid m");
            s.prefactor = s.prefactor.with_shift(-1);
            vec![("appell-lerch", s)]
        }
        Sigma6 => {
            let mut s =
                appell_lerch_spec(QMonomial::new(1, 2), 6, QMonomial::new(1, 1)).expect("valid m");
            s.prefactor = s.prefactor.with_coef(-1, 1);
            vec![("appell-lerch", s)]
        }
        U0_8 => vec![(
            "lerch",
            lerch(
                eta(&[(2, 1), (1, -1), (4, -1)]),
                Bilateral,
                1,
                (2, 1, 0, 1),
                vec![(1, 0, 0), (1, 2, 0)],
                (-1, 4, 0),
            ),
        )],
        _ => Vec::new(),
    }
}

/// Theta-product congruences as `(label, product, modulus)`.
pub(crate) fn product_forms(id: MockThetaId) -> Vec<(&'static str, ThetaProduct, u32)> {
    let p = ThetaProduct::new;
    let v: Vec<(ThetaProduct, u32)> = match id {
        Mu2 => vec![(eta(&[(1, -3)]), 4)],
        F3 => vec![(eta(&[(1, -1)]), 4)],
        V0_8 => vec![(p(vec![TB::jbar(1, 2, 1)]), 4)],
        B2 => vec![(eta(&[(8, 2), (4, -1)]), 2)],
        Phi3 | Phi6 => vec![(eta(&[(1, -1)]), 2)],
        Nu3 => vec![(eta(&[(3, 3), (1, -1)]), 2)],
        Omega3 => vec![(eta(&[(6, 3), (2, -1)]), 2)],
        Psi6 => vec![(eta(&[(3, 6), (1, -3)]).with_shift(1), 2)],
        Rho6 => vec![(eta(&[(4, 2), (2, -1)]), 2)],
        TwoMu6 => vec![(eta(&[(2, -1)]), 2)],
        F0_7 => vec![(p(vec![TB::j(6, 14, 1), TB::eta(1, -1)]), 2)],
        F1_7 => vec![(p(vec![TB::j(2, 14, 1), TB::eta(1, -1)]).with_shift(1), 2)],
        F2_7 => vec![(p(vec![TB::j(4, 14, 1), TB::eta(1, -1)]), 2)],
        U0_8 => vec![(eta(&[(1, -3)]), 2)],
        Phi10 => vec![(p(vec![TB::jbar(7, 10, 1)]), 2)],
        Psi10 => vec![(p(vec![TB::jbar(9, 10, 1)]).with_shift(1), 2)],
        X10 => vec![(p(vec![TB::j(8, 20, 1), TB::eta(1, -3)]), 2)],
        Chi10 => vec![(p(vec![TB::j(4, 20, 1), TB::eta(1, -3)]).with_shift(1), 2)],
        _ => Vec::new(),
    };
    v.into_iter().map(|(t, m)| ("product", t, m)).collect()
}
