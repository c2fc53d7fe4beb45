use super::id::MockThetaId::{self, *};
use crate::qseries::{Binomial as B, EulerianSpec, Growth, Step};

fn quad(start: i64, first: Step, ratio: Step) -> EulerianSpec {
    EulerianSpec::new(start, first, ratio, Growth::Quadratic)
}

fn linear(start: i64, first: Step, ratio: Step) -> EulerianSpec {
    EulerianSpec::new(start, first, ratio, Growth::Linear)
}

fn one() -> Step {
    Step::monomial(1, 0)
}

fn st(sign: i64, shift: (i64, i64), num: &[B], den: &[B]) -> Step {
    Step::new(sign, shift, num.to_vec(), den.to_vec())
}

/// Constant first term `q^s * prod num / prod den`.
fn first(s: i64, num: &[B], den: &[B]) -> Step {
    st(1, (0, s), num, den)
}

/// Eulerian term recurrences, primary form first.
pub(crate) fn eulerian_forms(id: MockThetaId) -> Vec<(&'static str, EulerianSpec)> {
    let p = B::plus;
    let m = B::minus;
    match id {
        A2 => vec![
            (
                "eulerian",
                quad(
                    0,
                    first(1, &[], &[m(0, 1), m(0, 1)]),
                    st(1, (2, 1), &[p(2, -1)], &[m(2, 1), m(2, 1)]),
                ),
            ),
            (
                "eulerian-linear",
                linear(
                    0,
                    first(1, &[], &[m(0, 1)]),
                    st(1, (0, 1), &[p(2, 0)], &[m(2, 1)]),
                ),
            ),
        ],
        B2 => vec![
            (
                "eulerian",
                quad(
                    0,
                    first(0, &[], &[m(0, 1), m(0, 1)]),
                    st(1, (2, 0), &[p(2, 0)], &[m(2, 1), m(2, 1)]),
                ),
            ),
            (
                "eulerian-linear",
                linear(
                    0,
                    first(0, &[], &[m(0, 1)]),
                    st(1, (0, 1), &[p(2, -1)], &[m(2, 1)]),
                ),
            ),
        ],
        Mu2 => vec![(
            "eulerian",
            quad(0, one(), st(-1, (2, -1), &[m(2, -1)], &[p(2, 0), p(2, 0)])),
        )],
        F3 => vec![(
            "eulerian",
            quad(0, one(), st(1, (2, -1), &[], &[p(1, 0), p(1, 0)])),
        )],
        Phi3 => vec![("eulerian", quad(0, one(), st(1, (2, -1), &[], &[p(2, 0)])))],
        Psi3 => vec![(
            "eulerian",
            quad(
                1,
                first(1, &[], &[m(0, 1)]),
                st(1, (2, -1), &[], &[m(2, -1)]),
            ),
        )],
        Chi3 => vec![(
            "eulerian",
            quad(0, one(), st(1, (2, -1), &[p(1, 0)], &[p(3, 0)])),
        )],
        Omega3 => vec![(
            "eulerian",
            quad(
                0,
                first(0, &[], &[m(0, 1), m(0, 1)]),
                st(1, (4, 0), &[], &[m(2, 1), m(2, 1)]),
            ),
        )],
        Nu3 => vec![(
            "eulerian",
            quad(0, first(0, &[], &[p(0, 1)]), st(1, (2, 0), &[], &[p(2, 1)])),
        )],
        Rho3 => vec![(
            "eulerian",
            quad(
                0,
                first(0, &[m(0, 1)], &[m(0, 3)]),
                st(1, (4, 0), &[m(2, 1)], &[m(6, 3)]),
            ),
        )],
        F0_5 => vec![("eulerian", quad(0, one(), st(1, (2, -1), &[], &[p(1, 0)])))],
        F1_5 => vec![("eulerian", quad(0, one(), st(1, (2, 0), &[], &[p(1, 0)])))],
        BigF0_5 => vec![("eulerian", quad(0, one(), st(1, (4, -2), &[], &[m(2, -1)])))],
        BigF1_5 => vec![(
            "eulerian",
            quad(0, first(0, &[], &[m(0, 1)]), st(1, (4, 0), &[], &[m(2, 1)])),
        )],
        Phi0_5 => vec![("eulerian", quad(0, one(), st(1, (2, -1), &[p(2, -1)], &[])))],
        Phi1_5 => vec![(
            "eulerian",
            quad(0, first(1, &[], &[]), st(1, (2, 1), &[p(2, -1)], &[])),
        )],
        Psi0_5 => vec![(
            "eulerian",
            quad(0, first(1, &[], &[]), st(1, (1, 1), &[p(1, 0)], &[])),
        )],
        Psi1_5 => vec![("eulerian", quad(0, one(), st(1, (1, 0), &[p(1, 0)], &[])))],
        Chi0_5 => vec![(
            "eulerian",
            linear(0, one(), st(1, (0, 1), &[m(1, 0)], &[m(2, -1), m(2, 0)])),
        )],
        Chi1_5 => vec![(
            "eulerian",
            linear(
                0,
                first(0, &[], &[m(0, 1)]),
                st(1, (0, 1), &[m(1, 0)], &[m(2, 0), m(2, 1)]),
            ),
        )],
        Phi6 => vec![(
            "eulerian",
            quad(0, one(), st(-1, (2, -1), &[m(2, -1)], &[p(2, -1), p(2, 0)])),
        )],
        Psi6 => vec![(
            "eulerian",
            quad(
                0,
                first(1, &[], &[p(0, 1)]),
                st(-1, (2, 1), &[m(2, -1)], &[p(2, 0), p(2, 1)]),
            ),
        )],
        Rho6 => vec![(
            "eulerian",
            quad(
                0,
                first(0, &[], &[m(0, 1)]),
                st(1, (1, 0), &[p(1, 0)], &[m(2, 1)]),
            ),
        )],
        Sigma6 => vec![(
            "eulerian",
            quad(
                0,
                first(1, &[], &[m(0, 1)]),
                st(1, (1, 1), &[p(1, 0)], &[m(2, 1)]),
            ),
        )],
        Lambda6 => vec![(
            "eulerian",
            linear(0, one(), st(-1, (0, 1), &[m(2, -1)], &[p(1, 0)])),
        )],
        TwoMu6 => vec![(
            "eulerian",
            linear(
                0,
                first(1, &[], &[p(0, 1)]),
                st(-1, (0, 1), &[m(2, -1)], &[p(1, 1)]),
            )
            .with_multiplier(vec![p(1, 0)])
            .with_affine(1, 1),
        )],
        Gamma6 => vec![(
            "eulerian",
            quad(0, one(), st(1, (2, -1), &[m(1, 0)], &[m(3, 0)])),
        )],
        PhiMinus6 => vec![(
            "eulerian",
            linear(
                1,
                first(1, &[p(0, 1)], &[m(0, 1)]),
                st(1, (0, 1), &[p(2, -2), p(2, -1)], &[m(2, -1)]),
            ),
        )],
        PsiMinus6 => vec![(
            "eulerian",
            linear(
                1,
                first(1, &[], &[m(0, 1)]),
                st(1, (0, 1), &[p(2, -3), p(2, -2)], &[m(2, -1)]),
            ),
        )],
        F0_7 => vec![(
            "eulerian",
            quad(0, one(), st(1, (2, -1), &[m(1, 0)], &[m(2, -1), m(2, 0)])),
        )],
        F1_7 => vec![(
            "eulerian",
            quad(
                1,
                first(1, &[], &[m(0, 1)]),
                st(1, (2, -1), &[m(1, -1)], &[m(2, -2), m(2, -1)]),
            ),
        )],
        F2_7 => vec![(
            "eulerian",
            quad(
                0,
                first(0, &[], &[m(0, 1)]),
                st(1, (2, 0), &[m(1, 0)], &[m(2, 0), m(2, 1)]),
            ),
        )],
        S0_8 => vec![(
            "eulerian",
            quad(0, one(), st(1, (2, -1), &[p(2, -1)], &[p(2, 0)])),
        )],
        S1_8 => vec![(
            "eulerian",
            quad(0, one(), st(1, (2, 1), &[p(2, -1)], &[p(2, 0)])),
        )],
        T0_8 => vec![(
            "eulerian",
            quad(
                0,
                first(2, &[], &[p(0, 1)]),
                st(1, (2, 2), &[p(2, 0)], &[p(2, 1)]),
            ),
        )],
        T1_8 => vec![(
            "eulerian",
            quad(
                0,
                first(0, &[], &[p(0, 1)]),
                st(1, (2, 0), &[p(2, 0)], &[p(2, 1)]),
            ),
        )],
        U0_8 => vec![(
            "eulerian",
            quad(0, one(), st(1, (2, -1), &[p(2, -1)], &[p(4, 0)])),
        )],
        U1_8 => vec![(
            "eulerian",
            quad(
                0,
                first(1, &[], &[p(0, 2)]),
                st(1, (2, 1), &[p(2, -1)], &[p(4, 2)]),
            ),
        )],
        V0_8 => vec![
            (
                "eulerian",
                quad(0, one(), st(1, (2, -1), &[p(2, -1)], &[m(2, -1)])).with_affine(2, -1),
            ),
            (
                "eulerian-q2",
                quad(
                    0,
                    first(0, &[], &[m(0, 1)]),
                    st(1, (4, -2), &[p(4, -2)], &[m(4, -1), m(4, 1)]),
                )
                .with_affine(2, -1),
            ),
        ],
        V1_8 => vec![
            (
                "eulerian",
                quad(
                    0,
                    first(1, &[], &[m(0, 1)]),
                    st(1, (2, 1), &[p(2, -1)], &[m(2, 1)]),
                ),
            ),
            (
                "eulerian-q2",
                quad(
                    0,
                    first(1, &[], &[m(0, 1), m(0, 3)]),
                    st(1, (4, 0), &[p(4, 0)], &[m(4, 1), m(4, 3)]),
                ),
            ),
            (
                "eulerian-linear",
                linear(
                    0,
                    first(1, &[], &[p(0, 2)]),
                    st(1, (0, 1), &[p(2, -1), p(2, 0)], &[p(4, 2)]),
                ),
            ),
        ],
        Phi10 => vec![(
            "eulerian",
            quad(0, first(0, &[], &[m(0, 1)]), st(1, (1, 0), &[], &[m(2, 1)])),
        )],
        Psi10 => vec![(
            "eulerian",
            quad(
                1,
                first(1, &[], &[m(0, 1)]),
                st(1, (1, 0), &[], &[m(2, -1)]),
            ),
        )],
        X10 => vec![(
            "eulerian",
            quad(0, one(), st(-1, (2, -1), &[], &[p(2, -1), p(2, 0)])),
        )],
        Chi10 => vec![(
            "eulerian",
            quad(
                1,
                first(1, &[], &[p(0, 1)]),
                st(-1, (2, -1), &[], &[p(2, -2), p(2, -1)]),
            ),
        )],
    }
}
