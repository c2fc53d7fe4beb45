use mtheta::qseries::{
    appell_lerch_m, dissect, parity_of, QMonomial, Series, ThetaBlock, ThetaProduct,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const N: i64 = 64;

fn series(offset: i64, len: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-20i64..=20, len).prop_map(move |c| Series::from_ints(offset, &c, N))
}

fn unit_series() -> impl Strategy<Value = Series> {
    (
        prop::sample::select(vec![-3i64, -1, 1, 2]),
        prop::collection::vec(-20i64..=20, N as usize - 1),
    )
        .prop_map(|(c0, rest)| {
            let mut c = vec![c0];
            c.extend(rest);
            Series::from_ints(0, &c, N)
        })
}

fn eta(parts: &[(i64, i64)]) -> ThetaProduct {
    ThetaProduct::eta_quotient(parts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mul_is_commutative_and_associative(a in series(0, 64), b in series(-2, 40), c in series(3, 30)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn inverse_is_two_sided(a in unit_series()) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(a.mul(&inv), Series::one(N));
        prop_assert_eq!(inv.mul(&a), Series::one(N));
    }

    #[test]
    fn dissections_reassemble(a in series(0, 64), k in 1i64..=6) {
        let mut sum = Series::zero(N);
        for r in 0..k {
            sum = sum.add(&dissect(&a, k, r).subs(k).shift(r));
        }
        prop_assert_eq!(sum.truncate(N), a);
    }

    #[test]
    fn parity_is_a_ring_map(a in prop::collection::vec(-50i64..=50, 512), b in prop::collection::vec(-50i64..=50, 512)) {
        let (a, b) = (Series::from_ints(0, &a, 512), Series::from_ints(0, &b, 512));
        let pa = parity_of(&a).unwrap();
        let pb = parity_of(&b).unwrap();
        prop_assert_eq!(parity_of(&a.mul(&b)).unwrap(), pa.mul(&pb));
        prop_assert_eq!(parity_of(&a.add(&b)).unwrap(), { let mut x = pa.clone(); x.xor_assign(&pb); x });
    }

    #[test]
    fn scaling_commutes_with_mul(a in series(0, 64), b in series(0, 64), k in -9i64..=9) {
        let k = BigInt::from(k);
        prop_assert_eq!(a.scale_int(&k).mul(&b), a.mul(&b).scale_int(&k));
        let half = BigRational::new(1.into(), 2.into());
        prop_assert_eq!(a.scale(&half).add(&a.scale(&half)), a);
    }
}

#[test]
fn theta_block_product_identities() {
    let p = 300;
    let block = |b: ThetaBlock| ThetaProduct::new(vec![b]).series(p).unwrap();
    let quot = |parts: &[(i64, i64)]| eta(parts).series(p).unwrap();
    let two = BigInt::from(2);
    let jbar01 = block(ThetaBlock::jbar(0, 1, 1));
    assert_eq!(jbar01, quot(&[(2, 2), (1, -1)]).scale_int(&two));
    assert_eq!(jbar01, block(ThetaBlock::jbar(1, 4, 1)).scale_int(&two));
    assert_eq!(
        block(ThetaBlock::jbar(1, 2, 1)),
        quot(&[(2, 5), (1, -2), (4, -2)])
    );
    assert_eq!(block(ThetaBlock::j(1, 2, 1)), quot(&[(1, 2), (2, -1)]));
    assert_eq!(
        block(ThetaBlock::jbar(1, 3, 1)),
        quot(&[(2, 1), (3, 2), (1, -1), (6, -1)])
    );
    assert_eq!(
        block(ThetaBlock::j(1, 4, 1)),
        quot(&[(1, 1), (4, 1), (2, -1)])
    );
    assert_eq!(
        block(ThetaBlock::j(1, 6, 1)),
        quot(&[(1, 1), (6, 2), (2, -1), (3, -1)])
    );
    assert_eq!(
        block(ThetaBlock::jbar(1, 6, 1)),
        quot(&[(2, 2), (3, 1), (12, 1), (1, -1), (4, -1), (6, -1)])
    );
}

#[test]
fn appell_lerch_splits_for_rho() {
    // q^-1 m(q,q^6,-q) = q^-1 m(-q^8,q^24,q^4) - q^-6 m(-q^-4,q^24,q^4) - (1/2) q^-2 J2^2 J6^3 J8 J12^2/(J3^2 J4^2 J24^3)
    let p = 220;
    let m = |sx, ex, base, sz, ez| {
        appell_lerch_m(QMonomial::new(sx, ex), base, QMonomial::new(sz, ez), p).unwrap()
    };
    let lhs = m(1, 1, 6, -1, 1).shift(-1);
    let theta = eta(&[(2, 2), (6, 3), (8, 1), (12, 2), (3, -2), (4, -2), (24, -3)])
        .series(p)
        .unwrap();
    let half = BigRational::new((-1).into(), 2.into());
    let rhs = m(-1, 8, 24, 1, 4)
        .shift(-1)
        .sub(&m(-1, -4, 24, 1, 4).shift(-6))
        .add(&theta.scale(&half).shift(-2));
    assert_eq!(lhs.truncate(200), rhs.truncate(200));
    assert!(lhs.truncate(200).is_integral());
}
