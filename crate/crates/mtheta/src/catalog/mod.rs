//! Registry of the 44 classical mock theta functions.
//!
//! Every function carries its Eulerian definition plus whatever Hecke-type,
//! Appell-Lerch and theta-product forms are known for it. Each record is
//! data; the evaluators live in [`crate::qseries`].

mod eulerian_defs;
mod forms;
mod id;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qseries::{
    eulerian_parity, eulerian_sum, hecke_sum, lerch_sum, Binomial, EulerianSpec, Growth, HeckeSpec,
    LerchSpec, ParitySeries, Series, SeriesError, Step, ThetaProduct,
};

pub use id::{MockThetaId, UnknownId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepKind {
    Eulerian,
    Hecke,
    AppellLerch,
    ProductCongruence,
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepKind::Eulerian => "eulerian",
            RepKind::Hecke => "hecke",
            RepKind::AppellLerch => "appell-lerch",
            RepKind::ProductCongruence => "product",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Eulerian(EulerianSpec),
    Hecke(HeckeSpec),
    Lerch(LerchSpec),
    Product(ThetaProduct),
}

/// One series form of a function. `modulus` is `None` for exact forms and
/// `Some(m)` for forms that agree with the function only mod `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub kind: RepKind,
    pub label: &'static str,
    pub modulus: Option<u32>,
    pub payload: Payload,
}

impl Representation {
    pub fn is_exact(&self) -> bool {
        self.modulus.is_none()
    }

    /// The first `n` coefficients of this form.
    pub fn expand(&self, n: usize) -> Result<Series, CatalogError> {
        let p = n as i64;
        Ok(match &self.payload {
            Payload::Eulerian(s) => eulerian_sum(s, p)?,
            Payload::Hecke(s) => hecke_sum(s, p)?,
            Payload::Lerch(s) => lerch_sum(s, p)?,
            Payload::Product(t) => t.series(p)?,
        })
    }

    /// Coefficients mod 2 for `0 <= k < n`. Valid for the function itself
    /// whenever the modulus is `None` or even.
    pub fn parity(&self, n: usize) -> Result<ParitySeries, CatalogError> {
        Ok(match &self.payload {
            Payload::Eulerian(s) => eulerian_parity(s, n)?,
            Payload::Product(t) => t.parity(n)?,
            _ => ParitySeries::from_series(&self.expand(n)?)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no {kind} representation registered for {id}")]
    UnknownRepresentation { id: MockThetaId, kind: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// All registered forms of one function.
#[derive(Clone, Debug)]
pub struct Entry {
    pub id: MockThetaId,
    pub representations: Vec<Representation>,
}

impl Entry {
    fn build(id: MockThetaId) -> Entry {
        let mut reps = Vec::new();
        for (label, spec) in eulerian_defs::eulerian_forms(id) {
            reps.push(Representation {
                kind: RepKind::Eulerian,
                label,
                modulus: None,
                payload: Payload::Eulerian(spec),
            });
        }
        for (label, spec, modulus) in forms::hecke_forms(id) {
            reps.push(Representation {
                kind: RepKind::Hecke,
                label,
                modulus,
                payload: Payload::Hecke(spec),
            });
        }
        for (label, spec) in forms::lerch_forms(id) {
            reps.push(Representation {
                kind: RepKind::AppellLerch,
                label,
                modulus: None,
                payload: Payload::Lerch(spec),
            });
        }
        for (label, prod, m) in forms::product_forms(id) {
            reps.push(Representation {
                kind: RepKind::ProductCongruence,
                label,
                modulus: Some(m),
                payload: Payload::Product(prod),
            });
        }
        Entry {
            id,
            representations: reps,
        }
    }

    /// The primary Eulerian definition.
    pub fn primary(&self) -> &Representation {
        &self.representations[0]
    }

    /// The first form of `kind`, preferring exact ones.
    pub fn find(&self, kind: RepKind) -> Option<&Representation> {
        let mut of_kind = self.representations.iter().filter(|r| r.kind == kind);
        let first = of_kind.clone().next();
        of_kind.find(|r| r.is_exact()).or(first)
    }

    pub fn by_label(&self, label: &str) -> Option<&Representation> {
        self.representations.iter().find(|r| r.label == label)
    }

    pub fn exact(&self) -> impl Iterator<Item = &Representation> {
        self.representations.iter().filter(|r| r.is_exact())
    }
}

/// The registry, built once.
pub fn registry() -> &'static [Entry] {
    static REG: OnceLock<Vec<Entry>> = OnceLock::new();
    REG.get_or_init(|| {
        MockThetaId::ALL
            .iter()
            .map(|&id| Entry::build(id))
            .collect()
    })
}

pub fn entry(id: MockThetaId) -> &'static Entry {
    &registry()[MockThetaId::ALL
        .iter()
        .position(|&x| x == id)
        .expect("registered id")]
}

/// `c(id; 0..n)` through the chosen kind of representation.
pub fn expand(id: MockThetaId, kind: RepKind, n: usize) -> Result<Series, CatalogError> {
    entry(id)
        .find(kind)
        .ok_or(CatalogError::UnknownRepresentation {
            id,
            kind: kind.to_string(),
        })?
        .expand(n)
}

/// `c(id; 0..n)` through the representation with the given label.
pub fn expand_label(id: MockThetaId, label: &str, n: usize) -> Result<Series, CatalogError> {
    entry(id)
        .by_label(label)
        .ok_or(CatalogError::UnknownRepresentation {
            id,
            kind: label.to_string(),
        })?
        .expand(n)
}

/// `c(id; n) mod 2` for `n < N`. Uses a theta-product congruence when one is
/// registered, otherwise runs the Eulerian recurrence over GF(2).
pub fn parity(id: MockThetaId, n: usize) -> Result<ParitySeries, CatalogError> {
    let e = entry(id);
    match e
        .find(RepKind::ProductCongruence)
        .filter(|r| r.modulus.is_some_and(|m| m % 2 == 0))
    {
        Some(r) => r.parity(n),
        None => e.primary().parity(n),
    }
}

/// Auxiliary sequences that the parity results are stated in terms of.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AuxSequence {
    /// `p(n)`
    Partitions,
    /// `p_{-k}(n)`, coefficients of `1/(q;q)_∞^k`
    PartitionsNegK(u32),
    /// `a₃(n)`, 3-core partitions
    ThreeCores,
    /// Rogers-Ramanujan `G(q) = Σ q^{n²}/(q;q)_n`
    RogersRamanujanG,
    /// Rogers-Ramanujan `H(q) = Σ q^{n²+n}/(q;q)_n`
    RogersRamanujanH,
    /// `ψ(q) = Σ_{n≥0} q^{n(n+1)/2}`
    PsiTheta,
    /// `p_S(n)` with `S` the positive integers not congruent to any of
    /// `excluded` modulo `modulus`.
    Restricted { modulus: u32, excluded: Vec<u32> },
}

impl AuxSequence {
    /// The set `S_i` of the order-7 restricted-partition congruences.
    pub fn order7(i: usize) -> AuxSequence {
        let excluded = match i {
            0 => vec![0, 6, 8],
            1 => vec![0, 2, 12],
            2 => vec![0, 4, 10],
            _ => panic!("order-7 sets are S0, S1, S2"),
        };
        AuxSequence::Restricted {
            modulus: 14,
            excluded,
        }
    }
}

/// First `n` values of an auxiliary sequence.
pub fn aux(seq: &AuxSequence, n: usize) -> Series {
    let p = n as i64;
    let ints = |v: Vec<BigInt>| Series::from_bigints(0, v, p);
    match seq {
        AuxSequence::Partitions => ints(partitions(n)),
        AuxSequence::PartitionsNegK(k) => ThetaProduct::eta_quotient(&[(1, -(*k as i64))])
            .series(p)
            .expect("eta power"),
        AuxSequence::ThreeCores => ThetaProduct::eta_quotient(&[(3, 3), (1, -1)])
            .series(p)
            .expect("eta quotient"),
        AuxSequence::RogersRamanujanG | AuxSequence::RogersRamanujanH => {
            let shift = if *seq == AuxSequence::RogersRamanujanG {
                -1
            } else {
                0
            };
            let spec = EulerianSpec::new(
                0,
                Step::monomial(1, 0),
                Step::new(1, (2, shift), Vec::new(), vec![Binomial::minus(1, 0)]),
                Growth::Quadratic,
            );
            eulerian_sum(&spec, p).expect("Rogers-Ramanujan sum")
        }
        AuxSequence::PsiTheta => {
            let mut v = vec![BigInt::from(0); n];
            let mut k = 0usize;
            while k * (k + 1) / 2 < n {
                v[k * (k + 1) / 2] = BigInt::from(1);
                k += 1;
            }
            ints(v)
        }
        AuxSequence::Restricted { modulus, excluded } => {
            let mut v = vec![BigInt::from(0); n];
            if n > 0 {
                v[0] = BigInt::from(1);
            }
            for part in 1..n {
                if excluded.contains(&((part as u32) % modulus)) {
                    continue;
                }
                for i in part..n {
                    let t = v[i - part].clone();
                    v[i] += t;
                }
            }
            ints(v)
        }
    }
}

/// `p(0..n)` by Euler's pentagonal recurrence.
fn partitions(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(0); n];
    if n == 0 {
        return p;
    }
    p[0] = BigInt::from(1);
    for m in 1..n {
        let mut acc = BigInt::from(0);
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += &p[m - g1] * sign;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += &p[m - g2] * sign;
            }
            k += 1;
        }
        p[m] = acc;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series, n: usize) -> Vec<i64> {
        s.to_i64_vec(n as i64)
    }

    #[test]
    fn every_id_has_an_eulerian_primary() {
        for e in registry() {
            assert_eq!(e.primary().kind, RepKind::Eulerian, "{}", e.id);
            assert!(e.primary().is_exact());
        }
    }

    #[test]
    fn congruence_forms_carry_a_modulus() {
        for e in registry() {
            for r in &e.representations {
                if r.kind == RepKind::ProductCongruence {
                    assert!(matches!(r.modulus, Some(2) | Some(4)));
                }
            }
        }
    }

    #[test]
    fn two_mu6_leading_terms() {
        let s = expand(MockThetaId::TwoMu6, RepKind::Eulerian, 9).unwrap();
        assert_eq!(ints(&s, 9), vec![1, 2, -3, 4, -4, 6, -11, 14, -15]);
    }

    #[test]
    fn b2_leading_terms() {
        let s = expand(MockThetaId::B2, RepKind::Eulerian, 5).unwrap();
        assert_eq!(ints(&s, 5), vec![1, 2, 4, 6, 9]);
    }

    #[test]
    fn normalization_of_leading_terms() {
        assert_eq!(
            ints(&expand(MockThetaId::Psi3, RepKind::Eulerian, 3).unwrap(), 3)[0],
            0
        );
        let chi10 = ints(
            &expand(MockThetaId::Chi10, RepKind::Eulerian, 3).unwrap(),
            3,
        );
        assert_eq!((chi10[0], chi10[1]), (0, 1));
        assert_eq!(
            ints(&expand(MockThetaId::V0_8, RepKind::Eulerian, 1).unwrap(), 1),
            vec![1]
        );
    }

    #[test]
    fn parity_examples() {
        assert_eq!(
            parity(MockThetaId::Nu3, 10).unwrap().ones(),
            vec![0, 1, 5, 8]
        );
        assert_eq!(parity(MockThetaId::V0_8, 10).unwrap().ones(), vec![0]);
        let w = parity(MockThetaId::Omega3, 12).unwrap().ones();
        assert!(w.iter().all(|&i| i % 2 == 0));
    }

    #[test]
    fn aux_examples() {
        assert_eq!(
            ints(&aux(&AuxSequence::Partitions, 5), 5),
            vec![1, 1, 2, 3, 5]
        );
        assert_eq!(
            ints(&aux(&AuxSequence::ThreeCores, 5), 5),
            vec![1, 1, 2, 0, 2]
        );
        assert_eq!(
            ints(&aux(&AuxSequence::RogersRamanujanG, 5), 5),
            vec![1, 1, 1, 1, 2]
        );
        assert_eq!(
            ints(&aux(&AuxSequence::PsiTheta, 7), 7),
            vec![1, 1, 0, 1, 0, 0, 1]
        );
    }

    #[test]
    fn unknown_representation() {
        let r = expand(MockThetaId::Chi3, RepKind::Hecke, 10);
        assert!(matches!(r, Err(CatalogError::UnknownRepresentation { .. })));
    }
}
