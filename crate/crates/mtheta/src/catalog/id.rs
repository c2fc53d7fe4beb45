use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One of the 44 classical mock theta functions. `μ^(6)` is registered as
/// `2μ^(6)` so that every coefficient is an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MockThetaId {
    A2,
    B2,
    Mu2,
    F3,
    Phi3,
    Psi3,
    Chi3,
    Omega3,
    Nu3,
    Rho3,
    F0_5,
    F1_5,
    BigF0_5,
    BigF1_5,
    Phi0_5,
    Phi1_5,
    Psi0_5,
    Psi1_5,
    Chi0_5,
    Chi1_5,
    Phi6,
    Psi6,
    Rho6,
    Sigma6,
    Lambda6,
    TwoMu6,
    Gamma6,
    PhiMinus6,
    PsiMinus6,
    F0_7,
    F1_7,
    F2_7,
    S0_8,
    S1_8,
    T0_8,
    T1_8,
    U0_8,
    U1_8,
    V0_8,
    V1_8,
    Phi10,
    Psi10,
    X10,
    Chi10,
}

use MockThetaId::*;

impl MockThetaId {
    pub const ALL: [MockThetaId; 44] = [
        A2, B2, Mu2, F3, Phi3, Psi3, Chi3, Omega3, Nu3, Rho3, F0_5, F1_5, BigF0_5, BigF1_5, Phi0_5,
        Phi1_5, Psi0_5, Psi1_5, Chi0_5, Chi1_5, Phi6, Psi6, Rho6, Sigma6, Lambda6, TwoMu6, Gamma6,
        PhiMinus6, PsiMinus6, F0_7, F1_7, F2_7, S0_8, S1_8, T0_8, T1_8, U0_8, U1_8, V0_8, V1_8,
        Phi10, Psi10, X10, Chi10,
    ];

    pub fn order(self) -> u32 {
        match self {
            A2 | B2 | Mu2 => 2,
            F3 | Phi3 | Psi3 | Chi3 | Omega3 | Nu3 | Rho3 => 3,
            F0_5 | F1_5 | BigF0_5 | BigF1_5 | Phi0_5 | Phi1_5 | Psi0_5 | Psi1_5 | Chi0_5
            | Chi1_5 => 5,
            Phi6 | Psi6 | Rho6 | Sigma6 | Lambda6 | TwoMu6 | Gamma6 | PhiMinus6 | PsiMinus6 => 6,
            F0_7 | F1_7 | F2_7 => 7,
            S0_8 | S1_8 | T0_8 | T1_8 | U0_8 | U1_8 | V0_8 | V1_8 => 8,
            Phi10 | Psi10 | X10 | Chi10 => 10,
        }
    }

    /// Command-line name.
    pub fn slug(self) -> &'static str {
        match self {
            A2 => "A2",
            B2 => "B2",
            Mu2 => "mu2",
            F3 => "f3",
            Phi3 => "phi3",
            Psi3 => "psi3",
            Chi3 => "chi3",
            Omega3 => "omega3",
            Nu3 => "nu3",
            Rho3 => "rho3",
            F0_5 => "f0_5",
            F1_5 => "f1_5",
            BigF0_5 => "F0_5",
            BigF1_5 => "F1_5",
            Phi0_5 => "phi0_5",
            Phi1_5 => "phi1_5",
            Psi0_5 => "psi0_5",
            Psi1_5 => "psi1_5",
            Chi0_5 => "chi0_5",
            Chi1_5 => "chi1_5",
            Phi6 => "phi6",
            Psi6 => "psi6",
            Rho6 => "rho6",
            Sigma6 => "sigma6",
            Lambda6 => "lambda6",
            TwoMu6 => "2mu6",
            Gamma6 => "gamma6",
            PhiMinus6 => "phiminus6",
            PsiMinus6 => "psiminus6",
            F0_7 => "F0_7",
            F1_7 => "F1_7",
            F2_7 => "F2_7",
            S0_8 => "S0_8",
            S1_8 => "S1_8",
            T0_8 => "T0_8",
            T1_8 => "T1_8",
            U0_8 => "U0_8",
            U1_8 => "U1_8",
            V0_8 => "V0_8",
            V1_8 => "V1_8",
            Phi10 => "phi10",
            Psi10 => "psi10",
            X10 => "X10",
            Chi10 => "chi10",
        }
    }

    /// Mathematical name with order superscript.
    pub fn symbol(self) -> &'static str {
        match self {
            A2 => "A^(2)",
            B2 => "B^(2)",
            Mu2 => "μ^(2)",
            F3 => "f^(3)",
            Phi3 => "φ^(3)",
            Psi3 => "ψ^(3)",
            Chi3 => "χ^(3)",
            Omega3 => "ω^(3)",
            Nu3 => "ν^(3)",
            Rho3 => "ρ^(3)",
            F0_5 => "f₀^(5)",
            F1_5 => "f₁^(5)",
            BigF0_5 => "F₀^(5)",
            BigF1_5 => "F₁^(5)",
            Phi0_5 => "φ₀^(5)",
            Phi1_5 => "φ₁^(5)",
            Psi0_5 => "ψ₀^(5)",
            Psi1_5 => "ψ₁^(5)",
            Chi0_5 => "χ₀^(5)",
            Chi1_5 => "χ₁^(5)",
            Phi6 => "φ^(6)",
            Psi6 => "ψ^(6)",
            Rho6 => "ρ^(6)",
            Sigma6 => "σ^(6)",
            Lambda6 => "λ^(6)",
            TwoMu6 => "2μ^(6)",
            Gamma6 => "γ^(6)",
            PhiMinus6 => "φ₋^(6)",
            PsiMinus6 => "ψ₋^(6)",
            F0_7 => "𝓕₀^(7)",
            F1_7 => "𝓕₁^(7)",
            F2_7 => "𝓕₂^(7)",
            S0_8 => "S₀^(8)",
            S1_8 => "S₁^(8)",
            T0_8 => "T₀^(8)",
            T1_8 => "T₁^(8)",
            U0_8 => "U₀^(8)",
            U1_8 => "U₁^(8)",
            V0_8 => "V₀^(8)",
            V1_8 => "V₁^(8)",
            Phi10 => "φ^(10)",
            Psi10 => "ψ^(10)",
            X10 => "X^(10)",
            Chi10 => "χ^(10)",
        }
    }
}

impl fmt::Display for MockThetaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown mock theta function `{0}`")]
pub struct UnknownId(pub String);

impl FromStr for MockThetaId {
    type Err = UnknownId;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MockThetaId::ALL
            .iter()
            .copied()
            .find(|id| id.slug() == s || id.symbol() == s)
            .ok_or_else(|| UnknownId(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forty_four_distinct_slugs() {
        let mut slugs: Vec<&str> = MockThetaId::ALL.iter().map(|i| i.slug()).collect();
        slugs.sort();
        slugs.dedup();
        assert_eq!(slugs.len(), 44);
    }

    #[test]
    fn orders_tally() {
        let count = |o| MockThetaId::ALL.iter().filter(|i| i.order() == o).count();
        assert_eq!(
            [
                count(2),
                count(3),
                count(5),
                count(6),
                count(7),
                count(8),
                count(10)
            ],
            [3, 7, 10, 9, 3, 8, 4]
        );
    }

    #[test]
    fn parse_round_trip() {
        for id in MockThetaId::ALL {
            assert_eq!(id.slug().parse::<MockThetaId>().unwrap(), id);
        }
        assert!("f9".parse::<MockThetaId>().is_err());
    }
}
