//! Arithmetic in Z, Z[sqrt 2], Z[sqrt 3], Z[sqrt 6] and Z[sqrt 15] behind the
//! parity characterizations.

mod arith;
mod factor;
mod field;
mod special;

pub use arith::{a3, characterizing_values, count_formula, divisor_count, r2, square_count};
pub use factor::{factor, is_prime, jacobi, Factorization};
pub use field::{
    chi, class_count_h, enumerate_representatives, ideal_count_t, QuadField, MAX_ENUM_NORM,
};
pub use special::{
    gamma_asymptotic, gamma_constant, gamma_count, gamma_count_with, is_special_form,
    special_predicates, special_witness, special_witness_of, Branch, ResidueConstraint,
    SpecialFormCondition, SpfSieve, Witness, MAX_SIEVE,
};

use crate::catalog::MockThetaId;

#[derive(Debug, thiserror::Error)]
pub enum NumError {
    #[error("zero argument")]
    Zero,
    #[error("{0} exceeds the 64-bit range")]
    Overflow(String),
    #[error("Jacobi symbol with even modulus {0}")]
    EvenModulus(i64),
    #[error("Jacobi symbol with nonpositive modulus {0}")]
    NonPositiveModulus(i64),
    #[error("no quadratic field data for d = {0}")]
    UnsupportedField(u32),
    #[error(
        "H for d = {d} is only available in the classes 1, 9 (mod 20) and 26, 34 (mod 40); got {n}"
    )]
    UnsupportedResidue { d: u32, n: i64 },
    #[error("norm {m} exceeds the search bound {bound}")]
    SearchBoundExceeded { m: i64, bound: u64 },
    #[error("sieve needs {needed}, capacity is {capacity}")]
    SieveCapacity { needed: u64, capacity: u64 },
    #[error("{0} has no special-form characterization")]
    NoCharacterization(MockThetaId),
    #[error("{0} has no closed count of odd coefficients")]
    NoClosedCount(MockThetaId),
}
