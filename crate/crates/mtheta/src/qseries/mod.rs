//! Exact truncated q-series and the generic evaluators behind every
//! representation: products, theta blocks, Eulerian recurrences, Hecke-type
//! double sums and Appell-Lerch sums.

mod error;
pub mod eulerian;
pub mod hecke;
pub mod lerch;
mod parity;
mod series;
pub mod theta;

pub use error::{Result, SeriesError};
pub use eulerian::{eulerian_parity, eulerian_sum, Binomial, EulerianSpec, Growth, Step};
pub use hecke::{hecke_sum, HeckeComponent, HeckeSpec, JRange, QuadForm};
pub use lerch::{appell_lerch_m, appell_lerch_spec, lerch_sum, LerchRange, LerchSpec, QMonomial};
pub use parity::{parity_mul_inv_by_cyclotomic, ParitySeries};
pub use series::Series;
pub use theta::{pochhammer, BlockKind, ThetaBlock, ThetaProduct};

/// Parity bits of an integral series with nonnegative offset.
pub fn parity_of(a: &Series) -> Result<ParitySeries> {
    ParitySeries::from_series(a)
}

/// `dissect(a, k, r) = Σ_n c(k n + r) q^n`.
pub fn dissect(a: &Series, k: i64, r: i64) -> Series {
    a.dissect(k, r)
}
