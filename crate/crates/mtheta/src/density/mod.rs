//! Odd-coefficient densities `delta({c(n)}; X) = #{0 <= n < X : c(n) odd} / X`
//! over the GF(2) fast path, and the fifteen-row density table.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, CatalogError, MockThetaId, UnknownId};
use crate::exec::{self, ExecMode};
use crate::qseries::ParitySeries;

#[derive(Debug, thiserror::Error)]
pub enum DensityError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    UnknownId(#[from] UnknownId),
    #[error("unknown selector `{0}` (expected n, 2n or 2n+1)")]
    UnknownSelector(String),
    #[error("sample bound must be at least 1")]
    EmptySample,
}

/// Which terms of the parent sequence are sampled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Selector {
    /// `c(n)`
    All,
    /// `c(2n)`
    Even,
    /// `c(2n+1)`
    Odd,
}

impl Selector {
    pub fn label(self) -> &'static str {
        match self {
            Selector::All => "n",
            Selector::Even => "2n",
            Selector::Odd => "2n+1",
        }
    }

    /// Parent terms needed for `x` sampled terms.
    fn parent_len(self, x: usize) -> usize {
        match self {
            Selector::All => x,
            Selector::Even => 2 * x - 1,
            Selector::Odd => 2 * x,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SequenceId {
    pub id: MockThetaId,
    pub selector: Selector,
}

impl SequenceId {
    pub const fn all(id: MockThetaId) -> SequenceId {
        SequenceId {
            id,
            selector: Selector::All,
        }
    }

    pub const fn even(id: MockThetaId) -> SequenceId {
        SequenceId {
            id,
            selector: Selector::Even,
        }
    }

    pub const fn odd(id: MockThetaId) -> SequenceId {
        SequenceId {
            id,
            selector: Selector::Odd,
        }
    }

    /// The first `x` terms of the selected sequence mod 2.
    pub fn parity(&self, x: usize) -> Result<ParitySeries, DensityError> {
        if x == 0 {
            return Err(DensityError::EmptySample);
        }
        let p = catalog::parity(self.id, self.selector.parent_len(x))?;
        Ok(match self.selector {
            Selector::All => p,
            Selector::Even => p.dissect(2, 0),
            Selector::Odd => p.dissect(2, 1),
        })
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c({};{})", self.id.slug(), self.selector.label())
    }
}

/// Accepts `slug`, `slug:2n`, `slug:2n+1`, and the rendered `c(slug;2n)`.
impl FromStr for SequenceId {
    type Err = DensityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let inner = s
            .strip_prefix("c(")
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        let (name, sel) = match inner.split_once([':', ';']) {
            Some((a, b)) => (a, b.trim()),
            None => (inner, "n"),
        };
        let selector = match sel {
            "n" => Selector::All,
            "2n" => Selector::Even,
            "2n+1" => Selector::Odd,
            other => return Err(DensityError::UnknownSelector(other.to_string())),
        };
        Ok(SequenceId {
            id: name.trim().parse()?,
            selector,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityResult {
    pub sequence: String,
    pub x: u64,
    pub odd_count: u64,
    /// `odd_count / x` in lowest terms.
    pub delta_num: u64,
    pub delta_den: u64,
    /// Rounded half up to five decimals.
    pub delta: String,
}

impl DensityResult {
    pub fn new(seq: &SequenceId, x: u64, odd_count: u64) -> DensityResult {
        let g = odd_count.gcd(&x).max(1);
        DensityResult {
            sequence: seq.to_string(),
            x,
            odd_count,
            delta_num: odd_count / g,
            delta_den: x / g,
            delta: render_half_up(odd_count, x),
        }
    }

    pub fn value(&self) -> f64 {
        self.odd_count as f64 / self.x as f64
    }
}

fn render(units: u64) -> String {
    format!("{}.{:05}", units / 100_000, units % 100_000)
}

/// `count / x` to five decimals, halves rounded up.
pub fn render_half_up(count: u64, x: u64) -> String {
    let (c, x) = (count as u128, x as u128);
    render(((200_000 * c + x) / (2 * x)) as u64)
}

/// `count / x` to five decimals, truncated.
pub fn render_truncated(count: u64, x: u64) -> String {
    render((100_000 * count as u128 / x as u128) as u64)
}

/// Value in units of `10^-5` of a five-decimal rendering.
pub fn units(rendered: &str) -> Option<i64> {
    let (int, frac) = rendered.split_once('.')?;
    if frac.len() != 5 {
        return None;
    }
    Some(int.parse::<i64>().ok()? * 100_000 + frac.parse::<i64>().ok()?)
}

pub fn delta(seq: &SequenceId, x: u64) -> Result<DensityResult, DensityError> {
    let bits = seq.parity(x as usize)?;
    Ok(DensityResult::new(seq, x, bits.count_ones() as u64))
}

pub const TABLE1_DEFAULT_X: u64 = 100_000;

/// The fifteen sequences and their printed densities at `X = 100000`.
pub const TABLE1: [(SequenceId, &str); 15] = {
    use MockThetaId::*;
    [
        (SequenceId::all(Mu2), "0.50161"),
        (SequenceId::all(F3), "0.50201"),
        (SequenceId::all(Chi3), "0.49847"),
        (SequenceId::all(Phi0_5), "0.50226"),
        (SequenceId::all(Phi1_5), "0.50162"),
        (SequenceId::all(Psi6), "0.50086"),
        (SequenceId::all(Gamma6), "0.49847"),
        (SequenceId::all(F0_7), "0.49857"),
        (SequenceId::all(F1_7), "0.49667"),
        (SequenceId::all(F2_7), "0.50102"),
        (SequenceId::all(S0_8), "0.50041"),
        (SequenceId::all(X10), "0.50063"),
        (SequenceId::all(Chi10), "0.50244"),
        (SequenceId::even(F0_5), "0.50188"),
        (SequenceId::odd(F1_5), "0.49838"),
    ]
};

/// The fifteen densities at `x`, in table order.
pub fn table1(x: u64, mode: ExecMode) -> Result<Vec<DensityResult>, DensityError> {
    exec::map(mode, &TABLE1, |(seq, _)| delta(seq, x))
        .into_iter()
        .collect()
}

/// One computed row against the printed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub result: DensityResult,
    pub printed: String,
    pub truncated: String,
    /// Computed minus printed, in units of the last printed digit.
    pub diff_units: i64,
}

impl Table1Row {
    pub fn exact_match(&self) -> bool {
        self.result.delta == self.printed || self.truncated == self.printed
    }

    pub fn within_one_unit(&self) -> bool {
        self.diff_units.abs() <= 1
    }
}

/// `table1(x)` paired with the printed column (only meaningful at the default `x`).
pub fn table1_compare(x: u64, mode: ExecMode) -> Result<Vec<Table1Row>, DensityError> {
    Ok(table1(x, mode)?
        .into_iter()
        .zip(TABLE1.iter())
        .map(|(result, (_, printed))| Table1Row {
            diff_units: units(&result.delta).unwrap_or(0) - units(printed).unwrap_or(0),
            truncated: render_truncated(result.odd_count, result.x),
            printed: printed.to_string(),
            result,
        })
        .collect())
}

/// Sample points of a density profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Schedule {
    /// `x, x + step, x + 2 step, ...`
    Linear(u64),
    /// `x, x f, x f^2, ...`
    Geometric(u64),
}

impl Schedule {
    /// Points from `x` up to and including `upto`; always contains `x`.
    pub fn points(self, x: u64, upto: u64) -> Vec<u64> {
        let mut out = vec![x];
        let mut cur = x;
        loop {
            let next = match self {
                Schedule::Linear(s) => cur.checked_add(s.max(1)),
                Schedule::Geometric(f) => cur.checked_mul(f.max(2)),
            };
            match next {
                Some(v) if v <= upto => {
                    out.push(v);
                    cur = v;
                }
                _ => break,
            }
        }
        out
    }
}

/// Densities at every point of the schedule, from one expansion to the
/// largest point.
pub fn density_profile(
    seq: &SequenceId,
    x: u64,
    schedule: Schedule,
    upto: u64,
) -> Result<Vec<DensityResult>, DensityError> {
    if x == 0 {
        return Err(DensityError::EmptySample);
    }
    let points = schedule.points(x, upto.max(x));
    let top = *points.last().expect("nonempty schedule");
    let bits = seq.parity(top as usize)?;
    Ok(points
        .into_iter()
        .map(|p| DensityResult::new(seq, p, bits.count_ones_below(p as usize) as u64))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        assert_eq!(render_half_up(50161, 100_000), "0.50161");
        assert_eq!(render_half_up(1, 200_000), "0.00001");
        assert_eq!(render_truncated(1, 200_000), "0.00000");
        assert_eq!(render_half_up(3, 3), "1.00000");
        assert_eq!(units("0.49847"), Some(49847));
        assert_eq!(units("0.4984"), None);
    }

    #[test]
    fn parse_sequence_ids() {
        let s: SequenceId = "f0_5:2n".parse().unwrap();
        assert_eq!(s, SequenceId::even(MockThetaId::F0_5));
        assert_eq!(s.to_string(), "c(f0_5;2n)");
        assert_eq!(s.to_string().parse::<SequenceId>().unwrap(), s);
        assert!(matches!(
            "mu2:3n".parse::<SequenceId>(),
            Err(DensityError::UnknownSelector(_))
        ));
        assert!("nope".parse::<SequenceId>().is_err());
    }

    #[test]
    fn schedules() {
        assert_eq!(
            Schedule::Geometric(2).points(10_000, 80_000),
            vec![10_000, 20_000, 40_000, 80_000]
        );
        assert_eq!(Schedule::Linear(1).points(1, 1), vec![1]);
        assert_eq!(Schedule::Linear(5).points(3, 14), vec![3, 8, 13]);
    }
}
