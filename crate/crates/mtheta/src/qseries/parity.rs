//! Bit-packed power series over GF(2).

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::error::{Result, SeriesError};
use super::series::Series;

/// Coefficients mod 2 of `q^0 .. q^(precision-1)`, packed 64 per word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParitySeries {
    words: Vec<u64>,
    precision: usize,
}

impl ParitySeries {
    pub fn zero(precision: usize) -> ParitySeries {
        ParitySeries {
            words: vec![0; precision.div_ceil(64)],
            precision,
        }
    }

    pub fn one(precision: usize) -> ParitySeries {
        let mut p = ParitySeries::zero(precision);
        p.set(0, true);
        p
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(
        indices: I,
        precision: usize,
    ) -> ParitySeries {
        let mut p = ParitySeries::zero(precision);
        for i in indices {
            if i < precision {
                p.flip(i);
            }
        }
        p
    }

    pub fn from_bools(bits: &[bool]) -> ParitySeries {
        ParitySeries::from_indices(
            bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
            bits.len(),
        )
    }

    /// Parity of an integral series with nonnegative offset.
    pub fn from_series(s: &Series) -> Result<ParitySeries> {
        if !s.is_zero() && s.offset() < 0 {
            return Err(SeriesError::NegativeOffset(s.offset()));
        }
        let n = s.precision().max(0) as usize;
        let mut p = ParitySeries::zero(n);
        if s.is_zero() {
            return Ok(p);
        }
        for e in s.offset()..s.precision() {
            if s.int_coeff(e)?.is_odd() {
                p.set(e as usize, true);
            }
        }
        Ok(p)
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.precision && (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        assert!(
            i < self.precision,
            "bit {i} beyond precision {}",
            self.precision
        );
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of set bits with index below `n`.
    pub fn count_ones_below(&self, n: usize) -> usize {
        let n = n.min(self.precision);
        let full = n / 64;
        let mut c: usize = self.words[..full]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum();
        if !n.is_multiple_of(64) {
            c += (self.words[full] & ((1u64 << (n % 64)) - 1)).count_ones() as usize;
        }
        c
    }

    pub fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.words.iter().enumerate() {
            let mut x = word;
            while x != 0 {
                let b = x.trailing_zeros() as usize;
                out.push(w * 64 + b);
                x &= x - 1;
            }
        }
        out
    }

    pub fn truncate(&self, precision: usize) -> ParitySeries {
        let precision = precision.min(self.precision);
        let mut p = ParitySeries {
            words: self.words[..precision.div_ceil(64)].to_vec(),
            precision,
        };
        p.mask_tail();
        p
    }

    fn mask_tail(&mut self) {
        let r = self.precision % 64;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    /// 64 bits starting at bit `pos`; bits outside `[0, precision)` read as 0.
    fn extract(&self, pos: i64) -> u64 {
        if pos <= -64 {
            return 0;
        }
        if pos < 0 {
            return self.words.first().map_or(0, |w| w << (-pos));
        }
        let ws = (pos / 64) as usize;
        let bs = (pos % 64) as u32;
        let lo = self.words.get(ws).map_or(0, |w| w >> bs);
        if bs == 0 {
            lo
        } else {
            lo | self.words.get(ws + 1).map_or(0, |w| w << (64 - bs))
        }
    }

    pub fn xor_assign(&mut self, other: &ParitySeries) {
        let n = self.words.len().min(other.words.len());
        for (a, b) in self.words[..n].iter_mut().zip(&other.words[..n]) {
            *a ^= *b;
        }
        if other.precision < self.precision {
            *self = self.truncate(other.precision);
        }
    }

    /// Multiplication by `q^k`; a negative `k` drops the low bits.
    pub fn shifted(&self, k: i64) -> ParitySeries {
        let mut out = ParitySeries::zero(self.precision);
        for (w, slot) in out.words.iter_mut().enumerate() {
            *slot = self.extract(64 * w as i64 - k);
        }
        out.mask_tail();
        out
    }

    /// Multiplication by `1 + q^k` in place.
    pub fn mul_one_plus(&mut self, k: usize) {
        if k == 0 {
            self.words.iter_mut().for_each(|w| *w = 0);
            return;
        }
        for w in (0..self.words.len()).rev() {
            let v = self.extract(64 * w as i64 - k as i64);
            self.words[w] ^= v;
        }
        self.mask_tail();
    }

    /// Multiplication by `1/(1 + q^k)` (equivalently `1/(1 - q^k)`) in place.
    ///
    /// Strides below 64 are first widened with the factors
    /// `(1 + q^k)(1 + q^{2k}) ... (1 + q^{k 2^{m-1}})`, leaving a division by
    /// `1 + q^{k 2^m}` that runs as a word-level prefix XOR.
    pub fn div_one_plus(&mut self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(SeriesError::DivisionByZero);
        }
        let mut stride = k;
        while stride < 64 {
            self.mul_one_plus(stride);
            stride *= 2;
        }
        for w in 0..self.words.len() {
            let v = self.extract(64 * w as i64 - stride as i64);
            self.words[w] ^= v;
        }
        self.mask_tail();
        Ok(())
    }

    /// Bit-serial reference for [`ParitySeries::div_one_plus`].
    pub fn div_one_plus_naive(&mut self, k: usize) {
        for i in k..self.precision {
            if self.get(i - k) {
                self.flip(i);
            }
        }
    }

    /// GF(2) product truncated at the smaller precision.
    pub fn mul(&self, other: &ParitySeries) -> ParitySeries {
        let n = self.precision.min(other.precision);
        let mut out = ParitySeries::zero(n);
        let b = other.truncate(n);
        for i in self.truncate(n).ones() {
            let s = b.shifted(i as i64);
            for (o, x) in out.words.iter_mut().zip(&s.words) {
                *o ^= *x;
            }
        }
        out
    }

    /// Product with a sparse polynomial given by its odd exponents.
    pub fn mul_sparse(&self, exps: &[usize]) -> ParitySeries {
        let mut out = ParitySeries::zero(self.precision);
        for &e in exps {
            if e < self.precision {
                let s = self.shifted(e as i64);
                for (o, x) in out.words.iter_mut().zip(&s.words) {
                    *o ^= *x;
                }
            }
        }
        out
    }

    /// Quotient by a sparse series with constant term 1, given by its odd
    /// exponents (which must include 0).
    pub fn div_sparse(&self, exps: &[usize]) -> Result<ParitySeries> {
        if !exps.contains(&0) {
            return Err(SeriesError::ZeroLeadingCoefficient);
        }
        let tail: Vec<usize> = exps.iter().copied().filter(|&e| e > 0).collect();
        let mut c = self.clone();
        for n in 0..c.precision {
            if c.get(n) {
                for &k in &tail {
                    if n + k < c.precision {
                        c.flip(n + k);
                    } else {
                        break;
                    }
                }
            }
        }
        Ok(c)
    }

    /// Bits `k n + r`.
    pub fn dissect(&self, k: usize, r: usize) -> ParitySeries {
        assert!(k >= 1 && r < k);
        let n = self.precision.saturating_sub(r).div_ceil(k);
        ParitySeries::from_indices((0..n).filter(|&i| self.get(k * i + r)), n)
    }

    /// The substitution `q -> q^k`.
    pub fn subs(&self, k: usize) -> ParitySeries {
        ParitySeries::from_indices(self.ones().into_iter().map(|i| i * k), self.precision * k)
    }
}

/// Multiplication by `1/(1 - q^k)` over GF(2).
pub fn parity_mul_inv_by_cyclotomic(p: &ParitySeries, k: usize) -> Result<ParitySeries> {
    let mut out = p.clone();
    out.div_one_plus(k)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_is_all_ones() {
        let p = parity_mul_inv_by_cyclotomic(&ParitySeries::one(200), 1).unwrap();
        assert_eq!(p.count_ones(), 200);
    }

    #[test]
    fn one_plus_q2_over_stride_two_is_one() {
        let p = ParitySeries::from_indices([0, 2], 50);
        assert_eq!(
            parity_mul_inv_by_cyclotomic(&p, 2).unwrap(),
            ParitySeries::one(50)
        );
    }

    #[test]
    fn word_level_division_matches_bitwise() {
        for k in [1usize, 3, 7, 63, 64, 65, 100, 129, 500] {
            let base = ParitySeries::from_indices((0..700).filter(|i| (i * 7 + 3) % 5 < 2), 700);
            let mut fast = base.clone();
            fast.div_one_plus(k).unwrap();
            let mut slow = base.clone();
            slow.div_one_plus_naive(k);
            assert_eq!(fast, slow, "k = {k}");
        }
    }

    #[test]
    fn mul_then_div_round_trip() {
        let base = ParitySeries::from_indices([0, 5, 9, 64, 130, 199], 200);
        for k in [1usize, 4, 64, 77] {
            let mut p = base.clone();
            p.mul_one_plus(k);
            p.div_one_plus(k).unwrap();
            assert_eq!(p, base);
        }
    }

    #[test]
    fn shifts_truncate() {
        let p = ParitySeries::from_indices([0, 63, 64], 70);
        assert_eq!(p.shifted(6).ones(), vec![6, 69]);
        assert_eq!(p.shifted(-63).ones(), vec![0, 1]);
    }

    #[test]
    fn count_below() {
        let p = ParitySeries::from_indices([1, 64, 65, 127, 128], 130);
        assert_eq!(p.count_ones_below(65), 2);
        assert_eq!(p.count_ones_below(128), 4);
        assert_eq!(p.count_ones_below(1000), 5);
    }
}
