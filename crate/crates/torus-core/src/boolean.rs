//! Boolean functions as dense truth tables, and symmetric Boolean functions
//! as value vectors over Hamming weights.
//!
//! Truth tables use little-endian bit indexing: the table index of an input
//! `x` encodes `x_1` in its least significant bit. This indexing is part of
//! the file format and must not change.

use crate::error::{CoreError, Result};

/// Hard cap on dense truth tables (2^24 entries).
pub const MAX_TABLE_VARS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

impl BooleanFunction {
    pub fn zeros(n: usize) -> Result<Self> {
        if n > MAX_TABLE_VARS {
            return Err(CoreError::SizeLimit(format!(
                "dense truth table with n = {n} exceeds the n <= {MAX_TABLE_VARS} policy"
            )));
        }
        let len = 1usize << n;
        Ok(BooleanFunction {
            n,
            words: vec![0; len.div_ceil(64)],
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(u64) -> bool) -> Result<Self> {
        let mut t = Self::zeros(n)?;
        for x in 0..(1u64 << n) {
            if f(x) {
                t.set(x, true);
            }
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: u64) -> bool {
        debug_assert!(x < (1u64 << self.n));
        (self.words[(x / 64) as usize] >> (x % 64)) & 1 == 1
    }

    pub fn set(&mut self, x: u64, v: bool) {
        let (w, b) = ((x / 64) as usize, x % 64);
        if v {
            self.words[w] |= 1 << b;
        } else {
            self.words[w] &= !(1 << b);
        }
    }

    pub fn is_ever_one(&self) -> bool {
        self.words.iter().any(|w| *w != 0)
    }

    /// Lowercase hex encoding of the table, least significant nibble first
    /// in value (standard big-endian hex string of the table as one integer).
    pub fn to_hex(&self) -> String {
        let nibbles = (1usize << self.n).div_ceil(4);
        let mut s = String::with_capacity(nibbles);
        for i in (0..nibbles).rev() {
            let bit = (i * 4) as u64;
            let word = self.words[(bit / 64) as usize];
            let nib = (word >> (bit % 64)) & 0xf;
            s.push(char::from_digit(nib as u32, 16).unwrap());
        }
        s
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        let mut t = Self::zeros(n)?;
        let nibbles = (1usize << n).div_ceil(4);
        if hex.len() != nibbles {
            return Err(CoreError::Malformed(format!(
                "hex truth table for n = {n} must have {nibbles} digits, got {}",
                hex.len()
            )));
        }
        for (i, c) in hex.chars().rev().enumerate() {
            let nib = c
                .to_digit(16)
                .ok_or_else(|| CoreError::Malformed(format!("bad hex digit `{c}`")))? as u64;
            if i * 4 >= (1usize << n) && nib != 0 {
                return Err(CoreError::Malformed("hex digits beyond table length".into()));
            }
            let bit = (i * 4) as u64;
            t.words[(bit / 64) as usize] |= nib << (bit % 64);
        }
        // mask out any bits above 2^n in a partial top nibble
        let len = 1usize << n;
        if len % 64 != 0 {
            let last = t.words.len() - 1;
            let keep = len % 64;
            if t.words[last] >> keep != 0 {
                return Err(CoreError::Malformed("hex digits beyond table length".into()));
            }
        }
        Ok(t)
    }

    /// Convert to a weight profile; errors if the function is not symmetric.
    pub fn to_profile(&self) -> Result<SymmetricProfile> {
        let mut values: Vec<Option<bool>> = vec![None; self.n + 1];
        for x in 0..(1u64 << self.n) {
            let w = x.count_ones() as usize;
            let v = self.get(x);
            match values[w] {
                None => values[w] = Some(v),
                Some(prev) if prev != v => return Err(CoreError::NotSymmetric { weight: w }),
                _ => {}
            }
        }
        Ok(SymmetricProfile {
            n: self.n,
            bits: values.into_iter().map(|v| v.unwrap()).collect(),
        })
    }
}

/// A symmetric Boolean function given by its value on each Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricProfile {
    n: usize,
    bits: Vec<bool>,
}

impl SymmetricProfile {
    pub fn new(n: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != n + 1 {
            return Err(CoreError::Malformed(format!(
                "profile for n = {n} must have {} bits, got {}",
                n + 1,
                bits.len()
            )));
        }
        Ok(SymmetricProfile { n, bits })
    }

    /// Indicator of Hamming weight exactly `w`.
    pub fn delta(n: usize, w: usize) -> Result<Self> {
        if w > n {
            return Err(CoreError::Malformed(format!("delta weight {w} out of range 0..={n}")));
        }
        Ok(SymmetricProfile {
            n,
            bits: (0..=n).map(|i| i == w).collect(),
        })
    }

    /// Indicator of Hamming weight at least `w` (`w` may be `n + 1`, giving
    /// the all-zeros function).
    pub fn delta_at_least(n: usize, w: usize) -> Result<Self> {
        if w > n + 1 {
            return Err(CoreError::Malformed(format!(
                "threshold weight {w} out of range 0..={}",
                n + 1
            )));
        }
        Ok(SymmetricProfile {
            n,
            bits: (0..=n).map(|i| i >= w).collect(),
        })
    }

    /// Majority: 1 iff `|x| >= n/2`.
    pub fn majority(n: usize) -> Self {
        SymmetricProfile {
            n,
            bits: (0..=n).map(|i| 2 * i >= n).collect(),
        }
    }

    pub fn parity(n: usize) -> Self {
        SymmetricProfile {
            n,
            bits: (0..=n).map(|i| i % 2 == 1).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, weight: usize) -> bool {
        self.bits[weight]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_ever_one(&self) -> bool {
        self.bits.iter().any(|b| *b)
    }

    pub fn to_table(&self) -> Result<BooleanFunction> {
        BooleanFunction::from_fn(self.n, |x| self.bits[x.count_ones() as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_roundtrip() {
        let f = BooleanFunction::from_fn(3, |x| x.count_ones() >= 2).unwrap();
        let hex = f.to_hex();
        assert_eq!(hex.len(), 2);
        let g = BooleanFunction::from_hex(3, &hex).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn profile_conversion() {
        let maj = BooleanFunction::from_fn(3, |x| x.count_ones() >= 2).unwrap();
        let p = maj.to_profile().unwrap();
        assert_eq!(p.bits(), &[false, false, true, true]);
        assert_eq!(p.to_table().unwrap(), maj);
        assert_eq!(p, SymmetricProfile::majority(3));
    }

    #[test]
    fn non_symmetric_rejected() {
        let f = BooleanFunction::from_fn(2, |x| x == 1).unwrap();
        match f.to_profile() {
            Err(CoreError::NotSymmetric { weight: 1 }) => {}
            other => panic!("expected NotSymmetric, got {other:?}"),
        }
    }

    #[test]
    fn table_size_policy() {
        assert!(BooleanFunction::zeros(25).is_err());
    }

    #[test]
    fn delta_and_threshold() {
        let d = SymmetricProfile::delta(4, 2).unwrap();
        assert_eq!(d.bits(), &[false, false, true, false, false]);
        let t = SymmetricProfile::delta_at_least(3, 0).unwrap();
        assert!(t.bits().iter().all(|b| *b));
        let z = SymmetricProfile::delta_at_least(3, 4).unwrap();
        assert!(!z.is_ever_one());
    }
}
