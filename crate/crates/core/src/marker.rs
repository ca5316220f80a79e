//! Fixed-length bitvector marking settled pivot positions.
//!
//! Bits only ever go from 0 to 1; there is no clear operation. The nearest
//! set bit on either side of a position is found by scanning a word at a
//! time, so a scan costs `O(gap / 64)` word reads.

use crate::error::{Error, Result, Side};

const WORD: usize = u64::BITS as usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerBitVector {
    words: Vec<u64>,
    len: usize,
}

impl MarkerBitVector {
    /// Creates `n` cleared bits.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        Ok(Self {
            words: vec![0; n.div_ceil(WORD)],
            len: n,
        })
    }

    /// Rebuilds a vector from packed words, least significant bit first.
    /// Bits past `len` in the final word must be zero.
    pub fn from_words(words: Vec<u64>, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyInput);
        }
        if words.len() != len.div_ceil(WORD) {
            return Err(Error::Corrupt("word count does not match bit length"));
        }
        let tail = len % WORD;
        if tail != 0 && words[words.len() - 1] >> tail != 0 {
            return Err(Error::Corrupt("bits set past the end"));
        }
        Ok(Self { words, len })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; a marker vector has at least one position.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn all_set(&self) -> bool {
        self.count_ones() == self.len
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    pub fn get(&self, i: usize) -> Result<bool> {
        self.check(i)?;
        Ok(self.get_unchecked(i))
    }

    pub fn set(&mut self, i: usize) -> Result<()> {
        self.check(i)?;
        self.set_unchecked(i);
        Ok(())
    }

    /// Greatest set position strictly less than `k`.
    pub fn prev_one_before(&self, k: usize) -> Result<usize> {
        self.check(k)?;
        let missing = Error::NoSetBit {
            side: Side::Left,
            index: k,
        };
        if k == 0 {
            return Err(missing);
        }
        let last = k - 1;
        let mut wi = last / WORD;
        let keep = last % WORD;
        // bits 0..=keep of the first word
        let mut word = self.words[wi] & (u64::MAX >> (WORD - 1 - keep));
        loop {
            if word != 0 {
                return Ok(wi * WORD + (WORD - 1 - word.leading_zeros() as usize));
            }
            if wi == 0 {
                return Err(missing);
            }
            wi -= 1;
            word = self.words[wi];
        }
    }

    /// Least set position strictly greater than `k`.
    pub fn next_one_after(&self, k: usize) -> Result<usize> {
        self.check(k)?;
        let missing = Error::NoSetBit {
            side: Side::Right,
            index: k,
        };
        let first = k + 1;
        if first >= self.len {
            return Err(missing);
        }
        let mut wi = first / WORD;
        let mut word = self.words[wi] & (u64::MAX << (first % WORD));
        loop {
            if word != 0 {
                return Ok(wi * WORD + word.trailing_zeros() as usize);
            }
            wi += 1;
            if wi == self.words.len() {
                return Err(missing);
            }
            word = self.words[wi];
        }
    }

    #[inline]
    pub(crate) fn get_unchecked(&self, i: usize) -> bool {
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    /// Sets bit `i`, returning true if it was previously clear.
    #[inline]
    pub(crate) fn set_unchecked(&mut self, i: usize) -> bool {
        let w = &mut self.words[i / WORD];
        let mask = 1u64 << (i % WORD);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    #[inline]
    fn check(&self, i: usize) -> Result<()> {
        if i < self.len {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                index: i,
                len: self.len,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_str(bits: &str) -> MarkerBitVector {
        let mut bv = MarkerBitVector::new(bits.len()).unwrap();
        for (i, c) in bits.chars().enumerate() {
            if c == '1' {
                bv.set(i).unwrap();
            }
        }
        bv
    }

    fn to_str(bv: &MarkerBitVector) -> String {
        (0..bv.len())
            .map(|i| if bv.get(i).unwrap() { '1' } else { '0' })
            .collect()
    }

    #[test]
    fn new_is_cleared() {
        assert_eq!(to_str(&MarkerBitVector::new(4).unwrap()), "0000");
        assert_eq!(to_str(&MarkerBitVector::new(1).unwrap()), "0");
        assert!(!MarkerBitVector::new(8).unwrap().get(7).unwrap());
        assert_eq!(MarkerBitVector::new(0), Err(Error::EmptyInput));
    }

    #[test]
    fn set_single_and_idempotent() {
        let mut bv = MarkerBitVector::new(4).unwrap();
        bv.set(2).unwrap();
        assert_eq!(to_str(&bv), "0010");
        bv.set(2).unwrap();
        assert_eq!(to_str(&bv), "0010");

        let mut bv = MarkerBitVector::new(3).unwrap();
        bv.set(0).unwrap();
        bv.set(2).unwrap();
        assert_eq!(to_str(&bv), "101");
    }

    #[test]
    fn out_of_range() {
        let mut bv = MarkerBitVector::new(3).unwrap();
        assert_eq!(bv.set(3), Err(Error::OutOfRange { index: 3, len: 3 }));
        assert!(bv.get(5).is_err());
        assert!(bv.prev_one_before(3).is_err());
    }

    #[test]
    fn get_reads_bits() {
        let bv = from_str("101");
        assert!(!bv.get(1).unwrap());
        assert!(bv.get(0).unwrap());
        assert!(bv.get(2).unwrap());
    }

    #[test]
    fn scans() {
        let bv = from_str("10010");
        assert_eq!(bv.prev_one_before(4).unwrap(), 3);
        assert_eq!(bv.prev_one_before(2).unwrap(), 0);
        assert_eq!(bv.next_one_after(0).unwrap(), 3);
        assert_eq!(from_str("11111").prev_one_before(3).unwrap(), 2);
        assert_eq!(from_str("10011").next_one_after(3).unwrap(), 4);
        assert_eq!(from_str("101").next_one_after(1).unwrap(), 2);
    }

    #[test]
    fn scans_report_missing_bits() {
        let bv = from_str("0100");
        assert!(matches!(
            bv.prev_one_before(1),
            Err(Error::NoSetBit {
                side: Side::Left,
                ..
            })
        ));
        assert!(matches!(
            bv.next_one_after(1),
            Err(Error::NoSetBit {
                side: Side::Right,
                ..
            })
        ));
        assert!(bv.prev_one_before(0).is_err());
        assert!(bv.next_one_after(3).is_err());
    }

    #[test]
    fn scans_cross_word_boundaries() {
        let mut bv = MarkerBitVector::new(300).unwrap();
        bv.set(3).unwrap();
        bv.set(64).unwrap();
        bv.set(299).unwrap();
        assert_eq!(bv.next_one_after(3).unwrap(), 64);
        assert_eq!(bv.next_one_after(64).unwrap(), 299);
        assert_eq!(bv.prev_one_before(299).unwrap(), 64);
        assert_eq!(bv.prev_one_before(64).unwrap(), 3);
        assert_eq!(bv.prev_one_before(65).unwrap(), 64);
        assert_eq!(bv.iter_ones().collect::<Vec<_>>(), vec![3, 64, 299]);
        assert_eq!(bv.count_ones(), 3);
    }

    #[test]
    fn from_words_validates() {
        assert!(MarkerBitVector::from_words(vec![0b1000], 3).is_err());
        assert!(MarkerBitVector::from_words(vec![0, 0], 3).is_err());
        let bv = MarkerBitVector::from_words(vec![0b101], 3).unwrap();
        assert_eq!(to_str(&bv), "101");
    }
}
