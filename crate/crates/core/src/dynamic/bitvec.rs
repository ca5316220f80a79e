//! Growable bit sequence with rank, select, insert, delete and flip.
//!
//! Bits live in a list of packed blocks of roughly `sqrt(n)` bits, each
//! carrying its own length and popcount. Locating a position walks the
//! block list and then works inside a single block, so every operation is
//! `O(sqrt(n))` word operations.

use crate::error::{Error, Result};

const WORD: usize = u64::BITS as usize;
const MIN_BLOCK_BITS: usize = 256;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Block {
    words: Vec<u64>,
    len: usize,
    ones: usize,
}

impl Block {
    fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
            len,
            ones: 0,
        }
    }

    fn get(&self, p: usize) -> bool {
        self.words[p / WORD] >> (p % WORD) & 1 == 1
    }

    fn count(&self, bit: bool) -> usize {
        if bit {
            self.ones
        } else {
            self.len - self.ones
        }
    }

    /// Ones in positions `0..end`.
    fn ones_before(&self, end: usize) -> usize {
        let full = end / WORD;
        let mut n: usize = self.words[..full]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum();
        let rest = end % WORD;
        if rest != 0 {
            n += (self.words[full] & ((1u64 << rest) - 1)).count_ones() as usize;
        }
        n
    }

    /// Position of the `j`-th (1-based) `bit` in this block.
    fn select(&self, bit: bool, mut j: usize) -> usize {
        for (wi, &raw) in self.words.iter().enumerate() {
            let mut w = if bit { raw } else { !raw };
            let valid = (self.len - wi * WORD).min(WORD);
            if valid < WORD {
                w &= (1u64 << valid) - 1;
            }
            let c = w.count_ones() as usize;
            if j <= c {
                for _ in 1..j {
                    w &= w - 1;
                }
                return wi * WORD + w.trailing_zeros() as usize;
            }
            j -= c;
        }
        unreachable!("occurrence checked by caller")
    }

    fn insert(&mut self, p: usize, bit: bool) {
        if self.len.is_multiple_of(WORD) {
            self.words.push(0);
        }
        let (wi, off) = (p / WORD, p % WORD);
        let low_mask = (1u64 << off) - 1;
        let word = self.words[wi];
        let mut carry = word >> (WORD - 1);
        self.words[wi] = (word & low_mask) | ((word & !low_mask) << 1) | ((bit as u64) << off);
        for w in &mut self.words[wi + 1..] {
            let next = *w >> (WORD - 1);
            *w = (*w << 1) | carry;
            carry = next;
        }
        self.len += 1;
        self.ones += bit as usize;
    }

    fn remove(&mut self, p: usize) -> bool {
        let bit = self.get(p);
        let (wi, off) = (p / WORD, p % WORD);
        let low_mask = (1u64 << off) - 1;
        let word = self.words[wi];
        let high = word.checked_shr(off as u32 + 1).unwrap_or(0) << off;
        self.words[wi] = (word & low_mask) | high;
        for k in wi..self.words.len() - 1 {
            let pulled = self.words[k + 1] & 1;
            self.words[k] |= pulled << (WORD - 1);
            self.words[k + 1] >>= 1;
        }
        self.len -= 1;
        if self.len.is_multiple_of(WORD) {
            self.words.pop();
        }
        self.ones -= bit as usize;
        bit
    }

    fn flip(&mut self, p: usize) -> bool {
        let w = &mut self.words[p / WORD];
        *w ^= 1u64 << (p % WORD);
        let now = *w >> (p % WORD) & 1 == 1;
        if now {
            self.ones += 1;
        } else {
            self.ones -= 1;
        }
        now
    }

    fn split_off(&mut self, at: usize) -> Block {
        let mut tail = Block::default();
        for p in at..self.len {
            tail.insert(tail.len, self.get(p));
        }
        while self.len > at {
            self.remove(self.len - 1);
        }
        tail
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicBitVector {
    blocks: Vec<Block>,
    len: usize,
    ones: usize,
    block_bits: usize,
}

impl Default for DynamicBitVector {
    fn default() -> Self {
        Self::zeros(0)
    }
}

impl DynamicBitVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` zero bits. Block size is tuned for sequences that stay near `n`.
    pub fn zeros(n: usize) -> Self {
        let block_bits = ((n as f64).sqrt() as usize)
            .next_multiple_of(WORD)
            .max(MIN_BLOCK_BITS);
        let mut blocks: Vec<Block> = (0..n / block_bits)
            .map(|_| Block::zeros(block_bits))
            .collect();
        if !n.is_multiple_of(block_bits) || blocks.is_empty() {
            blocks.push(Block::zeros(n % block_bits));
        }
        Self {
            blocks,
            len: n,
            ones: 0,
            block_bits,
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut bv = Self::new();
        for b in bits {
            bv.push(b);
        }
        bv
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count(&self, bit: bool) -> usize {
        if bit {
            self.ones
        } else {
            self.len - self.ones
        }
    }

    pub fn push(&mut self, bit: bool) {
        self.insert(bit, self.len)
            .expect("end position is always valid");
    }

    pub fn get(&self, i: usize) -> Result<bool> {
        let (b, p) = self.locate(i)?;
        Ok(self.blocks[b].get(p))
    }

    /// Number of `bit` values in positions `0..=i`. `i = -1` gives 0.
    pub fn rank(&self, bit: bool, i: isize) -> Result<usize> {
        if i < 0 {
            return Ok(0);
        }
        let i = i as usize;
        if i >= self.len {
            return Err(Error::OutOfRange {
                index: i,
                len: self.len,
            });
        }
        let end = i + 1;
        let ones = self.ones_before(end);
        Ok(if bit { ones } else { end - ones })
    }

    /// Position of the `j`-th `bit` value, counting from 1.
    pub fn select(&self, bit: bool, j: usize) -> Result<usize> {
        let count = self.count(bit);
        if j == 0 || j > count {
            return Err(Error::NoSuchOccurrence {
                bit: bit as u8,
                occurrence: j,
                count,
            });
        }
        let mut rest = j;
        let mut base = 0;
        for block in &self.blocks {
            let c = block.count(bit);
            if rest <= c {
                return Ok(base + block.select(bit, rest));
            }
            rest -= c;
            base += block.len;
        }
        unreachable!("occurrence count is consistent with blocks")
    }

    /// Inserts `bit` so that it ends up at position `i`; `i <= len`.
    pub fn insert(&mut self, bit: bool, i: usize) -> Result<()> {
        if i > self.len {
            return Err(Error::OutOfRange {
                index: i,
                len: self.len,
            });
        }
        let (b, p) = self.locate_insert(i);
        self.blocks[b].insert(p, bit);
        self.len += 1;
        self.ones += bit as usize;
        if self.blocks[b].len > 2 * self.block_bits {
            let half = self.blocks[b].len / 2;
            let tail = self.blocks[b].split_off(half);
            self.blocks.insert(b + 1, tail);
        }
        Ok(())
    }

    /// Removes position `i`, returning its bit.
    pub fn delete(&mut self, i: usize) -> Result<bool> {
        let (b, p) = self.locate(i)?;
        let bit = self.blocks[b].remove(p);
        self.len -= 1;
        self.ones -= bit as usize;
        if self.blocks[b].len == 0 && self.blocks.len() > 1 {
            self.blocks.remove(b);
        }
        Ok(bit)
    }

    /// Inverts position `i`, returning the new bit.
    pub fn flip(&mut self, i: usize) -> Result<bool> {
        let (b, p) = self.locate(i)?;
        let now = self.blocks[b].flip(p);
        if now {
            self.ones += 1;
        } else {
            self.ones -= 1;
        }
        Ok(now)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.blocks
            .iter()
            .flat_map(|blk| (0..blk.len).map(move |p| blk.get(p)))
    }

    fn ones_before(&self, end: usize) -> usize {
        let mut rest = end;
        let mut ones = 0;
        for block in &self.blocks {
            if rest <= block.len {
                return ones + block.ones_before(rest);
            }
            rest -= block.len;
            ones += block.ones;
        }
        ones
    }

    fn locate(&self, i: usize) -> Result<(usize, usize)> {
        if i >= self.len {
            return Err(Error::OutOfRange {
                index: i,
                len: self.len,
            });
        }
        let mut rest = i;
        for (b, block) in self.blocks.iter().enumerate() {
            if rest < block.len {
                return Ok((b, rest));
            }
            rest -= block.len;
        }
        unreachable!("length is consistent with blocks")
    }

    fn locate_insert(&self, i: usize) -> (usize, usize) {
        let mut rest = i;
        for (b, block) in self.blocks.iter().enumerate() {
            if rest <= block.len {
                return (b, rest);
            }
            rest -= block.len;
        }
        unreachable!("length is consistent with blocks")
    }
}
