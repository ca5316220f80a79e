//! Binary dump of `(A, B)` for fixtures.
//!
//! Layout, all little-endian:
//!
//! | bytes            | content                                   |
//! | ---------------- | ----------------------------------------- |
//! | 8                | `n`, the item count, as `u64`             |
//! | `8 * n`          | the items in array order, 64 bits each    |
//! | `8 * ceil(n/64)` | marker words; bit `i` is bit `i % 64` of word `i / 64` |
//!
//! Counters and the pivot rule are not stored.

use std::io::{Read, Write};

use crate::array::LazySortedArray;
use crate::error::{Error, Result};
use crate::marker::MarkerBitVector;
use crate::pivot::PivotStrategy;

/// Items with a fixed 64-bit little-endian encoding.
pub trait DumpItem: Sized {
    fn to_le(&self) -> [u8; 8];
    fn from_le(bytes: [u8; 8]) -> Self;
}

impl DumpItem for u64 {
    fn to_le(&self) -> [u8; 8] {
        self.to_le_bytes()
    }
    fn from_le(bytes: [u8; 8]) -> Self {
        u64::from_le_bytes(bytes)
    }
}

impl DumpItem for i64 {
    fn to_le(&self) -> [u8; 8] {
        self.to_le_bytes()
    }
    fn from_le(bytes: [u8; 8]) -> Self {
        i64::from_le_bytes(bytes)
    }
}

fn read_word<R: Read>(r: &mut R) -> Result<[u8; 8]> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf).map_err(|e| match e.kind() {
        std::io::ErrorKind::UnexpectedEof => Error::Corrupt("truncated dump"),
        _ => Error::from(e),
    })?;
    Ok(buf)
}

impl<T: DumpItem + Ord, P: PivotStrategy> LazySortedArray<T, P> {
    pub fn write_dump<W: Write>(&self, w: &mut W) -> Result<()> {
        w.write_all(&(self.len() as u64).to_le_bytes())?;
        for item in self.items() {
            w.write_all(&item.to_le())?;
        }
        for word in self.markers().words() {
            w.write_all(&word.to_le_bytes())?;
        }
        Ok(())
    }

    /// Reads a dump written by [`write_dump`](Self::write_dump). The state
    /// is taken as-is; counters start at zero.
    pub fn read_dump<R: Read>(r: &mut R, strategy: P) -> Result<Self> {
        let n = usize::try_from(u64::from_le_bytes(read_word(r)?))
            .map_err(|_| Error::Corrupt("length does not fit in memory"))?;
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let items = (0..n)
            .map(|_| read_word(r).map(T::from_le))
            .collect::<Result<Vec<_>>>()?;
        let words = (0..n.div_ceil(64))
            .map(|_| read_word(r).map(u64::from_le_bytes))
            .collect::<Result<Vec<_>>>()?;
        let markers = MarkerBitVector::from_words(words, n)?;
        Self::from_parts(items, markers, strategy)
    }
}
