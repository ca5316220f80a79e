//! Insertions and deletions on top of a [`LazySortedArray`].
//!
//! The original items stay in the base array, which keeps sorting itself as
//! usual. Three side structures describe the current list `A'`:
//!
//! - `inserted` (`I`) has one bit per position of `A'`, set where that
//!   position holds a newly inserted item;
//! - `deleted` (`D`) has one bit per slot of the original array, set where
//!   that original item has been deleted;
//! - `tree` (`T`) holds the live inserted items by value, each with its
//!   current position in `A'`.
//!
//! For an original item of rank `s` in the base array, its rank in `A'` is
//! `s - D.rank1(s - 1)` plus the number of inserted items below it.

use crate::array::{LazySortedArray, SearchOutcome};
use crate::dynamic::bitvec::DynamicBitVector;
use crate::dynamic::tree::InsertedItemsTree;
use crate::error::{Error, Result};
use crate::pivot::{AnyPivot, PivotStrategy};

#[derive(Debug, Clone)]
pub struct DynamicOverlay<T, P = AnyPivot> {
    base: LazySortedArray<T, P>,
    inserted: DynamicBitVector,
    deleted: DynamicBitVector,
    tree: InsertedItemsTree<T>,
}

impl<T: Ord + Clone, P: PivotStrategy> DynamicOverlay<T, P> {
    pub fn new(items: Vec<T>, strategy: P) -> Result<Self> {
        Ok(Self::from_base(LazySortedArray::new(items, strategy)?))
    }

    pub fn from_base(base: LazySortedArray<T, P>) -> Self {
        let n = base.len();
        Self {
            base,
            inserted: DynamicBitVector::zeros(n),
            deleted: DynamicBitVector::zeros(n),
            tree: InsertedItemsTree::new(),
        }
    }

    /// Current number of items.
    pub fn len(&self) -> usize {
        self.inserted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn base(&self) -> &LazySortedArray<T, P> {
        &self.base
    }

    pub fn inserted_bits(&self) -> &DynamicBitVector {
        &self.inserted
    }

    pub fn deleted_bits(&self) -> &DynamicBitVector {
        &self.deleted
    }

    pub fn inserted_items(&self) -> &InsertedItemsTree<T> {
        &self.tree
    }

    /// Alive originals strictly below base rank `slot`.
    fn alive_before(&self, slot: usize) -> usize {
        slot - self
            .deleted
            .rank(true, slot as isize - 1)
            .expect("slot is within the base array")
    }

    /// Adds `value`, which must not already be present.
    pub fn insert(&mut self, value: T) -> Result<()> {
        let (below, present) = self.tree.rank_of(&value);
        if present {
            return Err(Error::Duplicate);
        }
        // settles the gap around value in the base array
        let slot = match self.base.search(&value)? {
            SearchOutcome::Found(k) if !self.deleted.get(k)? => return Err(Error::Duplicate),
            SearchOutcome::Found(k) | SearchOutcome::NotFound(k) => k,
        };
        let position = self.alive_before(slot) + below;
        self.tree.shift_from(below, 1);
        self.tree.insert_at(below, value, position);
        self.inserted.insert(true, position)?;
        Ok(())
    }

    /// Removes the item of current rank `i`.
    pub fn delete(&mut self, i: usize) -> Result<()> {
        let len = self.len();
        if i >= len {
            return Err(Error::OutOfRange { index: i, len });
        }
        let inserted_upto = self.inserted.rank(true, i as isize)?;
        if self.inserted.get(i)? {
            let r = inserted_upto - 1;
            self.tree.remove_at(r);
            self.tree.shift_from(r, -1);
        } else {
            let alive_rank = i + 1 - inserted_upto;
            let slot = self.deleted.select(false, alive_rank)?;
            self.deleted.flip(slot)?;
            self.tree.shift_from(inserted_upto, -1);
        }
        self.inserted.delete(i)?;
        Ok(())
    }

    /// Returns the item of current rank `i`.
    pub fn select(&mut self, i: usize) -> Result<&T> {
        let len = self.len();
        if i >= len {
            return Err(Error::OutOfRange { index: i, len });
        }
        if self.inserted.get(i)? {
            let r = self.inserted.rank(true, i as isize)? - 1;
            let (value, _) = self.tree.get(r).expect("I and T agree");
            return Ok(value);
        }
        let alive_rank = self.inserted.rank(false, i as isize)?;
        let slot = self.deleted.select(false, alive_rank)?;
        self.base.select(slot)
    }

    /// Finds `value` in the current list. `NotFound` carries the rank the
    /// value would take if inserted.
    pub fn search(&mut self, value: &T) -> Result<SearchOutcome> {
        let outcome = self.base.search(value)?;
        let (below, in_tree) = self.tree.rank_of(value);
        Ok(match outcome {
            SearchOutcome::Found(k) if !self.deleted.get(k)? => {
                SearchOutcome::Found(self.alive_before(k) + below)
            }
            SearchOutcome::Found(k) | SearchOutcome::NotFound(k) => {
                if in_tree {
                    let (_, position) = self.tree.get(below).expect("rank_of found it");
                    SearchOutcome::Found(position)
                } else {
                    SearchOutcome::NotFound(self.alive_before(k) + below)
                }
            }
        })
    }

    /// Checks that `I`, `D`, `T` and the base array describe one consistent
    /// list.
    pub fn audit(&self) -> bool {
        let n = self.base.len();
        if !self.base.audit_invariant() || self.deleted.len() != n {
            return false;
        }
        if self.inserted.count(true) != self.tree.len()
            || self.len() != n - self.deleted.count(true) + self.tree.len()
        {
            return false;
        }
        let entries = self.tree.entries();
        if entries
            .windows(2)
            .any(|w| w[0].0 >= w[1].0 || w[0].1 >= w[1].1)
        {
            return false;
        }
        entries
            .iter()
            .enumerate()
            .all(|(r, &(_, pos))| self.inserted.select(true, r + 1) == Ok(pos))
    }

    /// Every current item in order. Selects every rank, so the base array
    /// ends up sorted wherever originals are still alive.
    pub fn to_sorted_vec(&mut self) -> Result<Vec<T>> {
        (0..self.len()).map(|i| self.select(i).cloned()).collect()
    }
}
