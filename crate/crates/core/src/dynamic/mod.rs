//! Dynamic extension: insertions and deletions over a self-sorting array.

pub mod bitvec;
pub mod overlay;
pub mod tree;

pub use bitvec::DynamicBitVector;
pub use overlay::DynamicOverlay;
pub use tree::InsertedItemsTree;
