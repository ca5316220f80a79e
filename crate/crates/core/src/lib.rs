//! Online selection and search over an unsorted array.
//!
//! A [`LazySortedArray`] answers "which item has rank k" and "where is value
//! a" without sorting up front. Each query runs quickselect in the single
//! unsettled gap that can hold its answer and records every pivot it places
//! in a [`MarkerBitVector`], so the array becomes progressively sorted and
//! repeated queries get cheap. The pivot rule is pluggable (see [`pivot`]),
//! and [`DynamicOverlay`] adds insertions and deletions on top.
//!
//! ```
//! use lazysort::{LazySortedArray, SearchOutcome, pivot::LastElement};
//!
//! let mut a = LazySortedArray::new(vec![40, 10, 50, 30, 20], LastElement).unwrap();
//! assert_eq!(*a.select(2).unwrap(), 30);
//! assert_eq!(a.search(&35).unwrap(), SearchOutcome::NotFound(3));
//! assert!(a.audit_invariant());
//! ```

pub mod array;
pub mod dump;
pub mod dynamic;
pub mod error;
pub mod marker;
pub mod meter;
pub mod partition;
pub mod pivot;

pub use array::{Interpolate, LazySortedArray, ProbeRule, QueryStats, SearchOutcome};
pub use dump::DumpItem;
pub use dynamic::{DynamicBitVector, DynamicOverlay, InsertedItemsTree};
pub use error::{Error, Result};
pub use marker::MarkerBitVector;
pub use meter::Meter;
pub use partition::partition;
pub use pivot::{AnyPivot, PivotKind, PivotStrategy};
