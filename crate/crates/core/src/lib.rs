//! Neighborly families of boxes, represented as strings over `{0, 1, *}`.
//!
//! A family `F ⊆ S^d` is k-neighborly when every two members conflict
//! (one has 0, the other 1) in at least one and at most `k` coordinates.
//! The crate builds such families, verifies them, bounds the maximum size
//! `n(k, d)` from both sides and computes it exactly for small `(k, d)`.
//!
//! Numeric results are generic over [`Count`]; [`Exact`] and [`BigExact`]
//! are the two instantiations used by the command-line tool.

pub mod biclique;
pub mod bounds;
pub mod constructions;
pub mod count;
pub mod family;
pub mod nbx;
pub mod search;
pub mod strings;

pub use biclique::{BicliqueCover, CoverReport};
pub use bounds::{best_bounds, Bound, BoundMethod, BoundsEntry, GreedyProfile};
pub use constructions::{FragmentPlan, MBarValue, MValue};
pub use count::Count;
pub use family::{Family, FamilyError, NeighborlinessReport};
pub use search::{SearchConfig, SearchResult};
pub use strings::{BinaryString, Symbol, TernaryString};

/// Fast-path exact count, wide enough for `2^d` with `d <= 127`.
pub type Exact = u128;

/// Arbitrary-precision count.
pub type BigExact = num_bigint::BigUint;

pub type ExactBoundsEntry = BoundsEntry<Exact>;
pub type BigBoundsEntry = BoundsEntry<BigExact>;
pub type ExactMValue = MValue<Exact>;
pub type ExactMBarValue = MBarValue<Exact>;
