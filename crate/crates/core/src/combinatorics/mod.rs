//! Shapes, permutations and Young subgroups shared by every engine.
//!
//! All group elements act on `{0, .., d-1}` internally; display and parsing
//! use the same 0-based convention except where noted.

mod counting;
mod permutation;
mod shapes;
mod young;

pub use counting::{
    binomial, centralizer_order, factorial, factorial_big, fixed_cosets,
    fixed_cosets_by_cycle_type, fixed_cosets_by_enumeration, is_prime, multinomial,
    words_with_content, ENUMERATION_THRESHOLD,
};
pub use permutation::Permutation;
pub use shapes::{
    compositions_of, partitions_of, skew_tuples_of, tuples_refining, Composition, Partition,
    SkewTuple,
};
pub use young::{column_group, consecutive_conjugate_group, row_group, YoungSubgroup};
