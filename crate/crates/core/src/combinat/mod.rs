//! Index species and the orders on them.

mod composition;
pub mod enumerate;
mod formal_sum;
mod order;
mod permutation;

pub use composition::{Partition, StrongComposition, WeakComposition};
pub use formal_sum::FormalSum;
pub use order::{
    dominance_leq, lswap_closure, qlswap, refines, sorting_data, term_order_compare, SortingData,
    TermOrder,
};
pub use permutation::{
    bruhat_leq, canonical_reduced_word, code_to_permutation, code_to_permutation_in, lehmer_code,
    reduced_words, rothe_diagram, Permutation,
};
