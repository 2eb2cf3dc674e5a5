//! Alphabets, words, and compositions.

pub mod alphabet;
pub mod composition;
pub mod word;

pub use alphabet::{
    bracket_sequence, partitions_of, validate_alphabet, Alphabet, Letter, ValidationReport,
    Violation,
};
pub use composition::{
    act, coarsenings, compose, compositions, refinements, refines, Composition,
};
pub use word::{
    is_lyndon, lyndon_count, lyndon_factorization, lyndon_words, words_of_degree,
    words_up_to_degree, Word,
};
