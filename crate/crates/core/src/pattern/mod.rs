//! Davenport-Schinzel sequence toolkit.

mod contains;
mod extremal;
mod sequence;
mod slow;

use thiserror::Error;

pub use contains::{
    alternation_length, contains_alternation, contains_pattern, contains_pattern_generic,
    find_babba, find_pattern, longest_alternation,
};
pub use extremal::{ex_bruteforce, ExLimits, ExOutcome};
pub use sequence::{
    is_regular, parse_sequence_file, remove_repetitions, write_sequence_file, Symbol,
    SymbolSequence,
};
pub use slow::{alpha, alpha_n, alpha_star, iter_star, log_star};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern {0:?} must be written with letters a-z")]
    BadPattern(String),
    #[error("bad symbol {0:?}")]
    BadSymbol(String),
}
