//! Strings under V-order: comparison, factorization into V-words, lex-extension
//! suffix sorting, and an incremental Burrows-Wheeler transform built on top.
//!
//! V-order is a non-lexicographic total order on strings. It is defined through
//! repeated deletion of the letter at a canonical position (the "star" deletion),
//! and admits an equivalent recursive characterization through the V-form
//! decomposition `x = x0 g x1 g ... g xk`, where `g` is the largest letter of `x`
//! and the blocks `xi` are free of `g`.
//!
//! Letters are `u32` ranks; any totally ordered alphabet can be mapped onto ranks
//! with [`Alphabet::bind`]. Algorithms operate on plain `&[Letter]` slices, so
//! integer-valued test strings can be written directly. All positions reported by
//! this crate are 1-based.

pub mod alphabet;
pub mod compare;
pub mod error;
pub mod factor;
pub mod stream;
pub mod suffix;
pub mod vform;

pub use alphabet::{Alphabet, Symbol};
pub use compare::{
    compare_input_sensitive, compare_input_sensitive_report, compare_star_oracle, compare_v_form,
    compare_v_form_counting, star_delete, star_path, subsequence_precedes, InputSensitiveReport,
    StarPath,
};
pub use error::{Error, Result};
pub use factor::{factorize, factorize_with, is_v_word, vf_case, FactorCase, Factorization};
pub use stream::{compare_prefix_stream, compare_suffix_stream, PrefixStream, SuffixStream};
pub use suffix::{
    bwt_from_sa, bwt_incremental, bwt_incremental_with, compatibility_check, lexext_compare,
    lexext_compare_split, merge_sorted_suffixes, suffix_array_lexext, suffix_array_vorder,
    BwtResult, SaComparison, SuffixArray,
};
pub use vform::{v_form, VForm};

/// A letter: the rank of a symbol in its alphabet. Only the relative order of
/// letters matters to the algorithms, so ranks need not be contiguous.
pub type Letter = u32;
