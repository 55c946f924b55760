//! V-form decomposition: `x = x0 g x1 g ... g xk`, where `g` is the largest
//! letter of `x`, occurring exactly `k` times, and no block contains `g`.

use crate::error::{Error, Result};
use crate::Letter;

/// The V-form of a nonempty string. Blocks are the maximal runs free of the
/// maximal letter, including empty runs at the ends and between adjacent
/// occurrences, so there are always `count + 1` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VForm<'a> {
    max_letter: Letter,
    blocks: Vec<&'a [Letter]>,
    source_len: usize,
}

impl<'a> VForm<'a> {
    /// The maximal letter `g` of the source string.
    pub fn max_letter(&self) -> Letter {
        self.max_letter
    }

    /// Number of occurrences of the maximal letter.
    pub fn count(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn blocks(&self) -> &[&'a [Letter]] {
        &self.blocks
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    /// Rebuild the source string from the decomposition.
    pub fn reassemble(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.source_len);
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                out.push(self.max_letter);
            }
            out.extend_from_slice(block);
        }
        out
    }
}

/// Compute the V-form of `x`.
pub fn v_form(x: &[Letter]) -> Result<VForm<'_>> {
    if x.is_empty() {
        return Err(Error::EmptyString);
    }
    Ok(decompose(x))
}

/// V-form of a string known to be nonempty.
pub(crate) fn decompose(x: &[Letter]) -> VForm<'_> {
    debug_assert!(!x.is_empty());
    let g = *x.iter().max().expect("nonempty");
    VForm { max_letter: g, blocks: x.split(|&c| c == g).collect(), source_len: x.len() }
}
