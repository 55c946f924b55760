//! V-word recognition and factorization.
//!
//! A V-word is a primitive string that is the strict V-order minimum of its
//! conjugacy class — the analogue of a Lyndon word under V-order. Every string
//! factors uniquely into a maximal sequence of V-words; the factorizer here is
//! the greedy one: repeatedly emit the longest V-word prefix of what remains.
//! Each factor is reported through a callback as soon as it is identified,
//! together with its 1-based rightmost position.

use std::cmp::Ordering;

use crate::compare::compare_v_form;
use crate::error::{Error, Result};
use crate::vform::decompose;
use crate::Letter;

/// True iff `w` precedes every other rotation of itself in V-order, which
/// makes it a V-word (and in particular primitive: a repetition ties with the
/// rotation by its period).
pub fn is_v_word(w: &[Letter]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyString);
    }
    let n = w.len();
    let mut rotation = Vec::with_capacity(n);
    for split in 1..n {
        rotation.clear();
        rotation.extend_from_slice(&w[split..]);
        rotation.extend_from_slice(&w[..split]);
        if compare_v_form(w, &rotation) != Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A factorization of a string into V-words. Adjacent factors never
/// concatenate into a V-word, which is what makes the decomposition maximal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<Vec<Letter>>,
    ends: Vec<usize>,
}

impl Factorization {
    pub fn factors(&self) -> &[Vec<Letter>] {
        &self.factors
    }

    /// 1-based rightmost positions, strictly increasing; the last one equals
    /// the source length.
    pub fn ends(&self) -> &[usize] {
        &self.ends
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn reassemble(&self) -> Vec<Letter> {
        self.factors.iter().flatten().copied().collect()
    }
}

/// Greedy V-word factorization of `x`, emitting `(factor, end)` through the
/// callback as each factor is identified. `end` is the factor's 1-based
/// rightmost position in `x`.
pub fn factorize_with(x: &[Letter], mut emit: impl FnMut(&[Letter], usize)) -> Result<()> {
    if x.is_empty() {
        return Err(Error::EmptyString);
    }
    let mut pos = 0;
    while pos < x.len() {
        let rest = &x[pos..];
        // Longest V-word prefix; single letters always qualify.
        let mut len = rest.len();
        while len > 1 && !is_v_word(&rest[..len]).expect("nonempty") {
            len -= 1;
        }
        emit(&rest[..len], pos + len);
        pos += len;
    }
    Ok(())
}

/// Greedy V-word factorization of `x`.
pub fn factorize(x: &[Letter]) -> Result<Factorization> {
    let mut factors = Vec::new();
    let mut ends = Vec::new();
    factorize_with(x, |factor, end| {
        factors.push(factor.to_vec());
        ends.push(end);
    })?;
    Ok(Factorization { factors, ends })
}

/// Which comparison condition governs a pair of candidate factors, with the
/// consequence the factorization algorithm draws from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorCase {
    /// The maximal letters differ: a factor boundary.
    MaxLetterDiffers,
    /// Equal maximal letters, differing counts: the boundary is decided by
    /// whether the concatenation is a Lyndon word under lex-extension order
    /// (a Hybrid Lyndon).
    CountDiffers,
    /// Equal maximal letters and counts, differing blocks: the boundary is
    /// decided by comparing the substrings between maximal letters.
    BlocksDiffer,
    /// The strings are identical letter for letter.
    Equal,
}

impl FactorCase {
    /// Human-readable consequence for tracing output.
    pub fn consequence(self) -> &'static str {
        match self {
            FactorCase::MaxLetterDiffers => "factor boundary",
            FactorCase::CountDiffers => "boundary decided by concatenation (Hybrid Lyndon) test",
            FactorCase::BlocksDiffer => "boundary decided by block comparison",
            FactorCase::Equal => "identical factors",
        }
    }
}

/// Diagnostic classifier for a pair of nonempty candidate factors: reports
/// which condition first separates them. Not the normative factorizer; used
/// for tracing and cross-checks.
///
/// # Panics
///
/// Panics if either string is empty.
pub fn vf_case(xi: &[Letter], xj: &[Letter]) -> FactorCase {
    assert!(!xi.is_empty() && !xj.is_empty(), "vf_case requires nonempty strings");
    if xi == xj {
        return FactorCase::Equal;
    }
    let vi = decompose(xi);
    let vj = decompose(xj);
    if vi.max_letter() != vj.max_letter() {
        FactorCase::MaxLetterDiffers
    } else if vi.count() != vj.count() {
        FactorCase::CountDiffers
    } else {
        FactorCase::BlocksDiffer
    }
}
