//! Lex-extension comparison, suffix sorting, and the incremental
//! Burrows-Wheeler transform pipeline.
//!
//! Under plain V-order every suffix of a string precedes every longer suffix,
//! so the plain suffix array is always the reverse-position permutation. The
//! transform therefore sorts suffixes under *lex-extension order* instead:
//! block sequences are compared lexicographically, each block in V-order,
//! with a proper prefix of a block sequence ordering first.
//!
//! Suffix sorting always splits the suffixes on the maximal letter of the
//! containing string, so a suffix that lies past the last occurrence of that
//! letter is read as a single pending block rather than as a self-contained
//! string. This is what ties the suffix order to the rotation order the
//! transform is built on: the rotation wraps the missing maximal letter back
//! in, closing every pending block at the same point.
//!
//! The incremental pipeline factorizes the input into V-words, sorts each
//! factor's suffix starts, and folds the factors together with a two-pointer
//! merge, all in the coordinates of the full string so that every
//! intermediate array is the final array restricted to the processed prefix.

use std::cmp::Ordering;

use crate::compare::compare_v_form;
use crate::error::{Error, Result};
use crate::factor::factorize_with;
use crate::Letter;

/// Compare two nonempty strings in lex-extension order: first by maximal
/// letter, then block sequences lexicographically with blocks compared in
/// V-order; a block sequence that is a proper prefix of the other orders
/// first. Equality holds only for identical strings, and the relation is a
/// strict total order.
///
/// This is the order on whole strings (rotations of a common string in
/// particular). Suffix sorting uses [`lexext_compare_split`] with the
/// containing string's maximal letter instead, which agrees with this
/// comparison whenever both suffixes contain that letter.
pub fn lexext_compare(x: &[Letter], y: &[Letter]) -> Result<Ordering> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyString);
    }
    let gx = *x.iter().max().expect("nonempty");
    let gy = *y.iter().max().expect("nonempty");
    Ok(gx.cmp(&gy).then_with(|| lexext_compare_split(gx, x, y)))
}

/// Lex-extension comparison relative to a reference letter: split both
/// strings into blocks on `g` and compare the block sequences
/// lexicographically, each block in V-order; a block sequence that is a
/// proper prefix of the other orders first.
///
/// This is the comparison that suffix sorting uses, with `g` the maximal
/// letter of the string whose suffixes are being sorted. A suffix lying past
/// the last occurrence of `g` forms a single pending block, so it is
/// compared the way the rotations it stands for would compare.
pub fn lexext_compare_split(g: Letter, x: &[Letter], y: &[Letter]) -> Ordering {
    let mut bx = x.split(|&c| c == g);
    let mut by = y.split(|&c| c == g);
    loop {
        match (bx.next(), by.next()) {
            (Some(a), Some(b)) => match compare_v_form(a, b) {
                Ordering::Equal => continue,
                ord => return ord,
            },
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (None, None) => return Ordering::Equal,
        }
    }
}

/// Which comparison governs a suffix array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaComparison {
    /// Plain V-order: suffixes sort by increasing length.
    VOrder,
    /// Lex-extension order over V-form block sequences.
    LexExt,
}

/// Suffix start positions (1-based), sorted ascending under the tagged
/// comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixArray {
    order: Vec<usize>,
    comparison: SaComparison,
}

impl SuffixArray {
    /// Wrap an externally built order. The caller asserts that `order` is
    /// sorted under the tagged comparison; the merge and transform routines
    /// validate coverage but not sortedness.
    pub fn from_order(order: Vec<usize>, comparison: SaComparison) -> Self {
        SuffixArray { order, comparison }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn comparison(&self) -> SaComparison {
        self.comparison
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Shift every start position by `offset`, e.g. to lift a factor-local
    /// array into whole-string coordinates.
    pub fn shift(&self, offset: usize) -> SuffixArray {
        SuffixArray {
            order: self.order.iter().map(|&p| p + offset).collect(),
            comparison: self.comparison,
        }
    }
}

/// The plain V-order suffix array: always `[n, n-1, ..., 1]`, because each
/// suffix is a proper subsequence of every longer one.
pub fn suffix_array_vorder(x: &[Letter]) -> Result<SuffixArray> {
    if x.is_empty() {
        return Err(Error::EmptyString);
    }
    Ok(SuffixArray { order: (1..=x.len()).rev().collect(), comparison: SaComparison::VOrder })
}

/// Sort the suffix start positions of `x` under lex-extension order, with
/// all suffixes split on the maximal letter of `x`.
pub fn suffix_array_lexext(x: &[Letter]) -> Result<SuffixArray> {
    if x.is_empty() {
        return Err(Error::EmptyString);
    }
    let g = *x.iter().max().expect("nonempty");
    let mut order: Vec<usize> = (1..=x.len()).collect();
    order.sort_by(|&a, &b| lexext_compare_split(g, &x[a - 1..], &x[b - 1..]));
    Ok(SuffixArray { order, comparison: SaComparison::LexExt })
}

/// A Burrows-Wheeler transform: the transformed string and the 1-based rank
/// of the whole string among the sorted suffixes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BwtResult {
    pub transformed: Vec<Letter>,
    pub primary_index: usize,
}

/// Read the transform off a suffix array: the character for the suffix
/// starting at `h` is `x[h-1]`, with the suffix starting at 1 wrapping around
/// to the last letter of `x`.
pub fn bwt_from_sa(x: &[Letter], sa: &SuffixArray) -> Result<BwtResult> {
    let n = x.len();
    if sa.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: sa.len() });
    }
    let mut seen = vec![false; n];
    let mut transformed = Vec::with_capacity(n);
    let mut primary_index = 0;
    for (rank, &h) in sa.order().iter().enumerate() {
        if h == 0 || h > n || seen[h - 1] {
            return Err(Error::SegmentMismatch {
                detail: format!("start positions are not a permutation of 1..={}", n),
            });
        }
        seen[h - 1] = true;
        transformed.push(if h == 1 { x[n - 1] } else { x[h - 2] });
        if h == 1 {
            primary_index = rank + 1;
        }
    }
    Ok(BwtResult { transformed, primary_index })
}

/// Merge two sorted suffix arrays covering adjacent segments of `x` into the
/// sorted array of all their start positions. The left side must cover starts
/// `1..=m` and the right side `m+1..=e` for some `e <= x.len()` (the whole
/// string in the ordinary case). Each side's internal order is reused; every
/// cross comparison evaluates lex-extension order on the full suffixes of
/// `x`, split on the maximal letter of `x`.
pub fn merge_sorted_suffixes(
    left: &SuffixArray,
    right: &SuffixArray,
    x: &[Letter],
) -> Result<SuffixArray> {
    if left.comparison() != SaComparison::LexExt || right.comparison() != SaComparison::LexExt {
        return Err(Error::SegmentMismatch {
            detail: "merge requires lex-extension suffix arrays".to_string(),
        });
    }
    let n = x.len();
    let m = left.len();
    let covered = m + right.len();
    if covered > n {
        return Err(Error::LengthMismatch { expected: n, found: covered });
    }
    check_covers(left.order(), 1, m)?;
    check_covers(right.order(), m + 1, covered)?;
    let g = *x.iter().max().ok_or(Error::EmptyString)?;

    let mut merged = Vec::with_capacity(covered);
    let mut li = 0;
    let mut ri = 0;
    while li < left.len() && ri < right.len() {
        let l = left.order()[li];
        let r = right.order()[ri];
        let ord = lexext_compare_split(g, &x[l - 1..], &x[r - 1..]);
        if ord == Ordering::Less {
            merged.push(l);
            li += 1;
        } else {
            merged.push(r);
            ri += 1;
        }
    }
    merged.extend_from_slice(&left.order()[li..]);
    merged.extend_from_slice(&right.order()[ri..]);
    Ok(SuffixArray { order: merged, comparison: SaComparison::LexExt })
}

fn check_covers(order: &[usize], lo: usize, hi: usize) -> Result<()> {
    let mut seen = vec![false; hi + 1 - lo];
    for &p in order {
        if p < lo || p > hi || seen[p - lo] {
            return Err(Error::SegmentMismatch {
                detail: format!("start positions do not cover {}..={} exactly once", lo, hi),
            });
        }
        seen[p - lo] = true;
    }
    Ok(())
}

/// Incremental transform: factorize into V-words, sort each factor's suffix
/// starts, and fold the factors into a running suffix array with successive
/// merges, reading the transform characters off the array after each step.
///
/// All sorting happens in the coordinates of the full string — factor starts
/// are ordered by their whole-string suffixes — so the running array after
/// each merge is the final array restricted to the processed prefix, and the
/// final result equals the direct pipeline
/// `bwt_from_sa(x, suffix_array_lexext(x))`. Sorting a factor's suffixes in
/// isolation agrees with this whenever no later factor carries a larger
/// maximal letter (over a binary alphabet, always); sorting in full-string
/// coordinates keeps the merge sound in the remaining cases too.
pub fn bwt_incremental(x: &[Letter]) -> Result<BwtResult> {
    bwt_incremental_with(x, |_, _, _| {})
}

/// [`bwt_incremental`] with a progress callback invoked after each factor is
/// folded in: `(factor_index, factor, transform_of_prefix)`. The emitted
/// transform covers the prefix processed so far, in final suffix order.
pub fn bwt_incremental_with(
    x: &[Letter],
    mut progress: impl FnMut(usize, &[Letter], &BwtResult),
) -> Result<BwtResult> {
    if x.is_empty() {
        return Err(Error::EmptyString);
    }
    let g = *x.iter().max().expect("nonempty");
    let mut running: Option<SuffixArray> = None;
    let mut factor_index = 0;
    let mut last = None;
    factorize_with(x, |factor, end| {
        factor_index += 1;
        let start = end - factor.len();
        // Factor starts sorted by their full suffixes of x.
        let mut starts: Vec<usize> = (start + 1..=end).collect();
        starts.sort_by(|&a, &b| lexext_compare_split(g, &x[a - 1..], &x[b - 1..]));
        let factor_sa = SuffixArray { order: starts, comparison: SaComparison::LexExt };
        let sa = match running.take() {
            None => factor_sa,
            Some(left) => merge_sorted_suffixes(&left, &factor_sa, x)
                .expect("segments are adjacent by construction"),
        };
        let bwt = bwt_from_sa(&x[..end], &sa).expect("merged array covers the prefix");
        progress(factor_index, factor, &bwt);
        running = Some(sa);
        last = Some(bwt);
    })?;
    Ok(last.expect("nonempty input yields at least one factor"))
}

/// True iff every pair of suffixes of `u = factors i..=j of x` orders the
/// same way, under lex-extension suffix comparison, inside `u` as the
/// corresponding full suffixes of `x` do. Factor indices are 1-based.
///
/// Compatibility can fail when a factor after `j` carries a maximal letter
/// larger than every letter of `u`: the larger letter fuses the pending
/// blocks of `u`'s suffixes. Over a binary alphabet that situation cannot
/// arise (the only factor with maximal letter 1 is the single letter 1), so
/// compatibility always holds there.
pub fn compatibility_check(x: &[Letter], i: usize, j: usize) -> Result<bool> {
    let factorization = crate::factor::factorize(x)?;
    let count = factorization.len();
    if i < 1 || i > j || j > count {
        return Err(Error::FactorRange { i, j, count });
    }
    let u_start = if i == 1 { 0 } else { factorization.ends()[i - 2] };
    let u_end = factorization.ends()[j - 1];
    let u = &x[u_start..u_end];
    let gu = *u.iter().max().expect("factors are nonempty");
    let gx = *x.iter().max().expect("nonempty");
    for a in 0..u.len() {
        for b in a + 1..u.len() {
            let inner = lexext_compare_split(gu, &u[a..], &u[b..]);
            let outer = lexext_compare_split(gx, &x[u_start + a..], &x[u_start + b..]);
            if inner != outer {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
