//! String comparison in V-order.
//!
//! Three of the four comparison routes live here: the star-tree oracle working
//! directly from the definition, the recursive V-form comparator, and the
//! input-sensitive scan. The fourth route, built on the streaming order
//! maintenance, lives in [`crate::stream`]. All routes return the same result
//! on every input; the test suites cross-validate them exhaustively and on
//! random sweeps.
//!
//! The empty string precedes every nonempty string: it lies on every star
//! path.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::vform::decompose;
use crate::Letter;

/// 0-based index of the letter removed by one star deletion: the start of the
/// maximal nondecreasing suffix, which is 0 exactly when the whole string is
/// nondecreasing.
fn star_index(x: &[Letter]) -> usize {
    debug_assert!(!x.is_empty());
    let mut h = x.len() - 1;
    while h > 0 && x[h - 1] <= x[h] {
        h -= 1;
    }
    h
}

/// Remove the letter at the canonical deletion position.
pub fn star_delete(x: &[Letter]) -> Result<Vec<Letter>> {
    if x.is_empty() {
        return Err(Error::EmptyString);
    }
    let h = star_index(x);
    let mut out = Vec::with_capacity(x.len() - 1);
    out.extend_from_slice(&x[..h]);
    out.extend_from_slice(&x[h + 1..]);
    Ok(out)
}

/// The deletion path `x, x*, x**, ..., ε` together with the 1-based position
/// removed at each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPath {
    states: Vec<Vec<Letter>>,
    deleted_positions: Vec<usize>,
}

impl StarPath {
    /// Successive states, starting from the source string and ending at the
    /// empty string. Each state is one letter shorter than its predecessor.
    pub fn states(&self) -> &[Vec<Letter>] {
        &self.states
    }

    /// 1-based position deleted at each step; one entry per edge of the path.
    pub fn deleted_positions(&self) -> &[usize] {
        &self.deleted_positions
    }
}

/// Compute the full star path of `x`. The path of the empty string is the
/// single state `ε`.
pub fn star_path(x: &[Letter]) -> StarPath {
    let mut states = Vec::with_capacity(x.len() + 1);
    let mut deleted_positions = Vec::with_capacity(x.len());
    let mut cur = x.to_vec();
    while !cur.is_empty() {
        let h = star_index(&cur);
        deleted_positions.push(h + 1);
        let mut next = cur.clone();
        next.remove(h);
        states.push(cur);
        cur = next;
    }
    states.push(cur);
    StarPath { states, deleted_positions }
}

/// Reference V-order comparator, straight from the definition.
///
/// `x` precedes `y` if `x` lies on the star path of `y`; otherwise the two
/// paths are walked to their meet, and the states just before the meet (which
/// have equal length) are compared at their rightmost differing position.
/// This is the oracle the other routes are validated against; it costs
/// quadratic time and space and is meant for desk-scale inputs.
pub fn compare_star_oracle(x: &[Letter], y: &[Letter]) -> Ordering {
    if x == y {
        return Ordering::Equal;
    }
    let px = star_path(x);
    let py = star_path(y);
    let mut y_index: HashMap<&[Letter], usize> = HashMap::with_capacity(py.states.len());
    for (j, state) in py.states.iter().enumerate() {
        y_index.insert(state.as_slice(), j);
    }
    for (i, state) in px.states.iter().enumerate() {
        if let Some(&j) = y_index.get(state.as_slice()) {
            if i == 0 {
                return Ordering::Less; // x is on y's path
            }
            if j == 0 {
                return Ordering::Greater; // y is on x's path
            }
            let s = &px.states[i - 1];
            let t = &py.states[j - 1];
            debug_assert_eq!(s.len(), t.len());
            for idx in (0..s.len()).rev() {
                match s[idx].cmp(&t[idx]) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            unreachable!("states immediately before the meet must differ");
        }
    }
    unreachable!("every star path ends at the empty string");
}

/// Recursive V-order comparator via V-forms.
///
/// Distinct strings are ordered by the first of: maximal letter, count of the
/// maximal letter, and the V-order of the first differing block pair. Blocks
/// contain only letters smaller than the maximal letter, so the block step
/// always terminates.
pub fn compare_v_form(x: &[Letter], y: &[Letter]) -> Ordering {
    let mut x = x;
    let mut y = y;
    loop {
        if x == y {
            return Ordering::Equal;
        }
        if x.is_empty() {
            return Ordering::Less;
        }
        if y.is_empty() {
            return Ordering::Greater;
        }
        let vx = decompose(x);
        let vy = decompose(y);
        match vx
            .max_letter()
            .cmp(&vy.max_letter())
            .then_with(|| vx.count().cmp(&vy.count()))
        {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Equal maximal letter and count: recurse on the first differing block.
        let pair = vx
            .blocks()
            .iter()
            .zip(vy.blocks().iter())
            .find(|(bx, by)| bx != by)
            .expect("distinct strings with equal V-form structure must differ in a block");
        x = pair.0;
        y = pair.1;
    }
}

/// [`compare_v_form`] instrumented with a letter-inspection tally, for
/// workload comparisons against the input-sensitive route.
pub fn compare_v_form_counting(x: &[Letter], y: &[Letter]) -> (Ordering, u64) {
    let mut x = x;
    let mut y = y;
    let mut inspected = 0u64;
    loop {
        inspected += (x.len() + y.len()) as u64;
        if x == y {
            return (Ordering::Equal, inspected);
        }
        if x.is_empty() {
            return (Ordering::Less, inspected);
        }
        if y.is_empty() {
            return (Ordering::Greater, inspected);
        }
        let vx = decompose(x);
        let vy = decompose(y);
        match vx
            .max_letter()
            .cmp(&vy.max_letter())
            .then_with(|| vx.count().cmp(&vy.count()))
        {
            Ordering::Equal => {}
            ord => return (ord, inspected),
        }
        let mut found = None;
        for (bx, by) in vx.blocks().iter().zip(vy.blocks().iter()) {
            inspected += (bx.len() + by.len()) as u64;
            if bx != by {
                found = Some((*bx, *by));
                break;
            }
        }
        let (bx, by) = found.expect("distinct strings must differ in a block");
        x = bx;
        y = by;
    }
}

/// True iff `v` is a proper subsequence of `x`. When it is, `v` precedes `x`
/// in V-order.
pub fn subsequence_precedes(v: &[Letter], x: &[Letter]) -> bool {
    if v.len() >= x.len() {
        return false;
    }
    let mut it = x.iter();
    v.iter().all(|c| it.any(|d| d == c))
}

/// Outcome of the input-sensitive comparison, with the number of letters
/// inspected after the initial max/count scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InputSensitiveReport {
    pub order: Ordering,
    pub letters_inspected: u64,
}

/// Input-sensitive V-order comparator.
pub fn compare_input_sensitive(x: &[Letter], y: &[Letter]) -> Ordering {
    compare_input_sensitive_report(x, y).order
}

/// Input-sensitive V-order comparator, reporting its work.
///
/// Step 1 scans both strings once for their maximal letter and its count and
/// decides immediately when they differ. Otherwise the first mismatch position
/// `h` is located, the windows from `h` up to (but excluding) the next
/// occurrence of the maximal letter are isolated, and per-letter occurrence
/// counts over prefixes of those windows — cut at the first larger letter not
/// preceded by an even larger one — are compared from the highest letter down.
/// The first letter whose counts differ decides: the smaller count precedes.
///
/// `letters_inspected` tallies every letter read after Step 1, which is what
/// makes the route input-sensitive: it grows with the mismatch position and
/// window width, not with the string length.
pub fn compare_input_sensitive_report(x: &[Letter], y: &[Letter]) -> InputSensitiveReport {
    let mut inspected = 0u64;
    // Empty strings have no V-form; settle them before Step 1.
    if x.is_empty() || y.is_empty() {
        return InputSensitiveReport { order: x.len().cmp(&y.len()), letters_inspected: 0 };
    }

    // Step 1: maximal letters and their counts.
    let (gx, cx) = max_and_count(x);
    let (gy, cy) = max_and_count(y);
    match gx.cmp(&gy).then_with(|| cx.cmp(&cy)) {
        Ordering::Equal => {}
        ord => return InputSensitiveReport { order: ord, letters_inspected: 0 },
    }
    let g = gx;

    // Step 2: the first mismatch position.
    let common = x.len().min(y.len());
    let mut mismatch = None;
    for i in 0..common {
        inspected += 2;
        if x[i] != y[i] {
            mismatch = Some(i);
            break;
        }
    }
    let h = match mismatch {
        Some(h) => h,
        // No mismatch in the common prefix: equal strings, or one is a proper
        // prefix (hence a proper subsequence) of the other.
        None => {
            return InputSensitiveReport {
                order: x.len().cmp(&y.len()),
                letters_inspected: inspected,
            }
        }
    };

    // Step 3: windows end just before the nearest maximal letter at or right
    // of the mismatch, or at the end of the string when none remains.
    let wx = &x[h..next_occurrence(x, h, g, &mut inspected)];
    let wy = &y[h..next_occurrence(y, h, g, &mut inspected)];

    // Steps 4 and 5: per-letter counts over the cut windows, highest letter
    // first. Letters occurring in neither window count zero on both sides and
    // cannot decide, so only the letters present need inspecting.
    let mut letters: Vec<Letter> = wx.iter().chain(wy.iter()).copied().collect();
    letters.sort_unstable_by(|a, b| b.cmp(a));
    letters.dedup();
    for &alpha in &letters {
        let nx = window_count(wx, alpha, &mut inspected);
        let ny = window_count(wy, alpha, &mut inspected);
        if nx != ny {
            return InputSensitiveReport { order: nx.cmp(&ny), letters_inspected: inspected };
        }
    }
    unreachable!("the windows start with differing letters, so some count differs");
}

fn max_and_count(x: &[Letter]) -> (Letter, usize) {
    let g = *x.iter().max().expect("nonempty");
    (g, x.iter().filter(|&&c| c == g).count())
}

/// Index of the first occurrence of `g` at or after `from`, or `x.len()`.
fn next_occurrence(x: &[Letter], from: usize, g: Letter, inspected: &mut u64) -> usize {
    for (i, &c) in x.iter().enumerate().skip(from) {
        *inspected += 1;
        if c == g {
            return i;
        }
    }
    x.len()
}

/// Occurrences of `alpha` in the window prefix ending at the leftmost letter
/// larger than `alpha` that is not preceded by a still larger letter; the
/// whole window when no such letter exists.
fn window_count(w: &[Letter], alpha: Letter, inspected: &mut u64) -> usize {
    let mut cut = w.len();
    let mut prefix_max = 0;
    for (q, &c) in w.iter().enumerate() {
        *inspected += 1;
        if c > alpha && c >= prefix_max {
            cut = q;
            break;
        }
        prefix_max = prefix_max.max(c);
    }
    *inspected += cut as u64;
    w[..cut].iter().filter(|&&c| c == alpha).count()
}
