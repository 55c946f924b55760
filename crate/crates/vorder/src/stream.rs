//! Incremental V-order maintenance for growing prefixes and suffixes.
//!
//! Appending the same letter to both strings, or prepending it, never changes
//! their order; when the orders of the strings and of the freshly added
//! letters agree, the extension keeps that order. Those are the constant-time
//! fast paths. The one genuinely undetermined case — a known strict order
//! extended by letters ordered against it — falls back to a from-scratch
//! comparison, and the number of such recomputations is exposed so the cost
//! stays observable.

use std::cmp::Ordering;

use crate::compare::compare_v_form;
use crate::Letter;

/// Maintains the V-order of two same-length prefixes as letters are appended.
#[derive(Debug, Clone)]
pub struct PrefixStream {
    xs: Vec<Letter>,
    ys: Vec<Letter>,
    order: Ordering,
    fallbacks: u64,
}

impl PrefixStream {
    pub fn new() -> Self {
        PrefixStream { xs: Vec::new(), ys: Vec::new(), order: Ordering::Equal, fallbacks: 0 }
    }

    /// Append `a` to the first buffer and `b` to the second; returns the order
    /// of the extended prefixes.
    pub fn push(&mut self, a: Letter, b: Letter) -> Ordering {
        self.xs.push(a);
        self.ys.push(b);
        self.order = if a == b {
            // Appending a common letter preserves the order.
            self.order
        } else if self.order == Ordering::Equal {
            // Equal buffers: the appended letters decide.
            a.cmp(&b)
        } else if (self.order == Ordering::Less && a < b)
            || (self.order == Ordering::Greater && a > b)
        {
            // Monotone extension: the letter order agrees with the strings'.
            self.order
        } else {
            self.fallbacks += 1;
            compare_v_form(&self.xs, &self.ys)
        };
        self.order
    }

    /// Append to the first buffer only. The order can flip only when the
    /// shorter side was ahead, which forces a recomputation; a buffer that is
    /// equal to or precedes the other stays ahead of any proper extension of
    /// the other, because a string precedes each of its proper extensions.
    pub fn push_left(&mut self, a: Letter) -> Ordering {
        self.xs.push(a);
        self.order = match self.order {
            Ordering::Equal | Ordering::Greater => Ordering::Greater,
            Ordering::Less => {
                self.fallbacks += 1;
                compare_v_form(&self.xs, &self.ys)
            }
        };
        self.order
    }

    /// Append to the second buffer only; mirror of [`Self::push_left`].
    pub fn push_right(&mut self, b: Letter) -> Ordering {
        self.ys.push(b);
        self.order = match self.order {
            Ordering::Equal | Ordering::Less => Ordering::Less,
            Ordering::Greater => {
                self.fallbacks += 1;
                compare_v_form(&self.xs, &self.ys)
            }
        };
        self.order
    }

    pub fn order(&self) -> Ordering {
        self.order
    }

    /// Full recomputations performed so far.
    pub fn fallbacks(&self) -> u64 {
        self.fallbacks
    }

    pub fn buffers(&self) -> (&[Letter], &[Letter]) {
        (&self.xs, &self.ys)
    }
}

impl Default for PrefixStream {
    fn default() -> Self {
        PrefixStream::new()
    }
}

/// Maintains the V-order of two same-length suffixes as letters are prepended.
#[derive(Debug, Clone)]
pub struct SuffixStream {
    // Stored in reverse: index 0 is the last letter of the suffix.
    rev_xs: Vec<Letter>,
    rev_ys: Vec<Letter>,
    order: Ordering,
    fallbacks: u64,
}

impl SuffixStream {
    pub fn new() -> Self {
        SuffixStream {
            rev_xs: Vec::new(),
            rev_ys: Vec::new(),
            order: Ordering::Equal,
            fallbacks: 0,
        }
    }

    /// Prepend `a` to the first suffix and `b` to the second; returns the
    /// order of the extended suffixes.
    pub fn push(&mut self, a: Letter, b: Letter) -> Ordering {
        self.rev_xs.push(a);
        self.rev_ys.push(b);
        self.order = if a == b {
            self.order
        } else if self.order == Ordering::Equal {
            a.cmp(&b)
        } else if (self.order == Ordering::Less && a < b)
            || (self.order == Ordering::Greater && a > b)
        {
            self.order
        } else {
            self.fallbacks += 1;
            compare_v_form(&self.x_suffix(), &self.y_suffix())
        };
        self.order
    }

    /// Prepend to the first suffix only; see [`PrefixStream::push_left`].
    pub fn push_left(&mut self, a: Letter) -> Ordering {
        self.rev_xs.push(a);
        self.order = match self.order {
            Ordering::Equal | Ordering::Greater => Ordering::Greater,
            Ordering::Less => {
                self.fallbacks += 1;
                compare_v_form(&self.x_suffix(), &self.y_suffix())
            }
        };
        self.order
    }

    /// Prepend to the second suffix only.
    pub fn push_right(&mut self, b: Letter) -> Ordering {
        self.rev_ys.push(b);
        self.order = match self.order {
            Ordering::Equal | Ordering::Less => Ordering::Less,
            Ordering::Greater => {
                self.fallbacks += 1;
                compare_v_form(&self.x_suffix(), &self.y_suffix())
            }
        };
        self.order
    }

    pub fn order(&self) -> Ordering {
        self.order
    }

    pub fn fallbacks(&self) -> u64 {
        self.fallbacks
    }

    /// The first suffix, in string order.
    pub fn x_suffix(&self) -> Vec<Letter> {
        self.rev_xs.iter().rev().copied().collect()
    }

    /// The second suffix, in string order.
    pub fn y_suffix(&self) -> Vec<Letter> {
        self.rev_ys.iter().rev().copied().collect()
    }
}

impl Default for SuffixStream {
    fn default() -> Self {
        SuffixStream::new()
    }
}

/// Whole-string comparison through a [`PrefixStream`]: the common prefix is
/// pushed pairwise left to right, then the leftover tail of the longer string
/// is pushed single-sided.
pub fn compare_prefix_stream(x: &[Letter], y: &[Letter]) -> Ordering {
    let mut stream = PrefixStream::new();
    let common = x.len().min(y.len());
    for i in 0..common {
        stream.push(x[i], y[i]);
    }
    for &a in &x[common..] {
        stream.push_left(a);
    }
    for &b in &y[common..] {
        stream.push_right(b);
    }
    stream.order()
}

/// Whole-string comparison through a [`SuffixStream`], right to left.
pub fn compare_suffix_stream(x: &[Letter], y: &[Letter]) -> Ordering {
    let mut stream = SuffixStream::new();
    let common = x.len().min(y.len());
    for i in 0..common {
        stream.push(x[x.len() - 1 - i], y[y.len() - 1 - i]);
    }
    for &a in x[..x.len() - common].iter().rev() {
        stream.push_left(a);
    }
    for &b in y[..y.len() - common].iter().rev() {
        stream.push_right(b);
    }
    stream.order()
}
