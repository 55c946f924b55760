//! Explicit alphabets: an ordered list of external symbols mapped onto ranks.
//!
//! Every algorithm in this crate works on letter ranks, so the choice of
//! alphabet fixes the total order once and decouples it from the input
//! encoding. The two stock alphabets match the two supported input formats:
//! byte order for raw text and numeric order for whitespace-separated
//! integers.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::Letter;

/// An external symbol: a single byte of text or a decimal-valued letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Byte(u8),
    Num(u64),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Symbol::Byte(b) if b.is_ascii_graphic() || b == b' ' => write!(f, "{}", b as char),
            Symbol::Byte(b) => write!(f, "0x{:02x}", b),
            Symbol::Num(v) => write!(f, "{}", v),
        }
    }
}

/// A totally ordered alphabet. Ranks are a bijection onto `0..size` and the
/// rank order equals the symbol list order.
#[derive(Debug, Clone)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    ranks: HashMap<Symbol, Letter>,
}

impl Alphabet {
    /// Build an alphabet from symbols listed in increasing order.
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        let mut ranks = HashMap::with_capacity(symbols.len());
        for (i, &sym) in symbols.iter().enumerate() {
            if ranks.insert(sym, i as Letter).is_some() {
                return Err(Error::DuplicateSymbol { symbol: sym });
            }
        }
        Ok(Alphabet { symbols, ranks })
    }

    /// All 256 byte values in numeric order; the default for text input.
    pub fn byte_order() -> Self {
        Alphabet::new((0..=255).map(Symbol::Byte).collect()).expect("bytes are distinct")
    }

    /// The bytes of `symbols`, in the order given.
    pub fn from_text(symbols: &str) -> Result<Self> {
        Alphabet::new(symbols.bytes().map(Symbol::Byte).collect())
    }

    /// Distinct numeric values in increasing numeric order; the default for
    /// integer input is built from the values that actually occur.
    pub fn numeric(values: impl IntoIterator<Item = u64>) -> Self {
        let mut values: Vec<u64> = values.into_iter().collect();
        values.sort_unstable();
        values.dedup();
        Alphabet::new(values.into_iter().map(Symbol::Num).collect()).expect("deduplicated")
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn rank(&self, symbol: Symbol) -> Option<Letter> {
        self.ranks.get(&symbol).copied()
    }

    pub fn symbol(&self, rank: Letter) -> Option<Symbol> {
        self.symbols.get(rank as usize).copied()
    }

    /// Map a raw symbol sequence onto its rank sequence.
    pub fn bind(&self, raw: &[Symbol]) -> Result<Vec<Letter>> {
        raw.iter()
            .enumerate()
            .map(|(i, &sym)| {
                self.rank(sym).ok_or(Error::UnknownSymbol { position: i + 1, symbol: sym })
            })
            .collect()
    }

    /// Bind the bytes of a text line.
    pub fn bind_text(&self, line: &str) -> Result<Vec<Letter>> {
        let raw: Vec<Symbol> = line.bytes().map(Symbol::Byte).collect();
        self.bind(&raw)
    }

    /// Map ranks back to symbols.
    pub fn render(&self, letters: &[Letter]) -> Result<Vec<Symbol>> {
        letters
            .iter()
            .map(|&r| self.symbol(r).ok_or(Error::UnknownRank { rank: r }))
            .collect()
    }
}
