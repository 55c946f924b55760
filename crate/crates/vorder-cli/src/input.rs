//! Input binding: text lines over a byte alphabet, or lines of
//! whitespace-separated decimal letters over the numeric alphabet derived
//! from the values that occur.

use std::io::Read;
use std::path::Path;

use vorder::{Alphabet, Letter, Symbol};

pub enum InputModel {
    /// Fixed alphabet; letters are the bytes of the line.
    Text(Alphabet),
    /// Numeric letters; the alphabet is rebuilt per string from the values
    /// that occur, which is sound because V-order depends only on the
    /// relative order of letters.
    Ints,
}

impl InputModel {
    pub fn text(alphabet: Option<&str>) -> Result<Self, String> {
        let alphabet = match alphabet {
            Some(symbols) => {
                Alphabet::from_text(symbols).map_err(|e| format!("--alphabet: {}", e))?
            }
            None => Alphabet::byte_order(),
        };
        Ok(InputModel::Text(alphabet))
    }

    pub fn ints() -> Self {
        InputModel::Ints
    }

    /// Bind two operands against a common alphabet so their letters are
    /// directly comparable.
    pub fn bind_pair(&self, a: &str, b: &str) -> Result<(Vec<Letter>, Vec<Letter>), String> {
        match self {
            InputModel::Text(alphabet) => {
                let x = alphabet.bind_text(a).map_err(|e| format!("first operand: {}", e))?;
                let y = alphabet.bind_text(b).map_err(|e| format!("second operand: {}", e))?;
                Ok((x, y))
            }
            InputModel::Ints => {
                let va = parse_values(a).map_err(|e| format!("first operand: {}", e))?;
                let vb = parse_values(b).map_err(|e| format!("second operand: {}", e))?;
                let alphabet = Alphabet::numeric(va.iter().chain(vb.iter()).copied());
                let bind = |values: &[u64]| {
                    alphabet
                        .bind(&values.iter().map(|&v| Symbol::Num(v)).collect::<Vec<_>>())
                        .expect("alphabet built from these values")
                };
                Ok((bind(&va), bind(&vb)))
            }
        }
    }

    /// Bind one input line, keeping the alphabet it was bound against so
    /// results can be rendered back in the input's own symbols.
    pub fn bind_line(&self, line: &str) -> Result<BoundLine, String> {
        match self {
            InputModel::Text(alphabet) => Ok(BoundLine {
                letters: alphabet.bind_text(line).map_err(|e| e.to_string())?,
                alphabet: alphabet.clone(),
                text: true,
            }),
            InputModel::Ints => {
                let values = parse_values(line)?;
                let alphabet = Alphabet::numeric(values.iter().copied());
                let letters = alphabet
                    .bind(&values.iter().map(|&v| Symbol::Num(v)).collect::<Vec<_>>())
                    .expect("alphabet built from these values");
                Ok(BoundLine { letters, alphabet, text: false })
            }
        }
    }
}

/// A bound input line together with its alphabet.
pub struct BoundLine {
    pub letters: Vec<Letter>,
    alphabet: Alphabet,
    text: bool,
}

impl BoundLine {
    /// Render letters back into the line's external symbols: raw bytes for
    /// text, space-separated decimals for integers.
    pub fn render(&self, letters: &[Letter]) -> String {
        let symbols = self.alphabet.render(letters).expect("letters from this alphabet");
        if self.text {
            let bytes: Vec<u8> = symbols
                .iter()
                .map(|s| match s {
                    Symbol::Byte(b) => *b,
                    Symbol::Num(_) => unreachable!("text alphabets hold bytes"),
                })
                .collect();
            String::from_utf8_lossy(&bytes).into_owned()
        } else {
            symbols.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
        }
    }
}

pub fn parse_values(line: &str) -> Result<Vec<u64>, String> {
    line.split_whitespace()
        .enumerate()
        .map(|(i, token)| {
            let value: u64 = token
                .parse()
                .map_err(|_| format!("token {} ({:?}) is not a decimal letter", i + 1, token))?;
            if value == 0 {
                return Err(format!("token {} is 0; letters are valued >= 1", i + 1));
            }
            Ok(value)
        })
        .collect()
}

pub fn read_lines(file: Option<&Path>) -> Result<Vec<String>, String> {
    let mut content = String::new();
    match file {
        Some(path) => {
            content = std::fs::read_to_string(path)
                .map_err(|e| format!("{}: {}", path.display(), e))?;
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut content)
                .map_err(|e| format!("stdin: {}", e))?;
        }
    }
    Ok(content.lines().map(|l| l.to_string()).collect())
}
