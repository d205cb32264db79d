//! Finite words, reversal, palindromes and factor enumeration.
//!
//! A [`Word`] is an immutable sequence of [`Symbol`]s. Positions in the
//! public API are 1-based and inclusive, so `w.factor(i, j)` is `w_i ... w_j`.
//! Internally the symbols live in a plain `Vec` and are addressed 0-based.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest number of distinct symbols an [`Alphabet`] may hold.
pub const MAX_ALPHABET: usize = 255;

const NO_INDEX: u8 = u8::MAX;

/// A letter. The byte is the letter's label; text words use the ASCII byte,
/// integer-list words use the integer itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Symbol(pub u8);

impl Symbol {
    pub fn is_graphic(self) -> bool {
        self.0.is_ascii_graphic()
    }
}

impl From<char> for Symbol {
    /// Panics on non-ASCII characters.
    fn from(c: char) -> Self {
        assert!(c.is_ascii(), "symbol {c:?} is not a single-byte character");
        Symbol(c as u8)
    }
}

/// An ordered set of symbols with a dense index `0..size`.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    index: Box<[u8; 256]>,
}

impl Alphabet {
    /// Builds an alphabet from arbitrary symbols; duplicates are dropped and
    /// the remaining symbols sorted.
    pub fn new<I: IntoIterator<Item = Symbol>>(symbols: I) -> Result<Self> {
        let mut symbols: Vec<Symbol> = symbols.into_iter().collect();
        symbols.sort_unstable();
        symbols.dedup();
        if symbols.len() > MAX_ALPHABET {
            return Err(Error::Domain(format!(
                "alphabet has {} symbols, at most {MAX_ALPHABET} are supported",
                symbols.len()
            )));
        }
        let mut index = Box::new([NO_INDEX; 256]);
        for (i, s) in symbols.iter().enumerate() {
            index[s.0 as usize] = i as u8;
        }
        Ok(Alphabet { symbols, index })
    }

    /// The first `size` lowercase letters `a, b, c, ...`.
    pub fn letters(size: usize) -> Result<Self> {
        if !(2..=26).contains(&size) {
            return Err(Error::Domain(format!(
                "letter alphabet size {size} not in 2..=26"
            )));
        }
        Alphabet::new((0..size as u8).map(|i| Symbol(b'a' + i)))
    }

    /// The first `size` decimal digits `0, 1, 2, ...`.
    pub fn digits(size: usize) -> Result<Self> {
        if !(2..=10).contains(&size) {
            return Err(Error::Domain(format!(
                "digit alphabet size {size} not in 2..=10"
            )));
        }
        Alphabet::new((0..size as u8).map(|i| Symbol(b'0' + i)))
    }

    /// The distinct symbols occurring in `w`.
    pub fn of(w: &Word) -> Self {
        // a word never holds more than 256 distinct bytes; 256 is the only failure
        Alphabet::new(w.symbols().iter().copied())
            .unwrap_or_else(|_| panic!("word uses all 256 byte values"))
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn index_of(&self, s: Symbol) -> Option<usize> {
        match self.index[s.0 as usize] {
            NO_INDEX => None,
            i => Some(i as usize),
        }
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.index_of(s).is_some()
    }

    pub fn symbol(&self, index: usize) -> Option<Symbol> {
        self.symbols.get(index).copied()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Alphabet").field(&self.symbols).finish()
    }
}

/// An immutable finite word, possibly empty.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        Word { symbols }
    }

    /// One symbol per byte.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        Word {
            symbols: bytes.iter().map(|&b| Symbol(b)).collect(),
        }
    }

    /// Validates every symbol against `alphabet`.
    pub fn over(symbols: Vec<Symbol>, alphabet: &Alphabet) -> Result<Self> {
        if let Some(s) = symbols.iter().find(|s| !alphabet.contains(**s)) {
            return Err(Error::Domain(format!(
                "symbol {} is not in alphabet {:?}",
                s.0, alphabet
            )));
        }
        Ok(Word { symbols })
    }

    /// Parses the text form of a word.
    ///
    /// A string containing a comma is read as a list of integer symbol ids
    /// (`0,1,1,0`), anything else as one ASCII character per symbol. The
    /// empty string is the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        if text.contains(',') {
            let symbols = text
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    let id: usize = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("`{tok}` is not a symbol id")))?;
                    if id >= MAX_ALPHABET {
                        return Err(Error::Parse(format!(
                            "symbol id {id} exceeds the maximum {}",
                            MAX_ALPHABET - 1
                        )));
                    }
                    Ok(Symbol(id as u8))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Word { symbols });
        }
        if let Some(c) = text.chars().find(|c| !c.is_ascii() || c.is_ascii_control()) {
            return Err(Error::Parse(format!(
                "character {c:?} is not a printable single-byte symbol"
            )));
        }
        Ok(Word::from_bytes(text.as_bytes()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// The symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> Result<Symbol> {
        if i == 0 || i > self.len() {
            return Err(Error::Range {
                i,
                j: i,
                len: self.len(),
            });
        }
        Ok(self.symbols[i - 1])
    }

    pub fn reverse(&self) -> Word {
        Word {
            symbols: self.symbols.iter().rev().copied().collect(),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.symbols)
    }

    /// `w[i, j]`, 1-based and inclusive.
    pub fn factor(&self, i: usize, j: usize) -> Result<Word> {
        if i == 0 || i > j || j > self.len() {
            return Err(Error::Range {
                i,
                j,
                len: self.len(),
            });
        }
        Ok(Word::from_symbols(self.symbols[i - 1..j].to_vec()))
    }

    /// Prefix of length `len`, clamped to the word.
    pub fn prefix(&self, len: usize) -> Word {
        Word::from_symbols(self.symbols[..len.min(self.len())].to_vec())
    }

    /// Suffix of length `len`, clamped to the word.
    pub fn suffix(&self, len: usize) -> Word {
        let len = len.min(self.len());
        Word::from_symbols(self.symbols[self.len() - len..].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word { symbols }
    }

    pub fn pow(&self, n: usize) -> Word {
        Word {
            symbols: self.symbols.repeat(n),
        }
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.symbols.starts_with(&other.symbols)
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.symbols.ends_with(&other.symbols)
    }

    /// Whether `other` occurs as a factor of `self`.
    pub fn contains(&self, other: &Word) -> bool {
        other.is_empty()
            || self
                .symbols
                .windows(other.len())
                .any(|win| win == other.symbols())
    }

    /// Every distinct factor, the empty word first, then by start and end position.
    pub fn factors(&self) -> Factors<'_> {
        Factors {
            symbols: &self.symbols,
            start: 0,
            end: 0,
            seen: HashSet::new(),
            empty_done: false,
        }
    }

    /// Lengths of all palindromic prefixes in increasing order, including 0.
    pub fn palindromic_prefixes(&self) -> Vec<usize> {
        PalindromeIndex::new(&self.symbols).prefix_lengths(0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.iter().all(|s| s.is_graphic()) {
            for s in &self.symbols {
                write!(f, "{}", s.0 as char)?;
            }
            Ok(())
        } else {
            for (i, s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", s.0)?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("Word(ε)")
        } else {
            write!(f, "Word({self})")
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word { symbols }
    }
}

pub fn is_palindrome(s: &[Symbol]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// Iterator over distinct factors; see [`Word::factors`].
pub struct Factors<'a> {
    symbols: &'a [Symbol],
    start: usize,
    end: usize,
    seen: HashSet<&'a [Symbol]>,
    empty_done: bool,
}

impl Iterator for Factors<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if !self.empty_done {
            self.empty_done = true;
            return Some(Word::empty());
        }
        let n = self.symbols.len();
        while self.start < n {
            if self.end < self.start + 1 {
                self.end = self.start + 1;
            }
            if self.end > n {
                self.start += 1;
                self.end = 0;
                continue;
            }
            let f = &self.symbols[self.start..self.end];
            self.end += 1;
            if self.seen.insert(f) {
                return Some(Word::from_symbols(f.to_vec()));
            }
        }
        None
    }
}

/// Constant-time palindrome queries over a fixed word (Manacher's algorithm).
///
/// `radius[c]` is the length of the longest palindrome `s[l..r]` with
/// `l + r = c`; every shorter length of the same parity around `c` is a
/// palindrome too.
#[derive(Clone, Debug)]
pub struct PalindromeIndex {
    radius: Vec<usize>,
}

impl PalindromeIndex {
    pub fn new(s: &[Symbol]) -> Self {
        let n = s.len();
        let mut radius = vec![0usize; 2 * n + 1];
        let mut c = 1;
        let mut r = 0;
        while c <= 2 * n {
            // radius parity must match the center parity
            r += (c + r) % 2;
            while r < c && c + r < 2 * n && s[(c - r) / 2 - 1] == s[(c + r) / 2] {
                r += 2;
            }
            radius[c] = r;
            if r == 0 {
                c += 1;
                continue;
            }
            let mut k = 1;
            while k <= c && k + radius[c - k] < r {
                radius[c + k] = radius[c - k];
                k += 1;
            }
            c += k;
            r -= k;
        }
        PalindromeIndex { radius }
    }

    pub fn word_len(&self) -> usize {
        (self.radius.len() - 1) / 2
    }

    /// Whether `s[start..end]` (0-based, half-open) is a palindrome.
    pub fn is_palindrome(&self, start: usize, end: usize) -> bool {
        start <= end && end <= self.word_len() && self.radius[start + end] >= end - start
    }

    /// Lengths of the palindromes starting at 0-based `start`, including 0.
    pub fn prefix_lengths(&self, start: usize) -> Vec<usize> {
        let n = self.word_len();
        (0..=n - start.min(n))
            .filter(|&len| self.is_palindrome(start, start + len))
            .collect()
    }
}
