//! Strings over `{0, 1, *}`.
//!
//! A [`TernaryString`] of length `d` stands for the subcube of `H^d` obtained
//! by filling its jokers in every possible way, and equivalently for a
//! standard box in `R^d`. Coordinates are 1-based in every public method.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;
use thiserror::Error;

type Words = SmallVec<[u64; 1]>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StringError {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("illegal character {ch:?} at position {pos}")]
    IllegalChar { ch: char, pos: usize },
    #[error("empty string")]
    Empty,
    #[error("coordinate {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{0} and {1} are not a twin pair")]
    NotTwins(String, String),
    #[error("{0} contains a joker")]
    JokerPresent(String),
}

/// One coordinate of a ternary string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Zero,
    One,
    Joker,
}

impl Symbol {
    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            '0' => Some(Symbol::Zero),
            '1' => Some(Symbol::One),
            '*' => Some(Symbol::Joker),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Joker => '*',
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A word in `S^d`, `S = {0, 1, *}`, stored as two disjoint coordinate
/// bit-sets. Coordinates in neither set are jokers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TernaryString {
    len: usize,
    zeros: Words,
    ones: Words,
}

fn word_count(len: usize) -> usize {
    len.div_ceil(64).max(1)
}

impl TernaryString {
    /// The all-joker string `*^len`.
    pub fn jokers(len: usize) -> Self {
        let n = word_count(len);
        TernaryString {
            len,
            zeros: SmallVec::from_elem(0, n),
            ones: SmallVec::from_elem(0, n),
        }
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Self {
        let mut s = Self::jokers(symbols.len());
        for (idx, &sym) in symbols.iter().enumerate() {
            s.put(idx, sym);
        }
        s
    }

    /// Builds a binary string of length `len` from the low bits of `bits`,
    /// coordinate 1 being bit `len - 1` so that the text form reads like
    /// the binary numeral.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= 64);
        let mut s = Self::jokers(len);
        for idx in 0..len {
            let bit = (bits >> (len - 1 - idx)) & 1;
            s.put(idx, if bit == 1 { Symbol::One } else { Symbol::Zero });
        }
        s
    }

    /// Builds a string of length `len <= 64` from raw 0-based masks; bit `i`
    /// is coordinate `i + 1`.
    pub fn from_masks(len: usize, zeros: u64, ones: u64) -> Self {
        assert!(len <= 64 && zeros & ones == 0);
        let valid = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        assert!((zeros | ones) & !valid == 0);
        TernaryString {
            len,
            zeros: SmallVec::from_elem(zeros, 1),
            ones: SmallVec::from_elem(ones, 1),
        }
    }

    /// The 0-based masks `(zeros, ones)` for strings of length at most 64.
    pub fn masks(&self) -> Option<(u64, u64)> {
        (self.len <= 64).then(|| (self.zeros[0], self.ones[0]))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn get(&self, idx: usize) -> Symbol {
        let (w, b) = (idx / 64, idx % 64);
        if self.zeros[w] >> b & 1 == 1 {
            Symbol::Zero
        } else if self.ones[w] >> b & 1 == 1 {
            Symbol::One
        } else {
            Symbol::Joker
        }
    }

    fn put(&mut self, idx: usize, sym: Symbol) {
        let (w, bit) = (idx / 64, 1u64 << (idx % 64));
        self.zeros[w] &= !bit;
        self.ones[w] &= !bit;
        match sym {
            Symbol::Zero => self.zeros[w] |= bit,
            Symbol::One => self.ones[w] |= bit,
            Symbol::Joker => {}
        }
    }

    fn check_coord(&self, i: usize) -> Result<usize, StringError> {
        if i == 0 || i > self.len {
            Err(StringError::IndexOutOfRange {
                index: i,
                len: self.len,
            })
        } else {
            Ok(i - 1)
        }
    }

    /// Symbol at 1-based coordinate `i`.
    pub fn symbol(&self, i: usize) -> Result<Symbol, StringError> {
        Ok(self.get(self.check_coord(i)?))
    }

    /// Copy with coordinate `i` replaced by `sym`.
    pub fn with_symbol(&self, i: usize, sym: Symbol) -> Result<Self, StringError> {
        let idx = self.check_coord(i)?;
        let mut out = self.clone();
        out.put(idx, sym);
        Ok(out)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.len).map(move |idx| self.get(idx))
    }

    fn same_len(&self, other: &Self) -> Result<(), StringError> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(StringError::LengthMismatch {
                left: self.len,
                right: other.len,
            })
        }
    }

    /// Number of coordinates where one string has 0 and the other 1.
    /// Callers must guarantee equal lengths.
    pub(crate) fn conflicts(&self, other: &Self) -> usize {
        self.zeros
            .iter()
            .zip(&self.ones)
            .zip(other.zeros.iter().zip(&other.ones))
            .map(|((z1, o1), (z2, o2))| ((z1 & o2) | (o1 & z2)).count_ones() as usize)
            .sum()
    }

    /// `d(x, y)`: coordinates where one string has 0 and the other has 1.
    pub fn distance(&self, other: &Self) -> Result<usize, StringError> {
        self.same_len(other)?;
        Ok(self.conflicts(other))
    }

    pub fn ones_count(&self) -> usize {
        self.ones.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn zeros_count(&self) -> usize {
        self.zeros.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `j(x)`, the dimension of the subcube.
    pub fn joker_count(&self) -> usize {
        self.len - self.zeros_count() - self.ones_count()
    }

    pub fn is_binary(&self) -> bool {
        self.joker_count() == 0
    }

    /// Non-joker coordinates (1-based).
    pub fn prop_set(&self) -> BTreeSet<usize> {
        (0..self.len)
            .filter(|&idx| self.get(idx) != Symbol::Joker)
            .map(|idx| idx + 1)
            .collect()
    }

    /// Same non-joker coordinates as `other`.
    pub fn same_support(&self, other: &Self) -> bool {
        self.len == other.len
            && self
                .zeros
                .iter()
                .zip(&self.ones)
                .zip(other.zeros.iter().zip(&other.ones))
                .all(|((z1, o1), (z2, o2))| z1 | o1 == z2 | o2)
    }

    /// `(-1)^{number of ones}`.
    pub fn sign(&self) -> i8 {
        if self.ones_count().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The unique coordinate (0-based) of a twin pair's 0/1 conflict.
    fn twin_coordinate(&self, other: &Self) -> Option<usize> {
        if self.len != other.len || !self.same_support(other) || self.conflicts(other) != 1 {
            return None;
        }
        // Same support and one conflict: everything else agrees.
        (0..self.len).find(|&idx| self.get(idx) != other.get(idx))
    }

    pub fn is_twin_pair(&self, other: &Self) -> bool {
        self.twin_coordinate(other).is_some()
    }

    /// The string whose subcube is the union of the two twin subcubes.
    pub fn twin_union(&self, other: &Self) -> Result<Self, StringError> {
        match self.twin_coordinate(other) {
            Some(idx) => {
                let mut out = self.clone();
                out.put(idx, Symbol::Joker);
                Ok(out)
            }
            None => Err(StringError::NotTwins(self.to_string(), other.to_string())),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::jokers(self.len + other.len);
        for (idx, sym) in self.symbols().chain(other.symbols()).enumerate() {
            out.put(idx, sym);
        }
        out
    }

    /// `x_{-i}`: the string with coordinate `i` removed.
    pub fn delete_coord(&self, i: usize) -> Result<Self, StringError> {
        let skip = self.check_coord(i)?;
        let syms: Vec<Symbol> = self
            .symbols()
            .enumerate()
            .filter(|&(idx, _)| idx != skip)
            .map(|(_, s)| s)
            .collect();
        Ok(Self::from_symbols(&syms))
    }

    /// Whether `v` lies in the subcube `H(x)`.
    pub fn subcube_contains(&self, v: &BinaryString) -> Result<bool, StringError> {
        self.same_len(v.as_ternary())?;
        Ok(self.conflicts(v.as_ternary()) == 0)
    }
}

impl Ord for TernaryString {
    /// Lexicographic order of the text form (`*` < `0` < `1`), shorter first
    /// on a common prefix.
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |s: Symbol| s.as_char();
        self.symbols().map(key).cmp(other.symbols().map(key))
    }
}

impl PartialOrd for TernaryString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TernaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.symbols().map(Symbol::as_char).collect();
        f.write_str(&text)
    }
}

impl fmt::Debug for TernaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryString({self})")
    }
}

impl FromStr for TernaryString {
    type Err = StringError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let symbols = text
            .chars()
            .enumerate()
            .map(|(pos, ch)| Symbol::from_char(ch).ok_or(StringError::IllegalChar { ch, pos: pos + 1 }))
            .collect::<Result<Vec<_>, _>>()?;
        if symbols.is_empty() {
            return Err(StringError::Empty);
        }
        Ok(Self::from_symbols(&symbols))
    }
}

/// A vertex of the Hamming cube: a ternary string without jokers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryString(TernaryString);

impl BinaryString {
    pub fn new(s: TernaryString) -> Result<Self, StringError> {
        if s.is_binary() {
            Ok(BinaryString(s))
        } else {
            Err(StringError::JokerPresent(s.to_string()))
        }
    }

    pub fn from_bits(len: usize, bits: u64) -> Self {
        BinaryString(TernaryString::from_bits(len, bits))
    }

    pub fn as_ternary(&self) -> &TernaryString {
        &self.0
    }

    pub fn into_ternary(self) -> TernaryString {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `h(u, v)`, the Hamming distance.
    pub fn hamming(&self, other: &Self) -> Result<usize, StringError> {
        self.0.distance(&other.0)
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryString({})", self.0)
    }
}

impl FromStr for BinaryString {
    type Err = StringError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        BinaryString::new(text.parse()?)
    }
}

impl TryFrom<TernaryString> for BinaryString {
    type Error = StringError;

    fn try_from(s: TernaryString) -> Result<Self, Self::Error> {
        BinaryString::new(s)
    }
}
