//! Words in a free monoid and reduced words in a free group.

use std::cmp::Ordering;
use std::fmt;

/// A word over the alphabet `{0, .., k-1}`, rendered with letters `a, b, ..`.
///
/// Words order length-lexicographically, so enumeration by this order is
/// prefix-monotone in the length bound.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letter(l: u8) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// The suffix left after removing `prefix`, if it is one.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0.strip_prefix(prefix.0.as_slice()).map(|s| Word(s.to_vec()))
    }

    /// All words of length `<= max_len` over `alphabet` letters, length-lex.
    pub fn all_up_to(alphabet: usize, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * alphabet);
            for w in &layer {
                for l in 0..alphabet {
                    let mut v = w.0.clone();
                    v.push(l as u8);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Parses `1` (the empty word) or a string of lowercase letters.
    pub fn parse(s: &str, alphabet: usize) -> Option<Word> {
        if s == "1" {
            return Some(Word::empty());
        }
        let mut v = Vec::with_capacity(s.len());
        for c in s.chars() {
            if !c.is_ascii_lowercase() {
                return None;
            }
            let l = c as u8 - b'a';
            if (l as usize) >= alphabet {
                return None;
            }
            v.push(l);
        }
        if v.is_empty() {
            None
        } else {
            Some(Word(v))
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &l in &self.0 {
            write!(f, "{}", (b'a' + l) as char)?;
        }
        Ok(())
    }
}

/// A freely reduced word in the free group. Letter `i` is stored as `i + 1`,
/// its inverse as `-(i + 1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeGroupWord(Vec<i16>);

impl FreeGroupWord {
    pub fn identity() -> Self {
        FreeGroupWord(Vec::new())
    }

    pub fn from_word(w: &Word) -> Self {
        FreeGroupWord(w.letters().iter().map(|&l| l as i16 + 1).collect())
    }

    /// Builds a word from signed letters, reducing it.
    pub fn from_signed(letters: &[i16]) -> Self {
        let mut out = FreeGroupWord::identity();
        for &l in letters {
            assert!(l != 0, "letter 0 is not a valid signed letter");
            out.push(l);
        }
        out
    }

    fn push(&mut self, l: i16) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn signed_letters(&self) -> &[i16] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        FreeGroupWord(self.0.iter().rev().map(|l| -l).collect())
    }

    /// The positive word this element equals, if any.
    pub fn as_positive(&self) -> Option<Word> {
        if self.0.iter().all(|&l| l > 0) {
            Some(Word::from_letters(self.0.iter().map(|&l| (l - 1) as u8).collect()))
        } else {
            None
        }
    }

    /// Splits a word of shape `P N^-1` with `P, N` positive into `(P, N)`.
    pub fn split_positive_negative(&self) -> Option<(Word, Word)> {
        let split = self.0.iter().position(|&l| l < 0).unwrap_or(self.0.len());
        let (pos, neg) = self.0.split_at(split);
        if neg.iter().any(|&l| l > 0) {
            return None;
        }
        let p = Word::from_letters(pos.iter().map(|&l| (l - 1) as u8).collect());
        let n = Word::from_letters(neg.iter().rev().map(|&l| (-l - 1) as u8).collect());
        Some((p, n))
    }

    /// Parses `1` or letters where uppercase denotes an inverse letter.
    pub fn parse(s: &str, rank: usize) -> Option<Self> {
        if s == "1" {
            return Some(FreeGroupWord::identity());
        }
        let mut letters = Vec::new();
        for c in s.chars() {
            let (l, sign) = if c.is_ascii_lowercase() {
                (c as u8 - b'a', 1)
            } else if c.is_ascii_uppercase() {
                (c as u8 - b'A', -1)
            } else {
                return None;
            };
            if l as usize >= rank {
                return None;
            }
            letters.push(sign * (l as i16 + 1));
        }
        Some(FreeGroupWord::from_signed(&letters))
    }
}

impl Ord for FreeGroupWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FreeGroupWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &l in &self.0 {
            let c = if l > 0 {
                (b'a' + (l - 1) as u8) as char
            } else {
                (b'A' + (-l - 1) as u8) as char
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
