//! Words over `{L, R}` and their bijection with the rationals in `(0, 1)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::rational::{farey_sum, Fraction, RationalError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("cannot parse word {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("{0} is outside the open interval (0, 1)")]
    OutsideUnitInterval(Fraction),
    #[error("fractions {0} and {1} of the joined words are not ascending Farey neighbours")]
    NotNeighbors(Fraction, Fraction),
    #[error("joined words have equal length {0}")]
    EqualLengths(usize),
    #[error(transparent)]
    Rational(#[from] RationalError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn swap(self) -> Self {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LRWord {
    letters: Vec<Letter>,
}

impl LRWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// `l(w)`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `|w|_L`.
    pub fn count_l(&self) -> usize {
        self.letters.iter().filter(|&&c| c == Letter::L).count()
    }

    /// `|w|_R`.
    pub fn count_r(&self) -> usize {
        self.len() - self.count_l()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    /// The word with its first letter removed.
    pub fn tail(&self) -> Self {
        Self::new(self.letters.iter().skip(1).copied().collect())
    }

    pub fn suffix(&self, start: usize) -> Self {
        Self::new(self.letters[start..].to_vec())
    }

    pub fn prepend(&self, c: Letter) -> Self {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(c);
        letters.extend_from_slice(&self.letters);
        Self::new(letters)
    }

    pub fn append(&self, c: Letter) -> Self {
        let mut letters = self.letters.clone();
        letters.push(c);
        Self::new(letters)
    }

    /// Every word of length exactly `n`, in lexicographic order (`L < R`).
    pub fn all_of_length(n: usize) -> impl Iterator<Item = LRWord> {
        (0u64..1 << n).map(move |bits| {
            let letters = (0..n)
                .map(|i| {
                    if bits >> (n - 1 - i) & 1 == 0 {
                        Letter::L
                    } else {
                        Letter::R
                    }
                })
                .collect();
            LRWord::new(letters)
        })
    }

    /// Every word of length at most `n`, shortest first.
    pub fn all_up_to(n: usize) -> impl Iterator<Item = LRWord> {
        (0..=n).flat_map(LRWord::all_of_length)
    }

    /// Compact rendering with exponents, e.g. `RL^2RL`.
    pub fn power_notation(&self) -> String {
        if self.is_empty() {
            return "-".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.len() {
            let c = self.letters[i];
            let mut j = i;
            while j < self.len() && self.letters[j] == c {
                j += 1;
            }
            out.push(c.as_char());
            if j - i > 1 {
                out.push_str(&format!("^{}", j - i));
            }
            i = j;
        }
        out
    }
}

impl fmt::Display for LRWord {
    /// Plain letters; the empty word is `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        for c in &self.letters {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LRWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LRWord({self})")
    }
}

impl FromStr for LRWord {
    type Err = WordError;

    /// Letters `L`/`R` with optional `^k` repetition; `-` or `∅` is empty.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| WordError::Parse {
            input: s.to_string(),
            reason,
        };
        let s = s.trim();
        if s == "-" || s == "∅" || s.is_empty() {
            return Ok(Self::empty());
        }
        let chars: Vec<char> = s.chars().collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = match chars[i] {
                'L' => Letter::L,
                'R' => Letter::R,
                other => return Err(err(format!("unexpected character {other:?}"))),
            };
            i += 1;
            let mut reps = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                reps = digits
                    .parse()
                    .map_err(|_| err("missing or invalid exponent".into()))?;
            }
            letters.extend(std::iter::repeat(c).take(reps));
        }
        Ok(Self::new(letters))
    }
}

/// The word of `x` in `(0, 1)`: walk the Stern-Brocot tree down from `1/2`,
/// recording `L` for left and `R` for right, then reverse.
pub fn word_of(x: Fraction) -> Result<LRWord, WordError> {
    if !x.in_unit_interval() {
        return Err(WordError::OutsideUnitInterval(x));
    }
    let (mut lo, mut hi) = (Fraction::ZERO, Fraction::ONE);
    let mut cur = Fraction::HALF;
    let mut walk = Vec::new();
    while cur != x {
        if x < cur {
            walk.push(Letter::L);
            hi = cur;
        } else {
            walk.push(Letter::R);
            lo = cur;
        }
        cur = farey_sum(lo, hi)?;
    }
    walk.reverse();
    Ok(LRWord::new(walk))
}

/// Folds the letters from `1/2`: `L: p/q -> p/(p+q)`, `R: p/q -> q/(2q-p)`.
pub fn fraction_of(w: &LRWord) -> Fraction {
    let (mut p, mut q) = (1u64, 2u64);
    for c in w.letters() {
        (p, q) = match c {
            Letter::L => (p, p.checked_add(q).expect("word fraction overflow")),
            Letter::R => (q, (2 * q).checked_sub(p).expect("word fraction overflow")),
        };
    }
    Fraction::new(p, q).expect("nonzero denominator")
}

/// Swaps `L` and `R`.
pub fn i_word(w: &LRWord) -> LRWord {
    LRWord::new(w.letters().iter().map(|c| c.swap()).collect())
}

/// Reverses the word.
pub fn r_word(w: &LRWord) -> LRWord {
    LRWord::new(w.letters().iter().rev().copied().collect())
}

pub fn ir_word(w: &LRWord) -> LRWord {
    i_word(&r_word(w))
}

/// The word of the Farey sum of two neighbouring word fractions, given in
/// ascending order: `L w2` if `w` is shorter, `R w` if `w2` is shorter.
pub fn join(w: &LRWord, w2: &LRWord) -> Result<LRWord, WordError> {
    let (x, y) = (fraction_of(w), fraction_of(w2));
    if x.det(y) != 1 {
        return Err(WordError::NotNeighbors(x, y));
    }
    match w.len().cmp(&w2.len()) {
        std::cmp::Ordering::Less => Ok(w2.prepend(Letter::L)),
        std::cmp::Ordering::Greater => Ok(w.prepend(Letter::R)),
        std::cmp::Ordering::Equal => Err(WordError::EqualLengths(w.len())),
    }
}
