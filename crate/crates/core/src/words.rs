//! Relator words x^{α₁}y^{β₁}⋯x^{α_k}y^{β_k} with αᵢ ∈ {1,2}, βᵢ ∈ {1,2,3}.
//!
//! Two words are equivalent when they are related by cyclic permutation,
//! inversion, x ↦ x² or y ↦ y³. The canonical representative of a class is
//! its lexicographically least member, comparing syllables as (α, β) pairs.

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use alloc::string::String;
use alloc::vec::Vec;

/// One syllable x^alpha y^beta.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    pub alpha: u8,
    pub beta: u8,
}

impl Syllable {
    pub const fn new(alpha: u8, beta: u8) -> Self {
        Syllable { alpha, beta }
    }
}

/// The six syllables in increasing order.
pub const SYLLABLES: [Syllable; 6] = [
    Syllable::new(1, 1),
    Syllable::new(1, 2),
    Syllable::new(1, 3),
    Syllable::new(2, 1),
    Syllable::new(2, 2),
    Syllable::new(2, 3),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordError {
    Empty,
    /// Byte offset and description.
    Syntax(usize, String),
    InvalidSyllable(u8, u8),
    /// A y-exponent of 2 appears where none is allowed.
    KappaNonZero,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::Empty => f.write_str("empty word"),
            WordError::Syntax(pos, msg) => write!(f, "syntax error at position {}: {}", pos, msg),
            WordError::InvalidSyllable(a, b) => write!(f, "invalid syllable x^{} y^{}", a, b),
            WordError::KappaNonZero => f.write_str("word contains y^2"),
        }
    }
}

impl core::error::Error for WordError {}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn new(syllables: Vec<Syllable>) -> Result<Self, WordError> {
        if syllables.is_empty() {
            return Err(WordError::Empty);
        }
        if let Some(s) = syllables
            .iter()
            .find(|s| !(1..=2).contains(&s.alpha) || !(1..=3).contains(&s.beta))
        {
            return Err(WordError::InvalidSyllable(s.alpha, s.beta));
        }
        Ok(Word { syllables })
    }

    /// Panics on invalid pairs; meant for literals.
    pub fn from_pairs(pairs: &[(u8, u8)]) -> Self {
        Word::new(pairs.iter().map(|&(a, b)| Syllable::new(a, b)).collect()).expect("valid word")
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Syllable length k.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn stats(&self) -> WordStats {
        word_stats(self)
    }

    pub fn canonical(&self) -> Word {
        canonicalize(self)
    }

    pub fn is_proper_power(&self) -> bool {
        is_proper_power(self)
    }

    pub fn rotate(&self, r: usize) -> Word {
        let mut s = self.syllables.clone();
        s.rotate_left(r % self.len());
        Word { syllables: s }
    }

    /// w⁻¹ rewritten with positive exponents and rotated to start with x.
    pub fn inverse(&self) -> Word {
        Word {
            syllables: (0..self.len()).map(|i| inverse_syllable(&self.syllables, i)).collect(),
        }
    }

    /// Image under x ↦ x².
    pub fn flip_x(&self) -> Word {
        self.map(|s| Syllable::new(3 - s.alpha, s.beta))
    }

    /// Image under y ↦ y³.
    pub fn flip_y(&self) -> Word {
        self.map(|s| Syllable::new(s.alpha, 4 - s.beta))
    }

    fn map(&self, f: impl Fn(Syllable) -> Syllable) -> Word {
        Word {
            syllables: self.syllables.iter().map(|&s| f(s)).collect(),
        }
    }

    /// The word as letters: `(generator, exponent)` with generator 0 = x,
    /// 1 = y.
    pub fn letters(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.syllables
            .iter()
            .flat_map(|s| [(0u8, s.alpha), (1u8, s.beta)])
    }
}

/// Syllable i of the inverse: (3 − α_{k−i}, 4 − β_{k−i−1}), indices mod k
/// and 1-based on the right.
fn inverse_syllable(s: &[Syllable], i: usize) -> Syllable {
    let k = s.len();
    let a = s[k - 1 - i].alpha;
    let b = s[(2 * k - 2 - i) % k].beta;
    Syllable::new(3 - a, 4 - b)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.syllables {
            f.write_str("x")?;
            if s.alpha != 1 {
                write!(f, "{}", s.alpha)?;
            }
            f.write_str("y")?;
            if s.beta != 1 {
                write!(f, "{}", s.beta)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// Parses `x`/`x2` followed by `y`/`y2`/`y3`, repeated.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(WordError::Empty);
    }
    let mut pos = 0;
    let mut syllables = Vec::new();
    let exponent = |pos: &mut usize, max: u8| -> Result<u8, WordError> {
        match bytes.get(*pos) {
            Some(&c) if c.is_ascii_digit() => {
                let e = c - b'0';
                if e == 0 || e > max {
                    return Err(WordError::Syntax(*pos, alloc::format!("exponent must be 1..={}", max)));
                }
                *pos += 1;
                if bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
                    return Err(WordError::Syntax(*pos, String::from("multi-digit exponent")));
                }
                Ok(e)
            }
            _ => Ok(1),
        }
    };
    while pos < bytes.len() {
        match bytes[pos] {
            b'x' => pos += 1,
            b'y' if syllables.is_empty() => {
                return Err(WordError::Syntax(pos, String::from("word must start with an x-syllable")))
            }
            b'y' => return Err(WordError::Syntax(pos, String::from("expected x after y-syllable"))),
            _ => return Err(WordError::Syntax(pos, String::from("expected 'x'"))),
        }
        let alpha = exponent(&mut pos, 2)?;
        match bytes.get(pos) {
            Some(b'y') => pos += 1,
            Some(b'x') => return Err(WordError::Syntax(pos, String::from("expected y after x-syllable"))),
            Some(_) => return Err(WordError::Syntax(pos, String::from("expected 'y'"))),
            None => return Err(WordError::Syntax(pos, String::from("word must end with a y-syllable"))),
        }
        let beta = exponent(&mut pos, 3)?;
        syllables.push(Syllable::new(alpha, beta));
    }
    Word::new(syllables)
}

/// Compares the orbit element selected by (`inverse`, `fx`, `fy`, `rot`)
/// against `w` syllable by syllable, without materializing it.
fn compare_variant(w: &[Syllable], inverse: bool, fx: bool, fy: bool, rot: usize, against: &[Syllable]) -> Ordering {
    let k = w.len();
    for (i, target) in against.iter().enumerate() {
        let j = (i + rot) % k;
        let mut s = if inverse { inverse_syllable(w, j) } else { w[j] };
        if fx {
            s.alpha = 3 - s.alpha;
        }
        if fy {
            s.beta = 4 - s.beta;
        }
        match s.cmp(target) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn variants(k: usize) -> impl Iterator<Item = (bool, bool, bool, usize)> {
    [false, true].into_iter().flat_map(move |inv| {
        [false, true].into_iter().flat_map(move |fx| {
            [false, true]
                .into_iter()
                .flat_map(move |fy| (0..k).map(move |r| (inv, fx, fy, r)))
        })
    })
}

/// The full orbit of `w` (with repetitions) under the equivalence.
pub fn orbit(w: &Word) -> Vec<Word> {
    let s = &w.syllables;
    variants(w.len())
        .map(|(inv, fx, fy, r)| {
            let base = if inv { w.inverse() } else { w.clone() };
            let base = if fx { base.flip_x() } else { base };
            let base = if fy { base.flip_y() } else { base };
            debug_assert_eq!(base.len(), s.len());
            base.rotate(r)
        })
        .collect()
}

pub fn canonicalize(w: &Word) -> Word {
    let s = &w.syllables;
    let mut best = w.clone();
    for (inv, fx, fy, r) in variants(w.len()) {
        if compare_variant(s, inv, fx, fy, r, &best.syllables) == Ordering::Less {
            let mut cand = if inv { w.inverse() } else { w.clone() };
            if fx {
                cand = cand.flip_x();
            }
            if fy {
                cand = cand.flip_y();
            }
            best = cand.rotate(r);
        }
    }
    best
}

pub fn is_canonical(w: &Word) -> bool {
    let s = &w.syllables;
    variants(w.len()).all(|(inv, fx, fy, r)| compare_variant(s, inv, fx, fy, r, s) != Ordering::Less)
}

/// True iff the syllable sequence has a period p < k with p | k.
pub fn is_proper_power(w: &Word) -> bool {
    let s = &w.syllables;
    let k = s.len();
    (1..k)
        .filter(|p| k.is_multiple_of(*p))
        .any(|p| (p..k).all(|i| s[i] == s[i - p]))
}

/// Iterator over one canonical representative per class of
/// non-proper-power words of length k, in increasing lexicographic order.
pub struct CanonicalWords {
    k: usize,
    digits: Vec<u8>,
    done: bool,
}

impl CanonicalWords {
    fn current(&self) -> Vec<Syllable> {
        self.digits.iter().map(|&d| SYLLABLES[d as usize]).collect()
    }

    fn advance(&mut self) {
        // The first syllable is fixed at (1,1) or (1,2); only those can lead
        // a canonical word.
        for i in (0..self.k).rev() {
            let limit = if i == 0 { 1 } else { 5 };
            if self.digits[i] < limit {
                self.digits[i] += 1;
                for d in &mut self.digits[i + 1..] {
                    *d = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for CanonicalWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        while !self.done {
            let s = self.current();
            self.advance();
            let w = Word { syllables: s };
            if is_canonical(&w) && !is_proper_power(&w) {
                return Some(w);
            }
        }
        None
    }
}

/// Canonical, non-proper-power words of length `k` (k ≥ 1).
pub fn enumerate_words(k: usize) -> CanonicalWords {
    assert!(k >= 1, "word length must be positive");
    CanonicalWords {
        k,
        digits: alloc::vec![0; k],
        done: false,
    }
}

/// Every word of length k in lexicographic order (6^k of them).
pub fn all_words(k: usize) -> impl Iterator<Item = Word> {
    let total = 6usize.pow(k as u32);
    (0..total).map(move |mut n| {
        let mut s = alloc::vec![SYLLABLES[0]; k];
        for slot in s.iter_mut().rev() {
            *slot = SYLLABLES[n % 6];
            n /= 6;
        }
        Word { syllables: s }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WordStats {
    pub sum_alpha: i64,
    pub sum_beta: i64,
    /// Number of syllables with β = 2.
    pub kappa: usize,
    /// (4∑α + 3∑β) mod 12.
    pub mod12: i64,
}

pub fn word_stats(w: &Word) -> WordStats {
    let sum_alpha: i64 = w.syllables.iter().map(|s| s.alpha as i64).sum();
    let sum_beta: i64 = w.syllables.iter().map(|s| s.beta as i64).sum();
    WordStats {
        sum_alpha,
        sum_beta,
        kappa: w.syllables.iter().filter(|s| s.beta == 2).count(),
        mod12: (4 * sum_alpha + 3 * sum_beta).rem_euclid(12),
    }
}

/// w̄ over ⟨x, y | x³ = y² = 1⟩: every y³ becomes y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientWord {
    pub word: Word,
    pub proper_power: bool,
}

pub fn quotient_word(w: &Word) -> Result<QuotientWord, WordError> {
    if w.syllables.iter().any(|s| s.beta == 2) {
        return Err(WordError::KappaNonZero);
    }
    let word = w.map(|s| Syllable::new(s.alpha, 1));
    let proper_power = is_proper_power(&word);
    Ok(QuotientWord { word, proper_power })
}
