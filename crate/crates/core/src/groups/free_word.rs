use core::fmt;

use alloc::vec::Vec;

/// A letter: `g + 1` for generator `g`, `-(g + 1)` for its inverse.
pub type Letter = i32;

pub fn letter(generator: usize, inverse: bool) -> Letter {
    let l = generator as Letter + 1;
    if inverse {
        -l
    } else {
        l
    }
}

pub fn generator_of(l: Letter) -> usize {
    l.unsigned_abs() as usize - 1
}

/// Column in a coset table: `2g` for g, `2g + 1` for g⁻¹.
pub fn column_of(l: Letter) -> usize {
    2 * generator_of(l) + usize::from(l < 0)
}

/// Inverse of [`column_of`].
pub fn letter_of_column(c: usize) -> Letter {
    letter(c / 2, c % 2 == 1)
}

/// A word in a free group, not necessarily reduced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord(pub Vec<Letter>);

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        FreeWord(alloc::vec![letter(g, false)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FreeWord(v)
    }

    /// `self^n`; negative exponents invert.
    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        FreeWord(v)
    }

    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    /// Freely and cyclically reduced.
    pub fn cyclic_reduce(&self) -> Self {
        let r = self.free_reduce().0;
        let mut start = 0;
        let mut end = r.len();
        while end - start >= 2 && r[start] == -r[end - 1] {
            start += 1;
            end -= 1;
        }
        FreeWord(r[start..end].to_vec())
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = alloc::vec![0i64; ngens];
        for &l in &self.0 {
            v[generator_of(l)] += if l > 0 { 1 } else { -1 };
        }
        v
    }

    /// Least representative of the cyclic word under rotation and
    /// inversion; assumes cyclic reduction.
    pub fn cyclic_key(&self) -> Self {
        let inv = self.inverse();
        let n = self.0.len();
        let mut best = self.clone();
        for base in [self, &inv] {
            for r in 0..n {
                let mut v = base.0.clone();
                v.rotate_left(r);
                if v < best.0 {
                    best = FreeWord(v);
                }
            }
        }
        best
    }

    /// Replaces every letter by a word (generator images).
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut v = Vec::new();
        for &l in &self.0 {
            let img = &images[generator_of(l)];
            if l > 0 {
                v.extend_from_slice(&img.0);
            } else {
                v.extend(img.0.iter().rev().map(|x| -x));
            }
        }
        FreeWord(v)
    }

    /// Renders with the given generator names, `g^-1` for inverses.
    pub fn display<'a>(&'a self, names: &'a [alloc::string::String]) -> impl fmt::Display + 'a {
        DisplayWord { word: self, names }
    }
}

struct DisplayWord<'a> {
    word: &'a FreeWord,
    names: &'a [alloc::string::String],
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        let letters = &self.word.0;
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let name = &self.names[generator_of(l)];
            let e = if l < 0 { -(run as i64) } else { run as i64 };
            if e == 1 {
                write!(f, "{}", name)?;
            } else {
                write!(f, "{}^{}", name, e)?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn reductions() {
        let w = FreeWord(vec![1, 2, -2, -1, 1]);
        assert_eq!(w.free_reduce(), FreeWord(vec![1]));
        let c = FreeWord(vec![-1, 2, 2, 1]);
        assert_eq!(c.cyclic_reduce(), FreeWord(vec![2, 2]));
        assert_eq!(FreeWord(vec![1, 2]).pow(-2), FreeWord(vec![-2, -1, -2, -1]));
    }

    #[test]
    fn cyclic_key_identifies_rotations_and_inverses() {
        let a = FreeWord(vec![1, 2, 2]);
        let b = FreeWord(vec![2, 1, 2]);
        let c = FreeWord(vec![-2, -2, -1]);
        assert_eq!(a.cyclic_key(), b.cyclic_key());
        assert_eq!(a.cyclic_key(), c.cyclic_key());
    }

    #[test]
    fn columns_round_trip() {
        for c in 0..6 {
            assert_eq!(column_of(letter_of_column(c)), c);
        }
    }
}
