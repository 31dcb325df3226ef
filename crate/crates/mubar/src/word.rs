//! Freely reduced words in an alphabet of signed generators.

use std::fmt;
use std::ops::Mul;

/// A freely reduced word. Letters are stored as nonzero signed integers:
/// `+(g+1)` is generator `g`, `-(g+1)` its inverse, for 0-based generator ids.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<i32>,
}

fn push_reduced(buf: &mut Vec<i32>, x: i32) {
    debug_assert!(x != 0);
    if buf.last().is_some_and(|&y| x == -y) {
        buf.pop();
    } else {
        buf.push(x);
    }
}

impl FreeWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Single-letter word for generator `gen` (0-based), inverted if asked.
    pub fn generator(gen: usize, inverse: bool) -> Self {
        let v = (gen + 1) as i32;
        Self { letters: vec![if inverse { -v } else { v }] }
    }

    /// Builds a word from signed letters (`+k`/`-k` for generator `k-1`),
    /// freely reducing as it goes.
    pub fn from_signed(letters: &[i32]) -> Self {
        let mut buf = Vec::with_capacity(letters.len());
        for &x in letters {
            push_reduced(&mut buf, x);
        }
        Self { letters: buf }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters as `(generator, inverse)` pairs, left to right.
    pub fn letters(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.letters.iter().map(|&x| ((x.unsigned_abs() as usize) - 1, x < 0))
    }

    pub fn as_signed(&self) -> &[i32] {
        &self.letters
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|x| -x).collect() }
    }

    pub fn concat(&self, rhs: &Self) -> Self {
        let mut buf = self.letters.clone();
        for &x in &rhs.letters {
            push_reduced(&mut buf, x);
        }
        Self { letters: buf }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Image under the homomorphism sending generator `g` to `f(g)`.
    pub fn substitute(&self, mut f: impl FnMut(usize) -> FreeWord) -> Self {
        let mut out = Self::empty();
        for (g, inv) in self.letters() {
            let image = f(g);
            out = out.concat(&if inv { image.inverse() } else { image });
        }
        out
    }

    /// Largest generator id appearing, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters().map(|(g, _)| g).max()
    }
}

impl Mul<&FreeWord> for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        self.concat(rhs)
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord{:?}", self.letters)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, &x) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if x > 0 {
                write!(f, "g{x}")?;
            } else {
                write!(f, "g{}^-1", -x)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduction_cancels_adjacent_inverses() {
        let w = FreeWord::from_signed(&[1, 2, -2, -1, 3]);
        assert_eq!(w.as_signed(), &[3]);
    }

    #[test]
    fn inverse_reverses_and_negates() {
        let w = FreeWord::from_signed(&[1, -2, 3]);
        assert_eq!(w.inverse().as_signed(), &[-3, 2, -1]);
    }

    #[test]
    fn pow_negative_uses_inverse() {
        let w = FreeWord::from_signed(&[1, 2]);
        assert_eq!(w.pow(-2).as_signed(), &[-2, -1, -2, -1]);
    }

    #[test]
    fn substitute_is_a_homomorphism_on_letters() {
        let w = FreeWord::from_signed(&[1, -2]);
        let image = w.substitute(|g| FreeWord::from_signed(&[(g as i32) + 10]));
        assert_eq!(image.as_signed(), &[10, -11]);
    }

    fn letter() -> impl Strategy<Value = i32> {
        prop_oneof![1..=4i32, (-4i32..=-1)]
    }

    proptest! {
        #[test]
        fn word_times_inverse_is_trivial(ls in prop::collection::vec(letter(), 0..24)) {
            let w = FreeWord::from_signed(&ls);
            prop_assert!(w.concat(&w.inverse()).is_empty());
            prop_assert!(w.inverse().concat(&w).is_empty());
        }

        #[test]
        fn concat_is_associative(
            a in prop::collection::vec(letter(), 0..12),
            b in prop::collection::vec(letter(), 0..12),
            c in prop::collection::vec(letter(), 0..12),
        ) {
            let (a, b, c) = (FreeWord::from_signed(&a), FreeWord::from_signed(&b), FreeWord::from_signed(&c));
            prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
        }
    }
}
