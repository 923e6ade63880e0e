//! Words in a free group.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn exponent(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    /// 1-based signed index: `x3^-1` is `-3`.
    pub fn signed(self) -> i64 {
        let g = self.gen as i64 + 1;
        if self.inv {
            -g
        } else {
            g
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inv != other.inv
    }
}

/// A sequence of letters. Not reduced unless produced by a reducing
/// operation; the multiplication operator reduces at the seam.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn generator(gen: usize) -> Self {
        Word(alloc::vec![Letter::new(gen, false)])
    }

    /// `gen^exp`, written out letter by letter.
    pub fn power(gen: usize, exp: i64) -> Self {
        let l = Letter::new(gen, exp < 0);
        Word((0..exp.unsigned_abs()).map(|_| l).collect())
    }

    /// From 1-based signed indices (`-2` is `x2^-1`). Zero is not allowed.
    pub fn from_signed(idx: &[i64]) -> Self {
        Word(
            idx.iter()
                .map(|&i| {
                    assert!(i != 0, "generator indices are 1-based");
                    Letter::new(i.unsigned_abs() as usize - 1, i < 0)
                })
                .collect(),
        )
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

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Removes adjacent cancelling pairs; idempotent.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match out.last() {
                Some(&top) if top.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// Free reduction followed by stripping cancelling first/last letters.
    pub fn cyclic_reduce(&self) -> Word {
        let w = self.free_reduce();
        let s = &w.0;
        let (mut i, mut j) = (0usize, s.len());
        while j - i >= 2 && s[i].cancels(s[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word(s[i..j].to_vec())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Replaces every generator by its image word, then reduces.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for l in &self.0 {
            let img = &images[l.gen];
            if l.inv {
                out.extend(img.0.iter().rev().map(|x| x.inverse()));
            } else {
                out.extend_from_slice(&img.0);
            }
        }
        Word(out).free_reduce()
    }

    /// Replaces one generator by a word; other letters are kept.
    pub fn substitute_one(&self, gen: usize, image: &Word) -> Word {
        let mut out = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if l.gen == gen {
                if l.inv {
                    out.extend(image.0.iter().rev().map(|x| x.inverse()));
                } else {
                    out.extend_from_slice(&image.0);
                }
            } else {
                out.push(l);
            }
        }
        Word(out).free_reduce()
    }

    /// Total exponent of each generator: the image in the abelianization
    /// of the free group.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = alloc::vec![0i64; ngens];
        for l in &self.0 {
            v[l.gen] += l.exponent();
        }
        v
    }

    pub fn occurrences(&self, gen: usize) -> usize {
        self.0.iter().filter(|l| l.gen == gen).count()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    /// Least rotation of the cyclic reduction of `self` or of its inverse.
    /// Two relators normalize equally iff one is a cyclic permutation of
    /// the other or of its inverse.
    pub fn cyclic_canonical(&self) -> Word {
        let w = self.cyclic_reduce();
        if w.is_empty() {
            return w;
        }
        let best = |s: &[Letter]| -> Vec<Letter> {
            let n = s.len();
            (0..n)
                .map(|r| s[r..].iter().chain(&s[..r]).copied().collect::<Vec<_>>())
                .min()
                .unwrap()
        };
        let a = best(&w.0);
        let b = best(&w.inverse().0);
        Word(core::cmp::min(a, b))
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        (a.clone() * b.clone()) * (a.inverse() * b.inverse())
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(mut self, rhs: Word) -> Word {
        for l in rhs.0 {
            match self.0.last() {
                Some(&top) if top.cancels(l) => {
                    self.0.pop();
                }
                _ => self.0.push(l),
            }
        }
        self
    }
}

impl fmt::Display for Word {
    /// Space-separated signed generator names: `x1 x2 -x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l.inv {
                f.write_str("-")?;
            }
            write!(f, "x{}", l.gen + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(i: &[i64]) -> Word {
        Word::from_signed(i)
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w(&[1, -1]).free_reduce(), Word::empty());
        assert_eq!(w(&[1, 2, -2, 1]).free_reduce(), w(&[1, 1]));
        assert_eq!(w(&[2, 1, 3, -1, -2]).free_reduce(), w(&[2, 1, 3, -1, -2]));
        assert_eq!(w(&[2, 1, 3, -1, -2]).cyclic_reduce(), w(&[3]));
        assert_eq!(w(&[1, -1]).cyclic_reduce(), Word::empty());
    }

    #[test]
    fn canonical_matches_rotations_and_inverses() {
        let r = w(&[1, 2, 1, -2, -1, -2]);
        let rot = w(&[2, 1, -2, -1, -2, 1]);
        assert_eq!(r.cyclic_canonical(), rot.cyclic_canonical());
        assert_eq!(r.cyclic_canonical(), r.inverse().cyclic_canonical());
        assert_ne!(r.cyclic_canonical(), w(&[1, 2, -1, -2]).cyclic_canonical());
    }

    #[test]
    fn substitution_and_display() {
        let images = [w(&[2, 1, -2]), w(&[2])];
        assert_eq!(w(&[1, -2]).substitute(&images), w(&[2, 1, -2, -2]));
        assert_eq!(alloc::format!("{}", w(&[1, -3])), "x1 -x3");
        assert_eq!(w(&[1, 2, -1]).exponent_sums(3), alloc::vec![0, 1, 0]);
        assert_eq!(Word::power(0, -2), w(&[-1, -1]));
        assert_eq!(Word::commutator(&w(&[1]), &w(&[1, 1])), Word::empty());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec((0usize..3, any::<bool>()), 0..24)
            .prop_map(|v| Word::from_letters(v.into_iter().map(|(g, i)| Letter::new(g, i)).collect()))
    }

    proptest! {
        #[test]
        fn free_reduce_is_idempotent(x in arb_word()) {
            let r = x.free_reduce();
            prop_assert!(r.is_reduced());
            prop_assert_eq!(r.free_reduce(), r.clone());
            prop_assert_eq!(r.exponent_sums(3), x.exponent_sums(3));
        }

        #[test]
        fn inverse_cancels(x in arb_word()) {
            prop_assert!((x.clone() * x.inverse()).free_reduce().is_empty());
        }
    }
}
