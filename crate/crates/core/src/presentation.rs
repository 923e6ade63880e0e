//! Finite group presentations, Tietze simplification and abelianization.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::snf::{smith_normal_form, IntMatrix, SmithForm};
use crate::word::Word;

/// `⟨x_1 .. x_n | r_1 .. r_m⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Word>,
}

/// `Z^rank ⊕ Z/torsion_1 ⊕ ...` with `torsion_i | torsion_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Abelianization {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl Abelianization {
    /// Infinite cyclic: the homology of every knot complement.
    pub fn is_integers(&self) -> bool {
        self.rank == 1 && self.torsion.is_empty()
    }
}

impl fmt::Display for Abelianization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<alloc::string::String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(alloc::format!("Z/{t}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Word>) -> Self {
        GroupPresentation { generators, relators }
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, Vec::new())
    }

    /// Every letter refers to an existing generator.
    pub fn is_well_formed(&self) -> bool {
        self.relators
            .iter()
            .all(|r| r.max_generator().is_none_or(|g| g < self.generators))
    }

    /// Relators cyclically reduced; trivial and repeated ones dropped.
    pub fn normalized(&self) -> Self {
        let mut seen = BTreeSet::new();
        let relators = self
            .relators
            .iter()
            .map(|r| r.cyclic_reduce())
            .filter(|r| !r.is_empty() && seen.insert(r.cyclic_canonical()))
            .collect();
        Self::new(self.generators, relators)
    }

    /// Relators as rows of generator exponent sums.
    pub fn relation_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i128>> = self
            .relators
            .iter()
            .map(|r| r.exponent_sums(self.generators).into_iter().map(i128::from).collect())
            .collect();
        IntMatrix::from_rows(&rows, self.generators)
    }

    pub fn smith_form(&self) -> SmithForm {
        smith_normal_form(&self.relation_matrix())
    }

    pub fn abelianization(&self) -> Abelianization {
        let s = self.smith_form();
        let diag = s.diagonal();
        let nonzero = diag.iter().filter(|&&d| d != 0).count();
        Abelianization {
            rank: self.generators - nonzero,
            torsion: diag.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect(),
        }
    }

    /// Simplified presentation of the same group.
    pub fn tietze_simplify(&self) -> GroupPresentation {
        self.tietze_simplify_tracked().presentation
    }

    /// Eliminates generators that occur exactly once in some relator.
    ///
    /// Each round picks the shortest relator containing such a generator,
    /// breaking ties by the smallest generator index and then by relator
    /// position, solves it for that generator and substitutes the solution
    /// everywhere. Relators are kept cyclically reduced and deduplicated up
    /// to rotation and inversion. The surviving generators keep their
    /// relative order.
    pub fn tietze_simplify_tracked(&self) -> Simplified {
        let n = self.generators;
        let mut images: Vec<Word> = (0..n).map(Word::generator).collect();
        let mut alive = alloc::vec![true; n];
        let mut relators = self.normalized().relators;

        loop {
            let mut choice: Option<(usize, usize, usize)> = None; // (len, gen, relator)
            for (ri, r) in relators.iter().enumerate() {
                let mut counts = alloc::collections::BTreeMap::new();
                for l in r.letters() {
                    *counts.entry(l.gen).or_insert(0usize) += 1;
                }
                if let Some((&g, _)) = counts.iter().find(|(_, &c)| c == 1) {
                    let key = (r.len(), g, ri);
                    if choice.is_none_or(|c| key < c) {
                        choice = Some(key);
                    }
                }
            }
            let Some((_, g, ri)) = choice else { break };
            let r = relators.remove(ri);
            let solution = solve_for(&r, g);
            for rel in relators.iter_mut() {
                *rel = rel.substitute_one(g, &solution).cyclic_reduce();
            }
            for img in images.iter_mut() {
                *img = img.substitute_one(g, &solution);
            }
            alive[g] = false;
            let mut seen = BTreeSet::new();
            relators.retain(|r| !r.is_empty() && seen.insert(r.cyclic_canonical()));
        }

        // renumber the surviving generators
        let mut renumber = alloc::vec![usize::MAX; n];
        let mut next = 0;
        for g in 0..n {
            if alive[g] {
                renumber[g] = next;
                next += 1;
            }
        }
        let rename: Vec<Word> = (0..n)
            .map(|g| if alive[g] { Word::generator(renumber[g]) } else { Word::empty() })
            .collect();
        let relators = relators.iter().map(|r| r.substitute(&rename)).collect();
        let images = images.iter().map(|w| w.substitute(&rename)).collect();
        let kept = (0..n).filter(|&g| alive[g]).collect();
        Simplified { presentation: GroupPresentation::new(next, relators), images, kept }
    }
}

/// Solves `r = 1` for the single occurrence of `gen`.
fn solve_for(r: &Word, gen: usize) -> Word {
    let letters = r.letters();
    let pos = letters.iter().position(|l| l.gen == gen).unwrap();
    let before = Word::from_letters(letters[..pos].to_vec());
    let after = Word::from_letters(letters[pos + 1..].to_vec());
    // before · x^e · after = 1  =>  x^e = before^-1 after^-1
    let xe = before.inverse() * after.inverse();
    if letters[pos].inv {
        xe.inverse()
    } else {
        xe
    }
}

/// Output of [`GroupPresentation::tietze_simplify_tracked`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    pub presentation: GroupPresentation,
    /// Image of each original generator as a word in the new generators.
    pub images: Vec<Word>,
    /// Original index of each surviving generator.
    pub kept: Vec<usize>,
}

impl Simplified {
    /// Rewrites a word in the original generators.
    pub fn map_word(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }
}

impl fmt::Display for GroupPresentation {
    /// `gens: n` then one `rel: ...` line per relator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators)?;
        for r in &self.relators {
            writeln!(f, "rel: {r}")?;
        }
        Ok(())
    }
}
