//! Knot groups from diagrams: the Wirtinger presentation, the peripheral
//! system and the two-legged diagram `Z ⊕ Z -> Z`, `Z ⊕ Z -> G`.
//!
//! Generator `x_i` (0-based index `i - 1`) is the meridian around PD arc
//! `i`. PD arcs are edges between crossings, so an over-strand passing a
//! crossing changes label; the presentation therefore carries one strand
//! relator per crossing, identifying the incoming and outgoing over-arcs,
//! next to the usual conjugation relator.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::KnotDiagram;
use crate::poset::ChainSimplex;
use crate::presentation::{Abelianization, GroupPresentation};
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WirtingerPresentation {
    pub generators: usize,
    /// `x_v^-1 · x_o^ε · x_u · x_o^-ε` per crossing: `o` the incoming
    /// over-arc, `u` and `v` the incoming and outgoing under-arcs.
    pub crossing_relators: Vec<Word>,
    /// `x_out^-1 · x_in` for the over-strand of each crossing.
    pub strand_relators: Vec<Word>,
}

impl WirtingerPresentation {
    pub fn presentation(&self) -> GroupPresentation {
        let mut rels = self.crossing_relators.clone();
        rels.extend(self.strand_relators.iter().cloned());
        GroupPresentation::new(self.generators, rels)
    }
}

fn gen(arc: usize) -> usize {
    arc - 1
}

pub fn wirtinger(d: &KnotDiagram) -> WirtingerPresentation {
    let mut crossing_relators = Vec::with_capacity(d.crossing_count());
    let mut strand_relators = Vec::with_capacity(d.crossing_count());
    for (c, x) in d.crossings().iter().enumerate() {
        let e = d.sign(c).value();
        let o = gen(d.over_in_arc(c));
        let u = gen(x.slot(0));
        let v = gen(x.slot(2));
        crossing_relators.push(Word::from_letters(vec![
            Letter::new(v, true),
            Letter::new(o, e < 0),
            Letter::new(u, false),
            Letter::new(o, e > 0),
        ]));
        strand_relators.push(Word::from_letters(vec![
            Letter::new(gen(d.over_out_arc(c)), true),
            Letter::new(o, false),
        ]));
    }
    WirtingerPresentation { generators: d.arc_count(), crossing_relators, strand_relators }
}

/// The 0-framed longitude based at `base_arc`, freely reduced.
///
/// Walking from the base arc, each under-passage below over-arc `o` at a
/// crossing of sign `ε` contributes `x_o^ε`. With the conjugation relators
/// above, the letter of a later passage goes on the left: the product
/// `a_N ⋯ a_1` is what commutes with `x_base`. The factor `x_base^-writhe`
/// makes it null-homologous.
pub fn longitude(d: &KnotDiagram, base_arc: usize) -> Word {
    if d.is_trivial() {
        return Word::empty();
    }
    let mut letters = Vec::new();
    for a in d.traversal(base_arc) {
        let (c, slot) = d.arc_end(a);
        if slot == 0 {
            let e = d.sign(c).value();
            letters.push(Letter::new(gen(d.over_out_arc(c)), e < 0));
        }
    }
    letters.reverse();
    let w = Word::from_letters(letters);
    let fix = Word::power(gen(base_arc), -d.writhe());
    (w * fix).free_reduce()
}

/// Knot group with a chosen meridian and longitude.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeripheralSystem {
    pub presentation: WirtingerPresentation,
    pub meridian: Word,
    pub longitude: Word,
}

impl PeripheralSystem {
    pub fn group(&self) -> GroupPresentation {
        self.presentation.presentation()
    }

    /// Images of meridian and longitude in `H_1`, oriented so the
    /// meridian class is nonnegative. `None` when `H_1` is not `Z`.
    pub fn homology_images(&self) -> Option<(i64, i64)> {
        let g = self.group();
        let phi = crate::fox::abelianization_map(&g, &Word::generator(0)).ok()?;
        let image = |w: &Word| -> i64 {
            w.exponent_sums(g.generators).iter().zip(&phi).map(|(e, p)| e * p).sum()
        };
        let (m, l) = (image(&self.meridian), image(&self.longitude));
        Some(if m < 0 { (-m, -l) } else { (m, l) })
    }

    pub fn abelianization(&self) -> Abelianization {
        self.group().abelianization()
    }
}

/// Peripheral system based at arc 1.
pub fn peripheral_system(d: &KnotDiagram) -> PeripheralSystem {
    peripheral_system_at(d, 1)
}

/// Peripheral system based at an arbitrary arc; all choices are conjugate.
pub fn peripheral_system_at(d: &KnotDiagram, base_arc: usize) -> PeripheralSystem {
    PeripheralSystem {
        presentation: wirtinger(d),
        meridian: Word::generator(gen(base_arc)),
        longitude: longitude(d, base_arc),
    }
}

/// What the stratified fundamental group assigns to a reduced chain of the
/// two-stratum poset `{0 < 1}` (knot `0`, complement `1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pi1Value {
    /// `π_1` of the knot stratum, `Z`.
    KnotStratum,
    /// `π_1` of the complement, the knot group.
    Complement(GroupPresentation),
    /// `π_1` of the boundary torus of a tubular neighbourhood, `Z ⊕ Z`.
    PeripheralTorus,
    /// Chains outside the pointing get the one-point value.
    Point,
}

/// The cospan `Z <- Z ⊕ Z -> G`, basis `(meridian, longitude)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPi1Diagram {
    /// Projection to the knot stratum: kills the meridian.
    pub leg_to_stratum: [[i64; 2]; 1],
    pub leg_to_complement: PeripheralSystem,
}

impl SPi1Diagram {
    pub fn source_rank(&self) -> usize {
        2
    }

    /// Image of `a·meridian + b·longitude` in the knot stratum.
    pub fn stratum_image(&self, a: i64, b: i64) -> i64 {
        self.leg_to_stratum[0][0] * a + self.leg_to_stratum[0][1] * b
    }

    /// Image of `a·meridian + b·longitude` in the knot group, as a word.
    pub fn complement_image(&self, a: i64, b: i64) -> Word {
        let m = &self.leg_to_complement.meridian;
        let l = &self.leg_to_complement.longitude;
        let pow = |w: &Word, k: i64| {
            let base = if k < 0 { w.inverse() } else { w.clone() };
            (0..k.unsigned_abs()).fold(Word::empty(), |acc, _| acc * base.clone())
        };
        pow(m, a) * pow(l, b)
    }

    /// Value on a chain of `{0 < 1}`, reduced first.
    pub fn value_on(&self, chain: &ChainSimplex) -> Pi1Value {
        match chain.reduced().vertices() {
            [0] => Pi1Value::KnotStratum,
            [1] => Pi1Value::Complement(self.leg_to_complement.group()),
            [0, 1] => Pi1Value::PeripheralTorus,
            _ => Pi1Value::Point,
        }
    }
}

pub fn stratified_pi1(d: &KnotDiagram) -> SPi1Diagram {
    SPi1Diagram { leg_to_stratum: [[0, 1]], leg_to_complement: peripheral_system(d) }
}
