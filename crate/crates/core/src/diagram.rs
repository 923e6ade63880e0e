//! Oriented knot diagrams in PD notation, plus Gauss and DT conversions.
//!
//! A crossing `X(a,b,c,d)` lists its four arc labels counterclockwise,
//! starting from the incoming under-strand: `a` enters under, `c` leaves
//! under, and the over-strand runs between `b` and `d` in a direction
//! recovered from the rest of the diagram. The crossing is positive when
//! the over-strand runs from `d` to `b`.
//!
//! Arcs here are PD edges: the pieces of the knot between consecutive
//! crossings, `2n` of them for `n` crossings. The 0-crossing unknot is a
//! distinguished value with a single arc.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// Four arc labels, counterclockwise from the incoming under-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing(pub [usize; 4]);

impl Crossing {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        Crossing([a, b, c, d])
    }

    pub fn slot(&self, i: usize) -> usize {
        self.0[i]
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "X({a},{b},{c},{d})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    /// Arcs whose label does not occur exactly twice, with their counts.
    Multiplicity(Vec<(usize, usize)>),
    ArcOutOfRange { arc: usize, arc_count: usize },
    /// The over-strand direction at some crossing cannot be made consistent.
    Orientation { crossing: usize },
    /// The successor relation splits into several cycles.
    Disconnected { cycle_len: usize, arc_count: usize },
    GaussUnpaired { id: usize, count: usize },
    GaussStrands { id: usize },
    GaussSigns { id: usize },
    NotPlanar,
    DtOddEntry { value: i64 },
    DtNotPermutation,
    DtNotRealizable,
    DtTooLarge { crossings: usize },
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DiagramError::*;
        match self {
            Multiplicity(arcs) => {
                f.write_str("arc labels must each appear exactly twice; offending:")?;
                for (a, c) in arcs {
                    write!(f, " {a} (x{c})")?;
                }
                Ok(())
            }
            ArcOutOfRange { arc, arc_count } => {
                write!(f, "arc label {arc} outside 1..={arc_count}")
            }
            Orientation { crossing } => {
                write!(f, "cannot orient the over-strand at crossing {}", crossing + 1)
            }
            Disconnected { cycle_len, arc_count } => write!(
                f,
                "arcs do not form a single cycle: the cycle through the first arc has {cycle_len} of {arc_count} arcs"
            ),
            GaussUnpaired { id, count } => {
                write!(f, "crossing {id} appears {count} times, expected 2")
            }
            GaussStrands { id } => write!(f, "crossing {id} must appear once over and once under"),
            GaussSigns { id } => write!(f, "crossing {id} has inconsistent signs"),
            NotPlanar => f.write_str("code is not realizable as a planar diagram"),
            DtOddEntry { value } => write!(f, "DT entry {value} is not a nonzero even number"),
            DtNotPermutation => f.write_str("DT entries must be the even numbers 2..2n in some order"),
            DtNotRealizable => f.write_str("DT code is not realizable as a planar diagram"),
            DtTooLarge { crossings } => write!(f, "DT code with {crossings} crossings is too large"),
        }
    }
}

impl core::error::Error for DiagramError {}

/// Position of an arc endpoint: crossing index and slot.
pub type Port = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KnotDiagram {
    crossings: Vec<Crossing>,
    arc_count: usize,
    /// Slot (1 or 3) where the over-strand enters, per crossing.
    over_in: Vec<u8>,
    start: Vec<Port>,
    end: Vec<Port>,
}

/// A side of an oriented arc; `Left` faces lie to the left of travel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// An arc traversed with a face on its left: along its orientation when
/// `along`, against it otherwise. `Dart { arc, along: true }` borders the
/// face on the arc's [`Side::Left`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub arc: usize,
    pub along: bool,
}

impl Dart {
    pub fn on(arc: usize, side: Side) -> Self {
        Dart { arc, along: side == Side::Left }
    }
}

impl KnotDiagram {
    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        KnotDiagram { crossings: Vec::new(), arc_count: 1, over_in: Vec::new(), start: Vec::new(), end: Vec::new() }
    }

    /// Validates a PD crossing list. The empty list is the unknot.
    pub fn from_pd(crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        let n = crossings.len();
        if n == 0 {
            return Ok(Self::unknot());
        }
        let arc_count = 2 * n;
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for x in &crossings {
            for &l in &x.0 {
                *counts.entry(l).or_insert(0) += 1;
            }
        }
        let bad: Vec<(usize, usize)> = counts.iter().filter(|(_, &c)| c != 2).map(|(&a, &c)| (a, c)).collect();
        if !bad.is_empty() {
            return Err(DiagramError::Multiplicity(bad));
        }
        if let Some(&arc) = counts.keys().find(|&&a| a == 0 || a > arc_count) {
            return Err(DiagramError::ArcOutOfRange { arc, arc_count });
        }

        let over_in = orient(&crossings)?;
        let mut start = vec![(usize::MAX, 0); arc_count];
        let mut end = vec![(usize::MAX, 0); arc_count];
        for (ci, x) in crossings.iter().enumerate() {
            let oi = over_in[ci] as usize;
            end[x.0[0] - 1] = (ci, 0);
            start[x.0[2] - 1] = (ci, 2);
            end[x.0[oi] - 1] = (ci, oi);
            start[x.0[4 - oi] - 1] = (ci, 4 - oi);
        }
        let d = KnotDiagram { crossings, arc_count, over_in, start, end };

        let mut len = 1;
        let mut a = d.successor(1);
        while a != 1 {
            a = d.successor(a);
            len += 1;
        }
        if len != arc_count {
            return Err(DiagramError::Disconnected { cycle_len: len, arc_count });
        }
        Ok(d)
    }

    /// Accepts arbitrary distinct positive labels (each used twice) and
    /// returns the canonical form.
    pub(crate) fn from_labeled(crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        let mut labels: Vec<usize> = crossings.iter().flat_map(|x| x.0).collect();
        labels.sort_unstable();
        labels.dedup();
        let rank = |l: usize| labels.binary_search(&l).unwrap() + 1;
        let compact = crossings
            .iter()
            .map(|x| Crossing([rank(x.0[0]), rank(x.0[1]), rank(x.0[2]), rank(x.0[3])]))
            .collect();
        Ok(Self::from_pd(compact)?.canonical())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn is_trivial(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn sign(&self, crossing: usize) -> Sign {
        if self.over_in[crossing] == 3 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.crossings.len()).map(|c| self.sign(c)).collect()
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossings.len()).map(|c| self.sign(c).value()).sum()
    }

    /// Slot where the over-strand enters crossing `c` (1 or 3).
    pub fn over_in_slot(&self, c: usize) -> usize {
        self.over_in[c] as usize
    }

    pub fn over_in_arc(&self, c: usize) -> usize {
        self.crossings[c].0[self.over_in_slot(c)]
    }

    pub fn over_out_arc(&self, c: usize) -> usize {
        self.crossings[c].0[4 - self.over_in_slot(c)]
    }

    /// Where an arc begins. Panics on the 0-crossing unknot.
    pub fn arc_start(&self, arc: usize) -> Port {
        self.start[arc - 1]
    }

    /// Where an arc ends. Panics on the 0-crossing unknot.
    pub fn arc_end(&self, arc: usize) -> Port {
        self.end[arc - 1]
    }

    /// The arc after `arc` along the orientation.
    pub fn successor(&self, arc: usize) -> usize {
        if self.crossings.is_empty() {
            return arc;
        }
        let (c, s) = self.end[arc - 1];
        self.crossings[c].0[out_slot(s)]
    }

    /// Arcs in traversal order starting at `from`.
    pub fn traversal(&self, from: usize) -> Vec<usize> {
        let mut out = vec![from];
        let mut a = self.successor(from);
        while a != from {
            out.push(a);
            a = self.successor(a);
        }
        out
    }

    /// Relabels arcs in traversal order from arc 1 and sorts crossings.
    pub fn canonical(&self) -> KnotDiagram {
        self.relabeled_from(1)
    }

    /// Relabels so that `base` becomes arc 1, then sorts crossings.
    pub fn relabeled_from(&self, base: usize) -> KnotDiagram {
        if self.crossings.is_empty() {
            return self.clone();
        }
        let mut new_label = vec![0usize; self.arc_count + 1];
        for (i, a) in self.traversal(base).into_iter().enumerate() {
            new_label[a] = i + 1;
        }
        let mut xs: Vec<Crossing> = self
            .crossings
            .iter()
            .map(|x| Crossing(x.0.map(|l| new_label[l])))
            .collect();
        xs.sort();
        Self::from_pd(xs).expect("relabeling preserves validity")
    }

    /// Same diagram with every crossing switched: the mirror image.
    pub fn mirror(&self) -> KnotDiagram {
        let xs = self
            .crossings
            .iter()
            .enumerate()
            .map(|(c, x)| {
                let [a, b, cc, d] = x.0;
                if self.over_in[c] == 1 {
                    Crossing([b, cc, d, a])
                } else {
                    Crossing([d, a, b, cc])
                }
            })
            .collect();
        Self::from_pd(xs).expect("mirroring preserves validity")
    }

    /// Traversal from arc 1. Token `i` is the crossing at the end of arc
    /// `i + 1`; crossing ids are numbered by first appearance.
    pub fn to_gauss(&self) -> GaussCode {
        if self.crossings.is_empty() {
            return GaussCode(Vec::new());
        }
        let mut ids = vec![0usize; self.crossings.len()];
        let mut next = 1;
        let mut tokens = Vec::with_capacity(self.arc_count);
        for a in self.traversal(1) {
            let (c, s) = self.end[a - 1];
            if ids[c] == 0 {
                ids[c] = next;
                next += 1;
            }
            let strand = if s == 0 { Strand::Under } else { Strand::Over };
            tokens.push(GaussToken { strand, id: ids[c], sign: self.sign(c) });
        }
        GaussCode(tokens)
    }

    /// Connected sum along arc 1 of each diagram.
    pub fn connected_sum(&self, other: &KnotDiagram) -> KnotDiagram {
        let mut g = self.to_gauss().0;
        let shift = self.crossings.len();
        g.extend(other.to_gauss().0.into_iter().map(|t| GaussToken { id: t.id + shift, ..t }));
        gauss_to_pd(&GaussCode(g), false).expect("connected sums are realizable").canonical()
    }

    /// Boundary cycles of the complementary regions, as darts.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        if self.crossings.is_empty() {
            return vec![vec![Dart { arc: 1, along: true }], vec![Dart { arc: 1, along: false }]];
        }
        let idx = |d: Dart| 2 * (d.arc - 1) + d.along as usize;
        let mut seen = vec![false; 2 * self.arc_count];
        let mut faces = Vec::new();
        for arc in 1..=self.arc_count {
            for along in [true, false] {
                let d0 = Dart { arc, along };
                if seen[idx(d0)] {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = d0;
                while !seen[idx(d)] {
                    seen[idx(d)] = true;
                    face.push(d);
                    d = self.next_dart(d);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// The dart following `d` around its face.
    pub fn next_dart(&self, d: Dart) -> Dart {
        let (c, j) = if d.along { self.end[d.arc - 1] } else { self.start[d.arc - 1] };
        let k = (j + 3) % 4;
        let arc = self.crossings[c].0[k];
        Dart { arc, along: self.start[arc - 1] == (c, k) }
    }

    /// Face index of every dart, indexed by `2 * (arc - 1) + along`.
    pub fn face_index(&self) -> Vec<usize> {
        let mut out = vec![0; 2 * self.arc_count];
        for (fi, f) in self.faces().iter().enumerate() {
            for d in f {
                out[2 * (d.arc - 1) + d.along as usize] = fi;
            }
        }
        out
    }

    /// Euler characteristic check: `n + 2` faces for `n` crossings.
    pub fn is_planar(&self) -> bool {
        self.faces().len() == self.crossings.len() + 2
    }
}

fn out_slot(in_slot: usize) -> usize {
    match in_slot {
        0 => 2,
        s => 4 - s,
    }
}

/// Recovers the over-strand direction at each crossing by requiring every
/// label to occur once as an incoming and once as an outgoing end.
fn orient(crossings: &[Crossing]) -> Result<Vec<u8>, DiagramError> {
    let n = crossings.len();
    let arcs = 2 * n;
    let mut occ: Vec<Vec<Port>> = vec![Vec::new(); arcs];
    for (ci, x) in crossings.iter().enumerate() {
        for (s, &l) in x.0.iter().enumerate() {
            occ[l - 1].push((ci, s));
        }
    }
    let mut over_in: Vec<Option<u8>> = vec![None; n];
    // true = incoming
    let role = |over_in: &[Option<u8>], (c, s): Port| -> Option<bool> {
        match s {
            0 => Some(true),
            2 => Some(false),
            _ => over_in[c].map(|o| o as usize == s),
        }
    };
    let propagate = |over_in: &mut Vec<Option<u8>>| loop {
        let mut changed = false;
        for c in 0..n {
            if over_in[c].is_some() {
                continue;
            }
            for s in [1usize, 3] {
                let l = crossings[c].0[s];
                let other = if occ[l - 1][0] == (c, s) { occ[l - 1][1] } else { occ[l - 1][0] };
                if let Some(incoming) = role(over_in, other) {
                    // the other end of the label plays the opposite role
                    over_in[c] = Some(if incoming { 4 - s as u8 } else { s as u8 });
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            break;
        }
    };
    propagate(&mut over_in);
    for c in 0..n {
        if over_in[c].is_none() {
            let b = crossings[c].0[1];
            let d = crossings[c].0[3];
            over_in[c] = Some(if d == b % arcs + 1 { 1 } else { 3 });
            propagate(&mut over_in);
        }
    }
    let over_in: Vec<u8> = over_in.into_iter().map(|o| o.unwrap()).collect();
    for (ci, x) in crossings.iter().enumerate() {
        for s in 0..4 {
            let l = x.0[s];
            let roles: Vec<bool> = occ[l - 1].iter().map(|&(c, t)| match t {
                0 => true,
                2 => false,
                _ => over_in[c] as usize == t,
            }).collect();
            if roles[0] == roles[1] {
                return Err(DiagramError::Orientation { crossing: ci });
            }
        }
    }
    Ok(over_in)
}

impl fmt::Display for KnotDiagram {
    /// Space-separated PD tokens; the 0-crossing unknot prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strand {
    Over,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussToken {
    pub strand: Strand,
    pub id: usize,
    pub sign: Sign,
}

/// Signed Gauss code, e.g. `O1-U2-O3-U1-O2-U3-`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussCode(pub Vec<GaussToken>);

impl GaussCode {
    /// Each id twice, once over and once under, with one sign.
    pub fn validate(&self) -> Result<(), DiagramError> {
        let mut seen: BTreeMap<usize, Vec<GaussToken>> = BTreeMap::new();
        for t in &self.0 {
            seen.entry(t.id).or_default().push(*t);
        }
        for (&id, ts) in &seen {
            if ts.len() != 2 {
                return Err(DiagramError::GaussUnpaired { id, count: ts.len() });
            }
            if ts[0].strand == ts[1].strand {
                return Err(DiagramError::GaussStrands { id });
            }
            if ts[0].sign != ts[1].sign {
                return Err(DiagramError::GaussSigns { id });
            }
        }
        Ok(())
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            let s = match t.strand {
                Strand::Over => 'O',
                Strand::Under => 'U',
            };
            write!(f, "{s}{}{}", t.id, t.sign.symbol())?;
        }
        Ok(())
    }
}

/// Builds a PD diagram whose traversal from arc 1 reproduces `g`.
/// With `check_planar`, non-realizable codes are rejected.
pub fn gauss_to_pd(g: &GaussCode, check_planar: bool) -> Result<KnotDiagram, DiagramError> {
    g.validate()?;
    let len = g.0.len();
    if len == 0 {
        return Ok(KnotDiagram::unknot());
    }
    let mut pos: BTreeMap<usize, (usize, usize, Sign)> = BTreeMap::new(); // id -> (under, over, sign)
    for (i, t) in g.0.iter().enumerate() {
        let e = pos.entry(t.id).or_insert((0, 0, t.sign));
        match t.strand {
            Strand::Under => e.0 = i,
            Strand::Over => e.1 = i,
        }
    }
    let inn = |i: usize| i + 1;
    let out = |i: usize| (i + 1) % len + 1;
    let mut xs: Vec<Crossing> = pos
        .values()
        .map(|&(u, o, s)| match s {
            Sign::Positive => Crossing([inn(u), out(o), out(u), inn(o)]),
            Sign::Negative => Crossing([inn(u), inn(o), out(u), out(o)]),
        })
        .collect();
    xs.sort();
    let d = KnotDiagram::from_pd(xs)?;
    if check_planar && !d.is_planar() {
        return Err(DiagramError::NotPlanar);
    }
    Ok(d)
}

/// Diagram from a Dowker–Thistlethwaite code.
///
/// Entry `k` pairs passage `2k - 1` with passage `|a_k|`; a positive even
/// entry means the even passage goes under. Crossing signs are recovered
/// by searching for a planar embedding with the first crossing positive,
/// so the result is determined only up to mirror image.
pub fn dt_to_pd(code: &[i64]) -> Result<KnotDiagram, DiagramError> {
    let n = code.len();
    if n == 0 {
        return Ok(KnotDiagram::unknot());
    }
    if n > 24 {
        return Err(DiagramError::DtTooLarge { crossings: n });
    }
    let mut evens: Vec<i64> = Vec::with_capacity(n);
    for &v in code {
        if v == 0 || v % 2 != 0 {
            return Err(DiagramError::DtOddEntry { value: v });
        }
        evens.push(v.abs());
    }
    let mut sorted = evens.clone();
    sorted.sort_unstable();
    if sorted != (1..=n as i64).map(|k| 2 * k).collect::<Vec<_>>() {
        return Err(DiagramError::DtNotPermutation);
    }
    // passage p (1-based) -> (crossing, strand)
    let mut passages = vec![(0usize, Strand::Over); 2 * n];
    for (k, &v) in code.iter().enumerate() {
        let odd = 2 * k;
        let even = v.unsigned_abs() as usize - 1;
        let (even_strand, odd_strand) = if v > 0 { (Strand::Under, Strand::Over) } else { (Strand::Over, Strand::Under) };
        passages[odd] = (k + 1, odd_strand);
        passages[even] = (k + 1, even_strand);
    }
    for mask in 0u32..(1u32 << (n - 1)) {
        let sign_of = |id: usize| {
            if id == 1 || mask & (1 << (id - 2)) == 0 {
                Sign::Positive
            } else {
                Sign::Negative
            }
        };
        let g = GaussCode(
            passages
                .iter()
                .map(|&(id, strand)| GaussToken { strand, id, sign: sign_of(id) })
                .collect(),
        );
        if let Ok(d) = gauss_to_pd(&g, true) {
            return Ok(d);
        }
    }
    Err(DiagramError::DtNotRealizable)
}

/// `X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)`, all crossings negative.
pub fn trefoil() -> KnotDiagram {
    KnotDiagram::from_pd(vec![
        Crossing::new(1, 4, 2, 5),
        Crossing::new(3, 6, 4, 1),
        Crossing::new(5, 2, 6, 3),
    ])
    .unwrap()
}

/// `X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)`.
pub fn figure_eight() -> KnotDiagram {
    KnotDiagram::from_pd(vec![
        Crossing::new(4, 2, 5, 1),
        Crossing::new(8, 6, 1, 5),
        Crossing::new(6, 3, 7, 4),
        Crossing::new(2, 7, 3, 8),
    ])
    .unwrap()
}

/// The negative Reidemeister-I curl `X(1,2,2,1)`.
pub fn curl() -> KnotDiagram {
    KnotDiagram::from_pd(vec![Crossing::new(1, 2, 2, 1)]).unwrap()
}

pub fn display_arcs(arcs: &[usize]) -> String {
    let parts: Vec<String> = arcs.iter().map(|a| alloc::format!("{a}")).collect();
    parts.join(",")
}
