//! Reidemeister moves on PD diagrams.
//!
//! Sites are named by arc labels and sides of the input diagram, so a
//! [`Move`] is meaningful only for the diagram it was listed from. Every
//! output is relabeled canonically (see [`KnotDiagram::canonical`]); new
//! crossings keep the label of the first piece of each split arc, and
//! removals keep the smallest label of each merged arc.

use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{Crossing, Dart, KnotDiagram, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Curl on `arc`, its loop in the face on `side`; the strand passes
    /// over first when `over_first`.
    R1Add { arc: usize, side: Side, over_first: bool },
    /// Undo the curl at a crossing with a loop arc.
    R1Remove { crossing: usize },
    /// Push a finger of `over.0` across the face on its side `over.1` and
    /// over `under.0`, which borders the same face on `under.1`.
    R2Add { over: (usize, Side), under: (usize, Side) },
    /// Pull apart the bigon bounded by two arcs.
    R2Remove { arcs: [usize; 2] },
    /// Slide a strand across the triangle bounded by three arcs.
    R3 { arcs: [usize; 3] },
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::R1Add { .. } => MoveKind::R1Add,
            Move::R1Remove { .. } => MoveKind::R1Remove,
            Move::R2Add { .. } => MoveKind::R2Add,
            Move::R2Remove { .. } => MoveKind::R2Remove,
            Move::R3 { .. } => MoveKind::R3,
        }
    }

    /// Change in writhe caused by the move, when it is known up front.
    pub fn writhe_change(&self) -> Option<i64> {
        match self {
            Move::R1Add { .. } | Move::R1Remove { .. } => None,
            _ => Some(0),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: Side| if s == Side::Left { "L" } else { "R" };
        match *self {
            Move::R1Add { arc, side: s, over_first } => {
                write!(f, "R1+ arc {arc} {} {}", side(s), if over_first { "over" } else { "under" })
            }
            Move::R1Remove { crossing } => write!(f, "R1- crossing {}", crossing + 1),
            Move::R2Add { over, under } => {
                write!(f, "R2+ {}{} over {}{}", over.0, side(over.1), under.0, side(under.1))
            }
            Move::R2Remove { arcs } => write!(f, "R2- arcs {},{}", arcs[0], arcs[1]),
            Move::R3 { arcs } => write!(f, "R3 arcs {},{},{}", arcs[0], arcs[1], arcs[2]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveError(pub Move);

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "move {} does not apply to this diagram", self.0)
    }
}

impl core::error::Error for MoveError {}

fn over_at_start(d: &KnotDiagram, arc: usize) -> bool {
    d.arc_start(arc).1 != 2
}

fn over_at_end(d: &KnotDiagram, arc: usize) -> bool {
    d.arc_end(arc).1 != 0
}

fn has_loop(d: &KnotDiagram, c: usize) -> bool {
    d.crossings()[c].0.iter().any(|&a| d.arc_start(a).0 == c && d.arc_end(a).0 == c)
}

fn bigon_ok(d: &KnotDiagram, face: &[Dart]) -> Option<[usize; 2]> {
    let [x, y] = face else { return None };
    let (a, b) = (x.arc, y.arc);
    if a == b {
        return None;
    }
    let (c1, c2) = (d.arc_start(a).0, d.arc_end(a).0);
    if c1 == c2 {
        return None;
    }
    let ends_b = (d.arc_start(b).0, d.arc_end(b).0);
    if ends_b != (c1, c2) && ends_b != (c2, c1) {
        return None;
    }
    let over_both = |arc| over_at_start(d, arc) && over_at_end(d, arc);
    if !(over_both(a) || over_both(b)) {
        return None;
    }
    Some(if a < b { [a, b] } else { [b, a] })
}

fn triangle_ok(d: &KnotDiagram, face: &[Dart]) -> Option<[usize; 3]> {
    if face.len() != 3 {
        return None;
    }
    let mut arcs = [face[0].arc, face[1].arc, face[2].arc];
    arcs.sort_unstable();
    if arcs[0] == arcs[1] || arcs[1] == arcs[2] {
        return None;
    }
    let mut cs: Vec<usize> = arcs.iter().map(|&a| d.arc_start(a).0).collect();
    cs.sort_unstable();
    cs.dedup();
    if cs.len() != 3 || arcs.iter().any(|&a| d.arc_start(a).0 == d.arc_end(a).0) {
        return None;
    }
    if !arcs.iter().any(|&a| over_at_start(d, a) && over_at_end(d, a)) {
        return None;
    }
    Some(arcs)
}

/// Every applicable move, in a fixed order.
pub fn sites(d: &KnotDiagram) -> Vec<Move> {
    let mut out = Vec::new();
    for arc in 1..=d.arc_count() {
        for side in [Side::Left, Side::Right] {
            for over_first in [false, true] {
                out.push(Move::R1Add { arc, side, over_first });
            }
        }
    }
    if d.is_trivial() {
        return out;
    }
    for c in 0..d.crossing_count() {
        if has_loop(d, c) {
            out.push(Move::R1Remove { crossing: c });
        }
    }
    let faces = d.faces();
    for face in &faces {
        for x in face {
            for y in face {
                if x.arc != y.arc {
                    let side = |t: &Dart| if t.along { Side::Left } else { Side::Right };
                    out.push(Move::R2Add { over: (x.arc, side(x)), under: (y.arc, side(y)) });
                }
            }
        }
    }
    for face in &faces {
        if let Some(arcs) = bigon_ok(d, face) {
            out.push(Move::R2Remove { arcs });
        }
    }
    for face in &faces {
        if let Some(arcs) = triangle_ok(d, face) {
            out.push(Move::R3 { arcs });
        }
    }
    out
}

pub fn apply(d: &KnotDiagram, m: Move) -> Result<KnotDiagram, MoveError> {
    let err = || MoveError(m);
    let valid_arc = |a: usize| a >= 1 && a <= d.arc_count();
    match m {
        Move::R1Add { arc, side, over_first } => {
            if !valid_arc(arc) {
                return Err(err());
            }
            Ok(r1_add(d, arc, side, over_first))
        }
        Move::R1Remove { crossing } => {
            if crossing >= d.crossing_count() || !has_loop(d, crossing) {
                return Err(err());
            }
            Ok(remove_crossings(d, &[crossing]))
        }
        Move::R2Add { over, under } => {
            if d.is_trivial() || !valid_arc(over.0) || !valid_arc(under.0) || over.0 == under.0 {
                return Err(err());
            }
            let face = d.face_index();
            let idx = |(a, s): (usize, Side)| 2 * (a - 1) + (s == Side::Left) as usize;
            if face[idx(over)] != face[idx(under)] {
                return Err(err());
            }
            Ok(r2_add(d, Dart::on(over.0, over.1), Dart::on(under.0, under.1)))
        }
        Move::R2Remove { arcs } => {
            if d.is_trivial() {
                return Err(err());
            }
            let face = d.faces().into_iter().find(|f| bigon_ok(d, f) == Some(arcs)).ok_or_else(err)?;
            let c1 = d.arc_start(face[0].arc).0;
            let c2 = d.arc_end(face[0].arc).0;
            Ok(remove_crossings(d, &[c1, c2]))
        }
        Move::R3 { arcs } => {
            if d.is_trivial() || d.faces().iter().all(|f| triangle_ok(d, f) != Some(arcs)) {
                return Err(err());
            }
            Ok(r3(d, arcs))
        }
    }
}

fn raw(d: &KnotDiagram) -> Vec<[usize; 4]> {
    d.crossings().iter().map(|x| x.0).collect()
}

fn finish(xs: Vec<[usize; 4]>) -> KnotDiagram {
    if xs.is_empty() {
        return KnotDiagram::unknot();
    }
    KnotDiagram::from_labeled(xs.into_iter().map(Crossing).collect()).expect("moves preserve validity")
}

fn r1_add(d: &KnotDiagram, p: usize, side: Side, over_first: bool) -> KnotDiagram {
    let mut xs = raw(d);
    let q = d.arc_count() + 1;
    let r = if d.is_trivial() {
        p
    } else {
        let (c, s) = d.arc_end(p);
        xs[c][s] = q + 1;
        q + 1
    };
    let x = match (over_first, side) {
        (false, Side::Left) => [p, r, q, q],
        (false, Side::Right) => [p, q, q, r],
        (true, Side::Left) => [q, p, r, q],
        (true, Side::Right) => [q, q, r, p],
    };
    xs.push(x);
    finish(xs)
}

/// Deletes crossings, joining the strand pieces through each of them.
fn remove_crossings(d: &KnotDiagram, cs: &[usize]) -> KnotDiagram {
    let n = d.arc_count();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut union = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi] = lo;
        }
    };
    for &c in cs {
        let x = d.crossings()[c].0;
        union(x[0], x[2]);
        union(x[1], x[3]);
    }
    let xs = raw(d)
        .into_iter()
        .enumerate()
        .filter(|(c, _)| !cs.contains(c))
        .map(|(_, x)| x.map(|l| find(&mut parent, l)))
        .collect();
    finish(xs)
}

fn r2_add(d: &KnotDiagram, de: Dart, df: Dart) -> KnotDiagram {
    let mut xs = raw(d);
    let (e, f) = (de.arc, df.arc);
    let n = d.arc_count();
    let (me, le, mf, lf) = (n + 1, n + 2, n + 3, n + 4);
    let (ce, se) = d.arc_end(e);
    xs[ce][se] = le;
    let (cf, sf) = d.arc_end(f);
    xs[cf][sf] = lf;

    // Picture the shared face above e and below f. e runs left to right
    // iff the face is on its left; f runs left to right iff it is not.
    let e_lr = de.along;
    let f_lr = !df.along;
    let (el, er) = if e_lr { (e, le) } else { (le, e) };
    let (fl, fr) = if f_lr { (f, lf) } else { (lf, f) };
    let (e2, fm) = (me, mf);
    // compass order [E, N, W, S] is counterclockwise
    let p1 = [fm, e2, fl, el];
    let p2 = [fr, e2, fm, er];
    let start = if f_lr { 2 } else { 0 };
    let rot = |a: [usize; 4]| [a[start], a[(start + 1) % 4], a[(start + 2) % 4], a[(start + 3) % 4]];
    xs.push(rot(p1));
    xs.push(rot(p2));
    finish(xs)
}

fn r3(d: &KnotDiagram, arcs: [usize; 3]) -> KnotDiagram {
    let mut xs = raw(d);
    let mut writes = Vec::with_capacity(12);
    for t in arcs {
        let (x1, s1) = d.arc_start(t);
        let in1 = if s1 == 2 { 0 } else { 4 - s1 };
        let (x2, e2) = d.arc_end(t);
        let out2 = if e2 == 0 { 2 } else { 4 - e2 };
        let ext_in = xs[x1][in1];
        let ext_out = xs[x2][out2];
        writes.push((x1, in1, t));
        writes.push((x1, s1, ext_out));
        writes.push((x2, e2, ext_in));
        writes.push((x2, out2, t));
    }
    for (c, s, l) in writes {
        xs[c][s] = l;
    }
    finish(xs)
}
