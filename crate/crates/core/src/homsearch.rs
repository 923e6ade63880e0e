//! Homomorphisms from a finitely presented group into a small symmetric group.
//!
//! Generators are assigned in a fixed order, and every relator is checked
//! at the first depth where all of its generators are assigned. A
//! generator that occurs exactly once in some relator whose other letters
//! are already assigned is solved for instead of enumerated.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{CycleType, SymmetricGroup};
use crate::presentation::GroupPresentation;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomSearchError {
    /// Only `S_1 .. S_5` are supported.
    Degree(usize),
    /// A word mentions a generator the presentation does not have.
    UnknownGenerator(usize),
}

impl fmt::Display for HomSearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomSearchError::Degree(n) => write!(f, "target S{n} unsupported, degree must be 1..=5"),
            HomSearchError::UnknownGenerator(g) => write!(f, "word uses generator x{} beyond the presentation", g + 1),
        }
    }
}

impl core::error::Error for HomSearchError {}

/// Hom count into a target group, together with how the peripheral pair
/// lands: a multiset of `(cycle type of ρ(m), cycle type of ρ(l))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteQuotientSignature {
    pub target: String,
    pub hom_count: u64,
    pub peripheral: BTreeMap<(CycleType, CycleType), u64>,
}

impl FiniteQuotientSignature {
    pub fn signature_size(&self) -> u64 {
        self.peripheral.values().sum()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Restrict every generator to the conjugacy class of the first one.
    /// Valid for presentations whose generators are all conjugate, such as
    /// Wirtinger presentations and their Tietze reductions; counts and
    /// signatures are then exact.
    pub all_generators_conjugate: bool,
}

#[derive(Clone)]
struct Plan {
    order: Vec<usize>,
    /// Relators to verify once depth `k` is assigned.
    checks: Vec<Vec<usize>>,
    /// Relator that determines the generator at depth `k`, if any.
    solve: Vec<Option<usize>>,
}

fn plan(p: &GroupPresentation) -> Plan {
    let g = p.generators;
    let mut by_len: Vec<usize> = (0..p.relators.len()).collect();
    by_len.sort_by_key(|&r| (p.relators[r].len(), r));
    let mut order = Vec::with_capacity(g);
    let mut placed = vec![false; g];
    for &r in &by_len {
        for l in p.relators[r].letters() {
            if !placed[l.gen] {
                placed[l.gen] = true;
                order.push(l.gen);
            }
        }
    }
    for (gen, done) in placed.iter().enumerate() {
        if !done {
            order.push(gen);
        }
    }
    let mut depth_of = vec![0; g];
    for (k, &gen) in order.iter().enumerate() {
        depth_of[gen] = k;
    }
    let mut checks = vec![Vec::new(); g];
    let mut solve = vec![None; g];
    for &r in &by_len {
        let w = &p.relators[r];
        let Some(last) = w.letters().iter().map(|l| depth_of[l.gen]).max() else {
            continue;
        };
        checks[last].push(r);
        let gen = order[last];
        if last > 0 && solve[last].is_none() && w.occurrences(gen) == 1 {
            solve[last] = Some(r);
        }
    }
    Plan { order, checks, solve }
}

struct Search<'a> {
    group: &'a SymmetricGroup,
    p: &'a GroupPresentation,
    plan: Plan,
    allowed: Vec<u8>,
    is_allowed: Vec<bool>,
    image: Vec<u8>,
}

impl Search<'_> {
    fn eval(&self, w: &Word) -> u8 {
        let g = self.group;
        w.letters().iter().fold(g.identity(), |acc, l| {
            let x = self.image[l.gen];
            g.mul(acc, if l.inv { g.inv(x) } else { x })
        })
    }

    /// Value of `gen` forced by relator `r`, all other letters assigned.
    fn solve(&self, r: usize, gen: usize) -> u8 {
        let g = self.group;
        let letters = self.p.relators[r].letters();
        let pos = letters.iter().position(|l| l.gen == gen).unwrap();
        let fold = |ls: &[crate::word::Letter]| {
            ls.iter().fold(g.identity(), |acc, l| {
                let x = self.image[l.gen];
                g.mul(acc, if l.inv { g.inv(x) } else { x })
            })
        };
        let a = fold(&letters[..pos]);
        let b = fold(&letters[pos + 1..]);
        // a x^e b = 1  =>  x^e = a^-1 b^-1
        let xe = g.mul(g.inv(a), g.inv(b));
        if letters[pos].inv {
            g.inv(xe)
        } else {
            xe
        }
    }

    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[u8])) {
        if depth == self.plan.order.len() {
            visit(&self.image);
            return;
        }
        let gen = self.plan.order[depth];
        if let Some(r) = self.plan.solve[depth] {
            let x = self.solve(r, gen);
            if self.is_allowed[x as usize] {
                self.image[gen] = x;
                if self.checks_pass(depth) {
                    self.run(depth + 1, visit);
                }
            }
            return;
        }
        for i in 0..self.allowed.len() {
            self.image[gen] = self.allowed[i];
            if self.checks_pass(depth) {
                self.run(depth + 1, visit);
            }
        }
    }

    fn checks_pass(&self, depth: usize) -> bool {
        let e = self.group.identity();
        self.plan.checks[depth].iter().all(|&r| self.eval(&self.p.relators[r]) == e)
    }
}

/// Calls `visit(images, weight)` once per conjugation orbit representative.
fn enumerate(
    p: &GroupPresentation,
    group: &SymmetricGroup,
    opts: SearchOptions,
    visit: &mut dyn FnMut(&[u8], u64),
) {
    let n = group.order();
    if p.generators == 0 {
        visit(&[], 1);
        return;
    }
    let plan = plan(p);
    let first = plan.order[0];
    // conjugation acts on homomorphisms; fixing the first generator to a
    // class representative and weighting by class size counts every orbit
    for class in 0..group.class_count() {
        let rep = group.class_rep(class);
        let weight = group.class_size(class);
        let (allowed, is_allowed): (Vec<u8>, Vec<bool>) = if opts.all_generators_conjugate {
            let allowed: Vec<u8> = (0..n as u8).filter(|&x| group.class_of(x) == class).collect();
            let is_allowed = (0..n as u8).map(|x| group.class_of(x) == class).collect();
            (allowed, is_allowed)
        } else {
            ((0..n as u8).collect(), vec![true; n])
        };
        let mut s = Search { group, p, plan: plan.clone(), allowed, is_allowed, image: vec![0; p.generators] };
        s.image[first] = rep;
        if !s.checks_pass(0) {
            continue;
        }
        s.run(1, &mut |img| visit(img, weight));
    }
}

fn eval_word(group: &SymmetricGroup, image: &[u8], w: &Word) -> u8 {
    w.letters().iter().fold(group.identity(), |acc, l| {
        let x = image[l.gen];
        group.mul(acc, if l.inv { group.inv(x) } else { x })
    })
}

fn check_word(p: &GroupPresentation, w: &Word) -> Result<(), HomSearchError> {
    match w.max_generator() {
        Some(g) if g >= p.generators => Err(HomSearchError::UnknownGenerator(g)),
        _ => Ok(()),
    }
}

/// Number of homomorphisms `p -> S_degree`.
pub fn hom_count(p: &GroupPresentation, degree: usize, opts: SearchOptions) -> Result<u64, HomSearchError> {
    let group = SymmetricGroup::new(degree).ok_or(HomSearchError::Degree(degree))?;
    let mut total = 0;
    enumerate(p, &group, opts, &mut |_, w| total += w);
    Ok(total)
}

/// Hom count into `S_degree` and the peripheral signature of
/// `(meridian, longitude)`.
pub fn hom_search(
    p: &GroupPresentation,
    degree: usize,
    meridian: &Word,
    longitude: &Word,
    opts: SearchOptions,
) -> Result<FiniteQuotientSignature, HomSearchError> {
    let group = SymmetricGroup::new(degree).ok_or(HomSearchError::Degree(degree))?;
    check_word(p, meridian)?;
    check_word(p, longitude)?;
    let mut hom_count = 0;
    let mut peripheral: BTreeMap<(CycleType, CycleType), u64> = BTreeMap::new();
    enumerate(p, &group, opts, &mut |img, w| {
        hom_count += w;
        let m = eval_word(&group, img, meridian);
        let l = eval_word(&group, img, longitude);
        *peripheral.entry((group.cycle_type(m).clone(), group.cycle_type(l).clone())).or_insert(0) += w;
    });
    Ok(FiniteQuotientSignature { target: group.name(), hom_count, peripheral })
}

/// True when `w` maps to the identity under every homomorphism into
/// `S_degree`.
pub fn trivial_in_quotients(p: &GroupPresentation, degree: usize, w: &Word, opts: SearchOptions) -> Result<bool, HomSearchError> {
    let group = SymmetricGroup::new(degree).ok_or(HomSearchError::Degree(degree))?;
    check_word(p, w)?;
    let mut ok = true;
    enumerate(p, &group, opts, &mut |img, _| {
        ok &= eval_word(&group, img, w) == group.identity();
    });
    Ok(ok)
}
