//! Finite posets, order-preserving chains and the nerve.
//!
//! A [`ChainSimplex`] of dimension `n` is an order-preserving map
//! `[n] -> P`, stored as the sequence of its `n + 1` vertices. Weakly
//! increasing chains are the simplices of the nerve `N(P)` (the objects of
//! the filtered simplex category); strictly increasing ones are the
//! nondegenerate simplices, i.e. the objects of the reduced category.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Index of an element inside a [`Poset`].
pub type Elem = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetError {
    DuplicateLabel(String),
    UnknownLabel(String),
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::DuplicateLabel(l) => write!(f, "duplicate element label `{l}`"),
            PosetError::UnknownLabel(l) => write!(f, "unknown element label `{l}`"),
        }
    }
}

impl core::error::Error for PosetError {}

/// First axiom failure found by [`Poset::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetViolation {
    Antisymmetry(String, String),
    Transitivity(String, String, String),
    Reflexivity(String),
}

impl fmt::Display for PosetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetViolation::Antisymmetry(a, b) => {
                write!(f, "antisymmetry fails: {a} <= {b} and {b} <= {a}")
            }
            PosetViolation::Transitivity(a, b, c) => {
                write!(f, "transitivity fails: {a} <= {b} <= {c} but not {a} <= {c}")
            }
            PosetViolation::Reflexivity(a) => write!(f, "reflexivity fails at {a}"),
        }
    }
}

impl core::error::Error for PosetViolation {}

/// A finite set with a binary relation that is meant to be a partial order.
///
/// The relation is stored as given; [`Poset::validate`] checks the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the relation exactly as listed. Pairs are `(smaller, larger)`.
    pub fn from_relation<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)]) -> Result<Self, PosetError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (a, b) in pairs {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| PosetError::UnknownLabel(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| PosetError::UnknownLabel(b.as_ref().to_string()))?;
            leq[ia][ib] = true;
        }
        Ok(Poset { labels, leq })
    }

    /// Reflexive-transitive closure of the given strict relations.
    pub fn from_covers<S: AsRef<str>>(labels: &[S], less: &[(S, S)]) -> Result<Self, PosetError> {
        let mut p = Self::from_relation(labels, less)?;
        p.close();
        Ok(p)
    }

    /// The chain `0 < 1 < ... < n-1` with decimal labels.
    pub fn chain(n: usize) -> Self {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        Poset { labels, leq }
    }

    /// The two-element chain `{0 < 1}`: knot stratum below its complement.
    pub fn two_strata() -> Self {
        Self::chain(2)
    }

    pub fn antichain<S: AsRef<str>>(labels: &[S]) -> Result<Self, PosetError> {
        let refl: Vec<(&str, &str)> = labels.iter().map(|s| (s.as_ref(), s.as_ref())).collect();
        let labels: Vec<&str> = labels.iter().map(|s| s.as_ref()).collect();
        Self::from_relation(&labels, &refl)
    }

    /// Builds from a raw boolean matrix (no closure applied).
    pub fn from_matrix(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Self {
        assert_eq!(labels.len(), leq.len());
        Poset { labels, leq }
    }

    fn close(&mut self) {
        let n = self.len();
        for i in 0..n {
            self.leq[i][i] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if self.leq[i][k] {
                    for j in 0..n {
                        if self.leq[k][j] {
                            self.leq[i][j] = true;
                        }
                    }
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq[a][b]
    }

    /// Pairs `(a, b)` with `a <= b`, in index order.
    pub fn relation_pairs(&self) -> Vec<(Elem, Elem)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.leq[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Checks antisymmetry, transitivity and reflexivity (in that order),
    /// scanning pairs in index order, and reports the first failure.
    pub fn validate(&self) -> Result<(), PosetViolation> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq[a][b] && self.leq[b][a] {
                    return Err(PosetViolation::Antisymmetry(
                        self.labels[a].clone(),
                        self.labels[b].clone(),
                    ));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !self.leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if self.leq[b][c] && !self.leq[a][c] {
                        return Err(PosetViolation::Transitivity(
                            self.labels[a].clone(),
                            self.labels[b].clone(),
                            self.labels[c].clone(),
                        ));
                    }
                }
            }
        }
        for a in 0..n {
            if !self.leq[a][a] {
                return Err(PosetViolation::Reflexivity(self.labels[a].clone()));
            }
        }
        Ok(())
    }

    /// All `n`-simplices of the nerve: weakly increasing `(n+1)`-tuples.
    /// Returned in lexicographic order of element indices.
    pub fn nerve_simplices(&self, n: usize) -> Vec<ChainSimplex> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n + 1);
        self.extend_chains(&mut cur, n + 1, false, &mut |c| out.push(ChainSimplex::new(c.to_vec())));
        out
    }

    /// Nondegenerate (strictly increasing) `n`-simplices of the nerve.
    pub fn nerve_nondegenerate(&self, n: usize) -> Vec<ChainSimplex> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n + 1);
        self.extend_chains(&mut cur, n + 1, true, &mut |c| out.push(ChainSimplex::new(c.to_vec())));
        out
    }

    /// Objects of the reduced category: every strictly increasing chain of
    /// length at least one, ordered by dimension then lexicographically.
    pub fn enumerate_reduced(&self) -> Vec<ChainSimplex> {
        let mut out = Vec::new();
        for n in 0..self.len() {
            let layer = self.nerve_nondegenerate(n);
            if layer.is_empty() {
                break;
            }
            out.extend(layer);
        }
        out
    }

    fn extend_chains(
        &self,
        cur: &mut Vec<Elem>,
        target: usize,
        strict: bool,
        emit: &mut dyn FnMut(&[Elem]),
    ) {
        if cur.len() == target {
            emit(cur);
            return;
        }
        for e in 0..self.len() {
            let ok = match cur.last() {
                None => true,
                Some(&prev) => {
                    if strict {
                        self.lt(prev, e)
                    } else {
                        self.leq(prev, e)
                    }
                }
            };
            if ok {
                cur.push(e);
                self.extend_chains(cur, target, strict, emit);
                cur.pop();
            }
        }
    }

    /// Monotone maps `f: [n] -> [m]` with `dst ∘ f = src`; the hom-set of
    /// the filtered simplex category from `src` to `dst`.
    pub fn chain_morphisms(&self, src: &ChainSimplex, dst: &ChainSimplex) -> Vec<SimplexMap> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(src.len());
        fn go(src: &[Elem], dst: &[Elem], cur: &mut Vec<usize>, out: &mut Vec<SimplexMap>) {
            let i = cur.len();
            if i == src.len() {
                out.push(SimplexMap(cur.clone()));
                return;
            }
            let lo = cur.last().copied().unwrap_or(0);
            for j in lo..dst.len() {
                if dst[j] == src[i] {
                    cur.push(j);
                    go(src, dst, cur, out);
                    cur.pop();
                }
            }
        }
        go(&src.vertices, &dst.vertices, &mut cur, &mut out);
        out
    }
}

/// An order-preserving map `[n] -> P`, written as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainSimplex {
    vertices: Vec<Elem>,
}

impl ChainSimplex {
    pub fn new(vertices: Vec<Elem>) -> Self {
        assert!(!vertices.is_empty(), "a chain has at least one vertex");
        ChainSimplex { vertices }
    }

    pub fn vertices(&self) -> &[Elem] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn last(&self) -> Elem {
        *self.vertices.last().unwrap()
    }

    /// Weakly increasing under the order of `p`.
    pub fn is_chain_in(&self, p: &Poset) -> bool {
        self.vertices.iter().all(|&v| v < p.len())
            && self.vertices.windows(2).all(|w| p.leq(w[0], w[1]))
    }

    /// Strictly increasing, i.e. the map `[n] -> N(P)` is a monomorphism.
    pub fn is_reduced(&self, p: &Poset) -> bool {
        self.is_chain_in(p) && self.vertices.windows(2).all(|w| w[0] != w[1])
    }

    /// `i`-th face: drop the `i`-th vertex. `None` for vertices.
    pub fn face(&self, i: usize) -> Option<ChainSimplex> {
        if self.vertices.len() < 2 || i >= self.vertices.len() {
            return None;
        }
        let mut v = self.vertices.clone();
        v.remove(i);
        Some(ChainSimplex { vertices: v })
    }

    /// The nondegenerate chain underneath (consecutive repeats removed).
    pub fn reduced(&self) -> ChainSimplex {
        let mut v = self.vertices.clone();
        v.dedup();
        ChainSimplex { vertices: v }
    }

    pub fn display<'a>(&'a self, p: &'a Poset) -> ChainDisplay<'a> {
        ChainDisplay { chain: self, poset: p }
    }
}

pub struct ChainDisplay<'a> {
    chain: &'a ChainSimplex,
    poset: &'a Poset,
}

impl fmt::Display for ChainDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &v) in self.chain.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.poset.label(v))?;
        }
        f.write_str(")")
    }
}

/// A monotone map `[n] -> [m]` given by the images of `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexMap(pub Vec<usize>);

impl SimplexMap {
    pub fn identity(n: usize) -> Self {
        SimplexMap((0..=n).collect())
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &SimplexMap) -> SimplexMap {
        SimplexMap(first.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn is_monotone(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn apply(&self, chain: &ChainSimplex) -> ChainSimplex {
        ChainSimplex::new(self.0.iter().map(|&i| chain.vertices[i]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ch(v: &[usize]) -> ChainSimplex {
        ChainSimplex::new(v.to_vec())
    }

    #[test]
    fn two_chain_validates() {
        assert_eq!(Poset::two_strata().validate(), Ok(()));
    }

    #[test]
    fn antisymmetry_violation() {
        let p = Poset::from_relation(&["a", "b"], &[("a", "b"), ("b", "a"), ("a", "a"), ("b", "b")]).unwrap();
        assert_eq!(p.validate(), Err(PosetViolation::Antisymmetry("a".into(), "b".into())));
        let p = Poset::from_relation(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert!(matches!(p.validate(), Err(PosetViolation::Antisymmetry(..))));
    }

    #[test]
    fn transitivity_violation() {
        let p = Poset::from_relation(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(
            p.validate(),
            Err(PosetViolation::Transitivity("a".into(), "b".into(), "c".into()))
        );
    }

    #[test]
    fn reflexivity_violation() {
        let p = Poset::from_relation(&["a"], &[]).unwrap();
        assert_eq!(p.validate(), Err(PosetViolation::Reflexivity("a".into())));
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert_eq!(
            Poset::from_relation(&["a", "a"], &[]),
            Err(PosetError::DuplicateLabel("a".into()))
        );
        assert!(matches!(
            Poset::from_relation(&["a"], &[("a", "z")]),
            Err(PosetError::UnknownLabel(_))
        ));
    }

    #[test]
    fn nerve_of_two_chain() {
        let p = Poset::two_strata();
        assert_eq!(p.nerve_simplices(0), vec![ch(&[0]), ch(&[1])]);
        assert_eq!(p.nerve_simplices(1), vec![ch(&[0, 0]), ch(&[0, 1]), ch(&[1, 1])]);
    }

    #[test]
    fn reduced_triangles_of_three_chain() {
        let p = Poset::chain(3);
        assert_eq!(p.nerve_nondegenerate(2), vec![ch(&[0, 1, 2])]);
        // weakly increasing triples in a 3-chain: C(3+2, 3) = 10
        assert_eq!(p.nerve_simplices(2).len(), 10);
    }

    #[test]
    fn reduced_objects() {
        assert_eq!(Poset::two_strata().enumerate_reduced(), vec![ch(&[0]), ch(&[1]), ch(&[0, 1])]);
        let anti = Poset::antichain(&["a", "b"]).unwrap();
        assert_eq!(anti.enumerate_reduced(), vec![ch(&[0]), ch(&[1])]);
        assert_eq!(Poset::chain(3).enumerate_reduced().len(), 7);
    }

    #[test]
    fn morphism_examples() {
        let p = Poset::two_strata();
        assert_eq!(p.chain_morphisms(&ch(&[0, 1]), &ch(&[0, 1])), vec![SimplexMap(vec![0, 1])]);
        assert_eq!(p.chain_morphisms(&ch(&[0]), &ch(&[0, 1])), vec![SimplexMap(vec![0])]);
        assert_eq!(p.chain_morphisms(&ch(&[0, 0]), &ch(&[0])), vec![SimplexMap(vec![0, 0])]);
        // (1) has no map into (0)
        assert!(p.chain_morphisms(&ch(&[1]), &ch(&[0])).is_empty());
        // (0) -> (0,0,1) hits index 0 or 1
        assert_eq!(p.chain_morphisms(&ch(&[0]), &ch(&[0, 0, 1])).len(), 2);
    }

    #[test]
    fn faces_and_display() {
        let p = Poset::chain(3);
        let c = ch(&[0, 1, 2]);
        assert_eq!(c.face(1), Some(ch(&[0, 2])));
        assert_eq!(ch(&[0]).face(0), None);
        assert_eq!(alloc::format!("{}", c.display(&p)), "(0,1,2)");
        assert_eq!(ch(&[0, 0, 1]).reduced(), ch(&[0, 1]));
    }

    /// Random poset on up to 6 elements: a random relation on a fixed
    /// linear extension, closed under transitivity.
    fn arb_poset() -> impl Strategy<Value = Poset> {
        (1usize..=6)
            .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n)))
            .prop_map(|(n, bits)| {
                let labels: Vec<String> = (0..n).map(|i| alloc::format!("e{i}")).collect();
                let mut pairs = Vec::new();
                for i in 0..n {
                    for j in (i + 1)..n {
                        if bits[i * n + j] {
                            pairs.push((labels[i].clone(), labels[j].clone()));
                        }
                    }
                }
                Poset::from_covers(&labels, &pairs).unwrap()
            })
    }

    /// Nonempty subsets that are totally ordered.
    fn chain_count_oracle(p: &Poset) -> usize {
        let n = p.len();
        (1u32..(1 << n))
            .filter(|mask| {
                let elems: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                elems
                    .iter()
                    .all(|&a| elems.iter().all(|&b| p.leq(a, b) || p.leq(b, a)))
            })
            .count()
    }

    proptest! {
        #[test]
        fn random_posets_are_valid(p in arb_poset()) {
            prop_assert_eq!(p.validate(), Ok(()));
        }

        #[test]
        fn reduced_count_matches_subset_oracle(p in arb_poset()) {
            prop_assert_eq!(p.enumerate_reduced().len(), chain_count_oracle(&p));
        }

        #[test]
        fn nerve_simplices_are_chains(p in arb_poset(), n in 0usize..4) {
            for c in p.nerve_simplices(n) {
                prop_assert!(c.is_chain_in(&p));
                prop_assert_eq!(c.dim(), n);
            }
        }

        #[test]
        fn morphisms_compose(p in arb_poset(), seed in any::<u64>()) {
            // pick three simplices of small dimension and check the category laws
            let all: Vec<ChainSimplex> = (0..3).flat_map(|n| p.nerve_simplices(n)).collect();
            let pick = |k: u64| all[(k % all.len() as u64) as usize].clone();
            let (a, b, c) = (pick(seed), pick(seed / 7 + 1), pick(seed / 49 + 2));
            let ab = p.chain_morphisms(&a, &b);
            let bc = p.chain_morphisms(&b, &c);
            let ac = p.chain_morphisms(&a, &c);
            for f in &ab {
                prop_assert_eq!(f.after(&SimplexMap::identity(a.dim())), f.clone());
                prop_assert_eq!(SimplexMap::identity(b.dim()).after(f), f.clone());
                for g in &bc {
                    let gf = g.after(f);
                    prop_assert!(gf.is_monotone());
                    prop_assert!(ac.contains(&gf));
                    prop_assert_eq!(gf.apply(&c), a.clone());
                    for h in p.chain_morphisms(&c, &c) {
                        prop_assert_eq!(h.after(&gf), h.after(g).after(f));
                    }
                }
            }
        }
    }
}
