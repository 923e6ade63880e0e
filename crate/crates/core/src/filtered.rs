//! Finite simplicial sets over the nerve of a poset.
//!
//! A [`FilteredSimplicialSet`] is an ordered simplicial complex: every
//! nondegenerate simplex is a sequence of distinct vertex ids, and its
//! faces are obtained by deleting one vertex. Each simplex carries a
//! structure chain in `N(P)`, which must be compatible with faces.
//! Degenerate simplices are never stored; they are written as vertex
//! sequences with consecutive repeats (`[v, v, w]` is `s_0 [v, w]`).
//!
//! The open simplex with structure chain `(p_0 <= ... <= p_n)` lies in the
//! stratum `p_n`: a point of `|N(P)|` maps to the largest element with a
//! nonzero barycentric coordinate.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::poset::{ChainSimplex, Elem, Poset};

pub type VertexId = u32;

/// A simplex description: a vertex sequence, possibly with consecutive
/// repeats for degenerate simplices.
pub type Description = Vec<VertexId>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexViolation {
    DuplicateSimplex(Description),
    RepeatedVertex(Description),
    ChainLength { simplex: Description, chain_len: usize },
    UnknownElement { simplex: Description },
    NotWeaklyIncreasing { simplex: Description },
    DanglingFace { simplex: Description, face: Description },
    FaceMismatch { simplex: Description, face: Description },
}

fn show(d: &[VertexId]) -> String {
    let parts: Vec<String> = d.iter().map(|v| format!("{v}")).collect();
    format!("[{}]", parts.join(","))
}

impl fmt::Display for ComplexViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ComplexViolation::*;
        match self {
            DuplicateSimplex(s) => write!(f, "simplex {} listed twice", show(s)),
            RepeatedVertex(s) => write!(f, "simplex {} repeats a vertex", show(s)),
            ChainLength { simplex, chain_len } => write!(
                f,
                "simplex {} has {} vertices but its chain has {}",
                show(simplex),
                simplex.len(),
                chain_len
            ),
            UnknownElement { simplex } => {
                write!(f, "simplex {} uses an element outside the poset", show(simplex))
            }
            NotWeaklyIncreasing { simplex } => {
                write!(f, "chain of simplex {} is not weakly increasing", show(simplex))
            }
            DanglingFace { simplex, face } => {
                write!(f, "face {} of simplex {} is missing", show(face), show(simplex))
            }
            FaceMismatch { simplex, face } => write!(
                f,
                "chain of face {} disagrees with simplex {}",
                show(face),
                show(simplex)
            ),
        }
    }
}

impl core::error::Error for ComplexViolation {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredSimplicialSet {
    poset: Poset,
    simplices: Vec<Description>,
    chains: Vec<ChainSimplex>,
    index: BTreeMap<Description, usize>,
}

impl FilteredSimplicialSet {
    /// Stores the simplices as given. Call [`validate`](Self::validate)
    /// before relying on any invariant.
    pub fn new(poset: Poset, entries: Vec<(Description, ChainSimplex)>) -> Self {
        let mut index = BTreeMap::new();
        let mut simplices = Vec::with_capacity(entries.len());
        let mut chains = Vec::with_capacity(entries.len());
        for (i, (s, c)) in entries.into_iter().enumerate() {
            index.entry(s.clone()).or_insert(i);
            simplices.push(s);
            chains.push(c);
        }
        FilteredSimplicialSet { poset, simplices, chains, index }
    }

    /// Builds the complex from vertex labels; chains are read off the
    /// vertices, so face compatibility holds by construction.
    pub fn from_vertex_labels(
        poset: Poset,
        labels: &BTreeMap<VertexId, Elem>,
        simplices: Vec<Description>,
    ) -> Self {
        let entries = simplices
            .into_iter()
            .map(|s| {
                let c = ChainSimplex::new(s.iter().map(|v| labels[v]).collect());
                (s, c)
            })
            .collect();
        Self::new(poset, entries)
    }

    /// Circle over `{0 < 1}`: vertex `0` on the knot stratum and vertices
    /// `1..=k` in the complement, joined in a cycle. `k >= 2`.
    pub fn circle_model(k: u32) -> Self {
        assert!(k >= 2);
        let mut labels = BTreeMap::new();
        labels.insert(0, 0);
        for v in 1..=k {
            labels.insert(v, 1);
        }
        let mut simplices: Vec<Description> = (0..=k).map(|v| vec![v]).collect();
        simplices.push(vec![0, 1]);
        for v in 1..k {
            simplices.push(vec![v, v + 1]);
        }
        simplices.push(vec![0, k]);
        Self::from_vertex_labels(Poset::two_strata(), &labels, simplices)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn simplices(&self) -> &[Description] {
        &self.simplices
    }

    pub fn chain_of(&self, simplex: &[VertexId]) -> Option<&ChainSimplex> {
        self.index.get(simplex).map(|&i| &self.chains[i])
    }

    pub fn contains(&self, simplex: &[VertexId]) -> bool {
        self.index.contains_key(simplex)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.simplices.iter().filter(|s| s.len() == 1).map(|s| s[0])
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    /// Structure chain of a possibly degenerate description: the chain of
    /// the underlying simplex pulled back along the degeneracy.
    pub fn description_chain(&self, d: &[VertexId]) -> Option<ChainSimplex> {
        let mut base = d.to_vec();
        base.dedup();
        let chain = self.chain_of(&base)?;
        let mut out = Vec::with_capacity(d.len());
        let mut j = 0;
        for (i, v) in d.iter().enumerate() {
            if i > 0 && *v != d[i - 1] {
                j += 1;
            }
            out.push(chain.vertices()[j]);
        }
        Some(ChainSimplex::new(out))
    }

    /// First violation among: duplicates, malformed chains, missing or
    /// incompatible faces. Simplices are checked in listing order.
    pub fn validate(&self) -> Result<(), ComplexViolation> {
        let mut seen: BTreeSet<Vec<VertexId>> = BTreeSet::new();
        for s in &self.simplices {
            let mut key = s.clone();
            key.sort_unstable();
            if !seen.insert(key) {
                return Err(ComplexViolation::DuplicateSimplex(s.clone()));
            }
        }
        for (s, c) in self.simplices.iter().zip(&self.chains) {
            let distinct: BTreeSet<_> = s.iter().collect();
            if s.is_empty() || distinct.len() != s.len() {
                return Err(ComplexViolation::RepeatedVertex(s.clone()));
            }
            if c.len() != s.len() {
                return Err(ComplexViolation::ChainLength { simplex: s.clone(), chain_len: c.len() });
            }
            if c.vertices().iter().any(|&e| e >= self.poset.len()) {
                return Err(ComplexViolation::UnknownElement { simplex: s.clone() });
            }
            if !c.is_chain_in(&self.poset) {
                return Err(ComplexViolation::NotWeaklyIncreasing { simplex: s.clone() });
            }
            if s.len() < 2 {
                continue;
            }
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                match self.chain_of(&face) {
                    None => {
                        return Err(ComplexViolation::DanglingFace { simplex: s.clone(), face });
                    }
                    Some(fc) => {
                        if Some(fc.clone()) != c.face(i) {
                            return Err(ComplexViolation::FaceMismatch { simplex: s.clone(), face });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Strata with their components and the closure order between them.
    pub fn strata(&self) -> Strata {
        let n = self.simplices.len();
        let mut uf = UnionFind::new(n);
        let mut face_pairs = Vec::new();
        for (ti, s) in self.simplices.iter().enumerate() {
            if s.len() < 2 {
                continue;
            }
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                if let Some(&fi) = self.index.get(&face) {
                    face_pairs.push((fi, ti));
                    if self.chains[fi].last() == self.chains[ti].last() {
                        uf.union(fi, ti);
                    }
                }
            }
        }
        // number the components by (element, first simplex)
        let mut roots: BTreeMap<(Elem, usize), usize> = BTreeMap::new();
        let mut first_of_root: BTreeMap<usize, usize> = BTreeMap::new();
        for i in 0..n {
            first_of_root.entry(uf.find(i)).or_insert(i);
        }
        for i in 0..n {
            let r = uf.find(i);
            let key = (self.chains[i].last(), first_of_root[&r]);
            let next = roots.len();
            roots.entry(key).or_insert(next);
        }
        // re-index in key order for determinism
        let ordered: Vec<(Elem, usize)> = roots.keys().copied().collect();
        let comp_index: BTreeMap<(Elem, usize), usize> =
            ordered.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let component_of: Vec<usize> = (0..n)
            .map(|i| comp_index[&(self.chains[i].last(), first_of_root[&uf.find(i)])])
            .collect();
        let element: Vec<Elem> = ordered.iter().map(|k| k.0).collect();

        let m = ordered.len();
        let mut per_elem: BTreeMap<Elem, usize> = BTreeMap::new();
        for e in &element {
            *per_elem.entry(*e).or_default() += 1;
        }
        let mut counter: BTreeMap<Elem, usize> = BTreeMap::new();
        let labels: Vec<String> = element
            .iter()
            .map(|&e| {
                let base = self.poset.label(e);
                if per_elem[&e] == 1 {
                    String::from(base)
                } else {
                    let k = counter.entry(e).or_default();
                    *k += 1;
                    format!("{base}.{k}")
                }
            })
            .collect();
        let mut leq = vec![vec![false; m]; m];
        for (fi, ti) in face_pairs {
            leq[component_of[fi]][component_of[ti]] = true;
        }
        let mut poset = Poset::from_matrix(labels, leq);
        // reflexive-transitive closure
        let closed = {
            let mut mat: Vec<Vec<bool>> =
                (0..m).map(|a| (0..m).map(|b| a == b || poset.leq(a, b)).collect()).collect();
            for k in 0..m {
                let via = mat[k].clone();
                for row in mat.iter_mut().filter(|r| r[k]) {
                    for (cell, &v) in row.iter_mut().zip(&via) {
                        *cell |= v;
                    }
                }
            }
            mat
        };
        poset = Poset::from_matrix(poset.labels().to_vec(), closed);
        Strata { poset, component_of, element }
    }

    /// The strata poset: connected components of each stratum, ordered by
    /// `S <= T` iff `S` meets the closure of `T`.
    pub fn strata_poset(&self) -> Poset {
        self.strata().poset
    }

    /// Value at `c` of the presheaf on the filtered simplex category that
    /// corresponds to this object over `N(P)`: every simplex description
    /// (degenerate ones included) whose structure chain is exactly `c`.
    pub fn presheaf_value(&self, c: &ChainSimplex) -> Vec<Description> {
        let mut out = BTreeSet::new();
        for (s, chain) in self.simplices.iter().zip(&self.chains) {
            if chain.len() > c.len() {
                continue;
            }
            for f in self.poset.chain_morphisms(c, chain) {
                // degeneracies are the surjective maps
                let hits: BTreeSet<usize> = f.0.iter().copied().collect();
                if hits.len() == chain.len() {
                    out.insert(f.0.iter().map(|&i| s[i]).collect::<Description>());
                }
            }
        }
        out.into_iter().collect()
    }

    /// Every description of dimension `m`, degenerate ones included.
    pub fn descriptions(&self, m: usize) -> Vec<Description> {
        let mut out = BTreeSet::new();
        for s in &self.simplices {
            if s.len() > m + 1 {
                continue;
            }
            for surj in surjections(m, s.len() - 1) {
                out.insert(surj.iter().map(|&i| s[i]).collect::<Description>());
            }
        }
        out.into_iter().collect()
    }
}

/// Monotone surjections `[m] -> [d]`.
fn surjections(m: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize];
    fn go(m: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m + 1 {
            if *cur.last().unwrap() == d {
                out.push(cur.clone());
            }
            return;
        }
        let last = *cur.last().unwrap();
        for next in [last, last + 1] {
            if next <= d {
                cur.push(next);
                go(m, d, cur, out);
                cur.pop();
            }
        }
    }
    go(m, d, &mut cur, &mut out);
    out
}

/// Components of strata and their order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strata {
    pub poset: Poset,
    /// Component index of each simplex, in listing order.
    pub component_of: Vec<usize>,
    /// Poset element underlying each component.
    pub element: Vec<Elem>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapViolation {
    DifferentPosets,
    MissingVertex(VertexId),
    UnknownTarget(VertexId),
    MissingSimplex(Description),
    NotSimplicial { simplex: Description },
    ImageNotSimplex { simplex: Description, image: Description },
    FaceMismatch { simplex: Description, face: usize },
    NotOverNerve { simplex: Description },
}

impl fmt::Display for MapViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use MapViolation::*;
        match self {
            DifferentPosets => f.write_str("domain and codomain live over different posets"),
            MissingVertex(v) => write!(f, "vertex {v} has no image"),
            UnknownTarget(v) => write!(f, "vertex {v} maps outside the codomain"),
            MissingSimplex(s) => write!(f, "simplex {} has no image", show(s)),
            NotSimplicial { simplex } => {
                write!(f, "image of {} disagrees with the vertex map", show(simplex))
            }
            ImageNotSimplex { simplex, image } => write!(
                f,
                "image {} of {} is not a simplex of the codomain",
                show(image),
                show(simplex)
            ),
            FaceMismatch { simplex, face } => {
                write!(f, "face {face} of {} does not commute with the map", show(simplex))
            }
            NotOverNerve { simplex } => {
                write!(f, "structure chains differ on {}", show(simplex))
            }
        }
    }
}

impl core::error::Error for MapViolation {}

/// A map of filtered simplicial sets, given on vertices and on simplices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FilteredMap {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub simplex_map: BTreeMap<Description, Description>,
}

impl FilteredMap {
    /// Extends a vertex assignment to every simplex of `domain`.
    pub fn from_vertex_map(domain: &FilteredSimplicialSet, vertex_map: BTreeMap<VertexId, VertexId>) -> Self {
        let simplex_map = domain
            .simplices()
            .iter()
            .filter_map(|s| {
                let img: Option<Description> = s.iter().map(|v| vertex_map.get(v).copied()).collect();
                img.map(|i| (s.clone(), i))
            })
            .collect();
        FilteredMap { vertex_map, simplex_map }
    }

    pub fn identity(k: &FilteredSimplicialSet) -> Self {
        Self::from_vertex_map(k, k.vertices().map(|v| (v, v)).collect())
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &FilteredMap) -> FilteredMap {
        let vertex_map = self
            .vertex_map
            .iter()
            .filter_map(|(v, w)| then.vertex_map.get(w).map(|u| (*v, *u)))
            .collect();
        let simplex_map = self
            .simplex_map
            .iter()
            .filter_map(|(s, img)| {
                let out: Option<Description> = img.iter().map(|v| then.vertex_map.get(v).copied()).collect();
                out.map(|o| (s.clone(), o))
            })
            .collect();
        FilteredMap { vertex_map, simplex_map }
    }
}

fn delete(d: &[VertexId], i: usize) -> Description {
    let mut v = d.to_vec();
    v.remove(i);
    v
}

/// Exhaustively checks that `f` is simplicial and strictly over `N(P)`.
pub fn check_filtered_map(
    domain: &FilteredSimplicialSet,
    codomain: &FilteredSimplicialSet,
    f: &FilteredMap,
) -> Result<(), MapViolation> {
    if domain.poset() != codomain.poset() {
        return Err(MapViolation::DifferentPosets);
    }
    let cod_vertices: BTreeSet<VertexId> = codomain.vertices().collect();
    for v in domain.vertices() {
        match f.vertex_map.get(&v) {
            None => return Err(MapViolation::MissingVertex(v)),
            Some(w) if !cod_vertices.contains(w) => return Err(MapViolation::UnknownTarget(v)),
            _ => {}
        }
    }
    for (s, chain) in domain.simplices.iter().zip(&domain.chains) {
        let img = f
            .simplex_map
            .get(s)
            .ok_or_else(|| MapViolation::MissingSimplex(s.clone()))?;
        let expected: Description = s.iter().map(|v| f.vertex_map[v]).collect();
        if *img != expected {
            return Err(MapViolation::NotSimplicial { simplex: s.clone() });
        }
        let img_chain = codomain
            .description_chain(img)
            .filter(|_| {
                let mut base = img.clone();
                base.dedup();
                let distinct: BTreeSet<_> = base.iter().collect();
                distinct.len() == base.len()
            })
            .ok_or_else(|| MapViolation::ImageNotSimplex { simplex: s.clone(), image: img.clone() })?;
        if s.len() > 1 {
            for i in 0..s.len() {
                let face = delete(s, i);
                if f.simplex_map.get(&face) != Some(&delete(img, i)) {
                    return Err(MapViolation::FaceMismatch { simplex: s.clone(), face: i });
                }
            }
        }
        if img_chain != *chain {
            return Err(MapViolation::NotOverNerve { simplex: s.clone() });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointingViolation {
    NotReduced(ChainSimplex),
    NotClosed(ChainSimplex),
    Attach(MapViolation),
}

impl fmt::Display for PointingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointingViolation::NotReduced(c) => write!(f, "{:?} is not a nondegenerate chain", c.vertices()),
            PointingViolation::NotClosed(c) => write!(f, "a face of {:?} is missing from V", c.vertices()),
            PointingViolation::Attach(e) => write!(f, "attaching map: {e}"),
        }
    }
}

impl core::error::Error for PointingViolation {}

/// Basepoint data: a subcomplex `V` of `N(P)` (given by its nondegenerate
/// chains) and a filtered map from `V` into the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pointing {
    pub sub: Vec<ChainSimplex>,
    /// Image of each element of `P` that occurs in `V`.
    pub attach: FilteredMap,
}

impl Pointing {
    /// The one-edge pointing `V = {(0), (1), (0,1)}` sending the edge to
    /// `[on_knot, off_knot]`: a path leaving the knot stratum.
    pub fn edge(target: &FilteredSimplicialSet, on_knot: VertexId, off_knot: VertexId) -> Self {
        let sub = vec![
            ChainSimplex::new(vec![0]),
            ChainSimplex::new(vec![1]),
            ChainSimplex::new(vec![0, 1]),
        ];
        let v = Self::sub_complex(target.poset(), &sub);
        let mut vm = BTreeMap::new();
        vm.insert(0, on_knot);
        vm.insert(1, off_knot);
        Pointing { sub, attach: FilteredMap::from_vertex_map(&v, vm) }
    }

    /// `V` as a filtered simplicial set; its vertex ids are element indices.
    pub fn sub_complex(p: &Poset, sub: &[ChainSimplex]) -> FilteredSimplicialSet {
        let entries = sub
            .iter()
            .map(|c| (c.vertices().iter().map(|&e| e as VertexId).collect(), c.clone()))
            .collect();
        FilteredSimplicialSet::new(p.clone(), entries)
    }

    pub fn contains(&self, c: &ChainSimplex) -> bool {
        self.sub.contains(c)
    }

    pub fn validate(&self, target: &FilteredSimplicialSet) -> Result<(), PointingViolation> {
        let p = target.poset();
        for c in &self.sub {
            if !c.is_reduced(p) {
                return Err(PointingViolation::NotReduced(c.clone()));
            }
            for i in 0..c.len() {
                if let Some(face) = c.face(i) {
                    if !self.sub.contains(&face) {
                        return Err(PointingViolation::NotClosed(c.clone()));
                    }
                }
            }
        }
        let v = Self::sub_complex(p, &self.sub);
        check_filtered_map(&v, target, &self.attach).map_err(PointingViolation::Attach)
    }
}
