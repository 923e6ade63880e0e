//! Small symmetric groups with precomputed multiplication tables.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub const MAX_DEGREE: usize = 5;

pub type Perm = [u8; MAX_DEGREE];

/// Cycle lengths in descending order, fixed points included.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(pub Vec<u8>);

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `S_n` for `n <= 5`. Elements are indices into [`elements`](Self::elements);
/// `mul(a, b)` is the composite "apply `b`, then `a`".
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    degree: usize,
    elements: Vec<Perm>,
    table: Vec<u8>,
    inverse: Vec<u8>,
    class_of: Vec<u8>,
    classes: Vec<CycleType>,
    class_size: Vec<u64>,
    class_rep: Vec<u8>,
}

impl SymmetricGroup {
    /// `None` unless `1 <= degree <= 5`.
    pub fn new(degree: usize) -> Option<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return None;
        }
        let mut elements = Vec::new();
        let mut cur: Vec<u8> = (0..degree as u8).collect();
        permutations(&mut cur, 0, &mut elements);
        elements.sort();
        let order = elements.len();
        let index_of = |p: &Perm| elements.binary_search(p).unwrap() as u8;

        let mut table = vec![0u8; order * order];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let mut c = [0u8; MAX_DEGREE];
                for k in 0..degree {
                    c[k] = a[b[k] as usize];
                }
                for (k, slot) in c.iter_mut().enumerate().skip(degree) {
                    *slot = k as u8;
                }
                table[i * order + j] = index_of(&c);
            }
        }
        let inverse = elements
            .iter()
            .map(|a| {
                let mut inv = [0u8; MAX_DEGREE];
                for k in 0..MAX_DEGREE {
                    inv[a[k] as usize] = k as u8;
                }
                index_of(&inv)
            })
            .collect();

        let types: Vec<CycleType> = elements.iter().map(|p| cycle_type(p, degree)).collect();
        let mut classes: Vec<CycleType> = types.clone();
        classes.sort();
        classes.dedup();
        let class_of: Vec<u8> = types.iter().map(|t| classes.binary_search(t).unwrap() as u8).collect();
        let mut class_size = vec![0u64; classes.len()];
        let mut class_rep = vec![u8::MAX; classes.len()];
        for (i, &c) in class_of.iter().enumerate() {
            class_size[c as usize] += 1;
            if class_rep[c as usize] == u8::MAX {
                class_rep[c as usize] = i as u8;
            }
        }
        Some(SymmetricGroup { degree, elements, table, inverse, class_of, classes, class_size, class_rep })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn name(&self) -> alloc::string::String {
        alloc::format!("S{}", self.degree)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn identity(&self) -> u8 {
        0 // sorted order puts the identity first
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.table[a as usize * self.elements.len() + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inverse[a as usize]
    }

    pub fn class_of(&self, a: u8) -> usize {
        self.class_of[a as usize] as usize
    }

    pub fn class_type(&self, class: usize) -> &CycleType {
        &self.classes[class]
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_size(&self, class: usize) -> u64 {
        self.class_size[class]
    }

    pub fn class_rep(&self, class: usize) -> u8 {
        self.class_rep[class]
    }

    pub fn cycle_type(&self, a: u8) -> &CycleType {
        &self.classes[self.class_of(a)]
    }
}

fn permutations(cur: &mut Vec<u8>, k: usize, out: &mut Vec<Perm>) {
    if k == cur.len() {
        let mut p = [0u8; MAX_DEGREE];
        for (i, slot) in p.iter_mut().enumerate() {
            *slot = if i < cur.len() { cur[i] } else { i as u8 };
        }
        out.push(p);
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

fn cycle_type(p: &Perm, degree: usize) -> CycleType {
    let mut seen = [false; MAX_DEGREE];
    let mut lens = Vec::new();
    for s in 0..degree {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        lens.push(len as u8);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    CycleType(lens)
}
