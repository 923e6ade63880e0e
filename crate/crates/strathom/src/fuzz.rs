//! Seeded random Reidemeister walks.

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use strathom_core::moves::{apply, sites, Move, MoveKind};
use strathom_core::KnotDiagram;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzRun {
    pub diagram: KnotDiagram,
    pub moves: Vec<Move>,
}

/// `steps` moves from `d`. Each step draws a move kind uniformly among the
/// kinds with at least one site, then a site of that kind uniformly. Same
/// seed, same walk.
pub fn fuzz(d: &KnotDiagram, steps: usize, seed: u64) -> Result<FuzzRun> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut moves = Vec::with_capacity(steps);
    for _ in 0..steps {
        let all = sites(&cur);
        let mut kinds: Vec<MoveKind> = all.iter().map(Move::kind).collect();
        kinds.sort();
        kinds.dedup();
        let Some(&kind) = kinds.choose(&mut rng) else {
            break;
        };
        let of_kind: Vec<Move> = all.into_iter().filter(|m| m.kind() == kind).collect();
        let m = *of_kind.choose(&mut rng).expect("kind has a site");
        cur = apply(&cur, m).map_err(|e| Error::Internal(format!("listed move failed: {}", e.0)))?;
        moves.push(m);
    }
    Ok(FuzzRun { diagram: cur, moves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use strathom_core::diagram::trefoil;

    #[test]
    fn reproducible() {
        let a = fuzz(&trefoil(), 8, 42).unwrap();
        let b = fuzz(&trefoil(), 8, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.moves.len(), 8);
        assert!(a.diagram.is_planar());
        let c = fuzz(&trefoil(), 8, 43).unwrap();
        assert_ne!(a.moves, c.moves);
        assert_eq!(fuzz(&trefoil(), 0, 1).unwrap().diagram, trefoil());
    }
}
