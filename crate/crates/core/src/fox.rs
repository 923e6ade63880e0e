//! Fox free differential calculus and the Alexander polynomial.
//!
//! Derivatives are evaluated straight into `Z[t, 1/t]` through the
//! abelianization map `x_i -> t^(e_i)`, so a derivative is a sum of signed
//! monomials.

use alloc::vec::Vec;
use core::fmt;

use crate::laurent::{determinant, Laurent};
use crate::presentation::{Abelianization, GroupPresentation};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlexanderError {
    /// The group does not abelianize to `Z`.
    NotKnotLike(Abelianization),
    /// The meridian does not map to a generator of `Z`.
    MeridianNotGenerator(i64),
}

impl fmt::Display for AlexanderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlexanderError::NotKnotLike(a) => write!(f, "abelianization is {a}, expected Z"),
            AlexanderError::MeridianNotGenerator(e) => {
                write!(f, "meridian maps to {e} in H1, expected +-1")
            }
        }
    }
}

impl core::error::Error for AlexanderError {}

/// Exponent of `t` for each generator under the map onto `H_1 = Z`,
/// oriented so that the meridian maps to `+1`.
pub fn abelianization_map(p: &GroupPresentation, meridian: &Word) -> Result<Vec<i64>, AlexanderError> {
    let ab = p.abelianization();
    if !ab.is_integers() {
        return Err(AlexanderError::NotKnotLike(ab));
    }
    let s = p.smith_form();
    // the free coordinate is the column of V past the nonzero invariant factors
    let k = s.rank();
    let mut phi: Vec<i64> = (0..p.generators).map(|j| s.v[(j, k)] as i64).collect();
    let m: i64 = meridian
        .exponent_sums(p.generators)
        .iter()
        .zip(&phi)
        .map(|(e, x)| e * x)
        .sum();
    match m {
        1 => {}
        -1 => phi.iter_mut().for_each(|x| *x = -*x),
        other => return Err(AlexanderError::MeridianNotGenerator(other)),
    }
    Ok(phi)
}

/// `∂w/∂x_gen` evaluated under `x_i -> t^(phi[i])`.
pub fn fox_derivative(w: &Word, gen: usize, phi: &[i64]) -> Laurent {
    let mut acc = Laurent::zero();
    let mut s = 0i64; // exponent of the image of the prefix
    for l in w.letters() {
        if l.gen == gen {
            if l.inv {
                acc = &acc - &Laurent::t_pow(s - phi[gen]);
            } else {
                acc = &acc + &Laurent::t_pow(s);
            }
        }
        s += l.exponent() * phi[l.gen];
    }
    acc
}

/// Image of a word under `x_i -> t^(phi[i])`.
pub fn word_image(w: &Word, phi: &[i64]) -> Laurent {
    Laurent::t_pow(w.letters().iter().map(|l| l.exponent() * phi[l.gen]).sum())
}

/// Rows are relators, columns are generators.
pub fn alexander_matrix(p: &GroupPresentation, phi: &[i64]) -> Vec<Vec<Laurent>> {
    p.relators
        .iter()
        .map(|r| (0..p.generators).map(|g| fox_derivative(r, g, phi)).collect())
        .collect()
}

fn minor(m: &[Vec<Laurent>], rows: &[usize], skip_col: usize, cols: usize) -> Laurent {
    let sub: Vec<Vec<Laurent>> = rows
        .iter()
        .map(|&r| (0..cols).filter(|&c| c != skip_col).map(|c| m[r][c].clone()).collect())
        .collect();
    determinant(&sub)
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Alexander polynomial from Fox derivatives, normalized.
///
/// One column is deleted, chosen among generators mapping to `t^(±1)`.
/// A deficiency-one presentation then needs a single minor; otherwise
/// the gcd runs over all row choices for that column.
pub fn alexander_polynomial(p: &GroupPresentation, meridian: &Word) -> Result<Laurent, AlexanderError> {
    let phi = abelianization_map(p, meridian)?;
    let g = p.generators;
    let m = alexander_matrix(p, &phi);
    let col = phi.iter().position(|e| e.abs() == 1);
    let Some(col) = col else {
        return Ok(full_gcd(&m, g));
    };
    if p.relators.len() + 1 == g {
        let rows: Vec<usize> = (0..p.relators.len()).collect();
        return Ok(minor(&m, &rows, col, g).normalize());
    }
    let mut acc = Laurent::zero();
    for rows in subsets(p.relators.len(), g - 1) {
        acc = acc.gcd(&minor(&m, &rows, col, g));
    }
    Ok(acc.normalize())
}

/// Gcd of every `(g-1)`-minor of the Alexander matrix: the generator of
/// the smallest principal ideal containing the first elementary ideal.
pub fn alexander_polynomial_full(p: &GroupPresentation, meridian: &Word) -> Result<Laurent, AlexanderError> {
    let phi = abelianization_map(p, meridian)?;
    let m = alexander_matrix(p, &phi);
    Ok(full_gcd(&m, p.generators))
}

fn full_gcd(m: &[Vec<Laurent>], g: usize) -> Laurent {
    if g == 0 {
        return Laurent::zero();
    }
    let mut acc = Laurent::zero();
    for rows in subsets(m.len(), g - 1) {
        for col in 0..g {
            acc = acc.gcd(&minor(m, &rows, col, g));
        }
    }
    acc.normalize()
}

/// Alexander polynomial of a deficiency-one presentation with one relator
/// dropped and one column deleted: a single determinant.
pub fn single_minor(p: &GroupPresentation, meridian: &Word, drop_relator: usize, drop_column: usize) -> Result<Laurent, AlexanderError> {
    let phi = abelianization_map(p, meridian)?;
    let m = alexander_matrix(p, &phi);
    let rows: Vec<usize> = (0..m.len()).filter(|&r| r != drop_relator).collect();
    Ok(minor(&m, &rows, drop_column, p.generators).normalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Letter;
    use alloc::vec;
    use proptest::prelude::*;

    fn w(i: &[i64]) -> Word {
        Word::from_signed(i)
    }

    fn trefoil() -> GroupPresentation {
        GroupPresentation::new(2, vec![w(&[1, 2, 1, -2, -1, -2])])
    }

    #[test]
    fn unknot_is_one() {
        let p = GroupPresentation::free(1);
        assert_eq!(alexander_polynomial(&p, &w(&[1])), Ok(Laurent::one()));
        assert_eq!(alexander_polynomial_full(&p, &w(&[1])), Ok(Laurent::one()));
    }

    #[test]
    fn trefoil_by_hand() {
        // d/da (aba b^-1 a^-1 b^-1) = 1 + ab - aba b^-1 a^-1 -> 1 + t^2 - t
        let phi = [1, 1];
        let r = &trefoil().relators[0];
        assert_eq!(fox_derivative(r, 0, &phi), Laurent::from_coeffs(&[1, -1, 1]));
        assert_eq!(
            alexander_polynomial(&trefoil(), &w(&[1])),
            Ok(Laurent::from_coeffs(&[1, -1, 1]))
        );
        assert_eq!(
            alexander_polynomial_full(&trefoil(), &w(&[1])),
            Ok(Laurent::from_coeffs(&[1, -1, 1]))
        );
    }

    #[test]
    fn figure_eight_two_generator() {
        // two-bridge form a w = w b with w = b a^-1 b^-1 a
        let wd = w(&[2, -1, -2, 1]);
        let rel = w(&[1]) * wd.clone() * w(&[-2]) * wd.inverse();
        let p = GroupPresentation::new(2, vec![rel]);
        assert!(p.abelianization().is_integers());
        assert_eq!(alexander_polynomial(&p, &w(&[1])), Ok(Laurent::from_coeffs(&[1, -3, 1])));
        assert_eq!(alexander_polynomial_full(&p, &w(&[1])), Ok(Laurent::from_coeffs(&[1, -3, 1])));
    }

    #[test]
    fn precondition_failures() {
        let p = GroupPresentation::free(2);
        assert!(matches!(alexander_polynomial(&p, &w(&[1])), Err(AlexanderError::NotKnotLike(_))));
        let p = GroupPresentation::free(1);
        assert_eq!(alexander_polynomial(&p, &w(&[1, 1])), Err(AlexanderError::MeridianNotGenerator(2)));
    }

    #[test]
    fn abelianization_map_sign() {
        let phi = abelianization_map(&trefoil(), &w(&[-2])).unwrap();
        assert_eq!(phi, vec![-1, -1]);
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec((0usize..3, any::<bool>()), 0..16)
            .prop_map(|v| Word::from_letters(v.into_iter().map(|(g, i)| Letter::new(g, i)).collect()))
    }

    proptest! {
        #[test]
        fn product_rule(u in arb_word(), v in arb_word(), phi in proptest::collection::vec(-2i64..=2, 3), g in 0usize..3) {
            let mut uv = u.letters().to_vec();
            uv.extend_from_slice(v.letters());
            let lhs = fox_derivative(&Word::from_letters(uv), g, &phi);
            let rhs = &fox_derivative(&u, g, &phi) + &(&word_image(&u, &phi) * &fox_derivative(&v, g, &phi));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn fundamental_identity(u in arb_word(), phi in proptest::collection::vec(-2i64..=2, 3)) {
            // Σ_j ∂u/∂x_j (φ(x_j) - 1) = φ(u) - 1
            let mut acc = Laurent::zero();
            for g in 0..3 {
                let d = fox_derivative(&u, g, &phi);
                acc = &acc + &(&d * &(&Laurent::t_pow(phi[g]) - &Laurent::one()));
            }
            prop_assert_eq!(acc, &word_image(&u, &phi) - &Laurent::one());
        }

        #[test]
        fn reduction_does_not_change_derivatives(u in arb_word(), phi in proptest::collection::vec(-2i64..=2, 3), g in 0usize..3) {
            prop_assert_eq!(fox_derivative(&u, g, &phi), fox_derivative(&u.free_reduce(), g, &phi));
        }
    }
}
