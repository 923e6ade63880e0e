//! Laurent polynomials with integer coefficients, `Z[t, 1/t]`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// `Σ coeffs[i] t^(low + i)`, trimmed so both end coefficients are nonzero.
/// The zero polynomial has no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<i128>,
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(c, 0)
    }

    /// `c t^e`
    pub fn monomial(c: i128, e: i64) -> Self {
        Self::new(e, vec![c])
    }

    pub fn t_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn new(low: i64, coeffs: Vec<i128>) -> Self {
        let mut p = Laurent { low, coeffs };
        p.trim();
        p
    }

    /// Ordinary polynomial from ascending coefficients.
    pub fn from_coeffs(coeffs: &[i128]) -> Self {
        Self::new(0, coeffs.to_vec())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    /// Coefficients from the lowest exponent upward.
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> i128 {
        let i = e - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    pub fn eval(&self, t: i128) -> Option<i128> {
        if t == 0 && self.low < 0 {
            return None;
        }
        let mut acc = 0i128;
        for &c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        // multiply by t^low
        if self.low >= 0 {
            Some(acc * t.pow(self.low as u32))
        } else {
            let d = t.pow((-self.low) as u32);
            if acc % d == 0 {
                Some(acc / d)
            } else {
                None
            }
        }
    }

    /// `t -> 1/t`
    pub fn mirror(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Laurent::new(-self.high(), c)
    }

    /// Multiplies by `±t^k` so that the lowest term is a positive constant.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.coeffs.clone();
        if c[0] < 0 {
            c.iter_mut().for_each(|x| *x = -*x);
        }
        Laurent { low: 0, coeffs: c }
    }

    /// Equal up to multiplication by a unit `±t^k`.
    pub fn associated(&self, other: &Laurent) -> bool {
        self.normalize() == other.normalize()
    }

    /// `Δ(t) ≐ Δ(1/t)`.
    pub fn is_symmetric(&self) -> bool {
        self.associated(&self.mirror())
    }

    pub fn content(&self) -> i128 {
        self.coeffs.iter().fold(0, |g, &c| gcd_i(g, c))
    }

    fn scale_div(&self, k: i128) -> Self {
        Laurent::new(self.low, self.coeffs.iter().map(|c| c / k).collect())
    }

    /// Exact quotient `self / d` in `Z[t, 1/t]`, if it exists.
    pub fn exact_div(&self, d: &Laurent) -> Option<Laurent> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let mut rem = self.coeffs.clone();
        let dc = &d.coeffs;
        if rem.len() < dc.len() {
            return None;
        }
        let qlen = rem.len() - dc.len() + 1;
        let mut q = vec![0i128; qlen];
        let lead = *dc.last().unwrap();
        for k in (0..qlen).rev() {
            let top = rem[k + dc.len() - 1];
            if top % lead != 0 {
                return None;
            }
            let f = top / lead;
            q[k] = f;
            if f != 0 {
                for (j, &c) in dc.iter().enumerate() {
                    rem[k + j] -= f * c;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Laurent::new(self.low - d.low, q))
    }

    /// Greatest common divisor in `Z[t, 1/t]`, normalized.
    pub fn gcd(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.normalize();
        }
        if other.is_zero() {
            return self.normalize();
        }
        let c = gcd_i(self.content(), other.content());
        let mut a = primitive(&self.normalize());
        let mut b = primitive(&other.normalize());
        if a.coeffs.len() < b.coeffs.len() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = if r.is_zero() { r } else { primitive(&r.normalize()) };
        }
        let g = primitive(&a.normalize());
        Laurent::new(0, g.coeffs.iter().map(|x| x * c).collect())
    }
}

fn gcd_i(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn primitive(p: &Laurent) -> Laurent {
    let c = p.content();
    if c <= 1 {
        p.clone()
    } else {
        p.scale_div(c)
    }
}

/// Pseudo-remainder of ordinary polynomials (both with `low == 0`).
fn pseudo_rem(a: &Laurent, b: &Laurent) -> Laurent {
    let mut r = a.coeffs.clone();
    let bc = &b.coeffs;
    let lb = *bc.last().unwrap();
    while r.len() >= bc.len() && !r.is_empty() {
        let lr = *r.last().unwrap();
        let shift = r.len() - bc.len();
        r.iter_mut().for_each(|x| *x *= lb);
        for (j, &c) in bc.iter().enumerate() {
            r[shift + j] -= lr * c;
        }
        while r.last() == Some(&0) {
            r.pop();
        }
        let g = r.iter().fold(0, |g, &c| gcd_i(g, c));
        if g > 1 {
            r.iter_mut().for_each(|x| *x /= g);
        }
    }
    Laurent::new(0, r)
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        let c = (low..=high).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        Laurent::new(low, c)
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut c = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Laurent::new(self.low + rhs.low, c)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: Laurent) -> Laurent { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for Laurent {
    /// `t^2 - t + 1` style, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for e in (self.low..=self.high()).rev() {
            let c = self.coeff(e);
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => f.write_str("t")?,
                (1, m) => write!(f, "{m}t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, m) => write!(f, "{m}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Determinant over `Z[t, 1/t]` by Bareiss elimination.
pub fn determinant(m: &[Vec<Laurent>]) -> Laurent {
    let n = m.len();
    if n == 0 {
        return Laurent::one();
    }
    let mut a: Vec<Vec<Laurent>> = m.to_vec();
    let mut negate = false;
    let mut prev = Laurent::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match ((k + 1)..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Laurent::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Laurent::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}
