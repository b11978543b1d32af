//! Dense univariate polynomials over the exact rationals.
//!
//! Used for the `t`-polynomial parts of almost toric generators and as the
//! dehomogenization workhorse behind binary-form gcds and rational roots.

use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficients in ascending degree; no trailing zeros; zero = empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c * t^n.
    pub fn monomial(c: Rat, n: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    pub fn variable() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rat {
        self.coeffs.get(n).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient (the t-adic order).
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            if !c.is_zero() {
                quot[k] = c.clone();
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let upd = rem[k + i].clone() - &c * d;
                    rem[k + i] = upd;
                }
            }
            rem.pop();
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, else `None`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (leading coefficient one); gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = Rat::one() / l;
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// Shift down by the t-adic order, returning (order, self / t^order).
    pub fn strip_low_zeros(&self) -> (usize, Self) {
        match self.low_order() {
            None => (0, Self::zero()),
            Some(m) => (m, Self::new(self.coeffs[m..].to_vec())),
        }
    }

    /// Primitive integer version: integers with gcd 1, same roots.
    pub fn primitive_integer(&self) -> Vec<Int> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = Int::zero();
        for x in &ints {
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if g > Int::one() {
            for x in &mut ints {
                *x = &*x / &g;
            }
        }
        ints
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 => {
                    if coeff_is_one {
                        write!(f, "t")?;
                    } else {
                        write!(f, "{mag}*t")?;
                    }
                }
                _ => {
                    if coeff_is_one {
                        write!(f, "t^{i}")?;
                    } else {
                        write!(f, "{mag}*t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn p(ints: &[i64]) -> UniPoly {
        UniPoly::new(ints.iter().map(|&x| Rat::from_i64(x)).collect())
    }

    #[test]
    fn cube_of_t_minus_one() {
        let t_minus_1 = p(&[-1, 1]);
        assert_eq!(t_minus_1.pow(3), p(&[-1, 3, -3, 1]));
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 0, 1]); // t^3 - 1
        let b = p(&[-1, 1]); // t - 1
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert_eq!(a.gcd(&b), b);
        assert!(a.div_exact(&p(&[1, 1])).is_none());
    }

    #[test]
    fn display_round_shape() {
        assert_eq!(p(&[-1, 3, -3, 1]).to_string(), "t^3 - 3*t^2 + 3*t - 1");
        assert_eq!(p(&[1, 0, 0, 1]).to_string(), "t^3 + 1");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn primitive_integer_strips_content() {
        let half = UniPoly::new(vec![Rat::new(Int::from(2), Int::from(4)), Rat::from_i64(3)]);
        assert_eq!(half.primitive_integer(), vec![Int::from(1), Int::from(6)]);
    }
}
