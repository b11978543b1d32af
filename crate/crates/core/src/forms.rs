//! Homogeneous binary forms in `s`, `t` and points of the projective line.
//!
//! Coefficients are stored by descending `s`-power: `coeffs[i]` is the
//! coefficient of `s^(a-i) t^i` for a form of degree `a`. Every module and
//! the input format share this ordering, which is also what makes subspace
//! bases of form spaces canonical.
//!
//! A point `Q = (alpha : beta)` of the projective line is paired with the
//! linear form `beta*s - alpha*t` vanishing at it; `ord_at` counts the
//! multiplicity of that linear form as a divisor, by repeated exact
//! division. This costs O(a^2) per form, which is noise next to the power
//! space computations upstream.

use crate::error::Error;
use crate::intfactor::positive_divisors;
use crate::scalar::Scalar;
use crate::unipoly::UniPoly;
use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A point of the projective line with coprime integer coordinates and the
/// first nonzero coordinate positive, so points compare by data equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointP1 {
    alpha: Int,
    beta: Int,
}

impl PointP1 {
    pub fn new(alpha: Int, beta: Int) -> Result<Self, Error> {
        if alpha.is_zero() && beta.is_zero() {
            return Err(Error::InvalidPoint);
        }
        let g = alpha.gcd(&beta);
        let mut alpha = alpha / &g;
        let mut beta = beta / &g;
        let lead_negative = if alpha.is_zero() {
            beta.is_negative()
        } else {
            alpha.is_negative()
        };
        if lead_negative {
            alpha = -alpha;
            beta = -beta;
        }
        Ok(Self { alpha, beta })
    }

    pub fn from_integers(alpha: i64, beta: i64) -> Result<Self, Error> {
        Self::new(Int::from(alpha), Int::from(beta))
    }

    /// Clears denominators of `(a : b)`.
    pub fn from_rationals(a: &Rat, b: &Rat) -> Result<Self, Error> {
        let l = a.denom().lcm(b.denom());
        let alpha = a.numer() * (&l / a.denom());
        let beta = b.numer() * (&l / b.denom());
        Self::new(alpha, beta)
    }

    pub fn alpha(&self) -> &Int {
        &self.alpha
    }

    pub fn beta(&self) -> &Int {
        &self.beta
    }
}

impl fmt::Display for PointP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.alpha, self.beta)
    }
}

/// Binomial coefficient row C(n, 0..=n).
fn binomial_row(n: usize) -> Vec<Int> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(Int::one());
    for i in 1..=n {
        let prev = row.last().unwrap();
        let next = prev * Int::from((n - i + 1) as u64) / Int::from(i as u64);
        row.push(next);
    }
    row
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> BinaryForm<T> {
    /// A form of degree `coeffs.len() - 1`; `coeffs[i]` multiplies
    /// `s^(degree-i) t^i`. The vector must be non-empty.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs degree >= 0");
        Self { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![T::zero(); degree + 1])
    }

    /// c * s^(degree - t_exp) * t^t_exp.
    pub fn monomial(degree: usize, t_exp: usize, c: T) -> Self {
        assert!(t_exp <= degree);
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[t_exp] = c;
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, t_exp: usize) -> &T {
        &self.coeffs[t_exp]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Exact convolution product; degrees add.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![T::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// The expansion of `(beta*s - alpha*t)^n` for `q = (alpha : beta)`.
    pub fn linear_power(q: &PointP1, n: usize) -> Self {
        let binom = binomial_row(n);
        let neg_alpha = -q.alpha();
        let mut beta_pow = vec![Int::one()];
        let mut alpha_pow = vec![Int::one()];
        for i in 1..=n {
            beta_pow.push(&beta_pow[i - 1] * q.beta());
            alpha_pow.push(&alpha_pow[i - 1] * &neg_alpha);
        }
        let coeffs = (0..=n)
            .map(|i| {
                let c = &binom[i] * &beta_pow[n - i] * &alpha_pow[i];
                T::from_bigint(&c)
            })
            .collect();
        Self::new(coeffs)
    }

    /// Tries to divide by the linear form of `q`, returning the quotient and
    /// the scalar remainder: `self = l*g + r*v^deg` where `v` is `t` when
    /// `beta != 0` and `s` otherwise. Requires degree >= 1.
    fn div_linear(&self, q: &PointP1) -> (Self, T) {
        let e = self.degree();
        assert!(e >= 1, "cannot divide a constant by a linear form");
        let alpha = T::from_bigint(q.alpha());
        let beta = T::from_bigint(q.beta());
        let mut quot = vec![T::zero(); e];
        if !q.beta().is_zero() {
            // c_i = beta*d_i - alpha*d_{i-1}
            quot[0] = self.coeffs[0].clone() / beta.clone();
            for i in 1..e {
                quot[i] =
                    (self.coeffs[i].clone() + alpha.clone() * quot[i - 1].clone()) / beta.clone();
            }
            let r = self.coeffs[e].clone() + alpha * quot[e - 1].clone();
            (Self::new(quot), r)
        } else {
            // l = -alpha*t: c_{i+1} = -alpha*d_i, remainder is the s^e coefficient
            for i in 0..e {
                quot[i] = -(self.coeffs[i + 1].clone() / alpha.clone());
            }
            let r = self.coeffs[0].clone();
            (Self::new(quot), r)
        }
    }

    /// Multiplicity of the linear form of `q` as a divisor of the form.
    pub fn ord_at(&self, q: &PointP1) -> Result<usize, Error> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let mut cur = self.clone();
        let mut ord = 0;
        while cur.degree() >= 1 {
            let (g, r) = cur.div_linear(q);
            if !r.is_zero() {
                break;
            }
            ord += 1;
            cur = g;
        }
        Ok(ord)
    }

    /// Coefficients of the form in the basis `u^j v^(deg-j)` where
    /// `u = beta*s - alpha*t` is the linear form of `q` and `v` is `t`
    /// (or `s` when `beta = 0`). Index `j` is the `u`-power, so the lowest
    /// nonzero index is `ord_at`.
    pub fn adic_coefficients(&self, q: &PointP1) -> Vec<T> {
        let n = self.degree();
        let mut out = vec![T::zero(); n + 1];
        let mut cur = self.clone();
        for slot in out.iter_mut().take(n) {
            let (g, r) = cur.div_linear(q);
            *slot = r;
            cur = g;
        }
        out[n] = cur.coeffs[0].clone();
        out
    }
}

/// Splits off the pure `s`-power factor and dehomogenizes the rest:
/// `f = s^m * F(t)` homogenized, with `F(0)`'s low order carrying the
/// `t`-power factor.
fn split_s_power(f: &BinaryForm<Rat>) -> (usize, UniPoly) {
    let p = UniPoly::new(f.coeffs.clone());
    let s_mult = f.degree() - p.degree().expect("nonzero form");
    (s_mult, p)
}

/// Homogenizes `p` to total degree `s_mult + deg(p)` with an extra `s^s_mult`.
fn homogenize(s_mult: usize, p: &UniPoly) -> BinaryForm<Rat> {
    let deg = s_mult + p.degree().expect("nonzero polynomial");
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (i, c) in p.coeffs().iter().enumerate() {
        coeffs[i] = c.clone();
    }
    BinaryForm::new(coeffs)
}

/// Rational vanishing points with multiplicities, plus the degree of the
/// factor with no rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    pub roots: Vec<(PointP1, usize)>,
    pub residual_degree: usize,
}

impl BinaryForm<Rat> {
    /// Monic gcd in Q[s,t] ("monic": first nonzero coefficient, i.e. the
    /// highest s-power present, is 1). Pure s- and t-power factors are
    /// handled through the dehomogenization bookkeeping.
    pub fn gcd(&self, other: &Self) -> Result<Self, Error> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::GcdOfZeroForms),
            (true, false) => return other.gcd(self),
            (false, true) => {
                let (m, p) = split_s_power(self);
                return Ok(make_form_monic(homogenize(m, &p)));
            }
            _ => {}
        }
        let (mf, pf) = split_s_power(self);
        let (mg, pg) = split_s_power(other);
        let g = pf.gcd(&pg);
        Ok(make_form_monic(homogenize(mf.min(mg), &g)))
    }

    /// Exact division by a common factor; `None` if it does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return self.degree().checked_sub(divisor.degree()).map(Self::zero);
        }
        let (mf, pf) = split_s_power(self);
        let (md, pd) = split_s_power(divisor);
        if mf < md {
            return None;
        }
        let q = pf.div_exact(&pd)?;
        Some(homogenize(mf - md, &q))
    }

    /// All points of the rational projective line where the form vanishes,
    /// with multiplicities, via the classical rational-root bound on the
    /// primitive integer dehomogenization. Points with irrational
    /// coordinates are only visible through `residual_degree`.
    pub fn rational_roots(&self) -> Result<RationalRoots, Error> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let mut roots = Vec::new();
        let (s_mult, p) = split_s_power(self);
        if s_mult > 0 {
            // s^m vanishes at (0:1)
            roots.push((PointP1::from_integers(0, 1).unwrap(), s_mult));
        }
        let (t_mult, p) = p.strip_low_zeros();
        if t_mult > 0 {
            // t^m vanishes at (1:0)
            roots.push((PointP1::from_integers(1, 0).unwrap(), t_mult));
        }
        let mut residual = 0;
        if let Some(n) = p.degree() {
            if n >= 1 {
                let ints = p.primitive_integer();
                let c0 = ints.first().unwrap().clone();
                let cn = ints.last().unwrap().clone();
                let mut rem = p;
                'candidates: for num in positive_divisors(&c0) {
                    for den in positive_divisors(&cn) {
                        if !num.gcd(&den).is_one() {
                            continue;
                        }
                        for sign in [1i64, -1] {
                            let cand = Rat::new(&num * Int::from(sign), den.clone());
                            let mut mult = 0;
                            while !rem.is_constant() && rem.eval(&cand).is_zero() {
                                let lin = UniPoly::new(vec![-cand.clone(), Rat::one()]);
                                rem = rem.div_exact(&lin).expect("root divides");
                                mult += 1;
                            }
                            if mult > 0 {
                                // root num*sign/den is the point (den : num*sign)
                                let pt = PointP1::new(den.clone(), &num * Int::from(sign))
                                    .expect("den > 0");
                                roots.push((pt, mult));
                            }
                            if rem.is_constant() {
                                break;
                            }
                        }
                        if rem.is_constant() {
                            break 'candidates;
                        }
                    }
                }
                residual = rem.degree().unwrap_or(0);
            }
        }
        roots.sort();
        let counted: usize = roots.iter().map(|(_, m)| m).sum();
        debug_assert_eq!(counted + residual, self.degree());
        Ok(RationalRoots {
            roots,
            residual_degree: residual,
        })
    }

    /// Rescaled so the first nonzero coefficient (highest s-power present)
    /// is one.
    pub fn monic(&self) -> Self {
        make_form_monic(self.clone())
    }

    /// Renders the form with custom variable names (the locus forms print
    /// with the coordinates of Q instead of s, t).
    pub fn display_with(&self, var_s: &str, var_t: &str) -> String {
        if self.is_zero() {
            return if self.degree() == 0 {
                "0".to_string()
            } else {
                format!("0*{}^{}", var_s, self.degree())
            };
        }
        let a = self.degree();
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_string(a - i, i, var_s, var_t);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

fn monomial_string(s_exp: usize, t_exp: usize, var_s: &str, var_t: &str) -> String {
    let mut parts = Vec::new();
    match s_exp {
        0 => {}
        1 => parts.push(var_s.to_string()),
        _ => parts.push(format!("{var_s}^{s_exp}")),
    }
    match t_exp {
        0 => {}
        1 => parts.push(var_t.to_string()),
        _ => parts.push(format!("{var_t}^{t_exp}")),
    }
    parts.join(" ")
}

fn make_form_monic(f: BinaryForm<Rat>) -> BinaryForm<Rat> {
    let lead = f.coeffs.iter().find(|c| !c.is_zero()).cloned();
    match lead {
        Some(l) if !l.is_one() => {
            let coeffs = f.coeffs.iter().map(|c| c / &l).collect();
            BinaryForm::new(coeffs)
        }
        _ => f,
    }
}

impl fmt::Display for BinaryForm<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("s", "t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(ints: &[i64]) -> BinaryForm<Rat> {
        BinaryForm::new(ints.iter().map(|&x| Rat::from_i64(x)).collect())
    }

    fn pt(a: i64, b: i64) -> PointP1 {
        PointP1::from_integers(a, b).unwrap()
    }

    #[test]
    fn point_canonicalization() {
        assert_eq!(pt(-1, 0), pt(1, 0));
        assert_eq!(pt(2, -4), pt(1, -2));
        assert_eq!(pt(0, -3), pt(0, 1));
        assert!(PointP1::from_integers(0, 0).is_err());
    }

    #[test]
    fn products() {
        // (s - t)(s + t) = s^2 - t^2
        assert_eq!(form(&[1, -1]).mul(&form(&[1, 1])), form(&[1, 0, -1]));
        // s^3 * t^3 = s^3 t^3
        assert_eq!(
            form(&[1, 0, 0, 0]).mul(&form(&[0, 0, 0, 1])),
            form(&[0, 0, 0, 1, 0, 0, 0])
        );
        // s^2 t * s t^2 = s^3 t^3
        assert_eq!(
            form(&[0, 1, 0, 0]).mul(&form(&[0, 0, 1, 0])),
            form(&[0, 0, 0, 1, 0, 0, 0])
        );
    }

    #[test]
    fn linear_powers() {
        assert_eq!(BinaryForm::<Rat>::linear_power(&pt(1, 1), 2), form(&[1, -2, 1]));
        assert_eq!(BinaryForm::<Rat>::linear_power(&pt(0, 1), 3), form(&[1, 0, 0, 0]));
        // (s - (-1)t)^3 with beta = -1 canonicalized: q = (1:-1) -> -(s+t)^3
        assert_eq!(
            BinaryForm::<Rat>::linear_power(&pt(1, -1), 3),
            form(&[-1, -3, -3, -1])
        );
    }

    #[test]
    fn orders_of_vanishing() {
        // s^4 + t^4 does not vanish at (1:1)
        assert_eq!(form(&[1, 0, 0, 0, 1]).ord_at(&pt(1, 1)).unwrap(), 0);
        // (s-t)^2 (s+t) vanishes to order 2 at (1:1)
        let f = form(&[1, -1]).mul(&form(&[1, -1])).mul(&form(&[1, 1]));
        assert_eq!(f.ord_at(&pt(1, 1)).unwrap(), 2);
        // s^3 t has s-multiplicity 3 at (0:1)
        assert_eq!(form(&[0, 1, 0, 0, 0]).ord_at(&pt(0, 1)).unwrap(), 3);
        assert_eq!(form(&[0, 0]).ord_at(&pt(1, 1)), Err(Error::ZeroForm));
    }

    #[test]
    fn gcds() {
        // gcd(s^2 t, s t^2) = s t
        assert_eq!(
            form(&[0, 1, 0, 0]).gcd(&form(&[0, 0, 1, 0])).unwrap(),
            form(&[0, 1, 0])
        );
        // gcd(s^2 - t^2, s - t) = s - t
        assert_eq!(
            form(&[1, 0, -1]).gcd(&form(&[1, -1])).unwrap(),
            form(&[1, -1])
        );
        // gcd(s^3 + t^3, s^2 - s t + t^2) = s^2 - s t + t^2
        assert_eq!(
            form(&[1, 0, 0, 1]).gcd(&form(&[1, -1, 1])).unwrap(),
            form(&[1, -1, 1])
        );
        assert_eq!(
            form(&[0, 0]).gcd(&form(&[0, 0])),
            Err(Error::GcdOfZeroForms)
        );
    }

    #[test]
    fn rational_root_extraction() {
        // alpha^2 beta as a form in (alpha, beta): roots (0:1) twice, (1:0) once
        let f = form(&[0, 1, 0, 0]);
        let rr = f.rational_roots().unwrap();
        assert_eq!(rr.roots, vec![(pt(0, 1), 2), (pt(1, 0), 1)]);
        assert_eq!(rr.residual_degree, 0);

        // beta^3 + alpha^3: rational root (1:-1), residual 2
        let g = form(&[1, 0, 0, 1]);
        let rr = g.rational_roots().unwrap();
        assert_eq!(rr.roots, vec![(pt(1, -1), 1)]);
        assert_eq!(rr.residual_degree, 2);

        // s^2 + t^2: no rational roots
        let h = form(&[1, 0, 1]);
        let rr = h.rational_roots().unwrap();
        assert!(rr.roots.is_empty());
        assert_eq!(rr.residual_degree, 2);
    }

    #[test]
    fn roots_of_linear_powers() {
        let q = pt(2, 3);
        let f = BinaryForm::<Rat>::linear_power(&q, 4);
        let rr = f.rational_roots().unwrap();
        assert_eq!(rr.roots, vec![(q, 4)]);
        assert_eq!(rr.residual_degree, 0);
    }

    #[test]
    fn adic_coefficients_recover_orders() {
        let q = pt(1, 2);
        for n in 0..=6 {
            let f = BinaryForm::<Rat>::linear_power(&q, n);
            let c = f.adic_coefficients(&q);
            assert_eq!(
                c.iter().position(|x| !x.is_zero()),
                Some(n),
                "u-power expansion of the n-th linear power starts at n"
            );
        }
    }
}
