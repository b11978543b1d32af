//! Integer factorization support for the rational-root search.
//!
//! Trial division handles everything the fixtures produce; Miller-Rabin plus
//! Brent's cycle method keep the divisor enumeration exact when a user feeds
//! in forms with large composite coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

fn mod_pow(mut base: BigInt, mut exp: BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::one();
    base %= m;
    while exp.is_positive() {
        if exp.is_odd() {
            acc = acc * &base % m;
        }
        base = &base * &base % m;
        exp >>= 1;
    }
    acc
}

/// Miller-Rabin with the deterministic base set for 64-bit inputs; the same
/// bases act as a strong probabilistic test beyond that range.
fn is_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1: BigInt = n - BigInt::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(BigInt::from(a), d.clone(), n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho. `n` must be odd, composite, > 1.
fn brent_rho(n: &BigInt) -> BigInt {
    for c in 1u64.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = BigInt::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = (&x - &y).abs();
            if diff.is_zero() {
                break; // cycle without factor; retry with next c
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && &d != n {
            return d;
        }
    }
    unreachable!("factor search exhausted u64 polynomial offsets");
}

fn factor_into(n: BigInt, out: &mut BTreeMap<BigInt, u32>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = brent_rho(&n);
    let q = &n / &d;
    factor_into(d, out);
    factor_into(q, out);
}

/// Prime factorization of |n| for n != 0.
pub(crate) fn factor(n: &BigInt) -> BTreeMap<BigInt, u32> {
    assert!(!n.is_zero(), "factor(0) is undefined");
    let mut n = n.abs();
    let mut out = BTreeMap::new();
    for p in [2u32, 3, 5] {
        let p = BigInt::from(p);
        while (&n % &p).is_zero() {
            n /= &p;
            *out.entry(p.clone()).or_insert(0) += 1;
        }
    }
    let mut p = 7u64;
    let small_bound = 1u64 << 20;
    while p < small_bound {
        let pb = BigInt::from(p);
        if (&pb * &pb) > n {
            break;
        }
        while (&n % &pb).is_zero() {
            n /= &pb;
            *out.entry(pb.clone()).or_insert(0) += 1;
        }
        p += 2;
    }
    if !n.is_one() {
        factor_into(n, &mut out);
    }
    out
}

/// All positive divisors of |n|, ascending.
pub(crate) fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factor(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        let mut pk = BigInt::one();
        for _ in 0..=e {
            for d in &divs {
                next.push(d * &pk);
            }
            pk *= &p;
        }
        divs = next;
    }
    divs.sort();
    divs
}
