//! Reduction modulo a prime `p ≡ 1 (mod 4)`, where `i` becomes a square
//! root of −1. Used only to certify that a gcd is trivial: a constant gcd
//! of images with nonvanishing leading coefficients proves it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

pub const P: u64 = 4_611_686_018_427_387_817;
/// A square root of −1 modulo `P`.
pub const SQRT_M1: u64 = 120_863_620_846_201_794;

pub fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

fn int_image(n: &BigInt) -> u64 {
    let r = n % BigInt::from(P);
    let r = if r.sign() == num_bigint::Sign::Minus { r + BigInt::from(P) } else { r };
    r.to_u64().expect("reduced below the modulus")
}

/// `None` when the denominator vanishes modulo `P`.
pub fn rational_image(q: &BigRational) -> Option<u64> {
    let d = int_image(q.denom());
    if d == 0 {
        return None;
    }
    Some(mul(int_image(q.numer()), inv(d)))
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Degree of the gcd of two dense polynomials over `F_P`, low degree first.
/// Both inputs must be nonzero.
pub fn gcd_degree(a: &[u64], b: &[u64]) -> usize {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let db = b.len() - 1;
        let lc_inv = inv(b[db]);
        while a.len() > db {
            let da = a.len() - 1;
            let c = mul(a[da], lc_inv);
            let shift = da - db;
            for (j, bj) in b.iter().enumerate() {
                a[j + shift] = sub(a[j + shift], mul(c, *bj));
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_minus_one() {
        assert_eq!(mul(SQRT_M1, SQRT_M1), P - 1);
    }

    #[test]
    fn gcd_degrees() {
        // (z − 1)(z + 2) and (z − 1)(z − 3)
        let a = [P - 2, 1, 1];
        let b = [3, P - 4, 1];
        assert_eq!(gcd_degree(&a, &b), 1);
        assert_eq!(gcd_degree(&a, &[1, 1]), 0);
    }
}
