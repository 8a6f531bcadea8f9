//! Exact arithmetic in the Gaussian rationals Q(i).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::error::AlgebraError;
use crate::scalar::{exact_isqrt, ratio_to_f64, ExactField};

/// `re + im·i` with both parts arbitrary-precision rationals.
///
/// `BigRational` keeps itself in lowest terms with a positive denominator,
/// so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

/// Binary operations exposed through [`GaussianRational::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self {
            re: BigRational::new(re_num.into(), re_den.into()),
            im: BigRational::new(im_num.into(), im_den.into()),
        }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    pub fn int(n: i64) -> Self {
        Self::rational(n, 1)
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = other.norm_sqr();
        let num = self.clone() * other.conj();
        Ok(Self { re: num.re / &n, im: num.im / n })
    }

    /// Field arithmetic with an explicit error for division by zero.
    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self, AlgebraError> {
        Ok(match op {
            ArithOp::Add => self.clone() + other.clone(),
            ArithOp::Sub => self.clone() - other.clone(),
            ArithOp::Mul => self.clone() * other.clone(),
            ArithOp::Div => return self.checked_div(other),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// Exact square root in Q(i), if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.im.is_zero() {
            return if self.re.is_negative() {
                is_rational_square(&(-self.re.clone()))
                    .map(|r| Self { re: BigRational::zero(), im: r })
            } else {
                is_rational_square(&self.re).map(Self::real)
            };
        }
        let modulus = is_rational_square(&self.norm_sqr())?;
        let two = BigRational::from_integer(2.into());
        let p = is_rational_square(&((&modulus + &self.re) / &two))?;
        // p ≠ 0 because im ≠ 0.
        let q = &self.im / (&two * &p);
        let root = Self { re: p, im: q };
        debug_assert_eq!(root.clone() * root.clone(), *self);
        Some(root)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }
}

/// Returns `r ≥ 0` with `r² = q` when `q` is the square of a rational.
pub fn is_rational_square(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = exact_isqrt(q.numer())?;
    let d = exact_isqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self { re: BigRational::one(), im: BigRational::zero() }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::real(self.re * rhs.re);
        }
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    /// Panics on division by zero; use [`GaussianRational::checked_div`] for
    /// untrusted operands.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero in Q(i)")
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, rhs: Self) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl MulAssign for GaussianRational {
    fn mul_assign(&mut self, rhs: Self) {
        *self = self.clone() * rhs;
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        Self::real(re)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<BigInt> for GaussianRational {
    fn from(n: BigInt) -> Self {
        Self::real(BigRational::from_integer(n))
    }
}

impl FromPrimitive for GaussianRational {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Self::int(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Self::real(BigRational::from_integer(n.into())))
    }
}

fn fmt_ratio(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Prints in the input grammar: `3/2`, `i`, `1/3*i`, `(3/2+1/3*i)`.
/// Negative values carry a leading `-`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_im = |f: &mut fmt::Formatter<'_>, im: &BigRational| -> fmt::Result {
            if im.is_one() {
                write!(f, "i")
            } else {
                fmt_ratio(im, f)?;
                write!(f, "*i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_ratio(&self.re, f),
            (true, false) => {
                if self.im.is_negative() {
                    write!(f, "-")?;
                }
                write_im(f, &self.im.abs())
            }
            (false, false) => {
                write!(f, "(")?;
                fmt_ratio(&self.re, f)?;
                write!(f, "{}", if self.im.is_negative() { "-" } else { "+" })?;
                write_im(f, &self.im.abs())?;
                write!(f, ")")
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl ExactField for GaussianRational {
    fn inverse(&self) -> Option<Self> {
        Self::one().checked_div(self).ok()
    }

    fn prints_negative(&self) -> bool {
        // Pure-real or pure-imaginary negatives print with a leading '-'.
        (self.im.is_zero() && self.re.is_negative()) || (self.re.is_zero() && self.im.is_negative())
    }

    fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }

    fn to_complex(&self) -> Complex64 {
        let (re, im) = self.to_f64_pair();
        Complex64::new(re, im)
    }

    fn modular_image(&self) -> Option<u64> {
        use crate::algebra::modular::{add, mul, rational_image, SQRT_M1};
        Some(add(rational_image(&self.re)?, mul(SQRT_M1, rational_image(&self.im)?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn norm_identity() {
        let a = GaussianRational::from_parts(1, 1, 1, 1);
        let b = GaussianRational::from_parts(1, 1, -1, 1);
        assert_eq!(a.arith(&b, ArithOp::Mul).unwrap(), GaussianRational::int(2));
    }

    #[test]
    fn inverse_of_i() {
        let one = GaussianRational::one();
        let got = one.arith(&GaussianRational::i(), ArithOp::Div).unwrap();
        assert_eq!(got, -GaussianRational::i());
    }

    #[test]
    fn componentwise_addition() {
        let a = GaussianRational::from_parts(3, 2, 1, 3);
        let b = GaussianRational::rational(1, 2);
        assert_eq!(a.arith(&b, ArithOp::Add).unwrap(), GaussianRational::from_parts(2, 1, 1, 3));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = GaussianRational::int(1);
        assert_eq!(a.arith(&GaussianRational::zero(), ArithOp::Div), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn rational_squares() {
        assert_eq!(is_rational_square(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(is_rational_square(&q(2, 1)), None);
        assert_eq!(is_rational_square(&q(-4, 1)), None);
        // t² − 4t at t = 9/2
        let t = q(9, 2);
        let disc = &t * &t - q(4, 1) * &t;
        assert_eq!(disc, q(9, 4));
        assert_eq!(is_rational_square(&disc), Some(q(3, 2)));
    }

    #[test]
    fn gaussian_sqrt() {
        assert_eq!(GaussianRational::int(-1).sqrt(), Some(GaussianRational::i()));
        // (1 + 2i)² = −3 + 4i
        let z = GaussianRational::from_parts(-3, 1, 4, 1);
        let r = z.sqrt().unwrap();
        assert_eq!(r.clone() * r, z);
        assert_eq!(GaussianRational::int(2).sqrt(), None);
        assert_eq!(GaussianRational::i().sqrt(), None);
    }

    #[test]
    fn display_matches_grammar() {
        assert_eq!(GaussianRational::from_parts(3, 2, 1, 3).to_string(), "(3/2+1/3*i)");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!((-GaussianRational::i()).to_string(), "-i");
        assert_eq!(GaussianRational::rational(-5, 7).to_string(), "-5/7");
    }
}
