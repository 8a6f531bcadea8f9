//! Scalar traits shared by the polynomial, form and Möbius layers.
//!
//! Polynomials and Möbius maps are generic over [`Scalar`], which only asks
//! for ring operations plus division. Anything that needs exact equality
//! (gcds, normal forms, structural comparison) additionally requires
//! [`ExactField`].

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Field-like scalar: closed under `+ - * /` and negation.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Send
        + Sync
{
}

/// A field with exact, structural equality.
pub trait ExactField: Scalar + Eq + Hash + Display + FromPrimitive {
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    /// True when the printer should emit this coefficient as `- (-c)`.
    fn prints_negative(&self) -> bool;

    /// True when the printed form needs parentheses inside a product.
    fn is_compound(&self) -> bool;

    /// Nearest complex double.
    fn to_complex(&self) -> Complex64;

    /// Image in `F_P` (see [`crate::algebra::modular`]), when defined.
    fn modular_image(&self) -> Option<u64> {
        None
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num).unwrap() / Self::from_i64(den).unwrap()
    }
}

impl ExactField for BigRational {
    fn prints_negative(&self) -> bool {
        self.is_negative()
    }

    fn is_compound(&self) -> bool {
        false
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(self), 0.0)
    }

    fn modular_image(&self) -> Option<u64> {
        crate::algebra::modular::rational_image(self)
    }
}

/// Lossy conversion of an arbitrary-precision rational to `f64`.
pub fn ratio_to_f64(q: &BigRational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Huge numerator/denominator: scale by bit lengths first.
    let n = q.numer();
    let d = q.denom();
    let shift = n.bits() as i64 - d.bits() as i64;
    let scaled = if shift > 0 {
        BigRational::new(n.clone(), d.clone() << (shift as usize))
    } else {
        BigRational::new(n.clone() << ((-shift) as usize), d.clone())
    };
    scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
}

/// Integer square root check for nonnegative big integers.
pub(crate) fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}
