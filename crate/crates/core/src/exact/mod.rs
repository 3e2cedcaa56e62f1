//! Exact arithmetic kernel.
//!
//! Everything here is exact: arbitrary-precision rationals, Gaussian
//! rationals, Laurent polynomials in one variable `t`, multivariate integer
//! polynomials and 2×2 matrices over any of these rings. There is no floating
//! point anywhere in the crate.

mod gauss;
mod laurent;
pub mod linalg;
mod mat2;
mod poly;
mod rat;

pub use gauss::GaussRat;
pub use laurent::LaurentPoly;
pub use mat2::{Mat2, Unimodular};
pub use poly::{Monomial, MultiPoly};
pub use rat::Rat;

use num_bigint::BigInt;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;
}
