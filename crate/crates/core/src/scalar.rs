//! Integer scalars for exact lattice arithmetic.
//!
//! Everything in this crate is generic over a signed machine integer. Every
//! operation that can exceed the range of the scalar goes through the checked
//! helpers here and surfaces [`Error::Overflow`] instead of wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{CheckedNeg, CheckedRem, PrimInt, Signed};

use crate::error::{Error, Result};

/// Signed integer type usable as a lattice coordinate.
pub trait Scalar:
    PrimInt
    + Signed
    + Integer
    + CheckedNeg
    + CheckedRem
    + Hash
    + Debug
    + Display
    + FromStr
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: PrimInt
        + Signed
        + Integer
        + CheckedNeg
        + CheckedRem
        + Hash
        + Debug
        + Display
        + FromStr
        + Send
        + Sync
        + 'static
{
}

#[inline]
pub(crate) fn add<T: Scalar>(a: T, b: T) -> Result<T> {
    a.checked_add(&b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn sub<T: Scalar>(a: T, b: T) -> Result<T> {
    a.checked_sub(&b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn mul<T: Scalar>(a: T, b: T) -> Result<T> {
    a.checked_mul(&b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn neg<T: Scalar>(a: T) -> Result<T> {
    a.checked_neg().ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn abs<T: Scalar>(a: T) -> Result<T> {
    if a < T::zero() {
        neg(a)
    } else {
        Ok(a)
    }
}

/// Non-negative gcd with `gcd(0, n) = |n|` and `gcd(0, 0) = 0`.
pub fn gcd<T: Scalar>(a: T, b: T) -> Result<T> {
    let (mut a, mut b) = (abs(a)?, abs(b)?);
    while !b.is_zero() {
        let r = a.checked_rem(&b).ok_or(Error::Overflow)?;
        a = b;
        b = r;
    }
    Ok(a)
}

/// Returns `(g, s, t)` with `s·a + t·b = g = gcd(a, b) ≥ 0`.
pub fn extended_gcd<T: Scalar>(a: T, b: T) -> Result<(T, T, T)> {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let quot = old_r.div_floor(&r);
        let next_r = sub(old_r, mul(quot, r)?)?;
        old_r = r;
        r = next_r;
        let next_s = sub(old_s, mul(quot, s)?)?;
        old_s = s;
        s = next_s;
        let next_t = sub(old_t, mul(quot, t)?)?;
        old_t = t;
        t = next_t;
    }
    if old_r < T::zero() {
        Ok((neg(old_r)?, neg(old_s)?, neg(old_t)?))
    } else {
        Ok((old_r, old_s, old_t))
    }
}
