//! Exact integer primitives on the plane lattice: determinants, primitivity,
//! unimodular maps.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// A lattice vector `(x, y)`.
///
/// Serialized as the two-element array `[x, y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[T; 2]", into = "[T; 2]")]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct RayVector<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> RayVector<T> {
    pub const fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Option<Self> {
        Some(Self::new(T::from(x)?, T::from(y)?))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        Ok(Self::new(scalar::add(self.x, other.x)?, scalar::add(self.y, other.y)?))
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        Ok(Self::new(scalar::sub(self.x, other.x)?, scalar::sub(self.y, other.y)?))
    }

    /// 0 for directions with angle in `[0, π)`, 1 for `[π, 2π)`.
    pub(crate) fn half(&self) -> u8 {
        if self.y > T::zero() || (self.y.is_zero() && self.x > T::zero()) {
            0
        } else {
            1
        }
    }
}

impl<T: Scalar> From<[T; 2]> for RayVector<T> {
    fn from([x, y]: [T; 2]) -> Self {
        Self { x, y }
    }
}

impl<T: Scalar> From<RayVector<T>> for [T; 2] {
    fn from(v: RayVector<T>) -> Self {
        [v.x, v.y]
    }
}

impl<T: Scalar> fmt::Display for RayVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// Signed determinant `x_u·y_v − x_v·y_u`.
pub fn det2<T: Scalar>(u: RayVector<T>, v: RayVector<T>) -> Result<T> {
    scalar::sub(scalar::mul(u.x, v.y)?, scalar::mul(v.x, u.y)?)
}

/// `gcd(|x|, |y|) = 1`. The zero vector is never primitive.
pub fn is_primitive<T: Scalar>(v: RayVector<T>) -> bool {
    matches!(scalar::gcd(v.x, v.y), Ok(g) if g.is_one())
}

/// Counterclockwise angular order of nonzero vectors, starting at the
/// positive x-axis. Parallel vectors with the same direction compare equal.
pub fn angle_cmp<T: Scalar>(u: RayVector<T>, v: RayVector<T>) -> Result<Ordering> {
    match u.half().cmp(&v.half()) {
        Ordering::Equal => {
            let d = det2(u, v)?;
            Ok(if d > T::zero() {
                Ordering::Less
            } else if d < T::zero() {
                Ordering::Greater
            } else {
                Ordering::Equal
            })
        }
        other => Ok(other),
    }
}

/// Integer 2×2 matrix `[[a, b], [c, d]]` with determinant ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnimodularMap<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> UnimodularMap<T> {
    /// Builds the map after checking `ad − bc ∈ {±1}`.
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        let m = Self { a, b, c, d };
        let det = m.det()?;
        if det.abs().is_one() {
            Ok(m)
        } else {
            Err(Error::Precondition(format!("matrix determinant {det} is not ±1")))
        }
    }

    pub fn identity() -> Self {
        Self { a: T::one(), b: T::zero(), c: T::zero(), d: T::one() }
    }

    pub fn swap() -> Self {
        Self { a: T::zero(), b: T::one(), c: T::one(), d: T::zero() }
    }

    pub fn det(&self) -> Result<T> {
        scalar::sub(scalar::mul(self.a, self.d)?, scalar::mul(self.b, self.c)?)
    }

    /// `self · other`
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let e = |p: T, q: T, r: T, s: T| scalar::add(scalar::mul(p, q)?, scalar::mul(r, s)?);
        Ok(Self {
            a: e(self.a, other.a, self.b, other.c)?,
            b: e(self.a, other.b, self.b, other.d)?,
            c: e(self.c, other.a, self.d, other.c)?,
            d: e(self.c, other.b, self.d, other.d)?,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        // det = ±1, so the inverse is the adjugate times det
        let det = self.det()?;
        let s = |v: T| scalar::mul(v, det);
        Ok(Self {
            a: s(self.d)?,
            b: s(scalar::neg(self.b)?)?,
            c: s(scalar::neg(self.c)?)?,
            d: s(self.a)?,
        })
    }
}

impl<T: Scalar> fmt::Display for UnimodularMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// `M·v`.
pub fn apply_map<T: Scalar>(m: &UnimodularMap<T>, v: RayVector<T>) -> Result<RayVector<T>> {
    Ok(RayVector::new(
        scalar::add(scalar::mul(m.a, v.x)?, scalar::mul(m.b, v.y)?)?,
        scalar::add(scalar::mul(m.c, v.x)?, scalar::mul(m.d, v.y)?)?,
    ))
}

/// The unique matrix sending `u1 ↦ w1` and `u2 ↦ w2`, if it is integral and
/// unimodular.
///
/// Fails with [`Error::DegenerateBasis`] when `det(u1, u2) = 0`.
pub fn solve_map<T: Scalar>(
    u1: RayVector<T>,
    u2: RayVector<T>,
    w1: RayVector<T>,
    w2: RayVector<T>,
) -> Result<Option<UnimodularMap<T>>> {
    let du = det2(u1, u2)?;
    if du.is_zero() {
        return Err(Error::DegenerateBasis);
    }
    // a unimodular M forces |det(w1, w2)| = |det(u1, u2)|
    if det2(w1, w2)?.abs() != du.abs() {
        return Ok(None);
    }
    // M = W · adj(U) / det(U), with U = [u1 u2] and W = [w1 w2] as columns
    let e = |p: T, q: T, r: T, s: T| scalar::sub(scalar::mul(p, q)?, scalar::mul(r, s)?);
    let num = [
        e(w1.x, u2.y, w2.x, u1.y)?,
        e(w2.x, u1.x, w1.x, u2.x)?,
        e(w1.y, u2.y, w2.y, u1.y)?,
        e(w2.y, u1.x, w1.y, u2.x)?,
    ];
    let mut entries = [T::zero(); 4];
    for (slot, n) in entries.iter_mut().zip(num) {
        let (q, r) = n.div_rem(&du);
        if !r.is_zero() {
            return Ok(None);
        }
        *slot = q;
    }
    let [a, b, c, d] = entries;
    match UnimodularMap::new(a, b, c, d) {
        Ok(m) => Ok(Some(m)),
        Err(Error::Precondition(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Returns the unique `M` with `det M = +1`, `M·u = (1, 0)` and
/// `M·w = (a, k)` where `k = det(u, w) > 0` and `0 ≤ a < k`.
///
/// `u` must be primitive and `det(u, w) ≥ 1`.
pub(crate) fn edge_normalizer<T: Scalar>(
    u: RayVector<T>,
    w: RayVector<T>,
) -> Result<UnimodularMap<T>> {
    let (g, s, t) = scalar::extended_gcd(u.x, u.y)?;
    if !g.is_one() {
        return Err(Error::Precondition(format!("({u}) is not primitive")));
    }
    let base = UnimodularMap { a: s, b: t, c: scalar::neg(u.y)?, d: u.x };
    let image = apply_map(&base, w)?;
    let k = image.y;
    if k <= T::zero() {
        return Err(Error::Precondition(format!("det(({u}), ({w})) must be positive")));
    }
    // shear [[1, -m], [0, 1]] reduces the first coordinate modulo k
    let m = image.x.div_floor(&k);
    let shear = UnimodularMap { a: T::one(), b: scalar::neg(m)?, c: T::zero(), d: T::one() };
    shear.compose(&base)
}
