//! Complete fans given by counterclockwise ray cycles, LDP-polygons, and the
//! `x,y;x,y;…` vertex text format.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{det2, is_primitive, RayVector};
use crate::scalar::{self, Scalar};

/// Counterclockwise cycle of primitive rays `v_1, …, v_d` winding exactly
/// once around the origin, with `det(v_i, v_{i+1}) ≥ 1` for every `i`.
///
/// Slice position `k` holds `v_{k+1}`; cone `σ_i` spans `v_i, v_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FanCycle<T> {
    rays: Vec<RayVector<T>>,
    dets: Vec<T>,
}

impl<T: Scalar> FanCycle<T> {
    pub fn new(rays: Vec<RayVector<T>>) -> Result<Self> {
        validate_fan(rays)
    }

    /// Number of rays `d`.
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn rays(&self) -> &[RayVector<T>] {
        &self.rays
    }

    pub fn into_rays(self) -> Vec<RayVector<T>> {
        self.rays
    }

    /// `det(v_i, v_{i+1})` for `i = 1..=d`, in order.
    pub fn cone_dets(&self) -> &[T] {
        &self.dets
    }

    /// The ray `v_i` for any integer `i`, read cyclically (so `v_0 = v_d`).
    pub fn ray(&self, i: isize) -> RayVector<T> {
        let d = self.rays.len() as isize;
        self.rays[(i - 1).rem_euclid(d) as usize]
    }

    /// Equality up to cyclic rotation of the starting ray.
    pub fn cyclic_eq(&self, other: &Self) -> bool {
        let d = self.len();
        d == other.len()
            && (0..d).any(|shift| (0..d).all(|k| self.rays[(k + shift) % d] == other.rays[k]))
    }

    pub(crate) fn from_parts(rays: Vec<RayVector<T>>, dets: Vec<T>) -> Self {
        debug_assert_eq!(rays.len(), dets.len());
        Self { rays, dets }
    }
}

impl<T: Scalar> fmt::Display for FanCycle<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vertices(&self.rays))
    }
}

/// A convex lattice polygon with the origin in its interior and primitive
/// vertices, stored as its counterclockwise vertex cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LdpPolygon<T> {
    cycle: FanCycle<T>,
}

impl<T: Scalar> LdpPolygon<T> {
    pub fn new(vertices: Vec<RayVector<T>>) -> Result<Self> {
        validate_ldp_polygon(vertices)
    }

    /// The face fan `Δ_Q`.
    pub fn fan(&self) -> &FanCycle<T> {
        &self.cycle
    }

    pub fn vertices(&self) -> &[RayVector<T>] {
        self.cycle.rays()
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn into_fan(self) -> FanCycle<T> {
        self.cycle
    }

    /// Reinterprets an LDP fan (all turns strictly convex) as its polygon.
    pub fn from_fan(cycle: FanCycle<T>) -> Result<Self> {
        check_convex(cycle.rays())?;
        Ok(Self { cycle })
    }
}

impl<T: Scalar> fmt::Display for LdpPolygon<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycle.fmt(f)
    }
}

/// Checks every [`FanCycle`] invariant. The input order is kept as given.
///
/// Checks run in this order and report the first failure: length, primitivity,
/// duplicates, counterclockwise steps, winding number.
pub fn validate_fan<T: Scalar>(rays: Vec<RayVector<T>>) -> Result<FanCycle<T>> {
    let d = rays.len();
    if d < 3 {
        return Err(Error::TooFewRays(d));
    }
    if let Some(k) = rays.iter().position(|&v| !is_primitive(v)) {
        return Err(Error::NonPrimitiveRay(k + 1));
    }
    let mut seen = HashSet::with_capacity(d);
    if let Some(k) = rays.iter().position(|v| !seen.insert(*v)) {
        return Err(Error::DuplicateRay(k + 1));
    }
    let mut dets = Vec::with_capacity(d);
    for k in 0..d {
        let det = det2(rays[k], rays[(k + 1) % d])?;
        if det <= T::zero() {
            return Err(Error::NotCounterclockwise(k + 1));
        }
        dets.push(det);
    }
    // every step turns by an angle in (0, π), so the winding number is the
    // number of steps from the lower half [π, 2π) into the upper half [0, π)
    let turns = (0..d)
        .filter(|&k| rays[k].half() == 1 && rays[(k + 1) % d].half() == 0)
        .count();
    if turns != 1 {
        return Err(Error::BadWinding(turns));
    }
    Ok(FanCycle { rays, dets })
}

/// Checks the fan invariants plus strict convex position of the vertices.
pub fn validate_ldp_polygon<T: Scalar>(points: Vec<RayVector<T>>) -> Result<LdpPolygon<T>> {
    let cycle = validate_fan(points)?;
    check_convex(cycle.rays())?;
    Ok(LdpPolygon { cycle })
}

/// `cross(v_i − v_{i−1}, v_{i+1} − v_i)` at slice position `k`.
pub(crate) fn turn<T: Scalar>(pts: &[RayVector<T>], k: usize) -> Result<T> {
    let d = pts.len();
    let prev = pts[(k + d - 1) % d];
    let cur = pts[k];
    let next = pts[(k + 1) % d];
    det2(cur.checked_sub(prev)?, next.checked_sub(cur)?)
}

fn check_convex<T: Scalar>(pts: &[RayVector<T>]) -> Result<()> {
    for k in 0..pts.len() {
        if turn(pts, k)? <= T::zero() {
            return Err(Error::NotStrictlyConvex(k + 1));
        }
    }
    Ok(())
}

/// `2·area(Q) = Σ det(v_i, v_{i+1})`.
pub fn twice_area<T: Scalar>(q: &LdpPolygon<T>) -> Result<T> {
    fan_twice_area(q.fan())
}

pub(crate) fn fan_twice_area<T: Scalar>(fan: &FanCycle<T>) -> Result<T> {
    fan.cone_dets().iter().try_fold(T::zero(), |acc, &d| scalar::add(acc, d))
}

/// Parses `"x,y;x,y;…"`. Whitespace around numbers is ignored; an empty
/// trailing segment (a final `;`) is allowed.
pub fn parse_vertices<T: Scalar>(text: &str) -> Result<Vec<RayVector<T>>> {
    let mut out = Vec::new();
    let segments: Vec<&str> = text.split(';').collect();
    for (k, seg) in segments.iter().enumerate() {
        if seg.trim().is_empty() && k + 1 == segments.len() && k > 0 {
            break;
        }
        let parts: Vec<&str> = seg.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Parse {
                token: seg.trim().to_string(),
                reason: "expected a pair x,y".into(),
            });
        }
        let num = |s: &str| {
            let s = s.trim();
            T::from_str(s).map_err(|_| Error::Parse {
                token: s.to_string(),
                reason: "not an integer in range".into(),
            })
        };
        out.push(RayVector::new(num(parts[0])?, num(parts[1])?));
    }
    Ok(out)
}

/// Inverse of [`parse_vertices`], without whitespace.
pub fn format_vertices<T: Scalar>(vs: &[RayVector<T>]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

impl<T: Scalar> FromStr for FanCycle<T> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        validate_fan(parse_vertices(s)?)
    }
}

impl<T: Scalar> FromStr for LdpPolygon<T> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        validate_ldp_polygon(parse_vertices(s)?)
    }
}
