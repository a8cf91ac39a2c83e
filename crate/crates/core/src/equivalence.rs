//! Unimodular equivalence of LDP-polygons and canonical representatives.
//!
//! Two polygons are equivalent when an integer matrix of determinant ±1
//! carries one vertex set onto the other. [`Mode::Special`] restricts to
//! determinant +1.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::{apply_map, det2, edge_normalizer, solve_map, RayVector, UnimodularMap};
use crate::polygon::{format_vertices, LdpPolygon};
use crate::scalar::Scalar;

/// Which matrix group defines equivalence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `GL(2, ℤ)`: determinant ±1.
    #[default]
    General,
    /// `SL(2, ℤ)`: determinant +1 only.
    Special,
}

/// Distinguished counterclockwise vertex list of an equivalence class.
///
/// Every candidate starts with `(1, 0)` followed by `(a, k)` where `k ≥ 1` is
/// the first edge's cone determinant and `0 ≤ a < k`; the form is the
/// lexicographically least candidate over all starting edges (and, under
/// [`Mode::General`], both reading directions).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct CanonicalForm<T> {
    pub vertices: Vec<RayVector<T>>,
}

impl<T: Scalar> CanonicalForm<T> {
    pub fn to_polygon(&self) -> Result<LdpPolygon<T>> {
        LdpPolygon::new(self.vertices.clone())
    }
}

impl<T: Scalar> fmt::Display for CanonicalForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vertices(&self.vertices))
    }
}

/// Image of `q` under every edge normalizer, read counterclockwise from the
/// normalized edge.
fn candidates<T: Scalar>(
    q: &LdpPolygon<T>,
    mode: Mode,
) -> Result<Vec<(UnimodularMap<T>, Vec<RayVector<T>>)>> {
    let vs = q.vertices();
    let d = vs.len();
    let mut out = Vec::with_capacity(2 * d);
    for k in 0..d {
        let m = edge_normalizer(vs[k], vs[(k + 1) % d])?;
        let image = (0..d)
            .map(|j| apply_map(&m, vs[(k + j) % d]))
            .collect::<Result<Vec<_>>>()?;
        out.push((m, image));
    }
    if mode == Mode::General {
        let flip = UnimodularMap { a: T::one(), b: T::zero(), c: T::zero(), d: -T::one() };
        for k in 0..d {
            let u = apply_map(&flip, vs[k])?;
            let w = apply_map(&flip, vs[(k + d - 1) % d])?;
            let m = edge_normalizer(u, w)?.compose(&flip)?;
            let image = (0..d)
                .map(|j| apply_map(&m, vs[(k + d - j) % d]))
                .collect::<Result<Vec<_>>>()?;
            out.push((m, image));
        }
    }
    Ok(out)
}

/// Canonical form under the given equivalence mode.
pub fn canonical_form_with<T: Scalar>(q: &LdpPolygon<T>, mode: Mode) -> Result<CanonicalForm<T>> {
    let best = candidates(q, mode)?
        .into_iter()
        .map(|(_, image)| image)
        .min()
        .expect("a polygon has at least three edges");
    Ok(CanonicalForm { vertices: best })
}

/// Canonical form under `GL(2, ℤ)`.
pub fn canonical_form<T: Scalar>(q: &LdpPolygon<T>) -> Result<CanonicalForm<T>> {
    canonical_form_with(q, Mode::General)
}

/// A map `M` with `canonical_form(q) = M·q` read in order.
pub fn canonical_map<T: Scalar>(q: &LdpPolygon<T>, mode: Mode) -> Result<UnimodularMap<T>> {
    let (m, _) = candidates(q, mode)?
        .into_iter()
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("a polygon has at least three edges");
    Ok(m)
}

/// Some `M` carrying the vertex set of `q` onto that of `r`, if any.
///
/// Any such `M` sends the adjacent pair `(v_1, v_2)` of `q` to an adjacent
/// pair of `r` in one of the two directions, so trying all `2·d` ordered
/// adjacent pairs of `r` decides the question.
pub fn are_equivalent_with<T: Scalar>(
    q: &LdpPolygon<T>,
    r: &LdpPolygon<T>,
    mode: Mode,
) -> Result<Option<UnimodularMap<T>>> {
    let (qv, rv) = (q.vertices(), r.vertices());
    let d = qv.len();
    if d != rv.len() {
        return Ok(None);
    }
    let target: HashSet<RayVector<T>> = rv.iter().copied().collect();
    let (u1, u2) = (qv[0], qv[1]);
    let k = det2(u1, u2)?;
    for j in 0..d {
        let (a, b) = (rv[j], rv[(j + 1) % d]);
        for (w1, w2) in [(a, b), (b, a)] {
            // an adjacent pair's determinant is preserved up to the sign of det M
            if det2(w1, w2)?.abs() != k {
                continue;
            }
            let Some(m) = solve_map(u1, u2, w1, w2)? else { continue };
            if mode == Mode::Special && !m.det()?.is_one() {
                continue;
            }
            let mut hits = 0;
            for &v in qv {
                if target.contains(&apply_map(&m, v)?) {
                    hits += 1;
                } else {
                    break;
                }
            }
            if hits == d {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

/// [`are_equivalent_with`] under `GL(2, ℤ)`.
pub fn are_equivalent<T: Scalar>(
    q: &LdpPolygon<T>,
    r: &LdpPolygon<T>,
) -> Result<Option<UnimodularMap<T>>> {
    are_equivalent_with(q, r, Mode::General)
}

/// Applies `m` to every vertex and re-validates. A map of determinant −1
/// reverses the orientation, so the image is read backwards.
pub fn transform<T: Scalar>(m: &UnimodularMap<T>, q: &LdpPolygon<T>) -> Result<LdpPolygon<T>> {
    let mut image = q
        .vertices()
        .iter()
        .map(|&v| apply_map(m, v))
        .collect::<Result<Vec<_>>>()?;
    if m.det()? < T::zero() {
        image.reverse();
    }
    LdpPolygon::new(image)
}
