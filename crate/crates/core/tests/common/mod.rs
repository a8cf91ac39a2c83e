//! Test-only oracles and generators, independent of the enumerator's search.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ldp_core::equivalence::canonical_form;
use ldp_core::lattice::UnimodularMap;
use ldp_core::{Canonical, Polygon, Ray, Unimodular};
use rand::Rng;

fn cross(o: Ray, a: Ray, b: Ray) -> i64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Strict convex hull (collinear points dropped), counterclockwise, by
/// Andrew's monotone chain.
pub fn hull(points: &[Ray]) -> Vec<Ray> {
    let mut pts = points.to_vec();
    pts.sort_by_key(|p| (p.x, p.y));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Ray> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Ray> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// Every polygon (not class) whose vertices are primitive points of
/// `[−n, n]²` in strictly convex position with the origin strictly inside.
pub fn brute_force_polygons(n: i64) -> Vec<Vec<Ray>> {
    let pts: Vec<Ray> = (-n..=n)
        .flat_map(|x| (-n..=n).map(move |y| Ray::new(x, y)))
        .filter(|p| gcd(p.x, p.y) == 1)
        .collect();
    assert!(pts.len() <= 24, "subset oracle is exponential");
    let origin = Ray::new(0, 0);
    let mut out = Vec::new();
    for mask in 0u32..(1 << pts.len()) {
        if mask.count_ones() < 3 {
            continue;
        }
        let subset: Vec<Ray> = (0..pts.len()).filter(|k| mask >> k & 1 == 1).map(|k| pts[k]).collect();
        let h = hull(&subset);
        if h.len() != subset.len() {
            continue;
        }
        let inside = (0..h.len()).all(|k| cross(h[k], h[(k + 1) % h.len()], origin) > 0);
        if inside {
            out.push(h);
        }
    }
    out
}

/// Canonical forms of [`brute_force_polygons`].
pub fn brute_force_classes(n: i64) -> BTreeSet<Canonical> {
    brute_force_polygons(n)
        .into_iter()
        .map(|vs| canonical_form(&Polygon::new(vs).expect("oracle polygon validates")).unwrap())
        .collect()
}

/// Random product of the elementary generators of GL(2, ℤ).
pub fn random_unimodular(rng: &mut impl Rng, steps: usize) -> Unimodular {
    let gens = [
        UnimodularMap { a: 1, b: 1, c: 0, d: 1 },
        UnimodularMap { a: 1, b: -1, c: 0, d: 1 },
        UnimodularMap { a: 1, b: 0, c: 1, d: 1 },
        UnimodularMap { a: 1, b: 0, c: -1, d: 1 },
        UnimodularMap { a: 0, b: 1, c: 1, d: 0 },
    ];
    let mut m = UnimodularMap::identity();
    for _ in 0..steps {
        let next = m.compose(&gens[rng.gen_range(0..gens.len())]).unwrap();
        // keep entries bounded by 5
        if [next.a, next.b, next.c, next.d].iter().all(|v: &i64| v.abs() <= 5) {
            m = next;
        }
    }
    m
}
