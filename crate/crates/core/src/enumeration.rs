//! Exhaustive enumeration of LDP-polygons with vertices in a box, and the
//! classification checks run over the resulting catalog.
//!
//! Every check is a "no counterexample in the box" statement: a class whose
//! representatives all need a coordinate outside `[−n, n]` is absent.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::equivalence::canonical_form;
use crate::error::{Error, Result};
use crate::families::{classify_three, family_matches, identify, FamilyParams, FamilyTag, ThreeCase};
use crate::lattice::{angle_cmp, det2, is_primitive};
use crate::polygon::{format_vertices, LdpPolygon};
use crate::surface::{analyze, cyclic_arc};
use crate::{Canonical, Polygon, Ray, Report};

/// All vertex coordinates lie in `[−n, n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxSpec {
    pub n: i64,
}

impl BoxSpec {
    pub fn new(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Precondition(format!("box size must be >= 1, got {n}")));
        }
        Ok(Self { n })
    }

    /// Primitive vectors of the box in counterclockwise angular order from
    /// the positive x-axis.
    pub fn primitive_points(&self) -> Vec<Ray> {
        let n = self.n;
        let mut pts: Vec<Ray> = (-n..=n)
            .flat_map(|x| (-n..=n).map(move |y| Ray::new(x, y)))
            .filter(|&v| is_primitive(v))
            .collect();
        pts.sort_by(|&a, &b| angle_cmp(a, b).expect("box coordinates are small"));
        pts
    }

    pub fn contains(&self, v: Ray) -> bool {
        v.x.abs() <= self.n && v.y.abs() <= self.n
    }
}

/// One equivalence class of LDP-polygons.
///
/// JSON field names are part of the catalog file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// Canonical vertex cycle.
    pub vertices: Vec<Ray>,
    pub d: usize,
    pub rho: usize,
    pub dets: Vec<i64>,
    pub f: Vec<i64>,
    pub singular: usize,
    #[serde(default)]
    pub family: Option<FamilyParams>,
    #[serde(default)]
    pub three_case: Option<ThreeCase>,
}

impl CatalogEntry {
    /// Entry for the class of `q`; identification fields are left empty.
    pub fn new(q: &Polygon) -> Result<Self> {
        let canonical = canonical_form(q)?;
        let polygon = canonical.to_polygon()?;
        let report = analyze(polygon.fan())?;
        Ok(Self::from_parts(canonical, &report))
    }

    fn from_parts(canonical: Canonical, report: &Report) -> Self {
        Self {
            vertices: canonical.vertices,
            d: report.d,
            rho: report.picard_number,
            dets: report.dets(),
            f: report.f_values.clone(),
            singular: report.singular_count,
            family: None,
            three_case: None,
        }
    }

    pub fn polygon(&self) -> Result<Polygon> {
        LdpPolygon::new(self.vertices.clone())
    }

    /// Fills `family` (one to three singular points) and `three_case`.
    pub fn classify(&mut self) -> Result<()> {
        let q = self.polygon()?;
        self.family = if (1..=3).contains(&self.singular) { identify(&q)? } else { None };
        self.three_case = if self.singular == 3 { Some(classify_three(&q)?) } else { None };
        Ok(())
    }

    pub fn vertex_text(&self) -> String {
        format_vertices(&self.vertices)
    }
}

fn cross_at(a: Ray, b: Ray, c: Ray) -> i64 {
    // cross(b − a, c − b); box coordinates keep this far from overflow
    (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
}

fn det(a: Ray, b: Ray) -> i64 {
    a.x * b.y - b.x * a.y
}

/// Depth-first search over convex chains starting at `pts[start]`, which is
/// the angularly first vertex of every polygon this shard produces.
fn enumerate_shard(pts: &[Ray], start: usize, out: &mut HashSet<Canonical>) -> Result<()> {
    let mut path: Vec<usize> = vec![start];
    extend(pts, &mut path, out)
}

fn extend(pts: &[Ray], path: &mut Vec<usize>, out: &mut HashSet<Canonical>) -> Result<()> {
    let last_idx = *path.last().expect("path is never empty");
    let last = pts[last_idx];
    let first = pts[path[0]];
    let len = path.len();
    for j in last_idx + 1..pts.len() {
        let w = pts[j];
        // angles increase along `pts`, so once the step reaches π it stays there
        if det(last, w) <= 0 {
            break;
        }
        if len >= 2 {
            let prev = pts[path[len - 2]];
            let second = pts[path[1]];
            if cross_at(prev, last, w) <= 0 || cross_at(first, second, w) <= 0 {
                continue;
            }
        }
        path.push(j);
        if len >= 2 {
            let prev = pts[path[len - 1]];
            let second = pts[path[1]];
            if det(w, first) >= 1
                && cross_at(prev, w, first) > 0
                && cross_at(w, first, second) > 0
            {
                let poly = LdpPolygon::new(path.iter().map(|&k| pts[k]).collect())?;
                out.insert(canonical_form(&poly)?);
            }
        }
        extend(pts, path, out)?;
        path.pop();
    }
    Ok(())
}

/// Canonical forms of every LDP-polygon with vertices in the box, sorted.
pub fn enumerate_canonical(spec: BoxSpec) -> Result<Vec<Canonical>> {
    let pts = spec.primitive_points();
    let shards: Vec<HashSet<Canonical>> = (0..pts.len())
        .into_par_iter()
        .map(|start| {
            let mut found = HashSet::new();
            enumerate_shard(&pts, start, &mut found).map(|_| found)
        })
        .collect::<Result<Vec<_>>>()?;
    let merged: BTreeSet<Canonical> = shards.into_iter().flatten().collect();
    Ok(merged.into_iter().collect())
}

/// One entry per equivalence class of LDP-polygons with vertices in the box,
/// sorted by canonical vertices. `jobs` sets the worker count (all cores when
/// `None`); the output does not depend on it.
pub fn enumerate_ldp(spec: BoxSpec, jobs: Option<usize>) -> Result<Vec<CatalogEntry>> {
    let run = || -> Result<Vec<CatalogEntry>> {
        enumerate_canonical(spec)?
            .into_par_iter()
            .map(|c| {
                let report = analyze(c.to_polygon()?.fan())?;
                Ok(CatalogEntry::from_parts(c, &report))
            })
            .collect()
    };
    match jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(run),
        None => run(),
    }
}

/// Fills identification fields on every entry.
pub fn classify_catalog(entries: &mut [CatalogEntry]) -> Result<()> {
    entries.par_iter_mut().try_for_each(CatalogEntry::classify)
}

/// Counterexample lists of the catalog checks; each should be empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub caveat: String,
    pub entries: usize,
    /// Number of classes by singular-point count.
    pub by_singular_count: BTreeMap<usize, usize>,
    /// Entries that are not valid canonical LDP classes or whose stored data
    /// disagrees with a fresh analysis.
    pub inconsistent: Vec<String>,
    /// (a) one singular point but no one-point family match.
    pub one_singular_unmatched: Vec<String>,
    /// (b) two singular points without a two-point family match, or `d > 5`.
    pub two_singular_counterexamples: Vec<String>,
    /// (c) three singular points outside the three cases, or `d > 6`.
    pub three_singular_counterexamples: Vec<String>,
    /// (d) `d = 5` with singular cones exactly `σ1, σ3, σ5` up to rotation.
    pub alternating_d5: Vec<String>,
    /// (e) singular cones not forming one cyclic arc.
    pub non_contiguous: Vec<String>,
    /// (f) an isolated smooth cone between singular ones whose neighbours
    /// span `det(v_{i+2}, v_{i−1}) < 2`, or fewer than three singular points.
    pub half_plane_violations: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        [
            &self.inconsistent,
            &self.one_singular_unmatched,
            &self.two_singular_counterexamples,
            &self.three_singular_counterexamples,
            &self.alternating_d5,
            &self.non_contiguous,
            &self.half_plane_violations,
        ]
        .iter()
        .all(|v| v.is_empty())
    }
}

#[derive(Default)]
struct Findings {
    inconsistent: bool,
    one: bool,
    two: bool,
    three: bool,
    alternating: bool,
    non_contiguous: bool,
    half_plane: bool,
}

fn family_is(params: &Option<FamilyParams>, tags: &[FamilyTag]) -> bool {
    params.as_ref().is_some_and(|p| tags.contains(&p.family))
}

fn check_entry(entry: &CatalogEntry) -> Result<Findings> {
    let mut out = Findings::default();
    let Ok(q) = entry.polygon() else {
        out.inconsistent = true;
        return Ok(out);
    };
    let report = analyze(q.fan())?;
    let fresh = CatalogEntry::from_parts(canonical_form(&q)?, &report);
    if !report.is_log_del_pezzo
        || fresh.vertices != entry.vertices
        || (fresh.d, fresh.rho, &fresh.dets, &fresh.f, fresh.singular)
            != (entry.d, entry.rho, &entry.dets, &entry.f, entry.singular)
    {
        out.inconsistent = true;
    }

    let d = report.d;
    let flags: Vec<bool> = report.cones.iter().map(|c| c.singular).collect();
    match report.singular_count {
        1 => {
            let found = identify(&q)?;
            out.one = !family_is(&found, &[FamilyTag::Dais1, FamilyTag::Dais2, FamilyTag::Dais3]);
        }
        2 => {
            let found = identify(&q)?;
            out.two = d > 5
                || !family_is(&found, &[FamilyTag::Two1, FamilyTag::Two2, FamilyTag::Two3]);
        }
        3 => {
            let case = classify_three(&q)?;
            out.three = match case {
                ThreeCase::PicardLeTwo => d > 4,
                ThreeCase::FamilyD5 => d != 5,
                ThreeCase::BlowupOfPicard3 => d != 6,
                ThreeCase::None => true,
            };
        }
        _ => {}
    }
    if (1..=2).contains(&report.singular_count) && !out.one && !out.two {
        // a match beyond the parameter bound alone would expose a bad bound
        let bounded = identify(&q)?;
        let any = family_matches(&q)?;
        if bounded.is_none() && !any.is_empty() {
            out.one |= report.singular_count == 1;
            out.two |= report.singular_count == 2;
        }
    }

    if d == 5 && report.singular_count == 3 {
        let smooth: Vec<usize> = (0..d).filter(|&k| !flags[k]).collect();
        let gap = (smooth[1] - smooth[0]) % d;
        out.alternating = gap != 1 && gap != d - 1;
    }
    out.non_contiguous = !cyclic_arc(&flags);

    if d >= 4 {
        for k in 0..d {
            let i = k as isize + 1;
            let singular = |j: isize| flags[(j - 1).rem_euclid(d as isize) as usize];
            if !singular(i) && singular(i - 1) && singular(i + 1) {
                let span = det2(q.fan().ray(i + 2), q.fan().ray(i - 1))?;
                if span < 2 || report.singular_count < 3 {
                    out.half_plane = true;
                }
            }
        }
    }
    Ok(out)
}

/// Runs every classification check over a catalog. Stored `family` and
/// `three_case` fields are ignored and recomputed.
pub fn verify_catalog(entries: &[CatalogEntry]) -> Result<VerificationReport> {
    let findings = entries.par_iter().map(check_entry).collect::<Result<Vec<_>>>()?;
    let mut report = VerificationReport {
        caveat: "no counterexample among the catalogued classes; classes needing larger \
                 coordinates than the enumeration box are not covered"
            .into(),
        entries: entries.len(),
        ..Default::default()
    };
    for (entry, f) in entries.iter().zip(findings) {
        *report.by_singular_count.entry(entry.singular).or_default() += 1;
        let text = entry.vertex_text();
        let lists = [
            (f.inconsistent, &mut report.inconsistent),
            (f.one, &mut report.one_singular_unmatched),
            (f.two, &mut report.two_singular_counterexamples),
            (f.three, &mut report.three_singular_counterexamples),
            (f.alternating, &mut report.alternating_d5),
            (f.non_contiguous, &mut report.non_contiguous),
            (f.half_plane, &mut report.half_plane_violations),
        ];
        for (hit, list) in lists {
            if hit {
                list.push(text.clone());
            }
        }
    }
    Ok(report)
}
