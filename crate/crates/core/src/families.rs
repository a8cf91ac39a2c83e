//! The parametric families of LDP-polygons whose surfaces have exactly one,
//! two or three singular points, with their constraint systems, generators
//! and membership tests.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::equivalence::are_equivalent;
use crate::error::{Error, Result};
use crate::lattice::{apply_map, det2, solve_map};
use crate::polygon::{twice_area, LdpPolygon};
use crate::surface::{analyze, blow_down, blow_down_candidates};
use crate::{Polygon, Ray};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    /// `conv{(1,−1), (p,1), (−1,0)}`, `p ≥ 1`.
    Dais1,
    /// `conv{(1,−1), (p,1), (p−1,1), (−1,0)}`, `p ≥ 1`.
    Dais2,
    /// `conv{(1,−1), (p,1), (p−1,1), (−1,0), (0,−1)}`, `p ≥ 1`.
    Dais3,
    /// `conv{(1,0), (0,1), (−p,−q)}`.
    Two1,
    /// `conv{(1,0), (0,1), (−1,p), (q,r)}`.
    Two2,
    /// `conv{(1,0), (0,1), (−1,p+1), (−1,p), (q,r)}`.
    Two3,
    /// `conv{(1,0), (0,1), (−1,p), (q,r), (s,t)}`.
    Three5,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 7] = [
        FamilyTag::Dais1,
        FamilyTag::Dais2,
        FamilyTag::Dais3,
        FamilyTag::Two1,
        FamilyTag::Two2,
        FamilyTag::Two3,
        FamilyTag::Three5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Dais1 => "dais1",
            FamilyTag::Dais2 => "dais2",
            FamilyTag::Dais3 => "dais3",
            FamilyTag::Two1 => "two1",
            FamilyTag::Two2 => "two2",
            FamilyTag::Two3 => "two3",
            FamilyTag::Three5 => "three5",
        }
    }

    /// Names of the parameters the family takes, in order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyTag::Dais1 | FamilyTag::Dais2 | FamilyTag::Dais3 => &["p"],
            FamilyTag::Two1 => &["p", "q"],
            FamilyTag::Two2 | FamilyTag::Two3 => &["p", "q", "r"],
            FamilyTag::Three5 => &["p", "q", "r", "s", "t"],
        }
    }

    /// Number of singular points on every member.
    pub fn singular_count(self) -> usize {
        match self {
            FamilyTag::Dais1 | FamilyTag::Dais2 | FamilyTag::Dais3 => 1,
            FamilyTag::Two1 | FamilyTag::Two2 | FamilyTag::Two3 => 2,
            FamilyTag::Three5 => 3,
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            FamilyTag::Dais1 | FamilyTag::Two1 => 3,
            FamilyTag::Dais2 | FamilyTag::Two2 => 4,
            FamilyTag::Dais3 | FamilyTag::Two3 | FamilyTag::Three5 => 5,
        }
    }

    /// Position in the template of a parameter-free unimodular edge; the
    /// template read from there starts with `anchor()`.
    fn anchor_offset(self) -> usize {
        match self {
            FamilyTag::Dais1 => 2,
            FamilyTag::Dais2 => 3,
            FamilyTag::Dais3 => 4,
            _ => 0,
        }
    }

    fn anchor(self) -> (Ray, Ray) {
        match self {
            FamilyTag::Dais1 | FamilyTag::Dais2 => (Ray::new(-1, 0), Ray::new(1, -1)),
            FamilyTag::Dais3 => (Ray::new(0, -1), Ray::new(1, -1)),
            _ => (Ray::new(1, 0), Ray::new(0, 1)),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse { token: s.to_string(), reason: "unknown family tag".into() })
    }
}

/// A family tag with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: FamilyTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
}

impl FamilyParams {
    /// Takes exactly the values named by [`FamilyTag::param_names`], in order.
    pub fn new(family: FamilyTag, values: &[i64]) -> Result<Self> {
        if values.len() != family.param_names().len() {
            return Err(Error::InvalidParams {
                family: family.name().into(),
                constraint: format!("expects parameters {}", family.param_names().join(", ")),
            });
        }
        let get = |k: usize| values.get(k).copied();
        Ok(Self { family, p: get(0), q: get(1), r: get(2), s: get(3), t: get(4) })
    }

    /// The present parameters in `p, q, r, s, t` order.
    pub fn values(&self) -> Vec<i64> {
        [self.p, self.q, self.r, self.s, self.t].into_iter().flatten().collect()
    }

    fn slots(&self) -> [Option<i64>; 5] {
        [self.p, self.q, self.r, self.s, self.t]
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (name, v) in self.family.param_names().iter().zip(self.values()) {
            write!(f, " {name}={v}")?;
        }
        Ok(())
    }
}

pub struct FamilyInstance {
    pub params: FamilyParams,
    pub polygon: Polygon,
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// First violated constraint, or `None` when the parameters are admissible.
///
/// Constraints are evaluated in `i128`, where products of two `i64` values
/// cannot overflow.
pub fn violation(params: &FamilyParams) -> Option<String> {
    let tag = params.family;
    let arity = tag.param_names().len();
    let slots = params.slots();
    if slots[..arity].iter().any(Option::is_none) || slots[arity..].iter().any(Option::is_some) {
        return Some(format!("expects exactly parameters {}", tag.param_names().join(", ")));
    }
    let v: Vec<i128> = params.values().into_iter().map(i128::from).collect();
    let checks: Vec<(&str, bool)> = match tag {
        FamilyTag::Dais1 | FamilyTag::Dais2 | FamilyTag::Dais3 => vec![("p >= 1", v[0] >= 1)],
        FamilyTag::Two1 => {
            let (p, q) = (v[0], v[1]);
            vec![("p >= 2", p >= 2), ("q >= 2", q >= 2), ("gcd(p, q) = 1", gcd128(p, q) == 1)]
        }
        FamilyTag::Two2 => {
            let (p, q, r) = (v[0], v[1], v[2]);
            vec![
                ("p <= 1", p <= 1),
                ("r <= -pq-2", r <= -p * q - 2),
                ("r <= -2", r <= -2),
                ("r <= -q-1", r <= -q - 1),
                ("r <= q-pq-1", r <= q - p * q - 1),
                ("gcd(q, r) = 1", gcd128(q, r) == 1),
            ]
        }
        FamilyTag::Two3 => {
            let (p, q, r) = (v[0], v[1], v[2]);
            vec![
                ("p <= 0", p <= 0),
                ("1 <= q", 1 <= q),
                ("q <= -r-1", q <= -r - 1),
                ("gcd(q, r) = 1", gcd128(q, r) == 1),
            ]
        }
        FamilyTag::Three5 => {
            let (p, q, r, s, t) = (v[0], v[1], v[2], v[3], v[4]);
            let det45 = q * t - r * s;
            vec![
                ("p <= 1", p <= 1),
                ("r <= -1", r <= -1),
                ("r <= -pq-2", r <= -p * q - 2),
                ("r <= q-pq-1", r <= q - p * q - 1),
                ("r <= -pq+qt-rs+ps+t-1", r <= -p * q + det45 + p * s + t - 1),
                ("t <= -2", t <= -2),
                ("t <= -s-1", t <= -s - 1),
                ("t <= qt-rs+r-1", t <= det45 + r - 1),
                ("2 <= qt-rs", 2 <= det45),
                ("gcd(q, r) = 1", gcd128(q, r) == 1),
                ("gcd(s, t) = 1", gcd128(s, t) == 1),
            ]
        }
    };
    checks.into_iter().find(|(_, ok)| !ok).map(|(name, _)| name.to_string())
}

/// The full constraint system of the family, including gcd conditions.
pub fn check_params(params: &FamilyParams) -> bool {
    violation(params).is_none()
}

fn overflow(tag: FamilyTag) -> Error {
    Error::InvalidParams { family: tag.name().into(), constraint: "coordinates fit in i64".into() }
}

/// The family's vertex list in counterclockwise order, without checks.
fn template(params: &FamilyParams) -> Result<Vec<Ray>> {
    let tag = params.family;
    let v = params.values();
    let ov = || overflow(tag);
    let r = Ray::new;
    Ok(match tag {
        FamilyTag::Dais1 => vec![r(1, -1), r(v[0], 1), r(-1, 0)],
        FamilyTag::Dais2 => {
            vec![r(1, -1), r(v[0], 1), r(v[0].checked_sub(1).ok_or_else(ov)?, 1), r(-1, 0)]
        }
        FamilyTag::Dais3 => vec![
            r(1, -1),
            r(v[0], 1),
            r(v[0].checked_sub(1).ok_or_else(ov)?, 1),
            r(-1, 0),
            r(0, -1),
        ],
        FamilyTag::Two1 => vec![
            r(1, 0),
            r(0, 1),
            r(v[0].checked_neg().ok_or_else(ov)?, v[1].checked_neg().ok_or_else(ov)?),
        ],
        FamilyTag::Two2 => vec![r(1, 0), r(0, 1), r(-1, v[0]), r(v[1], v[2])],
        FamilyTag::Two3 => vec![
            r(1, 0),
            r(0, 1),
            r(-1, v[0].checked_add(1).ok_or_else(ov)?),
            r(-1, v[0]),
            r(v[1], v[2]),
        ],
        FamilyTag::Three5 => vec![r(1, 0), r(0, 1), r(-1, v[0]), r(v[1], v[2]), r(v[3], v[4])],
    })
}

/// Builds the family polygon after checking the constraints.
///
/// Beyond validation, the result is confirmed to be log del Pezzo with the
/// family's singular count; a failure there would be a counterexample to the
/// classification and is reported as [`Error::Precondition`].
pub fn generate(params: &FamilyParams) -> Result<FamilyInstance> {
    if let Some(constraint) = violation(params) {
        return Err(Error::InvalidParams { family: params.family.name().into(), constraint });
    }
    let polygon = LdpPolygon::new(template(params)?)?;
    let report = analyze(polygon.fan())?;
    if !report.is_log_del_pezzo || report.singular_count != params.family.singular_count() {
        return Err(Error::Precondition(format!(
            "{params} produced {} singular points (log del Pezzo: {})",
            report.singular_count, report.is_log_del_pezzo
        )));
    }
    Ok(FamilyInstance { params: params.clone(), polygon })
}

/// Reads off parameters from the image of the polygon placed so that the
/// family's anchor edge comes first.
fn extract(tag: FamilyTag, rest: &[Ray]) -> Option<Vec<i64>> {
    Some(match tag {
        FamilyTag::Dais1 | FamilyTag::Dais2 | FamilyTag::Dais3 => vec![rest[0].x],
        FamilyTag::Two1 => vec![rest[0].x.checked_neg()?, rest[0].y.checked_neg()?],
        FamilyTag::Two2 => vec![rest[0].y, rest[1].x, rest[1].y],
        FamilyTag::Two3 => vec![rest[1].y, rest[2].x, rest[2].y],
        FamilyTag::Three5 => vec![rest[0].y, rest[1].x, rest[1].y, rest[2].x, rest[2].y],
    })
}

/// Every family parameter tuple whose polygon is equivalent to `q`, with no
/// bound on the parameters, sorted by tag and then lexicographically.
///
/// An equivalence to a family polygon sends some edge of `q` (in one of the
/// two directions) onto the family's anchor edge; the anchor is a lattice
/// basis, so that edge determines the map and the parameters outright.
pub fn family_matches(q: &Polygon) -> Result<Vec<FamilyParams>> {
    let report = analyze(q.fan())?;
    let vs = q.vertices();
    let d = vs.len();
    let mut found = Vec::new();
    for tag in FamilyTag::ALL {
        if tag.vertex_count() != d || tag.singular_count() != report.singular_count {
            continue;
        }
        let (a0, a1) = tag.anchor();
        for k in 0..d {
            for forward in [true, false] {
                let at = |j: usize| if forward { vs[(k + j) % d] } else { vs[(k + d - j) % d] };
                if det2(at(0), at(1))?.abs() != 1 {
                    continue;
                }
                let Some(m) = solve_map(at(0), at(1), a0, a1)? else { continue };
                let image = (0..d).map(|j| apply_map(&m, at(j))).collect::<Result<Vec<_>>>()?;
                let Some(values) = extract(tag, &image[2..]) else { continue };
                let params = FamilyParams::new(tag, &values)?;
                if !check_params(&params) {
                    continue;
                }
                let Ok(tpl) = template(&params) else { continue };
                let off = tag.anchor_offset();
                if (0..d).all(|j| tpl[(off + j) % d] == image[j]) && !found.contains(&params) {
                    found.push(params);
                }
            }
        }
    }
    found.sort_by(|a, b| (a.family, a.values()).cmp(&(b.family, b.values())));
    Ok(found)
}

/// The lexicographically least family match with every `|parameter|` at most
/// `twice_area(q)`.
///
/// Families are only tried when their vertex count and singular count agree
/// with `q`, so polygons with no singular point or more than three always
/// give `None`.
pub fn identify(q: &Polygon) -> Result<Option<FamilyParams>> {
    let bound = twice_area(q)?;
    let found = family_matches(q)?
        .into_iter()
        .find(|params| params.values().iter().all(|v| v.unsigned_abs() <= bound.unsigned_abs()));
    if let Some(params) = &found {
        let instance = generate(params)?;
        debug_assert!(are_equivalent(&instance.polygon, q)?.is_some());
    }
    Ok(found)
}

/// Which case of the three-singular-point classification applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThreeCase {
    /// `d ≤ 4`.
    PicardLeTwo,
    /// `d = 5` and a member of [`FamilyTag::Three5`].
    FamilyD5,
    /// `d = 6` and the blow-up of a three-singular `d = 5` surface at a smooth
    /// fixed point.
    BlowupOfPicard3,
    /// No case applies.
    None,
}

impl fmt::Display for ThreeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThreeCase::PicardLeTwo => "picard_le_two",
            ThreeCase::FamilyD5 => "family_d5",
            ThreeCase::BlowupOfPicard3 => "blowup_of_picard3",
            ThreeCase::None => "none",
        })
    }
}

/// Sorts a log del Pezzo polygon with exactly three singular points into its
/// classification case.
pub fn classify_three(q: &Polygon) -> Result<ThreeCase> {
    let report = analyze(q.fan())?;
    if !report.is_log_del_pezzo || report.singular_count != 3 {
        return Err(Error::Precondition(format!(
            "expected a log del Pezzo polygon with 3 singular points, got {} (log del Pezzo: {})",
            report.singular_count, report.is_log_del_pezzo
        )));
    }
    Ok(match report.d {
        d if d <= 4 => ThreeCase::PicardLeTwo,
        5 => match identify(q)? {
            Some(p) if p.family == FamilyTag::Three5 => ThreeCase::FamilyD5,
            _ => ThreeCase::None,
        },
        6 => {
            let mut case = ThreeCase::None;
            for i in blow_down_candidates(q.fan()) {
                let smaller = analyze(&blow_down(q.fan(), i)?)?;
                // the smaller surface is not assumed to be log del Pezzo
                if smaller.is_log_del_pezzo && smaller.d == 5 && smaller.singular_count == 3 {
                    case = ThreeCase::BlowupOfPicard3;
                    break;
                }
            }
            case
        }
        _ => ThreeCase::None,
    })
}
