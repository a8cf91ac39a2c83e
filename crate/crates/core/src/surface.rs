//! Toric surface data read off a fan: singular cones, the `f` map, the log
//! del Pezzo criterion, anticanonical degrees, and blow-ups at smooth fixed
//! points.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::det2;
use crate::polygon::FanCycle;
use crate::scalar::{self, Scalar};

/// The cone `σ_i = cone(v_i, v_{i+1})` and its local index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeRecord<T> {
    /// 1-based.
    pub index: usize,
    pub det: T,
    pub singular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport<T: Clone + num_integer::Integer> {
    pub d: usize,
    pub picard_number: usize,
    pub cones: Vec<ConeRecord<T>>,
    /// `f(1), …, f(d)`.
    pub f_values: Vec<T>,
    /// `(−K · D_i)` as reduced fractions, serialized as `[numer, denom]`.
    pub anticanonical_degrees: Vec<Ratio<T>>,
    pub is_log_del_pezzo: bool,
    pub singular_count: usize,
}

impl<T: Scalar> SurfaceReport<T> {
    pub fn dets(&self) -> Vec<T> {
        self.cones.iter().map(|c| c.det).collect()
    }

    /// 1-based indices of the singular cones.
    pub fn singular_indices(&self) -> Vec<usize> {
        self.cones.iter().filter(|c| c.singular).map(|c| c.index).collect()
    }
}

fn check_index(d: usize, i: usize) -> Result<()> {
    if i == 0 || i > d {
        Err(Error::IndexOutOfRange { index: i, d })
    } else {
        Ok(())
    }
}

/// `f(i) = det(v_{i−1}, v_i) + det(v_i, v_{i+1}) + det(v_{i+1}, v_{i−1})`, 1-based.
pub fn f_value<T: Scalar>(fan: &FanCycle<T>, i: usize) -> Result<T> {
    check_index(fan.len(), i)?;
    let i = i as isize;
    let (prev, cur, next) = (fan.ray(i - 1), fan.ray(i), fan.ray(i + 1));
    scalar::add(scalar::add(det2(prev, cur)?, det2(cur, next)?)?, det2(next, prev)?)
}

/// Full singularity and positivity report for the surface `X(Δ)`.
pub fn analyze<T: Scalar>(fan: &FanCycle<T>) -> Result<SurfaceReport<T>> {
    let d = fan.len();
    let dets = fan.cone_dets();
    let cones: Vec<ConeRecord<T>> = dets
        .iter()
        .enumerate()
        .map(|(k, &det)| ConeRecord { index: k + 1, det, singular: det > T::one() })
        .collect();
    let f_values = (1..=d).map(|i| f_value(fan, i)).collect::<Result<Vec<_>>>()?;
    let anticanonical_degrees = (0..d)
        .map(|k| {
            let denom = scalar::mul(dets[(k + d - 1) % d], dets[k])?;
            Ok(Ratio::new(f_values[k], denom))
        })
        .collect::<Result<Vec<_>>>()?;
    let is_log_del_pezzo = f_values.iter().all(|&f| f >= T::one());
    let singular_count = cones.iter().filter(|c| c.singular).count();
    Ok(SurfaceReport {
        d,
        picard_number: d - 2,
        cones,
        f_values,
        anticanonical_degrees,
        is_log_del_pezzo,
        singular_count,
    })
}

/// Blow-up at the fixed point of the smooth cone `σ_i` (1-based): inserts
/// `v_i + v_{i+1}` between `v_i` and `v_{i+1}`.
pub fn blow_up<T: Scalar>(fan: &FanCycle<T>, i: usize) -> Result<FanCycle<T>> {
    let d = fan.len();
    check_index(d, i)?;
    if !fan.cone_dets()[i - 1].is_one() {
        return Err(Error::ConeSingular(i));
    }
    let new_ray = fan.ray(i as isize).checked_add(fan.ray(i as isize + 1))?;
    let mut rays = fan.rays().to_vec();
    let mut dets = fan.cone_dets().to_vec();
    rays.insert(i, new_ray);
    dets[i - 1] = T::one();
    dets.insert(i, T::one());
    Ok(FanCycle::from_parts(rays, dets))
}

/// 1-based indices `i` with `v_i = v_{i−1} + v_{i+1}`. Empty when `d < 4`.
///
/// Says nothing about whether the smaller surface is log del Pezzo.
pub fn blow_down_candidates<T: Scalar>(fan: &FanCycle<T>) -> Vec<usize> {
    if fan.len() < 4 {
        return Vec::new();
    }
    (1..=fan.len())
        .filter(|&i| {
            let i = i as isize;
            matches!(fan.ray(i - 1).checked_add(fan.ray(i + 1)), Ok(s) if s == fan.ray(i))
        })
        .collect()
}

/// Removes the ray `v_i` (1-based), which must be a blow-down candidate.
pub fn blow_down<T: Scalar>(fan: &FanCycle<T>, i: usize) -> Result<FanCycle<T>> {
    check_index(fan.len(), i)?;
    if !blow_down_candidates(fan).contains(&i) {
        return Err(Error::Precondition(format!(
            "v_{i} is not the sum of its neighbours"
        )));
    }
    let mut rays = fan.rays().to_vec();
    rays.remove(i - 1);
    FanCycle::new(rays)
}

/// True iff the singular cones form one cyclic arc. The all-singular and
/// all-smooth patterns count as contiguous.
pub fn nonsingular_arc_contiguous<T: Scalar>(report: &SurfaceReport<T>) -> bool {
    let flags: Vec<bool> = report.cones.iter().map(|c| c.singular).collect();
    cyclic_arc(&flags)
}

pub(crate) fn cyclic_arc(flags: &[bool]) -> bool {
    let n = flags.len();
    let switches = (0..n).filter(|&k| flags[k] != flags[(k + 1) % n]).count();
    switches <= 2
}
