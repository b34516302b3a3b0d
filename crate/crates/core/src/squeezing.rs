//! Direction-resolved spin squeezing
//!
//! ```text
//! ξ²(n₁) = 2j (ΔJ_{n₁})² / (⟨J_{n₂}⟩² + ⟨J_{n₃}⟩²)
//! ```
//!
//! with `{n₁, n₂, n₃}` orthonormal and `2j` the number of spin-1/2
//! constituents. Values below one mark squeezing along `n₁`.

use std::fmt;

use serde::Serialize;

use crate::closedform::{cartesian_moments, MomentSet};
use crate::error::{Result, SpinError};
use crate::spinspace::{expectation, op_along, op_jx, op_jy, op_jz, variance, SpinState};
use crate::states::SscsParams;

/// Transverse mean-spin denominators below this are reported, not divided by.
pub const DEGENERACY_THRESHOLD: f64 = 1e-14;

const MEAN_SPIN_FLOOR: f64 = 1e-12;

/// A direction in three dimensions, normalized on construction.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct UnitVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl UnitVector {
    pub const X: UnitVector = UnitVector {
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    pub const Y: UnitVector = UnitVector {
        x: 0.0,
        y: 1.0,
        z: 0.0,
    };
    pub const Z: UnitVector = UnitVector {
        x: 0.0,
        y: 0.0,
        z: 1.0,
    };

    /// Returns `None` for a zero or non-finite vector.
    pub fn new(x: f64, y: f64, z: f64) -> Option<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        (norm.is_finite() && norm > 0.0).then(|| Self {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, other: &UnitVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    fn dot_array(&self, v: [f64; 3]) -> f64 {
        self.x * v[0] + self.y * v[1] + self.z * v[2]
    }

    /// Cross product; the result is normalized, which is exact when the
    /// inputs are orthogonal.
    pub fn cross(&self, other: &UnitVector) -> Option<UnitVector> {
        UnitVector::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }
}

/// Completes `n1` to a right-handed orthonormal frame `(n1, n2, n3)`.
///
/// `n2` is `n1 ×` the coordinate axis least aligned with `n1` (ties go to
/// x, then y, then z), normalized; `n3 = n1 × n2`.
pub fn complete_triad(n1: &UnitVector) -> (UnitVector, UnitVector) {
    let axes = [UnitVector::X, UnitVector::Y, UnitVector::Z];
    let mut best = axes[0];
    let mut best_dot = n1.dot(&best).abs();
    for axis in &axes[1..] {
        let d = n1.dot(axis).abs();
        if d < best_dot {
            best = *axis;
            best_dot = d;
        }
    }
    let n2 = n1
        .cross(&best)
        .expect("least-aligned axis is never parallel to a unit vector");
    let n3 = n1.cross(&n2).expect("n1 and n2 are orthonormal");
    (n2, n3)
}

/// A squeezing parameter that may diverge or be undefined.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum XiValue {
    Finite(f64),
    /// Vanishing transverse mean spin with nonzero fluctuations.
    Infinite,
    /// Both numerator and denominator vanish.
    Degenerate,
}

impl XiValue {
    fn from_parts(numerator: f64, denominator: f64) -> Self {
        if denominator >= DEGENERACY_THRESHOLD {
            XiValue::Finite(numerator / denominator)
        } else if numerator.abs() >= DEGENERACY_THRESHOLD {
            XiValue::Infinite
        } else {
            XiValue::Degenerate
        }
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            XiValue::Finite(v) => Some(*v),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, XiValue::Finite(_))
    }

    /// `1/ξ²`, zero for a divergent value, `None` when degenerate.
    pub fn inverse(&self) -> Option<f64> {
        match self {
            XiValue::Finite(v) => Some(v.recip()),
            XiValue::Infinite => Some(0.0),
            XiValue::Degenerate => None,
        }
    }
}

impl fmt::Display for XiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XiValue::Finite(v) => write!(f, "{v}"),
            XiValue::Infinite => f.write_str("inf"),
            XiValue::Degenerate => f.write_str("degenerate"),
        }
    }
}

impl Serialize for XiValue {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match self {
            XiValue::Finite(v) => serializer.serialize_f64(*v),
            other => serializer.serialize_str(&other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SqueezingReport {
    pub direction: UnitVector,
    pub xi2: XiValue,
    pub mean_spin: [f64; 3],
    pub degenerate: bool,
}

fn mean_spin(state: &SpinState) -> Result<[f64; 3]> {
    let space = state.space();
    Ok([
        expectation(state, &op_jx(space))?.re,
        expectation(state, &op_jy(space))?.re,
        expectation(state, &op_jz(space))?.re,
    ])
}

/// Squeezing along `n1` with transverse axes `n2`, `n3` supplied by the
/// caller. The frame is assumed orthonormal.
pub fn xi_squared_with_frame(
    state: &SpinState,
    n1: &UnitVector,
    n2: &UnitVector,
    n3: &UnitVector,
) -> Result<SqueezingReport> {
    let space = state.space();
    let spread = variance(state, &op_along(space, n1.as_array()))?;
    let mean = mean_spin(state)?;
    let denominator = n2.dot_array(mean).powi(2) + n3.dot_array(mean).powi(2);
    let numerator = f64::from(space.twice_j()) * spread;
    Ok(SqueezingReport {
        direction: *n1,
        xi2: XiValue::from_parts(numerator, denominator),
        mean_spin: mean,
        degenerate: denominator < DEGENERACY_THRESHOLD,
    })
}

/// Squeezing along `n1` evaluated on the state vector, frame from
/// [`complete_triad`].
pub fn xi_squared_oracle(state: &SpinState, n1: &UnitVector) -> Result<SqueezingReport> {
    let (n2, n3) = complete_triad(n1);
    xi_squared_with_frame(state, n1, &n2, &n3)
}

/// `ξ²` along x, y, z from a moment set, each axis using the other two mean
/// components as its transverse frame.
pub fn xi_from_moments(twice_j: u32, moments: &MomentSet) -> [XiValue; 3] {
    let mean = moments.mean_spin();
    let second = moments.second_moments();
    let two_j = f64::from(twice_j);
    std::array::from_fn(|axis| {
        let spread = second[axis] - mean[axis] * mean[axis];
        let transverse: f64 = (0..3)
            .filter(|&b| b != axis)
            .map(|b| mean[b] * mean[b])
            .sum();
        XiValue::from_parts(two_j * spread, transverse)
    })
}

/// Closed-form `(ξx², ξy², ξz²)` of a cat state.
///
/// For `θ ∈ {0, π}` the mean spin lies along z and this reduces to
/// `ξx² = 2j⟨Jx²⟩/⟨Jz⟩²`, `ξy² = 2j⟨Jy²⟩/⟨Jz⟩²`; `ξz²` is then always
/// degenerate.
pub fn xi_xyz_closedform(params: &SscsParams) -> Result<[XiValue; 3]> {
    let moments = cartesian_moments(params)?;
    let mut out = xi_from_moments(params.twice_j, &moments);
    let (_, s) = params.cos_sin();
    if s == 0.0 {
        out[2] = XiValue::Degenerate;
    }
    Ok(out)
}

/// Unit vector along `(⟨Jx⟩, ⟨Jy⟩, ⟨Jz⟩)`, `None` when the mean spin is
/// shorter than `1e-12`.
pub fn mean_spin_direction(state: &SpinState) -> Result<Option<UnitVector>> {
    let [x, y, z] = mean_spin(state)?;
    let norm = (x * x + y * y + z * z).sqrt();
    Ok(if norm >= MEAN_SPIN_FLOOR {
        UnitVector::new(x, y, z)
    } else {
        None
    })
}

/// Scan step and upper end used to bracket the critical point.
pub const CRITICAL_SCAN_STEP: f64 = 0.05;
pub const CRITICAL_SCAN_MAX: f64 = 10.0;
const CRITICAL_TOLERANCE: f64 = 1e-9;

fn odd_cat_xi_y2(twice_j: u32, eta: f64) -> Result<XiValue> {
    Ok(xi_xyz_closedform(&SscsParams::real(twice_j, eta, std::f64::consts::PI))?[1])
}

/// First `|η|` at which `ξy²` of the odd cat state drops below one.
///
/// Only half-integer `j` has such a point. The scan walks `|η|` in steps of
/// 0.05 up to 10, then bisects the first bracket.
pub fn find_critical_eta(twice_j: u32) -> Result<f64> {
    if twice_j.is_multiple_of(2) {
        return Err(SpinError::Precondition(format!(
            "critical point search needs half-integer j, got twice_j = {twice_j}"
        )));
    }
    let above = |v: &XiValue| match v {
        XiValue::Finite(x) => Some(*x >= 1.0),
        XiValue::Infinite => Some(true),
        XiValue::Degenerate => None,
    };
    let steps = (CRITICAL_SCAN_MAX / CRITICAL_SCAN_STEP).round() as u32;
    let mut previous: Option<(f64, bool)> = None;
    for k in 1..=steps {
        let eta = f64::from(k) * CRITICAL_SCAN_STEP;
        let Some(is_above) = above(&odd_cat_xi_y2(twice_j, eta)?) else {
            previous = None;
            continue;
        };
        if let Some((lo, true)) = previous {
            if !is_above {
                return bisect_crossing(twice_j, lo, eta);
            }
        }
        previous = Some((eta, is_above));
    }
    Err(SpinError::NoCrossing {
        scan_max: CRITICAL_SCAN_MAX,
    })
}

fn bisect_crossing(twice_j: u32, mut lo: f64, mut hi: f64) -> Result<f64> {
    while hi - lo > CRITICAL_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        match odd_cat_xi_y2(twice_j, mid)? {
            XiValue::Finite(v) if v < 1.0 => hi = mid,
            _ => lo = mid,
        }
    }
    Ok(0.5 * (lo + hi))
}
