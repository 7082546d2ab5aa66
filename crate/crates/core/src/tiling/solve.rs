//! Equilateral realization of a tiling by regular polygons.
//!
//! A regular n-gon with side `d` and interior angle `α` satisfies
//! `cos(π/n) = sin(α/2)·cosh(d/2)` in H², `sin(α/2)` in E² and
//! `sin(α/2)·cos(d/2)` in S². With `s = 1/cosh(d/2)`, `1` or `1/cos(d/2)`
//! all three read `α_n(s) = 2 arcsin(s cos(π/n))`, and the realization is
//! the root of `Σ α_n(s) = 2π` around a vertex.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use super::config::VertexConfig;
use super::spec::{GeometryClass, TilingSpec};
use crate::error::{Error, Result};

pub const DEFAULT_SOLVER_TOL: f64 = 1e-13;
pub const MAX_BISECTION_STEPS: usize = 200;
/// Allowed angle-sum residual for the second and later vertex classes.
pub const CLASS_AGREEMENT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PolygonAngleAssignment {
    pub geometry: GeometryClass,
    pub s: f64,
    /// Common edge length; 0 for Euclidean tilings.
    pub edge_length: f64,
    pub angles: BTreeMap<u32, f64>,
    /// `Σ α - 2π` at the first class.
    pub residual: f64,
    pub iterations: usize,
}

impl PolygonAngleAssignment {
    pub fn angle(&self, n: u32) -> Option<f64> {
        self.angles.get(&n).copied()
    }
}

/// Interior angle of a regular n-gon at solver parameter `s`.
pub fn polygon_angle(n: u32, s: f64) -> f64 {
    2.0 * (s * (PI / n as f64).cos()).clamp(-1.0, 1.0).asin()
}

/// `Σ α_n(s) - 2π` over one vertex.
pub fn angle_sum_residual(config: &VertexConfig, s: f64) -> f64 {
    config.sizes().iter().map(|&n| polygon_angle(n, s)).sum::<f64>() - 2.0 * PI
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectionResult {
    pub root: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Bisection for an increasing function with `f(lo) < 0 < f(hi)`.
pub fn bisect_increasing<F>(f: F, mut lo: f64, mut hi: f64, tol: f64, max_steps: usize) -> Result<BisectionResult>
where
    F: Fn(f64) -> f64,
{
    let (f_lo, f_hi) = (f(lo), f(hi));
    if !(f_lo.is_finite() && f_hi.is_finite()) {
        return Err(Error::NonFinite("bisection bracket"));
    }
    if f_lo > 0.0 || f_hi < 0.0 {
        return Err(Error::NoRealization(format!(
            "no sign change on [{lo}, {hi}]: f = ({f_lo}, {f_hi})"
        )));
    }
    let mut best = if f_lo.abs() < f_hi.abs() { (lo, f_lo) } else { (hi, f_hi) };
    for step in 1..=max_steps {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let value = f(mid);
        if !value.is_finite() {
            return Err(Error::NonFinite("bisection midpoint"));
        }
        if value.abs() < best.1.abs() {
            best = (mid, value);
        }
        if value.abs() <= tol {
            return Ok(BisectionResult {
                root: mid,
                residual: value,
                iterations: step,
            });
        }
        if value < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence {
        iterations: max_steps,
        residual: best.1,
    })
}

pub fn solve_equilateral(spec: &TilingSpec, tol: f64) -> Result<PolygonAngleAssignment> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain(format!("solver tolerance {tol} must be positive")));
    }
    let geometry = spec.geometry()?;
    let sizes = spec.polygon_sizes();
    let first = &spec.classes()[0].config;

    let (s, residual, iterations) = match geometry {
        GeometryClass::Euclidean => (1.0, 0.0, 0),
        GeometryClass::Hyperbolic => {
            let r = bisect_increasing(|s| angle_sum_residual(first, s), 0.0, 1.0, tol, MAX_BISECTION_STEPS)?;
            (r.root, r.residual, r.iterations)
        }
        GeometryClass::Spherical => {
            let s_max = sizes
                .iter()
                .map(|&n| 1.0 / (PI / n as f64).cos())
                .fold(f64::INFINITY, f64::min);
            let r = bisect_increasing(|s| angle_sum_residual(first, s), 1.0, s_max, tol, MAX_BISECTION_STEPS)?;
            (r.root, r.residual, r.iterations)
        }
    };

    let angles: BTreeMap<u32, f64> = sizes
        .iter()
        .map(|&n| {
            let alpha = match geometry {
                GeometryClass::Euclidean => (n - 2) as f64 * PI / n as f64,
                _ => polygon_angle(n, s),
            };
            (n, alpha)
        })
        .collect();

    for class in &spec.classes()[1..] {
        let sum: f64 = class.config.sizes().iter().map(|n| angles[n]).sum();
        let off = sum - 2.0 * PI;
        if off.abs() > CLASS_AGREEMENT_TOL {
            return Err(Error::Inconsistent(format!(
                "classes not simultaneously equilateral: {} has angle sum residual {off:e}",
                class.config
            )));
        }
    }

    let edge_length = match geometry {
        GeometryClass::Euclidean => 0.0,
        GeometryClass::Hyperbolic => 2.0 * (1.0 / s).acosh(),
        GeometryClass::Spherical => 2.0 * (1.0 / s).clamp(-1.0, 1.0).acos(),
    };
    Ok(PolygonAngleAssignment {
        geometry,
        s,
        edge_length,
        angles,
        residual,
        iterations,
    })
}
