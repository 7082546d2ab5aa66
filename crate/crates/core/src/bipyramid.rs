//! Face-centred bipyramids and their tetrahedral wedges.
//!
//! An n-bipyramid with ideal equatorial vertices is cut along the core line
//! joining its apexes into n congruent wedges. In a wedge the core edge
//! (between the apexes v3, v4) carries `A = 2π/n`, the equatorial edge
//! (between the ideal vertices v1, v2) carries `D`, and the four vertical
//! half-edges carry `B = C = E = F`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gentetra::{self, AngleVector, Vertex, CLASSIFICATION_TOL};

/// Volume of the regular ideal octahedron, `8 Λ(π/4)`.
pub const V_OCT: f64 = 3.663_862_376_708_876;
/// Volume of the regular ideal tetrahedron, `3 Λ(π/3)`.
pub const V_TET: f64 = 1.014_941_606_409_653_6;

/// One of the n wedges of a bipyramid with vertical dihedral angle `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WedgeSpec {
    pub n: u32,
    pub alpha: f64,
}

impl WedgeSpec {
    pub fn new(n: u32, alpha: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("bipyramid needs n >= 2, got {n}")));
        }
        if !(alpha > 0.0 && alpha < PI) {
            return Err(Error::domain(format!(
                "vertical dihedral angle {alpha} must lie in (0, pi)"
            )));
        }
        Ok(WedgeSpec { n, alpha })
    }

    /// `(2π/n, α/2, α/2, π - α, α/2, α/2)`.
    pub fn angles(&self) -> AngleVector {
        let half = self.alpha / 2.0;
        AngleVector::from_array_unchecked([
            2.0 * PI / self.n as f64,
            half,
            half,
            PI - self.alpha,
            half,
            half,
        ])
    }

    /// Angle sum at each apex, `2π/n + α`.
    pub fn apex_angle_sum(&self) -> f64 {
        2.0 * PI / self.n as f64 + self.alpha
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BipyramidReport {
    pub n: u32,
    /// Vertical dihedral angle; `B = C = E = F = alpha / 2` in each wedge.
    pub alpha: f64,
    pub apex: Vertex,
    pub wedge_volume: f64,
    pub total_volume: f64,
}

/// Maximal-volume wedge with two ideal vertices and core angle `a`:
/// `D = arccos((cos a - 1)/2)`, `B = C = E = F = (π - D)/2`.
pub fn maximal_wedge_angles(a: f64) -> Result<AngleVector> {
    if !(0.0..=PI).contains(&a) {
        return Err(Error::domain(format!("wedge angle {a} must lie in [0, pi]")));
    }
    let d = (0.5 * (a.cos() - 1.0)).clamp(-1.0, 1.0).acos();
    let side = (PI - d) / 2.0;
    Ok(AngleVector::from_array_unchecked([a, side, side, d, side, side]))
}

pub fn tiling_wedge_angles(n: u32, alpha: f64) -> Result<AngleVector> {
    Ok(WedgeSpec::new(n, alpha)?.angles())
}

fn report_from_wedge(n: u32, alpha: f64, apex_sum: f64, wedge: Option<AngleVector>) -> Result<BipyramidReport> {
    let wedge_volume = match wedge {
        // A bigon bipyramid is flat.
        Some(angles) if n > 2 => gentetra::volume(&angles)?,
        _ => 0.0,
    };
    Ok(BipyramidReport {
        n,
        alpha,
        apex: Vertex::classify(apex_sum, CLASSIFICATION_TOL),
        wedge_volume,
        total_volume: n as f64 * wedge_volume,
    })
}

/// Bipyramid over an n-gon with ideal equatorial vertices and vertical angle `alpha`.
pub fn bipyramid_volume(n: u32, alpha: f64) -> Result<BipyramidReport> {
    let wedge = WedgeSpec::new(n, alpha)?;
    report_from_wedge(n, alpha, wedge.apex_angle_sum(), Some(wedge.angles()))
}

/// Maximal doubly truncated n-bipyramid, built from n maximal wedges with `A = 2π/n`.
pub fn bn_trunc(n: u32) -> Result<BipyramidReport> {
    if n < 2 {
        return Err(Error::domain(format!("bipyramid needs n >= 2, got {n}")));
    }
    let a = 2.0 * PI / n as f64;
    let wedge = maximal_wedge_angles(a)?;
    let alpha = 2.0 * wedge.b;
    report_from_wedge(n, alpha, a + alpha, Some(wedge))
}

/// Regular ideal n-bipyramid.
pub fn bn_ideal(n: u32) -> Result<BipyramidReport> {
    if n < 3 {
        return Err(Error::domain(format!("ideal bipyramid needs n >= 3, got {n}")));
    }
    bipyramid_volume(n, (n - 2) as f64 * PI / n as f64)
}

/// n-bipyramid with every dihedral angle `π/2`. Its apexes are ultra-ideal
/// only for `n >= 5`; smaller n is accepted and shows up in `apex.kind`.
pub fn bn_square(n: u32) -> Result<BipyramidReport> {
    bipyramid_volume(n, PI / 2.0)
}

/// `vol(B□_{8g-4}) / (2g - 1)` for integer or half-integer `g >= 2`.
pub fn beta_g(g: f64) -> Result<f64> {
    let twice = 2.0 * g;
    if !g.is_finite() || twice.fract() != 0.0 || g < 2.0 {
        return Err(Error::domain(format!(
            "genus {g} must be an integer or half-integer >= 2"
        )));
    }
    let twice = twice as u32;
    let n = 4 * twice - 4;
    let divisor = (twice - 1) as f64;
    Ok(bn_square(n)?.total_volume / divisor)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    Sphere,
    ThickenedTorus,
    ThickenedSurface,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeBounds {
    pub octahedral_bound: f64,
    pub bipyramid_bound: f64,
}

/// Octahedral (per crossing) and bipyramid (per face) upper bounds on the
/// volume of a link with the given projection.
pub fn link_volume_upper_bound(
    face_sizes: &[u32],
    ambient: Ambient,
    crossings: u32,
) -> Result<VolumeBounds> {
    if crossings < 1 {
        return Err(Error::domain("a link projection needs at least one crossing"));
    }
    if let Some(&bad) = face_sizes.iter().find(|&&n| n < 2) {
        return Err(Error::domain(format!("face size {bad} is below 2")));
    }
    let per_crossing = match ambient {
        Ambient::Sphere | Ambient::ThickenedTorus => V_OCT,
        Ambient::ThickenedSurface => 2.0 * V_OCT,
    };
    let mut bipyramid_bound = 0.0;
    for &n in face_sizes {
        bipyramid_bound += match (ambient, n) {
            (_, 2) => 0.0,
            (Ambient::ThickenedSurface, n) => bn_trunc(n)?.total_volume,
            (_, n) => bn_ideal(n)?.total_volume,
        };
    }
    Ok(VolumeBounds {
        octahedral_bound: crossings as f64 * per_crossing,
        bipyramid_bound,
    })
}
