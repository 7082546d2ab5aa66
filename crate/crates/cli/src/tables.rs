//! Reference tables: bipyramid volumes, the Archimedean solids and tiling
//! densities, each with its published values.

use std::f64::consts::PI;

use hypvol_core::bipyramid::bn_trunc;
use hypvol_core::tiling::{
    density_with_tol, find_solid, GeometryClass, SphericalLinkVolume, TilingSpec,
};
use hypvol_core::{Error, Result};
use num_rational::Ratio;

/// Largest difference from a published value still reported as agreeing.
pub const AGREEMENT_TOL: f64 = 5e-4;
/// Published angles are given to two decimals.
pub const ANGLE_AGREEMENT_TOL: f64 = 5e-3;

pub const TRUNCATED_BIPYRAMIDS: [(u32, f64); 11] = [
    (2, 0.0),
    (3, 2.6667),
    (4, 5.0747),
    (5, 7.3015),
    (6, 9.4158),
    (7, 11.4580),
    (8, 13.4520),
    (9, 15.4122),
    (10, 17.3481),
    (100, 183.0944),
    (1000, 1831.9213),
];

const TWO_THIRDS_PI: f64 = 2.0 * PI / 3.0;
const HALF_PI: f64 = PI / 2.0;

/// `(solid, angles in configuration order, vol / 2)`.
pub const SOLIDS: [(&str, &[f64], f64); 15] = [
    ("tetrahedron", &[TWO_THIRDS_PI; 3], 1.0149),
    ("octahedron", &[HALF_PI; 4], 3.6639),
    ("cube", &[TWO_THIRDS_PI; 3], 5.0747),
    ("dodecahedron", &[TWO_THIRDS_PI; 3], 20.5802),
    ("truncated tetrahedron", &[1.17, 2.56, 2.56], 8.2957),
    ("cuboctahedron", &[1.23, 1.91, 1.23, 1.91], 12.0461),
    ("truncated cube", &[1.10, 2.59, 2.59], 20.8916),
    ("truncated octahedron", &[1.68, 2.30, 2.30], 25.2238),
    ("rhombicuboctahedron", &[1.13, 1.72, 1.72, 1.72], 31.6987),
    ("truncated cuboctahedron", &[1.62, 2.18, 2.48], 57.2688),
    ("icosidodecahedron", &[1.11, 2.03, 1.11, 2.03], 39.8793),
    ("truncated dodecahedron", &[1.06, 2.61, 2.61], 61.5356),
    ("truncated icosahedron", &[1.94, 2.17, 2.17], 77.7139),
    ("rhombicosidodecahedron", &[1.08, 1.62, 1.96, 1.62], 92.7191),
    ("truncated icosidodecahedron", &[1.59, 2.13, 2.57], 155.4566),
];

/// `(configuration, density)` for Euclidean tilings.
pub const EUCLIDEAN_DENSITIES: [(&str, f64); 5] = [
    ("4.4.4.4", 3.6639),
    ("6.6.6", 3.0448),
    ("3.6.3.6", 3.0448),
    ("4.8.8", 2.8797),
    ("3.4.6.4", 3.5235),
];

/// `(configuration, minimal genus, density)` for hyperbolic tilings.
pub const HYPERBOLIC_DENSITIES: [(&str, i64, f64); 5] = [
    ("5.5.5.5", 2, 5.4535),
    ("6.6.6.6", 2, 6.1064),
    ("12.12.12.12", 2, 7.0470),
    ("4.8.4.8", 2, 5.4581),
    ("5.6.5.6", 3, 5.7962),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Agrees,
    Discrepant,
}

impl Status {
    pub fn judge(computed: f64, published: f64, tol: f64) -> Self {
        if (computed - published).abs() <= tol {
            Status::Agrees
        } else {
            Status::Discrepant
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Agrees => "agrees",
            Status::Discrepant => "discrepant",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BipyramidRow {
    pub n: u32,
    pub volume: f64,
    pub published: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolidRow {
    pub link: SphericalLinkVolume,
    /// Angles in configuration order.
    pub angles: Vec<f64>,
    pub published_angles: &'static [f64],
    pub published: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityRow {
    pub config: String,
    pub geometry: GeometryClass,
    pub density: f64,
    pub minimal_genus: Option<Ratio<i64>>,
    pub published: f64,
    pub published_genus: Option<i64>,
    pub status: Status,
}

pub fn truncated_bipyramid_rows() -> Result<Vec<BipyramidRow>> {
    TRUNCATED_BIPYRAMIDS
        .iter()
        .map(|&(n, published)| {
            Ok(BipyramidRow {
                n,
                volume: bn_trunc(n)?.total_volume,
                published,
            })
        })
        .collect()
}

pub fn solid_rows(tol: f64) -> Result<Vec<SolidRow>> {
    SOLIDS
        .iter()
        .map(|&(name, published_angles, published)| {
            let entry = find_solid(name).ok_or_else(|| Error::Domain(format!("unknown solid {name}")))?;
            let report = density_with_tol(&entry.spec()?, tol)?;
            let vol_l = report.total_volume.expect("catalog entries carry faces");
            let link = SphericalLinkVolume {
                name: name.to_string(),
                config: entry.vertex_config(),
                vol_l,
                vol_over_2: vol_l / 2.0,
                angles: report.assignment.angles,
            };
            let angles = entry.config.iter().map(|n| link.angles[n]).collect();
            Ok(SolidRow {
                link,
                angles,
                published_angles,
                published,
            })
        })
        .collect()
}

fn density_row(config: &str, published: f64, published_genus: Option<i64>, tol: f64) -> Result<DensityRow> {
    let spec = TilingSpec::single(config.parse()?);
    let report = density_with_tol(&spec, tol)?;
    Ok(DensityRow {
        config: config.to_string(),
        geometry: report.geometry,
        density: report.density,
        minimal_genus: report.minimal_genus,
        published,
        published_genus,
        status: Status::judge(report.density, published, AGREEMENT_TOL),
    })
}

pub fn euclidean_rows(tol: f64) -> Result<Vec<DensityRow>> {
    EUCLIDEAN_DENSITIES
        .iter()
        .map(|&(config, published)| density_row(config, published, None, tol))
        .collect()
}

pub fn hyperbolic_rows(tol: f64) -> Result<Vec<DensityRow>> {
    HYPERBOLIC_DENSITIES
        .iter()
        .map(|&(config, genus, published)| density_row(config, published, Some(genus), tol))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypvol_core::tiling::DEFAULT_SOLVER_TOL;

    #[test]
    fn bipyramid_rows_agree() {
        for row in truncated_bipyramid_rows().unwrap() {
            assert_eq!(Status::judge(row.volume, row.published, AGREEMENT_TOL), Status::Agrees, "n = {}", row.n);
        }
    }

    #[test]
    fn known_discrepancies_are_flagged() {
        let euclid = euclidean_rows(DEFAULT_SOLVER_TOL).unwrap();
        let flagged: Vec<&str> = euclid
            .iter()
            .filter(|r| r.status == Status::Discrepant)
            .map(|r| r.config.as_str())
            .collect();
        assert_eq!(flagged, ["3.6.3.6"]);
        let hyper = hyperbolic_rows(DEFAULT_SOLVER_TOL).unwrap();
        for row in &hyper {
            assert_eq!(row.minimal_genus, Some(Ratio::from_integer(row.published_genus.unwrap())));
        }
    }

    #[test]
    fn solid_rows_cover_catalog() {
        let rows = solid_rows(DEFAULT_SOLVER_TOL).unwrap();
        assert_eq!(rows.len(), 15);
        for row in rows {
            assert_eq!(row.angles.len(), row.published_angles.len());
        }
    }
}
