//! Spherical tilings from the Platonic and Archimedean solids.

use std::collections::BTreeMap;

use num_rational::Ratio;

use super::config::VertexConfig;
use super::report::density;
use super::spec::{euler_characteristic, GeometryClass, TilingSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub config: &'static [u32],
    /// `(polygon size, count)`.
    pub faces: &'static [(u32, u64)],
}

const CATALOG: [CatalogEntry; 15] = [
    CatalogEntry { name: "tetrahedron", config: &[3, 3, 3], faces: &[(3, 4)] },
    CatalogEntry { name: "octahedron", config: &[3, 3, 3, 3], faces: &[(3, 8)] },
    CatalogEntry { name: "cube", config: &[4, 4, 4], faces: &[(4, 6)] },
    CatalogEntry { name: "dodecahedron", config: &[5, 5, 5], faces: &[(5, 12)] },
    CatalogEntry { name: "truncated tetrahedron", config: &[3, 6, 6], faces: &[(3, 4), (6, 4)] },
    CatalogEntry { name: "cuboctahedron", config: &[3, 4, 3, 4], faces: &[(3, 8), (4, 6)] },
    CatalogEntry { name: "truncated cube", config: &[3, 8, 8], faces: &[(3, 8), (8, 6)] },
    CatalogEntry { name: "truncated octahedron", config: &[4, 6, 6], faces: &[(4, 6), (6, 8)] },
    CatalogEntry { name: "rhombicuboctahedron", config: &[3, 4, 4, 4], faces: &[(3, 8), (4, 18)] },
    CatalogEntry {
        name: "truncated cuboctahedron",
        config: &[4, 6, 8],
        faces: &[(4, 12), (6, 8), (8, 6)],
    },
    CatalogEntry { name: "icosidodecahedron", config: &[3, 5, 3, 5], faces: &[(3, 20), (5, 12)] },
    CatalogEntry { name: "truncated dodecahedron", config: &[3, 10, 10], faces: &[(3, 20), (10, 12)] },
    CatalogEntry { name: "truncated icosahedron", config: &[5, 6, 6], faces: &[(5, 12), (6, 20)] },
    CatalogEntry {
        name: "rhombicosidodecahedron",
        config: &[3, 4, 5, 4],
        faces: &[(3, 20), (4, 30), (5, 12)],
    },
    CatalogEntry {
        name: "truncated icosidodecahedron",
        config: &[4, 6, 10],
        faces: &[(4, 30), (6, 20), (10, 12)],
    },
];

impl CatalogEntry {
    pub fn vertex_config(&self) -> VertexConfig {
        VertexConfig::new(self.config.to_vec()).expect("catalog configurations are valid")
    }

    pub fn face_multiset(&self) -> BTreeMap<u32, u64> {
        self.faces.iter().copied().collect()
    }

    /// `V - E + F` computed exactly from the face multiset.
    pub fn euler_characteristic(&self) -> Ratio<i64> {
        euler_characteristic(self.config.len(), &self.face_multiset())
    }

    pub fn spec(&self) -> Result<TilingSpec> {
        let mut spec = TilingSpec::single(self.vertex_config()).with_faces(self.face_multiset())?;
        spec.name = self.name.to_string();
        Ok(spec)
    }
}

pub fn spherical_catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

fn normalise(name: &str) -> String {
    name.trim()
        .chars()
        .map(|c| if c == '_' || c == '-' { ' ' } else { c.to_ascii_lowercase() })
        .collect::<String>()
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
}

/// Case-insensitive lookup; `_` and `-` count as spaces.
pub fn find_solid(name: &str) -> Option<&'static CatalogEntry> {
    let key = normalise(name);
    CATALOG.iter().find(|e| e.name == key)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SphericalLinkVolume {
    pub name: String,
    pub config: VertexConfig,
    pub vol_l: f64,
    pub vol_over_2: f64,
    pub angles: BTreeMap<u32, f64>,
}

/// Volume of the alternating link over a spherical tiling: the sum of its
/// face bipyramids, which is twice the maximal ideal polyhedron.
pub fn spherical_link_volume(spec: &TilingSpec) -> Result<SphericalLinkVolume> {
    let geometry = spec.geometry()?;
    if geometry != GeometryClass::Spherical {
        return Err(Error::domain(format!("{} is {geometry}, not spherical", spec.name)));
    }
    if spec.faces().is_none() {
        return Err(Error::domain(format!("{} has no face multiset", spec.name)));
    }
    let report = density(spec)?;
    let vol_l = report.total_volume.expect("face multiset present");
    Ok(SphericalLinkVolume {
        name: spec.name.clone(),
        config: spec.classes()[0].config.clone(),
        vol_l,
        vol_over_2: vol_l / 2.0,
        angles: report.assignment.angles,
    })
}

pub fn solid_link_volume(name: &str) -> Result<SphericalLinkVolume> {
    let entry = find_solid(name).ok_or_else(|| Error::domain(format!("unknown solid `{name}`")))?;
    spherical_link_volume(&entry.spec()?)
}
