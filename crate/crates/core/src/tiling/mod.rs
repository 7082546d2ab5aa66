//! Alternating links over k-uniform tilings: vertex configurations, the
//! equilateral realization, volume densities and the spherical catalog.

mod catalog;
mod config;
mod report;
mod solve;
mod spec;

pub use catalog::{
    find_solid, solid_link_volume, spherical_catalog, spherical_link_volume, CatalogEntry,
    SphericalLinkVolume,
};
pub use config::VertexConfig;
pub use report::{
    check_decomposition, density, density_with_tol, minimal_genus, CheckKind, CheckOutcome,
    DecompositionChecks, TilingReport, CHECK_TOL,
};
pub use solve::{
    angle_sum_residual, bisect_increasing, polygon_angle, solve_equilateral, BisectionResult,
    PolygonAngleAssignment, CLASS_AGREEMENT_TOL, DEFAULT_SOLVER_TOL, MAX_BISECTION_STEPS,
};
pub use spec::{
    classify_geometry, euler_characteristic, weight_to_ratio, weight_value, GeometryClass,
    TilingSpec, VertexClass,
};
