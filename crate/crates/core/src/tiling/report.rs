use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_integer::Integer;
use num_rational::Ratio;

use super::solve::{solve_equilateral, PolygonAngleAssignment, DEFAULT_SOLVER_TOL};
use super::spec::{GeometryClass, TilingSpec};
use crate::bipyramid::{bipyramid_volume, WedgeSpec};
use crate::error::{Error, Result};
use crate::gentetra::{VertexKind, CLASSIFICATION_TOL};

/// Tolerance for the gluing checks.
pub const CHECK_TOL: f64 = 1e-9;

/// Largest surface cover examined by [`minimal_genus`].
const MAX_GENUS_COVER: i64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// Vertical edge class: `Σ α = 2π`.
    VerticalSum,
    /// Equatorial edge class at a four-valent crossing: `Σ (π - α) = 2π`.
    EquatorialSum,
    /// Equatorial angles next to a bigon: `β₁ + β₂ + β₃ = π`.
    BigonRelation,
    /// Apexes finite / ideal / ultra-ideal for spherical / Euclidean / hyperbolic.
    ApexKind,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::VerticalSum => "vertical_sum",
            CheckKind::EquatorialSum => "equatorial_sum",
            CheckKind::BigonRelation => "bigon_relation",
            CheckKind::ApexKind => "apex_kind",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOutcome {
    pub class: usize,
    pub check: CheckKind,
    /// Size of the polygon concerned, for per-polygon checks.
    pub polygon: Option<u32>,
    pub residual: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct DecompositionChecks {
    pub outcomes: Vec<CheckOutcome>,
}

impl DecompositionChecks {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn passed(&self, check: CheckKind) -> bool {
        self.outcomes.iter().filter(|o| o.check == check).all(|o| o.passed)
    }

    pub fn max_residual(&self, check: CheckKind) -> f64 {
        self.outcomes
            .iter()
            .filter(|o| o.check == check)
            .map(|o| o.residual.abs())
            .fold(0.0, f64::max)
    }
}

fn expected_apex(geometry: GeometryClass) -> VertexKind {
    match geometry {
        GeometryClass::Spherical => VertexKind::Finite,
        GeometryClass::Euclidean => VertexKind::Ideal,
        GeometryClass::Hyperbolic => VertexKind::UltraIdeal,
    }
}

/// Gluing checks for the bipyramid decomposition of the tiling link.
/// Returns every outcome when all pass, otherwise the first failure.
pub fn check_decomposition(
    spec: &TilingSpec,
    assignment: &PolygonAngleAssignment,
) -> Result<DecompositionChecks> {
    let mut checks = DecompositionChecks::default();
    let expected = expected_apex(assignment.geometry);
    for (index, class) in spec.classes().iter().enumerate() {
        let mut alphas = Vec::with_capacity(class.config.valence());
        for &n in class.config.sizes() {
            let alpha = assignment.angle(n).ok_or_else(|| {
                Error::Inconsistent(format!("no angle assigned to {n}-gons of class {index}"))
            })?;
            alphas.push(alpha);

            let wedge = WedgeSpec::new(n, alpha)?;
            let apex = VertexKind::from_angle_sum(wedge.apex_angle_sum(), CLASSIFICATION_TOL);
            checks.outcomes.push(CheckOutcome {
                class: index,
                check: CheckKind::ApexKind,
                polygon: Some(n),
                residual: wedge.apex_angle_sum() - PI,
                passed: apex == expected,
            });
        }
        let vertical: f64 = alphas.iter().sum::<f64>() - 2.0 * PI;
        checks.outcomes.push(CheckOutcome {
            class: index,
            check: CheckKind::VerticalSum,
            polygon: None,
            residual: vertical,
            passed: vertical.abs() <= CHECK_TOL,
        });
        let equatorial: f64 = alphas.iter().map(|a| PI - a).sum();
        let (check, target) = if class.config.needs_bigon() {
            (CheckKind::BigonRelation, PI)
        } else {
            (CheckKind::EquatorialSum, 2.0 * PI)
        };
        let residual = equatorial - target;
        checks.outcomes.push(CheckOutcome {
            class: index,
            check,
            polygon: None,
            residual,
            passed: residual.abs() <= CHECK_TOL,
        });
    }
    match checks.outcomes.iter().find(|o| !o.passed) {
        Some(fail) => Err(Error::Decomposition {
            class: fail.class,
            check: fail.check.as_str(),
            residual: fail.residual,
        }),
        None => Ok(checks),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TilingReport {
    pub name: String,
    pub geometry: GeometryClass,
    pub assignment: PolygonAngleAssignment,
    /// Volume per crossing.
    pub density: f64,
    /// Volume of `B_n(α_n)` for each polygon size (bigons included as 0).
    pub per_face_volumes: BTreeMap<u32, f64>,
    pub euler_per_crossing: Ratio<i64>,
    /// `None` unless the tiling is hyperbolic.
    pub minimal_genus: Option<Ratio<i64>>,
    pub checks: DecompositionChecks,
    /// Present when the spec carries a face multiset.
    pub total_volume: Option<f64>,
    pub vol_over_2: Option<f64>,
}

pub fn density(spec: &TilingSpec) -> Result<TilingReport> {
    density_with_tol(spec, DEFAULT_SOLVER_TOL)
}

/// Volume density of the alternating link over the tiling. Each original
/// vertex is one crossing; three-valent tilings carry one zero-volume bigon
/// per crossing.
pub fn density_with_tol(spec: &TilingSpec, tol: f64) -> Result<TilingReport> {
    let assignment = solve_equilateral(spec, tol)?;
    let mut per_face_volumes = BTreeMap::new();
    for (&n, &alpha) in &assignment.angles {
        per_face_volumes.insert(n, bipyramid_volume(n, alpha)?.total_volume);
    }
    if spec.has_bigons() {
        per_face_volumes.insert(2, 0.0);
    }

    let density = spec
        .classes()
        .iter()
        .map(|class| {
            let per_vertex: f64 = class
                .config
                .sizes()
                .iter()
                .map(|&n| per_face_volumes[&n] / n as f64)
                .sum();
            super::spec::weight_value(class.weight) * per_vertex
        })
        .sum();

    let checks = check_decomposition(spec, &assignment)?;
    let minimal_genus = match assignment.geometry {
        GeometryClass::Hyperbolic => Some(minimal_genus(spec)?),
        _ => None,
    };
    let total_volume = spec
        .faces()
        .map(|faces| faces.iter().map(|(n, &count)| count as f64 * per_face_volumes[n]).sum::<f64>());

    Ok(TilingReport {
        name: spec.name.clone(),
        geometry: assignment.geometry,
        density,
        per_face_volumes,
        euler_per_crossing: spec.euler_per_crossing(),
        minimal_genus,
        checks,
        total_volume,
        vol_over_2: total_volume.map(|v| v / 2.0),
        assignment,
    })
}

/// Smallest orientable genus of a closed surface carrying a quotient of the
/// tiling: the least k with `k·χ_per_crossing` an even integer `<= -2` and
/// integral vertex, face and bigon counts.
pub fn minimal_genus(spec: &TilingSpec) -> Result<Ratio<i64>> {
    let geometry = spec.geometry()?;
    if geometry != GeometryClass::Hyperbolic {
        return Err(Error::domain(format!(
            "minimal genus is defined for hyperbolic tilings, {} is {geometry}",
            spec.name
        )));
    }
    let chi_per_crossing = spec.euler_per_crossing();

    // Every count below must be an integer multiple of k times a fraction;
    // the lcm of the denominators is the step between candidates.
    let mut counts: Vec<Ratio<i64>> = spec.classes().iter().map(|c| c.weight).collect();
    for n in spec.polygon_sizes() {
        counts.push(spec.incidences_per_vertex(n) / Ratio::from_integer(n as i64));
    }
    if spec.has_bigons() {
        counts.push(Ratio::new(1, 2));
    }
    counts.push(chi_per_crossing);
    let step = counts.iter().fold(1i64, |acc, r| acc.lcm(r.denom()));

    let mut k = step;
    while k <= MAX_GENUS_COVER {
        let chi = chi_per_crossing * Ratio::from_integer(k);
        debug_assert!(chi.is_integer());
        let chi = chi.to_integer();
        if chi <= -2 && chi % 2 == 0 {
            return Ok((Ratio::from_integer(2) - Ratio::from_integer(chi)) / Ratio::from_integer(2));
        }
        k += step;
    }
    Err(Error::NoConvergence {
        iterations: (MAX_GENUS_COVER / step) as usize,
        residual: f64::NAN,
    })
}
