use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use super::config::VertexConfig;
use crate::error::{Error, Result};

/// Largest denominator accepted when turning class weights into fractions.
const MAX_WEIGHT_DENOMINATOR: i64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeometryClass {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl GeometryClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GeometryClass::Spherical => "spherical",
            GeometryClass::Euclidean => "euclidean",
            GeometryClass::Hyperbolic => "hyperbolic",
        }
    }
}

impl fmt::Display for GeometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One transitivity class of vertices and the fraction of crossings it holds.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexClass {
    pub config: VertexConfig,
    pub weight: Ratio<i64>,
}

/// A k-uniform tiling given by its vertex classes.
#[derive(Debug, Clone, PartialEq)]
pub struct TilingSpec {
    pub name: String,
    classes: Vec<VertexClass>,
    faces: Option<BTreeMap<u32, u64>>,
}

/// Converts a nonnegative weight to a fraction with a bounded denominator.
pub fn weight_to_ratio(weight: f64) -> Result<Ratio<i64>> {
    if !weight.is_finite() || weight < 0.0 {
        return Err(Error::domain(format!("class weight {weight} must be a nonnegative number")));
    }
    let approx: Ratio<i64> = Ratio::approximate_float(weight)
        .ok_or_else(|| Error::domain(format!("class weight {weight} is out of range")))?;
    if *approx.denom() > MAX_WEIGHT_DENOMINATOR {
        return Err(Error::domain(format!(
            "class weight {weight} is not a fraction with denominator <= {MAX_WEIGHT_DENOMINATOR}"
        )));
    }
    Ok(approx)
}

impl TilingSpec {
    /// A 1-uniform tiling.
    pub fn single(config: VertexConfig) -> Self {
        TilingSpec {
            name: config.to_string(),
            classes: vec![VertexClass {
                config,
                weight: Ratio::from_integer(1),
            }],
            faces: None,
        }
    }

    /// Builds a spec from `(config, weight)` pairs, normalising the weights.
    ///
    /// All classes must share a valence, since a bigon matching only exists
    /// when every vertex is three-valent.
    pub fn new(name: impl Into<String>, classes: Vec<(VertexConfig, Ratio<i64>)>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::domain("a tiling needs at least one vertex class"));
        }
        let valence = classes[0].0.valence();
        if let Some((config, _)) = classes.iter().find(|(c, _)| c.valence() != valence) {
            return Err(Error::Inconsistent(format!(
                "class {config} has valence {} but the first class has valence {valence}",
                config.valence()
            )));
        }
        if let Some((config, w)) = classes.iter().find(|(_, w)| *w < Ratio::zero()) {
            return Err(Error::domain(format!("class {config} has negative weight {w}")));
        }
        let total: Ratio<i64> = classes.iter().map(|(_, w)| *w).sum();
        if total.is_zero() {
            return Err(Error::domain("class weights sum to zero"));
        }
        let classes = classes
            .into_iter()
            .map(|(config, weight)| VertexClass {
                config,
                weight: weight / total,
            })
            .collect();
        Ok(TilingSpec {
            name: name.into(),
            classes,
            faces: None,
        })
    }

    /// Attaches a face multiset (polygon size → count) and checks it against
    /// the vertex classes: integral vertex and edge counts, matching face
    /// incidences, and `V - E + F = 2` for spherical tilings.
    pub fn with_faces(mut self, faces: BTreeMap<u32, u64>) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::domain("face multiset is empty"));
        }
        if let Some(&bad) = faces.keys().find(|&&n| n < 3) {
            return Err(Error::domain(format!("face size {bad} is below 3")));
        }
        let valence = self.valence() as i64;
        let incidences: i64 = faces.iter().map(|(&n, &c)| n as i64 * c as i64).sum();
        if incidences % valence != 0 || incidences % 2 != 0 {
            return Err(Error::domain(format!(
                "face multiset has {incidences} corners, not divisible by valence {valence} and 2"
            )));
        }
        let vertices = Ratio::from_integer(incidences / valence);
        for (&n, &count) in &faces {
            let expected = vertices * self.incidences_per_vertex(n) / Ratio::from_integer(n as i64);
            if expected != Ratio::from_integer(count as i64) {
                return Err(Error::Inconsistent(format!(
                    "{count} faces of size {n} do not match the vertex classes (expected {expected})"
                )));
            }
        }
        let chi = euler_characteristic(valence as usize, &faces);
        if self.geometry()? == GeometryClass::Spherical && chi != Ratio::from_integer(2) {
            return Err(Error::Inconsistent(format!(
                "spherical face multiset has Euler characteristic {chi}, expected 2"
            )));
        }
        self.faces = Some(faces);
        Ok(self)
    }

    pub fn classes(&self) -> &[VertexClass] {
        &self.classes
    }

    pub fn faces(&self) -> Option<&BTreeMap<u32, u64>> {
        self.faces.as_ref()
    }

    pub fn valence(&self) -> usize {
        self.classes[0].config.valence()
    }

    pub fn has_bigons(&self) -> bool {
        self.classes[0].config.needs_bigon()
    }

    /// Distinct polygon sizes present, ascending.
    pub fn polygon_sizes(&self) -> Vec<u32> {
        let mut sizes: Vec<u32> = self
            .classes
            .iter()
            .flat_map(|c| c.config.sizes().iter().copied())
            .collect();
        sizes.sort_unstable();
        sizes.dedup();
        sizes
    }

    /// Weighted number of corners of n-gons at an average vertex.
    pub fn incidences_per_vertex(&self, n: u32) -> Ratio<i64> {
        self.classes
            .iter()
            .map(|c| {
                let count = c.config.sizes().iter().filter(|&&m| m == n).count() as i64;
                c.weight * Ratio::from_integer(count)
            })
            .sum()
    }

    pub fn euler_per_crossing(&self) -> Ratio<i64> {
        self.classes
            .iter()
            .map(|c| c.weight * c.config.euler_per_crossing())
            .sum()
    }

    /// Geometry of the equilateral realization; every class must agree.
    pub fn geometry(&self) -> Result<GeometryClass> {
        let classify = |c: &VertexClass| match c.config.euclidean_angle_sum().cmp(&Ratio::from_integer(2)) {
            Ordering::Greater => GeometryClass::Hyperbolic,
            Ordering::Equal => GeometryClass::Euclidean,
            Ordering::Less => GeometryClass::Spherical,
        };
        let first = classify(&self.classes[0]);
        for class in &self.classes[1..] {
            let other = classify(class);
            if other != first {
                return Err(Error::Inconsistent(format!(
                    "class {} is {first} but class {} is {other}",
                    self.classes[0].config, class.config
                )));
            }
        }
        Ok(first)
    }
}

pub fn classify_geometry(spec: &TilingSpec) -> Result<GeometryClass> {
    spec.geometry()
}

/// `V - E + F` for a closed surface tiled by `faces` with every vertex of
/// the given valence.
pub fn euler_characteristic(valence: usize, faces: &BTreeMap<u32, u64>) -> Ratio<i64> {
    let corners: i64 = faces.iter().map(|(&n, &c)| n as i64 * c as i64).sum();
    let face_count: i64 = faces.values().map(|&c| c as i64).sum();
    Ratio::new(corners, valence as i64) - Ratio::new(corners, 2) + Ratio::from_integer(face_count)
}

/// Weight as a float, for display.
pub fn weight_value(w: Ratio<i64>) -> f64 {
    w.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> TilingSpec {
        TilingSpec::single(text.parse().unwrap())
    }

    #[test]
    fn geometry_examples() {
        assert_eq!(spec("4.4.4.4").geometry().unwrap(), GeometryClass::Euclidean);
        assert_eq!(spec("3.3.3").geometry().unwrap(), GeometryClass::Spherical);
        assert_eq!(spec("5.5.5.5").geometry().unwrap(), GeometryClass::Hyperbolic);
        assert_eq!(spec("3.12.12").geometry().unwrap(), GeometryClass::Euclidean);
        assert_eq!(spec("3.4.6.4").geometry().unwrap(), GeometryClass::Euclidean);
    }

    #[test]
    fn mixed_classes() {
        let one = Ratio::from_integer(1);
        let mixed = TilingSpec::new(
            "mixed",
            vec![("3.4.6.4".parse().unwrap(), one), ("5.5.5.5".parse().unwrap(), one)],
        )
        .unwrap();
        assert!(matches!(mixed.geometry(), Err(Error::Inconsistent(_))));

        let valence = TilingSpec::new(
            "valence",
            vec![("6.6.6".parse().unwrap(), one), ("4.4.4.4".parse().unwrap(), one)],
        );
        assert!(matches!(valence, Err(Error::Inconsistent(_))));
    }

    #[test]
    fn weights_normalise() {
        let s = TilingSpec::new(
            "two",
            vec![
                ("3.3.3.3".parse().unwrap(), Ratio::from_integer(2)),
                ("3.3.4.4".parse().unwrap(), Ratio::from_integer(6)),
            ],
        )
        .unwrap();
        assert_eq!(s.classes()[0].weight, Ratio::new(1, 4));
        assert_eq!(weight_to_ratio(1.0 / 3.0).unwrap(), Ratio::new(1, 3));
        assert!(weight_to_ratio(-1.0).is_err());
        assert!(weight_to_ratio(f64::NAN).is_err());
        let zero = TilingSpec::new("z", vec![("6.6.6".parse().unwrap(), Ratio::zero())]);
        assert!(zero.is_err());
    }

    #[test]
    fn face_multiset_checks() {
        let cube = spec("4.4.4").with_faces(BTreeMap::from([(4, 6)])).unwrap();
        assert_eq!(cube.faces().unwrap()[&4], 6);
        assert!(spec("4.4.4").with_faces(BTreeMap::from([(4, 5)])).is_err());
        assert!(spec("3.8.8").with_faces(BTreeMap::from([(3, 8), (8, 5)])).is_err());
        assert!(spec("3.8.8").with_faces(BTreeMap::from([(3, 8), (8, 6)])).is_ok());
        // Torus quotient of the square tiling: consistent incidences, chi = 0.
        assert!(spec("4.4.4.4").with_faces(BTreeMap::from([(4, 9)])).is_ok());
    }

    #[test]
    fn euler_of_platonic_solids() {
        assert_eq!(euler_characteristic(3, &BTreeMap::from([(3, 4)])), Ratio::from_integer(2));
        assert_eq!(euler_characteristic(5, &BTreeMap::from([(3, 20)])), Ratio::from_integer(2));
    }
}
