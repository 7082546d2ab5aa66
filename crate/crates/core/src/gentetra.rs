//! Generalized hyperbolic tetrahedra described by their six dihedral angles.
//!
//! Labels follow the Gram matrix convention: vertex `vᵢ` is opposite face `i`,
//! and the Gram entry `(i, j)` is `-cos` of the angle between faces `i` and `j`.
//! That fixes the edges as
//!
//! | angle | edge    | opposite |
//! |-------|---------|----------|
//! | A     | v3 v4   | D        |
//! | B     | v2 v4   | E        |
//! | C     | v1 v4   | F        |
//! | D     | v1 v2   | A        |
//! | E     | v1 v3   | B        |
//! | F     | v2 v3   | C        |
//!
//! so the vertex links are `v1: {C, D, E}`, `v2: {B, D, F}`, `v3: {A, E, F}`,
//! `v4: {A, B, C}`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::{dilog, lobachevsky};

/// Default tolerance for deciding whether a vertex is ideal.
pub const CLASSIFICATION_TOL: f64 = 1e-9;

/// Below this modulus the denominator of `z₁, z₂` is treated as zero.
pub const DENOMINATOR_TOL: f64 = 1e-12;

/// Default finite-difference step for the gradient checks.
pub const DEFAULT_FD_STEP: f64 = 1e-5;

/// Incident angle indices (into `[A, B, C, D, E, F]`) for each vertex.
pub const VERTEX_EDGES: [[usize; 3]; 4] = [[2, 3, 4], [1, 3, 5], [0, 4, 5], [0, 1, 2]];

/// Six dihedral angles `(A, B, C, D, E, F)`, opposite pairs `(A, D)`, `(B, E)`, `(C, F)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleVector {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

impl AngleVector {
    /// Builds a vector, rejecting angles outside `[0, π]`.
    pub fn new(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Result<Self> {
        Self::from_array([a, b, c, d, e, f])
    }

    pub fn from_array(angles: [f64; 6]) -> Result<Self> {
        const SLACK: f64 = 1e-12;
        for (label, &x) in ["A", "B", "C", "D", "E", "F"].iter().zip(angles.iter()) {
            if !x.is_finite() || !(-SLACK..=PI + SLACK).contains(&x) {
                return Err(Error::domain(format!(
                    "dihedral angle {label} = {x} is outside [0, pi]"
                )));
            }
        }
        Ok(Self::from_array_unchecked(angles.map(|x| x.clamp(0.0, PI))))
    }

    pub(crate) fn from_array_unchecked(angles: [f64; 6]) -> Self {
        let [a, b, c, d, e, f] = angles;
        AngleVector { a, b, c, d, e, f }
    }

    pub fn uniform(angle: f64) -> Result<Self> {
        Self::from_array([angle; 6])
    }

    pub fn to_array(self) -> [f64; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }
}

impl fmt::Display for AngleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            self.a, self.b, self.c, self.d, self.e, self.f
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Finite,
    Ideal,
    UltraIdeal,
}

impl VertexKind {
    /// Classifies a vertex from the sum of its incident dihedral angles.
    pub fn from_angle_sum(sum: f64, tol: f64) -> Self {
        if (sum - PI).abs() <= tol {
            VertexKind::Ideal
        } else if sum > PI {
            VertexKind::Finite
        } else {
            VertexKind::UltraIdeal
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VertexKind::Finite => "finite",
            VertexKind::Ideal => "ideal",
            VertexKind::UltraIdeal => "ultra-ideal",
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A classified vertex together with the angle sum that decided it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vertex {
    pub kind: VertexKind,
    pub angle_sum: f64,
}

impl Vertex {
    pub fn classify(angle_sum: f64, tol: f64) -> Self {
        Vertex {
            kind: VertexKind::from_angle_sum(angle_sum, tol),
            angle_sum,
        }
    }
}

pub type GramMatrix = [[f64; 4]; 4];

pub fn gram_matrix(delta: &AngleVector) -> GramMatrix {
    let (ca, cb, cc) = (-delta.a.cos(), -delta.b.cos(), -delta.c.cos());
    let (cd, ce, cf) = (-delta.d.cos(), -delta.e.cos(), -delta.f.cos());
    [
        [1.0, ca, cb, cf],
        [ca, 1.0, cc, ce],
        [cb, cc, 1.0, cd],
        [cf, ce, cd, 1.0],
    ]
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn minor(m: &GramMatrix, row: usize, col: usize) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    for (r, src_r) in (0..4).filter(|&r| r != row).enumerate() {
        for (c, src_c) in (0..4).filter(|&c| c != col).enumerate() {
            out[r][c] = m[src_r][src_c];
        }
    }
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(m: &GramMatrix) -> f64 {
    (0..4)
        .map(|c| {
            let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
            sign * m[0][c] * det3(minor(m, 0, c))
        })
        .sum()
}

/// Diagonal cofactor `(i, i)`: the Gram determinant of the three faces
/// meeting at vertex `vᵢ`. Positive for finite, zero for ideal and negative
/// for ultra-ideal vertices.
pub fn diagonal_cofactor(m: &GramMatrix, i: usize) -> f64 {
    det3(minor(m, i, i))
}

pub fn classify_vertices(delta: &AngleVector, tol: f64) -> [Vertex; 4] {
    let angles = delta.to_array();
    VERTEX_EDGES.map(|edges| Vertex::classify(edges.iter().map(|&k| angles[k]).sum(), tol))
}

/// Volume of a mildly truncated generalized tetrahedron.
///
/// Evaluates `½ Im(U(z₁) - U(z₂))` with `z₁,₂ = -2 (Σ sin·sin ∓ √det G) / den`
/// and `U` the eight-term dilogarithm combination. The square root is the
/// principal root of `det G` taken as a complex number, and the absolute
/// value is returned since swapping the roots only flips the sign.
pub fn volume(delta: &AngleVector) -> Result<f64> {
    let [ang_a, ang_b, ang_c, ang_d, ang_e, ang_f] = delta.to_array();
    let [a, b, c, d, e, f] = delta.to_array().map(|x| Complex64::from_polar(1.0, x));

    let det = determinant(&gram_matrix(delta));
    let root = Complex64::new(det, 0.0).sqrt();
    let sines = ang_a.sin() * ang_d.sin() + ang_b.sin() * ang_e.sin() + ang_c.sin() * ang_f.sin();
    let denominator =
        a * d + b * e + c * f + a * b * f + a * c * e + b * c * d + d * e * f + a * b * c * d * e * f;
    if !(denominator.re.is_finite() && denominator.im.is_finite()) {
        return Err(Error::NonFinite("volume denominator"));
    }
    if denominator.norm() < DENOMINATOR_TOL {
        return Err(Error::Degenerate(format!(
            "denominator |{denominator}| vanishes for angles {delta}"
        )));
    }
    let z1 = -2.0 * (sines - root) / denominator;
    let z2 = -2.0 * (sines + root) / denominator;

    let abde = a * b * d * e;
    let acdf = a * c * d * f;
    let bcef = b * c * e * f;
    let abc = a * b * c;
    let aef = a * e * f;
    let bdf = b * d * f;
    let cde = c * d * e;
    let u = |z: Complex64| -> Result<Complex64> {
        let positive = dilog(z)? + dilog(abde * z)? + dilog(acdf * z)? + dilog(bcef * z)?;
        let negative = dilog(-abc * z)? + dilog(-aef * z)? + dilog(-bdf * z)? + dilog(-cde * z)?;
        Ok(0.5 * (positive - negative))
    };
    let vol = (0.5 * (u(z1)? - u(z2)?).im).abs();
    if vol.is_finite() {
        Ok(vol)
    } else {
        Err(Error::NonFinite("volume"))
    }
}

/// `Λ(θ₁) + Λ(θ₂) + Λ(θ₃)`: volume of the ideal tetrahedron whose opposite
/// edge pairs carry the angles `θᵢ`.
pub fn ideal_volume_oracle(theta1: f64, theta2: f64, theta3: f64) -> Result<f64> {
    let sum = theta1 + theta2 + theta3;
    if !(theta1 > 0.0 && theta2 > 0.0 && theta3 > 0.0) || (sum - PI).abs() > 1e-9 {
        return Err(Error::domain(format!(
            "ideal tetrahedron angles ({theta1}, {theta2}, {theta3}) must be positive and sum to pi"
        )));
    }
    Ok(lobachevsky(theta1)? + lobachevsky(theta2)? + lobachevsky(theta3)?)
}

/// Norm of the central-difference gradient of volume on the manifold
/// `{B + F + D = π, C + E + D = π}` with `A` fixed, parametrised by
/// `(B, C, D)`. `delta` should lie on that manifold.
pub fn constrained_gradient_norm(delta: &AngleVector, h: f64) -> Result<f64> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::domain(format!("finite-difference step {h} must be positive")));
    }
    let at = |b: f64, c: f64, d: f64| -> Result<f64> {
        let angles = [delta.a, b, c, d, PI - d - c, PI - d - b];
        volume(&AngleVector::from_array_unchecked(angles))
    };
    let (b, c, d) = (delta.b, delta.c, delta.d);
    let gb = (at(b + h, c, d)? - at(b - h, c, d)?) / (2.0 * h);
    let gc = (at(b, c + h, d)? - at(b, c - h, d)?) / (2.0 * h);
    let gd = (at(b, c, d + h)? - at(b, c, d - h)?) / (2.0 * h);
    Ok((gb * gb + gc * gc + gd * gd).sqrt())
}

/// Gradient norm at the maximal wedge with `A = a`; vanishes at a true
/// constrained maximum.
pub fn criticality_residual(a: f64, h: f64) -> Result<f64> {
    if !(0.0..PI).contains(&a) {
        return Err(Error::domain(format!("criticality angle {a} must lie in [0, pi)")));
    }
    let wedge = crate::bipyramid::maximal_wedge_angles(a)?;
    constrained_gradient_norm(&wedge, h)
}

/// Central-difference partial derivatives of volume in each of the six angles.
pub fn volume_partials(delta: &AngleVector, h: f64) -> Result<[f64; 6]> {
    let base = delta.to_array();
    let mut out = [0.0; 6];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut up = base;
        let mut down = base;
        up[k] += h;
        down[k] -= h;
        let vu = volume(&AngleVector::from_array_unchecked(up))?;
        let vd = volume(&AngleVector::from_array_unchecked(down))?;
        *slot = (vu - vd) / (2.0 * h);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    const V_TET: f64 = 1.014_941_606_409_653_6;
    const V_OCT: f64 = 3.663_862_376_708_876;

    fn av(x: [f64; 6]) -> AngleVector {
        AngleVector::from_array(x).unwrap()
    }

    #[test]
    fn gram_examples() {
        let g = gram_matrix(&AngleVector::uniform(PI / 2.0).unwrap());
        for (i, row) in g.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_abs_diff_eq!(x, if i == j { 1.0 } else { 0.0 }, epsilon = 1e-15);
            }
        }
        assert_abs_diff_eq!(determinant(&g), 1.0, epsilon = 1e-15);

        let g = gram_matrix(&AngleVector::uniform(PI / 3.0).unwrap());
        assert_abs_diff_eq!(g[0][1], -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(determinant(&g), -27.0 / 16.0, epsilon = 1e-14);

        let g = gram_matrix(&AngleVector::uniform(0.0).unwrap());
        assert_eq!(g[2][3], -1.0);
        assert_eq!(g[1][1], 1.0);
    }

    #[test]
    fn rejects_out_of_range_angles() {
        assert!(AngleVector::new(-0.1, 0.0, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(AngleVector::new(0.0, 4.0, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(AngleVector::new(0.0, f64::NAN, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(AngleVector::new(PI, PI, PI, PI, PI, PI).is_ok());
    }

    #[test]
    fn classification_examples() {
        let kinds = |x| classify_vertices(&av(x), CLASSIFICATION_TOL).map(|v| v.kind);
        use VertexKind::*;
        assert_eq!(kinds([PI / 3.0; 6]), [Ideal; 4]);
        let q = PI / 4.0;
        assert_eq!(kinds([PI / 2.0, q, q, PI / 2.0, q, q]), [Ideal; 4]);
        assert_eq!(
            kinds([0.0, q, q, PI / 2.0, q, q]),
            [Ideal, Ideal, UltraIdeal, UltraIdeal]
        );
        assert_eq!(kinds([PI / 2.0; 6]), [Finite; 4]);
    }

    #[test]
    fn classification_agrees_with_gram_cofactors() {
        // Sign of each diagonal cofactor must match the angle-sum rule.
        let samples = [
            [0.3, 0.9, 1.1, 1.7, 0.5, 0.8],
            [1.2, 0.4, 0.7, 0.6, 1.9, 1.3],
            [2.0, 1.0, 1.2, 1.4, 0.9, 0.3],
            [0.1, 0.2, 0.3, 0.4, 0.5, 0.6],
            [1.5, 1.4, 1.3, 1.2, 1.1, 1.0],
        ];
        for x in samples {
            let delta = av(x);
            let g = gram_matrix(&delta);
            for (i, v) in classify_vertices(&delta, CLASSIFICATION_TOL).iter().enumerate() {
                let cof = diagonal_cofactor(&g, i);
                let expected = match v.kind {
                    VertexKind::Finite => cof > 0.0,
                    VertexKind::UltraIdeal => cof < 0.0,
                    VertexKind::Ideal => cof.abs() < 1e-9,
                };
                assert!(expected, "{x:?} vertex {i}: {:?} vs cofactor {cof}", v.kind);
            }
        }
    }

    #[test]
    fn named_volumes() {
        assert_abs_diff_eq!(volume(&av([PI / 3.0; 6])).unwrap(), V_TET, epsilon = 1e-12);
        let q = PI / 4.0;
        assert_abs_diff_eq!(
            volume(&av([0.0, q, q, PI / 2.0, q, q])).unwrap(),
            V_OCT / 2.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            volume(&av([PI / 2.0, q, q, PI / 2.0, q, q])).unwrap(),
            V_OCT / 4.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn degenerate_denominator() {
        let err = volume(&AngleVector::uniform(PI).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Degenerate(_)), "{err}");
    }

    #[test]
    fn oracle_examples() {
        assert_abs_diff_eq!(
            ideal_volume_oracle(PI / 3.0, PI / 3.0, PI / 3.0).unwrap(),
            V_TET,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            ideal_volume_oracle(PI / 2.0, PI / 4.0, PI / 4.0).unwrap(),
            V_OCT / 4.0,
            epsilon = 1e-14
        );
        let expected = -lobachevsky(PI / 3.0).unwrap() + 2.0 * lobachevsky(PI / 6.0).unwrap();
        let got = ideal_volume_oracle(2.0 * PI / 3.0, PI / 6.0, PI / 6.0).unwrap();
        assert_abs_diff_eq!(got, expected, epsilon = 1e-14);
        assert_abs_diff_eq!(got, 0.676_627_737_606_435_8, epsilon = 1e-12);
        assert!(ideal_volume_oracle(1.0, 1.0, 1.0).is_err());
        assert!(ideal_volume_oracle(0.0, PI / 2.0, PI / 2.0).is_err());
    }

    #[test]
    fn volume_matches_oracle_on_ideal_simplex() {
        for i in 1..12 {
            for j in 1..(12 - i) {
                let t1 = PI * i as f64 / 12.0;
                let t2 = PI * j as f64 / 12.0;
                let t3 = PI - t1 - t2;
                let v = volume(&av([t1, t2, t3, t1, t2, t3])).unwrap();
                let o = ideal_volume_oracle(t1, t2, t3).unwrap();
                assert_abs_diff_eq!(v, o, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn criticality() {
        for a in [0.0, PI / 2.0] {
            let r = criticality_residual(a, DEFAULT_FD_STEP).unwrap();
            assert!(r <= 1e-4, "a = {a}: residual {r}");
        }
        let q = PI / 4.0;
        let off = av([2.0 * PI / 3.0, q, q, PI / 2.0, q, q]);
        let r = constrained_gradient_norm(&off, DEFAULT_FD_STEP).unwrap();
        assert!(r > 1e-2, "off-critical residual {r}");
        assert!(criticality_residual(PI, DEFAULT_FD_STEP).is_err());
        assert!(criticality_residual(0.5, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn gram_symmetric_unit_diagonal(x in prop::array::uniform6(0.0..=PI)) {
            let g = gram_matrix(&av(x));
            for i in 0..4 {
                prop_assert_eq!(g[i][i], 1.0);
                for j in 0..4 {
                    prop_assert_eq!(g[i][j], g[j][i]);
                }
            }
        }

        #[test]
        fn classification_respects_label_swap(x in prop::array::uniform6(0.0..=PI)) {
            // v1 <-> v2 while exchanging (B, F) with (C, E).
            let [a, b, c, d, e, f] = x;
            let orig = classify_vertices(&av(x), CLASSIFICATION_TOL);
            let swapped = classify_vertices(&av([a, c, b, d, f, e]), CLASSIFICATION_TOL);
            prop_assert_eq!(orig[0].kind, swapped[1].kind);
            prop_assert_eq!(orig[1].kind, swapped[0].kind);
            prop_assert_eq!(orig[2].kind, swapped[2].kind);
            prop_assert_eq!(orig[3].kind, swapped[3].kind);
        }
    }
}
