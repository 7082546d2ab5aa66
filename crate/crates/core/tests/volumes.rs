use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use hypvol_core::bipyramid::{beta_g, bn_ideal, bn_square, bn_trunc, tiling_wedge_angles, V_OCT, V_TET};
use hypvol_core::gentetra::{criticality_residual, ideal_volume_oracle, volume, volume_partials, AngleVector, DEFAULT_FD_STEP};
use hypvol_core::tiling::{density, minimal_genus, spherical_catalog, TilingSpec, VertexConfig};
use num_rational::Ratio;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn tiling(text: &str) -> TilingSpec {
    TilingSpec::single(text.parse().unwrap())
}

#[test]
fn ideal_grid_matches_oracle() {
    for i in 1..=10 {
        for j in 1..=5 {
            let t1 = PI * i as f64 / 12.0;
            let t2 = (PI - t1) * j as f64 / 6.0;
            let t3 = PI - t1 - t2;
            let delta = AngleVector::new(t1, t2, t3, t1, t2, t3).unwrap();
            assert_abs_diff_eq!(volume(&delta).unwrap(), ideal_volume_oracle(t1, t2, t3).unwrap(), epsilon = 1e-8);
        }
    }
}

#[test]
fn octahedral_wedge() {
    let wedge = AngleVector::new(0.0, PI / 4.0, PI / 4.0, PI / 2.0, PI / 4.0, PI / 4.0).unwrap();
    let v = volume(&wedge).unwrap();
    assert_abs_diff_eq!(v, V_OCT / 2.0, epsilon = 1e-6);
    assert_abs_diff_eq!(4.0 * v, 2.0 * V_OCT, epsilon = 1e-6);
}

#[test]
fn truncated_bipyramids_per_side() {
    let mut last = 0.0;
    for n in 3..=200 {
        let per = bn_trunc(n).unwrap().total_volume / n as f64;
        assert!(per > last, "n = {n}");
        last = per;
    }
    assert_abs_diff_eq!(bn_trunc(1000).unwrap().total_volume / 1000.0, 1.83192, epsilon = 1e-4);
}

#[test]
fn ideal_bipyramids() {
    let (best, value) = (3..=100)
        .map(|n| (n, bn_ideal(n).unwrap().total_volume / n as f64))
        .fold((0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
    assert_eq!(best, 6);
    assert_abs_diff_eq!(value, V_TET, epsilon = 1e-6);
    for n in (3..=10_000).step_by(37) {
        assert!(bn_ideal(n).unwrap().total_volume < 2.0 * PI * (n as f64 / 2.0).ln());
    }
}

#[test]
fn criticality_witness() {
    for a in [0.0, PI / 6.0, PI / 4.0, PI / 2.0, 2.0 * PI / 3.0] {
        assert!(criticality_residual(a, DEFAULT_FD_STEP).unwrap() <= 1e-4, "a = {a}");
    }
}

#[test]
fn volume_decreases_in_each_angle() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..20 {
        let n = rng.gen_range(3..12u32);
        let alpha = rng.gen_range(0.3..(PI - 0.3));
        let wedge = tiling_wedge_angles(n, alpha).unwrap();
        for (k, d) in volume_partials(&wedge, DEFAULT_FD_STEP).unwrap().iter().enumerate() {
            assert!(*d <= 1e-8, "angle {k} of n = {n}, alpha = {alpha}: {d}");
        }
    }
}

#[test]
fn square_tilings_match_square_bipyramids() {
    for n in 5..=20u32 {
        let config = VertexConfig::new(vec![n; 4]).unwrap();
        let d = density(&TilingSpec::single(config)).unwrap().density;
        assert_abs_diff_eq!(d, 4.0 * bn_square(n).unwrap().total_volume / n as f64, epsilon = 1e-12);
    }
    assert_abs_diff_eq!(beta_g(2.0).unwrap(), density(&tiling("12.12.12.12")).unwrap().density, epsilon = 1e-12);
}

#[test]
fn square_densities_increase_below_twice_octahedron() {
    let mut last = 0.0;
    for n in 5..=200u32 {
        let d = density(&TilingSpec::single(VertexConfig::new(vec![n; 4]).unwrap())).unwrap().density;
        assert!(d > last && d < 2.0 * V_OCT, "n = {n}");
        last = d;
    }
}

#[test]
fn euclidean_densities_at_most_octahedron() {
    for text in ["4.4.4.4", "6.6.6", "3.6.3.6", "4.8.8", "3.4.6.4", "3.12.12"] {
        let d = density(&tiling(text)).unwrap().density;
        if text == "4.4.4.4" {
            assert_abs_diff_eq!(d, V_OCT, epsilon = 1e-12);
        } else {
            assert!(d < V_OCT, "{text}: {d}");
        }
    }
}

#[test]
fn trihexagonal_from_lobachevsky() {
    // Both wedge types are ideal tetrahedra; two triangles and two hexagons meet at a vertex.
    let tri_wedge = ideal_volume_oracle(2.0 * PI / 3.0, PI / 6.0, PI / 6.0).unwrap();
    let hex_wedge = ideal_volume_oracle(PI / 3.0, PI / 3.0, PI / 3.0).unwrap();
    let tri = 2.0 * 3.0 * tri_wedge / 3.0;
    let hex = 2.0 * 6.0 * hex_wedge / 6.0;
    assert_abs_diff_eq!(density(&tiling("3.6.3.6")).unwrap().density, tri + hex, epsilon = 1e-9);
    assert_abs_diff_eq!(tri + hex, 10.0 * V_TET / 3.0, epsilon = 1e-12);
}

#[test]
fn catalog_euler_exact() {
    for entry in spherical_catalog() {
        assert_eq!(entry.euler_characteristic(), Ratio::from_integer(2), "{}", entry.name);
    }
}

proptest! {
    #[test]
    fn genus_is_rotation_invariant(sizes in prop::collection::vec(5u32..14, 4), k in 0usize..4) {
        let config = VertexConfig::new(sizes).unwrap();
        let g = minimal_genus(&TilingSpec::single(config.clone())).unwrap();
        prop_assert_eq!(g, minimal_genus(&TilingSpec::single(config.rotated(k))).unwrap());
    }

    #[test]
    fn label_swap_preserves_volume(n in 3u32..30, alpha in 0.4f64..2.7, jitter in prop::array::uniform4(-0.1f64..0.1)) {
        let mut w = tiling_wedge_angles(n, alpha).unwrap().to_array();
        for (slot, j) in [1, 2, 4, 5].into_iter().zip(jitter) {
            w[slot] += j;
        }
        // Relabelling that swaps B with C and E with F.
        let swapped = AngleVector::from_array([w[0], w[2], w[1], w[3], w[5], w[4]]).unwrap();
        let v = volume(&AngleVector::from_array(w).unwrap()).unwrap();
        prop_assert!((v - volume(&swapped).unwrap()).abs() < 1e-10);
    }
}
