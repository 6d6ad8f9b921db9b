mod common;

use common::*;
use sphereconvex::polytope::{generate, Kind, SphericalPolytope};
use sphereconvex::separation::{count_face_partition_pairs, CountMode};

fn sorted(v: &[sphereconvex::exact::Ray]) -> Vec<sphereconvex::exact::Ray> {
    let mut v = v.to_vec();
    v.sort();
    v
}

#[test]
fn hull_matches_brute_force() {
    for d in 1..=3 {
        for seed in 0..12 {
            let pts = chart_points(d, d + 2 + (seed as usize % 5), seed);
            let p = SphericalPolytope::s_conv(&pts).unwrap();
            assert_eq!(sorted(p.vertices()), brute_vertices(&pts), "vertices d={d} seed={seed}");
            if p.is_full_dimensional() {
                assert_eq!(sorted(p.facet_normals()), brute_facets(&pts), "facets d={d} seed={seed}");
            }
        }
    }
}

#[test]
fn face_lattice_matches_brute_force() {
    for d in 2..=3 {
        for seed in 0..6 {
            let p = SphericalPolytope::s_conv(&chart_points(d, d + 4, 100 + seed)).unwrap();
            if !p.is_full_dimensional() || p.vertices().len() > 9 {
                continue;
            }
            let mut ours: Vec<Vec<usize>> = p.face_lattice().iter().map(|(_, f)| f.clone()).collect();
            let mut brute = brute_faces(p.vertices());
            ours.sort();
            brute.sort();
            assert_eq!(ours, brute, "d={d} seed={seed}");
        }
    }
}

#[test]
fn counts_match_brute_force() {
    let mut polys = vec![
        generate(Kind::Simplex, 2, 3, 0).unwrap(),
        generate(Kind::Cube, 2, 4, 0).unwrap(),
        generate(Kind::Cube, 3, 6, 0).unwrap(),
        generate(Kind::Cyclic, 3, 6, 0).unwrap(),
    ];
    for seed in 0..4 {
        polys.push(SphericalPolytope::s_conv(&chart_points(3, 7, 200 + seed)).unwrap());
    }
    for p in &polys {
        let v = p.vertices();
        assert_eq!(count_face_partition_pairs(p, CountMode::ByFace).unwrap(), brute_count_by_face(v));
        assert_eq!(count_face_partition_pairs(p, CountMode::ByPartition).unwrap(), brute_count_by_partition(v));
    }
}

#[test]
fn derived_count_oracles() {
    let count = |k, d, p, mode| count_face_partition_pairs(&generate(k, d, p, 0).unwrap(), mode).unwrap();
    assert_eq!(count(Kind::Simplex, 2, 3, CountMode::ByFace), 12);
    assert_eq!(count(Kind::Cube, 2, 4, CountMode::ByFace), 16);
    assert_eq!(count(Kind::Cube, 2, 4, CountMode::ByPartition), 12);
    assert_eq!(count(Kind::Cube, 3, 6, CountMode::ByFace), 52);
}
