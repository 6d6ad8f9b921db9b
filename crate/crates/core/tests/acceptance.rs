//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always print; exits nonzero if any criterion fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use sphereconvex::polytope::{generate, Kind, SphericalPolytope};
use sphereconvex::separation::{count_face_partition_pairs, CountMode};
use sphereconvex::verify::{self, Suite, VerifyConfig};

const SEED: u64 = 7;
const RESOLUTION: f64 = 0.02;
/// Every metric assertion carries 2 × resolution.
const METRIC_TOL: f64 = 2.0 * RESOLUTION;
const POLAR_BUDGET: Duration = Duration::from_secs(60);
const BOUNDS_BUDGET: Duration = Duration::from_secs(120);

struct Report {
    lines: Vec<(usize, bool, String)>,
}

impl Report {
    fn record(&mut self, n: usize, pass: bool, detail: String) {
        println!("criterion {n:>2}: {} {detail}", if pass { "PASS" } else { "FAIL" });
        self.lines.push((n, pass, detail));
    }
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_sphereconvex")).args(args).output().unwrap()
}

fn check<'a>(m: &'a Value, name: &str) -> &'a Value {
    m["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("no check {name}"))
}

fn summary(c: &Value) -> String {
    format!("{} {}/{}", c["name"].as_str().unwrap(), c["passed"], c["trials"])
}

/// All passed, exact (no tolerance), and at least `trials` trials.
fn exact(m: &Value, name: &str, trials: u64) -> (bool, String) {
    let c = check(m, name);
    let ok = c["pass"] == true
        && c["passed"] == c["trials"]
        && c["trials"].as_u64().unwrap() >= trials
        && c.get("tolerance").is_none();
    (ok, summary(c))
}

fn all_exact(m: &Value, names: &[&str], trials: u64) -> (bool, String) {
    let parts: Vec<(bool, String)> = names.iter().map(|n| exact(m, n, trials)).collect();
    (parts.iter().all(|p| p.0), parts.into_iter().map(|p| p.1).collect::<Vec<_>>().join(", "))
}

fn pinned(c: &Value) -> bool {
    c["tolerance"].as_f64() == Some(METRIC_TOL)
}

fn main() {
    let mut r = Report { lines: Vec::new() };
    let cfg = VerifyConfig { seed: SEED, trials: None, resolution: RESOLUTION };

    // Two full runs through the CLI; the second also feeds criterion 12.
    let dir = tempfile::tempdir().unwrap();
    let (m1, m2) = (dir.path().join("m1.json"), dir.path().join("m2.json"));
    let seed = SEED.to_string();
    let res = RESOLUTION.to_string();
    let runs: Vec<_> = [&m1, &m2]
        .iter()
        .map(|p| {
            cli(&["verify", "--suite", "all", "--seed", &seed, "--resolution", &res, "--manifest", p.to_str().unwrap()])
        })
        .collect();
    let text1 = std::fs::read_to_string(&m1).unwrap();
    let text2 = std::fs::read_to_string(&m2).unwrap();
    let m: Value = serde_json::from_str(&text1).unwrap();

    // 1
    let t = Instant::now();
    let polar = verify::run(Suite::Polar, &cfg).unwrap();
    let elapsed = t.elapsed();
    let (ok, detail) = all_exact(
        &m,
        &[
            "polar_of_hull",
            "polar_of_negation",
            "polar_of_union",
            "polar_reverses_inclusion",
            "polar_involution",
            "polar_polytope_round_trip",
        ],
        200,
    );
    r.record(1, ok && polar.pass && elapsed < POLAR_BUDGET, format!("{detail}; {elapsed:.1?} < {POLAR_BUDGET:?}"));

    // 2
    let (ok, detail) = all_exact(
        &m,
        &[
            "center_negation_identities",
            "center_inside_polars",
            "bodies_inside_center_polars",
            "center_equals_polar_iff_positive_case",
            "center_equals_polar_iff_negative_case",
            "center_polar_is_hull",
            "center_is_polar_of_hull",
            "center_direct_formula",
        ],
        100,
    );
    r.record(2, ok, detail);

    // 3
    let (ok, detail) = all_exact(&m, &["recognition_identity", "recognition_largest_pair"], 100);
    r.record(3, ok, detail);

    // 4: the square plus 50 random polytopes
    let (ok, detail) = exact(&m, "partition_pairs_share_center", 51);
    r.record(4, ok, detail);

    // 5
    r.record(5, criterion_5(), "octant 12, square 16/12, cube 52; brute force, vertex orders, 1 and 4 threads".into());

    // 6
    let t = Instant::now();
    let bounds = verify::run(Suite::Bounds, &cfg).unwrap();
    let elapsed = t.elapsed();
    let sandwich = bounds.check("face_pair_sandwich").unwrap();
    let (ok, detail) = exact(&m, "face_pair_sandwich", 1);
    r.record(6, ok && sandwich.pass && elapsed < BOUNDS_BUDGET, format!("{detail}; {elapsed:.1?} < {BOUNDS_BUDGET:?}"));

    // 7
    let (ok, detail) =
        all_exact(&m, &["lower_bound_equality_stacked", "upper_bound_equality_cyclic", "cyclic_4_8_neighbourly"], 1);
    let stacked = check(&m, "lower_bound_equality_stacked")["trials"] == 5;
    r.record(7, ok && stacked, detail);

    // 8
    r.record(8, criterion_8(), "bounds --d 2 --p 5,6,7: Phi_printed = 3, Phi_oracle = p, exit 0".into());

    // 9
    let iso = check(&m, "polar_isometry");
    let iso_ok = iso["passed"].as_u64().unwrap() >= 99 && iso["trials"] == 100 && pinned(iso);
    let ne_names = [
        "nonexpansive_random",
        "nonexpansive_equality_case",
        "nonexpansive_strict_equal_y",
        "nonexpansive_strict_equal_w",
    ];
    let ne: Vec<&Value> = ne_names.iter().map(|n| check(&m, n)).collect();
    let ne_ok = ne.iter().all(|c| c["pass"] == true && pinned(c)) && ne[0]["trials"] == 100;
    r.record(
        9,
        iso_ok && ne_ok,
        format!(
            "{}, worst residual {:.2e}; {}; tolerance {METRIC_TOL}",
            summary(iso),
            iso["worst"].as_f64().unwrap_or(f64::NAN),
            ne.iter().map(|c| summary(c)).collect::<Vec<_>>().join(", ")
        ),
    );

    // 10
    let (ok, detail) = all_exact(&m, &["classify_matches_sign_table"], 10_000);
    let (ok2, detail2) = all_exact(&m, &["density_hemispherical", "density_non_hemispherical"], 50);
    r.record(10, ok && ok2, format!("{detail}, {detail2}"));

    // 11
    let (ok, detail) = all_exact(&m, &["central_commutes", "inverse_central_commutes", "affine_commutes"], 100);
    let (ok2, detail2) = exact(&m, "stereographic_counterexample", 1);
    r.record(11, ok && ok2, format!("{detail}, {detail2}"));

    // 12
    let same_stdout = runs[0].stdout == runs[1].stdout && runs[0].status.code() == runs[1].status.code();
    r.record(
        12,
        text1 == text2 && same_stdout && !text1.is_empty(),
        format!("two runs, manifests {} bytes, identical: {}", text1.len(), text1 == text2),
    );

    let failed: Vec<usize> = r.lines.iter().filter(|l| !l.1).map(|l| l.0).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria pass", r.lines.len());
}

fn counts(p: &SphericalPolytope) -> (usize, usize) {
    (
        count_face_partition_pairs(p, CountMode::ByFace).unwrap(),
        count_face_partition_pairs(p, CountMode::ByPartition).unwrap(),
    )
}

fn criterion_5() -> bool {
    let cases = [
        (generate(Kind::Simplex, 2, 3, 0).unwrap(), Some(12), None),
        (generate(Kind::Cube, 2, 4, 0).unwrap(), Some(16), Some(12)),
        (generate(Kind::Cube, 3, 6, 0).unwrap(), Some(52), None),
    ];
    let pools: Vec<rayon::ThreadPool> =
        [1, 4].iter().map(|&n| rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap()).collect();
    let mut ok = true;
    for (p, by_face, by_partition) in &cases {
        let brute = (common::brute_count_by_face(p.vertices()), common::brute_count_by_partition(p.vertices()));
        ok &= by_face.is_none_or(|n| brute.0 == n) && by_partition.is_none_or(|n| brute.1 == n);
        for seed in 0..5 {
            let mut verts = p.vertices().to_vec();
            verts.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let shuffled = SphericalPolytope::s_conv(&verts).unwrap();
            for pool in &pools {
                ok &= pool.install(|| counts(&shuffled)) == brute;
            }
        }
    }
    ok
}

fn criterion_8() -> bool {
    [5, 6, 7].iter().all(|&p| {
        let o = cli(&["bounds", "--d", "2", "--p", &p.to_string()]);
        let text = String::from_utf8(o.stdout).unwrap();
        let header: Vec<&str> = text.lines().next().unwrap_or("").split(',').collect();
        let Some(row) = text.lines().find(|l| l.starts_with("0,")) else { return false };
        let row: Vec<&str> = row.split(',').collect();
        let col = |name: &str| header.iter().position(|h| *h == name).map(|i| row[i]);
        o.status.code() == Some(0) && col("Phi_printed") == Some("3") && col("Phi_oracle") == Some(&p.to_string())
    })
}
