//! Seeded verification campaigns. Every check reports trial counts, the
//! failing trials and, for float checks, the worst observed value. Trials run
//! in parallel and are reassembled by index, so a manifest depends only on
//! the configuration.

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{check_face_pair_bounds, check_lbt, check_ubt, phi_capital_oracle, phi_capital_printed};
use crate::cone::ConvexCone;
use crate::error::{Error, Result};
use crate::exact::{cones_disjoint, Rational, Ray};
use crate::mapping::{check_conv_commutes, check_halfspace_preimage, stereographic_counterexample, MappingSpec, Point};
use crate::metrics::{
    ball_intersection_mismatch, ball_membership, cap_body, cap_point, check_isometry, check_nonexpansive, geodesic,
    hausdorff, hemisphere_ball_witness, BodyMesh, UnitPoint,
};
use crate::polytope::{central_project, central_unproject, generate, polar_of_points, Kind, SphericalPolytope};
use crate::separation::{
    classify_direction, count_face_partition_pairs, density_check, enumerate_partition_pairs, semi_separation_center,
    semi_separation_center_direct, CountMode, SemiCenter,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Polar,
    Separation,
    Metrics,
    Bounds,
    Mapping,
}

impl Suite {
    pub const PARTS: [Suite; 5] = [Suite::Polar, Suite::Separation, Suite::Metrics, Suite::Bounds, Suite::Mapping];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Polar => "polar",
            Suite::Separation => "separation",
            Suite::Metrics => "metrics",
            Suite::Bounds => "bounds",
            Suite::Mapping => "mapping",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        [Suite::All].into_iter().chain(Suite::PARTS).find(|k| k.name() == s).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "unknown suite {s:?}; expected all|polar|separation|metrics|bounds|mapping"
            ))
        })
    }
}

/// `trials` overrides each suite's default trial count.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: Option<usize>,
    pub resolution: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 7, trials: None, resolution: crate::metrics::DEFAULT_RESOLUTION }
    }
}

impl VerifyConfig {
    fn trials_or(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub trials: usize,
    pub passed: usize,
    /// Passes needed for the check to pass.
    pub required: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Manifest {
    pub suite: Suite,
    pub config: VerifyConfig,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl Manifest {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// A manifest of just the failing checks.
    pub fn failures(&self) -> Manifest {
        Manifest { checks: self.checks.iter().filter(|c| !c.pass).cloned().collect(), ..self.clone() }
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<Manifest> {
    if !(cfg.resolution > 0.0 && cfg.resolution < 0.5) {
        return Err(Error::InvalidParameter(format!("resolution must lie in (0, 0.5), got {}", cfg.resolution)));
    }
    if cfg.trials == Some(0) {
        return Err(Error::InvalidParameter("trials must be positive".into()));
    }
    let parts: Vec<Suite> = if suite == Suite::All { Suite::PARTS.to_vec() } else { vec![suite] };
    let mut checks = Vec::new();
    for s in parts {
        checks.extend(match s {
            Suite::Polar => polar_suite(cfg),
            Suite::Separation => separation_suite(cfg),
            Suite::Metrics => metrics_suite(cfg),
            Suite::Bounds => bounds_suite(cfg),
            Suite::Mapping => mapping_suite(cfg),
            Suite::All => unreachable!(),
        });
    }
    Ok(Manifest { suite, config: *cfg, pass: checks.iter().all(|c| c.pass), checks })
}

// A trial outcome: Ok(None) passes, Ok(Some(msg)) fails, Err is an error of
// the machinery (also a failure).
type Outcome = Result<Option<String>>;

// shared failures are reported once per affected check
fn again(e: &Error) -> Error {
    Error::InvalidParameter(e.to_string())
}

fn expect(ok: bool, what: &str) -> Option<String> {
    (!ok).then(|| what.to_string())
}

fn tally(name: &str, outcomes: Vec<Outcome>, required: Option<usize>) -> Check {
    let trials = outcomes.len();
    let failures: Vec<Failure> = outcomes
        .into_iter()
        .enumerate()
        .filter_map(|(trial, o)| match o {
            Ok(None) => None,
            Ok(Some(detail)) => Some(Failure { trial, detail }),
            Err(e) => Some(Failure { trial, detail: format!("error: {e}") }),
        })
        .collect();
    let passed = trials - failures.len();
    let required = required.unwrap_or(trials);
    Check {
        name: name.into(),
        trials,
        passed,
        required,
        pass: passed >= required,
        worst: None,
        tolerance: None,
        failures,
    }
}

/// Splits per-trial rows of outcomes into one check per column.
fn columns(names: &[&str], rows: Vec<Vec<Outcome>>) -> Vec<Check> {
    let mut cols: Vec<Vec<Outcome>> = names.iter().map(|_| Vec::with_capacity(rows.len())).collect();
    for row in rows {
        for (c, o) in cols.iter_mut().zip(row) {
            c.push(o);
        }
    }
    names.iter().zip(cols).map(|(n, c)| tally(n, c, None)).collect()
}

/// Independent stream per (seed, check, trial).
fn rng_for(seed: u64, tag: u64, trial: usize) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream((tag << 32) | trial as u64);
    r
}

const DENOM: i64 = 1 << 16;

fn rat(x: f64) -> Rational {
    Rational::new(((x * DENOM as f64).round() as i64).into(), DENOM.into())
}

fn chart_point(rng: &mut ChaCha8Rng, center: &[f64], radius: f64) -> Vec<f64> {
    loop {
        let u: Vec<f64> = center.iter().map(|_| rng.gen_range(-1.0..1.0)).collect();
        if u.iter().map(|x| x * x).sum::<f64>() <= 1.0 {
            return center.iter().zip(u).map(|(c, x)| c + radius * x).collect();
        }
    }
}

/// Points `(x, 1)` with x in a ball of the chart.
fn chart_rays(rng: &mut ChaCha8Rng, m: usize, center: &[f64], radius: f64) -> Vec<Ray> {
    (0..m)
        .map(|_| {
            let mut v: Vec<Rational> = chart_point(rng, center, radius).into_iter().map(rat).collect();
            v.push(Rational::from_integer(1.into()));
            Ray::new(v).expect("last coordinate is 1")
        })
        .collect()
}

fn chart_body(rng: &mut ChaCha8Rng, d: usize, m: usize, center: &[f64], radius: f64) -> Result<SphericalPolytope> {
    debug_assert_eq!(center.len(), d);
    SphericalPolytope::s_conv(&chart_rays(rng, m, center, radius))
}

fn sums(points: &[Ray]) -> Vec<Ray> {
    let mut out = points.to_vec();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let s = a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect();
            if let Ok(r) = Ray::new(s) {
                out.push(r);
            }
        }
    }
    out
}

fn all_in(cone: &ConvexCone, points: &[Ray]) -> bool {
    points.iter().all(|p| cone.contains(p))
}

fn negs(points: &[Ray]) -> Vec<Ray> {
    points.iter().map(Ray::neg).collect()
}

fn center_cone(c: SemiCenter, len: usize) -> ConvexCone {
    c.into_cone(len)
}

// ---------------------------------------------------------------- polar

pub const POLAR_CHECKS: [&str; 6] = [
    "polar_of_hull",
    "polar_of_negation",
    "polar_of_union",
    "polar_reverses_inclusion",
    "polar_involution",
    "polar_polytope_round_trip",
];

fn polar_trial(seed: u64, t: usize) -> Vec<Outcome> {
    let d = 1 + t % 4;
    let mut rng = rng_for(seed, 1, t);
    let m1 = rng.gen_range(d + 1..=10);
    let m2 = rng.gen_range(d + 1..=10);
    let zero = vec![0.0; d];
    let w = chart_body(&mut rng, d, m1, &zero, 1.0);
    let w2 = chart_body(&mut rng, d, m2, &zero, 1.0);
    let (w, w2) = match (w, w2) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return (0..POLAR_CHECKS.len()).map(|_| Err(again(&e))).collect(),
    };
    let polar = w.polar();
    let hull_check = || -> Outcome {
        let raw = sums(w.vertices());
        Ok(expect(polar_of_points(&raw)? == polar, "polar of the raw list differs from the polar of its hull"))
    };
    let neg_check = || -> Outcome { Ok(expect(w.neg().polar() == polar.neg(), "(−W)° ≠ −W°")) };
    let union_check = || -> Outcome {
        let both: Vec<Ray> = w.vertices().iter().chain(w2.vertices()).cloned().collect();
        Ok(expect(polar.intersect(&w2.polar()) == polar_of_points(&both)?, "W₁° ∩ W₂° ≠ (W₁ ∪ W₂)°"))
    };
    let inclusion_check = || -> Outcome {
        // a sub-body: some vertices and some edge midpoints
        let raw = sums(w.vertices());
        let mut rng = rng_for(seed, 2, t);
        let mut picked: Vec<Ray> = raw.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        if picked.is_empty() {
            picked.push(raw[0].clone());
        }
        let sub = SphericalPolytope::s_conv(&picked)?;
        if !all_in(w.cone(), sub.vertices()) {
            return Ok(Some("sub-body escaped its parent".into()));
        }
        Ok(expect(sub.polar().includes(&polar), "W₁ ⊆ W₂ but W₂° ⊄ W₁°"))
    };
    let involution_check = || -> Outcome { Ok(expect(polar.polar() == *w.cone(), "W°° ≠ W")) };
    let round_trip = || -> Outcome {
        let back = w.polar_polytope()?.polar_polytope()?;
        let canon = |p: &SphericalPolytope| {
            let mut v: Vec<_> = p.vertices().iter().map(|r| r.primitive().clone()).collect();
            v.sort();
            v
        };
        Ok(expect(canon(&back) == canon(&w), "polar of polar changed the canonical vertex set"))
    };
    vec![hull_check(), neg_check(), union_check(), inclusion_check(), involution_check(), round_trip()]
}

fn polar_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let n = cfg.trials_or(200);
    let rows: Vec<Vec<Outcome>> = (0..n).into_par_iter().map(|t| polar_trial(cfg.seed, t)).collect();
    columns(&POLAR_CHECKS, rows)
}

// ----------------------------------------------------------- separation

/// A random pair of bodies with disjoint hulls in S^d.
fn disjoint_pair(rng: &mut ChaCha8Rng, d: usize) -> Result<(SphericalPolytope, SphericalPolytope)> {
    for _ in 0..100 {
        let m1 = rng.gen_range(1..=6);
        let m2 = rng.gen_range(1..=6);
        let c1: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let c2: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let w1 = chart_body(rng, d, m1, &c1, 0.5)?;
        let w2 = chart_body(rng, d, m2, &c2, 0.5)?;
        if cones_disjoint(w1.vertices(), w2.vertices())?.is_disjoint() {
            return Ok((w1, w2));
        }
    }
    Err(Error::InvalidParameter(format!("no disjoint pair found in S^{d}")))
}

pub const SIX_ASSERTION_CHECKS: [&str; 8] = [
    "center_negation_identities",
    "center_inside_polars",
    "bodies_inside_center_polars",
    "center_equals_polar_iff_negative_case",
    "center_equals_polar_iff_positive_case",
    "center_polar_is_hull",
    "center_is_polar_of_hull",
    "center_direct_formula",
];

fn six_assertion_trial(seed: u64, t: usize) -> Vec<Outcome> {
    let d = 1 + t % 4;
    let mut rng = rng_for(seed, 3, t);
    let (w1, w2) = match disjoint_pair(&mut rng, d) {
        Ok(p) => p,
        Err(e) => return (0..SIX_ASSERTION_CHECKS.len()).map(|_| Err(again(&e))).collect(),
    };
    let len = d + 1;
    let c = || -> Result<ConvexCone> { Ok(center_cone(semi_separation_center(&w1, &w2)?, len)) };
    let hull = || SphericalPolytope::s_conv(&[w1.vertices(), &negs(w2.vertices())].concat());
    let one = || -> Outcome {
        let c = c()?;
        let swapped = center_cone(semi_separation_center(&w2, &w1)?, len).neg();
        let negated = center_cone(semi_separation_center(&w1.neg(), &w2.neg())?, len).neg();
        Ok(expect(c == swapped && c == negated, "C(W₁,W₂), −C(W₂,W₁), −C(−W₁,−W₂) differ"))
    };
    let two = || -> Outcome {
        let c = c()?;
        Ok(expect(w1.polar().includes(&c) && w2.polar().includes(&c.neg()), "C ⊄ W₁° or −C ⊄ W₂°"))
    };
    let three = || -> Outcome {
        let cp = c()?.polar();
        Ok(expect(all_in(&cp, w1.vertices()) && all_in(&cp.neg(), w2.vertices()), "W₁ ⊄ C° or W₂ ⊄ −C°"))
    };
    // random disjoint pairs: −W₂ ⊆ W₁ fails, so C must differ from W₁°
    let four_negative = || -> Outcome {
        let inside = all_in(w1.cone(), &negs(w2.vertices()));
        let equal = c()? == w1.polar();
        Ok(expect(inside == equal, "assertion (4) iff broken"))
            .map(|o| o.or_else(|| expect(!inside, "expected a negative case")))
    };
    // constructed: W₂ = −(a sub-body of W₁), so −W₂ ⊆ W₁ and C = W₁°
    let four_positive = || -> Outcome {
        let picked: Vec<Ray> = sums(w1.vertices()).into_iter().step_by(2).collect();
        let sub = SphericalPolytope::s_conv(&picked)?.neg();
        let cc = center_cone(semi_separation_center(&w1, &sub)?, len);
        let inside = all_in(w1.cone(), &negs(sub.vertices()));
        Ok(expect(inside && cc == w1.polar(), "−W₂ ⊆ W₁ but C ≠ W₁°"))
    };
    let five = || -> Outcome { Ok(expect(c()?.polar() == *hull()?.cone(), "C° ≠ s-conv(W₁ ∪ −W₂)")) };
    let six = || -> Outcome { Ok(expect(c()? == hull()?.polar(), "C ≠ s-conv(W₁ ∪ −W₂)°")) };
    let direct = || -> Outcome {
        let a = center_cone(semi_separation_center_direct(&w1, &w2)?, len);
        Ok(expect(a == c()?, "W₁° ∩ −W₂° differs from the hull formula"))
    };
    vec![one(), two(), three(), four_negative(), four_positive(), five(), six(), direct()]
}

pub const RECOGNITION_CHECKS: [&str; 2] = ["recognition_identity", "recognition_largest_pair"];

fn recognition_trial(seed: u64, t: usize) -> Vec<Outcome> {
    let d = 1 + t % 4;
    let len = d + 1;
    let mut rng = rng_for(seed, 4, t);
    let mut identity = || -> Outcome {
        let m = rng.gen_range(1..=8);
        let x = chart_body(&mut rng, d, m, &vec![0.0; d], 1.0)?;
        let xp = x.polar();
        let c = center_cone(semi_separation_center(&xp, &xp.neg())?, len);
        Ok(expect(c == *x.cone(), "C(X°, −X°) ≠ X"))
    };
    let mut rng = rng_for(seed, 5, t);
    let mut largest = || -> Outcome {
        let (w1, w2) = disjoint_pair(&mut rng, d)?;
        let x = center_cone(semi_separation_center(&w1, &w2)?, len);
        let xp = x.polar();
        let back = center_cone(semi_separation_center(&xp, &xp.neg())?, len);
        Ok(expect(
            all_in(&xp, w1.vertices()) && all_in(&xp.neg(), w2.vertices()) && back == x,
            "a pair producing X is not inside (X°, −X°)",
        ))
    };
    vec![identity(), largest()]
}

fn same_center_outcome(p: &SphericalPolytope) -> Outcome {
    let verts = p.vertices();
    let pairs: Vec<(SphericalPolytope, SphericalPolytope)> = enumerate_partition_pairs(verts)?
        .into_iter()
        .filter(|q| q.disjoint)
        .map(|q| {
            let pick =
                |ix: &[usize]| SphericalPolytope::s_conv(&ix.iter().map(|&k| verts[k].clone()).collect::<Vec<_>>());
            Ok((pick(&q.i)?, pick(&q.j)?))
        })
        .collect::<Result<_>>()?;
    if pairs.is_empty() {
        return Ok(Some("no valid partition pair".into()));
    }
    Ok(expect(crate::separation::pairs_same_center(&pairs, p)?, "a partition pair has a different center"))
}

fn square() -> SphericalPolytope {
    let v = [[1, 1, 4], [1, -1, 4], [-1, -1, 4], [-1, 1, 4]];
    SphericalPolytope::s_conv(&v.iter().map(|c| Ray::from_ints(c).expect("nonzero")).collect::<Vec<_>>())
        .expect("square is hemispherical")
}

/// Brute force over all ordered partitions: q is a center iff some (I, J)
/// has q·P >= 0 on I and <= 0 on J.
fn brute_center(points: &[Ray], q: &Ray) -> Result<bool> {
    let s: Vec<std::cmp::Ordering> = points.iter().map(|p| q.sign_dot(p)).collect::<Result<_>>()?;
    let m = points.len();
    Ok((1..(1u32 << m) - 1).any(|mask| (0..m).all(|k| if mask >> k & 1 == 1 { !s[k].is_lt() } else { !s[k].is_gt() })))
}

fn classify_trial(seed: u64, t: usize) -> Outcome {
    let mut rng = rng_for(seed, 6, t);
    let len = rng.gen_range(2..=4);
    let m = rng.gen_range(2..=6);
    let mut draw = || loop {
        let v: Vec<i64> = (0..len).map(|_| rng.gen_range(-3..=3)).collect();
        if let Ok(r) = Ray::from_ints(&v) {
            return r;
        }
    };
    let points: Vec<Ray> = (0..m).map(|_| draw()).collect();
    let q = draw();
    let report = classify_direction(&points, &q)?;
    let brute = brute_center(&points, &q)?;
    Ok(expect(report.is_center() == brute && report.verify(&points), "classification disagrees with the sign table"))
}

fn density_trial(seed: u64, t: usize, hemispherical: bool) -> Outcome {
    let mut rng = rng_for(seed, if hemispherical { 7 } else { 8 }, t);
    let d = 1 + t % 3;
    let m = rng.gen_range(2..=6);
    let mut points = chart_rays(&mut rng, m, &vec![0.0; d], 1.0);
    if !hemispherical {
        // append the negated sum: a positive dependence
        let mut s = vec![Rational::from_integer(0.into()); d + 1];
        for p in &points {
            s.iter_mut().zip(p.coords()).for_each(|(a, b)| *a -= b);
        }
        points.push(Ray::new(s)?);
    }
    let v = density_check(&points, 200, seed ^ t as u64)?;
    Ok(expect(v.hemispherical == hemispherical && v.pass, "density dichotomy failed"))
}

fn separation_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let n = cfg.trials_or(100);
    let mut checks =
        columns(&SIX_ASSERTION_CHECKS, (0..n).into_par_iter().map(|t| six_assertion_trial(cfg.seed, t)).collect());
    checks
        .extend(columns(&RECOGNITION_CHECKS, (0..n).into_par_iter().map(|t| recognition_trial(cfg.seed, t)).collect()));
    let same: Vec<Outcome> = std::iter::once(0)
        .chain(1..=n / 2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|t| {
            if t == 0 {
                return same_center_outcome(&square());
            }
            let d = 1 + t % 4;
            let mut rng = rng_for(cfg.seed, 9, t);
            let m = rng.gen_range(d + 1..=10);
            same_center_outcome(&chart_body(&mut rng, d, m, &vec![0.0; d], 1.0)?)
        })
        .collect();
    checks.push(tally("partition_pairs_share_center", same, None));
    let k = 100 * n;
    checks.push(tally(
        "classify_matches_sign_table",
        (0..k).into_par_iter().map(|t| classify_trial(cfg.seed, t)).collect(),
        None,
    ));
    let half = n / 2;
    checks.push(tally(
        "density_hemispherical",
        (0..half).into_par_iter().map(|t| density_trial(cfg.seed, t, true)).collect(),
        None,
    ));
    checks.push(tally(
        "density_non_hemispherical",
        (0..half).into_par_iter().map(|t| density_trial(cfg.seed, t, false)).collect(),
        None,
    ));
    checks
}

// -------------------------------------------------------------- metrics

fn pole() -> Ray {
    Ray::from_ints(&[1, 1, 1]).expect("nonzero")
}

fn float_check(
    name: &str,
    values: Vec<Result<f64>>,
    ok: impl Fn(f64) -> bool,
    tol: f64,
    required: Option<usize>,
) -> Check {
    let worst = values.iter().filter_map(|v| v.as_ref().ok().copied()).fold(None, |acc: Option<f64>, v| {
        Some(acc.map_or(v, |a| if ok(a) && !ok(v) || (ok(a) == ok(v) && v.abs() > a.abs()) { v } else { a }))
    });
    let outcomes = values
        .into_iter()
        .map(|v| v.map(|x| expect(ok(x), &format!("value {x:e} outside tolerance {tol:e}"))))
        .collect();
    Check { worst, tolerance: Some(tol), ..tally(name, outcomes, required) }
}

/// The cap bodies for metric trial `t`: W₁, W₂ about P and Y₁, Y₂ about −P.
fn cap_quad(seed: u64, t: usize) -> Result<[SphericalPolytope; 4]> {
    let mut rng = rng_for(seed, 10, t);
    let p = pole();
    let mut body = |c: &Ray| {
        let m = rng.gen_range(4..=7);
        cap_body(c, FRAC_PI_4, m, &mut rng)
    };
    Ok([body(&p)?, body(&p)?, body(&p.neg())?, body(&p.neg())?])
}

fn metrics_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let n = cfg.trials_or(100);
    let res = cfg.resolution;
    let tol = 2.0 * res;
    let p = pole();
    let mut checks = Vec::new();

    let quads: Vec<Result<[SphericalPolytope; 4]>> = (0..n).into_par_iter().map(|t| cap_quad(cfg.seed, t)).collect();
    let iso: Vec<Result<f64>> = quads
        .par_iter()
        .map(|q| {
            let q = q.as_ref().map_err(again)?;
            Ok(check_isometry(&q[0], &q[1], &p, res)?.residual)
        })
        .collect();
    checks.push(float_check("polar_isometry", iso, |r| r <= tol, tol, Some((99 * n).div_ceil(100))));

    let ne: Vec<Result<f64>> = quads
        .par_iter()
        .map(|q| {
            let q = q.as_ref().map_err(again)?;
            let r = check_nonexpansive(&q[0], &q[2], &q[1], &q[3], &p, res)?;
            // an empty center cannot occur in this class; report it if it does
            r.margin.ok_or_else(|| Error::InvalidParameter("empty semi-separation center".into()))
        })
        .collect();
    checks.push(float_check("nonexpansive_random", ne, |m| m >= -tol, tol, None));

    let examples: Vec<Result<(f64, f64, f64)>> = (0..3usize)
        .into_par_iter()
        .map(|kind| -> Result<(f64, f64, f64)> {
            let q = cap_quad(cfg.seed, n + kind)?;
            let (w1, w2) = (&q[0], &q[1]);
            let r = match kind {
                // Y = −W on both sides
                0 => check_nonexpansive(w1, &w1.neg(), w2, &w2.neg(), &p, res)?,
                // Y₁ = Y₂ = −s-conv(W₁ ∪ W₂): both centers are −Y₁°
                1 => {
                    let y = SphericalPolytope::s_conv(&[w1.vertices(), w2.vertices()].concat())?.neg();
                    check_nonexpansive(w1, &y, w2, &y, &p, res)?
                }
                // W₁ = W₂ = W inside Z₁ ∩ Z₂, Yᵢ = −Zᵢ: the centers are Zᵢ°
                _ => {
                    let z1 = SphericalPolytope::s_conv(&[w1.vertices(), q[2].neg().vertices()].concat())?;
                    let z2 = SphericalPolytope::s_conv(&[w1.vertices(), q[3].neg().vertices()].concat())?;
                    check_nonexpansive(w1, &z1.neg(), w1, &z2.neg(), &p, res)?
                }
            };
            let margin = r.margin.ok_or_else(|| Error::InvalidParameter("empty semi-separation center".into()))?;
            Ok((margin, r.h_w.min(r.h_y), r.h_w.max(r.h_y)))
        })
        .collect();
    let mut ex = examples.into_iter();
    let (e1, e2, e3) = (ex.next().expect("3"), ex.next().expect("3"), ex.next().expect("3"));
    checks.push(float_check("nonexpansive_equality_case", vec![e1.map(|e| e.0)], |m| m.abs() <= tol, tol, None));
    checks.push(float_check("nonexpansive_strict_equal_y", vec![e2.map(|e| e.0)], |m| m > tol, tol, None));
    // strict between min and max of the input distances; the output distance
    // attains the max, so the margin is ~0 here
    let e3 = e3.map(|(m, lo, hi)| if lo < hi - tol { m } else { f64::NAN });
    checks.push(float_check("nonexpansive_strict_equal_w", vec![e3], |m| m.abs() <= tol, tol, None));

    let axioms: Vec<Outcome> = (0..n.div_ceil(4))
        .into_par_iter()
        .map(|t| -> Outcome {
            let q = cap_quad(cfg.seed, 2 * n + t)?;
            let m: Vec<BodyMesh> = q.iter().take(3).map(|b| BodyMesh::of_polytope(b, res)).collect::<Result<_>>()?;
            let h = |a: &BodyMesh, b: &BodyMesh| hausdorff(a, b).map(|x| x.h);
            let (ab, ba, aa) = (h(&m[0], &m[1])?, h(&m[1], &m[0])?, h(&m[0], &m[0])?);
            let (bc, ac) = (h(&m[1], &m[2])?, h(&m[0], &m[2])?);
            let mirrored = h(&m[0].neg(), &m[1].neg())?;
            Ok(expect(ab == ba, "h not symmetric")
                .or_else(|| expect(aa == 0.0, "h(a, a) ≠ 0"))
                .or_else(|| expect(ac <= ab + bc + 3.0 * res, "triangle inequality beyond 3 × resolution"))
                .or_else(|| expect(mirrored == ab, "h(−a, −b) ≠ h(a, b)")))
        })
        .collect();
    checks.push(tally("hausdorff_axioms", axioms, None));

    let hemi: Vec<Outcome> = (0..n)
        .into_par_iter()
        .map(|t| -> Outcome {
            let mut rng = rng_for(cfg.seed, 11, t);
            let c = UnitPoint::from_ray(&p);
            let q = cap_point(&c, std::f64::consts::PI, &mut rng);
            let eps = rng.gen_range(0.01..1.5);
            let hemisphere = ConvexCone::from_rays(3, std::slice::from_ref(&p)).polar();
            let inside = ball_membership(&hemisphere, &q, eps)?;
            let witness = hemisphere_ball_witness(&c, &q, eps)
                .filter(|w| geodesic(&c, w) <= eps + 1e-12 && w.dot(&q) >= -1e-12)
                .is_some();
            Ok(expect(inside == witness, "ball membership and the rotated-pole witness disagree"))
        })
        .collect();
    checks.push(tally("hemisphere_ball_union", hemi, None));

    // B(W°, a) ∩ B(−Y°, a) against B(W° ∩ −Y°, a)
    let samples = |t: usize, count: usize| -> Vec<UnitPoint> {
        let mut rng = rng_for(cfg.seed, 12, t);
        let c = UnitPoint::from_ray(&p);
        (0..count).map(|_| cap_point(&c, 2.5, &mut rng)).collect()
    };
    let excess: Vec<Result<f64>> = quads
        .par_iter()
        .enumerate()
        .map(|(t, q)| {
            let q = q.as_ref().map_err(again)?;
            let a = rng_for(cfg.seed, 13, t).gen_range(0.05..1.5);
            ball_intersection_mismatch(&q[0], &q[2], a, &samples(t, 2000))
        })
        .collect();
    checks.push(float_check("ball_intersection_random", excess, |e| e <= tol, tol, None));
    let crossed = crossed_pair().and_then(|(w, y)| ball_intersection_mismatch(&w, &y, 0.5, &samples(0, 20000)));
    checks.push(float_check("ball_intersection_crossed", vec![crossed], |e| e <= tol, tol, None));
    checks
}

/// Two thin bodies about P and −P whose polars cross at acute corners.
pub fn crossed_pair() -> Result<(SphericalPolytope, SphericalPolytope)> {
    let body = |long: [i64; 3], short: [i64; 3], sign: i64| -> Result<SphericalPolytope> {
        let mut v = Vec::new();
        for (dir, k) in [(long, 4), (short, 1)] {
            for s in [1, -1] {
                v.push(Ray::from_ints(&(0..3).map(|i| sign * (6 + s * k * dir[i])).collect::<Vec<_>>())?);
            }
        }
        SphericalPolytope::s_conv(&v)
    };
    Ok((body([1, -1, 0], [1, 1, -2], 1)?, body([1, 1, -2], [1, -1, 0], -1)?))
}

// --------------------------------------------------------------- bounds

fn bounds_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let seeds = cfg.trials.map_or(3, |t| t.clamp(1, 3));
    let mut instances: Vec<(usize, Kind, usize, u64)> = Vec::new();
    for d in 2..=4 {
        instances.push((d, Kind::Simplex, d + 1, 0));
        if 2 * d <= 10 {
            instances.push((d, Kind::Cube, 2 * d, 0));
        }
        for p in d + 2..=10 {
            for s in 0..seeds as u64 {
                instances.push((d, Kind::RandomSimplicialDual, p, cfg.seed.wrapping_add(s)));
            }
        }
    }
    let sandwich: Vec<(usize, Outcome)> = instances
        .par_iter()
        .map(|&(d, kind, p, seed)| -> (usize, Outcome) {
            let run = || -> Outcome {
                let poly = generate(kind, d, p, seed)?;
                let r = check_face_pair_bounds(&poly)?;
                let label = format!("{kind}(d={d}, p={p}, seed={seed})");
                Ok(expect(
                    r.lower_ok && r.upper_ok,
                    &format!("{label}: {} outside [{}, {}]", r.count_fp, r.lower, r.upper),
                )
                .or_else(|| {
                    expect(
                        d != 3 || (r.count_fp as i128 == r.lower && r.count_fp as i128 == r.upper),
                        &format!("{label}: not tight"),
                    )
                }))
            };
            (d, run())
        })
        .collect();
    let mut checks = vec![tally("face_pair_sandwich", sandwich.into_iter().map(|(_, o)| o).collect(), None)];

    let lbt: Vec<Outcome> = (5..=9usize)
        .into_par_iter()
        .map(|p| -> Outcome {
            let poly = generate(Kind::Stacked, 3, p, cfg.seed)?;
            let f = poly.f_vector();
            let r = check_lbt(&poly)?;
            Ok(expect(f[1] == 3 * p - 6 && f[2] == 2 * p - 4 && r.equality(), &format!("stacked(3,{p}) has f = {f:?}")))
        })
        .collect();
    checks.push(tally("lower_bound_equality_stacked", lbt, None));

    let mut cyc: Vec<(usize, usize)> = Vec::new();
    for d in 2..=4 {
        for p in d + 2..=10 {
            cyc.push((d, p));
        }
    }
    let ubt: Vec<Outcome> = cyc
        .into_par_iter()
        .map(|(d, p)| -> Outcome {
            let poly = generate(Kind::Cyclic, d, p, cfg.seed)?;
            let r = check_ubt(&poly)?;
            Ok(expect(r.holds() && r.equality(), &format!("cyclic({d},{p}) misses the oracle")))
        })
        .collect();
    checks.push(tally("upper_bound_equality_cyclic", ubt, None));

    let neighbourly = || -> Outcome {
        let poly = generate(Kind::Cyclic, 4, 8, cfg.seed)?;
        let lattice = poly.face_lattice();
        let edges = lattice.faces(1);
        let all_pairs = (0..8).all(|a| (a + 1..8).all(|b| edges.iter().any(|e| *e == vec![a, b])));
        Ok(expect(edges.len() == 28 && all_pairs, "cyclic(4,8) is not neighbourly"))
    };
    checks.push(tally("cyclic_4_8_neighbourly", vec![neighbourly()], None));

    let printed: Vec<Outcome> = (5..=7usize)
        .map(|p| -> Outcome {
            let (pr, or) = (phi_capital_printed(0, 2, p)?, phi_capital_oracle(0, 2, p)?);
            Ok(expect(pr == 3 && or == p as i128, &format!("d=2, p={p}: printed {pr}, oracle {or}")))
        })
        .collect();
    checks.push(tally("printed_upper_formula_discrepancy", printed, None));

    let counts = || -> Outcome {
        let oct = generate(Kind::Simplex, 2, 3, 0)?;
        let cube = generate(Kind::Cube, 3, 6, 0)?;
        let sq = square();
        let got = [
            count_face_partition_pairs(&oct, CountMode::ByFace)?,
            count_face_partition_pairs(&sq, CountMode::ByFace)?,
            count_face_partition_pairs(&sq, CountMode::ByPartition)?,
            count_face_partition_pairs(&cube, CountMode::ByFace)?,
        ];
        Ok(expect(got == [12, 16, 12, 52], &format!("counts {got:?}, expected [12, 16, 12, 52]")))
    };
    checks.push(tally("face_pair_counts", vec![counts()], None));
    checks
}

// -------------------------------------------------------------- mapping

pub const MAPPING_CHECKS: [&str; 5] =
    ["central_commutes", "inverse_central_commutes", "affine_commutes", "central_round_trip", "halfspace_preimage"];

fn mapping_trial(seed: u64, t: usize) -> Vec<Outcome> {
    let d = 1 + t % 3;
    let len = d + 1;
    let mut rng = rng_for(seed, 14, t);
    let mut chart: Vec<i64> = (0..len).map(|_| rng.gen_range(-3..=3)).collect();
    chart[d] = rng.gen_range(4..=8);
    let chart = Ray::from_ints(&chart).expect("last coordinate is positive");
    let m = rng.gen_range(1..=8);
    // rays in the open hemisphere about the chart
    let rays: Vec<Ray> = (0..m)
        .map(|_| loop {
            let v: Vec<i64> = (0..len).map(|_| rng.gen_range(-6..=6)).collect();
            if let Ok(r) = Ray::from_ints(&v) {
                if chart.sign_dot(&r).is_ok_and(|s| s.is_gt()) {
                    break r;
                }
            }
        })
        .collect();
    let central = || -> Outcome {
        let pts: Vec<Point> = rays.iter().cloned().map(Point::Ray).collect();
        Ok(expect(check_conv_commutes(&MappingSpec::Central(chart.clone()), &pts)?, "central projection"))
    };
    let inverse = || -> Outcome {
        let pts: Vec<Point> =
            rays.iter().map(|r| central_project(&chart, r).map(Point::Affine)).collect::<Result<_>>()?;
        Ok(expect(
            check_conv_commutes(&MappingSpec::InverseCentral(chart.clone()), &pts)?,
            "inverse central projection",
        ))
    };
    let mut rng2 = rng_for(seed, 15, t);
    let mut affine = || -> Outcome {
        let rows = rng2.gen_range(1..=3);
        let small = |r: &mut ChaCha8Rng| Rational::new(r.gen_range(-4..=4).into(), r.gen_range(1..=3).into());
        let matrix: Vec<Vec<Rational>> = (0..rows).map(|_| (0..len).map(|_| small(&mut rng2)).collect()).collect();
        let offset: Vec<Rational> = (0..rows).map(|_| small(&mut rng2)).collect();
        let pts: Vec<Point> = (0..m).map(|_| Point::Affine((0..len).map(|_| small(&mut rng2)).collect())).collect();
        Ok(expect(check_conv_commutes(&MappingSpec::affine(matrix, offset)?, &pts)?, "affine map"))
    };
    let round_trip = || -> Outcome {
        for r in &rays {
            if central_unproject(&chart, &central_project(&chart, r)?)? != *r {
                return Ok(Some(format!("round trip moved {r}")));
            }
        }
        Ok(None)
    };
    let mut rng3 = rng_for(seed, 16, t);
    let mut halfspace = || -> Outcome {
        let normal: Vec<Rational> = (0..len).map(|_| Rational::new(rng3.gen_range(-5..=5).into(), 2.into())).collect();
        let gamma = Rational::new(rng3.gen_range(-5..=5).into(), 3.into());
        Ok(expect(check_halfspace_preimage(&chart, &normal, &gamma, &rays)?, "half-space preimage disagrees"))
    };
    vec![central(), inverse(), affine(), round_trip(), halfspace()]
}

fn mapping_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let n = cfg.trials_or(100);
    let mut checks = columns(&MAPPING_CHECKS, (0..n).into_par_iter().map(|t| mapping_trial(cfg.seed, t)).collect());
    let cert = stereographic_counterexample().map(|c| expect(c.verified, "certificate did not re-verify"));
    checks.push(tally("stereographic_counterexample", vec![cert], None));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(trials: usize) -> VerifyConfig {
        VerifyConfig { seed: 3, trials: Some(trials), resolution: 0.05 }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::All].into_iter().chain(Suite::PARTS) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn small_polar_and_mapping_runs_pass() {
        for s in [Suite::Polar, Suite::Mapping] {
            let m = run(s, &small(8)).unwrap();
            assert!(m.pass, "{}", m.failures().to_json());
        }
    }

    #[test]
    fn small_separation_run_passes() {
        let m = run(Suite::Separation, &small(4)).unwrap();
        assert!(m.pass, "{}", m.failures().to_json());
    }

    #[test]
    fn manifests_are_reproducible() {
        let a = run(Suite::Polar, &small(4)).unwrap().to_json();
        let b = run(Suite::Polar, &small(4)).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn bad_configs_are_rejected() {
        assert!(run(Suite::Polar, &VerifyConfig { trials: Some(0), ..small(1) }).is_err());
        assert!(run(Suite::Polar, &VerifyConfig { resolution: 0.0, ..small(1) }).is_err());
    }
}
