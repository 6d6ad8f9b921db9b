//! Face-number formulas and the upper/lower bound checks.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polytope::{generate, Kind, SphericalPolytope};
use crate::separation::{count_face_partition_pairs, CountMode};

/// Largest p for which the cyclic oracle is generated.
pub const ORACLE_MAX_P: usize = 16;
/// Largest d for which the cyclic oracle is generated.
pub const ORACLE_MAX_D: usize = 6;

/// `C(a, b)`, zero when `a < 0`, `b < 0` or `a < b`.
pub fn binom(a: i64, b: i64) -> i128 {
    if a < 0 || b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut r: i128 = 1;
    for k in 0..b {
        r = r * (a - k) as i128 / (k + 1) as i128;
    }
    r
}

fn check_dp(d: usize, p: usize) -> Result<()> {
    if d < 2 || p < d + 1 {
        return Err(Error::InvalidParameter(format!("need d >= 2 and p >= d + 1 (d = {d}, p = {p})")));
    }
    Ok(())
}

/// The lower-bound function `φ_j(d, p)` for `0 <= j <= d − 2`.
///
/// At j = 0 this is the facet bound `(d−1)p − (d+1)(d−2)` rather than the
/// general expression.
pub fn phi(j: usize, d: usize, p: usize) -> Result<i128> {
    check_dp(d, p)?;
    if j + 2 > d {
        return Err(Error::InvalidParameter(format!("phi needs 0 <= j <= d - 2 (j = {j}, d = {d})")));
    }
    let (j, d, p) = (j as i64, d as i64, p as i128);
    if j == 0 {
        return Ok((d - 1) as i128 * p - ((d + 1) * (d - 2)) as i128);
    }
    Ok(binom(d, j + 1) * p - binom(d + 1, j + 1) * (d - 1 - j) as i128)
}

/// The upper-bound sum exactly as written:
/// `Σ_{i=0}^{n} C(i,j) C(p−d+i−1, j) + Σ_{i=0}^{m} C(d−i, j) C(p−d+i−1, j)`
/// with `m = ⌊(d−1)/2⌋`, `n = ⌊d/2⌋`.
pub fn phi_capital_printed(j: usize, d: usize, p: usize) -> Result<i128> {
    check_dp(d, p)?;
    let (j, d, p) = (j as i64, d as i64, p as i64);
    let (m, n) = ((d - 1) / 2, d / 2);
    let first: i128 = (0..=n).map(|i| binom(i, j) * binom(p - d + i - 1, j)).sum();
    let second: i128 = (0..=m).map(|i| binom(d - i, j) * binom(p - d + i - 1, j)).sum();
    Ok(first + second)
}

type FaceCache = Mutex<HashMap<(usize, usize), Vec<usize>>>;

fn cyclic_f_vector(d: usize, p: usize) -> Result<Vec<usize>> {
    static CACHE: OnceLock<FaceCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().expect("cache lock").get(&(d, p)) {
        return Ok(f.clone());
    }
    let f = generate(Kind::Cyclic, d, p, 0)?.f_vector();
    cache.lock().expect("cache lock").insert((d, p), f.clone());
    Ok(f)
}

/// `f_{d−1−j}` of the cyclic polytope with p vertices in dimension d, the
/// exact maximum that the upper bound describes.
pub fn phi_capital_oracle(j: usize, d: usize, p: usize) -> Result<i128> {
    check_dp(d, p)?;
    if d > ORACLE_MAX_D || p > ORACLE_MAX_P {
        return Err(Error::CeilingExceeded {
            count: p.max(d),
            ceiling: if d > ORACLE_MAX_D { ORACLE_MAX_D } else { ORACLE_MAX_P },
        });
    }
    if j >= d {
        return Err(Error::InvalidParameter(format!("oracle needs 0 <= j <= d - 1 (j = {j}, d = {d})")));
    }
    Ok(cyclic_f_vector(d, p)?[d - 1 - j] as i128)
}

/// One row of a bound table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub j: usize,
    /// Face number of the polytope, absent in formula tables.
    pub f_j: Option<usize>,
    /// Undefined for j = d − 1.
    pub phi: Option<i128>,
    pub phi_printed: i128,
    pub phi_oracle: i128,
}

fn formula_rows(d: usize, p: usize, f: Option<&[usize]>) -> Result<Vec<BoundRow>> {
    (0..d)
        .map(|j| {
            Ok(BoundRow {
                j,
                f_j: f.map(|f| f[j]),
                phi: if j + 2 <= d { Some(phi(j, d, p)?) } else { None },
                phi_printed: phi_capital_printed(j, d, p)?,
                phi_oracle: phi_capital_oracle(j, d, p)?,
            })
        })
        .collect()
}

/// The face-pair count of a simple polytope against both bound sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub d: usize,
    /// Number of facets.
    pub p: usize,
    pub rows: Vec<BoundRow>,
    pub count_fp: usize,
    pub lower: i128,
    pub upper: i128,
    /// Upper sum with the formula as written; reported, never asserted.
    pub upper_printed: i128,
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub upper_printed_ok: bool,
    /// Both sums run over j = 1..d−1, i.e. indices d−2 down to 0.
    pub sum_range: String,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.lower_ok && self.upper_ok
    }

    pub fn to_csv(&self) -> String {
        let mut out = rows_csv(&self.rows);
        let verdict = if self.holds() { "pass" } else { "fail" };
        out.push_str("count_fp,lower,upper,verdict\n");
        let _ = writeln!(out, "{},{},{},{}", self.count_fp, self.lower, self.upper, verdict);
        out
    }
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn rows_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from("j,f_j,phi,Phi_printed,Phi_oracle\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{}", r.j, cell(r.f_j), cell(r.phi), r.phi_printed, r.phi_oracle);
    }
    out
}

/// The formula table for given d and p, without a polytope.
pub fn formula_table(d: usize, p: usize) -> Result<Vec<BoundRow>> {
    formula_rows(d, p, None)
}

pub fn formula_table_csv(d: usize, p: usize) -> Result<String> {
    Ok(rows_csv(&formula_table(d, p)?))
}

/// Sandwiches the by-face count of a simple polytope with p facets between
/// `2(p + Σ_{j=1}^{d−1} φ_{d−1−j})` and `2(p + Σ_{j=1}^{d−1} Φ_{d−1−j})`.
pub fn check_face_pair_bounds(poly: &SphericalPolytope) -> Result<BoundReport> {
    if !poly.is_simple()? {
        return Err(Error::NotSimple);
    }
    let d = poly.ambient();
    let p = poly.facet_normals().len();
    let f = poly.f_vector();
    let rows = formula_rows(d, p, Some(&f))?;
    let count_fp = count_face_partition_pairs(poly, CountMode::ByFace)?;
    let mut lower = p as i128;
    let mut upper = p as i128;
    let mut upper_printed = p as i128;
    for j in 1..d {
        let k = d - 1 - j;
        lower += phi(k, d, p)?;
        upper += phi_capital_oracle(k, d, p)?;
        upper_printed += phi_capital_printed(k, d, p)?;
    }
    let (lower, upper, upper_printed) = (2 * lower, 2 * upper, 2 * upper_printed);
    let c = count_fp as i128;
    Ok(BoundReport {
        d,
        p,
        rows,
        count_fp,
        lower,
        upper,
        upper_printed,
        lower_ok: lower <= c,
        upper_ok: c <= upper,
        upper_printed_ok: c <= upper_printed,
        sum_range: "j=1..d-1".into(),
    })
}

/// One face number of a simplicial polytope against its bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceBound {
    pub j: usize,
    pub f_j: usize,
    pub bound: i128,
    pub holds: bool,
    pub equality: bool,
}

/// Per-j comparison for a simplicial polytope with p vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialReport {
    pub d: usize,
    pub p: usize,
    pub rows: Vec<FaceBound>,
}

impl SimplicialReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }

    pub fn equality(&self) -> bool {
        self.rows.iter().all(|r| r.equality)
    }
}

fn simplicial_report(
    q: &SphericalPolytope,
    bound: impl Fn(usize, usize, usize) -> Result<i128>,
    holds: impl Fn(i128, i128) -> bool,
) -> Result<SimplicialReport> {
    if !q.is_simplicial()? {
        return Err(Error::NotSimplicial);
    }
    let d = q.ambient();
    let p = q.vertices().len();
    let f = q.f_vector();
    let rows = (1..d)
        .map(|j| {
            let b = bound(d - 1 - j, d, p)?;
            let fj = f[j] as i128;
            Ok(FaceBound { j, f_j: f[j], bound: b, holds: holds(fj, b), equality: fj == b })
        })
        .collect::<Result<_>>()?;
    Ok(SimplicialReport { d, p, rows })
}

/// `f_j >= φ_{d−1−j}(d, p)` for j = 1..d−1.
pub fn check_lbt(q: &SphericalPolytope) -> Result<SimplicialReport> {
    simplicial_report(q, phi, |f, b| f >= b)
}

/// `f_j <= Φ_{d−1−j}(d, p)` for j = 1..d−1, against the cyclic oracle.
pub fn check_ubt(q: &SphericalPolytope) -> Result<SimplicialReport> {
    simplicial_report(q, phi_capital_oracle, |f, b| f <= b)
}
