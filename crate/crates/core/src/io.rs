//! JSON file formats. Rationals are written as `"a/b"` strings; floats are
//! rejected on input.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cone::ConvexCone;
use crate::error::{Error, Result};
use crate::exact::Ray;
use crate::polytope::SphericalPolytope;
use crate::separation::SemiCenter;

/// `{"dim": d, "vertices": [[...], ...], "facet_normals": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeFile {
    pub dim: usize,
    pub vertices: Vec<Ray>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facet_normals: Option<Vec<Ray>>,
}

impl PolytopeFile {
    /// Vertices and normals are written as sorted primitive integer rays, so
    /// equal polytopes give identical files.
    pub fn from_polytope(p: &SphericalPolytope) -> PolytopeFile {
        let canonical = |rays: &[Ray]| {
            let mut out: Vec<Ray> = rays.iter().map(|r| Ray::from_ivec(r.primitive().clone())).collect();
            out.sort();
            out
        };
        PolytopeFile {
            dim: p.ambient(),
            vertices: canonical(p.vertices()),
            facet_normals: Some(canonical(p.facet_normals())),
        }
    }

    /// Builds the hull; a stated `dim` or facet list must agree with it.
    pub fn to_polytope(&self) -> Result<SphericalPolytope> {
        for v in &self.vertices {
            if v.len() != self.dim + 1 {
                return Err(Error::DimensionMismatch { expected: self.dim + 1, found: v.len() });
            }
        }
        let p = SphericalPolytope::s_conv(&self.vertices)?;
        if let Some(normals) = &self.facet_normals {
            let stated = ConvexCone::from_inequalities(
                self.dim + 1,
                &normals.iter().map(|r| r.primitive().clone()).collect::<Vec<_>>(),
                &p.cone().equalities().iter().map(|r| r.primitive().clone()).collect::<Vec<_>>(),
            );
            if stated != *p.cone() {
                return Err(Error::Parse("facet_normals do not describe the hull of the vertices".into()));
            }
        }
        Ok(p)
    }

    pub fn parse(text: &str) -> Result<PolytopeFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

pub fn read_polytope(path: &Path) -> Result<SphericalPolytope> {
    PolytopeFile::parse(&std::fs::read_to_string(path)?)?.to_polytope()
}

pub fn write_polytope(path: &Path, p: &SphericalPolytope) -> Result<()> {
    std::fs::write(path, PolytopeFile::from_polytope(p).to_json())?;
    Ok(())
}

/// A cone by generators: `{"dim", "empty", "rays", "lineality"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConeFile {
    pub dim: usize,
    pub empty: bool,
    pub rays: Vec<Ray>,
    pub lineality: Vec<Ray>,
}

impl ConeFile {
    pub fn from_cone(c: &ConvexCone) -> ConeFile {
        ConeFile { dim: c.len() - 1, empty: c.is_empty(), rays: c.rays().to_vec(), lineality: c.lineality().to_vec() }
    }

    pub fn from_center(c: &SemiCenter, len: usize) -> ConeFile {
        ConeFile::from_cone(&c.clone().into_cone(len))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
