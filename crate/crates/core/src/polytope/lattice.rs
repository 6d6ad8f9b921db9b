use std::collections::{BTreeSet, HashMap};

use num::{BigInt, Signed, Zero};

use super::SphericalPolytope;
use crate::exact::linalg::rank;
use crate::exact::{dot_i, IVec};

/// `(dimension, index within that dimension)`.
pub type FaceId = (usize, usize);

/// Proper faces of a spherical polytope, grouped by dimension. Each face is
/// the sorted list of indices (into the polytope's vertex list) it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    faces: Vec<Vec<Vec<usize>>>,
    index: HashMap<Vec<usize>, (usize, usize)>,
    incidence: Vec<(FaceId, FaceId)>,
}

impl FaceLattice {
    /// Closure of the facet vertex sets under intersection. Every nonempty
    /// intersection of facets is a face and every proper face arises so.
    pub(crate) fn build(p: &SphericalPolytope) -> FaceLattice {
        let dim = p.dim();
        let facets = p.facet_incidence();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: Vec<Vec<usize>> = Vec::new();
        for f in &facets {
            if !f.is_empty() && seen.insert(f.clone()) {
                queue.push(f.clone());
            }
        }
        while let Some(face) = queue.pop() {
            for f in &facets {
                let meet: Vec<usize> = face.iter().copied().filter(|i| f.binary_search(i).is_ok()).collect();
                if !meet.is_empty() && seen.insert(meet.clone()) {
                    queue.push(meet);
                }
            }
        }

        let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim];
        for face in seen {
            let gens: Vec<IVec> = face.iter().map(|&i| p.vertices()[i].primitive().clone()).collect();
            let k = rank(&gens) - 1;
            faces[k].push(face);
        }
        for level in &mut faces {
            level.sort();
        }
        let mut index = HashMap::new();
        for (k, level) in faces.iter().enumerate() {
            for (i, face) in level.iter().enumerate() {
                index.insert(face.clone(), (k, i));
            }
        }
        let mut incidence = Vec::new();
        for k in 1..dim {
            for (i, small) in faces[k - 1].iter().enumerate() {
                for (j, big) in faces[k].iter().enumerate() {
                    if small.iter().all(|v| big.binary_search(v).is_ok()) {
                        incidence.push(((k - 1, i), (k, j)));
                    }
                }
            }
        }
        FaceLattice { faces, index, incidence }
    }

    /// Number of face dimensions, i.e. the polytope's dimension.
    pub fn dim(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self, k: usize) -> &[Vec<usize>] {
        &self.faces[k]
    }

    /// All proper faces, lowest dimension first.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Vec<usize>)> {
        self.faces.iter().enumerate().flat_map(|(k, level)| level.iter().map(move |f| (k, f)))
    }

    pub fn proper_face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Dimension of the face with exactly these (sorted) vertex indices.
    pub fn face_dim(&self, vertices: &[usize]) -> Option<usize> {
        self.index.get(vertices).map(|&(k, _)| k)
    }

    pub fn is_face(&self, vertices: &[usize]) -> bool {
        self.index.contains_key(vertices)
    }

    /// Covering pairs `((k, i), (k + 1, j))`: face i of dimension k lies in
    /// face j of dimension k + 1.
    pub fn incidence(&self) -> &[(FaceId, FaceId)] {
        &self.incidence
    }

    /// A supporting normal exposing exactly this face: the sum of the facet
    /// normals through it.
    pub fn supporting_normal(&self, p: &SphericalPolytope, face: &[usize]) -> IVec {
        let len = p.cone().len();
        let mut n: IVec = vec![BigInt::zero(); len];
        for f in p.facet_normals() {
            let on = face.iter().all(|&i| dot_i(f.primitive(), p.vertices()[i].primitive()).is_zero());
            if on {
                for (a, b) in n.iter_mut().zip(f.primitive()) {
                    *a += b;
                }
            }
        }
        n
    }

    /// Re-checks every face against its supporting normal (zero on the face,
    /// positive off it), the dimension by rank, and closure of the face set
    /// under intersection.
    pub fn validate(&self, p: &SphericalPolytope) -> bool {
        let verts = p.vertices();
        for (k, face) in self.iter() {
            let n = self.supporting_normal(p, face);
            for (i, v) in verts.iter().enumerate() {
                let s = dot_i(&n, v.primitive());
                let on = face.binary_search(&i).is_ok();
                if (on && !s.is_zero()) || (!on && !s.is_positive()) {
                    return false;
                }
            }
            let gens: Vec<IVec> = face.iter().map(|&i| verts[i].primitive().clone()).collect();
            if rank(&gens) != k + 1 {
                return false;
            }
        }
        let all: Vec<&Vec<usize>> = self.iter().map(|(_, f)| f).collect();
        for a in &all {
            for b in &all {
                let meet: Vec<usize> = a.iter().copied().filter(|i| b.binary_search(i).is_ok()).collect();
                if !meet.is_empty() && !self.is_face(&meet) {
                    return false;
                }
            }
        }
        true
    }
}
