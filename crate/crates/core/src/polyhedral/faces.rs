//! Face enumeration by vertex/facet incidence.
//!
//! A face is identified by the set of inequalities tight on it. Starting
//! from the whole polyhedron, the facets of a face `F` are the maximal sets
//! obtained by intersecting the tight sets of the generators of `F` that lie
//! on one more inequality. Faces come out level by level, largest dimension
//! first, which lets callers stop as soon as a level answers their question.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{normal_cone, relint_point_negative_on, tight_along_ray, tight_at_vertex, HRep, VRep};
use crate::error::{Error, Result};
use crate::qlinalg::{rank_of, QVector};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Face {
    /// Always every equality of the H-representation.
    pub active_equalities: Vec<usize>,
    pub active_inequalities: Vec<usize>,
    /// Affine dimension; `-1` only for the empty face, which is never emitted.
    pub dim: isize,
    pub vertex_indices: Vec<usize>,
    pub ray_indices: Vec<usize>,
}

impl Face {
    pub fn is_compact(&self) -> bool {
        self.ray_indices.is_empty()
    }

    pub fn vertices<'v>(&self, v: &'v VRep) -> Vec<&'v QVector> {
        self.vertex_indices.iter().map(|&i| &v.vertices[i]).collect()
    }
}

pub struct FaceLattice<'a> {
    h: &'a HRep,
    v: &'a VRep,
    vertex_tight: Vec<FixedBitSet>,
    ray_tight: Vec<FixedBitSet>,
}

impl<'a> FaceLattice<'a> {
    /// Checks that `h` and `v` describe the same pointed polyhedron and
    /// precomputes the incidences.
    pub fn new(h: &'a HRep, v: &'a VRep) -> Result<Self> {
        if h.dim != v.dim {
            return Err(Error::DimensionMismatch {
                expected: h.dim,
                found: v.dim,
            });
        }
        let n = h.dim;
        let bad = |msg: String| Err(Error::Inconsistent(msg));
        for x in &v.vertices {
            if !h.contains(x) {
                return bad(format!("vertex {x} violates the constraints"));
            }
        }
        for r in &v.rays {
            if r.is_zero()
                || h.equalities.iter().any(|c| !c.normal.dot(r).is_zero())
                || h.inequalities.iter().any(|c| c.normal.dot(r).is_positive())
            {
                return bad(format!("{r} is not a recession direction"));
            }
        }
        let lattice = FaceLattice {
            h,
            v,
            vertex_tight: v.vertices.iter().map(|x| tight_at_vertex(h, x)).collect(),
            ray_tight: v.rays.iter().map(|r| tight_along_ray(h, r)).collect(),
        };
        if v.vertices.is_empty() {
            return Ok(lattice);
        }
        let eqs = h.equality_normals();
        for (x, tight) in v.vertices.iter().zip(&lattice.vertex_tight) {
            let mut rows = eqs.clone();
            rows.extend(tight.ones().map(|j| h.inequalities[j].normal.clone()));
            if rank_of(&rows, n) != n {
                return bad(format!("{x} is not a vertex"));
            }
        }
        let affine = n - rank_of(&eqs, n);
        let all = lattice.closure(FixedBitSet::with_capacity(h.inequalities.len()));
        if lattice.face_dim(&all.1, &all.2) != affine as isize {
            return bad("generators do not span the affine hull".into());
        }
        for j in 0..h.inequalities.len() {
            let mut s = FixedBitSet::with_capacity(h.inequalities.len());
            s.insert(j);
            let (_, verts, rays) = lattice.closure(s);
            if lattice.face_dim(&verts, &rays) != affine as isize - 1 {
                return bad(format!("inequality {j} does not define a facet"));
            }
        }
        Ok(lattice)
    }

    /// Generators lying on every inequality in `s`, and the full tight set
    /// of the face they span.
    fn closure(&self, s: FixedBitSet) -> (FixedBitSet, FixedBitSet, FixedBitSet) {
        let mut verts = FixedBitSet::with_capacity(self.vertex_tight.len());
        let mut rays = FixedBitSet::with_capacity(self.ray_tight.len());
        let mut tight = FixedBitSet::with_capacity(self.h.inequalities.len());
        tight.insert_range(..);
        for (i, t) in self.vertex_tight.iter().enumerate() {
            if s.is_subset(t) {
                verts.insert(i);
                tight.intersect_with(t);
            }
        }
        for (i, t) in self.ray_tight.iter().enumerate() {
            if s.is_subset(t) {
                rays.insert(i);
                tight.intersect_with(t);
            }
        }
        (tight, verts, rays)
    }

    fn face_dim(&self, verts: &FixedBitSet, rays: &FixedBitSet) -> isize {
        let mut it = verts.ones();
        let Some(first) = it.next() else {
            return -1;
        };
        let base = &self.v.vertices[first];
        let mut dirs: Vec<QVector> = it.map(|i| self.v.vertices[i].sub(base)).collect();
        dirs.extend(rays.ones().map(|i| self.v.rays[i].clone()));
        rank_of(&dirs, self.v.dim) as isize
    }

    fn make_face(&self, tight: &FixedBitSet, verts: &FixedBitSet, rays: &FixedBitSet) -> Face {
        Face {
            active_equalities: (0..self.h.equalities.len()).collect(),
            active_inequalities: tight.ones().collect(),
            dim: self.face_dim(verts, rays),
            vertex_indices: verts.ones().collect(),
            ray_indices: rays.ones().collect(),
        }
    }

    /// The polyhedron itself, or `None` when it is empty.
    pub fn improper(&self) -> Option<Face> {
        if self.v.vertices.is_empty() {
            return None;
        }
        let (tight, verts, rays) = self.closure(FixedBitSet::with_capacity(self.h.inequalities.len()));
        Some(self.make_face(&tight, &verts, &rays))
    }

    /// Faces of dimension `f.dim - 1` contained in `f`, sorted by tight set.
    pub fn facets_of(&self, f: &Face) -> Vec<Face> {
        let m = self.h.inequalities.len();
        let mut own = FixedBitSet::with_capacity(m);
        own.extend(f.active_inequalities.iter().copied());
        let mut candidates: BTreeSet<Vec<usize>> = BTreeSet::new();
        for j in 0..m {
            if own.contains(j) {
                continue;
            }
            let mut tight = FixedBitSet::with_capacity(m);
            tight.insert_range(..);
            let mut any_vertex = false;
            for &i in &f.vertex_indices {
                if self.vertex_tight[i].contains(j) {
                    tight.intersect_with(&self.vertex_tight[i]);
                    any_vertex = true;
                }
            }
            if !any_vertex {
                continue;
            }
            for &i in &f.ray_indices {
                if self.ray_tight[i].contains(j) {
                    tight.intersect_with(&self.ray_tight[i]);
                }
            }
            candidates.insert(tight.ones().collect());
        }
        candidates
            .into_iter()
            .filter_map(|s| {
                let mut bits = FixedBitSet::with_capacity(m);
                bits.extend(s);
                let (tight, verts, rays) = self.closure(bits);
                let face = self.make_face(&tight, &verts, &rays);
                (face.dim == f.dim - 1).then_some(face)
            })
            .collect()
    }

    /// Faces grouped by dimension, from the polyhedron itself down to vertices.
    pub fn levels(&self) -> Levels<'_, 'a> {
        Levels {
            lattice: self,
            current: self.improper().into_iter().collect(),
        }
    }
}

pub struct Levels<'l, 'a> {
    lattice: &'l FaceLattice<'a>,
    current: Vec<Face>,
}

impl Iterator for Levels<'_, '_> {
    type Item = Vec<Face>;

    fn next(&mut self) -> Option<Vec<Face>> {
        if self.current.is_empty() {
            return None;
        }
        let mut next: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut faces = Vec::new();
        for f in &self.current {
            for g in self.lattice.facets_of(f) {
                if next.insert(g.active_inequalities.clone()) {
                    faces.push(g);
                }
            }
        }
        faces.sort_by(|a, b| a.active_inequalities.cmp(&b.active_inequalities));
        Some(std::mem::replace(&mut self.current, faces))
    }
}

/// Every nonempty face, the polyhedron itself first, then by decreasing
/// dimension and lexicographic tight set.
pub fn enumerate_faces(h: &HRep, v: &VRep) -> Result<Vec<Face>> {
    let lattice = FaceLattice::new(h, v)?;
    Ok(lattice.levels().flatten().collect())
}

/// Largest dimension of a bounded face.
///
/// Boundedness is decided twice: by the absence of rays in the face, and
/// by whether the relative interior of the face's normal cone holds a
/// functional strictly negative on every ray of the polyhedron. The two
/// must agree face by face.
pub fn max_compact_face_dim(h: &HRep, v: &VRep) -> Result<usize> {
    if v.vertices.is_empty() {
        return Err(Error::NoVertices);
    }
    let faces = enumerate_faces(h, v)?;
    let mut best: Option<isize> = None;
    for f in &faces {
        let by_rays = f.is_compact();
        let by_cone = relint_point_negative_on(&normal_cone(h, f), &v.rays)?.is_some();
        if by_rays != by_cone {
            return Err(Error::Internal(format!(
                "face {:?}: ray test says compact={by_rays}, normal cone test says {by_cone}",
                f.active_inequalities
            )));
        }
        if by_rays {
            best = Some(best.map_or(f.dim, |b| b.max(f.dim)));
        }
    }
    best.map(|d| d as usize)
        .ok_or_else(|| Error::Internal("no compact face found".into()))
}
