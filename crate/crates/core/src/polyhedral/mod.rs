//! Exact convex polyhedra in H- and V-representation.
//!
//! Conversions are done by double description. Canonical H-representations
//! store equalities as the primitive integer rows of their reduced row
//! echelon form, and facet normals reduced modulo the equality pivots and
//! scaled to primitive integer vectors, so two canonical H-representations
//! of the same polyhedron compare equal.

mod cone;
mod dd;
mod faces;

use fixedbitset::FixedBitSet;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qlinalg::{
    lp_feasible, lp_minimize, rank_of, row_space_basis, serde_rational, LpOutcome, QVector,
    Rational, Rows,
};

pub use cone::{
    cone_meets_open_negative_orthant, normal_cone, relint_point_negative_on, ConeCertificate,
    NormalCone,
};
pub use faces::{enumerate_faces, max_compact_face_dim, Face, FaceLattice};

/// `normal . u = rhs` or `normal . u <= rhs`, depending on where it is stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Constraint {
    pub normal: QVector,
    #[serde(with = "serde_rational")]
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(normal: QVector, rhs: Rational) -> Self {
        Constraint { normal, rhs }
    }

    /// `normal . u >= rhs`, stored in `<=` form.
    pub fn ge(normal: QVector, rhs: Rational) -> Self {
        Constraint {
            normal: normal.neg(),
            rhs: -rhs,
        }
    }

    pub fn value(&self, x: &QVector) -> Rational {
        self.normal.dot(x)
    }

    pub fn is_tight(&self, x: &QVector) -> bool {
        self.value(x) == self.rhs
    }

    /// Scaled by a positive factor so the normal is a primitive integer vector.
    pub fn primitive(&self) -> Constraint {
        match self.normal.primitive_factor() {
            Some(k) => Constraint {
                normal: self.normal.scale(&k),
                rhs: &self.rhs * &k,
            },
            None => self.clone(),
        }
    }

    /// True when `other` is a positive multiple of `self`.
    pub fn same_halfspace(&self, other: &Constraint) -> bool {
        self.primitive() == other.primitive()
    }

    fn as_pair(&self) -> (QVector, Rational) {
        (self.normal.clone(), self.rhs.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRep {
    pub dim: usize,
    pub equalities: Vec<Constraint>,
    pub inequalities: Vec<Constraint>,
}

impl HRep {
    pub fn new(dim: usize, equalities: Vec<Constraint>, inequalities: Vec<Constraint>) -> Result<Self> {
        for c in equalities.iter().chain(&inequalities) {
            if c.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.normal.len(),
                });
            }
        }
        Ok(HRep {
            dim,
            equalities,
            inequalities,
        })
    }

    pub fn contains(&self, x: &QVector) -> bool {
        self.equalities.iter().all(|c| c.value(x) == c.rhs)
            && self.inequalities.iter().all(|c| c.value(x) <= c.rhs)
    }

    pub fn equality_normals(&self) -> Vec<QVector> {
        self.equalities.iter().map(|c| c.normal.clone()).collect()
    }

    pub fn inequality_normals(&self) -> Vec<QVector> {
        self.inequalities.iter().map(|c| c.normal.clone()).collect()
    }

    fn lp_parts(&self) -> (Rows, Rows) {
        (
            self.equalities.iter().map(Constraint::as_pair).collect(),
            self.inequalities.iter().map(Constraint::as_pair).collect(),
        )
    }

    pub fn is_empty_set(&self) -> Result<bool> {
        let (eqs, les) = self.lp_parts();
        Ok(lp_feasible(&eqs, &les, self.dim)?.is_none())
    }

    /// Whether every point of this polyhedron satisfies `c` (as `<=`).
    pub fn implies(&self, c: &Constraint) -> Result<bool> {
        let (eqs, les) = self.lp_parts();
        Ok(match lp_minimize(&c.normal.neg(), &eqs, &les, self.dim)? {
            LpOutcome::Infeasible => true,
            LpOutcome::Unbounded => false,
            LpOutcome::Optimal { value, .. } => -value <= c.rhs,
        })
    }

    /// Point-set equality, decided by mutual constraint implication.
    pub fn same_set(&self, other: &HRep) -> Result<bool> {
        if self.dim != other.dim {
            return Ok(false);
        }
        for (a, b) in [(self, other), (other, self)] {
            for c in &b.inequalities {
                if !a.implies(c)? {
                    return Ok(false);
                }
            }
            for c in &b.equalities {
                let flipped = Constraint::new(c.normal.neg(), -&c.rhs);
                if !a.implies(c)? || !a.implies(&flipped)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Canonical form: RREF equalities, inequalities reduced modulo the
    /// equality pivots, primitive normals, sorted and deduplicated.
    /// Redundant inequalities are kept.
    pub fn canonical(&self) -> HRep {
        let rows: Vec<QVector> = self
            .equalities
            .iter()
            .map(|c| augmented(&c.normal, &c.rhs))
            .collect();
        let (basis, pivots) = row_space_basis(&rows, self.dim + 1);
        let mut equalities = Vec::new();
        let mut reducer = Vec::new();
        for (row, &p) in basis.iter().zip(&pivots) {
            if p == self.dim {
                // 0 = nonzero: inconsistent system; keep it visible.
                equalities.push(Constraint::new(QVector::zeros(self.dim), row[self.dim].clone()));
                continue;
            }
            let (normal, rhs) = split(row, self.dim);
            equalities.push(canonical_equality(Constraint::new(normal, rhs)));
            reducer.push((row.clone(), p));
        }
        let mut inequalities: Vec<Constraint> = self
            .inequalities
            .iter()
            .map(|c| reduce_modulo(&augmented(&c.normal, &c.rhs), &reducer))
            .map(|row| {
                let (normal, rhs) = split(&row, self.dim);
                Constraint::new(normal, rhs).primitive()
            })
            .filter(|c| !c.normal.is_zero() || c.rhs.is_negative())
            .collect();
        equalities.sort();
        inequalities.sort();
        inequalities.dedup();
        HRep {
            dim: self.dim,
            equalities,
            inequalities,
        }
    }
}

fn augmented(normal: &QVector, rhs: &Rational) -> QVector {
    let mut e = normal.entries().to_vec();
    e.push(rhs.clone());
    QVector::new(e)
}

fn split(row: &QVector, n: usize) -> (QVector, Rational) {
    (
        QVector::new(row.entries()[..n].to_vec()),
        row[n].clone(),
    )
}

fn reduce_modulo(row: &QVector, reducer: &[(QVector, usize)]) -> QVector {
    let mut r = row.clone();
    for (basis_row, p) in reducer {
        let f = r[*p].clone();
        if !f.is_zero() {
            r = r.add_scaled(&(-f), basis_row);
        }
    }
    r
}

fn canonical_equality(c: Constraint) -> Constraint {
    let c = c.primitive();
    match c.normal.first_nonzero() {
        Some(x) if x.is_negative() => Constraint::new(c.normal.neg(), -c.rhs),
        _ => c,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VRep {
    pub dim: usize,
    pub vertices: Vec<QVector>,
    pub rays: Vec<QVector>,
}

impl VRep {
    pub fn new(dim: usize, vertices: Vec<QVector>, rays: Vec<QVector>) -> Result<Self> {
        for v in vertices.iter().chain(&rays) {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
        }
        Ok(VRep {
            dim,
            vertices,
            rays,
        })
    }

    pub fn empty(dim: usize) -> Self {
        VRep {
            dim,
            vertices: Vec::new(),
            rays: Vec::new(),
        }
    }

    pub fn is_empty_set(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Drops duplicate and non-extreme vertices and redundant rays, and
    /// sorts what remains.
    pub fn minimized(&self) -> Result<VRep> {
        if self.vertices.is_empty() {
            return Ok(VRep::empty(self.dim));
        }
        let h = vrep_to_hrep(self)?;
        Ok(extreme_generators(self, &h))
    }
}

/// Keeps only generators that are extreme with respect to `h`.
fn extreme_generators(v: &VRep, h: &HRep) -> VRep {
    let n = v.dim;
    let eqs = h.equality_normals();
    let rank_with = |tight: Vec<QVector>| {
        let mut rows = eqs.clone();
        rows.extend(tight);
        rank_of(&rows, n)
    };
    let mut vertices: Vec<QVector> = v
        .vertices
        .iter()
        .filter(|x| {
            let tight = h
                .inequalities
                .iter()
                .filter(|c| c.is_tight(x))
                .map(|c| c.normal.clone())
                .collect();
            rank_with(tight) == n
        })
        .cloned()
        .collect();
    vertices.sort();
    vertices.dedup();
    let mut rays: Vec<QVector> = v
        .rays
        .iter()
        .filter(|r| !r.is_zero())
        .map(QVector::primitive)
        .filter(|r| {
            let tight = h
                .inequalities
                .iter()
                .filter(|c| c.normal.dot(r).is_zero())
                .map(|c| c.normal.clone())
                .collect();
            rank_with(tight) + 1 == n
        })
        .collect();
    rays.sort();
    rays.dedup();
    VRep {
        dim: n,
        vertices,
        rays,
    }
}

/// Both representations of one polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polyhedron {
    pub hrep: HRep,
    pub vrep: VRep,
}

impl Polyhedron {
    /// Builds the polyhedron `conv(vertices) + cone(rays)` with minimal generators.
    pub fn from_vrep(v: &VRep) -> Result<Self> {
        let hrep = vrep_to_hrep(v)?;
        let vrep = extreme_generators(v, &hrep);
        Ok(Polyhedron { hrep, vrep })
    }

    pub fn dim(&self) -> usize {
        self.hrep.dim
    }

    /// Affine dimension of the polyhedron.
    pub fn affine_dim(&self) -> usize {
        self.hrep.dim - self.hrep.equalities.len()
    }

    pub fn faces(&self) -> Result<Vec<Face>> {
        enumerate_faces(&self.hrep, &self.vrep)
    }

    pub fn max_compact_face_dim(&self) -> Result<usize> {
        max_compact_face_dim(&self.hrep, &self.vrep)
    }
}

/// Facet description of `conv(vertices) + cone(rays)`.
pub fn vrep_to_hrep(v: &VRep) -> Result<HRep> {
    if v.vertices.is_empty() {
        return Err(Error::NoVertices);
    }
    let n = v.dim;
    // y = (a, y0) is valid iff a.x + y0 >= 0 on the polyhedron.
    let mut gens: Vec<QVector> = Vec::with_capacity(v.vertices.len() + v.rays.len());
    for x in &v.vertices {
        gens.push(augmented(x, &Rational::from_integer(1.into())));
    }
    for r in &v.rays {
        gens.push(augmented(r, &Rational::zero()));
    }
    gens.sort();
    gens.dedup();
    let dual = dd::cone_generators(n + 1, &gens);

    // Lineality vectors give equalities a.x = -y0.
    let (basis, pivots) = row_space_basis(&dual.lineality, n + 1);
    debug_assert!(pivots.iter().all(|&p| p < n));
    let reducer: Vec<(QVector, usize)> = basis.iter().cloned().zip(pivots).collect();
    let mut equalities: Vec<Constraint> = basis
        .iter()
        .map(|row| {
            let (a, y0) = split(row, n);
            canonical_equality(Constraint::new(a, -y0))
        })
        .collect();

    // Extreme rays give facets -a.x <= y0; those with a = 0 are the face at infinity.
    let mut inequalities: Vec<Constraint> = dual
        .rays
        .iter()
        .map(|y| reduce_modulo(y, &reducer))
        .filter_map(|y| {
            let (a, y0) = split(&y, n);
            if a.is_zero() {
                None
            } else {
                Some(Constraint::new(a.neg(), y0).primitive())
            }
        })
        .collect();
    equalities.sort();
    inequalities.sort();
    inequalities.dedup();
    Ok(HRep {
        dim: n,
        equalities,
        inequalities,
    })
}

/// Vertices and extreme rays of a pointed polyhedron. An empty polyhedron
/// gives an empty V-representation.
pub fn hrep_to_vrep(h: &HRep) -> Result<VRep> {
    let n = h.dim;
    // y = (x, t) with t >= 0, c t - h.x >= 0, w.x - b t = 0.
    let mut cons = vec![QVector::unit(n + 1, n)];
    for c in &h.inequalities {
        cons.push(augmented(&c.normal.neg(), &c.rhs));
    }
    for c in &h.equalities {
        let row = augmented(&c.normal, &(-&c.rhs));
        cons.push(row.neg());
        cons.push(row);
    }
    let gens = dd::cone_generators(n + 1, &cons);
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for g in &gens.rays {
        let t = &g[n];
        let (x, _) = split(g, n);
        if t.is_positive() {
            vertices.push(x.scale(&t.recip()));
        } else if !x.is_zero() {
            rays.push(x.primitive());
        }
    }
    if vertices.is_empty() {
        return Ok(VRep::empty(n));
    }
    if !gens.lineality.is_empty() {
        return Err(Error::NotPointed);
    }
    vertices.sort();
    rays.sort();
    Ok(VRep {
        dim: n,
        vertices,
        rays,
    })
}

/// Minkowski sum with the nonnegative orthant.
pub fn add_orthant(v: &VRep) -> Result<VRep> {
    let n = v.dim;
    if v.vertices.is_empty() {
        return Ok(VRep::empty(n));
    }
    let mut rays: Vec<QVector> = v.rays.iter().map(QVector::primitive).collect();
    rays.extend((0..n).map(|i| QVector::unit(n, i)));
    rays.sort();
    rays.dedup();
    let mut vertices = v.vertices.clone();
    vertices.sort();
    vertices.dedup();
    let undominated: Vec<QVector> = vertices
        .iter()
        .filter(|u| {
            !vertices
                .iter()
                .any(|w| w != *u && w.le_componentwise(u))
        })
        .cloned()
        .collect();
    VRep {
        dim: n,
        vertices: undominated,
        rays,
    }
    .minimized()
}

/// Bitset of the inequalities of `h` that are tight at vertex `x`.
pub(crate) fn tight_at_vertex(h: &HRep, x: &QVector) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(h.inequalities.len());
    for (j, c) in h.inequalities.iter().enumerate() {
        if c.is_tight(x) {
            s.insert(j);
        }
    }
    s
}

/// Bitset of the inequalities of `h` whose normal is orthogonal to ray `r`.
pub(crate) fn tight_along_ray(h: &HRep, r: &QVector) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(h.inequalities.len());
    for (j, c) in h.inequalities.iter().enumerate() {
        if c.normal.dot(r).is_zero() {
            s.insert(j);
        }
    }
    s
}
