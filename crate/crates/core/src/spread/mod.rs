//! Analytic spread of monomial ideals from their Newton polytopes.
//!
//! The spread is one more than the largest dimension of a face of `np(I)`
//! whose normal cone meets the open negative orthant; those are exactly the
//! compact faces of `NP(I)`. The halfspace/hyperplane bound counts how many
//! facet normals must be added to the hyperplane normals before some
//! combination becomes negative in every coordinate.

mod basic;
mod families;
mod reduction;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::polyhedral::{
    cone_meets_open_negative_orthant, normal_cone, relint_point_negative_on, Face, FaceLattice, HRep,
    NormalCone, Polyhedron,
};
use crate::qlinalg::{QVector, Rational};

pub use basic::{is_basic, BasicConditions, BasicReport};
pub use families::{
    spread_disjoint_primary, spread_two_prime_powers, two_prime_powers_ideal, FamilyReport,
};
pub use reduction::{check_reduction, minimal_monomial_reduction, ReductionMethod, ReductionReport, DEFAULT_MAX_POWER};

/// Coefficients of an all-negative combination of hyperplane and facet
/// normals of `np(I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    /// One per hyperplane, in H-representation order.
    pub alphas: QVector,
    /// Indices of the facet inequalities with nonzero coefficient.
    pub beta_support: Vec<usize>,
    /// One per facet inequality; zero outside `beta_support`.
    pub betas: QVector,
    /// The combination itself; every entry is at most -1.
    pub combination: QVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    /// `n + 1 - (s + k)`, or `n + 1` when no certificate exists.
    pub bound: usize,
    pub s: usize,
    pub k: Option<usize>,
    pub certificate: Option<BoundCertificate>,
    /// The hyperplanes and facets the certificate refers to.
    pub np: HRep,
}

impl BoundReport {
    pub fn is_vacuous(&self) -> bool {
        self.certificate.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpreadReport {
    pub n: usize,
    pub mu: usize,
    pub spread: usize,
    /// A face of `np(I)` of dimension `spread - 1` that is a compact face
    /// of `NP(I)`.
    pub witness_face: Face,
    /// A functional negative in every coordinate that is maximized on
    /// `np(I)` exactly along the witness face.
    pub witness_functional: QVector,
    pub bound: usize,
    pub s: usize,
    pub k: Option<usize>,
    pub certificate: Option<BoundCertificate>,
    /// `bound - spread`; positive values are cases where the bound is not
    /// attained.
    pub gap: usize,
}

/// Exact spread together with the halfspace/hyperplane bound.
pub fn analytic_spread(i: &MonomialIdeal) -> Result<SpreadReport> {
    let np = i.newton_polytope()?;
    let (spread, witness_face, witness_functional) = spread_of_polytope(&np)?;
    let b = bound_of_polytope(&np)?;
    if b.certificate.is_some() && spread > b.bound {
        return Err(Error::Internal(format!(
            "spread {spread} exceeds the bound {} for ({i})",
            b.bound
        )));
    }
    Ok(SpreadReport {
        n: i.n(),
        mu: i.mu(),
        spread,
        witness_face,
        witness_functional,
        bound: b.bound,
        s: b.s,
        k: b.k,
        certificate: b.certificate,
        gap: b.bound.saturating_sub(spread),
    })
}

/// Spread alone, skipping the bound search.
pub fn spread_value(i: &MonomialIdeal) -> Result<usize> {
    Ok(spread_of_polytope(&i.newton_polytope()?)?.0)
}

/// Walks the faces of `np` from the largest dimension down and stops at
/// the first level holding a face exposed by a strictly decreasing
/// functional.
pub(crate) fn spread_of_polytope(np: &Polyhedron) -> Result<(usize, Face, QVector)> {
    let lattice = FaceLattice::new(&np.hrep, &np.vrep)?;
    for level in lattice.levels() {
        for f in level {
            if let Some(cert) = cone_meets_open_negative_orthant(&normal_cone(&np.hrep, &f))? {
                let spread = usize::try_from(f.dim + 1).map_err(|_| Error::Internal("empty witness face".into()))?;
                return Ok((spread, f, cert.combination));
            }
        }
    }
    Err(Error::Internal(
        "no face of the Newton polytope is exposed by a decreasing functional".into(),
    ))
}

/// `n + 1 - (s + k)` with the least `k`, searching facet subsets by size
/// and then lexicographically.
pub fn spread_bound(i: &MonomialIdeal) -> Result<BoundReport> {
    bound_of_polytope(&i.newton_polytope()?)
}

fn bound_of_polytope(np: &Polyhedron) -> Result<BoundReport> {
    let h = &np.hrep;
    let n = h.dim;
    let s = h.equalities.len();
    let t = h.inequalities.len();
    let axes: Vec<QVector> = (0..n).map(|j| QVector::unit(n, j)).collect();
    for size in 0..=t {
        for subset in Combinations::new(t, size) {
            let cone = NormalCone {
                dim: n,
                span_generators: h.equality_normals(),
                ray_generators: subset.iter().map(|&j| h.inequalities[j].normal.clone()).collect(),
            };
            let Some(cert) = relint_point_negative_on(&cone, &axes)? else {
                continue;
            };
            let mut betas = vec![Rational::default(); t];
            for (&j, b) in subset.iter().zip(cert.betas.iter()) {
                betas[j] = b.clone();
            }
            let bound = (n + 1).checked_sub(s + size).ok_or_else(|| {
                Error::Internal(format!("s + k = {} exceeds n + 1 = {}", s + size, n + 1))
            })?;
            return Ok(BoundReport {
                bound,
                s,
                k: Some(size),
                certificate: Some(BoundCertificate {
                    alphas: cert.alphas,
                    beta_support: subset,
                    betas: QVector::new(betas),
                    combination: cert.combination,
                }),
                np: h.clone(),
            });
        }
    }
    Ok(BoundReport {
        bound: n + 1,
        s,
        k: None,
        certificate: None,
        np: h.clone(),
    })
}

/// `size`-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, size: usize) -> Self {
        Combinations {
            n,
            current: (size <= n).then(|| (0..size).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let advanced = (0..k).rev().find(|&i| next[i] < self.n - k + i);
        self.current = advanced.map(|i| {
            next[i] += 1;
            for j in i + 1..k {
                next[j] = next[j - 1] + 1;
            }
            next
        });
        Some(out)
    }
}

#[cfg(test)]
mod tests;
