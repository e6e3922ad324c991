//! Incremental double description for homogeneous cones.
//!
//! Computes generators of `{y : a.y >= 0 for every constraint a}` as a
//! lineality basis plus extreme rays (modulo the lineality space).
//! Vertex/facet conversion in both directions reduces to this routine by
//! homogenizing and, for V to H, by dualizing.

use fixedbitset::FixedBitSet;
use num_traits::{Signed, Zero};

use crate::qlinalg::QVector;

pub(crate) struct ConeGenerators {
    pub lineality: Vec<QVector>,
    pub rays: Vec<QVector>,
}

struct Ray {
    v: QVector,
    /// Processed constraints that vanish on this ray.
    zeros: FixedBitSet,
}

pub(crate) fn cone_generators(dim: usize, constraints: &[QVector]) -> ConeGenerators {
    let m = constraints.len();
    let mut lineality: Vec<QVector> = (0..dim).map(|i| QVector::unit(dim, i)).collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in constraints.iter().enumerate() {
        debug_assert_eq!(a.len(), dim);
        if let Some(p) = lineality.iter().position(|l| !a.dot(l).is_zero()) {
            // The new constraint cuts the lineality space: l0 turns into a ray.
            let mut l0 = lineality.remove(p);
            let mut s = a.dot(&l0);
            if s.is_negative() {
                l0 = l0.neg();
                s = -s;
            }
            for l in lineality.iter_mut() {
                let t = a.dot(l);
                if !t.is_zero() {
                    *l = l.add_scaled(&(-(t / &s)), &l0).primitive();
                }
            }
            for r in rays.iter_mut() {
                let t = a.dot(&r.v);
                if !t.is_zero() {
                    r.v = r.v.add_scaled(&(-(t / &s)), &l0).primitive();
                }
                r.zeros.insert(k);
            }
            let mut zeros = FixedBitSet::with_capacity(m);
            zeros.insert_range(..k);
            rays.push(Ray {
                v: l0.primitive(),
                zeros,
            });
            continue;
        }

        let signs: Vec<_> = rays.iter().map(|r| a.dot(&r.v)).collect();
        if signs.iter().all(|s| !s.is_negative()) {
            for (r, s) in rays.iter_mut().zip(&signs) {
                if s.is_zero() {
                    r.zeros.insert(k);
                }
            }
            continue;
        }

        let pointed_dim = dim - lineality.len();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_negative()).collect();

        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let mut common = rays[p].zeros.clone();
                common.intersect_with(&rays[q].zeros);
                if common.count_ones(..) + 2 < pointed_dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == q || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                // (a.p) q - (a.q) p lies on the new hyperplane.
                let v = rays[q]
                    .v
                    .scale(&signs[p])
                    .add_scaled(&(-&signs[q]), &rays[p].v)
                    .primitive();
                let mut zeros = common;
                zeros.insert(k);
                created.push(Ray { v, zeros });
            }
        }

        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (mut r, s) in rays.into_iter().zip(&signs) {
            if s.is_negative() {
                continue;
            }
            if s.is_zero() {
                r.zeros.insert(k);
            }
            kept.push(r);
        }
        kept.extend(created);
        rays = kept;
    }

    ConeGenerators {
        lineality,
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<QVector>) -> Vec<QVector> {
        v.sort();
        v
    }

    #[test]
    fn unconstrained_space_is_all_lineality() {
        let g = cone_generators(3, &[]);
        assert_eq!(g.lineality.len(), 3);
        assert!(g.rays.is_empty());
    }

    #[test]
    fn nonnegative_orthant() {
        let cons: Vec<_> = (0..3).map(|i| QVector::unit(3, i)).collect();
        let g = cone_generators(3, &cons);
        assert!(g.lineality.is_empty());
        assert_eq!(sorted(g.rays), sorted(cons));
    }

    #[test]
    fn square_cone() {
        // Cone over the square [-1,1]^2 at height t: |x| <= t, |y| <= t.
        let cons = vec![
            QVector::from_i64s(&[-1, 0, 1]),
            QVector::from_i64s(&[1, 0, 1]),
            QVector::from_i64s(&[0, -1, 1]),
            QVector::from_i64s(&[0, 1, 1]),
        ];
        let g = cone_generators(3, &cons);
        assert!(g.lineality.is_empty());
        let expect = vec![
            QVector::from_i64s(&[1, 1, 1]),
            QVector::from_i64s(&[1, -1, 1]),
            QVector::from_i64s(&[-1, 1, 1]),
            QVector::from_i64s(&[-1, -1, 1]),
        ];
        assert_eq!(sorted(g.rays), sorted(expect));
    }

    #[test]
    fn halfspace_keeps_lineality() {
        let g = cone_generators(3, &[QVector::from_i64s(&[1, 1, 0])]);
        assert_eq!(g.lineality.len(), 2);
        assert_eq!(g.rays.len(), 1);
        assert!(QVector::from_i64s(&[1, 1, 0]).dot(&g.rays[0]).is_positive());
    }
}
