use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{Face, HRep};
use crate::error::Result;
use crate::qlinalg::{lp_minimize, LpOutcome, QVector, Rational};

/// Normal cone of a polyhedron at a face: the span of the equality normals
/// plus the cone over the normals of the face's active inequalities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalCone {
    pub dim: usize,
    pub span_generators: Vec<QVector>,
    pub ray_generators: Vec<QVector>,
}

/// A point `sum(alphas[i] * span[i]) + sum(betas[j] * rays[j])` of a normal
/// cone, with every `betas[j] >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeCertificate {
    pub alphas: QVector,
    pub betas: QVector,
    pub combination: QVector,
}

pub fn normal_cone(h: &HRep, f: &Face) -> NormalCone {
    NormalCone {
        dim: h.dim,
        span_generators: h.equality_normals(),
        ray_generators: f
            .active_inequalities
            .iter()
            .map(|&j| h.inequalities[j].normal.clone())
            .collect(),
    }
}

/// Looks for a point in the relative interior of `c` whose inner product
/// with every direction in `directions` is at most -1.
///
/// Among all such points the one minimizing the sum of the ray
/// coefficients is returned, so the answer is deterministic.
pub fn relint_point_negative_on(
    c: &NormalCone,
    directions: &[QVector],
) -> Result<Option<ConeCertificate>> {
    let s = c.span_generators.len();
    let t = c.ray_generators.len();
    let unknowns = s + t;
    let gens: Vec<&QVector> = c.span_generators.iter().chain(&c.ray_generators).collect();
    let minus_one = -Rational::one();

    let mut les: Vec<(QVector, Rational)> = Vec::with_capacity(t + directions.len());
    for j in 0..t {
        let mut row = QVector::zeros(unknowns).into_entries();
        row[s + j] = minus_one.clone();
        les.push((QVector::new(row), minus_one.clone()));
    }
    for d in directions {
        let row: QVector = gens.iter().map(|g| g.dot(d)).collect();
        les.push((row, minus_one.clone()));
    }
    let mut objective = QVector::zeros(s).into_entries();
    objective.extend(std::iter::repeat_n(Rational::one(), t));

    match lp_minimize(&QVector::new(objective), &[], &les, unknowns)? {
        LpOutcome::Optimal { point, .. } => {
            let alphas = QVector::new(point.entries()[..s].to_vec());
            let betas = QVector::new(point.entries()[s..].to_vec());
            let mut combination = QVector::zeros(c.dim);
            for (coef, g) in point.iter().zip(&gens) {
                combination = combination.add_scaled(coef, g);
            }
            Ok(Some(ConeCertificate {
                alphas,
                betas,
                combination,
            }))
        }
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => unreachable!("ray coefficients are bounded below"),
    }
}

/// Whether the relative interior of `c` meets the open negative orthant.
/// The certificate's combination has every entry at most -1.
pub fn cone_meets_open_negative_orthant(c: &NormalCone) -> Result<Option<ConeCertificate>> {
    let axes: Vec<QVector> = (0..c.dim).map(|i| QVector::unit(c.dim, i)).collect();
    relint_point_negative_on(c, &axes)
}
