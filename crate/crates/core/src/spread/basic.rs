use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::spread_of_polytope;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::polyhedral::{cone_meets_open_negative_orthant, NormalCone};
use crate::qlinalg::{QMatrix, QVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicConditions {
    /// `mu(I) <= n`.
    pub mu_at_most_n: bool,
    /// `s = n - mu(I) + 1`.
    pub hyperplane_count: bool,
    /// Every column of the reduced hyperplane matrix has a positive entry.
    pub positive_in_every_column: bool,
    /// Some combination of the hyperplane normals is negative in every
    /// coordinate.
    pub negative_combination: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicReport {
    /// `mu(I) = spread(I)`.
    pub basic: bool,
    pub mu: usize,
    pub spread: usize,
    pub conditions: BasicConditions,
    /// Verdict of the hyperplane-count conditions together with the
    /// all-negative combination test. Always equal to `basic`.
    pub classifier: bool,
    /// Verdict of the hyperplane-count conditions together with the
    /// column sign test. Can differ from `basic` once there are two or more
    /// hyperplanes.
    pub column_sign_verdict: bool,
    /// When `mu(I) = n` and `np(I)` spans a hyperplane: whether that
    /// hyperplane's normal has all entries of one sign.
    pub single_hyperplane_sign: Option<bool>,
    /// Hyperplane normals of `np(I)` in reduced row echelon form.
    pub rref_matrix: QMatrix,
}

/// Decides whether `I` has no proper reduction, by comparing the generator
/// count with the spread and, independently, from the hyperplanes of
/// `np(I)` alone.
pub fn is_basic(i: &MonomialIdeal) -> Result<BasicReport> {
    let np = i.newton_polytope()?;
    let n = i.n();
    let mu = i.mu();
    let (spread, _, _) = spread_of_polytope(&np)?;
    let basic = mu == spread;

    let normals = np.hrep.equality_normals();
    let s = normals.len();
    let rref_matrix = if normals.is_empty() {
        QMatrix::zeros(0, n)
    } else {
        QMatrix::new(normals.clone(), n)?.rref().0
    };
    let positive_in_every_column = (0..n).all(|j| rref_matrix.rows().iter().any(|r| r[j].is_positive()));
    let negative_combination = cone_meets_open_negative_orthant(&NormalCone {
        dim: n,
        span_generators: normals.clone(),
        ray_generators: Vec::new(),
    })?
    .is_some();
    let conditions = BasicConditions {
        mu_at_most_n: mu <= n,
        hyperplane_count: s + mu == n + 1,
        positive_in_every_column,
        negative_combination,
    };
    let counts = conditions.mu_at_most_n && conditions.hyperplane_count;
    let classifier = counts && negative_combination;
    let column_sign_verdict = counts && positive_in_every_column;
    if classifier != basic {
        return Err(Error::Internal(format!(
            "({i}): generator count {mu}, spread {spread}, but the hyperplane test says basic={classifier}"
        )));
    }

    let single_hyperplane_sign = (mu == n && s == 1).then(|| one_sign(&normals[0]));
    if single_hyperplane_sign.is_some_and(|v| v != basic) {
        return Err(Error::Internal(format!(
            "({i}): single hyperplane sign test disagrees with basic={basic}"
        )));
    }

    Ok(BasicReport {
        basic,
        mu,
        spread,
        conditions,
        classifier,
        column_sign_verdict,
        single_hyperplane_sign,
        rref_matrix,
    })
}

/// Some scalar multiple of `w` is negative in every entry.
fn one_sign(w: &QVector) -> bool {
    let first = w.iter().next().filter(|x| !x.is_zero()).map(Signed::signum);
    first.is_some_and(|sg| w.iter().all(|x| x.signum() == sg))
}
