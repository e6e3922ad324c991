use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{minimalize, MonomialIdeal};

pub const DEFAULT_MAX_POWER: u64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionMethod {
    /// Decided by comparing the Newton polyhedra of `J` and `I`.
    NpEquality,
    /// Confirmed by an explicit `J I^n = I^(n+1)`.
    PowerWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub is_reduction: bool,
    pub method: ReductionMethod,
    /// Least `n <= max_power` with `J I^n = I^(n+1)`.
    pub witness_power: Option<u64>,
}

/// Whether `J ⊆ I` is a reduction of `I`.
///
/// For monomial ideals this holds exactly when `NP(J) = NP(I)`. Powers up
/// to `max_power` are also searched for a witness `J I^n = I^(n+1)`.
pub fn check_reduction(j: &MonomialIdeal, i: &MonomialIdeal, max_power: u64) -> Result<ReductionReport> {
    if j.ring() != i.ring() {
        return Err(Error::RingMismatch);
    }
    if let Some(g) = j.generators().iter().find(|g| !i.contains(g)) {
        return Err(Error::NotContained(g.display(i.ring()).to_string()));
    }
    let same_np = j.newton_polyhedron()?.hrep == i.newton_polyhedron()?.hrep;

    let mut witness_power = None;
    let mut power = i.clone();
    for n in 1..=max_power {
        let next = power.product(i)?;
        if j.product(&power)? == next {
            witness_power = Some(n);
            break;
        }
        power = next;
    }
    if witness_power.is_some() && !same_np {
        return Err(Error::Internal(format!(
            "({j}) I^{} = I^{} but the Newton polyhedra differ",
            witness_power.unwrap_or_default(),
            witness_power.unwrap_or_default() + 1
        )));
    }
    Ok(ReductionReport {
        is_reduction: same_np,
        method: if witness_power.is_some() {
            ReductionMethod::PowerWitness
        } else {
            ReductionMethod::NpEquality
        },
        witness_power,
    })
}

/// The ideal generated by the vertices of `NP(I)`, the smallest monomial
/// reduction of `I`.
pub fn minimal_monomial_reduction(i: &MonomialIdeal) -> Result<MonomialIdeal> {
    let np = i.newton_polyhedron()?;
    minimalize(i.ring(), &np.vrep.vertices)
}
