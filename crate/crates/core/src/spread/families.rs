//! Closed-form spreads for two families of intersections of primary ideals.

use serde::{Deserialize, Serialize};

use super::spread_value;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, PrimaryComponent, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    /// Value given by the closed form.
    pub spread: usize,
    /// Value computed from the Newton polytope of the intersection, when
    /// requested.
    pub computed: Option<usize>,
}

/// `n - r + 1` for an intersection of `r` primary ideals whose primes use
/// pairwise disjoint variables covering the ring.
pub fn spread_disjoint_primary(components: &[PrimaryComponent], crosscheck: bool) -> Result<FamilyReport> {
    let Some(first) = components.first() else {
        return Err(Error::Hypothesis("no components given".into()));
    };
    let ring = first.ideal().ring();
    if components.iter().any(|c| c.ideal().ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let n = ring.n();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (ci, c) in components.iter().enumerate() {
        for &v in c.prime_vars() {
            if let Some(prev) = owner[v] {
                return Err(Error::Hypothesis(format!(
                    "components {} and {} share the variable {}",
                    prev + 1,
                    ci + 1,
                    ring.variables()[v]
                )));
            }
            owner[v] = Some(ci);
        }
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        return Err(Error::Hypothesis(format!(
            "variable {} lies in no component's prime",
            ring.variables()[v]
        )));
    }
    let r = components.len();
    let spread = n - r + 1;

    let computed = if crosscheck {
        let mut meet = first.ideal().clone();
        for c in &components[1..] {
            meet = meet.intersect(c.ideal())?;
        }
        Some(spread_value(&meet)?)
    } else {
        None
    };
    agree(spread, computed)
}

/// `p^a ∩ q^b` for `p = (x_1..x_s, y_1..y_t)` and `q = (y_1..y_t, z_1..z_r)`.
pub fn two_prime_powers_ideal(s: usize, t: usize, r: usize, a: u64, b: u64) -> Result<MonomialIdeal> {
    if s == 0 || r == 0 {
        return Err(Error::Hypothesis(
            "both primes need a variable of their own (s >= 1 and r >= 1)".into(),
        ));
    }
    if a == 0 {
        return Err(Error::InvalidPower(a));
    }
    if b == 0 {
        return Err(Error::InvalidPower(b));
    }
    let names = (1..=s)
        .map(|i| format!("x{i}"))
        .chain((1..=t).map(|i| format!("y{i}")))
        .chain((1..=r).map(|i| format!("z{i}")));
    let ring = Ring::new(names)?;
    let n = ring.n();
    let prime = |vars: std::ops::Range<usize>| {
        let gens = vars
            .map(|v| {
                let mut e = vec![0u64; n];
                e[v] = 1;
                Monomial::from_u64s(&e)
            })
            .collect();
        MonomialIdeal::new(ring.clone(), gens)
    };
    let p = prime(0..s + t)?;
    let q = prime(s..n)?;
    p.power(a)?.intersect(&q.power(b)?)
}

/// `n - 1` for `p^a ∩ q^b` as in [`two_prime_powers_ideal`].
pub fn spread_two_prime_powers(s: usize, t: usize, r: usize, a: u64, b: u64, crosscheck: bool) -> Result<FamilyReport> {
    let ideal = two_prime_powers_ideal(s, t, r, a, b)?;
    let spread = s + t + r - 1;
    let computed = if crosscheck {
        Some(spread_value(&ideal)?)
    } else {
        None
    };
    agree(spread, computed)
}

fn agree(spread: usize, computed: Option<usize>) -> Result<FamilyReport> {
    match computed {
        Some(c) if c != spread => Err(Error::Internal(format!(
            "closed form gives {spread}, the Newton polytope gives {c}"
        ))),
        _ => Ok(FamilyReport { spread, computed }),
    }
}
