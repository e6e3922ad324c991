//! Deliberately naive reference computations for cross-checking the fast
//! paths. Nothing here shares code with the face lattice or with ideal
//! arithmetic beyond monomial multiplication.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::polyhedral::{HRep, VRep};
use crate::qlinalg::{lp_feasible, lp_minimize, rank_of, LpOutcome, QVector, Rational, Rows};

/// Largest number of constraint subsets examined before giving up.
pub const SUBSET_CAP: usize = 1 << 20;

/// Largest dimension of a bounded face, found by trying every set of
/// inequalities as a tight set.
///
/// Each nonempty candidate gets its implicit equalities from one LP per
/// remaining inequality, its dimension from their rank, and its
/// boundedness from LPs over its recession cone. Sets whose region is
/// empty are not extended.
pub fn compact_face_bruteforce(h: &HRep, v: &VRep) -> Result<usize> {
    if h.dim != v.dim {
        return Err(Error::DimensionMismatch {
            expected: h.dim,
            found: v.dim,
        });
    }
    let mut search = Search {
        h,
        visited: 0,
        seen: BTreeSet::new(),
        best: None,
    };
    search.visit(&mut Vec::new(), 0)?;
    search
        .best
        .map(|d| d as usize)
        .ok_or(Error::NoVertices)
}

struct Search<'a> {
    h: &'a HRep,
    visited: usize,
    seen: BTreeSet<Vec<usize>>,
    best: Option<isize>,
}

impl Search<'_> {
    fn visit(&mut self, tight: &mut Vec<usize>, from: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > SUBSET_CAP {
            return Err(Error::TooLarge(format!(
                "more than {SUBSET_CAP} constraint subsets"
            )));
        }
        let (eqs, les) = self.system(tight);
        if lp_feasible(&eqs, &les, self.h.dim)?.is_none() {
            return Ok(());
        }
        let closed = self.implicit_equalities(tight)?;
        if self.seen.insert(closed.clone()) {
            let mut rows = self.h.equality_normals();
            rows.extend(closed.iter().map(|&j| self.h.inequalities[j].normal.clone()));
            let dim = (self.h.dim - rank_of(&rows, self.h.dim)) as isize;
            if dim > self.best.unwrap_or(-1) && self.recession_cone_is_trivial(&closed)? {
                self.best = Some(dim);
            }
        }
        for j in from..self.h.inequalities.len() {
            tight.push(j);
            self.visit(tight, j + 1)?;
            tight.pop();
        }
        Ok(())
    }

    /// Equalities and `<=` rows of the region where `tight` holds with equality.
    fn system(&self, tight: &[usize]) -> (Rows, Rows) {
        let mut eqs: Rows = self
            .h
            .equalities
            .iter()
            .map(|c| (c.normal.clone(), c.rhs.clone()))
            .collect();
        let mut les = Vec::new();
        for (j, c) in self.h.inequalities.iter().enumerate() {
            let row = (c.normal.clone(), c.rhs.clone());
            if tight.contains(&j) {
                eqs.push(row);
            } else {
                les.push(row);
            }
        }
        (eqs, les)
    }

    /// Indices of inequalities that hold with equality on the whole region.
    fn implicit_equalities(&self, tight: &[usize]) -> Result<Vec<usize>> {
        let (eqs, les) = self.system(tight);
        let mut out = Vec::new();
        for (j, c) in self.h.inequalities.iter().enumerate() {
            let forced = tight.contains(&j)
                || matches!(
                    lp_minimize(&c.normal, &eqs, &les, self.h.dim)?,
                    LpOutcome::Optimal { value, .. } if value == c.rhs
                );
            if forced {
                out.push(j);
            }
        }
        Ok(out)
    }

    /// No nonzero `d` with `d` along every equality and tight row and
    /// non-increasing on the others.
    fn recession_cone_is_trivial(&self, closed: &[usize]) -> Result<bool> {
        let n = self.h.dim;
        let zero = Rational::zero();
        let mut eqs: Rows = self
            .h
            .equalities
            .iter()
            .map(|c| (c.normal.clone(), zero.clone()))
            .collect();
        let mut les = Vec::new();
        for (j, c) in self.h.inequalities.iter().enumerate() {
            if closed.contains(&j) {
                eqs.push((c.normal.clone(), zero.clone()));
            } else {
                les.push((c.normal.clone(), zero.clone()));
            }
        }
        for i in 0..n {
            for sign in [Rational::one(), -Rational::one()] {
                let mut probe = les.clone();
                probe.push((QVector::unit(n, i).scale(&-sign), -Rational::one()));
                if lp_feasible(&eqs, &probe, n)?.is_some() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Minimal elements under divisibility, by comparing every pair.
fn naive_minimal(gens: Vec<Monomial>) -> BTreeSet<Monomial> {
    let all: BTreeSet<Monomial> = gens.into_iter().collect();
    all.iter()
        .filter(|g| !all.iter().any(|h| h != *g && h.divides(g)))
        .cloned()
        .collect()
}

fn naive_product(a: &BTreeSet<Monomial>, b: &BTreeSet<Monomial>) -> BTreeSet<Monomial> {
    naive_minimal(a.iter().flat_map(|x| b.iter().map(move |y| x.mul(y))).collect())
}

/// Minimal generators of `I, I^2, ..., I^top`.
fn naive_powers(i: &MonomialIdeal, top: u64) -> Vec<BTreeSet<Monomial>> {
    let base = naive_minimal(i.generators().to_vec());
    let mut out = vec![base.clone()];
    for _ in 1..top {
        let next = naive_product(out.last().unwrap_or(&base), &base);
        out.push(next);
    }
    out
}

/// Least `n <= max_power` with `J I^n = I^(n+1)`, comparing minimal
/// generating sets.
pub fn reduction_by_definition(j: &MonomialIdeal, i: &MonomialIdeal, max_power: u64) -> Option<u64> {
    if max_power == 0 {
        return None;
    }
    let powers = naive_powers(i, max_power + 1);
    let jg = naive_minimal(j.generators().to_vec());
    (1..=max_power).find(|&n| naive_product(&jg, &powers[n as usize - 1]) == powers[n as usize])
}

/// Whether `x^(k b)` lies in `I^k` for some `k <= max_power`.
pub fn closure_membership_by_powers(i: &MonomialIdeal, b: &Monomial, max_power: u64) -> bool {
    if max_power == 0 || i.is_zero() {
        return false;
    }
    naive_powers(i, max_power)
        .iter()
        .zip(1u64..)
        .any(|(p, k)| {
            let kb = b.pow(k);
            p.iter().any(|g| g.divides(&kb))
        })
}
