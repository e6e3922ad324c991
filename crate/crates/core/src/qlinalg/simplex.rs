//! Two-phase dense simplex over the rationals with Bland's rule.
//!
//! Unknowns are free; each is split as `x = p - q` with `p, q >= 0`.
//! Inequalities `a.x <= b` get a slack column. Rows with a negative
//! right-hand side are negated and seeded with an artificial column.

use num_traits::{Signed, Zero};

use super::{QVector, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { point: QVector, value: Rational },
    Unbounded,
    Infeasible,
}

/// Returns a point satisfying every constraint exactly, or `None` if the
/// system `{a.x = b} ∪ {a.x <= b}` has no solution.
pub fn lp_feasible(
    equalities: &[(QVector, Rational)],
    inequalities_le: &[(QVector, Rational)],
    unknowns: usize,
) -> Result<Option<QVector>> {
    let objective = QVector::zeros(unknowns);
    match lp_minimize(&objective, equalities, inequalities_le, unknowns)? {
        LpOutcome::Optimal { point, .. } => Ok(Some(point)),
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}

/// Minimizes `objective . x` subject to the constraints.
pub fn lp_minimize(
    objective: &QVector,
    equalities: &[(QVector, Rational)],
    inequalities_le: &[(QVector, Rational)],
    unknowns: usize,
) -> Result<LpOutcome> {
    check_len(objective, unknowns)?;
    for (a, _) in equalities.iter().chain(inequalities_le) {
        check_len(a, unknowns)?;
    }

    let n = unknowns;
    let n_slack = inequalities_le.len();
    let m = equalities.len() + n_slack;
    let slack_start = 2 * n;
    let art_start = slack_start + n_slack;

    // Decide which rows need an artificial variable.
    let mut rows: Vec<(Vec<Rational>, Rational, Option<usize>)> = Vec::with_capacity(m);
    let mut n_art = 0;
    let tagged = equalities
        .iter()
        .map(|c| (c, None))
        .chain(inequalities_le.iter().enumerate().map(|(i, c)| (c, Some(i))));
    for ((a, b), slack) in tagged {
        let mut row = vec![Rational::zero(); art_start];
        for j in 0..n {
            row[j] = a[j].clone();
            row[n + j] = -&a[j];
        }
        if let Some(s) = slack {
            row[slack_start + s] = Rational::from_integer(1.into());
        }
        let mut rhs = b.clone();
        let negated = rhs.is_negative();
        if negated {
            row.iter_mut().for_each(|x| *x = -&*x);
            rhs = -rhs;
        }
        let seed = match slack {
            Some(s) if !negated => Some(slack_start + s),
            _ => {
                n_art += 1;
                None
            }
        };
        rows.push((row, rhs, seed));
    }

    let ncols = art_start + n_art;
    let mut t = Tableau {
        a: Vec::with_capacity(m),
        rhs: Vec::with_capacity(m),
        basis: Vec::with_capacity(m),
        z: vec![Rational::zero(); ncols],
        value: Rational::zero(),
    };
    let mut next_art = art_start;
    for (mut row, rhs, seed) in rows {
        row.resize(ncols, Rational::zero());
        let basic = match seed {
            Some(col) => col,
            None => {
                row[next_art] = Rational::from_integer(1.into());
                next_art += 1;
                next_art - 1
            }
        };
        t.a.push(row);
        t.rhs.push(rhs);
        t.basis.push(basic);
    }

    // Phase 1: minimize the sum of artificials.
    if n_art > 0 {
        let mut cost = vec![Rational::zero(); ncols];
        for c in cost.iter_mut().skip(art_start) {
            *c = Rational::from_integer(1.into());
        }
        t.set_cost(&cost);
        let status = t.run(ncols);
        debug_assert!(matches!(status, Status::Optimal));
        if t.value.is_positive() {
            return Ok(LpOutcome::Infeasible);
        }
        t.expel_artificials(art_start);
    }

    // Phase 2 over the structural and slack columns only.
    let mut cost = vec![Rational::zero(); ncols];
    for j in 0..n {
        cost[j] = objective[j].clone();
        cost[n + j] = -&objective[j];
    }
    t.set_cost(&cost);
    match t.run(art_start) {
        Status::Unbounded => Ok(LpOutcome::Unbounded),
        Status::Optimal => {
            let mut values = vec![Rational::zero(); ncols];
            for (i, &b) in t.basis.iter().enumerate() {
                values[b] = t.rhs[i].clone();
            }
            let point: QVector = (0..n).map(|j| &values[j] - &values[n + j]).collect();
            let value = objective.dot(&point);
            Ok(LpOutcome::Optimal { point, value })
        }
    }
}

fn check_len(v: &QVector, n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    Ok(())
}

enum Status {
    Optimal,
    Unbounded,
}

struct Tableau {
    a: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs.
    z: Vec<Rational>,
    /// Current objective value.
    value: Rational,
}

impl Tableau {
    fn set_cost(&mut self, cost: &[Rational]) {
        self.z = cost.to_vec();
        self.value = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (zj, aij) in self.z.iter_mut().zip(&self.a[i]) {
                if !aij.is_zero() {
                    *zj -= cb * aij;
                }
            }
            self.value += cb * &self.rhs[i];
        }
    }

    /// Bland's rule: lowest-index improving column enters, ties in the
    /// ratio test go to the lowest-index basic variable.
    fn run(&mut self, allowed: usize) -> Status {
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.z[j].is_negative()) else {
                return Status::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.a.len() {
                let aij = &self.a[i][enter];
                if !aij.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / aij;
                let better = match &leave {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return Status::Unbounded;
            };
            self.pivot(row, enter);
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.a[r][c].recip();
        for x in self.a[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let pivot_row = std::mem::take(&mut self.a[r]);
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.a.len() {
            if i == r || self.a[i][c].is_zero() {
                continue;
            }
            let f = self.a[i][c].clone();
            for (x, p) in self.a[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.z[c].is_zero() {
            let f = self.z[c].clone();
            for (x, p) in self.z.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            self.value += &f * &pivot_rhs;
        }
        self.a[r] = pivot_row;
        self.basis[r] = c;
    }

    /// After a zero-valued phase 1, pivot remaining artificials out of the
    /// basis; rows where that is impossible are redundant and dropped.
    fn expel_artificials(&mut self, art_start: usize) {
        let mut i = 0;
        while i < self.a.len() {
            if self.basis[i] < art_start {
                i += 1;
                continue;
            }
            match (0..art_start).find(|&j| !self.a[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.a.remove(i);
                    self.rhs.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{rat, rat_frac, Rows};
    use proptest::prelude::*;

    fn c(v: &[i64], b: i64) -> (QVector, Rational) {
        (QVector::from_i64s(v), rat(b))
    }

    fn satisfies(x: &QVector, eqs: &[(QVector, Rational)], les: &[(QVector, Rational)]) -> bool {
        eqs.iter().all(|(a, b)| a.dot(x) == *b) && les.iter().all(|(a, b)| a.dot(x) <= *b)
    }

    #[test]
    fn contradictory_bounds_are_infeasible() {
        let les = [c(&[1], -1), c(&[-1], -1)];
        assert_eq!(lp_feasible(&[], &les, 1).unwrap(), None);
    }

    #[test]
    fn single_upper_bound() {
        let les = [c(&[1], 5)];
        let x = lp_feasible(&[], &les, 1).unwrap().unwrap();
        assert!(x[0] <= rat(5));
    }

    #[test]
    fn negative_combination_of_a_hyperplane_and_a_halfspace() {
        // unknowns (alpha, beta): alpha*(-2,-2,1) + beta*(1,-1,-1) <= -1, beta >= 1
        let les = [
            c(&[-2, 1], -1),
            c(&[-2, -1], -1),
            c(&[1, -1], -1),
            c(&[0, -1], -1),
        ];
        let x = lp_feasible(&[], &les, 2).unwrap().unwrap();
        assert!(satisfies(&x, &[], &les));
        // The hand-picked point alpha = 2, beta = 3 is also feasible.
        assert!(satisfies(&QVector::from_i64s(&[2, 3]), &[], &les));
        // Minimizing beta lands exactly on it.
        match lp_minimize(&QVector::from_i64s(&[0, 1]), &[], &les, 2).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(point, QVector::from_i64s(&[2, 3]));
                assert_eq!(value, rat(3));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn equalities_and_unboundedness() {
        let eqs = [c(&[1, 1], 1)];
        let x = lp_feasible(&eqs, &[], 2).unwrap().unwrap();
        assert!(satisfies(&x, &eqs, &[]));
        assert_eq!(
            lp_minimize(&QVector::from_i64s(&[1, 0]), &eqs, &[], 2).unwrap(),
            LpOutcome::Unbounded
        );
        let les = [c(&[-1, 0], 0), c(&[0, -1], 0)];
        match lp_minimize(&QVector::from_i64s(&[1, 2]), &eqs, &les, 2).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(point, QVector::from_i64s(&[1, 0]));
                assert_eq!(value, rat(1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn redundant_equalities_are_handled() {
        let eqs = [c(&[1, 1], 2), c(&[2, 2], 4), c(&[1, -1], 0)];
        let x = lp_feasible(&eqs, &[], 2).unwrap().unwrap();
        assert_eq!(x, QVector::from_i64s(&[1, 1]));
        let bad = [c(&[1, 1], 2), c(&[2, 2], 5)];
        assert_eq!(lp_feasible(&bad, &[], 2).unwrap(), None);
    }

    #[test]
    fn no_unknowns() {
        assert_eq!(lp_feasible(&[], &[c(&[], -1)], 0).unwrap(), None);
        assert!(lp_feasible(&[], &[c(&[], 0)], 0).unwrap().is_some());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let r = lp_feasible(&[], &[c(&[1, 2], 0)], 3);
        assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn fractional_optimum() {
        // min -x - y s.t. 2x + y <= 1, x + 3y <= 1
        let les = [c(&[2, 1], 1), c(&[1, 3], 1), c(&[-1, 0], 0), c(&[0, -1], 0)];
        match lp_minimize(&QVector::from_i64s(&[-1, -1]), &[], &les, 2).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(point, QVector::new(vec![rat_frac(2, 5), rat_frac(1, 5)]));
                assert_eq!(value, rat_frac(-3, 5));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    fn system() -> impl Strategy<Value = (Rows, Rows)> {
        (1usize..4).prop_flat_map(|n| {
            let row = (proptest::collection::vec(-3i64..4, n), -4i64..5)
                .prop_map(|(a, b)| (QVector::from_i64s(&a), rat(b)));
            (
                proptest::collection::vec(row.clone(), 0..2),
                proptest::collection::vec(row, 1..6),
            )
        })
    }

    proptest! {
        #[test]
        fn feasible_points_satisfy_all_constraints((eqs, les) in system()) {
            let n = les[0].0.len();
            if let Some(x) = lp_feasible(&eqs, &les, n).unwrap() {
                prop_assert!(satisfies(&x, &eqs, &les));
            }
        }

        #[test]
        fn outcome_is_invariant_under_positive_scaling(
            (eqs, les) in system(),
            num in 1i64..7,
            den in 1i64..7,
            pick in 0usize..6,
        ) {
            let n = les[0].0.len();
            let k = rat_frac(num, den);
            let mut scaled = les.clone();
            let i = pick % scaled.len();
            scaled[i] = (scaled[i].0.scale(&k), &scaled[i].1 * &k);
            let a = lp_feasible(&eqs, &les, n).unwrap().is_some();
            let b = lp_feasible(&eqs, &scaled, n).unwrap().is_some();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn output_is_deterministic((eqs, les) in system()) {
            let n = les[0].0.len();
            prop_assert_eq!(lp_feasible(&eqs, &les, n).unwrap(), lp_feasible(&eqs, &les, n).unwrap());
        }
    }
}
