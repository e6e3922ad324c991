//! Exact rational scalars, vectors and matrices, plus an exact simplex solver.
//!
//! Everything here is arbitrary precision; no routine ever rounds. Rationals
//! are kept in lowest terms by `num-rational` after every operation.

mod simplex;

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use simplex::{lp_feasible, lp_minimize, LpOutcome};

pub type Rational = num_rational::BigRational;

/// Linear rows `(a, b)` standing for `a.x = b` or `a.x <= b`.
pub type Rows = Vec<(QVector, Rational)>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Serde adapter storing a [`Rational`] as a `"p/q"` string.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text)
            .ok_or_else(|| serde::de::Error::custom(format!("invalid rational `{text}`")))
    }
}

/// A vector of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        QVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        QVector(vec![Rational::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_i64s(xs: &[i64]) -> Self {
        QVector(xs.iter().map(|&x| rat(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rational) -> QVector {
        QVector(self.0.iter().map(|a| a * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, k: &Rational, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn neg(&self) -> QVector {
        QVector(self.0.iter().map(|a| -a).collect())
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &QVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn all_negative(&self) -> bool {
        self.0.iter().all(Signed::is_negative)
    }

    /// Positive factor turning this vector into a primitive integer vector
    /// (integer entries with gcd 1). Returns `None` for the zero vector.
    pub fn primitive_factor(&self) -> Option<Rational> {
        if self.is_zero() {
            return None;
        }
        let lcm_den = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let gcd_num = self
            .0
            .iter()
            .map(|x| (x.numer() * &lcm_den) / x.denom())
            .fold(BigInt::zero(), |acc, x| acc.gcd(&x));
        Some(Rational::new(lcm_den, gcd_num))
    }

    /// The primitive integer vector on the same ray. The zero vector maps to itself.
    pub fn primitive(&self) -> QVector {
        match self.primitive_factor() {
            Some(k) => self.scale(&k),
            None => self.clone(),
        }
    }

    pub fn first_nonzero(&self) -> Option<&Rational> {
        self.0.iter().find(|x| !x.is_zero())
    }
}

impl Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for QVector {
    fn from(v: Vec<Rational>) -> Self {
        QVector(v)
    }
}

impl FromIterator<Rational> for QVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        QVector(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a QVector {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for QVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.0.iter().map(format_rational).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .iter()
            .map(|t| {
                parse_rational(t)
                    .ok_or_else(|| serde::de::Error::custom(format!("invalid rational `{t}`")))
            })
            .collect()
    }
}

/// A dense rectangular rational matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMatrix {
    rows: Vec<QVector>,
    ncols: usize,
}

impl QMatrix {
    pub fn new(rows: Vec<QVector>, ncols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Ragged);
        }
        Ok(QMatrix { rows, ncols })
    }

    /// Builds a matrix from rows; the column count is taken from the first row.
    pub fn from_rows(rows: Vec<QVector>) -> Result<Self> {
        let ncols = rows.first().map_or(0, QVector::len);
        Self::new(rows, ncols)
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| QVector::from_i64s(r)).collect())
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        QMatrix {
            rows: vec![QVector::zeros(ncols); nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        QMatrix {
            rows: (0..n).map(|i| QVector::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[QVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<QVector> {
        self.rows
    }

    pub fn transpose(&self) -> QMatrix {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        QMatrix {
            rows,
            ncols: self.rows.len(),
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Zero rows are kept at the bottom so the shape is unchanged.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut a: Vec<Vec<Rational>> = self.rows.iter().map(|r| r.0.clone()).collect();
        let m = a.len();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            if row == m {
                break;
            }
            let Some(p) = (row..m).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            let inv = a[row][col].recip();
            for x in a[row].iter_mut() {
                *x *= &inv;
            }
            for i in 0..m {
                if i == row || a[i][col].is_zero() {
                    continue;
                }
                let factor = a[i][col].clone();
                let (src, dst) = if i < row {
                    let (lo, hi) = a.split_at_mut(row);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[row], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()).skip(col) {
                    if !s.is_zero() {
                        *d -= &factor * s;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rows = a.into_iter().map(QVector).collect();
        (
            QMatrix {
                rows,
                ncols: self.ncols,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    m.rref()
}

pub fn rank(m: &QMatrix) -> usize {
    m.rank()
}

/// Rank of a list of equal-length vectors.
pub fn rank_of(vectors: &[QVector], ncols: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix {
        rows: vectors.to_vec(),
        ncols,
    }
    .rank()
}

/// Nonzero rows of the RREF of `vectors`: a canonical basis of their span.
pub fn row_space_basis(vectors: &[QVector], ncols: usize) -> (Vec<QVector>, Vec<usize>) {
    let (r, pivots) = QMatrix {
        rows: vectors.to_vec(),
        ncols,
    }
    .rref();
    let k = pivots.len();
    (r.rows.into_iter().take(k).collect(), pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_identity_is_fixed() {
        let id = QMatrix::identity(2);
        let (r, p) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let m = QMatrix::from_i64s(&[&[2, 4], &[1, 2]]).unwrap();
        let (r, p) = rref(&m);
        assert_eq!(r, QMatrix::from_i64s(&[&[1, 2], &[0, 0]]).unwrap());
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_two_hyperplane_normals() {
        // Worked by hand: subtract row 2 from row 1.
        let m = QMatrix::from_i64s(&[&[1, 1, 1, 0, 0], &[0, 0, 1, 1, 1]]).unwrap();
        let (r, p) = rref(&m);
        assert_eq!(
            r,
            QMatrix::from_i64s(&[&[1, 1, 0, -1, -1], &[0, 0, 1, 1, 1]]).unwrap()
        );
        assert_eq!(p, vec![0, 2]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn zero_matrix_rref_and_rank() {
        let z = QMatrix::zeros(3, 4);
        let (r, p) = rref(&z);
        assert_eq!(r, z);
        assert!(p.is_empty());
        assert_eq!(rank(&z), 0);
        assert_eq!(rank(&QMatrix::identity(5)), 5);
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![QVector::from_i64s(&[1, 2]), QVector::from_i64s(&[1])];
        assert_eq!(QMatrix::from_rows(rows), Err(Error::Ragged));
    }

    #[test]
    fn primitive_vectors() {
        let v = QVector::new(vec![rat_frac(1, 2), rat_frac(-3, 4), rat(0)]);
        assert_eq!(v.primitive(), QVector::from_i64s(&[2, -3, 0]));
        assert_eq!(
            QVector::from_i64s(&[4, -6]).primitive(),
            QVector::from_i64s(&[2, -3])
        );
        assert!(QVector::zeros(3).primitive().is_zero());
    }

    #[test]
    fn rational_text_round_trip() {
        for r in [rat(0), rat(-4), rat_frac(7, 3), rat_frac(-1, 9)] {
            assert_eq!(parse_rational(&format_rational(&r)), Some(r));
        }
        assert_eq!(parse_rational("5"), Some(rat(5)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(format_rational(&rat(3)), "3/1");
    }

    fn small_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(m, n)| {
            proptest::collection::vec(proptest::collection::vec(-4i64..5, n), m).prop_map(
                move |rows| {
                    QMatrix::new(rows.iter().map(|r| QVector::from_i64s(r)).collect(), n)
                        .unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let (r, p) = m.rref();
            let (r2, p2) = r.rref();
            prop_assert_eq!(r, r2);
            prop_assert_eq!(p, p2);
        }

        #[test]
        fn rank_equals_transpose_rank(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rref_preserves_row_space(m in small_matrix()) {
            let (r, _) = m.rref();
            let mut stacked = m.rows().to_vec();
            stacked.extend(r.rows().iter().cloned());
            prop_assert_eq!(rank_of(&stacked, m.ncols()), m.rank());
        }
    }
}
