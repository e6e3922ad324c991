//! Monomial ideals over a named polynomial ring, identified with their
//! minimal exponent vectors.

mod parse;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyhedral::{add_orthant, Polyhedron, VRep};
use crate::qlinalg::{QVector, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct Ring {
    variables: Vec<String>,
}

impl Ring {
    /// Names must be unique identifiers (a letter or `_`, then letters,
    /// digits or `_`).
    pub fn new<S: Into<String>>(variables: impl IntoIterator<Item = S>) -> Result<Self> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        let mut seen = BTreeSet::new();
        for v in &variables {
            let mut chars = v.chars();
            let ok_start = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_');
            if !ok_start || !chars.all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::InvalidRing(format!("bad variable name {v:?}")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("variable {v} listed twice")));
            }
        }
        Ok(Ring { variables })
    }

    /// Parses a comma-separated list such as `x,y,z`.
    pub fn parse(list: &str) -> Result<Self> {
        Ring::new(list.split(',').map(str::trim))
    }

    pub fn n(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// The ring with `extra` appended to the variable list.
    pub fn extend(&self, extra: &[String]) -> Result<Ring> {
        if let Some(dup) = extra.iter().find(|e| self.index_of(e).is_some()) {
            return Err(Error::NameCollision(dup.clone()));
        }
        Ring::new(self.variables.iter().chain(extra).cloned())
    }
}

impl TryFrom<Vec<String>> for Ring {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        Ring::new(v)
    }
}

impl From<Ring> for Vec<String> {
    fn from(r: Ring) -> Self {
        r.variables
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.variables.join(","))
    }
}

/// Exponent vector of a monomial.
///
/// Serialized as a list of integers; exponents too large for `u64` are
/// written as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(#[serde(with = "serde_exponents")] Vec<BigUint>);

mod serde_exponents {
    use num_bigint::BigUint;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Exp {
        Small(u64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|e| u64::try_from(e).map_or_else(|_| Exp::Big(e.to_string()), Exp::Small))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Exp>::deserialize(d)?
            .into_iter()
            .map(|e| match e {
                Exp::Small(n) => Ok(BigUint::from(n)),
                Exp::Big(t) => t.parse().map_err(D::Error::custom),
            })
            .collect()
    }
}

impl Monomial {
    pub fn new(exponents: Vec<BigUint>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![BigUint::zero(); n])
    }

    pub fn from_u64s(exponents: &[u64]) -> Self {
        Monomial(exponents.iter().map(|&e| BigUint::from(e)).collect())
    }

    /// Fails on negative or fractional entries.
    pub fn from_qvector(v: &QVector) -> Result<Self> {
        v.iter()
            .map(|x| {
                if !x.is_integer() {
                    Err(Error::NonIntegerExponent { value: x.to_string() })
                } else if x.is_negative() {
                    Err(Error::NegativeExponent { value: x.to_string() })
                } else {
                    Ok(x.to_integer().magnitude().clone())
                }
            })
            .collect::<Result<_>>()
            .map(Monomial)
    }

    pub fn to_qvector(&self) -> QVector {
        self.0
            .iter()
            .map(|e| Rational::from_integer(BigInt::from(e.clone())))
            .collect()
    }

    pub fn exponents(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> BigUint {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        )
    }

    pub fn pow(&self, m: u64) -> Monomial {
        Monomial(self.0.iter().map(|e| e * m).collect())
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    pub fn pad(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(e.len() + extra, BigUint::zero());
        Monomial(e)
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        DisplayMonomial(self, ring)
    }
}

struct DisplayMonomial<'a>(&'a Monomial, &'a Ring);

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let DisplayMonomial(m, ring) = self;
        let sep = if ring.variables.iter().all(|v| v.chars().count() == 1) { "" } else { "*" };
        let mut first = true;
        for (e, name) in m.0.iter().zip(&ring.variables) {
            if e.is_zero() {
                continue;
            }
            if !first {
                f.write_str(sep)?;
            }
            first = false;
            f.write_str(name)?;
            if !e.is_one() {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Divisibility-minimal subset, sorted in decreasing lexicographic order.
fn minimal(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawIdeal")]
pub struct MonomialIdeal {
    ring: Ring,
    generators: Vec<Monomial>,
}

#[derive(Deserialize)]
struct RawIdeal {
    ring: Ring,
    generators: Vec<Monomial>,
}

impl TryFrom<RawIdeal> for MonomialIdeal {
    type Error = Error;
    fn try_from(raw: RawIdeal) -> Result<Self> {
        MonomialIdeal::new(raw.ring, raw.generators)
    }
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != ring.n()) {
            return Err(Error::DimensionMismatch {
                expected: ring.n(),
                found: g.len(),
            });
        }
        Ok(MonomialIdeal {
            ring,
            generators: minimal(gens),
        })
    }

    pub fn from_u64s(ring: Ring, gens: &[&[u64]]) -> Result<Self> {
        MonomialIdeal::new(ring, gens.iter().map(|g| Monomial::from_u64s(g)).collect())
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal {
            ring,
            generators: Vec::new(),
        }
    }

    pub fn unit(ring: Ring) -> Self {
        let one = Monomial::one(ring.n());
        MonomialIdeal {
            ring,
            generators: vec![one],
        }
    }

    /// Parses `xy, x^2z, x1^2*x2` style text in `ring`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        parse::parse_ideal(ring, text)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.degree().is_zero())
    }

    pub fn exponent_vectors(&self) -> Vec<QVector> {
        self.generators.iter().map(Monomial::to_qvector).collect()
    }

    /// Indices of variables appearing in some generator.
    pub fn support(&self) -> Vec<usize> {
        let s: BTreeSet<usize> = self.generators.iter().flat_map(Monomial::support).collect();
        s.into_iter().collect()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn with_gens(&self, gens: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            generators: minimal(gens),
        }
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.mul(b)))
            .collect();
        Ok(self.with_gens(gens))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        Ok(self.with_gens(self.generators.iter().chain(&other.generators).cloned().collect()))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(self.with_gens(gens))
    }

    /// `I^m` for `m >= 1`.
    pub fn power(&self, m: u64) -> Result<MonomialIdeal> {
        if m < 1 {
            return Err(Error::InvalidPower(m));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I^[m]`: every generator raised to the `m`-th power.
    pub fn frobenius_power(&self, m: u64) -> Result<MonomialIdeal> {
        if m < 1 {
            return Err(Error::InvalidPower(m));
        }
        Ok(self.with_gens(self.generators.iter().map(|g| g.pow(m)).collect()))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .map(|g| {
                Monomial(
                    g.0.iter()
                        .map(|e| if e.is_zero() { BigUint::zero() } else { BigUint::one() })
                        .collect(),
                )
            })
            .collect();
        self.with_gens(gens)
    }

    /// The same generators in `ring ∪ extra`, with zero exponents on the new
    /// variables.
    pub fn embed(&self, extra: &[String]) -> Result<MonomialIdeal> {
        let ring = self.ring.extend(extra)?;
        let gens = self.generators.iter().map(|g| g.pad(extra.len())).collect();
        Ok(MonomialIdeal {
            ring,
            generators: gens,
        })
    }

    fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    /// `np(I)`, the convex hull of the generator exponents.
    pub fn newton_polytope(&self) -> Result<Polyhedron> {
        self.require_nonzero()?;
        Polyhedron::from_vrep(&VRep::new(self.n(), self.exponent_vectors(), Vec::new())?)
    }

    /// `NP(I) = np(I) + R^n_{>=0}`.
    pub fn newton_polyhedron(&self) -> Result<Polyhedron> {
        self.require_nonzero()?;
        let v = VRep::new(self.n(), self.exponent_vectors(), Vec::new())?;
        Polyhedron::from_vrep(&add_orthant(&v)?)
    }

    /// Whether `x^b` lies in the integral closure, i.e. `b ∈ NP(I)`.
    pub fn closure_contains(&self, b: &Monomial) -> Result<bool> {
        if b.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: b.len(),
            });
        }
        if self.is_zero() {
            return Ok(false);
        }
        Ok(self.newton_polyhedron()?.hrep.contains(&b.to_qvector()))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        Ok(())
    }
}

/// Exponent vectors as plain integers, dropping the ring, for ordering and
/// reporting.
pub fn exponent_lists(i: &MonomialIdeal) -> Vec<Vec<BigUint>> {
    i.generators.iter().map(|g| g.0.clone()).collect()
}

/// Minimal generators of the ideal generated by the given exponent vectors.
pub fn minimalize(ring: &Ring, exponents: &[QVector]) -> Result<MonomialIdeal> {
    let gens = exponents
        .iter()
        .map(|e| {
            if e.len() != ring.n() {
                return Err(Error::DimensionMismatch {
                    expected: ring.n(),
                    found: e.len(),
                });
            }
            Monomial::from_qvector(e)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(ring.clone(), gens)
}

/// A monomial ideal whose radical is the prime generated by `prime_vars`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimaryComponent {
    prime_vars: Vec<usize>,
    ideal: MonomialIdeal,
}

impl PrimaryComponent {
    /// Checks that the generators live on `prime_vars` and that every
    /// variable of `prime_vars` has a pure power among them.
    pub fn new(ideal: MonomialIdeal, prime_vars: Vec<usize>) -> Result<Self> {
        let mut prime_vars = prime_vars;
        prime_vars.sort_unstable();
        prime_vars.dedup();
        if prime_vars.is_empty() {
            return Err(Error::Hypothesis("primary component with empty prime".into()));
        }
        if let Some(&i) = prime_vars.iter().find(|&&i| i >= ideal.n()) {
            return Err(Error::Hypothesis(format!("variable index {i} outside the ring")));
        }
        let names = |vs: &[usize]| {
            vs.iter()
                .map(|&i| ideal.ring.variables[i].as_str())
                .collect::<Vec<_>>()
                .join(",")
        };
        let support = ideal.support();
        if support.iter().any(|i| !prime_vars.contains(i)) {
            return Err(Error::Hypothesis(format!(
                "component ({ideal}) uses variables outside its prime ({})",
                names(&prime_vars)
            )));
        }
        let expected = MonomialIdeal::new(
            ideal.ring.clone(),
            prime_vars
                .iter()
                .map(|&i| {
                    let mut e = vec![0u64; ideal.n()];
                    e[i] = 1;
                    Monomial::from_u64s(&e)
                })
                .collect(),
        )?;
        if ideal.radical() != expected {
            return Err(Error::Hypothesis(format!(
                "radical of ({ideal}) is not the prime ({})",
                names(&prime_vars)
            )));
        }
        Ok(PrimaryComponent { prime_vars, ideal })
    }

    /// `vars: generators`, e.g. `x,y: x^2, xy, y^2`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        let (vars, gens) = text.split_once(':').ok_or_else(|| Error::Parse {
            position: 0,
            token: text.to_string(),
            message: "expected `variables: generators`".into(),
        })?;
        let prime_vars = vars
            .split(',')
            .map(str::trim)
            .map(|v| {
                ring.index_of(v)
                    .ok_or_else(|| Error::Hypothesis(format!("unknown variable {v:?} in prime")))
            })
            .collect::<Result<Vec<_>>>()?;
        let ideal = parse::parse_ideal_at(ring, gens, vars.len() + 1)?;
        PrimaryComponent::new(ideal, prime_vars)
    }

    pub fn prime_vars(&self) -> &[usize] {
        &self.prime_vars
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }
}
