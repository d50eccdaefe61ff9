//! Monomial ideals in a polynomial ring, represented by their unique
//! minimal generating set of exponent vectors.
//!
//! Every constructor minimalizes: generators divisible by another generator
//! are dropped, so two ideals are equal as values exactly when they are
//! equal as ideals. Generators are kept in descending lexicographic order,
//! which fixes a canonical index for each generator (used by the fiber-ring
//! analysis) and a canonical display order.

mod text;

use crate::error::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exponent vector of a monomial: one nonnegative exponent per variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u64>);

/// Convenience constructor for exponent vectors.
pub fn ev(entries: &[u64]) -> ExponentVector {
    ExponentVector(entries.to_vec())
}

impl ExponentVector {
    pub fn new(entries: Vec<u64>) -> Self {
        ExponentVector(entries)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, j: usize) -> u64 {
        self.0[j]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise divisibility: `self` divides `other` as monomials.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        assert_eq!(self.dim(), other.dim(), "exponent vector dimensions differ");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Monomial product: componentwise sum.
    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.dim(), other.dim(), "exponent vector dimensions differ");
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Monomial power: componentwise multiple.
    pub fn scale(&self, m: u64) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .map(|&e| e.checked_mul(m).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&j| self.0[j] > 0).collect()
    }

    /// Squarefree part: each positive exponent collapsed to 1.
    pub fn support_vector(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&e| u64::from(e > 0)).collect())
    }

    /// Componentwise maximum (monomial least common multiple).
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.dim(), other.dim(), "exponent vector dimensions differ");
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExponentVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(ExponentVector(Vec::<u64>::deserialize(d)?))
    }
}

/// A monomial ideal, stored as its minimal generating antichain.
///
/// The zero ideal has no generators; the unit ideal is generated by the
/// constant monomial (the zero exponent vector).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<ExponentVector>,
}

/// Drops every candidate divisible by another and removes duplicates.
fn minimal_antichain(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by_key(|g| (g.total_degree(), g.clone()));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing the list.
    pub fn new(ambient: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        for g in &gens {
            if g.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: g.dim(),
                });
            }
        }
        let mut gens = minimal_antichain(gens);
        gens.sort_by(|a, b| b.cmp(a));
        Ok(MonomialIdeal { ambient, gens })
    }

    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            gens: vec![ExponentVector(vec![0; ambient])],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Minimal generators in descending lexicographic order.
    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    /// Number of minimal generators (zero for the zero ideal).
    pub fn num_min_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// True when the ideal is neither zero nor the whole ring.
    pub fn is_proper(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// Monomial membership: some minimal generator divides `b`.
    pub fn contains_monomial(&self, b: &ExponentVector) -> Result<bool> {
        if b.dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: b.dim(),
            });
        }
        Ok(self.gens.iter().any(|g| g.divides(b)))
    }

    /// Ideal product, minimalized.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.ambient));
        }
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                sums.push(a.add(b));
            }
        }
        MonomialIdeal::new(self.ambient, sums)
    }

    /// Ideal power; `power(I, 0)` is the unit ideal.
    pub fn power(&self, m: u64) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.ambient);
        for _ in 0..m {
            acc = acc
                .multiply(self)
                .expect("power preserves ambient dimension");
        }
        acc
    }

    /// Radical: supports collapsed to squarefree monomials, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.support_vector()).collect();
        MonomialIdeal::new(self.ambient, gens).expect("radical preserves ambient dimension")
    }

    /// Ideal intersection via pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.ambient));
        }
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.ambient, lcms)
    }

    /// Parses the comma-separated monomial grammar, e.g. `"x^6, x^2*y"`.
    ///
    /// `vars` fixes the ambient dimension; when absent it is inferred from
    /// the highest variable index used.
    pub fn parse_text(input: &str, vars: Option<usize>) -> Result<MonomialIdeal> {
        text::parse(input, vars)
    }

    /// Canonical text form; inverse of [`MonomialIdeal::parse_text`].
    pub fn to_text(&self) -> String {
        text::format(self)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: usize,
    gens: Vec<ExponentVector>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRepr {
            n: self.ambient,
            gens: self.gens.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = IdealRepr::deserialize(d)?;
        MonomialIdeal::new(repr.n, repr.gens).map_err(D::Error::custom)
    }
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}
