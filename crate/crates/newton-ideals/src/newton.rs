//! Newton polyhedra of monomial ideals.
//!
//! The Newton polyhedron of a nonzero monomial ideal is the convex hull of
//! its generator exponents plus the nonnegative orthant (its recession
//! cone). It is stored by its V-representation: the extreme points, which
//! always form a subset of the minimal generators. Membership queries,
//! supporting-hyperplane checks, and the compact-face lattice are all
//! decided by exact LP feasibility against that representation; no facet
//! enumeration is ever performed.
//!
//! A face of the polyhedron is compact exactly when it admits a supporting
//! hyperplane with strictly positive normal. Certificates are stored with
//! integer entries scaled so that every normal component is at least 1 and
//! every off-face vertex clears the hyperplane by at least 1, making each
//! face independently re-checkable with integer arithmetic.

use crate::arith::{lp_feasible, rat, Feasibility, LinearSystem, Rational};
use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use std::collections::BTreeSet;

/// Integer supporting hyperplane `{ x : <x, normal> = offset }` with
/// componentwise nonnegative, nonzero normal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportingHyperplane {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl SupportingHyperplane {
    /// Validates the normal: componentwise nonnegative and not identically
    /// zero (a zero normal supports everything degenerately).
    pub fn new(normal: Vec<i64>, offset: i64) -> Result<Self> {
        if normal.iter().any(|&u| u < 0) || normal.iter().all(|&u| u == 0) {
            return Err(Error::InvalidHyperplane);
        }
        Ok(SupportingHyperplane { normal, offset })
    }

    /// `<point, normal>` in wide arithmetic.
    pub fn evaluate(&self, point: &ExponentVector) -> i128 {
        assert_eq!(point.dim(), self.normal.len(), "dimension mismatch");
        point
            .entries()
            .iter()
            .zip(&self.normal)
            .map(|(&a, &u)| a as i128 * u as i128)
            .sum()
    }

    /// True when every component of the normal is strictly positive, the
    /// defining property of a hyperplane exposing a compact face.
    pub fn is_strictly_positive(&self) -> bool {
        self.normal.iter().all(|&u| u > 0)
    }
}

/// A compact (bounded) proper face of a Newton polyhedron, carried by its
/// vertex set and an exposing certificate.
///
/// The certificate satisfies `<v, normal> = offset` on every vertex of the
/// face and `<w, normal> >= offset + 1` on every other extreme point, with
/// every normal component `>= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompactFace {
    /// Indices into the polyhedron's extreme-point list.
    pub vertex_indices: Vec<usize>,
    /// The vertices themselves.
    pub vertices: Vec<ExponentVector>,
    pub certificate: SupportingHyperplane,
    /// Affine dimension of the face.
    pub dim: usize,
}

impl CompactFace {
    /// The image of this face under dilation by `m`: vertex set `{m a}`,
    /// certificate `(normal, m * offset)`. Errors if `m == 0`.
    pub fn scale(&self, m: u64) -> Result<CompactFace> {
        if m == 0 {
            return Err(Error::ZeroScale);
        }
        let offset = (self.certificate.offset as i128)
            .checked_mul(m as i128)
            .and_then(|v| i64::try_from(v).ok())
            .ok_or(Error::Overflow {
                context: "face scaling",
            })?;
        Ok(CompactFace {
            vertex_indices: self.vertex_indices.clone(),
            vertices: self.vertices.iter().map(|v| v.scale(m)).collect(),
            certificate: SupportingHyperplane {
                normal: self.certificate.normal.clone(),
                offset,
            },
            dim: self.dim,
        })
    }

    /// Sorted vertex list, the canonical identity of the face as a set.
    pub fn vertex_set(&self) -> Vec<ExponentVector> {
        let mut v = self.vertices.clone();
        v.sort();
        v
    }
}

/// One face row of [`FaceReport`].
#[derive(Debug, Clone, Serialize)]
pub struct FaceReportEntry {
    pub verts: Vec<usize>,
    pub normal: Vec<i64>,
    pub offset: i64,
    pub dim: usize,
    pub maximal: bool,
}

/// JSON-ready summary of the compact-face lattice.
#[derive(Debug, Clone, Serialize)]
pub struct FaceReport {
    pub vertices: Vec<ExponentVector>,
    pub faces: Vec<FaceReportEntry>,
}

/// The Newton polyhedron of a nonzero monomial ideal, stored by its
/// extreme points (a subset of the minimal generators, in the same
/// descending lexicographic order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    ambient: usize,
    extreme: Vec<ExponentVector>,
}

/// Decides `query ∈ conv(points) + R^n_{>=0}` by LP feasibility: convex
/// weights `k_i >= 0`, `sum k_i = 1`, `sum k_i points_i <= query`.
fn in_hull(ambient: usize, points: &[&ExponentVector], query: &[Rational]) -> Result<bool> {
    let r = points.len();
    let mut sys = LinearSystem::new(r);
    sys.push_eq(vec![rat(1); r], rat(1));
    for j in 0..ambient {
        let coeffs = points
            .iter()
            .map(|p| -rat(p.get(j) as i64))
            .collect::<Vec<_>>();
        sys.push_ge(coeffs, -query[j].clone());
    }
    let nonneg: BTreeSet<usize> = (0..r).collect();
    Ok(lp_feasible(&sys, &nonneg)?.is_feasible())
}

impl NewtonPolyhedron {
    /// Computes the extreme points of `conv(I)`: a minimal generator is
    /// extreme exactly when it lies outside the hull of the remaining
    /// generators plus the recession cone. Errors on the zero ideal.
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let ambient = ideal.ambient_dim();
        let gens = ideal.gens();
        let mut extreme = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let others: Vec<&ExponentVector> = gens
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, p)| p)
                .collect();
            let query: Vec<Rational> = g.entries().iter().map(|&e| rat(e as i64)).collect();
            if !in_hull(ambient, &others, &query)? {
                extreme.push(g.clone());
            }
        }
        Ok(NewtonPolyhedron { ambient, extreme })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Extreme points in descending lexicographic order.
    pub fn extreme_points(&self) -> &[ExponentVector] {
        &self.extreme
    }

    /// The ideal generated by the extreme points.
    pub fn vertex_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ambient, self.extreme.clone())
            .expect("extreme points share the ambient dimension")
    }

    /// Exact membership of a rational point in the polyhedron.
    pub fn contains(&self, point: &[Rational]) -> Result<bool> {
        if point.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: point.len(),
            });
        }
        let pts: Vec<&ExponentVector> = self.extreme.iter().collect();
        in_hull(self.ambient, &pts, point)
    }

    /// Membership of a lattice point.
    pub fn contains_exponent(&self, point: &ExponentVector) -> Result<bool> {
        let q: Vec<Rational> = point.entries().iter().map(|&e| rat(e as i64)).collect();
        self.contains(&q)
    }

    /// True when `h` supports the polyhedron: every extreme point satisfies
    /// `<a, normal> >= offset` and at least one attains equality. Because
    /// the normal is nonnegative, checking extreme points suffices.
    pub fn is_supporting(&self, h: &SupportingHyperplane) -> Result<bool> {
        if h.normal.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: h.normal.len(),
            });
        }
        let vals: Vec<i128> = self.extreme.iter().map(|a| h.evaluate(a)).collect();
        let c = h.offset as i128;
        Ok(vals.iter().all(|&v| v >= c) && vals.iter().any(|&v| v == c))
    }

    /// Enumerates every compact proper face.
    ///
    /// Candidate vertex sets are the affine closures `ext ∩ aff(B)` over
    /// subsets `B` of at most `ambient` extreme points (every compact face
    /// has dimension below the ambient dimension, so some such basis spans
    /// it); each candidate is then accepted or rejected by an exact LP
    /// searching for a certificate with normal `>= 1` componentwise,
    /// equality on the candidate, and clearance `>= 1` elsewhere. The
    /// candidate count is `O(r^n)` rather than `2^r`; desk-scale inputs
    /// keep both `r` and `n` small.
    pub fn compact_faces(&self) -> Result<Vec<CompactFace>> {
        let r = self.extreme.len();
        let mut candidates: BTreeSet<Vec<usize>> = BTreeSet::new();
        for size in 1..=self.ambient.min(r) {
            for combo in (0..r).combinations(size) {
                candidates.insert(self.affine_closure(&combo));
            }
        }
        let mut faces = Vec::new();
        for cand in candidates {
            if let Some(certificate) = self.certify_face(&cand)? {
                let vertices: Vec<ExponentVector> =
                    cand.iter().map(|&i| self.extreme[i].clone()).collect();
                let dim = affine_dim(&vertices);
                faces.push(CompactFace {
                    vertex_indices: cand,
                    vertices,
                    certificate,
                    dim,
                });
            }
        }
        faces.sort_by(|a, b| {
            (a.dim, &a.vertex_indices).cmp(&(b.dim, &b.vertex_indices))
        });
        Ok(faces)
    }

    /// The compact faces maximal under inclusion of vertex sets.
    pub fn maximal_compact_faces(&self) -> Result<Vec<CompactFace>> {
        let faces = self.compact_faces()?;
        let sets: Vec<BTreeSet<usize>> = faces
            .iter()
            .map(|f| f.vertex_indices.iter().copied().collect())
            .collect();
        Ok(faces
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                !sets
                    .iter()
                    .enumerate()
                    .any(|(k, s)| k != *i && sets[*i].is_subset(s) && sets[*i] != *s)
            })
            .map(|(_, f)| f.clone())
            .collect())
    }

    /// Largest dimension of a compact face.
    pub fn max_compact_face_dim(&self) -> Result<usize> {
        let faces = self.compact_faces()?;
        Ok(faces
            .iter()
            .map(|f| f.dim)
            .max()
            .expect("every extreme point spans a compact face"))
    }

    /// Face lattice in the JSON report shape.
    pub fn face_report(&self) -> Result<FaceReport> {
        let faces = self.compact_faces()?;
        let sets: Vec<BTreeSet<usize>> = faces
            .iter()
            .map(|f| f.vertex_indices.iter().copied().collect())
            .collect();
        let entries = faces
            .iter()
            .enumerate()
            .map(|(i, f)| FaceReportEntry {
                verts: f.vertex_indices.clone(),
                normal: f.certificate.normal.clone(),
                offset: f.certificate.offset,
                dim: f.dim,
                maximal: !sets
                    .iter()
                    .enumerate()
                    .any(|(k, s)| k != i && sets[i].is_subset(s) && sets[i] != *s),
            })
            .collect();
        Ok(FaceReport {
            vertices: self.extreme.clone(),
            faces: entries,
        })
    }

    /// Indices of all extreme points in the affine hull of `basis`.
    fn affine_closure(&self, basis: &[usize]) -> Vec<usize> {
        let origin = &self.extreme[basis[0]];
        let mut ech = Echelon::new();
        for &i in &basis[1..] {
            ech.insert(difference(&self.extreme[i], origin));
        }
        (0..self.extreme.len())
            .filter(|&i| i == basis[0] || ech.contains(difference(&self.extreme[i], origin)))
            .collect()
    }

    /// Searches for a compact-face certificate exposing exactly the
    /// extreme points in `on_set`.
    fn certify_face(&self, on_set: &[usize]) -> Result<Option<SupportingHyperplane>> {
        let n = self.ambient;
        let on: BTreeSet<usize> = on_set.iter().copied().collect();
        // variables: normal u_1..u_n, then the free offset c
        let mut sys = LinearSystem::new(n + 1);
        for j in 0..n {
            let mut coeffs = vec![rat(0); n + 1];
            coeffs[j] = rat(1);
            sys.push_ge(coeffs, rat(1));
        }
        for (i, a) in self.extreme.iter().enumerate() {
            let mut coeffs: Vec<Rational> =
                a.entries().iter().map(|&e| rat(e as i64)).collect();
            coeffs.push(rat(-1));
            if on.contains(&i) {
                sys.push_eq(coeffs, rat(0));
            } else {
                sys.push_ge(coeffs, rat(1));
            }
        }
        let nonneg: BTreeSet<usize> = (0..n).collect();
        match lp_feasible(&sys, &nonneg)? {
            Feasibility::Infeasible => Ok(None),
            Feasibility::Feasible(w) => {
                let (normal, offset) = integer_certificate(&w[..n], &w[n])?;
                Ok(Some(SupportingHyperplane { normal, offset }))
            }
        }
    }
}

/// Scales a rational certificate `(u, c)` by the common denominator,
/// returning integer data. Scaling preserves `u >= 1`, the equalities, and
/// the `>= c + 1` clearances (the scale factor is a positive integer).
fn integer_certificate(u: &[Rational], c: &Rational) -> Result<(Vec<i64>, i64)> {
    let mut l = BigInt::one();
    for q in u.iter().chain(std::iter::once(c)) {
        l = l.lcm(q.denom());
    }
    let to_i64 = |q: &Rational| -> Result<i64> {
        let v = q.numer() * (&l / q.denom());
        v.to_i64().ok_or(Error::Overflow {
            context: "certificate scaling",
        })
    };
    let normal = u.iter().map(to_i64).collect::<Result<Vec<i64>>>()?;
    let offset = to_i64(c)?;
    Ok((normal, offset))
}

fn difference(a: &ExponentVector, b: &ExponentVector) -> Vec<i128> {
    a.entries()
        .iter()
        .zip(b.entries())
        .map(|(&x, &y)| x as i128 - y as i128)
        .collect()
}

/// Affine dimension of a point set (0 for a single point).
fn affine_dim(points: &[ExponentVector]) -> usize {
    let mut ech = Echelon::new();
    for p in &points[1..] {
        ech.insert(difference(p, &points[0]));
    }
    ech.rows.len()
}

/// Fraction-free integer row echelon form; rows are gcd-normalized after
/// each reduction to keep entries small.
struct Echelon {
    rows: Vec<Vec<i128>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn reduce(&self, mut row: Vec<i128>) -> Vec<i128> {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p] != 0 {
                let (a, b) = (r[p], row[p]);
                for j in 0..row.len() {
                    row[j] = row[j]
                        .checked_mul(a)
                        .and_then(|x| r[j].checked_mul(b).and_then(|y| x.checked_sub(y)))
                        .expect("echelon arithmetic overflow");
                }
            }
        }
        let g = row.iter().fold(0i128, |g, &x| gcd_i128(g, x));
        if g > 1 {
            for x in row.iter_mut() {
                *x /= g;
            }
        }
        row
    }

    fn contains(&self, row: Vec<i128>) -> bool {
        self.reduce(row).iter().all(|&x| x == 0)
    }

    /// Inserts a row; returns false if it was already in the row space.
    fn insert(&mut self, row: Vec<i128>) -> bool {
        let row = self.reduce(row);
        match row.iter().position(|&x| x != 0) {
            None => false,
            Some(p) => {
                self.rows.push(row);
                self.pivots.push(p);
                true
            }
        }
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
