//! Fiber-ring structure of an extremal monomial ideal.
//!
//! For an extremal ideal `J` (one equal to its own minimal monomial
//! reduction) the special fiber ring is graded with `k`-th dimension
//! `μ(J^k)`, and its reduced quotient is governed entirely by the compact
//! faces of the Newton polyhedron:
//!
//! - a product of generators stays a minimal generator of every power
//!   exactly when the participating generators lie on a common compact
//!   face (*persistence*);
//! - the minimal primes correspond one-to-one to the maximal compact
//!   faces, each generated by the fiber variables off the face plus the
//!   binomial lattice relations among the face's vertices;
//! - the graded dimension of the reduced ring counts distinct exponent
//!   sums supported on a single face, so reducedness can be semi-decided
//!   by comparing Hilbert functions degree by degree;
//! - the Krull dimension (analytic spread) is the maximal compact-face
//!   dimension plus one.
//!
//! Degree-truncated answers (binomial parts, reducedness) always carry
//! their bound; nothing is claimed beyond the checked range.

use crate::error::{Error, Result};
use crate::ideal::{ev, ExponentVector, MonomialIdeal};
use crate::newton::{CompactFace, NewtonPolyhedron};
use crate::reduction::{is_extremal, minimal_monomial_reduction};
use itertools::Itertools;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// A homogeneous binomial relation `y^lhs - y^rhs` among fiber variables:
/// both sides have the same fiber degree, disjoint supports, and map to
/// the same lattice point under `y_j ↦ a_j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Binomial {
    pub lhs: ExponentVector,
    pub rhs: ExponentVector,
}

impl Binomial {
    /// Fiber degree of either side.
    pub fn degree(&self) -> u64 {
        self.lhs.total_degree()
    }

    /// Re-evaluates the defining lattice identity against the generator
    /// list: equal degrees, disjoint supports, equal weighted sums.
    pub fn verify(&self, gens: &[ExponentVector]) -> bool {
        self.lhs.dim() == gens.len()
            && self.rhs.dim() == gens.len()
            && self.lhs.total_degree() == self.rhs.total_degree()
            && self
                .lhs
                .entries()
                .iter()
                .zip(self.rhs.entries())
                .all(|(&u, &v)| u == 0 || v == 0)
            && weighted_sum(&self.lhs, gens) == weighted_sum(&self.rhs, gens)
    }
}

/// A minimal prime of the fiber ring, indexed by a maximal compact face:
/// the fiber variables whose generators miss the face, plus the binomial
/// relations among the face's vertices up to the degree bound.
#[derive(Debug, Clone, Serialize)]
pub struct FiberPrime {
    pub face: CompactFace,
    /// Indices `j` with `a_j` not on the face (0-based into `G(J)`).
    pub monomial_part: Vec<usize>,
    /// Binomials of fiber degree at most the requested bound.
    pub binomial_part: Vec<Binomial>,
}

/// Degree-by-degree reducedness verdict; both variants carry the degree
/// that justifies them, never an unqualified claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReducednessVerdict {
    /// Hilbert functions of the fiber ring and its reduction agree for
    /// all degrees up to the carried bound.
    Reduced(usize),
    /// First degree where the graded dimensions differ.
    NotReduced(usize),
}

/// Full fiber-ring analysis of one ideal (reduced to its minimal monomial
/// reduction first).
#[derive(Debug, Clone, Serialize)]
pub struct FiberReport {
    /// The extremal ideal actually analyzed.
    #[serde(rename = "J")]
    pub reduction: MonomialIdeal,
    pub max_compact_faces: Vec<CompactFace>,
    pub primes: Vec<FiberPrime>,
    pub spread_ell: usize,
    pub is_domain: bool,
    pub reduced_verdict: ReducednessVerdict,
    pub hilbert_actual: Vec<usize>,
    pub hilbert_reduced: Vec<usize>,
    /// Intersection of the primes' monomial parts, as an ideal in the
    /// fiber variables.
    pub radical_monomial_part: MonomialIdeal,
    /// Union of the primes' binomial parts.
    pub radical_binomial_part: Vec<Binomial>,
}

/// The analytic spread: maximal compact-face dimension plus one. Errors
/// on the zero and unit ideals (the invariant presumes a proper ideal).
pub fn analytic_spread(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(NewtonPolyhedron::of(ideal)?.max_compact_face_dim()? + 1)
}

fn require_extremal(j: &MonomialIdeal) -> Result<()> {
    if !is_extremal(j)? {
        return Err(Error::NotExtremal);
    }
    Ok(())
}

/// Persistence criterion for a product of generators `∏ f_j^{l_j}`:
/// true exactly when the generators indexed by `support` lie on a common
/// compact face. The verdict is independent of the (validated, positive)
/// exponents — that independence is the content of the criterion, and the
/// tests cross-check it against direct power expansion.
pub fn is_persistent_generator(
    j: &MonomialIdeal,
    support: &[usize],
    exponents: &[u64],
) -> Result<bool> {
    require_extremal(j)?;
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let count = j.num_min_gens();
    for &idx in support {
        if idx >= count {
            return Err(Error::GeneratorIndex { index: idx, count });
        }
    }
    if exponents.len() != support.len() || exponents.iter().any(|&l| l == 0) {
        return Err(Error::BadExponents);
    }
    let wanted: BTreeSet<usize> = support.iter().copied().collect();
    let faces = NewtonPolyhedron::of(j)?.maximal_compact_faces()?;
    Ok(faces.iter().any(|f| {
        let vs: BTreeSet<usize> = f.vertex_indices.iter().copied().collect();
        wanted.is_subset(&vs)
    }))
}

/// `[μ(J^k) for k = 1..=bound]`, by exact power expansion (exponential in
/// `k`; intended for small degree bounds).
pub fn fiber_hilbert_actual(j: &MonomialIdeal, bound: usize) -> Result<Vec<usize>> {
    require_extremal(j)?;
    let mut out = Vec::with_capacity(bound);
    let mut acc = j.clone();
    for k in 1..=bound {
        out.push(acc.num_min_gens());
        if k < bound {
            acc = acc.multiply(j)?;
        }
    }
    Ok(out)
}

/// The distinct degree-`k` exponent sums `Σ l_j a_j` (with `Σ l_j = k`)
/// whose support lies on a single compact face — a basis of the degree-`k`
/// part of the reduced fiber ring.
pub fn reduced_graded_points(j: &MonomialIdeal, k: usize) -> Result<BTreeSet<ExponentVector>> {
    require_extremal(j)?;
    let faces = NewtonPolyhedron::of(j)?.maximal_compact_faces()?;
    let mut points = BTreeSet::new();
    for f in &faces {
        points.extend(face_graded_points(j.gens(), &f.vertex_indices, k));
    }
    Ok(points)
}

/// Graded dimensions of the reduced fiber ring for `k = 1..=bound`.
pub fn fiber_hilbert_reduced(j: &MonomialIdeal, bound: usize) -> Result<Vec<usize>> {
    (1..=bound)
        .map(|k| Ok(reduced_graded_points(j, k)?.len()))
        .collect()
}

/// Compares the two Hilbert functions degree by degree up to `bound`.
/// `NotReduced(k)` reports the first disagreement; `Reduced(bound)` is an
/// up-to-degree statement, not a proof of reducedness.
pub fn reducedness_verdict(j: &MonomialIdeal, bound: usize) -> Result<ReducednessVerdict> {
    let actual = fiber_hilbert_actual(j, bound)?;
    let reduced = fiber_hilbert_reduced(j, bound)?;
    for (i, (a, r)) in actual.iter().zip(&reduced).enumerate() {
        assert!(a >= r, "reduced dimension exceeds actual at degree {}", i + 1);
        if a != r {
            return Ok(ReducednessVerdict::NotReduced(i + 1));
        }
    }
    Ok(ReducednessVerdict::Reduced(bound))
}

/// One minimal prime per maximal compact face: the monomial part is the
/// exact complement of the face's vertex set; the binomial part is every
/// disjoint-support lattice relation among the face's vertices of fiber
/// degree at most `degree_bound` (bounded enumeration, self-certifying).
pub fn minimal_primes(j: &MonomialIdeal, degree_bound: u64) -> Result<Vec<FiberPrime>> {
    require_extremal(j)?;
    let gens = j.gens();
    let faces = NewtonPolyhedron::of(j)?.maximal_compact_faces()?;
    let mut primes = Vec::with_capacity(faces.len());
    for face in faces {
        let on: BTreeSet<usize> = face.vertex_indices.iter().copied().collect();
        let monomial_part: Vec<usize> = (0..gens.len()).filter(|i| !on.contains(i)).collect();
        let binomial_part = face_binomials(gens, &face.vertex_indices, degree_bound);
        primes.push(FiberPrime {
            face,
            monomial_part,
            binomial_part,
        });
    }
    Ok(primes)
}

/// The fiber ring is a domain exactly when there is a single maximal
/// compact face.
pub fn is_fiber_domain(j: &MonomialIdeal) -> Result<bool> {
    require_extremal(j)?;
    Ok(NewtonPolyhedron::of(j)?.maximal_compact_faces()?.len() == 1)
}

/// Recounts the reduced graded dimensions by inclusion–exclusion over
/// intersections of maximal-face vertex sets and compares with the direct
/// union count, for every `k ≤ bound`. Agreement exercises the lattice
/// property that a point on two faces is a point of their intersection
/// face.
pub fn face_lattice_hilbert_crosscheck(j: &MonomialIdeal, bound: usize) -> Result<bool> {
    require_extremal(j)?;
    let gens = j.gens();
    let faces = NewtonPolyhedron::of(j)?.maximal_compact_faces()?;
    let sets: Vec<BTreeSet<usize>> = faces
        .iter()
        .map(|f| f.vertex_indices.iter().copied().collect())
        .collect();
    let direct = fiber_hilbert_reduced(j, bound)?;
    for k in 1..=bound {
        let mut signed: i64 = 0;
        for size in 1..=sets.len() {
            for combo in (0..sets.len()).combinations(size) {
                let mut inter = sets[combo[0]].clone();
                for &i in &combo[1..] {
                    inter = inter.intersection(&sets[i]).copied().collect();
                }
                let indices: Vec<usize> = inter.into_iter().collect();
                let count = face_graded_points(gens, &indices, k).len() as i64;
                signed += if size % 2 == 1 { count } else { -count };
            }
        }
        if signed != direct[k - 1] as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full fiber analysis: reduces the input first, then reports the face
/// lattice, primes (binomials up to `binomial_bound`), spread, domain and
/// reducedness verdicts, and both Hilbert functions up to `hilbert_bound`.
pub fn fiber_report(
    ideal: &MonomialIdeal,
    hilbert_bound: usize,
    binomial_bound: u64,
) -> Result<FiberReport> {
    let j = minimal_monomial_reduction(ideal)?;
    let spread_ell = analytic_spread(&j)?;
    let max_compact_faces = NewtonPolyhedron::of(&j)?.maximal_compact_faces()?;
    let primes = minimal_primes(&j, binomial_bound)?;
    let fiber_vars = j.num_min_gens();
    let mut radical_monomial_part: Option<MonomialIdeal> = None;
    let mut binomials = BTreeSet::new();
    for p in &primes {
        let gens = p
            .monomial_part
            .iter()
            .map(|&i| {
                let mut e = vec![0u64; fiber_vars];
                e[i] = 1;
                ev(&e)
            })
            .collect();
        let part = MonomialIdeal::new(fiber_vars, gens)?;
        radical_monomial_part = Some(match radical_monomial_part {
            None => part,
            Some(acc) => acc.intersect(&part)?,
        });
        binomials.extend(p.binomial_part.iter().cloned());
    }
    Ok(FiberReport {
        is_domain: max_compact_faces.len() == 1,
        reduced_verdict: reducedness_verdict(&j, hilbert_bound)?,
        hilbert_actual: fiber_hilbert_actual(&j, hilbert_bound)?,
        hilbert_reduced: fiber_hilbert_reduced(&j, hilbert_bound)?,
        radical_monomial_part: radical_monomial_part
            .expect("a nonzero ideal has at least one maximal compact face"),
        radical_binomial_part: binomials.into_iter().collect(),
        max_compact_faces,
        primes,
        spread_ell,
        reduction: j,
    })
}

/// Distinct exponent sums of the weak compositions of `k` on the listed
/// generators.
fn face_graded_points(
    gens: &[ExponentVector],
    indices: &[usize],
    k: usize,
) -> BTreeSet<ExponentVector> {
    let ambient = if gens.is_empty() { 0 } else { gens[0].dim() };
    let mut points = BTreeSet::new();
    for comp in compositions(k as u64, indices.len()) {
        let mut sum = ev(&vec![0; ambient]);
        for (pos, &idx) in indices.iter().enumerate() {
            sum = sum.add(&gens[idx].scale(comp[pos]));
        }
        points.insert(sum);
    }
    points
}

/// All disjoint-support equal-point binomials among the face's vertices
/// with fiber degree in `1..=degree_bound`, canonically oriented
/// (`lhs > rhs`) and sorted by (degree, lhs, rhs).
fn face_binomials(
    gens: &[ExponentVector],
    indices: &[usize],
    degree_bound: u64,
) -> Vec<Binomial> {
    let r = gens.len();
    let mut out = BTreeSet::new();
    for k in 1..=degree_bound {
        // group the degree-k monomials by their image lattice point
        let mut by_point: BTreeMap<ExponentVector, Vec<ExponentVector>> = BTreeMap::new();
        for comp in compositions(k, indices.len()) {
            let mut full = vec![0u64; r];
            for (pos, &idx) in indices.iter().enumerate() {
                full[idx] = comp[pos];
            }
            let full = ev(&full);
            by_point
                .entry(weighted_sum(&full, gens))
                .or_default()
                .push(full);
        }
        for fibers in by_point.values() {
            for pair in fibers.iter().combinations(2) {
                let (u, v) = (pair[0], pair[1]);
                let disjoint = u
                    .entries()
                    .iter()
                    .zip(v.entries())
                    .all(|(&a, &b)| a == 0 || b == 0);
                if disjoint {
                    let (lhs, rhs) = if u > v { (u, v) } else { (v, u) };
                    out.insert(Binomial {
                        lhs: lhs.clone(),
                        rhs: rhs.clone(),
                    });
                }
            }
        }
    }
    let mut out: Vec<Binomial> = out.into_iter().collect();
    out.sort_by_key(|b| (b.degree(), b.lhs.clone(), b.rhs.clone()));
    out
}

/// `Σ_j u_j · a_j` over the generator list.
fn weighted_sum(u: &ExponentVector, gens: &[ExponentVector]) -> ExponentVector {
    assert_eq!(u.dim(), gens.len(), "dimension mismatch");
    let ambient = if gens.is_empty() { 0 } else { gens[0].dim() };
    let mut sum = ev(&vec![0; ambient]);
    for (j, &mult) in u.entries().iter().enumerate() {
        sum = sum.add(&gens[j].scale(mult));
    }
    sum
}

/// Weak compositions of `total` into `parts` ordered slots.
fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn rec(total: u64, parts: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 0..=total {
            cur.push(first);
            rec(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}
