//! Minimal monomial reductions, extremality, bracket powers, and the
//! Kodiyalam slope.
//!
//! Every nonzero monomial ideal has a unique smallest monomial reduction:
//! the ideal generated by the extreme points of its Newton polyhedron. An
//! ideal equal to its own reduction is called *extremal*; extremal ideals
//! are exactly those whose minimal generators are all vertices of the
//! polyhedron. Powers of the reduction are controlled by coordinate
//! dilation (the *bracket power*), and the largest total degree among the
//! extreme points is the slope of the eventual linear behavior of
//! regularity along powers.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::newton::NewtonPolyhedron;
use serde::Serialize;

/// Summary of the reduction analysis of one ideal.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    /// The unique minimal monomial reduction.
    #[serde(rename = "J")]
    pub reduction: MonomialIdeal,
    /// Maximum total degree over the reduction's generators.
    pub slope_p: u64,
    /// Whether the input already equals its reduction.
    pub is_extremal_input: bool,
    /// Number of extreme points of the Newton polyhedron.
    pub ext_count: usize,
}

/// The unique minimal monomial reduction: the ideal generated by the
/// extreme points of the Newton polyhedron. Errors on the zero ideal.
pub fn minimal_monomial_reduction(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    Ok(NewtonPolyhedron::of(ideal)?.vertex_ideal())
}

/// True when the ideal equals its own minimal monomial reduction, i.e.
/// every minimal generator is an extreme point.
pub fn is_extremal(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(minimal_monomial_reduction(ideal)? == *ideal)
}

/// The bracket power: generators of the minimal monomial reduction scaled
/// coordinatewise by `m`. This equals the minimal monomial reduction of
/// the `m`-th ordinary power. Errors if `m == 0`.
pub fn bracket_power(ideal: &MonomialIdeal, m: u64) -> Result<MonomialIdeal> {
    if m == 0 {
        return Err(Error::ZeroScale);
    }
    let j = minimal_monomial_reduction(ideal)?;
    let gens = j.gens().iter().map(|a| a.scale(m)).collect();
    MonomialIdeal::new(j.ambient_dim(), gens)
}

/// The Kodiyalam slope: the maximum total degree over the extreme points.
/// Errors on the zero and unit ideals (the slope presumes a proper ideal).
pub fn kodiyalam_slope(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let p = NewtonPolyhedron::of(ideal)?;
    Ok(p.extreme_points()
        .iter()
        .map(|a| a.total_degree())
        .max()
        .expect("a nonzero ideal has at least one extreme point"))
}

/// True when `candidate ⊆ ideal` and both span the same Newton
/// polyhedron, the polyhedral characterization of a reduction. Decided by
/// mutual LP membership of the generator exponents.
pub fn is_reduction(candidate: &MonomialIdeal, ideal: &MonomialIdeal) -> Result<bool> {
    if candidate.ambient_dim() != ideal.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: ideal.ambient_dim(),
            got: candidate.ambient_dim(),
        });
    }
    if candidate.is_zero() || ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    for g in candidate.gens() {
        if !ideal.contains_monomial(g)? {
            return Ok(false);
        }
    }
    let pc = NewtonPolyhedron::of(candidate)?;
    let pi = NewtonPolyhedron::of(ideal)?;
    for g in candidate.gens() {
        if !pi.contains_exponent(g)? {
            return Ok(false);
        }
    }
    for g in ideal.gens() {
        if !pc.contains_exponent(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The least `m ≤ cutoff` with `candidate · ideal^m = ideal^{m+1}`,
/// verified by exact power expansion. Errors if `candidate` is not a
/// reduction of `ideal` or if no such `m` is found by the cutoff (the
/// cutoff is reported, never silently applied).
pub fn reduction_number(
    ideal: &MonomialIdeal,
    candidate: &MonomialIdeal,
    cutoff: usize,
) -> Result<usize> {
    if !is_reduction(candidate, ideal)? {
        return Err(Error::NotAReduction);
    }
    let mut power = MonomialIdeal::unit(ideal.ambient_dim());
    for m in 0..=cutoff {
        let lhs = candidate.multiply(&power)?;
        let next = power.multiply(ideal)?;
        if lhs == next {
            return Ok(m);
        }
        power = next;
    }
    Err(Error::CutoffExceeded { cutoff })
}

/// Checks `μ(Rad I) ≤ |ext(I)|`, returning both counts and the verdict.
/// The zero ideal reports `(0, 0, true)` rather than erroring.
pub fn radical_bound_check(ideal: &MonomialIdeal) -> (usize, usize, bool) {
    if ideal.is_zero() {
        return (0, 0, true);
    }
    let mu_rad = ideal.radical().num_min_gens();
    let ext_count = NewtonPolyhedron::of(ideal)
        .expect("nonzero ideal")
        .extreme_points()
        .len();
    (mu_rad, ext_count, mu_rad <= ext_count)
}

/// Bundles the reduction, slope, extremality flag, and extreme-point
/// count for one nonzero proper ideal.
pub fn reduction_report(ideal: &MonomialIdeal) -> Result<ReductionReport> {
    let reduction = minimal_monomial_reduction(ideal)?;
    let slope_p = kodiyalam_slope(ideal)?;
    Ok(ReductionReport {
        is_extremal_input: reduction == *ideal,
        ext_count: reduction.num_min_gens(),
        reduction,
        slope_p,
    })
}
