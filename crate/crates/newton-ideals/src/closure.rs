//! Integral closure of monomial ideals and normality certification.
//!
//! The integral closure of a nonzero monomial ideal is again monomial,
//! with exponent set exactly the lattice points of the Newton polyhedron.
//! Its minimal generators all lie in the box bounded coordinatewise by
//! the extreme-point maxima, so the closure is computable by exact LP
//! membership over that box. Powers of the closure eventually satisfy the
//! recursion `closure(I^m) = J · closure(I^{m-1})` for `m` at least the
//! analytic spread, which in turn yields a finite normality check: if
//! every power below the spread is integrally closed, every power is.

use crate::error::{Error, Result};
use crate::fiber::analytic_spread;
use crate::ideal::{ev, MonomialIdeal};
use crate::newton::NewtonPolyhedron;
use crate::reduction::minimal_monomial_reduction;
use itertools::Itertools;
use serde::Serialize;

/// The closure of one ideal, with a flag for whether anything changed.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub closure: MonomialIdeal,
    pub was_closed: bool,
}

/// Outcome of the power-by-power normality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NormalityVerdict {
    /// Every power up to the spread was closed, hence every power is.
    Normal,
    /// The carried power is not integrally closed, witnessing
    /// non-normality directly.
    NotNormal(u64),
    /// Unreachable with the current check (a failing power is itself a
    /// witness); retained so the verdict type can absorb weaker future
    /// criteria without breaking callers.
    Inconclusive,
}

/// The finite certificate behind a normality verdict: which powers were
/// checked and how each came out.
#[derive(Debug, Clone, Serialize)]
pub struct NormalityCertificate {
    pub spread_ell: usize,
    /// `(a, was_closed)` for `a = 1..spread_ell - 1`.
    pub checked_powers: Vec<(u64, bool)>,
    pub verdict: NormalityVerdict,
}

/// The integral closure: minimal generators of the ideal of all lattice
/// points of the Newton polyhedron.
///
/// Every minimal generator `b` satisfies `b(j) ≤ max_i a_i(j)` over the
/// extreme points (otherwise `b - e_j` still lies in the polyhedron,
/// contradicting minimality), so the search is confined to that box. The
/// box is scanned column by column: for each fixed prefix of the first
/// `n-1` coordinates, membership is monotone in the last coordinate
/// (the recession cone contains every coordinate ray), so the column
/// minimum is found by binary search and all other column points are
/// dominated by it.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let poly = NewtonPolyhedron::of(ideal)?;
    let n = ideal.ambient_dim();
    let bounds: Vec<u64> = (0..n)
        .map(|j| {
            poly.extreme_points()
                .iter()
                .map(|a| a.get(j))
                .max()
                .expect("nonzero ideal")
        })
        .collect();
    let prefixes: Vec<Vec<u64>> = if n == 1 {
        vec![vec![]]
    } else {
        bounds[..n - 1]
            .iter()
            .map(|&m| (0..=m).collect::<Vec<u64>>())
            .multi_cartesian_product()
            .collect()
    };
    let last = bounds[n - 1];
    let mut gens = Vec::new();
    for prefix in prefixes {
        let member = |t: u64| -> Result<bool> {
            let mut point = prefix.clone();
            point.push(t);
            poly.contains_exponent(&ev(&point))
        };
        if !member(last)? {
            // the column's entry point exceeds the box, so it cannot be a
            // minimal generator
            continue;
        }
        let (mut lo, mut hi) = (0u64, last);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if member(mid)? {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let mut point = prefix;
        point.push(lo);
        gens.push(ev(&point));
    }
    MonomialIdeal::new(n, gens)
}

/// Closure plus the closedness flag.
pub fn closure_report(ideal: &MonomialIdeal) -> Result<ClosureReport> {
    let closure = integral_closure(ideal)?;
    Ok(ClosureReport {
        was_closed: closure == *ideal,
        closure,
    })
}

/// True when the ideal equals its integral closure.
pub fn is_integrally_closed(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(integral_closure(ideal)? == *ideal)
}

/// Compares both sides of the closure recursion at exponent `m`:
/// `closure(I^m)` against `J · closure(I^{m-1})`, with `I^0` the unit
/// ideal. The identity is guaranteed for `m` at least the analytic
/// spread; below that it may or may not hold, and this reports whichever
/// is the case. Errors if `m == 0`.
pub fn check_closure_identity(ideal: &MonomialIdeal, m: u64) -> Result<bool> {
    if m == 0 {
        return Err(Error::ZeroScale);
    }
    let j = minimal_monomial_reduction(ideal)?;
    let lhs = integral_closure(&ideal.power(m))?;
    let prev = if m == 1 {
        MonomialIdeal::unit(ideal.ambient_dim())
    } else {
        integral_closure(&ideal.power(m - 1))?
    };
    Ok(lhs == j.multiply(&prev)?)
}

/// Checks integral closedness of the powers `1..spread`: if all pass the
/// ideal is normal (the closure recursion then propagates closedness to
/// every power); a failing power is itself a witness of non-normality.
pub fn normality_certificate(ideal: &MonomialIdeal) -> Result<NormalityCertificate> {
    let spread_ell = analytic_spread(ideal)?;
    let mut checked_powers = Vec::new();
    let mut verdict = NormalityVerdict::Normal;
    for a in 1..spread_ell as u64 {
        let closed = is_integrally_closed(&ideal.power(a))?;
        checked_powers.push((a, closed));
        if !closed && verdict == NormalityVerdict::Normal {
            verdict = NormalityVerdict::NotNormal(a);
        }
    }
    Ok(NormalityCertificate {
        spread_ell,
        checked_powers,
        verdict,
    })
}
