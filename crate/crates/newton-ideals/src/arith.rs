//! Exact rational arithmetic and linear-program feasibility.
//!
//! The only solver exposed here is [`lp_feasible`]: a phase-1 simplex with
//! Bland's anti-cycling rule, run entirely over exact rationals. It decides
//! feasibility of a system of linear equalities and `>=` inequalities with an
//! optional nonnegativity set, and returns an exact witness when feasible.
//!
//! Internally the same simplex runs twice: first over checked `i128`
//! fractions for speed, falling back to arbitrary-precision rationals if any
//! intermediate value would overflow. Both paths are exact; no floating
//! point is involved anywhere.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the [`Rational`] `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Relation of a single constraint row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
}

/// One linear constraint `coeffs . x REL rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// A system of linear constraints over `num_vars` rational variables.
///
/// Variables are free unless listed in the nonnegativity set passed to
/// [`lp_feasible`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearSystem {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            constraints: Vec::new(),
        }
    }

    /// Adds `coeffs . x = rhs`.
    pub fn push_eq(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.constraints.push(Constraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        });
    }

    /// Adds `coeffs . x >= rhs`.
    pub fn push_ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.constraints.push(Constraint {
            coeffs,
            relation: Relation::Ge,
            rhs,
        });
    }

    /// Exact satisfaction check of every constraint at `point`.
    pub fn check(&self, point: &[Rational]) -> bool {
        if point.len() != self.num_vars {
            return false;
        }
        self.constraints.iter().all(|c| {
            let lhs: Rational = c
                .coeffs
                .iter()
                .zip(point)
                .map(|(a, x)| a * x)
                .fold(<Rational as Zero>::zero(), |s, t| s + t);
            match c.relation {
                Relation::Eq => lhs == c.rhs,
                Relation::Ge => lhs >= c.rhs,
            }
        })
    }

    fn validate(&self, nonneg: &BTreeSet<usize>) -> Result<()> {
        for c in &self.constraints {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::DimensionMismatch {
                    expected: self.num_vars,
                    got: c.coeffs.len(),
                });
            }
        }
        if let Some(&bad) = nonneg.iter().find(|&&v| v >= self.num_vars) {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: bad,
            });
        }
        Ok(())
    }
}

/// Verdict of [`lp_feasible`]. A feasible system carries an exact witness
/// that satisfies every constraint under [`LinearSystem::check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Decides feasibility of `sys` with the variables in `nonneg` constrained
/// to be `>= 0` and all others free.
///
/// Deterministic: identical inputs produce identical verdicts and witnesses.
pub fn lp_feasible(sys: &LinearSystem, nonneg: &BTreeSet<usize>) -> Result<Feasibility> {
    sys.validate(nonneg)?;
    if let Some(outcome) = simplex::<Q128>(sys, nonneg) {
        if verified(sys, &outcome) {
            return Ok(outcome);
        }
    }
    let outcome = simplex::<Rational>(sys, nonneg)
        .ok_or(Error::Overflow { context: "simplex" })?;
    assert!(verified(sys, &outcome), "exact simplex produced an invalid witness");
    Ok(outcome)
}

fn verified(sys: &LinearSystem, outcome: &Feasibility) -> bool {
    match outcome {
        Feasibility::Feasible(w) => sys.check(w),
        Feasibility::Infeasible => true,
    }
}

/// Scalar backend for the simplex. Every operation is fallible so that a
/// fixed-width backend can bail out on overflow; the arbitrary-precision
/// backend never fails.
trait Scalar: Sized + Clone {
    fn from_rational(q: &Rational) -> Option<Self>;
    fn to_rational(&self) -> Rational;
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
    fn lt(&self, o: &Self) -> Option<bool>;

    fn is_positive(&self) -> bool {
        !self.is_zero() && !self.is_negative()
    }
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            None
        } else {
            Some(self / o)
        }
    }
    fn lt(&self, o: &Self) -> Option<bool> {
        Some(self < o)
    }
}

/// Reduced fraction over `i128` with positive denominator. All operations
/// are overflow-checked and return `None` rather than wrapping.
#[derive(Debug, Clone, Copy)]
struct Q128 {
    n: i128,
    d: i128,
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Q128 {
    fn make(n: i128, d: i128) -> Option<Q128> {
        if d == 0 {
            return None;
        }
        let (n, d) = if d < 0 {
            (n.checked_neg()?, d.checked_neg()?)
        } else {
            (n, d)
        };
        if n == 0 {
            return Some(Q128 { n: 0, d: 1 });
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        Some(Q128 { n: n / g, d: d / g })
    }
}

impl Scalar for Q128 {
    fn from_rational(q: &Rational) -> Option<Self> {
        Q128::make(q.numer().to_i128()?, q.denom().to_i128()?)
    }
    fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.n), BigInt::from(self.d))
    }
    fn zero() -> Self {
        Q128 { n: 0, d: 1 }
    }
    fn is_zero(&self) -> bool {
        self.n == 0
    }
    fn is_negative(&self) -> bool {
        self.n < 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        let g = gcd_u128(self.d as u128, o.d as u128) as i128;
        let da = self.d / g;
        let db = o.d / g;
        let n = self.n.checked_mul(db)?.checked_add(o.n.checked_mul(da)?)?;
        Q128::make(n, da.checked_mul(o.d)?)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.add(&Q128 {
            n: o.n.checked_neg()?,
            d: o.d,
        })
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        // cross-reduce before multiplying for extra headroom
        let g1 = gcd_u128(self.n.unsigned_abs(), o.d as u128).max(1) as i128;
        let g2 = gcd_u128(o.n.unsigned_abs(), self.d as u128).max(1) as i128;
        let n = (self.n / g1).checked_mul(o.n / g2)?;
        let d = (self.d / g2).checked_mul(o.d / g1)?;
        Q128::make(n, d)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if o.n == 0 {
            return None;
        }
        self.mul(&Q128::make(o.d, o.n)?)
    }
    fn lt(&self, o: &Self) -> Option<bool> {
        Some(self.n.checked_mul(o.d)? < o.n.checked_mul(self.d)?)
    }
}

/// Column bookkeeping: each variable gets one column if nonnegative, or a
/// positive/negative split pair if free.
struct Columns {
    of_var: Vec<(usize, Option<usize>)>,
    count: usize,
}

fn layout(num_vars: usize, nonneg: &BTreeSet<usize>) -> Columns {
    let mut of_var = Vec::with_capacity(num_vars);
    let mut count = 0;
    for v in 0..num_vars {
        if nonneg.contains(&v) {
            of_var.push((count, None));
            count += 1;
        } else {
            of_var.push((count, Some(count + 1)));
            count += 2;
        }
    }
    Columns { of_var, count }
}

/// Phase-1 simplex. Returns `None` only if the scalar backend overflowed.
fn simplex<S: Scalar>(sys: &LinearSystem, nonneg: &BTreeSet<usize>) -> Option<Feasibility> {
    let cols = layout(sys.num_vars, nonneg);
    let n_ge = sys
        .constraints
        .iter()
        .filter(|c| c.relation == Relation::Ge)
        .count();
    let n_rows = sys.constraints.len();
    let n_struct = cols.count;
    // columns: structural | slacks | artificials (appended as needed)
    let width = n_struct + n_ge + n_rows;

    let one = S::from_rational(&rat(1))?;
    let mut a: Vec<Vec<S>> = Vec::with_capacity(n_rows);
    let mut rhs: Vec<S> = Vec::with_capacity(n_rows);
    let mut basis: Vec<usize> = Vec::with_capacity(n_rows);
    let mut n_art = 0;
    let mut slack_used = 0;

    for c in &sys.constraints {
        let mut row: Vec<S> = vec![S::zero(); width];
        for (v, coeff) in c.coeffs.iter().enumerate() {
            let s = S::from_rational(coeff)?;
            let (pos, neg) = cols.of_var[v];
            row[pos] = row[pos].add(&s)?;
            if let Some(neg) = neg {
                row[neg] = row[neg].sub(&s)?;
            }
        }
        let mut b = S::from_rational(&c.rhs)?;
        let slack = match c.relation {
            Relation::Ge => {
                let col = n_struct + slack_used;
                slack_used += 1;
                row[col] = S::zero().sub(&one)?;
                Some(col)
            }
            Relation::Eq => None,
        };
        let negated = b.is_negative();
        if negated {
            for e in row.iter_mut() {
                *e = S::zero().sub(e)?;
            }
            b = S::zero().sub(&b)?;
        }
        // after sign normalization a Ge row that was negated carries its
        // slack with coefficient +1 and can enter the basis directly
        let basic = match slack {
            Some(col) if negated => col,
            _ => {
                let col = n_struct + n_ge + n_art;
                n_art += 1;
                row[col] = one.clone();
                col
            }
        };
        basis.push(basic);
        a.push(row);
        rhs.push(b);
    }

    let art_start = n_struct + n_ge;
    // reduced costs for minimizing the sum of artificial variables
    let mut red: Vec<S> = vec![S::zero(); width];
    for (i, row) in a.iter().enumerate() {
        if basis[i] >= art_start {
            for (j, e) in row.iter().enumerate() {
                if j != basis[i] {
                    red[j] = red[j].sub(e)?;
                }
            }
        }
    }

    let max_iters = 100_000usize;
    let mut optimal = false;
    for _ in 0..max_iters {
        // Bland: entering column = lowest index with negative reduced cost
        let Some(e) = (0..width).find(|&j| red[j].is_negative()) else {
            optimal = true;
            break;
        };
        // ratio test, ties broken by lowest basis variable index
        let mut pick: Option<(usize, S)> = None;
        for i in 0..n_rows {
            if !a[i][e].is_positive() {
                continue;
            }
            let ratio = rhs[i].div(&a[i][e])?;
            pick = match pick {
                None => Some((i, ratio)),
                Some((bi, br)) => {
                    if ratio.lt(&br)? || (!br.lt(&ratio)? && basis[i] < basis[bi]) {
                        Some((i, ratio))
                    } else {
                        Some((bi, br))
                    }
                }
            };
        }
        // phase-1 objective is bounded below by zero, so a pivot column
        // always has a positive entry; reaching here means backend damage
        let (piv, _) = pick?;
        let inv = one.div(&a[piv][e])?;
        for j in 0..width {
            a[piv][j] = a[piv][j].mul(&inv)?;
        }
        rhs[piv] = rhs[piv].mul(&inv)?;
        for i in 0..n_rows {
            if i == piv || a[i][e].is_zero() {
                continue;
            }
            let f = a[i][e].clone();
            for j in 0..width {
                let t = a[piv][j].mul(&f)?;
                a[i][j] = a[i][j].sub(&t)?;
            }
            let t = rhs[piv].mul(&f)?;
            rhs[i] = rhs[i].sub(&t)?;
        }
        let f = red[e].clone();
        for j in 0..width {
            let t = a[piv][j].mul(&f)?;
            red[j] = red[j].sub(&t)?;
        }
        basis[piv] = e;
    }
    if !optimal {
        return None;
    }

    // at optimality the objective equals the sum of basic artificial values
    let mut z = S::zero();
    for i in 0..n_rows {
        if basis[i] >= art_start {
            z = z.add(&rhs[i])?;
        }
    }
    if z.is_positive() {
        return Some(Feasibility::Infeasible);
    }
    // artificials left in the basis sit at value zero and do not affect
    // the structural witness
    let mut col_val: Vec<S> = vec![S::zero(); width];
    for i in 0..n_rows {
        col_val[basis[i]] = rhs[i].clone();
    }
    let mut witness = Vec::with_capacity(sys.num_vars);
    for v in 0..sys.num_vars {
        let (pos, neg) = cols.of_var[v];
        let val = match neg {
            None => col_val[pos].clone(),
            Some(neg) => col_val[pos].sub(&col_val[neg])?,
        };
        witness.push(val.to_rational());
    }
    Some(Feasibility::Feasible(witness))
}
