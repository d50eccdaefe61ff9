//! Convex-geometric analysis of monomial ideals.
//!
//! This crate computes the standard polyhedral invariants of a monomial
//! ideal in a polynomial ring, all over exact rational arithmetic:
//!
//! - the **Newton polyhedron** (convex hull of the generator exponents plus
//!   the nonnegative orthant), its extreme points, supporting hyperplanes,
//!   and its lattice of compact faces ([`newton`]);
//! - the unique **minimal monomial reduction**, Kodiyalam slope, bracket
//!   powers, and reduction numbers ([`reduction`]);
//! - **integral closures** of powers, the closure recursion for large
//!   powers, and normality certificates ([`closure`]);
//! - the **fiber-ring** invariants of an extremal ideal: analytic spread,
//!   persistent generators, graded Hilbert data, minimal primes over the
//!   compact-face lattice, and a reducedness verdict ([`fiber`]).
//!
//! Every geometric predicate reduces to exact linear-program feasibility
//! ([`arith::lp_feasible`]); certificates (supporting hyperplanes, convex
//! weights) are returned with results so that every claim can be re-checked
//! independently.
//!
//! The `newton-ideals` binary exposes the same pipeline as a small command
//! line tool; see [`cli`]. Runnable walkthroughs live in `examples/`.

pub mod arith;
pub mod cli;
pub mod closure;
pub mod error;
pub mod fiber;
pub mod ideal;
pub mod newton;
pub mod reduction;

pub use arith::{lp_feasible, Feasibility, LinearSystem, Rational, Relation};
pub use closure::{
    check_closure_identity, closure_report, integral_closure, is_integrally_closed,
    normality_certificate, ClosureReport, NormalityCertificate, NormalityVerdict,
};
pub use error::{Error, Result};
pub use fiber::{
    analytic_spread, face_lattice_hilbert_crosscheck, fiber_hilbert_actual,
    fiber_hilbert_reduced, fiber_report, is_fiber_domain, is_persistent_generator,
    minimal_primes, reducedness_verdict, Binomial, FiberPrime, FiberReport, ReducednessVerdict,
};
pub use ideal::{ev, ExponentVector, MonomialIdeal};
pub use newton::{CompactFace, FaceReport, NewtonPolyhedron, SupportingHyperplane};
pub use reduction::{
    bracket_power, is_extremal, is_reduction, kodiyalam_slope, minimal_monomial_reduction,
    radical_bound_check, reduction_number, reduction_report, ReductionReport,
};
