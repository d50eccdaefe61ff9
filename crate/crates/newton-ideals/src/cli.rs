//! Command-line front-end: request types, report rendering, and the
//! dispatch loop shared by the `newton-ideals` binary and the tests.
//!
//! Every command produces either a human-readable text report or a
//! single-line JSON document of the shape `{"ideal": …, "report": …}`;
//! struct field order is fixed, so identical invocations render
//! byte-identical JSON. Exit codes: 0 on success, 1 on computation errors
//! (including failed `verify` checks), 2 on parse errors (assigned by the
//! binary before a request exists).

use crate::closure::{check_closure_identity, integral_closure, normality_certificate, NormalityVerdict};
use crate::error::Result;
use crate::fiber::{analytic_spread, fiber_report, is_persistent_generator, Binomial};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::newton::{FaceReport, NewtonPolyhedron};
use crate::reduction::{
    bracket_power, minimal_monomial_reduction, reduction_number, reduction_report,
};
use itertools::Itertools;
use serde::Serialize;

/// Which analysis to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Reduce,
    Closure,
    Fiber,
    Verify,
}

/// Degree and search bounds; every bounded verdict carries its bound in
/// the output.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    /// Hilbert-function degree bound (`fiber`).
    pub hilbert: usize,
    /// Binomial fiber-degree bound for prime parts (`fiber`).
    pub binomial: u64,
    /// Search cutoff for reduction numbers (`verify`).
    pub cutoff: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            hilbert: 6,
            binomial: 4,
            cutoff: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// A fully parsed invocation.
#[derive(Debug, Clone)]
pub struct AnalysisRequest {
    pub command: Command,
    pub ideal: MonomialIdeal,
    pub bounds: Bounds,
    pub output: OutputFormat,
}

/// What the process should print and how it should exit.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Executes one request. Computation errors become exit code 1 with the
/// message on stderr; `verify` additionally exits 1 when a check fails.
pub fn run(request: &AnalysisRequest) -> RunOutcome {
    let result = match request.command {
        Command::Analyze => analyze(request),
        Command::Reduce => reduce(request),
        Command::Closure => closure(request),
        Command::Fiber => fiber(request),
        Command::Verify => return verify(request),
    };
    match result {
        Ok(stdout) => RunOutcome {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => RunOutcome {
            exit_code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

#[derive(Serialize)]
struct JsonEnvelope<'a, R: Serialize> {
    ideal: &'a MonomialIdeal,
    report: R,
}

fn to_json<R: Serialize>(ideal: &MonomialIdeal, report: R) -> String {
    let envelope = JsonEnvelope { ideal, report };
    let mut s = serde_json::to_string(&envelope).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct AnalyzeJson<'a> {
    ext: &'a [ExponentVector],
    #[serde(rename = "J")]
    reduction: &'a MonomialIdeal,
    slope_p: u64,
    spread_ell: usize,
    faces: &'a FaceReport,
}

fn analyze(request: &AnalysisRequest) -> Result<String> {
    let ideal = &request.ideal;
    let report = reduction_report(ideal)?;
    let spread = analytic_spread(ideal)?;
    let poly = NewtonPolyhedron::of(ideal)?;
    let faces = poly.face_report()?;
    if request.output == OutputFormat::Json {
        return Ok(to_json(
            ideal,
            AnalyzeJson {
                ext: poly.extreme_points(),
                reduction: &report.reduction,
                slope_p: report.slope_p,
                spread_ell: spread,
                faces: &faces,
            },
        ));
    }
    let mut out = String::new();
    out.push_str(&format!("ideal: {}\n", ideal));
    out.push_str(&format!(
        "extreme points ({}): {}\n",
        faces.vertices.len(),
        faces.vertices.iter().map(fmt_point).join(", ")
    ));
    out.push_str(&format!(
        "minimal monomial reduction J: {}\n",
        report.reduction
    ));
    out.push_str(&format!("input is extremal: {}\n", report.is_extremal_input));
    out.push_str(&format!("kodiyalam slope p: {}\n", report.slope_p));
    out.push_str(&format!("analytic spread l: {}\n", spread));
    let maximal = faces.faces.iter().filter(|f| f.maximal).count();
    out.push_str(&format!(
        "compact faces ({} total, {} maximal):\n",
        faces.faces.len(),
        maximal
    ));
    for f in &faces.faces {
        out.push_str(&format!(
            "  dim {} verts [{}] normal ({}) offset {}{}\n",
            f.dim,
            f.verts.iter().join(","),
            f.normal.iter().join(","),
            f.offset,
            if f.maximal { "  (maximal)" } else { "" }
        ));
    }
    Ok(out)
}

fn reduce(request: &AnalysisRequest) -> Result<String> {
    let ideal = &request.ideal;
    let report = reduction_report(ideal)?;
    if request.output == OutputFormat::Json {
        return Ok(to_json(ideal, &report));
    }
    Ok(format!(
        "ideal: {}\nminimal monomial reduction J: {}\nslope p: {}\ninput is extremal: {}\nextreme points: {}\n",
        ideal, report.reduction, report.slope_p, report.is_extremal_input, report.ext_count
    ))
}

#[derive(Serialize)]
struct ClosureJson<'a> {
    closure: &'a MonomialIdeal,
    was_closed: bool,
    normality: &'a crate::closure::NormalityCertificate,
}

fn closure(request: &AnalysisRequest) -> Result<String> {
    let ideal = &request.ideal;
    let closed = integral_closure(ideal)?;
    let was_closed = closed == *ideal;
    let cert = normality_certificate(ideal)?;
    if request.output == OutputFormat::Json {
        return Ok(to_json(
            ideal,
            ClosureJson {
                closure: &closed,
                was_closed,
                normality: &cert,
            },
        ));
    }
    let mut out = String::new();
    out.push_str(&format!("ideal: {}\n", ideal));
    out.push_str(&format!("integral closure: {}\n", closed));
    out.push_str(&format!("was already closed: {}\n", was_closed));
    out.push_str(&format!("analytic spread l: {}\n", cert.spread_ell));
    for (a, ok) in &cert.checked_powers {
        out.push_str(&format!(
            "power {}: {}\n",
            a,
            if *ok { "integrally closed" } else { "not closed" }
        ));
    }
    out.push_str(&format!(
        "normality: {}\n",
        match cert.verdict {
            NormalityVerdict::Normal => "normal".to_string(),
            NormalityVerdict::NotNormal(a) =>
                format!("not normal (power {a} is not integrally closed)"),
            NormalityVerdict::Inconclusive => "inconclusive".to_string(),
        }
    ));
    Ok(out)
}

fn fiber(request: &AnalysisRequest) -> Result<String> {
    let ideal = &request.ideal;
    let report = fiber_report(ideal, request.bounds.hilbert, request.bounds.binomial)?;
    if request.output == OutputFormat::Json {
        return Ok(to_json(ideal, &report));
    }
    let mut out = String::new();
    out.push_str(&format!("ideal: {}\n", ideal));
    out.push_str(&format!("reduction J: {}\n", report.reduction));
    out.push_str(&format!("analytic spread l: {}\n", report.spread_ell));
    out.push_str(&format!("fiber ring is a domain: {}\n", report.is_domain));
    out.push_str(&format!(
        "maximal compact faces ({}):\n",
        report.max_compact_faces.len()
    ));
    for f in &report.max_compact_faces {
        out.push_str(&format!(
            "  dim {} verts [{}] normal ({}) offset {}\n",
            f.dim,
            f.vertex_indices.iter().join(","),
            f.certificate.normal.iter().join(","),
            f.certificate.offset
        ));
    }
    out.push_str(&format!("minimal primes ({}):\n", report.primes.len()));
    for p in &report.primes {
        let monomials = if p.monomial_part.is_empty() {
            "(none)".to_string()
        } else {
            p.monomial_part
                .iter()
                .map(|&j| format!("y{}", j + 1))
                .join(", ")
        };
        let binomials = if p.binomial_part.is_empty() {
            "(none)".to_string()
        } else {
            p.binomial_part.iter().map(fmt_binomial).join(", ")
        };
        out.push_str(&format!(
            "  face [{}]  P = {}  B = {}\n",
            p.face.vertex_indices.iter().join(","),
            monomials,
            binomials
        ));
    }
    out.push_str(&format!(
        "hilbert actual  (k=1..{}): [{}]\n",
        request.bounds.hilbert,
        report.hilbert_actual.iter().join(", ")
    ));
    out.push_str(&format!(
        "hilbert reduced (k=1..{}): [{}]\n",
        request.bounds.hilbert,
        report.hilbert_reduced.iter().join(", ")
    ));
    out.push_str(&format!(
        "reducedness: {}\n",
        match report.reduced_verdict {
            crate::fiber::ReducednessVerdict::Reduced(k) =>
                format!("reduced up to degree {k}"),
            crate::fiber::ReducednessVerdict::NotReduced(k) =>
                format!("NOT reduced (dimensions differ at degree {k})"),
        }
    ));
    out.push_str(&format!(
        "radical monomial part: {}\n",
        if report.radical_monomial_part.is_zero() {
            "(none)".to_string()
        } else {
            report
                .radical_monomial_part
                .gens()
                .iter()
                .map(fmt_fiber_monomial)
                .join(", ")
        }
    ));
    out.push_str(&format!(
        "radical binomial part: {}\n",
        if report.radical_binomial_part.is_empty() {
            "(none)".to_string()
        } else {
            report.radical_binomial_part.iter().map(fmt_binomial).join(", ")
        }
    ));
    Ok(out)
}

#[derive(Serialize)]
struct CheckJson {
    name: String,
    pass: bool,
}

#[derive(Serialize)]
struct VerifyJson {
    checks: Vec<CheckJson>,
    all_passed: bool,
}

/// Re-derives the structural invariants on one ideal: bracket powers
/// against reductions of ordinary powers, the persistence criterion
/// against direct power expansion, the closure recursion across the
/// spread window, and the existence of a reduction number within the
/// cutoff. Exit code 1 if any check fails.
fn verify(request: &AnalysisRequest) -> RunOutcome {
    let ideal = &request.ideal;
    let mut checks: Vec<(String, bool)> = Vec::new();
    let outcome = (|| -> Result<()> {
        let j = minimal_monomial_reduction(ideal)?;
        let spread = analytic_spread(ideal)?;
        for m in 1..=4u64 {
            let pass = bracket_power(ideal, m)? == minimal_monomial_reduction(&ideal.power(m))?;
            checks.push((format!("bracket-power m={m}"), pass));
        }
        checks.push((
            "persistence (common face => minimal generator, sum l <= 4)".to_string(),
            persistence_holds(&j)?,
        ));
        for m in spread as u64..=(spread as u64 + 2) {
            let pass = check_closure_identity(ideal, m)?;
            checks.push((format!("closure-identity m={m}"), pass));
        }
        let r = reduction_number(ideal, &j, request.bounds.cutoff)?;
        checks.push((
            format!(
                "reduction-number r_J(I) = {} within cutoff {}",
                r, request.bounds.cutoff
            ),
            true,
        ));
        Ok(())
    })();
    if let Err(e) = outcome {
        return RunOutcome {
            exit_code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        };
    }
    let all_passed = checks.iter().all(|(_, p)| *p);
    let stdout = if request.output == OutputFormat::Json {
        to_json(
            ideal,
            VerifyJson {
                checks: checks
                    .iter()
                    .map(|(name, pass)| CheckJson {
                        name: name.clone(),
                        pass: *pass,
                    })
                    .collect(),
                all_passed,
            },
        )
    } else {
        let mut out = format!("ideal: {}\n", ideal);
        for (name, pass) in &checks {
            out.push_str(&format!(
                "check {}: {}\n",
                name,
                if *pass { "pass" } else { "FAIL" }
            ));
        }
        out.push_str(if all_passed {
            "all checks passed\n"
        } else {
            "SOME CHECKS FAILED\n"
        });
        out
    };
    RunOutcome {
        exit_code: if all_passed { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

/// The checkable direction of the persistence criterion: for every
/// support on a common compact face (sizes up to 3) and every positive
/// exponent tuple with sum at most 4, the product must be a minimal
/// generator of the corresponding power.
fn persistence_holds(j: &MonomialIdeal) -> Result<bool> {
    let r = j.num_min_gens();
    let powers: Vec<MonomialIdeal> = (1..=4u64).map(|m| j.power(m)).collect();
    for size in 1..=r.min(3) {
        for support in (0..r).combinations(size) {
            let ones = vec![1u64; size];
            if !is_persistent_generator(j, &support, &ones)? {
                continue;
            }
            for total in size as u64..=4 {
                for l in positive_compositions(total, size) {
                    let mut point = j.gens()[support[0]].scale(l[0]);
                    for (pos, &idx) in support.iter().enumerate().skip(1) {
                        point = point.add(&j.gens()[idx].scale(l[pos]));
                    }
                    if !powers[total as usize - 1].gens().contains(&point) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Compositions of `total` into `parts` strictly positive parts.
fn positive_compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn rec(total: u64, parts: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            if total >= 1 {
                cur.push(total);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for first in 1..=total.saturating_sub(parts as u64 - 1) {
            cur.push(first);
            rec(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    if parts == 0 || total < parts as u64 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

fn fmt_point(p: &ExponentVector) -> String {
    format!("({})", p.entries().iter().join(","))
}

/// Formats an exponent vector over the fiber variables `y1..yr`.
fn fmt_fiber_monomial(v: &ExponentVector) -> String {
    if v.is_zero() {
        return "1".to_string();
    }
    v.entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(j, &e)| {
            if e == 1 {
                format!("y{}", j + 1)
            } else {
                format!("y{}^{}", j + 1, e)
            }
        })
        .join("*")
}

fn fmt_binomial(b: &Binomial) -> String {
    format!("{} - {}", fmt_fiber_monomial(&b.lhs), fmt_fiber_monomial(&b.rhs))
}
