//! Shared test infrastructure: independent brute-force oracles and the
//! deterministic random corpora used by the property and acceptance
//! suites. Everything here is deliberately naive — quadratic scans,
//! exhaustive enumeration, textbook hull chains — so that agreement with
//! the library is evidence, not circularity.

#![allow(dead_code)] // each integration test binary uses its own subset

use itertools::Itertools;
use newton_ideals::{ev, ExponentVector, LinearSystem, MonomialIdeal, Rational, Relation};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Naive minimalization: quadratic divisibility scan with dedup.
pub fn oracle_minimalize(points: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let set: BTreeSet<Vec<u64>> = points.iter().cloned().collect();
    let mut out: Vec<Vec<u64>> = Vec::new();
    for p in &set {
        let dominated = set
            .iter()
            .any(|q| q != p && q.iter().zip(p).all(|(a, b)| a <= b));
        if !dominated {
            out.push(p.clone());
        }
    }
    out
}

/// Brute-force generators of the m-th power: every sum of m generators
/// (with repetition), then minimalized. Independent of the library's
/// incremental product-and-minimalize pipeline.
pub fn oracle_power_gens(gens: &[Vec<u64>], m: usize) -> Vec<Vec<u64>> {
    let n = gens[0].len();
    let mut sums: Vec<Vec<u64>> = Vec::new();
    let mut stack = vec![(0usize, vec![0u64; n], 0usize)];
    while let Some((start, acc, used)) = stack.pop() {
        if used == m {
            sums.push(acc);
            continue;
        }
        for (i, g) in gens.iter().enumerate().skip(start) {
            let next: Vec<u64> = acc.iter().zip(g).map(|(a, b)| a + b).collect();
            stack.push((i, next, used + 1));
        }
    }
    oracle_minimalize(&sums)
}

/// Extreme points of `conv(points) + R^2_{>=0}` for the plane case, by a
/// monotone lower-hull chain over the Pareto-minimal points. Returned in
/// ascending x order.
pub fn oracle_lower_hull_2d(points: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let minimal: BTreeSet<(u64, u64)> = points
        .iter()
        .filter(|p| {
            !points
                .iter()
                .any(|q| q != *p && q.0 <= p.0 && q.1 <= p.1)
        })
        .copied()
        .collect();
    let sorted: Vec<(u64, u64)> = minimal.into_iter().collect(); // x ascending, y descending along the staircase
    let mut hull: Vec<(u64, u64)> = Vec::new();
    for &p in &sorted {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // pop b when it is on or above the segment a--p (cross <= 0:
            // the walk a -> b -> p fails to turn left)
            let cross = (b.0 as i128 - a.0 as i128) * (p.1 as i128 - a.1 as i128)
                - (b.1 as i128 - a.1 as i128) * (p.0 as i128 - a.0 as i128);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// Feasibility of a linear system by exhaustive basic-solution
/// enumeration: free variables are split into positive and negative
/// parts, `>=` rows get slack columns, and every maximal independent
/// column subset is solved exactly by Gaussian elimination and checked
/// for nonnegativity. A nonempty region of this pointed form always has
/// a basic feasible solution, so the scan is a complete decision
/// procedure (exponential, test-sized inputs only).
pub fn oracle_lp_feasible(sys: &LinearSystem, nonneg: &BTreeSet<usize>) -> bool {
    let n = sys.num_vars;
    // columns: one per nonneg var, two (pos/neg) per free var, one slack per >= row
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    let rows = sys.constraints.len();
    for j in 0..n {
        let col: Vec<Rational> = sys.constraints.iter().map(|c| c.coeffs[j].clone()).collect();
        if nonneg.contains(&j) {
            columns.push(col);
        } else {
            columns.push(col.clone());
            columns.push(col.iter().map(|v| -v.clone()).collect());
        }
    }
    for (i, c) in sys.constraints.iter().enumerate() {
        rhs.push(c.rhs.clone());
        if c.relation == Relation::Ge {
            let mut slack = vec![Rational::zero(); rows];
            slack[i] = -Rational::from_integer(1.into());
            columns.push(slack);
        }
    }
    if rows == 0 {
        return true;
    }
    // try every column subset of size up to the row count
    let m = columns.len();
    for size in 0..=rows.min(m) {
        for chosen in (0..m).combinations(size) {
            if let Some(solution) = solve_exact(&columns, &chosen, &rhs) {
                if solution.iter().all(|v| *v >= Rational::zero()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Solves `columns[chosen] * x = rhs` exactly; `None` when inconsistent
/// or underdetermined on the chosen columns.
fn solve_exact(columns: &[Vec<Rational>], chosen: &[usize], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let k = chosen.len();
    // augmented matrix, rows x (k + 1)
    let mut mat: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = chosen.iter().map(|&c| columns[c][i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivot_of_col: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            return None; // dependent column: skip this basis
        };
        mat.swap(r, p);
        let inv = mat[r][c].clone();
        for v in mat[r].iter_mut() {
            *v = &*v / &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for c2 in 0..=k {
                    let sub = &mat[r][c2] * &f;
                    mat[i][c2] = &mat[i][c2] - &sub;
                }
            }
        }
        pivot_of_col.push(r);
        r += 1;
    }
    // remaining rows must be consistent
    for i in r..rows {
        if !mat[i][k].is_zero() {
            return None;
        }
    }
    Some((0..k).map(|c| mat[pivot_of_col[c]][k].clone()).collect())
}

/// Brute-force integral-dependence witness: the least `k <= bound` with
/// `k*b` divisible by a generator of `I^k`, or `None`.
pub fn oracle_dependence_witness(
    ideal: &MonomialIdeal,
    b: &ExponentVector,
    bound: u64,
) -> Option<u64> {
    for k in 1..=bound {
        let target = b.scale(k);
        let power = oracle_power_gens(
            &ideal.gens().iter().map(|g| g.entries().to_vec()).collect::<Vec<_>>(),
            k as usize,
        );
        if power
            .iter()
            .any(|g| g.iter().zip(target.entries()).all(|(a, t)| a <= t))
        {
            return Some(k);
        }
    }
    None
}

/// Fixed-seed generator for reproducible corpora.
pub fn corpus_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random nonzero proper monomial ideal: every generator is a nonzero
/// vector with entries in `0..=max_exp`.
pub fn random_ideal(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_exp: u64,
    max_gens: usize,
) -> MonomialIdeal {
    let count = rng.random_range(1..=max_gens);
    let gens: Vec<ExponentVector> = (0..count)
        .map(|_| {
            let mut v: Vec<u64> = (0..n).map(|_| rng.random_range(0..=max_exp)).collect();
            if v.iter().all(|&e| e == 0) {
                let j = rng.random_range(0..n);
                v[j] = rng.random_range(1..=max_exp.max(1));
            }
            ev(&v)
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("generators share the ambient dimension")
}

/// A random proper squarefree ideal.
pub fn random_squarefree_ideal(rng: &mut ChaCha8Rng, n: usize, max_gens: usize) -> MonomialIdeal {
    let count = rng.random_range(1..=max_gens);
    let gens: Vec<ExponentVector> = (0..count)
        .map(|_| {
            let mut v: Vec<u64> = (0..n).map(|_| rng.random_range(0..=1)).collect();
            if v.iter().all(|&e| e == 0) {
                v[rng.random_range(0..n)] = 1;
            }
            ev(&v)
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("generators share the ambient dimension")
}

/// A random extremal ideal: the minimal monomial reduction of a random
/// ideal (idempotence makes the result extremal by construction).
pub fn random_extremal_ideal(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_exp: u64,
    max_gens: usize,
) -> MonomialIdeal {
    let i = random_ideal(rng, n, max_exp, max_gens);
    newton_ideals::minimal_monomial_reduction(&i).expect("nonzero by construction")
}
