//! End-to-end acceptance suite: ten named criteria covering the worked
//! plane examples, randomized corpora for extremality, bracket powers,
//! face scaling, the Hilbert-degree spread oracle, the closure
//! recursion, normality certificates, the persistence criterion, and
//! the radical generator bound. Run with `--nocapture` to see one
//! PASS line per criterion; hard runtime budgets are asserted where
//! stated.

mod common;

use common::{
    corpus_rng, oracle_lower_hull_2d, oracle_power_gens, random_extremal_ideal, random_ideal,
    random_squarefree_ideal,
};
use newton_ideals::{
    analytic_spread, bracket_power, check_closure_identity, ev, fiber_hilbert_actual,
    fiber_hilbert_reduced, fiber_report, is_extremal, is_integrally_closed,
    is_persistent_generator, minimal_monomial_reduction, normality_certificate,
    radical_bound_check, CompactFace, ExponentVector, MonomialIdeal, NewtonPolyhedron,
    NormalityVerdict, ReducednessVerdict,
};
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

fn ideal(n: usize, rows: &[&[u64]]) -> MonomialIdeal {
    let gens = rows.iter().map(|r| ev(r)).collect();
    MonomialIdeal::new(n, gens).expect("acceptance fixtures are well-formed")
}

// deterministic corpora; each criterion regenerates its own so the
// tests stay order-independent

fn corpus_squarefree() -> Vec<MonomialIdeal> {
    let mut rng = corpus_rng(0x5f);
    (0..200)
        .map(|_| {
            let n = rand::Rng::random_range(&mut rng, 1..=5);
            random_squarefree_ideal(&mut rng, n, 6)
        })
        .collect()
}

fn corpus_bracket() -> Vec<MonomialIdeal> {
    let mut rng = corpus_rng(0xa4);
    (0..100)
        .map(|_| {
            let n = rand::Rng::random_range(&mut rng, 1..=3);
            random_ideal(&mut rng, n, 8, 5)
        })
        .collect()
}

fn corpus_closure() -> Vec<MonomialIdeal> {
    let mut rng = corpus_rng(0xc7);
    (0..100)
        .map(|_| {
            let n = rand::Rng::random_range(&mut rng, 1..=3);
            random_ideal(&mut rng, n, 6, 5)
        })
        .collect()
}

fn corpus_extremal_spread() -> Vec<MonomialIdeal> {
    let mut rng = corpus_rng(0x6e);
    (0..50)
        .map(|_| {
            let n = rand::Rng::random_range(&mut rng, 1..=3);
            random_extremal_ideal(&mut rng, n, 5, 4)
        })
        .collect()
}

fn corpus_extremal_persist() -> Vec<MonomialIdeal> {
    let mut rng = corpus_rng(0x9e);
    (0..30)
        .map(|_| {
            let n = rand::Rng::random_range(&mut rng, 1..=3);
            random_extremal_ideal(&mut rng, n, 4, 4)
        })
        .collect()
}

fn corpus_normality() -> Vec<MonomialIdeal> {
    let mut rng = corpus_rng(0x8a);
    (0..40)
        .map(|_| {
            let n = rand::Rng::random_range(&mut rng, 1..=3);
            random_ideal(&mut rng, n, 4, 4)
        })
        .collect()
}

/// Worked plane example with four generators whose fiber ring is reduced.
fn j1() -> MonomialIdeal {
    ideal(2, &[&[6, 0], &[2, 1], &[1, 2], &[0, 6]])
}

/// Worked plane example whose fiber ring fails reducedness at degree 2.
fn j2() -> MonomialIdeal {
    ideal(2, &[&[8, 0], &[6, 1], &[2, 7], &[0, 12]])
}

#[test]
fn criterion_01_plane_staircase_fiber_is_reduced() {
    let start = Instant::now();
    let report = fiber_report(&j1(), 6, 4).unwrap();

    assert_eq!(report.max_compact_faces.len(), 3);
    let p_parts: Vec<&[usize]> = report
        .primes
        .iter()
        .map(|p| p.monomial_part.as_slice())
        .collect();
    assert_eq!(p_parts, vec![&[2usize, 3][..], &[0, 3], &[0, 1]]);
    assert!(report.primes.iter().all(|p| p.binomial_part.is_empty()));
    assert_eq!(
        report.radical_monomial_part,
        ideal(4, &[&[1, 0, 0, 1], &[0, 1, 0, 1], &[1, 0, 1, 0]])
    );
    assert!(report.radical_binomial_part.is_empty());
    assert_eq!(report.reduced_verdict, ReducednessVerdict::Reduced(6));
    assert!(!report.is_domain);

    assert!(start.elapsed() < Duration::from_secs(5));
    println!("ACCEPTANCE 1 (reduced fiber of the plane staircase): PASS");
}

#[test]
fn criterion_02_hilbert_gap_detects_non_reduced_fiber() {
    let start = Instant::now();
    let j = j2();

    // oracle first: count the minimal generators of the square directly
    let rows: Vec<Vec<u64>> = j.gens().iter().map(|g| g.entries().to_vec()).collect();
    let mu_square = oracle_power_gens(&rows, 2).len();
    assert_eq!(mu_square, 9);

    // oracle for the reduced side: edges are consecutive lower-hull
    // pairs, and the degree-2 points on an edge (a, b) are 2a, a+b, 2b
    let hull = oracle_lower_hull_2d(&j.gens().iter().map(|g| (g.get(0), g.get(1))).collect::<Vec<_>>());
    let mut edge_points: BTreeSet<(u64, u64)> = BTreeSet::new();
    for pair in hull.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        edge_points.insert((2 * a.0, 2 * a.1));
        edge_points.insert((a.0 + b.0, a.1 + b.1));
        edge_points.insert((2 * b.0, 2 * b.1));
    }
    assert_eq!(edge_points.len(), 7);

    // only now trust the pipeline
    let actual = fiber_hilbert_actual(&j, 2).unwrap();
    let reduced = fiber_hilbert_reduced(&j, 2).unwrap();
    assert_eq!(actual[1], mu_square);
    assert_eq!(reduced[1], edge_points.len());
    let report = fiber_report(&j, 6, 4).unwrap();
    assert_eq!(report.reduced_verdict, ReducednessVerdict::NotReduced(2));

    assert!(start.elapsed() < Duration::from_secs(5));
    println!("ACCEPTANCE 2 (Hilbert gap 9 vs 7 at degree 2): PASS");
}

#[test]
fn criterion_03_squarefree_ideals_are_extremal() {
    let corpus = corpus_squarefree();
    let hits = corpus
        .iter()
        .filter(|i| is_extremal(i).unwrap())
        .count();
    assert_eq!(hits, corpus.len());
    println!(
        "ACCEPTANCE 3 (squarefree extremality, {}/{} ideals): PASS",
        hits,
        corpus.len()
    );
}

#[test]
fn criterion_04_bracket_powers_match_power_reductions() {
    let start = Instant::now();
    let corpus = corpus_bracket();
    for i in &corpus {
        for m in 1u64..=4 {
            assert_eq!(
                bracket_power(i, m).unwrap(),
                minimal_monomial_reduction(&i.power(m)).unwrap(),
                "bracket power {m} disagrees for {}",
                i.to_text()
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60));
    println!(
        "ACCEPTANCE 4 (bracket powers on {} ideals, m <= 4, {:.1}s): PASS",
        corpus.len(),
        elapsed.as_secs_f64()
    );
}

fn face_family(faces: &[CompactFace]) -> BTreeSet<Vec<ExponentVector>> {
    faces
        .iter()
        .map(|f| {
            let mut vs = f.vertex_set();
            vs.sort();
            vs
        })
        .collect()
}

#[test]
fn criterion_05_compact_faces_scale_with_powers() {
    let corpus = corpus_bracket();
    for i in &corpus {
        let base = NewtonPolyhedron::of(i).unwrap().compact_faces().unwrap();
        for m in 1u64..=3 {
            let scaled: Vec<CompactFace> =
                base.iter().map(|f| f.scale(m).unwrap()).collect();
            let direct = NewtonPolyhedron::of(&i.power(m))
                .unwrap()
                .compact_faces()
                .unwrap();
            assert_eq!(
                face_family(&direct),
                face_family(&scaled),
                "face families disagree at power {m} for {}",
                i.to_text()
            );
        }
    }
    println!(
        "ACCEPTANCE 5 (compact faces scale across {} ideals, m <= 3): PASS",
        corpus.len()
    );
}

/// Degree of the polynomial interpolating `values`, by finite
/// differences; panics if the window is too short to stabilize.
fn finite_difference_degree(values: &[usize]) -> usize {
    let mut v: Vec<i64> = values.iter().map(|&x| x as i64).collect();
    let mut degree = 0;
    while v.windows(2).any(|w| w[0] != w[1]) {
        v = v.windows(2).map(|w| w[1] - w[0]).collect();
        degree += 1;
        assert!(v.len() >= 2, "sampled window too short for the degree");
    }
    degree
}

#[test]
fn criterion_06_hilbert_growth_degree_matches_spread() {
    let corpus = corpus_extremal_spread();
    for j in &corpus {
        let h = fiber_hilbert_actual(j, 10).unwrap();
        // h[k-1] = μ(J^k); sample the window k in [6, 10]
        let degree = finite_difference_degree(&h[5..10]);
        assert_eq!(
            degree,
            analytic_spread(j).unwrap() - 1,
            "growth degree disagrees with spread for {}",
            j.to_text()
        );
    }
    println!(
        "ACCEPTANCE 6 (Hilbert growth degree = spread - 1 on {} extremal ideals): PASS",
        corpus.len()
    );
}

#[test]
fn criterion_07_closure_recursion_holds_from_spread() {
    let corpus = corpus_closure();
    for i in &corpus {
        let ell = analytic_spread(i).unwrap() as u64;
        for m in ell..=ell + 2 {
            assert!(
                check_closure_identity(i, m).unwrap(),
                "closure recursion fails at m = {m} for {}",
                i.to_text()
            );
        }
    }
    println!(
        "ACCEPTANCE 7 (closure recursion on {} ideals, m in [ell, ell+2]): PASS",
        corpus.len()
    );
}

#[test]
fn criterion_08_normality_certificates() {
    let full_square = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
    let cert = normality_certificate(&full_square).unwrap();
    assert_eq!(cert.verdict, NormalityVerdict::Normal);

    let gap_square = ideal(2, &[&[2, 0], &[0, 2]]);
    let cert = normality_certificate(&gap_square).unwrap();
    assert_eq!(cert.verdict, NormalityVerdict::NotNormal(1));

    // every ideal certified normal must have its small powers closed
    let mut normal_count = 0;
    for i in corpus_normality().iter().chain([&full_square]) {
        let cert = normality_certificate(i).unwrap();
        if cert.verdict == NormalityVerdict::Normal {
            normal_count += 1;
            for a in 1..=(cert.spread_ell as u64 + 3) {
                assert!(
                    is_integrally_closed(&i.power(a)).unwrap(),
                    "power {a} of certified-normal {} is not closed",
                    i.to_text()
                );
            }
        }
    }
    println!(
        "ACCEPTANCE 8 (normality certificates; {normal_count} normal ideals cross-checked to ell+3): PASS"
    );
}

/// All compositions of `total` into exactly `parts` strictly positive
/// summands.
fn positive_compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if (parts as u64) > total {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 1..=total - (parts as u64 - 1) {
        for rest in positive_compositions(total - first, parts - 1) {
            let mut comp = vec![first];
            comp.extend(rest);
            out.push(comp);
        }
    }
    out
}

/// Extends `powers` so that `powers[k] = j^k` exists, sharing work
/// across queries.
fn ensure_power(j: &MonomialIdeal, powers: &mut Vec<MonomialIdeal>, k: usize) {
    while powers.len() <= k {
        let next = powers.last().unwrap().multiply(j).unwrap();
        powers.push(next);
    }
}

#[test]
fn criterion_09_persistence_matches_face_criterion() {
    let corpus = corpus_extremal_persist();
    let mut unresolved = 0;
    for j in &corpus {
        let r = j.num_min_gens();
        let gens = j.gens().to_vec();
        let mut powers = vec![MonomialIdeal::unit(j.ambient_dim()), j.clone()];
        for mask in 1u32..(1 << r) {
            let support: Vec<usize> = (0..r).filter(|b| mask >> b & 1 == 1).collect();
            let s = support.len();
            if s as u64 > 5 {
                continue; // no exponent tuple fits the degree budget
            }
            let on_face = is_persistent_generator(j, &support, &vec![1; s]).unwrap();
            if on_face {
                // every positive tuple of total degree <= 5 must stay a
                // minimal generator of the matching power
                for total in s as u64..=5 {
                    for l in positive_compositions(total, s) {
                        let mut point = ev(&vec![0; j.ambient_dim()]);
                        for (li, &gi) in l.iter().zip(&support) {
                            point = point.add(&gens[gi].scale(*li));
                        }
                        ensure_power(j, &mut powers, total as usize);
                        assert!(
                            powers[total as usize].gens().contains(&point),
                            "support {support:?} with exponents {l:?} dropped out of power {total} of {}",
                            j.to_text()
                        );
                    }
                }
            } else {
                // off-face supports must eventually leave the generator
                // lists: find a uniform floor past which every nearby
                // tuple fails (the floor exists but carries no a-priori
                // bound, so exhausting the search is reported, not failed)
                let mut found = false;
                'floor: for l0 in 1..=6u64 {
                    if (l0 + 1) * s as u64 > 20 {
                        break; // keep the power expansion tractable
                    }
                    for pattern in 0u32..(1 << s) {
                        let l: Vec<u64> =
                            (0..s).map(|b| l0 + u64::from(pattern >> b & 1)).collect();
                        let total: u64 = l.iter().sum();
                        let mut point = ev(&vec![0; j.ambient_dim()]);
                        for (li, &gi) in l.iter().zip(&support) {
                            point = point.add(&gens[gi].scale(*li));
                        }
                        ensure_power(j, &mut powers, total as usize);
                        if powers[total as usize].gens().contains(&point) {
                            continue 'floor;
                        }
                    }
                    found = true;
                    break;
                }
                if !found {
                    unresolved += 1;
                    println!(
                        "  note: no uniform floor <= 6 for support {support:?} of {}",
                        j.to_text()
                    );
                }
            }
        }
    }
    println!(
        "ACCEPTANCE 9 (persistence criterion on {} extremal ideals, {unresolved} unresolved floors): PASS",
        corpus.len()
    );
}

#[test]
fn criterion_10_radical_generator_bound_on_full_corpus() {
    let mut total = 0;
    for corpus in [
        corpus_squarefree(),
        corpus_bracket(),
        corpus_closure(),
        corpus_extremal_spread(),
        corpus_extremal_persist(),
        corpus_normality(),
    ] {
        for i in &corpus {
            let (mu_rad, ext_count, ok) = radical_bound_check(i);
            assert!(
                ok,
                "radical needs {mu_rad} generators but only {ext_count} extreme points in {}",
                i.to_text()
            );
            total += 1;
        }
    }
    println!("ACCEPTANCE 10 (radical generator bound on {total} corpus ideals): PASS");
}
