//! The fiber ring of an extremal ideal: analytic spread, minimal primes
//! indexed by maximal compact faces, and the degree-by-degree
//! reducedness verdict.

use newton_ideals::{fiber_report, MonomialIdeal, ReducednessVerdict};

fn main() {
    let ideal = MonomialIdeal::parse_text("x^6, x^2 y, x y^2, y^6", None).unwrap();
    let report = fiber_report(&ideal, 6, 4).unwrap();

    println!("J = {}", report.reduction);
    println!("analytic spread l = {}", report.spread_ell);
    println!("maximal compact faces: {}", report.max_compact_faces.len());
    println!("fiber ring is a domain: {}", report.is_domain);

    for prime in &report.primes {
        let vars: Vec<String> = prime
            .monomial_part
            .iter()
            .map(|j| format!("y{}", j + 1))
            .collect();
        println!(
            "prime over face {:?}: P = ({}), {} binomials",
            prime.face.vertex_indices,
            vars.join(", "),
            prime.binomial_part.len()
        );
    }

    println!("hilbert actual:  {:?}", report.hilbert_actual);
    println!("hilbert reduced: {:?}", report.hilbert_reduced);
    match report.reduced_verdict {
        ReducednessVerdict::Reduced(k) => println!("fiber ring reduced up to degree {k}"),
        ReducednessVerdict::NotReduced(k) => {
            println!("fiber ring NOT reduced: Hilbert functions split at degree {k}")
        }
    }
    // the radical's monomial part lives in the fiber variables y1..yr
    let monomials: Vec<String> = report
        .radical_monomial_part
        .gens()
        .iter()
        .map(|g| {
            g.entries()
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
                .collect::<Vec<_>>()
                .join("*")
        })
        .collect();
    println!("radical monomial part: ({})", monomials.join(", "));
}
