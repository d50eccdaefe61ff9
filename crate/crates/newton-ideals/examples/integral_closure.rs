//! Integral closures of monomial ideals — the lattice points of the
//! Newton polyhedron — and the normality certificate built from the
//! closure recursion.

use newton_ideals::{
    analytic_spread, check_closure_identity, integral_closure, is_integrally_closed,
    normality_certificate, MonomialIdeal, NormalityVerdict,
};

fn main() {
    // x^2, y^2 misses the mixed monomial xy that is integral over it
    let gap = MonomialIdeal::parse_text("x^2, y^2", None).unwrap();
    let closed = integral_closure(&gap).unwrap();
    println!("I = {}", gap);
    println!("closure(I) = {}", closed);
    println!("I closed: {}", is_integrally_closed(&gap).unwrap());

    let cert = normality_certificate(&gap).unwrap();
    match cert.verdict {
        NormalityVerdict::Normal => println!("I is normal"),
        NormalityVerdict::NotNormal(a) => println!("I is not normal: power {a} is not closed"),
        NormalityVerdict::Inconclusive => println!("normality undecided"),
    }

    // the filled staircase is normal, and the closure recursion
    // closure(I^m) = J * closure(I^{m-1}) holds from the spread onward
    let full = MonomialIdeal::parse_text("x^2, x y, y^2", None).unwrap();
    let cert = normality_certificate(&full).unwrap();
    println!("\nI = {}", full);
    println!("verdict: {:?}", cert.verdict);
    let ell = analytic_spread(&full).unwrap() as u64;
    for m in ell..=ell + 2 {
        println!(
            "closure recursion at m = {}: {}",
            m,
            check_closure_identity(&full, m).unwrap()
        );
    }
}
