//! Minimal monomial reductions: the unique smallest monomial ideal with
//! the same integral closure, its bracket powers, and the reduction
//! number measuring how fast the pair stabilizes.

use newton_ideals::{
    bracket_power, is_extremal, is_reduction, kodiyalam_slope, minimal_monomial_reduction,
    reduction_number, MonomialIdeal,
};

fn main() {
    let ideal = MonomialIdeal::parse_text("x^3, x^2 y, y^3", None).unwrap();
    let j = minimal_monomial_reduction(&ideal).unwrap();

    println!("I = {}", ideal);
    println!("J = {}", j);
    println!("I extremal: {}", is_extremal(&ideal).unwrap());
    println!("J extremal: {}", is_extremal(&j).unwrap());
    println!("slope p = {}", kodiyalam_slope(&ideal).unwrap());

    // J is a genuine reduction of I, and the reduction number says how
    // many steps of J * I^m = I^{m+1} are needed before equality
    assert!(is_reduction(&j, &ideal).unwrap());
    let drop_middle = MonomialIdeal::parse_text("x^3, y^3", None).unwrap();
    println!(
        "reduction number of (x^3, y^3) in I: {}",
        reduction_number(&ideal, &drop_middle, 20).unwrap()
    );

    // bracket powers scale the reduction's generators directly and agree
    // with reducing the honest power
    for m in 1..=3 {
        let bracket = bracket_power(&ideal, m).unwrap();
        let reduced_power = minimal_monomial_reduction(&ideal.power(m)).unwrap();
        println!("J^[{}] = {} (matches: {})", m, bracket, bracket == reduced_power);
    }
}
