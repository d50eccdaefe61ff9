//! Newton polyhedra: extreme points, rational membership queries, and
//! the staircase geometry behind them.

use newton_ideals::arith::{rat, ratio};
use newton_ideals::{ev, MonomialIdeal, NewtonPolyhedron};

fn main() {
    // x^8, x^6 y, x^2 y^7, y^12 — four generators, all extreme
    let ideal = MonomialIdeal::parse_text("x^8, x^6 y, x^2 y^7, y^12", None).unwrap();
    let p = NewtonPolyhedron::of(&ideal).unwrap();

    println!("ideal: {}", ideal);
    println!("extreme points:");
    for v in p.extreme_points() {
        println!("  {:?}", v.entries());
    }

    // integer membership: a monomial lies in the polyhedron exactly when
    // it is integral over the ideal
    for probe in [ev(&[5, 13]), ev(&[1, 1])] {
        println!(
            "({}, {}) in conv(I): {}",
            probe.get(0),
            probe.get(1),
            p.contains_exponent(&probe).unwrap()
        );
    }

    // rational membership: the boundary passes through (5, 25/2)
    let boundary = [rat(5), ratio(25, 2)];
    println!("(5, 25/2) in conv(I): {}", p.contains(&boundary).unwrap());

    // dropping a generator that was not extreme changes nothing
    let padded = MonomialIdeal::parse_text("x^8, x^6 y, x^5 y^5, x^2 y^7, y^12", None).unwrap();
    let q = NewtonPolyhedron::of(&padded).unwrap();
    println!(
        "padded ideal has the same extreme points: {}",
        q.extreme_points() == p.extreme_points()
    );
}
