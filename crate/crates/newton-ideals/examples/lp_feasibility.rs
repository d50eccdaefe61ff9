//! Exact LP feasibility: build a small system, decide it, and print the
//! rational witness. Every verdict the library returns is backed by a
//! witness checked against the original constraints.

use newton_ideals::arith::{rat, ratio};
use newton_ideals::{lp_feasible, Feasibility, LinearSystem};
use std::collections::BTreeSet;

fn main() {
    // x + y = 1, 2x - y >= 0, with both variables nonnegative:
    // the standard description of a point in the segment hull question
    let mut sys = LinearSystem::new(2);
    sys.push_eq(vec![rat(1), rat(1)], rat(1));
    sys.push_ge(vec![rat(2), rat(-1)], rat(0));
    let nonneg: BTreeSet<usize> = [0, 1].into_iter().collect();

    match lp_feasible(&sys, &nonneg).unwrap() {
        Feasibility::Feasible(witness) => {
            println!("feasible, witness:");
            for (j, v) in witness.iter().enumerate() {
                println!("  x{} = {}", j + 1, v);
            }
            assert!(sys.check(&witness));
        }
        Feasibility::Infeasible => println!("infeasible"),
    }

    // tightening the system until it collapses: x + y = 1, x >= 2/3,
    // y >= 1/2 has no solution since 2/3 + 1/2 > 1
    let mut tight = LinearSystem::new(2);
    tight.push_eq(vec![rat(1), rat(1)], rat(1));
    tight.push_ge(vec![rat(1), rat(0)], ratio(2, 3));
    tight.push_ge(vec![rat(0), rat(1)], ratio(1, 2));
    let verdict = lp_feasible(&tight, &nonneg).unwrap();
    println!("tightened system feasible: {}", verdict.is_feasible());
}
