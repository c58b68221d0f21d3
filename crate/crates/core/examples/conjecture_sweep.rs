//! Random check of the closed form for Hankel determinants of point-mass functionals.
//!
//! ```bash
//! cargo run --release --example conjecture_sweep
//! ```

use tripair::algebra::Field;
use tripair::functional::{conjecture_formula, conjecture_sweep, hankel_report, MomentFunctional};

fn main() {
    let nodes: Vec<_> = [0, 1, 3].iter().map(|&x| Field::Q.from_i64(x)).collect();
    let weights: Vec<_> = [2, -1, 5].iter().map(|&w| Field::Q.from_i64(w)).collect();
    let l = MomentFunctional::point_masses(nodes.clone(), weights.clone()).unwrap();
    let report = hankel_report(&l, 4);
    for k in 0..4 {
        let formula = conjecture_formula(&nodes, &weights, k).unwrap();
        println!("k={k}: det {} formula {formula}", report.hankel_dets[k]);
    }

    for field in [Field::Q, Field::prime(101).unwrap()] {
        for n in 1..=5 {
            let sweep = conjecture_sweep(field, n, 40, 1);
            println!("{field} n={n}: {} checks, {} failures", sweep.checks, sweep.failures.len());
        }
    }
}
