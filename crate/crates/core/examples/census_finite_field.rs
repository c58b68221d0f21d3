//! Which monic polynomials over GF(p) are characteristic polynomials of an
//! irreducible normalized tridiagonal matrix.
//!
//! ```bash
//! cargo run --release --example census_finite_field
//! ```

use tripair::algebra::{Field, Polynomial};
use tripair::census::{is_realizable, run_census, DEFAULT_BUDGET};

fn main() {
    for (p, n) in [(2, 3), (2, 4), (3, 3), (5, 2)] {
        let report = run_census(p, n, DEFAULT_BUDGET).unwrap();
        let s = report.summary();
        println!("GF({p}) n={n}: {} matrices, {}/{} polynomials attained, missing {:?}",
            s.total_matrices, s.realizable_count, s.total_monic_polys, s.unrealizable);
    }

    let gf2 = Field::prime(2).unwrap();
    for coeffs in [[1, 0, 0, 1], [1, 1, 0, 1]] {
        let poly = Polynomial::from_i64(gf2, &coeffs);
        match is_realizable(&poly, DEFAULT_BUDGET).unwrap() {
            Some(m) => println!("{poly}: realized by\n{}", m.to_dense()),
            None => println!("{poly}: no irreducible tridiagonal matrix"),
        }
    }
}
