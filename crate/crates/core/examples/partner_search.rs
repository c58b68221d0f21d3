//! Randomized search for a `q` that makes `(p, q)` proper.
//!
//! ```bash
//! cargo run --example partner_search
//! ```

use tripair::algebra::{Field, Polynomial};
use tripair::realization::{partner_search_report, realize};
use tripair::tridiagonal::common_eigenvalue_count;

fn main() {
    let one = Field::Q.one();
    let p = Polynomial::from_roots(Field::Q, &[one.clone(), one.clone(), one.clone(), one]).unwrap();
    let search = partner_search_report(&p, 1000, 42).unwrap();
    let q = search.partner.expect("a partner exists over Q");
    println!("p = {p}\nq = {q} (trial {:?})", search.trial);
    let m = realize(&p, &q).unwrap().matrix().cloned().unwrap();
    println!("{}", m.to_dense());
    println!("common eigenvalues with A(1): {}", common_eigenvalue_count(&m));

    let gf2 = Field::prime(2).unwrap();
    let p = Polynomial::from_i64(gf2, &[1, 0, 0, 1]);
    let search = partner_search_report(&p, 200, 42).unwrap();
    println!("\nGF(2) {p}: partner {:?} after {} trials", search.partner.map(|q| q.to_string()), search.budget);
}
