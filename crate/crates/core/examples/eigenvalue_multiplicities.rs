//! Tridiagonal matrices with prescribed eigenvalue multiplicities. An irreducible
//! tridiagonal matrix is nonderogatory, so every eigenvalue has a single Jordan block.
//!
//! ```bash
//! cargo run --example eigenvalue_multiplicities
//! ```

use tripair::algebra::{DenseMatrix, Field, Polynomial};
use tripair::realization::{find_proper_partner, realize};

fn main() {
    let roots: Vec<_> = [0, 1, -1].iter().map(|&r| Field::Q.from_i64(r)).collect();
    for mults in [[3, 1, 1], [2, 2, 1], [1, 1, 3]] {
        let spectrum: Vec<_> = roots.iter().zip(mults).flat_map(|(r, m)| std::iter::repeat_n(r.clone(), m)).collect();
        let p = Polynomial::from_roots(Field::Q, &spectrum).unwrap();
        let q = find_proper_partner(&p, 2000, 7).unwrap().expect("partner found");
        let m = realize(&p, &q).unwrap().matrix().cloned().unwrap();
        let dense = m.to_dense();
        let ranks: Vec<usize> = roots
            .iter()
            .map(|r| DenseMatrix::from_fn(Field::Q, 5, |i, j| if i == j { dense.get(i, j) - r } else { dense.get(i, j).clone() }).rank())
            .collect();
        println!("multiplicities {mults:?}: p = {p}\n  q = {q}\n  rank(A - rI) = {ranks:?}");
    }
}
