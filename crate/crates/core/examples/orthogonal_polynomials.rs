//! Orthogonal polynomials of a functional and the tridiagonal matrix of their recurrence.
//!
//! ```bash
//! cargo run --example orthogonal_polynomials
//! ```

use tripair::algebra::Field;
use tripair::functional::{orthopoly_sequence, recurrence_from_orthopolys, MomentFunctional};
use tripair::tridiagonal::{charpoly_chain, TridiagMatrix};

fn main() {
    let a = TridiagMatrix::from_i64(Field::Q, &[2, -1, 0, 3], &[1, 4, -2]).unwrap();
    let chain = charpoly_chain(&a);
    let l = MomentFunctional::from_pair(chain.top(), chain.second()).unwrap();
    let polys = orthopoly_sequence(&l, 4).unwrap();
    for (k, pk) in polys.iter().enumerate() {
        println!("P_{k} = {pk}    L(P_{k}^2) = {}", l.apply(&(pk * pk)).unwrap());
    }
    let back = recurrence_from_orthopolys(&polys).unwrap();
    println!("recurrence recovers the matrix: {}", back == a);

    let l = MomentFunctional::point_masses(
        [-1, 0, 2].iter().map(|&x| Field::Q.from_i64(x)).collect(),
        vec![Field::Q.one(), Field::Q.ratio(-1, 2).unwrap(), Field::Q.from_i64(3)],
    )
    .unwrap();
    match orthopoly_sequence(&l, 3) {
        Ok(polys) => println!("\nP_3 = {}", polys[3]),
        Err(e) => println!("\nstopped: {e}"),
    }

    let deriv = MomentFunctional::first_order_form(Field::Q.from_i64(2), Field::Q.from_i64(3)).unwrap();
    match orthopoly_sequence(&deriv, 3) {
        Ok(_) => println!("derivative form is quasi-definite"),
        Err(e) => println!("derivative form: {e}"),
    }
}
