//! Build the tridiagonal matrix of a proper pair, and watch an improper pair fail.
//!
//! ```bash
//! cargo run --example realize_pair
//! ```

use tripair::algebra::{Field, Polynomial};
use tripair::realization::{realize, RealizationOutcome};
use tripair::tridiagonal::{charpoly_chain, TridiagMatrix};

fn main() {
    let p = Polynomial::from_i64(Field::Q, &[-2, 9, -6, 1]);
    let q = Polynomial::from_i64(Field::Q, &[5, -5, 1]);
    let out = realize(&p, &q).expect("valid pair");
    let RealizationOutcome::Realized { matrix, chain } = out else { unreachable!() };
    println!("p = {p}\nq = {q}");
    print!("matrix:\n{}", matrix.to_dense());
    for (k, pk) in chain.polys().iter().enumerate() {
        println!("p_{k} = {pk}");
    }
    assert_eq!(charpoly_chain(&matrix), chain);

    let p = Polynomial::from_i64(Field::Q, &[-30, -1, 6, 1]);
    let q = Polynomial::from_i64(Field::Q, &[-1, 0, 1]);
    match realize(&p, &q).expect("valid pair") {
        RealizationOutcome::NotProper(np) => println!(
            "\n({p}, {q}) is not proper: step {} left remainder {} of degree {:?}, wanted {}",
            np.step, np.remainder, np.remainder_degree, np.expected_degree
        ),
        RealizationOutcome::Realized { .. } => unreachable!(),
    }

    let gf5 = Field::prime(5).unwrap();
    let a = TridiagMatrix::from_i64(gf5, &[1, 2, 3, 4], &[1, 2, 3]).unwrap();
    let chain = charpoly_chain(&a);
    let (p, q) = (chain.top(), chain.second());
    let back = realize(p, q).unwrap().matrix().cloned().unwrap();
    println!("\nover GF(5): ({p}, {q}) gives back the matrix: {}", back == a);
}
