//! Three ways to decide properness: division, leading coefficients, principal minor sums.
//!
//! ```bash
//! cargo run --example proper_pair_criteria
//! ```

use tripair::algebra::{Field, Polynomial};
use tripair::realization::{bk_via_coefficients, check_proper, check_theorem10, coefficient_test, minor_sum_conditions_pair};
use tripair::tridiagonal::{charpoly_chain, common_eigenvalue_count, TridiagMatrix};

fn show(label: &str, p: &Polynomial, q: &Polynomial) {
    let division = check_proper(p, q).unwrap().is_proper();
    let coeff = coefficient_test(p, q).unwrap();
    let minors = minor_sum_conditions_pair(p, q).unwrap();
    println!("{label}: division {division}, coefficients {} (first zero b at {:?}), minor sums {minors:?}",
        coeff.is_proper(), coeff.first_zero);
}

fn main() {
    let a = TridiagMatrix::from_i64(Field::Q, &[0, 3, 1, 2], &[5, -9, 4]).unwrap();
    let chain = charpoly_chain(&a);
    show("irreducible 4x4", chain.top(), chain.second());
    let b: Vec<String> = bk_via_coefficients(&chain).iter().map(ToString::to_string).collect();
    println!("  b from coefficients: {b:?}");
    let report = check_theorem10(&a);
    println!("  minor-sum values {:?}, diagonal recovered: {}",
        report.values.iter().map(ToString::to_string).collect::<Vec<_>>(), report.diagonal_matches);

    let reducible = TridiagMatrix::from_i64(Field::Q, &[1, 2, 3, 4], &[2, 0, 1]).unwrap();
    let chain = charpoly_chain(&reducible);
    show("reducible 4x4", chain.top(), chain.second());
    println!("  shared eigenvalues with A(1): {}", common_eigenvalue_count(&reducible));

    show("cubic", &Polynomial::from_i64(Field::Q, &[-30, -1, 6, 1]), &Polynomial::from_i64(Field::Q, &[-1, 0, 1]));
    show("quartic", &Polynomial::from_i64(Field::Q, &[24, 22, -7, -4, 1]), &Polynomial::from_i64(Field::Q, &[6, -7, 0, 1]));
}
