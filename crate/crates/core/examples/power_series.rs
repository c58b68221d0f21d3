//! Exact polynomial and power-series arithmetic over Q and GF(p).
//!
//! ```bash
//! cargo run --example power_series
//! ```

use tripair::algebra::{power_series_inverse, series_coefficients_of_quotient, taylor_coefficients, Field, Polynomial};

fn main() {
    let f = Polynomial::from_i64(Field::Q, &[1, -3, 0, 2]);
    let g = Polynomial::from_i64(Field::Q, &[4, 0, 1]);
    let (quot, rem) = f.divrem(&g).unwrap();
    println!("{f} divided by {g}: quotient {quot}, remainder {rem}");
    println!("gcd(f, f') = {}", f.gcd(&f.derivative()).unwrap());
    let inv = g.inverse_mod(&f).unwrap().unwrap();
    println!("g^-1 mod f = {inv}");

    let one = Field::Q.one();
    let taylor = taylor_coefficients(&f, &one, 4).unwrap();
    println!("f around 1: {:?}", taylor.iter().map(ToString::to_string).collect::<Vec<_>>());
    let series = power_series_inverse(g.coeffs(), 5).unwrap();
    println!("1/g = {:?} + ...", series.iter().map(ToString::to_string).collect::<Vec<_>>());
    let quotient = series_coefficients_of_quotient(&f, &g, &Field::Q.zero(), 4).unwrap();
    println!("f/g around 0: {:?}", quotient.iter().map(ToString::to_string).collect::<Vec<_>>());

    let gf7 = Field::prime(7).unwrap();
    let h = Polynomial::from_i64(gf7, &[3, 0, 1]);
    let roots: Vec<String> = gf7.elements().unwrap().filter(|x| h.eval(x).unwrap().is_zero()).map(|x| x.to_string()).collect();
    println!("roots of {h} over GF(7): {roots:?}");
}
