//! Functionals built from derivatives at one point, and their Hankel determinants.
//!
//! ```bash
//! cargo run --example derivative_functionals
//! ```

use tripair::algebra::{Field, Polynomial};
use tripair::functional::{hankel_report, first_order_hankel_dets, second_order_hankel_dets, MomentFunctional};

fn main() {
    let a = Field::Q.from_i64(2);
    let (w1, w2) = (Field::Q.from_i64(3), Field::Q.from_i64(5));

    let l = MomentFunctional::first_order_form(a.clone(), w1.clone()).unwrap();
    let r = hankel_report(&l, 3);
    println!("-w^2 f(a) + w f'(a): dets {:?}, closed form {:?}",
        r.hankel_dets.iter().map(ToString::to_string).collect::<Vec<_>>(),
        first_order_hankel_dets(&w1).iter().map(ToString::to_string).collect::<Vec<_>>());

    let l = MomentFunctional::second_order_form(a.clone(), w1.clone(), w2.clone()).unwrap();
    let r = hankel_report(&l, 4);
    println!("second-order form: dets {:?}, closed form {:?}",
        r.hankel_dets.iter().map(ToString::to_string).collect::<Vec<_>>(),
        second_order_hankel_dets(&w1, &w2).iter().map(ToString::to_string).collect::<Vec<_>>());

    let cube = Polynomial::from_roots(Field::Q, &[a.clone(), a.clone(), a.clone()]).unwrap();
    let q = Polynomial::from_i64(Field::Q, &[1, -1, 1]);
    let single = MomentFunctional::from_single_root(&a, 3, &q).unwrap();
    let pair = MomentFunctional::from_pair(&cube, &q).unwrap();
    println!("single-root residue form agrees with the pair functional: {}", single.moments(6) == pair.moments(6));
}
