//! Moments of the functional attached to a pair and its Hankel determinants.
//!
//! ```bash
//! cargo run --example hankel_moments
//! ```

use tripair::algebra::{Field, Polynomial};
use tripair::functional::{constant_term_ratios, hankel_report, quasi_definite_equivalence, MomentFunctional};

fn strings(v: &[tripair::algebra::FieldValue]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn main() {
    let p = Polynomial::from_i64(Field::Q, &[-2, 9, -6, 1]);
    let q = Polynomial::from_i64(Field::Q, &[5, -5, 1]);
    let l = MomentFunctional::from_pair(&p, &q).unwrap();
    println!("moments: {:?}", strings(&l.moments(8)));
    let report = hankel_report(&l, 3);
    println!("det H_k: {:?}", strings(&report.hankel_dets));
    println!("det H~_k: {:?}", strings(&report.tilde_dets));
    let ratios: Vec<String> = constant_term_ratios(&report).into_iter().map(|r| r.map_or("-".into(), |v| v.to_string())).collect();
    println!("P_k(0) from determinants: {ratios:?}");

    let roots: Vec<_> = [0, 1, 2].iter().map(|&r| Field::Q.from_i64(r)).collect();
    let p = Polynomial::from_roots(Field::Q, &roots).unwrap();
    let q = Polynomial::from_i64(Field::Q, &[3, 1, 1]);
    let residues = MomentFunctional::from_distinct_roots(&p, &q, &roots).unwrap();
    let pair = MomentFunctional::from_pair(&p, &q).unwrap();
    println!("\npoint-mass moments {:?}", strings(&residues.moments(5)));
    println!("pair moments       {:?}", strings(&pair.moments(5)));

    for (p, q) in [
        (Polynomial::from_i64(Field::Q, &[-30, -1, 6, 1]), Polynomial::from_i64(Field::Q, &[-1, 0, 1])),
        (Polynomial::from_i64(Field::Q, &[0, -2, 0, 1]), Polynomial::from_i64(Field::Q, &[-1, 0, 1])),
    ] {
        let e = quasi_definite_equivalence(&p, &q).unwrap();
        println!("({p}, {q}): proper {}, quasi-definite {}", e.proper, e.quasi_definite);
    }
}
