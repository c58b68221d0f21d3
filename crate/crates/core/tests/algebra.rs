mod common;

use common::{det_leibniz, qp};
use proptest::prelude::*;
use tripair::algebra::{
    is_prime, series_coefficients_of_quotient, taylor_coefficients, AlgebraError, DenseMatrix, Field, FieldValue, Polynomial,
};

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Q), Just(Field::Prime(2)), Just(Field::Prime(3)), Just(Field::Prime(7)), Just(Field::Prime(101))]
}

fn value_in(field: Field) -> impl Strategy<Value = FieldValue> {
    (-40i64..=40, 1i64..=9).prop_map(move |(n, d)| match field {
        Field::Rationals => field.ratio(n, d).unwrap(),
        Field::Prime(_) => field.from_i64(n),
    })
}

fn poly_in(field: Field, max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(value_in(field), 0..max_len).prop_map(move |c| Polynomial::new(field, c).unwrap())
}

fn field_and<T: std::fmt::Debug, S: Strategy<Value = T>>(f: impl Fn(Field) -> S + Clone + 'static) -> impl Strategy<Value = (Field, T)> {
    field_strategy().prop_flat_map(move |field| (Just(field), f(field)))
}

proptest! {
    #[test]
    fn field_axioms((_, (a, b, c)) in field_and(|f| (value_in(f), value_in(f), value_in(f)))) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
    }

    #[test]
    fn division_identity((_, (f, g)) in field_and(|fd| (poly_in(fd, 8), poly_in(fd, 5)))) {
        prop_assume!(!g.is_zero());
        let (q, r) = f.divrem(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.degree().is_none_or(|d| d < g.degree().unwrap()));
    }

    #[test]
    fn gcd_and_bezout((_, (f, g)) in field_and(|fd| (poly_in(fd, 7), poly_in(fd, 7)))) {
        prop_assume!(!f.is_zero() || !g.is_zero());
        let (d, s, t) = f.xgcd(&g).unwrap();
        prop_assert!(d.is_monic());
        prop_assert_eq!(&d, &f.gcd(&g).unwrap());
        prop_assert!(f.rem(&d).unwrap().is_zero());
        prop_assert!(g.rem(&d).unwrap().is_zero());
        prop_assert_eq!(&(&s * &f) + &(&t * &g), d);
    }

    #[test]
    fn modular_inverse((_, (f, m)) in field_and(|fd| (poly_in(fd, 6), poly_in(fd, 6)))) {
        prop_assume!(m.degree().is_some_and(|d| d >= 1));
        match f.inverse_mod(&m).unwrap() {
            Some(inv) => prop_assert!((&(&f * &inv).rem(&m).unwrap() - &Polynomial::one(m.field())).is_zero()),
            None => prop_assert!(f.gcd(&m).map_or(true, |g| g.degree() != Some(0))),
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism((_, (f, g, x)) in field_and(|fd| (poly_in(fd, 6), poly_in(fd, 6), value_in(fd)))) {
        prop_assert_eq!((&f * &g).eval(&x).unwrap(), &f.eval(&x).unwrap() * &g.eval(&x).unwrap());
        prop_assert_eq!((&f + &g).eval(&x).unwrap(), &f.eval(&x).unwrap() + &g.eval(&x).unwrap());
    }

    #[test]
    fn product_rule((_, (f, g)) in field_and(|fd| (poly_in(fd, 6), poly_in(fd, 6)))) {
        prop_assert_eq!((&f * &g).derivative(), &(&f.derivative() * &g) + &(&f * &g.derivative()));
    }

    #[test]
    fn taylor_reconstructs((_, (f, c)) in field_and(|fd| (poly_in(fd, 7), value_in(fd)))) {
        let coeffs = taylor_coefficients(&f, &c, 7).unwrap();
        let shift = Polynomial::linear_root(&c);
        let back = coeffs.iter().enumerate().fold(Polynomial::zero(f.field()), |acc, (k, a)| &acc + &shift.pow(k as u32).scale(a));
        prop_assert_eq!(back, f);
    }

    #[test]
    fn quotient_series_times_denominator((_, (f, g, c)) in field_and(|fd| (poly_in(fd, 5), poly_in(fd, 4), value_in(fd)))) {
        prop_assume!(!g.is_zero() && !g.eval(&c).unwrap().is_zero());
        let order = 6;
        let s = series_coefficients_of_quotient(&f, &g, &c, order).unwrap();
        let gt = taylor_coefficients(&g, &c, order).unwrap();
        let ft = taylor_coefficients(&f, &c, order).unwrap();
        for k in 0..order {
            let conv = (0..=k).fold(f.field().zero(), |acc, i| &acc + &(&gt[i] * &s[k - i]));
            prop_assert_eq!(&conv, &ft[k]);
        }
    }

    #[test]
    fn roots_are_roots((fd, roots) in field_and(|fd| prop::collection::vec(value_in(fd), 0..6))) {
        let p = Polynomial::from_roots(fd, &roots).unwrap();
        prop_assert_eq!(p.degree(), Some(roots.len()));
        for r in &roots {
            prop_assert!(p.eval(r).unwrap().is_zero());
        }
    }

    #[test]
    fn determinant_matches_expansion((fd, entries) in field_and(|fd| prop::collection::vec(value_in(fd), 16))) {
        let rows: Vec<Vec<FieldValue>> = entries.chunks(4).map(<[_]>::to_vec).collect();
        let m = DenseMatrix::from_rows(fd, rows.clone()).unwrap();
        let d = det_leibniz(fd, &rows);
        prop_assert_eq!(m.det(), d.clone());
        prop_assert_eq!(m.rank() == 4, !d.is_zero());
    }

    #[test]
    fn solve_satisfies_system((fd, entries) in field_and(|fd| prop::collection::vec(value_in(fd), 12))) {
        let rows: Vec<Vec<FieldValue>> = entries[..9].chunks(3).map(<[_]>::to_vec).collect();
        let m = DenseMatrix::from_rows(fd, rows.clone()).unwrap();
        let rhs = &entries[9..];
        match m.solve(rhs) {
            Some(x) => {
                for (row, b) in rows.iter().zip(rhs) {
                    let lhs = row.iter().zip(&x).fold(fd.zero(), |acc, (a, xi)| &acc + &(a * xi));
                    prop_assert_eq!(&lhs, b);
                }
            }
            None => prop_assert!(m.det().is_zero()),
        }
    }
}

#[test]
fn worked_values() {
    let p = qp(&[-30, -1, 6, 1]);
    let (q, r) = p.divrem(&qp(&[-1, 0, 1])).unwrap();
    assert_eq!((q, r), (qp(&[6, 1]), qp(&[-24])));
    assert_eq!(p.to_string(), "t^3 + 6t^2 - t - 30");
    assert_eq!(qp(&[-2, 1]).gcd(&qp(&[-1, 1])).unwrap(), qp(&[1]));
    let half = Polynomial::new(Field::Q, vec![Field::Q.ratio(1, 2).unwrap(), Field::Q.ratio(-3, 4).unwrap()]).unwrap();
    assert_eq!(half.to_string(), "-(3/4)t + 1/2");
}

#[test]
fn prime_field_edges() {
    assert!(is_prime(2) && is_prime(101) && !is_prime(1) && !is_prime(91));
    assert_eq!(Field::prime(91), Err(AlgebraError::NotPrime(91)));
    let gf2 = Field::prime(2).unwrap();
    // t^2 + t + 1 has no root in GF(2)
    let p = Polynomial::from_i64(gf2, &[1, 1, 1]);
    assert!(gf2.elements().unwrap().all(|x| !p.eval(&x).unwrap().is_zero()));
    assert_eq!(p.derivative(), Polynomial::from_i64(gf2, &[1]));
    assert_eq!("GF(7)".parse::<Field>().unwrap(), Field::Prime(7));
    assert_eq!(Field::Prime(7).parse_value("-1").unwrap(), Field::Prime(7).from_i64(6));
}

#[test]
fn mixed_fields_are_rejected() {
    let a = Field::Q.one();
    let b = Field::Prime(5).one();
    assert!(matches!(a.checked_add(&b), Err(AlgebraError::FieldMismatch { .. })));
    let p = qp(&[1, 1]);
    let q = Polynomial::from_i64(Field::Prime(5), &[1, 1]);
    assert!(p.checked_mul(&q).is_err());
    assert!(Field::Q.parse_value("1/0").is_err());
}
