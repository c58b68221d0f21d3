//! Closed-form Hankel determinants for point-mass and derivative functionals.

use itertools::Itertools;

use super::FunctionalError;
use crate::algebra::{AlgebraError, FieldValue, Polynomial};

/// `Σ_{|Ω| = k+1} (Π_{i∈Ω} ω_i) · V(x_Ω)²`, the conjectured value of `det H_k`
/// for `Σ ω_i f(x_i)`. Empty when `k + 1` exceeds the number of nodes.
pub fn conjecture_formula(nodes: &[FieldValue], weights: &[FieldValue], k: usize) -> Result<FieldValue, FunctionalError> {
    if nodes.len() != weights.len() {
        return Err(FunctionalError::LengthMismatch { nodes: nodes.len(), weights: weights.len() });
    }
    let field = nodes.first().ok_or(FunctionalError::Arity { needed: "at least 1", got: 0 })?.field();
    for v in nodes.iter().chain(weights) {
        if v.field() != field {
            return Err(AlgebraError::FieldMismatch { left: field, right: v.field() }.into());
        }
    }
    if let Some((_, x)) = nodes.iter().enumerate().find(|(i, x)| nodes[..*i].contains(x)) {
        return Err(FunctionalError::RepeatedNode { node: x.clone() });
    }
    if let Some(index) = weights.iter().position(FieldValue::is_zero) {
        return Err(FunctionalError::ZeroWeight { index });
    }
    Ok((0..nodes.len()).combinations(k + 1).fold(field.zero(), |acc, omega| {
        let w = omega.iter().fold(field.one(), |p, &i| &p * &weights[i]);
        let v = omega
            .iter()
            .tuple_combinations()
            .fold(field.one(), |p, (&i, &j)| &p * &(&nodes[j] - &nodes[i]).square());
        &acc + &(&w * &v)
    }))
}

/// `Σ 1/p'(x_j)` over the supplied roots of `p`. Zero when they are all of its roots, distinct, and `deg p > 1`.
pub fn sum_reciprocal_derivative(p: &Polynomial, roots: &[FieldValue]) -> Result<FieldValue, FunctionalError> {
    match p.degree() {
        Some(d) if d > 1 => {}
        d => return Err(FunctionalError::DegreeMismatch { p: d, q: None }),
    }
    let dp = p.derivative();
    roots.iter().try_fold(p.field().zero(), |acc, x| {
        let d = dp.eval(x)?;
        if d.is_zero() {
            return Err(FunctionalError::RepeatedRoot { root: x.clone() });
        }
        Ok(&acc + &d.inv()?)
    })
}

/// Closed forms of `det H_0 .. det H_3` for four point masses.
pub fn four_point_hankel_dets(x: &[FieldValue; 4], w: &[FieldValue; 4]) -> [FieldValue; 4] {
    let d = |i: usize, j: usize| (&x[j] - &x[i]).square();
    let [wa, wb, wc, wd] = w;
    let h0 = &(&(wa + wb) + wc) + wd;
    let h1 = [
        &(wa * wb) * &d(0, 1),
        &(wa * wc) * &d(0, 2),
        &(wa * wd) * &d(0, 3),
        &(wb * wc) * &d(1, 2),
        &(wb * wd) * &d(1, 3),
        &(wc * wd) * &d(2, 3),
    ]
    .iter()
    .fold(x[0].field().zero(), |acc, v| &acc + v);
    let h2 = [
        &(&(wa * wb) * wc) * &(&(&d(0, 1) * &d(0, 2)) * &d(1, 2)),
        &(&(wa * wb) * wd) * &(&(&d(0, 1) * &d(0, 3)) * &d(1, 3)),
        &(&(wa * wc) * wd) * &(&(&d(0, 2) * &d(0, 3)) * &d(2, 3)),
        &(&(wb * wc) * wd) * &(&(&d(1, 2) * &d(1, 3)) * &d(2, 3)),
    ]
    .iter()
    .fold(x[0].field().zero(), |acc, v| &acc + v);
    let vand = [d(0, 1), d(0, 2), d(0, 3), d(1, 2), d(1, 3), d(2, 3)].iter().fold(x[0].field().one(), |p, v| &p * v);
    let h3 = &(&(&(wa * wb) * wc) * wd) * &vand;
    [h0, h1, h2, h3]
}

/// `m_0, m_1, m_2` of `ω f'(a) - ω² f(a)`.
pub fn first_order_moments(a: &FieldValue, w: &FieldValue) -> [FieldValue; 3] {
    let two = a.field().from_i64(2);
    let w2 = w.square();
    [-w2.clone(), w - &(&w2 * a), &(&(&two * w) * a) - &(&w2 * &a.square())]
}

/// `det H_0 = det H_1 = -ω²`; every later determinant vanishes.
pub fn first_order_hankel_dets(w: &FieldValue) -> [FieldValue; 2] {
    [-w.square(), -w.square()]
}

/// `m_0, m_1, m_2` of `ω₁ f''(a) - 2ω₂ω₁² f'(a) - 2ω₁² f(a) + 2ω₂²ω₁³ f(a)`.
pub fn second_order_moments(a: &FieldValue, w1: &FieldValue, w2: &FieldValue) -> [FieldValue; 3] {
    let f = a.field();
    let two = f.from_i64(2);
    let w1sq = w1.square();
    let w1cu = &w1sq * w1;
    let c = &(&two * &w2.square()) * &w1cu;
    let m0 = &c - &(&two * &w1sq);
    let m1 = &(&(&c * a) - &(&(&two * a) * &w1sq)) - &(&(&two * w2) * &w1sq);
    let m2 = &(&(&(&c * &a.square()) - &(&(&two * &a.square()) * &w1sq)) - &(&(&(&f.from_i64(4) * a) * w2) * &w1sq))
        + &(&two * w1);
    [m0, m1, m2]
}

/// `det H_0 = 2ω₁²(ω₁ω₂² - 1)`, `det H_1 = -4ω₁³`, `det H_2 = -8ω₁³`; later ones vanish.
pub fn second_order_hankel_dets(w1: &FieldValue, w2: &FieldValue) -> [FieldValue; 3] {
    let f = w1.field();
    let w1sq = w1.square();
    let w1cu = &w1sq * w1;
    let h0 = &(&f.from_i64(2) * &w1sq) * &(&(w1 * &w2.square()) - &f.one());
    [h0, -(&f.from_i64(4) * &w1cu), -(&f.from_i64(8) * &w1cu)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::functional::{hankel_report, MomentFunctional};

    fn i(v: i64) -> FieldValue {
        Field::Q.from_i64(v)
    }

    #[test]
    fn reciprocal_derivative_sums() {
        let p = Polynomial::from_i64(Field::Q, &[-1, 0, 1]);
        assert!(sum_reciprocal_derivative(&p, &[i(1), i(-1)]).unwrap().is_zero());
        let roots = [i(2), i(-3), i(-5)];
        let p = Polynomial::from_roots(Field::Q, &roots).unwrap();
        assert!(sum_reciprocal_derivative(&p, &roots).unwrap().is_zero());
        assert!(sum_reciprocal_derivative(&Polynomial::from_i64(Field::Q, &[1, 1]), &[i(-1)]).is_err());
        let sq = Polynomial::from_i64(Field::Q, &[1, -2, 1]).pow(2);
        assert!(matches!(sum_reciprocal_derivative(&sq, &[i(1)]), Err(FunctionalError::RepeatedRoot { .. })));
    }

    #[test]
    fn conjecture_edges() {
        let x = [i(0), i(1), i(3), i(7)];
        let w = [i(2), i(-1), i(5), i(3)];
        assert_eq!(conjecture_formula(&x, &w, 0).unwrap(), i(9));
        assert!(conjecture_formula(&x, &w, 4).unwrap().is_zero());
        assert_eq!(conjecture_formula(&x, &w, 3).unwrap(), four_point_hankel_dets(&x, &w)[3]);
    }

    #[test]
    fn four_point_against_determinants() {
        let x = [i(-2), i(1), i(4), i(5)];
        let w = [i(1), i(3), i(-2), i(7)];
        let l = MomentFunctional::point_masses(x.to_vec(), w.to_vec()).unwrap();
        let r = hankel_report(&l, 6);
        assert_eq!(r.hankel_dets[..4], four_point_hankel_dets(&x, &w));
        assert!(r.hankel_dets[4..].iter().all(FieldValue::is_zero));
    }

    #[test]
    fn second_order_values() {
        let (a, w1, w2) = (i(2), i(3), i(-1));
        let l = MomentFunctional::second_order_form(a.clone(), w1.clone(), w2.clone()).unwrap();
        assert_eq!(l.moments(3), second_order_moments(&a, &w1, &w2));
        let r = hankel_report(&l, 4);
        assert_eq!(r.hankel_dets[..3], second_order_hankel_dets(&w1, &w2));
        assert!(r.hankel_dets[3].is_zero());
        assert_ne!(r.hankel_dets[1], -(&i(4) * &w1.square()));
    }
}
