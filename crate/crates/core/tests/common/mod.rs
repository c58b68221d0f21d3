//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use tripair::algebra::{Field, FieldValue, Polynomial};
use tripair::tridiagonal::TridiagMatrix;

pub fn qi(v: i64) -> FieldValue {
    Field::Q.from_i64(v)
}

pub fn qr(n: i64, d: i64) -> FieldValue {
    Field::Q.ratio(n, d).unwrap()
}

pub fn qp(c: &[i64]) -> Polynomial {
    Polynomial::from_i64(Field::Q, c)
}

pub fn parse_poly(field: Field, coeffs: &[&str]) -> Polynomial {
    Polynomial::new(field, coeffs.iter().map(|c| field.parse_value(c).unwrap()).collect()).unwrap()
}

fn sign(perm: &[usize]) -> bool {
    perm.iter().tuple_combinations().filter(|(a, b)| a > b).count() % 2 == 0
}

/// Leibniz expansion of a square array of field values.
pub fn det_leibniz(field: Field, m: &[Vec<FieldValue>]) -> FieldValue {
    let n = m.len();
    (0..n).permutations(n).fold(field.zero(), |acc, perm| {
        let term = (0..n).fold(field.one(), |t, i| &t * &m[i][perm[i]]);
        if sign(&perm) {
            &acc + &term
        } else {
            &acc - &term
        }
    })
}

/// Leibniz expansion over the polynomial ring.
pub fn det_poly(field: Field, m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    (0..n).permutations(n).fold(Polynomial::zero(field), |acc, perm| {
        let term = (0..n).fold(Polynomial::one(field), |t, i| &t * &m[i][perm[i]]);
        if sign(&perm) {
            &acc + &term
        } else {
            &acc - &term
        }
    })
}

/// `det(tI - B)` where `B` is the trailing `k×k` block, expanded from scratch.
pub fn charpoly_oracle(a: &TridiagMatrix, k: usize) -> Polynomial {
    let f = a.field();
    let n = a.n();
    let off = n - k;
    let t = Polynomial::t(f);
    let rows: Vec<Vec<Polynomial>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let (gi, gj) = (i + off, j + off);
                    if gi == gj {
                        &t - &Polynomial::constant(a.diag()[gi].clone())
                    } else if gj == gi + 1 {
                        Polynomial::constant(-f.one())
                    } else if gi == gj + 1 {
                        Polynomial::constant(-a.sub()[gj].clone())
                    } else {
                        Polynomial::zero(f)
                    }
                })
                .collect()
        })
        .collect();
    if k == 0 {
        Polynomial::one(f)
    } else {
        det_poly(f, &rows)
    }
}

/// Hankel determinant `det H_k` by Leibniz expansion of the moments.
pub fn hankel_det_oracle(field: Field, moments: &[FieldValue], k: usize) -> FieldValue {
    let rows: Vec<Vec<FieldValue>> = (0..=k).map(|i| (0..=k).map(|j| moments[i + j].clone()).collect()).collect();
    det_leibniz(field, &rows)
}

/// Monic `P_k` from the bordered Hankel determinant
///
/// ```text
/// | m_0     ...  m_k      |
/// | ...               ... |
/// | m_{k-1} ...  m_{2k-1} |
/// | 1   t   ...  t^k      |
/// ```
///
/// divided by `det H_{k-1}`, expanded along the last row.
pub fn orthopoly_oracle(field: Field, moments: &[FieldValue], k: usize) -> Polynomial {
    if k == 0 {
        return Polynomial::one(field);
    }
    let hk1 = hankel_det_oracle(field, moments, k - 1);
    let mut coeffs = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let minor: Vec<Vec<FieldValue>> =
            (0..k).map(|i| (0..=k).filter(|&c| c != j).map(|c| moments[i + c].clone()).collect()).collect();
        let d = det_leibniz(field, &minor);
        let signed = if (k + j).is_multiple_of(2) { d } else { -d };
        coeffs.push(&signed / &hk1);
    }
    Polynomial::new(field, coeffs).unwrap()
}
