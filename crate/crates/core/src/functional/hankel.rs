use super::{FunctionalError, MomentFunctional};
use crate::algebra::{DenseMatrix, FieldValue, Polynomial};
use crate::realization::check_proper;
use crate::tridiagonal::TridiagMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelReport {
    /// `m_0, ..., m_{2n-2}`.
    pub moments: Vec<FieldValue>,
    /// `det H_0, ..., det H_{n-1}`.
    pub hankel_dets: Vec<FieldValue>,
    /// `det H̃_0, ..., det H̃_{n-2}`, where `H̃_k` has entries `m_{i+j+1}`.
    pub tilde_dets: Vec<FieldValue>,
    pub quasi_definite: bool,
}

impl HankelReport {
    /// First `k` with `det H_k = 0`.
    pub fn first_singular(&self) -> Option<usize> {
        self.hankel_dets.iter().position(FieldValue::is_zero)
    }
}

/// `(k+1)×(k+1)` matrix with entry `(i, j) = m_{i+j}`.
pub fn hankel_matrix(moments: &[FieldValue], k: usize) -> DenseMatrix {
    shifted(moments, k, 0)
}

/// `(k+1)×(k+1)` matrix with entry `(i, j) = m_{i+j+1}`.
pub fn tilde_hankel_matrix(moments: &[FieldValue], k: usize) -> DenseMatrix {
    shifted(moments, k, 1)
}

fn shifted(moments: &[FieldValue], k: usize, offset: usize) -> DenseMatrix {
    let field = moments[0].field();
    DenseMatrix::from_fn(field, k + 1, |i, j| moments[i + j + offset].clone())
}

pub fn hankel_report(l: &MomentFunctional, n: usize) -> HankelReport {
    let moments = l.moments((2 * n).saturating_sub(1).max(1));
    let hankel_dets: Vec<FieldValue> = (0..n).map(|k| hankel_matrix(&moments, k).det()).collect();
    let tilde_dets = (0..n.saturating_sub(1)).map(|k| tilde_hankel_matrix(&moments, k).det()).collect();
    HankelReport {
        quasi_definite: hankel_dets.iter().all(|d| !d.is_zero()),
        moments,
        hankel_dets,
        tilde_dets,
    }
}

/// Monic `P_0, ..., P_n` orthogonal with respect to `l`.
///
/// `P_k = t^k + Σ c_i t^i` where `H_{k-1} c = -(m_k, ..., m_{2k-1})`.
pub fn orthopoly_sequence(l: &MomentFunctional, n: usize) -> Result<Vec<Polynomial>, FunctionalError> {
    let field = l.field();
    let moments = l.moments(2 * n);
    let mut out = vec![Polynomial::one(field)];
    for k in 1..=n {
        let h = hankel_matrix(&moments, k - 1);
        let rhs: Vec<FieldValue> = (0..k).map(|j| -moments[k + j].clone()).collect();
        let mut coeffs = h.solve(&rhs).ok_or(FunctionalError::NotQuasiDefinite { level: k - 1 })?;
        coeffs.push(field.one());
        out.push(Polynomial::new(field, coeffs)?);
    }
    Ok(out)
}

/// Read `t P_k = P_{k+1} + α P_k + β P_{k-1}` off consecutive members and
/// place `α`, `β` as `a_{n-k}`, `b_{n-k}`.
pub fn recurrence_from_orthopolys(polys: &[Polynomial]) -> Result<TridiagMatrix, FunctionalError> {
    let n = polys.len().saturating_sub(1);
    if n == 0 {
        return Err(FunctionalError::Arity { needed: "at least 2", got: polys.len() });
    }
    let field = polys[0].field();
    for (k, p) in polys.iter().enumerate() {
        if p.field() != field {
            return Err(crate::algebra::AlgebraError::FieldMismatch { left: field, right: p.field() }.into());
        }
        if p.degree() != Some(k) || !p.is_monic() {
            return Err(FunctionalError::NotMonic { which: "orthogonal polynomial" });
        }
    }
    let mut diag = vec![field.zero(); n];
    let mut sub = vec![field.zero(); n - 1];
    for k in 0..n {
        let r = &polys[k].shift(1) - &polys[k + 1];
        let alpha = r.coeff(k);
        if k >= 1 {
            sub[n - k - 1] = (&r - &polys[k].scale(&alpha)).coeff(k - 1);
        }
        diag[n - k - 1] = alpha;
    }
    Ok(TridiagMatrix::new(field, diag, sub)?)
}

/// `(-1)^k det H̃_{k-1} / det H_{k-1}` for `k = 1, ..., n-1`; `None` when
/// `H_{k-1}` is singular. For a quasi-definite functional the `k`th entry is `P_k(0)`.
pub fn constant_term_ratios(report: &HankelReport) -> Vec<Option<FieldValue>> {
    report
        .tilde_dets
        .iter()
        .zip(&report.hankel_dets)
        .enumerate()
        .map(|(i, (tilde, h))| {
            let ratio = tilde.checked_div(h).ok()?;
            Some(if i % 2 == 0 { -ratio } else { ratio })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub proper: bool,
    pub quasi_definite: bool,
}

impl Equivalence {
    pub fn agrees(&self) -> bool {
        self.proper == self.quasi_definite
    }
}

/// Properness by division and quasi-definiteness of the pair functional, computed independently.
pub fn quasi_definite_equivalence(p: &Polynomial, q: &Polynomial) -> Result<Equivalence, FunctionalError> {
    let l = MomentFunctional::from_pair(p, q)?;
    let proper = check_proper(p, q)?.is_proper();
    let n = p.degree().expect("validated");
    Ok(Equivalence { proper, quasi_definite: hankel_report(&l, n).quasi_definite })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::realization::realize;

    fn q(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(Field::Q, c)
    }

    fn i(v: i64) -> FieldValue {
        Field::Q.from_i64(v)
    }

    #[test]
    fn single_point_mass() {
        let l = MomentFunctional::point_masses(vec![i(4)], vec![i(3)]).unwrap();
        let r = hankel_report(&l, 2);
        assert_eq!(r.hankel_dets, vec![i(3), i(0)]);
        assert!(!r.quasi_definite);
        assert_eq!(r.first_singular(), Some(1));
    }

    #[test]
    fn first_order_dets() {
        let l = MomentFunctional::first_order_form(i(2), i(5)).unwrap();
        let r = hankel_report(&l, 4);
        assert_eq!(r.hankel_dets, vec![i(-25), i(-25), i(0), i(0)]);
    }

    #[test]
    fn orthopolys_are_trailing_chain() {
        let a = TridiagMatrix::from_i64(Field::Q, &[1, -2, 0, 3], &[2, -1, 5]).unwrap();
        let chain = crate::tridiagonal::charpoly_chain(&a);
        let l = MomentFunctional::from_pair(chain.top(), chain.second()).unwrap();
        let polys = orthopoly_sequence(&l, 4).unwrap();
        assert_eq!(polys, chain.polys());
        assert_eq!(recurrence_from_orthopolys(&polys).unwrap(), a);
    }

    #[test]
    fn path_graph_equivalence() {
        let e = quasi_definite_equivalence(&q(&[0, -2, 0, 1]), &q(&[-1, 0, 1])).unwrap();
        assert_eq!(e, Equivalence { proper: true, quasi_definite: true });
        let e = quasi_definite_equivalence(&q(&[-30, -1, 6, 1]), &q(&[-1, 0, 1])).unwrap();
        assert_eq!(e, Equivalence { proper: false, quasi_definite: false });
    }

    #[test]
    fn singular_level_reported() {
        let l = MomentFunctional::point_masses(vec![i(1)], vec![i(1)]).unwrap();
        assert_eq!(orthopoly_sequence(&l, 3), Err(FunctionalError::NotQuasiDefinite { level: 1 }));
    }

    #[test]
    fn constant_terms_carry_alternating_sign() {
        let (p, qq) = (q(&[-2, 9, -6, 1]), q(&[5, -5, 1]));
        let l = MomentFunctional::from_pair(&p, &qq).unwrap();
        let r = hankel_report(&l, 3);
        let polys = orthopoly_sequence(&l, 3).unwrap();
        let ratios = constant_term_ratios(&r);
        for k in 1..3 {
            assert_eq!(ratios[k - 1].as_ref(), Some(&polys[k].coeff(0)));
        }
        let m = realize(&p, &qq).unwrap();
        assert_eq!(recurrence_from_orthopolys(&polys).unwrap(), *m.matrix().unwrap());
    }
}
