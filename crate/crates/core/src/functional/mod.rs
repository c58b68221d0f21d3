//! Linear functionals on `F[t]`, their moments, Hankel determinants and
//! orthogonal polynomial sequences.
//!
//! The functional attached to a coprime pair `(p, q)` is
//!
//! ```text
//! L(f) = Σ_{p(λ) = 0} Res_{z=λ} f(z) / (p(z) q(z))
//! ```
//!
//! summed over the roots of `p` only. Writing `r = f · q⁻¹ mod p`, the sum
//! equals the coefficient of `t^{n-1}` in `r`, which needs neither roots nor
//! derivatives and is valid over any field. For distinct roots it is
//! `Σ f(λ) / (p'(λ) q(λ))`; for a single root `a` of multiplicity `n` it is
//! the coefficient of `(z-a)^{n-1}` in `f/q` at `a`. Its monic orthogonal
//! polynomials are exactly the trailing characteristic polynomials of the
//! tridiagonal matrix realizing `(p, q)`.

mod closed_forms;
mod hankel;
mod sweep;

pub use closed_forms::{
    conjecture_formula, four_point_hankel_dets, first_order_hankel_dets, first_order_moments, second_order_hankel_dets,
    second_order_moments, sum_reciprocal_derivative,
};
pub use sweep::{conjecture_sweep, ConjectureSweep, Counterexample, SWEEP_BOUND};
pub use hankel::{
    constant_term_ratios, hankel_matrix, hankel_report, orthopoly_sequence, quasi_definite_equivalence,
    recurrence_from_orthopolys, tilde_hankel_matrix, Equivalence, HankelReport,
};

use thiserror::Error;

use crate::algebra::{series_coefficients_of_quotient, AlgebraError, Field, FieldValue, Polynomial};
use crate::realization::RealizeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctionalError {
    #[error("p and q share the factor {gcd}")]
    CommonFactor { gcd: Polynomial },
    #[error("degree mismatch: deg p = {p:?}, deg q = {q:?}, expected deg p = deg q + 1 >= 1")]
    DegreeMismatch { p: Option<usize>, q: Option<usize> },
    #[error("{which} is not monic")]
    NotMonic { which: &'static str },
    #[error("{nodes} nodes but {weights} weights")]
    LengthMismatch { nodes: usize, weights: usize },
    #[error("node {node} appears more than once")]
    RepeatedNode { node: FieldValue },
    #[error("weight at index {index} is zero")]
    ZeroWeight { index: usize },
    #[error("derivative vanishes at supplied root {root}")]
    RepeatedRoot { root: FieldValue },
    #[error("Hankel matrix H_{level} is singular")]
    NotQuasiDefinite { level: usize },
    #[error("functional needs {needed} parameters, got {got}")]
    Arity { needed: &'static str, got: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Realize(#[from] RealizeError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentFunctional {
    field: Field,
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    SpectralPair { p: Polynomial, q: Polynomial, q_inv: Polynomial },
    PointMass { nodes: Vec<FieldValue>, weights: Vec<FieldValue> },
    /// `Σ_j weights[j] · f^{(j)}(center)`.
    DerivativeForm { center: FieldValue, weights: Vec<FieldValue> },
    /// `scale · [(z-center)^{order-1}] f(z) / cofactor(z)`.
    LocalResidue { center: FieldValue, order: usize, cofactor: Polynomial, scale: FieldValue },
    Combination(Vec<MomentFunctional>),
}

/// Which constructor a functional came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctionalKind {
    SpectralPair,
    PointMass,
    DerivativeForm,
    LocalResidue,
    Combination,
}

fn same_field(a: Field, b: Field) -> Result<(), FunctionalError> {
    if a == b {
        Ok(())
    } else {
        Err(AlgebraError::FieldMismatch { left: a, right: b }.into())
    }
}

impl MomentFunctional {
    /// The residue functional of a coprime pair with `deg p = deg q + 1`.
    pub fn from_pair(p: &Polynomial, q: &Polynomial) -> Result<Self, FunctionalError> {
        same_field(p.field(), q.field())?;
        match (p.degree(), q.degree()) {
            (Some(dp), Some(dq)) if dp == dq + 1 => {}
            (dp, dq) => return Err(FunctionalError::DegreeMismatch { p: dp, q: dq }),
        }
        if !p.is_monic() {
            return Err(FunctionalError::NotMonic { which: "p" });
        }
        if !q.is_monic() {
            return Err(FunctionalError::NotMonic { which: "q" });
        }
        let Some(q_inv) = q.inverse_mod(p)? else {
            return Err(FunctionalError::CommonFactor { gcd: p.gcd(q)? });
        };
        Ok(MomentFunctional { field: p.field(), repr: Repr::SpectralPair { p: p.clone(), q: q.clone(), q_inv } })
    }

    /// `Σ ω_i f(x_i)` with distinct nodes and nonzero weights.
    pub fn point_masses(nodes: Vec<FieldValue>, weights: Vec<FieldValue>) -> Result<Self, FunctionalError> {
        if nodes.len() != weights.len() {
            return Err(FunctionalError::LengthMismatch { nodes: nodes.len(), weights: weights.len() });
        }
        let field = nodes.first().map(FieldValue::field).ok_or(FunctionalError::Arity { needed: "at least 1", got: 0 })?;
        for v in nodes.iter().chain(&weights) {
            same_field(field, v.field())?;
        }
        for (i, x) in nodes.iter().enumerate() {
            if nodes[..i].contains(x) {
                return Err(FunctionalError::RepeatedNode { node: x.clone() });
            }
        }
        if let Some(index) = weights.iter().position(FieldValue::is_zero) {
            return Err(FunctionalError::ZeroWeight { index });
        }
        Ok(MomentFunctional { field, repr: Repr::PointMass { nodes, weights } })
    }

    /// `Σ_j weights[j] · f^{(j)}(center)` with formal derivatives.
    pub fn derivative_form(center: FieldValue, weights: Vec<FieldValue>) -> Result<Self, FunctionalError> {
        let field = center.field();
        for w in &weights {
            same_field(field, w.field())?;
        }
        Ok(MomentFunctional { field, repr: Repr::DerivativeForm { center, weights } })
    }

    /// `ω f'(a) - ω² f(a)`.
    pub fn first_order_form(a: FieldValue, omega: FieldValue) -> Result<Self, FunctionalError> {
        same_field(a.field(), omega.field())?;
        Self::derivative_form(a, vec![-omega.square(), omega])
    }

    /// `ω₁ f''(a) - 2ω₂ω₁² f'(a) - 2ω₁² f(a) + 2ω₂²ω₁³ f(a)`.
    pub fn second_order_form(a: FieldValue, omega1: FieldValue, omega2: FieldValue) -> Result<Self, FunctionalError> {
        same_field(a.field(), omega1.field())?;
        same_field(a.field(), omega2.field())?;
        let f = a.field();
        let two = f.from_i64(2);
        let w1sq = omega1.square();
        let w0 = &(&two * &(&omega2.square() * &(&w1sq * &omega1))) - &(&two * &w1sq);
        let w1 = -(&two * &(&omega2 * &w1sq));
        Self::derivative_form(a, vec![w0, w1, omega1])
    }

    /// `scale · Res_{z=center} f(z) / divisor(z)`.
    pub fn local_residue(center: FieldValue, divisor: &Polynomial, scale: FieldValue) -> Result<Self, FunctionalError> {
        same_field(center.field(), divisor.field())?;
        same_field(center.field(), scale.field())?;
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero.into());
        }
        let root = Polynomial::linear_root(&center);
        let (mut cofactor, mut order) = (divisor.clone(), 0);
        loop {
            let (quot, rem) = cofactor.divrem(&root)?;
            if !rem.is_zero() {
                break;
            }
            cofactor = quot;
            order += 1;
        }
        Ok(MomentFunctional { field: center.field(), repr: Repr::LocalResidue { center, order, cofactor, scale } })
    }

    /// Pointwise sum of functionals over one field.
    pub fn sum(parts: Vec<MomentFunctional>) -> Result<Self, FunctionalError> {
        let field = parts.first().map(|m| m.field).ok_or(FunctionalError::Arity { needed: "at least 1", got: 0 })?;
        for m in &parts {
            same_field(field, m.field)?;
        }
        Ok(MomentFunctional { field, repr: Repr::Combination(parts) })
    }

    /// The distinct-root weight formula `Σ f(λ) / (p'(λ) q(λ))` over caller-supplied roots of `p`.
    pub fn from_distinct_roots(p: &Polynomial, q: &Polynomial, roots: &[FieldValue]) -> Result<Self, FunctionalError> {
        let dp = p.derivative();
        let weights = roots
            .iter()
            .map(|l| {
                let d = dp.eval(l)?;
                if d.is_zero() {
                    return Err(FunctionalError::RepeatedRoot { root: l.clone() });
                }
                Ok((&d * &q.eval(l)?).inv()?)
            })
            .collect::<Result<Vec<_>, FunctionalError>>()?;
        Self::point_masses(roots.to_vec(), weights)
    }

    /// For `p = (t - a)^n`: `f ↦ [(z-a)^{n-1}] f(z)/q(z)`.
    pub fn from_single_root(a: &FieldValue, n: usize, q: &Polynomial) -> Result<Self, FunctionalError> {
        same_field(a.field(), q.field())?;
        let divisor = &Polynomial::linear_root(a).pow(n as u32) * q;
        Self::local_residue(a.clone(), &divisor, a.field().one())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn kind(&self) -> FunctionalKind {
        match self.repr {
            Repr::SpectralPair { .. } => FunctionalKind::SpectralPair,
            Repr::PointMass { .. } => FunctionalKind::PointMass,
            Repr::DerivativeForm { .. } => FunctionalKind::DerivativeForm,
            Repr::LocalResidue { .. } => FunctionalKind::LocalResidue,
            Repr::Combination(_) => FunctionalKind::Combination,
        }
    }

    /// `(p, q)` for a pair functional.
    pub fn pair(&self) -> Option<(&Polynomial, &Polynomial)> {
        match &self.repr {
            Repr::SpectralPair { p, q, .. } => Some((p, q)),
            _ => None,
        }
    }

    pub fn apply(&self, f: &Polynomial) -> Result<FieldValue, FunctionalError> {
        same_field(self.field, f.field())?;
        let zero = self.field.zero();
        Ok(match &self.repr {
            Repr::SpectralPair { p, q_inv, .. } => {
                let n = p.degree().expect("nonzero");
                (&f.rem(p)? * q_inv).rem(p)?.coeff(n - 1)
            }
            Repr::PointMass { nodes, weights } => nodes
                .iter()
                .zip(weights)
                .try_fold(zero, |acc, (x, w)| f.eval(x).map(|v| &acc + &(w * &v)))?,
            Repr::DerivativeForm { center, weights } => {
                let mut acc = zero;
                let mut d = f.clone();
                for w in weights {
                    acc = &acc + &(w * &d.eval(center)?);
                    d = d.derivative();
                }
                acc
            }
            Repr::LocalResidue { center, order, cofactor, scale } => {
                if *order == 0 {
                    zero
                } else {
                    let s = series_coefficients_of_quotient(f, cofactor, center, *order)?;
                    scale * &s[order - 1]
                }
            }
            Repr::Combination(parts) => {
                parts.iter().try_fold(zero, |acc, m| m.apply(f).map(|v| &acc + &v))?
            }
        })
    }

    /// `m_0, ..., m_{count-1}` with `m_j = L(t^j)`.
    pub fn moments(&self, count: usize) -> Vec<FieldValue> {
        match &self.repr {
            Repr::SpectralPair { p, q_inv, .. } => {
                let n = p.degree().expect("nonzero");
                let t = Polynomial::t(self.field);
                let mut r = q_inv.clone();
                let mut out = Vec::with_capacity(count);
                for _ in 0..count {
                    out.push(r.coeff(n - 1));
                    r = (&r * &t).rem(p).expect("nonzero modulus");
                }
                out
            }
            _ => (0..count)
                .map(|j| self.apply(&Polynomial::monomial(self.field.one(), j)).expect("same field"))
                .collect(),
        }
    }
}

/// The residue functional of `(p, q)`.
pub fn functional_from_pair(p: &Polynomial, q: &Polynomial) -> Result<MomentFunctional, FunctionalError> {
    MomentFunctional::from_pair(p, q)
}

pub fn moments(l: &MomentFunctional, count: usize) -> Vec<FieldValue> {
    l.moments(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(Field::Q, c)
    }

    fn i(v: i64) -> FieldValue {
        Field::Q.from_i64(v)
    }

    #[test]
    fn linear_pair_is_unit_point_mass() {
        let l = MomentFunctional::from_pair(&q(&[-3, 1]), &q(&[1])).unwrap();
        assert_eq!(l.moments(4), vec![i(1), i(3), i(9), i(27)]);
    }

    #[test]
    fn pair_matches_weight_formula() {
        let (p, qq) = (q(&[-1, 0, 1]), q(&[-5, 1]));
        let l = MomentFunctional::from_pair(&p, &qq).unwrap();
        let w = MomentFunctional::from_distinct_roots(&p, &qq, &[i(1), i(-1)]).unwrap();
        assert_eq!(l.moments(6), w.moments(6));
        // 1/(2·(1-5)) + 1/((-2)·(-1-5))
        assert_eq!(l.moments(1)[0], Field::Q.ratio(-1, 24).unwrap());
    }

    #[test]
    fn pair_matches_single_root_form() {
        let p = q(&[-2, 1]).pow(4);
        let qq = q(&[1, 0, 1, 1]);
        let l = MomentFunctional::from_pair(&p, &qq).unwrap();
        let s = MomentFunctional::from_single_root(&i(2), 4, &qq).unwrap();
        assert_eq!(l.moments(9), s.moments(9));
    }

    #[test]
    fn first_order_moments_from_derivatives() {
        let (a, w) = (i(3), i(-2));
        let l = MomentFunctional::first_order_form(a, w).unwrap();
        assert_eq!(l.moments(3), vec![i(-4), i(-2 - 12), i(-12 - 36)]);
    }

    #[test]
    fn common_factor_rejected() {
        let e = MomentFunctional::from_pair(&q(&[-2, -1, 1]), &q(&[1, 1])).unwrap_err();
        assert_eq!(e, FunctionalError::CommonFactor { gcd: q(&[1, 1]) });
        assert!(matches!(
            MomentFunctional::from_pair(&q(&[0, 0, 1]), &q(&[1])),
            Err(FunctionalError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn point_mass_validation() {
        assert!(matches!(
            MomentFunctional::point_masses(vec![i(1), i(1)], vec![i(1), i(2)]),
            Err(FunctionalError::RepeatedNode { .. })
        ));
        assert_eq!(
            MomentFunctional::point_masses(vec![i(1), i(2)], vec![i(1), i(0)]),
            Err(FunctionalError::ZeroWeight { index: 1 })
        );
        let single = MomentFunctional::point_masses(vec![i(5)], vec![i(1)]).unwrap();
        assert_eq!(single.moments(3), vec![i(1), i(5), i(25)]);
    }

    #[test]
    fn local_residue_order() {
        // Res_{z=1} z^2 / (z-1)^2 = 2
        let l = MomentFunctional::local_residue(i(1), &q(&[1, -2, 1]), i(1)).unwrap();
        assert_eq!(l.apply(&q(&[0, 0, 1])).unwrap(), i(2));
        let none = MomentFunctional::local_residue(i(1), &q(&[3, 1]), i(1)).unwrap();
        assert!(none.apply(&q(&[0, 0, 1])).unwrap().is_zero());
    }

    #[test]
    fn works_over_prime_field() {
        let f = Field::prime(7).unwrap();
        let p = Polynomial::from_i64(f, &[1, 0, 0, 1]);
        let qq = Polynomial::from_i64(f, &[2, 0, 1]);
        let l = MomentFunctional::from_pair(&p, &qq).unwrap();
        let direct: Vec<_> =
            (0..6).map(|j| l.apply(&Polynomial::monomial(f.one(), j)).unwrap()).collect();
        assert_eq!(l.moments(6), direct);
    }
}
