//! Proper pairs and their unique normalized irreducible tridiagonal realization.
//!
//! Given monic `p` (degree `n`) and `q` (degree `n-1`), divide repeatedly:
//!
//! ```text
//! p_{n-k+1} = (t - a_k) p_{n-k} - b_k p_{n-k-1}
//! ```
//!
//! The pair is *proper* when every remainder `-b_k p_{n-k-1}` has degree
//! exactly one less than the divisor. Then the `a_k`, `b_k` read off the
//! quotients and remainders form the only normalized irreducible tridiagonal
//! matrix whose matrix and trailing block have characteristic polynomials
//! `p` and `q`. Otherwise no such matrix exists.

mod criteria;
mod partner;

pub use criteria::{
    bk_via_coefficients, check_theorem10, coefficient_test, minor_sum_conditions_pair, CoefficientQuad, CoefficientVerdict,
    MinorSumReport,
};
pub use partner::{find_proper_partner, partner_search_report, PartnerSearch};

use thiserror::Error;

use crate::algebra::{AlgebraError, Field, FieldValue, Polynomial};
use crate::tridiagonal::{CharPolyChain, TridiagMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("{which} is not monic")]
    NotMonic { which: &'static str },
    #[error("degree mismatch: deg p = {p:?}, deg q = {q:?}, expected deg p = deg q + 1 >= 1")]
    DegreeMismatch { p: Option<usize>, q: Option<usize> },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Where the division walk stopped being proper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotProper {
    /// 1-based division step `k`.
    pub step: usize,
    /// Degree of the offending remainder; `None` when it vanished.
    pub remainder_degree: Option<usize>,
    pub expected_degree: usize,
    pub remainder: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Proper,
    NotProper(NotProper),
}

impl Verdict {
    pub fn is_proper(&self) -> bool {
        matches!(self, Verdict::Proper)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizationOutcome {
    Realized { matrix: TridiagMatrix, chain: CharPolyChain },
    NotProper(NotProper),
}

impl RealizationOutcome {
    pub fn matrix(&self) -> Option<&TridiagMatrix> {
        match self {
            RealizationOutcome::Realized { matrix, .. } => Some(matrix),
            RealizationOutcome::NotProper(_) => None,
        }
    }

    pub fn chain(&self) -> Option<&CharPolyChain> {
        match self {
            RealizationOutcome::Realized { chain, .. } => Some(chain),
            RealizationOutcome::NotProper(_) => None,
        }
    }

    pub fn is_realized(&self) -> bool {
        matches!(self, RealizationOutcome::Realized { .. })
    }
}

pub(crate) fn validate_pair(p: &Polynomial, q: &Polynomial) -> Result<Field, RealizeError> {
    if p.field() != q.field() {
        return Err(AlgebraError::FieldMismatch { left: p.field(), right: q.field() }.into());
    }
    match (p.degree(), q.degree()) {
        (Some(dp), Some(dq)) if dp == dq + 1 => {}
        (dp, dq) => return Err(RealizeError::DegreeMismatch { p: dp, q: dq }),
    }
    if !p.is_monic() {
        return Err(RealizeError::NotMonic { which: "p" });
    }
    if !q.is_monic() {
        return Err(RealizeError::NotMonic { which: "q" });
    }
    Ok(p.field())
}

/// One division step of the walk.
struct Step {
    a: FieldValue,
    b: FieldValue,
    next: Polynomial,
}

/// Divide `upper` by `lower` and reconstruct the step, or report the degree collapse.
fn division_step(upper: &Polynomial, lower: &Polynomial, step: usize) -> Result<Result<Step, NotProper>, AlgebraError> {
    let (quot, rem) = upper.divrem(lower)?;
    let expected = lower.degree().expect("divisor is nonzero") - 1;
    if rem.degree() != Some(expected) {
        return Ok(Err(NotProper { step, remainder_degree: rem.degree(), expected_degree: expected, remainder: rem }));
    }
    // quot = t - a, rem = -b · next with next monic.
    let a = -quot.coeff(0);
    let b = -rem.leading().expect("nonzero remainder").clone();
    let next = rem.scale(&(-&b).inv()?);
    Ok(Ok(Step { a, b, next }))
}

type Walk = (Vec<FieldValue>, Vec<FieldValue>, Vec<Polynomial>);

/// Run the walk; on success return `(a, b, chain_top_down)` where
/// `chain_top_down = [p_n, p_{n-1}, ..., p_0]`.
fn walk(p: &Polynomial, q: &Polynomial) -> Result<Result<Walk, NotProper>, RealizeError> {
    validate_pair(p, q)?;
    let n = p.degree().expect("validated");
    let mut diag = Vec::with_capacity(n);
    let mut sub = Vec::with_capacity(n.saturating_sub(1));
    let mut chain = vec![p.clone(), q.clone()];
    for k in 1..n {
        let step = match division_step(&chain[k - 1], &chain[k], k)? {
            Ok(s) => s,
            Err(np) => return Ok(Err(np)),
        };
        diag.push(step.a);
        sub.push(step.b);
        chain.push(step.next);
    }
    // Last link: p_1 = t - a_n.
    diag.push(-chain[n - 1].coeff(0));
    Ok(Ok((diag, sub, chain)))
}

/// Decide whether `(p, q)` is a proper pair without building the matrix.
pub fn check_proper(p: &Polynomial, q: &Polynomial) -> Result<Verdict, RealizeError> {
    validate_pair(p, q)?;
    let n = p.degree().expect("validated");
    let (mut upper, mut lower) = (p.clone(), q.clone());
    for k in 1..n {
        match division_step(&upper, &lower, k)? {
            Ok(step) => upper = std::mem::replace(&mut lower, step.next),
            Err(np) => return Ok(Verdict::NotProper(np)),
        }
    }
    Ok(Verdict::Proper)
}

/// Construct the normalized irreducible tridiagonal matrix with `p_n = p`, `p_{n-1} = q`.
pub fn realize(p: &Polynomial, q: &Polynomial) -> Result<RealizationOutcome, RealizeError> {
    let field = validate_pair(p, q)?;
    match walk(p, q)? {
        Err(np) => Ok(RealizationOutcome::NotProper(np)),
        Ok((diag, sub, mut chain)) => {
            chain.reverse();
            let matrix = TridiagMatrix::new(field, diag, sub)?;
            Ok(RealizationOutcome::Realized { matrix, chain: CharPolyChain::from_polys(chain) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tridiagonal::charpoly_chain;

    fn q(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(Field::Q, c)
    }

    #[test]
    fn cubic_counterexample() {
        let v = check_proper(&q(&[-30, -1, 6, 1]), &q(&[-1, 0, 1])).unwrap();
        let Verdict::NotProper(np) = v else { panic!("expected not proper") };
        assert_eq!((np.step, np.remainder_degree, np.expected_degree), (1, Some(0), 1));
        assert_eq!(np.remainder, q(&[-24]));
    }

    #[test]
    fn quartic_counterexample() {
        let v = check_proper(&q(&[24, 22, -7, -4, 1]), &q(&[6, -7, 0, 1])).unwrap();
        let Verdict::NotProper(np) = v else { panic!("expected not proper") };
        assert_eq!((np.step, np.remainder_degree, np.expected_degree), (1, Some(1), 2));
        assert_eq!(np.remainder, q(&[48, -12]));
    }

    #[test]
    fn path_graph_pair_is_proper() {
        assert!(check_proper(&q(&[0, -2, 0, 1]), &q(&[-1, 0, 1])).unwrap().is_proper());
    }

    #[test]
    fn realize_graded_diagonal() {
        let out = realize(&q(&[-2, 9, -6, 1]), &q(&[5, -5, 1])).unwrap();
        let m = out.matrix().unwrap();
        assert_eq!(m, &TridiagMatrix::from_i64(Field::Q, &[1, 2, 3], &[1, 1]).unwrap());
        assert_eq!(out.chain().unwrap(), &charpoly_chain(m));
    }

    #[test]
    fn linear_base_case() {
        let out = realize(&q(&[-4, 1]), &q(&[1])).unwrap();
        assert_eq!(out.matrix().unwrap(), &TridiagMatrix::from_i64(Field::Q, &[4], &[]).unwrap());
    }

    #[test]
    fn input_errors() {
        assert_eq!(
            check_proper(&q(&[1, 2]), &q(&[1, 1])),
            Err(RealizeError::DegreeMismatch { p: Some(1), q: Some(1) })
        );
        assert_eq!(check_proper(&q(&[1, 1, 2]), &q(&[1, 1])), Err(RealizeError::NotMonic { which: "p" }));
        assert_eq!(check_proper(&q(&[1, 1, 1]), &q(&[1, 3])), Err(RealizeError::NotMonic { which: "q" }));
        assert!(matches!(
            check_proper(&q(&[1, 1]), &Polynomial::from_i64(Field::prime(3).unwrap(), &[1])),
            Err(RealizeError::Algebra(AlgebraError::FieldMismatch { .. }))
        ));
    }

    #[test]
    fn zero_remainder_is_not_proper() {
        // p = (t - 2) q exactly
        let qq = q(&[3, 1]);
        let p = &q(&[-2, 1]) * &qq;
        let Verdict::NotProper(np) = check_proper(&p, &qq).unwrap() else { panic!() };
        assert_eq!(np.remainder_degree, None);
    }
}
