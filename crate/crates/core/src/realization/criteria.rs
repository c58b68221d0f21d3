//! Coefficient-level properness tests.
//!
//! Comparing the top two coefficients of `p_{m+1} = (t - a) p_m - b p_{m-1}`
//! gives `a` and `b` directly from the coefficients of `p_{m+1}` and `p_m`,
//! with no polynomial division. The same quantities written with principal
//! minor sums `S_k` of the nested trailing blocks give the submatrix form.

use super::{validate_pair, RealizeError};
use crate::algebra::{FieldValue, Polynomial};
use crate::tridiagonal::{s_invariants, s_invariants_of_charpoly, CharPolyChain, TridiagMatrix};

/// Leading coefficients of a consecutive chain pair, in the sign convention
///
/// ```text
/// upper = t^{m+1} - c1 t^m     + c2 t^{m-1} + ...
/// lower = t^m     - d1 t^{m-1} + d2 t^{m-2} + ...
/// ```
///
/// Coefficients below degree zero are taken as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientQuad {
    pub c1: FieldValue,
    pub c2: FieldValue,
    pub d1: FieldValue,
    pub d2: FieldValue,
}

impl CoefficientQuad {
    pub fn extract(upper: &Polynomial, lower: &Polynomial) -> Self {
        let m = lower.degree().unwrap_or(0);
        let below = |p: &Polynomial, deg: Option<usize>| deg.map_or_else(|| p.field().zero(), |d| p.coeff(d));
        CoefficientQuad {
            c1: -upper.coeff(m),
            c2: below(upper, m.checked_sub(1)),
            d1: -below(lower, m.checked_sub(1)),
            d2: below(lower, m.checked_sub(2)),
        }
    }

    /// `a = c1 - d1`.
    pub fn diagonal(&self) -> FieldValue {
        &self.c1 - &self.d1
    }

    /// `b = (d2 - c2) + (c1 - d1) d1`.
    pub fn subdiagonal(&self) -> FieldValue {
        &(&self.d2 - &self.c2) + &(&self.diagonal() * &self.d1)
    }
}

/// `b_1, ..., b_{n-1}` of a chain, from coefficient quads only.
pub fn bk_via_coefficients(chain: &CharPolyChain) -> Vec<FieldValue> {
    let n = chain.n();
    (1..n)
        .map(|k| CoefficientQuad::extract(chain.get(n - k + 1), chain.get(n - k)).subdiagonal())
        .collect()
}

/// Result of walking a pair with coefficient formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientVerdict {
    /// `b_1, b_2, ...` up to and including the first zero.
    pub subdiagonal: Vec<FieldValue>,
    pub diagonal: Vec<FieldValue>,
    /// 1-based step at which `b_k` vanished.
    pub first_zero: Option<usize>,
}

impl CoefficientVerdict {
    pub fn is_proper(&self) -> bool {
        self.first_zero.is_none()
    }
}

fn next_link(upper: &Polynomial, lower: &Polynomial, a: &FieldValue, b: &FieldValue) -> Polynomial {
    // (t - a) lower - upper = b · next
    let shifted = &lower.shift(1) - &lower.scale(a);
    (&shifted - upper).scale(&b.inv().expect("b checked nonzero"))
}

/// Properness of `(p, q)` by the coefficient criterion `b_k != 0` for every `k`.
pub fn coefficient_test(p: &Polynomial, q: &Polynomial) -> Result<CoefficientVerdict, RealizeError> {
    validate_pair(p, q)?;
    let n = p.degree().expect("validated");
    let (mut upper, mut lower) = (p.clone(), q.clone());
    let mut out = CoefficientVerdict { subdiagonal: Vec::new(), diagonal: Vec::new(), first_zero: None };
    for k in 1..n {
        let quad = CoefficientQuad::extract(&upper, &lower);
        let (a, b) = (quad.diagonal(), quad.subdiagonal());
        out.diagonal.push(a.clone());
        out.subdiagonal.push(b.clone());
        if b.is_zero() {
            out.first_zero = Some(k);
            return Ok(out);
        }
        let next = next_link(&upper, &lower, &a, &b);
        upper = std::mem::replace(&mut lower, next);
    }
    // upper is now p_1 = t - a_n
    out.diagonal.push(-upper.coeff(0));
    Ok(out)
}

/// Minor-sum conditions evaluated on a concrete matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSumReport {
    /// Condition `k` (1-based, index `k-1`) holds iff
    /// `S_2(A(1..k-1)) - S_2(A(1..k)) - a_k S_1(A(1..k))` is nonzero.
    pub conditions: Vec<bool>,
    /// The condition values; each equals `-b_k`.
    pub values: Vec<FieldValue>,
    /// `a_k = S_1(A(1..k-1)) - S_1(A(1..k))`, with `a_n = S_1(A(1..n-1))`.
    pub recovered_diagonal: Vec<FieldValue>,
    pub diagonal_matches: bool,
}

impl MinorSumReport {
    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|&c| c)
    }
}

/// Evaluate the minor-sum conditions for every `k = 1..n-1`.
///
/// `k = 1` is the condition on `A` and `A(1)`; `k >= 2` are the nested
/// conditions. The last step `k = n-1` is included as well.
pub fn check_theorem10(a: &TridiagMatrix) -> MinorSumReport {
    let n = a.n();
    let s: Vec<Vec<FieldValue>> = (0..n)
        .map(|drop| s_invariants(&a.drop_leading(drop).expect("in range")))
        .collect();
    let zero = a.field().zero();
    let s_at = |drop: usize, idx: usize| -> FieldValue {
        if drop >= n {
            return if idx == 0 { a.field().one() } else { zero.clone() };
        }
        s[drop].get(idx).cloned().unwrap_or_else(|| zero.clone())
    };
    let mut recovered = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n.saturating_sub(1));
    for k in 1..=n {
        let ak = &s_at(k - 1, 1) - &s_at(k, 1);
        if k < n {
            let value = &(&s_at(k - 1, 2) - &s_at(k, 2)) - &(&ak * &s_at(k, 1));
            values.push(value);
        }
        recovered.push(ak);
    }
    MinorSumReport {
        conditions: values.iter().map(|v| !v.is_zero()).collect(),
        diagonal_matches: recovered.as_slice() == a.diag(),
        recovered_diagonal: recovered,
        values,
    }
}

/// The minor-sum conditions for a bare pair: the `S_k` of each chain link are
/// read from its coefficients and the next link is rebuilt from `a_k`, `b_k`.
/// Stops after the first failing condition.
pub fn minor_sum_conditions_pair(p: &Polynomial, q: &Polynomial) -> Result<Vec<bool>, RealizeError> {
    validate_pair(p, q)?;
    let n = p.degree().expect("validated");
    let (mut upper, mut lower) = (p.clone(), q.clone());
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let su = s_invariants_of_charpoly(&upper);
        let sl = s_invariants_of_charpoly(&lower);
        let zero = p.field().zero();
        let sl2 = sl.get(2).unwrap_or(&zero);
        let ak = &su[1] - &sl[1];
        let value = &(&su[2] - sl2) - &(&ak * &sl[1]);
        let holds = !value.is_zero();
        out.push(holds);
        if !holds {
            break;
        }
        let next = next_link(&upper, &lower, &ak, &(-value));
        upper = std::mem::replace(&mut lower, next);
    }
    Ok(out)
}
