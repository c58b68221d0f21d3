//! Truncated power series around a point, using only field operations.
//!
//! No factorials appear anywhere, so every routine here is valid in
//! positive characteristic.

use super::{AlgebraError, FieldValue, Polynomial};

/// Coefficients of `f` in powers of `(z - center)`, padded or truncated to `order`.
pub fn taylor_coefficients(f: &Polynomial, center: &FieldValue, order: usize) -> Result<Vec<FieldValue>, AlgebraError> {
    if center.field() != f.field() {
        return Err(AlgebraError::FieldMismatch { left: f.field(), right: center.field() });
    }
    // Repeated synthetic division by (z - center).
    let mut work = f.coeffs().to_vec();
    let mut out = Vec::with_capacity(order);
    while out.len() < order {
        if work.is_empty() {
            out.push(f.field().zero());
            continue;
        }
        for i in (0..work.len() - 1).rev() {
            let carry = &work[i + 1] * center;
            work[i] = &work[i] + &carry;
        }
        out.push(work.remove(0));
    }
    Ok(out)
}

/// First `order` coefficients of `1 / s` for a series `s` with `s[0] != 0`.
pub fn power_series_inverse(s: &[FieldValue], order: usize) -> Result<Vec<FieldValue>, AlgebraError> {
    let head = s.first().ok_or(AlgebraError::DivisionByZero)?;
    let head_inv = head.inv()?;
    let field = head.field();
    let mut out: Vec<FieldValue> = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = if k == 0 { field.one() } else { field.zero() };
        for i in 1..=k.min(s.len().saturating_sub(1)) {
            acc = &acc - &(&s[i] * &out[k - i]);
        }
        out.push(&acc * &head_inv);
    }
    Ok(out)
}

/// First `order` coefficients of `f/g` expanded in powers of `(z - center)`.
pub fn series_coefficients_of_quotient(
    f: &Polynomial,
    g: &Polynomial,
    center: &FieldValue,
    order: usize,
) -> Result<Vec<FieldValue>, AlgebraError> {
    if f.field() != g.field() {
        return Err(AlgebraError::FieldMismatch { left: f.field(), right: g.field() });
    }
    let ft = taylor_coefficients(f, center, order)?;
    let gt = taylor_coefficients(g, center, order.max(1))?;
    if gt[0].is_zero() {
        return Err(AlgebraError::PoleAtCenter);
    }
    let ginv = power_series_inverse(&gt, order)?;
    Ok((0..order)
        .map(|k| {
            (0..=k).fold(f.field().zero(), |acc, i| &acc + &(&ft[i] * &ginv[k - i]))
        })
        .collect())
}
