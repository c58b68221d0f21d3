use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, Field, FieldValue};

/// A dense univariate polynomial over one [`Field`].
///
/// Coefficients are stored in ascending degree. The vector is empty for the
/// zero polynomial and otherwise ends in a nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldValue>,
}

impl Polynomial {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(FieldValue::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    fn from_raw(field: Field, coeffs: Vec<FieldValue>) -> Self {
        Polynomial { field, coeffs }.normalize()
    }

    pub fn zero(field: Field) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: FieldValue) -> Self {
        Self::from_raw(c.field(), vec![c])
    }

    /// The indeterminate `t`.
    pub fn t(field: Field) -> Self {
        Polynomial { field, coeffs: vec![field.zero(), field.one()] }
    }

    /// `t - c`.
    pub fn linear_root(c: &FieldValue) -> Self {
        let f = c.field();
        Polynomial { field: f, coeffs: vec![-c, f.one()] }
    }

    pub fn monomial(c: FieldValue, deg: usize) -> Self {
        let f = c.field();
        let mut coeffs = vec![f.zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_raw(f, coeffs)
    }

    /// Ascending coefficients; every entry must belong to `field`.
    pub fn new(field: Field, coeffs: Vec<FieldValue>) -> Result<Self, AlgebraError> {
        if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
            return Err(AlgebraError::FieldMismatch { left: field, right: bad.field() });
        }
        Ok(Self::from_raw(field, coeffs))
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Self {
        Self::from_raw(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// Monic polynomial with the given roots (with repetition).
    pub fn from_roots(field: Field, roots: &[FieldValue]) -> Result<Self, AlgebraError> {
        let mut acc = Self::one(field);
        for r in roots {
            if r.field() != field {
                return Err(AlgebraError::FieldMismatch { left: field, right: r.field() });
            }
            acc = &acc * &Self::linear_root(r);
        }
        Ok(acc)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldValue] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldValue> {
        self.coeffs
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(FieldValue::is_one)
    }

    pub fn leading(&self) -> Option<&FieldValue> {
        self.coeffs.last()
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> FieldValue {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn scale(&self, c: &FieldValue) -> Self {
        Self::from_raw(self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divide by the leading coefficient. The zero polynomial has no monic form.
    pub fn monic(&self) -> Result<Self, AlgebraError> {
        let lc = self.leading().ok_or(AlgebraError::DivisionByZero)?;
        Ok(self.scale(&lc.inv()?))
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { field: self.field, coeffs }
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch { left: self.field, right: other.field })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(self * other)
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((Self::zero(self.field), self.clone()));
        };
        let mut quot = vec![self.field.zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * d);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_raw(self.field, quot), Self::from_raw(self.field, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        self.divrem(divisor).map(|(_, r)| r)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &FieldValue) -> Result<FieldValue, AlgebraError> {
        if x.field() != self.field {
            return Err(AlgebraError::FieldMismatch { left: self.field, right: x.field() });
        }
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c))
    }

    /// Formal derivative; in characteristic `p` the terms with `p | i` vanish.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_i64(i as i64))
            .collect();
        Self::from_raw(self.field, coeffs)
    }

    /// Monic greatest common divisor by Euclid's algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self), AlgebraError> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::ZeroGcd);
        }
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = r0.leading().expect("nonzero gcd").inv()?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Inverse of `self` modulo `modulus`, if they are coprime.
    pub fn inverse_mod(&self, modulus: &Self) -> Result<Option<Self>, AlgebraError> {
        let (g, s, _) = self.xgcd(modulus)?;
        if g.degree() != Some(0) {
            return Ok(None);
        }
        s.rem(modulus).map(Some)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.field), |acc, _| &acc * self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || mag != "1";
            if show_coeff && i > 0 && mag.contains('/') {
                write!(f, "({mag})")?;
            } else if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

fn zip_with(a: &Polynomial, b: &Polynomial, op: impl Fn(&FieldValue, &FieldValue) -> FieldValue) -> Polynomial {
    assert_eq!(a.field, b.field, "field mismatch in polynomial arithmetic");
    let zero = a.field.zero();
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n)
        .map(|i| op(a.coeffs.get(i).unwrap_or(&zero), b.coeffs.get(i).unwrap_or(&zero)))
        .collect();
    Polynomial::from_raw(a.field, coeffs)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "field mismatch in polynomial arithmetic");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::from_raw(self.field, out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
