//! Scalars: exact rationals and residues modulo a small prime.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::AlgebraError;

/// The field a value or polynomial lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    /// GF(p) for a prime `p`. Construct through [`Field::prime`].
    Prime(u64),
}

impl Field {
    pub const Q: Field = Field::Rationals;

    /// GF(p), rejecting composite moduli.
    pub fn prime(modulus: u64) -> Result<Field, AlgebraError> {
        if is_prime(modulus) && modulus <= u32::MAX as u64 {
            Ok(Field::Prime(modulus))
        } else {
            Err(AlgebraError::NotPrime(modulus))
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(*p),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    pub fn zero(&self) -> FieldValue {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldValue {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldValue {
        match *self {
            Field::Rationals => FieldValue(Repr::Q(BigRational::from_integer(BigInt::from(v)))),
            Field::Prime(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                FieldValue(Repr::Fp { r, p })
            }
        }
    }

    /// `num/den` as a field element. Fails over GF(p) when `den ≡ 0`.
    pub fn ratio(&self, num: i64, den: i64) -> Result<FieldValue, AlgebraError> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<FieldValue, AlgebraError> {
        match *self {
            Field::Rationals => Ok(FieldValue(Repr::Q(q.clone()))),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| x.mod_floor(&m).to_u64().unwrap_or(0);
                let num = FieldValue(Repr::Fp { r: reduce(q.numer()), p });
                let den = FieldValue(Repr::Fp { r: reduce(q.denom()), p });
                num.checked_div(&den)
            }
        }
    }

    /// Residue `r mod p` as an element of this prime field.
    pub fn residue(&self, r: u64) -> Option<FieldValue> {
        self.modulus().map(|p| FieldValue(Repr::Fp { r: r % p, p }))
    }

    /// Every element of a prime field in increasing residue order; `None` over ℚ.
    pub fn elements(&self) -> Option<impl Iterator<Item = FieldValue>> {
        self.modulus().map(|p| (0..p).map(move |r| FieldValue(Repr::Fp { r, p })))
    }

    /// Parse a coefficient string: `"num/den"` or `"int"` over ℚ, a decimal residue over GF(p).
    pub fn parse_value(&self, s: &str) -> Result<FieldValue, AlgebraError> {
        let s = s.trim();
        let bad = || AlgebraError::Parse(format!("invalid {self} value {s:?}"));
        match *self {
            Field::Rationals => {
                let q = match s.split_once('/') {
                    Some((n, d)) => {
                        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                        if d.is_zero() {
                            return Err(AlgebraError::DivisionByZero);
                        }
                        BigRational::new(n, d)
                    }
                    None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
                };
                Ok(FieldValue(Repr::Q(q)))
            }
            Field::Prime(p) => {
                // Negative residues are accepted and reduced.
                let v: BigInt = s.parse().map_err(|_| bad())?;
                let r = v.mod_floor(&BigInt::from(p)).to_u64().ok_or_else(bad)?;
                Ok(FieldValue(Repr::Fp { r, p }))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Field, AlgebraError> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(Field::Rationals);
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("GF"))
            .ok_or_else(|| AlgebraError::Parse(format!("unknown field {s:?}, expected Q or GF(p)")))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| AlgebraError::Parse(format!("bad modulus in field {s:?}")))?;
        Field::prime(p)
    }
}

/// Trial division; moduli here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Q(BigRational),
    Fp { r: u64, p: u64 },
}

/// An element of ℚ or GF(p), tagged with its field.
///
/// The arithmetic operators panic when the operands come from different
/// fields; the `checked_*` methods report the mismatch instead. Polynomial
/// and matrix code validates fields once at its boundary and then uses the
/// operators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldValue(Repr);

impl FieldValue {
    pub fn field(&self) -> Field {
        match self.0 {
            Repr::Q(_) => Field::Rationals,
            Repr::Fp { p, .. } => Field::Prime(p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_zero(),
            Repr::Fp { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_one(),
            Repr::Fp { r, .. } => *r == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Q(q) => Some(q),
            Repr::Fp { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match self.0 {
            Repr::Q(_) => None,
            Repr::Fp { r, .. } => Some(r),
        }
    }

    fn same_field(&self, other: &FieldValue) -> Result<(), AlgebraError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch {
                left: self.field(),
                right: other.field(),
            })
        }
    }

    pub fn checked_add(&self, other: &FieldValue) -> Result<FieldValue, AlgebraError> {
        self.same_field(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &FieldValue) -> Result<FieldValue, AlgebraError> {
        self.same_field(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &FieldValue) -> Result<FieldValue, AlgebraError> {
        self.same_field(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &FieldValue) -> Result<FieldValue, AlgebraError> {
        self.same_field(other)?;
        Ok(self * &other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldValue, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Q(q) => FieldValue(Repr::Q(q.recip())),
            &Repr::Fp { r, p } => FieldValue(Repr::Fp { r: pow_mod(r, p - 2, p), p }),
        })
    }

    pub fn pow(&self, mut e: u64) -> FieldValue {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn square(&self) -> FieldValue {
        self * self
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Repr::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Repr::Fp { r, .. } => write!(f, "{r}"),
        }
    }
}

/// Rationals order numerically, residues by representative, fields by tag.
impl PartialOrd for FieldValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => a.cmp(b),
            (Repr::Fp { r: a, p: pa }, Repr::Fp { r: b, p: pb }) => pa.cmp(pb).then(a.cmp(b)),
            (Repr::Q(_), Repr::Fp { .. }) => Ordering::Less,
            (Repr::Fp { .. }, Repr::Q(_)) => Ordering::Greater,
        }
    }
}

fn mismatch(a: &FieldValue, b: &FieldValue) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &FieldValue {
    type Output = FieldValue;
    fn add(self, rhs: &FieldValue) -> FieldValue {
        match (&self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => FieldValue(Repr::Q(a + b)),
            (&Repr::Fp { r: a, p }, &Repr::Fp { r: b, p: q }) if p == q => {
                FieldValue(Repr::Fp { r: (a + b) % p, p })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &FieldValue {
    type Output = FieldValue;
    fn sub(self, rhs: &FieldValue) -> FieldValue {
        match (&self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => FieldValue(Repr::Q(a - b)),
            (&Repr::Fp { r: a, p }, &Repr::Fp { r: b, p: q }) if p == q => {
                FieldValue(Repr::Fp { r: (a + p - b) % p, p })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &FieldValue {
    type Output = FieldValue;
    fn mul(self, rhs: &FieldValue) -> FieldValue {
        match (&self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => FieldValue(Repr::Q(a * b)),
            (&Repr::Fp { r: a, p }, &Repr::Fp { r: b, p: q }) if p == q => {
                FieldValue(Repr::Fp { r: mul_mod(a, b, p), p })
            }
            _ => mismatch(self, rhs),
        }
    }
}

/// Panics on division by zero; use [`FieldValue::checked_div`] to get an error.
impl Div for &FieldValue {
    type Output = FieldValue;
    fn div(self, rhs: &FieldValue) -> FieldValue {
        self.checked_div(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        match &self.0 {
            Repr::Q(a) => FieldValue(Repr::Q(-a)),
            &Repr::Fp { r, p } => FieldValue(Repr::Fp { r: (p - r) % p, p }),
        }
    }
}

impl Neg for FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FieldValue {
            type Output = FieldValue;
            fn $m(self, rhs: FieldValue) -> FieldValue { (&self).$m(&rhs) }
        }
        impl $tr<&FieldValue> for FieldValue {
            type Output = FieldValue;
            fn $m(self, rhs: &FieldValue) -> FieldValue { (&self).$m(rhs) }
        }
        impl $tr<FieldValue> for &FieldValue {
            type Output = FieldValue;
            fn $m(self, rhs: FieldValue) -> FieldValue { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl From<BigRational> for FieldValue {
    fn from(q: BigRational) -> FieldValue {
        FieldValue(Repr::Q(q))
    }
}
