//! Exhaustive census of characteristic polynomials of irreducible normalized
//! tridiagonal matrices over GF(p).
//!
//! There are `p^n (p-1)^{n-1}` such matrices (free diagonal, nonzero
//! subdiagonal) and `p^n` monic polynomials of degree `n`. Counting shows
//! nothing about surjectivity by itself; the census tabulates which
//! polynomials are actually attained.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, Field, Polynomial};
use crate::tridiagonal::TridiagMatrix;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("census needs a prime field, got {0}")]
    NotPrimeField(Field),
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("enumeration needs {required} matrices, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub field_modulus: u64,
    pub n: usize,
    /// `p^n (p-1)^{n-1}`.
    pub total_matrices: u64,
    /// `(p-1)^{n-1}`, the subdiagonal choices alone.
    pub subdiagonal_choices: u64,
    /// `p^n`.
    pub total_monic_polys: u64,
    /// Attained polynomials with the number of matrices realizing each, in
    /// lexicographic order of ascending coefficient vectors.
    pub realizable: Vec<(Polynomial, u64)>,
    pub unrealizable: Vec<Polynomial>,
}

/// One CSV row of a census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    /// Ascending coefficients `c_0, ..., c_{n-1}` (the leading 1 omitted).
    pub coeffs: Vec<u64>,
    pub realizable: bool,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub field: String,
    pub n: usize,
    pub total_matrices: u64,
    pub subdiagonal_choices: u64,
    pub total_monic_polys: u64,
    pub realizable_count: usize,
    pub unrealizable_count: usize,
    pub unrealizable: Vec<String>,
}

impl CensusReport {
    pub fn field(&self) -> Field {
        Field::Prime(self.field_modulus)
    }

    /// Every monic polynomial in canonical order with its tally.
    pub fn rows(&self) -> Vec<CensusRow> {
        let mut rows: Vec<CensusRow> = self
            .realizable
            .iter()
            .map(|(p, c)| CensusRow { coeffs: residues(p), realizable: true, count: *c })
            .chain(self.unrealizable.iter().map(|p| CensusRow { coeffs: residues(p), realizable: false, count: 0 }))
            .collect();
        rows.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        rows
    }

    pub fn summary(&self) -> CensusSummary {
        CensusSummary {
            field: self.field().to_string(),
            n: self.n,
            total_matrices: self.total_matrices,
            subdiagonal_choices: self.subdiagonal_choices,
            total_monic_polys: self.total_monic_polys,
            realizable_count: self.realizable.len(),
            unrealizable_count: self.unrealizable.len(),
            unrealizable: self.unrealizable.iter().map(ToString::to_string).collect(),
        }
    }
}

fn residues(p: &Polynomial) -> Vec<u64> {
    let n = p.degree().unwrap_or(0);
    (0..n).map(|i| p.coeff(i).residue().expect("prime field")).collect()
}

fn prime_of(field: Field) -> Result<u64, CensusError> {
    field.modulus().ok_or(CensusError::NotPrimeField(field))
}

fn guard(p: u64, n: usize, budget: u64) -> Result<(u64, u64, u64), CensusError> {
    let required = (p as u128).pow(n as u32) * ((p - 1) as u128).pow(n as u32 - 1);
    if required > budget as u128 {
        return Err(CensusError::BudgetExceeded { required, budget });
    }
    Ok((required as u64, p.pow(n as u32), (p - 1).pow(n as u32 - 1)))
}

/// Charpoly coefficients `c_0..c_{n-1}` mod `prime` via the trailing recurrence.
fn charpoly_mod(diag: &[u64], sub: &[u64], prime: u64, prev: &mut Vec<u64>, cur: &mut Vec<u64>) {
    let n = diag.len();
    let m = |x: u64, y: u64| ((x as u128 * y as u128) % prime as u128) as u64;
    prev.clear();
    prev.push(1);
    cur.clear();
    cur.push((prime - diag[n - 1]) % prime);
    cur.push(1);
    for k in 1..n {
        let a = diag[n - k - 1];
        let b = sub[n - k - 1];
        // next = t·cur - a·cur - b·prev
        let mut next = vec![0u64; k + 2];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % prime;
            next[i] = (next[i] + prime - m(a, c)) % prime;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] = (next[i] + prime - m(b, c)) % prime;
        }
        std::mem::swap(prev, cur);
        *cur = next;
    }
}

/// Index with `c_0` most significant, so index order is lexicographic order.
fn poly_index(coeffs: &[u64], prime: u64) -> usize {
    coeffs[..coeffs.len() - 1].iter().fold(0u64, |acc, &c| acc * prime + c) as usize
}

fn index_poly(mut idx: u64, prime: u64, n: usize) -> Polynomial {
    let field = Field::Prime(prime);
    let mut coeffs = vec![field.zero(); n + 1];
    for i in (0..n).rev() {
        coeffs[i] = field.residue(idx % prime).expect("reduced");
        idx /= prime;
    }
    coeffs[n] = field.one();
    Polynomial::new(field, coeffs).expect("single field")
}

/// Mixed-radix odometer over `lo..prime` per digit. Returns `false` after the last vector.
fn advance(digits: &mut [u64], lo: u64, prime: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < prime {
            return true;
        }
        *d = lo;
    }
    false
}

fn decode(mut idx: u64, prime: u64, n: usize) -> Vec<u64> {
    let mut out = vec![0; n];
    for d in out.iter_mut().rev() {
        *d = idx % prime;
        idx /= prime;
    }
    out
}

pub fn run_census(modulus: u64, n: usize, budget: u64) -> Result<CensusReport, CensusError> {
    let field = Field::prime(modulus)?;
    let prime = prime_of(field)?;
    if n == 0 {
        return Err(CensusError::ZeroDimension);
    }
    let (total_matrices, total_monic_polys, subdiagonal_choices) = guard(prime, n, budget)?;
    let size = total_monic_polys as usize;
    let tally = (0..total_monic_polys)
        .into_par_iter()
        .fold(
            || vec![0u64; size],
            |mut acc, a_idx| {
                let diag = decode(a_idx, prime, n);
                let mut sub = vec![1u64; n - 1];
                let (mut prev, mut cur) = (Vec::new(), Vec::new());
                loop {
                    charpoly_mod(&diag, &sub, prime, &mut prev, &mut cur);
                    acc[poly_index(&cur, prime)] += 1;
                    if !advance(&mut sub, 1, prime) {
                        break;
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; size],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let mut realizable = Vec::new();
    let mut unrealizable = Vec::new();
    for (idx, count) in tally.into_iter().enumerate() {
        let poly = index_poly(idx as u64, prime, n);
        if count > 0 {
            realizable.push((poly, count));
        } else {
            unrealizable.push(poly);
        }
    }
    Ok(CensusReport {
        field_modulus: prime,
        n,
        total_matrices,
        subdiagonal_choices,
        total_monic_polys,
        realizable,
        unrealizable,
    })
}

/// First irreducible normalized tridiagonal matrix with characteristic
/// polynomial `poly`, scanning `a` then `b` lexicographically.
///
/// Degree 1 is answered directly over any field.
pub fn is_realizable(poly: &Polynomial, budget: u64) -> Result<Option<TridiagMatrix>, CensusError> {
    let field = poly.field();
    let n = poly.degree().ok_or(CensusError::ZeroDimension)?;
    if n == 0 {
        return Err(CensusError::ZeroDimension);
    }
    if !poly.is_monic() {
        return Err(CensusError::NotMonic);
    }
    if n == 1 {
        return Ok(Some(TridiagMatrix::new(field, vec![-poly.coeff(0)], vec![])?));
    }
    let prime = prime_of(field)?;
    guard(prime, n, budget)?;
    let target: Vec<u64> = residues(poly);
    let target_idx = {
        let mut full = target.clone();
        full.push(1);
        poly_index(&full, prime)
    };
    let mut diag = vec![0u64; n];
    let (mut prev, mut cur) = (Vec::new(), Vec::new());
    loop {
        let mut sub = vec![1u64; n - 1];
        loop {
            charpoly_mod(&diag, &sub, prime, &mut prev, &mut cur);
            if poly_index(&cur, prime) == target_idx {
                let lift = |v: &[u64]| v.iter().map(|&x| field.residue(x).expect("reduced")).collect();
                return Ok(Some(TridiagMatrix::new(field, lift(&diag), lift(&sub))?));
            }
            if !advance(&mut sub, 1, prime) {
                break;
            }
        }
        if !advance(&mut diag, 0, prime) {
            return Ok(None);
        }
    }
}
