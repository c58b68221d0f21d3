//! Normalized tridiagonal matrices and their characteristic-polynomial chains.
//!
//! A normalized matrix has ones on the superdiagonal:
//!
//! ```text
//! [ a1  1              ]
//! [ b1  a2  1          ]
//! [     b2  ..  ..     ]
//! [         ..  ..   1 ]
//! [            bn-1  an]
//! ```
//!
//! `p_k` is the characteristic polynomial of the trailing `k×k` block, so
//! `p_n` belongs to the whole matrix and `p_{n-1}` to the block with the first
//! row and column removed. They satisfy
//! `p_{k+1} = (t - a_{n-k}) p_k - b_{n-k} p_{k-1}` with `p_0 = 1`.

use crate::algebra::{AlgebraError, DenseMatrix, Field, FieldValue, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TridiagMatrix {
    field: Field,
    diag: Vec<FieldValue>,
    sub: Vec<FieldValue>,
}

impl TridiagMatrix {
    /// `diag` holds `a_1..a_n`, `sub` holds `b_1..b_{n-1}`.
    pub fn new(field: Field, diag: Vec<FieldValue>, sub: Vec<FieldValue>) -> Result<Self, AlgebraError> {
        if diag.is_empty() || sub.len() + 1 != diag.len() {
            return Err(AlgebraError::Parse(format!(
                "tridiagonal matrix needs n >= 1 diagonal and n-1 subdiagonal entries, got {} and {}",
                diag.len(),
                sub.len()
            )));
        }
        if let Some(bad) = diag.iter().chain(&sub).find(|v| v.field() != field) {
            return Err(AlgebraError::FieldMismatch { left: field, right: bad.field() });
        }
        Ok(TridiagMatrix { field, diag, sub })
    }

    pub fn from_i64(field: Field, diag: &[i64], sub: &[i64]) -> Result<Self, AlgebraError> {
        Self::new(
            field,
            diag.iter().map(|&v| field.from_i64(v)).collect(),
            sub.iter().map(|&v| field.from_i64(v)).collect(),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[FieldValue] {
        &self.diag
    }

    pub fn sub(&self) -> &[FieldValue] {
        &self.sub
    }

    pub fn is_irreducible(&self) -> bool {
        self.sub.iter().all(|b| !b.is_zero())
    }

    /// The trailing `k×k` principal block. `k = n - 1` is `A(1)`.
    pub fn trailing_submatrix(&self, k: usize) -> Result<Self, AlgebraError> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(AlgebraError::Parse(format!("trailing block size {k} out of range 1..={n}")));
        }
        Ok(TridiagMatrix {
            field: self.field,
            diag: self.diag[n - k..].to_vec(),
            sub: self.sub[n - k..].to_vec(),
        })
    }

    /// `A(1, ..., k)`: the matrix with its first `k` rows and columns removed.
    pub fn drop_leading(&self, k: usize) -> Result<Self, AlgebraError> {
        self.trailing_submatrix(self.n().saturating_sub(k))
    }

    /// Full matrix with the implicit unit superdiagonal filled in.
    pub fn to_dense(&self) -> DenseMatrix {
        let f = self.field;
        DenseMatrix::from_fn(f, self.n(), |i, j| {
            if i == j {
                self.diag[i].clone()
            } else if j == i + 1 {
                f.one()
            } else if i == j + 1 {
                self.sub[j].clone()
            } else {
                f.zero()
            }
        })
    }

    /// Reverse the index order (the transpose conjugated by the flip permutation,
    /// renormalized). Leading blocks of the flip are trailing blocks of the original.
    pub fn flipped(&self) -> Self {
        TridiagMatrix {
            field: self.field,
            diag: self.diag.iter().rev().cloned().collect(),
            sub: self.sub.iter().rev().cloned().collect(),
        }
    }
}

/// `p_0, p_1, ..., p_n` for one matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyChain {
    polys: Vec<Polynomial>,
}

impl CharPolyChain {
    pub(crate) fn from_polys(polys: Vec<Polynomial>) -> Self {
        debug_assert!(polys.iter().enumerate().all(|(k, p)| p.degree() == Some(k) && p.is_monic()));
        CharPolyChain { polys }
    }

    /// Dimension `n` of the matrix the chain came from.
    pub fn n(&self) -> usize {
        self.polys.len() - 1
    }

    /// `p_k`, the characteristic polynomial of the trailing `k×k` block.
    pub fn get(&self, k: usize) -> &Polynomial {
        &self.polys[k]
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn top(&self) -> &Polynomial {
        &self.polys[self.n()]
    }

    /// `p_{n-1}`; equals `1` for a `1×1` matrix.
    pub fn second(&self) -> &Polynomial {
        &self.polys[self.n() - 1]
    }
}

pub fn charpoly_chain(a: &TridiagMatrix) -> CharPolyChain {
    let n = a.n();
    let f = a.field();
    let t = Polynomial::t(f);
    let mut polys = Vec::with_capacity(n + 1);
    polys.push(Polynomial::one(f));
    polys.push(Polynomial::linear_root(&a.diag[n - 1]));
    for k in 1..n {
        let shifted = &t - &Polynomial::constant(a.diag[n - k - 1].clone());
        let next = &(&shifted * &polys[k]) - &polys[k - 1].scale(&a.sub[n - k - 1]);
        polys.push(next);
    }
    CharPolyChain::from_polys(polys)
}

/// Characteristic polynomials of the leading blocks, `P_0, ..., P_n`, via
/// `P_{k+1} = (t - a_{k+1}) P_k - b_k P_{k-1}`.
pub fn leading_charpoly_chain(a: &TridiagMatrix) -> CharPolyChain {
    charpoly_chain(&a.flipped())
}

/// Number of eigenvalues `A` shares with `A(1)`, counted with multiplicity.
///
/// If `b_i` is the first zero subdiagonal entry then `gcd(p_n, p_{n-1}) = p_{n-i}`,
/// so the count is `n - i`; it is `0` when every `b_i` is nonzero.
pub fn common_eigenvalue_count(a: &TridiagMatrix) -> usize {
    let n = a.n();
    a.sub
        .iter()
        .position(FieldValue::is_zero)
        .map_or(0, |idx| n - (idx + 1))
}

/// `S_0, ..., S_n`: `S_k` is the sum of the `k×k` principal minors, read off
/// `det(A - λI) = Σ (-1)^k S_{n-k} λ^k`.
pub fn s_invariants(a: &TridiagMatrix) -> Vec<FieldValue> {
    s_invariants_of_charpoly(charpoly_chain(a).top())
}

/// Same as [`s_invariants`] but from a monic characteristic polynomial.
pub fn s_invariants_of_charpoly(p: &Polynomial) -> Vec<FieldValue> {
    let n = p.degree().unwrap_or(0);
    (0..=n)
        .map(|k| {
            let c = p.coeff(n - k);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}
