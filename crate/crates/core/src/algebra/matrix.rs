use std::fmt;

use super::{AlgebraError, Field, FieldValue};

/// Square matrix over a [`Field`], row-major. Used for Hankel systems and rank checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    field: Field,
    n: usize,
    entries: Vec<FieldValue>,
}

#[allow(clippy::needless_range_loop)]
impl DenseMatrix {
    pub fn from_fn(field: Field, n: usize, mut f: impl FnMut(usize, usize) -> FieldValue) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                assert_eq!(v.field(), field, "entry field differs from matrix field");
                entries.push(v);
            }
        }
        DenseMatrix { field, n, entries }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldValue>>) -> Result<Self, AlgebraError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(AlgebraError::Parse(format!("row of length {} in {n}x{n} matrix", row.len())));
            }
            for v in row {
                if v.field() != field {
                    return Err(AlgebraError::FieldMismatch { left: field, right: v.field() });
                }
                entries.push(v);
            }
        }
        Ok(DenseMatrix { field, n, entries })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldValue {
        &self.entries[i * self.n + j]
    }

    fn rows(&self) -> Vec<Vec<FieldValue>> {
        self.entries.chunks(self.n.max(1)).map(<[_]>::to_vec).collect()
    }

    /// Determinant. Fraction-free Bareiss elimination over ℚ, plain Gaussian over GF(p).
    /// The empty matrix has determinant 1.
    pub fn det(&self) -> FieldValue {
        match self.field {
            Field::Rationals => self.det_bareiss(),
            Field::Prime(_) => self.det_gauss(),
        }
    }

    fn det_bareiss(&self) -> FieldValue {
        let n = self.n;
        let mut m = self.rows();
        let mut sign_flip = false;
        let mut prev = self.field.one();
        for k in 0..n {
            let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                return self.field.zero();
            };
            if piv != k {
                m.swap(piv, k);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = &num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        let d = if n == 0 { self.field.one() } else { m[n - 1][n - 1].clone() };
        if sign_flip {
            -d
        } else {
            d
        }
    }

    fn det_gauss(&self) -> FieldValue {
        let n = self.n;
        let mut m = self.rows();
        let mut det = self.field.one();
        for k in 0..n {
            let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                return self.field.zero();
            };
            if piv != k {
                m.swap(piv, k);
                det = -det;
            }
            det = &det * &m[k][k];
            let inv = m[k][k].inv().expect("nonzero pivot");
            for i in k + 1..n {
                let factor = &m[i][k] * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let sub = &factor * &m[k][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        det
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut m = self.rows();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(piv, rank);
            let inv = m[rank][col].inv().expect("nonzero pivot");
            for i in rank + 1..n {
                let factor = &m[i][col] * &inv;
                for j in col..n {
                    let sub = &factor * &m[rank][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Solve `self · x = rhs`; `None` when the matrix is singular.
    pub fn solve(&self, rhs: &[FieldValue]) -> Option<Vec<FieldValue>> {
        let n = self.n;
        assert_eq!(rhs.len(), n);
        let mut m = self.rows();
        for (row, b) in m.iter_mut().zip(rhs) {
            row.push(b.clone());
        }
        for k in 0..n {
            let piv = (k..n).find(|&r| !m[r][k].is_zero())?;
            m.swap(piv, k);
            let inv = m[k][k].inv().ok()?;
            for j in k..=n {
                m[k][j] = &m[k][j] * &inv;
            }
            for i in 0..n {
                if i == k || m[i][k].is_zero() {
                    continue;
                }
                let factor = m[i][k].clone();
                for j in k..=n {
                    let sub = &factor * &m[k][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        Some(m.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(field: Field, rows: &[&[i64]]) -> DenseMatrix {
        DenseMatrix::from_rows(field, rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect())
            .unwrap()
    }

    // Leibniz expansion over all permutations.
    fn det_leibniz(m: &DenseMatrix) -> FieldValue {
        use itertools::Itertools;
        let n = m.size();
        let f = m.field();
        (0..n).permutations(n).fold(f.zero(), |acc, perm| {
            let inversions = (0..n).tuple_combinations().filter(|&(i, j)| perm[i] > perm[j]).count();
            let term = (0..n).fold(f.one(), |t, i| &t * m.get(i, perm[i]));
            if inversions % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            }
        })
    }

    #[test]
    fn det_small() {
        let m = mat(Field::Q, &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.det(), Field::Q.from_i64(18));
        assert_eq!(m.det(), det_leibniz(&m));
        let z = mat(Field::Q, &[&[0, 1], &[0, 5]]);
        assert!(z.det().is_zero());
        let empty = DenseMatrix::from_rows(Field::Q, vec![]).unwrap();
        assert!(empty.det().is_one());
    }

    #[test]
    fn det_needs_pivot() {
        let m = mat(Field::Q, &[&[0, 2, 1], &[3, 0, 1], &[1, 1, 0]]);
        assert_eq!(m.det(), det_leibniz(&m));
        let gf5 = Field::prime(5).unwrap();
        let m = mat(gf5, &[&[0, 2, 1], &[3, 0, 1], &[1, 1, 0]]);
        assert_eq!(m.det(), det_leibniz(&m));
    }

    #[test]
    fn rank_and_solve() {
        let m = mat(Field::Q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert!(m.solve(&[Field::Q.one(), Field::Q.one(), Field::Q.one()]).is_none());
        let m = mat(Field::Q, &[&[2, 1], &[1, 3]]);
        let x = m.solve(&[Field::Q.from_i64(3), Field::Q.from_i64(5)]).unwrap();
        assert_eq!(x[0].to_string(), "4/5");
        assert_eq!(x[1].to_string(), "7/5");
    }
}
