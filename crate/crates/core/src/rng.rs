//! Deterministic randomness.
//!
//! Every random draw in the crate comes from [`stream`]: a ChaCha8 generator
//! keyed by `seed_from_u64(master)` and positioned on ChaCha stream `id`.
//! Distinct ids give independent sequences. Parallel batch code gives trial
//! `i` the stream `i` (or a documented offset of it), so results never
//! depend on how work is scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Field, FieldValue, Polynomial};
use crate::tridiagonal::TridiagMatrix;

pub type TrialRng = ChaCha8Rng;

pub fn stream(master: u64, id: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(id);
    rng
}

/// Uniform element: an integer in `[-bound, bound]` over ℚ, a uniform residue over GF(p).
pub fn element(rng: &mut impl Rng, field: Field, bound: i64) -> FieldValue {
    match field.modulus() {
        None => field.from_i64(rng.random_range(-bound..=bound)),
        Some(p) => field.residue(rng.random_range(0..p)).expect("prime field"),
    }
}

pub fn nonzero_element(rng: &mut impl Rng, field: Field, bound: i64) -> FieldValue {
    loop {
        let v = element(rng, field, bound);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Rational `num/den` with `|num| <= bound`, `1 <= den <= bound`; uniform residue over GF(p).
pub fn fraction(rng: &mut impl Rng, field: Field, bound: i64) -> FieldValue {
    match field {
        Field::Rationals => {
            let num = rng.random_range(-bound..=bound);
            let den = rng.random_range(1..=bound.max(1));
            field.ratio(num, den).expect("nonzero denominator")
        }
        Field::Prime(_) => element(rng, field, bound),
    }
}

pub fn nonzero_fraction(rng: &mut impl Rng, field: Field, bound: i64) -> FieldValue {
    loop {
        let v = fraction(rng, field, bound);
        if !v.is_zero() {
            return v;
        }
    }
}

/// `count` pairwise distinct draws from `draw`.
///
/// Over GF(p) this needs `count <= p`.
pub fn distinct<R: Rng>(
    rng: &mut R,
    field: Field,
    count: usize,
    mut draw: impl FnMut(&mut R) -> FieldValue,
) -> Vec<FieldValue> {
    if let Some(p) = field.modulus() {
        assert!(count as u64 <= p, "cannot draw {count} distinct residues mod {p}");
    }
    let mut out: Vec<FieldValue> = Vec::with_capacity(count);
    while out.len() < count {
        let v = draw(rng);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Random monic polynomial of degree `deg` with coefficients from [`element`].
pub fn monic(rng: &mut impl Rng, field: Field, deg: usize, bound: i64) -> Polynomial {
    let mut coeffs: Vec<FieldValue> = (0..deg).map(|_| element(rng, field, bound)).collect();
    coeffs.push(field.one());
    Polynomial::new(field, coeffs).expect("single field")
}

/// Random irreducible normalized tridiagonal matrix.
pub fn irreducible_matrix(rng: &mut impl Rng, field: Field, n: usize, bound: i64) -> TridiagMatrix {
    let diag = (0..n).map(|_| element(rng, field, bound)).collect();
    let sub = (1..n).map(|_| nonzero_element(rng, field, bound)).collect();
    TridiagMatrix::new(field, diag, sub).expect("consistent shape")
}
