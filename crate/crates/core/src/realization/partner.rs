//! Seeded randomized search for a proper partner `q` of a given `p`.
//!
//! Non-proper partners satisfy at least one polynomial equation in the
//! coefficients of `q`, so random small-integer choices over ℚ land in the
//! proper set almost surely. Over a finite field the proper set can be
//! empty, in which case the search exhausts its budget.

use rayon::prelude::*;

use super::{check_proper, RealizeError};
use crate::algebra::Polynomial;
use crate::rng;

/// Starting half-width of the integer box for coefficients over ℚ.
pub const INITIAL_BOUND: i64 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartnerSearch {
    pub partner: Option<Polynomial>,
    /// 0-based index of the successful trial.
    pub trial: Option<u64>,
    pub budget: u64,
}

/// Coefficient bound for trial `i`: starts at [`INITIAL_BOUND`] and doubles
/// every `budget / 4` trials.
pub fn trial_bound(i: u64, budget: u64) -> i64 {
    let quarter = (budget / 4).max(1);
    let doublings = (i / quarter).min(40) as u32;
    INITIAL_BOUND.saturating_mul(1i64 << doublings)
}

/// Trial `i` draws every coefficient of `q` from `rng::stream(seed, i)`; the
/// lowest successful trial index wins regardless of thread count.
pub fn partner_search_report(p: &Polynomial, budget: u64, seed: u64) -> Result<PartnerSearch, RealizeError> {
    let deg = match p.degree() {
        Some(d) if d >= 1 => d,
        d => return Err(RealizeError::DegreeMismatch { p: d, q: None }),
    };
    if !p.is_monic() {
        return Err(RealizeError::NotMonic { which: "p" });
    }
    let field = p.field();
    if deg == 1 {
        return Ok(PartnerSearch { partner: Some(Polynomial::one(field)), trial: Some(0), budget });
    }
    let hit = (0..budget).into_par_iter().find_map_first(|i| {
        let mut r = rng::stream(seed, i);
        let q = rng::monic(&mut r, field, deg - 1, trial_bound(i, budget));
        match check_proper(p, &q) {
            Ok(v) if v.is_proper() => Some((i, q)),
            _ => None,
        }
    });
    Ok(PartnerSearch { trial: hit.as_ref().map(|h| h.0), partner: hit.map(|h| h.1), budget })
}

/// A monic `q` with `(p, q)` proper, or `None` once `budget` trials are spent.
pub fn find_proper_partner(p: &Polynomial, budget: u64, seed: u64) -> Result<Option<Polynomial>, RealizeError> {
    let found = partner_search_report(p, budget, seed)?.partner;
    if let Some(q) = &found {
        debug_assert!(check_proper(p, q)?.is_proper());
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    #[test]
    fn gf2_cubic_has_no_partner() {
        let gf2 = Field::prime(2).unwrap();
        let p = Polynomial::from_i64(gf2, &[1, 0, 0, 1]);
        assert_eq!(find_proper_partner(&p, 200, 0).unwrap(), None);
    }

    #[test]
    fn repeated_root_has_partner() {
        let p = Polynomial::from_i64(Field::Q, &[-1, 1]).pow(5);
        let q = find_proper_partner(&p, 64, 11).unwrap().expect("partner within budget");
        assert!(check_proper(&p, &q).unwrap().is_proper());
    }

    #[test]
    fn linear_gets_unit_partner() {
        let p = Polynomial::from_i64(Field::Q, &[-9, 1]);
        assert_eq!(find_proper_partner(&p, 0, 0).unwrap(), Some(Polynomial::one(Field::Q)));
    }

    #[test]
    fn bound_schedule() {
        assert_eq!(trial_bound(0, 100), 3);
        assert_eq!(trial_bound(24, 100), 3);
        assert_eq!(trial_bound(25, 100), 6);
        assert_eq!(trial_bound(99, 100), 24);
        assert_eq!(trial_bound(5, 2), 96);
    }

    #[test]
    fn search_is_deterministic() {
        let p = Polynomial::from_i64(Field::Q, &[0, 0, 0, 1]);
        let a = partner_search_report(&p, 50, 42).unwrap();
        let b = partner_search_report(&p, 50, 42).unwrap();
        assert_eq!(a, b);
    }
}
