mod common;

use common::{charpoly_oracle, qp};
use proptest::prelude::*;
use tripair::algebra::{Field, FieldValue};
use tripair::rng;
use tripair::tridiagonal::{
    charpoly_chain, common_eigenvalue_count, leading_charpoly_chain, s_invariants, TridiagMatrix,
};

fn matrix(field: Field, n: usize, allow_zero_sub: bool) -> impl Strategy<Value = TridiagMatrix> {
    (prop::collection::vec(-9i64..=9, n), prop::collection::vec(-9i64..=9, n - 1)).prop_map(move |(d, mut s)| {
        if !allow_zero_sub {
            for b in s.iter_mut() {
                if field.from_i64(*b).is_zero() {
                    *b = 1;
                }
            }
        }
        TridiagMatrix::from_i64(field, &d, &s).unwrap()
    })
}

fn any_matrix(allow_zero_sub: bool) -> impl Strategy<Value = TridiagMatrix> {
    (prop_oneof![Just(Field::Q), Just(Field::Prime(2)), Just(Field::Prime(3)), Just(Field::Prime(5))], 1usize..=6)
        .prop_flat_map(move |(f, n)| matrix(f, n, allow_zero_sub))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chain_matches_cofactor_expansion(a in any_matrix(true)) {
        let chain = charpoly_chain(&a);
        for k in 0..=a.n() {
            prop_assert_eq!(chain.get(k), &charpoly_oracle(&a, k));
        }
    }

    #[test]
    fn top_s_invariant_is_determinant(a in any_matrix(true)) {
        let s = s_invariants(&a);
        prop_assert_eq!(&s[a.n()], &a.to_dense().det());
        let trace = a.diag().iter().fold(a.field().zero(), |acc, d| &acc + d);
        prop_assert_eq!(&s[1], &trace);
    }

    #[test]
    fn shared_eigenvalues_equal_gcd_degree(a in any_matrix(true)) {
        let c = charpoly_chain(&a);
        let g = c.top().gcd(c.second()).unwrap();
        prop_assert_eq!(common_eigenvalue_count(&a), g.degree().unwrap());
    }

    #[test]
    fn leading_chain_matches_leading_blocks(a in any_matrix(true)) {
        let lead = leading_charpoly_chain(&a);
        let flip = a.flipped();
        for k in 0..=a.n() {
            prop_assert_eq!(lead.get(k), &charpoly_oracle(&flip, k));
        }
        let whole = charpoly_chain(&a);
        prop_assert_eq!(lead.top(), whole.top());
    }

    #[test]
    fn adjacent_chain_members_are_coprime(a in any_matrix(false)) {
        let c = charpoly_chain(&a);
        for k in 1..=a.n() {
            prop_assert_eq!(c.get(k).gcd(c.get(k - 1)).unwrap().degree(), Some(0));
        }
    }
}

#[test]
fn eigenvalues_of_irreducible_matrices_are_geometrically_simple() {
    for i in 0..200u64 {
        let mut r = rng::stream(1, i);
        let f = Field::prime([2, 3, 5, 7][(i % 4) as usize]).unwrap();
        let n = 2 + (i % 5) as usize;
        let a = rng::irreducible_matrix(&mut r, f, n, 9);
        let p = charpoly_chain(&a).top().clone();
        for lambda in f.elements().unwrap() {
            if p.eval(&lambda).unwrap().is_zero() {
                let shifted =
                    TridiagMatrix::new(f, a.diag().iter().map(|d| d - &lambda).collect(), a.sub().to_vec()).unwrap();
                assert_eq!(shifted.to_dense().rank(), n - 1, "{a:?} at {lambda}");
            }
        }
    }
}

#[test]
fn non_adjacent_members_can_share_roots() {
    let a = TridiagMatrix::from_i64(Field::Q, &[0, 0, 0], &[1, 1]).unwrap();
    let c = charpoly_chain(&a);
    assert_eq!(c.get(3).gcd(c.get(1)).unwrap(), qp(&[0, 1]));
}

#[test]
fn several_zero_subdiagonal_entries() {
    // The first zero decides: gcd(p_4, p_3) = p_3 here.
    let a = TridiagMatrix::from_i64(Field::Q, &[1, 2, 3, 4], &[0, 1, 0]).unwrap();
    assert_eq!(common_eigenvalue_count(&a), 3);
    let c = charpoly_chain(&a);
    assert_eq!(c.top().gcd(c.second()).unwrap(), c.second().clone());
    let values: Vec<FieldValue> = s_invariants(&a);
    assert_eq!(values.len(), 5);
}
