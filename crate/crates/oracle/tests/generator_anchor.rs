//! Pins for the braid action computed entirely by rewriting.
//!
//! The full twist on the middle pair of cables acts diagonally on the
//! clasped basis, and its eigenvalues fix the framing and chirality
//! conventions once and for all. Opposite twists must invert each other
//! through two completely separate rewriting runs.

use a2rep_core::RatFunc;
use a2rep_oracle::basis::oracle_generator_matrix;
use a2rep_oracle::Budget;

fn matmul(a: &[Vec<RatFunc>], b: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    let dim = a.len();
    (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| {
                    let mut acc = RatFunc::zero();
                    for t in 0..dim {
                        acc = &acc + &(&a[r][t] * &b[t][c]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[test]
fn middle_twist_acts_diagonally_with_the_framing_eigenvalues() {
    let mut budget = Budget::with_limit(5_000_000);
    let m = oracle_generator_matrix(1, 2, 2, 3, true, &mut budget).unwrap();
    assert_eq!(m[0][0], RatFunc::v_pow(-16));
    assert_eq!(m[1][1], RatFunc::v_pow(2));
    assert_eq!(m[0][1], RatFunc::zero());
    assert_eq!(m[1][0], RatFunc::zero());
}

#[test]
fn opposite_twists_invert_each_other() {
    let mut budget = Budget::with_limit(5_000_000);
    let p = oracle_generator_matrix(1, 2, 1, 2, true, &mut budget).unwrap();
    let m = oracle_generator_matrix(1, 2, 1, 2, false, &mut budget).unwrap();
    let prod = matmul(&p, &m);
    for r in 0..prod.len() {
        for c in 0..prod.len() {
            let expect = if r == c { RatFunc::one() } else { RatFunc::zero() };
            assert_eq!(prod[r][c], expect, "entry ({r},{c})");
        }
    }
}
