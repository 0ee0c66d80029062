//! Adjoint powers, skew derivations, and the bilinear pairing on words.
//!
//! The left and right skew derivations remove one occurrence of a letter
//! and record the braiding picked up on the way in; iterating the left
//! one against the letters of a test word (last letter first) and reading
//! off the empty-word coefficient gives a bilinear pairing whose radical
//! in each multidegree equals the symmetrizer kernel, which is checked in
//! the tests as a rank identity.

use crate::braiding::BraidingMatrix;
use crate::oracle::WordVector;
use crate::scalar::{LaurentScalar, UnitMonomial};

/// `(ad x_i)^m (x_j)` in the free algebra: each step is
/// `x_i * v - (braiding of x_i past the degree of v) * v * x_i`.
pub fn ad_power(q: &BraidingMatrix, i: usize, j: usize, m: usize) -> WordVector {
    let ctx = q.ctx();
    let mut cur = WordVector::basis_word(ctx, &[j]);
    for s in 0..m {
        let factor = q.q(i, i).pow(s as i64).mul(q.q(i, j));
        cur = cur.prepend(i).sub(&cur.append(i).scale_unit(&factor));
    }
    cur
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The skew derivation removing one letter `i`.  The left version braids
/// the removed letter out through the prefix, the right version through
/// the suffix.
pub fn skew_diff(q: &BraidingMatrix, i: usize, side: Side, v: &WordVector) -> WordVector {
    let ctx = q.ctx();
    let mut out = WordVector::zero(ctx);
    for (w, c) in v.terms() {
        for p in 0..w.len() {
            if w[p] != i {
                continue;
            }
            let mut unit = UnitMonomial::one(ctx);
            match side {
                Side::Left => {
                    for l in 0..p {
                        unit = unit.mul(&q.q(i, w[l]).inv());
                    }
                }
                Side::Right => {
                    for l in (p + 1)..w.len() {
                        unit = unit.mul(&q.q(w[l], i).inv());
                    }
                }
            }
            let mut nw = w.clone();
            nw.remove(p);
            out.add_term(nw, c.mul_unit(&unit));
        }
    }
    out
}

/// The bilinear pairing: the words of `u` act on `v` by left skew
/// derivations, last letter first, and the empty-word coefficient of the
/// result is collected.
pub fn pairing(q: &BraidingMatrix, u: &WordVector, v: &WordVector) -> LaurentScalar {
    let ctx = q.ctx();
    let mut total = LaurentScalar::zero(ctx);
    for (w, cu) in u.terms() {
        let mut cur = v.clone();
        for p in (0..w.len()).rev() {
            cur = skew_diff(q, w[p], Side::Left, &cur);
        }
        total = total.add(&cu.mul(&cur.coefficient(&[])));
    }
    total
}

/// The Gram matrix of the pairing on the words of one multidegree.
pub fn pairing_matrix(q: &BraidingMatrix, degree: &[usize]) -> Vec<Vec<LaurentScalar>> {
    let words = crate::oracle::symmetrizer::words_of_degree(degree);
    let ctx = q.ctx();
    words
        .iter()
        .map(|wr| {
            let u = WordVector::basis_word(ctx, wr);
            words
                .iter()
                .map(|wc| pairing(q, &u, &WordVector::basis_word(ctx, wc)))
                .collect()
        })
        .collect()
}

/// The braided integer `1 + u + ... + u^(m-1)`.
pub fn q_integer(u: &UnitMonomial, m: usize) -> LaurentScalar {
    let mut total = LaurentScalar::zero(u.ctx());
    for k in 0..m {
        total = total.add(&LaurentScalar::from_unit(&u.pow(k as i64)));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::instances;
    use crate::oracle::symmetrizer::{
        apply_symmetrizer, graded_dimension, laurent_rank, words_of_degree,
    };

    #[test]
    fn adjoint_expansion() {
        let q = instances::a2_generic();
        let a1 = ad_power(&q, 0, 1, 1);
        assert_eq!(a1.coefficient(&[0, 1]), LaurentScalar::one(q.ctx()));
        assert_eq!(
            a1.coefficient(&[1, 0]),
            LaurentScalar::from_unit(q.q(0, 1)).neg()
        );
        // Degree bookkeeping: m steps add m letters i.
        let a3 = ad_power(&q, 0, 1, 3);
        assert_eq!(a3.multidegree(2), Some(vec![3, 1]));
    }

    #[test]
    fn pairing_of_the_degree_two_relation_vector() {
        // <(ad x1)(x2), (ad x1)(x2)> = q21^-1 - q12 for every braiding.
        for q in [
            instances::a2_generic(),
            instances::b2_generic(),
            instances::b2_fourth_root(),
        ] {
            let a = ad_power(&q, 0, 1, 1);
            let expected = LaurentScalar::from_unit(&q.q(1, 0).inv())
                .sub(&LaurentScalar::from_unit(q.q(0, 1)));
            assert_eq!(pairing(&q, &a, &a), expected);
        }
    }

    #[test]
    fn left_and_right_derivations_commute() {
        let q = instances::b2_fourth_root();
        let ctx = q.ctx();
        let v = WordVector::basis_word(ctx, &[0, 1, 0, 0, 1])
            .add(&WordVector::basis_word(ctx, &[1, 0, 0, 1, 0]).scale_unit(q.q(0, 1)));
        for i in 0..2 {
            for j in 0..2 {
                let lhs = skew_diff(&q, i, Side::Left, &skew_diff(&q, j, Side::Right, &v));
                let rhs = skew_diff(&q, j, Side::Right, &skew_diff(&q, i, Side::Left, &v));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn right_derivation_of_adjoint_powers() {
        // The right derivation collapses an adjoint power onto the previous
        // one with an explicit braided-integer coefficient.
        for q in [instances::a2_generic(), instances::b2_generic()] {
            for m in 1..=3usize {
                let lhs = skew_diff(&q, 0, Side::Right, &ad_power(&q, 0, 1, m));
                let qii_inv = q.q(0, 0).inv();
                let stopping = LaurentScalar::one(q.ctx()).sub(&LaurentScalar::from_unit(
                    &q.q(0, 0).pow(m as i64 - 1).mul(q.q(0, 1)).mul(q.q(1, 0)),
                ));
                let coeff = LaurentScalar::from_unit(&q.q(1, 0).inv())
                    .mul(&q_integer(&qii_inv, m))
                    .mul(&stopping);
                let rhs = ad_power(&q, 0, 1, m - 1).scale(&coeff);
                assert_eq!(lhs, rhs, "mismatch at m = {m}");
            }
        }
    }

    #[test]
    fn overshooting_adjoint_powers_die_in_the_quotient() {
        // One step past the reflection coefficient, the adjoint power lands
        // in the symmetrizer kernel.
        let a2 = instances::a2_generic();
        assert!(apply_symmetrizer(&a2, &ad_power(&a2, 0, 1, 2)).is_zero());
        assert!(apply_symmetrizer(&a2, &ad_power(&a2, 1, 0, 2)).is_zero());
        let b2 = instances::b2_generic();
        assert!(apply_symmetrizer(&b2, &ad_power(&b2, 0, 1, 3)).is_zero());
        assert!(apply_symmetrizer(&b2, &ad_power(&b2, 1, 0, 2)).is_zero());
        // ...and not one step earlier.
        assert!(!apply_symmetrizer(&b2, &ad_power(&b2, 0, 1, 2)).is_zero());
    }

    #[test]
    fn pairing_rank_equals_graded_dimension() {
        let cases = [
            (instances::a2_third_root(), vec![vec![1, 1], vec![2, 1], vec![2, 2], vec![3, 0]]),
            (instances::b2_fourth_root(), vec![vec![1, 1], vec![2, 1], vec![0, 2]]),
            (instances::a2_generic(), vec![vec![1, 1], vec![2, 2]]),
        ];
        for (q, degrees) in cases {
            for d in degrees {
                let gram_rank = laurent_rank(pairing_matrix(&q, &d), q.ctx());
                assert_eq!(
                    gram_rank,
                    graded_dimension(&q, &d),
                    "rank mismatch at degree {d:?}"
                );
            }
        }
    }

    #[test]
    fn pairing_respects_multidegree() {
        // Words of different multidegrees pair to zero.
        let q = instances::a2_generic();
        let ctx = q.ctx();
        let u = WordVector::basis_word(ctx, &[0, 1]);
        let v = WordVector::basis_word(ctx, &[0, 0]);
        assert!(pairing(&q, &u, &v).is_zero());
        assert_eq!(words_of_degree(&[1, 1]).len(), 2);
    }
}
