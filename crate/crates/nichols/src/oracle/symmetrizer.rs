//! Braided symmetrizers and graded dimensions.
//!
//! The degree-`m` symmetrizer is the sum over all `m!` permutations of
//! their shortest-word lifts through the braiding, assembled here from
//! block factors so that only `O(m^2)` elementary moves are ever applied.
//! The dimension of a multidegree component of the quotient algebra equals
//! the rank of the symmetrizer on the words of that multidegree, computed
//! exactly by fraction-free elimination.

use crate::braiding::BraidingMatrix;
use crate::oracle::WordVector;
use crate::scalar::{Ctx, LaurentScalar, UnitMonomial};

/// All words with the given letter counts (`degree[i]` copies of letter
/// `i`), in lexicographic order.
pub fn words_of_degree(degree: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = degree.iter().sum();
    let mut out = Vec::new();
    let mut remaining = degree.to_vec();
    let mut word = Vec::with_capacity(total);
    fn rec(
        remaining: &mut [usize],
        word: &mut Vec<usize>,
        total: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if word.len() == total {
            out.push(word.clone());
            return;
        }
        for letter in 0..remaining.len() {
            if remaining[letter] > 0 {
                remaining[letter] -= 1;
                word.push(letter);
                rec(remaining, word, total, out);
                word.pop();
                remaining[letter] += 1;
            }
        }
    }
    rec(&mut remaining, &mut word, total, &mut out);
    out
}

/// The coefficient picked up when the letter at position `src` of `w` is
/// braided leftwards past positions `dst..src` (used by the ascending
/// block factors): the word becomes `w` with that letter moved to `dst`.
fn move_left(q: &BraidingMatrix, w: &[usize], dst: usize, src: usize) -> (Vec<usize>, UnitMonomial) {
    let mut coeff = UnitMonomial::one(q.ctx());
    for p in dst..src {
        coeff = coeff.mul(q.q(w[p], w[src]));
    }
    let mut nw = w.to_vec();
    let moved = nw.remove(src);
    nw.insert(dst, moved);
    (nw, coeff)
}

/// Mirror image: the letter at `src` braids rightwards past
/// `src+1..=dst`.
fn move_right(
    q: &BraidingMatrix,
    w: &[usize],
    src: usize,
    dst: usize,
) -> (Vec<usize>, UnitMonomial) {
    let mut coeff = UnitMonomial::one(q.ctx());
    for p in (src + 1)..=dst {
        coeff = coeff.mul(q.q(w[src], w[p]));
    }
    let mut nw = w.to_vec();
    let moved = nw.remove(src);
    nw.insert(dst, moved);
    (nw, coeff)
}

/// One ascending block factor: identity plus, for each prefix of adjacent
/// braidings starting at position `first`, the move bringing a later
/// letter to position `first`.
fn apply_ascending_block(q: &BraidingMatrix, v: &WordVector, first: usize) -> WordVector {
    let mut out = v.clone();
    for (w, c) in v.terms() {
        for src in (first + 1)..w.len() {
            let (nw, unit) = move_left(q, w, first, src);
            out.add_term(nw, c.mul_unit(&unit));
        }
    }
    out
}

/// The mirror block factor: identity plus, for each earlier position, the
/// move sending its letter to position `last`.  Acts on positions
/// `0..=last`.
fn apply_descending_block(q: &BraidingMatrix, v: &WordVector, last: usize) -> WordVector {
    let mut out = v.clone();
    for (w, c) in v.terms() {
        for src in 0..last {
            let (nw, unit) = move_right(q, w, src, last);
            out.add_term(nw, c.mul_unit(&unit));
        }
    }
    out
}

/// The full braided symmetrizer on homogeneous vectors of length `m`,
/// assembled from ascending block factors on the last `k` positions for
/// `k = m` down to `2`.
pub fn apply_symmetrizer(q: &BraidingMatrix, v: &WordVector) -> WordVector {
    let m = common_length(v);
    let mut cur = v.clone();
    for k in (2..=m).rev() {
        cur = apply_ascending_block(q, &cur, m - k);
    }
    cur
}

/// The same operator assembled from the mirrored factorization; agreement
/// with [`apply_symmetrizer`] is a strong internal consistency check.
pub fn mirror_symmetrizer(q: &BraidingMatrix, v: &WordVector) -> WordVector {
    let m = common_length(v);
    let mut cur = v.clone();
    for k in (2..=m).rev() {
        cur = apply_descending_block(q, &cur, k - 1);
    }
    cur
}

fn common_length(v: &WordVector) -> usize {
    let mut len = None;
    for (w, _) in v.terms() {
        match len {
            None => len = Some(w.len()),
            Some(l) => assert_eq!(l, w.len(), "symmetrizer needs a homogeneous input"),
        }
    }
    len.unwrap_or(0)
}

/// The symmetrizer restricted to one multidegree, as an explicit matrix
/// in the lexicographic word basis: column `c` holds the expansion of the
/// symmetrized `c`-th word.
pub struct SymmetrizerBlock {
    pub words: Vec<Vec<usize>>,
    pub matrix: Vec<Vec<LaurentScalar>>,
}

pub fn symmetrizer_block(q: &BraidingMatrix, degree: &[usize]) -> SymmetrizerBlock {
    assert_eq!(degree.len(), q.rank());
    let words = words_of_degree(degree);
    let ctx = q.ctx();
    let dim = words.len();
    let mut matrix = vec![vec![LaurentScalar::zero(ctx); dim]; dim];
    for (c, word) in words.iter().enumerate() {
        let image = apply_symmetrizer(q, &WordVector::basis_word(ctx, word));
        for (r, row_word) in words.iter().enumerate() {
            matrix[r][c] = image.coefficient(row_word);
        }
    }
    SymmetrizerBlock { words, matrix }
}

/// Exact rank by fraction-free elimination with complete pivoting.  Every
/// intermediate entry is a minor of the input, and each elimination step
/// divides exactly by the previous pivot.
pub fn laurent_rank(mut m: Vec<Vec<LaurentScalar>>, ctx: &Ctx) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut prev = LaurentScalar::one(ctx);
    let mut rank = 0;
    while rank < rows && rank < cols {
        // Complete pivoting by the smallest-weight nonzero entry.
        let mut pivot: Option<(usize, usize)> = None;
        for i in rank..rows {
            for j in rank..cols {
                if m[i][j].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => m[i][j].pivot_weight() < m[pi][pj].pivot_weight(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(rank, pi);
        for row in m.iter_mut() {
            row.swap(rank, pj);
        }
        let p = m[rank][rank].clone();
        for i in (rank + 1)..rows {
            for j in (rank + 1)..cols {
                let num = m[i][j].mul(&p).sub(&m[i][rank].mul(&m[rank][j]));
                m[i][j] = num.div_exact(&prev);
            }
            m[i][rank] = LaurentScalar::zero(ctx);
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// The dimension of the multidegree component of the quotient algebra:
/// the rank of the symmetrizer block.
pub fn graded_dimension(q: &BraidingMatrix, degree: &[usize]) -> usize {
    let block = symmetrizer_block(q, degree);
    laurent_rank(block.matrix, q.ctx())
}
