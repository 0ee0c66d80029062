//! Pseudo-reflections of diagonal braidings.
//!
//! For a braiding `q` and an index `i`, the coefficient `m_ij` is the least
//! `m >= 0` at which the tower of braided commutators from `i` into `j`
//! truncates: either `q_ii^m q_ij q_ji = 1` or the `(m+1)`-st q-number of
//! `q_ii` vanishes.  When every `m_ij` (over `j != i`) is finite, index `i`
//! admits the involutive pseudo-reflection `e_i -> -e_i`,
//! `e_j -> e_j + m_ij e_i`, and the braiding itself can be transported to a
//! reflected braiding with the same coefficients.  Both constructions are
//! exact; reflecting twice returns the original matrix entrywise.

use crate::braiding::BraidingMatrix;
use crate::matrix::IntMatrix;
use crate::scalar::{solve_power, PowerSolutions};

/// The least `m >= 0` with `q_ii^m q_ij q_ji = 1` or `[m+1]_{q_ii} = 0`,
/// or `None` when the tower never truncates.
pub fn m_coefficient(q: &BraidingMatrix, i: usize, j: usize) -> Option<i64> {
    assert!(i != j, "m_coefficient is off-diagonal only");
    let qii = q.q(i, i);
    let target = q.sym_product(i, j).inv();
    // First truncation cause: q_ii^m equals the inverse symmetrized product.
    let power_candidate = match solve_power(qii, &target) {
        PowerSolutions::Empty => None,
        PowerSolutions::All => Some(0),
        PowerSolutions::Single(a) => (a >= 0).then_some(a),
        PowerSolutions::Class { rep, modulus } => Some(rep.rem_euclid(modulus as i64)),
    };
    // Second truncation cause: 1 + q_ii + ... + q_ii^m = 0, first at
    // m + 1 = ord(q_ii) when that order is finite and at least 2.
    let qnumber_candidate = match qii.multiplicative_order() {
        Some(d) if d >= 2 => Some(d as i64 - 1),
        _ => None,
    };
    match (power_candidate, qnumber_candidate) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b),
        (None, None) => None,
    }
}

/// Index `i` admits no pseudo-reflection because `m_coefficient(q, i, partner)`
/// is undefined.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("index {index} admits no pseudo-reflection: the commutator tower into {partner} never truncates")]
pub struct NotReflectable {
    pub index: usize,
    pub partner: usize,
}

/// An involutive change of basis attached to a reflectable index: the map
/// sending `e_i` to `-e_i` and `e_j` to `e_j + m_ij e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReflectionMap {
    index: usize,
    coeffs: Vec<i64>,
    matrix: IntMatrix,
}

impl ReflectionMap {
    pub fn index(&self) -> usize {
        self.index
    }

    /// The truncation coefficients `m_ij` indexed by `j`; the slot at the
    /// reflected index itself is fixed to 0.
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    /// The matrix acting on column vectors.
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.matrix.apply(v)
    }
}

/// The pseudo-reflection at index `i`, if every `m_ij` is finite.
pub fn pseudo_reflection(q: &BraidingMatrix, i: usize) -> Result<ReflectionMap, NotReflectable> {
    let n = q.rank();
    let mut coeffs = vec![0i64; n];
    for j in 0..n {
        if j == i {
            continue;
        }
        coeffs[j] = m_coefficient(q, i, j).ok_or(NotReflectable { index: i, partner: j })?;
    }
    let mut t = IntMatrix::identity(n);
    t.set(i, i, -1);
    for j in 0..n {
        if j != i {
            t.set(i, j, coeffs[j]);
        }
    }
    Ok(ReflectionMap {
        index: i,
        coeffs,
        matrix: t,
    })
}

/// The reflected braiding at index `i`: the structure constants of the
/// transported basis, in which the `j`-th vector has degree `e_j + m_ij e_i`
/// for `j != i` and degree `-e_i` for `j = i`.
pub fn reflect_braiding(q: &BraidingMatrix, i: usize) -> Result<BraidingMatrix, NotReflectable> {
    let n = q.rank();
    let refl = pseudo_reflection(q, i)?;
    let m = refl.coefficients();
    let qii = q.q(i, i);
    let mut entries = Vec::with_capacity(n * n);
    for j in 0..n {
        for l in 0..n {
            let value = if j == i && l == i {
                qii.clone()
            } else if j == i {
                // Row i: the inverse action on the transported vector at l.
                qii.pow(-m[l]).mul(&q.q(i, l).inv())
            } else if l == i {
                // Column i.
                qii.pow(-m[j]).mul(&q.q(j, i).inv())
            } else {
                qii.pow(m[j].checked_mul(m[l]).expect("coefficient product overflow"))
                    .mul(&q.q(i, l).pow(m[j]))
                    .mul(&q.q(j, i).pow(m[l]))
                    .mul(q.q(j, l))
            };
            entries.push(value);
        }
    }
    Ok(BraidingMatrix::new(q.ctx(), n, entries))
}

/// All indices at which `q` is reflectable.
pub fn reflectable_indices(q: &BraidingMatrix) -> Vec<usize> {
    (0..q.rank())
        .filter(|&i| pseudo_reflection(q, i).is_ok())
        .collect()
}
