//! Small square integer matrices.
//!
//! Shared by reflection maps, groupoid bases and Weyl-group elements.
//! Entries are `i64`, row-major; products use `i128` intermediates and the
//! determinant is computed fraction-free, so everything stays exact at the
//! ranks this crate works with.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntMatrix {
    n: usize,
    a: Vec<i64>,
}

impl IntMatrix {
    pub fn new(n: usize, a: Vec<i64>) -> Self {
        assert_eq!(a.len(), n * n, "entry vector must be n*n");
        IntMatrix { n, a }
    }

    pub fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        IntMatrix { n, a }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.a[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.a[r * self.n + c] = v;
    }

    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.n).map(|r| self.get(r, c)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = vec![0i64; n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc: i128 = 0;
                for k in 0..n {
                    acc += self.get(r, k) as i128 * other.get(k, c) as i128;
                }
                out[r * n + c] = i64::try_from(acc).expect("matrix entry overflow");
            }
        }
        IntMatrix { n, a: out }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n, "vector length mismatch");
        (0..self.n)
            .map(|r| {
                let acc: i128 = (0..self.n)
                    .map(|k| self.get(r, k) as i128 * v[k] as i128)
                    .sum();
                i64::try_from(acc).expect("vector entry overflow")
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                out[c * n + r] = self.a[r * n + c];
            }
        }
        IntMatrix { n, a: out }
    }

    /// Exact determinant via fraction-free (Bareiss) elimination over `BigInt`.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|r| (0..n).map(|c| BigInt::from(self.get(r, c))).collect())
            .collect();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        sign * prev
    }

    /// Inverse of a matrix with determinant +-1, via the adjugate.
    /// Panics otherwise.
    pub fn inverse_unimodular(&self) -> Self {
        let n = self.n;
        let det = self.det();
        assert!(
            det.abs() == BigInt::one(),
            "inverse requires determinant +-1, got {det}"
        );
        let det_i: i64 = if det == BigInt::one() { 1 } else { -1 };
        let mut out = vec![0i64; n * n];
        for r in 0..n {
            for c in 0..n {
                let minor = self.minor(r, c).det();
                let minor: i64 = i64::try_from(minor).expect("cofactor overflow");
                let sign = if (r + c) % 2 == 0 { 1 } else { -1 };
                // Adjugate transposes the cofactor matrix.
                out[c * n + r] = sign * minor * det_i;
            }
        }
        IntMatrix { n, a: out }
    }

    /// The leading principal `k x k` submatrix.
    pub fn leading_minor(&self, k: usize) -> IntMatrix {
        assert!(k <= self.n);
        let mut a = Vec::with_capacity(k * k);
        for r in 0..k {
            for c in 0..k {
                a.push(self.get(r, c));
            }
        }
        IntMatrix { n: k, a }
    }

    fn minor(&self, row: usize, col: usize) -> IntMatrix {
        let n = self.n;
        let mut a = Vec::with_capacity((n - 1) * (n - 1));
        for r in 0..n {
            if r == row {
                continue;
            }
            for c in 0..n {
                if c == col {
                    continue;
                }
                a.push(self.get(r, c));
            }
        }
        IntMatrix { n: n - 1, a }
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
