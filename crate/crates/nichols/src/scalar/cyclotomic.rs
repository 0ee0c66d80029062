//! Cyclotomic polynomials and exact arithmetic in Q(zeta_N).
//!
//! Elements of the field are represented canonically as polynomials in the
//! primitive root `zeta_N` of degree below `phi(N)`, reduced modulo the N-th
//! cyclotomic polynomial.  Equality of representatives is field equality
//! because the modulus is irreducible over Q.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, QPoly};

/// Coefficients of the N-th cyclotomic polynomial, ascending degree.
///
/// Computed by iterated exact division: `x^N - 1` divided by the cyclotomic
/// polynomials of all proper divisors of `N`.  Requires `n >= 1`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut table: Vec<Option<QPoly>> = vec![None; (n + 1) as usize];
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        // x^d - 1
        let mut num = poly::monomial(d as usize);
        num[0] = -BigRational::one();
        let num = poly::trim(num);
        let mut phi = num;
        for e in 1..d {
            if d % e == 0 {
                phi = poly::div_exact(&phi, table[e as usize].as_ref().unwrap());
            }
        }
        table[d as usize] = Some(phi);
    }
    let phi = table[n as usize].take().unwrap();
    phi.iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            let v = c.to_integer();
            i64::try_from(v).expect("cyclotomic coefficient out of i64 range")
        })
        .collect()
}

/// The modulus data shared by all `CycloRational` values of one context:
/// the cyclotomic polynomial of the torsion order and its degree.
#[derive(Debug, Clone)]
pub struct CycloModulus {
    order: u32,
    phi: QPoly,
    degree: usize,
}

impl CycloModulus {
    /// Modulus for torsion order `n`; `n = 0` (no root of unity present)
    /// degenerates to the rational field via the order-1 modulus.
    pub fn new(n: u32) -> Self {
        let order = n.max(1);
        let phi = poly::from_i64(
            &cyclotomic_polynomial(order)
                .into_iter()
                .collect::<Vec<_>>(),
        );
        let degree = poly::degree(&phi);
        CycloModulus { order, phi, degree }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// An element of Q(zeta_N) in canonical reduced form.
///
/// The coefficient vector always has length `modulus.degree()`; all
/// operations take the shared modulus as an explicit argument.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloRational {
    coeffs: Vec<BigRational>,
}

impl CycloRational {
    pub fn zero(m: &CycloModulus) -> Self {
        CycloRational {
            coeffs: vec![BigRational::zero(); m.degree],
        }
    }

    pub fn one(m: &CycloModulus) -> Self {
        Self::from_integer(m, 1)
    }

    pub fn from_integer(m: &CycloModulus, v: i64) -> Self {
        let mut coeffs = vec![BigRational::zero(); m.degree];
        coeffs[0] = BigRational::from_integer(BigInt::from(v));
        CycloRational { coeffs }
    }

    pub fn from_rational(m: &CycloModulus, v: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); m.degree];
        coeffs[0] = v;
        CycloRational { coeffs }
    }

    /// zeta_N^k, reduced.
    pub fn root_power(m: &CycloModulus, k: i64) -> Self {
        let k = k.rem_euclid(m.order as i64) as usize;
        Self::reduce(m, poly::monomial(k))
    }

    fn reduce(m: &CycloModulus, p: QPoly) -> Self {
        let (_, r) = poly::divmod(&p, &m.phi);
        let mut coeffs = r;
        coeffs.resize(m.degree, BigRational::zero());
        CycloRational { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self, m: &CycloModulus) -> bool {
        *self == Self::one(m)
    }

    pub fn add(&self, other: &Self) -> Self {
        CycloRational {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CycloRational {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CycloRational {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self, m: &CycloModulus) -> Self {
        let p = poly::mul(&poly::trim(self.coeffs.clone()), &poly::trim(other.coeffs.clone()));
        Self::reduce(m, p)
    }

    /// Multiplicative inverse; panics on zero.  Exists for every nonzero
    /// element because the modulus is irreducible.
    pub fn inv(&self, m: &CycloModulus) -> Self {
        assert!(!self.is_zero(), "inverse of zero in Q(zeta)");
        let a = poly::trim(self.coeffs.clone());
        let (g, s, _) = poly::ext_gcd(&a, &m.phi);
        debug_assert_eq!(g.len(), 1, "cyclotomic modulus must be irreducible");
        let ginv = g[0].recip();
        Self::reduce(m, poly::scale(&s, &ginv))
    }

    pub fn div(&self, other: &Self, m: &CycloModulus) -> Self {
        self.mul(&other.inv(m), m)
    }

    /// Crude size measure used by pivoting heuristics: total number of
    /// nonzero coefficients plus the sum of their digit lengths.
    pub fn complexity(&self) -> usize {
        self.coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| 1 + c.numer().abs().to_string().len() + c.denom().to_string().len())
            .sum()
    }
}

impl std::fmt::Display for CycloRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "z^{k}")?;
            } else {
                write!(f, "{c}*z^{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        // Degree-4 example with a vanishing middle coefficient.
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn cyclotomic_divides_xn_minus_one() {
        for n in 1u32..=30 {
            let phi = poly::from_i64(&cyclotomic_polynomial(n));
            let mut xn = poly::monomial(n as usize);
            xn[0] = -BigRational::one();
            let xn = poly::trim(xn);
            let (_, r) = poly::divmod(&xn, &phi);
            assert!(r.is_empty(), "phi_{n} must divide x^{n} - 1");
            // Euler phi degree check against a direct totient computation.
            let totient = (1..=n).filter(|k| gcd(*k, n) == 1).count();
            assert_eq!(poly::degree(&phi), totient, "degree of phi_{n}");
        }
    }

    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn root_powers_and_inverses() {
        let m = CycloModulus::new(12);
        let z = CycloRational::root_power(&m, 1);
        let mut acc = CycloRational::one(&m);
        for _ in 0..12 {
            acc = acc.mul(&z, &m);
        }
        assert!(acc.is_one(&m), "zeta^12 = 1");
        // zeta^6 = -1 at order 12.
        let z6 = CycloRational::root_power(&m, 6);
        assert_eq!(z6, CycloRational::from_integer(&m, -1));
        // Random-ish inverse round trips.
        for k in 1..12 {
            let a = CycloRational::root_power(&m, k).add(&CycloRational::from_integer(&m, 3));
            if a.is_zero() {
                continue;
            }
            assert!(a.mul(&a.inv(&m), &m).is_one(&m));
        }
    }

    #[test]
    fn primitive_root_sum_vanishes_at_primes() {
        let m = CycloModulus::new(7);
        let mut sum = CycloRational::zero(&m);
        for k in 0..7 {
            sum = sum.add(&CycloRational::root_power(&m, k));
        }
        assert!(sum.is_zero(), "1 + zeta + ... + zeta^6 = 0");
    }
}
