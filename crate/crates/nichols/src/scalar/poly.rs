//! Dense univariate polynomials over the rationals.
//!
//! Internal helper layer for cyclotomic arithmetic: coefficient vectors are
//! stored in ascending degree with no trailing zeros, so the empty vector is
//! the zero polynomial and the last coefficient of a nonzero polynomial is
//! nonzero.  Everything here is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QPoly = Vec<BigRational>;

pub fn trim(mut p: QPoly) -> QPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn from_i64(coeffs: &[i64]) -> QPoly {
    trim(
        coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect(),
    )
}

pub fn degree(p: &QPoly) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

/// x^k with coefficient 1.
pub fn monomial(k: usize) -> QPoly {
    let mut p = vec![BigRational::zero(); k + 1];
    p[k] = BigRational::one();
    p
}

#[cfg(test)]
pub fn add(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

pub fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

pub fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(out)
}

pub fn scale(a: &QPoly, c: &BigRational) -> QPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Quotient and remainder with `deg(r) < deg(b)`; `b` must be nonzero.
pub fn divmod(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let mut rem = a.clone();
    let mut quo = vec![BigRational::zero(); a.len() - b.len() + 1];
    let lead = b.last().unwrap();
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / lead;
        quo[shift] = c.clone();
        for (i, cb) in b.iter().enumerate() {
            let v = &rem[shift + i] - cb * &c;
            rem[shift + i] = v;
        }
        // The leading term cancels exactly; anything left is roundoff-free.
        debug_assert!(rem.last().unwrap().is_zero());
        rem.pop();
        rem = trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (trim(quo), rem)
}

/// Exact quotient; panics if `b` does not divide `a`.
pub fn div_exact(a: &QPoly, b: &QPoly) -> QPoly {
    let (q, r) = divmod(a, b);
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g` and `g` monic (or zero).
pub fn ext_gcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0: QPoly = vec![BigRational::one()];
    let mut s1: QPoly = Vec::new();
    let mut t0: QPoly = Vec::new();
    let mut t1: QPoly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        let t = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = lead.recip();
        r0 = scale(&r0, &inv);
        s0 = scale(&s0, &inv);
        t0 = scale(&t0, &inv);
    }
    (r0, s0, t0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divmod_roundtrip() {
        let a = from_i64(&[2, 0, -3, 1, 4]);
        let b = from_i64(&[1, 1, 2]);
        let (q, r) = divmod(&a, &b);
        assert_eq!(add(&mul(&q, &b), &r), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = from_i64(&[-1, 0, 0, 0, 0, 0, 1]); // x^6 - 1
        let b = from_i64(&[1, 1, 1]); // x^2 + x + 1, divides a
        let (g, s, t) = ext_gcd(&a, &b);
        assert_eq!(g, from_i64(&[1, 1, 1]));
        assert_eq!(add(&mul(&s, &a), &mul(&t, &b)), g);

        let c = from_i64(&[1, 1]); // x + 1
        let d = from_i64(&[1, 0, 1]); // x^2 + 1, coprime to c
        let (g2, s2, t2) = ext_gcd(&c, &d);
        assert_eq!(g2, from_i64(&[1]));
        assert_eq!(add(&mul(&s2, &c), &mul(&t2, &d)), g2);
    }
}
