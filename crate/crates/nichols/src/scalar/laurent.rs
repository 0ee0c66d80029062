//! Multivariate Laurent polynomials over Q(zeta_N).
//!
//! Terms are kept in a `BTreeMap` from exponent vectors (one entry per free
//! parameter) to nonzero cyclotomic coefficients, so the representation is
//! canonical and iteration order is deterministic.  The ring is an integral
//! domain; `div_exact` implements the exact division needed by
//! fraction-free elimination and panics if the quotient does not exist.

use std::collections::BTreeMap;

use super::{assert_same_ctx, Ctx, CycloRational, UnitMonomial};

#[derive(Debug, Clone)]
pub struct LaurentScalar {
    ctx: Ctx,
    terms: BTreeMap<Vec<i64>, CycloRational>,
}

impl PartialEq for LaurentScalar {
    fn eq(&self, other: &Self) -> bool {
        assert_same_ctx(&self.ctx, &other.ctx);
        self.terms == other.terms
    }
}

impl Eq for LaurentScalar {}

impl LaurentScalar {
    pub fn zero(ctx: &Ctx) -> Self {
        LaurentScalar {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::from_unit(&UnitMonomial::one(ctx))
    }

    /// The canonical embedding of a unit monomial: a single term whose
    /// coefficient is the corresponding root-of-unity power.
    pub fn from_unit(u: &UnitMonomial) -> Self {
        let ctx = u.ctx().clone();
        let coeff = CycloRational::root_power(ctx.modulus(), u.torsion_exponent());
        let mut terms = BTreeMap::new();
        terms.insert(u.free_exponents().to_vec(), coeff);
        LaurentScalar { ctx, terms }
    }

    pub fn from_integer(ctx: &Ctx, v: i64) -> Self {
        let mut terms = BTreeMap::new();
        if v != 0 {
            terms.insert(
                vec![0; ctx.param_count()],
                CycloRational::from_integer(ctx.modulus(), v),
            );
        }
        LaurentScalar {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map_or(false, |(e, c)| e.iter().all(|&x| x == 0) && c.is_one(self.ctx.modulus()))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &CycloRational)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, exp: Vec<i64>, coeff: CycloRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_same_ctx(&self.ctx, &other.ctx);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentScalar {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_same_ctx(&self.ctx, &other.ctx);
        let m = self.ctx.modulus();
        let mut out = Self::zero(&self.ctx);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(exp, ca.mul(cb, m));
            }
        }
        out
    }

    pub fn mul_unit(&self, u: &UnitMonomial) -> Self {
        self.mul(&Self::from_unit(u))
    }

    /// Pivoting heuristic: the number of terms, then a degree measure.
    pub(crate) fn pivot_weight(&self) -> (usize, i64, usize) {
        let total_degree = self
            .terms
            .keys()
            .map(|e| e.iter().map(|x| x.abs()).sum::<i64>())
            .max()
            .unwrap_or(0);
        let coeff_size = self.terms.values().map(|c| c.complexity()).sum();
        (self.terms.len(), total_degree, coeff_size)
    }

    /// Exact division; panics unless `divisor` divides `self` exactly.
    ///
    /// The monomial content (componentwise minimum exponent) of both
    /// operands is split off first; the remaining honest polynomials are
    /// divided by leading-term cancellation under graded-lex order, which
    /// terminates and never strands a remainder when the quotient exists.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        assert_same_ctx(&self.ctx, &divisor.ctx);
        assert!(!divisor.is_zero(), "division by zero");
        if self.is_zero() {
            return Self::zero(&self.ctx);
        }
        let p = self.ctx.param_count();
        let shift_a = content_shift(&self.terms, p);
        let shift_b = content_shift(&divisor.terms, p);
        let m = self.ctx.modulus();

        let mut rem: BTreeMap<Vec<i64>, CycloRational> = self
            .terms
            .iter()
            .map(|(e, c)| (shifted(e, &shift_a), c.clone()))
            .collect();
        let div: BTreeMap<Vec<i64>, CycloRational> = divisor
            .terms
            .iter()
            .map(|(e, c)| (shifted(e, &shift_b), c.clone()))
            .collect();
        let (lead_exp, lead_coeff) = leading_term(&div);

        let mut quo: BTreeMap<Vec<i64>, CycloRational> = BTreeMap::new();
        while !rem.is_empty() {
            let (rexp, rcoeff) = leading_term(&rem);
            let qexp: Vec<i64> = rexp.iter().zip(&lead_exp).map(|(a, b)| a - b).collect();
            assert!(
                qexp.iter().all(|&e| e >= 0),
                "inexact Laurent division (leading term not divisible)"
            );
            let qcoeff = rcoeff.div(&lead_coeff, m);
            // rem -= q_term * divisor
            for (e, c) in &div {
                let target: Vec<i64> = e.iter().zip(&qexp).map(|(a, b)| a + b).collect();
                let delta = c.mul(&qcoeff, m);
                use std::collections::btree_map::Entry;
                match rem.entry(target) {
                    Entry::Vacant(v) => {
                        v.insert(delta.neg());
                    }
                    Entry::Occupied(mut o) => {
                        let s = o.get().sub(&delta);
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                }
            }
            quo.insert(qexp, qcoeff);
        }

        // Reapply the monomial content difference: the shifted quotient is
        // the true one times x^(shift_b - shift_a).
        let out_terms = quo
            .into_iter()
            .map(|(e, c)| {
                (
                    e.iter()
                        .enumerate()
                        .map(|(k, &x)| x + shift_a[k] - shift_b[k])
                        .collect(),
                    c,
                )
            })
            .collect();
        LaurentScalar {
            ctx: self.ctx.clone(),
            terms: out_terms,
        }
    }
}

/// Componentwise minimum exponent over the support (to be subtracted).
fn content_shift(terms: &BTreeMap<Vec<i64>, CycloRational>, params: usize) -> Vec<i64> {
    let mut shift = vec![i64::MAX; params];
    for e in terms.keys() {
        for (s, &x) in shift.iter_mut().zip(e) {
            *s = (*s).min(x);
        }
    }
    if params == 0 {
        Vec::new()
    } else {
        shift
    }
}

fn shifted(e: &[i64], shift: &[i64]) -> Vec<i64> {
    e.iter().zip(shift).map(|(a, s)| a - s).collect()
}

/// Leading term under graded-lex: highest total degree, ties by highest
/// lexicographic exponent vector.
fn leading_term(terms: &BTreeMap<Vec<i64>, CycloRational>) -> (Vec<i64>, CycloRational) {
    let (e, c) = terms
        .iter()
        .max_by(|(ea, _), (eb, _)| {
            let da: i64 = ea.iter().sum();
            let db: i64 = eb.iter().sum();
            da.cmp(&db).then_with(|| ea.cmp(eb))
        })
        .expect("leading term of zero polynomial");
    (e.clone(), c.clone())
}

impl std::fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.ctx.param_names();
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = names
                .iter()
                .zip(e)
                .filter(|(_, &x)| x != 0)
                .map(|(n, &x)| if x == 1 { n.clone() } else { format!("{n}^{x}") })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ScalarContext;

    fn ctx() -> Ctx {
        ScalarContext::new(12, &["t", "u"])
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let c = ctx();
        let a = UnitMonomial::new(&c, 7, vec![2, -1]);
        let b = UnitMonomial::new(&c, 8, vec![-3, 4]);
        let lhs = LaurentScalar::from_unit(&a.mul(&b));
        let rhs = LaurentScalar::from_unit(&a).mul(&LaurentScalar::from_unit(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn half_turn_cancels() {
        // At N = 12 the embedded z^6 is -1, so z^6 + 1 must vanish.
        let c = ctx();
        let z6 = UnitMonomial::root_of_unity(&c, 6);
        let sum = LaurentScalar::from_unit(&z6).add(&LaurentScalar::one(&c));
        assert!(sum.is_zero());
    }

    #[test]
    fn ring_laws() {
        let c = ctx();
        let t = LaurentScalar::from_unit(&UnitMonomial::param(&c, 0));
        let u = LaurentScalar::from_unit(&UnitMonomial::param(&c, 1));
        let z = LaurentScalar::from_unit(&UnitMonomial::root_of_unity(&c, 1));
        let a = t.add(&u.mul(&z));
        let b = u.sub(&LaurentScalar::from_integer(&c, 3));
        let d = t.mul(&t).add(&z);
        assert_eq!(a.mul(&b.add(&d)), a.mul(&b).add(&a.mul(&d)));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division_of_products() {
        let c = ctx();
        let t = LaurentScalar::from_unit(&UnitMonomial::param(&c, 0));
        let tinv = LaurentScalar::from_unit(&UnitMonomial::param(&c, 0).inv());
        let u = LaurentScalar::from_unit(&UnitMonomial::param(&c, 1));
        let one = LaurentScalar::one(&c);

        // (t - t^-1)(u + 1) / (t - t^-1) = u + 1, a genuinely Laurent case.
        let a = t.sub(&tinv);
        let b = u.add(&one);
        assert_eq!(a.mul(&b).div_exact(&a), b);
        assert_eq!(a.mul(&b).div_exact(&b), a);

        // Constant division falls back to field arithmetic.
        let two = LaurentScalar::from_integer(&c, 2);
        assert_eq!(two.mul(&b).div_exact(&two), b);
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn inexact_division_panics() {
        let c = ctx();
        let t = LaurentScalar::from_unit(&UnitMonomial::param(&c, 0));
        let u = LaurentScalar::from_unit(&UnitMonomial::param(&c, 1));
        let one = LaurentScalar::one(&c);
        let _ = t.add(&one).div_exact(&u.add(&one));
    }
}
