//! Exact scalar arithmetic for braiding entries.
//!
//! Two layers live here.  [`UnitMonomial`] is the group of invertible
//! scalars actually allowed as braiding entries: a power of a fixed
//! primitive root of unity times a signed monomial in the free parameters,
//! i.e. an element of `Z/N x Z^p` written multiplicatively.  Products,
//! inverses, powers, multiplicative orders and q-number vanishing tests are
//! all decided exactly on the exponent vectors.
//!
//! [`LaurentScalar`] is the surrounding ring the brute-force computations
//! work in: multivariate Laurent polynomials over the cyclotomic field
//! `Q(zeta_N)`.  Unit monomials embed into it, and the embedding is the only
//! bridge between the two layers.
//!
//! All values carry a shared [`ScalarContext`] fixing the torsion order `N`
//! and the parameter names.  Mixing values from different contexts is a
//! programming error and panics.

mod cyclotomic;
mod laurent;
mod poly;

pub use cyclotomic::{cyclotomic_polynomial, CycloModulus, CycloRational};
pub use laurent::LaurentScalar;

use std::sync::Arc;

/// Shared description of the scalar domain: torsion order `N` (0 when no
/// root of unity is present) and the ordered list of free parameter names.
#[derive(Debug)]
pub struct ScalarContext {
    torsion_order: u32,
    param_names: Vec<String>,
    modulus: CycloModulus,
}

/// Contexts are shared by reference; all scalar values hold one of these.
pub type Ctx = Arc<ScalarContext>;

impl ScalarContext {
    /// Build a context.  Parameter names must be distinct identifiers
    /// (ASCII letter or `_` first, alphanumeric or `_` after) and must not
    /// shadow the reserved root-of-unity name `z`.
    pub fn new(torsion_order: u32, param_names: &[&str]) -> Ctx {
        let mut names = Vec::new();
        for name in param_names {
            assert!(is_identifier(name), "invalid parameter name {name:?}");
            assert!(*name != "z", "parameter name `z` is reserved for the root of unity");
            assert!(
                !names.contains(&name.to_string()),
                "duplicate parameter name {name:?}"
            );
            names.push(name.to_string());
        }
        Arc::new(ScalarContext {
            torsion_order,
            param_names: names,
            modulus: CycloModulus::new(torsion_order),
        })
    }

    /// Torsion order as declared; 0 means no root of unity.
    pub fn torsion_order(&self) -> u32 {
        self.torsion_order
    }

    pub fn param_names(&self) -> &[String] {
        &self.param_names
    }

    pub fn param_count(&self) -> usize {
        self.param_names.len()
    }

    pub fn modulus(&self) -> &CycloModulus {
        &self.modulus
    }

    fn torsion_modulus(&self) -> i64 {
        self.torsion_order.max(1) as i64
    }
}

impl PartialEq for ScalarContext {
    fn eq(&self, other: &Self) -> bool {
        self.torsion_order == other.torsion_order && self.param_names == other.param_names
    }
}

impl Eq for ScalarContext {}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn assert_same_ctx(a: &Ctx, b: &Ctx) {
    if Arc::ptr_eq(a, b) {
        return;
    }
    assert!(**a == **b, "scalar context mismatch");
}

/// An invertible scalar `zeta^t * prod_k p_k^(e_k)`: torsion exponent
/// reduced modulo `N` plus one integer exponent per free parameter.
///
/// Canonical form: `0 <= torsion < max(N, 1)` and `free.len()` equals the
/// context's parameter count, so derived equality is group equality.
#[derive(Debug, Clone)]
pub struct UnitMonomial {
    ctx: Ctx,
    torsion: i64,
    free: Vec<i64>,
}

impl PartialEq for UnitMonomial {
    fn eq(&self, other: &Self) -> bool {
        assert_same_ctx(&self.ctx, &other.ctx);
        self.torsion == other.torsion && self.free == other.free
    }
}

impl Eq for UnitMonomial {}

impl std::hash::Hash for UnitMonomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // Context is deliberately not hashed; equal values hash equal.
        self.torsion.hash(state);
        self.free.hash(state);
    }
}

impl UnitMonomial {
    pub fn one(ctx: &Ctx) -> Self {
        UnitMonomial {
            ctx: ctx.clone(),
            torsion: 0,
            free: vec![0; ctx.param_count()],
        }
    }

    /// `zeta^k`; requires a declared torsion order.
    pub fn root_of_unity(ctx: &Ctx, k: i64) -> Self {
        assert!(
            ctx.torsion_order() > 0,
            "context has no root of unity; declare a torsion order"
        );
        Self::new(ctx, k, vec![0; ctx.param_count()])
    }

    /// The `idx`-th free parameter.
    pub fn param(ctx: &Ctx, idx: usize) -> Self {
        assert!(idx < ctx.param_count(), "parameter index out of range");
        let mut free = vec![0; ctx.param_count()];
        free[idx] = 1;
        UnitMonomial {
            ctx: ctx.clone(),
            torsion: 0,
            free,
        }
    }

    /// General constructor from exponents; the torsion exponent is reduced.
    pub fn new(ctx: &Ctx, torsion: i64, free: Vec<i64>) -> Self {
        assert_eq!(free.len(), ctx.param_count(), "wrong number of free exponents");
        let t = torsion.rem_euclid(ctx.torsion_modulus());
        UnitMonomial {
            ctx: ctx.clone(),
            torsion: t,
            free,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn torsion_exponent(&self) -> i64 {
        self.torsion
    }

    pub fn free_exponents(&self) -> &[i64] {
        &self.free
    }

    pub fn is_one(&self) -> bool {
        self.torsion == 0 && self.free.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_same_ctx(&self.ctx, &other.ctx);
        UnitMonomial {
            ctx: self.ctx.clone(),
            torsion: (self.torsion + other.torsion).rem_euclid(self.ctx.torsion_modulus()),
            free: self
                .free
                .iter()
                .zip(&other.free)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn inv(&self) -> Self {
        UnitMonomial {
            ctx: self.ctx.clone(),
            torsion: (-self.torsion).rem_euclid(self.ctx.torsion_modulus()),
            free: self.free.iter().map(|&e| -e).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        UnitMonomial {
            ctx: self.ctx.clone(),
            torsion: (self.torsion.checked_mul(k).expect("torsion exponent overflow"))
                .rem_euclid(self.ctx.torsion_modulus()),
            free: self
                .free
                .iter()
                .map(|&e| e.checked_mul(k).expect("free exponent overflow"))
                .collect(),
        }
    }

    /// Multiplicative order: `Some(d)` when finite, `None` when infinite.
    ///
    /// The order is finite exactly when every free exponent vanishes, and
    /// then equals `N / gcd(N, torsion)` (1 for the trivial element).
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.free.iter().any(|&e| e != 0) {
            return None;
        }
        let n = self.ctx.torsion_modulus();
        Some((n / gcd_i64(n, self.torsion)) as u64)
    }

    /// Whether the q-number `[m]_a = 1 + a + ... + a^(m-1)` vanishes.
    ///
    /// In characteristic zero this happens exactly for `a != 1` with
    /// `a^m = 1`: the order `d` of `a` is finite, at least 2, and divides
    /// `m`.  Requires `m >= 1`.
    pub fn is_qnumber_zero(&self, m: u64) -> bool {
        assert!(m >= 1, "q-number index must be positive");
        match self.multiplicative_order() {
            Some(d) if d >= 2 => m % d == 0,
            _ => false,
        }
    }
}

impl std::ops::Mul for &UnitMonomial {
    type Output = UnitMonomial;
    fn mul(self, rhs: &UnitMonomial) -> UnitMonomial {
        UnitMonomial::mul(self, rhs)
    }
}

impl std::fmt::Display for UnitMonomial {
    /// Canonical textual form matching the braiding-file grammar:
    /// `1`, or `*`-separated factors `z^a` and `name^e` with unit
    /// exponents omitted and zero exponents skipped.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.torsion != 0 {
            if self.torsion == 1 {
                parts.push("z".to_string());
            } else {
                parts.push(format!("z^{}", self.torsion));
            }
        }
        for (name, &e) in self.ctx.param_names().iter().zip(&self.free) {
            if e == 0 {
                continue;
            }
            if e == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// The set of integers `a` with `base^a = target`, described exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum PowerSolutions {
    /// No integer solves the equation.
    Empty,
    /// Every integer solves it (base and target both trivial).
    All,
    /// Exactly one integer solution.
    Single(i64),
    /// The full residue class `rep + modulus * Z`.
    Class { rep: i64, modulus: u64 },
}

/// Solve `base^a = target` over the integers by working on exponents:
/// one linear equation per free parameter and one linear congruence for
/// the torsion part.
pub(crate) fn solve_power(base: &UnitMonomial, target: &UnitMonomial) -> PowerSolutions {
    assert_same_ctx(&base.ctx, &target.ctx);
    let n = base.ctx.torsion_modulus();
    if base.free.iter().any(|&e| e != 0) {
        // Free part pins the exponent uniquely, if anything does.
        let mut candidate: Option<i64> = None;
        for (&b, &t) in base.free.iter().zip(&target.free) {
            if b == 0 {
                if t != 0 {
                    return PowerSolutions::Empty;
                }
                continue;
            }
            if t % b != 0 {
                return PowerSolutions::Empty;
            }
            let a = t / b;
            match candidate {
                None => candidate = Some(a),
                Some(prev) if prev != a => return PowerSolutions::Empty,
                Some(_) => {}
            }
        }
        let a = candidate.unwrap();
        if (base.torsion * (a.rem_euclid(n))).rem_euclid(n) != target.torsion {
            return PowerSolutions::Empty;
        }
        return PowerSolutions::Single(a);
    }
    // Base is pure torsion.
    if target.free.iter().any(|&e| e != 0) {
        return PowerSolutions::Empty;
    }
    if base.torsion == 0 {
        return if target.torsion == 0 {
            PowerSolutions::All
        } else {
            PowerSolutions::Empty
        };
    }
    match solve_congruence(base.torsion, target.torsion, n) {
        None => PowerSolutions::Empty,
        Some((rep, modulus)) => PowerSolutions::Class {
            rep,
            modulus: modulus as u64,
        },
    }
}

/// Solutions of `c * x = b (mod n)` as `Some((x0, m))` meaning
/// `x0 + m * Z`, or `None` when unsolvable.  Requires `n >= 1`.
pub(crate) fn solve_congruence(c: i64, b: i64, n: i64) -> Option<(i64, i64)> {
    debug_assert!(n >= 1);
    let g = gcd_i64(c, n);
    let b = b.rem_euclid(n);
    if b % g != 0 {
        return None;
    }
    let (c1, b1, n1) = (c / g, b / g, n / g);
    // Inverse of c1 modulo n1 via extended Euclid.
    let inv = mod_inverse(c1.rem_euclid(n1), n1);
    let x0 = (b1.rem_euclid(n1) * inv).rem_euclid(n1.max(1));
    Some((x0, n1))
}

fn mod_inverse(a: i64, n: i64) -> i64 {
    if n == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (n, a.rem_euclid(n));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse requires coprime arguments");
    t0.rem_euclid(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Ctx {
        ScalarContext::new(12, &["t", "u"])
    }

    #[test]
    fn group_laws() {
        let c = ctx();
        let a = UnitMonomial::new(&c, 5, vec![2, -1]);
        let b = UnitMonomial::new(&c, 9, vec![0, 3]);
        let d = UnitMonomial::new(&c, 11, vec![-4, 1]);
        assert_eq!(a.mul(&b).mul(&d), a.mul(&b.mul(&d)));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
        assert_eq!(a.pow(-2), a.inv().mul(&a.inv()));
        assert_eq!(a.pow(0), UnitMonomial::one(&c));
    }

    #[test]
    fn torsion_normalisation() {
        let c = ctx();
        let a = UnitMonomial::new(&c, -1, vec![0, 0]);
        assert_eq!(a.torsion_exponent(), 11);
        let b = UnitMonomial::root_of_unity(&c, 25);
        assert_eq!(b.torsion_exponent(), 1);
    }

    #[test]
    fn multiplicative_orders() {
        let c = ctx();
        assert_eq!(UnitMonomial::one(&c).multiplicative_order(), Some(1));
        assert_eq!(
            UnitMonomial::root_of_unity(&c, 4).multiplicative_order(),
            Some(3)
        );
        assert_eq!(
            UnitMonomial::root_of_unity(&c, 5).multiplicative_order(),
            Some(12)
        );
        assert_eq!(UnitMonomial::param(&c, 0).multiplicative_order(), None);
        let mixed = UnitMonomial::new(&c, 6, vec![1, 0]);
        assert_eq!(mixed.multiplicative_order(), None);
    }

    #[test]
    fn qnumber_vanishing_matches_literal_sum() {
        // [m]_a = 0 iff a != 1 and a^m = 1; cross-checked against the
        // literal geometric sum evaluated in the Laurent ring.
        for n in 1u32..=24 {
            let c = ScalarContext::new(n, &[]);
            for k in 0..n {
                let a = UnitMonomial::root_of_unity(&c, k as i64);
                for m in 1u64..=24 {
                    let mut sum = LaurentScalar::zero(&c);
                    for j in 0..m {
                        sum = sum.add(&LaurentScalar::from_unit(&a.pow(j as i64)));
                    }
                    assert_eq!(
                        a.is_qnumber_zero(m),
                        sum.is_zero(),
                        "N={n} k={k} m={m}"
                    );
                }
            }
        }
        // A free parameter never kills a q-number.
        let c = ScalarContext::new(0, &["t"]);
        let t = UnitMonomial::param(&c, 0);
        for m in 1..=8 {
            assert!(!t.is_qnumber_zero(m));
        }
    }

    #[test]
    fn power_solutions_cases() {
        let c = ctx();
        let t = UnitMonomial::param(&c, 0);
        // t^a = t^3 has the single solution 3.
        assert_eq!(solve_power(&t, &t.pow(3)), PowerSolutions::Single(3));
        // t^a = u has no solution.
        let u = UnitMonomial::param(&c, 1);
        assert_eq!(solve_power(&t, &u), PowerSolutions::Empty);
        // (z^4)^a = z^4 at N = 12: class 1 mod 3.
        let z4 = UnitMonomial::root_of_unity(&c, 4);
        assert_eq!(
            solve_power(&z4, &z4),
            PowerSolutions::Class { rep: 1, modulus: 3 }
        );
        // (z^2)^a = z at N = 12: unsolvable.
        let z2 = UnitMonomial::root_of_unity(&c, 2);
        let z = UnitMonomial::root_of_unity(&c, 1);
        assert_eq!(solve_power(&z2, &z), PowerSolutions::Empty);
        // 1^a = 1: everything.
        let one = UnitMonomial::one(&c);
        assert_eq!(solve_power(&one, &one), PowerSolutions::All);
        assert_eq!(solve_power(&one, &z), PowerSolutions::Empty);
        // Mixed base: z^6 * t^2, target z^0 * t^6 needs a = 3 and 18 = 0 mod 12.
        let base = UnitMonomial::new(&c, 6, vec![2, 0]);
        let target = UnitMonomial::new(&c, 6, vec![6, 0]);
        assert_eq!(solve_power(&base, &target), PowerSolutions::Single(3));
        let bad_target = UnitMonomial::new(&c, 5, vec![6, 0]);
        assert_eq!(solve_power(&base, &bad_target), PowerSolutions::Empty);
    }

    #[test]
    fn display_roundtrip_form() {
        let c = ctx();
        assert_eq!(UnitMonomial::one(&c).to_string(), "1");
        assert_eq!(UnitMonomial::root_of_unity(&c, 1).to_string(), "z");
        let m = UnitMonomial::new(&c, 3, vec![-2, 1]);
        assert_eq!(m.to_string(), "z^3*t^-2*u");
    }
}
