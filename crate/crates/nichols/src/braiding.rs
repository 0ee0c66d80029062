//! Braiding matrices of diagonal type and their Cartan data.
//!
//! A [`BraidingMatrix`] is an `n x n` matrix of unit monomials over a shared
//! scalar context.  This module owns the line-oriented text format (parse
//! and canonical serialize round-trip exactly) and the detection of
//! Cartan-type braidings: for each off-diagonal pair, the maximal
//! nonpositive integer `a_ij` with `q_ij q_ji = q_ii^a_ij`, when it exists.

use std::collections::BTreeMap;

use crate::scalar::{
    assert_same_ctx, solve_power, Ctx, PowerSolutions, ScalarContext, UnitMonomial,
};

#[derive(Debug, Clone)]
pub struct BraidingMatrix {
    ctx: Ctx,
    n: usize,
    entries: Vec<UnitMonomial>,
}

impl PartialEq for BraidingMatrix {
    fn eq(&self, other: &Self) -> bool {
        assert_same_ctx(&self.ctx, &other.ctx);
        self.n == other.n && self.entries == other.entries
    }
}

impl Eq for BraidingMatrix {}

impl std::hash::Hash for BraidingMatrix {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.entries.hash(state);
    }
}

impl BraidingMatrix {
    /// Entries are row-major, length `n * n`, all over `ctx`.
    pub fn new(ctx: &Ctx, n: usize, entries: Vec<UnitMonomial>) -> Self {
        assert!(n >= 1, "braiding rank must be at least 1");
        assert_eq!(entries.len(), n * n, "entry vector must be n*n");
        for e in &entries {
            assert_same_ctx(ctx, e.ctx());
        }
        BraidingMatrix {
            ctx: ctx.clone(),
            n,
            entries,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `q_ij`, zero-based.
    pub fn q(&self, i: usize, j: usize) -> &UnitMonomial {
        &self.entries[i * self.n + j]
    }

    pub fn set_q(&mut self, i: usize, j: usize, v: UnitMonomial) {
        assert_same_ctx(&self.ctx, v.ctx());
        self.entries[i * self.n + j] = v;
    }

    /// The symmetrized product `q_ij * q_ji`.
    pub fn sym_product(&self, i: usize, j: usize) -> UnitMonomial {
        self.q(i, j).mul(self.q(j, i))
    }

    /// The maximal nonpositive integer `a` with `q_ij q_ji = q_ii^a`,
    /// or `None` when no nonpositive integer solves the equation.
    ///
    /// When `q_ii` has finite order `d`, solutions form a residue class
    /// modulo `d` and the representative in `{0, -1, ..., -(d-1)}` is
    /// returned; an infinite-order `q_ii` pins the solution uniquely; for
    /// `q_ii = 1` the answer is 0 exactly when `q_ij q_ji = 1`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> Option<i64> {
        assert!(i != j, "cartan_entry is off-diagonal only");
        let target = self.sym_product(i, j);
        match solve_power(self.q(i, i), &target) {
            PowerSolutions::Empty => None,
            PowerSolutions::All => Some(0),
            PowerSolutions::Single(a) => (a <= 0).then_some(a),
            PowerSolutions::Class { rep, modulus } => {
                let d = modulus as i64;
                let r = rep.rem_euclid(d);
                Some(if r == 0 { 0 } else { r - d })
            }
        }
    }

    /// The generalized Cartan matrix of a Cartan-type braiding, or `None`
    /// if some off-diagonal entry admits no Cartan exponent.
    pub fn cartan_matrix(&self) -> Option<CartanMatrix> {
        let n = self.n;
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            a[i * n + i] = 2;
            for j in 0..n {
                if i == j {
                    continue;
                }
                a[i * n + j] = self.cartan_entry(i, j)?;
            }
        }
        Some(CartanMatrix::new(n, a).expect("cartan_entry output is always admissible"))
    }

    /// Parse the line-oriented braiding format.  See the crate README for
    /// the grammar; in short: `#` comments, a leading `rank n`, optional
    /// `order N` and `params name...` directives, then exactly `n^2` lines
    /// `entry i j <monomial>` with 1-based indices.
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        let mut rank: Option<usize> = None;
        let mut order: Option<u32> = None;
        let mut params: Option<Vec<String>> = None;
        let mut raw_entries: BTreeMap<(usize, usize), (usize, String)> = BTreeMap::new();

        for (lineno, raw) in input.lines().enumerate() {
            let lineno = lineno + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let head = tokens.next().unwrap();
            match head {
                "rank" => {
                    if rank.is_some() {
                        return Err(ParseError::DuplicateDirective { lineno, directive: "rank" });
                    }
                    let v = tokens
                        .next()
                        .ok_or(ParseError::Malformed { lineno })?
                        .parse::<usize>()
                        .map_err(|_| ParseError::Malformed { lineno })?;
                    if v == 0 || tokens.next().is_some() {
                        return Err(ParseError::Malformed { lineno });
                    }
                    rank = Some(v);
                }
                "order" => {
                    if rank.is_none() {
                        return Err(ParseError::RankFirst { lineno });
                    }
                    if order.is_some() {
                        return Err(ParseError::DuplicateDirective { lineno, directive: "order" });
                    }
                    if !raw_entries.is_empty() {
                        return Err(ParseError::DirectiveAfterEntries { lineno });
                    }
                    let v = tokens
                        .next()
                        .ok_or(ParseError::Malformed { lineno })?
                        .parse::<u32>()
                        .map_err(|_| ParseError::Malformed { lineno })?;
                    if v == 0 || tokens.next().is_some() {
                        return Err(ParseError::Malformed { lineno });
                    }
                    order = Some(v);
                }
                "params" => {
                    if rank.is_none() {
                        return Err(ParseError::RankFirst { lineno });
                    }
                    if params.is_some() {
                        return Err(ParseError::DuplicateDirective { lineno, directive: "params" });
                    }
                    if !raw_entries.is_empty() {
                        return Err(ParseError::DirectiveAfterEntries { lineno });
                    }
                    let names: Vec<String> = tokens.map(|s| s.to_string()).collect();
                    if names.is_empty() {
                        return Err(ParseError::Malformed { lineno });
                    }
                    for name in &names {
                        if !crate::scalar::is_identifier(name) || name == "z" {
                            return Err(ParseError::BadParamName {
                                lineno,
                                name: name.clone(),
                            });
                        }
                    }
                    if names
                        .iter()
                        .enumerate()
                        .any(|(k, n)| names[..k].contains(n))
                    {
                        return Err(ParseError::Malformed { lineno });
                    }
                    params = Some(names);
                }
                "entry" => {
                    let n = rank.ok_or(ParseError::RankFirst { lineno })?;
                    let i = tokens
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or(ParseError::Malformed { lineno })?;
                    let j = tokens
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or(ParseError::Malformed { lineno })?;
                    if i == 0 || i > n || j == 0 || j > n {
                        return Err(ParseError::IndexOutOfRange { lineno, i, j });
                    }
                    let rest: Vec<&str> = tokens.collect();
                    if rest.is_empty() {
                        return Err(ParseError::Malformed { lineno });
                    }
                    let text = rest.join(" ");
                    if raw_entries.insert((i - 1, j - 1), (lineno, text)).is_some() {
                        return Err(ParseError::DuplicateEntry { lineno, i, j });
                    }
                }
                _ => return Err(ParseError::UnknownDirective { lineno, directive: head.to_string() }),
            }
        }

        let n = rank.ok_or(ParseError::MissingRank)?;
        let torsion = order.unwrap_or(0);
        let names = params.unwrap_or_default();
        let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ctx = ScalarContext::new(torsion, &name_refs);

        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (lineno, text) = raw_entries
                    .remove(&(i, j))
                    .ok_or(ParseError::MissingEntry { i: i + 1, j: j + 1 })?;
                entries.push(parse_monomial(&ctx, &text, lineno)?);
            }
        }
        Ok(BraidingMatrix::new(&ctx, n, entries))
    }

    /// Canonical text form; `parse(serialize(q)) == q` exactly.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("rank {}\n", self.n));
        if self.ctx.torsion_order() > 0 {
            out.push_str(&format!("order {}\n", self.ctx.torsion_order()));
        }
        if self.ctx.param_count() > 0 {
            out.push_str(&format!("params {}\n", self.ctx.param_names().join(" ")));
        }
        for i in 0..self.n {
            for j in 0..self.n {
                out.push_str(&format!("entry {} {} {}\n", i + 1, j + 1, self.q(i, j)));
            }
        }
        out
    }
}

/// Parse a single monomial: `1`, or `*`-separated factors `atom[^int]`
/// where `atom` is `z` or a declared parameter name.
fn parse_monomial(ctx: &Ctx, text: &str, lineno: usize) -> Result<UnitMonomial, ParseError> {
    let text = text.trim();
    if text == "1" {
        return Ok(UnitMonomial::one(ctx));
    }
    let mut torsion: i64 = 0;
    let mut free = vec![0i64; ctx.param_count()];
    for factor in text.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(ParseError::BadMonomial {
                lineno,
                text: text.to_string(),
            });
        }
        let (atom, exp) = match factor.split_once('^') {
            Some((a, e)) => {
                let exp = e.trim().parse::<i64>().map_err(|_| ParseError::BadExponent {
                    lineno,
                    text: e.trim().to_string(),
                })?;
                (a.trim(), exp)
            }
            None => (factor, 1),
        };
        if atom == "z" {
            if ctx.torsion_order() == 0 {
                return Err(ParseError::RootWithoutOrder { lineno });
            }
            torsion += exp;
        } else if let Some(idx) = ctx.param_names().iter().position(|n| n == atom) {
            free[idx] += exp;
        } else {
            return Err(ParseError::UnknownParam {
                lineno,
                name: atom.to_string(),
            });
        }
    }
    Ok(UnitMonomial::new(ctx, torsion, free))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("no rank directive found")]
    MissingRank,
    #[error("line {lineno}: rank must come before other directives")]
    RankFirst { lineno: usize },
    #[error("line {lineno}: duplicate {directive} directive")]
    DuplicateDirective { lineno: usize, directive: &'static str },
    #[error("line {lineno}: order/params must come before entries")]
    DirectiveAfterEntries { lineno: usize },
    #[error("line {lineno}: malformed directive")]
    Malformed { lineno: usize },
    #[error("line {lineno}: unknown directive {directive}")]
    UnknownDirective { lineno: usize, directive: String },
    #[error("line {lineno}: entry index ({i}, {j}) out of range")]
    IndexOutOfRange { lineno: usize, i: usize, j: usize },
    #[error("line {lineno}: duplicate entry ({i}, {j})")]
    DuplicateEntry { lineno: usize, i: usize, j: usize },
    #[error("missing entry ({i}, {j})")]
    MissingEntry { i: usize, j: usize },
    #[error("line {lineno}: bad parameter name {name}")]
    BadParamName { lineno: usize, name: String },
    #[error("line {lineno}: bad monomial {text}")]
    BadMonomial { lineno: usize, text: String },
    #[error("line {lineno}: bad exponent {text}")]
    BadExponent { lineno: usize, text: String },
    #[error("line {lineno}: z used without an order directive")]
    RootWithoutOrder { lineno: usize },
    #[error("line {lineno}: unknown parameter {name}")]
    UnknownParam { lineno: usize, name: String },
}

/// A generalized Cartan matrix: 2 on the diagonal, nonpositive integers off
/// it, with `a_ij = 0` exactly when `a_ji = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    n: usize,
    a: Vec<i64>,
}

impl CartanMatrix {
    pub fn new(n: usize, a: Vec<i64>) -> Result<Self, CartanMatrixError> {
        if a.len() != n * n {
            return Err(CartanMatrixError::Shape);
        }
        for i in 0..n {
            if a[i * n + i] != 2 {
                return Err(CartanMatrixError::Diagonal { i });
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if a[i * n + j] > 0 {
                    return Err(CartanMatrixError::PositiveOffDiagonal { i, j });
                }
                if (a[i * n + j] == 0) != (a[j * n + i] == 0) {
                    return Err(CartanMatrixError::ZeroPattern { i, j });
                }
            }
        }
        Ok(CartanMatrix { n, a })
    }

    /// Convenience constructor from rows; panics on invalid data.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "rows must form a square matrix");
            a.extend_from_slice(row);
        }
        Self::new(n, a).expect("invalid Cartan matrix")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    /// Indices `j != i` with `a_ij != 0`.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| j != i && self.get(i, j) != 0)
    }
}

impl std::fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CartanMatrixError {
    #[error("entry vector does not match the stated rank")]
    Shape,
    #[error("diagonal entry at {i} must be 2")]
    Diagonal { i: usize },
    #[error("off-diagonal entry ({i}, {j}) must be nonpositive")]
    PositiveOffDiagonal { i: usize, j: usize },
    #[error("entries ({i}, {j}) and ({j}, {i}) must vanish together")]
    ZeroPattern { i: usize, j: usize },
}

/// Standard worked instances used across tests and examples.
pub mod instances {
    use super::*;

    /// Generic A2: `q_ii = t`, `q_12 q_21 = t^-1`.
    pub fn a2_generic() -> BraidingMatrix {
        BraidingMatrix::parse(
            "rank 2\nparams t\n\
             entry 1 1 t\nentry 1 2 t^-1\nentry 2 1 1\nentry 2 2 t",
        )
        .unwrap()
    }

    /// Generic B2: `a_12 = -2`, `a_21 = -1`.
    pub fn b2_generic() -> BraidingMatrix {
        BraidingMatrix::parse(
            "rank 2\nparams t\n\
             entry 1 1 t\nentry 1 2 t^-2\nentry 2 1 1\nentry 2 2 t^2",
        )
        .unwrap()
    }

    /// Generic G2: `a_12 = -3`, `a_21 = -1`.
    pub fn g2_generic() -> BraidingMatrix {
        BraidingMatrix::parse(
            "rank 2\nparams t\n\
             entry 1 1 t\nentry 1 2 t^-3\nentry 2 1 1\nentry 2 2 t^3",
        )
        .unwrap()
    }

    /// Generic A3 chain.
    pub fn a3_generic() -> BraidingMatrix {
        BraidingMatrix::parse(
            "rank 3\nparams t\n\
             entry 1 1 t\nentry 1 2 t^-1\nentry 1 3 1\n\
             entry 2 1 1\nentry 2 2 t\nentry 2 3 t^-1\n\
             entry 3 1 1\nentry 3 2 1\nentry 3 3 t",
        )
        .unwrap()
    }

    /// Rank 1 at `q_11 = -1` (order 2).
    pub fn rank1_minus_one() -> BraidingMatrix {
        BraidingMatrix::parse("rank 1\norder 2\nentry 1 1 z").unwrap()
    }

    /// A2 at a primitive third root of unity.
    pub fn a2_third_root() -> BraidingMatrix {
        BraidingMatrix::parse(
            "rank 2\norder 3\n\
             entry 1 1 z\nentry 1 2 z^-1\nentry 2 1 1\nentry 2 2 z",
        )
        .unwrap()
    }

    /// B2 at a primitive fourth root of unity (two root lengths).
    pub fn b2_fourth_root() -> BraidingMatrix {
        BraidingMatrix::parse(
            "rank 2\norder 4\n\
             entry 1 1 z\nentry 1 2 z^-2\nentry 2 1 1\nentry 2 2 z^2",
        )
        .unwrap()
    }

    /// Affine rank 2: `a_12 = a_21 = -2`; the basis orbit is infinite.
    pub fn affine_rank2() -> BraidingMatrix {
        BraidingMatrix::parse(
            "rank 2\nparams t\n\
             entry 1 1 t\nentry 1 2 t^-2\nentry 2 1 1\nentry 2 2 t",
        )
        .unwrap()
    }
}
