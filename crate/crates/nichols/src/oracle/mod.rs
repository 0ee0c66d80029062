//! Brute-force tensor-algebra computations used to cross-check the
//! reflection-based machinery.
//!
//! Everything here works directly with linear combinations of words in the
//! free algebra on the braided vector space: graded dimensions come from
//! ranks of braided symmetrizers, restricted-monomial data is inferred from
//! those dimensions alone, and adjoint powers, skew derivations, and the
//! bilinear pairing are evaluated letter by letter.  No result in this
//! module depends on reflection theory, which is what makes the agreement
//! checks meaningful.

pub mod hilbert;
pub mod operators;
pub mod symmetrizer;

pub use hilbert::{hilbert_data, pbw_infer, HeightBound, PbwCutoff, PbwReport, PbwRoot};
pub use operators::{ad_power, pairing, pairing_matrix, q_integer, skew_diff, Side};
pub use symmetrizer::{
    apply_symmetrizer, graded_dimension, laurent_rank, mirror_symmetrizer, symmetrizer_block,
    words_of_degree, SymmetrizerBlock,
};

use std::collections::BTreeMap;

use crate::scalar::{assert_same_ctx, Ctx, LaurentScalar, UnitMonomial};

/// A finite linear combination of words over the letter alphabet
/// `0..rank`, with Laurent-scalar coefficients.  Zero coefficients are
/// never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordVector {
    ctx: Ctx,
    terms: BTreeMap<Vec<usize>, LaurentScalar>,
}

impl WordVector {
    pub fn zero(ctx: &Ctx) -> Self {
        WordVector {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The single word `w` with coefficient one.
    pub fn basis_word(ctx: &Ctx, w: &[usize]) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(w.to_vec(), LaurentScalar::one(ctx));
        out
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &LaurentScalar)> {
        self.terms.iter()
    }

    /// The coefficient of `w` (zero when absent).
    pub fn coefficient(&self, w: &[usize]) -> LaurentScalar {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| LaurentScalar::zero(&self.ctx))
    }

    pub fn add_term(&mut self, w: Vec<usize>, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
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
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_same_ctx(&self.ctx, &other.ctx);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, s: &LaurentScalar) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    pub fn scale_unit(&self, u: &UnitMonomial) -> Self {
        self.scale(&LaurentScalar::from_unit(u))
    }

    /// Left multiplication by the generator `letter`.
    pub fn prepend(&self, letter: usize) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (w, c) in &self.terms {
            let mut nw = Vec::with_capacity(w.len() + 1);
            nw.push(letter);
            nw.extend_from_slice(w);
            out.add_term(nw, c.clone());
        }
        out
    }

    /// Right multiplication by the generator `letter`.
    pub fn append(&self, letter: usize) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (w, c) in &self.terms {
            let mut nw = w.clone();
            nw.push(letter);
            out.add_term(nw, c.clone());
        }
        out
    }

    /// The common multidegree of all words, when homogeneous.
    pub fn multidegree(&self, rank: usize) -> Option<Vec<usize>> {
        let mut result: Option<Vec<usize>> = None;
        for w in self.terms.keys() {
            let mut d = vec![0usize; rank];
            for &letter in w {
                d[letter] += 1;
            }
            match &result {
                None => result = Some(d),
                Some(prev) if *prev == d => {}
                Some(_) => return None,
            }
        }
        result
    }
}

impl std::fmt::Display for WordVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word: Vec<String> = w.iter().map(|l| format!("x{}", l + 1)).collect();
            if word.is_empty() {
                write!(f, "[{c}]")?;
            } else {
                write!(f, "[{c}] {}", word.join(" "))?;
            }
        }
        Ok(())
    }
}
