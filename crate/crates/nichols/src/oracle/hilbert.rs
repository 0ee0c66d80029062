//! Multigraded dimension tables and restricted-monomial inference.
//!
//! `hilbert_data` tabulates exact graded dimensions up to a total degree.
//! `pbw_infer` then explains that table as the dimension series of a basis
//! of restricted monomials in homogeneous generators: walking degrees in
//! graded-lexicographic order, a dimension surplus introduces new
//! generators and a deficit pins down the nilpotency height of an existing
//! one.  Inference never guesses: an unexplained or ambiguous deficit is
//! reported as a cutoff instead of being absorbed.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::braiding::BraidingMatrix;
use crate::oracle::symmetrizer::graded_dimension;

/// Exact dimensions of every multidegree with total degree at most
/// `max_total`, including degree zero.
pub fn hilbert_data(q: &BraidingMatrix, max_total: usize) -> BTreeMap<Vec<usize>, usize> {
    let degrees = degrees_up_to(q.rank(), max_total);
    degrees
        .par_iter()
        .map(|d| (d.clone(), graded_dimension(q, d)))
        .collect()
}

fn degrees_up_to(rank: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; rank];
    fn rec(pos: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=left {
            current[pos] = v;
            rec(pos + 1, left - v, current, out);
        }
        current[pos] = 0;
    }
    rec(0, max_total, &mut current, &mut out);
    out
}

/// A lower or exact bound on the nilpotency height of a generator: the
/// least power that vanishes, when that power lies within the examined
/// degree range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeightBound {
    Finite(usize),
    AtLeast(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwRoot {
    pub degree: Vec<usize>,
    pub multiplicity: usize,
    pub height: HeightBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwReport {
    pub roots: Vec<PbwRoot>,
    pub max_total: usize,
}

impl PbwReport {
    /// The product of all finite height contributions, when every height
    /// is resolved; `None` while any generator is still unbounded.
    pub fn total_dimension(&self) -> Option<usize> {
        let mut dim = 1usize;
        for r in &self.roots {
            match r.height {
                HeightBound::Finite(h) => {
                    dim = dim.checked_mul(h.pow(r.multiplicity as u32))?;
                }
                HeightBound::AtLeast(_) => return None,
            }
        }
        Some(dim)
    }
}

/// A degree at which the dimension table stops matching any restricted
/// monomial basis that the greedy walk can justify.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PbwCutoff {
    #[error("dimension deficit at degree {0:?} matches more than one truncation")]
    Ambiguous(Vec<usize>),
    #[error("dimension deficit at degree {0:?} matches no single truncation")]
    Unexplained(Vec<usize>),
}

/// Infer generators and heights from a dimension table computed up to
/// `max_total`.
pub fn pbw_infer(
    hilbert: &BTreeMap<Vec<usize>, usize>,
    max_total: usize,
) -> Result<PbwReport, PbwCutoff> {
    let rank = hilbert
        .keys()
        .next()
        .expect("dimension table must not be empty")
        .len();
    let zero = vec![0usize; rank];
    assert_eq!(hilbert.get(&zero), Some(&1), "degree zero must have dimension one");

    let mut degrees: Vec<Vec<usize>> = hilbert.keys().filter(|d| **d != zero).cloned().collect();
    degrees.sort_by_key(|d| (d.iter().sum::<usize>(), d.clone()));

    // (degree, multiplicity, height so far)
    let mut roots: Vec<(Vec<usize>, usize, Option<usize>)> = Vec::new();
    let mut predicted = predict_table(&roots, rank, max_total);

    for d in &degrees {
        let actual = hilbert[d];
        let expected = predicted.get(d).copied().unwrap_or(0);
        if actual > expected {
            roots.push((d.clone(), actual - expected, None));
            predicted = predict_table(&roots, rank, max_total);
        } else if actual < expected {
            // A deficit first appears exactly at height * degree of the
            // truncating generator.
            let mut candidates = Vec::new();
            for (idx, (beta, _, height)) in roots.iter().enumerate() {
                if height.is_some() {
                    continue;
                }
                if let Some(k) = integer_ratio(d, beta) {
                    if k >= 2 {
                        candidates.push((idx, k));
                    }
                }
            }
            match candidates.as_slice() {
                [] => return Err(PbwCutoff::Unexplained(d.clone())),
                [(idx, k)] => {
                    roots[*idx].2 = Some(*k);
                    predicted = predict_table(&roots, rank, max_total);
                    if predicted.get(d).copied().unwrap_or(0) != actual {
                        return Err(PbwCutoff::Unexplained(d.clone()));
                    }
                }
                _ => return Err(PbwCutoff::Ambiguous(d.clone())),
            }
        }
    }

    let roots = roots
        .into_iter()
        .map(|(degree, multiplicity, height)| {
            let height = match height {
                Some(h) => HeightBound::Finite(h),
                None => {
                    let total: usize = degree.iter().sum();
                    HeightBound::AtLeast(max_total / total + 1)
                }
            };
            PbwRoot {
                degree,
                multiplicity,
                height,
            }
        })
        .collect();
    Ok(PbwReport { roots, max_total })
}

/// `d = k * beta` for a positive integer `k`, componentwise.
fn integer_ratio(d: &[usize], beta: &[usize]) -> Option<usize> {
    let mut k: Option<usize> = None;
    for (&di, &bi) in d.iter().zip(beta) {
        match (di, bi) {
            (0, 0) => {}
            (_, 0) => return None,
            _ => {
                if di % bi != 0 {
                    return None;
                }
                let q = di / bi;
                match k {
                    None => k = Some(q),
                    Some(prev) if prev == q => {}
                    Some(_) => return None,
                }
            }
        }
    }
    k
}

/// The dimension table of the restricted monomial basis over the current
/// generators, truncated to total degree `max_total`.
fn predict_table(
    roots: &[(Vec<usize>, usize, Option<usize>)],
    rank: usize,
    max_total: usize,
) -> BTreeMap<Vec<usize>, usize> {
    let mut table = BTreeMap::new();
    table.insert(vec![0usize; rank], 1usize);
    for (beta, mult, height) in roots {
        let beta_total: usize = beta.iter().sum();
        for _ in 0..*mult {
            let mut next = BTreeMap::new();
            for (d, c) in &table {
                let d_total: usize = d.iter().sum();
                let mut k = 0usize;
                loop {
                    if let Some(h) = height {
                        if k >= *h {
                            break;
                        }
                    }
                    if d_total + k * beta_total > max_total {
                        break;
                    }
                    let e: Vec<usize> = d.iter().zip(beta).map(|(a, b)| a + k * b).collect();
                    *next.entry(e).or_insert(0) += c;
                    k += 1;
                }
            }
            table = next;
        }
    }
    table
}
