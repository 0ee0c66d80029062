//! Assembled summaries of the reflection analysis, the brute-force
//! computation, and their agreement, with stable text and JSON renderings.
//!
//! `analyze` runs only the reflection machinery (it never touches the
//! word-level computations), `oracle_report` runs only the word-level
//! machinery, and `compare` runs both and reconciles them.  JSON output
//! uses sorted keys and sorted collections throughout, so identical
//! inputs produce byte-identical output.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::braiding::BraidingMatrix;
use crate::cartan::{finite_type, FiniteTypeReport};
use crate::groupoid::{
    basis_orbit, check_brandt_axioms, real_roots, weyl_brandt_elements, AxiomViolation,
    CapExceeded, Caps, RootSet,
};
use crate::oracle::{hilbert_data, pbw_infer, HeightBound, PbwCutoff, PbwReport};

/// Counts describing a finished state-graph and basis-orbit enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidSummary {
    pub states: usize,
    pub arrows: usize,
    pub obstructions: usize,
    pub bases: usize,
}

/// Everything the reflection side can say about a braiding.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub input: String,
    pub rank: usize,
    pub cartan: Option<Vec<Vec<i64>>>,
    pub reflectable: Vec<usize>,
    pub groupoid: Result<GroupoidSummary, CapExceeded>,
    pub roots: Result<RootSet, CapExceeded>,
    pub element_count: Result<usize, CapExceeded>,
    pub brandt: Option<Result<(), AxiomViolation>>,
    pub finite_type: Option<FiniteTypeReport>,
}

pub fn analyze(q: &BraidingMatrix, caps: &Caps) -> AnalysisReport {
    let rank = q.rank();
    let cartan_matrix = q.cartan_matrix();
    let cartan = cartan_matrix.as_ref().map(|c| {
        (0..c.n())
            .map(|i| (0..c.n()).map(|j| c.get(i, j)).collect())
            .collect()
    });
    let reflectable = crate::reflection::reflectable_indices(q);
    let groupoid = basis_orbit(q, caps).map(|orbit| GroupoidSummary {
        states: orbit.graph().states().len(),
        arrows: orbit.graph().arrows().len(),
        obstructions: orbit.graph().obstructions().len(),
        bases: orbit.bases().len(),
    });
    let roots = real_roots(q, caps);
    let (element_count, brandt) = match weyl_brandt_elements(q, caps) {
        Ok(wb) => (Ok(wb.len()), Some(check_brandt_axioms(&wb))),
        Err(e) => (Err(e), None),
    };
    let finite_type = cartan_matrix.as_ref().map(finite_type);
    AnalysisReport {
        input: q.serialize(),
        rank,
        cartan,
        reflectable,
        groupoid,
        roots,
        element_count,
        brandt,
        finite_type,
    }
}

impl AnalysisReport {
    /// Whether the enumeration itself proved the orbit finite.
    pub fn shown_finite(&self) -> bool {
        self.roots.is_ok()
    }

    pub fn to_json(&self) -> Value {
        let groupoid = match &self.groupoid {
            Ok(g) => json!({
                "states": g.states,
                "arrows": g.arrows,
                "obstructions": g.obstructions,
                "bases": g.bases,
            }),
            Err(e) => json!({ "error": e.to_string() }),
        };
        let roots = match &self.roots {
            Ok(r) => json!(r.positive().cloned().collect::<Vec<_>>()),
            Err(e) => json!({ "error": e.to_string() }),
        };
        let element_count = match &self.element_count {
            Ok(n) => json!(n),
            Err(e) => json!({ "error": e.to_string() }),
        };
        let brandt = self.brandt.as_ref().map(|b| match b {
            Ok(()) => json!({ "ok": true }),
            Err(v) => json!({ "ok": false, "axiom": v.axiom, "detail": v.detail }),
        });
        let finite_type = self.finite_type.as_ref().map(|ft| {
            json!({
                "finite": ft.finite,
                "label": ft.label(),
            })
        });
        json!({
            "input": self.input,
            "rank": self.rank,
            "cartan": self.cartan,
            "reflectable": self.reflectable.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "groupoid": groupoid,
            "positive_roots": roots,
            "element_count": element_count,
            "brandt_axioms": brandt,
            "finite_type": finite_type,
            "shown_finite": self.shown_finite(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("rank: {}\n", self.rank));
        match &self.cartan {
            Some(c) => out.push_str(&format!("cartan matrix: {c:?}\n")),
            None => out.push_str("cartan matrix: none (not of Cartan shape)\n"),
        }
        let refl: Vec<String> = self.reflectable.iter().map(|i| (i + 1).to_string()).collect();
        out.push_str(&format!("reflectable indices: {}\n", refl.join(" ")));
        match &self.groupoid {
            Ok(g) => out.push_str(&format!(
                "states: {}, arrows: {}, obstructions: {}, bases: {}\n",
                g.states, g.arrows, g.obstructions, g.bases
            )),
            Err(e) => out.push_str(&format!("orbit enumeration: {e}\n")),
        }
        match &self.roots {
            Ok(r) => {
                out.push_str(&format!("positive real roots ({}):\n", r.positive_count()));
                for v in r.positive() {
                    out.push_str(&format!("  {v:?}\n"));
                }
            }
            Err(e) => out.push_str(&format!("real roots: {e}\n")),
        }
        match &self.element_count {
            Ok(n) => out.push_str(&format!("groupoid elements: {n}\n")),
            Err(e) => out.push_str(&format!("groupoid elements: {e}\n")),
        }
        match &self.brandt {
            Some(Ok(())) => out.push_str("groupoid axioms: pass\n"),
            Some(Err(v)) => out.push_str(&format!("groupoid axioms: FAIL ({v})\n")),
            None => {}
        }
        if let Some(ft) = &self.finite_type {
            match (ft.finite, ft.label()) {
                (true, Some(label)) => {
                    out.push_str(&format!("finite cartan type: yes ({label})\n"))
                }
                (true, None) => out.push_str("finite cartan type: yes\n"),
                (false, _) => out.push_str("finite cartan type: no\n"),
            }
        }
        out
    }
}

/// The word-level side: a dimension table and what it implies.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub max_total: usize,
    pub dimensions: BTreeMap<Vec<usize>, usize>,
    pub pbw: Result<PbwReport, PbwCutoff>,
}

pub fn oracle_report(q: &BraidingMatrix, max_total: usize) -> OracleReport {
    let dimensions = hilbert_data(q, max_total);
    let pbw = pbw_infer(&dimensions, max_total);
    OracleReport {
        max_total,
        dimensions,
        pbw,
    }
}

fn height_json(h: &HeightBound) -> Value {
    match h {
        HeightBound::Finite(n) => json!({ "finite": n }),
        HeightBound::AtLeast(n) => json!({ "at_least": n }),
    }
}

impl OracleReport {
    pub fn to_json(&self) -> Value {
        let dims: Vec<Value> = self
            .dimensions
            .iter()
            .map(|(d, n)| json!({ "degree": d, "dimension": n }))
            .collect();
        let pbw = match &self.pbw {
            Ok(report) => {
                let roots: Vec<Value> = report
                    .roots
                    .iter()
                    .map(|r| {
                        json!({
                            "degree": r.degree,
                            "multiplicity": r.multiplicity,
                            "height": height_json(&r.height),
                        })
                    })
                    .collect();
                json!({
                    "roots": roots,
                    "total_dimension": report.total_dimension(),
                })
            }
            Err(e) => json!({ "error": e.to_string() }),
        };
        json!({
            "max_total_degree": self.max_total,
            "dimensions": dims,
            "pbw": pbw,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "dimensions up to total degree {}:\n",
            self.max_total
        ));
        for (d, n) in &self.dimensions {
            if *n > 0 {
                out.push_str(&format!("  {d:?}: {n}\n"));
            }
        }
        match &self.pbw {
            Ok(report) => {
                out.push_str("inferred generators:\n");
                for r in &report.roots {
                    let h = match r.height {
                        HeightBound::Finite(h) => format!("height {h}"),
                        HeightBound::AtLeast(h) => format!("height >= {h}"),
                    };
                    if r.multiplicity == 1 {
                        out.push_str(&format!("  {:?}: {h}\n", r.degree));
                    } else {
                        out.push_str(&format!(
                            "  {:?} (multiplicity {}): {h}\n",
                            r.degree, r.multiplicity
                        ));
                    }
                }
                match report.total_dimension() {
                    Some(dim) => out.push_str(&format!("total dimension: {dim}\n")),
                    None => out.push_str("total dimension: unbounded within this degree range\n"),
                }
            }
            Err(e) => out.push_str(&format!("inference stopped: {e}\n")),
        }
        out
    }
}

/// The verdict of running both sides on the same braiding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComparisonOutcome {
    Agree,
    Disagree {
        missing_from_oracle: Vec<Vec<i64>>,
        unexpected_in_oracle: Vec<Vec<usize>>,
        multiplicity_issues: Vec<Vec<usize>>,
    },
    GroupoidCapped(CapExceeded),
}

#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub max_total: usize,
    pub outcome: ComparisonOutcome,
    pub roots: Result<RootSet, CapExceeded>,
    pub pbw: PbwReport,
}

/// Run the reflection side and the word side and match the positive real
/// roots of total degree within range against the inferred generators.
pub fn compare(
    q: &BraidingMatrix,
    caps: &Caps,
    max_total: usize,
) -> Result<ComparisonReport, PbwCutoff> {
    let groupoid_roots = real_roots(q, caps);
    let dimensions = hilbert_data(q, max_total);
    let pbw = pbw_infer(&dimensions, max_total)?;

    let outcome = match &groupoid_roots {
        Err(e) => ComparisonOutcome::GroupoidCapped(e.clone()),
        Ok(roots) => {
            let in_range: Vec<Vec<i64>> = roots
                .positive()
                .filter(|v| v.iter().sum::<i64>() <= max_total as i64)
                .cloned()
                .collect();
            let oracle_degrees: BTreeMap<Vec<i64>, usize> = pbw
                .roots
                .iter()
                .map(|r| {
                    (
                        r.degree.iter().map(|&x| x as i64).collect(),
                        r.multiplicity,
                    )
                })
                .collect();
            let missing_from_oracle: Vec<Vec<i64>> = in_range
                .iter()
                .filter(|v| !oracle_degrees.contains_key(*v))
                .cloned()
                .collect();
            let unexpected_in_oracle: Vec<Vec<usize>> = pbw
                .roots
                .iter()
                .map(|r| r.degree.clone())
                .filter(|d| {
                    let as_i64: Vec<i64> = d.iter().map(|&x| x as i64).collect();
                    !in_range.contains(&as_i64)
                })
                .collect();
            let multiplicity_issues: Vec<Vec<usize>> = pbw
                .roots
                .iter()
                .filter(|r| r.multiplicity != 1)
                .map(|r| r.degree.clone())
                .collect();
            if missing_from_oracle.is_empty()
                && unexpected_in_oracle.is_empty()
                && multiplicity_issues.is_empty()
            {
                ComparisonOutcome::Agree
            } else {
                ComparisonOutcome::Disagree {
                    missing_from_oracle,
                    unexpected_in_oracle,
                    multiplicity_issues,
                }
            }
        }
    };
    Ok(ComparisonReport {
        max_total,
        outcome,
        roots: groupoid_roots,
        pbw,
    })
}

impl ComparisonReport {
    pub fn agreed(&self) -> bool {
        self.outcome == ComparisonOutcome::Agree
    }

    pub fn to_json(&self) -> Value {
        let outcome = match &self.outcome {
            ComparisonOutcome::Agree => json!({ "verdict": "agree" }),
            ComparisonOutcome::Disagree {
                missing_from_oracle,
                unexpected_in_oracle,
                multiplicity_issues,
            } => json!({
                "verdict": "disagree",
                "missing_from_oracle": missing_from_oracle,
                "unexpected_in_oracle": unexpected_in_oracle,
                "multiplicity_issues": multiplicity_issues,
            }),
            ComparisonOutcome::GroupoidCapped(e) => json!({
                "verdict": "undecided",
                "reason": e.to_string(),
            }),
        };
        let roots = match &self.roots {
            Ok(r) => json!(r.positive().cloned().collect::<Vec<_>>()),
            Err(e) => json!({ "error": e.to_string() }),
        };
        let generators: Vec<Value> = self
            .pbw
            .roots
            .iter()
            .map(|r| {
                json!({
                    "degree": r.degree,
                    "multiplicity": r.multiplicity,
                    "height": height_json(&r.height),
                })
            })
            .collect();
        json!({
            "max_total_degree": self.max_total,
            "outcome": outcome,
            "positive_roots": roots,
            "generators": generators,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.outcome {
            ComparisonOutcome::Agree => out.push_str(&format!(
                "agreement: the {} positive roots within total degree {} match the inferred generators\n",
                self.pbw.roots.len(),
                self.max_total
            )),
            ComparisonOutcome::Disagree {
                missing_from_oracle,
                unexpected_in_oracle,
                multiplicity_issues,
            } => {
                out.push_str("DISAGREEMENT between reflection orbit and dimension table\n");
                for v in missing_from_oracle {
                    out.push_str(&format!("  root {v:?} has no matching generator\n"));
                }
                for v in unexpected_in_oracle {
                    out.push_str(&format!("  generator {v:?} is not a real root\n"));
                }
                for v in multiplicity_issues {
                    out.push_str(&format!("  generator {v:?} has multiplicity != 1\n"));
                }
            }
            ComparisonOutcome::GroupoidCapped(e) => {
                out.push_str(&format!("comparison undecided: {e}\n"));
            }
        }
        out
    }
}
