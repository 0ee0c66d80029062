//! The reflection groupoid of a diagonal braiding.
//!
//! Starting from a braiding `q`, every reflectable index transports `q` to
//! a new braiding; iterating yields a finite or infinite graph of states.
//! Alongside the states, the ordered standard basis of the degree lattice
//! is transported: each step applies the current state's pseudo-reflection
//! (as a matrix, on the left) to the basis reached so far.  Real roots are
//! the columns of reachable bases, up to sign, and the full groupoid
//! structure is the set of pairs `(map, source basis)` with composition
//! `(s, E) o (t, F) = (st, F)` defined exactly when `t(F) = E`.
//!
//! All enumeration is breadth first with canonical deduplication, so
//! results are deterministic; caps bound states, arrows, and word length,
//! and hitting a cap is an explicit error, never a silent truncation.

use std::collections::{BTreeMap, BTreeSet};

use crate::braiding::BraidingMatrix;
use crate::matrix::IntMatrix;
use crate::reflection::{pseudo_reflection, reflect_braiding, NotReflectable, ReflectionMap};

/// Enumeration limits.  Exceeding any of them aborts with [`CapExceeded`];
/// a completed enumeration is therefore a proof of finiteness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_states: usize,
    pub max_arrows: usize,
    pub max_word_len: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_states: 10_000,
            max_arrows: 100_000,
            max_word_len: 64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapKind {
    States,
    Arrows,
    WordLength,
}

impl std::fmt::Display for CapKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CapKind::States => write!(f, "state"),
            CapKind::Arrows => write!(f, "arrow"),
            CapKind::WordLength => write!(f, "word-length"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("enumeration exceeded the {kind} cap of {cap}")]
pub struct CapExceeded {
    pub kind: CapKind,
    pub cap: usize,
}

/// One reflection arrow of the state graph.
#[derive(Debug, Clone)]
pub struct Arrow {
    pub from: usize,
    pub index: usize,
    pub to: usize,
    pub map: ReflectionMap,
}

/// The graph of braidings reachable from a start braiding by reflections.
/// State 0 is the start.  For every state and index there is either an
/// arrow or a recorded obstruction.
#[derive(Debug, Clone)]
pub struct GroupoidGraph {
    states: Vec<BraidingMatrix>,
    arrows: Vec<Arrow>,
    obstructions: Vec<(usize, NotReflectable)>,
}

impl GroupoidGraph {
    pub fn states(&self) -> &[BraidingMatrix] {
        &self.states
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn obstructions(&self) -> &[(usize, NotReflectable)] {
        &self.obstructions
    }

    /// The arrow leaving `state` at `index`, if that reflection exists.
    pub fn arrow_at(&self, state: usize, index: usize) -> Option<&Arrow> {
        self.arrows
            .iter()
            .find(|a| a.from == state && a.index == index)
    }

    /// True when every index of every state reflects.
    pub fn fully_reflectable(&self) -> bool {
        self.obstructions.is_empty()
    }

    /// A Graphviz rendering of the state graph.  Reflection pairs are drawn
    /// as single undirected edges; obstructions as dashed self-loops.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph reflection_states {\n");
        for (id, state) in self.states.iter().enumerate() {
            let diag: Vec<String> = (0..state.rank())
                .map(|i| state.q(i, i).to_string())
                .collect();
            out.push_str(&format!(
                "  s{} [label=\"V{}: diag({})\"];\n",
                id,
                id,
                diag.join(", ")
            ));
        }
        let mut drawn: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
        for a in &self.arrows {
            let key = (a.from.min(a.to), a.from.max(a.to), a.index);
            if drawn.insert(key) {
                out.push_str(&format!(
                    "  s{} -- s{} [label=\"{}\"];\n",
                    a.from,
                    a.to,
                    a.index + 1
                ));
            }
        }
        for (state, obs) in &self.obstructions {
            out.push_str(&format!(
                "  s{} -- s{} [style=dashed, label=\"{} blocked\"];\n",
                state,
                state,
                obs.index + 1
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first closure of the braiding under all defined reflections.
pub fn build_groupoid(q: &BraidingMatrix, caps: &Caps) -> Result<GroupoidGraph, CapExceeded> {
    let n = q.rank();
    let mut states = vec![q.clone()];
    let mut index_of: BTreeMap<String, usize> = BTreeMap::new();
    index_of.insert(q.serialize(), 0);
    let mut arrows = Vec::new();
    let mut obstructions = Vec::new();
    let mut frontier = vec![0usize];
    let mut depth = 0;
    while !frontier.is_empty() {
        if depth >= caps.max_word_len {
            return Err(CapExceeded {
                kind: CapKind::WordLength,
                cap: caps.max_word_len,
            });
        }
        let mut next = Vec::new();
        for sid in frontier {
            for i in 0..n {
                let state = states[sid].clone();
                match pseudo_reflection(&state, i) {
                    Err(obs) => obstructions.push((sid, obs)),
                    Ok(map) => {
                        let image = reflect_braiding(&state, i)
                            .expect("reflection map exists, so the transport must too");
                        let key = image.serialize();
                        let tid = match index_of.get(&key) {
                            Some(&tid) => tid,
                            None => {
                                let tid = states.len();
                                if tid >= caps.max_states {
                                    return Err(CapExceeded {
                                        kind: CapKind::States,
                                        cap: caps.max_states,
                                    });
                                }
                                states.push(image);
                                index_of.insert(key, tid);
                                next.push(tid);
                                tid
                            }
                        };
                        if arrows.len() >= caps.max_arrows {
                            return Err(CapExceeded {
                                kind: CapKind::Arrows,
                                cap: caps.max_arrows,
                            });
                        }
                        arrows.push(Arrow {
                            from: sid,
                            index: i,
                            to: tid,
                            map,
                        });
                    }
                }
            }
        }
        frontier = next;
        depth += 1;
    }
    Ok(GroupoidGraph {
        states,
        arrows,
        obstructions,
    })
}

/// The orbit of the standard ordered basis: all pairs of a state and the
/// basis matrix accumulated along some reflection word reaching it.
#[derive(Debug, Clone)]
pub struct BasisOrbit {
    graph: GroupoidGraph,
    nodes: Vec<(usize, IntMatrix)>,
}

impl BasisOrbit {
    pub fn graph(&self) -> &GroupoidGraph {
        &self.graph
    }

    /// All `(state id, basis)` pairs, in breadth-first discovery order.
    pub fn nodes(&self) -> &[(usize, IntMatrix)] {
        &self.nodes
    }

    /// The distinct basis matrices of the orbit.
    pub fn bases(&self) -> BTreeSet<IntMatrix> {
        self.nodes.iter().map(|(_, e)| e.clone()).collect()
    }
}

/// Breadth-first closure of `(state, basis)` pairs from `(q, identity)`.
/// Each step left-multiplies the basis by the current state's reflection
/// matrix.
pub fn basis_orbit(q: &BraidingMatrix, caps: &Caps) -> Result<BasisOrbit, CapExceeded> {
    let graph = build_groupoid(q, caps)?;
    let n = q.rank();
    let start = (0usize, IntMatrix::identity(n));
    let mut seen: BTreeSet<(usize, IntMatrix)> = BTreeSet::new();
    seen.insert(start.clone());
    let mut nodes = vec![start.clone()];
    let mut frontier = vec![start];
    let mut depth = 0;
    let mut traversed = 0usize;
    while !frontier.is_empty() {
        if depth >= caps.max_word_len {
            return Err(CapExceeded {
                kind: CapKind::WordLength,
                cap: caps.max_word_len,
            });
        }
        let mut next = Vec::new();
        for (sid, basis) in frontier {
            for i in 0..n {
                let Some(arrow) = graph.arrow_at(sid, i) else {
                    continue;
                };
                traversed += 1;
                if traversed > caps.max_arrows {
                    return Err(CapExceeded {
                        kind: CapKind::Arrows,
                        cap: caps.max_arrows,
                    });
                }
                let node = (arrow.to, arrow.map.matrix().mul(&basis));
                if seen.insert(node.clone()) {
                    if seen.len() > caps.max_states {
                        return Err(CapExceeded {
                            kind: CapKind::States,
                            cap: caps.max_states,
                        });
                    }
                    nodes.push(node.clone());
                    next.push(node);
                }
            }
        }
        frontier = next;
        depth += 1;
    }
    Ok(BasisOrbit { graph, nodes })
}

/// A set of lattice vectors closed under negation, stored by its
/// nonnegative half.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    n: usize,
    positive: BTreeSet<Vec<i64>>,
}

impl RootSet {
    pub fn from_positive(n: usize, positive: BTreeSet<Vec<i64>>) -> Self {
        assert!(
            positive
                .iter()
                .all(|v| v.len() == n && v.iter().all(|&x| x >= 0)),
            "positive roots must be nonnegative vectors of the right rank"
        );
        RootSet { n, positive }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// The nonnegative half, in lexicographic order.
    pub fn positive(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.positive.iter()
    }

    pub fn positive_count(&self) -> usize {
        self.positive.len()
    }

    /// Both halves.
    pub fn iter_all(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        self.positive.iter().cloned().chain(
            self.positive
                .iter()
                .map(|v| v.iter().map(|&x| -x).collect()),
        )
    }

    /// Membership in the full set (either sign).
    pub fn contains(&self, v: &[i64]) -> bool {
        if v.iter().all(|&x| x >= 0) && self.positive.contains(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|&x| -x).collect();
        neg.iter().all(|&x| x >= 0) && self.positive.contains(&neg)
    }
}

/// The real roots of the braiding: all columns of reachable bases, up to
/// sign.  Every such column is sign-coherent, so the set is returned by its
/// nonnegative half.
pub fn real_roots(q: &BraidingMatrix, caps: &Caps) -> Result<RootSet, CapExceeded> {
    let orbit = basis_orbit(q, caps)?;
    let mut positive = BTreeSet::new();
    for (_, basis) in orbit.nodes() {
        for j in 0..q.rank() {
            let col = basis.column(j);
            let canon: Vec<i64> = if col.iter().all(|&x| x <= 0) {
                col.iter().map(|&x| -x).collect()
            } else {
                col
            };
            assert!(
                canon.iter().all(|&x| x >= 0),
                "reachable bases must consist of sign-coherent columns"
            );
            positive.insert(canon);
        }
    }
    Ok(RootSet::from_positive(q.rank(), positive))
}

/// One element of the groupoid: an integer automorphism together with the
/// basis it is applied to.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupoidElement {
    pub map: IntMatrix,
    pub source: IntMatrix,
}

impl GroupoidElement {
    pub fn target(&self) -> IntMatrix {
        self.map.mul(&self.source)
    }

    pub fn is_identity_at(&self, basis: &IntMatrix) -> bool {
        self.map.is_identity() && self.source == *basis
    }
}

/// Partial composition: `x o y` is defined when `y` lands on the basis `x`
/// starts from, and then equals the composed map applied to `y`'s basis.
pub fn compose(x: &GroupoidElement, y: &GroupoidElement) -> Option<GroupoidElement> {
    if y.target() != x.source {
        return None;
    }
    Some(GroupoidElement {
        map: x.map.mul(&y.map),
        source: y.source.clone(),
    })
}

/// The full element set over a basis orbit: every pair of reachable bases
/// `(E1, E2)` contributes the element mapping `E1` onto `E2`.
#[derive(Debug, Clone)]
pub struct WeylBrandt {
    bases: Vec<IntMatrix>,
    elements: BTreeSet<GroupoidElement>,
}

impl WeylBrandt {
    /// Assemble from explicit parts (used for diagnostics and tests).
    pub fn from_parts(bases: Vec<IntMatrix>, elements: BTreeSet<GroupoidElement>) -> Self {
        WeylBrandt { bases, elements }
    }

    pub fn bases(&self) -> &[IntMatrix] {
        &self.bases
    }

    pub fn elements(&self) -> &BTreeSet<GroupoidElement> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains_identity_at_start(&self) -> bool {
        let n = self
            .bases
            .first()
            .map(|b| b.n())
            .unwrap_or(0);
        let id = IntMatrix::identity(n);
        self.elements.contains(&GroupoidElement {
            map: id.clone(),
            source: id,
        })
    }
}

pub fn weyl_brandt_elements(q: &BraidingMatrix, caps: &Caps) -> Result<WeylBrandt, CapExceeded> {
    let orbit = basis_orbit(q, caps)?;
    let bases: Vec<IntMatrix> = orbit.bases().into_iter().collect();
    let mut elements = BTreeSet::new();
    for e1 in &bases {
        let inv = e1.inverse_unimodular();
        for e2 in &bases {
            elements.insert(GroupoidElement {
                map: e2.mul(&inv),
                source: e1.clone(),
            });
        }
    }
    Ok(WeylBrandt { bases, elements })
}

/// A failed groupoid axiom, with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("groupoid axiom {axiom} fails: {detail}")]
pub struct AxiomViolation {
    pub axiom: usize,
    pub detail: String,
}

/// Verify the six defining conditions of a connected groupoid with partial
/// composition, literally, over the whole element set:
///
/// 1. in `x o y` each of the three is determined by the other two;
/// 2. if `x o y` and `y o z` are defined, so are `(x o y) o z` and
///    `x o (y o z)`, and they agree;
/// 3. the same conclusion from `x o y` and `(x o y) o z` defined;
/// 4. the same conclusion from `y o z` and `x o (y o z)` defined;
/// 5. every `x` has unique left unit, right unit, and left inverse onto
///    that right unit;
/// 6. any two idempotents are connected by some element.
pub fn check_brandt_axioms(wb: &WeylBrandt) -> Result<(), AxiomViolation> {
    let elems: Vec<&GroupoidElement> = wb.elements().iter().collect();
    let n = elems.len();

    // Intern every source and target matrix once, so that definedness of a
    // composition (`y` must land on the basis `x` starts from) becomes an
    // integer comparison and only genuine products cost a multiplication.
    let mut interned: BTreeMap<IntMatrix, usize> = BTreeMap::new();
    let mut id_of = |m: IntMatrix| -> usize {
        let next = interned.len();
        *interned.entry(m).or_insert(next)
    };
    let mut src = Vec::with_capacity(n);
    let mut tgt = Vec::with_capacity(n);
    for e in &elems {
        src.push(id_of(e.source.clone()));
        tgt.push(id_of(e.target()));
    }
    let maps: Vec<&IntMatrix> = elems.iter().map(|e| &e.map).collect();
    let ids = src.iter().chain(tgt.iter()).max().map_or(0, |m| m + 1);
    let mut by_src: Vec<Vec<usize>> = vec![Vec::new(); ids];
    let mut by_tgt: Vec<Vec<usize>> = vec![Vec::new(); ids];
    let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for k in 0..n {
        by_src[src[k]].push(k);
        by_tgt[tgt[k]].push(k);
        by_pair.entry((src[k], tgt[k])).or_default().push(k);
    }
    // For composable x, y the product x o y has map maps[x]*maps[y], source
    // src[y], and target maps[x]*(target of y) = maps[x]*(source of x) =
    // target of x -- the last two identities need no axiom, only the
    // definitions, and are used below to settle definedness questions.

    // Axiom 1: cancellation on both sides (x and the product determine y,
    // y and the product determine x; x and y trivially determine x o y).
    for x in 0..n {
        let mut seen: BTreeMap<(IntMatrix, usize), usize> = BTreeMap::new();
        for &y in &by_tgt[src[x]] {
            let product = maps[x].mul(maps[y]);
            if let Some(prev) = seen.insert((product, src[y]), y) {
                if prev != y {
                    return Err(AxiomViolation {
                        axiom: 1,
                        detail: "two right factors give the same product".into(),
                    });
                }
            }
        }
    }
    for y in 0..n {
        let mut seen: BTreeMap<(IntMatrix, usize), usize> = BTreeMap::new();
        for &x in &by_src[tgt[y]] {
            let product = maps[x].mul(maps[y]);
            if let Some(prev) = seen.insert((product, src[y]), x) {
                if prev != x {
                    return Err(AxiomViolation {
                        axiom: 1,
                        detail: "two left factors give the same product".into(),
                    });
                }
            }
        }
    }

    // Axioms 2, 3 and 4 all quantify over the same triples: each of the
    // hypotheses "x o y and y o z defined", "x o y and (x o y) o z
    // defined", "y o z and x o (y o z) defined" unfolds to the pair of
    // conditions tgt(y) = src(x) and tgt(z) = src(y), and each conclusion
    // asserts that the remaining compositions are defined (automatic on
    // the same grounds) and that the two bracketings agree.  The one
    // substantive check left is that agreement.
    for y in 0..n {
        let zs = &by_tgt[src[y]];
        let yz: Vec<IntMatrix> = zs.iter().map(|&z| maps[y].mul(maps[z])).collect();
        for &x in &by_src[tgt[y]] {
            let xy = maps[x].mul(maps[y]);
            for (k, &z) in zs.iter().enumerate() {
                if xy.mul(maps[z]) != maps[x].mul(&yz[k]) {
                    return Err(AxiomViolation {
                        axiom: 2,
                        detail: "defined pair compositions fail to associate".into(),
                    });
                }
            }
        }
    }

    // Axiom 5: unique left unit, right unit, and inverse onto the right
    // unit.
    for x in 0..n {
        let left_units = by_src[tgt[x]]
            .iter()
            .filter(|&&e| maps[e].mul(maps[x]) == *maps[x])
            .count();
        let rights: Vec<usize> = by_tgt[src[x]]
            .iter()
            .copied()
            .filter(|&f| maps[x].mul(maps[f]) == *maps[x])
            .collect();
        if left_units != 1 || rights.len() != 1 {
            return Err(AxiomViolation {
                axiom: 5,
                detail: format!(
                    "expected unique units, found {} left and {} right",
                    left_units,
                    rights.len()
                ),
            });
        }
        let f = rights[0];
        let inverses = by_src[tgt[x]]
            .iter()
            .filter(|&&y| src[x] == src[f] && maps[y].mul(maps[x]) == *maps[f])
            .count();
        if inverses != 1 {
            return Err(AxiomViolation {
                axiom: 5,
                detail: format!("expected a unique inverse, found {inverses}"),
            });
        }
    }

    // Axiom 6: any two idempotents are connected.
    let idempotents: Vec<usize> = (0..n)
        .filter(|&e| tgt[e] == src[e] && maps[e].mul(maps[e]) == *maps[e])
        .collect();
    for &e in &idempotents {
        for &f in &idempotents {
            // A connecting x satisfies e o x = x and x o f = x, which pins
            // src(x) = tgt(f) and tgt(x) = src(e) before any product is
            // taken.
            let connected = by_pair.get(&(tgt[f], src[e])).is_some_and(|cands| {
                cands.iter().any(|&x| {
                    maps[e].mul(maps[x]) == *maps[x] && maps[x].mul(maps[f]) == *maps[x]
                })
            });
            if !connected {
                return Err(AxiomViolation {
                    axiom: 6,
                    detail: "two idempotents admit no connecting element".into(),
                });
            }
        }
    }
    Ok(())
}
#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::instances;

    #[test]
    fn a2_generic_orbit() {
        let q = instances::a2_generic();
        let caps = Caps::default();
        let graph = build_groupoid(&q, &caps).unwrap();
        assert_eq!(graph.states().len(), 2);
        assert!(graph.fully_reflectable());
        let orbit = basis_orbit(&q, &caps).unwrap();
        assert_eq!(orbit.bases().len(), 6);
        let roots = real_roots(&q, &caps).unwrap();
        let expected: BTreeSet<Vec<i64>> =
            [vec![0, 1], vec![1, 0], vec![1, 1]].into_iter().collect();
        assert_eq!(roots, RootSet::from_positive(2, expected));
    }

    #[test]
    fn rank2_root_counts() {
        let caps = Caps::default();
        assert_eq!(
            real_roots(&instances::b2_generic(), &caps)
                .unwrap()
                .positive_count(),
            4
        );
        assert_eq!(
            real_roots(&instances::g2_generic(), &caps)
                .unwrap()
                .positive_count(),
            6
        );
        assert_eq!(
            real_roots(&instances::a3_generic(), &caps)
                .unwrap()
                .positive_count(),
            6
        );
    }

    #[test]
    fn groupoid_roots_match_reflection_closure() {
        // The same sets arise from the basis orbit of the braiding and from
        // the abstract reflection closure of its Cartan matrix.
        for q in [
            instances::a2_generic(),
            instances::b2_generic(),
            instances::g2_generic(),
            instances::a3_generic(),
        ] {
            let from_orbit = real_roots(&q, &Caps::default()).unwrap();
            let c = q.cartan_matrix().unwrap();
            let from_cartan = crate::cartan::root_system(&c).unwrap();
            assert_eq!(from_orbit, from_cartan);
        }
    }

    #[test]
    fn rank1_and_third_root_groupoids() {
        let caps = Caps::default();
        let q1 = instances::rank1_minus_one();
        let wb1 = weyl_brandt_elements(&q1, &caps).unwrap();
        assert_eq!(wb1.bases().len(), 2);
        assert_eq!(wb1.len(), 4);
        assert!(wb1.contains_identity_at_start());
        check_brandt_axioms(&wb1).unwrap();

        let q2 = instances::a2_third_root();
        let wb2 = weyl_brandt_elements(&q2, &caps).unwrap();
        assert_eq!(wb2.bases().len(), 6);
        assert_eq!(wb2.len(), 36);
        assert!(wb2.contains_identity_at_start());
        check_brandt_axioms(&wb2).unwrap();
    }

    #[test]
    fn affine_braiding_exceeds_caps() {
        let q = instances::affine_rank2();
        // The state graph itself is small...
        let graph = build_groupoid(&q, &Caps::default()).unwrap();
        assert_eq!(graph.states().len(), 2);
        // ...but the basis orbit is infinite and trips whichever cap is
        // tightest.
        let err = basis_orbit(
            &q,
            &Caps {
                max_states: 200,
                max_arrows: 100_000,
                max_word_len: 1_000,
            },
        )
        .unwrap_err();
        assert_eq!(err.kind, CapKind::States);
        let err = basis_orbit(
            &q,
            &Caps {
                max_states: 1_000_000,
                max_arrows: 1_000_000,
                max_word_len: 10,
            },
        )
        .unwrap_err();
        assert_eq!(err.kind, CapKind::WordLength);
    }

    #[test]
    fn arrows_reverse_each_other() {
        let q = instances::b2_generic();
        let graph = build_groupoid(&q, &Caps::default()).unwrap();
        for a in graph.arrows() {
            let back = graph.arrow_at(a.to, a.index).unwrap();
            assert_eq!(back.to, a.from);
            // The two maps agree because coefficients survive reflection.
            assert_eq!(back.map.matrix(), a.map.matrix());
        }
    }

    #[test]
    fn unreflectable_state_records_obstructions() {
        let q = crate::braiding::BraidingMatrix::parse(
            "rank 2\nparams t\nentry 1 1 t\nentry 1 2 t^2\nentry 2 1 1\nentry 2 2 t",
        )
        .unwrap();
        let graph = build_groupoid(&q, &Caps::default()).unwrap();
        assert_eq!(graph.states().len(), 1);
        assert_eq!(graph.obstructions().len(), 2);
        assert!(!graph.fully_reflectable());
        let dot = graph.to_dot();
        assert!(dot.contains("style=dashed"));
    }

    #[test]
    fn dot_export_shape() {
        let q = instances::a2_generic();
        let dot = build_groupoid(&q, &Caps::default()).unwrap().to_dot();
        assert!(dot.starts_with("graph reflection_states {"));
        assert!(dot.contains("s0 -- s1"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn axiom_checker_detects_damage() {
        let q = instances::rank1_minus_one();
        let wb = weyl_brandt_elements(&q, &Caps::default()).unwrap();
        // Remove one non-identity element: unit existence breaks.
        let mut elements = wb.elements().clone();
        let victim = elements
            .iter()
            .find(|e| !e.map.is_identity())
            .unwrap()
            .clone();
        elements.remove(&victim);
        let damaged = WeylBrandt::from_parts(wb.bases().to_vec(), elements);
        assert!(check_brandt_axioms(&damaged).is_err());
    }

    #[test]
    fn composition_follows_basis_transport() {
        let q = instances::a2_generic();
        let wb = weyl_brandt_elements(&q, &Caps::default()).unwrap();
        for x in wb.elements() {
            for y in wb.elements() {
                match compose(x, y) {
                    Some(r) => {
                        assert_eq!(r.source, y.source);
                        assert_eq!(r.target(), x.target());
                        assert!(wb.elements().contains(&r), "composition must stay inside");
                    }
                    None => assert_ne!(y.target(), x.source),
                }
            }
        }
    }
}
