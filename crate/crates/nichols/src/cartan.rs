//! Generalized Cartan matrices: symmetrizability, finite-type detection,
//! root systems, Weyl groups, and realizability as braiding data.
//!
//! Finite type is decided by exact positive definiteness of the symmetrized
//! matrix (leading principal minors in integer arithmetic), never by
//! diagram lookup; the per-component type labels are reporting sugar only.
//! `realizable_as_braiding` decides, within the scalar model of this crate
//! (a cyclic torsion part times free parameters), whether any diagonal
//! braiding has the given matrix as its Cartan data, by solving the exponent
//! equations `a_ij x_i = a_ji x_j` rationally per spanning tree and, when
//! only the trivial rational solution exists, enumerating all torsion
//! solutions through a Smith-style diagonalization of the relation lattice.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::braiding::{BraidingMatrix, CartanMatrix};
use crate::groupoid::RootSet;
use crate::matrix::IntMatrix;
use crate::scalar::{ScalarContext, UnitMonomial};

/// Connected components of the off-diagonal nonzero pattern, each sorted.
pub fn connected_components(c: &CartanMatrix) -> Vec<Vec<usize>> {
    let n = c.n();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for j in c.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                    queue.push(j);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// A positive diagonal `d` with `d_i a_ij = d_j a_ji`, scaled to coprime
/// positive integers, or `None` if no such diagonal exists.
pub fn symmetrizing_diagonal(c: &CartanMatrix) -> Option<Vec<i64>> {
    let n = c.n();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for comp in connected_components(c) {
        let root = comp[0];
        d[root] = Some(BigRational::one());
        let mut queue = vec![root];
        while let Some(i) = queue.pop() {
            let di = d[i].clone().unwrap();
            for j in c.neighbors(i) {
                if d[j].is_none() {
                    let ratio = BigRational::new(c.get(i, j).into(), c.get(j, i).into());
                    d[j] = Some(di.clone() * ratio);
                    queue.push(j);
                }
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(|x| x.unwrap()).collect();
    // Verify every pair; propagation along a spanning tree can be defeated
    // by a cycle.
    for i in 0..n {
        for j in 0..n {
            if BigRational::from(BigInt::from(c.get(i, j))) * &d[i]
                != BigRational::from(BigInt::from(c.get(j, i))) * &d[j]
            {
                return None;
            }
        }
    }
    // Clear denominators, then divide by the common factor.
    let denom_lcm = d
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = d
        .iter()
        .map(|x| (x * BigRational::from(denom_lcm.clone())).to_integer())
        .collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(
        scaled
            .iter()
            .map(|x| i64::try_from(x / &g).expect("symmetrizing diagonal overflow"))
            .collect(),
    )
}

/// Finite-type classification labels, used for reporting only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeLabel {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F(usize),
    G(usize),
    Unknown,
}

impl std::fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TypeLabel::A(n) => write!(f, "A{n}"),
            TypeLabel::B(n) => write!(f, "B{n}"),
            TypeLabel::C(n) => write!(f, "C{n}"),
            TypeLabel::D(n) => write!(f, "D{n}"),
            TypeLabel::E(n) => write!(f, "E{n}"),
            TypeLabel::F(n) => write!(f, "F{n}"),
            TypeLabel::G(n) => write!(f, "G{n}"),
            TypeLabel::Unknown => write!(f, "?"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FiniteTypeReport {
    pub finite: bool,
    /// Present exactly when the matrix is symmetrizable.
    pub symmetrizing: Option<Vec<i64>>,
    /// Per-component `(sorted node list, label)`; populated only for finite
    /// type.
    pub components: Vec<(Vec<usize>, TypeLabel)>,
}

impl FiniteTypeReport {
    /// A compact label such as `"A2"` or `"A1 x G2"`, when finite.
    pub fn label(&self) -> Option<String> {
        self.finite.then(|| {
            self.components
                .iter()
                .map(|(_, l)| l.to_string())
                .collect::<Vec<_>>()
                .join(" x ")
        })
    }
}

/// Decide finite type exactly: symmetrizable with positive definite
/// symmetrization (all leading principal minors positive).
pub fn finite_type(c: &CartanMatrix) -> FiniteTypeReport {
    let n = c.n();
    let symmetrizing = symmetrizing_diagonal(c);
    if symmetrizing.is_none() {
        return FiniteTypeReport {
            finite: false,
            symmetrizing,
            components: Vec::new(),
        };
    }
    let m = IntMatrix::new(n, c.entries().to_vec());
    for k in 1..=n {
        if m.leading_minor(k).det() <= BigInt::zero() {
            return FiniteTypeReport {
                finite: false,
                symmetrizing,
                components: Vec::new(),
            };
        }
    }
    let d = symmetrizing.clone().unwrap();
    let components = connected_components(c)
        .into_iter()
        .map(|comp| {
            let label = classify_component(c, &comp, &d);
            (comp, label)
        })
        .collect();
    FiniteTypeReport {
        finite: true,
        symmetrizing,
        components,
    }
}

/// Label one finite-type component by its shape.  `d` is a global
/// symmetrizing diagonal.
fn classify_component(c: &CartanMatrix, comp: &[usize], d: &[i64]) -> TypeLabel {
    let m = comp.len();
    if m == 1 {
        return TypeLabel::A(1);
    }
    let edges: Vec<(usize, usize)> = comp
        .iter()
        .enumerate()
        .flat_map(|(a, &i)| {
            comp[a + 1..]
                .iter()
                .filter(move |&&j| c.get(i, j) != 0)
                .map(move |&j| (i, j))
        })
        .collect();
    if edges.len() != m - 1 {
        return TypeLabel::Unknown; // a cycle; never finite type
    }
    let degree = |i: usize| c.neighbors(i).filter(|j| comp.contains(j)).count();
    let products: Vec<i64> = edges.iter().map(|&(i, j)| c.get(i, j) * c.get(j, i)).collect();
    if products.iter().all(|&p| p == 1) {
        // Simply laced: a path or a single branch point.
        let branch: Vec<usize> = comp.iter().copied().filter(|&i| degree(i) == 3).collect();
        if comp.iter().any(|&i| degree(i) > 3) {
            return TypeLabel::Unknown;
        }
        return match branch.len() {
            0 => TypeLabel::A(m),
            1 => {
                let mut arms: Vec<usize> = c
                    .neighbors(branch[0])
                    .filter(|j| comp.contains(j))
                    .map(|start| {
                        // Walk away from the branch point to a leaf.
                        let mut len = 1;
                        let mut prev = branch[0];
                        let mut cur = start;
                        loop {
                            let next: Vec<usize> = c
                                .neighbors(cur)
                                .filter(|&j| j != prev && comp.contains(&j))
                                .collect();
                            match next.as_slice() {
                                [] => break len,
                                [only] => {
                                    prev = cur;
                                    cur = *only;
                                    len += 1;
                                }
                                _ => break usize::MAX,
                            }
                        }
                    })
                    .collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => TypeLabel::D(m),
                    [1, 2, 2] => TypeLabel::E(6),
                    [1, 2, 3] => TypeLabel::E(7),
                    [1, 2, 4] => TypeLabel::E(8),
                    _ => TypeLabel::Unknown,
                }
            }
            _ => TypeLabel::Unknown,
        };
    }
    if m == 2 {
        return match products[0] {
            2 => TypeLabel::B(2),
            3 => TypeLabel::G(2),
            _ => TypeLabel::Unknown,
        };
    }
    // Rank at least 3 and not simply laced: must be a path with exactly one
    // double bond.
    if comp.iter().any(|&i| degree(i) > 2) {
        return TypeLabel::Unknown;
    }
    if products.iter().filter(|&&p| p == 2).count() != 1
        || products.iter().any(|&p| p != 1 && p != 2)
    {
        return TypeLabel::Unknown;
    }
    // Order the path from one endpoint and locate the double bond.
    let start = *comp.iter().find(|&&i| degree(i) == 1).unwrap();
    let mut path = vec![start];
    while path.len() < m {
        let cur = *path.last().unwrap();
        let next = c
            .neighbors(cur)
            .find(|j| comp.contains(j) && !path.contains(j))
            .unwrap();
        path.push(next);
    }
    let special = (0..m - 1)
        .find(|&k| c.get(path[k], path[k + 1]) * c.get(path[k + 1], path[k]) == 2)
        .unwrap();
    if m == 4 && special == 1 {
        return TypeLabel::F(4);
    }
    if special == 0 || special == m - 2 {
        // End double bond: distinguish by the symmetrizing diagonal, scaled
        // coprime on the component: one short node among long ones or the
        // other way around.
        let comp_d: Vec<i64> = comp.iter().map(|&i| d[i]).collect();
        let g = comp_d.iter().fold(0i64, |acc, &x| {
            num_integer::gcd(acc, x)
        });
        let comp_d: Vec<i64> = comp_d.iter().map(|x| x / g).collect();
        let ones = comp_d.iter().filter(|&&x| x == 1).count();
        let twos = comp_d.iter().filter(|&&x| x == 2).count();
        if ones + twos == m {
            if ones == 1 && twos == m - 1 {
                return TypeLabel::B(m);
            }
            if twos == 1 && ones == m - 1 {
                return TypeLabel::C(m);
            }
        }
    }
    TypeLabel::Unknown
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("the Cartan matrix is not of finite type")]
pub struct NotFiniteType;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("enumeration exceeded the cap of {cap} elements")]
pub struct CapExceeded {
    pub cap: usize,
}

/// The reflection `sigma_i` as a matrix acting on column vectors: row `i`
/// holds `-1` on the diagonal and `-a_ij` elsewhere, so that column `j`
/// maps to `e_j - a_ij e_i`.
pub fn simple_reflection_matrix(c: &CartanMatrix, i: usize) -> IntMatrix {
    let n = c.n();
    let mut t = IntMatrix::identity(n);
    t.set(i, i, -1);
    for j in 0..n {
        if j != i {
            t.set(i, j, -c.get(i, j));
        }
    }
    t
}

/// The full root system of a finite-type matrix: the closure of the simple
/// basis vectors under all simple reflections, together with negatives.
pub fn root_system(c: &CartanMatrix) -> Result<RootSet, NotFiniteType> {
    if !finite_type(c).finite {
        return Err(NotFiniteType);
    }
    let n = c.n();
    let refl: Vec<IntMatrix> = (0..n).map(|i| simple_reflection_matrix(c, i)).collect();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        all.insert(e.clone());
        queue.push(e);
    }
    while let Some(v) = queue.pop() {
        for t in &refl {
            let w = t.apply(&v);
            if all.insert(w.clone()) {
                queue.push(w);
            }
        }
        assert!(all.len() < 1_000_000, "root closure runaway on finite type");
    }
    let positive: BTreeSet<Vec<i64>> = all
        .iter()
        .filter(|v| v.iter().all(|&x| x >= 0))
        .cloned()
        .collect();
    debug_assert_eq!(2 * positive.len(), all.len());
    Ok(RootSet::from_positive(n, positive))
}

/// All elements of the group generated by the simple reflections, by
/// breadth-first closure under right multiplication; fails once more than
/// `cap` distinct elements appear.
pub fn weyl_group(c: &CartanMatrix, cap: usize) -> Result<BTreeSet<IntMatrix>, CapExceeded> {
    let n = c.n();
    let refl: Vec<IntMatrix> = (0..n).map(|i| simple_reflection_matrix(c, i)).collect();
    let mut seen: BTreeSet<IntMatrix> = BTreeSet::new();
    let id = IntMatrix::identity(n);
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in frontier {
            for t in &refl {
                let p = m.mul(t);
                if seen.insert(p.clone()) {
                    if seen.len() > cap {
                        return Err(CapExceeded { cap });
                    }
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    Ok(seen)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected a rank-3 matrix with all off-diagonal entries negative")]
pub struct NotA3Cycle;

/// For a 3-cycle (all off-diagonal entries negative), the trace of
/// `sigma_1 sigma_2 sigma_3` in closed form:
/// `a12 a21 + a13 a31 + a23 a32 - a12 a23 a31 - 3`.
pub fn trace_3cycle(c: &CartanMatrix) -> Result<i64, NotA3Cycle> {
    if c.n() != 3 {
        return Err(NotA3Cycle);
    }
    for i in 0..3 {
        for j in 0..3 {
            if i != j && c.get(i, j) >= 0 {
                return Err(NotA3Cycle);
            }
        }
    }
    let a = |i: usize, j: usize| c.get(i - 1, j - 1);
    Ok(a(1, 2) * a(2, 1) + a(1, 3) * a(3, 1) + a(2, 3) * a(3, 2)
        - a(1, 2) * a(2, 3) * a(3, 1)
        - 3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixOrder {
    Finite(u64),
    ExceedsCap,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("the matrix is not invertible over the integers")]
pub struct NotInvertible;

/// The least `k <= cap` with `M^k = id`, or `ExceedsCap`.  Powers are taken
/// in arbitrary precision, so entry growth of infinite-order matrices is
/// harmless.
pub fn matrix_order(m: &IntMatrix, cap: u64) -> Result<MatrixOrder, NotInvertible> {
    let n = m.n();
    let det = m.det();
    if !(det == BigInt::one() || det == -BigInt::one()) {
        return Err(NotInvertible);
    }
    let base: Vec<BigInt> = m.entries().iter().map(|&x| BigInt::from(x)).collect();
    let id: Vec<BigInt> = (0..n * n)
        .map(|k| {
            if k / n == k % n {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    let mut power = base.clone();
    for k in 1..=cap {
        if power == id {
            return Ok(MatrixOrder::Finite(k));
        }
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let p = &power[i * n + l];
                if p.is_zero() {
                    continue;
                }
                for j in 0..n {
                    next[i * n + j] += p * &base[l * n + j];
                }
            }
        }
        power = next;
    }
    Ok(MatrixOrder::ExceedsCap)
}

/// All lattice vectors with coordinates in `[-box_radius, box_radius]`
/// whose full Weyl-group orbit is sign-coherent (each image has all
/// coordinates of one sign).
pub fn sign_coherent_set(
    c: &CartanMatrix,
    box_radius: i64,
) -> Result<BTreeSet<Vec<i64>>, NotFiniteType> {
    assert!(box_radius >= 1, "box radius must be positive");
    if !finite_type(c).finite {
        return Err(NotFiniteType);
    }
    let n = c.n();
    let group = weyl_group(c, usize::MAX).expect("finite type has a finite Weyl group");
    let coherent = |v: &[i64]| v.iter().all(|&x| x >= 0) || v.iter().all(|&x| x <= 0);
    let mut result = BTreeSet::new();
    let mut v = vec![-box_radius; n];
    loop {
        if group.iter().all(|w| coherent(&w.apply(&v))) {
            result.insert(v.clone());
        }
        // Odometer step through the box.
        let mut k = 0;
        loop {
            if k == n {
                return Ok(result);
            }
            v[k] += 1;
            if v[k] <= box_radius {
                break;
            }
            v[k] = -box_radius;
            k += 1;
        }
    }
}

/// Outcome of the search for a diagonal braiding with prescribed Cartan
/// data.
#[derive(Debug, Clone)]
pub enum Realizability {
    Realizable { witness: BraidingMatrix },
    Unrealizable { reason: String },
}

impl Realizability {
    pub fn witness(&self) -> Option<&BraidingMatrix> {
        match self {
            Realizability::Realizable { witness } => Some(witness),
            Realizability::Unrealizable { .. } => None,
        }
    }
}

/// Decide whether some diagonal braiding over this crate's scalars has `c`
/// as its Cartan data (with the maximal-exponent convention).
///
/// Writing `q_ii = g^{x_i}` on each connected component, the requirement
/// `q_ij q_ji = q_ii^{a_ij} = q_jj^{a_ji}` turns every edge into the
/// equation `a_ij x_i = a_ji x_j`.  A consistent rational solution yields a
/// generic witness with one free parameter per component.  Otherwise the
/// rational solution space is trivial, all diagonal entries must be torsion,
/// and the congruence system is solved completely: diagonalizing the edge
/// relation lattice bounds the torsion order, and every residue solution is
/// checked against the order windows `ord(q_ii) > -a_ij` that keep the
/// prescribed exponents maximal.
pub fn realizable_as_braiding(c: &CartanMatrix) -> Realizability {
    let n = c.n();
    #[derive(Debug)]
    enum CompPlan {
        Generic { exponents: Vec<(usize, i64)> },
        Torsion { order: u32, exponents: Vec<(usize, i64)> },
    }

    let mut plans = Vec::new();
    for comp in connected_components(c) {
        let window = |i: usize| 1 + (0..n).map(|j| -c.get(i, j)).max().unwrap_or(0);
        // Rational spanning-tree propagation from the first node.
        let mut x: Vec<Option<BigRational>> = vec![None; n];
        x[comp[0]] = Some(BigRational::one());
        let mut queue = vec![comp[0]];
        while let Some(i) = queue.pop() {
            let xi = x[i].clone().unwrap();
            for j in c.neighbors(i) {
                if x[j].is_none() {
                    let ratio = BigRational::new(c.get(i, j).into(), c.get(j, i).into());
                    x[j] = Some(xi.clone() * ratio);
                    queue.push(j);
                }
            }
        }
        let consistent = comp.iter().all(|&i| {
            comp.iter().all(|&j| {
                c.get(i, j) == 0
                    || BigRational::from(BigInt::from(c.get(i, j))) * x[i].as_ref().unwrap()
                        == BigRational::from(BigInt::from(c.get(j, i))) * x[j].as_ref().unwrap()
            })
        });
        if consistent {
            // Scale the component exponents to coprime positive integers.
            let values: Vec<BigRational> =
                comp.iter().map(|&i| x[i].clone().unwrap()).collect();
            let denom_lcm = values
                .iter()
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let ints: Vec<BigInt> = values
                .iter()
                .map(|v| (v * BigRational::from(denom_lcm.clone())).to_integer())
                .collect();
            let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            let exponents = comp
                .iter()
                .zip(&ints)
                .map(|(&i, v)| (i, i64::try_from(v / &g).expect("exponent overflow")))
                .collect();
            plans.push(CompPlan::Generic { exponents });
            continue;
        }
        // Only the trivial rational solution: all diagonal entries are
        // torsion.  Solve the congruences completely.
        let index_of = |i: usize| comp.iter().position(|&k| k == i).unwrap();
        let mut rows: Vec<Vec<i128>> = Vec::new();
        for (a, &i) in comp.iter().enumerate() {
            for &j in &comp[a + 1..] {
                if c.get(i, j) != 0 {
                    let mut row = vec![0i128; comp.len()];
                    row[index_of(i)] = c.get(i, j) as i128;
                    row[index_of(j)] = -c.get(j, i) as i128;
                    rows.push(row);
                }
            }
        }
        let (diag, v) = diagonalize_lattice(rows, comp.len());
        assert!(
            diag.iter().all(|&s| s != 0),
            "inconsistent propagation must leave a full-rank relation lattice"
        );
        let n0: i128 = diag.iter().fold(1, |acc, &s| acc.lcm(&s.abs()));
        let mut found = None;
        'outer: for m in divisors_descending(n0) {
            // y_l runs over multiples of m / gcd(m, |s_l|).
            let steps: Vec<i128> = diag.iter().map(|&s| m / m.gcd(&s.abs())).collect();
            let counts: Vec<i128> = steps.iter().map(|&st| m / st).collect();
            let mut idx = vec![0i128; diag.len()];
            loop {
                let y: Vec<i128> = idx
                    .iter()
                    .zip(&steps)
                    .map(|(&u, &st)| (u * st).rem_euclid(m))
                    .collect();
                let xs: Vec<i128> = (0..comp.len())
                    .map(|r| {
                        (0..comp.len())
                            .map(|l| v[r][l] * y[l])
                            .sum::<i128>()
                            .rem_euclid(m)
                    })
                    .collect();
                let ok = comp.iter().enumerate().all(|(a, &i)| {
                    let ord = m / m.gcd(&xs[a]);
                    ord >= window(i) as i128
                });
                if ok {
                    found = Some((m, xs));
                    break 'outer;
                }
                // Odometer over the residue choices.
                let mut k = 0;
                loop {
                    if k == idx.len() {
                        break;
                    }
                    idx[k] += 1;
                    if idx[k] < counts[k] {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if idx.iter().all(|&u| u == 0) {
                    break;
                }
            }
        }
        match found {
            Some((m, xs)) => plans.push(CompPlan::Torsion {
                order: u32::try_from(m).expect("torsion order overflow"),
                exponents: comp
                    .iter()
                    .zip(&xs)
                    .map(|(&i, &x)| (i, x as i64))
                    .collect(),
            }),
            None => {
                return Realizability::Unrealizable {
                    reason: format!(
                        "on the component {:?} the exponent equations force a diagonal entry \
                         of order too small for its row (torsion orders divide {})",
                        comp, n0
                    ),
                };
            }
        }
    }

    // Assemble a witness context: one free parameter per generic component,
    // a single torsion order covering all torsion components.
    let torsion: u32 = plans
        .iter()
        .filter_map(|p| match p {
            CompPlan::Torsion { order, .. } => Some(*order),
            _ => None,
        })
        .fold(1, |acc, m| acc.lcm(&m));
    let torsion = if torsion == 1 { 0 } else { torsion };
    let generic_count = plans
        .iter()
        .filter(|p| matches!(p, CompPlan::Generic { .. }))
        .count();
    let names: Vec<String> = (0..generic_count)
        .map(|k| {
            let base = ["t", "u", "v", "w"];
            base.get(k)
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("t{}", k))
        })
        .collect();
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ctx = ScalarContext::new(torsion, &name_refs);

    let mut diagonal: Vec<Option<UnitMonomial>> = vec![None; n];
    let mut param = 0;
    for plan in &plans {
        match plan {
            CompPlan::Generic { exponents } => {
                for &(i, w) in exponents {
                    diagonal[i] = Some(UnitMonomial::param(&ctx, param).pow(w));
                }
                param += 1;
            }
            CompPlan::Torsion { order, exponents } => {
                let stretch = (torsion / order) as i64;
                for &(i, x) in exponents {
                    diagonal[i] = Some(UnitMonomial::root_of_unity(&ctx, stretch * x));
                }
            }
        }
    }
    let diagonal: Vec<UnitMonomial> = diagonal.into_iter().map(|d| d.unwrap()).collect();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(if i == j {
                diagonal[i].clone()
            } else if i < j {
                diagonal[i].pow(c.get(i, j))
            } else {
                UnitMonomial::one(&ctx)
            });
        }
    }
    let witness = BraidingMatrix::new(&ctx, n, entries);
    debug_assert_eq!(witness.cartan_matrix().as_ref(), Some(c));
    Realizability::Realizable { witness }
}

/// Diagonalize an integer relation matrix by unimodular row and column
/// operations, tracking the column transform `V`: returns the diagonal of
/// `U R V` (padded with zeros up to `cols`) and `V` as rows, such that
/// solutions of `R x = 0 (mod M)` are exactly `x = V y` with
/// `s_l y_l = 0 (mod M)`.
fn diagonalize_lattice(mut rows: Vec<Vec<i128>>, cols: usize) -> (Vec<i128>, Vec<Vec<i128>>) {
    let mut v: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();
    let nrows = rows.len();
    let mut diag = vec![0i128; cols];
    let mut t = 0;
    while t < cols.min(nrows.max(cols)) {
        // Find a pivot of least absolute value in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..nrows {
            for cc in t..cols {
                if rows[r][cc] != 0
                    && pivot.map_or(true, |(pr, pc)| rows[r][cc].abs() < rows[pr][pc].abs())
                {
                    pivot = Some((r, cc));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        rows.swap(t, pr);
        if pc != t {
            for row in rows.iter_mut() {
                row.swap(t, pc);
            }
            v.iter_mut().for_each(|row| row.swap(t, pc));
        }
        // Clear the pivot row and column by Euclidean steps.
        let mut clean = false;
        while !clean {
            clean = true;
            for r in t + 1..nrows {
                if rows[r][t] != 0 {
                    let q = rows[r][t].div_euclid(rows[t][t]);
                    for cc in 0..cols {
                        rows[r][cc] -= q * rows[t][cc];
                    }
                    if rows[r][t] != 0 {
                        rows.swap(t, r);
                        clean = false;
                    }
                }
            }
            for cc in t + 1..cols {
                if rows[t][cc] != 0 {
                    let q = rows[t][cc].div_euclid(rows[t][t]);
                    for r in 0..nrows {
                        let delta = q * rows[r][t];
                        rows[r][cc] -= delta;
                    }
                    for row in v.iter_mut() {
                        let delta = q * row[t];
                        row[cc] -= delta;
                    }
                    if rows[t][cc] != 0 {
                        for row in rows.iter_mut() {
                            row.swap(t, cc);
                        }
                        for row in v.iter_mut() {
                            row.swap(t, cc);
                        }
                        clean = false;
                    }
                }
            }
        }
        diag[t] = rows[t][t].abs();
        t += 1;
    }
    (diag, v)
}

fn divisors_descending(n: i128) -> Vec<i128> {
    let mut out: Vec<i128> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Cycle-shaped generalized Cartan matrices used across tests: a four-node
/// and a five-node cycle whose diagrams are not symmetrizable.
pub mod cycles {
    use super::*;

    pub fn four_cycle() -> CartanMatrix {
        CartanMatrix::from_rows(&[
            &[2, -2, 0, -1],
            &[-1, 2, -1, 0],
            &[0, -1, 2, -2],
            &[-1, 0, -1, 2],
        ])
    }

    pub fn five_cycle() -> CartanMatrix {
        CartanMatrix::from_rows(&[
            &[2, -2, 0, 0, -1],
            &[-1, 2, -1, 0, 0],
            &[0, -1, 2, -1, 0],
            &[0, 0, -1, 2, -1],
            &[-1, 0, 0, -1, 2],
        ])
    }

    /// A 3-cycle with a single entry `-2`; not symmetrizable.
    pub fn three_cycle_minus_two() -> CartanMatrix {
        CartanMatrix::from_rows(&[&[2, -2, -1], &[-1, 2, -1], &[-1, -1, 2]])
    }
}
