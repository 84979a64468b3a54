//! Discrete vector fields, acyclicity certificates, and trajectories.
//!
//! A discrete vector field pairs simplices with cofacets, each simplex in at
//! most one pair; the pair `(∅, v)` is allowed and makes `v` critical. A
//! field is a gradient field when no dimension admits a nontrivial closed
//! trajectory, certified here by a topological order of the per-dimension
//! trajectory digraphs.
//!
//! Trajectories never traverse the `(∅, v)` pair: descending trajectories
//! live on pairs of dimensions `(q-1, q)` with `q >= 1`, and co-trajectories
//! from vertices use only (vertex, edge) pairs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::chain::mul_coeff;
use crate::complex::ComplexHandle;
use crate::error::{Error, Result};
use crate::simplex::{incidence_number, Simplex};

/// A discrete vector field on a fixed complex.
#[derive(Clone)]
pub struct DiscreteVectorField {
    complex: ComplexHandle,
    /// α -> β with α a facet of β (α may be ∅, then β is a vertex).
    up: BTreeMap<Simplex, Simplex>,
    /// β -> α, inverse of `up`.
    down: BTreeMap<Simplex, Simplex>,
}

impl fmt::Debug for DiscreteVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiscreteVectorField({} pairs)", self.up.len())
    }
}

/// How a pair set fails to be a discrete vector field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DvfViolation {
    NotInComplex { simplex: Simplex },
    NotAFacet { alpha: Simplex, beta: Simplex },
    DoublyMatched { simplex: Simplex },
}

impl fmt::Display for DvfViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DvfViolation::NotInComplex { simplex } => {
                write!(f, "simplex {simplex} is not in the complex")
            }
            DvfViolation::NotAFacet { alpha, beta } => {
                write!(f, "{alpha} is not a facet of {beta}")
            }
            DvfViolation::DoublyMatched { simplex } => {
                write!(f, "simplex {simplex} occurs in more than one pair")
            }
        }
    }
}

impl DiscreteVectorField {
    /// Builds a field from pairs, reporting the first violation if any.
    pub fn new(
        complex: ComplexHandle,
        pairs: impl IntoIterator<Item = (Simplex, Simplex)>,
    ) -> std::result::Result<Self, DvfViolation> {
        let mut up = BTreeMap::new();
        let mut down = BTreeMap::new();
        let mut seen: HashMap<Simplex, ()> = HashMap::new();
        for (alpha, beta) in pairs {
            for s in [&alpha, &beta] {
                if !complex.contains(s) {
                    return Err(DvfViolation::NotInComplex { simplex: s.clone() });
                }
            }
            if !alpha.is_facet_of(&beta) {
                return Err(DvfViolation::NotAFacet { alpha, beta });
            }
            for s in [&alpha, &beta] {
                if seen.insert(s.clone(), ()).is_some() {
                    return Err(DvfViolation::DoublyMatched { simplex: s.clone() });
                }
            }
            up.insert(alpha.clone(), beta.clone());
            down.insert(beta, alpha);
        }
        Ok(DiscreteVectorField { complex, up, down })
    }

    pub fn empty(complex: ComplexHandle) -> Self {
        DiscreteVectorField {
            complex,
            up: BTreeMap::new(),
            down: BTreeMap::new(),
        }
    }

    pub fn complex(&self) -> &ComplexHandle {
        &self.complex
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    /// Pairs in canonical order of the lower simplex.
    pub fn pairs(&self) -> impl Iterator<Item = (&Simplex, &Simplex)> {
        self.up.iter()
    }

    /// `V(α)`: the cofacet matched above `α`.
    pub fn matched_up(&self, alpha: &Simplex) -> Option<&Simplex> {
        self.up.get(alpha)
    }

    /// The facet matched below `β`.
    pub fn matched_down(&self, beta: &Simplex) -> Option<&Simplex> {
        self.down.get(beta)
    }

    /// The vertex paired with `∅`, if present.
    pub fn vertex_paired_with_empty(&self) -> Option<&Simplex> {
        self.up.get(&Simplex::empty())
    }

    /// A non-empty simplex is critical when it is in no pair, or when it is
    /// a vertex paired with `∅`.
    pub fn is_critical(&self, s: &Simplex) -> bool {
        debug_assert!(!s.is_empty());
        match (self.up.contains_key(s), self.down.get(s)) {
            (false, None) => true,
            (false, Some(alpha)) => alpha.is_empty(),
            _ => false,
        }
    }

    /// Critical simplices per dimension, plus the `U_q`/`D_q` partition.
    /// A vertex paired with `∅` is listed as critical, not in `U_0`/`D_0`.
    pub fn census(&self) -> MatchingCensus {
        let k = &self.complex;
        let dims = (k.dim() + 1).max(0) as usize;
        let mut critical = vec![Vec::new(); dims];
        let mut up = vec![Vec::new(); dims];
        let mut down = vec![Vec::new(); dims];
        for q in 0..dims {
            for s in k.simplices(q as i64) {
                if self.is_critical(s) {
                    critical[q].push(s.clone());
                } else if self.up.contains_key(s) {
                    up[q].push(s.clone());
                } else if self.down.contains_key(s) {
                    down[q].push(s.clone());
                }
            }
        }
        MatchingCensus { critical, up, down }
    }

    /// All critical simplices in canonical order.
    pub fn critical_simplices(&self) -> Vec<Simplex> {
        self.census().critical.into_iter().flatten().collect()
    }

    /// The digraph driving descending trajectories in dimension `q`:
    /// `β -> β'` whenever the facet `α` matched below `β'` satisfies
    /// `α ⊊ β`, `β ≠ β'`. The `(∅, v)` pair contributes no edges.
    pub(crate) fn trajectory_digraph(&self, q: i64) -> Digraph {
        let nodes = self.complex.simplices(q);
        let index: HashMap<&Simplex, usize> =
            nodes.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut edges: Vec<Vec<(usize, Step)>> = vec![Vec::new(); nodes.len()];
        for (beta_prime, alpha) in &self.down {
            if beta_prime.dim() != q || alpha.is_empty() {
                continue;
            }
            let j = index[beta_prime];
            for beta in self.complex.cofacets(alpha) {
                if beta == beta_prime {
                    continue;
                }
                let i = index[beta];
                edges[i].push((j, Step { via: alpha.clone() }));
            }
        }
        Digraph {
            nodes: nodes.to_vec(),
            edges,
        }
    }

    /// The digraph driving co-trajectories in dimension `q`:
    /// `β -> β'` whenever `β'` is matched up with `τ = V(β')` and
    /// `β ⊊ τ`, `β ≠ β'`.
    pub(crate) fn co_trajectory_digraph(&self, q: i64) -> Digraph {
        let nodes = self.complex.simplices(q);
        let index: HashMap<&Simplex, usize> =
            nodes.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut edges: Vec<Vec<(usize, Step)>> = vec![Vec::new(); nodes.len()];
        for (beta_prime, tau) in &self.up {
            if beta_prime.dim() != q || beta_prime.is_empty() {
                continue;
            }
            let j = index[beta_prime];
            for beta in tau.facets() {
                if beta != *beta_prime {
                    edges[index[&beta]].push((j, Step { via: tau.clone() }));
                }
            }
        }
        Digraph {
            nodes: nodes.to_vec(),
            edges,
        }
    }

    /// Certifies acyclicity of every per-dimension trajectory digraph, or
    /// extracts a closed trajectory.
    pub fn gradient_certificate(
        &self,
    ) -> std::result::Result<GradientCertificate, ClosedTrajectory> {
        let mut orders = Vec::new();
        for q in 0..=self.complex.dim().max(-1) {
            let g = self.trajectory_digraph(q);
            match g.topological_order() {
                Ok(order) => orders.push(order.into_iter().map(|i| g.nodes[i].clone()).collect()),
                Err(cycle) => {
                    return Err(self.cycle_to_trajectory(&g, cycle));
                }
            }
        }
        Ok(GradientCertificate { orders })
    }

    /// Convenience wrapper: `Ok(cert)` when gradient, `Err` with witness text
    /// otherwise.
    pub fn require_gradient(&self) -> Result<GradientCertificate> {
        self.gradient_certificate().map_err(|w| {
            Error::Domain(format!(
                "field is not a gradient vector field: closed trajectory {w}"
            ))
        })
    }

    fn cycle_to_trajectory(&self, g: &Digraph, cycle: Vec<usize>) -> ClosedTrajectory {
        // cycle = node indices v0 -> v1 -> ... -> v0
        let mut faces = Vec::new();
        for (pos, &i) in cycle.iter().enumerate() {
            let beta = g.nodes[i].clone();
            faces.push(beta);
            let next = cycle[(pos + 1) % cycle.len()];
            let step = g.edges[i]
                .iter()
                .find(|(j, _)| *j == next)
                .expect("cycle edge exists in digraph");
            faces.push(step.1.via.clone());
        }
        faces.push(g.nodes[cycle[0]].clone());
        ClosedTrajectory { faces }
    }
}

/// Per-dimension partition `S_q = Crit_q ⊔ U_q ⊔ D_q`.
#[derive(Clone, Debug)]
pub struct MatchingCensus {
    pub critical: Vec<Vec<Simplex>>,
    pub up: Vec<Vec<Simplex>>,
    pub down: Vec<Vec<Simplex>>,
}

impl MatchingCensus {
    pub fn critical_counts(&self) -> Vec<usize> {
        self.critical.iter().map(|v| v.len()).collect()
    }
    pub fn total_critical(&self) -> usize {
        self.critical.iter().map(|v| v.len()).sum()
    }
}

/// Witness that every trajectory digraph is acyclic: a topological order of
/// the q-simplices for each dimension.
#[derive(Clone, Debug)]
pub struct GradientCertificate {
    orders: Vec<Vec<Simplex>>,
}

impl GradientCertificate {
    pub fn order(&self, q: i64) -> &[Simplex] {
        if q < 0 || q as usize >= self.orders.len() {
            &[]
        } else {
            &self.orders[q as usize]
        }
    }
}

/// A nontrivial closed trajectory `β_0, α_1, β_1, …, β_r = β_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedTrajectory {
    pub faces: Vec<Simplex>,
}

impl fmt::Display for ClosedTrajectory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.faces.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if i % 2 == 1 { "→" } else { "↣" })?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Whether a trajectory descends through matched pairs or ascends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

/// An explicit (co-)trajectory with its ±1 weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trajectory {
    pub direction: Direction,
    /// Alternating faces `β_0, α_1/τ_1, β_1, …, β_r`.
    pub faces: Vec<Simplex>,
    pub weight: i64,
}

impl Trajectory {
    pub fn initial(&self) -> &Simplex {
        self.faces.first().expect("trajectory has an initial face")
    }
    pub fn terminal(&self) -> &Simplex {
        self.faces.last().expect("trajectory has a terminal face")
    }
    pub fn is_trivial(&self) -> bool {
        self.faces.len() == 1
    }

    /// Checks the alternating-sequence conditions against a field and that
    /// the stored weight is the product of the step weights.
    pub fn validate(&self, v: &DiscreteVectorField) -> Result<()> {
        if self.faces.len().is_multiple_of(2) || self.faces.is_empty() {
            return Err(Error::domain("trajectory must alternate β, α, β, …, β"));
        }
        let q = self.initial().dim();
        let mut weight = 1i64;
        for step in self.faces.windows(3).step_by(2) {
            let (beta, mid, beta_next) = (&step[0], &step[1], &step[2]);
            if beta.dim() != q || beta_next.dim() != q || beta == beta_next {
                return Err(Error::domain(
                    "consecutive faces must be distinct q-simplices",
                ));
            }
            match self.direction {
                Direction::Down => {
                    if mid.dim() != q - 1 || !mid.is_facet_of(beta) {
                        return Err(Error::Domain(format!("{mid} is not a facet of {beta}")));
                    }
                    if v.matched_up(mid) != Some(beta_next) {
                        return Err(Error::Domain(format!("({mid}, {beta_next}) is not a pair")));
                    }
                    weight = mul_coeff(weight, step_weight_down(beta, mid, beta_next)?, "weight")?;
                }
                Direction::Up => {
                    if mid.dim() != q + 1 || !beta.is_facet_of(mid) {
                        return Err(Error::Domain(format!("{beta} is not a facet of {mid}")));
                    }
                    if v.matched_up(beta_next) != Some(mid) {
                        return Err(Error::Domain(format!("({beta_next}, {mid}) is not a pair")));
                    }
                    weight = mul_coeff(weight, step_weight_up(beta, mid, beta_next)?, "weight")?;
                }
            }
        }
        if weight != self.weight {
            return Err(Error::Domain(format!(
                "stored weight {} differs from the step product {weight}",
                self.weight
            )));
        }
        Ok(())
    }
}

/// Weight of one descending step `β --α↣ β'`: `-[β,α]·[β',α]`.
pub(crate) fn step_weight_down(
    beta: &Simplex,
    alpha: &Simplex,
    beta_prime: &Simplex,
) -> Result<i64> {
    mul_coeff(
        -incidence_number(beta, alpha),
        incidence_number(beta_prime, alpha),
        "trajectory weight",
    )
}

/// Weight of one ascending step `β --τ↢ β'`: `-[τ,β]·[τ,β']`.
pub(crate) fn step_weight_up(beta: &Simplex, tau: &Simplex, beta_prime: &Simplex) -> Result<i64> {
    mul_coeff(
        -incidence_number(tau, beta),
        incidence_number(tau, beta_prime),
        "trajectory weight",
    )
}

/// Internal digraph with step labels (the matched simplex used by the step).
pub(crate) struct Digraph {
    pub nodes: Vec<Simplex>,
    pub edges: Vec<Vec<(usize, Step)>>,
}

#[derive(Clone)]
pub(crate) struct Step {
    pub via: Simplex,
}

impl Digraph {
    /// Kahn topological sort; on a cycle, returns one directed cycle found
    /// by depth-first search over the unresolved nodes.
    pub fn topological_order(&self) -> std::result::Result<Vec<usize>, Vec<usize>> {
        let n = self.nodes.len();
        let mut indegree = vec![0usize; n];
        for out in &self.edges {
            for (j, _) in out {
                indegree[*j] += 1;
            }
        }
        let mut queue: std::collections::VecDeque<usize> =
            (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for (j, _) in &self.edges[i] {
                indegree[*j] -= 1;
                if indegree[*j] == 0 {
                    queue.push_back(*j);
                }
            }
        }
        if order.len() == n {
            return Ok(order);
        }
        Err(self.find_cycle(&indegree))
    }

    /// DFS back-edge cycle among nodes with unresolved indegree.
    fn find_cycle(&self, indegree: &[usize]) -> Vec<usize> {
        let n = self.nodes.len();
        let alive: Vec<bool> = (0..n).map(|i| indegree[i] > 0).collect();
        let mut color = vec![0u8; n]; // 0 = white, 1 = on stack, 2 = done
        let mut parent = vec![usize::MAX; n];
        for start in 0..n {
            if !alive[start] || color[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            color[start] = 1;
            while let Some(&mut (node, ref mut edge_idx)) = stack.last_mut() {
                if let Some((j, _)) = self.edges[node].get(*edge_idx) {
                    *edge_idx += 1;
                    let j = *j;
                    if !alive[j] || color[j] == 2 {
                        continue;
                    }
                    if color[j] == 1 {
                        // back edge node -> j: the cycle is j, …, node
                        let mut tail = vec![node];
                        let mut cur = node;
                        while cur != j {
                            cur = parent[cur];
                            tail.push(cur);
                        }
                        tail.reverse();
                        return tail;
                    }
                    color[j] = 1;
                    parent[j] = node;
                    stack.push((j, 0));
                } else {
                    color[node] = 2;
                    stack.pop();
                }
            }
        }
        unreachable!("topological sort failed, a cycle must exist")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::cycle_complex;

    fn s(ids: &[u64]) -> Simplex {
        Simplex::from_ids(ids.iter().copied())
    }

    fn c6_field() -> DiscreteVectorField {
        let c6 = cycle_complex(6).unwrap();
        DiscreteVectorField::new(
            c6,
            [
                (s(&[1]), s(&[0, 1])),
                (s(&[2]), s(&[1, 2])),
                (s(&[3]), s(&[3, 4])),
                (s(&[4]), s(&[4, 5])),
                (s(&[5]), s(&[0, 5])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn empty_field_is_valid_and_gradient() {
        let k = cycle_complex(3).unwrap();
        let v = DiscreteVectorField::empty(k.clone());
        assert!(v.gradient_certificate().is_ok());
        assert_eq!(v.critical_simplices().len(), k.len());
    }

    #[test]
    fn doubly_matched_is_rejected() {
        let k = crate::complex::SimplicialComplex::from_maximal(&[vec![0, 1, 2]]);
        let err = DiscreteVectorField::new(k, [(s(&[0]), s(&[0, 1])), (s(&[0]), s(&[0, 2]))])
            .unwrap_err();
        assert_eq!(err, DvfViolation::DoublyMatched { simplex: s(&[0]) });
    }

    #[test]
    fn facet_condition_is_enforced() {
        let k = crate::complex::SimplicialComplex::from_maximal(&[vec![0, 1, 2]]);
        let err = DiscreteVectorField::new(k, [(s(&[0]), s(&[1, 2]))]).unwrap_err();
        assert!(matches!(err, DvfViolation::NotAFacet { .. }));
    }

    #[test]
    fn valid_field_on_triangle() {
        let k = crate::complex::SimplicialComplex::from_maximal(&[vec![0, 1, 2]]);
        let v = DiscreteVectorField::new(k, [(s(&[0, 1]), s(&[0, 1, 2])), (s(&[2]), s(&[0, 2]))])
            .unwrap();
        assert!(v.gradient_certificate().is_ok());
    }

    #[test]
    fn cyclic_field_yields_closed_trajectory() {
        let c3 = cycle_complex(3).unwrap();
        let v = DiscreteVectorField::new(
            c3,
            [
                (s(&[0]), s(&[0, 1])),
                (s(&[1]), s(&[1, 2])),
                (s(&[2]), s(&[0, 2])),
            ],
        )
        .unwrap();
        let w = v.gradient_certificate().unwrap_err();
        // an alternating cycle through all three edges and all three vertices
        assert_eq!(w.faces.len(), 7);
        assert_eq!(w.faces.first(), w.faces.last());
        for (i, f) in w.faces.iter().enumerate() {
            assert_eq!(f.dim(), if i % 2 == 0 { 1 } else { 0 });
        }
    }

    #[test]
    fn c6_field_census() {
        let v = c6_field();
        let cert = v.gradient_certificate().unwrap();
        assert!(!cert.order(1).is_empty());
        let census = v.census();
        assert_eq!(census.critical[0], vec![s(&[0])]);
        assert_eq!(census.critical[1], vec![s(&[2, 3])]);
        assert_eq!(census.up[0].len(), 5);
        assert_eq!(census.down[1].len(), 5);
    }

    #[test]
    fn enumerated_trajectories_validate() {
        let v = c6_field();
        for sigma in v.critical_simplices() {
            for dir in [crate::dvf::Direction::Down, crate::dvf::Direction::Up] {
                for t in crate::morse::enumerate_trajectories(&v, &sigma, dir, 10_000).unwrap() {
                    t.validate(&v).unwrap();
                }
            }
        }
        // a tampered weight is rejected
        let mut t = crate::morse::enumerate_trajectories(
            &v,
            &s(&[2, 3]),
            crate::dvf::Direction::Down,
            10_000,
        )
        .unwrap()
        .into_iter()
        .find(|t| !t.is_trivial())
        .unwrap();
        t.weight = -t.weight;
        assert!(t.validate(&v).is_err());
    }

    #[test]
    fn empty_pair_vertex_is_critical() {
        let k = crate::complex::SimplicialComplex::from_maximal(&[vec![0], vec![1]]);
        let v = DiscreteVectorField::new(k, [(Simplex::empty(), s(&[0]))]).unwrap();
        let census = v.census();
        assert_eq!(census.critical[0], vec![s(&[0]), s(&[1])]);
        assert!(census.up[0].is_empty());
        assert!(census.down[0].is_empty());
        assert!(v.gradient_certificate().is_ok());
    }
}
