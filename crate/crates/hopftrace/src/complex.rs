//! Finite abstract simplicial complexes.
//!
//! A complex is immutable after construction: every operation that "changes"
//! a complex builds a new one. The empty simplex `∅` is always a member,
//! though it is not listed in any dimension bucket (`C_q = 0` for `q < 0`).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};

/// Shared handle; complexes are freely shared across structures and threads.
pub type ComplexHandle = Arc<SimplicialComplex>;

/// A downward-closed family of simplices with facet/cofacet indices.
#[derive(Clone)]
pub struct SimplicialComplex {
    /// `by_dim[q]` lists the q-simplices in lexicographic order.
    by_dim: Vec<Vec<Simplex>>,
    /// Simplex -> position within its dimension bucket.
    positions: HashMap<Simplex, usize>,
    /// Cofacets (codimension-1 cofaces), in canonical order.
    cofacets: HashMap<Simplex, Vec<Simplex>>,
    /// Optional display labels per vertex, used by file round-trips.
    labels: Option<BTreeMap<Vertex, String>>,
    /// Content fingerprint for cheap same-complex checks.
    fingerprint: u64,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint && self.by_dim == other.by_dim
    }
}
impl Eq for SimplicialComplex {}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SimplicialComplex(dim {}, counts {:?})",
            self.dim(),
            self.counts()
        )
    }
}

impl SimplicialComplex {
    /// Builds the downward closure of the given simplices.
    pub fn from_simplices<I: IntoIterator<Item = Simplex>>(simplices: I) -> ComplexHandle {
        let mut all: BTreeSet<Simplex> = BTreeSet::new();
        for s in simplices {
            for f in s.nonempty_faces() {
                all.insert(f);
            }
        }
        Self::from_closed_set(all, None)
    }

    /// Builds a complex from raw vertex-id lists (downward closure taken).
    pub fn from_maximal(maximal: &[Vec<u64>]) -> ComplexHandle {
        Self::from_simplices(
            maximal
                .iter()
                .map(|vs| Simplex::from_ids(vs.iter().copied())),
        )
    }

    pub(crate) fn with_labels(
        simplices: impl IntoIterator<Item = Simplex>,
        labels: BTreeMap<Vertex, String>,
    ) -> ComplexHandle {
        let mut all: BTreeSet<Simplex> = BTreeSet::new();
        for s in simplices {
            for f in s.nonempty_faces() {
                all.insert(f);
            }
        }
        Self::from_closed_set(all, Some(labels))
    }

    fn from_closed_set(
        all: BTreeSet<Simplex>,
        labels: Option<BTreeMap<Vertex, String>>,
    ) -> ComplexHandle {
        let top_dim = all.iter().map(|s| s.dim()).max().unwrap_or(-1);
        let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); (top_dim + 1).max(0) as usize];
        for s in &all {
            by_dim[s.dim() as usize].push(s.clone());
        }
        // BTreeSet order is (dim, lex), so each bucket is already lex-sorted.
        let mut positions = HashMap::new();
        for bucket in &by_dim {
            for (i, s) in bucket.iter().enumerate() {
                positions.insert(s.clone(), i);
            }
        }
        let mut cofacets: HashMap<Simplex, Vec<Simplex>> = HashMap::new();
        for s in &all {
            cofacets.entry(s.clone()).or_default();
        }
        cofacets.entry(Simplex::empty()).or_default();
        for s in &all {
            for f in s.facets() {
                cofacets
                    .get_mut(&f)
                    .expect("closure contains all facets")
                    .push(s.clone());
            }
        }
        for v in cofacets.values_mut() {
            v.sort();
        }
        let fingerprint = fingerprint_of(&by_dim);
        Arc::new(SimplicialComplex {
            by_dim,
            positions,
            cofacets,
            labels,
            fingerprint,
        })
    }

    /// Dimension of the complex; -1 when only `∅` is present.
    pub fn dim(&self) -> i64 {
        self.by_dim.len() as i64 - 1
    }

    /// Simplex counts per dimension, `counts()[q]` = number of q-simplices.
    pub fn counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(|b| b.len()).collect()
    }

    /// Total number of simplices, excluding `∅`.
    pub fn len(&self) -> usize {
        self.by_dim.iter().map(|b| b.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The q-simplices in canonical (lexicographic) order; empty for q out of range.
    pub fn simplices(&self, q: i64) -> &[Simplex] {
        if q < 0 || q >= self.by_dim.len() as i64 {
            &[]
        } else {
            &self.by_dim[q as usize]
        }
    }

    /// All non-empty simplices in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        s.is_empty() || self.positions.contains_key(s)
    }

    /// Position of `s` within its dimension bucket.
    pub fn position(&self, s: &Simplex) -> Option<usize> {
        self.positions.get(s).copied()
    }

    /// Cofacets of `s` in this complex (`∅` has every vertex as a cofacet).
    pub fn cofacets(&self, s: &Simplex) -> &[Simplex] {
        if s.is_empty() {
            return self.simplices(0);
        }
        self.cofacets.get(s).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.simplices(0).iter().map(|s| s.vertices()[0])
    }

    pub fn vertex_count(&self) -> usize {
        self.simplices(0).len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.contains(&Simplex::vertex(v))
    }

    /// Simplices with no cofacet, in canonical order.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        self.iter()
            .filter(|s| self.cofacets(s).is_empty())
            .cloned()
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(q, b)| {
                if q % 2 == 0 {
                    b.len() as i64
                } else {
                    -(b.len() as i64)
                }
            })
            .sum()
    }

    pub fn label_of(&self, v: Vertex) -> Option<&str> {
        self.labels
            .as_ref()
            .and_then(|m| m.get(&v))
            .map(|s| s.as_str())
    }

    pub fn labels(&self) -> Option<&BTreeMap<Vertex, String>> {
        self.labels.as_ref()
    }
}

fn fingerprint_of(by_dim: &[Vec<Simplex>]) -> u64 {
    use std::hash::{Hash, Hasher};
    let mut h = std::collections::hash_map::DefaultHasher::new();
    for bucket in by_dim {
        bucket.len().hash(&mut h);
        for s in bucket {
            for v in s.vertices() {
                v.0.hash(&mut h);
            }
            u64::MAX.hash(&mut h);
        }
    }
    h.finish()
}

/// Vertex translations out of a join: how the two factors embed in `K1 * K2`.
#[derive(Clone, Debug)]
pub struct JoinEmbedding {
    pub left: BTreeMap<Vertex, Vertex>,
    pub right: BTreeMap<Vertex, Vertex>,
}

impl JoinEmbedding {
    pub fn left_simplex(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|v| self.left[v]))
    }
    pub fn right_simplex(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|v| self.right[v]))
    }
    /// `σ ⊔ τ` for `σ` in the left factor and `τ` in the right factor.
    pub fn join_simplex(&self, sigma: &Simplex, tau: &Simplex) -> Simplex {
        self.left_simplex(sigma).union(&self.right_simplex(tau))
    }
}

/// Join of two complexes: `{σ ⊔ τ}`. Vertex sets are made disjoint by
/// namespacing, with all left vertices ordered before all right vertices.
pub fn join(k1: &SimplicialComplex, k2: &SimplicialComplex) -> (ComplexHandle, JoinEmbedding) {
    let left: BTreeMap<Vertex, Vertex> = k1
        .vertices()
        .enumerate()
        .map(|(i, v)| (v, Vertex(i as u64)))
        .collect();
    let offset = left.len() as u64;
    let right: BTreeMap<Vertex, Vertex> = k2
        .vertices()
        .enumerate()
        .map(|(i, v)| (v, Vertex(offset + i as u64)))
        .collect();
    let embedding = JoinEmbedding { left, right };

    let mut simplices = Vec::new();
    // σ ⊔ τ over all pairs, including σ = ∅ or τ = ∅ (closure fills the rest,
    // but maximal-by-maximal pairs suffice and keep the set small)
    for sigma in k1.maximal_simplices() {
        for tau in k2.maximal_simplices() {
            simplices.push(embedding.join_simplex(&sigma, &tau));
        }
    }
    if k1.is_empty() {
        simplices.extend(
            k2.maximal_simplices()
                .iter()
                .map(|t| embedding.right_simplex(t)),
        );
    }
    if k2.is_empty() {
        simplices.extend(
            k1.maximal_simplices()
                .iter()
                .map(|s| embedding.left_simplex(s)),
        );
    }
    (SimplicialComplex::from_simplices(simplices), embedding)
}

/// Cone `x * K`: adds `σ ∪ {x}` for every `σ ∈ K` (including `∅`).
pub fn cone(apex: Vertex, k: &SimplicialComplex) -> Result<ComplexHandle> {
    if k.has_vertex(apex) {
        return Err(Error::Domain(format!(
            "cone apex {apex} already a vertex of the complex"
        )));
    }
    let mut simplices: Vec<Simplex> = vec![Simplex::vertex(apex)];
    for s in k.maximal_simplices() {
        simplices.push(s.with_vertex(apex).expect("apex is fresh"));
    }
    Ok(SimplicialComplex::from_simplices(simplices))
}

/// A fresh vertex id not used by the complex.
pub fn fresh_vertex(k: &SimplicialComplex) -> Vertex {
    Vertex(k.vertices().map(|v| v.0).max().map_or(0, |m| m + 1))
}

/// The q-skeleton of the full simplex on `n + 1` vertices `0..=n`.
///
/// With this convention `skeleton_of_simplex(n, n - 1)` is the boundary of
/// the n-simplex, an (n-1)-sphere.
pub fn skeleton_of_simplex(n: i64, q: i64) -> Result<ComplexHandle> {
    if q < 0 || q > n {
        return Err(Error::Domain(format!(
            "skeleton dimension q={q} out of range 0..={n}"
        )));
    }
    let verts: Vec<u64> = (0..=n as u64).collect();
    let mut top = Vec::new();
    subsets_of_size(&verts, (q + 1) as usize, &mut top);
    Ok(SimplicialComplex::from_maximal(&top))
}

fn subsets_of_size(items: &[u64], k: usize, out: &mut Vec<Vec<u64>>) {
    let n = items.len();
    if k == 0 || k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Why a complex fails to be a pseudomanifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudomanifoldFailure {
    /// A maximal simplex of dimension below the top dimension.
    NotPure { witness: Simplex },
    /// A (d-1)-simplex contained in `count != 2` top simplices.
    FaceCount { witness: Simplex, count: usize },
    /// Facet-adjacency graph of top simplices is disconnected.
    Disconnected { component: Vec<Simplex> },
    /// No simplices at all.
    Empty,
}

/// Checks the pseudomanifold conditions: pure, every (d-1)-simplex in exactly
/// two top simplices, top simplices facet-connected.
pub fn is_pseudomanifold(k: &SimplicialComplex) -> std::result::Result<(), PseudomanifoldFailure> {
    if k.is_empty() {
        return Err(PseudomanifoldFailure::Empty);
    }
    let d = k.dim();
    for s in k.maximal_simplices() {
        if s.dim() != d {
            return Err(PseudomanifoldFailure::NotPure { witness: s });
        }
    }
    let tops = k.simplices(d);
    if d == 0 {
        // ∅ is the single (-1)-simplex; it must lie in exactly two vertices.
        if tops.len() != 2 {
            return Err(PseudomanifoldFailure::FaceCount {
                witness: Simplex::empty(),
                count: tops.len(),
            });
        }
        return Ok(());
    }
    for f in k.simplices(d - 1) {
        let count = k.cofacets(f).len();
        if count != 2 {
            return Err(PseudomanifoldFailure::FaceCount {
                witness: f.clone(),
                count,
            });
        }
    }
    // connectivity of the facet-adjacency graph
    let index: HashMap<&Simplex, usize> = tops.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut seen = vec![false; tops.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for f in tops[i].facets() {
            for nb in k.cofacets(&f) {
                let j = index[nb];
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    if seen.iter().all(|&b| b) {
        Ok(())
    } else {
        let component = tops
            .iter()
            .zip(&seen)
            .filter(|(_, &s)| s)
            .map(|(t, _)| t.clone())
            .collect();
        Err(PseudomanifoldFailure::Disconnected { component })
    }
}

/// Orders the vertices of a 1-dimensional pseudomanifold (a circle) along
/// the cycle, starting at `start`, second vertex chosen as `towards` (or
/// the smaller neighbor when `None`).
pub fn circle_order(
    k: &SimplicialComplex,
    start: Vertex,
    towards: Option<Vertex>,
) -> Result<Vec<Vertex>> {
    if k.dim() != 1 || is_pseudomanifold(k).is_err() {
        return Err(Error::Domain(
            "circle_order requires a 1-dimensional pseudomanifold".into(),
        ));
    }
    let neighbors = |v: Vertex| -> Vec<Vertex> {
        k.cofacets(&Simplex::vertex(v))
            .iter()
            .flat_map(|e| e.vertices().iter().copied())
            .filter(|&w| w != v)
            .collect()
    };
    let first = neighbors(start);
    let second = match towards {
        Some(t) if first.contains(&t) => t,
        Some(t) => {
            return Err(Error::Domain(format!(
                "vertex {t} is not adjacent to start {start}"
            )))
        }
        None => *first.iter().min().expect("circle vertex has two neighbors"),
    };
    let mut order = vec![start, second];
    loop {
        let cur = *order.last().unwrap();
        let prev = order[order.len() - 2];
        let next = neighbors(cur)
            .into_iter()
            .find(|&w| w != prev)
            .expect("degree 2");
        if next == start {
            break;
        }
        order.push(next);
    }
    if order.len() != k.vertex_count() {
        return Err(Error::Domain("complex is not a single cycle".into()));
    }
    Ok(order)
}

/// The cycle `C_n` on vertices `0..n` with edges `[i, i+1 mod n]`.
pub fn cycle_complex(n: u64) -> Result<ComplexHandle> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<Vec<u64>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    Ok(SimplicialComplex::from_maximal(&edges))
}
