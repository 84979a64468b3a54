//! Vertices and abstract simplices.
//!
//! A simplex is stored as its strictly increasing vertex list; the empty
//! list is the empty simplex `∅` of dimension `-1`. The global vertex order
//! (`u64` order) is the canonical orientation: every sign in the crate is
//! derived from positions in this order.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A vertex of a simplicial complex, identified by a totally ordered id.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vertex(pub u64);

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for Vertex {
    fn from(id: u64) -> Self {
        Vertex(id)
    }
}

/// An abstract simplex: a strictly increasing list of vertices.
///
/// The representative is unique per vertex set, so `Simplex` values compare
/// and hash by content. Ordering is `(dimension, lexicographic)`, which is
/// the canonical order used everywhere (bases, serialization, tie-breaks).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex {
    vertices: Vec<Vertex>,
}

impl Simplex {
    /// The empty simplex `∅` (dimension -1).
    pub fn empty() -> Self {
        Simplex {
            vertices: Vec::new(),
        }
    }

    /// Builds a simplex from an arbitrary vertex list; sorts and dedups.
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        let mut vs: Vec<Vertex> = vertices.into_iter().collect();
        vs.sort_unstable();
        vs.dedup();
        Simplex { vertices: vs }
    }

    /// Builds a simplex from raw ids.
    pub fn from_ids<I: IntoIterator<Item = u64>>(ids: I) -> Self {
        Self::new(ids.into_iter().map(Vertex))
    }

    /// A single vertex as a 0-simplex.
    pub fn vertex(v: Vertex) -> Self {
        Simplex { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Dimension: number of vertices minus one; `∅` has dimension -1.
    pub fn dim(&self) -> i64 {
        self.vertices.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Set inclusion `self ⊆ other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.vertices.len() > other.vertices.len() {
            return false;
        }
        // both sorted: linear merge scan
        let mut it = other.vertices.iter();
        'outer: for v in &self.vertices {
            for w in it.by_ref() {
                match w.cmp(v) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// `self ⊆ other` with `dim(self) = dim(other) - 1`.
    pub fn is_facet_of(&self, other: &Simplex) -> bool {
        self.vertices.len() + 1 == other.vertices.len() && self.is_face_of(other)
    }

    /// All facets (codimension-1 faces), including `∅` for a vertex.
    pub fn facets(&self) -> Vec<Simplex> {
        (0..self.vertices.len()).map(|i| self.delete(i)).collect()
    }

    /// The facet obtained by deleting the `i`-th vertex (canonical order).
    pub fn delete(&self, i: usize) -> Simplex {
        let mut vs = self.vertices.clone();
        vs.remove(i);
        Simplex { vertices: vs }
    }

    /// Position of `v` in the canonical vertex order of this simplex.
    pub fn vertex_position(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Union of two simplices (vertex sets must be disjoint for a join).
    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::new(self.vertices.iter().chain(other.vertices.iter()).copied())
    }

    /// Inserts one vertex; `None` if already present.
    pub fn with_vertex(&self, v: Vertex) -> Option<Simplex> {
        if self.contains_vertex(v) {
            return None;
        }
        let mut vs = self.vertices.clone();
        let pos = vs.binary_search(&v).unwrap_err();
        vs.insert(pos, v);
        Some(Simplex { vertices: vs })
    }

    /// All non-empty subsets, i.e. the faces of dimension `>= 0`.
    pub fn nonempty_faces(&self) -> Vec<Simplex> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u64..(1u64 << n) {
            let vs: Vec<Vertex> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.vertices[i])
                .collect();
            out.push(Simplex { vertices: vs });
        }
        out
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vertices.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The incidence number `[σ, τ]`: `(-1)^i` when `τ` is `σ` with its `i`-th
/// vertex deleted, `0` when `τ` is not a facet of `σ`. Total on all pairs.
pub fn incidence_number(sigma: &Simplex, tau: &Simplex) -> i64 {
    if tau.vertices.len() + 1 != sigma.vertices.len() || !tau.is_face_of(sigma) {
        return 0;
    }
    // exactly one vertex of sigma is missing from tau
    for (i, v) in sigma.vertices.iter().enumerate() {
        if !tau.contains_vertex(*v) {
            return if i % 2 == 0 { 1 } else { -1 };
        }
    }
    unreachable!("tau is a proper facet, one vertex must be missing")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ids: &[u64]) -> Simplex {
        Simplex::from_ids(ids.iter().copied())
    }

    #[test]
    fn incidence_deleted_vertex_sign() {
        assert_eq!(incidence_number(&s(&[0, 1, 2]), &s(&[0, 2])), -1);
        assert_eq!(incidence_number(&s(&[0, 1]), &s(&[2])), 0);
        assert_eq!(incidence_number(&s(&[0, 1, 2, 3]), &s(&[0, 1, 3])), 1);
    }

    #[test]
    fn incidence_vertex_with_empty() {
        assert_eq!(incidence_number(&s(&[7]), &Simplex::empty()), 1);
        assert_eq!(incidence_number(&s(&[0, 1]), &Simplex::empty()), 0);
    }

    #[test]
    fn incidence_nonzero_iff_facet() {
        let top = s(&[0, 1, 2, 3]);
        for f in top.nonempty_faces() {
            let inc = incidence_number(&top, &f);
            assert_eq!(inc != 0, f.is_facet_of(&top), "{f:?}");
        }
    }

    #[test]
    fn canonical_order_is_dim_then_lex() {
        let mut v = vec![s(&[0, 2]), s(&[3]), s(&[0, 1]), Simplex::empty(), s(&[1])];
        v.sort();
        assert_eq!(
            v,
            vec![Simplex::empty(), s(&[1]), s(&[3]), s(&[0, 1]), s(&[0, 2])]
        );
    }

    #[test]
    fn face_relation() {
        assert!(s(&[0, 2]).is_face_of(&s(&[0, 1, 2])));
        assert!(!s(&[0, 3]).is_face_of(&s(&[0, 1, 2])));
        assert!(Simplex::empty().is_face_of(&s(&[4])));
        assert!(Simplex::empty().is_facet_of(&s(&[4])));
    }
}
