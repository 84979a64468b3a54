//! Barycentric subdivision and its companion map.
//!
//! `Bd(K)` has one vertex per non-empty simplex of `K`; its simplices are the
//! chains `σ_0 ⊊ … ⊊ σ_n`. Barycenter vertices are assigned consecutive ids
//! in the `(dimension, lexicographic)` order of their originating simplices,
//! so the canonical vertex order of `Bd(K)` agrees with the canonical simplex
//! order of `K`. The [`BdMap`] records the correspondence both ways.

use std::collections::BTreeMap;

use crate::complex::{ComplexHandle, SimplicialComplex};
use crate::simplex::{Simplex, Vertex};

/// Companion data of one barycentric subdivision step.
#[derive(Clone, Debug)]
pub struct BdMap {
    to_vertex: BTreeMap<Simplex, Vertex>,
    from_vertex: BTreeMap<Vertex, Simplex>,
}

impl BdMap {
    /// The barycenter vertex `v_σ` of a non-empty simplex of the base.
    pub fn vertex_of(&self, sigma: &Simplex) -> Option<Vertex> {
        self.to_vertex.get(sigma).copied()
    }

    /// The base simplex a barycenter vertex came from.
    pub fn simplex_of(&self, v: Vertex) -> Option<&Simplex> {
        self.from_vertex.get(&v)
    }

    /// Translates a flag of base simplices into a simplex of `Bd(K)`.
    pub fn flag_simplex(&self, flag: &[Simplex]) -> Simplex {
        Simplex::new(flag.iter().map(|s| self.to_vertex[s]))
    }
}

/// One barycentric subdivision with its companion map.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> (ComplexHandle, BdMap) {
    let mut to_vertex = BTreeMap::new();
    let mut from_vertex = BTreeMap::new();
    let mut labels = BTreeMap::new();
    for (i, s) in k.iter().enumerate() {
        let v = Vertex(i as u64);
        to_vertex.insert(s.clone(), v);
        from_vertex.insert(v, s.clone());
        labels.insert(v, bd_label(k, s));
    }
    // maximal simplices of Bd(K) = complete flags ending in maximal simplices
    let mut flags: Vec<Simplex> = Vec::new();
    for top in k.maximal_simplices() {
        let mut prefix: Vec<Vertex> = Vec::new();
        collect_flags(&top, &to_vertex, &mut prefix, &mut flags);
    }
    let bd = SimplicialComplex::with_labels(flags, labels);
    (
        bd,
        BdMap {
            to_vertex,
            from_vertex,
        },
    )
}

fn bd_label(k: &SimplicialComplex, s: &Simplex) -> String {
    let names: Vec<String> = s
        .vertices()
        .iter()
        .map(|v| {
            k.label_of(*v)
                .map(str::to_owned)
                .unwrap_or_else(|| v.to_string())
        })
        .collect();
    format!("b({})", names.join("-"))
}

/// Depth-first enumeration of complete flags below `top` (descending chains
/// hitting every dimension down to 0).
fn collect_flags(
    s: &Simplex,
    to_vertex: &BTreeMap<Simplex, Vertex>,
    prefix: &mut Vec<Vertex>,
    out: &mut Vec<Simplex>,
) {
    prefix.push(to_vertex[s]);
    if s.dim() == 0 {
        out.push(Simplex::new(prefix.iter().copied()));
    } else {
        for f in s.facets() {
            collect_flags(&f, to_vertex, prefix, out);
        }
    }
    prefix.pop();
}

/// The iterated subdivision `Bd^k(K)` together with the per-step companion
/// maps (`levels[i]` subdivides the complex at level `i`).
#[derive(Clone, Debug)]
pub struct SubdivisionTower {
    base: ComplexHandle,
    levels: Vec<(ComplexHandle, BdMap)>,
}

impl SubdivisionTower {
    pub fn build(base: ComplexHandle, k: usize) -> Self {
        let mut levels = Vec::with_capacity(k);
        let mut current = base.clone();
        for _ in 0..k {
            let (next, map) = barycentric_subdivision(&current);
            levels.push((next.clone(), map));
            current = next;
        }
        SubdivisionTower { base, levels }
    }

    pub fn base(&self) -> &ComplexHandle {
        &self.base
    }

    /// The fully subdivided complex `Bd^k(base)`.
    pub fn top(&self) -> &ComplexHandle {
        self.levels.last().map(|(c, _)| c).unwrap_or(&self.base)
    }

    pub fn steps(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[(ComplexHandle, BdMap)] {
        &self.levels
    }
}
