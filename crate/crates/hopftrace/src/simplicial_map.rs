//! Simplicial maps between complexes.

use std::collections::BTreeMap;

use crate::complex::ComplexHandle;
use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};
use crate::subdivision::BdMap;

/// A vertex map carrying every simplex of the source to a simplex of the
/// target.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: ComplexHandle,
    target: ComplexHandle,
    vertex_map: BTreeMap<Vertex, Vertex>,
}

impl SimplicialMap {
    /// Validates totality on vertices and that simplex images are simplices
    /// (checking maximal simplices suffices: images of faces are faces).
    pub fn new(
        source: ComplexHandle,
        target: ComplexHandle,
        vertex_map: BTreeMap<Vertex, Vertex>,
    ) -> Result<Self> {
        for v in source.vertices() {
            let w = vertex_map
                .get(&v)
                .ok_or_else(|| Error::Domain(format!("vertex {v} has no image")))?;
            if !target.has_vertex(*w) {
                return Err(Error::Domain(format!(
                    "image vertex {w} is not in the target"
                )));
            }
        }
        let map = SimplicialMap {
            source,
            target,
            vertex_map,
        };
        for top in map.source.maximal_simplices() {
            let image = map.apply_simplex(&top);
            if !map.target.contains(&image) {
                return Err(Error::Domain(format!(
                    "map is not simplicial: image {image} of {top} is not a simplex of the target"
                )));
            }
        }
        Ok(map)
    }

    pub fn identity(k: ComplexHandle) -> Self {
        let vertex_map = k.vertices().map(|v| (v, v)).collect();
        SimplicialMap {
            source: k.clone(),
            target: k,
            vertex_map,
        }
    }

    /// The constant map onto one target vertex.
    pub fn constant(source: ComplexHandle, target: ComplexHandle, v: Vertex) -> Result<Self> {
        if !target.has_vertex(v) {
            return Err(Error::Domain(format!(
                "constant image {v} is not a target vertex"
            )));
        }
        let vertex_map = source.vertices().map(|u| (u, v)).collect();
        Ok(SimplicialMap {
            source,
            target,
            vertex_map,
        })
    }

    /// The "last vertex" map `Bd(K) -> K`, sending each barycenter `v_σ` to
    /// the largest vertex of `σ`. Always simplicial: the image of a flag is
    /// a subset of its largest member.
    pub fn last_vertex(bd: ComplexHandle, base: ComplexHandle, map: &BdMap) -> Result<Self> {
        let mut vertex_map = BTreeMap::new();
        for v in bd.vertices() {
            let sigma = map
                .simplex_of(v)
                .ok_or_else(|| Error::domain("barycenter vertex missing from companion map"))?;
            let last = *sigma.vertices().last().expect("non-empty simplex");
            vertex_map.insert(v, last);
        }
        SimplicialMap::new(bd, base, vertex_map)
    }

    pub fn source(&self) -> &ComplexHandle {
        &self.source
    }

    pub fn target(&self) -> &ComplexHandle {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.vertex_map
    }

    pub fn apply_vertex(&self, v: Vertex) -> Vertex {
        self.vertex_map[&v]
    }

    /// The image simplex `f(σ)` (as a set; may drop dimension).
    pub fn apply_simplex(&self, sigma: &Simplex) -> Simplex {
        Simplex::new(sigma.vertices().iter().map(|v| self.vertex_map[v]))
    }

    /// Signed image: `(sign, f(σ))` when `f` preserves the dimension of `σ`,
    /// `None` when the image degenerates. The sign is the parity of the
    /// permutation sorting the image vertex list.
    pub fn signed_image(&self, sigma: &Simplex) -> Option<(i64, Simplex)> {
        let image: Vec<Vertex> = sigma
            .vertices()
            .iter()
            .map(|v| self.vertex_map[v])
            .collect();
        let sorted = Simplex::new(image.iter().copied());
        if sorted.dim() != sigma.dim() {
            return None;
        }
        let mut inversions = 0usize;
        for i in 0..image.len() {
            for j in i + 1..image.len() {
                if image[i] > image[j] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, sorted))
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if other.target.as_ref() != self.source.as_ref() {
            return Err(Error::domain(
                "composition mismatch: target of inner != source of outer",
            ));
        }
        let vertex_map = other
            .vertex_map
            .iter()
            .map(|(&v, &w)| (v, self.vertex_map[&w]))
            .collect();
        SimplicialMap::new(other.source.clone(), self.target.clone(), vertex_map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cycle_complex, SimplicialComplex};
    use crate::subdivision::barycentric_subdivision;

    #[test]
    fn edge_collapse_is_simplicial_where_possible() {
        let k = SimplicialComplex::from_maximal(&[vec![0, 1]]);
        let m = SimplicialMap::new(
            k.clone(),
            k.clone(),
            [(Vertex(0), Vertex(0)), (Vertex(1), Vertex(0))]
                .into_iter()
                .collect(),
        )
        .unwrap();
        assert_eq!(
            m.apply_simplex(&Simplex::from_ids([0, 1])),
            Simplex::from_ids([0])
        );
        assert!(m.signed_image(&Simplex::from_ids([0, 1])).is_none());
    }

    #[test]
    fn non_simplicial_map_is_rejected() {
        let c4 = cycle_complex(4).unwrap();
        // 0 -> 0, 1 -> 2 would send edge [0,1] to the diagonal [0,2]
        let m = SimplicialMap::new(
            c4.clone(),
            c4,
            [
                (Vertex(0), Vertex(0)),
                (Vertex(1), Vertex(2)),
                (Vertex(2), Vertex(2)),
                (Vertex(3), Vertex(3)),
            ]
            .into_iter()
            .collect(),
        );
        assert!(m.is_err());
    }

    #[test]
    fn signed_image_tracks_sort_parity() {
        let k = SimplicialComplex::from_maximal(&[vec![0, 1], vec![3, 5]]);
        let m = SimplicialMap::new(
            k.clone(),
            k,
            [
                (Vertex(0), Vertex(5)),
                (Vertex(1), Vertex(3)),
                (Vertex(3), Vertex(3)),
                (Vertex(5), Vertex(5)),
            ]
            .into_iter()
            .collect(),
        )
        .unwrap();
        let (sign, image) = m.signed_image(&Simplex::from_ids([0, 1])).unwrap();
        assert_eq!(image, Simplex::from_ids([3, 5]));
        assert_eq!(sign, -1);
    }

    #[test]
    fn last_vertex_map_is_simplicial() {
        let k = SimplicialComplex::from_maximal(&[vec![0, 1, 2], vec![2, 3]]);
        let (bd, map) = barycentric_subdivision(&k);
        let f = SimplicialMap::last_vertex(bd, k, &map).unwrap();
        // barycenter of [0,1,2] goes to 2
        let v = map.vertex_of(&Simplex::from_ids([0, 1, 2])).unwrap();
        assert_eq!(f.apply_vertex(v), Vertex(2));
    }
}
