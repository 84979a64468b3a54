//! Free `Z_p` actions on complexes and the equivariant degree checks.
//!
//! An action is stored as its generator, a vertex permutation inducing a
//! simplicial automorphism of order exactly `p`. Freeness is simplex-level:
//! no non-identity power fixes any simplex setwise, which is what the
//! orbit-counting divisibility arguments need.

use std::collections::BTreeMap;

use crate::complex::{ComplexHandle, JoinEmbedding};
use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};
use crate::simplicial_map::SimplicialMap;
use crate::sphere::{
    combinatorial_degree, degree_oracle_preimage, orientation_from_witness,
    transported_orientation, SphereWitness,
};
use crate::subdivision::{BdMap, SubdivisionTower};

/// A free simplicial `Z_p` action, `p` prime.
#[derive(Clone, Debug)]
pub struct GroupAction {
    complex: ComplexHandle,
    p: u64,
    /// Vertex maps of `g^0 = id, g^1, …, g^{p-1}`.
    powers: Vec<BTreeMap<Vertex, Vertex>>,
}

impl GroupAction {
    /// Validates: `p` prime, the generator is a simplicial automorphism,
    /// `generator^p = id` with order exactly `p`, and no non-identity power
    /// fixes a simplex setwise.
    pub fn new(
        complex: ComplexHandle,
        p: u64,
        generator: BTreeMap<Vertex, Vertex>,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        // bijective vertex map covering exactly the complex's vertices
        let mut seen = std::collections::BTreeSet::new();
        for v in complex.vertices() {
            let w = generator
                .get(&v)
                .ok_or_else(|| Error::Domain(format!("generator misses vertex {v}")))?;
            if !complex.has_vertex(*w) {
                return Err(Error::Domain(format!(
                    "generator image {w} is not a vertex"
                )));
            }
            if !seen.insert(*w) {
                return Err(Error::Domain(format!("generator repeats image {w}")));
            }
        }
        if generator.len() != complex.vertex_count() {
            return Err(Error::domain(
                "generator domain does not match the vertex set",
            ));
        }
        // simplicial: every simplex maps to a simplex (a bijective simplicial
        // vertex map of a finite complex is an automorphism)
        for s in complex.iter() {
            let image = Simplex::new(s.vertices().iter().map(|v| generator[v]));
            if image.dim() != s.dim() || !complex.contains(&image) {
                return Err(Error::Domain(format!(
                    "generator is not simplicial: image {image} of {s} is not a simplex"
                )));
            }
        }
        // powers and the order check
        let identity: BTreeMap<Vertex, Vertex> = complex.vertices().map(|v| (v, v)).collect();
        let mut powers = vec![identity.clone()];
        let mut current = generator.clone();
        for _ in 1..p {
            powers.push(current.clone());
            current = compose_vertex_maps(&current, &generator);
        }
        if current != identity {
            return Err(Error::domain("generator does not have order dividing p"));
        }
        if p > 1 && powers[1] == identity {
            return Err(Error::domain(
                "generator is the identity; order must be exactly p",
            ));
        }
        let action = GroupAction { complex, p, powers };
        if let Some((t, s)) = action.fixed_simplex() {
            return Err(Error::Domain(format!(
                "action is not free: power {t} fixes {s} setwise"
            )));
        }
        Ok(action)
    }

    pub fn complex(&self) -> &ComplexHandle {
        &self.complex
    }

    pub fn order(&self) -> u64 {
        self.p
    }

    pub fn generator(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.powers[1]
    }

    /// The action of `g^t` on a vertex.
    pub fn apply_vertex(&self, t: u64, v: Vertex) -> Vertex {
        self.powers[(t % self.p) as usize][&v]
    }

    /// The action of `g^t` on a simplex (setwise, re-sorted).
    pub fn apply_simplex(&self, t: u64, s: &Simplex) -> Simplex {
        let map = &self.powers[(t % self.p) as usize];
        Simplex::new(s.vertices().iter().map(|v| map[v]))
    }

    /// The generator as a simplicial self-map.
    pub fn generator_map(&self) -> SimplicialMap {
        SimplicialMap::new(
            self.complex.clone(),
            self.complex.clone(),
            self.generator().clone(),
        )
        .expect("validated generator is simplicial")
    }

    /// First (power, simplex) fixed setwise by a non-identity power, if any.
    fn fixed_simplex(&self) -> Option<(u64, Simplex)> {
        for t in 1..self.p {
            for s in self.complex.iter() {
                if self.apply_simplex(t, s) == *s {
                    return Some((t, s.clone()));
                }
            }
        }
        None
    }

    /// The diagonal action on a join `K1 * K2` of two actions of the same
    /// order; free when either factor is free.
    pub fn join(
        &self,
        other: &GroupAction,
        joined: &ComplexHandle,
        emb: &JoinEmbedding,
    ) -> Result<GroupAction> {
        if self.p != other.p {
            return Err(Error::domain("join of actions requires equal group order"));
        }
        let mut generator = BTreeMap::new();
        for (v, w) in &emb.left {
            generator.insert(*w, emb.left[&self.generator()[v]]);
        }
        for (v, w) in &emb.right {
            generator.insert(*w, emb.right[&other.generator()[v]]);
        }
        GroupAction::new(joined.clone(), self.p, generator)
    }

    /// The induced action on `Bd(K)`: each barycenter `v_σ` goes to the
    /// barycenter of `g·σ`. Order and freeness carry over.
    pub fn induced_on_bd(&self, bd: &ComplexHandle, map: &BdMap) -> Result<GroupAction> {
        let mut generator = BTreeMap::new();
        for v in bd.vertices() {
            let sigma = map
                .simplex_of(v)
                .ok_or_else(|| Error::integrity("companion map misses a barycenter vertex"))?;
            let image = self.apply_simplex(1, sigma);
            let w = map
                .vertex_of(&image)
                .ok_or_else(|| Error::integrity("image simplex has no barycenter"))?;
            generator.insert(v, w);
        }
        GroupAction::new(bd.clone(), self.p, generator)
    }

    /// The induced action on the top of a subdivision tower.
    pub fn induced_on_tower(&self, tower: &SubdivisionTower) -> Result<GroupAction> {
        if self.complex.as_ref() != tower.base().as_ref() {
            return Err(Error::domain(
                "action lives on a different complex than the tower base",
            ));
        }
        let mut action = self.clone();
        for (bd, map) in tower.levels() {
            action = action.induced_on_bd(bd, map)?;
        }
        Ok(action)
    }
}

fn compose_vertex_maps(
    outer: &BTreeMap<Vertex, Vertex>,
    inner: &BTreeMap<Vertex, Vertex>,
) -> BTreeMap<Vertex, Vertex> {
    inner.iter().map(|(&v, &w)| (v, outer[&w])).collect()
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A failed equivariance check: the vertex where `f(g·v) ≠ g·f(v)`.
#[derive(Clone, Debug)]
pub struct EquivarianceFailure {
    pub vertex: Vertex,
    pub lhs: Vertex,
    pub rhs: Vertex,
}

/// Checks `f(g·v) = g·f(v)` on every vertex for the generators; this
/// suffices by the composition law.
pub fn verify_equivariance(
    f: &SimplicialMap,
    src: &GroupAction,
    tgt: &GroupAction,
) -> Result<std::result::Result<(), EquivarianceFailure>> {
    if src.order() != tgt.order() {
        return Err(Error::domain(
            "equivariance requires actions of the same order",
        ));
    }
    if f.source().as_ref() != src.complex().as_ref()
        || f.target().as_ref() != tgt.complex().as_ref()
    {
        return Err(Error::domain(
            "actions do not live on the map's source and target",
        ));
    }
    for v in f.source().vertices() {
        let lhs = f.apply_vertex(src.apply_vertex(1, v));
        let rhs = tgt.apply_vertex(1, f.apply_vertex(v));
        if lhs != rhs {
            return Ok(Err(EquivarianceFailure {
                vertex: v,
                lhs,
                rhs,
            }));
        }
    }
    Ok(Ok(()))
}

/// `true` iff `p = 2` or the sphere dimension is odd; free `Z_p` spheres
/// with `p > 2` must be odd-dimensional.
pub fn odd_dimension_check(w: &SphereWitness, a: &GroupAction) -> bool {
    a.order() == 2 || w.dim() % 2 == 1
}

/// The standard free `Z_p` circle: `C_{mp}` with generator `i ↦ i + m`,
/// carrying the two-critical circle field.
pub fn build_zp_circle(p: u64, m: u64) -> Result<(SphereWitness, GroupAction)> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let n = m.checked_mul(p).filter(|&n| n >= 3).ok_or_else(|| {
        Error::Domain(format!(
            "need m*p >= 3 vertices, got {}",
            m.saturating_mul(p)
        ))
    })?;
    let witness = crate::collapse::circle_witness(n)?;
    let generator = (0..n).map(|i| (Vertex(i), Vertex((i + m) % n))).collect();
    let action = GroupAction::new(witness.complex().clone(), p, generator)?;
    Ok((witness, action))
}

/// Everything `verify_degree_mod_p` measures, kept exact.
#[derive(Clone, Debug)]
pub struct DegreeModPReport {
    pub degree: i64,
    pub oracle_degree: i64,
    pub p: u64,
    pub residue: i64,
    pub pass: bool,
}

/// The full degree theorem check for an equivariant `f: Bd^k(S) -> S`:
/// verifies equivariance under the induced source action, computes the
/// combinatorial degree and the signed-preimage oracle degree, and tests
/// `deg(f) ≡ 1 (mod p)`. Preconditions fail loudly with the broken
/// hypothesis named.
pub fn verify_degree_mod_p(
    f: &SimplicialMap,
    w_bd: &SphereWitness,
    tower: &SubdivisionTower,
    src_action: &GroupAction,
    tgt_action: &GroupAction,
) -> Result<DegreeModPReport> {
    if let Err(fail) = verify_equivariance(f, src_action, tgt_action)? {
        return Err(Error::Domain(format!(
            "hypothesis failed: f is not equivariant at vertex {} (f(g·v) = {}, g·f(v) = {})",
            fail.vertex, fail.lhs, fail.rhs
        )));
    }
    if !odd_dimension_check(w_bd, src_action) {
        return Err(Error::Domain(format!(
            "hypothesis failed: free Z_{} sphere of even dimension {}",
            src_action.order(),
            w_bd.dim()
        )));
    }
    let degree = combinatorial_degree(f, w_bd, tower)?;
    let xi = orientation_from_witness(w_bd)?;
    let eta = transported_orientation(tower, &xi)?;
    let oracle_degree = degree_oracle_preimage(f, &xi, &eta)?;
    if oracle_degree != degree {
        return Err(Error::Integrity(format!(
            "oracle disagreement: chain-map degree {degree} vs signed preimage count {oracle_degree}"
        )));
    }
    let p = src_action.order();
    let residue = degree.rem_euclid(p as i64);
    Ok(DegreeModPReport {
        degree,
        oracle_degree,
        p,
        residue,
        pass: residue == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::cycle_complex;

    #[test]
    fn zp_circles_are_free() {
        for (p, m) in [(3, 2), (2, 2), (3, 1), (5, 1)] {
            let (w, a) = build_zp_circle(p, m).unwrap();
            assert_eq!(a.order(), p);
            assert_eq!(w.complex().vertex_count() as u64, p * m);
        }
        assert!(build_zp_circle(4, 2).is_err());
        assert!(build_zp_circle(2, 1).is_err());
    }

    #[test]
    fn non_free_action_is_rejected() {
        // the reflection i -> -i on C_4 fixes vertices 0 and 2
        let c4 = cycle_complex(4).unwrap();
        let gen: BTreeMap<Vertex, Vertex> =
            (0..4).map(|i| (Vertex(i), Vertex((4 - i) % 4))).collect();
        let err = GroupAction::new(c4, 2, gen).unwrap_err();
        assert!(err.to_string().contains("not free"), "{err}");
    }

    #[test]
    fn induced_action_on_bd_preserves_order_and_freeness() {
        let (w, a) = build_zp_circle(3, 2).unwrap();
        let (bd, map) = crate::subdivision::barycentric_subdivision(w.complex());
        let induced = a.induced_on_bd(&bd, &map).unwrap();
        assert_eq!(induced.order(), 3);
        // C_12 "rotation by 4": all orbits have size 3
        let mut seen = std::collections::BTreeSet::new();
        for v in bd.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut orbit = vec![v];
            let mut cur = v;
            loop {
                cur = induced.apply_vertex(1, cur);
                if cur == v {
                    break;
                }
                orbit.push(cur);
            }
            assert_eq!(orbit.len(), 3);
            seen.extend(orbit);
        }
    }

    #[test]
    fn identity_action_join_is_free_z2_on_square() {
        let s0 = crate::complex::SimplicialComplex::from_maximal(&[vec![0], vec![1]]);
        let swap: BTreeMap<Vertex, Vertex> = [(Vertex(0), Vertex(1)), (Vertex(1), Vertex(0))]
            .into_iter()
            .collect();
        let a = GroupAction::new(s0.clone(), 2, swap.clone()).unwrap();
        let (joined, emb) = crate::complex::join(&s0, &s0);
        let b = GroupAction::new(s0, 2, swap).unwrap();
        let diag = a.join(&b, &joined, &emb).unwrap();
        assert_eq!(diag.order(), 2);
    }

    #[test]
    fn equivariance_of_mod_reduction() {
        // C_12 -> C_6, i mod 6 intertwines rotation by 8 with rotation by 2
        // (8 ≡ 2 mod 6); rotation by 4 does not (4 ≢ 2 mod 6)
        let c12 = cycle_complex(12).unwrap();
        let c6 = cycle_complex(6).unwrap();
        let f = SimplicialMap::new(
            c12.clone(),
            c6.clone(),
            (0..12).map(|i| (Vertex(i), Vertex(i % 6))).collect(),
        )
        .unwrap();
        let a6 = GroupAction::new(
            c6.clone(),
            3,
            (0..6).map(|i| (Vertex(i), Vertex((i + 2) % 6))).collect(),
        )
        .unwrap();
        let by8 = GroupAction::new(
            c12.clone(),
            3,
            (0..12).map(|i| (Vertex(i), Vertex((i + 8) % 12))).collect(),
        )
        .unwrap();
        assert!(verify_equivariance(&f, &by8, &a6).unwrap().is_ok());

        let by4 = GroupAction::new(
            c12,
            3,
            (0..12).map(|i| (Vertex(i), Vertex((i + 4) % 12))).collect(),
        )
        .unwrap();
        let failure = verify_equivariance(&f, &by4, &a6).unwrap().unwrap_err();
        assert_eq!(failure.lhs, Vertex(4));
        assert_eq!(failure.rhs, Vertex(2));
    }

    #[test]
    fn halving_map_is_equivariant_for_rotations_4_and_2() {
        // the subdivision-collapse style map C_12 -> C_6, i ↦ ⌊i/2⌋
        let c12 = cycle_complex(12).unwrap();
        let c6 = cycle_complex(6).unwrap();
        let f = SimplicialMap::new(
            c12.clone(),
            c6.clone(),
            (0..12).map(|i| (Vertex(i), Vertex(i / 2))).collect(),
        )
        .unwrap();
        let by4 = GroupAction::new(
            c12,
            3,
            (0..12).map(|i| (Vertex(i), Vertex((i + 4) % 12))).collect(),
        )
        .unwrap();
        let a6 = GroupAction::new(
            c6,
            3,
            (0..6).map(|i| (Vertex(i), Vertex((i + 2) % 6))).collect(),
        )
        .unwrap();
        assert!(verify_equivariance(&f, &by4, &a6).unwrap().is_ok());
    }

    #[test]
    fn identity_power_acts_trivially() {
        let (w, a) = build_zp_circle(3, 2).unwrap();
        for v in w.complex().vertices() {
            assert_eq!(a.apply_vertex(0, v), v);
        }
        for sigma in w.complex().iter() {
            assert_eq!(a.apply_simplex(0, sigma), *sigma);
            assert_eq!(a.apply_simplex(3, sigma), *sigma);
        }
    }

    #[test]
    fn odd_dimension_gate() {
        let (w, a) = build_zp_circle(3, 2).unwrap();
        assert!(odd_dimension_check(&w, &a));
        let (w2, a2) = build_zp_circle(2, 2).unwrap();
        assert!(odd_dimension_check(&w2, &a2));
    }
}
