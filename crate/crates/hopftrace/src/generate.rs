//! Seeded generators for randomized verification: complexes, gradient
//! fields, simplicial self-maps, and the worked equivariant fixtures.
//!
//! Everything here is deterministic in the seed, so property sweeps are
//! reproducible bit for bit.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::GroupAction;
use crate::chain_map::{subdivision_chain_map, ChainMap};
use crate::collapse::{circle_witness, gvf_join, sphere_witness_bd};
use crate::complex::{ComplexHandle, SimplicialComplex};
use crate::dvf::DiscreteVectorField;
use crate::error::Result;
use crate::simplex::{Simplex, Vertex};
use crate::simplicial_map::SimplicialMap;
use crate::sphere::SphereWitness;
use crate::subdivision::SubdivisionTower;

/// The crate-wide reproducible RNG.
pub type Seeded = ChaCha8Rng;

pub fn rng(seed: u64) -> Seeded {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random complex of dimension at most `max_dim` with at most
/// `max_simplices` simplices.
pub fn random_complex(rng: &mut Seeded, max_dim: usize, max_simplices: usize) -> ComplexHandle {
    loop {
        let n_vertices = rng.gen_range(4..=10u64);
        let n_candidates = rng.gen_range(3..=(2 * n_vertices as usize));
        let mut maximal = Vec::new();
        for _ in 0..n_candidates {
            let size = rng.gen_range(1..=(max_dim + 1));
            let mut verts: Vec<u64> = (0..n_vertices).collect();
            verts.shuffle(rng);
            maximal.push(verts[..size.min(verts.len())].to_vec());
        }
        let k = SimplicialComplex::from_maximal(&maximal);
        if !k.is_empty() && k.len() <= max_simplices {
            return k;
        }
    }
}

/// A random gradient field by randomized free-face collapse: pair a random
/// free face when one exists, otherwise remove a random top simplex as
/// critical. Removal times strictly decrease along trajectories, so the
/// matching is acyclic by construction (and is re-certified by callers).
pub fn random_gradient_field(rng: &mut Seeded, k: &ComplexHandle) -> DiscreteVectorField {
    let mut remaining: BTreeSet<Simplex> = k.iter().cloned().collect();
    let mut pairs: Vec<(Simplex, Simplex)> = Vec::new();
    let mut critical_vertices: Vec<Simplex> = Vec::new();
    while !remaining.is_empty() {
        let mut free: Vec<(Simplex, Simplex)> = Vec::new();
        for gamma in &remaining {
            let mut cof = k.cofacets(gamma).iter().filter(|c| remaining.contains(*c));
            if let (Some(delta), None) = (cof.next(), cof.next()) {
                free.push((gamma.clone(), delta.clone()));
            }
        }
        if let Some((gamma, delta)) = free.choose(rng) {
            remaining.remove(gamma);
            remaining.remove(delta);
            pairs.push((gamma.clone(), delta.clone()));
        } else {
            let top_dim = remaining.iter().map(|s| s.dim()).max().unwrap();
            let tops: Vec<Simplex> = remaining
                .iter()
                .filter(|s| s.dim() == top_dim)
                .cloned()
                .collect();
            let chosen = tops.choose(rng).unwrap().clone();
            remaining.remove(&chosen);
            if chosen.dim() == 0 {
                critical_vertices.push(chosen);
            }
        }
    }
    // occasionally pair one critical vertex with ∅ to exercise that branch
    if !critical_vertices.is_empty() && rng.gen_bool(0.5) {
        let v = critical_vertices.choose(rng).unwrap().clone();
        pairs.push((Simplex::empty(), v));
    }
    DiscreteVectorField::new(k.clone(), pairs).expect("collapse pairs form a matching")
}

/// A random simplicial self-map: a few attempts at sending vertices to
/// themselves or neighbors, falling back to a constant map.
pub fn random_self_map(rng: &mut Seeded, k: &ComplexHandle) -> SimplicialMap {
    let vertices: Vec<Vertex> = k.vertices().collect();
    for _ in 0..8 {
        let mut vm: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        for &v in &vertices {
            if rng.gen_bool(0.6) {
                vm.insert(v, v);
            } else {
                let nbs: Vec<Vertex> = k
                    .cofacets(&Simplex::vertex(v))
                    .iter()
                    .flat_map(|e| e.vertices().iter().copied())
                    .filter(|&w| w != v)
                    .collect();
                let target = nbs.choose(rng).copied().unwrap_or(v);
                vm.insert(v, target);
            }
        }
        if let Ok(map) = SimplicialMap::new(k.clone(), k.clone(), vm) {
            return map;
        }
    }
    let v = *vertices.choose(rng).expect("complex has a vertex");
    SimplicialMap::constant(k.clone(), k.clone(), v).expect("constant maps are simplicial")
}

/// The chain-map families exercised by the randomized Hopf sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Identity,
    Zero,
    Induced,
    SubdivisionComposed,
}

/// A random endomorphism of `C_#(K)` of the given kind. For
/// `SubdivisionComposed` the complex must be a subdivision top: pass the
/// tower through `subdivision_composed_map` instead.
pub fn random_chain_map(rng: &mut Seeded, k: &ComplexHandle, kind: MapKind) -> Result<ChainMap> {
    match kind {
        MapKind::Identity => Ok(ChainMap::identity(k.clone())),
        MapKind::Zero => Ok(ChainMap::zero(k.clone(), k.clone())),
        MapKind::Induced => ChainMap::induced(&random_self_map(rng, k)),
        MapKind::SubdivisionComposed => {
            unreachable!("subdivision-composed maps are built from a tower")
        }
    }
}

/// The endomorphism `g_# ∘ (last vertex)_#` of `C_#(Bd(K))`.
pub fn subdivision_composed_map(base: &ComplexHandle) -> Result<(ComplexHandle, ChainMap)> {
    let tower = SubdivisionTower::build(base.clone(), 1);
    let (bd, map) = &tower.levels()[0];
    let last = SimplicialMap::last_vertex(bd.clone(), base.clone(), map)?;
    let g = subdivision_chain_map(&tower)?;
    let phi = g.compose(&ChainMap::induced(&last)?)?;
    Ok((bd.clone(), phi))
}

/// Random simplicial maps out of a cone `x*S` into `T`, produced by a
/// mutation walk through the space of valid vertex maps, seeded at a
/// constant map.
pub fn random_cone_maps(
    rng: &mut Seeded,
    cone: &ComplexHandle,
    target: &ComplexHandle,
    samples: usize,
    steps_between: usize,
) -> Vec<SimplicialMap> {
    let cone_vertices: Vec<Vertex> = cone.vertices().collect();
    let target_vertices: Vec<Vertex> = target.vertices().collect();
    let start = *target_vertices.first().expect("target has vertices");
    let mut current: BTreeMap<Vertex, Vertex> = cone_vertices.iter().map(|&v| (v, start)).collect();
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        for _ in 0..steps_between {
            let v = *cone_vertices.choose(rng).unwrap();
            let w = *target_vertices.choose(rng).unwrap();
            let mut candidate = current.clone();
            candidate.insert(v, w);
            if let Ok(m) = SimplicialMap::new(cone.clone(), target.clone(), candidate.clone()) {
                current = candidate;
                let _ = m;
            }
        }
        out.push(
            SimplicialMap::new(cone.clone(), target.clone(), current.clone())
                .expect("walk stays inside valid maps"),
        );
    }
    out
}

/// The octahedron `S^0 * S^0 * S^0` with its join-built witness.
pub fn octahedron_witness() -> Result<SphereWitness> {
    let s0 = zero_sphere_witness()?;
    let (_, _, square) = gvf_join(&s0, &s0)?;
    let (_, _, oct) = gvf_join(&square, &zero_sphere_witness()?)?;
    Ok(oct)
}

/// `S^0` on vertices {0, 1} with the `(∅, {0})` field.
pub fn zero_sphere_witness() -> Result<SphereWitness> {
    let k = SimplicialComplex::from_maximal(&[vec![0], vec![1]]);
    let v = DiscreteVectorField::new(k, [(Simplex::empty(), Simplex::from_ids([0]))])
        .map_err(|e| crate::error::Error::Integrity(format!("zero-sphere field: {e}")))?;
    SphereWitness::new(v)
}

/// An equivariant circle fixture: `f: Bd^k(C_{mp}) -> C_{mp}` given by
/// position mod `mp` along the subdivided circle, with the induced `Z_p`
/// rotation actions.
pub struct EquivariantFixture {
    pub tower: SubdivisionTower,
    pub map: SimplicialMap,
    pub witness: SphereWitness,
    pub source_action: GroupAction,
    pub target_action: GroupAction,
}

/// The worked example: `Bd²(C_6) -> C_6`, `Z_3`-equivariant of degree 4.
pub fn equivariant_mod6_fixture() -> Result<EquivariantFixture> {
    equivariant_circle_fixture(3, 2, 2)
}

/// Builds the position-mod-`mp` map `Bd^k(C_{mp}) -> C_{mp}`. Each
/// subdivision doubles the circle, so the map has degree `2^k`; it is
/// equivariant for the induced rotations exactly when `2^k ≡ 1 (mod p)`,
/// and the construction fails loudly otherwise.
pub fn equivariant_circle_fixture(p: u64, m: u64, k: usize) -> Result<EquivariantFixture> {
    let (w_base, a_base) = crate::action::build_zp_circle(p, m)?;
    let n = m * p;
    let base = w_base.complex().clone();
    let tower = SubdivisionTower::build(base.clone(), k);
    let source_action = a_base.induced_on_tower(&tower)?;

    // locate the Bd^k copy of the original vertex 0 and walk the circle in
    // the direction consistent with the induced rotation, which shifts by
    // m·2^k positions
    let mut v0 = Simplex::from_ids([0]);
    for (_, map) in tower.levels() {
        v0 = Simplex::vertex(map.vertex_of(&v0).expect("barycenter exists"));
    }
    let v0 = v0.vertices()[0];
    let top = tower.top().clone();
    let shift = (m as usize) << k;
    let mut order = None;
    for towards in neighbor_vertices(&top, v0) {
        let walk = crate::complex::circle_order(&top, v0, Some(towards))?;
        if source_action.apply_vertex(1, walk[0]) == walk[shift % walk.len()] {
            order = Some(walk);
            break;
        }
    }
    let order = order.ok_or_else(|| {
        crate::error::Error::integrity("induced rotation is not a shift along either walk")
    })?;
    let vertex_map: BTreeMap<Vertex, Vertex> = order
        .iter()
        .enumerate()
        .map(|(i, &w)| (w, Vertex(i as u64 % n)))
        .collect();
    let map = SimplicialMap::new(top, base, vertex_map)?;
    if let Err(fail) = crate::action::verify_equivariance(&map, &source_action, &a_base)? {
        return Err(crate::error::Error::Domain(format!(
            "position-mod map is not equivariant for p = {p}, k = {k} \
             (needs 2^k ≡ 1 mod p): fails at vertex {}",
            fail.vertex
        )));
    }

    // transfer the sphere witness across each subdivision
    let mut witness = w_base;
    for _ in 0..k {
        let (_, _, next) = sphere_witness_bd(&witness, 0)?;
        witness = next;
    }

    Ok(EquivariantFixture {
        tower,
        map,
        witness,
        source_action,
        target_action: a_base,
    })
}

fn neighbor_vertices(k: &ComplexHandle, v: Vertex) -> Vec<Vertex> {
    k.cofacets(&Simplex::vertex(v))
        .iter()
        .flat_map(|e| e.vertices().iter().copied())
        .filter(|&w| w != v)
        .collect()
}

/// The deterministic sphere fixtures used across the verification suites.
pub fn sphere_fixture_set() -> Result<Vec<(&'static str, SphereWitness)>> {
    let c6 = circle_witness(6)?;
    let (_, _, three_sphere) = gvf_join(&c6, &circle_witness(6)?)?;
    Ok(vec![
        ("triangle circle C_3", circle_witness(3)?),
        ("hexagon circle C_6", circle_witness(6)?),
        (
            "boundary of the tetrahedron",
            crate::collapse::skeleton_sphere_witness(3)?,
        ),
        (
            "boundary of the 4-simplex",
            crate::collapse::skeleton_sphere_witness(4)?,
        ),
        ("octahedron join", octahedron_witness()?),
        ("join-built 3-sphere C_6 * C_6", three_sphere),
    ])
}
